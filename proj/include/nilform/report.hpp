#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilform {

// Result of a verification run. Serializes to the stable JSON shape
// {command, params, seed, trials, failures:[{case, lhs, rhs}]} with sorted
// keys, so reports are byte-for-byte reproducible.
struct CheckReport {
    std::string command;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;
    int trials = 0;

    struct Failure {
        std::string what; // which identity, including the trial tag
        std::string lhs;
        std::string rhs;
    };
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }

    void record(bool ok, const std::string& what, const std::string& lhs,
                const std::string& rhs) {
        if (!ok)
            failures.push_back({what, lhs, rhs});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["params"] = params;
        j["seed"] = seed;
        j["trials"] = trials;
        j["failures"] = nlohmann::json::array();
        for (const auto& f : failures)
            j["failures"].push_back({{"case", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        return j;
    }

    std::string to_text() const {
        std::string out = command + ": " + (pass() ? "all checks passed" : "FAILED") +
                          " (trials=" + std::to_string(trials) + ")\n";
        for (const auto& f : failures)
            out += "  fail " + f.what + "\n    lhs = " + f.lhs + "\n    rhs = " + f.rhs + "\n";
        return out;
    }
};

} // namespace nilform
