// Acceptance suite: every criterion is an exact check at desk scale; one
// PASS/FAIL line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nilform/nilform.hpp>

using namespace nilform;

namespace {

int failures = 0;

void line(int index, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass)
        ++failures;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NILFORM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        r.exit_code = -1;
        return r;
    }
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. the de Rham theorem identities, exact, >= 200 cases per ambient dimension
void criterion_derham() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    int cases = 0;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        const CheckReport rep = theorem_check(n, std::min(n, 3), 3, 200, 20260807 + n);
        cases += rep.trials;
        if (!rep.pass()) {
            pass = false;
            detail = rep.failures.front().what;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0)
        pass = false;
    line(1, "de Rham theorem suite: phi.psi = id, normalization, phi(d0 psi) = d, d0^2 = 0",
         pass, std::to_string(cases) + " cases, " + std::to_string(dt) + " s" +
                   (detail.empty() ? "" : ", first failure: " + detail));
}

// 2. equality of ideals with re-verified certificates
void criterion_ideal_equality() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        const IdealEqualityReport rep = ideal_equality_check(m, n, 2);
        bool ok = rep.equal;
        for (const auto& im : rep.lhs_in_rhs)
            ok = ok && im.member && im.certificate.verified;
        for (const auto& im : rep.rhs_in_lhs)
            ok = ok && im.member && im.certificate.verified;
        pass = pass && ok;
    }
    const double dt = seconds_since(t0);
    if (dt >= 30.0)
        pass = false;
    line(2, "equality of ideals (pairwise-difference vs antisymmetry), certificates re-verified",
         pass, std::to_string(dt) + " s");
}

// 3. normal_form(p) = 0 <=> membership, on >= 500 random polynomials
void criterion_rewriting_oracle() {
    bool pass = true;
    int member_count = 0;
    const int total = 520;
    std::string detail;
    for (int t = 0; t < total && pass; ++t) {
        Rng rng(derive_seed(314159, static_cast<std::uint64_t>(t)));
        const int n = 1 + t % 3;
        const int m = 1 + (t / 3) % 3;
        const auto pres = generators(LocusKind::Rbracket, Coords::Difference, n, m);
        Poly p = rng.poly(rng.level_vars(n, m), 4, 6);
        if (t % 2 == 0 && !pres.generators.empty())
            p = rng.poly(rng.level_vars(n, m), 2, 3) *
                pres.generators[static_cast<std::size_t>(t) % pres.generators.size()];
        const bool nf_zero = normal_form(p, n, m).is_zero();
        const auto im = ideal_member(p, pres, std::max(0, p.degree()));
        if (im.member)
            ++member_count;
        if (nf_zero != im.member) {
            pass = false;
            detail = "disagreement at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                     " p=" + to_string(p);
        }
    }
    line(3, "rewriting normal form agrees with the linear-algebra membership oracle", pass,
         std::to_string(total) + " polynomials, " + std::to_string(member_count) + " members" +
             (detail.empty() ? "" : ", " + detail));
}

// 4. cosimplicial functoriality and ideal preservation up to level 4
void criterion_cosimplicial() {
    bool pass = true;
    std::string detail;
    int pair_cases = 0;
    for (int n = 1; n <= 3; ++n) {
        const int trials = n == 2 ? 200 : 60;
        const CheckReport rep = check_cosimplicial_identities(n, 4, 2, trials, 424200 + n);
        pair_cases += rep.trials;
        if (!rep.pass()) {
            pass = false;
            detail = rep.failures.front().what;
        }
    }
    line(4, "cosimplicial functoriality on random composable pairs; ideal preservation, level <= 4",
         pass, std::to_string(pair_cases) + " composable-pair trials" +
                   (detail.empty() ? "" : ", first failure: " + detail));
}

// 5. kernel-size certification by exact rank computation
void criterion_kernel_oracle() {
    bool pass = true;
    std::string detail;
    for (auto [n, m, deg] : {std::tuple{1, 1, 2}, {2, 1, 1}, {2, 2, 1}}) {
        const KernelOracleReport rep = kernel_dimension_oracle(n, m, deg);
        if (!rep.pass) {
            pass = false;
            detail = "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(deg) +
                     "): span=" + std::to_string(rep.coface_span_dim) +
                     " ker=" + std::to_string(rep.kernel_dim) +
                     " rank=" + std::to_string(rep.phi_rank) +
                     " expected=" + std::to_string(rep.expected_phi_rank);
        }
    }
    line(5, "coface-image span = ker(phi) and rank(phi) = C(n,m) x base monomial count", pass,
         detail);
}

// 6. the literal 0-th coface table agrees with the geometric map after phi
void criterion_literal_coface() {
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= 3 && pass; ++n)
        for (int m = 0; m <= 3 && pass; ++m)
            for (int t = 0; t < 12 && pass; ++t) {
                Rng rng(derive_seed(606060, static_cast<std::uint64_t>(n * 100 + m * 10 + t)));
                const InfElement e = rng.inf_element(n, m, 2);
                const DForm via_literal =
                    phi(normal_form(literal_coface0(e.representative(), n, m), n, m + 1));
                const DForm via_geometric = phi(inf_map(coface(0, m), e));
                if (!(via_literal == via_geometric)) {
                    pass = false;
                    detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
    line(6, "literal d0 generator table composed with phi equals phi after the geometric coface",
         pass, detail);
}

// 7. Taylor/Hadamard reconstruction on >= 200 random instances
void criterion_taylor() {
    bool pass = true;
    const int total = 220;
    std::string detail;
    for (int t = 0; t < total && pass; ++t) {
        Rng rng(derive_seed(777777, static_cast<std::uint64_t>(t)));
        const int n = rng.uniform(1, 3);
        const Poly f = rng.poly(rng.base_vars(n), 4, 6);
        std::map<Var, Rational> point;
        for (int j = 1; j <= n; ++j)
            point.emplace(base_var(j), rng.rational());
        const int order = rng.uniform(0, 4);
        const TaylorSplit split = taylor_split(f, point, order);
        if (!(taylor_reconstruct(split, point) == f)) {
            pass = false;
            detail = "f=" + to_string(f) + " order=" + std::to_string(order);
        }
    }
    line(7, "Taylor split reconstruction identity, random points and orders <= 4", pass,
         std::to_string(total) + " splits" + (detail.empty() ? "" : ", " + detail));
}

// 8. module suite: chain rule, Eq-action vs ring law, roundtrips, derivations
void criterion_modules() {
    const CheckReport rep = check_modules(200, 888888);
    line(8, "square-zero module suite: chain rule, product law, roundtrips, derivations",
         rep.pass(),
         rep.pass() ? std::to_string(rep.trials) + " trials"
                    : rep.failures.front().what);
}

// 9. CLI contract: golden files per subcommand, round-trip fuzz, exit codes
void criterion_cli() {
    bool pass = true;
    std::string detail;

    // golden transcripts (text and JSON per subcommand)
    std::ifstream manifest(std::string(GOLDEN_DIR) + "/manifest.txt");
    if (!manifest) {
        line(9, "CLI contract", false, "missing golden manifest");
        return;
    }
    std::string name, args;
    int golden_count = 0;
    while (std::getline(manifest, name, '\t') && std::getline(manifest, args)) {
        std::ifstream golden(std::string(GOLDEN_DIR) + "/" + name);
        std::stringstream expected;
        expected << golden.rdbuf();
        const RunResult got = run_cli(args);
        ++golden_count;
        if (got.exit_code != 0 || got.out != expected.str()) {
            pass = false;
            detail = "golden mismatch: " + name;
            break;
        }
    }
    if (golden_count == 0) {
        pass = false;
        detail = "empty golden manifest";
    }

    // parse/print round-trip fuzz
    int fuzz = 0;
    for (int t = 0; t < 1100 && pass; ++t) {
        Rng rng(derive_seed(991199, static_cast<std::uint64_t>(t)));
        const int n = rng.uniform(1, 3), m = rng.uniform(0, 3);
        if (t % 3 == 0) {
            const DForm w = random_dform(rng, n, std::min(m, n), 3);
            if (!(parse_form(to_string(w), n).form == w)) {
                pass = false;
                detail = "form round trip: " + to_string(w);
            }
        } else {
            const Poly p = rng.poly(rng.level_vars(n, m), 4, 6);
            if (!(parse_poly(to_string(p), n, m, Coords::Difference) == p)) {
                pass = false;
                detail = "poly round trip: " + to_string(p);
            }
        }
        ++fuzz;
    }

    // exit-code matrix
    const std::vector<std::pair<std::string, int>> matrix = {
        {"reduce --n 2 --m 2 \"y1_2*y2_1\"", 0},
        {"check derham --n 1 --m 1 --deg 2 --trials 5 --seed 1", 0},
        {"ideal member --n 2 --m 2 \"y1_1*y2_2 + y1_2*y2_1\"", 0},
        {"ideal member --n 2 --m 2 \"y1_1\"", 1},
        {"reduce --n 1 \"x1 + + 2\"", 2},
        {"reduce --n 1 \"x9\"", 2},
        {"frobnicate", 2},
        {"reduce", 2},
    };
    for (const auto& [args2, want] : matrix) {
        if (!pass)
            break;
        const RunResult got = run_cli(args2);
        if (got.exit_code != want) {
            pass = false;
            detail = "exit code for '" + args2 + "': got " + std::to_string(got.exit_code) +
                     ", want " + std::to_string(want);
        }
    }

    line(9, "CLI contract: golden transcripts, 1100-case round-trip fuzz, exit-code matrix", pass,
         detail.empty() ? std::to_string(golden_count) + " goldens, " + std::to_string(fuzz) +
                              " fuzz cases"
                        : detail);
}

} // namespace

int main() {
    criterion_derham();
    criterion_ideal_equality();
    criterion_rewriting_oracle();
    criterion_cosimplicial();
    criterion_kernel_oracle();
    criterion_literal_coface();
    criterion_taylor();
    criterion_modules();
    criterion_cli();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
