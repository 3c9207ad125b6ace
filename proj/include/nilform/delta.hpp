#pragma once

#include <string>
#include <vector>

#include "nilform/error.hpp"

namespace nilform {

// A monotone map [m] -> [m'] in the simplex category, stored by its value
// table. Vertex slots are 0-based here; the Vertex variables are 1-based
// and the shift is confined to inf_map.
struct DeltaMap {
    int target = 0;
    std::vector<int> values; // values[k] = theta(k), size m+1

    int source() const { return static_cast<int>(values.size()) - 1; }

    friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};

inline DeltaMap make_delta(std::vector<int> values, int target) {
    if (values.empty())
        throw error("delta map needs at least one value");
    int prev = -1;
    for (int v : values) {
        if (v < prev)
            throw error("delta map values must be monotone non-decreasing");
        if (v < 0 || v > target)
            throw error("delta map value out of range");
        prev = v;
    }
    return DeltaMap{target, std::move(values)};
}

inline DeltaMap delta_identity(int m) {
    std::vector<int> values(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        values[static_cast<std::size_t>(k)] = k;
    return DeltaMap{m, std::move(values)};
}

// Composite "first theta, then theta2": k -> theta2(theta(k)).
inline DeltaMap delta_compose(const DeltaMap& theta, const DeltaMap& theta2) {
    if (theta.target != theta2.source())
        throw error("delta maps not composable: target " + std::to_string(theta.target) +
                    " vs source " + std::to_string(theta2.source()));
    std::vector<int> values;
    values.reserve(theta.values.size());
    for (int v : theta.values)
        values.push_back(theta2.values[static_cast<std::size_t>(v)]);
    return DeltaMap{theta2.target, std::move(values)};
}

// The injection [m] -> [m+1] missing i.
inline DeltaMap coface(int i, int m) {
    if (i < 0 || i > m + 1)
        throw error("coface index out of range");
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        values.push_back(k < i ? k : k + 1);
    return DeltaMap{m + 1, std::move(values)};
}

// The surjection [m] -> [m-1] hitting i twice.
inline DeltaMap codegeneracy(int i, int m) {
    if (m < 1 || i < 0 || i > m - 1)
        throw error("codegeneracy index out of range");
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        values.push_back(k <= i ? k : k - 1);
    return DeltaMap{m - 1, std::move(values)};
}

inline std::string to_string(const DeltaMap& d) {
    std::string out = "[" + std::to_string(d.source()) + "]->[" + std::to_string(d.target) + "]:(";
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(d.values[k]);
    }
    return out + ")";
}

} // namespace nilform
