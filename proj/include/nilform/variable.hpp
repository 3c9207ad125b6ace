#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "nilform/error.hpp"

namespace nilform {

// Tagged variable universe. Three families, all indices 1-based:
//   base x_j      — coordinate j of the base point of R^n
//   inf  y_{i,j}  — coordinate j of the i-th infinitesimal difference
//   vertex v_{k,j}— coordinate j of the k-th simplex vertex (k in 1..m+1)
enum class VarKind : std::uint8_t { Base = 0, Inf = 1, Vertex = 2 };

struct Var {
    VarKind kind;
    int row; // 0 for Base, i for Inf, k for Vertex
    int col; // j in all three families

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var base_var(int j) { return {VarKind::Base, 0, j}; }
inline Var inf_var(int i, int j) { return {VarKind::Inf, i, j}; }
inline Var vertex_var(int k, int j) { return {VarKind::Vertex, k, j}; }

inline std::string to_string(const Var& v) {
    switch (v.kind) {
    case VarKind::Base: return "x" + std::to_string(v.col);
    case VarKind::Inf: return "y" + std::to_string(v.row) + "_" + std::to_string(v.col);
    case VarKind::Vertex: return "v" + std::to_string(v.row) + "_" + std::to_string(v.col);
    }
    throw error("corrupt variable tag");
}

// Bounds check against a declared (n, m) context. Base needs j <= n,
// Inf needs i <= m, Vertex needs k <= m+1.
inline bool var_in_context(const Var& v, int n, int m) {
    if (v.col < 1 || v.col > n)
        return false;
    switch (v.kind) {
    case VarKind::Base: return v.row == 0;
    case VarKind::Inf: return v.row >= 1 && v.row <= m;
    case VarKind::Vertex: return v.row >= 1 && v.row <= m + 1;
    }
    return false;
}

} // namespace nilform
