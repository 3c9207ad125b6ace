#pragma once

#include <map>

#include "nilform/rational.hpp"

namespace nilform {

// Sparse vector over an integer-indexed basis.
using SparseVec = std::map<int, Rational>;

inline void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (a == 0)
        return;
    for (const auto& [i, c] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * c);
        } else {
            it->second += a * c;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

// Incremental exact Gaussian elimination over Q. Rows are added one at a
// time; pivots are kept normalized to leading coefficient 1. Each pivot
// remembers the combination of original rows that produced it, so span
// membership queries come with an explicit certificate.
class LinearSolver {
public:
    struct Reduction {
        SparseVec residual; // zero iff the vector lies in the span
        SparseVec combination; // input = residual + sum combination[r] * row_r
    };

    // Returns true if the row enlarged the span.
    bool add_row(SparseVec v) {
        SparseVec combo{{rows_added_, Rational(1)}};
        ++rows_added_;
        while (!v.empty()) {
            const int col = v.begin()->first;
            const Rational c = v.begin()->second;
            auto p = pivots_.find(col);
            if (p == pivots_.end()) {
                const Rational inv = Rational(1) / c;
                SparseVec nv, nc;
                for (const auto& [i, x] : v)
                    nv.emplace(i, inv * x);
                for (const auto& [i, x] : combo)
                    nc.emplace(i, inv * x);
                pivots_.emplace(col, PivotRow{std::move(nv), std::move(nc)});
                return true;
            }
            axpy(v, -c, p->second.vec);
            axpy(combo, -c, p->second.combination);
        }
        return false;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    int rows_added() const { return rows_added_; }

    Reduction reduce(SparseVec v) const {
        Reduction out;
        SparseVec combo;
        while (!v.empty()) {
            const int col = v.begin()->first;
            const Rational c = v.begin()->second;
            auto p = pivots_.find(col);
            if (p == pivots_.end()) {
                // leading coordinate not killable; move it to the residual
                out.residual.emplace(col, c);
                v.erase(v.begin());
                continue;
            }
            axpy(combo, c, p->second.combination);
            axpy(v, -c, p->second.vec);
        }
        out.combination = std::move(combo);
        return out;
    }

    bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }

private:
    struct PivotRow {
        SparseVec vec;
        SparseVec combination;
    };

    std::map<int, PivotRow> pivots_;
    int rows_added_ = 0;
};

} // namespace nilform
