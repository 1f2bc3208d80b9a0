#include "periband/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace periband {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Position of the entry with smallest nonzero magnitude in the trailing
// submatrix starting at (s, s); returns false when that submatrix is zero.
bool find_pivot(const Matrix& a, int s, int& pi, int& pj) {
    std::int64_t best = 0;
    bool found = false;
    for (int i = s; i < static_cast<int>(a.size()); ++i) {
        for (int j = s; j < static_cast<int>(a[i].size()); ++j) {
            const std::int64_t v = std::abs(a[i][j]);
            if (v != 0 && (!found || v < best)) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

}  // namespace

std::vector<std::int64_t> elementary_divisors(Matrix rows) {
    if (rows.empty()) return {};
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("elementary_divisors: ragged matrix");
    }

    std::vector<std::int64_t> divisors;
    const int steps = std::min(m, n);
    for (int s = 0; s < steps; ++s) {
        for (;;) {
            int pi = 0, pj = 0;
            if (!find_pivot(rows, s, pi, pj)) {
                return divisors;  // trailing block zero: remaining divisors are 0
            }
            std::swap(rows[s], rows[pi]);
            if (pj != s) {
                for (auto& r : rows) std::swap(r[s], r[pj]);
            }
            const std::int64_t p = rows[s][s];

            bool reduced = true;
            for (int i = s + 1; i < m; ++i) {
                const std::int64_t q = rows[i][s] / p;
                if (q != 0) {
                    for (int j = s; j < n; ++j) rows[i][j] -= q * rows[s][j];
                }
                if (rows[i][s] != 0) reduced = false;
            }
            for (int j = s + 1; j < n; ++j) {
                const std::int64_t q = rows[s][j] / p;
                if (q != 0) {
                    for (int i = s; i < m; ++i) rows[i][j] -= q * rows[i][s];
                }
                if (rows[s][j] != 0) reduced = false;
            }
            if (!reduced) continue;  // smaller remainders appeared, pick a new pivot

            // Pivot must divide every entry of the trailing block for the
            // divisibility chain; if not, fold an offending row in and redo.
            bool divides_all = true;
            for (int i = s + 1; i < m && divides_all; ++i) {
                for (int j = s + 1; j < n; ++j) {
                    if (rows[i][j] % p != 0) {
                        for (int c = s; c < n; ++c) rows[s][c] += rows[i][c];
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                divisors.push_back(std::abs(p));
                break;
            }
        }
    }
    return divisors;
}

LatticeSpan lattice_span(const Matrix& vectors, int dim) {
    LatticeSpan out;
    Matrix rows;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("lattice_span: wrong vector length");
        rows.push_back(v);
    }
    out.divisors = elementary_divisors(std::move(rows));
    out.full_rank = static_cast<int>(out.divisors.size()) == dim;
    if (out.full_rank) {
        out.index = 1;
        for (auto d : out.divisors) out.index *= d;
    }
    return out;
}

}  // namespace periband
