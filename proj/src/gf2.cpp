#include "periband/gf2.hpp"

#include <stdexcept>

namespace periband {

void Gf2System::add_equation(const std::vector<int>& coeffs, int rhs) {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(num_vars_) + 1, 0);
    for (int c : coeffs) {
        if (c < 0 || c >= num_vars_) throw std::out_of_range("Gf2System: variable index");
        row[c] ^= 1;  // repeated indices cancel mod 2
    }
    row[num_vars_] = static_cast<std::uint8_t>(rhs & 1);
    rows_.push_back(std::move(row));
}

std::optional<std::vector<std::uint8_t>> Gf2System::solve(int free_value) const {
    auto m = rows_;
    const int n = num_vars_;
    std::vector<int> pivot_of_col(n, -1);

    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r) {
            if (m[r][col]) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r != rank && m[r][col]) {
                for (int c = col; c <= n; ++c) m[r][c] ^= m[rank][c];
            }
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
        if (m[r][n]) return std::nullopt;  // 0 = 1
    }

    std::vector<std::uint8_t> x(n, static_cast<std::uint8_t>(free_value & 1));
    for (int col = 0; col < n; ++col) {
        const int r = pivot_of_col[col];
        if (r < 0) continue;
        std::uint8_t v = m[r][n];
        for (int c = col + 1; c < n; ++c) {
            if (m[r][c]) v ^= x[c];
        }
        x[col] = v;
    }
    return x;
}

}  // namespace periband
