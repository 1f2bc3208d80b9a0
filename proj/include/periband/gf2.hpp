#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace periband {

// Dense linear system over GF(2). Systems in this project are tiny
// (a handful of vertex-coloring and parity variables), so byte-per-bit
// rows with plain Gaussian elimination are enough.
class Gf2System {
public:
    explicit Gf2System(int num_vars) : num_vars_(num_vars) {}

    // coeffs holds the variable indices with coefficient 1; rhs is the parity.
    void add_equation(const std::vector<int>& coeffs, int rhs);

    int num_vars() const { return num_vars_; }

    // Gaussian elimination; free variables take free_value (0 or 1).
    // Returns a solution vector of 0/1, or nullopt when inconsistent.
    std::optional<std::vector<std::uint8_t>> solve(int free_value = 0) const;

private:
    int num_vars_;
    std::vector<std::vector<std::uint8_t>> rows_;  // each row: num_vars coeffs + rhs
};

}  // namespace periband
