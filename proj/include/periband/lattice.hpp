#pragma once

#include <cstdint>
#include <vector>

namespace periband {

// Elementary divisors (Smith normal form diagonal) of an integer matrix given
// as a list of row vectors of equal length. Divisors are returned nonnegative,
// each dividing the next, with trailing zeros stripped (their count is the
// rank). Entry growth is tame at the sizes used here (shift vectors in small
// dimension), so plain 64-bit arithmetic suffices.
std::vector<std::int64_t> elementary_divisors(std::vector<std::vector<std::int64_t>> rows);

struct LatticeSpan {
    bool full_rank = false;      // rank == ambient dimension
    std::int64_t index = 0;      // [Z^d : span] when full_rank, else 0 (infinite)
    std::vector<std::int64_t> divisors;

    bool is_all_of_zd() const { return full_rank && index == 1; }
};

// Does the integer span of the given vectors equal all of Z^d?
LatticeSpan lattice_span(const std::vector<std::vector<std::int64_t>>& vectors, int dim);

}  // namespace periband
