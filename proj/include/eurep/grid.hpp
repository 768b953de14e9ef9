#pragma once

// Finite lottery grids, the substrate of every exhaustive scan.
//
// Enumeration order is part of the contract: ascending common denominator,
// then lexicographically ascending numerator vectors. Each lottery appears
// once, at its smallest common denominator.

#include "eurep/lottery.hpp"
#include "eurep/rational.hpp"

#include <cstddef>
#include <vector>

namespace eurep {

struct GridSpec {
  std::size_t denominator_bound = 1;
  std::size_t n = 1;
};

/// All lotteries whose weights share a common denominator <= bound.
std::vector<Lottery> grid_lotteries(const GridSpec& grid);

/// Lotteries whose smallest common denominator is exactly `denominator`,
/// lexicographically ascending.
std::vector<Lottery> lotteries_with_denominator(std::size_t n, std::size_t denominator);

/// All lotteries whose weights are multiples of 1/denominator,
/// lexicographically ascending.
std::vector<Lottery> lattice_lotteries(std::size_t n, std::size_t denominator);

/// j / 2^e strictly inside (0, 1) with 2^e <= bound, by ascending
/// denominator then numerator: 1/2, 1/4, 3/4, 1/8, ...
std::vector<Rational> dyadic_weights(std::size_t bound);

/// Distinct j / k in [0, 1] with k <= bound, by ascending reduced
/// denominator then numerator: 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ...
std::vector<Rational> grid_weights(std::size_t bound);

}  // namespace eurep
