#include "eurep/grid.hpp"

#include "eurep/error.hpp"

#include <iterator>
#include <numeric>

namespace eurep {

namespace {

// Compositions of `total` into `parts` nonnegative integers, lexicographically
// ascending.
template <class Visit>
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& prefix, Visit&& visit) {
  if (parts == 1) {
    prefix.push_back(total);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t first = 0; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, visit);
    prefix.pop_back();
  }
}

Lottery from_numerators(const std::vector<std::size_t>& nums, std::size_t denominator) {
  std::vector<Rational> w;
  w.reserve(nums.size());
  for (auto a : nums) w.emplace_back(static_cast<long>(a), static_cast<long>(denominator));
  return make_lottery(std::move(w));
}

}  // namespace

std::vector<Lottery> lotteries_with_denominator(std::size_t n, std::size_t denominator) {
  if (denominator == 0 || n == 0) throw Error(ErrorCode::InvalidScenario, "grid needs denominator >= 1 and n >= 1");
  std::vector<Lottery> out;
  std::vector<std::size_t> prefix;
  compositions(denominator, n + 1, prefix, [&](const std::vector<std::size_t>& nums) {
    std::size_t g = denominator;
    for (auto a : nums) g = std::gcd(g, a);
    if (g == 1) out.push_back(from_numerators(nums, denominator));
  });
  return out;
}

std::vector<Lottery> grid_lotteries(const GridSpec& grid) {
  if (grid.denominator_bound == 0 || grid.n == 0) {
    throw Error(ErrorCode::InvalidScenario, "grid needs denominator bound >= 1 and n >= 1");
  }
  std::vector<Lottery> out;
  for (std::size_t k = 1; k <= grid.denominator_bound; ++k) {
    auto layer = lotteries_with_denominator(grid.n, k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<Lottery> lattice_lotteries(std::size_t n, std::size_t denominator) {
  if (denominator == 0 || n == 0) throw Error(ErrorCode::InvalidScenario, "lattice needs denominator >= 1 and n >= 1");
  std::vector<Lottery> out;
  std::vector<std::size_t> prefix;
  compositions(denominator, n + 1, prefix,
               [&](const std::vector<std::size_t>& nums) { out.push_back(from_numerators(nums, denominator)); });
  return out;
}

std::vector<Rational> dyadic_weights(std::size_t bound) {
  std::vector<Rational> out;
  for (std::size_t den = 2; den <= bound; den *= 2) {
    for (std::size_t j = 1; j < den; j += 2) out.emplace_back(static_cast<long>(j), static_cast<long>(den));
  }
  return out;
}

std::vector<Rational> grid_weights(std::size_t bound) {
  std::vector<Rational> out{Rational(0), Rational(1)};
  for (std::size_t k = 2; k <= bound; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      if (std::gcd(j, k) == 1) out.emplace_back(static_cast<long>(j), static_cast<long>(k));
    }
  }
  return out;
}

}  // namespace eurep
