#include "eurep/axiom_checks.hpp"

#include "eurep/error.hpp"
#include "eurep/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace eurep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kMaxDepth = 62;

// Pairwise comparisons over a grid: at(i, j) = compare(grid[i], grid[j]).
struct ComparisonTable {
  std::vector<Lottery> grid;
  std::vector<Comparison> cmp;

  std::size_t size() const { return grid.size(); }
  Comparison at(std::size_t i, std::size_t j) const { return cmp[i * grid.size() + j]; }
};

void require_oracle_space(const PreferenceOracle& oracle, const GridSpec& grid) {
  if (oracle.n() != grid.n) {
    throw Error(ErrorCode::SpaceMismatch, "grid has n = " + std::to_string(grid.n) + ", oracle has n = " +
                                              std::to_string(oracle.n()));
  }
}

void require_depth(std::size_t depth) {
  if (depth > kMaxDepth) throw Error(ErrorCode::InvalidScenario, "search depth above " + std::to_string(kMaxDepth));
}

ComparisonTable make_table(const PreferenceOracle& oracle, const GridSpec& grid, Execution exec) {
  require_oracle_space(oracle, grid);
  ComparisonTable t{grid_lotteries(grid), {}};
  const std::size_t n = t.grid.size();
  t.cmp.resize(n * n);
  fill_indexed(t.cmp, [&](std::size_t k) { return oracle.compare(t.grid[k / n], t.grid[k % n]); }, exec);
  return t;
}

AxiomVerdict make_verdict(std::string axiom, const std::optional<Witness>& hit, Budget budget) {
  AxiomVerdict v{std::move(axiom), hit ? Outcome::violated : Outcome::no_violation_found, budget, hit};
  return v;
}

template <class W>
std::optional<Witness> widen(std::optional<W> w) {
  if (!w) return std::nullopt;
  return Witness(std::move(*w));
}

Rational inverse_power_of_two(std::size_t k) { return Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(k)); }

// Smallest k with 2^-k <= 1 / (2 d): approach radii stay inside one grid cell.
std::size_t first_level(std::size_t denominator_bound) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < 2 * denominator_bound) ++k;
  return k;
}

std::optional<Lottery> try_lottery(std::vector<Rational> w) {
  for (const auto& x : w) {
    if (x.sign() < 0) return std::nullopt;
  }
  return make_lottery(std::move(w));
}

Lottery along_line(const Lottery& p, const Lottery& q, const Rational& t) {
  std::vector<Rational> w(p.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = q[i] + t * (p[i] - q[i]);
  return make_lottery(std::move(w));
}

std::optional<Lottery> translate(const Lottery& r, const Lottery& p, const Lottery& q) {
  std::vector<Rational> w(r.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = r[i] + q[i] - p[i];
  return try_lottery(std::move(w));
}

// The comparisons the line-order table demands for q + t (p - q), given
// p > q. Returns whether (vs_p, vs_q) is consistent with it.
bool line_order_holds(const Rational& t, Comparison vs_p, Comparison vs_q) {
  if (t.sign() < 0) return vs_q == Comparison::worse;
  if (t.is_zero()) return vs_q == Comparison::indifferent;
  if (t < Rational(1)) return vs_p == Comparison::worse && vs_q == Comparison::better;
  if (t == Rational(1)) return vs_p == Comparison::indifferent;
  return vs_p == Comparison::better;
}

// Rationals j/k with k <= bound inside [lo, hi], by ascending reduced
// denominator then value.
std::vector<Rational> weights_in_range(const Rational& lo, const Rational& hi, std::size_t bound) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= bound; ++k) {
    const Rational kk(static_cast<long>(k));
    const mpz_class first = -((-lo * kk).floor());  // ceil(lo * k)
    const mpz_class last = (hi * kk).floor();
    for (mpz_class j = first; j <= last; ++j) {
      Rational t(j, mpz_class(static_cast<unsigned long>(k)));
      if (t.denominator() == static_cast<unsigned long>(k)) out.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<Lottery> opposite_neighbor(const PreferenceOracle& oracle, const Lottery& reference, const Lottery& point,
                                         Comparison wanted, const Rational& radius) {
  const std::size_t size = point.size();
  for (std::size_t to = 0; to < size; ++to) {
    for (std::size_t from = 0; from < size; ++from) {
      if (to == from || point[from] < radius) continue;
      std::vector<Rational> w(point.weights().begin(), point.weights().end());
      w[to] += radius;
      w[from] -= radius;
      Lottery candidate = make_lottery(std::move(w));
      if (oracle.compare(candidate, reference) == wanted) return candidate;
    }
  }
  return std::nullopt;
}

bool in_mixture_set(bool at_least, Comparison c) { return at_least ? c != Comparison::worse : c != Comparison::better; }

// Greedy search for a spanning indifferent set. Returns the set, or the
// number of classes seen and the best rank reached.
struct IpSearch {
  std::optional<witness::SpanningSet> found;
  std::size_t classes = 0;
  std::size_t best_rank = 0;
};

IpSearch search_ip(const PreferenceOracle& oracle, const std::vector<Lottery>& grid) {
  struct IndifferenceClass {
    std::vector<Lottery> members;
    std::vector<EmbeddedPoint> embedded;
  };
  const std::size_t n = oracle.n();
  std::vector<IndifferenceClass> classes;
  IpSearch out;
  for (const auto& s : grid) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const IndifferenceClass& c) {
      return oracle.compare(s, c.members.front()) == Comparison::indifferent;
    });
    if (it == classes.end()) {
      classes.push_back({{s}, {embed(s)}});
      it = classes.end() - 1;
    } else {
      auto trial = it->embedded;
      trial.push_back(embed(s));
      if (affine_rank(trial) != trial.size() - 1) continue;
      it->members.push_back(s);
      it->embedded = std::move(trial);
    }
    out.best_rank = std::max(out.best_rank, it->members.size() - 1);
    if (it->members.size() == n) {
      out.found = witness::SpanningSet{it->members, n - 1};
      break;
    }
  }
  out.classes = classes.size();
  return out;
}

}  // namespace

std::string_view witness_type(const Witness& w) {
  return std::visit(overloaded{
                        [](const witness::Transitivity&) { return std::string_view("transitivity"); },
                        [](const witness::Independence&) { return std::string_view("independence"); },
                        [](const witness::Betweenness&) { return std::string_view("betweenness"); },
                        [](const witness::SpanningSet&) { return std::string_view("spanning-set"); },
                        [](const witness::NoSpanningSet&) { return std::string_view("no-spanning-set"); },
                        [](const witness::LineOrder&) { return std::string_view("line-order"); },
                        [](const witness::Convexity&) { return std::string_view("convexity"); },
                        [](const witness::Translation&) { return std::string_view("translation"); },
                        [](const witness::Solvability&) { return std::string_view("solvability"); },
                        [](const witness::MixtureClosedness&) { return std::string_view("mixture-closedness"); },
                        [](const witness::Archimedean&) { return std::string_view("archimedean"); },
                        [](const witness::Openness&) { return std::string_view("openness"); },
                    },
                    w);
}

std::string_view to_string(ContinuityKind k) {
  switch (k) {
    case ContinuityKind::grid_openness: return "grid-openness";
    case ContinuityKind::mixture: return "mixture";
    case ContinuityKind::archimedean: return "archimedean";
    case ContinuityKind::solvability: return "solvability";
  }
  return "?";
}

std::string_view to_string(IndependenceVariant v) {
  return v == IndependenceVariant::independence ? "independence" : "betweenness";
}

AxiomVerdict check_weak_order(const PreferenceOracle& oracle, const GridSpec& grid, Execution exec) {
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  auto hit = first_hit(
      n,
      [&](std::size_t i) -> std::optional<Witness> {
        for (std::size_t j = 0; j < n; ++j) {
          if (!weakly_better(t.at(i, j))) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (weakly_better(t.at(j, l)) && t.at(i, l) == Comparison::worse) {
              return witness::Transitivity{t.grid[i], t.grid[j], t.grid[l], t.at(i, j), t.at(j, l), t.at(i, l)};
            }
          }
        }
        return std::nullopt;
      },
      exec);
  return make_verdict("weak-order", hit, Budget{grid.denominator_bound, 0, n});
}

AxiomVerdict check_independence(const PreferenceOracle& oracle, const GridSpec& grid, IndependenceVariant variant,
                                Execution exec) {
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  const auto alphas = dyadic_weights(grid.denominator_bound);
  const std::size_t a_count = alphas.size();
  const Budget budget{grid.denominator_bound, 0, n};

  if (variant == IndependenceVariant::betweenness) {
    auto hit = first_hit(
        n,
        [&](std::size_t i) -> std::optional<Witness> {
          const auto& p = t.grid[i];
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !weakly_better(t.at(i, j))) continue;
            const auto& q = t.grid[j];
            for (const auto& alpha : alphas) {
              Lottery m = mix(p, q, alpha);
              const Comparison pm = oracle.compare(p, m);
              const Comparison mq = oracle.compare(m, q);
              if (!weakly_better(pm) || !weakly_better(mq)) {
                return witness::Betweenness{p, q, alpha, std::move(m), t.at(i, j), pm, mq};
              }
            }
          }
          return std::nullopt;
        },
        exec);
    return make_verdict("betweenness", hit, budget);
  }

  // mixed[(j * n + l) * a_count + a] = mix(grid[j], grid[l], alphas[a])
  std::vector<std::optional<Lottery>> mixed(n * n * a_count);
  fill_indexed(
      mixed,
      [&](std::size_t k) -> std::optional<Lottery> {
        return mix(t.grid[k / (n * a_count)], t.grid[(k / a_count) % n], alphas[k % a_count]);
      },
      exec);
  const auto mixture = [&](std::size_t j, std::size_t l, std::size_t a) -> const Lottery& {
    return *mixed[(j * n + l) * a_count + a];
  };

  auto hit = first_hit(
      n,
      [&](std::size_t i) -> std::optional<Witness> {
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const Comparison before = t.at(i, j);
          for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t a = 0; a < a_count; ++a) {
              const Comparison after = oracle.compare(mixture(i, l, a), mixture(j, l, a));
              if (after != before) {
                return witness::Independence{t.grid[i], t.grid[j],      t.grid[l], alphas[a],
                                             mixture(i, l, a), mixture(j, l, a), before,  after};
              }
            }
          }
        }
        return std::nullopt;
      },
      exec);
  return make_verdict("independence", hit, budget);
}

AxiomVerdict check_ip(const PreferenceOracle& oracle, const GridSpec& grid) {
  require_oracle_space(oracle, grid);
  const auto lotteries = grid_lotteries(grid);
  const auto search = search_ip(oracle, lotteries);
  const Budget budget{grid.denominator_bound, 0, lotteries.size()};
  if (search.found) return AxiomVerdict{"ip", Outcome::no_violation_found, budget, Witness(*search.found)};
  return AxiomVerdict{"ip", Outcome::violated, budget,
                      Witness(witness::NoSpanningSet{grid.denominator_bound, search.classes, search.best_rank})};
}

std::optional<witness::Solvability> probe_solvability(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                     const Lottery& r, std::size_t denominator_bound,
                                                     std::size_t depth) {
  require_depth(depth);
  const auto at = [&](const Rational& alpha) { return oracle.compare(mix(p, r, alpha), q); };
  const Comparison top = at(Rational(1));
  const Comparison bottom = at(Rational(0));
  if (top == Comparison::indifferent || bottom == Comparison::indifferent) return std::nullopt;

  Rational lo(0);
  Rational hi(1);
  if (top != bottom) {
    // Bisection interleaved with the simplest fraction of the bracket, which
    // lands exactly on a small-denominator solution once the bracket is
    // narrow enough.
    for (std::size_t step = 0; step < depth; ++step) {
      for (const Rational& probe : {simplest_between(lo, hi), (lo + hi) / Rational(2)}) {
        if (!(lo < probe && probe < hi)) continue;
        const Comparison c = at(probe);
        if (c == Comparison::indifferent) return std::nullopt;
        (c == top ? hi : lo) = probe;
      }
    }
  }
  for (const auto& alpha : grid_weights(denominator_bound)) {
    if (at(alpha) == Comparison::indifferent) return std::nullopt;
  }
  return witness::Solvability{p, q, r, denominator_bound, depth, lo, hi};
}

std::optional<witness::Archimedean> probe_archimedean(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                     const Lottery& r, std::size_t denominator_bound,
                                                     std::size_t depth) {
  require_depth(depth);
  std::vector<Rational> interior;
  for (auto& w : grid_weights(denominator_bound)) {
    if (w.sign() > 0 && w < Rational(1)) interior.push_back(std::move(w));
  }
  const auto search = [&](bool upper) {
    const auto works = [&](const Rational& a) {
      const Comparison c = oracle.compare(mix(p, r, a), q);
      return upper ? c == Comparison::better : c == Comparison::worse;
    };
    if (std::any_of(interior.begin(), interior.end(), works)) return true;
    for (std::size_t k = 1; k <= depth; ++k) {
      const Rational eps = inverse_power_of_two(k);
      if (works(upper ? Rational(1) - eps : eps)) return true;
    }
    return false;
  };
  if (!search(true)) return witness::Archimedean{p, q, r, true, denominator_bound, depth};
  if (!search(false)) return witness::Archimedean{p, q, r, false, denominator_bound, depth};
  return std::nullopt;
}

std::optional<witness::MixtureClosedness> probe_mixture(const PreferenceOracle& oracle, const Lottery& p,
                                                       const Lottery& q, const Lottery& r, bool at_least,
                                                       const Rational& boundary, std::size_t denominator_bound,
                                                       std::size_t depth) {
  require_depth(depth);
  const Comparison at_boundary = oracle.compare(mix(p, r, boundary), q);
  if (in_mixture_set(at_least, at_boundary)) return std::nullopt;
  const std::size_t k0 = first_level(denominator_bound);
  if (depth < k0) return std::nullopt;

  for (int direction : {1, -1}) {
    const auto point = [&](std::size_t k) { return boundary + Rational(direction) * inverse_power_of_two(k); };
    const Rational widest = point(k0);
    if (widest.sign() < 0 || widest > Rational(1)) continue;
    // The closest point rejects most candidates at once.
    if (!in_mixture_set(at_least, oracle.compare(mix(p, r, point(depth)), q))) continue;

    witness::MixtureClosedness w{p, q, r, at_least, boundary, at_boundary, direction, {}, {}};
    bool all_in = true;
    for (std::size_t k = k0; k <= depth && all_in; ++k) {
      Rational a = point(k);
      const Comparison c = oracle.compare(mix(p, r, a), q);
      all_in = in_mixture_set(at_least, c);
      w.approach.push_back(std::move(a));
      w.approach_observed.push_back(c);
    }
    if (all_in) return w;
  }
  return std::nullopt;
}

std::optional<witness::Openness> probe_openness(const PreferenceOracle& oracle, const Lottery& reference,
                                               const Lottery& point, std::size_t denominator_bound,
                                               std::size_t depth) {
  require_depth(depth);
  const Comparison side = oracle.compare(point, reference);
  if (side == Comparison::indifferent) return std::nullopt;
  const std::size_t k0 = first_level(denominator_bound);
  if (depth < k0) return std::nullopt;
  const Comparison wanted = reversed(side);

  auto deepest = opposite_neighbor(oracle, reference, point, wanted, inverse_power_of_two(depth));
  if (!deepest) return std::nullopt;

  witness::Openness w{reference, point, side, {}, {}};
  for (std::size_t k = k0; k <= depth; ++k) {
    Rational radius = inverse_power_of_two(k);
    auto neighbor = k == depth ? deepest : opposite_neighbor(oracle, reference, point, wanted, radius);
    if (!neighbor) return std::nullopt;
    w.radii.push_back(std::move(radius));
    w.neighbors.push_back(std::move(*neighbor));
  }
  return w;
}

AxiomVerdict check_continuity(const PreferenceOracle& oracle, ContinuityKind kind, const GridSpec& grid,
                              std::size_t depth, Execution exec) {
  require_depth(depth);
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  const std::size_t d = grid.denominator_bound;
  const Budget budget{d, depth, n};
  std::optional<Witness> hit;

  switch (kind) {
    case ContinuityKind::solvability:
      hit = first_hit(
          n,
          [&](std::size_t i) -> std::optional<Witness> {
            for (std::size_t j = 0; j < n; ++j) {
              if (!weakly_better(t.at(i, j))) continue;
              for (std::size_t l = 0; l < n; ++l) {
                if (!weakly_better(t.at(j, l))) continue;
                if (auto w = probe_solvability(oracle, t.grid[i], t.grid[j], t.grid[l], d, depth)) return Witness(*w);
              }
            }
            return std::nullopt;
          },
          exec);
      break;

    case ContinuityKind::archimedean:
      hit = first_hit(
          n,
          [&](std::size_t i) -> std::optional<Witness> {
            for (std::size_t j = 0; j < n; ++j) {
              if (t.at(i, j) != Comparison::better) continue;
              for (std::size_t l = 0; l < n; ++l) {
                if (t.at(j, l) != Comparison::better) continue;
                if (auto w = probe_archimedean(oracle, t.grid[i], t.grid[j], t.grid[l], d, depth)) return Witness(*w);
              }
            }
            return std::nullopt;
          },
          exec);
      break;

    case ContinuityKind::mixture: {
      const auto weights = grid_weights(d);
      const std::size_t w_count = weights.size();
      const bool has_levels = depth >= first_level(d);
      const Rational deepest = inverse_power_of_two(depth);
      hit = first_hit(
          n,
          [&](std::size_t i) -> std::optional<Witness> {
            const auto& p = t.grid[i];
            // Per (r, b): the boundary mixture and the closest approach point on
            // each side, which is the first thing probe_mixture checks.
            struct Candidate {
              Lottery at_boundary;
              std::optional<Lottery> above, below;
            };
            std::vector<Candidate> table;
            table.reserve(n * w_count);
            for (std::size_t l = 0; l < n; ++l) {
              for (std::size_t b = 0; b < w_count; ++b) {
                Candidate c{mix(p, t.grid[l], weights[b]), std::nullopt, std::nullopt};
                if (has_levels) {
                  const Rational widest = inverse_power_of_two(first_level(d));
                  if (weights[b] + widest <= Rational(1)) c.above = mix(p, t.grid[l], weights[b] + deepest);
                  if (weights[b] - widest >= Rational(0)) c.below = mix(p, t.grid[l], weights[b] - deepest);
                }
                table.push_back(std::move(c));
              }
            }
            for (std::size_t j = 0; j < n; ++j) {
              const auto& q = t.grid[j];
              for (std::size_t l = 0; l < n; ++l) {
                for (std::size_t b = 0; b < w_count; ++b) {
                  const Candidate& cand = table[l * w_count + b];
                  const Comparison c = oracle.compare(cand.at_boundary, q);
                  if (c == Comparison::indifferent) continue;
                  // Outside {>= q} when worse, outside {<= q} when better.
                  const bool at_least = c == Comparison::worse;
                  const bool near = (cand.above && in_mixture_set(at_least, oracle.compare(*cand.above, q))) ||
                                    (cand.below && in_mixture_set(at_least, oracle.compare(*cand.below, q)));
                  if (!near) continue;
                  if (auto w = probe_mixture(oracle, p, q, t.grid[l], at_least, weights[b], d, depth)) {
                    return Witness(*w);
                  }
                }
              }
            }
            return std::nullopt;
          },
          exec);
      break;
    }

    case ContinuityKind::grid_openness:
      hit = first_hit(
          n,
          [&](std::size_t i) -> std::optional<Witness> {
            for (std::size_t j = 0; j < n; ++j) {
              if (t.at(j, i) == Comparison::indifferent) continue;
              if (auto w = probe_openness(oracle, t.grid[i], t.grid[j], d, depth)) return Witness(*w);
            }
            return std::nullopt;
          },
          exec);
      break;
  }
  return make_verdict(std::string(to_string(kind)), hit, budget);
}

AxiomVerdict check_line_order(const PreferenceOracle& oracle, const GridSpec& grid, Execution exec) {
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  auto hit = first_hit(
      n,
      [&](std::size_t i) -> std::optional<Witness> {
        const auto& p = t.grid[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (t.at(i, j) != Comparison::better) continue;
          const auto& q = t.grid[j];
          // q + t (p - q) stays in the simplex exactly for t in [t_lo, t_hi].
          std::optional<Rational> t_lo, t_hi;
          for (std::size_t c = 0; c < p.size(); ++c) {
            const Rational slope = p[c] - q[c];
            if (slope.is_zero()) continue;
            const Rational bound = -q[c] / slope;
            if (slope.sign() > 0) {
              if (!t_lo || bound > *t_lo) t_lo = bound;
            } else if (!t_hi || bound < *t_hi) {
              t_hi = bound;
            }
          }
          for (const auto& tt : weights_in_range(*t_lo, *t_hi, grid.denominator_bound)) {
            Lottery point = along_line(p, q, tt);
            const Comparison vs_p = oracle.compare(point, p);
            const Comparison vs_q = oracle.compare(point, q);
            if (!line_order_holds(tt, vs_p, vs_q)) return witness::LineOrder{p, q, tt, std::move(point), vs_p, vs_q};
          }
        }
        return std::nullopt;
      },
      exec);
  return make_verdict("line-order", hit, Budget{grid.denominator_bound, 0, n});
}

AxiomVerdict check_convexity(const PreferenceOracle& oracle, const GridSpec& grid, Execution exec) {
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  const auto alphas = dyadic_weights(grid.denominator_bound);
  auto hit = first_hit(
      n,
      [&](std::size_t i) -> std::optional<Witness> {
        std::vector<std::size_t> same;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && t.at(j, i) == Comparison::indifferent) same.push_back(j);
        }
        for (std::size_t a = 0; a < same.size(); ++a) {
          for (std::size_t b = a + 1; b < same.size(); ++b) {
            for (const auto& alpha : alphas) {
              Lottery m = mix(t.grid[same[a]], t.grid[same[b]], alpha);
              const Comparison c = oracle.compare(m, t.grid[i]);
              if (c != Comparison::indifferent) {
                return witness::Convexity{t.grid[i], t.grid[same[a]], t.grid[same[b]], alpha, std::move(m), c};
              }
            }
          }
        }
        return std::nullopt;
      },
      exec);
  return make_verdict("convexity", hit, Budget{grid.denominator_bound, 0, n});
}

AxiomVerdict check_translation(const PreferenceOracle& oracle, const GridSpec& grid, Execution exec) {
  const auto t = make_table(oracle, grid, exec);
  const std::size_t n = t.size();
  auto hit = first_hit(
      n,
      [&](std::size_t i) -> std::optional<Witness> {
        const auto& p = t.grid[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (t.at(l, i) != Comparison::indifferent) continue;
            auto moved = translate(t.grid[l], p, t.grid[j]);
            if (!moved) continue;
            const Comparison c = oracle.compare(*moved, t.grid[j]);
            if (c != Comparison::indifferent) return witness::Translation{p, t.grid[j], t.grid[l], *moved, c};
          }
        }
        return std::nullopt;
      },
      exec);
  return make_verdict("translation", hit, Budget{grid.denominator_bound, 0, n});
}

bool replay_witness(const Witness& w, const PreferenceOracle& oracle) {
  const auto cmp = [&](const Lottery& a, const Lottery& b) { return oracle.compare(a, b); };
  return std::visit(
      overloaded{
          [&](const witness::Transitivity& x) {
            return cmp(x.p, x.q) == x.pq && cmp(x.q, x.r) == x.qr && cmp(x.p, x.r) == x.pr && weakly_better(x.pq) &&
                   weakly_better(x.qr) && x.pr == Comparison::worse;
          },
          [&](const witness::Independence& x) {
            return x.alpha.sign() > 0 && x.alpha <= Rational(1) && mix(x.p, x.r, x.alpha) == x.mixed_p &&
                   mix(x.q, x.r, x.alpha) == x.mixed_q && cmp(x.p, x.q) == x.before &&
                   cmp(x.mixed_p, x.mixed_q) == x.after && x.before != x.after;
          },
          [&](const witness::Betweenness& x) {
            return x.alpha.sign() > 0 && x.alpha < Rational(1) && mix(x.p, x.q, x.alpha) == x.mixture &&
                   cmp(x.p, x.q) == x.p_vs_q && cmp(x.p, x.mixture) == x.p_vs_mixture &&
                   cmp(x.mixture, x.q) == x.mixture_vs_q && weakly_better(x.p_vs_q) &&
                   !(weakly_better(x.p_vs_mixture) && weakly_better(x.mixture_vs_q));
          },
          [&](const witness::SpanningSet& x) {
            if (x.points.size() != oracle.n() || x.rank != oracle.n() - 1) return false;
            std::vector<EmbeddedPoint> embedded;
            for (const auto& p : x.points) {
              if (cmp(p, x.points.front()) != Comparison::indifferent) return false;
              embedded.push_back(embed(p));
            }
            return affine_rank(embedded) == x.rank;
          },
          [&](const witness::NoSpanningSet& x) {
            const auto again = search_ip(oracle, grid_lotteries(GridSpec{x.denominator_bound, oracle.n()}));
            return !again.found && again.classes == x.classes && again.best_rank == x.best_rank;
          },
          [&](const witness::LineOrder& x) {
            return cmp(x.p, x.q) == Comparison::better && along_line(x.p, x.q, x.t) == x.point &&
                   cmp(x.point, x.p) == x.vs_p && cmp(x.point, x.q) == x.vs_q &&
                   !line_order_holds(x.t, x.vs_p, x.vs_q);
          },
          [&](const witness::Convexity& x) {
            return cmp(x.q1, x.p) == Comparison::indifferent && cmp(x.q2, x.p) == Comparison::indifferent &&
                   mix(x.q1, x.q2, x.alpha) == x.mixture && cmp(x.mixture, x.p) == x.observed &&
                   x.observed != Comparison::indifferent;
          },
          [&](const witness::Translation& x) {
            const auto moved = translate(x.r, x.p, x.q);
            return cmp(x.r, x.p) == Comparison::indifferent && moved && *moved == x.translated &&
                   cmp(x.translated, x.q) == x.observed && x.observed != Comparison::indifferent;
          },
          [&](const witness::Solvability& x) {
            if (!weakly_better(cmp(x.p, x.q)) || !weakly_better(cmp(x.q, x.r))) return false;
            const auto again = probe_solvability(oracle, x.p, x.q, x.r, x.denominator_bound, x.depth);
            return again && again->lower == x.lower && again->upper == x.upper;
          },
          [&](const witness::MixtureClosedness& x) {
            if (x.boundary.sign() < 0 || x.boundary > Rational(1) || (x.direction != 1 && x.direction != -1)) {
              return false;
            }
            if (x.approach.empty() || x.approach.size() != x.approach_observed.size()) return false;
            if (cmp(mix(x.p, x.r, x.boundary), x.q) != x.at_boundary || in_mixture_set(x.at_least, x.at_boundary)) {
              return false;
            }
            for (std::size_t k = 0; k < x.approach.size(); ++k) {
              const Rational gap = (x.approach[k] - x.boundary) * Rational(x.direction);
              if (gap.sign() <= 0 || !gap.numerator().fits_slong_p() || gap.numerator() != 1) return false;
              if (k > 0 && !(gap * Rational(2) == (x.approach[k - 1] - x.boundary) * Rational(x.direction))) {
                return false;
              }
              if (x.approach[k] > Rational(1) || x.approach[k].sign() < 0) return false;
              const Comparison c = cmp(mix(x.p, x.r, x.approach[k]), x.q);
              if (c != x.approach_observed[k] || !in_mixture_set(x.at_least, c)) return false;
            }
            return true;
          },
          [&](const witness::Archimedean& x) {
            if (cmp(x.p, x.q) != Comparison::better || cmp(x.q, x.r) != Comparison::better) return false;
            const auto again = probe_archimedean(oracle, x.p, x.q, x.r, x.denominator_bound, x.depth);
            return again && again->upper == x.upper;
          },
          [&](const witness::Openness& x) {
            if (x.side == Comparison::indifferent || cmp(x.point, x.reference) != x.side) return false;
            if (x.radii.empty() || x.radii.size() != x.neighbors.size()) return false;
            for (std::size_t k = 0; k < x.radii.size(); ++k) {
              const auto& nb = x.neighbors[k];
              if (nb.size() != x.point.size() || x.radii[k].sign() <= 0) return false;
              std::size_t up = 0, down = 0;
              for (std::size_t c = 0; c < nb.size(); ++c) {
                const Rational delta = nb[c] - x.point[c];
                if (delta == x.radii[k]) {
                  ++up;
                } else if (delta == -x.radii[k]) {
                  ++down;
                } else if (!delta.is_zero()) {
                  return false;
                }
              }
              if (up != 1 || down != 1 || cmp(nb, x.reference) != reversed(x.side)) return false;
            }
            return true;
          },
      },
      w);
}

}  // namespace eurep
