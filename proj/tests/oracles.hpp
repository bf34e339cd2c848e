// Independent reference implementations used only by the tests. Each one
// follows the textbook definition directly and shares no code path with the
// library routine it checks.
#ifndef CONTINGENT_TESTS_ORACLES_HPP
#define CONTINGENT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "contingent/logic.hpp"
#include "contingent/rational.hpp"

namespace oracle {

using contingent::Formula;
using contingent::Rational;

// Recursive classical evaluation; valuation bit i is atom i.
inline bool eval(const Formula& f, std::uint64_t valuation) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return (valuation >> f.atom_index()) & 1U;
    case Formula::Kind::kNot:
      return !eval(f.left(), valuation);
    case Formula::Kind::kAnd:
      return eval(f.left(), valuation) && eval(f.right(), valuation);
    case Formula::Kind::kOr:
      return eval(f.left(), valuation) || eval(f.right(), valuation);
  }
  return false;
}

inline std::vector<bool> truth_table(const Formula& f, std::size_t atoms) {
  std::vector<bool> out(std::size_t{1} << atoms);
  for (std::uint64_t v = 0; v < out.size(); ++v) out[v] = eval(f, v);
  return out;
}

inline bool entails(const Formula& f, const Formula& g, std::size_t atoms) {
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << atoms); ++v) {
    if (eval(f, v) && !eval(g, v)) return false;
  }
  return true;
}

// m(A) = sum over B subset of A of (-1)^|A \ B| f(B), by explicit submask walk.
inline std::vector<Rational> mobius(const std::vector<Rational>& f) {
  std::vector<Rational> m(f.size(), Rational(0));
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    for (std::uint64_t b = a;; b = (b - 1) & a) {
      const int parity = __builtin_popcountll(a & ~b) % 2;
      m[a] += parity ? -f[b] : f[b];
      if (b == 0) break;
    }
  }
  return m;
}

// Direct k-monotonicity: f(A_1 u .. u A_k) >= sum over nonempty I of
// (-1)^(|I|+1) f(intersection of A_I), for families of distinct events of
// size 2..k_max. On n points, k_max = n already decides total monotonicity.
inline bool totally_monotone_direct(const std::vector<Rational>& f, std::size_t k_max) {
  const std::size_t events = f.size();
  std::vector<std::uint64_t> family;
  std::function<bool(std::uint64_t)> extend = [&](std::uint64_t next) -> bool {
    if (family.size() >= 2) {
      std::uint64_t uni = 0;
      for (auto e : family) uni |= e;
      Rational rhs = 0;
      const std::size_t k = family.size();
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
        std::uint64_t inter = events - 1;
        for (std::size_t i = 0; i < k; ++i) {
          if ((subset >> i) & 1U) inter &= family[i];
        }
        if (__builtin_popcountll(subset) % 2) {
          rhs += f[inter];
        } else {
          rhs -= f[inter];
        }
      }
      if (f[uni] < rhs) return false;
    }
    if (family.size() == k_max) return true;
    for (std::uint64_t e = next; e < events; ++e) {
      family.push_back(e);
      const bool ok = extend(e + 1);
      family.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  // Singletons of the family definition: nonnegativity.
  for (const auto& v : f) {
    if (v < 0) return false;
  }
  return extend(0);
}

// Choquet integral by sorting states in decreasing payoff order:
// sum_i x_(i) * (f(top i) - f(top i-1)).
inline Rational choquet(const std::vector<Rational>& x, const std::function<Rational(std::uint64_t)>& f) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Rational total = 0;
  std::uint64_t top = 0;
  Rational previous = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    top |= std::uint64_t{1} << order[i];
    const Rational current = f(top);
    total += x[order[i]] * (current - previous);
    previous = current;
  }
  return total;
}

// Strict pointwise domination found on the simplex grid with denominators
// up to `max_denominator`; returns the first dominating mixture found.
inline std::optional<std::vector<Rational>> grid_dominates(const std::vector<Rational>& x,
                                                           const std::vector<std::vector<Rational>>& alternatives,
                                                           long max_denominator) {
  const std::size_t k = alternatives.size();
  std::vector<long> weights(k, 0);
  for (long d = 1; d <= max_denominator; ++d) {
    std::function<std::optional<std::vector<Rational>>(std::size_t, long)> walk =
        [&](std::size_t i, long remaining) -> std::optional<std::vector<Rational>> {
      if (i + 1 == k) {
        weights[i] = remaining;
        std::vector<Rational> mu;
        for (long w : weights) mu.emplace_back(w, d);
        for (auto& m : mu) m.canonicalize();
        for (std::size_t s = 0; s < x.size(); ++s) {
          Rational mixed = 0;
          for (std::size_t a = 0; a < k; ++a) mixed += mu[a] * alternatives[a][s];
          if (mixed <= x[s]) return std::nullopt;
        }
        return mu;
      }
      for (long w = 0; w <= remaining; ++w) {
        weights[i] = w;
        if (auto found = walk(i + 1, remaining - w)) return found;
      }
      return std::nullopt;
    };
    if (auto found = walk(0, d)) return found;
  }
  return std::nullopt;
}

}  // namespace oracle

#endif  // CONTINGENT_TESTS_ORACLES_HPP
