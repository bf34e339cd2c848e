#ifndef CONTINGENT_SIMPLEX_HPP
#define CONTINGENT_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "contingent/rational.hpp"

namespace contingent {

using Matrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  enum class Status { kUnique, kInconsistent, kUnderdetermined };
  Status status = Status::kInconsistent;
  std::size_t rank = 0;
  /// A solution (free variables at 0) unless inconsistent.
  std::vector<Rational> x;
};

/// Exact Gauss-Jordan elimination for a x = b.
LinearSolution solve_linear(Matrix a, std::vector<Rational> b);

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

/// maximize c.x subject to a_i.x (sense_i) b_i for every row, x >= 0.
struct LinearProgram {
  Matrix a;
  std::vector<Sense> sense;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex on a dense exact tableau. Bland's rule picks both
/// the entering and the leaving variable, so the method terminates.
/// Throws InputError on ragged input.
LpResult maximize(const LinearProgram& lp);

}  // namespace contingent

#endif  // CONTINGENT_SIMPLEX_HPP
