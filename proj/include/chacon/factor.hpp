#pragma once

// Complete factorization over Q of small-degree integer polynomials.

#include <set>
#include <utility>
#include <vector>

#include "chacon/poly.hpp"

namespace chacon::polylab {

/// Largest degree factor_over_Q accepts.
inline constexpr int kMaxFactorDegree = 12;

struct Factorization {
  mpq_class unit;
  /// Primitive irreducible factors with positive leading coefficient, sorted by
  /// degree, then by ascending-power coefficient vector.
  std::vector<std::pair<IntPoly, unsigned>> factors;

  /// unit * prod f^e.
  IntPoly expand() const;
  /// Number of irreducible factors counted with multiplicity.
  unsigned count() const;
  bool is_irreducible() const { return count() == 1; }
};

/// Canonical factor order: degree first, then coefficients compared lexicographically from z^0 up.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// Throws std::invalid_argument for the zero polynomial or degree above kMaxFactorDegree.
Factorization factor_over_Q(const IntPoly& p);

/// Degrees d for which a factor of degree d over Q is not excluded by the
/// factorization patterns of p modulo a few small primes. p must be square-free.
std::set<int> admissible_factor_degrees(const IntPoly& p);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace chacon::polylab
