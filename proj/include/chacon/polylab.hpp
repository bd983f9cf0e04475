#pragma once

// Limit polynomials built from rho_m and the elementary transforms applied to
// them: shift reduction, integer scaling, reciprocity, affine substitution and
// Eisenstein witnesses.

#include <cstdint>
#include <optional>
#include <vector>

#include "chacon/cocycle.hpp"
#include "chacon/poly.hpp"

namespace chacon::polylab {

/// sum_k rho(k) z^k. The support must be nonempty and nonnegative.
RatPoly poly_from_dist(const cocycle::RationalDist& d);

struct Tilde {
  RatPoly tilde;       // tilde(0) != 0
  unsigned shift = 0;  // p(z) = z^shift * tilde(z)
};

Tilde reduce_tilde(const RatPoly& p);

/// Result of scaling a reduced polynomial by 2 * 3^|m|_3. Non-integrality is
/// reported, not thrown: it would falsify the integrality conjecture.
struct IntegerScaling {
  mpz_class scale;
  RatPoly scaled;
  bool integral = false;
  IntPoly poly;           // valid when integral
  mpz_class coeff_gcd;    // valid when integral
};

IntegerScaling to_integer_poly(const RatPoly& tilde, std::uint64_t m);

/// a_k == a_{d-k} for all k. Rejects input with a vanishing constant term.
bool is_self_reciprocal(const RatPoly& p);
bool is_self_reciprocal(const IntPoly& p);

/// p(a + b*w). b must be nonzero.
RatPoly substitute_linear(const RatPoly& p, const mpq_class& a, const mpq_class& b);

/// Smallest prime q <= prime_limit with q | a_j (j < n), q not dividing a_n, q^2 not dividing a_0.
std::optional<unsigned long> eisenstein_witness(const IntPoly& p, unsigned long prime_limit = 10000);

/// Primes up to limit, ascending.
const std::vector<unsigned long>& small_primes(unsigned long limit = 10000);

/// rho_m together with its reduced polynomial.
struct LimitPolynomial {
  std::uint64_t m = 0;
  cocycle::RationalDist rho;
  RatPoly tilde;
  unsigned shift = 0;

  int degree() const { return tilde.degree(); }
  /// Primitive integer multiple of tilde with positive leading coefficient.
  IntPoly primitive() const { return primitive_part(tilde); }
};

LimitPolynomial limit_polynomial(std::uint64_t m, unsigned jobs = 1);

/// limit_polynomial(m) for m in [lo, hi], index order, computed on `jobs` threads.
std::vector<LimitPolynomial> limit_polynomials(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

}  // namespace chacon::polylab
