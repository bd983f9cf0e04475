#pragma once

// Dual polynomials: the image of a reduced polynomial under a Moebius change of
// variable z = (alpha*w + beta) / (gamma*w + delta) with Gaussian-integer entries.

#include <optional>
#include <string>
#include <vector>

#include "chacon/poly.hpp"
#include "chacon/roots.hpp"

namespace chacon::polylab {

/// Orientation conventions for the real-line-to-circle map.
enum class DualConvention {
  Kappa1,             // z = i(w-1)/(w+1)
  Kappa1Neg,          // z = -i(w-1)/(w+1)
  Kappa1Inverse,      // z = (i+w)/(i-w)
  Kappa1InverseNeg,   // z = -(i+w)/(i-w)
  Kappa1Rotated,      // z = kappa1(i w) = (i w - 1)/(w - i)
  Kappa1RotatedNeg,   // z = kappa1(-i w) = (i w + 1)/(w + i)
};

const std::vector<DualConvention>& all_dual_conventions();
std::string to_string(DualConvention c);
std::optional<DualConvention> parse_dual_convention(const std::string& name);

struct Mobius {
  GaussRational alpha, beta, gamma, delta;
};

Mobius mobius_of(DualConvention c);

struct DualPolynomial {
  DualConvention convention = DualConvention::Kappa1;
  /// (gamma*w + delta)^d * p((alpha*w + beta)/(gamma*w + delta)), degree d - degree_drop.
  GaussRatPoly cleared;
  /// cleared = scalar * normalized.
  GaussRational scalar;
  /// Leading coefficient 1.
  GaussRatPoly normalized;
  /// Multiplicity of alpha/gamma (the image of w = infinity) as a root of p.
  unsigned degree_drop = 0;
};

DualPolynomial mobius_dual(const RatPoly& tilde, DualConvention convention);

/// The c with a == c * b, if a and b are proportional (b nonzero).
std::optional<GaussRational> proportionality(const GaussRatPoly& a, const GaussRatPoly& b);

/// Integer coefficient vector as a Gaussian-rational polynomial.
GaussRatPoly gauss_poly(const std::vector<long>& coeffs);

/// Coefficients symmetric under k -> d-k.
bool is_self_reciprocal(const GaussRatPoly& p);

/// Image of a real root under the inverse Moebius map.
struct RootImage {
  bool at_infinity = false;  // the root is sent to w = infinity
  bool abs_one = false;      // |w| == 1, certified exactly
  bool abs_one_identity = false;  // |w| == 1 holds for every real preimage (symbolic certificate)
  int re_sign = 0;           // sign of Re w
  double re_approx = 0.0;
  double im_approx = 0.0;
};

RootImage mobius_root_image(RootBox& box, DualConvention convention);

}  // namespace chacon::polylab
