#include "chacon/mobius.hpp"

#include <complex>
#include <stdexcept>

namespace chacon::polylab {

const std::vector<DualConvention>& all_dual_conventions() {
  static const std::vector<DualConvention> all{
      DualConvention::Kappa1,        DualConvention::Kappa1Neg,     DualConvention::Kappa1Inverse,
      DualConvention::Kappa1InverseNeg, DualConvention::Kappa1Rotated, DualConvention::Kappa1RotatedNeg};
  return all;
}

std::string to_string(DualConvention c) {
  switch (c) {
    case DualConvention::Kappa1: return "kappa1";
    case DualConvention::Kappa1Neg: return "kappa1_neg";
    case DualConvention::Kappa1Inverse: return "kappa1_inverse";
    case DualConvention::Kappa1InverseNeg: return "kappa1_inverse_neg";
    case DualConvention::Kappa1Rotated: return "kappa1_rotated";
    case DualConvention::Kappa1RotatedNeg: return "kappa1_rotated_neg";
  }
  return "?";
}

std::optional<DualConvention> parse_dual_convention(const std::string& name) {
  for (auto c : all_dual_conventions())
    if (to_string(c) == name) return c;
  return std::nullopt;
}

Mobius mobius_of(DualConvention c) {
  const GaussRational i = GaussRational::i();
  const GaussRational one(1);
  switch (c) {
    case DualConvention::Kappa1: return {i, -i, one, one};
    case DualConvention::Kappa1Neg: return {-i, i, one, one};
    case DualConvention::Kappa1Inverse: return {one, i, -one, i};
    case DualConvention::Kappa1InverseNeg: return {-one, -i, -one, i};
    case DualConvention::Kappa1Rotated: return {i, -one, one, -i};
    case DualConvention::Kappa1RotatedNeg: return {i, one, one, i};
  }
  throw std::logic_error("mobius_of: unknown convention");
}

DualPolynomial mobius_dual(const RatPoly& tilde, DualConvention convention) {
  if (tilde.is_zero()) throw std::invalid_argument("mobius_dual: zero polynomial");
  const Mobius mb = mobius_of(convention);
  const GaussRatPoly num{mb.beta, mb.alpha};
  const GaussRatPoly den{mb.delta, mb.gamma};
  const int d = tilde.degree();

  std::vector<GaussRatPoly> num_pow{GaussRatPoly{GaussRational(1)}}, den_pow{GaussRatPoly{GaussRational(1)}};
  for (int k = 1; k <= d; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  GaussRatPoly cleared;
  for (int k = 0; k <= d; ++k) {
    const mpq_class& a = tilde.coeffs()[k];
    if (sgn(a) == 0) continue;
    cleared += num_pow[k] * den_pow[d - k] * GaussRational(a);
  }

  DualPolynomial out;
  out.convention = convention;
  out.degree_drop = static_cast<unsigned>(d - cleared.degree());
  out.scalar = cleared.leading();
  out.normalized = cleared * (GaussRational(1) / out.scalar);
  out.cleared = std::move(cleared);
  return out;
}

std::optional<GaussRational> proportionality(const GaussRatPoly& a, const GaussRatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("proportionality: zero reference polynomial");
  if (a.degree() != b.degree()) return std::nullopt;
  const GaussRational c = a.leading() / b.leading();
  if (b * c == a) return c;
  return std::nullopt;
}

GaussRatPoly gauss_poly(const std::vector<long>& coeffs) {
  std::vector<GaussRational> c;
  for (long x : coeffs) c.emplace_back(x);
  return GaussRatPoly(std::move(c));
}

bool is_self_reciprocal(const GaussRatPoly& p) {
  if (p.is_zero()) return false;
  const auto& c = p.coeffs();
  for (std::size_t k = 0, j = c.size() - 1; k < j; ++k, --j)
    if (!(c[k] == c[j])) return false;
  return true;
}

RootImage mobius_root_image(RootBox& box, DualConvention convention) {
  const Mobius mb = mobius_of(convention);
  const auto& [al, be, ga, de] = mb;
  // w = (de*r - be) / (al - ga*r) for real r
  const RatPoly re_num{-mpq_class((be * al.conj()).re), mpq_class((de * al.conj() + be * ga.conj()).re),
                       -mpq_class((de * ga.conj()).re)};
  const RatPoly denom{al.norm(), mpq_class(-2 * (al * ga.conj()).re), ga.norm()};
  const RatPoly top{be.norm(), mpq_class(-2 * (de * be.conj()).re), de.norm()};
  const RatPoly circle = top - denom;

  RootImage img;
  if (sign_at_root(box, denom) == 0) {
    img.at_infinity = true;
    return img;
  }
  img.abs_one_identity = circle.is_zero();
  img.abs_one = img.abs_one_identity || sign_at_root(box, circle) == 0;
  img.re_sign = sign_at_root(box, re_num);

  const double r = box.midpoint();
  auto to_c = [](const GaussRational& g) { return std::complex<double>(g.re.get_d(), g.im.get_d()); };
  const std::complex<double> w = (to_c(de) * r - to_c(be)) / (to_c(al) - to_c(ga) * r);
  img.re_approx = w.real();
  img.im_approx = w.imag();
  return img;
}

}  // namespace chacon::polylab
