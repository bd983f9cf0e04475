#include "chacon/polylab.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "chacon/parallel.hpp"
#include "chacon/ternary.hpp"

namespace chacon::polylab {

RatPoly poly_from_dist(const cocycle::RationalDist& d) {
  if (d.empty()) throw std::invalid_argument("poly_from_dist: empty distribution");
  if (d.min_support() < 0) throw std::invalid_argument("poly_from_dist: negative support");
  std::vector<mpq_class> c(static_cast<std::size_t>(d.max_support()) + 1, mpq_class(0));
  for (const auto& [k, w] : d.masses()) c[static_cast<std::size_t>(k)] = w;
  return RatPoly(std::move(c));
}

Tilde reduce_tilde(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reduce_tilde: zero polynomial");
  unsigned shift = 0;
  while (sgn(p.coeffs()[shift]) == 0) ++shift;
  return {RatPoly(std::vector<mpq_class>(p.coeffs().begin() + shift, p.coeffs().end())), shift};
}

IntegerScaling to_integer_poly(const RatPoly& tilde, std::uint64_t m) {
  IntegerScaling out;
  out.scale = mpz_class(2) * mpz_class(static_cast<unsigned long>(ternary::pow3(ternary::length3(m))));
  out.scaled = tilde * mpq_class(out.scale);
  out.integral = true;
  for (const auto& c : out.scaled.coeffs())
    if (c.get_den() != 1) out.integral = false;
  if (out.integral) {
    out.poly = to_int(out.scaled);
    out.coeff_gcd = content(out.poly);
  }
  return out;
}

namespace {

template <class T>
bool palindromic(const Poly<T>& p) {
  if (p.is_zero()) throw std::invalid_argument("is_self_reciprocal: zero polynomial");
  if (detail::is_zero(p.coeffs().front()))
    throw std::invalid_argument("is_self_reciprocal: constant term vanishes, reduce the polynomial first");
  const auto& c = p.coeffs();
  for (std::size_t k = 0, j = c.size() - 1; k < j; ++k, --j)
    if (!(c[k] == c[j])) return false;
  return true;
}

}  // namespace

bool is_self_reciprocal(const RatPoly& p) { return palindromic(p); }
bool is_self_reciprocal(const IntPoly& p) { return palindromic(p); }

RatPoly substitute_linear(const RatPoly& p, const mpq_class& a, const mpq_class& b) {
  if (sgn(b) == 0) throw std::invalid_argument("substitute_linear: b must be nonzero");
  const RatPoly inner{a, b};
  RatPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * inner + RatPoly::constant(*it);
  return acc;
}

const std::vector<unsigned long>& small_primes(unsigned long limit) {
  static std::mutex mutex;
  static std::map<unsigned long, std::vector<unsigned long>> cache;
  std::lock_guard lock(mutex);
  auto& primes = cache[limit];
  if (primes.empty() && limit >= 2) {
    std::vector<bool> composite(limit + 1, false);
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return primes;
}

std::optional<unsigned long> eisenstein_witness(const IntPoly& p, unsigned long prime_limit) {
  if (p.degree() < 1) return std::nullopt;
  const auto& c = p.coeffs();
  if (sgn(c.front()) == 0) return std::nullopt;
  mpz_class g = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[j].get_mpz_t());
  for (unsigned long q : small_primes(prime_limit)) {
    if (!mpz_divisible_ui_p(g.get_mpz_t(), q)) continue;
    if (mpz_divisible_ui_p(c.back().get_mpz_t(), q)) continue;
    if (mpz_divisible_ui_p(c.front().get_mpz_t(), q * q)) continue;
    return q;
  }
  return std::nullopt;
}

LimitPolynomial limit_polynomial(std::uint64_t m, unsigned jobs) {
  LimitPolynomial lp;
  lp.m = m;
  lp.rho = cocycle::exact_rho(m, jobs);
  auto [tilde, shift] = reduce_tilde(poly_from_dist(lp.rho));
  lp.tilde = std::move(tilde);
  lp.shift = shift;
  return lp;
}

std::vector<LimitPolynomial> limit_polynomials(std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (lo == 0 || hi < lo) throw std::invalid_argument("limit_polynomials: need 1 <= lo <= hi");
  return parallel_map<LimitPolynomial>(hi - lo + 1, jobs,
                                       [&](std::size_t i) { return limit_polynomial(lo + i, 1); });
}

}  // namespace chacon::polylab
