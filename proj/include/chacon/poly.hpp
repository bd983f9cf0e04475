#pragma once

// Dense univariate polynomials over exact coefficient rings: integers (mpz),
// rationals (mpq) and Gaussian rationals.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chacon::polylab {

/// re + i*im with rational parts.
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() : re(0), im(0) {}
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r), im(0) {}

  static GaussRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }

  std::string str() const;
};

namespace detail {
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
}  // namespace detail

/// coeffs()[k] is the coefficient of z^k; trailing zeros are never stored.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }
  static Poly monomial(T value, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(value);
    return Poly(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of z^k, zero past the degree.
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const { return c_.back(); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x) + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(T(c_[k] * T(static_cast<long>(k))));
    return Poly(std::move(d));
  }

  /// z^deg * p(1/z).
  Poly reversed() const { return Poly(std::vector<T>(c_.rbegin(), c_.rend())); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;
using GaussRatPoly = Poly<GaussRational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b);

RatPoly to_rat(const IntPoly& p);
/// Throws std::domain_error when a coefficient is not an integer.
IntPoly to_int(const RatPoly& p);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& p);
/// p / content(p), sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);
/// Clears denominators and returns the primitive integer polynomial with positive leading coefficient.
IntPoly primitive_part(const RatPoly& p);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Primitive gcd over Z[z] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// a / b when b divides a exactly in Z[z].
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

/// Yun decomposition of a primitive polynomial: p = lc * prod_i s_i^i with each
/// s_i square-free and pairwise coprime. Entry i-1 holds s_i (constant 1 when absent).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Square-free part (product of the distinct irreducible factors), primitive.
IntPoly squarefree_part(const IntPoly& p);

/// Rendering such as "3 + 5*z + z^2", ascending powers.
std::string to_string(const IntPoly& p, const std::string& var = "z");
std::string to_string(const RatPoly& p, const std::string& var = "z");
std::string to_string(const GaussRatPoly& p, const std::string& var = "w");

/// Exact rational "p/q" (or "p" for integers).
std::string rat_str(const mpq_class& q);
/// Parses "p/q" or "p".
mpq_class parse_rational(const std::string& text);

/// Integer coefficient vector in ascending order.
IntPoly int_poly(std::initializer_list<long> coeffs);
/// Rational polynomial coeffs / denominator.
RatPoly rat_poly(std::initializer_list<long> coeffs, long denominator = 1);

}  // namespace chacon::polylab
