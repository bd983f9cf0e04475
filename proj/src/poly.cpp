#include "chacon/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace chacon::polylab {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("GaussRational: division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussRational::str() const {
  if (sgn(im) == 0) return rat_str(re);
  std::string imag = rat_str(mpq_class(abs(im)));
  if (imag == "1") imag.clear();
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag + "i";
  return "(" + rat_str(re) + (sgn(im) < 0 ? " - " : " + ") + imag + "i)";
}

// ---------------------------------------------------------------------------

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> quot(a.degree() - db + 1, T(0));
  const T& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    T q = rem[k + db] / lead;
    if (detail::is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template std::pair<RatPoly, RatPoly> divmod(const RatPoly&, const RatPoly&);
template std::pair<GaussRatPoly, GaussRatPoly> divmod(const GaussRatPoly&, const GaussRatPoly&);

RatPoly to_rat(const IntPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw std::domain_error("to_int: non-integral coefficient " + rat_str(x));
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& x : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<mpz_class> c;
  for (const auto& x : p.coeffs()) c.push_back(mpz_class(x / g));
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& x : p.coeffs()) c.push_back(mpz_class(x.get_num() * (l / x.get_den())));
  return primitive_part(IntPoly(std::move(c)));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    // keep coefficients small: any nonzero scalar multiple is an equally good remainder
    if (!r.is_zero()) r = to_rat(primitive_part(r));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * mpq_class(1 / x.leading());
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) { return primitive_part(gcd(to_rat(a), to_rat(b))); }

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.is_zero()) return a.is_zero();
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero()) return false;
  for (const auto& x : q.coeffs())
    if (x.get_den() != 1) return false;
  if (quotient) *quotient = to_int(q);
  return true;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<IntPoly> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q, each factor made primitive.
  const RatPoly f = to_rat(p);
  const RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(df, a).first;
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    out.push_back(primitive_part(g));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly acc{1};
  for (const auto& s : squarefree_decomposition(p)) acc = acc * s;
  return primitive_part(acc);
}

// ---------------------------------------------------------------------------

namespace {

template <class T, class Fmt>
std::string render(const Poly<T>& p, const std::string& var, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    if (detail::is_zero(c)) continue;
    std::string term = fmt(c);
    bool negative = !term.empty() && term[0] == '-';
    if (negative) term.erase(0, 1);
    if (k > 0 && term == "1") term.clear();
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string piece = term.empty() ? mono : (mono.empty() ? term : term + "*" + mono);
    if (out.empty())
      out = (negative ? "-" : "") + piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) {
  return render(p, var, [](const mpz_class& c) { return c.get_str(); });
}

std::string to_string(const RatPoly& p, const std::string& var) {
  return render(p, var, [](const mpq_class& c) { return rat_str(c); });
}

std::string to_string(const GaussRatPoly& p, const std::string& var) {
  return render(p, var, [](const GaussRational& c) { return c.str(); });
}

std::string rat_str(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

// Exact value of a decimal literal such as "0.001", "-2.5" or "1e-6".
mpq_class parse_decimal(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("two decimal points");
      seen_dot = true;
    } else {
      digits.push_back(ch);
      if (seen_dot && ch >= '0' && ch <= '9') ++frac;
    }
  }
  exponent -= frac;
  mpz_class num(digits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.find_first_of(".eE") != std::string::npos)
        q = parse_decimal(text);
      else
        q = mpq_class(mpz_class(text));
    } else {
      const mpz_class den(text.substr(slash + 1));
      if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(mpz_class(text.substr(0, slash)), den);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  }
  q.canonicalize();
  return q;
}

IntPoly int_poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

RatPoly rat_poly(std::initializer_list<long> coeffs, long denominator) {
  std::vector<mpq_class> c;
  for (long x : coeffs) {
    mpq_class q(x, denominator);
    q.canonicalize();
    c.push_back(q);
  }
  return RatPoly(std::move(c));
}

}  // namespace chacon::polylab
