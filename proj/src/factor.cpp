#include "chacon/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "chacon/polylab.hpp"

namespace chacon::polylab {

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

IntPoly Factorization::expand() const {
  RatPoly acc = RatPoly::constant(unit);
  for (const auto& [f, e] : factors)
    for (unsigned i = 0; i < e; ++i) acc = acc * to_rat(f);
  return to_int(acc);
}

unsigned Factorization::count() const {
  unsigned n = 0;
  for (const auto& [f, e] : factors) n += e;
  return n;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (sgn(n) == 0) throw std::invalid_argument("positive_divisors: zero has no finite divisor set");
  mpz_class a = abs(n);
  if (!a.fits_ulong_p()) throw std::domain_error("positive_divisors: value too large for trial division");
  std::uint64_t rest = a.get_ui();
  std::vector<std::pair<std::uint64_t, unsigned>> primes;
  for (std::uint64_t q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
    if (rest % q) continue;
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    primes.emplace_back(q, e);
  }
  if (rest > 1) primes.emplace_back(rest, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : primes) {
    const std::size_t base = divs.size();
    mpz_class power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= static_cast<unsigned long>(q);
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---------------------------------------------------------------------------
// Distinct-degree factorization modulo a small prime, used only to prune the
// degrees the integer search has to visit.

namespace {

using ModPoly = std::vector<std::uint64_t>;

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  b %= q;
  for (; e; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t q) {
  const std::uint64_t inv = mod_pow(b.back(), q - 2, q);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % q;
    const std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + q - f * b[j] % q) % q;
    mod_trim(a);
  }
  return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, std::uint64_t q) {
  const std::uint64_t inv = mod_pow(b.back(), q - 2, q);
  ModPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % q;
    const std::size_t off = a.size() - b.size();
    quot[off] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + q - f * b[j] % q) % q;
    mod_trim(a);
  }
  return quot;
}

ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  mod_trim(out);
  return mod_rem(out, f, q);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t q) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly reduce_mod(const IntPoly& p, std::uint64_t q) {
  ModPoly out;
  for (const auto& c : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), q);
    out.push_back(r.get_ui());
  }
  mod_trim(out);
  return out;
}

// Degrees of the irreducible factors of f mod q; empty if q is unsuitable
// (divides the leading coefficient or f is not square-free mod q).
std::vector<int> mod_degree_pattern(const IntPoly& p, std::uint64_t q) {
  ModPoly f = reduce_mod(p, q);
  if (static_cast<int>(f.size()) - 1 != p.degree()) return {};
  ModPoly df;
  for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * (k % q) % q);
  mod_trim(df);
  if (df.empty() || mod_gcd(f, df, q).size() != 1) return {};

  std::vector<int> pattern;
  ModPoly h{0, 1};  // z
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    // h <- h^q mod f
    ModPoly base = h, acc{1};
    for (std::uint64_t e = q; e; e >>= 1, base = mod_mulmod(base, base, f, q))
      if (e & 1) acc = mod_mulmod(acc, base, f, q);
    h = acc;
    ModPoly hz = h;
    if (hz.size() < 2) hz.resize(2, 0);
    hz[1] = (hz[1] + q - 1) % q;
    mod_trim(hz);
    ModPoly g = mod_gcd(f, hz, q);
    const int gd = static_cast<int>(g.size()) - 1;
    if (gd > 0) {
      for (int i = 0; i < gd / d; ++i) pattern.push_back(d);
      f = mod_div(f, g, q);
      h = mod_rem(h, f, q);
    }
  }
  if (f.size() > 1) pattern.push_back(static_cast<int>(f.size()) - 1);
  return pattern;
}

}  // namespace

std::set<int> admissible_factor_degrees(const IntPoly& p) {
  const int n = p.degree();
  std::set<int> allowed;
  for (int d = 0; d <= n; ++d) allowed.insert(d);
  int used = 0;
  for (unsigned long q : small_primes(200)) {
    if (q == 2) continue;
    const auto pattern = mod_degree_pattern(p, q);
    if (pattern.empty()) continue;
    std::set<int> sums{0};
    for (int d : pattern) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = std::move(next);
    }
    std::set<int> meet;
    std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                          std::inserter(meet, meet.begin()));
    allowed = std::move(meet);
    if (++used == 8 || allowed.size() <= 2) break;
  }
  return allowed;
}

// ---------------------------------------------------------------------------

namespace {

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Linear factors q*z - r for the rational roots r/q of a primitive square-free f.
std::vector<IntPoly> rational_root_factors(const IntPoly& f) {
  std::vector<IntPoly> out;
  const auto& c = f.coeffs();
  if (sgn(c.front()) == 0) return out;
  const auto nums = positive_divisors(c.front());
  const auto dens = positive_divisors(c.back());
  const int n = f.degree();
  for (const auto& q : dens) {
    for (const auto& r0 : nums) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), r0.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {-1, 1}) {
        const mpz_class r = sign * r0;
        // q^n f(r/q) = sum a_i r^i q^(n-i)
        mpz_class acc = 0, rp = 1;
        std::vector<mpz_class> qpow(n + 1, 1);
        for (int i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
        for (int i = 0; i <= n; ++i, rp *= r) acc += c[i] * rp * qpow[n - i];
        if (sgn(acc) == 0) out.push_back(primitive_part(IntPoly{mpz_class(-r), q}));
      }
    }
  }
  return out;
}

// Searches a factor of degree exactly k of the primitive square-free f, which
// has no rational roots. Interpolates through every admissible tuple of
// divisors of f at k+1 integer points.
std::optional<IntPoly> kronecker_factor(const IntPoly& f, int k) {
  struct Point {
    long x;
    mpz_class value;
    std::size_t divisor_count;
  };
  std::vector<Point> pool;
  std::vector<long> candidates{0};
  for (long t = 1; t <= 64; ++t) {
    candidates.push_back(t);
    candidates.push_back(-t);
  }
  for (long x : candidates) {
    if (pool.size() >= static_cast<std::size_t>(k + 1) + 6) break;
    const mpz_class v = eval_int(f, mpz_class(x));
    if (sgn(v) == 0) continue;
    pool.push_back({x, v, positive_divisors(v).size()});
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Point& a, const Point& b) { return a.divisor_count < b.divisor_count; });
  const std::vector<Point> nodes(pool.begin(), pool.begin() + k + 1);
  const std::vector<Point> checks(pool.begin() + k + 1, pool.end());

  // Lagrange basis over Z: g = (1/D) sum v_i (D/D_i) N_i(z), N_i = prod_{j != i}(z - x_j).
  std::vector<IntPoly> basis;
  std::vector<mpz_class> weight;
  mpz_class big_d = 1;
  std::vector<mpz_class> denoms;
  for (int i = 0; i <= k; ++i) {
    IntPoly num{1};
    mpz_class den = 1;
    for (int j = 0; j <= k; ++j) {
      if (j == i) continue;
      num = num * IntPoly{mpz_class(-nodes[j].x), mpz_class(1)};
      den *= nodes[i].x - nodes[j].x;
    }
    basis.push_back(num);
    denoms.push_back(den);
    mpz_lcm(big_d.get_mpz_t(), big_d.get_mpz_t(), den.get_mpz_t());
  }
  for (int i = 0; i <= k; ++i) weight.push_back(mpz_class(big_d / denoms[i]));

  std::vector<std::vector<mpz_class>> choices(k + 1);
  for (int i = 0; i <= k; ++i) {
    for (const auto& d : positive_divisors(nodes[i].value)) {
      choices[i].push_back(d);
      if (i > 0) choices[i].push_back(-d);  // g and -g are the same factor
    }
  }

  const mpz_class& f_lead = f.leading();
  std::vector<std::size_t> idx(k + 1, 0);
  for (;;) {
    // leading coefficient first: cheap rejection
    mpz_class lead = 0;
    for (int i = 0; i <= k; ++i) lead += choices[i][idx[i]] * weight[i];
    if (sgn(lead) != 0 && mpz_divisible_p(lead.get_mpz_t(), big_d.get_mpz_t())) {
      const mpz_class lc = lead / big_d;
      if (mpz_divisible_p(f_lead.get_mpz_t(), lc.get_mpz_t())) {
        std::vector<mpz_class> coeffs(k + 1, 0);
        for (int i = 0; i <= k; ++i) {
          const mpz_class s = choices[i][idx[i]] * weight[i];
          for (int e = 0; e <= k; ++e) coeffs[e] += s * basis[i].coeffs()[e];
        }
        bool integral = true;
        for (auto& c : coeffs) {
          if (!mpz_divisible_p(c.get_mpz_t(), big_d.get_mpz_t())) {
            integral = false;
            break;
          }
          c /= big_d;
        }
        if (integral) {
          const IntPoly g(std::move(coeffs));
          bool ok = true;
          for (const auto& pt : checks) {
            const mpz_class gv = eval_int(g, mpz_class(pt.x));
            if (sgn(gv) == 0 || !mpz_divisible_p(pt.value.get_mpz_t(), gv.get_mpz_t())) {
              ok = false;
              break;
            }
          }
          if (ok && divides(g, f)) return primitive_part(g);
        }
      }
    }
    int pos = 0;
    while (pos <= k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos > k) break;
  }
  return std::nullopt;
}

void factor_squarefree(const IntPoly& f, std::vector<IntPoly>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(primitive_part(f));
    return;
  }
  IntPoly rest = f;
  if (sgn(rest.coeffs().front()) == 0) {
    out.push_back(int_poly({0, 1}));
    divides(int_poly({0, 1}), rest, &rest);
  }
  for (const auto& lin : rational_root_factors(rest)) {
    out.push_back(lin);
    divides(lin, rest, &rest);
  }
  rest = primitive_part(rest);
  if (rest.degree() <= 0) return;
  if (rest.degree() == 1) {
    out.push_back(rest);
    return;
  }
  const auto admissible = admissible_factor_degrees(rest);
  for (int k = 2; 2 * k <= rest.degree(); ++k) {
    if (!admissible.contains(k)) continue;
    if (auto g = kronecker_factor(rest, k)) {
      out.push_back(*g);
      IntPoly quotient;
      divides(*g, rest, &quotient);
      factor_squarefree(primitive_part(quotient), out);
      return;
    }
  }
  out.push_back(rest);
}

}  // namespace

Factorization factor_over_Q(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    throw std::invalid_argument("factor_over_Q: degree " + std::to_string(p.degree()) + " exceeds the cap of " +
                                std::to_string(kMaxFactorDegree));
  Factorization result;
  if (p.degree() == 0) {
    result.unit = mpq_class(p.leading());
    return result;
  }
  const IntPoly pp = primitive_part(p);
  const auto parts = squarefree_decomposition(pp);
  std::vector<std::pair<IntPoly, unsigned>> all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<IntPoly> irreducible;
    factor_squarefree(parts[i], irreducible);
    for (auto& g : irreducible) all.emplace_back(std::move(g), static_cast<unsigned>(i + 1));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  result.factors = std::move(all);

  mpz_class lead_product = 1;
  for (const auto& [f, e] : result.factors)
    for (unsigned i = 0; i < e; ++i) lead_product *= f.leading();
  result.unit = mpq_class(p.leading(), lead_product);
  result.unit.canonicalize();
  if (!(result.expand() == p)) throw std::logic_error("factor_over_Q: factorization does not reproduce input");
  return result;
}

}  // namespace chacon::polylab
