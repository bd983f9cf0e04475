#include <doctest.h>

#include <cmath>
#include <set>

#include "chacon/factor.hpp"
#include "chacon/polylab.hpp"
#include "chacon/roots.hpp"
#include "chacon/ternary.hpp"
#include "fixtures.hpp"

using namespace chacon;
using namespace chacon::polylab;

namespace {

IntPoly from_vec(const std::vector<long>& c) {
  std::vector<mpz_class> z;
  for (long x : c) z.emplace_back(x);
  return IntPoly(z);
}

std::multiset<std::vector<long>> factor_set(const Factorization& f, bool drop_z_plus_1) {
  std::multiset<std::vector<long>> out;
  for (const auto& [p, e] : f.factors) {
    if (drop_z_plus_1 && p == int_poly({1, 1})) continue;
    std::vector<long> c;
    for (const auto& x : p.coeffs()) c.push_back(x.get_si());
    for (unsigned i = 0; i < e; ++i) out.insert(c);
  }
  return out;
}

// Sign changes of p on a fine grid over [lo, hi]; exact integer evaluation at rational points k/den.
int grid_sign_changes(const IntPoly& p, long lo, long hi, long den) {
  const RatPoly q = to_rat(p);
  int changes = 0, last = 0;
  for (long k = lo * den; k <= hi * den; ++k) {
    const int s = sgn(q.eval(mpq_class(k, den)));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("factor_over_Q small cases") {
  const auto f4 = factor_over_Q(int_poly({2, 5, 2}));
  CHECK(factor_set(f4, false) == std::multiset<std::vector<long>>{{1, 2}, {2, 1}});
  const auto f40 = factor_over_Q(int_poly({3, 20, 35, 20, 3}));
  CHECK(factor_set(f40, false) == std::multiset<std::vector<long>>{{1, 5, 3}, {3, 5, 1}});
  CHECK(factor_over_Q(int_poly({1, 4, 1})).is_irreducible());
  const auto sq = factor_over_Q(int_poly({1, 2, 1}));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].second == 2);
  CHECK(factor_over_Q(int_poly({6, 6})).unit == 6);
  CHECK_THROWS_AS(factor_over_Q(IntPoly()), std::invalid_argument);
  CHECK_THROWS_AS(factor_over_Q(IntPoly::monomial(1, 13) + int_poly({1})), std::invalid_argument);
}

TEST_CASE("factorizations reproduce their inputs") {
  for (const auto& lp : limit_polynomials(1, 365, 4)) {
    if (lp.degree() > kMaxFactorDegree) continue;
    const auto p = lp.primitive();
    REQUIRE(factor_over_Q(p).expand() == p);
  }
}

TEST_CASE("factorizations match the printed non-irreducible table") {
  for (const auto& row : fixtures::factor_rows("factorizations.txt")) {
    CAPTURE(row.m);
    const auto lp = limit_polynomial(row.m);
    std::multiset<std::vector<long>> printed(row.factors.begin(), row.factors.end());
    CHECK(factor_set(factor_over_Q(lp.primitive()), true) == printed);
  }
  // Two printed typos: the label of 244 and the prefactor of 80.
  CHECK(ternary::to_config(244).str() == "100001");
  CHECK(limit_polynomial(80).tilde.coeff(0) == mpq_class(20, 81));
}

TEST_CASE("real_root_count") {
  CHECK(real_root_count(int_poly({1, 4, 1})).distinct == 2);
  CHECK(real_root_count(int_poly({1, 4, 1})).with_multiplicity == 2);
  CHECK(real_root_count(int_poly({1, 2, 1})).distinct == 1);
  CHECK(real_root_count(int_poly({1, 2, 1})).with_multiplicity == 2);
  CHECK(real_root_count(int_poly({1, 0, 1})).distinct == 0);
  const auto p122 = to_integer_poly(limit_polynomial(122).tilde, 122).poly;
  CHECK(real_root_count(p122).distinct == 6);
  CHECK(real_root_count(p122).with_multiplicity == 6);
  CHECK(grid_sign_changes(p122, -40, 0, 2000) == 6);
}

TEST_CASE("isolate_real_roots") {
  const mpq_class eps(1, 1000000);
  const auto iso = isolate_real_roots(int_poly({1, 4, 1}), eps);
  REQUIRE(iso.boxes.size() == 2);
  CHECK(iso.all_real);
  const double r0 = -2 - std::sqrt(3.0), r1 = -2 + std::sqrt(3.0);
  CHECK(iso.boxes[0].lo.get_d() <= r0);
  CHECK(iso.boxes[0].hi.get_d() >= r0);
  CHECK(iso.boxes[1].lo.get_d() <= r1);
  CHECK(iso.boxes[1].hi.get_d() >= r1);
  for (const auto& b : iso.boxes) CHECK(b.width() <= eps);
  REQUIRE(iso.reciprocal_pairs_verified.has_value());
  CHECK(*iso.reciprocal_pairs_verified);

  const auto lin = isolate_real_roots(int_poly({1, 1}), eps);
  REQUIRE(lin.boxes.size() == 1);
  CHECK(lin.boxes[0].contains(-1));

  const auto p4 = isolate_real_roots(int_poly({2, 5, 2}), eps);
  REQUIRE(p4.boxes.size() == 2);
  CHECK(p4.boxes[0].lo == -2);
  CHECK(p4.boxes[0].hi == -2);
  CHECK(p4.boxes[1].lo == mpq_class(-1, 2));
  CHECK(p4.boxes[1].hi == mpq_class(-1, 2));
}

TEST_CASE("Sturm counts equal the number of isolating boxes for the reference table") {
  for (const auto& row : fixtures::poly_rows("reduced_polynomials.txt")) {
    const auto p = from_vec(row.numerators);
    CAPTURE(row.m);
    CHECK(static_cast<int>(isolate_real_roots(p, mpq_class(1, 1024)).boxes.size()) ==
          real_root_count(p).distinct);
  }
}

TEST_CASE("sign_at_root") {
  auto iso = isolate_real_roots(int_poly({1, 4, 1}), mpq_class(1, 8));
  CHECK(sign_at_root(iso.boxes[0], rat_poly({1, 1})) == -1);  // -3.73 + 1 < 0
  CHECK(sign_at_root(iso.boxes[1], rat_poly({1, 1})) == 1);
  CHECK(sign_at_root(iso.boxes[1], rat_poly({1, 4, 1})) == 0);
}

TEST_CASE("positive_divisors") {
  CHECK(positive_divisors(12) == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
  CHECK(positive_divisors(-7) == std::vector<mpz_class>{1, 7});
  CHECK_THROWS(positive_divisors(0));
}
