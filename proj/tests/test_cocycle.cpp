#include <doctest.h>

#include <cmath>
#include <map>

#include "chacon/cocycle.hpp"
#include "chacon/ternary.hpp"

using namespace chacon;
using cocycle::CocycleValue;
using cocycle::RationalDist;

namespace {

RationalDist dist(std::initializer_list<std::pair<const std::int64_t, mpq_class>> entries) {
  return RationalDist(std::map<std::int64_t, mpq_class>(entries));
}

// Independent enumeration: every y mod 3^depth, digits read directly off (y + j) mod 3^depth.
RationalDist brute_force_rho(std::uint64_t m, unsigned depth) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < depth; ++i) n *= 3;
  std::map<std::int64_t, mpq_class> mass;
  const mpq_class w(1, n);
  for (std::uint64_t y = 0; y < n; ++y) {
    std::int64_t base = 0;
    bool deep = false;
    for (std::uint64_t j = 0; j < m; ++j) {
      std::uint64_t r = (y + j) % n;
      if (r == 0) {
        deep = true;
        continue;
      }
      while (r % 3 == 0) r /= 3;
      base += (r % 3 == 2) ? 1 : 0;
    }
    if (deep) {
      mass[base] += w / 2;
      mass[base + 1] += w / 2;
    } else {
      mass[base] += w;
    }
  }
  return RationalDist(mass);
}

}  // namespace

TEST_CASE("phi reads the first nonzero digit") {
  CHECK(cocycle::phi(ternary::Cylinder(2, 1)) == CocycleValue::Zero);
  CHECK(cocycle::phi(ternary::Cylinder(2, 6)) == CocycleValue::One);
  CHECK(cocycle::phi(ternary::Cylinder(3, 0)) == CocycleValue::Deep);
}

TEST_CASE("phi0 reads the first digit other than 2") {
  CHECK(cocycle::phi0(ternary::Cylinder(3, 8)) == CocycleValue::Zero);  // digits 2,2,0
  CHECK(cocycle::phi0(ternary::Cylinder(1, 1)) == CocycleValue::One);
  CHECK(cocycle::phi0(ternary::Cylinder(2, 8)) == CocycleValue::Deep);
}

TEST_CASE("exact_rho small indexes") {
  CHECK(cocycle::exact_rho(1) == dist({{0, mpq_class(1, 2)}, {1, mpq_class(1, 2)}}));
  CHECK(cocycle::exact_rho(2) == dist({{0, mpq_class(1, 6)}, {1, mpq_class(2, 3)}, {2, mpq_class(1, 6)}}));
  CHECK(cocycle::exact_rho(3) == dist({{1, mpq_class(1, 2)}, {2, mpq_class(1, 2)}}));
  CHECK(cocycle::exact_rho(4) == dist({{1, mpq_class(2, 9)}, {2, mpq_class(5, 9)}, {3, mpq_class(2, 9)}}));
  CHECK_THROWS_AS(cocycle::exact_rho(0), std::invalid_argument);
}

TEST_CASE("exact_rho is independent of the truncation depth") {
  CHECK(cocycle::exact_rho_at_depth(2, 3) == cocycle::exact_rho(2));
  CHECK(cocycle::exact_rho_at_depth(1, 5) == cocycle::exact_rho(1));
  const auto r13 = cocycle::exact_rho_at_depth(13, 4);
  CHECK(r13 == cocycle::exact_rho(13));
  const auto aligned = r13.translated(1 - r13.min_support());
  CHECK(aligned == dist({{1, mpq_class(5, 54)}, {2, mpq_class(11, 27)}, {3, mpq_class(11, 27)},
                         {4, mpq_class(5, 54)}}));
  for (std::uint64_t m = 1; m <= 300; ++m) {
    const unsigned L = cocycle::min_depth(m);
    REQUIRE(cocycle::exact_rho_at_depth(m, L + 1, 4) == cocycle::exact_rho(m));
  }
  CHECK_THROWS_AS(cocycle::exact_rho_at_depth(10, 2), std::invalid_argument);
}

TEST_CASE("exact_rho agrees with direct enumeration at one extra digit") {
  for (std::uint64_t m = 1; m <= 120; ++m) {
    const auto expected = brute_force_rho(m, cocycle::min_depth(m) + 1);
    REQUIRE(cocycle::exact_rho(m) == expected);
  }
}

TEST_CASE("exact_rho is normalized and the two cocycles agree") {
  for (std::uint64_t m = 1; m <= 2000; ++m) {
    const auto r = cocycle::exact_rho(m);
    REQUIRE(r.total() == 1);
    REQUIRE(cocycle::exact_rho_at_depth(m, cocycle::min_depth(m), 1, cocycle::Cocycle::Phi0) == r);
  }
}

TEST_CASE("rho_stats") {
  auto s1 = cocycle::rho_stats(cocycle::exact_rho(1));
  CHECK(s1.mean == mpq_class(1, 2));
  CHECK(s1.variance == mpq_class(1, 4));
  auto s2 = cocycle::rho_stats(cocycle::exact_rho(2));
  CHECK(s2.mean == 1);
  CHECK(s2.variance == mpq_class(1, 3));
  auto s4 = cocycle::rho_stats(cocycle::exact_rho(4));
  CHECK(s4.mean == 2);
  CHECK(s4.variance == mpq_class(4, 9));
}

TEST_CASE("RationalDist helpers") {
  const auto a = dist({{0, mpq_class(1, 2)}, {1, mpq_class(1, 2)}});
  CHECK(a.translation_to(a.translated(3)) == 3);
  CHECK_FALSE(a.translation_to(cocycle::exact_rho(2)));
  CHECK(cocycle::exact_rho(4).common_denominator() == 9);
  CHECK_THROWS(dist({{0, mpq_class(-1)}}));
}

TEST_CASE("Monte-Carlo estimates match the exact distribution") {
  struct Case {
    std::uint64_t m, seed;
  };
  for (const Case c : {Case{1, 1}, Case{2, 1}, Case{5, 7}}) {
    const auto est = cocycle::mc_rho(c.m, 1000000, c.seed, 40, 4);
    const auto exact = cocycle::exact_rho(c.m);
    for (const auto& bin : est.bins) {
      const double p = exact.mass(bin.k).get_d();
      const double sigma = std::sqrt(p * (1 - p) / 1e6);
      if (p == 0) {
        CHECK(bin.count == 0);
      } else {
        CHECK(std::fabs(bin.frequency - p) <= 3 * sigma);
      }
    }
  }
}

TEST_CASE("Monte-Carlo output does not depend on the worker count") {
  const auto a = cocycle::mc_rho(13, 300000, 5, 40, 1);
  const auto b = cocycle::mc_rho(13, 300000, 5, 40, 8);
  REQUIRE(a.bins.size() == b.bins.size());
  for (std::size_t i = 0; i < a.bins.size(); ++i) CHECK(a.bins[i].count == b.bins[i].count);
}

TEST_CASE("Monte-Carlo argument checks") {
  CHECK_THROWS_AS(cocycle::mc_rho(1, 0, 1, 40), std::invalid_argument);
  CHECK_THROWS_AS(cocycle::mc_rho(0, 10, 1, 40), std::invalid_argument);
  CHECK_THROWS_AS(cocycle::mc_rho(122, 10, 1, 3), std::invalid_argument);
}
