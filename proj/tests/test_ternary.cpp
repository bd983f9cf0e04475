#include <doctest.h>

#include <stdexcept>

#include "chacon/ternary.hpp"

using namespace chacon::ternary;

TEST_CASE("to_config renders base-3 digits most significant first") {
  CHECK(to_config(5).digits == std::vector<Digit>{1, 2});
  CHECK(to_config(91).digits == std::vector<Digit>{1, 0, 1, 0, 1});
  CHECK(to_config(1).digits == std::vector<Digit>{1});
  CHECK(to_config(91).str() == "10101");
  CHECK_THROWS_AS(to_config(0), std::invalid_argument);
}

TEST_CASE("configurations round-trip and respect positional value") {
  for (std::uint64_t m = 1; m <= 100000; ++m) {
    const auto c = to_config(m);
    REQUIRE(c.digits.front() != 0);
    std::uint64_t value = 0;
    for (Digit d : c.digits) value = 3 * value + d;
    REQUIRE(value == m);
    REQUIRE(from_config(c) == m);
  }
  CHECK(from_config(parse_config("11112_3")) == 122);
  CHECK_THROWS(parse_config("1231"));
}

TEST_CASE("reduce3 and length3") {
  CHECK(reduce3(6).core == 2);
  CHECK(reduce3(6).exponent == 1);
  CHECK(reduce3(91).core == 91);
  CHECK(reduce3(91).exponent == 0);
  CHECK(reduce3(27).core == 1);
  CHECK(reduce3(27).exponent == 3);
  CHECK(length3(91) == 5);
  CHECK(length3(6) == 1);
  CHECK(length3(122) == 5);
  for (std::uint64_t m = 1; m <= 100000; ++m) REQUIRE(length3(3 * m) == length3(m));
}

TEST_CASE("conjugation reverses the 3-coprime core") {
  CHECK(conjugate(14) == 22);
  CHECK(conjugate(91) == 91);
  CHECK(conjugate(5) == 7);
  CHECK(conjugate(15) == 7);  // 120_3 -> core 12_3 -> 21_3
  CHECK(is_self_conjugate(91));
  CHECK_FALSE(is_self_conjugate(14));
  for (std::uint64_t m = 1; m <= 100000; ++m)
    if (m % 3 != 0) REQUIRE(conjugate(conjugate(m)) == m);
}

TEST_CASE("first-occurrence form 11...12") {
  CHECK(is_first_occurrence_form(1));
  CHECK(is_first_occurrence_form(2));
  CHECK(is_first_occurrence_form(5));
  CHECK(is_first_occurrence_form(1094));
  CHECK_FALSE(is_first_occurrence_form(4));
}

TEST_CASE("pow3 and its overflow guard") {
  CHECK(pow3(0) == 1);
  CHECK(pow3(5) == 243);
  CHECK(pow3(40) == 12157665459056928801ull);
  CHECK_THROWS_AS(pow3(41), std::overflow_error);
}

TEST_CASE("cylinders and digit searches") {
  CHECK_THROWS(Cylinder(2, 9));
  CHECK_NOTHROW(Cylinder(0, 0));
  const auto hit = first_nonzero_digit(Cylinder(3, 18));
  REQUIRE(hit);
  CHECK(hit->position == 3);
  CHECK(hit->digit == 2);
  CHECK_FALSE(first_nonzero_digit(Cylinder(2, 0)));
  const auto one = first_nonzero_digit(Cylinder(1, 1));
  REQUIRE(one);
  CHECK(one->position == 1);
  CHECK(one->digit == 1);
  CHECK_FALSE(first_non_two_digit(Cylinder(2, 8)));
  const auto nt = first_non_two_digit(Cylinder(3, 8));  // digits 2,2,0
  REQUIRE(nt);
  CHECK(nt->position == 3);
  CHECK(nt->digit == 0);
}
