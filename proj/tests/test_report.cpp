#include <doctest.h>

#include "chacon/report.hpp"
#include "fixtures.hpp"

using namespace chacon;
using namespace chacon::report;

TEST_CASE("rho output") {
  const auto out = rho_output(2, 1);
  CHECK(out.results["distribution"].dump() == R"({"0":"1/6","1":"2/3","2":"1/6"})");
  CHECK(out.results["mean"] == "1");
  CHECK(out.results["variance"] == "1/3");
  const auto text = render(out, Format::Json, {{"m", 2}});
  const auto parsed = Json::parse(text);
  CHECK(parsed["tool_version"] == kToolVersion);
  CHECK(parsed["config"]["m"] == 2);
  CHECK(render(out, Format::Csv, {}) == "m,k,mass\n2,0,1/6\n2,1,2/3\n2,2,1/6\n");
  CHECK_THROWS_AS(rho_output(0, 1), std::invalid_argument);
}

TEST_CASE("table rows fold conjugates") {
  const auto rows = table_rows(122, 4);
  CHECK(rows.size() == 61);
  const auto printed = fixtures::poly_rows("reduced_polynomials.txt");
  REQUIRE(printed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].m);
    CHECK(rows[i].m == printed[i].m);
    CHECK(rows[i].config == printed[i].config);
    CHECK(rows[i].starred == printed[i].starred);
    CHECK(rows[i].denominator == printed[i].denominator);
  }
  CHECK(prefactor_form(polylab::int_poly({2, 5, 2}), 9) == "1/9(2z^2 + 5z + 2)");
}

TEST_CASE("the 365 row") {
  const auto rows = table_rows(365, 4);
  const auto& last = rows.back();
  CHECK(last.m == 365);
  CHECK(last.starred);
  CHECK(last.denominator == 1458);
  CHECK(last.numerators == polylab::int_poly({1, 34, 211, 483, 483, 211, 34, 1}));
}

TEST_CASE("markdown rendering") {
  const auto out = table_output(5, 1);
  const auto md = render(out, Format::Md, {});
  CHECK(md.find("| Index m | Configuration | Polynomial |") != std::string::npos);
  CHECK(md.find("| 5* | 12_3 | 1/18(z^3 + 8z^2 + 8z + 1) |") != std::string::npos);
}

TEST_CASE("dist output") {
  const auto one = dist_output({1}, 1);
  CHECK(one.table.rows.size() == 2);
  CHECK(one.table.rows[0][3] == "-1");
  const auto big = dist_output({1094}, 4);
  CHECK(big.table.rows.size() == 9);
}

TEST_CASE("formats and decimals") {
  CHECK(parse_format("md") == Format::Md);
  CHECK_FALSE(parse_format("xml"));
  CHECK(decimal(0.5) == "0.5");
  CHECK(decimal(1.0 / 3) == "0.333333333333");
  CHECK(render_csv({{"a", "b"}, {{"x,y", "q\"r"}}}) == "a,b\n\"x,y\",\"q\"\"r\"\n");
}

TEST_CASE("hypothesis exit codes") {
  hypothesis::RunOptions opt;
  opt.range = {1, 50};
  CHECK(hypotheses_output({"self_reciprocal"}, opt).exit_code == 0);
  CHECK(hypotheses_output({"integer_gcd"}, opt).exit_code == 2);
  CHECK(hypotheses_output({"flatness"}, opt).exit_code == 3);
  CHECK(hypotheses_output({"flatness", "integer_gcd"}, opt).exit_code == 2);
}

TEST_CASE("outputs are independent of the worker count") {
  const auto a = render(table_output(365, 1), Format::Json, {});
  const auto b = render(table_output(365, 8), Format::Json, {});
  CHECK(a == b);
}
