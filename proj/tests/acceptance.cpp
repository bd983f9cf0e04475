// Acceptance suite: one PASS/FAIL line per criterion, one report file per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chacon/cocycle.hpp"
#include "chacon/factor.hpp"
#include "chacon/hypotheses.hpp"
#include "chacon/mobius.hpp"
#include "chacon/polylab.hpp"
#include "chacon/reference.hpp"
#include "chacon/report.hpp"
#include "chacon/symbolic.hpp"
#include "chacon/ternary.hpp"
#include "fixtures.hpp"

namespace {

using namespace chacon;
using Json = nlohmann::json;
using polylab::IntPoly;
using polylab::RatPoly;
using polylab::rat_str;

struct Outcome {
  bool pass = false;
  std::string detail;
  Json report = Json::object();
  double time_limit = 0;  // seconds; 0 means none
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome(unsigned)> run;
};

RatPoly rat_from(const std::vector<long>& nums, long den) {
  std::vector<mpq_class> c;
  for (long x : nums) {
    mpq_class q(x, den);
    q.canonicalize();
    c.push_back(q);
  }
  return RatPoly(c);
}

IntPoly int_from(const std::vector<long>& nums) {
  std::vector<mpz_class> c;
  for (long x : nums) c.emplace_back(x);
  return IntPoly(c);
}

Json poly_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_str(c));
  return a;
}

Json report_summary(const hypothesis::HypothesisReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) ces.push_back({{"m", c.m}, {"kind", c.kind}});
  return {{"id", r.id},
          {"range", std::to_string(r.range.lo) + ".." + std::to_string(r.range.hi)},
          {"verdict", hypothesis::to_string(r.verdict)},
          {"checked", r.checked},
          {"counterexamples", ces}};
}

// -- criteria ----------------------------------------------------------------

Outcome table1(unsigned jobs) {
  Outcome o;
  o.time_limit = 10;
  const auto printed = fixtures::poly_rows("reduced_polynomials.txt");
  const auto rows = report::table_rows(122, jobs);
  std::vector<std::uint64_t> mismatched;
  Json per_row = Json::array();
  for (const auto& p : printed) {
    const auto computed = polylab::limit_polynomial(p.m, jobs).tilde;
    const bool eq = computed == rat_from(p.numerators, p.denominator);
    if (!eq) mismatched.push_back(p.m);
    per_row.push_back({{"m", p.m}, {"match", eq}});
  }
  std::vector<std::uint64_t> kept;
  for (const auto& r : rows) kept.push_back(r.m);
  std::vector<std::uint64_t> printed_ms;
  for (const auto& p : printed) printed_ms.push_back(p.m);
  const bool same_rows = kept == printed_ms;
  o.pass = mismatched.empty() && same_rows;
  o.report = {{"printed_rows", printed.size()},
              {"computed_rows", rows.size()},
              {"row_indexes_match", same_rows},
              {"mismatched", mismatched},
              {"rows", per_row}};
  o.detail = std::to_string(printed.size()) + " printed rows, " + std::to_string(rows.size()) +
             " kept rows after folding conjugates, " + std::to_string(mismatched.size()) + " mismatches";
  return o;
}

Outcome table2(unsigned jobs) {
  Outcome o;
  o.time_limit = 60;
  const auto printed = fixtures::poly_rows("first_occurrence_and_cubic.txt");
  std::vector<std::uint64_t> mismatched;
  Json per_row = Json::array();
  for (const auto& p : printed) {
    const auto computed = polylab::limit_polynomial(p.m, jobs).tilde;
    const bool eq = computed == rat_from(p.numerators, p.denominator) && ternary::to_config(p.m).str() == p.config;
    if (!eq) mismatched.push_back(p.m);
    per_row.push_back({{"m", p.m}, {"config", p.config}, {"match", eq}});
  }
  const auto first = hypothesis::check_first_occurrence(8, jobs);
  o.pass = mismatched.empty() && first.verdict == hypothesis::Verdict::HoldsInRange;
  o.report = {{"rows", per_row}, {"mismatched", mismatched}, {"first_occurrence", report_summary(first)},
              {"first_occurrences", first.evidence["first_occurrences"]}};
  o.detail = std::to_string(printed.size()) + " rows, " + std::to_string(mismatched.size()) +
             " mismatches; first occurrence for d <= 8: " + hypothesis::to_string(first.verdict);
  return o;
}

Outcome table3(unsigned jobs) {
  Outcome o;
  o.time_limit = 30;
  const auto printed = fixtures::factor_rows("factorizations.txt");
  const IntPoly z_plus_1 = polylab::int_poly({1, 1});
  std::vector<std::uint64_t> mismatched;
  std::vector<std::string> notes;
  Json per_row = Json::array();
  for (const auto& p : printed) {
    const auto lp = polylab::limit_polynomial(p.m, jobs);
    const auto f = polylab::factor_over_Q(lp.primitive());
    std::multiset<std::vector<long>> got, want;
    for (const auto& [g, e] : f.factors) {
      if (g == z_plus_1) continue;
      std::vector<long> c;
      for (const auto& x : g.coeffs()) c.push_back(x.get_si());
      for (unsigned i = 0; i < e; ++i) got.insert(c);
    }
    IntPoly product = polylab::int_poly({1});
    for (const auto& fac : p.factors) {
      want.insert(fac);
      product *= int_from(fac);
    }
    const bool factors_match = got == want;
    if (!factors_match) mismatched.push_back(p.m);
    const RatPoly printed_poly = polylab::to_rat(product) * mpq_class(1, p.denominator);
    const bool prefactor_match = printed_poly == lp.tilde;
    const std::string config = ternary::to_config(p.m).str();
    const bool config_match = config == p.config;
    if (!prefactor_match) {
      const mpq_class exact_prefactor = lp.tilde.leading() / product.leading();
      notes.push_back("m=" + std::to_string(p.m) + " printed prefactor 1/" + std::to_string(p.denominator) +
                      ", exact prefactor " + rat_str(exact_prefactor));
    }
    if (!config_match) notes.push_back("m=" + std::to_string(p.m) + " printed label " + p.config + ", actual " + config);
    per_row.push_back({{"m", p.m},
                       {"factors_match", factors_match},
                       {"prefactor_match", prefactor_match},
                       {"config_match", config_match},
                       {"exact", poly_json(lp.tilde)}});
  }
  o.pass = mismatched.empty() && printed.size() == 9;
  o.report = {{"rows", per_row}, {"mismatched", mismatched}, {"printed_typos", notes}};
  std::ostringstream d;
  d << printed.size() << " factorizations, " << mismatched.size() << " mismatches";
  for (const auto& n : notes) d << "; " << n;
  o.detail = d.str();
  return o;
}

Outcome triplication(unsigned jobs) {
  Outcome o;
  o.time_limit = 120;
  const auto r = hypothesis::check_triplication({1, 3000}, jobs);
  o.pass = r.verdict == hypothesis::Verdict::HoldsInRange;
  o.report = report_summary(r);
  o.report["raw_shift_equals_m"] = r.evidence["raw_shift_equals_m"];
  o.detail = "m <= 3000: " + hypothesis::to_string(r.verdict);
  return o;
}

Outcome symmetry(unsigned jobs) {
  Outcome o;
  const auto a = hypothesis::check_self_reciprocal({1, 1000}, jobs);
  const auto b = hypothesis::check_conjugate_symmetry({1, 1000}, jobs);
  o.pass = a.verdict == hypothesis::Verdict::HoldsInRange && b.verdict == hypothesis::Verdict::HoldsInRange;
  o.report = {{"self_reciprocal", report_summary(a)}, {"conjugate_symmetry", report_summary(b)}};
  o.detail = "self-reciprocal " + hypothesis::to_string(a.verdict) + ", conjugate symmetry " +
             hypothesis::to_string(b.verdict) + " on m <= 1000";
  return o;
}

Outcome denominators(unsigned jobs) {
  Outcome o;
  const auto r = hypothesis::check_integer_and_gcd({1, 3000}, jobs);
  std::size_t non_integral = 0;
  std::vector<std::uint64_t> gcd_failures;
  for (const auto& c : r.counterexamples) {
    if (c.kind == "non_integral") ++non_integral;
    if (c.kind == "gcd") gcd_failures.push_back(c.m);
  }
  o.pass = non_integral == 0 && r.evidence.contains("gcd_histogram");
  o.report = report_summary(r);
  o.report["gcd_histogram"] = r.evidence["gcd_histogram"];
  o.report["boundary_indexes"] = r.evidence["boundary_indexes"];
  std::ostringstream d;
  d << "denominator divides 2*3^|m| for all m <= 3000 (" << non_integral << " exceptions); gcd outside {1,2} at";
  for (auto m : gcd_failures) d << " " << m;
  o.detail = d.str();
  return o;
}

Outcome lee_yang(unsigned jobs) {
  Outcome o;
  o.time_limit = 120;
  const auto r = hypothesis::check_lee_yang({1, 365}, jobs);
  o.pass = r.verdict == hypothesis::Verdict::HoldsInRange;
  o.report = report_summary(r);
  o.detail = "Sturm count equals degree for m <= 365: " + hypothesis::to_string(r.verdict);
  return o;
}

Outcome duals(unsigned jobs) {
  Outcome o;
  const auto conventions = hypothesis::identify_dual_convention();
  Json names = Json::array();
  for (auto c : conventions) names.push_back(polylab::to_string(c));
  bool all = true;
  Json per = Json::array();
  for (const auto& pd : reference::printed_duals()) {
    const auto dual =
        polylab::mobius_dual(polylab::limit_polynomial(pd.m, jobs).tilde, polylab::DualConvention::Kappa1Rotated);
    const auto c = polylab::proportionality(dual.cleared, polylab::gauss_poly(pd.coeffs));
    all = all && c.has_value();
    per.push_back({{"m", pd.m}, {"scalar", c ? Json(c->str()) : Json()}});
  }
  const bool rotated = std::find(conventions.begin(), conventions.end(), polylab::DualConvention::Kappa1Rotated) !=
                       conventions.end();
  o.pass = all && rotated;
  o.report = {{"matching_conventions", names}, {"scalars_under_kappa1_rotated", per}};
  o.detail = "matching conventions: " + names.dump();
  return o;
}

Outcome eisenstein(unsigned jobs) {
  Outcome o;
  const auto p2 = polylab::limit_polynomial(2, jobs).tilde;
  const auto shifted = polylab::substitute_linear(p2, -1, 1);
  const auto witness = polylab::eisenstein_witness(polylab::primitive_part(shifted));
  o.pass = shifted == polylab::rat_poly({-2, 2, 1}, 6) && witness == 2ul;
  o.report = {{"shifted", poly_json(shifted)}, {"witness", witness ? Json(*witness) : Json()}};
  o.detail = "P2(-1+w) = " + polylab::to_string(shifted, "w") + ", witness " +
             (witness ? std::to_string(*witness) : std::string("none"));
  return o;
}

Outcome gamma_audit(unsigned) {
  Outcome o;
  const auto a = hypothesis::check_gamma_lemma(1, 1);
  std::map<std::string, RatPoly> cand(a.candidates.begin(), a.candidates.end());
  const bool present = cand.count("exact") && cand.count("gamma_lemma") && cand.count("cubic_theorem") &&
                       cand.count("printed_table");
  bool tops = false;
  if (present)
    tops = cand["gamma_lemma"].coeff(3) == mpq_class(5, 27) && cand["cubic_theorem"].coeff(3) == mpq_class(5, 54) &&
           cand["printed_table"].coeff(3) == mpq_class(28, 243) && cand["exact"] == polylab::limit_polynomial(91).tilde;
  // Every pair must be compared and every unequal pair flagged.
  bool flags = a.pairwise.size() == cand.size() * (cand.size() - 1) / 2;
  std::size_t mismatches = 0;
  for (const auto& c : a.pairwise) {
    if (!c.match) ++mismatches;
    if (c.match != (c.predicted == c.computed)) flags = false;
  }
  o.pass = present && tops && flags && a.mismatch_detected && mismatches > 0;
  o.report = hypothesis::to_json(a);
  std::ostringstream d;
  d << "top coefficients gamma_lemma " << (present ? rat_str(cand["gamma_lemma"].coeff(3)) : "?") << ", cubic_theorem "
    << (present ? rat_str(cand["cubic_theorem"].coeff(3)) : "?") << ", printed " << (present ? rat_str(cand["printed_table"].coeff(3)) : "?")
    << ", exact " << (present ? rat_str(cand["exact"].coeff(3)) : "?") << "; " << mismatches << " of " << a.pairwise.size()
    << " pairs flagged as mismatches";
  o.detail = d.str();
  return o;
}

Outcome binomial(unsigned) {
  Outcome o;
  o.time_limit = 30;
  const auto t = hypothesis::check_binomial_limit(3, {1, 2, 3, 4, 5});
  o.pass = t.strictly_decreasing && t.points.size() == 5;
  o.report = hypothesis::to_json(t);
  std::ostringstream d;
  d << "distances";
  for (const auto& p : t.points) d << " " << rat_str(p.distance);
  o.detail = d.str();
  return o;
}

Outcome oracle(unsigned jobs) {
  Outcome o;
  o.time_limit = 60;
  const std::uint64_t samples = 1000000;
  bool ok = true;
  double worst = 0;
  Json per = Json::array();
  for (std::uint64_t m : {1, 2, 4, 5, 13, 91}) {
    const auto est = cocycle::mc_rho(m, samples, 1, 40, jobs);
    const auto exact = cocycle::exact_rho(m, jobs);
    double worst_m = 0;
    for (const auto& b : est.bins) {
      const double p = exact.mass(b.k).get_d();
      if (p == 0) {
        if (b.count != 0) ok = false;
        continue;
      }
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
      const double z = std::fabs(b.frequency - p) / sigma;
      worst_m = std::max(worst_m, z);
    }
    if (worst_m > 4) ok = false;
    worst = std::max(worst, worst_m);
    per.push_back({{"m", m}, {"max_abs_z", report::decimal(worst_m)}});
  }
  o.pass = ok;
  o.report = {{"samples", samples}, {"seed", 1}, {"depth", 40}, {"per_index", per}};
  o.detail = "largest |z| over all bins " + report::decimal(worst);
  return o;
}

const symbolic::Word& word14() {
  static const symbolic::Word w = symbolic::generate(14);
  return w;
}

Outcome weak_limit(unsigned jobs) {
  Outcome o;
  o.time_limit = 120;
  const auto& w = word14();
  double worst = 0;
  Json per = Json::array();
  std::string orientation;
  for (std::uint64_t m : {1, 2, 4})
    for (const char* u : {"0", "1"})
      for (const char* v : {"0", "1"}) {
        const auto r = symbolic::weak_limit_check(m, 8, w, u, v, jobs);
        worst = std::max(worst, r.abs_error);
        orientation = symbolic::to_string(r.calibration.chosen);
        per.push_back({{"m", m},
                       {"u", u},
                       {"v", v},
                       {"observed", report::decimal(r.observed.value)},
                       {"predicted", report::decimal(r.predicted)},
                       {"abs_error", report::decimal(r.abs_error)}});
      }
  o.pass = worst <= 0.02;
  o.report = {{"n", 8}, {"generation", 14}, {"word_length", w.size()}, {"orientation", orientation}, {"checks", per}};
  o.detail = "12 checks, word length " + std::to_string(w.size()) + ", orientation " + orientation +
             ", largest error " + report::decimal(worst);
  return o;
}

Outcome two_scale(unsigned jobs) {
  Outcome o;
  const auto r = symbolic::two_scale_check(1, 8, word14(), "1", "1", jobs);
  const auto& best = r.variants[r.best];
  Json vars = Json::array();
  for (const auto& v : r.variants)
    vars.push_back({{"tag", v.tag},
                    {"lag", v.lag},
                    {"observed", report::decimal(v.observed.value)},
                    {"predicted", report::decimal(v.predicted)},
                    {"abs_error", report::decimal(v.abs_error)}});
  o.pass = best.abs_error <= 0.05;
  o.report = {{"s", 1}, {"n", 8}, {"generation", 14}, {"lag", r.lag}, {"variants", vars}, {"best", best.tag}};
  o.detail = "best orientation " + best.tag + ", observed " + report::decimal(best.observed.value) + ", predicted " +
             report::decimal(best.predicted) + ", error " + report::decimal(best.abs_error);
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Reduced polynomials for m <= 122", table1},
      {2, "First-occurrence and cubic rows", table2},
      {3, "Non-irreducible factorizations", table3},
      {4, "Triplication", triplication},
      {5, "Self-reciprocity and conjugate symmetry", symmetry},
      {6, "Denominators and gcd evidence", denominators},
      {7, "Lee-Yang", lee_yang},
      {8, "Dual polynomials", duals},
      {9, "Eisenstein pipeline", eisenstein},
      {10, "Closed-form audit", gamma_audit},
      {11, "Binomial trend", binomial},
      {12, "Monte-Carlo oracle agreement", oracle},
      {13, "Empirical weak limit", weak_limit},
      {14, "Two-scale family", two_scale},
  };
  return all;
}

std::string artifact_name(int id) {
  std::ostringstream s;
  s << "criterion_" << std::setw(2) << std::setfill('0') << id << ".json";
  return s.str();
}

void print_line(int id, bool pass, const std::string& name, const std::string& detail, double seconds) {
  std::cout << "criterion " << std::setw(2) << id << ": " << (pass ? "PASS" : "FAIL") << "  " << name << " -- "
            << detail << " [" << std::fixed << std::setprecision(2) << seconds << " s]" << std::endl;
  std::cout.unsetf(std::ios::floatfield);
}

// Runs every criterion with the given worker count and writes the report files into dir.
std::map<int, std::string> run_all(unsigned jobs, const std::filesystem::path& dir, bool print, int& failures) {
  std::filesystem::create_directories(dir);
  std::map<int, std::string> texts;
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(jobs);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    std::string detail = o.detail;
    if (o.time_limit > 0 && secs > o.time_limit) {
      pass = false;
      detail += "; exceeded the " + std::to_string(static_cast<int>(o.time_limit)) + " s budget";
    }
    const Json doc = {{"criterion", c.id}, {"name", c.name}, {"pass", o.pass}, {"report", o.report}};
    const std::string text = doc.dump(2) + "\n";
    texts[c.id] = text;
    std::ofstream(dir / artifact_name(c.id), std::ios::binary) << text;
    if (print) {
      print_line(c.id, pass, c.name, detail, secs);
      if (!pass) ++failures;
    }
  }
  return texts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string out_dir = "acceptance_reports";
  unsigned jobs = 8;
  app.add_option("--out-dir", out_dir, "directory for per-criterion report files");
  app.add_option("--jobs", jobs, "worker threads for the main run")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::filesystem::path root(out_dir);
  int failures = 0;
  const auto many = run_all(jobs, root / ("jobs" + std::to_string(jobs)), true, failures);

  const auto t0 = std::chrono::steady_clock::now();
  int ignored = 0;
  const auto one = run_all(1, root / "jobs1", false, ignored);
  std::vector<int> differing;
  for (const auto& [id, text] : many)
    if (one.at(id) != text) differing.push_back(id);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << many.size() << " report files compared between --jobs " << jobs << " and --jobs 1";
  if (!differing.empty()) {
    d << "; differing:";
    for (int id : differing) d << " " << id;
  }
  print_line(15, differing.empty(), "Determinism", d.str(), secs);
  if (!differing.empty()) ++failures;

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
