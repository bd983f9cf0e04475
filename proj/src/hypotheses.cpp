#include "chacon/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "chacon/cocycle.hpp"
#include "chacon/factor.hpp"
#include "chacon/parallel.hpp"
#include "chacon/polylab.hpp"
#include "chacon/reference.hpp"
#include "chacon/roots.hpp"
#include "chacon/ternary.hpp"

namespace chacon::hypothesis {

using polylab::DualConvention;
using polylab::IntPoly;
using polylab::LimitPolynomial;
using polylab::rat_str;

namespace {

Json coeffs_json(const RatPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rat_str(c));
  return out;
}

Json coeffs_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Json poly_json(const RatPoly& p) { return {{"text", polylab::to_string(p)}, {"coefficients", coeffs_json(p)}}; }

std::string config_str(std::uint64_t m) { return ternary::to_config(m).str(); }

void check_range(const IndexRange& r) {
  if (r.lo == 0 || r.hi < r.lo) throw std::invalid_argument("index range must satisfy 1 <= lo <= hi");
}

std::vector<LimitPolynomial> scan(const IndexRange& r, unsigned jobs) {
  check_range(r);
  return polylab::limit_polynomials(r.lo, r.hi, jobs);
}

HypothesisReport make_report(std::string id, std::string statement, IndexRange range) {
  HypothesisReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.range = range;
  return r;
}

// Per-index outcome produced on worker threads and merged in index order.
struct Outcome {
  bool undecided = false;
  std::vector<Counterexample> counterexamples;
};

void merge(HypothesisReport& report, std::vector<Outcome>& outcomes, std::uint64_t first) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.undecided) report.undecided.push_back(first + i);
    for (auto& c : o.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  report.checked = outcomes.size();
}

mpz_class pow3z(unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, e);
  return out;
}

RatPoly binomial_vector(unsigned d) {
  std::vector<mpq_class> c(d + 1);
  mpz_class two_d = mpz_class(1) << d;
  for (unsigned j = 0; j <= d; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), d, j);
    c[j] = mpq_class(b, two_d);
    c[j].canonicalize();
  }
  return RatPoly(std::move(c));
}

bool proportional(const IntPoly& a, const IntPoly& b) {
  return !a.is_zero() && !b.is_zero() && polylab::primitive_part(a) == polylab::primitive_part(b);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsInRange: return "holds-in-range";
    case Verdict::Fails: return "fails";
    case Verdict::NotDecidable: return "not-decidable";
  }
  return "unknown";
}

IndexRange parse_range(const std::string& text) {
  auto parse_index = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad index range: " + text);
    return std::stoull(s);
  };
  IndexRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_index(text);
  } else {
    r.lo = parse_index(text.substr(0, dots));
    r.hi = parse_index(text.substr(dots + 2));
  }
  check_range(r);
  return r;
}

void HypothesisReport::finalize() {
  if (!counterexamples.empty())
    verdict = Verdict::Fails;
  else if (!undecided.empty())
    verdict = Verdict::NotDecidable;
  else
    verdict = Verdict::HoldsInRange;
}

Json to_json(const HypothesisReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"m", c.m}, {"kind", c.kind}, {"witness", c.witness}});
  return {{"id", r.id},
          {"statement", r.statement},
          {"range", {{"lo", r.range.lo}, {"hi", r.range.hi}}},
          {"verdict", to_string(r.verdict)},
          {"checked", r.checked},
          {"counterexamples", ce},
          {"undecided", r.undecided},
          {"evidence", r.evidence}};
}

HypothesisReport check_self_reciprocal(IndexRange range, unsigned jobs) {
  auto report = make_report("self_reciprocal", "reduced polynomials are self-reciprocal", range);
  const auto polys = scan(range, jobs);
  std::vector<Outcome> outcomes(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& lp = polys[i];
    if (!polylab::is_self_reciprocal(lp.tilde))
      outcomes[i].counterexamples.push_back({lp.m, "not_palindromic", {{"polynomial", poly_json(lp.tilde)}}});
  }
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

HypothesisReport check_conjugate_symmetry(IndexRange range, unsigned jobs) {
  auto report = make_report("conjugate_symmetry", "conjugate configurations share a reduced polynomial", range);
  const auto polys = scan(range, jobs);
  auto outcomes = parallel_map<Outcome>(polys.size(), jobs, [&](std::size_t i) {
    Outcome o;
    const auto& lp = polys[i];
    const std::uint64_t c = ternary::conjugate(lp.m);
    const auto other = polylab::limit_polynomial(c);
    if (!(other.tilde == lp.tilde))
      o.counterexamples.push_back({lp.m,
                                   "mismatch",
                                   {{"conjugate", c},
                                    {"config", config_str(lp.m)},
                                    {"conjugate_config", config_str(c)},
                                    {"polynomial", poly_json(lp.tilde)},
                                    {"conjugate_polynomial", poly_json(other.tilde)}}});
    return o;
  });
  std::size_t palindromes = 0;
  for (const auto& lp : polys) palindromes += ternary::is_self_conjugate(lp.m) ? 1 : 0;
  report.evidence["self_conjugate_indexes"] = palindromes;
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

HypothesisReport check_integer_and_gcd(IndexRange range, unsigned jobs) {
  auto report = make_report("integer_gcd",
                            "2*3^|m|_3 * reduced polynomial has integer coefficients with gcd 1 or 2", range);
  const auto polys = scan(range, jobs);
  std::vector<Outcome> outcomes(polys.size());
  std::map<std::string, std::size_t> gcd_counts;
  Json boundary = Json::array();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& lp = polys[i];
    const auto s = polylab::to_integer_poly(lp.tilde, lp.m);
    if (!s.integral) {
      outcomes[i].counterexamples.push_back(
          {lp.m, "non_integral", {{"scale", s.scale.get_str()}, {"scaled", coeffs_json(s.scaled)}}});
      continue;
    }
    ++gcd_counts[s.coeff_gcd.get_str()];
    if (s.coeff_gcd != 1 && s.coeff_gcd != 2) {
      outcomes[i].counterexamples.push_back({lp.m,
                                             "gcd",
                                             {{"gcd", s.coeff_gcd.get_str()},
                                              {"config", config_str(lp.m)},
                                              {"core", ternary::reduce3(lp.m).core},
                                              {"scaled", coeffs_json(s.poly)}}});
      boundary.push_back(lp.m);
    }
  }
  Json hist = Json::object();
  for (const auto& [g, n] : gcd_counts) hist[g] = n;
  report.evidence["gcd_histogram"] = hist;
  report.evidence["boundary_indexes"] = boundary;
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

HypothesisReport check_triplication(IndexRange range, unsigned jobs) {
  auto report = make_report("triplication", "P_3m and P_m agree after shift reduction", range);
  const auto polys = scan(range, jobs);
  struct Item {
    Outcome outcome;
    std::optional<std::int64_t> raw_shift;
  };
  auto items = parallel_map<Item>(polys.size(), jobs, [&](std::size_t i) {
    Item it;
    const auto& lp = polys[i];
    const auto tripled = polylab::limit_polynomial(3 * lp.m);
    it.raw_shift = lp.rho.translation_to(tripled.rho);
    if (!(tripled.tilde == lp.tilde))
      it.outcome.counterexamples.push_back(
          {lp.m, "mismatch", {{"polynomial", poly_json(lp.tilde)}, {"tripled_polynomial", poly_json(tripled.tilde)}}});
    return it;
  });
  std::vector<Outcome> outcomes;
  std::size_t shift_is_m = 0;
  Json other_shifts = Json::array();
  Json samples = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::uint64_t m = range.lo + i;
    if (items[i].raw_shift && *items[i].raw_shift == static_cast<std::int64_t>(m))
      ++shift_is_m;
    else
      other_shifts.push_back({{"m", m}, {"shift", items[i].raw_shift ? Json(*items[i].raw_shift) : Json()}});
    if (samples.size() < 8)
      samples.push_back({{"m", m}, {"raw_shift", items[i].raw_shift ? Json(*items[i].raw_shift) : Json()}});
    outcomes.push_back(std::move(items[i].outcome));
  }
  report.evidence["raw_shift_equals_m"] = shift_is_m;
  report.evidence["raw_shift_other"] = other_shifts;
  report.evidence["raw_shift_samples"] = samples;
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

CoincidenceClasses check_coincidences(IndexRange range, unsigned jobs) {
  const auto polys = scan(range, jobs);
  std::map<std::vector<mpq_class>, std::vector<std::uint64_t>> groups;
  std::vector<std::vector<mpq_class>> order;
  for (const auto& lp : polys) {
    if (lp.m % 3 == 0) continue;
    auto [it, inserted] = groups.try_emplace(lp.tilde.coeffs());
    if (inserted) order.push_back(lp.tilde.coeffs());
    it->second.push_back(lp.m);
  }
  CoincidenceClasses out;
  for (const auto& key : order) {
    const auto& members = groups[key];
    if (members.size() < 2) {
      ++out.singletons;
      continue;
    }
    out.classes.push_back(members);
    const bool conjugate_pair = members.size() == 2 && ternary::conjugate(members[0]) == members[1];
    if (!conjugate_pair) out.non_conjugate.push_back(members);
  }
  return out;
}

HypothesisReport coincidence_report(IndexRange range, unsigned jobs) {
  auto report = make_report("coincidences", "classes of 3-coprime indexes with identical reduced polynomials", range);
  const auto c = check_coincidences(range, jobs);
  report.evidence["classes"] = c.classes;
  report.evidence["non_conjugate_classes"] = c.non_conjugate;
  report.evidence["singletons"] = c.singletons;
  report.checked = range.hi - range.lo + 1;
  report.evidence["note"] = "question with no finite decision; evidence only";
  report.verdict = Verdict::NotDecidable;
  return report;
}

HypothesisReport check_factor_structure(IndexRange range, unsigned jobs) {
  auto report = make_report(
      "factor_structure",
      "two or more factors other than (z+1) iff |m|_3 is even and the configuration is a palindrome", range);
  const auto polys = scan(range, jobs);
  struct Item {
    Outcome outcome;
    bool coprime = false;
    bool splits = false;
    bool symmetric_even = false;
  };
  auto items = parallel_map<Item>(polys.size(), jobs, [&](std::size_t i) {
    Item it;
    const auto& lp = polys[i];
    if (lp.m % 3 == 0) return it;
    it.coprime = true;
    if (lp.degree() > polylab::kMaxFactorDegree) {
      it.outcome.undecided = true;
      return it;
    }
    const auto f = polylab::factor_over_Q(lp.primitive());
    const IntPoly z_plus_1 = polylab::int_poly({1, 1});
    unsigned others = 0;
    Json factors = Json::array();
    for (const auto& [g, e] : f.factors) {
      if (!(g == z_plus_1)) others += e;
      factors.push_back({{"factor", polylab::to_string(g)}, {"multiplicity", e}});
    }
    it.splits = others >= 2;
    it.symmetric_even = ternary::length3(lp.m) % 2 == 0 && ternary::is_self_conjugate(lp.m);
    if (it.splits != it.symmetric_even) {
      Json w{{"config", config_str(lp.m)},
             {"length3", ternary::length3(lp.m)},
             {"palindrome", ternary::is_self_conjugate(lp.m)},
             {"factors", factors}};
      it.outcome.counterexamples.push_back(
          {lp.m, it.splits ? "splits_without_even_palindrome" : "even_palindrome_without_split", w});
    }
    return it;
  });
  std::vector<Outcome> outcomes;
  std::size_t coprime = 0, both = 0, neither = 0;
  for (auto& it : items) {
    coprime += it.coprime;
    if (it.coprime && !it.outcome.undecided) {
      both += it.splits && it.symmetric_even;
      neither += !it.splits && !it.symmetric_even;
    }
    outcomes.push_back(std::move(it.outcome));
  }
  merge(report, outcomes, range.lo);
  report.checked = coprime;
  report.evidence["consistent_split"] = both;
  report.evidence["consistent_no_split"] = neither;
  report.evidence["multiples_of_3_skipped"] = polys.size() - coprime;
  report.finalize();
  return report;
}

HypothesisReport check_lee_yang(IndexRange range, unsigned jobs) {
  auto report = make_report("lee_yang", "all roots of the reduced polynomial are real", range);
  const auto polys = scan(range, jobs);
  auto outcomes = parallel_map<Outcome>(polys.size(), jobs, [&](std::size_t i) {
    Outcome o;
    const auto& lp = polys[i];
    const auto rc = polylab::real_root_count(lp.primitive());
    if (rc.with_multiplicity != lp.degree())
      o.counterexamples.push_back({lp.m,
                                   "nonreal_roots",
                                   {{"degree", lp.degree()},
                                    {"real_roots", rc.with_multiplicity},
                                    {"polynomial", poly_json(lp.tilde)}}});
    return o;
  });
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

HypothesisReport check_degree_bound(IndexRange range, unsigned jobs) {
  auto report = make_report("degree_bound", "3^(d-1) <= 2m - 1", range);
  const auto polys = scan(range, jobs);
  std::vector<Outcome> outcomes(polys.size());
  std::size_t tight = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& lp = polys[i];
    const mpz_class lhs = pow3z(static_cast<unsigned>(lp.degree() - 1));
    const mpz_class rhs = 2 * mpz_class(lp.m) - 1;
    if (lhs > rhs)
      outcomes[i].counterexamples.push_back({lp.m, "exceeds", {{"degree", lp.degree()}}});
    else if (lhs == rhs)
      ++tight;
  }
  report.evidence["tight"] = tight;
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

std::vector<DualConvention> identify_dual_convention() {
  std::vector<DualConvention> out;
  for (auto c : polylab::all_dual_conventions()) {
    bool all = true;
    for (const auto& ref : reference::printed_duals()) {
      const auto lp = polylab::limit_polynomial(ref.m);
      const auto dual = polylab::mobius_dual(lp.tilde, c);
      if (!polylab::proportionality(dual.cleared, polylab::gauss_poly(ref.coeffs))) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(c);
  }
  return out;
}

HypothesisReport check_dual_roots(IndexRange range, DualConvention convention, unsigned jobs) {
  auto report = make_report("dual_roots", "dual roots lie on |w| = 1 with Re w > 0", range);
  const auto polys = scan(range, jobs);
  const auto& conventions = polylab::all_dual_conventions();
  struct Tally {
    std::size_t on_circle = 0, off_circle = 0, re_pos = 0, re_zero = 0, re_neg = 0, at_infinity = 0;
  };
  struct Item {
    Outcome outcome;
    std::vector<Tally> tallies;
  };
  const mpq_class precision(1, 1 << 20);
  auto items = parallel_map<Item>(polys.size(), jobs, [&](std::size_t i) {
    Item it;
    it.tallies.resize(conventions.size());
    const auto& lp = polys[i];
    auto iso = polylab::isolate_real_roots(lp.primitive(), precision);
    if (!iso.all_real) {
      it.outcome.undecided = true;
      return it;
    }
    Json bad = Json::array();
    for (std::size_t c = 0; c < conventions.size(); ++c) {
      for (auto& box : iso.boxes) {
        const auto img = polylab::mobius_root_image(box, conventions[c]);
        auto& t = it.tallies[c];
        if (img.at_infinity) {
          ++t.at_infinity;
          continue;
        }
        ++(img.abs_one ? t.on_circle : t.off_circle);
        ++(img.re_sign > 0 ? t.re_pos : img.re_sign == 0 ? t.re_zero : t.re_neg);
        if (conventions[c] == convention && (img.at_infinity || !img.abs_one || img.re_sign <= 0))
          bad.push_back({{"root_approx", box.midpoint()},
                         {"abs_one", img.abs_one},
                         {"re_sign", img.re_sign},
                         {"image", {img.re_approx, img.im_approx}}});
      }
    }
    if (!bad.empty()) it.outcome.counterexamples.push_back({lp.m, "root_image", {{"roots", bad}}});
    return it;
  });
  std::vector<Tally> total(conventions.size());
  std::vector<Outcome> outcomes;
  for (auto& it : items) {
    for (std::size_t c = 0; c < it.tallies.size(); ++c) {
      total[c].on_circle += it.tallies[c].on_circle;
      total[c].off_circle += it.tallies[c].off_circle;
      total[c].re_pos += it.tallies[c].re_pos;
      total[c].re_zero += it.tallies[c].re_zero;
      total[c].re_neg += it.tallies[c].re_neg;
      total[c].at_infinity += it.tallies[c].at_infinity;
    }
    outcomes.push_back(std::move(it.outcome));
  }
  Json tallies = Json::object();
  for (std::size_t c = 0; c < conventions.size(); ++c)
    tallies[polylab::to_string(conventions[c])] = {{"on_circle", total[c].on_circle},
                                                   {"off_circle", total[c].off_circle},
                                                   {"re_positive", total[c].re_pos},
                                                   {"re_zero", total[c].re_zero},
                                                   {"re_negative", total[c].re_neg},
                                                   {"at_infinity", total[c].at_infinity}};
  Json matched = Json::array();
  for (auto c : identify_dual_convention()) matched.push_back(polylab::to_string(c));
  report.evidence["convention"] = polylab::to_string(convention);
  report.evidence["conventions_matching_printed_duals"] = matched;
  report.evidence["tallies"] = tallies;
  merge(report, outcomes, range.lo);
  report.finalize();
  return report;
}

HypothesisReport check_first_occurrence(unsigned d_max, unsigned jobs) {
  if (d_max < 1 || d_max > 12) throw std::invalid_argument("check_first_occurrence: d_max must be in [1, 12]");
  const std::uint64_t limit = (ternary::pow3(d_max - 1) + 1) / 2;
  auto report = make_report("first_occurrence", "degree d first appears at m = (3^(d-1) + 1)/2", {1, limit});
  const auto polys = scan(report.range, jobs);
  std::map<int, std::uint64_t> first;
  for (const auto& lp : polys) first.try_emplace(lp.degree(), lp.m);
  Json table = Json::array();
  for (unsigned d = 1; d <= d_max; ++d) {
    const std::uint64_t predicted = (ternary::pow3(d - 1) + 1) / 2;
    const auto it = first.find(static_cast<int>(d));
    Json row{{"degree", d}, {"predicted", predicted}, {"predicted_config", config_str(predicted)}};
    row["observed"] = it == first.end() ? Json() : Json(it->second);
    table.push_back(row);
    if (it == first.end() || it->second != predicted)
      report.counterexamples.push_back({predicted, "first_index", row});
    if (d >= 2) {
      const std::string expected = std::string(d - 2, '1') + "2";
      if (config_str(predicted) != expected)
        report.counterexamples.push_back({predicted, "ternary_form", {{"config", config_str(predicted)}}});
    }
  }
  report.checked = polys.size();
  report.evidence["first_occurrences"] = table;
  report.finalize();
  return report;
}

HypothesisReport flatness_scan(IndexRange range, unsigned jobs) {
  auto report = make_report("flatness", "no reduced polynomial has all |a_(j+1)/a_j - 1| below a fixed epsilon", range);
  const auto polys = scan(range, jobs);
  std::optional<mpq_class> best, best_nontrivial;
  std::vector<std::uint64_t> argmin, argmin_nontrivial;
  Json per_index = Json::array();
  for (const auto& lp : polys) {
    mpq_class dev = 0;
    const auto& c = lp.tilde.coeffs();
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
      mpq_class r = c[j + 1] / c[j] - 1;
      dev = std::max(dev, mpq_class(abs(r)));
    }
    per_index.push_back({{"m", lp.m}, {"deviation", rat_str(dev)}});
    auto update = [&](std::optional<mpq_class>& b, std::vector<std::uint64_t>& arg) {
      if (!b || dev < *b) {
        b = dev;
        arg.clear();
      }
      if (dev == *b) arg.push_back(lp.m);
    };
    update(best, argmin);
    if (lp.degree() >= 2) update(best_nontrivial, argmin_nontrivial);
  }
  report.checked = polys.size();
  report.evidence["minimum"] = best ? Json(rat_str(*best)) : Json();
  report.evidence["argmin"] = argmin;
  report.evidence["minimum_degree_at_least_2"] = best_nontrivial ? Json(rat_str(*best_nontrivial)) : Json();
  report.evidence["argmin_degree_at_least_2"] = argmin_nontrivial;
  report.evidence["minimum_approx"] = best ? best->get_d() : 0.0;
  report.evidence["minimum_degree_at_least_2_approx"] = best_nontrivial ? best_nontrivial->get_d() : 0.0;
  report.evidence["per_index"] = per_index;
  report.evidence["note"] = "existential statement with no finite decision; evidence only";
  report.verdict = Verdict::NotDecidable;
  return report;
}

ClosedFormCheck compare_closed_form(std::string formula, std::vector<long> parameters, RatPoly predicted,
                                    RatPoly computed) {
  ClosedFormCheck c;
  c.formula = std::move(formula);
  c.parameters = std::move(parameters);
  const std::size_t n = std::max(predicted.coeffs().size(), computed.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) c.discrepancy.push_back(predicted.coeff(k) - computed.coeff(k));
  c.match = std::all_of(c.discrepancy.begin(), c.discrepancy.end(), [](const mpq_class& q) { return sgn(q) == 0; });
  c.predicted = std::move(predicted);
  c.computed = std::move(computed);
  return c;
}

Json to_json(const ClosedFormCheck& c) {
  Json disc = Json::array();
  for (const auto& q : c.discrepancy) disc.push_back(rat_str(q));
  return {{"formula", c.formula},
          {"parameters", c.parameters},
          {"predicted", poly_json(c.predicted)},
          {"computed", poly_json(c.computed)},
          {"match", c.match},
          {"discrepancy", disc}};
}

std::uint64_t spaced_ones_index(const std::vector<unsigned>& gaps) {
  ternary::TernaryConfig cfg;
  cfg.digits.push_back(1);
  for (unsigned g : gaps) {
    cfg.digits.insert(cfg.digits.end(), g, 0);
    cfg.digits.push_back(1);
  }
  if (cfg.digits.size() > ternary::kMaxDepth) throw std::overflow_error("spaced_ones_index: configuration too long");
  return ternary::from_config(cfg);
}

RatPoly quadratic_family_prediction(unsigned s) {
  const mpz_class p = pow3z(s);
  const mpz_class den = 4 * p;
  mpq_class outer(p - 1, den), inner(2 * (p + 1), den);
  outer.canonicalize();
  inner.canonicalize();
  return RatPoly({outer, inner, outer});
}

std::vector<QuadraticFamilyEntry> check_quadratic_family(unsigned s_max) {
  if (s_max > 14) throw std::invalid_argument("check_quadratic_family: s_max must be at most 14");
  std::vector<QuadraticFamilyEntry> out;
  for (unsigned s = 1; s <= s_max; ++s) {
    QuadraticFamilyEntry e;
    e.s = s;
    e.m = ternary::pow3(s) + 1;
    e.algebraic = compare_closed_form("quadratic_family", {static_cast<long>(s)}, quadratic_family_prediction(s),
                                      polylab::limit_polynomial(e.m).tilde);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {
// 3^-[1,l] = (1 - 3^-l) / 2.
mpq_class tail_sum(unsigned l) { return mpq_class(pow3z(l) - 1, 2 * pow3z(l)); }
mpq_class inv_pow3(unsigned e) { return mpq_class(mpz_class(1), pow3z(e)); }
}  // namespace

mpq_class gamma_value(unsigned l1, unsigned l2) {
  mpq_class g = tail_sum(l1) * tail_sum(l2) + tail_sum(l1) * inv_pow3(l2 + 1) + inv_pow3(l1 + 1) * tail_sum(l2);
  g.canonicalize();
  return g;
}

RatPoly gamma_lemma_prediction(unsigned l1, unsigned l2) {
  const mpq_class g = gamma_value(l1, l2);
  const mpq_class h = mpq_class(1, 2) - g;
  return RatPoly({g, h, h, g});
}

RatPoly cubic_theorem_prediction(unsigned l) {
  const mpz_class a = (pow3z(l) - 1) / 2;
  const mpz_class x = 3 * a * a + 2 * a;
  const mpz_class top = pow3z(2 * l + 1);
  const mpz_class den = 2 * top;
  mpq_class outer(x, den), inner(top - x, den);
  outer.canonicalize();
  inner.canonicalize();
  return RatPoly({outer, inner, inner, outer});
}

GammaAudit check_gamma_lemma(unsigned l1, unsigned l2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("check_gamma_lemma: gaps must be positive");
  GammaAudit a;
  a.l1 = l1;
  a.l2 = l2;
  a.m = spaced_ones_index({l1, l2});
  a.exact = polylab::limit_polynomial(a.m).tilde;
  a.candidates.emplace_back("exact", a.exact);
  a.candidates.emplace_back("gamma_lemma", gamma_lemma_prediction(l1, l2));
  if (l1 == l2) {
    a.candidates.emplace_back("cubic_theorem", cubic_theorem_prediction(l1));
    for (int t : {0, 1, -1, 2, -2}) {
      const int l = static_cast<int>(l1) + t;
      if (l >= 1 && cubic_theorem_prediction(static_cast<unsigned>(l)) == a.exact) {
        a.cubic_theorem_index_shift = t;
        break;
      }
    }
  }
  const auto& printed = reference::printed_m91();
  if (a.m == printed.m) {
    std::vector<mpq_class> c;
    for (long v : printed.numerators) {
      mpq_class q(v, printed.denominator);
      q.canonicalize();
      c.push_back(q);
    }
    a.candidates.emplace_back("printed_table", RatPoly(std::move(c)));
  }
  const std::vector<long> params{static_cast<long>(l1), static_cast<long>(l2)};
  for (std::size_t i = 0; i < a.candidates.size(); ++i)
    for (std::size_t j = i + 1; j < a.candidates.size(); ++j) {
      auto chk = compare_closed_form(a.candidates[j].first + "-" + a.candidates[i].first, params,
                                     a.candidates[j].second, a.candidates[i].second);
      a.mismatch_detected = a.mismatch_detected || !chk.match;
      a.pairwise.push_back(std::move(chk));
    }
  return a;
}

Json to_json(const GammaAudit& a) {
  Json cands = Json::object();
  for (const auto& [name, p] : a.candidates) cands[name] = poly_json(p);
  Json pairs = Json::array();
  for (const auto& c : a.pairwise) pairs.push_back(to_json(c));
  return {{"l1", a.l1},
          {"l2", a.l2},
          {"m", a.m},
          {"config", config_str(a.m)},
          {"candidates", cands},
          {"pairwise", pairs},
          {"cubic_theorem_index_shift", a.cubic_theorem_index_shift ? Json(*a.cubic_theorem_index_shift) : Json()},
          {"mismatch_detected", a.mismatch_detected}};
}

BinomialTrend check_binomial_limit(unsigned d, const std::vector<unsigned>& ls) {
  if (d < 1) throw std::invalid_argument("check_binomial_limit: d must be positive");
  BinomialTrend t;
  t.d = d;
  const RatPoly target = binomial_vector(d);
  for (unsigned l : ls) {
    BinomialTrendPoint p;
    p.l = l;
    p.m = spaced_ones_index(std::vector<unsigned>(d - 1, l));
    const auto tilde = polylab::limit_polynomial(p.m).tilde;
    p.degree = tilde.degree();
    p.distance = 0;
    const std::size_t n = std::max<std::size_t>(tilde.coeffs().size(), d + 1);
    for (std::size_t k = 0; k < n; ++k) p.distance = std::max(p.distance, mpq_class(abs(tilde.coeff(k) - target.coeff(k))));
    t.points.push_back(std::move(p));
  }
  t.strictly_decreasing = true;
  for (std::size_t i = 1; i < t.points.size(); ++i)
    if (!(t.points[i].distance < t.points[i - 1].distance)) t.strictly_decreasing = false;
  return t;
}

Json to_json(const BinomialTrend& t) {
  Json pts = Json::array();
  for (const auto& p : t.points)
    pts.push_back({{"l", p.l},
                   {"m", p.m},
                   {"degree", p.degree},
                   {"distance", rat_str(p.distance)},
                   {"distance_approx", p.distance.get_d()}});
  return {{"d", t.d}, {"points", pts}, {"strictly_decreasing", t.strictly_decreasing}};
}

HypothesisReport check_eisenstein_family(unsigned l_max) {
  if (l_max < 1 || l_max > 6) throw std::invalid_argument("check_eisenstein_family: l_max must be in [1, 6]");
  auto report = make_report("eisenstein_family", "R_m = P_m/(z+1) is irreducible for m = 1 0^l 1 0^l 1",
                            {spaced_ones_index({1, 1}), spaced_ones_index({l_max, l_max})});
  // Y + 4X as a polynomial in a: constant 3^(2l+1) for every l.
  bool identity_symbolic = true;
  Json rows = Json::array();
  for (unsigned l = 1; l <= l_max; ++l) {
    const std::uint64_t m = spaced_ones_index({l, l});
    const auto lp = polylab::limit_polynomial(m);
    const IntPoly p = lp.primitive();
    Json row{{"l", l}, {"m", m}, {"config", config_str(m)}, {"primitive", polylab::to_string(p)}};
    IntPoly r;
    if (!polylab::divides(polylab::int_poly({1, 1}), p, &r)) {
      report.counterexamples.push_back({m, "no_root_minus_one", row});
      rows.push_back(row);
      continue;
    }
    r = polylab::primitive_part(r);
    const IntPoly r_star = polylab::primitive_part(polylab::substitute_linear(polylab::to_rat(r), -1, 1));
    const IntPoly p_star = polylab::primitive_part(polylab::substitute_linear(polylab::to_rat(p), -1, 1));
    const auto witness = polylab::eisenstein_witness(r_star);
    const auto f = polylab::factor_over_Q(r);
    row["R"] = polylab::to_string(r);
    row["R_shifted"] = polylab::to_string(r_star, "w");
    row["P_shifted"] = polylab::to_string(p_star, "w");
    row["eisenstein_prime"] = witness ? Json(*witness) : Json();
    row["irreducible"] = f.is_irreducible();

    const mpz_class three = pow3z(2 * l + 1);
    auto printed_forms = [&](unsigned ll) {
      const mpz_class a = (pow3z(ll) - 1) / 2;
      const mpz_class top = pow3z(2 * ll + 1);
      const mpz_class x = 3 * a * a + 2 * a;
      const mpz_class y = top - 8 * a - 12 * a * a;
      const IntPoly quad({-y, y, x});
      const IntPoly cubic({-y, y, 0, x});
      return Json{{"a", a.get_str()},
                  {"X", x.get_str()},
                  {"Y", y.get_str()},
                  {"Y_plus_4X_is_power", y + 4 * x == top},
                  {"cubic_form_matches_P_shifted", proportional(cubic, p_star)},
                  {"quadratic_form_matches_R_shifted", proportional(quad, r_star)}};
    };
    row["printed_forms_at_l"] = printed_forms(l);
    row["printed_forms_at_l_plus_1"] = printed_forms(l + 1);
    row["cubic_theorem_matches_at_l"] = cubic_theorem_prediction(l) == lp.tilde;
    row["cubic_theorem_matches_at_l_plus_1"] = cubic_theorem_prediction(l + 1) == lp.tilde;
    const IntPoly x_of_a({0, 2, 3});
    const IntPoly y_of_a({three, -8, -12});
    if (!(y_of_a + x_of_a * mpz_class(4) == IntPoly::constant(three))) identity_symbolic = false;
    if (!f.is_irreducible()) report.counterexamples.push_back({m, "reducible", row});
    rows.push_back(row);
  }
  report.checked = l_max;
  report.evidence["family"] = rows;
  report.evidence["Y_plus_4X_identity_symbolic"] = identity_symbolic;
  report.finalize();
  return report;
}

CltDistance clt_distance(std::uint64_t m) {
  const auto lp = polylab::limit_polynomial(m);
  CltDistance out;
  out.m = m;
  const auto& c = lp.tilde.coeffs();
  mpq_class mean = 0, second = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    mean += c[j] * static_cast<long>(j);
    second += c[j] * static_cast<long>(j * j);
  }
  const double mu = mean.get_d();
  const double sigma = std::sqrt(mpq_class(second - mean * mean).get_d());
  double ks = 0.0;
  double below = 0.0;
  mpq_class cdf = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    cdf += c[j];
    const double phi = 0.5 * std::erfc(-(static_cast<double>(j) - mu) / (sigma * std::sqrt(2.0)));
    ks = std::max({ks, std::fabs(cdf.get_d() - phi), std::fabs(below - phi)});
    below = cdf.get_d();
  }
  out.kolmogorov_to_normal = ks;
  const unsigned d = static_cast<unsigned>(lp.degree());
  const RatPoly b = binomial_vector(d);
  mpq_class fp = 0, fb = 0;
  out.kolmogorov_to_binomial = 0;
  for (unsigned j = 0; j <= d; ++j) {
    fp += lp.tilde.coeff(j);
    fb += b.coeff(j);
    out.kolmogorov_to_binomial = std::max(out.kolmogorov_to_binomial, mpq_class(abs(fp - fb)));
  }
  return out;
}

namespace {
const std::vector<std::pair<std::string, std::string>>& tag_aliases() {
  static const std::vector<std::pair<std::string, std::string>> aliases{
      {"H1", "self_reciprocal"}, {"H2", "conjugate_symmetry"}, {"H3", "integer_gcd"},
      {"H4", "factor_structure"}, {"H5", "lee_yang"},          {"H6", "dual_roots"},
      {"H7", "first_occurrence"}, {"H8", "flatness"},
  };
  return aliases;
}
}  // namespace

const std::vector<std::string>& all_tags() {
  static const std::vector<std::string> tags{"self_reciprocal", "conjugate_symmetry", "integer_gcd",
                                             "factor_structure", "lee_yang",           "dual_roots",
                                             "first_occurrence", "flatness",           "triplication",
                                             "degree_bound",     "coincidences",       "eisenstein_family"};
  return tags;
}

std::string canonical_tag(const std::string& tag) {
  for (const auto& [alias, name] : tag_aliases())
    if (tag == alias) return name;
  for (const auto& name : all_tags())
    if (tag == name) return name;
  return {};
}

HypothesisReport run_tag(const std::string& tag, const RunOptions& o) {
  const std::string name = canonical_tag(tag);
  if (name == "self_reciprocal") return check_self_reciprocal(o.range, o.jobs);
  if (name == "conjugate_symmetry") return check_conjugate_symmetry(o.range, o.jobs);
  if (name == "integer_gcd") return check_integer_and_gcd(o.range, o.jobs);
  if (name == "factor_structure") return check_factor_structure(o.range, o.jobs);
  if (name == "lee_yang") return check_lee_yang(o.range, o.jobs);
  if (name == "dual_roots") return check_dual_roots(o.range, o.convention, o.jobs);
  if (name == "first_occurrence") return check_first_occurrence(o.d_max, o.jobs);
  if (name == "flatness") return flatness_scan(o.range, o.jobs);
  if (name == "triplication") return check_triplication(o.range, o.jobs);
  if (name == "degree_bound") return check_degree_bound(o.range, o.jobs);
  if (name == "coincidences") return coincidence_report(o.range, o.jobs);
  if (name == "eisenstein_family") return check_eisenstein_family(o.l_max);
  throw std::invalid_argument("unknown hypothesis tag: " + tag);
}

}  // namespace chacon::hypothesis
