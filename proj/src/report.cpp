#include "chacon/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "chacon/cocycle.hpp"
#include "chacon/factor.hpp"
#include "chacon/mobius.hpp"
#include "chacon/polylab.hpp"
#include "chacon/roots.hpp"
#include "chacon/symbolic.hpp"
#include "chacon/ternary.hpp"

namespace chacon::report {

using polylab::rat_str;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json dist_json(const cocycle::RationalDist& d) {
  Json out = Json::object();
  for (const auto& [k, q] : d.masses()) out[std::to_string(k)] = rat_str(q);
  return out;
}

Json estimate_json(const symbolic::CorrelationEstimate& e) {
  return {{"lag", e.lag},
          {"value", decimal(e.value)},
          {"hits", e.hits},
          {"sample_count", e.sample_count},
          {"standard_error", decimal(e.standard_error)}};
}

std::string sign_str(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Md;
  return std::nullopt;
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
  }
  return "json";
}

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kDecimalDigits, x);
  return buf;
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::string render_md(const std::string& title, const Table& t) {
  std::ostringstream out;
  out << "# " << title << "\n\n";
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << '\n';
  };
  line(t.header);
  out << '|';
  for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::string render(const Output& out, Format format, const Json& config) {
  switch (format) {
    case Format::Json: {
      Json doc{{"tool_version", kToolVersion}, {"config", config}, {"results", out.results}};
      return doc.dump(2) + "\n";
    }
    case Format::Csv: return render_csv(out.table);
    case Format::Md: return render_md(out.title, out.table);
  }
  return {};
}

Output rho_output(std::uint64_t m, unsigned jobs, std::optional<unsigned> depth, cocycle::Cocycle which) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  const unsigned L = depth.value_or(cocycle::min_depth(m));
  const auto d = cocycle::exact_rho_at_depth(m, L, jobs, which);
  const auto st = cocycle::rho_stats(d);
  Output out;
  out.title = "rho_" + std::to_string(m);
  out.results = {{"m", m},
                 {"config", ternary::to_config(m).str()},
                 {"depth", L},
                 {"cocycle", which == cocycle::Cocycle::Phi ? "phi" : "phi0"},
                 {"distribution", dist_json(d)},
                 {"mean", rat_str(st.mean)},
                 {"variance", rat_str(st.variance)}};
  out.table.header = {"m", "k", "mass"};
  for (const auto& [k, q] : d.masses()) out.table.rows.push_back({std::to_string(m), std::to_string(k), rat_str(q)});
  return out;
}

Output mc_output(std::uint64_t m, std::uint64_t samples, std::uint64_t seed, unsigned digit_depth, unsigned jobs) {
  const auto est = cocycle::mc_rho(m, samples, seed, digit_depth, jobs);
  const auto exact = cocycle::exact_rho(m, jobs);
  Output out;
  out.title = "mc_rho_" + std::to_string(m);
  Json bins = Json::array();
  out.table.header = {"m", "k", "count", "frequency", "std_error", "exact", "z"};
  for (const auto& b : est.bins) {
    const double ex = exact.mass(b.k).get_d();
    const double z = b.std_error > 0 ? (b.frequency - ex) / b.std_error : 0.0;
    bins.push_back({{"k", b.k},
                    {"count", b.count},
                    {"frequency", decimal(b.frequency)},
                    {"std_error", decimal(b.std_error)},
                    {"exact", rat_str(exact.mass(b.k))},
                    {"z", decimal(z)}});
    out.table.rows.push_back({std::to_string(m), std::to_string(b.k), std::to_string(b.count), decimal(b.frequency),
                              decimal(b.std_error), rat_str(exact.mass(b.k)), decimal(z)});
  }
  out.results = {{"m", m}, {"samples", samples}, {"seed", seed}, {"digit_depth", digit_depth}, {"bins", bins}};
  return out;
}

std::string prefactor_form(const polylab::IntPoly& numerators, const mpz_class& denominator) {
  std::string body;
  const auto& c = numerators.coeffs();
  for (int k = numerators.degree(); k >= 0; --k) {
    const mpz_class& a = c[static_cast<std::size_t>(k)];
    if (sgn(a) == 0) continue;
    if (!body.empty()) body += sgn(a) > 0 ? " + " : " - ";
    else if (sgn(a) < 0) body += "-";
    const mpz_class mag = abs(a);
    if (k == 0 || mag != 1) body += mag.get_str();
    if (k >= 1) body += "z";
    if (k >= 2) body += "^" + std::to_string(k);
  }
  return "1/" + denominator.get_str() + "(" + body + ")";
}

std::vector<TableRow> table_rows(std::uint64_t max_m, unsigned jobs) {
  if (max_m == 0) throw std::invalid_argument("max_m must be positive");
  const auto polys = polylab::limit_polynomials(1, max_m, jobs);
  std::vector<TableRow> rows;
  for (const auto& lp : polys) {
    if (lp.m % 3 == 0) continue;
    const std::uint64_t conj = ternary::conjugate(lp.m);
    if (conj < lp.m) continue;
    TableRow r;
    r.m = lp.m;
    r.config = ternary::to_config(lp.m).str();
    mpz_class den = 1;
    for (const auto& q : lp.tilde.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    r.denominator = den;
    r.numerators = polylab::to_int(lp.tilde * mpq_class(den));
    r.degree = lp.degree();
    r.starred = ternary::is_first_occurrence_form(lp.m);
    if (conj != lp.m && conj <= max_m) r.skipped_conjugate = conj;
    rows.push_back(std::move(r));
  }
  return rows;
}

Output table_output(std::uint64_t max_m, unsigned jobs) {
  const auto rows = table_rows(max_m, jobs);
  Output out;
  out.title = "Limit polynomials for m <= " + std::to_string(max_m);
  Json arr = Json::array();
  out.table.header = {"Index m", "Configuration", "Polynomial"};
  for (const auto& r : rows) {
    Json nums = Json::array();
    for (const auto& c : r.numerators.coeffs()) nums.push_back(c.get_str());
    arr.push_back({{"m", r.m},
                   {"config", r.config},
                   {"starred", r.starred},
                   {"skipped_conjugate", r.skipped_conjugate ? Json(*r.skipped_conjugate) : Json()},
                   {"degree", r.degree},
                   {"denominator", r.denominator.get_str()},
                   {"numerators", nums}});
    out.table.rows.push_back({std::to_string(r.m) + (r.starred ? "*" : ""), r.config + "_3",
                              prefactor_form(r.numerators, r.denominator)});
  }
  out.results = {{"max_m", max_m}, {"row_count", rows.size()}, {"rows", arr}};
  return out;
}

int exit_code_for(const std::vector<hypothesis::HypothesisReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.verdict == hypothesis::Verdict::Fails) return 2;
    if (r.verdict == hypothesis::Verdict::NotDecidable) undecided = true;
  }
  return undecided ? 3 : 0;
}

Output hypotheses_output(const std::vector<std::string>& tags, const hypothesis::RunOptions& options) {
  std::vector<hypothesis::HypothesisReport> reports;
  for (const auto& t : tags) reports.push_back(hypothesis::run_tag(t, options));
  Output out;
  out.title = "Hypothesis verdicts";
  Json arr = Json::array();
  out.table.header = {"id", "range", "verdict", "checked", "counterexamples", "undecided"};
  for (const auto& r : reports) {
    arr.push_back(hypothesis::to_json(r));
    out.table.rows.push_back({r.id, std::to_string(r.range.lo) + ".." + std::to_string(r.range.hi),
                              hypothesis::to_string(r.verdict), std::to_string(r.checked),
                              std::to_string(r.counterexamples.size()), std::to_string(r.undecided.size())});
  }
  out.results = {{"reports", arr}};
  out.exit_code = exit_code_for(reports);
  return out;
}

Output roots_output(std::uint64_t m, const mpq_class& precision) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (sgn(precision) <= 0) throw std::invalid_argument("precision must be positive");
  const auto lp = polylab::limit_polynomial(m);
  const auto prim = lp.primitive();
  auto iso = polylab::isolate_real_roots(prim, precision);
  Output out;
  out.title = "Roots of the reduced polynomial for m = " + std::to_string(m);
  out.results = {{"m", m},
                 {"config", ternary::to_config(m).str()},
                 {"degree", lp.degree()},
                 {"polynomial", polylab::to_string(lp.tilde)},
                 {"primitive", polylab::to_string(prim)},
                 {"precision", rat_str(precision)},
                 {"all_real", iso.all_real}};
  if (lp.degree() <= polylab::kMaxFactorDegree) {
    const auto f = polylab::factor_over_Q(prim);
    Json fs = Json::array();
    for (const auto& [g, e] : f.factors) fs.push_back({{"factor", polylab::to_string(g)}, {"multiplicity", e}});
    out.results["factorization"] = fs;
  } else {
    out.results["factorization_notice"] = "degree above the factorization cap of " +
                                          std::to_string(polylab::kMaxFactorDegree) + "; field omitted";
  }
  out.results["reciprocal_pairs_verified"] =
      iso.reciprocal_pairs_verified ? Json(*iso.reciprocal_pairs_verified) : Json();
  Json boxes = Json::array();
  for (const auto& b : iso.boxes)
    boxes.push_back({{"lo", rat_str(b.lo)},
                     {"hi", rat_str(b.hi)},
                     {"approx", decimal(b.midpoint())},
                     {"multiplicity", b.multiplicity}});
  out.results["boxes"] = boxes;

  Json duals = Json::object();
  out.table.header = {"root", "lo", "hi", "approx", "convention", "abs_one", "re_sign", "re", "im"};
  for (auto c : polylab::all_dual_conventions()) {
    const auto d = polylab::mobius_dual(lp.tilde, c);
    Json images = Json::array();
    for (std::size_t i = 0; i < iso.boxes.size(); ++i) {
      auto& b = iso.boxes[i];
      const auto img = polylab::mobius_root_image(b, c);
      images.push_back({{"at_infinity", img.at_infinity},
                        {"abs_one", img.abs_one},
                        {"abs_one_identity", img.abs_one_identity},
                        {"re_sign", img.re_sign},
                        {"re", decimal(img.re_approx)},
                        {"im", decimal(img.im_approx)}});
      out.table.rows.push_back({std::to_string(i), rat_str(b.lo), rat_str(b.hi), decimal(b.midpoint()),
                                polylab::to_string(c), img.abs_one ? "1" : "0", sign_str(img.re_sign),
                                decimal(img.re_approx), decimal(img.im_approx)});
    }
    duals[polylab::to_string(c)] = {{"dual", polylab::to_string(d.normalized)},
                                    {"scalar", d.scalar.str()},
                                    {"degree_drop", d.degree_drop},
                                    {"self_reciprocal", polylab::is_self_reciprocal(d.normalized)},
                                    {"images", images}};
  }
  out.results["duals"] = duals;
  return out;
}

Output dist_output(const std::vector<std::uint64_t>& ms, unsigned jobs) {
  Output out;
  out.title = "Centered and scaled rho_m";
  out.table.header = {"m", "k", "mass", "z_score", "normal_density"};
  Json arr = Json::array();
  for (std::uint64_t m : ms) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    const auto d = cocycle::exact_rho(m, jobs);
    const auto st = cocycle::rho_stats(d);
    const double mu = st.mean.get_d();
    const double sigma = std::sqrt(st.variance.get_d());
    Json pts = Json::array();
    for (const auto& [k, q] : d.masses()) {
      const double z = sigma > 0 ? (static_cast<double>(k) - mu) / sigma : 0.0;
      const double dens = std::exp(-z * z / 2) / std::sqrt(2 * std::numbers::pi);
      out.table.rows.push_back({std::to_string(m), std::to_string(k), rat_str(q), decimal(z), decimal(dens)});
      pts.push_back({{"k", k}, {"mass", rat_str(q)}, {"z_score", decimal(z)}, {"normal_density", decimal(dens)}});
    }
    arr.push_back({{"m", m}, {"mean", rat_str(st.mean)}, {"variance", rat_str(st.variance)}, {"points", pts}});
  }
  out.results = {{"distributions", arr}};
  return out;
}

Output weaklimit_output(std::uint64_t m, unsigned n, unsigned generation, const std::string& u, const std::string& v,
                        unsigned jobs) {
  const auto w = symbolic::generate(generation);
  const auto r = symbolic::weak_limit_check(m, n, w, u, v, jobs);
  Output out;
  out.title = "Weak limit check";
  out.results = {{"m", m},
                 {"n", n},
                 {"generation", generation},
                 {"word_length", w.size()},
                 {"u", u},
                 {"v", v},
                 {"observed", estimate_json(r.observed)},
                 {"predicted", decimal(r.predicted)},
                 {"abs_error", decimal(r.abs_error)},
                 {"orientation", symbolic::to_string(r.calibration.chosen)},
                 {"calibration_error_positive", decimal(r.calibration.error_positive)},
                 {"calibration_error_negative", decimal(r.calibration.error_negative)}};
  out.table.header = {"m", "n", "generation", "u", "v", "lag", "observed", "predicted", "abs_error", "orientation"};
  out.table.rows.push_back({std::to_string(m), std::to_string(n), std::to_string(generation), u, v,
                            std::to_string(r.observed.lag), decimal(r.observed.value), decimal(r.predicted),
                            decimal(r.abs_error), symbolic::to_string(r.calibration.chosen)});
  return out;
}

Output twoscale_output(unsigned s, unsigned n, unsigned generation, const std::string& u, const std::string& v,
                       unsigned jobs) {
  const auto w = symbolic::generate(generation);
  const auto r = symbolic::two_scale_check(s, n, w, u, v, jobs);
  Output out;
  out.title = "Two-scale check";
  Json coeffs = Json::array();
  for (double c : r.coefficients) coeffs.push_back(decimal(c));
  Json vars = Json::array();
  out.table.header = {"s", "n", "u", "v", "tag", "lag", "observed", "predicted", "abs_error", "best"};
  for (std::size_t i = 0; i < r.variants.size(); ++i) {
    const auto& var = r.variants[i];
    vars.push_back({{"tag", var.tag},
                    {"observed", estimate_json(var.observed)},
                    {"predicted", decimal(var.predicted)},
                    {"abs_error", decimal(var.abs_error)}});
    out.table.rows.push_back({std::to_string(s), std::to_string(n), u, v, var.tag, std::to_string(var.lag),
                              decimal(var.observed.value), decimal(var.predicted), decimal(var.abs_error),
                              i == r.best ? "1" : "0"});
  }
  out.results = {{"s", s},
                 {"n", n},
                 {"generation", generation},
                 {"u", u},
                 {"v", v},
                 {"lag", r.lag},
                 {"coefficients", coeffs},
                 {"variants", vars},
                 {"best", r.variants[r.best].tag},
                 {"best_abs_error", decimal(r.variants[r.best].abs_error)}};
  return out;
}

Output audit_output(unsigned l1, unsigned l2, unsigned binomial_d, const std::vector<unsigned>& ls, unsigned l_max,
                    unsigned s_max, const std::vector<std::uint64_t>& clt_ms) {
  Output out;
  out.title = "Closed-form audits";
  out.table.header = {"audit", "parameters", "match", "detail"};
  const auto gamma = hypothesis::check_gamma_lemma(l1, l2);
  for (const auto& c : gamma.pairwise)
    out.table.rows.push_back({"gamma_lemma", std::to_string(l1) + "," + std::to_string(l2), c.match ? "1" : "0",
                              c.formula});
  const auto trend = hypothesis::check_binomial_limit(binomial_d, ls);
  for (const auto& p : trend.points)
    out.table.rows.push_back({"binomial_limit", "d=" + std::to_string(binomial_d) + ",l=" + std::to_string(p.l),
                              trend.strictly_decreasing ? "1" : "0", rat_str(p.distance)});
  const auto eis = hypothesis::check_eisenstein_family(l_max);
  out.table.rows.push_back({"eisenstein_family", "l_max=" + std::to_string(l_max),
                            eis.verdict == hypothesis::Verdict::HoldsInRange ? "1" : "0",
                            hypothesis::to_string(eis.verdict)});
  Json quad = Json::array();
  for (const auto& q : hypothesis::check_quadratic_family(s_max)) {
    quad.push_back({{"s", q.s},
                    {"m", q.m},
                    {"algebraic", hypothesis::to_json(q.algebraic)},
                    {"deferred_to_empirical", q.deferred_to_empirical}});
    out.table.rows.push_back({"quadratic_family", "s=" + std::to_string(q.s), q.algebraic.match ? "1" : "0",
                              "deferred to two-scale check"});
  }
  Json clt = Json::array();
  for (auto m : clt_ms) {
    const auto c = hypothesis::clt_distance(m);
    clt.push_back({{"m", m},
                   {"kolmogorov_to_normal", decimal(c.kolmogorov_to_normal)},
                   {"kolmogorov_to_binomial", rat_str(c.kolmogorov_to_binomial)},
                   {"kolmogorov_to_binomial_approx", decimal(c.kolmogorov_to_binomial.get_d())}});
    out.table.rows.push_back({"clt_distance", "m=" + std::to_string(m), "-",
                              decimal(c.kolmogorov_to_normal) + " / " + rat_str(c.kolmogorov_to_binomial)});
  }
  out.results = {{"gamma_lemma", hypothesis::to_json(gamma)},
                 {"binomial_limit", hypothesis::to_json(trend)},
                 {"eisenstein_family", hypothesis::to_json(eis)},
                 {"quadratic_family", quad},
                 {"clt_distance", clt}};
  return out;
}

}  // namespace chacon::report
