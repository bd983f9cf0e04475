#pragma once

// Executable checks for the conjectures and closed-form claims about the limit
// polynomials. Every checker recomputes from exact_rho; the strongest positive
// verdict is "holds in range".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chacon/mobius.hpp"
#include "chacon/poly.hpp"

namespace chacon::hypothesis {

using Json = nlohmann::json;
using polylab::RatPoly;

enum class Verdict { HoldsInRange, Fails, NotDecidable };

std::string to_string(Verdict v);

struct IndexRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

/// Parses "a..b" (or a single index "a").
IndexRange parse_range(const std::string& text);

struct Counterexample {
  std::uint64_t m = 0;
  std::string kind;
  Json witness;
};

struct HypothesisReport {
  std::string id;
  std::string statement;
  IndexRange range;
  Verdict verdict = Verdict::HoldsInRange;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::uint64_t> undecided;
  Json evidence = Json::object();

  /// Sets the verdict from the collected entries: fails iff counterexamples exist,
  /// else not-decidable if any index was undecided. Evidence-only reports are
  /// marked not-decidable directly.
  void finalize();
};

Json to_json(const HypothesisReport& r);

// -- per-index conjectures -------------------------------------------------

HypothesisReport check_self_reciprocal(IndexRange range, unsigned jobs = 1);
HypothesisReport check_conjugate_symmetry(IndexRange range, unsigned jobs = 1);
HypothesisReport check_integer_and_gcd(IndexRange range, unsigned jobs = 1);
HypothesisReport check_triplication(IndexRange range, unsigned jobs = 1);
HypothesisReport check_factor_structure(IndexRange range, unsigned jobs = 1);
HypothesisReport check_lee_yang(IndexRange range, unsigned jobs = 1);
HypothesisReport check_degree_bound(IndexRange range, unsigned jobs = 1);

/// Conventions whose dual polynomials are proportional to all printed reference duals.
std::vector<polylab::DualConvention> identify_dual_convention();

/// Root images on the unit circle; the verdict uses `convention`, tallies cover all conventions.
HypothesisReport check_dual_roots(IndexRange range, polylab::DualConvention convention, unsigned jobs = 1);

/// First index of each degree d <= d_max versus (3^(d-1) + 1) / 2.
HypothesisReport check_first_occurrence(unsigned d_max, unsigned jobs = 1);

/// Minimum over the range of max_j |a_{j+1}/a_j - 1|. Evidence only.
HypothesisReport flatness_scan(IndexRange range, unsigned jobs = 1);

struct CoincidenceClasses {
  /// Classes of 3-coprime indexes sharing one reduced polynomial, size >= 2, ordered by smallest member.
  std::vector<std::vector<std::uint64_t>> classes;
  /// Classes not generated by conjugation alone.
  std::vector<std::vector<std::uint64_t>> non_conjugate;
  std::size_t singletons = 0;
};

CoincidenceClasses check_coincidences(IndexRange range, unsigned jobs = 1);
HypothesisReport coincidence_report(IndexRange range, unsigned jobs = 1);

// -- closed-form audits ----------------------------------------------------

struct ClosedFormCheck {
  std::string formula;
  std::vector<long> parameters;
  RatPoly predicted;
  RatPoly computed;
  bool match = false;
  std::vector<mpq_class> discrepancy;  // predicted - computed, coefficient-wise
};

ClosedFormCheck compare_closed_form(std::string formula, std::vector<long> parameters, RatPoly predicted,
                                    RatPoly computed);
Json to_json(const ClosedFormCheck& c);

/// Index of the configuration 1 0^g1 1 0^g2 ... 1.
std::uint64_t spaced_ones_index(const std::vector<unsigned>& gaps);

/// ((3^s - 1) + 2(3^s + 1) z + (3^s - 1) z^2) / (4 * 3^s).
RatPoly quadratic_family_prediction(unsigned s);

struct QuadraticFamilyEntry {
  unsigned s = 0;
  std::uint64_t m = 0;  // 3^s + 1
  ClosedFormCheck algebraic;  // against the reduced polynomial of m
  bool deferred_to_empirical = true;
};

std::vector<QuadraticFamilyEntry> check_quadratic_family(unsigned s_max);

/// gamma * (z^3 + 1) + (1/2 - gamma) * (z^2 + z).
RatPoly gamma_lemma_prediction(unsigned l1, unsigned l2);
mpq_class gamma_value(unsigned l1, unsigned l2);
/// ((3a^2 + 2a)(z^3 + 1) + (3^(2l+1) - 3a^2 - 2a)(z^2 + z)) / (2 * 3^(2l+1)), a = (3^l - 1)/2.
RatPoly cubic_theorem_prediction(unsigned l);

struct GammaAudit {
  unsigned l1 = 0, l2 = 0;
  std::uint64_t m = 0;
  RatPoly exact;
  std::vector<std::pair<std::string, RatPoly>> candidates;  // includes "exact"
  std::vector<ClosedFormCheck> pairwise;                    // every unordered pair of candidates
  /// Smallest shift t in [-2, 2] with cubic_theorem_prediction(l + t) == exact (equal gaps only).
  std::optional<int> cubic_theorem_index_shift;
  bool mismatch_detected = false;
};

GammaAudit check_gamma_lemma(unsigned l1, unsigned l2);
Json to_json(const GammaAudit& a);

struct BinomialTrendPoint {
  unsigned l = 0;
  std::uint64_t m = 0;
  int degree = 0;
  mpq_class distance;  // max_j |a_j - C(d, j) / 2^d|
};

struct BinomialTrend {
  unsigned d = 0;
  std::vector<BinomialTrendPoint> points;
  bool strictly_decreasing = false;
};

/// Configurations with d ones separated by l zeros.
BinomialTrend check_binomial_limit(unsigned d, const std::vector<unsigned>& ls);
Json to_json(const BinomialTrend& t);

/// R_m = P_m / (z + 1) for m = 1 0^l 1 0^l 1 with z = -1 + w and Eisenstein witnesses, l = 1..l_max.
HypothesisReport check_eisenstein_family(unsigned l_max);

struct CltDistance {
  std::uint64_t m = 0;
  double kolmogorov_to_normal = 0.0;
  mpq_class kolmogorov_to_binomial;
};

CltDistance clt_distance(std::uint64_t m);

/// Maps a tag ("H1".."H8" or a name) to its canonical name; empty when unknown.
std::string canonical_tag(const std::string& tag);
const std::vector<std::string>& all_tags();

struct RunOptions {
  IndexRange range{1, 365};
  unsigned jobs = 1;
  unsigned d_max = 8;
  unsigned l_max = 3;
  polylab::DualConvention convention = polylab::DualConvention::Kappa1Rotated;
};

/// Runs the checker behind a canonical tag.
HypothesisReport run_tag(const std::string& tag, const RunOptions& options);

}  // namespace chacon::hypothesis
