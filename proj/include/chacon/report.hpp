#pragma once

// Serialized outputs shared by the CLI and the acceptance suite. Every output is
// a JSON result plus a flat table rendered as CSV or markdown.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chacon/cocycle.hpp"
#include "chacon/hypotheses.hpp"
#include "chacon/poly.hpp"

namespace chacon::report {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";
/// Significant digits of every decimal string.
inline constexpr int kDecimalDigits = 12;

enum class Format { Json, Csv, Md };

std::optional<Format> parse_format(const std::string& name);
std::string to_string(Format f);

/// Decimal string with kDecimalDigits significant digits.
std::string decimal(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::string title;
  Json results;
  Table table;
  int exit_code = 0;
};

/// {"tool_version", "config", "results"} for JSON; the table otherwise.
std::string render(const Output& out, Format format, const Json& config);

std::string render_csv(const Table& t);
std::string render_md(const std::string& title, const Table& t);

// -- builders --------------------------------------------------------------

/// Exact rho_m; depth defaults to the minimal one.
Output rho_output(std::uint64_t m, unsigned jobs, std::optional<unsigned> depth = std::nullopt,
                  cocycle::Cocycle which = cocycle::Cocycle::Phi);
Output mc_output(std::uint64_t m, std::uint64_t samples, std::uint64_t seed, unsigned digit_depth, unsigned jobs);

struct TableRow {
  std::uint64_t m = 0;
  std::string config;
  polylab::IntPoly numerators;  // ascending powers
  mpz_class denominator;
  int degree = 0;
  bool starred = false;                       // configuration 11...12
  std::optional<std::uint64_t> skipped_conjugate;  // conjugate index folded into this row
};

/// One row per 3-coprime m <= max_m whose conjugate is not smaller.
std::vector<TableRow> table_rows(std::uint64_t max_m, unsigned jobs);
/// "1/9(2z^2 + 5z + 2)": denominator, then numerators from the top power down.
std::string prefactor_form(const polylab::IntPoly& numerators, const mpz_class& denominator);
Output table_output(std::uint64_t max_m, unsigned jobs);

/// Exit code 2 if any report fails, else 3 if any is not decidable, else 0.
Output hypotheses_output(const std::vector<std::string>& tags, const hypothesis::RunOptions& options);
int exit_code_for(const std::vector<hypothesis::HypothesisReport>& reports);

Output roots_output(std::uint64_t m, const mpq_class& precision);

/// Columns m, k, mass, z_score, normal_density (standard normal pdf at the z-score).
Output dist_output(const std::vector<std::uint64_t>& ms, unsigned jobs);

Output weaklimit_output(std::uint64_t m, unsigned n, unsigned generation, const std::string& u, const std::string& v,
                        unsigned jobs);
Output twoscale_output(unsigned s, unsigned n, unsigned generation, const std::string& u, const std::string& v,
                       unsigned jobs);

/// Closed-form audits: gamma lemma at (l1, l2), binomial trend, Eisenstein family, quadratic family, CLT distances.
Output audit_output(unsigned l1, unsigned l2, unsigned binomial_d, const std::vector<unsigned>& ls, unsigned l_max,
                    unsigned s_max, const std::vector<std::uint64_t>& clt_ms);

}  // namespace chacon::report
