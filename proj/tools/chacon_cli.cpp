// Command-line front end for the limit-polynomial toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chacon/mobius.hpp"
#include "chacon/report.hpp"

namespace {

using chacon::report::Json;

// Exit codes 2 and 3 belong to hypothesis verdicts.
constexpr int kUsageError = 1;
constexpr int kRuntimeError = 4;

struct Common {
  std::string format = "json";
  std::string out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  sub->add_option("--out", c.out, "output file (stdout when omitted)");
  sub->add_option("--jobs", c.jobs, "worker threads; output does not depend on it")->check(CLI::PositiveNumber);
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("CHACON_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const std::string& text, const Common& c) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  const auto path = output_path(c.out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

Json base_config(const std::string& subcommand, const Common& c) {
  return {{"subcommand", subcommand}, {"format", c.format}, {"decimal_digits", chacon::report::kDecimalDigits}};
}

std::vector<std::string> split_tags(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const auto piece = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) out.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace report = chacon::report;
  namespace hyp = chacon::hypothesis;

  CLI::App app{"Exact limit polynomials of the Chacon(3) transformation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kToolVersion);

  Common common;

  std::uint64_t m = 1;
  std::optional<unsigned> depth;
  std::string cocycle_name = "phi";
  auto* rho = app.add_subcommand("rho", "exact distribution rho_m");
  rho->add_option("--m,m", m, "index")->required()->check(CLI::PositiveNumber);
  rho->add_option("--depth", depth, "truncation depth (default: smallest L with 3^L >= m)");
  rho->add_option("--cocycle", cocycle_name, "phi or phi0")->check(CLI::IsMember({"phi", "phi0"}));
  add_common(rho, common);

  std::uint64_t samples = 1000000, seed = 0;
  unsigned digit_depth = 40;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of rho_m against the exact values");
  mc->add_option("--m,m", m, "index")->required()->check(CLI::PositiveNumber);
  mc->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "random seed");
  mc->add_option("--depth", digit_depth, "digits drawn per sample");
  add_common(mc, common);

  std::uint64_t max_m = 122;
  auto* table = app.add_subcommand("table", "table of reduced polynomials with conjugates folded");
  table->add_option("--max-m", max_m, "largest index")->check(CLI::PositiveNumber);
  add_common(table, common);

  std::string range_text = "1..365";
  std::vector<std::string> which_raw;
  unsigned d_max = 8, l_max = 3;
  std::string convention_name = "kappa1_rotated";
  auto* hyps = app.add_subcommand("hypotheses", "hypothesis verdicts; exit 0 holds, 2 fails, 3 not decidable");
  hyps->add_option("--range", range_text, "index range a..b");
  hyps->add_option("--which", which_raw, "tags (H1..H8 or names), comma separated; default all");
  hyps->add_option("--d-max", d_max, "largest degree for first_occurrence");
  hyps->add_option("--l-max", l_max, "largest gap for eisenstein_family");
  hyps->add_option("--convention", convention_name, "dual convention for dual_roots");
  add_common(hyps, common);

  std::string precision_text = "1/1000000";
  auto* roots = app.add_subcommand("roots", "isolated real roots and their dual images");
  roots->add_option("--m,m", m, "index")->required()->check(CLI::PositiveNumber);
  roots->add_option("--precision", precision_text, "box width, rational or decimal");
  add_common(roots, common);

  std::vector<std::uint64_t> ms{122, 124, 130};
  auto* dist = app.add_subcommand("dist", "centered and scaled rho_m with normal density samples");
  dist->add_option("--m,m", ms, "indexes")->check(CLI::PositiveNumber);
  add_common(dist, common);

  unsigned n = 8, gen = 14, s = 1;
  std::string u = "1", v = "1";
  auto* weak = app.add_subcommand("weaklimit", "lag correlation at m*h_n against the rho_m prediction");
  weak->add_option("--m", m, "index")->check(CLI::PositiveNumber);
  weak->add_option("--n", n, "tower level");
  weak->add_option("--gen", gen, "word generation");
  weak->add_option("--u", u, "pattern u");
  weak->add_option("--v", v, "pattern v");
  add_common(weak, common);

  auto* two = app.add_subcommand("twoscale", "lag correlation at (3^s+1)h_n - (3^s-1)/2 against the quadratic family");
  two->add_option("--s", s, "family parameter");
  two->add_option("--n", n, "tower level");
  two->add_option("--gen", gen, "word generation");
  two->add_option("--u", u, "pattern u");
  two->add_option("--v", v, "pattern v");
  add_common(two, common);

  unsigned l1 = 1, l2 = 1, binomial_d = 3, s_max = 3;
  std::vector<unsigned> ls{1, 2, 3, 4, 5};
  std::vector<std::uint64_t> clt_ms{1, 122, 1094};
  auto* audit = app.add_subcommand("audit", "closed-form audits against exact values");
  audit->add_option("--l1", l1, "first gap")->check(CLI::PositiveNumber);
  audit->add_option("--l2", l2, "second gap")->check(CLI::PositiveNumber);
  audit->add_option("--binomial-d", binomial_d, "number of ones")->check(CLI::PositiveNumber);
  audit->add_option("--ls", ls, "gaps for the binomial trend");
  audit->add_option("--l-max", l_max, "largest gap for the Eisenstein family");
  audit->add_option("--s-max", s_max, "largest quadratic family parameter");
  audit->add_option("--clt", clt_ms, "indexes for CLT distances")->check(CLI::PositiveNumber);
  add_common(audit, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    report::Output out;
    Json config;
    if (rho->parsed()) {
      config = base_config("rho", common);
      config["m"] = m;
      config["depth"] = depth ? Json(*depth) : Json();
      config["cocycle"] = cocycle_name;
      out = report::rho_output(m, common.jobs, depth,
                               cocycle_name == "phi" ? chacon::cocycle::Cocycle::Phi : chacon::cocycle::Cocycle::Phi0);
    } else if (mc->parsed()) {
      config = base_config("mc", common);
      config.update({{"m", m}, {"samples", samples}, {"seed", seed}, {"depth", digit_depth}});
      out = report::mc_output(m, samples, seed, digit_depth, common.jobs);
    } else if (table->parsed()) {
      config = base_config("table", common);
      config["max_m"] = max_m;
      out = report::table_output(max_m, common.jobs);
    } else if (hyps->parsed()) {
      hyp::RunOptions options;
      try {
        options.range = hyp::parse_range(range_text);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
      }
      options.jobs = common.jobs;
      options.d_max = d_max;
      options.l_max = l_max;
      const auto conv = chacon::polylab::parse_dual_convention(convention_name);
      if (!conv) {
        std::cerr << "usage error: unknown convention " << convention_name << "\n";
        return kUsageError;
      }
      options.convention = *conv;
      std::vector<std::string> tags;
      for (const auto& t : split_tags(which_raw)) {
        const auto name = hyp::canonical_tag(t);
        if (name.empty()) {
          std::cerr << "usage error: unknown hypothesis tag " << t << "\n";
          return kUsageError;
        }
        tags.push_back(name);
      }
      if (tags.empty()) tags = hyp::all_tags();
      config = base_config("hypotheses", common);
      config.update({{"range", range_text}, {"which", tags}, {"d_max", d_max}, {"l_max", l_max},
                     {"convention", convention_name}});
      out = report::hypotheses_output(tags, options);
    } else if (roots->parsed()) {
      mpq_class precision;
      try {
        precision = chacon::polylab::parse_rational(precision_text);
      } catch (const std::exception&) {
        std::cerr << "usage error: bad precision " << precision_text << "\n";
        return kUsageError;
      }
      config = base_config("roots", common);
      config.update({{"m", m}, {"precision", chacon::polylab::rat_str(precision)}});
      out = report::roots_output(m, precision);
    } else if (dist->parsed()) {
      config = base_config("dist", common);
      config["m"] = ms;
      out = report::dist_output(ms, common.jobs);
    } else if (weak->parsed()) {
      config = base_config("weaklimit", common);
      config.update({{"m", m}, {"n", n}, {"gen", gen}, {"u", u}, {"v", v}});
      out = report::weaklimit_output(m, n, gen, u, v, common.jobs);
    } else if (two->parsed()) {
      config = base_config("twoscale", common);
      config.update({{"s", s}, {"n", n}, {"gen", gen}, {"u", u}, {"v", v}});
      out = report::twoscale_output(s, n, gen, u, v, common.jobs);
    } else if (audit->parsed()) {
      config = base_config("audit", common);
      config.update({{"l1", l1}, {"l2", l2}, {"binomial_d", binomial_d}, {"ls", ls}, {"l_max", l_max},
                     {"s_max", s_max}, {"clt", clt_ms}});
      out = report::audit_output(l1, l2, binomial_d, ls, l_max, s_max, clt_ms);
    }
    emit(report::render(out, *report::parse_format(common.format), config), common);
    return out.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}
