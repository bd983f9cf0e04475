#pragma once

// Loaders for the reference tables stored under tests/fixtures.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixtures {

struct PolyRow {
  std::uint64_t m = 0;
  std::string config;
  bool starred = false;
  long denominator = 1;
  std::vector<long> numerators;  // ascending powers
};

struct FactorRow {
  std::uint64_t m = 0;
  std::string config;
  long denominator = 1;
  std::vector<std::vector<long>> factors;  // ascending powers
};

inline std::string path(const std::string& name) { return std::string(CHACON_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

inline std::vector<PolyRow> poly_rows(const std::string& name) {
  std::vector<PolyRow> rows;
  for (const auto& line : data_lines(name)) {
    std::istringstream ss(line);
    PolyRow r;
    int star = 0;
    ss >> r.m >> r.config >> star >> r.denominator;
    r.starred = star != 0;
    for (long c; ss >> c;) r.numerators.push_back(c);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<FactorRow> factor_rows(const std::string& name) {
  std::vector<FactorRow> rows;
  for (const auto& line : data_lines(name)) {
    std::istringstream ss(line);
    FactorRow r;
    ss >> r.m >> r.config >> r.denominator;
    r.factors.emplace_back();
    for (std::string tok; ss >> tok;) {
      if (tok == "|")
        r.factors.emplace_back();
      else
        r.factors.back().push_back(std::stol(tok));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace fixtures
