#include "chacon/ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace chacon::ternary {

std::string TernaryConfig::str() const {
  std::string out;
  out.reserve(digits.size());
  for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
  return out;
}

TernaryConfig to_config(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("to_config: m must be positive");
  TernaryConfig config;
  for (; m > 0; m /= 3) config.digits.push_back(static_cast<Digit>(m % 3));
  std::reverse(config.digits.begin(), config.digits.end());
  return config;
}

std::uint64_t from_config(const TernaryConfig& config) {
  std::uint64_t value = 0;
  for (Digit d : config.digits) {
    if (d > 2) throw std::invalid_argument("from_config: digit out of range");
    if (value > (UINT64_MAX - d) / 3) throw std::overflow_error("from_config: value exceeds 64 bits");
    value = value * 3 + d;
  }
  return value;
}

TernaryConfig parse_config(const std::string& text) {
  std::string body = text;
  if (body.size() > 2 && body.ends_with("_3")) body.resize(body.size() - 2);
  if (body.empty()) throw std::invalid_argument("parse_config: empty configuration");
  TernaryConfig config;
  for (char ch : body) {
    if (ch < '0' || ch > '2') throw std::invalid_argument("parse_config: invalid digit in '" + text + "'");
    config.digits.push_back(static_cast<Digit>(ch - '0'));
  }
  if (config.digits.front() == 0) throw std::invalid_argument("parse_config: leading zero in '" + text + "'");
  return config;
}

Reduced3 reduce3(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("reduce3: m must be positive");
  Reduced3 r{m, 0};
  while (r.core % 3 == 0) {
    r.core /= 3;
    ++r.exponent;
  }
  return r;
}

unsigned length3(std::uint64_t m) {
  return static_cast<unsigned>(to_config(reduce3(m).core).size());
}

std::uint64_t conjugate(std::uint64_t m) {
  TernaryConfig config = to_config(reduce3(m).core);
  std::reverse(config.digits.begin(), config.digits.end());
  return from_config(config);
}

std::uint64_t pow3(unsigned e) {
  if (e > kMaxDepth) throw std::overflow_error("pow3: exponent exceeds 40");
  std::uint64_t p = 1;
  for (unsigned i = 0; i < e; ++i) p *= 3;
  return p;
}

bool is_first_occurrence_form(std::uint64_t m) {
  if (m == 0) return false;
  std::uint64_t v = 2 * m - 1;
  while (v % 3 == 0) v /= 3;
  return v == 1;
}

Cylinder::Cylinder(unsigned depth, std::uint64_t residue) : depth_(depth), residue_(residue) {
  if (depth > kMaxDepth) throw std::invalid_argument("Cylinder: depth exceeds 40");
  if (residue >= pow3(depth))
    throw std::invalid_argument("Cylinder: residue must be below 3^depth");
}

Digit Cylinder::digit(unsigned position) const {
  if (position == 0 || position > depth_) throw std::out_of_range("Cylinder::digit: position out of range");
  std::uint64_t r = residue_;
  for (unsigned i = 1; i < position; ++i) r /= 3;
  return static_cast<Digit>(r % 3);
}

namespace {

std::optional<DigitHit> first_digit_not(const Cylinder& c, Digit skip) {
  std::uint64_t r = c.residue();
  for (unsigned pos = 1; pos <= c.depth(); ++pos, r /= 3) {
    const auto d = static_cast<Digit>(r % 3);
    if (d != skip) return DigitHit{pos, d};
  }
  return std::nullopt;
}

}  // namespace

std::optional<DigitHit> first_nonzero_digit(const Cylinder& c) { return first_digit_not(c, 0); }

std::optional<DigitHit> first_non_two_digit(const Cylinder& c) { return first_digit_not(c, 2); }

}  // namespace chacon::ternary
