#pragma once

// Base-3 configurations of positive integers and depth-L cylinders of the
// 3-adic integers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chacon::ternary {

using Digit = std::uint8_t;

/// Largest cylinder depth whose residues fit in 64 bits (3^40 < 2^64).
inline constexpr unsigned kMaxDepth = 40;

/// Base-3 digits of a positive integer, most-significant first.
struct TernaryConfig {
  std::vector<Digit> digits;

  std::size_t size() const { return digits.size(); }
  /// Digit string such as "10101".
  std::string str() const;

  friend bool operator==(const TernaryConfig&, const TernaryConfig&) = default;
};

TernaryConfig to_config(std::uint64_t m);
std::uint64_t from_config(const TernaryConfig& config);

/// Parses a digit string over {0,1,2}; an optional trailing "_3" is accepted.
TernaryConfig parse_config(const std::string& text);

struct Reduced3 {
  std::uint64_t core = 1;
  unsigned exponent = 0;
};

/// m = core * 3^exponent with 3 not dividing core.
Reduced3 reduce3(std::uint64_t m);

/// Digit count of the 3-coprime core of m.
unsigned length3(std::uint64_t m);

/// Reverses the digit string of the 3-coprime core of m.
std::uint64_t conjugate(std::uint64_t m);

inline bool is_self_conjugate(std::uint64_t m) { return conjugate(m) == reduce3(m).core; }

/// 3^e; throws std::overflow_error past 3^40.
std::uint64_t pow3(unsigned e);

/// True when m = (3^k + 1) / 2 for some k >= 0, i.e. the configuration is 11...12 (or 1, 2).
bool is_first_occurrence_form(std::uint64_t m);

/// A depth-L cylinder: all y in Z_3 with y = residue (mod 3^depth).
class Cylinder {
 public:
  Cylinder(unsigned depth, std::uint64_t residue);

  unsigned depth() const { return depth_; }
  std::uint64_t residue() const { return residue_; }
  /// k-th visible digit, least-significant first, 1-based.
  Digit digit(unsigned position) const;

 private:
  unsigned depth_;
  std::uint64_t residue_;
};

struct DigitHit {
  unsigned position = 0;  // 1-based, least-significant first
  Digit digit = 0;

  friend bool operator==(const DigitHit&, const DigitHit&) = default;
};

/// First visible digit different from 0; empty when all visible digits are 0.
std::optional<DigitHit> first_nonzero_digit(const Cylinder& c);

/// First visible digit different from 2; empty when all visible digits are 2.
std::optional<DigitHit> first_non_two_digit(const Cylinder& c);

}  // namespace chacon::ternary
