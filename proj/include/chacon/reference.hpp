#pragma once

// Published reference values the audits compare against. Computations never
// read these as inputs.

#include <cstdint>
#include <vector>

namespace chacon::reference {

struct PrintedDual {
  std::uint64_t m;
  std::vector<long> coeffs;  // ascending powers of w
  long prefactor_im_num;     // printed scalar is (prefactor_im_num / prefactor_den) * i
  long prefactor_den;
};

/// Dual polynomials for m = 122, 124, 130 as printed.
inline const std::vector<PrintedDual>& printed_duals() {
  static const std::vector<PrintedDual> duals{
      {122, {35, -117, 209, -250, 209, -117, 35}, -2, 486},
      {124, {77, -232, 415, -496, 415, -232, 77}, -1, 486},
      {130, {39, -117, 205, -250, 205, -117, 39}, -2, 486},
  };
  return duals;
}

struct PrintedPolynomial {
  std::uint64_t m;
  std::vector<long> numerators;  // ascending powers of z
  long denominator;
};

/// Printed reduced polynomial for the configuration 10101 (m = 91).
inline const PrintedPolynomial& printed_m91() {
  static const PrintedPolynomial p{91, {56, 187, 187, 56}, 486};
  return p;
}

}  // namespace chacon::reference
