#pragma once

// Cocycles over the 3-adic odometer and the exact distribution rho_m of the
// Birkhoff sum phi^(m)(y) = phi(y) + phi(y+1) + ... + phi(y+m-1) under Haar
// measure.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chacon/ternary.hpp"

namespace chacon::cocycle {

enum class CocycleValue { Zero, One, Deep };

std::string to_string(CocycleValue v);

/// 0 if the first nonzero visible digit is 1, 1 if it is 2, Deep if none is visible.
CocycleValue phi(const ternary::Cylinder& c);

/// 0 if the first visible digit other than 2 is 0, 1 if it is 1, Deep if all visible digits are 2.
CocycleValue phi0(const ternary::Cylinder& c);

/// Finitely supported probability measure on the integers with exact rational weights.
class RationalDist {
 public:
  RationalDist() = default;
  /// Drops zero entries; throws on negative weights.
  explicit RationalDist(std::map<std::int64_t, mpq_class> mass);

  const std::map<std::int64_t, mpq_class>& masses() const { return mass_; }
  bool empty() const { return mass_.empty(); }
  std::size_t size() const { return mass_.size(); }
  mpq_class mass(std::int64_t k) const;
  mpq_class total() const;
  std::int64_t min_support() const;
  std::int64_t max_support() const;

  RationalDist translated(std::int64_t offset) const;
  /// The t with other == translated(t), if any.
  std::optional<std::int64_t> translation_to(const RationalDist& other) const;
  /// Least common multiple of the reduced denominators.
  mpz_class common_denominator() const;

  friend bool operator==(const RationalDist& a, const RationalDist& b) { return a.mass_ == b.mass_; }

 private:
  std::map<std::int64_t, mpq_class> mass_;
};

/// Which cocycle drives the Birkhoff sum.
enum class Cocycle { Phi, Phi0 };

/// Smallest L with 3^L >= m.
unsigned min_depth(std::uint64_t m);

/// Deepest truncation the residue enumeration accepts.
inline constexpr unsigned kMaxExactDepth = 15;

/// Exact rho_m at the minimal depth.
RationalDist exact_rho(std::uint64_t m, unsigned jobs = 1);

/// Exact rho_m enumerating all 3^depth residues; depth must satisfy 3^depth >= m.
RationalDist exact_rho_at_depth(std::uint64_t m, unsigned depth, unsigned jobs = 1,
                                Cocycle cocycle = Cocycle::Phi);

struct McBin {
  std::int64_t k = 0;
  std::uint64_t count = 0;
  double frequency = 0.0;
  double std_error = 0.0;  // binomial sqrt(p(1-p)/n)
};

struct McEstimate {
  std::uint64_t m = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned digit_depth = 0;
  std::vector<McBin> bins;  // k = 0..m

  const McBin& bin(std::int64_t k) const;
};

/// Samples processed per independent random substream.
inline constexpr std::uint64_t kMcBlockSize = 1u << 16;

/// Monte-Carlo estimate of rho_m from i.i.d. Haar samples truncated at digit_depth.
/// Output depends only on (m, samples, seed, digit_depth), never on jobs.
McEstimate mc_rho(std::uint64_t m, std::uint64_t samples, std::uint64_t seed, unsigned digit_depth,
                  unsigned jobs = 1);

struct Moments {
  mpq_class mean;
  mpq_class variance;
};

Moments rho_stats(const RationalDist& d);

}  // namespace chacon::cocycle
