#include "chacon/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "chacon/parallel.hpp"

namespace chacon::cocycle {

using ternary::Cylinder;

std::string to_string(CocycleValue v) {
  switch (v) {
    case CocycleValue::Zero: return "0";
    case CocycleValue::One: return "1";
    case CocycleValue::Deep: return "deep";
  }
  return "?";
}

CocycleValue phi(const Cylinder& c) {
  const auto hit = ternary::first_nonzero_digit(c);
  if (!hit) return CocycleValue::Deep;
  return hit->digit == 1 ? CocycleValue::Zero : CocycleValue::One;
}

CocycleValue phi0(const Cylinder& c) {
  const auto hit = ternary::first_non_two_digit(c);
  if (!hit) return CocycleValue::Deep;
  return hit->digit == 0 ? CocycleValue::Zero : CocycleValue::One;
}

// ---------------------------------------------------------------------------

RationalDist::RationalDist(std::map<std::int64_t, mpq_class> mass) {
  for (auto& [k, w] : mass) {
    w.canonicalize();
    if (sgn(w) < 0) throw std::invalid_argument("RationalDist: negative weight");
    if (sgn(w) > 0) mass_.emplace(k, std::move(w));
  }
}

mpq_class RationalDist::mass(std::int64_t k) const {
  const auto it = mass_.find(k);
  return it == mass_.end() ? mpq_class(0) : it->second;
}

mpq_class RationalDist::total() const {
  mpq_class sum = 0;
  for (const auto& [k, w] : mass_) sum += w;
  return sum;
}

std::int64_t RationalDist::min_support() const {
  if (mass_.empty()) throw std::logic_error("RationalDist: empty support");
  return mass_.begin()->first;
}

std::int64_t RationalDist::max_support() const {
  if (mass_.empty()) throw std::logic_error("RationalDist: empty support");
  return mass_.rbegin()->first;
}

RationalDist RationalDist::translated(std::int64_t offset) const {
  RationalDist out;
  for (const auto& [k, w] : mass_) out.mass_.emplace(k + offset, w);
  return out;
}

std::optional<std::int64_t> RationalDist::translation_to(const RationalDist& other) const {
  if (mass_.empty() || other.mass_.empty()) {
    if (mass_.empty() && other.mass_.empty()) return 0;
    return std::nullopt;
  }
  const std::int64_t t = other.min_support() - min_support();
  if (translated(t) == other) return t;
  return std::nullopt;
}

mpz_class RationalDist::common_denominator() const {
  mpz_class l = 1;
  for (const auto& [k, w] : mass_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
  return l;
}

// ---------------------------------------------------------------------------

unsigned min_depth(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("min_depth: m must be positive");
  unsigned depth = 0;
  for (std::uint64_t p = 1; p < m; p *= 3) ++depth;
  return depth;
}

namespace {

constexpr std::uint8_t kDeep = 2;

// Cocycle value on every visible residue j in [0, 3^depth); kDeep marks the
// residue whose visible digits do not determine the value.
std::vector<std::uint8_t> visible_values(unsigned depth, Cocycle cocycle) {
  const std::uint64_t n = ternary::pow3(depth);
  std::vector<std::uint8_t> values(n, kDeep);
  const std::uint8_t skip = cocycle == Cocycle::Phi ? 0 : 2;
  for (std::uint64_t j = 0; j < n; ++j) {
    std::uint64_t r = j;
    for (unsigned pos = 0; pos < depth; ++pos, r /= 3) {
      const auto d = static_cast<std::uint8_t>(r % 3);
      if (d == skip) continue;
      if (cocycle == Cocycle::Phi)
        values[j] = d == 1 ? 0 : 1;
      else
        values[j] = d == 0 ? 0 : 1;
      break;
    }
  }
  return values;
}

}  // namespace

RationalDist exact_rho_at_depth(std::uint64_t m, unsigned depth, unsigned jobs, Cocycle cocycle) {
  if (m == 0) throw std::invalid_argument("exact_rho: m must be positive");
  if (depth > kMaxExactDepth) throw std::invalid_argument("exact_rho: depth exceeds enumeration limit");
  const std::uint64_t n = ternary::pow3(depth);
  if (n < m) throw std::invalid_argument("exact_rho: depth too shallow, need 3^depth >= m");

  const auto values = visible_values(depth, cocycle);
  // prefix[x] = sum of determined values on [0, x)
  std::vector<std::uint32_t> prefix(n + 1, 0);
  std::uint64_t deep_index = n;
  for (std::uint64_t j = 0; j < n; ++j) {
    prefix[j + 1] = prefix[j] + (values[j] == 1 ? 1 : 0);
    if (values[j] == kDeep) deep_index = j;
  }

  // Every residue contributes 2 units of 1/(2*3^depth): both to base(r) when all
  // m values are visible, or one each to base(r) and base(r)+1 when the window
  // hits the undetermined residue (first hidden nonzero digit is 1 or 2, each
  // with Haar probability 1/2).
  constexpr std::size_t kChunks = 64;
  const std::size_t chunks = std::min<std::uint64_t>(kChunks, n);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    std::vector<std::uint64_t> counts(m + 2, 0);
    const std::uint64_t lo = n * c / chunks;
    const std::uint64_t hi = n * (c + 1) / chunks;
    for (std::uint64_t r = lo; r < hi; ++r) {
      std::uint64_t base;
      bool deep;
      if (r + m <= n) {
        base = prefix[r + m] - prefix[r];
        deep = deep_index >= r && deep_index < r + m;
      } else {
        base = (prefix[n] - prefix[r]) + prefix[r + m - n];
        deep = deep_index >= r || deep_index < r + m - n;
      }
      if (deep) {
        counts[base] += 1;
        counts[base + 1] += 1;
      } else {
        counts[base] += 2;
      }
    }
    partial[c] = std::move(counts);
  });

  std::vector<std::uint64_t> counts(m + 2, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k) counts[k] += p[k];

  std::map<std::int64_t, mpq_class> mass;
  const mpz_class denom = mpz_class(2) * mpz_class(static_cast<unsigned long>(n));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    mpq_class w(mpz_class(static_cast<unsigned long>(counts[k])), denom);
    w.canonicalize();
    mass.emplace(static_cast<std::int64_t>(k), w);
  }
  return RationalDist(std::move(mass));
}

RationalDist exact_rho(std::uint64_t m, unsigned jobs) {
  return exact_rho_at_depth(m, min_depth(m), jobs, Cocycle::Phi);
}

// ---------------------------------------------------------------------------

const McBin& McEstimate::bin(std::int64_t k) const {
  for (const auto& b : bins)
    if (b.k == k) return b;
  throw std::out_of_range("McEstimate::bin: no such bin");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint8_t random_digit(std::mt19937_64& gen) {
  // 2^64 = 1 (mod 3): rejecting the single top value leaves an exact multiple of 3.
  std::uint64_t x;
  do {
    x = gen();
  } while (x == UINT64_MAX);
  return static_cast<std::uint8_t>(x % 3);
}

}  // namespace

McEstimate mc_rho(std::uint64_t m, std::uint64_t samples, std::uint64_t seed, unsigned digit_depth,
                  unsigned jobs) {
  if (m == 0) throw std::invalid_argument("mc_rho: m must be positive");
  if (samples == 0) throw std::invalid_argument("mc_rho: samples must be positive");
  const auto min_digits = 2 * ternary::to_config(m).size() + 8;
  if (digit_depth < min_digits)
    throw std::invalid_argument("mc_rho: digit_depth must be at least " + std::to_string(min_digits));

  const std::uint64_t blocks = (samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<std::vector<std::uint64_t>> partial(blocks);
  parallel_for(blocks, jobs, [&](std::size_t b) {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(b)));
    std::vector<std::uint64_t> counts(m + 1, 0);
    std::vector<std::uint8_t> y(digit_depth);
    const std::uint64_t begin = b * kMcBlockSize;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kMcBlockSize);
    for (std::uint64_t s = begin; s < end; ++s) {
      for (auto& d : y) d = random_digit(gen);
      std::uint64_t sum = 0;
      for (std::uint64_t k = 0; k < m; ++k) {
        auto it = std::find_if(y.begin(), y.end(), [](std::uint8_t d) { return d != 0; });
        if (it == y.end()) {
          // all visible digits zero: the first hidden nonzero digit decides
          std::uint8_t d;
          do {
            d = random_digit(gen);
          } while (d == 0);
          sum += d == 2 ? 1 : 0;
        } else {
          sum += *it == 2 ? 1 : 0;
        }
        for (auto& d : y) {  // y <- y + 1, carry past the last digit is dropped
          if (d < 2) {
            ++d;
            break;
          }
          d = 0;
        }
      }
      ++counts[sum];
    }
    partial[b] = std::move(counts);
  });

  McEstimate est{m, samples, seed, digit_depth, {}};
  std::vector<std::uint64_t> counts(m + 1, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k) counts[k] += p[k];
  const double n = static_cast<double>(samples);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double p = static_cast<double>(counts[k]) / n;
    est.bins.push_back({static_cast<std::int64_t>(k), counts[k], p, std::sqrt(p * (1.0 - p) / n)});
  }
  return est;
}

Moments rho_stats(const RationalDist& d) {
  mpq_class mean = 0, second = 0;
  for (const auto& [k, w] : d.masses()) {
    const mpq_class kk(static_cast<long>(k));
    mean += kk * w;
    second += kk * kk * w;
  }
  return {mean, second - mean * mean};
}

}  // namespace chacon::cocycle
