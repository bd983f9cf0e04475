#pragma once

// Words of the substitution 0 -> 0010, 1 -> 1 and empirical lag correlations
// along long prefixes of the fixed point.

#include <cstdint>
#include <string>
#include <vector>

namespace chacon::symbolic {

/// h_n = (3^n - 1) / 2.
std::uint64_t heights(unsigned n);

struct Word {
  std::vector<std::uint8_t> symbols;  // 0 or 1
  unsigned generation = 0;

  std::size_t size() const { return symbols.size(); }
  std::string str() const;
};

/// Largest generation generate() accepts unless told otherwise.
inline constexpr unsigned kDefaultMaxGeneration = 16;

/// w_n by iterated substitution from "0"; |w_n| = h_(n+1).
/// Throws std::length_error when n exceeds max_generation.
Word generate(unsigned n, unsigned max_generation = kDefaultMaxGeneration);

/// Parses a pattern over {'0','1'}; rejects empty strings and other characters.
Word pattern(const std::string& text);

struct CorrelationEstimate {
  std::int64_t lag = 0;
  double value = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t sample_count = 0;
  double standard_error = 0.0;
};

/// Sliding-window frequency of `pat` in w.
CorrelationEstimate cylinder_freq(const Word& w, const Word& pat, unsigned jobs = 1);

/// Frequency of positions p with v at p and u at p + lag, over all p where both fit.
CorrelationEstimate lag_correlation(const Word& w, const Word& u, const Word& v, std::int64_t lag,
                                    unsigned jobs = 1);

/// Sign applied to the small lags k of the prediction sum_k rho(k) c(sign * k).
enum class Orientation { Positive, Negative };

std::string to_string(Orientation o);

struct OrientationCalibration {
  Orientation chosen = Orientation::Negative;
  double error_positive = 0.0;  // summed over all pairs of length-2 patterns at m = 1
  double error_negative = 0.0;
};

/// Compares T^(h_n) against (c(0) + c(+1))/2 and (c(0) + c(-1))/2; ties choose Negative.
OrientationCalibration calibrate_orientation(const Word& w, unsigned n, unsigned jobs = 1);

struct WeakLimitResult {
  std::uint64_t m = 0;
  unsigned n = 0;
  unsigned generation = 0;
  std::string u, v;
  CorrelationEstimate observed;
  double predicted = 0.0;
  double abs_error = 0.0;
  OrientationCalibration calibration;
};

/// Lag correlation at m*h_n against sum_k rho_m(k) c(sign * k).
WeakLimitResult weak_limit_check(std::uint64_t m, unsigned n, const Word& w, const std::string& u,
                                 const std::string& v, unsigned jobs = 1);

struct TwoScaleVariant {
  std::string tag;  // "lag+_pred+" etc.: sign of the long lag, then sign of the small lags
  std::int64_t lag = 0;
  CorrelationEstimate observed;
  double predicted = 0.0;
  double abs_error = 0.0;
};

struct TwoScaleResult {
  unsigned s = 0;
  unsigned n = 0;
  unsigned generation = 0;
  std::string u, v;
  std::uint64_t lag = 0;  // (3^s + 1) h_n - (3^s - 1)/2
  std::vector<double> coefficients;  // ((3^s-1), 2(3^s+1), (3^s-1)) / (4*3^s)
  std::vector<TwoScaleVariant> variants;
  std::size_t best = 0;
};

TwoScaleResult two_scale_check(unsigned s, unsigned n, const Word& w, const std::string& u, const std::string& v,
                               unsigned jobs = 1);

/// ASCII '0'/'1' bytes, no separators.
void write_word(const std::string& path, const Word& w);
Word read_word(const std::string& path, unsigned generation);

}  // namespace chacon::symbolic
