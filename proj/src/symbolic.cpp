#include "chacon/symbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "chacon/cocycle.hpp"
#include "chacon/parallel.hpp"
#include "chacon/ternary.hpp"

namespace chacon::symbolic {

namespace {

constexpr std::size_t kBlock = 1u << 20;

CorrelationEstimate make_estimate(std::int64_t lag, std::uint64_t hits, std::uint64_t total) {
  CorrelationEstimate e;
  e.lag = lag;
  e.hits = hits;
  e.sample_count = total;
  e.value = static_cast<double>(hits) / static_cast<double>(total);
  e.standard_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(total));
  return e;
}

bool matches(const std::uint8_t* at, const Word& pat) {
  return std::equal(pat.symbols.begin(), pat.symbols.end(), at);
}

// Positions p in [first, last) with v at p and u at p + lag.
struct Window {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

Window window(const Word& w, std::size_t u_len, std::size_t v_len, std::int64_t lag) {
  const auto n = static_cast<std::int64_t>(w.size());
  Window win;
  win.first = std::max<std::int64_t>(0, -lag);
  win.last = std::min<std::int64_t>(n - static_cast<std::int64_t>(v_len),
                                    n - static_cast<std::int64_t>(u_len) - lag) + 1;
  if (win.last <= win.first) throw std::out_of_range("lag does not fit in the word");
  return win;
}

// hist[a * 4 + b]: length-2 code a at p and code b at p + lag.
struct JointCounts {
  std::array<std::uint64_t, 16> hist{};
  std::uint64_t total = 0;

  double value(unsigned v_code, unsigned u_code) const {
    return static_cast<double>(hist[v_code * 4 + u_code]) / static_cast<double>(total);
  }
};

JointCounts joint_counts(const Word& w, std::int64_t lag, unsigned jobs) {
  const Window win = window(w, 2, 2, lag);
  const std::size_t span = static_cast<std::size_t>(win.last - win.first);
  const std::size_t blocks = (span + kBlock - 1) / kBlock;
  const auto* s = w.symbols.data();
  auto parts = parallel_map<std::array<std::uint64_t, 16>>(blocks, jobs, [&](std::size_t b) {
    std::array<std::uint64_t, 16> h{};
    const std::int64_t lo = win.first + static_cast<std::int64_t>(b * kBlock);
    const std::int64_t hi = std::min<std::int64_t>(win.last, lo + static_cast<std::int64_t>(kBlock));
    for (std::int64_t p = lo; p < hi; ++p) {
      const unsigned a = s[p] * 2u + s[p + 1];
      const unsigned c = s[p + lag] * 2u + s[p + lag + 1];
      ++h[a * 4 + c];
    }
    return h;
  });
  JointCounts out;
  for (const auto& h : parts)
    for (std::size_t i = 0; i < 16; ++i) out.hist[i] += h[i];
  out.total = span;
  return out;
}

int sign_of(Orientation o) { return o == Orientation::Positive ? 1 : -1; }

}  // namespace

std::uint64_t heights(unsigned n) { return (ternary::pow3(n) - 1) / 2; }

std::string Word::str() const {
  std::string out(symbols.size(), '0');
  for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = static_cast<char>('0' + symbols[i]);
  return out;
}

Word generate(unsigned n, unsigned max_generation) {
  if (n > max_generation)
    throw std::length_error("generate: generation " + std::to_string(n) + " exceeds the budget of " +
                            std::to_string(max_generation));
  Word w;
  w.symbols.reserve(heights(n + 1));
  w.symbols.push_back(0);
  // w_(k+1) = w_k w_k 1 w_k, equivalent to substituting every symbol of w_k.
  for (unsigned k = 0; k < n; ++k) {
    const std::size_t len = w.symbols.size();
    w.symbols.reserve(3 * len + 1);
    w.symbols.insert(w.symbols.end(), w.symbols.begin(), w.symbols.begin() + static_cast<std::ptrdiff_t>(len));
    w.symbols.push_back(1);
    w.symbols.insert(w.symbols.end(), w.symbols.begin(), w.symbols.begin() + static_cast<std::ptrdiff_t>(len));
  }
  w.generation = n;
  return w;
}

Word pattern(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("pattern must be nonempty");
  Word w;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("pattern symbols must be 0 or 1: " + text);
    w.symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

CorrelationEstimate cylinder_freq(const Word& w, const Word& pat, unsigned jobs) {
  if (pat.size() == 0) throw std::invalid_argument("cylinder_freq: empty pattern");
  if (pat.size() > w.size()) throw std::out_of_range("cylinder_freq: pattern longer than word");
  return lag_correlation(w, pat, pat, 0, jobs);
}

CorrelationEstimate lag_correlation(const Word& w, const Word& u, const Word& v, std::int64_t lag, unsigned jobs) {
  if (u.size() == 0 || v.size() == 0) throw std::invalid_argument("lag_correlation: empty pattern");
  const Window win = window(w, u.size(), v.size(), lag);
  const std::size_t span = static_cast<std::size_t>(win.last - win.first);
  const std::size_t blocks = (span + kBlock - 1) / kBlock;
  const auto* s = w.symbols.data();
  auto parts = parallel_map<std::uint64_t>(blocks, jobs, [&](std::size_t b) {
    std::uint64_t hits = 0;
    const std::int64_t lo = win.first + static_cast<std::int64_t>(b * kBlock);
    const std::int64_t hi = std::min<std::int64_t>(win.last, lo + static_cast<std::int64_t>(kBlock));
    for (std::int64_t p = lo; p < hi; ++p)
      if (matches(s + p, v) && matches(s + p + lag, u)) ++hits;
    return hits;
  });
  std::uint64_t hits = 0;
  for (auto h : parts) hits += h;
  return make_estimate(lag, hits, span);
}

std::string to_string(Orientation o) { return o == Orientation::Positive ? "positive" : "negative"; }

OrientationCalibration calibrate_orientation(const Word& w, unsigned n, unsigned jobs) {
  const auto far = joint_counts(w, static_cast<std::int64_t>(heights(n)), jobs);
  const auto c0 = joint_counts(w, 0, jobs);
  const auto cp = joint_counts(w, 1, jobs);
  const auto cm = joint_counts(w, -1, jobs);
  OrientationCalibration cal;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const double obs = far.value(a, b);
      cal.error_positive += std::fabs(obs - (c0.value(a, b) + cp.value(a, b)) / 2);
      cal.error_negative += std::fabs(obs - (c0.value(a, b) + cm.value(a, b)) / 2);
    }
  cal.chosen = cal.error_positive < cal.error_negative ? Orientation::Positive : Orientation::Negative;
  return cal;
}

WeakLimitResult weak_limit_check(std::uint64_t m, unsigned n, const Word& w, const std::string& u,
                                 const std::string& v, unsigned jobs) {
  if (m == 0) throw std::invalid_argument("weak_limit_check: m must be positive");
  const Word pu = pattern(u), pv = pattern(v);
  const std::uint64_t lag = m * heights(n);
  if (lag + std::max(pu.size(), pv.size()) >= w.size())
    throw std::length_error("weak_limit_check: word of generation " + std::to_string(w.generation) +
                            " is too short for lag " + std::to_string(lag));
  WeakLimitResult r;
  r.m = m;
  r.n = n;
  r.generation = w.generation;
  r.u = u;
  r.v = v;
  r.calibration = calibrate_orientation(w, n, jobs);
  r.observed = lag_correlation(w, pu, pv, static_cast<std::int64_t>(lag), jobs);
  const int sign = sign_of(r.calibration.chosen);
  const auto rho = cocycle::exact_rho(m);
  for (const auto& [k, q] : rho.masses())
    r.predicted += q.get_d() * lag_correlation(w, pu, pv, sign * k, jobs).value;
  r.abs_error = std::fabs(r.observed.value - r.predicted);
  return r;
}

TwoScaleResult two_scale_check(unsigned s, unsigned n, const Word& w, const std::string& u, const std::string& v,
                               unsigned jobs) {
  const Word pu = pattern(u), pv = pattern(v);
  const std::uint64_t p = ternary::pow3(s);
  TwoScaleResult r;
  r.s = s;
  r.n = n;
  r.generation = w.generation;
  r.u = u;
  r.v = v;
  r.lag = (p + 1) * heights(n) - (p - 1) / 2;
  if (r.lag + std::max(pu.size(), pv.size()) >= w.size())
    throw std::length_error("two_scale_check: word of generation " + std::to_string(w.generation) +
                            " is too short for lag " + std::to_string(r.lag));
  const double den = 4.0 * static_cast<double>(p);
  r.coefficients = {static_cast<double>(p - 1) / den, 2.0 * static_cast<double>(p + 1) / den,
                    static_cast<double>(p - 1) / den};
  for (int lag_sign : {1, -1}) {
    const auto observed = lag_correlation(w, pu, pv, lag_sign * static_cast<std::int64_t>(r.lag), jobs);
    for (int pred_sign : {1, -1}) {
      TwoScaleVariant var;
      var.tag = std::string("lag") + (lag_sign > 0 ? "+" : "-") + "_pred" + (pred_sign > 0 ? "+" : "-");
      var.lag = observed.lag;
      var.observed = observed;
      for (std::size_t j = 0; j < r.coefficients.size(); ++j)
        var.predicted += r.coefficients[j] * lag_correlation(w, pu, pv, pred_sign * static_cast<std::int64_t>(j), jobs).value;
      var.abs_error = std::fabs(var.observed.value - var.predicted);
      r.variants.push_back(var);
    }
  }
  for (std::size_t i = 1; i < r.variants.size(); ++i)
    if (r.variants[i].abs_error < r.variants[r.best].abs_error) r.best = i;
  return r;
}

void write_word(const std::string& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  const std::string s = w.str();
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

Word read_word(const std::string& path, unsigned generation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  Word w;
  w.generation = generation;
  char c;
  while (in.get(c)) {
    if (c != '0' && c != '1') throw std::runtime_error("word file holds a symbol other than 0 or 1: " + path);
    w.symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (w.size() != heights(generation + 1))
    throw std::runtime_error("word file length does not match generation " + std::to_string(generation));
  return w;
}

}  // namespace chacon::symbolic
