#include "chacon/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "chacon/factor.hpp"
#include "chacon/polylab.hpp"

namespace chacon::polylab {

namespace {

// Positive rescaling to a primitive integer vector; keeps every sign.
RatPoly positive_normalize(const RatPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) {
    ints.push_back(mpz_class(c.get_num() * (l / c.get_den())));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<mpq_class> out;
  for (const auto& c : ints) out.emplace_back(mpz_class(c / g));
  return RatPoly(std::move(out));
}

int sign_of(const RatPoly& p, const mpq_class& x) { return sgn(p.eval(x)); }

}  // namespace

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  chain_.push_back(to_rat(squarefree));
  if (squarefree.degree() == 0) return;
  chain_.push_back(positive_normalize(chain_[0].derivative()));
  while (chain_.back().degree() > 0) {
    RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(positive_normalize(-r));
  }
}

int SturmSequence::variations_at(const mpq_class& x) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    const int s = sign_of(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(int direction) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const { return variations_at_infinity(-1) - variations_at_infinity(+1); }

RootCount real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
  RootCount rc;
  const auto parts = squarefree_decomposition(primitive_part(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    const int n = SturmSequence(parts[i]).count_all();
    rc.distinct += n;
    rc.with_multiplicity += n * static_cast<int>(i + 1);
  }
  return rc;
}

// ---------------------------------------------------------------------------

void bisect(RootBox& box) {
  if (box.lo == box.hi) return;
  const RatPoly f = to_rat(box.factor);
  const mpq_class mid = (box.lo + box.hi) / 2;
  const int s_mid = sign_of(f, mid);
  if (s_mid == 0) {
    box.lo = box.hi = mid;
  } else if (s_mid == sign_of(f, box.lo)) {
    box.lo = mid;
  } else {
    box.hi = mid;
  }
}

void refine(RootBox& box, const mpq_class& precision) {
  if (sgn(precision) <= 0) throw std::invalid_argument("refine: precision must be positive");
  while (box.width() > precision) bisect(box);
}

int sign_at_root(RootBox& box, const RatPoly& q) {
  if (q.is_zero()) return 0;
  if (box.lo == box.hi) return sgn(q.eval(box.lo));
  const IntPoly qi = primitive_part(q);
  const IntPoly common = gcd(box.factor, qi);
  if (common.degree() >= 1 && SturmSequence(common).count(box.lo, box.hi) == 1) return 0;
  const SturmSequence q_chain(squarefree_part(qi));
  for (;;) {
    if (box.lo == box.hi) return sgn(q.eval(box.lo));
    const int s_lo = sign_of(q, box.lo);
    if (s_lo != 0 && q_chain.count(box.lo, box.hi) == 0) return s_lo;
    bisect(box);
  }
}

namespace {

std::vector<RootBox> isolate_squarefree(const IntPoly& f, unsigned multiplicity) {
  std::vector<RootBox> out;
  if (f.degree() < 1) return out;
  const RatPoly fr = to_rat(f);
  const SturmSequence chain(f);
  mpq_class bound = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class r(abs(c), abs(f.leading()));
    r.canonicalize();
    if (r > bound) bound = r;
  }
  bound += 1;

  struct Interval {
    mpq_class lo, hi;
  };
  std::vector<Interval> stack{{-bound, bound}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int n = chain.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({iv.lo, iv.hi, multiplicity, f});
      continue;
    }
    // split at a point that is not a root
    mpq_class split;
    for (long den = 2;; ++den) {
      bool found = false;
      for (long num = 1; num < den && !found; ++num) {
        mpq_class t(num, den);
        t.canonicalize();
        split = iv.lo + (iv.hi - iv.lo) * t;
        found = sign_of(fr, split) != 0;
      }
      if (found) break;
    }
    stack.push_back({split, iv.hi});
    stack.push_back({iv.lo, split});
  }
  return out;
}

bool overlaps(const RootBox& a, const mpq_class& lo, const mpq_class& hi) {
  if (a.lo == a.hi) return lo == hi ? a.lo == lo : (lo < a.lo && a.lo < hi);
  if (lo == hi) return a.lo < lo && lo < a.hi;
  return a.lo < hi && lo < a.hi;
}

bool reciprocal_matching(std::vector<RootBox>& boxes) {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    if (sgn(b.lo) * sgn(b.hi) <= 0) return false;
    const mpq_class lo = 1 / b.hi, hi = 1 / b.lo;
    int hits = 0;
    std::size_t partner = 0;
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      if (overlaps(boxes[j], lo, hi)) {
        ++hits;
        partner = j;
      }
    }
    if (hits != 1 || boxes[partner].multiplicity != b.multiplicity) return false;
  }
  return true;
}

// Collapses the box onto its root when that root is a rational a/b with b | leading
// coefficient and the box is narrow enough to leave at most two candidates for a.
void snap_rational_root(RootBox& box) {
  if (box.lo == box.hi || !mpz_class(abs(box.factor.leading())).fits_ulong_p()) return;
  const RatPoly f = to_rat(box.factor);
  const mpq_class mid = (box.lo + box.hi) / 2;
  for (const auto& b : positive_divisors(box.factor.leading())) {
    if (mpq_class(b * box.width()) > 2) continue;
    mpz_class a;
    const mpq_class scaled = mid * b;
    mpz_fdiv_q(a.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    for (const mpz_class& cand : {a, mpz_class(a + 1)}) {
      mpq_class x(cand, b);
      x.canonicalize();
      if (box.contains(x) && sgn(f.eval(x)) == 0) {
        box.lo = box.hi = x;
        return;
      }
    }
  }
}

}  // namespace

RootIsolation isolate_real_roots(const IntPoly& p, const mpq_class& precision) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (sgn(precision) <= 0) throw std::invalid_argument("isolate_real_roots: precision must be positive");
  RootIsolation iso;
  const auto parts = squarefree_decomposition(primitive_part(p));
  int with_mult = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto& box : isolate_squarefree(parts[i], static_cast<unsigned>(i + 1))) {
      refine(box, precision);
      snap_rational_root(box);
      with_mult += static_cast<int>(box.multiplicity);
      iso.boxes.push_back(std::move(box));
    }
  }
  auto by_position = [](const RootBox& a, const RootBox& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); };
  std::sort(iso.boxes.begin(), iso.boxes.end(), by_position);
  iso.all_real = with_mult == p.degree();

  if (p.degree() >= 1 && sgn(p.coeffs().front()) != 0 && is_self_reciprocal(p)) {
    bool ok = reciprocal_matching(iso.boxes);
    for (int round = 0; !ok && round < 200; ++round) {
      for (auto& b : iso.boxes) bisect(b);
      ok = reciprocal_matching(iso.boxes);
    }
    std::sort(iso.boxes.begin(), iso.boxes.end(), by_position);
    iso.reciprocal_pairs_verified = ok;
  }
  return iso;
}

}  // namespace chacon::polylab
