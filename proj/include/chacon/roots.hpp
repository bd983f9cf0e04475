#pragma once

// Real roots of integer polynomials: Sturm counts and isolation by exact
// rational bisection.

#include <optional>
#include <vector>

#include "chacon/poly.hpp"

namespace chacon::polylab {

/// Sturm chain of a square-free polynomial, kept primitive at every step
/// (positive rescaling does not change sign patterns).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);

  /// Distinct real roots in (lo, hi]; lo and hi are rational.
  int count(const mpq_class& lo, const mpq_class& hi) const;
  /// Distinct real roots on the whole line.
  int count_all() const;

 private:
  int variations_at(const mpq_class& x) const;
  int variations_at_infinity(int direction) const;
  std::vector<RatPoly> chain_;
};

struct RootCount {
  int distinct = 0;
  int with_multiplicity = 0;
};

RootCount real_root_count(const IntPoly& p);

/// Open interval (lo, hi) holding exactly one real root of `factor`, a
/// square-free factor of the input; lo == hi marks an exactly known rational root.
struct RootBox {
  mpq_class lo;
  mpq_class hi;
  unsigned multiplicity = 1;
  IntPoly factor;

  mpq_class width() const { return hi - lo; }
  double midpoint() const { return mpq_class((lo + hi) / 2).get_d(); }
  bool contains(const mpq_class& x) const { return lo == hi ? x == lo : (lo < x && x < hi); }
};

struct RootIsolation {
  std::vector<RootBox> boxes;  // ascending
  bool all_real = false;       // distinct real roots with multiplicity == degree
  /// For self-reciprocal input: whether every box was matched with the box of its
  /// reciprocal root by interval containment. Empty for other inputs.
  std::optional<bool> reciprocal_pairs_verified;
};

RootIsolation isolate_real_roots(const IntPoly& p, const mpq_class& precision);

/// Halves the box around its root until width <= precision.
void refine(RootBox& box, const mpq_class& precision);
/// One bisection step.
void bisect(RootBox& box);

/// Sign of q at the real root isolated by box: -1, 0 or +1. Refines the box as needed.
int sign_at_root(RootBox& box, const RatPoly& q);

}  // namespace chacon::polylab
