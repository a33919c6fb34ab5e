// Sparse finitely-supported integer functions on Z and the handful of
// difference-calculus primitives everything else is written in terms of.
#ifndef LIAISON_INTFN_HPP
#define LIAISON_INTFN_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liaison {

using Deg = std::int64_t;
using Val = std::int64_t;

// Thrown on malformed inputs and violated operation preconditions.  The
// message names the violated clause.
class invalid_input : public std::runtime_error {
public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// 1 for l >= 0, 0 otherwise.  The indicator convention used by every
// formula of the calculus.
constexpr Val step(Deg l) { return l >= 0 ? 1 : 0; }

// Integer-valued function on Z with finite support, stored canonically as a
// sorted entry list with no explicit zeros.  Equality is structural on the
// canonical form.  Values are immutable after construction.
class IntFn {
public:
  using Entry = std::pair<Deg, Val>;

  IntFn() = default;
  IntFn(std::initializer_list<Entry> init) : IntFn(std::vector<Entry>(init)) {}
  explicit IntFn(std::vector<Entry> entries);

  // Entries must be strictly increasing in degree with nonzero values.
  static IntFn from_sorted(std::vector<Entry> entries);

  Val at(Deg l) const;
  Val operator()(Deg l) const { return at(l); }

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Support bounds; both require a nonzero function.
  Deg min_support() const;
  Deg max_support() const;

  Val sum() const;
  Val weighted_sum() const;  // sum of l * f(l)
  bool nonnegative() const;

  IntFn plus(const IntFn& g) const;
  IntFn minus(const IntFn& g) const;
  IntFn negated() const;
  // g with g(l) = f(l - k).
  IntFn shifted(Deg k) const;

  // 1 on [a, b], zero elsewhere (zero function when a > b).
  static IntFn indicator(Deg a, Deg b);

  bool operator==(const IntFn&) const = default;
  // Lexicographic on the canonical entry list; a total order used to
  // normalize enumeration output.
  bool operator<(const IntFn& g) const { return entries_ < g.entries_; }

private:
  std::vector<Entry> entries_;
};

// m-fold first difference D f(l) = f(l) - f(l-1).
IntFn diff(const IntFn& f, int m);

// Partial sum over degrees <= a (the # operator).
Val sharp(const IntFn& f, Deg a);

// Function of partial sums l -> sharp(f, l), representable as an IntFn
// exactly when f sums to zero.
IntFn partial_sums(const IntFn& f);

// min/max degree with strictly positive value.  Empty optionals encode the
// +infinity / -infinity sentinels of the no-positive-value case.
struct PosBounds {
  std::optional<Deg> a;  // min, +inf when absent
  std::optional<Deg> o;  // max, -inf when absent
};
PosBounds bounds(const IntFn& f);

// One-sided connectedness predicates for nonnegative functions.
enum class ConnMode { geq, gt, leq, lt };
bool connected_in_degrees(const IntFn& f, ConnMode mode, Deg bound);

// Connected in degrees <= b, connected in degrees >= a, and nonzero at
// every degree of [a, b] (the last clause is vacuous when a > b).
bool connected_about(const IntFn& f, Deg a, Deg b);

// Connected about [f_a, f_o]; vacuously true for the zero function.
bool connected(const IntFn& f);

// Integer function that is 0 far left, arbitrary on a finite window and a
// constant from tail_start on.  Canonical form uses the least tail_start.
class TailFn {
public:
  TailFn() = default;
  TailFn(IntFn window, Val tail, Deg tail_start);

  static TailFn step_fn() { return TailFn(IntFn{}, 1, 0); }

  Val at(Deg l) const { return l >= tail_start_ ? tail_ : window_.at(l); }
  Val operator()(Deg l) const { return at(l); }

  const IntFn& window() const { return window_; }
  Val tail() const { return tail_; }
  Deg tail_start() const { return tail_start_; }
  bool is_zero() const { return tail_ == 0 && window_.is_zero(); }

  bool operator==(const TailFn&) const = default;

private:
  IntFn window_;
  Val tail_ = 0;
  Deg tail_start_ = 0;
};

// m-fold difference of an eventually-constant function; finitely supported
// for m >= 1.
IntFn diff(const TailFn& f, int m);

}  // namespace liaison

#endif
