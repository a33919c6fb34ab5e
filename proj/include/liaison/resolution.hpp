// Twist-level models of the two short resolution shapes and their
// transforms under double links and linkages.  Morphisms are never
// modeled: a resolution is two twist multisets plus the n-th difference
// function of the core sheaf's h^0, and every transform used by the
// calculus survives at that level.
#ifndef LIAISON_RESOLUTION_HPP
#define LIAISON_RESOLUTION_HPP

#include <optional>
#include <vector>

#include "liaison/character.hpp"

namespace liaison {

// Delta^n h^0 of the core sheaf: zero far left, explicit on a finite
// window, constant (the sheaf rank) from tail_start on.
class CoreDelta {
public:
  CoreDelta() = default;
  CoreDelta(IntFn window, Val tail_rank, Deg tail_start);

  static CoreDelta zero() { return CoreDelta(); }

  Val at(Deg l) const { return fn_.at(l); }
  bool is_zero() const { return fn_.is_zero(); }
  const IntFn& window() const { return fn_.window(); }
  Val tail_rank() const { return fn_.tail(); }
  Deg tail_start() const { return fn_.tail_start(); }

  // Least degree with a nonzero value (tail_start for a pure tail).
  Deg lo() const;

  bool operator==(const CoreDelta&) const = default;

private:
  TailFn fn_;
};

enum class ResKind { N, E };

// kind N: 0 -> P -> N0(-core_twist) + Q -> I_X
// kind E: 0 -> E0(-core_twist) + P -> Q -> I_X
// p/q are the twist multisets of the kernel-side and middle dissocie
// parts; core is Delta^n h^0 of the untwisted core sheaf.  dual_core, when
// present, is the same datum for the dual sheaf; it is independent data
// and is required to run a linkage when core is nonzero.
struct ResolutionData {
  ResKind kind = ResKind::N;
  std::vector<Deg> p;  // sorted
  std::vector<Deg> q;  // sorted
  CoreDelta core;
  std::optional<CoreDelta> dual_core;
  Deg core_twist = 0;

  bool operator==(const ResolutionData&) const = default;
};

ResolutionData make_resolution(ResKind kind, std::vector<Deg> p,
                               std::vector<Deg> q, CoreDelta core,
                               std::optional<CoreDelta> dual_core,
                               Deg core_twist);

// Character encoded by the resolution:
//   N: gamma(l) = core(l-t) + sum_q step(l-q) - sum_p step(l-p) - step(l)
//   E: gamma(l) = sum_q step(l-q) - core(l-t) - sum_p step(l-p) - step(l)
// Rejects data whose gamma is not an admissible character.
AdmissibleCharacter gamma_from_resolution(const ResolutionData& res, int n);

// Solves the N-shape identity for the core at core_twist 0:
//   core(l) = gamma0(l) + step(l) + sum_p step(l-p) - sum_q step(l-q)
// The tail (the core sheaf rank) must come out nonnegative.
CoreDelta core_from_minimal(const AdmissibleCharacter& gamma0,
                            const std::vector<Deg>& p,
                            const std::vector<Deg>& q, int n);

// Delta^n h^0 of the dual core sheaf, read off the minimal resolution of
// the dual class: linking the minimal element by (s0, t1) yields
//   0 -> N0^v(-s0-t1) -> P0^v(-s0-t1) + O(-s0) + O(-t1) -> I_{Y0},
// so the dual core is determined by the dual minimal character.
CoreDelta dual_core_via_minimal_link(const AdmissibleCharacter& gamma0_dual,
                                     const std::vector<Deg>& p0, Deg s0,
                                     Deg t1, int n);

// Double link of type (s, h): all twists shift by h, s+h joins the kernel
// stage, s joins the middle stage, core_twist grows by h.
ResolutionData resolution_double_link(const ResolutionData& res, Deg s, Deg h);

// Twist-level mapping cone for a linkage by degrees (s, t): kind flips,
// kernel stage becomes {d - q}, middle becomes {d - p} plus {s, t} with
// d = s + t, the core dualizes and retwists by d, and the trivial
// O(-d) pair is split off.
ResolutionData resolution_link(const ResolutionData& res, Deg s, Deg t);

// Cancels equal-twist kernel/middle pairs until the multisets are
// disjoint.  Syntactic only; gamma is invariant.
ResolutionData minimize_resolution(const ResolutionData& res);

// h2 - h1 >= 0 and r# >= s# everywhere, for kernel multisets of two
// resolutions sharing the same middle sheaf.
bool resolution_domination_check(const std::vector<Deg>& r,
                                 const std::vector<Deg>& s, Deg h1, Deg h2);

}  // namespace liaison

#endif
