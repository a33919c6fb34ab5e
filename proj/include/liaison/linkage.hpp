// Even linkage classes and their subschemes at the numeric level: a class
// is (n, gamma0, t1, e) with an optional dual, a subscheme is a height and
// a theta function over the class, and the operations implement double
// links, domination, decomposition into chains, linkage duality, the t1
// bound and the integrality conditions.
#ifndef LIAISON_LINKAGE_HPP
#define LIAISON_LINKAGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "liaison/domination.hpp"

namespace liaison {

// Numeric identity of a non-ACM even linkage class.  Rao-module data is
// carried only through height shifts, so the descriptor needs nothing
// beyond the minimal element's character and the class constants.
class LinkageClass {
public:
  struct DualData {
    AdmissibleCharacter gamma0;
    Deg t1;
    Val e;
    bool operator==(const DualData&) const = default;
  };

  LinkageClass(int n, AdmissibleCharacter gamma0, Deg t1, Val e, bool non_acm,
               std::optional<DualData> dual = std::nullopt);

  int n() const { return n_; }
  const AdmissibleCharacter& gamma0() const { return gamma0_; }
  Deg s0() const { return gamma0_.s0(); }
  Deg s1() const { return gamma0_.s1(); }
  Deg t1() const { return t1_; }
  Val e() const { return e_; }
  bool non_acm() const { return non_acm_; }

  bool has_dual() const { return dual_.has_value(); }
  const std::optional<DualData>& dual_data() const { return dual_; }
  // The dual class, whose own dual is this class.
  LinkageClass dual_class() const;

  // Same numeric identity (the dual pointer does not participate).
  bool same_class(const LinkageClass& other) const;

private:
  int n_;
  AdmissibleCharacter gamma0_;
  Deg t1_;
  Val e_;
  bool non_acm_;
  std::optional<DualData> dual_;
};

// A cohomology-preserving deformation class of subschemes: height plus
// theta.  Validity: sum theta <= h and theta vanishes below s0 + sum theta.
class SubschemeModel {
public:
  SubschemeModel(LinkageClass cls, Deg h, NatFn theta);

  const LinkageClass& cls() const { return cls_; }
  Deg h() const { return h_; }
  const NatFn& theta() const { return theta_; }
  Val m() const { return theta_.sum(); }

  bool operator==(const SubschemeModel& o) const {
    return cls_.same_class(o.cls_) && h_ == o.h_ && theta_ == o.theta_;
  }

private:
  LinkageClass cls_;
  Deg h_;
  NatFn theta_;
};

struct DerivedInvariants {
  Deg s0;
  Deg s1;
  Val e;
  Val degree;
  AdmissibleCharacter gamma;
  NatFn eta;
};

AdmissibleCharacter model_gamma(const SubschemeModel& x);
NatFn model_eta(const SubschemeModel& x);
DerivedInvariants invariants(const SubschemeModel& x);

enum class LinkKind { basic, elementary };

struct DoubleLinkStep {
  Deg s = 0;
  Deg h = 0;
  LinkKind kind = LinkKind::basic;
  bool operator==(const DoubleLinkStep&) const = default;
};

// Double link of type (s, h) from x; s must be at least the minimal
// hypersurface degree of x.  basic and elementary share one character
// transform; the kind is kept as metadata.
SubschemeModel double_link(const SubschemeModel& x, Deg s, Deg h,
                           LinkKind kind = LinkKind::basic);

// Height difference h(y) - h(x) when y dominates x, empty otherwise.
// Cross-class comparisons are rejected.
std::optional<Deg> dominates_model(const SubschemeModel& x,
                                   const SubschemeModel& y);

// Decomposition of a domination into basic double links of height one by
// the rule s = eta_o - h + 1 applied to the remaining relative eta.
// Replaying the list from x reproduces target exactly.
std::vector<DoubleLinkStep> lr_decompose(const SubschemeModel& x,
                                         const SubschemeModel& target);

// Sharp lower bound for the minimal degree of a hypersurface meeting a
// minimal-degree hypersurface through x properly.
Deg t1_bound(const SubschemeModel& x);

// Chain of elementary double links from a base model with theta = 0,
// peeling the rightmost connected block of theta at each stage; replaying
// base + steps lands in x's deformation class and attains t1_bound(x).
struct T1WitnessChain {
  std::vector<DoubleLinkStep> steps;
  Deg base_height = 0;
  // The base model arises by linking a minimal dual pair at these degrees.
  Deg base_link_s = 0;
  Deg base_link_t = 0;
  Deg certified_t1 = 0;
};
T1WitnessChain t1_witness_chain(const SubschemeModel& x);

// Whether x deforms (with constant cohomology) to a representative with
// s1 = t1: theta connected about [s1 + h, t1 + h - 1].
bool s1_t1_deformable(const SubschemeModel& x);

// Minimal element of the subposet of models with s1 = t1: the elementary
// double link of type (t1, t1 - s1) from the minimal element.
SubschemeModel minimal_M(const LinkageClass& cls);

// delta = s0 - e - n - 1 > 0 forces a unique minimal element.
bool unique_minimal(const LinkageClass& cls);

// s0(x) > e + n + 1 + h(x): the unique minimal element is then a
// subscheme of every representative of x.
bool contains_minimal(const SubschemeModel& x);

// Linkage by a complete intersection of degrees (s, t) into the dual
// class.  Preconditions: a dual descriptor, min(s,t) >= s0(x),
// max(s,t) >= t1_bound(x), and nonnegative resulting height.
SubschemeModel link_dual(const SubschemeModel& x, Deg s, Deg t);

// theta of the residual under the minimal linkage (s0(x), t1_bound(x)):
// zero maps to zero, a connected theta reflects with its own indicator
// removed.
NatFn link_minimal_ci(const SubschemeModel& x);

enum class IntegralVariant { strict_s0, combined_s1 };
IntegralVariant parse_integral_variant(const std::string& name);
std::string variant_name(IntegralVariant v);

// Necessary conditions for an integral representative; the verdict lists
// every failed clause.
struct IntegralVerdict {
  bool pass = true;
  std::vector<std::string> failed;
};
IntegralVerdict integral_necessary(const SubschemeModel& x, IntegralVariant v);

// One stage of the integral chain: an elementary double link of type
// (a, w) from the current model, with the numeric gate data recorded.
struct IntegralStep {
  Deg a = 0;
  Deg w = 0;
  Deg s0_at = 0;      // s0 of the model the link is taken from
  Deg s1_at = 0;
  Val e_at = 0;
  Deg t1_bound_at = 0;
  bool s1_form_ok = false;  // a == s0_at or a >= s1_at
  bool t1_form_ok = false;  // a == s0_at or a >= t1_bound_at
  bool degree_ok = false;   // a <= e_at + n + 1 + w
};

// Thrown when a chain stage fails its numeric gate.
class gate_failure : public std::runtime_error {
public:
  explicit gate_failure(const std::string& what) : std::runtime_error(what) {}
};

struct IntegralChain {
  std::vector<IntegralStep> steps;
  // Advisory: the target's necessary-condition verdicts.
  IntegralVerdict target_strict;
  IntegralVerdict target_combined;
};

// Decomposition of x <= y into elementary double links, each gated by the
// numeric hypotheses that keep a general such link integral.  x is taken
// integral on the caller's word.
IntegralChain integral_chain(const SubschemeModel& x, const SubschemeModel& y);

}  // namespace liaison

#endif
