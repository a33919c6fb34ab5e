#include "liaison/linkage.hpp"

#include <algorithm>

namespace liaison {

LinkageClass::LinkageClass(int n, AdmissibleCharacter gamma0, Deg t1, Val e,
                           bool non_acm, std::optional<DualData> dual)
    : n_(n), gamma0_(std::move(gamma0)), t1_(t1), e_(e), non_acm_(non_acm),
      dual_(std::move(dual)) {
  if (n_ < 3) throw invalid_input("ambient dimension must be >= 3");
  if (!non_acm_)
    throw invalid_input("class must be non-ACM (nonzero core sheaf)");
  if (!(s0() <= s1() && s1() <= t1_))
    throw invalid_input("class constants must satisfy s0 <= s1 <= t1");
  if (dual_) {
    Deg ds0 = dual_->gamma0.s0();
    if (!(ds0 <= dual_->gamma0.s1() && dual_->gamma0.s1() <= dual_->t1))
      throw invalid_input("dual class constants must satisfy s0 <= s1 <= t1");
    // The minimal complete intersection linking the two minimal elements
    // has the same degree pair seen from either side, and the two minimal
    // degrees must fill it.
    if (std::minmax(s0(), t1_) != std::minmax(ds0, dual_->t1))
      throw invalid_input(
          "dual descriptor inconsistent: minimal linking degrees {s0, t1} must agree");
    Val deg_sum = gamma0_.fn().weighted_sum() + dual_->gamma0.fn().weighted_sum();
    if (deg_sum != s0() * t1_)
      throw invalid_input(
          "dual descriptor inconsistent: minimal degrees sum to " +
          std::to_string(deg_sum) + ", not s0 * t1 = " +
          std::to_string(s0() * t1_));
  }
}

LinkageClass LinkageClass::dual_class() const {
  if (!dual_) throw invalid_input("class has no dual descriptor");
  return LinkageClass(n_, dual_->gamma0, dual_->t1, dual_->e, true,
                      DualData{gamma0_, t1_, e_});
}

bool LinkageClass::same_class(const LinkageClass& other) const {
  return n_ == other.n_ && gamma0_ == other.gamma0_ && t1_ == other.t1_ &&
         e_ == other.e_;
}

SubschemeModel::SubschemeModel(LinkageClass cls, Deg h, NatFn theta)
    : cls_(std::move(cls)), h_(h), theta_(std::move(theta)) {
  if (h_ < 0) throw invalid_input("model height must be nonnegative");
  Val m = theta_.sum();
  if (m > h_)
    throw invalid_input("theta sums to " + std::to_string(m) +
                        ", above the height " + std::to_string(h_));
  if (!theta_.is_zero() && theta_.fn().min_support() < cls_.s0() + m)
    throw invalid_input("theta must vanish below s0 + m = " +
                        std::to_string(cls_.s0() + m));
}

NatFn model_eta(const SubschemeModel& x) {
  return eta_from_theta(x.cls().gamma0(), x.h(), x.theta());
}

AdmissibleCharacter model_gamma(const SubschemeModel& x) {
  return sigma_from_eta(x.cls().gamma0(), x.h(), model_eta(x));
}

DerivedInvariants invariants(const SubschemeModel& x) {
  const LinkageClass& L = x.cls();
  NatFn eta = model_eta(x);
  AdmissibleCharacter gamma = sigma_from_eta(L.gamma0(), x.h(), eta);
  Deg s0x = L.s0() + x.m();
  Deg s1x = L.s1() + x.h();
  if (auto ta = x.theta().first_positive()) s1x = std::min(s1x, *ta);
  Val ex = L.e() + x.h();
  if (auto eo = eta.last_positive()) ex = std::max<Val>(ex, *eo - L.n());
  return DerivedInvariants{s0x, s1x, ex, gamma.fn().weighted_sum(), gamma, eta};
}

SubschemeModel double_link(const SubschemeModel& x, Deg s, Deg h,
                           LinkKind /*kind*/) {
  if (h < 0) throw invalid_input("double link height must be nonnegative");
  Deg s0x = x.cls().s0() + x.m();
  if (s < s0x)
    throw invalid_input("link degree " + std::to_string(s) +
                        " is below the minimal degree s0(X) = " +
                        std::to_string(s0x));
  // Relative eta of the link is the indicator of [s, s+h-1]; compose at
  // the eta level and convert back.
  IntFn eta = model_eta(x).fn().shifted(h).plus(IntFn::indicator(s, s + h - 1));
  NatFn theta = theta_from_eta(x.cls().gamma0(), x.h() + h, NatFn(eta));
  return SubschemeModel(x.cls(), x.h() + h, theta);
}

std::optional<Deg> dominates_model(const SubschemeModel& x,
                                   const SubschemeModel& y) {
  if (!x.cls().same_class(y.cls()))
    throw invalid_input("models belong to different linkage classes");
  Deg h = y.h() - x.h();
  if (h < 0) return std::nullopt;
  IntFn rel = y.theta().fn().minus(x.theta().fn().shifted(h));
  if (!rel.nonnegative()) return std::nullopt;
  if (rel.sum() > h) return std::nullopt;
  return h;
}

std::vector<DoubleLinkStep> lr_decompose(const SubschemeModel& x,
                                         const SubschemeModel& target) {
  auto dom = dominates_model(x, target);
  if (!dom)
    throw invalid_input("target does not dominate the starting model");
  std::vector<DoubleLinkStep> steps;
  SubschemeModel cur = x;
  NatFn eta_t = model_eta(target);
  for (Deg rem = *dom; rem > 0; --rem) {
    IntFn rel = eta_t.fn().minus(model_eta(cur).fn().shifted(rem));
    Deg s = NatFn(rel).last_positive().value() - rem + 1;
    steps.push_back({s, 1, LinkKind::basic});
    cur = double_link(cur, s, 1, LinkKind::basic);
  }
  if (!(cur == target))
    throw invalid_input("decomposition replay mismatch");  // unreachable
  return steps;
}

Deg t1_bound(const SubschemeModel& x) {
  const NatFn& theta = x.theta();
  Deg edge = x.cls().t1() + x.h();
  auto to = theta.last_positive();
  if (!to || *to < edge - 1) return edge;
  // Left edge of the rightmost connected block.
  Deg r = *to;
  while (theta.at(r - 1) != 0) --r;
  return r;
}

T1WitnessChain t1_witness_chain(const SubschemeModel& x) {
  T1WitnessChain chain;
  chain.certified_t1 = t1_bound(x);
  NatFn theta = x.theta();
  Deg h = x.h();
  Deg s0 = x.cls().s0();
  // Peel rightmost blocks; steps accumulate outermost-first and are
  // reversed so that replay applies the innermost link first.
  while (!theta.is_zero()) {
    Deg to = *theta.last_positive();
    Deg r = to;
    while (theta.at(r - 1) != 0) --r;
    Deg w = to - r + 1;
    chain.steps.push_back({r, w, LinkKind::elementary});
    IntFn reduced = theta.fn().shifted(-w).minus(IntFn::indicator(r - w, r - 1));
    theta = NatFn(reduced);
    h -= w;
  }
  std::reverse(chain.steps.begin(), chain.steps.end());
  chain.base_height = h;
  chain.base_link_s = s0;
  chain.base_link_t = x.cls().t1() + h;
  return chain;
}

bool s1_t1_deformable(const SubschemeModel& x) {
  return connected_about(x.theta().fn(), x.cls().s1() + x.h(),
                         x.cls().t1() + x.h() - 1);
}

SubschemeModel minimal_M(const LinkageClass& cls) {
  Deg h = cls.t1() - cls.s1();
  IntFn eta = IntFn::indicator(cls.t1(), 2 * cls.t1() - cls.s1() - 1);
  NatFn theta = theta_from_eta(cls.gamma0(), h, NatFn(eta));
  return SubschemeModel(cls, h, theta);
}

bool unique_minimal(const LinkageClass& cls) {
  return cls.s0() - cls.e() - cls.n() - 1 > 0;
}

bool contains_minimal(const SubschemeModel& x) {
  return x.cls().s0() + x.m() > x.cls().e() + x.cls().n() + 1 + x.h();
}

SubschemeModel link_dual(const SubschemeModel& x, Deg s, Deg t) {
  const LinkageClass& L = x.cls();
  if (!L.has_dual())
    throw invalid_input("class has no dual descriptor; linkage target unknown");
  DerivedInvariants inv = invariants(x);
  if (std::min(s, t) < inv.s0)
    throw invalid_input("min(s, t) = " + std::to_string(std::min(s, t)) +
                        " is below s0(X) = " + std::to_string(inv.s0));
  Deg tb = t1_bound(x);
  if (std::max(s, t) < tb)
    throw invalid_input("max(s, t) = " + std::to_string(std::max(s, t)) +
                        " is below the t1 bound " + std::to_string(tb));
  Deg hy = s + t - L.s0() - L.t1() - x.h();
  if (hy < 0)
    throw invalid_input("resulting height " + std::to_string(hy) +
                        " is negative");
  // eta_Y(s+t-1-l) = eta_X(l) - step(l-s) - step(l-t)
  //                  + step(l - s0 - hX) + step(l - t1 - hX)
  Deg hx = x.h();
  const IntFn& ex = inv.eta.fn();
  Deg lo = std::min<Deg>({s, t, L.s0() + hx, L.t1() + hx,
                          ex.is_zero() ? s : ex.min_support()});
  Deg hi = std::max<Deg>({s, t, L.s0() + hx, L.t1() + hx,
                          ex.is_zero() ? s : ex.max_support()}) + 1;
  std::vector<IntFn::Entry> rev;
  for (Deg l = hi; l >= lo; --l) {
    Val v = ex.at(l) - step(l - s) - step(l - t) + step(l - L.s0() - hx) +
            step(l - L.t1() - hx);
    if (v < 0)
      throw invalid_input("no residual model: eta would be negative at l = " +
                          std::to_string(s + t - 1 - l));
    if (v != 0) rev.emplace_back(s + t - 1 - l, v);
  }
  NatFn eta_y{IntFn(std::move(rev))};
  LinkageClass dual = L.dual_class();
  if (eta_y.sum() != hy)
    throw invalid_input("no residual model: eta sums to " +
                        std::to_string(eta_y.sum()) + ", not " +
                        std::to_string(hy));
  NatFn theta_y = theta_from_eta(dual.gamma0(), hy, eta_y);
  return SubschemeModel(dual, hy, theta_y);
}

NatFn link_minimal_ci(const SubschemeModel& x) {
  const NatFn& theta = x.theta();
  if (theta.is_zero()) return NatFn{};
  if (!connected(theta.fn()))
    throw invalid_input("theta is not connected; minimal linkage formula does not apply");
  Deg ta = *theta.first_positive();
  Deg to = *theta.last_positive();
  Deg s = x.cls().s0() + x.m();
  Deg t = t1_bound(x);
  // theta_Y(s+t-1-l) = theta(l) - step(l - theta_a) + step(l - theta_o - 1)
  std::vector<IntFn::Entry> rev;
  for (Deg l = to; l >= ta; --l) {
    Val v = theta.at(l) - 1;
    if (v != 0) rev.emplace_back(s + t - 1 - l, v);
  }
  std::sort(rev.begin(), rev.end());
  return NatFn{IntFn(std::move(rev))};
}

IntegralVariant parse_integral_variant(const std::string& name) {
  if (name == "strict-s0") return IntegralVariant::strict_s0;
  if (name == "combined-s1") return IntegralVariant::combined_s1;
  throw invalid_input("unknown variant '" + name +
                      "' (expected strict-s0 or combined-s1)");
}

std::string variant_name(IntegralVariant v) {
  return v == IntegralVariant::strict_s0 ? "strict-s0" : "combined-s1";
}

IntegralVerdict integral_necessary(const SubschemeModel& x, IntegralVariant v) {
  const LinkageClass& L = x.cls();
  IntegralVerdict verdict;
  auto fail = [&](std::string why) {
    verdict.pass = false;
    verdict.failed.push_back(std::move(why));
  };
  Deg a = (v == IntegralVariant::strict_s0 ? L.s0() : L.s1()) + x.h();
  Deg b = L.t1() + x.h() - 1;
  if (!connected_about(x.theta().fn(), a, b))
    fail("theta is not connected about [" + std::to_string(a) + ", " +
         std::to_string(b) + "]");
  if (v == IntegralVariant::combined_s1) {
    auto ta = x.theta().first_positive();
    if (ta && *ta > L.s0() + x.h())
      fail("theta_a = " + std::to_string(*ta) + " exceeds s0 + h = " +
           std::to_string(L.s0() + x.h()));
  }
  Deg s0x = L.s0() + x.m();
  Val cap = L.e() + L.n() + 1 + x.h();
  if (s0x > cap)
    fail("s0(X) = " + std::to_string(s0x) + " exceeds e + n + 1 + h = " +
         std::to_string(cap));
  return verdict;
}

IntegralChain integral_chain(const SubschemeModel& x, const SubschemeModel& y) {
  auto dom = dominates_model(x, y);
  if (!dom)
    throw invalid_input("target does not dominate the starting model");
  IntegralChain chain;
  chain.target_strict = integral_necessary(y, IntegralVariant::strict_s0);
  chain.target_combined = integral_necessary(y, IntegralVariant::combined_s1);
  SubschemeModel cur = x;
  NatFn eta_y = model_eta(y);
  Deg rem = *dom;
  int n = x.cls().n();
  while (rem > 0) {
    IntFn rel = eta_y.fn().minus(model_eta(cur).fn().shifted(rem));
    NatFn eta(rel);
    // Right edge of the leftmost block of the relative eta.
    Deg ea = *eta.first_positive();
    Deg r = ea;
    while (eta.at(r + 1) != 0) ++r;
    Deg w = r - ea + 1;
    Deg a = r - rem + 1;
    DerivedInvariants inv = invariants(cur);
    IntegralStep st;
    st.a = a;
    st.w = w;
    st.s0_at = inv.s0;
    st.s1_at = inv.s1;
    st.e_at = inv.e;
    st.t1_bound_at = t1_bound(cur);
    st.s1_form_ok = (a == inv.s0) || (a >= inv.s1);
    st.t1_form_ok = (a == inv.s0) || (a >= st.t1_bound_at);
    st.degree_ok = a <= inv.e + n + 1 + w;
    if (!st.s1_form_ok)
      throw gate_failure("link degree " + std::to_string(a) +
                         " is neither s0(X) = " + std::to_string(inv.s0) +
                         " nor >= s1(X) = " + std::to_string(inv.s1));
    if (!st.degree_ok)
      throw gate_failure("link degree " + std::to_string(a) +
                         " exceeds e(X) + n + 1 + w = " +
                         std::to_string(inv.e + n + 1 + w));
    chain.steps.push_back(st);
    cur = double_link(cur, a, w, LinkKind::elementary);
    rem -= w;
  }
  if (!(cur == y))
    throw invalid_input("chain replay mismatch");  // unreachable
  return chain;
}

}  // namespace liaison
