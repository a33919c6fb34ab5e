#include "liaison/domination.hpp"

#include <algorithm>
#include <functional>

namespace liaison {

std::optional<std::string> domination_failure(const AdmissibleCharacter& gamma,
                                              const AdmissibleCharacter& sigma,
                                              Deg h) {
  if (h < 0) return "height must be nonnegative";
  Deg s0g = gamma.s0();
  Deg s0s = sigma.s0();
  if (!(s0g <= s0s && s0s <= s0g + h))
    return "domination clause (1) fails: s0 = " + std::to_string(s0s) +
           " outside [" + std::to_string(s0g) + ", " + std::to_string(s0g + h) + "]";
  for (Deg l = s0s; l < s0g + h; ++l)
    if (sigma.at(l) < 0)
      return "domination clause (2) fails at l = " + std::to_string(l);
  // Clause (3) is a tail condition; past both supports the two sides are 0.
  Deg hi = std::max(sigma.fn().is_zero() ? s0g + h : sigma.fn().max_support(),
                    (gamma.fn().is_zero() ? 0 : gamma.fn().max_support()) + h);
  for (Deg l = s0g + h; l <= hi; ++l)
    if (sigma.at(l) < gamma.at(l - h))
      return "domination clause (3) fails at l = " + std::to_string(l);
  return std::nullopt;
}

bool dominates_at(const AdmissibleCharacter& gamma,
                  const AdmissibleCharacter& sigma, Deg h) {
  return !domination_failure(gamma, sigma, h).has_value();
}

namespace {

IntFn eta_formula(const AdmissibleCharacter& gamma,
                  const AdmissibleCharacter& sigma, Deg h) {
  // step(l) - step(l-h) is the indicator of [0, h-1].
  return sigma.fn().minus(gamma.fn().shifted(h)).plus(IntFn::indicator(0, h - 1));
}

}  // namespace

EtaResult eta_of(const AdmissibleCharacter& gamma,
                 const AdmissibleCharacter& sigma, Deg h) {
  EtaResult r;
  if (h < 0) {
    r.error = "height must be nonnegative";
    return r;
  }
  IntFn eta = eta_formula(gamma, sigma, h);
  if (!eta.nonnegative()) {
    Deg bad = 0;
    for (const auto& [l, v] : eta.entries())
      if (v < 0) {
        bad = l;
        break;
      }
    r.error = "eta is negative at l = " + std::to_string(bad);
    return r;
  }
  if (!connected_in_degrees(eta, ConnMode::lt, gamma.s0() + h)) {
    r.error = "eta is not connected in degrees < " + std::to_string(gamma.s0() + h);
    return r;
  }
  if (eta.sum() != h) {
    r.error = "eta sums to " + std::to_string(eta.sum()) + ", not " + std::to_string(h);
    return r;
  }
  r.eta = NatFn(std::move(eta));
  return r;
}

AdmissibleCharacter sigma_from_eta(const AdmissibleCharacter& gamma, Deg h,
                                   const NatFn& eta) {
  if (h < 0) throw invalid_input("height must be nonnegative");
  if (eta.sum() != h)
    throw invalid_input("eta sums to " + std::to_string(eta.sum()) + ", not " +
                        std::to_string(h));
  if (!connected_in_degrees(eta.fn(), ConnMode::lt, gamma.s0() + h))
    throw invalid_input("eta is not connected in degrees < " +
                        std::to_string(gamma.s0() + h));
  IntFn sigma =
      eta.fn().plus(gamma.fn().shifted(h)).minus(IntFn::indicator(0, h - 1));
  return require_admissible(sigma);
}

NatFn theta_of(const AdmissibleCharacter& gamma,
               const AdmissibleCharacter& sigma, Deg h) {
  EtaResult r = eta_of(gamma, sigma, h);
  if (!r.ok())
    throw invalid_input("domination does not hold: " + r.error);
  // step(l - s0(sigma)) - step(l - s0(gamma) - h) is the indicator of
  // [s0(sigma), s0(gamma)+h-1]; clause (1) puts s0(sigma) in range.
  IntFn theta =
      r.eta->fn().minus(IntFn::indicator(sigma.s0(), gamma.s0() + h - 1));
  return NatFn(std::move(theta));
}

NatFn eta_from_theta(const AdmissibleCharacter& gamma, Deg h,
                     const NatFn& theta) {
  if (h < 0) throw invalid_input("height must be nonnegative");
  Val m = theta.sum();
  if (m > h)
    throw invalid_input("theta sums to " + std::to_string(m) +
                        ", above the height " + std::to_string(h));
  if (!theta.is_zero() && theta.fn().min_support() < gamma.s0() + m)
    throw invalid_input("theta must vanish below s0(gamma) + m = " +
                        std::to_string(gamma.s0() + m));
  IntFn eta =
      theta.fn().plus(IntFn::indicator(gamma.s0() + m, gamma.s0() + h - 1));
  return NatFn(std::move(eta));
}

NatFn theta_from_eta(const AdmissibleCharacter& gamma, Deg h,
                     const NatFn& eta) {
  AdmissibleCharacter sigma = sigma_from_eta(gamma, h, eta);
  return theta_of(gamma, sigma, h);
}

std::optional<NatFn> relative_eta(const AdmissibleCharacter& gamma,
                                  const AdmissibleCharacter& tau,
                                  const AdmissibleCharacter& sigma, Deg h,
                                  Deg k) {
  EtaResult et = eta_of(gamma, tau, h);
  if (!et.ok())
    throw invalid_input("gamma <=_h tau is not witnessed: " + et.error);
  EtaResult es = eta_of(gamma, sigma, k);
  if (!es.ok())
    throw invalid_input("gamma <=_k sigma is not witnessed: " + es.error);
  IntFn rel = es.eta->fn().minus(et.eta->fn().shifted(k - h));
  if (!rel.nonnegative()) return std::nullopt;
  return NatFn(std::move(rel));
}

std::optional<NatFn> relative_theta(const AdmissibleCharacter& gamma,
                                    const AdmissibleCharacter& tau,
                                    const AdmissibleCharacter& sigma, Deg h,
                                    Deg k) {
  NatFn tt = [&] {
    try {
      return theta_of(gamma, tau, h);
    } catch (const invalid_input& e) {
      throw invalid_input(std::string("gamma <=_h tau is not witnessed: ") + e.what());
    }
  }();
  NatFn ts = [&] {
    try {
      return theta_of(gamma, sigma, k);
    } catch (const invalid_input& e) {
      throw invalid_input(std::string("gamma <=_k sigma is not witnessed: ") + e.what());
    }
  }();
  IntFn rel = ts.fn().minus(tt.fn().shifted(k - h));
  if (!rel.nonnegative()) return std::nullopt;
  if (rel.sum() > k - h) return std::nullopt;
  return NatFn(std::move(rel));
}

BMInvariant to_bm(const NatFn& theta, Deg h) {
  Val m = theta.sum();
  if (h < m + 1)
    throw invalid_input("degree-sequence invariant needs h >= (sum theta) + 1, got h = " +
                        std::to_string(h));
  // Support expanded with multiplicity, largest degree first; entry k of
  // the sequence (k = 2..r) satisfies g_k + r - k = d_k.
  std::vector<Deg> d;
  for (auto it = theta.fn().entries().rbegin(); it != theta.fn().entries().rend(); ++it)
    for (Val i = 0; i < it->second; ++i) d.push_back(it->first);
  Val r = m + 1;
  BMInvariant inv;
  inv.b = h - m - 1;
  inv.g.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    inv.g.push_back(d[i] - r + static_cast<Deg>(i) + 2);
  if (!std::is_sorted(inv.g.begin(), inv.g.end()))
    throw invalid_input(
        "theta has gaps: no nondecreasing degree sequence exists under the fixed convention");
  return inv;
}

std::pair<NatFn, Deg> from_bm(const BMInvariant& inv) {
  if (inv.b < 0)
    throw invalid_input("degree-sequence invariant needs b >= 0, got " +
                        std::to_string(inv.b));
  if (!std::is_sorted(inv.g.begin(), inv.g.end()))
    throw invalid_input("degree sequence must be nondecreasing");
  Val r = static_cast<Val>(inv.g.size()) + 1;
  IntFn theta;
  for (std::size_t i = 0; i < inv.g.size(); ++i) {
    Deg k = static_cast<Deg>(i) + 2;
    theta = theta.plus(IntFn{{inv.g[i] + r - k, 1}});
  }
  Deg h = inv.b + r;  // b + m + 1
  return {NatFn(std::move(theta)), h};
}

DominationWitness make_witness(const AdmissibleCharacter& gamma,
                               const AdmissibleCharacter& sigma, Deg h) {
  EtaResult r = eta_of(gamma, sigma, h);
  if (!r.ok())
    throw invalid_input("domination does not hold: " + r.error);
  NatFn theta = theta_of(gamma, sigma, h);
  return DominationWitness{sigma, h, theta.sum(), *r.eta, theta};
}

std::vector<DominationWitness> enumerate_dominating(
    const AdmissibleCharacter& gamma, Deg h, Deg lo, Deg hi) {
  if (h < 0) throw invalid_input("height must be nonnegative");
  if (lo > hi)
    throw invalid_input("window [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] is empty");
  std::vector<DominationWitness> out;
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  {
    // Composition count C(h+width-1, width-1); refuse runaway requests.
    long double count = 1;
    for (std::size_t i = 1; i < width; ++i)
      count *= static_cast<long double>(h + i) / static_cast<long double>(i);
    if (count > 5e6)
      throw invalid_input("enumeration window too large for exhaustive search");
  }
  std::vector<Val> values(width, 0);
  // Compositions of h over the window cells, lexicographic.
  std::function<void(std::size_t, Val)> rec = [&](std::size_t pos, Val rest) {
    if (pos + 1 == width) {
      values[pos] = rest;
      std::vector<IntFn::Entry> entries;
      for (std::size_t i = 0; i < width; ++i)
        if (values[i] != 0) entries.emplace_back(lo + static_cast<Deg>(i), values[i]);
      IntFn eta(std::move(entries));
      if (connected_in_degrees(eta, ConnMode::lt, gamma.s0() + h)) {
        NatFn nat(eta);
        AdmissibleCharacter sigma = sigma_from_eta(gamma, h, nat);
        NatFn theta = theta_of(gamma, sigma, h);
        out.push_back(DominationWitness{sigma, h, theta.sum(), nat, theta});
      }
      return;
    }
    for (Val v = 0; v <= rest; ++v) {
      values[pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  rec(0, h);
  std::sort(out.begin(), out.end(),
            [](const DominationWitness& x, const DominationWitness& y) {
              return x.eta < y.eta;
            });
  return out;
}

}  // namespace liaison
