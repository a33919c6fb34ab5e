// The domination partial order on admissible characters and the eta/theta
// witness functions that encode a domination, plus the conversion to the
// Bolondi-Migliore degree-sequence invariant.
#ifndef LIAISON_DOMINATION_HPP
#define LIAISON_DOMINATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "liaison/character.hpp"

namespace liaison {

// Nonnegative finitely supported function; the carrier for eta and theta.
class NatFn {
public:
  NatFn() = default;
  explicit NatFn(IntFn fn) : fn_(std::move(fn)) {
    if (!fn_.nonnegative())
      throw invalid_input("function must be nonnegative");
  }

  const IntFn& fn() const { return fn_; }
  Val at(Deg l) const { return fn_.at(l); }
  Val sum() const { return fn_.sum(); }
  bool is_zero() const { return fn_.is_zero(); }

  // f_a / f_o; empty optionals are the +/- infinity sentinels.
  std::optional<Deg> first_positive() const {
    return fn_.is_zero() ? std::nullopt : std::optional<Deg>(fn_.min_support());
  }
  std::optional<Deg> last_positive() const {
    return fn_.is_zero() ? std::nullopt : std::optional<Deg>(fn_.max_support());
  }

  bool operator==(const NatFn&) const = default;
  bool operator<(const NatFn& o) const { return fn_ < o.fn_; }

private:
  IntFn fn_;
};

// sigma dominates gamma at height h: the three clauses checked literally.
bool dominates_at(const AdmissibleCharacter& gamma,
                  const AdmissibleCharacter& sigma, Deg h);

// Empty when domination holds, otherwise the first violated clause.
std::optional<std::string> domination_failure(const AdmissibleCharacter& gamma,
                                              const AdmissibleCharacter& sigma,
                                              Deg h);

// eta(l) = sigma(l) - gamma(l-h) + step(l) - step(l-h).  Succeeds exactly
// when sigma dominates gamma at height h; on failure `error` names the
// first violated clause (nonnegativity, connectedness, or the sum).
struct EtaResult {
  std::optional<NatFn> eta;
  std::string error;
  bool ok() const { return eta.has_value(); }
};
EtaResult eta_of(const AdmissibleCharacter& gamma,
                 const AdmissibleCharacter& sigma, Deg h);

// Inverse direction: sigma(l) = eta(l) + gamma(l-h) - step(l) + step(l-h).
// Requires eta nonnegative, summing to h and connected in degrees
// < s0(gamma) + h; the result dominates gamma at height h.
AdmissibleCharacter sigma_from_eta(const AdmissibleCharacter& gamma, Deg h,
                                   const NatFn& eta);

// theta(l) = eta(l) - step(l - s0(sigma)) + step(l - s0(gamma) - h).
// Requires the domination to hold.
NatFn theta_of(const AdmissibleCharacter& gamma,
               const AdmissibleCharacter& sigma, Deg h);

// eta(l) = theta(l) + step(l - s0(gamma) - m) - step(l - s0(gamma) - h)
// with m = sum theta.  Requires theta nonnegative with m <= h and
// theta vanishing below s0(gamma) + m.
NatFn eta_from_theta(const AdmissibleCharacter& gamma, Deg h,
                     const NatFn& theta);

// theta_of composed with sigma_from_eta.
NatFn theta_from_eta(const AdmissibleCharacter& gamma, Deg h,
                     const NatFn& eta);

// Given witnessed dominations gamma <=_h tau and gamma <=_k sigma, the
// function eta_{gamma,sigma,k}(l) - eta_{gamma,tau,h}(l-k+h) is nonnegative
// exactly when tau <=_{k-h} sigma, and is then its eta.  Empty otherwise.
std::optional<NatFn> relative_eta(const AdmissibleCharacter& gamma,
                                  const AdmissibleCharacter& tau,
                                  const AdmissibleCharacter& sigma, Deg h,
                                  Deg k);

// Same decision through theta: theta_{gamma,sigma}(l) -
// theta_{gamma,tau}(l-k+h), accepted when nonnegative with sum <= k-h.
std::optional<NatFn> relative_theta(const AdmissibleCharacter& gamma,
                                    const AdmissibleCharacter& tau,
                                    const AdmissibleCharacter& sigma, Deg h,
                                    Deg k);

// Degree-sequence invariant {b, g_2..g_r} with the fixed normalization
// r = m+1, b = h-m-1; theta(l) = #{k : g_k + r - k = l}.  The roundtrip
// from_bm(to_bm(theta, h)) = (theta, h) is the normative contract.
struct BMInvariant {
  Val b = 0;
  std::vector<Deg> g;  // g[i] is g_{i+2}, nondecreasing
  bool operator==(const BMInvariant&) const = default;
};
BMInvariant to_bm(const NatFn& theta, Deg h);
std::pair<NatFn, Deg> from_bm(const BMInvariant& inv);

struct DominationWitness {
  AdmissibleCharacter sigma;
  Deg h;
  Val m;
  NatFn eta;
  NatFn theta;
};
DominationWitness make_witness(const AdmissibleCharacter& gamma,
                               const AdmissibleCharacter& sigma, Deg h);

// All admissible sigma dominating gamma at height h whose eta is supported
// inside [lo, hi], sorted by eta; complete and duplicate-free.
std::vector<DominationWitness> enumerate_dominating(
    const AdmissibleCharacter& gamma, Deg h, Deg lo, Deg hi);

}  // namespace liaison

#endif
