// Characters from resolution-shaped numeric input and the Hilbert
// function / Hilbert polynomial reconstruction that serves as the
// independent cross-check for the degree functional.
#ifndef LIAISON_HILBERT_HPP
#define LIAISON_HILBERT_HPP

#include <span>
#include <vector>

#include "liaison/character.hpp"

namespace liaison {

// Binomial coefficient, 0 when x < 0 or x < m.  Backed by a lazily grown
// table shared across threads.
long long binom(long long x, int m);

// h^0 of a direct sum of line bundles O(-a), a over `twists`, in ambient
// dimension n at twist l.
long long h0_dissocie(std::span<const Deg> twists, int n, Deg l);

// Character of the subscheme with sheafified free resolution given by
// twist stages (generators first, then successive kernels):
//   gamma(l) = sum_i (-1)^i sum_{a in stage i} step(l-a) - step(l).
// Rejects stage data whose alternating count differs from 1 or whose
// character is not admissible.
AdmissibleCharacter gamma_from_free_resolution(
    const std::vector<std::vector<Deg>>& stages, int n);

// h^0 of the ideal sheaf at twist l, reconstructed as h^0 O(l) plus the
// n-fold partial sum of gamma.
long long hilbert_function(const AdmissibleCharacter& gamma, int n, Deg l);

// Exact rational polynomial, coefficients ascending by power.
struct RatPoly {
  struct Coeff {
    long long num = 0;
    long long den = 1;
    bool operator==(const Coeff&) const = default;
  };
  std::vector<Coeff> coeffs;
  bool operator==(const RatPoly&) const = default;
};

// Hilbert polynomial P(l) = -sum_k gamma(k) C(l-k+n-1, n-1), binomials in
// the polynomial (falling factorial) sense.
RatPoly hilbert_polynomial(const AdmissibleCharacter& gamma, int n);

struct DegreeGenus {
  Val degree = 0;
  std::optional<Val> genus;  // arithmetic genus, defined for n = 3
};
// degree = sum l * gamma(l); genus from P(l) = d l + 1 - g when n = 3.
DegreeGenus degree_genus(const AdmissibleCharacter& gamma, int n);

}  // namespace liaison

#endif
