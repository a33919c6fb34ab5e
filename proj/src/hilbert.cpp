#include "liaison/hilbert.hpp"

#include <mutex>
#include <numeric>

namespace liaison {

long long binom(long long x, int m) {
  if (m < 0 || x < 0 || x < m) return 0;
  static std::mutex mu;
  static std::vector<std::vector<long long>> table;  // table[x][m], m <= x
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long long>(table.size()) <= x) {
    std::size_t r = table.size();
    std::vector<long long> row(r + 1, 1);
    for (std::size_t j = 1; j < r; ++j)
      row[j] = table[r - 1][j - 1] + table[r - 1][j];
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(x)][m];
}

long long h0_dissocie(std::span<const Deg> twists, int n, Deg l) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  long long s = 0;
  for (Deg a : twists)
    if (l - a >= 0) s += binom(l - a + n, n);
  return s;
}

AdmissibleCharacter gamma_from_free_resolution(
    const std::vector<std::vector<Deg>>& stages, int n) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  if (stages.empty()) throw invalid_input("free resolution needs at least one stage");
  long long alternating = 0;
  IntFn gamma;
  int sign = 1;
  for (const auto& stage : stages) {
    alternating += sign * static_cast<long long>(stage.size());
    for (Deg a : stage) gamma = gamma.plus(IntFn{{a, sign}});
    sign = -sign;
  }
  if (alternating != 1)
    throw invalid_input(
        "inconsistent resolution: alternating twist count is " +
        std::to_string(alternating) + ", not 1");
  // gamma(l) = sum_i (-1)^i sum_a step(l-a) - step(l): the spikes above
  // cumulate to steps under one partial summation.
  gamma = partial_sums(gamma.plus(IntFn{{0, -1}}));
  return require_admissible(gamma);
}

long long hilbert_function(const AdmissibleCharacter& gamma, int n, Deg l) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  long long h0_ambient = l >= 0 ? binom(l + n, n) : 0;
  if (gamma.fn().is_zero()) return h0_ambient;
  // n-fold partial sum of gamma evaluated at l.
  Deg lo = gamma.fn().min_support();
  if (l < lo) return h0_ambient;
  std::vector<long long> vals(static_cast<std::size_t>(l - lo + 1));
  for (Deg d = lo; d <= l; ++d) vals[static_cast<std::size_t>(d - lo)] = gamma.at(d);
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 1; j < vals.size(); ++j) vals[j] += vals[j - 1];
  return h0_ambient + vals.back();
}

namespace {

// (l + c) * poly, integer coefficients ascending.
std::vector<long long> mul_linear(const std::vector<long long>& poly, long long c) {
  std::vector<long long> out(poly.size() + 1, 0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out[i] += c * poly[i];
    out[i + 1] += poly[i];
  }
  return out;
}

}  // namespace

RatPoly hilbert_polynomial(const AdmissibleCharacter& gamma, int n) {
  if (n < 2) throw invalid_input("ambient dimension must be >= 2");
  int m = n - 1;
  // Common denominator m! for all the degree-(n-1) binomial terms.
  long long fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  std::vector<long long> acc(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& [k, v] : gamma.fn().entries()) {
    // C(l-k+n-1, n-1) = prod_{i=0..m-1} (l + (n-1-k-i)) / m!
    std::vector<long long> term{1};
    for (int i = 0; i < m; ++i) term = mul_linear(term, n - 1 - k - i);
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += -v * term[i];
  }
  RatPoly p;
  p.coeffs.reserve(acc.size());
  for (long long num : acc) {
    long long g = std::gcd(num < 0 ? -num : num, fact);
    if (g == 0) g = 1;
    long long dn = fact / g;
    p.coeffs.push_back({num / g, dn});
  }
  while (p.coeffs.size() > 1 && p.coeffs.back().num == 0) p.coeffs.pop_back();
  return p;
}

DegreeGenus degree_genus(const AdmissibleCharacter& gamma, int n) {
  DegreeGenus dg;
  dg.degree = gamma.fn().weighted_sum();
  if (n == 3) {
    // P(l) = d l + 1 - g, so g = 1 - P(0).
    RatPoly p = hilbert_polynomial(gamma, n);
    const auto& c0 = p.coeffs.at(0);
    if (c0.den != 1 && c0.num % c0.den != 0)
      throw invalid_input("Hilbert polynomial has non-integral constant term");
    dg.genus = 1 - c0.num / c0.den;
  }
  return dg;
}

}  // namespace liaison
