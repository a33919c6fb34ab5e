#include "liaison/resolution.hpp"

#include <algorithm>

namespace liaison {

CoreDelta::CoreDelta(IntFn window, Val tail_rank, Deg tail_start)
    : fn_(std::move(window), tail_rank, tail_start) {
  if (tail_rank < 0)
    throw invalid_input("core tail rank must be nonnegative, got " +
                        std::to_string(tail_rank));
}

Deg CoreDelta::lo() const {
  if (!window().is_zero()) return window().min_support();
  return tail_start();
}

ResolutionData make_resolution(ResKind kind, std::vector<Deg> p,
                               std::vector<Deg> q, CoreDelta core,
                               std::optional<CoreDelta> dual_core,
                               Deg core_twist) {
  ResolutionData res;
  res.kind = kind;
  res.p = std::move(p);
  res.q = std::move(q);
  std::sort(res.p.begin(), res.p.end());
  std::sort(res.q.begin(), res.q.end());
  res.core = std::move(core);
  res.dual_core = std::move(dual_core);
  res.core_twist = core_twist;
  return res;
}

AdmissibleCharacter gamma_from_resolution(const ResolutionData& res, int n) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  long long tail = res.core.tail_rank() + static_cast<long long>(res.q.size()) -
                   static_cast<long long>(res.p.size()) - 1;
  if (res.kind == ResKind::E)
    tail = static_cast<long long>(res.q.size()) - res.core.tail_rank() -
           static_cast<long long>(res.p.size()) - 1;
  if (tail != 0)
    throw invalid_input("inconsistent resolution: character tail is " +
                        std::to_string(tail) + ", not 0");
  Deg lo = std::min<Deg>(0, res.core.lo() + res.core_twist);
  Deg hi = res.core.tail_start() + res.core_twist;
  for (Deg a : res.p) lo = std::min(lo, a), hi = std::max(hi, a);
  for (Deg a : res.q) lo = std::min(lo, a), hi = std::max(hi, a);
  std::vector<IntFn::Entry> entries;
  for (Deg l = lo; l <= hi; ++l) {
    Val v = -step(l);
    Val core_v = res.core.at(l - res.core_twist);
    v += res.kind == ResKind::N ? core_v : -core_v;
    for (Deg a : res.q) v += step(l - a);
    for (Deg a : res.p) v -= step(l - a);
    if (v != 0) entries.emplace_back(l, v);
  }
  return require_admissible(IntFn(std::move(entries)));
}

CoreDelta core_from_minimal(const AdmissibleCharacter& gamma0,
                            const std::vector<Deg>& p,
                            const std::vector<Deg>& q, int n) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  Val tail = 1 + static_cast<Val>(p.size()) - static_cast<Val>(q.size());
  if (tail < 0)
    throw invalid_input("core tail rank would be negative: " + std::to_string(tail));
  Deg lo = gamma0.fn().is_zero() ? 0 : std::min<Deg>(0, gamma0.fn().min_support());
  Deg hi = gamma0.fn().is_zero() ? 0 : gamma0.fn().max_support();
  for (Deg a : p) lo = std::min(lo, a), hi = std::max(hi, a);
  for (Deg a : q) lo = std::min(lo, a), hi = std::max(hi, a);
  std::vector<IntFn::Entry> window;
  Deg tail_start = hi + 1;
  for (Deg l = lo; l <= hi; ++l) {
    Val v = gamma0.at(l) + step(l);
    for (Deg a : p) v += step(l - a);
    for (Deg a : q) v -= step(l - a);
    if (v != 0) window.emplace_back(l, v);
  }
  return CoreDelta(IntFn(std::move(window)), tail, tail_start);
}

CoreDelta dual_core_via_minimal_link(const AdmissibleCharacter& gamma0_dual,
                                     const std::vector<Deg>& p0, Deg s0,
                                     Deg t1, int n) {
  if (n < 1) throw invalid_input("ambient dimension must be >= 1");
  // Solve the dual minimal E-shape for the core at twist s0+t1:
  //   gamma^v(l) = sum_p0 step(l-s0-t1+p) + step(l-s0) + step(l-t1)
  //                - core^v(l-s0-t1) - step(l)
  // so with x = l - s0 - t1,
  //   core^v(x) = sum_p0 step(x+p) + step(x+t1) + step(x+s0) - step(x+s0+t1)
  //               - gamma^v(x+s0+t1).
  Deg d = s0 + t1;
  Deg xlo = std::min<Deg>({-d, -s0, -t1});
  for (Deg a : p0) xlo = std::min(xlo, -a);
  Deg xhi = std::max<Deg>(gamma0_dual.fn().max_support() - d, 0);
  std::vector<IntFn::Entry> window;
  for (Deg x = xlo; x <= xhi; ++x) {
    Val v = step(x + s0) + step(x + t1) - step(x + d) - gamma0_dual.at(x + d);
    for (Deg a : p0) v += step(x + a);
    if (v != 0) window.emplace_back(x, v);
  }
  Val tail = static_cast<Val>(p0.size()) + 1;
  Deg tail_start = xhi + 1;
  // Trailing window values equal to the tail are absorbed by CoreDelta's
  // canonical form.
  return CoreDelta(IntFn(std::move(window)), tail, tail_start);
}

ResolutionData resolution_double_link(const ResolutionData& res, Deg s, Deg h) {
  if (h < 0) throw invalid_input("double link height must be nonnegative");
  ResolutionData out = res;
  for (Deg& a : out.p) a += h;
  for (Deg& a : out.q) a += h;
  out.p.push_back(s + h);
  out.q.push_back(s);
  std::sort(out.p.begin(), out.p.end());
  std::sort(out.q.begin(), out.q.end());
  out.core_twist += h;
  return out;
}

ResolutionData resolution_link(const ResolutionData& res, Deg s, Deg t) {
  Deg d = s + t;
  ResolutionData out;
  out.kind = res.kind == ResKind::N ? ResKind::E : ResKind::N;
  for (Deg a : res.q) out.p.push_back(d - a);
  for (Deg a : res.p) out.q.push_back(d - a);
  out.q.push_back(s);
  out.q.push_back(t);
  std::sort(out.p.begin(), out.p.end());
  std::sort(out.q.begin(), out.q.end());
  if (res.core.is_zero()) {
    out.core = CoreDelta::zero();
    out.dual_core = res.dual_core ? res.dual_core : std::optional<CoreDelta>(CoreDelta::zero());
  } else {
    if (!res.dual_core)
      throw invalid_input(
          "cannot link: resolution has a nonzero core and no dual core data");
    out.core = *res.dual_core;
    out.dual_core = res.core;
  }
  out.core_twist = d - res.core_twist;
  return out;
}

ResolutionData minimize_resolution(const ResolutionData& res) {
  ResolutionData out = res;
  std::vector<Deg> p, q;
  auto a = out.p.begin();
  auto b = out.q.begin();
  // Both sorted: drop common values pairwise.
  while (a != out.p.end() && b != out.q.end()) {
    if (*a < *b)
      p.push_back(*a++);
    else if (*b < *a)
      q.push_back(*b++);
    else
      ++a, ++b;
  }
  p.insert(p.end(), a, out.p.end());
  q.insert(q.end(), b, out.q.end());
  out.p = std::move(p);
  out.q = std::move(q);
  return out;
}

bool resolution_domination_check(const std::vector<Deg>& r,
                                 const std::vector<Deg>& s, Deg h1, Deg h2) {
  if (h2 - h1 < 0) return false;
  IntFn rf, sf;
  for (Deg a : r) rf = rf.plus(IntFn{{a, 1}});
  for (Deg a : s) sf = sf.plus(IntFn{{a, 1}});
  Deg lo = 0, hi = 0;
  for (Deg a : r) lo = std::min(lo, a), hi = std::max(hi, a);
  for (Deg a : s) lo = std::min(lo, a), hi = std::max(hi, a);
  for (Deg l = lo; l <= hi + 1; ++l)
    if (sharp(rf, l) < sharp(sf, l)) return false;
  return true;
}

}  // namespace liaison
