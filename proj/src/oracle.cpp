#include "liaison/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "liaison/hilbert.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liaison {

namespace {

using nlohmann::json;

json fn_json(const IntFn& f) {
  json entries = json::array();
  for (const auto& [l, v] : f.entries()) entries.push_back({l, v});
  return json{{"entries", entries}};
}

// Run body(i) for i in [0, count), serial or OpenMP.  Bodies must only
// touch per-iteration state plus the per-thread sinks they own.
template <typename Body>
void for_range(long long count, RunMode mode, Body&& body) {
  if (mode == RunMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) body(i);
    return;
#endif
  }
  for (long long i = 0; i < count; ++i) body(i);
}

}  // namespace

std::vector<AdmissibleCharacter> enumerate_admissible(const SearchWindow& w,
                                                      RunMode mode) {
  if (w.lo > w.hi) throw invalid_input("search window is empty");
  if (w.max_abs < 1) return {};
  // Support lies in [lo, hi]; clause (1) zeroes degrees < 0 and clause (2)
  // pins degree 0, so the free positions are 1..hi.
  if (w.lo > 0 || w.hi < 0) return {};
  int width = static_cast<int>(w.hi);
  long long base = 2 * w.max_abs + 1;
  long long total = 1;
  for (int i = 0; i < width; ++i) {
    total *= base;
    if (total > 400'000'000LL)
      throw invalid_input("search window too large for exhaustive enumeration");
  }
  int threads = 1;
#ifdef _OPENMP
  if (mode == RunMode::parallel) threads = omp_get_max_threads();
#endif
  std::vector<std::vector<AdmissibleCharacter>> sinks(threads);
  for_range(total, mode, [&](long long idx) {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    Val vals[64];
    long long rest = idx;
    Val sum = -1;
    for (int i = 0; i < width; ++i) {
      vals[i] = static_cast<Val>(rest % base) - w.max_abs;
      rest /= base;
      sum += vals[i];
    }
    if (sum != 0) return;
    std::vector<IntFn::Entry> entries{{0, -1}};
    for (int i = 0; i < width; ++i)
      if (vals[i] != 0) entries.emplace_back(i + 1, vals[i]);
    Classification c = classify(IntFn::from_sorted(std::move(entries)));
    if (c.kind == Classification::Kind::admissible)
      sinks[tid].push_back(*c.chr);
  });
  std::vector<AdmissibleCharacter> out;
  for (auto& sink : sinks)
    out.insert(out.end(), sink.begin(), sink.end());
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {
      "transitivity-2.3",    "bijection-2.6",  "bijection-2.9",
      "relative-2.7",        "relative-2.10",  "formulas-3.16",
      "duality-3.19-involution", "t1-sharpness-4.6",
      "decompose-replay-3.9-5.11"};
  return names;
}

namespace {

struct ClaimContext {
  const SearchWindow& w;
  RunMode mode;
  ClaimReport report;
  std::vector<std::vector<json>> cex_sinks;
  std::vector<unsigned long long> counts;
  int threads = 1;

  explicit ClaimContext(const SearchWindow& w_, RunMode mode_) : w(w_), mode(mode_) {
#ifdef _OPENMP
    if (mode == RunMode::parallel) threads = omp_get_max_threads();
#endif
    cex_sinks.resize(threads);
    counts.resize(threads, 0);
  }

  int tid() const {
#ifdef _OPENMP
    return omp_get_thread_num();
#endif
    return 0;
  }

  void instance() { ++counts[tid()]; }
  void counterexample(json j) { cex_sinks[tid()].push_back(std::move(j)); }

  ClaimReport finish(std::string name) {
    report.claim = std::move(name);
    for (auto c : counts) report.instances += c;
    for (auto& sink : cex_sinks)
      for (auto& j : sink) report.counterexamples.push_back(std::move(j));
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    return std::move(report);
  }
};

// All (left, right, h) domination triples over the admissible list.
struct DomIndex {
  std::vector<AdmissibleCharacter> chars;
  // adj[h][i] = indices dominated-by... adj[h][i] holds j with
  // chars[i] <=_h chars[j].
  std::vector<std::vector<std::vector<int>>> adj;
};

DomIndex build_dom_index(const SearchWindow& w, RunMode mode) {
  DomIndex idx;
  idx.chars = enumerate_admissible(w, mode);
  int n = static_cast<int>(idx.chars.size());
  idx.adj.assign(static_cast<std::size_t>(w.max_height) + 1,
                 std::vector<std::vector<int>>(n));
  for (Deg h = 0; h <= w.max_height; ++h) {
    auto& layer = idx.adj[static_cast<std::size_t>(h)];
    for_range(n, mode, [&](long long i) {
      for (int j = 0; j < n; ++j)
        if (dominates_at(idx.chars[i], idx.chars[j], h))
          layer[i].push_back(j);
    });
  }
  return idx;
}

json pair_cex(const char* what, const IntFn& g, const IntFn& s, Deg h,
              json extra = json::object()) {
  json j{{"what", what}, {"gamma", fn_json(g)}, {"sigma", fn_json(s)}, {"h", h}};
  j.update(extra);
  return j;
}

void claim_transitivity(ClaimContext& ctx) {
  DomIndex idx = build_dom_index(ctx.w, ctx.mode);
  int n = static_cast<int>(idx.chars.size());
  for (Deg h = 0; h <= ctx.w.max_height; ++h)
    for (Deg k = 0; k <= ctx.w.max_height; ++k) {
      const auto& ah = idx.adj[static_cast<std::size_t>(h)];
      const auto& ak = idx.adj[static_cast<std::size_t>(k)];
      for_range(n, ctx.mode, [&](long long i) {
        for (int j : ah[i])
          for (int t : ak[j]) {
            ctx.instance();
            if (!dominates_at(idx.chars[i], idx.chars[t], h + k))
              ctx.counterexample(
                  pair_cex("transitivity", idx.chars[i].fn(), idx.chars[t].fn(),
                           h + k, json{{"mid", fn_json(idx.chars[j].fn())},
                                       {"h1", h}, {"h2", k}}));
          }
      });
    }
}

void claim_bijection_26(ClaimContext& ctx) {
  DomIndex idx = build_dom_index(ctx.w, ctx.mode);
  int n = static_cast<int>(idx.chars.size());
  // Direction 1: every pair, consistency of the definition with the eta
  // criterion, and sigma round-trip on the dominating ones.
  for (Deg h = 0; h <= ctx.w.max_height; ++h)
    for_range(n, ctx.mode, [&](long long i) {
      for (int j = 0; j < n; ++j) {
        const auto& g = idx.chars[i];
        const auto& s = idx.chars[j];
        ctx.instance();
        EtaResult er = eta_of(g, s, h);
        if (er.ok() != dominates_at(g, s, h)) {
          ctx.counterexample(pair_cex("definition-vs-eta-criterion", g.fn(),
                                      s.fn(), h));
          continue;
        }
        if (er.ok()) {
          AdmissibleCharacter back = sigma_from_eta(g, h, *er.eta);
          if (!(back == s))
            ctx.counterexample(pair_cex("sigma-roundtrip", g.fn(), s.fn(), h));
        }
      }
    });
  // Direction 2: every windowed eta, through sigma and back.
  for (Deg h = 0; h <= ctx.w.max_height; ++h)
    for_range(static_cast<long long>(idx.chars.size()), ctx.mode, [&](long long i) {
      const auto& g = idx.chars[i];
      for (const auto& wit : enumerate_dominating(g, h, ctx.w.lo, ctx.w.hi)) {
        ctx.instance();
        EtaResult er = eta_of(g, wit.sigma, h);
        if (!er.ok() || !(*er.eta == wit.eta))
          ctx.counterexample(pair_cex("eta-roundtrip", g.fn(), wit.sigma.fn(),
                                      h, json{{"eta", fn_json(wit.eta.fn())}}));
      }
    });
}

void claim_bijection_29(ClaimContext& ctx) {
  DomIndex idx = build_dom_index(ctx.w, ctx.mode);
  int n = static_cast<int>(idx.chars.size());
  for (Deg h = 0; h <= ctx.w.max_height; ++h)
    for_range(n, ctx.mode, [&](long long i) {
      const auto& g = idx.chars[i];
      for (int j : idx.adj[static_cast<std::size_t>(h)][i]) {
        const auto& s = idx.chars[j];
        ctx.instance();
        NatFn theta = theta_of(g, s, h);
        Val m = theta.sum();
        bool valid = m <= h &&
                     (theta.is_zero() || theta.fn().min_support() >= g.s0() + m);
        NatFn eta = eta_from_theta(g, h, theta);
        EtaResult er = eta_of(g, s, h);
        if (!valid || !er.ok() || !(eta == *er.eta) ||
            !(sigma_from_eta(g, h, eta) == s))
          ctx.counterexample(pair_cex("theta-roundtrip", g.fn(), s.fn(), h,
                                      json{{"theta", fn_json(theta.fn())}}));
      }
      // theta direction: every valid windowed theta comes from a unique
      // dominating sigma and converts back.
      for (Val m = 0; m <= h; ++m) {
        std::vector<Val> vals;
        Deg lo = g.s0() + m, hi = ctx.w.hi + h;
        if (lo > hi && m > 0) continue;
        std::size_t width = m == 0 ? 1 : static_cast<std::size_t>(hi - lo + 1);
        std::function<void(std::size_t, Val)> rec = [&](std::size_t pos, Val rest) {
          if (pos + 1 == width) {
            vals.push_back(rest);
            std::vector<IntFn::Entry> entries;
            for (std::size_t t = 0; t < width; ++t)
              if (vals[t] != 0)
                entries.emplace_back(lo + static_cast<Deg>(t), vals[t]);
            vals.pop_back();
            NatFn theta{IntFn(std::move(entries))};
            if (theta.sum() != m) return;
            ctx.instance();
            NatFn eta = eta_from_theta(g, h, theta);
            NatFn back = theta_from_eta(g, h, eta);
            if (!(back == theta))
              ctx.counterexample(pair_cex("theta-direction-roundtrip", g.fn(),
                                          eta.fn(), h,
                                          json{{"theta", fn_json(theta.fn())}}));
            return;
          }
          for (Val v = 0; v <= rest; ++v) {
            vals.push_back(v);
            rec(pos + 1, rest - v);
            vals.pop_back();
          }
        };
        rec(0, m);
      }
    });
}

void claim_relative(ClaimContext& ctx, bool theta_side) {
  DomIndex idx = build_dom_index(ctx.w, ctx.mode);
  int n = static_cast<int>(idx.chars.size());
  for (Deg h = 0; h <= ctx.w.max_height; ++h)
    for (Deg k = 0; k <= ctx.w.max_height; ++k)
      for_range(n, ctx.mode, [&](long long i) {
        const auto& g = idx.chars[i];
        for (int j : idx.adj[static_cast<std::size_t>(h)][i])
          for (int t : idx.adj[static_cast<std::size_t>(k)][i]) {
            const auto& tau = idx.chars[j];
            const auto& sig = idx.chars[t];
            ctx.instance();
            bool expected = k >= h && dominates_at(tau, sig, k - h);
            if (theta_side) {
              auto rel = relative_theta(g, tau, sig, h, k);
              bool bad = rel.has_value() != expected;
              if (!bad && rel)
                bad = !(*rel == theta_of(tau, sig, k - h));
              if (bad)
                ctx.counterexample(pair_cex("relative-theta", tau.fn(), sig.fn(),
                                            k - h, json{{"base", fn_json(g.fn())}}));
            } else {
              auto rel = relative_eta(g, tau, sig, h, k);
              bool bad = rel.has_value() != expected;
              if (!bad && rel)
                bad = !(*rel == *eta_of(tau, sig, k - h).eta);
              if (bad)
                ctx.counterexample(pair_cex("relative-eta", tau.fn(), sig.fn(),
                                            k - h, json{{"base", fn_json(g.fn())}}));
            }
          }
      });
}

std::vector<LinkageClass> claim_classes() {
  return {fixtures::skew_lines(), fixtures::four_lines_on_quadric(),
          fixtures::synthetic_s1_lt_t1()};
}

// Includes the class identity so a counterexample replays unambiguously.
json model_json(const SubschemeModel& x) {
  return json{{"h", x.h()},
              {"theta", fn_json(x.theta().fn())},
              {"class", {{"gamma0", fn_json(x.cls().gamma0().fn())},
                         {"t1", x.cls().t1()},
                         {"e", x.cls().e()}}}};
}

void claim_formulas_316(ClaimContext& ctx) {
  for (const auto& cls : claim_classes()) {
    auto family = fixtures::model_family(cls, 4, 9);
    for_range(static_cast<long long>(family.size()), ctx.mode, [&](long long i) {
      const SubschemeModel& x = family[static_cast<std::size_t>(i)];
      ctx.instance();
      DerivedInvariants inv = invariants(x);
      AdmissibleCharacter direct = model_gamma(x);
      bool ok = inv.s0 == direct.s0() && inv.s1 == direct.s1() &&
                inv.s1 <= t1_bound(x);
      if (!ok)
        ctx.counterexample(json{{"what", "invariant-formulas"},
                                {"model", model_json(x)},
                                {"gamma", fn_json(direct.fn())}});
    });
  }
}

void claim_duality(ClaimContext& ctx) {
  std::vector<SubschemeModel> family;
  for (const auto& cls : {fixtures::skew_lines(), fixtures::four_lines_on_quadric()})
    for (const auto& x : fixtures::model_family(cls, 4, 9)) family.push_back(x);
  for_range(static_cast<long long>(family.size()), ctx.mode, [&](long long i) {
    const SubschemeModel& x = family[static_cast<std::size_t>(i)];
    const LinkageClass& cls = x.cls();
    DerivedInvariants inv = invariants(x);
    Deg tb = t1_bound(x);
    for (Deg s = inv.s0; s <= inv.s0 + 2; ++s)
      for (Deg t = std::max(tb, s); t <= tb + 2; ++t) {
        ctx.instance();
        json info{{"model", model_json(x)}, {"s", s}, {"t", t}};
        std::optional<SubschemeModel> linked;
        try {
          linked = link_dual(x, s, t);
        } catch (const invalid_input& e) {
          ctx.counterexample(json{{"what", "link-rejected"}, {"info", info},
                                  {"error", e.what()}});
          continue;
        }
        const SubschemeModel& y = *linked;
        DerivedInvariants invy = invariants(y);
        if (x.h() + y.h() != s + t - cls.s0() - cls.t1()) {
          ctx.counterexample(json{{"what", "height-identity"}, {"info", info}});
          continue;
        }
        if (inv.degree + invy.degree != s * t) {
          ctx.counterexample(json{{"what", "degree-conservation"}, {"info", info}});
          continue;
        }
        // Pointwise linkage identity for eta.
        bool pointwise = true;
        for (Deg l = -2; l <= s + t + 12; ++l) {
          Val lhs = inv.eta.at(l) - invy.eta.at(s + t - 1 - l);
          Val rhs = step(l - s) + step(l - t) - step(l - cls.s0() - x.h()) -
                    step(l - cls.t1() - x.h());
          if (lhs != rhs) pointwise = false;
        }
        if (!pointwise) {
          ctx.counterexample(json{{"what", "linkage-eta-identity"}, {"info", info}});
          continue;
        }
        SubschemeModel back = link_dual(y, s, t);
        if (!(back.h() == x.h() && back.theta() == x.theta()))
          ctx.counterexample(json{{"what", "involution"}, {"info", info}});
      }
  });
}

void claim_t1_sharpness(ClaimContext& ctx) {
  for (const auto& cls : claim_classes()) {
    auto family = fixtures::model_family(cls, 4, 9);
    for_range(static_cast<long long>(family.size()), ctx.mode, [&](long long i) {
      const SubschemeModel& x = family[static_cast<std::size_t>(i)];
      ctx.instance();
      T1WitnessChain chain = t1_witness_chain(x);
      SubschemeModel cur(cls, chain.base_height, NatFn{});
      bool ok = chain.certified_t1 == t1_bound(x) &&
                chain.base_link_s == cls.s0() &&
                chain.base_link_t == cls.t1() + chain.base_height;
      for (const auto& st : chain.steps)
        cur = double_link(cur, st.s, st.h, LinkKind::elementary);
      ok = ok && cur == x;
      if (!ok)
        ctx.counterexample(json{{"what", "t1-witness-replay"},
                                {"model", model_json(x)}});
    });
  }
}

void claim_decompose_replay(ClaimContext& ctx) {
  for (const auto& cls : claim_classes()) {
    auto family = fixtures::model_family(cls, 3, 9);
    long long count = static_cast<long long>(family.size());
    for_range(count * count, ctx.mode, [&](long long ij) {
      const SubschemeModel& x = family[static_cast<std::size_t>(ij / count)];
      const SubschemeModel& y = family[static_cast<std::size_t>(ij % count)];
      auto dom = dominates_model(x, y);
      if (!dom) return;
      ctx.instance();
      // Height-one basic links replay.
      try {
        SubschemeModel cur = x;
        for (const auto& st : lr_decompose(x, y))
          cur = double_link(cur, st.s, st.h, st.kind);
        if (!(cur == y)) {
          ctx.counterexample(json{{"what", "lr-replay"}, {"from", model_json(x)},
                                  {"to", model_json(y)}});
          return;
        }
      } catch (const invalid_input& e) {
        ctx.counterexample(json{{"what", "lr-error"}, {"from", model_json(x)},
                                {"to", model_json(y)}, {"error", e.what()}});
        return;
      }
      // Gated elementary chain on pairs satisfying the integrality
      // hypotheses (start minimal or passing, target passing).
      bool x_ok = (x.h() == 0 && x.theta().is_zero()) ||
                  integral_necessary(x, IntegralVariant::strict_s0).pass;
      bool y_ok = integral_necessary(y, IntegralVariant::strict_s0).pass;
      if (x_ok && y_ok) {
        try {
          IntegralChain chain = integral_chain(x, y);
          SubschemeModel c2 = x;
          for (const auto& st : chain.steps)
            c2 = double_link(c2, st.a, st.w, LinkKind::elementary);
          if (!(c2 == y))
            ctx.counterexample(json{{"what", "integral-replay"},
                                    {"from", model_json(x)},
                                    {"to", model_json(y)}});
        } catch (const gate_failure& gf) {
          ctx.counterexample(json{{"what", "integral-gate"},
                                  {"from", model_json(x)},
                                  {"to", model_json(y)},
                                  {"gate", gf.what()}});
        } catch (const invalid_input& e) {
          ctx.counterexample(json{{"what", "integral-error"},
                                  {"from", model_json(x)},
                                  {"to", model_json(y)},
                                  {"error", e.what()}});
        }
      }
    });
  }
}

}  // namespace

ClaimReport check_claim(std::string_view claim, const SearchWindow& w,
                        RunMode mode) {
  ClaimContext ctx(w, mode);
  if (claim == "transitivity-2.3")
    claim_transitivity(ctx);
  else if (claim == "bijection-2.6")
    claim_bijection_26(ctx);
  else if (claim == "bijection-2.9")
    claim_bijection_29(ctx);
  else if (claim == "relative-2.7")
    claim_relative(ctx, false);
  else if (claim == "relative-2.10")
    claim_relative(ctx, true);
  else if (claim == "formulas-3.16")
    claim_formulas_316(ctx);
  else if (claim == "duality-3.19-involution")
    claim_duality(ctx);
  else if (claim == "t1-sharpness-4.6")
    claim_t1_sharpness(ctx);
  else if (claim == "decompose-replay-3.9-5.11")
    claim_decompose_replay(ctx);
  else
    throw invalid_input("unknown claim '" + std::string(claim) + "'");
  return ctx.finish(std::string(claim));
}

OracleConfig parse_oracle_config(std::string_view text) {
  auto args = [&](std::string_view name) -> std::vector<long long> {
    // name(v1,v2,...) -> numbers
    std::string s(text.substr(name.size()));
    if (s.empty() || s.front() != '(' || s.back() != ')')
      throw invalid_input("malformed oracle config '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
      try {
        out.push_back(std::stoll(tok));
      } catch (...) {
        throw invalid_input("malformed oracle config '" + std::string(text) + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  OracleConfig c;
  if (text == "line") {
    c.kind = OracleConfig::Kind::line;
  } else if (text.starts_with("ci(")) {
    auto v = args("ci");
    if (v.size() != 2) throw invalid_input("ci config needs two degrees");
    c.kind = OracleConfig::Kind::ci;
    c.a = v[0];
    c.b = v[1];
    if (c.a < 1 || c.b < 1) throw invalid_input("ci degrees must be positive");
  } else if (text.starts_with("disjoint-lines(")) {
    auto v = args("disjoint-lines");
    if (v.size() != 1 || v[0] < 1) throw invalid_input("disjoint-lines needs a count >= 1");
    c.kind = OracleConfig::Kind::disjoint_lines;
    c.d = static_cast<int>(v[0]);
  } else if (text == "four-lines-on-quadric") {
    c.kind = OracleConfig::Kind::four_lines_on_quadric;
  } else if (text.starts_with("seminatural(")) {
    auto v = args("seminatural");
    if (v.size() != 2 || v[0] < 1) throw invalid_input("seminatural needs (degree, genus)");
    c.kind = OracleConfig::Kind::seminatural;
    c.d = static_cast<int>(v[0]);
    c.genus = v[1];
  } else {
    throw invalid_input("unrecognized oracle config '" + std::string(text) + "'");
  }
  return c;
}

long long hilbert_oracle(const OracleConfig& config, Deg l) {
  if (l < 0) return 0;
  switch (config.kind) {
    case OracleConfig::Kind::line:
      return binom(l + 3, 3) - (l + 1);
    case OracleConfig::Kind::ci: {
      auto h0 = [](Deg x) { return x >= 0 ? binom(x + 3, 3) : 0; };
      return h0(l - config.a) + h0(l - config.b) - h0(l - config.a - config.b);
    }
    case OracleConfig::Kind::disjoint_lines:
      return std::max<long long>(0, binom(l + 3, 3) - config.d * (l + 1));
    case OracleConfig::Kind::four_lines_on_quadric:
      // Through the quadric: h^0 O(l-2) plus the sections on the quadric,
      // a (l-4, l) divisor class.
      return binom(l + 1, 3) + std::max<long long>(0, (l - 3) * (l + 1));
    case OracleConfig::Kind::seminatural:
      return std::max<long long>(
          0, binom(l + 3, 3) - (config.d * l + 1 - config.genus));
  }
  throw invalid_input("unrecognized oracle config");
}

AdmissibleCharacter gamma_from_oracle(const OracleConfig& config) {
  constexpr Deg kSpan = 24;
  std::vector<IntFn::Entry> entries;
  for (Deg l = 0; l <= kSpan; ++l) {
    Val v = -step(l);
    // Third difference of the h^0 table.
    static const Val signs[4] = {1, -3, 3, -1};
    for (int i = 0; i < 4; ++i) v += signs[i] * hilbert_oracle(config, l - i);
    if (v != 0) entries.emplace_back(l, v);
  }
  IntFn gamma(std::move(entries));
  if (!gamma.is_zero() && gamma.max_support() > kSpan - 4)
    throw invalid_input("oracle character did not stabilize inside the window");
  return require_admissible(gamma);
}

namespace fixtures {

LinkageClass skew_lines() {
  AdmissibleCharacter g = gamma_from_oracle(parse_oracle_config("disjoint-lines(2)"));
  return LinkageClass(3, g, 2, -2, true, LinkageClass::DualData{g, 2, -2});
}

LinkageClass four_lines_on_quadric() {
  AdmissibleCharacter g = gamma_from_oracle(parse_oracle_config("four-lines-on-quadric"));
  return LinkageClass(3, g, 4, -1, true, LinkageClass::DualData{g, 4, -1});
}

LinkageClass seminatural_degree10() {
  AdmissibleCharacter g = gamma_from_oracle(parse_oracle_config("seminatural(10,0)"));
  return LinkageClass(3, g, 5, -1, true);
}

LinkageClass synthetic_s1_lt_t1() {
  AdmissibleCharacter g = require_admissible(IntFn{{0, -1}, {1, -1}, {3, 1}, {4, 1}});
  return LinkageClass(3, g, 5, -2, true);
}

ResolutionData skew_minimal_n_type() {
  LinkageClass cls = skew_lines();
  std::vector<Deg> p{4};
  CoreDelta core = core_from_minimal(cls.gamma0(), p, {}, 3);
  CoreDelta dual = dual_core_via_minimal_link(cls.gamma0(), p, cls.s0(), cls.t1(), 3);
  return make_resolution(ResKind::N, p, {}, core, dual, 0);
}

std::vector<SubschemeModel> model_family(const LinkageClass& cls, Deg max_h,
                                         Deg theta_hi) {
  std::vector<SubschemeModel> out;
  for (Deg h = 0; h <= max_h; ++h) {
    for (Val m = 0; m <= h; ++m) {
      Deg lo = cls.s0() + m;
      if (m > 0 && lo > theta_hi) continue;
      std::size_t width = m == 0 ? 1 : static_cast<std::size_t>(theta_hi - lo + 1);
      std::vector<Val> vals(width, 0);
      std::function<void(std::size_t, Val)> rec = [&](std::size_t pos, Val rest) {
        if (pos + 1 == width) {
          vals[pos] = rest;
          std::vector<IntFn::Entry> entries;
          for (std::size_t t = 0; t < width; ++t)
            if (vals[t] != 0) entries.emplace_back(lo + static_cast<Deg>(t), vals[t]);
          IntFn theta(std::move(entries));
          if (theta.sum() == m) out.emplace_back(cls, h, NatFn(theta));
          return;
        }
        for (Val v = 0; v <= rest; ++v) {
          vals[pos] = v;
          rec(pos + 1, rest - v);
        }
      };
      rec(0, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const SubschemeModel& a, const SubschemeModel& b) {
    if (a.h() != b.h()) return a.h() < b.h();
    return a.theta() < b.theta();
  });
  return out;
}

}  // namespace fixtures

}  // namespace liaison
