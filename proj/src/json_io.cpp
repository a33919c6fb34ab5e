#include "liaison/json_io.hpp"

#include <fstream>

namespace liaison {

namespace {

Deg to_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw invalid_input(std::string(what) + " must be an integer");
  return j.get<Deg>();
}

std::vector<Deg> twists_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
  std::vector<Deg> out;
  for (const auto& e : j) out.push_back(to_int(e, what));
  return out;
}

}  // namespace

json to_json(const IntFn& f) {
  json entries = json::array();
  for (const auto& [l, v] : f.entries()) entries.push_back({l, v});
  return json{{"entries", entries}};
}

IntFn intfn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw invalid_input("integer function must be {\"entries\": [[degree, value], ...]}");
  std::vector<IntFn::Entry> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2)
      throw invalid_input("each entry must be a [degree, value] pair");
    entries.emplace_back(to_int(e[0], "degree"), to_int(e[1], "value"));
  }
  return IntFn::from_sorted(std::move(entries));
}

NatFn natfn_from_json(const json& j) { return NatFn(intfn_from_json(j)); }

json to_json(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::not_character:
      return json{{"kind", "not-character"}, {"detail", c.detail}};
    case Classification::Kind::character:
      return json{{"kind", "character"}, {"detail", c.detail}};
    case Classification::Kind::admissible:
      return json{{"kind", "admissible"}, {"s0", c.chr->s0()}, {"s1", c.chr->s1()}};
  }
  throw invalid_input("unreachable");
}

json to_json(const CoreDelta& c) {
  return json{{"window", to_json(c.window())},
              {"tail_rank", c.tail_rank()},
              {"tail_start", c.tail_start()}};
}

CoreDelta core_from_json(const json& j) {
  if (j.is_null()) return CoreDelta::zero();
  if (!j.is_object()) throw invalid_input("core must be an object or null");
  return CoreDelta(j.contains("window") ? intfn_from_json(j["window"]) : IntFn{},
                   j.contains("tail_rank") ? to_int(j["tail_rank"], "tail_rank") : 0,
                   j.contains("tail_start") ? to_int(j["tail_start"], "tail_start") : 0);
}

json to_json(const ResolutionData& r) {
  json j{{"kind", r.kind == ResKind::N ? "N" : "E"},
         {"p", r.p},
         {"q", r.q},
         {"core", to_json(r.core)},
         {"core_twist", r.core_twist}};
  if (r.dual_core) j["dual_core"] = to_json(*r.dual_core);
  return j;
}

ResolutionData resolution_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("resolution must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw invalid_input("resolution needs \"kind\": \"N\" or \"E\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind != "N" && kind != "E")
    throw invalid_input("resolution kind must be \"N\" or \"E\"");
  std::optional<CoreDelta> dual;
  if (j.contains("dual_core") && !j["dual_core"].is_null())
    dual = core_from_json(j["dual_core"]);
  return make_resolution(
      kind == "N" ? ResKind::N : ResKind::E,
      j.contains("p") ? twists_from_json(j["p"], "p") : std::vector<Deg>{},
      j.contains("q") ? twists_from_json(j["q"], "q") : std::vector<Deg>{},
      j.contains("core") ? core_from_json(j["core"]) : CoreDelta::zero(), dual,
      j.contains("core_twist") ? to_int(j["core_twist"], "core_twist") : 0);
}

json to_json(const LinkageClass& cls) {
  json j{{"n", cls.n()},
         {"gamma0", to_json(cls.gamma0().fn())},
         {"t1", cls.t1()},
         {"e", cls.e()},
         {"non_acm", cls.non_acm()},
         {"dual", nullptr}};
  if (cls.has_dual()) {
    const auto& d = *cls.dual_data();
    j["dual"] = json{{"gamma0", to_json(d.gamma0.fn())}, {"t1", d.t1}, {"e", d.e}};
  }
  return j;
}

LinkageClass class_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("class descriptor must be an object");
  for (const char* key : {"n", "gamma0", "t1", "e", "non_acm"})
    if (!j.contains(key))
      throw invalid_input(std::string("class descriptor is missing \"") + key + "\"");
  std::optional<LinkageClass::DualData> dual;
  if (j.contains("dual") && !j["dual"].is_null()) {
    const json& d = j["dual"];
    for (const char* key : {"gamma0", "t1", "e"})
      if (!d.contains(key))
        throw invalid_input(std::string("dual descriptor is missing \"") + key + "\"");
    dual = LinkageClass::DualData{require_admissible(intfn_from_json(d["gamma0"])),
                                  to_int(d["t1"], "dual t1"), to_int(d["e"], "dual e")};
  }
  if (!j["non_acm"].is_boolean())
    throw invalid_input("non_acm must be a boolean");
  return LinkageClass(static_cast<int>(to_int(j["n"], "n")),
                      require_admissible(intfn_from_json(j["gamma0"])),
                      to_int(j["t1"], "t1"), to_int(j["e"], "e"),
                      j["non_acm"].get<bool>(), std::move(dual));
}

json to_json(const DominationWitness& w, const AdmissibleCharacter& gamma) {
  return json{{"gamma", to_json(gamma.fn())}, {"sigma", to_json(w.sigma.fn())},
              {"h", w.h},       {"m", w.m},
              {"eta", to_json(w.eta.fn())},   {"theta", to_json(w.theta.fn())}};
}

json to_json(const BMInvariant& inv) { return json{{"b", inv.b}, {"g", inv.g}}; }

json to_json(const DerivedInvariants& inv) {
  json j{{"s0", inv.s0}, {"s1", inv.s1}, {"e", inv.e}, {"degree", inv.degree},
         {"gamma", to_json(inv.gamma.fn())}, {"eta", to_json(inv.eta.fn())}};
  return j;
}

json to_json(const DoubleLinkStep& s) {
  return json{{"s", s.s}, {"h", s.h},
              {"kind", s.kind == LinkKind::basic ? "basic" : "elementary"}};
}

json to_json(const IntegralVerdict& v) {
  return json{{"pass", v.pass}, {"failed", v.failed}};
}

json to_json(const IntegralStep& s) {
  return json{{"a", s.a},
              {"w", s.w},
              {"s0", s.s0_at},
              {"s1", s.s1_at},
              {"e", s.e_at},
              {"t1_bound", s.t1_bound_at},
              {"s1_form_ok", s.s1_form_ok},
              {"t1_form_ok", s.t1_form_ok},
              {"degree_ok", s.degree_ok}};
}

json to_json(const IntegralChain& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  return json{{"steps", steps},
              {"target_strict", to_json(c.target_strict)},
              {"target_combined", to_json(c.target_combined)}};
}

json to_json(const T1WitnessChain& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  return json{{"steps", steps},
              {"base_height", c.base_height},
              {"base_link", {c.base_link_s, c.base_link_t}},
              {"certified_t1", c.certified_t1}};
}

json to_json(const ClaimReport& r) {
  return json{{"claim", r.claim},
              {"instances", r.instances},
              {"counterexamples", r.counterexamples}};
}

json model_to_json(const SubschemeModel& x) {
  return json{{"h", x.h()}, {"theta", to_json(x.theta().fn())}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw invalid_input("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

LinkageClass load_class_file(const std::filesystem::path& path) {
  return class_from_json(load_json_file(path));
}

SubschemeModel load_model_file(const std::filesystem::path& path,
                               const std::optional<LinkageClass>& override_cls) {
  json j = load_json_file(path);
  if (!j.is_object() || !j.contains("h") || !j.contains("theta"))
    throw invalid_input("model file needs \"h\" and \"theta\"");
  std::optional<LinkageClass> cls = override_cls;
  if (!cls && j.contains("class") && !j["class"].is_null()) {
    const json& c = j["class"];
    if (c.is_string())
      cls = load_class_file(path.parent_path() / c.get<std::string>());
    else
      cls = class_from_json(c);
  }
  if (!cls)
    throw invalid_input("no class descriptor: pass --class or put one in the model file");
  return SubschemeModel(*cls, to_int(j["h"], "h"), natfn_from_json(j["theta"]));
}

std::vector<std::vector<Deg>> stages_from_json(const json& j) {
  if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array())
    throw invalid_input("free resolution must be {\"stages\": [[..], ..]}");
  std::vector<std::vector<Deg>> stages;
  for (const auto& st : j["stages"]) stages.push_back(twists_from_json(st, "stage"));
  return stages;
}

}  // namespace liaison
