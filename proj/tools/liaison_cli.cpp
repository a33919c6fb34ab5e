// Command-line surface over the linkage-class calculus.  Every subcommand
// maps to one library operation; inputs are JSON files, outputs are JSON
// documents (sorted keys, byte-stable), JSON lines for enumerations, DOT
// for posets.  Exit codes: 0 success / check true, 1 check false or
// counterexample found, 2 invalid input.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liaison/hilbert.hpp"
#include "liaison/json_io.hpp"
#include "liaison/oracle.hpp"

namespace {

using namespace liaison;

std::pair<Deg, Deg> parse_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw invalid_input(std::string(what) + " must be two integers 'a,b'");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (...) {
    throw invalid_input(std::string(what) + " must be two integers 'a,b'");
  }
}

std::vector<Deg> parse_list(const std::string& text, const char* what) {
  std::vector<Deg> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      out.push_back(std::stoll(tok));
    } catch (...) {
      throw invalid_input(std::string(what) + " must be a comma-separated integer list");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

AdmissibleCharacter load_admissible(const std::string& path) {
  return require_admissible(intfn_from_json(load_json_file(path)));
}

std::optional<LinkageClass> maybe_class(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_class_file(path);
}

LinkKind parse_kind(const std::string& kind) {
  if (kind == "basic") return LinkKind::basic;
  if (kind == "elementary") return LinkKind::elementary;
  throw invalid_input("kind must be 'basic' or 'elementary'");
}

std::string theta_text(const IntFn& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [l, v] : f.entries()) {
    if (!first) out += ",";
    out += std::to_string(l) + ":" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

int cmd_poset(const LinkageClass& cls, Deg max_h, Deg lo, Deg hi) {
  std::vector<SubschemeModel> nodes;
  for (Deg h = 0; h <= max_h; ++h)
    for (const auto& wit : enumerate_dominating(cls.gamma0(), h, lo, hi))
      nodes.emplace_back(cls, h, wit.theta);
  std::cout << "digraph domination {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    DerivedInvariants inv = invariants(nodes[i]);
    std::cout << "  n" << i << " [label=\"h=" << nodes[i].h()
              << " theta=" << theta_text(nodes[i].theta().fn())
              << " s0=" << inv.s0 << " s1=" << inv.s1
              << " deg=" << inv.degree << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      if (auto h = dominates_model(nodes[i], nodes[j]))
        std::cout << "  n" << i << " -> n" << j << " [label=\"" << *h << "\"];\n";
    }
  std::cout << "}\n";
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact-integer calculus of even linkage classes of codimension-two subschemes"};
  app.require_subcommand(1);

  // char classify / char gamma
  auto* chr = app.add_subcommand("char", "characters and admissibility");
  chr->require_subcommand(1);
  auto* classify_cmd = chr->add_subcommand("classify", "classify an integer function");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file, "integer function JSON")->required();
  auto* gamma_cmd = chr->add_subcommand("gamma", "character from resolution data");
  std::string free_res, n_data;
  int gamma_n = 3;
  gamma_cmd->add_option("--free-resolution", free_res, "free resolution stage file");
  gamma_cmd->add_option("--n-data", n_data, "resolution data file");
  gamma_cmd->add_option("--n", gamma_n, "ambient dimension");

  // dominate / eta / theta
  std::string dom_gamma, dom_sigma;
  Deg dom_h = 0;
  auto* dominate_cmd = app.add_subcommand("dominate", "test domination at a height");
  auto* eta_cmd = app.add_subcommand("eta", "eta witness of a domination");
  auto* theta_cmd = app.add_subcommand("theta", "theta witness of a domination");
  for (auto* c : {dominate_cmd, eta_cmd, theta_cmd}) {
    c->add_option("--gamma", dom_gamma, "dominated character")->required();
    c->add_option("--sigma", dom_sigma, "dominating character")->required();
    c->add_option("--height", dom_h, "height")->required();
  }

  // model invariants and the remaining model-level operations
  auto* model_cmd = app.add_subcommand("model", "subscheme models");
  model_cmd->require_subcommand(1);
  auto* inv_cmd = model_cmd->add_subcommand("invariants", "derived invariants");
  std::string inv_class, inv_theta;
  Deg inv_h = 0;
  inv_cmd->add_option("--class", inv_class, "class descriptor")->required();
  inv_cmd->add_option("--height", inv_h, "height")->required();
  inv_cmd->add_option("--theta", inv_theta, "theta function file")->required();
  std::string mo_class, mo_model, mo_from, mo_to;
  auto* mo_dom = model_cmd->add_subcommand("dominates", "height difference when one model dominates another");
  mo_dom->add_option("--class", mo_class, "class descriptor");
  mo_dom->add_option("--from", mo_from, "dominated model file")->required();
  mo_dom->add_option("--to", mo_to, "dominating model file")->required();
  auto* mo_t1w = model_cmd->add_subcommand("t1-witness", "elementary chain attaining the t1 bound");
  auto* mo_std = model_cmd->add_subcommand("st-deformable", "deformability to a representative with s1 = t1");
  auto* mo_lmc = model_cmd->add_subcommand("link-minimal", "residual theta under the minimal linkage");
  auto* mo_cm = model_cmd->add_subcommand("contains-minimal", "minimal element sits inside every representative");
  for (auto* c : {mo_t1w, mo_std, mo_lmc, mo_cm}) {
    c->add_option("--class", mo_class, "class descriptor");
    c->add_option("--model", mo_model, "model file")->required();
  }
  auto* mo_stm = model_cmd->add_subcommand("st-minimal", "minimal element of the s1 = t1 subposet");
  auto* mo_um = model_cmd->add_subcommand("unique-minimal", "class has a unique minimal element");
  for (auto* c : {mo_stm, mo_um})
    c->add_option("--class", mo_class, "class descriptor")->required();

  // double-link
  auto* dl_cmd = app.add_subcommand("double-link", "double link of type (s,h)");
  std::string dl_class, dl_model, dl_type, dl_kind = "basic";
  dl_cmd->add_option("--class", dl_class, "class descriptor");
  dl_cmd->add_option("--model", dl_model, "model file")->required();
  dl_cmd->add_option("--type", dl_type, "link type s,h")->required();
  dl_cmd->add_option("--kind", dl_kind, "basic|elementary");

  // link
  auto* link_cmd = app.add_subcommand("link", "linkage into the dual class");
  std::string lk_class, lk_model, lk_degrees;
  link_cmd->add_option("--class", lk_class, "class descriptor");
  link_cmd->add_option("--model", lk_model, "model file")->required();
  link_cmd->add_option("--degrees", lk_degrees, "linkage degrees s,t")->required();

  // t1-bound
  auto* t1_cmd = app.add_subcommand("t1-bound", "sharp lower bound for t1");
  std::string t1_class, t1_model;
  t1_cmd->add_option("--class", t1_class, "class descriptor");
  t1_cmd->add_option("--model", t1_model, "model file")->required();

  // integral-check
  auto* ic_cmd = app.add_subcommand("integral-check", "necessary conditions for integrality");
  std::string ic_class, ic_model, ic_variant;
  ic_cmd->add_option("--class", ic_class, "class descriptor");
  ic_cmd->add_option("--model", ic_model, "model file")->required();
  ic_cmd->add_option("--variant", ic_variant, "strict-s0|combined-s1")->required();

  // decompose lr|integral
  auto* dec_cmd = app.add_subcommand("decompose", "chains between dominated models");
  dec_cmd->require_subcommand(1);
  std::string dec_class, dec_from, dec_to;
  auto* dec_lr = dec_cmd->add_subcommand("lr", "basic double links of height one");
  auto* dec_int = dec_cmd->add_subcommand("integral", "gated elementary double links");
  for (auto* c : {dec_lr, dec_int}) {
    c->add_option("--class", dec_class, "class descriptor");
    c->add_option("--from", dec_from, "starting model file")->required();
    c->add_option("--to", dec_to, "target model file")->required();
  }

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "dominating characters in a window");
  std::string en_class, en_window;
  Deg en_h = 0;
  bool en_count = false;
  enum_cmd->add_option("--class", en_class, "class descriptor")->required();
  enum_cmd->add_option("--height", en_h, "height")->required();
  enum_cmd->add_option("--window", en_window, "eta support window a,b")->required();
  enum_cmd->add_flag("--count-only", en_count, "print only the count");

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "domination poset as a graph");
  std::string po_class, po_window, po_format = "dot";
  Deg po_maxh = 0;
  poset_cmd->add_option("--class", po_class, "class descriptor")->required();
  poset_cmd->add_option("--max-height", po_maxh, "height cap")->required();
  poset_cmd->add_option("--window", po_window, "eta support window a,b")->required();
  poset_cmd->add_option("--format", po_format, "output format (dot)");

  // hilbert
  auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert data of a character");
  std::string hi_gamma;
  int hi_n = 3;
  Deg hi_at_value = 0;
  bool hi_poly = false, hi_dg = false;
  std::string hi_dissocie;
  auto* hi_at_opt = hil_cmd->add_option("--at", hi_at_value,
                                        "evaluate h0 of the ideal sheaf at a twist");
  hil_cmd->add_option("--gamma", hi_gamma, "character file");
  hil_cmd->add_option("--n", hi_n, "ambient dimension");
  hil_cmd->add_flag("--polynomial", hi_poly, "print the Hilbert polynomial");
  hil_cmd->add_flag("--degree-genus", hi_dg, "print degree and genus");
  hil_cmd->add_option("--dissocie", hi_dissocie, "twist list for a dissocie h0 instead");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "exhaustive claim checking");
  std::string ve_claim, ve_window = "0,5";
  Val ve_maxabs = 3;
  Deg ve_maxh = 3;
  bool ve_serial = false;
  ver_cmd->add_option("--claim", ve_claim, "claim name")->required();
  ver_cmd->add_option("--window", ve_window, "degree window a,b");
  ver_cmd->add_option("--max-abs", ve_maxabs, "value bound");
  ver_cmd->add_option("--max-height", ve_maxh, "height bound");
  ver_cmd->add_flag("--serial", ve_serial, "single-threaded reference engine");

  // resolution transforms
  auto* res_cmd = app.add_subcommand("resolution", "twist-level resolution transforms");
  res_cmd->require_subcommand(1);
  std::string rs_input, rs_type, rs_degrees, rs_r, rs_s;
  Deg rs_h1 = 0, rs_h2 = 0;
  auto* res_dl = res_cmd->add_subcommand("double-link", "shift twists by a double link");
  res_dl->add_option("--input", rs_input, "resolution file")->required();
  res_dl->add_option("--type", rs_type, "link type s,h")->required();
  auto* res_lk = res_cmd->add_subcommand("link", "mapping-cone linkage");
  res_lk->add_option("--input", rs_input, "resolution file")->required();
  res_lk->add_option("--degrees", rs_degrees, "linkage degrees s,t")->required();
  auto* res_min = res_cmd->add_subcommand("minimize", "cancel matching twist pairs");
  res_min->add_option("--input", rs_input, "resolution file")->required();
  auto* res_dom = res_cmd->add_subcommand("dominates", "sharp comparison of kernel twists");
  res_dom->add_option("--r-twists", rs_r, "first kernel multiset")->required();
  res_dom->add_option("--s-twists", rs_s, "second kernel multiset")->required();
  res_dom->add_option("--h1", rs_h1, "first twist height")->required();
  res_dom->add_option("--h2", rs_h2, "second twist height")->required();
  std::string rc_gamma, rc_p, rc_q;
  Deg rc_s0 = 0, rc_t1 = 0;
  int rc_n = 3;
  auto* res_core = res_cmd->add_subcommand("core-from-minimal",
                                           "solve the minimal shape for the core");
  res_core->add_option("--gamma", rc_gamma, "minimal character file")->required();
  res_core->add_option("--p", rc_p, "kernel twist multiset");
  res_core->add_option("--q", rc_q, "middle twist multiset");
  res_core->add_option("--n", rc_n, "ambient dimension");
  auto* res_dual = res_cmd->add_subcommand(
      "dual-core", "core of the dual sheaf from the dual minimal character");
  res_dual->add_option("--gamma-dual", rc_gamma, "dual minimal character file")->required();
  res_dual->add_option("--p0", rc_p, "minimal kernel twist multiset");
  res_dual->add_option("--s0", rc_s0, "minimal degree s0")->required();
  res_dual->add_option("--t1", rc_t1, "minimal degree t1")->required();
  res_dual->add_option("--n", rc_n, "ambient dimension");

  // bm conversions
  auto* bm_cmd = app.add_subcommand("bm", "degree-sequence invariant conversions");
  bm_cmd->require_subcommand(1);
  std::string bm_theta, bm_g;
  Deg bm_h = 0;
  Val bm_b = 0;
  auto* bm_to = bm_cmd->add_subcommand("to", "theta and height to {b, g}");
  bm_to->add_option("--theta", bm_theta, "theta function file")->required();
  bm_to->add_option("--height", bm_h, "height")->required();
  auto* bm_from = bm_cmd->add_subcommand("from", "{b, g} to theta and height");
  bm_from->add_option("--b", bm_b, "b value")->required();
  bm_from->add_option("--g", bm_g, "nondecreasing degree list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed arguments are invalid input
  }

  if (classify_cmd->parsed()) {
    emit(to_json(classify(intfn_from_json(load_json_file(classify_file)))));
    return 0;
  }
  if (gamma_cmd->parsed()) {
    if (free_res.empty() == n_data.empty())
      throw invalid_input("pass exactly one of --free-resolution or --n-data");
    AdmissibleCharacter g =
        free_res.empty()
            ? gamma_from_resolution(resolution_from_json(load_json_file(n_data)), gamma_n)
            : gamma_from_free_resolution(stages_from_json(load_json_file(free_res)), gamma_n);
    emit(to_json(g.fn()));
    return 0;
  }
  if (dominate_cmd->parsed() || eta_cmd->parsed() || theta_cmd->parsed()) {
    AdmissibleCharacter g = load_admissible(dom_gamma);
    AdmissibleCharacter s = load_admissible(dom_sigma);
    EtaResult er = eta_of(g, s, dom_h);
    if (!er.ok()) {
      if (dominate_cmd->parsed()) {
        emit(json{{"dominates", false}, {"reason", er.error}});
      } else {
        std::cerr << "error: " << er.error << "\n";
      }
      return 1;
    }
    if (dominate_cmd->parsed())
      emit(to_json(make_witness(g, s, dom_h), g));
    else if (eta_cmd->parsed())
      emit(to_json(er.eta->fn()));
    else
      emit(to_json(theta_of(g, s, dom_h).fn()));
    return 0;
  }
  if (inv_cmd->parsed()) {
    SubschemeModel x(load_class_file(inv_class), inv_h,
                     natfn_from_json(load_json_file(inv_theta)));
    emit(to_json(invariants(x)));
    return 0;
  }
  if (mo_dom->parsed()) {
    auto cls = maybe_class(mo_class);
    auto h = dominates_model(load_model_file(mo_from, cls),
                             load_model_file(mo_to, cls));
    emit(json{{"dominates", h.has_value()},
              {"height", h ? json(*h) : json(nullptr)}});
    return h ? 0 : 1;
  }
  if (mo_t1w->parsed()) {
    emit(to_json(t1_witness_chain(load_model_file(mo_model, maybe_class(mo_class)))));
    return 0;
  }
  if (mo_std->parsed()) {
    bool ok = s1_t1_deformable(load_model_file(mo_model, maybe_class(mo_class)));
    emit(json{{"deformable", ok}});
    return ok ? 0 : 1;
  }
  if (mo_lmc->parsed()) {
    emit(to_json(link_minimal_ci(load_model_file(mo_model, maybe_class(mo_class))).fn()));
    return 0;
  }
  if (mo_cm->parsed()) {
    bool ok = contains_minimal(load_model_file(mo_model, maybe_class(mo_class)));
    emit(json{{"contains_minimal", ok}});
    return ok ? 0 : 1;
  }
  if (mo_stm->parsed()) {
    emit(model_to_json(minimal_M(load_class_file(mo_class))));
    return 0;
  }
  if (mo_um->parsed()) {
    bool ok = unique_minimal(load_class_file(mo_class));
    emit(json{{"unique_minimal", ok}});
    return ok ? 0 : 1;
  }
  if (dl_cmd->parsed()) {
    auto [s, h] = parse_pair(dl_type, "--type");
    SubschemeModel x = load_model_file(dl_model, maybe_class(dl_class));
    emit(model_to_json(double_link(x, s, h, parse_kind(dl_kind))));
    return 0;
  }
  if (link_cmd->parsed()) {
    auto [s, t] = parse_pair(lk_degrees, "--degrees");
    SubschemeModel x = load_model_file(lk_model, maybe_class(lk_class));
    SubschemeModel y = link_dual(x, s, t);
    json j = model_to_json(y);
    j["degree"] = invariants(y).degree;
    emit(j);
    return 0;
  }
  if (t1_cmd->parsed()) {
    std::cout << t1_bound(load_model_file(t1_model, maybe_class(t1_class))) << "\n";
    return 0;
  }
  if (ic_cmd->parsed()) {
    SubschemeModel x = load_model_file(ic_model, maybe_class(ic_class));
    IntegralVariant v = parse_integral_variant(ic_variant);
    IntegralVerdict verdict = integral_necessary(x, v);
    json j = to_json(verdict);
    j["variant"] = variant_name(v);
    emit(j);
    return verdict.pass ? 0 : 1;
  }
  if (dec_lr->parsed()) {
    auto cls = maybe_class(dec_class);
    auto steps = lr_decompose(load_model_file(dec_from, cls),
                              load_model_file(dec_to, cls));
    json arr = json::array();
    for (const auto& st : steps) arr.push_back(to_json(st));
    emit(json{{"steps", arr}});
    return 0;
  }
  if (dec_int->parsed()) {
    auto cls = maybe_class(dec_class);
    emit(to_json(integral_chain(load_model_file(dec_from, cls),
                                load_model_file(dec_to, cls))));
    return 0;
  }
  if (enum_cmd->parsed()) {
    auto [lo, hi] = parse_pair(en_window, "--window");
    LinkageClass cls = load_class_file(en_class);
    auto wits = enumerate_dominating(cls.gamma0(), en_h, lo, hi);
    if (en_count) {
      std::cout << wits.size() << "\n";
    } else {
      for (const auto& w : wits)
        std::cout << to_json(w, cls.gamma0()).dump() << "\n";
    }
    return 0;
  }
  if (poset_cmd->parsed()) {
    if (po_format != "dot") throw invalid_input("only --format dot is supported");
    auto [lo, hi] = parse_pair(po_window, "--window");
    return cmd_poset(load_class_file(po_class), po_maxh, lo, hi);
  }
  if (hil_cmd->parsed()) {
    bool has_at = hi_at_opt->count() > 0;
    if (!hi_dissocie.empty()) {
      if (!has_at) throw invalid_input("--dissocie needs --at");
      std::vector<Deg> twists = parse_list(hi_dissocie, "--dissocie");
      std::cout << h0_dissocie(twists, hi_n, hi_at_value) << "\n";
      return 0;
    }
    if (hi_gamma.empty()) throw invalid_input("--gamma is required");
    AdmissibleCharacter g = load_admissible(hi_gamma);
    if (static_cast<int>(has_at) + hi_poly + hi_dg != 1)
      throw invalid_input("pass exactly one of --at, --polynomial, --degree-genus");
    if (has_at) {
      std::cout << hilbert_function(g, hi_n, hi_at_value) << "\n";
    } else if (hi_poly) {
      RatPoly p = hilbert_polynomial(g, hi_n);
      json coeffs = json::array();
      for (const auto& c : p.coeffs)
        coeffs.push_back(c.den == 1 ? std::to_string(c.num)
                                    : std::to_string(c.num) + "/" + std::to_string(c.den));
      emit(json{{"coefficients", coeffs}});
    } else {
      DegreeGenus dg = degree_genus(g, hi_n);
      json j{{"degree", dg.degree}, {"genus", nullptr}};
      if (dg.genus) j["genus"] = *dg.genus;
      emit(j);
    }
    return 0;
  }
  if (ver_cmd->parsed()) {
    auto [lo, hi] = parse_pair(ve_window, "--window");
    SearchWindow w{lo, hi, ve_maxabs, ve_maxh};
    ClaimReport r = check_claim(ve_claim, w,
                                ve_serial ? RunMode::serial : RunMode::parallel);
    emit(to_json(r));
    return r.ok() ? 0 : 1;
  }
  if (res_dl->parsed()) {
    auto [s, h] = parse_pair(rs_type, "--type");
    emit(to_json(resolution_double_link(
        resolution_from_json(load_json_file(rs_input)), s, h)));
    return 0;
  }
  if (res_lk->parsed()) {
    auto [s, t] = parse_pair(rs_degrees, "--degrees");
    emit(to_json(resolution_link(resolution_from_json(load_json_file(rs_input)), s, t)));
    return 0;
  }
  if (res_min->parsed()) {
    emit(to_json(minimize_resolution(resolution_from_json(load_json_file(rs_input)))));
    return 0;
  }
  if (res_dom->parsed()) {
    bool ok = resolution_domination_check(parse_list(rs_r, "--r-twists"),
                                          parse_list(rs_s, "--s-twists"), rs_h1, rs_h2);
    emit(json{{"dominates", ok}});
    return ok ? 0 : 1;
  }
  if (res_core->parsed()) {
    emit(to_json(core_from_minimal(load_admissible(rc_gamma),
                                   parse_list(rc_p, "--p"),
                                   parse_list(rc_q, "--q"), rc_n)));
    return 0;
  }
  if (res_dual->parsed()) {
    emit(to_json(dual_core_via_minimal_link(load_admissible(rc_gamma),
                                            parse_list(rc_p, "--p0"), rc_s0,
                                            rc_t1, rc_n)));
    return 0;
  }
  if (bm_to->parsed()) {
    emit(to_json(to_bm(natfn_from_json(load_json_file(bm_theta)), bm_h)));
    return 0;
  }
  if (bm_from->parsed()) {
    auto [theta, h] = from_bm(BMInvariant{bm_b, parse_list(bm_g, "--g")});
    emit(json{{"h", h}, {"theta", to_json(theta.fn())}});
    return 0;
  }
  throw invalid_input("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const liaison::gate_failure& e) {
    std::cerr << "chain gate failed: " << e.what() << "\n";
    return 1;
  } catch (const liaison::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
