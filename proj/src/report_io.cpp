#include "schreier/report_io.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace schreier {

const char* library_version() { return "0.1.0"; }

namespace {

Json series_json(const TruncSeries& s) { return Json(s.to_strings()); }

Json rat_vector_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rat_to_string(q));
  return out;
}

int require_int(const Json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw UsageError(std::string("input needs an integer field '") + key + "'");
  int v = j[key].get<int>();
  if (v < lo || v > hi)
    throw UsageError(std::string("field '") + key + "' must be between " + std::to_string(lo) +
                     " and " + std::to_string(hi));
  return v;
}

Rat parse_coeff(const Json& j) {
  if (j.is_number_integer()) return make_rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw UsageError("coefficients must be integers or 'p/q' strings");
}

}  // namespace

FreeAct parse_act_input(const Json& j) {
  auto read_named = [](const Json& arr, const char* what) {
    if (!arr.is_array() || arr.empty())
      throw UsageError(std::string("'") + what + "' must be a nonempty array");
    std::vector<std::string> names;
    std::vector<int> degs;
    for (const Json& e : arr) {
      if (!e.contains("name") || !e.contains("deg"))
        throw UsageError(std::string("each entry of '") + what + "' needs 'name' and 'deg'");
      names.push_back(e["name"].get<std::string>());
      degs.push_back(e["deg"].get<int>());
    }
    return std::make_pair(names, degs);
  };
  if (!j.contains("alphabet") || !j.contains("act_basis"))
    throw UsageError("act input needs 'alphabet' and 'act_basis'");
  auto [ln, ld] = read_named(j["alphabet"], "alphabet");
  auto [bn, bd] = read_named(j["act_basis"], "act_basis");
  try {
    return FreeAct{WeightedAlphabet(ln, ld), ActBasis(bn, bd)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Subact parse_subact(const Json& j, const FreeAct& act, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw UsageError("act input needs a '" + key + "' array");
  std::vector<ActWord> gens;
  for (const Json& g : j[key]) {
    if (!g.is_array() || g.empty())
      throw UsageError("each generator is a nonempty array [base, letters...]");
    ActWord w;
    w.base = act.basis.index_of(g[0].get<std::string>());
    if (w.base < 0) throw UsageError("unknown act basis element '" + g[0].get<std::string>() + "'");
    for (size_t i = 1; i < g.size(); ++i) {
      int letter = act.alphabet.index_of(g[i].get<std::string>());
      if (letter < 0) throw UsageError("unknown letter '" + g[i].get<std::string>() + "'");
      w.letters.push_back(letter);
    }
    gens.push_back(std::move(w));
  }
  return Subact(std::move(gens));
}

std::pair<int, std::vector<GroupWord>> parse_group_input(const Json& j) {
  int rank = require_int(j, "rank", 1, max_rank_supported());
  std::vector<GroupWord> words;
  if (!j.contains("generators") || !j["generators"].is_array())
    throw UsageError("group input needs a 'generators' array of words like \"xyX\"");
  for (const Json& w : j["generators"]) {
    try {
      words.push_back(parse_word(w.get<std::string>(), rank));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return {rank, std::move(words)};
}

Presentation parse_presentation_input(const Json& j) {
  std::string alg = j.value("algebra", "assoc");
  AlgebraKind kind;
  if (alg == "assoc")
    kind = AlgebraKind::FreeAssociative;
  else if (alg == "group")
    kind = AlgebraKind::FreeGroup;
  else
    throw UsageError("'algebra' must be \"assoc\" or \"group\"");
  int rank = require_int(j, "rank", 1, 16);
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw UsageError("presentation needs a nonempty 'generators' array");
  std::vector<std::string> names = j["generators"].get<std::vector<std::string>>();
  std::vector<Relator> relators;
  for (const Json& rel : j.value("relators", Json::array())) {
    Relator r;
    for (const Json& term : rel) {
      if (!term.is_array() || term.size() < 2)
        throw UsageError("each relator term is [generator, word] or [generator, word, coeff]");
      std::string gen = term[0].get<std::string>();
      int gi = -1;
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == gen) gi = static_cast<int>(i);
      if (gi < 0) throw UsageError("relator references unknown generator '" + gen + "'");
      AlgWord w;
      try {
        w = parse_alg_word(term[1].get<std::string>(), rank, kind);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Rat c = term.size() >= 3 ? parse_coeff(term[2]) : Rat(1);
      r.push_back({gi, std::move(w), c});
    }
    relators.push_back(std::move(r));
  }
  try {
    return make_presentation(kind, rank, std::move(names), std::move(relators));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

namespace {

// ---- subcommand handlers; each returns (result json, ok) -------------------

std::pair<Json, bool> cmd_act_basis(const RunConfig& cfg) {
  FreeAct act = parse_act_input(cfg.input);
  Subact p = parse_subact(cfg.input, act, "generators");
  Json basis = Json::array();
  for (const ActWord& w : canonical_basis(p)) {
    Json e;
    e["word"] = format_act_word(act, w);
    e["deg"] = degree(act, w);
    basis.push_back(e);
  }
  Json res;
  res["basis"] = basis;
  res["rank"] = p.generators().size();
  res["basis_series"] = series_json(basis_series(act, p, cfg.cap));
  return {res, true};
}

std::pair<Json, bool> cmd_act_verify(const RunConfig& cfg) {
  FreeAct act = parse_act_input(cfg.input);
  Subact p = parse_subact(cfg.input, act, "generators");
  auto rep = verify_schreier_series_report(act, p, cfg.cap);
  Json res;
  res["basis_series"] = series_json(rep.basis_census);
  res["rhs_series"] = series_json(rep.rhs);
  res["schreier_ok"] = rep.ok;
  res["complement_series"] = series_json(complement_count(act, p, cfg.cap));
  bool ok = rep.ok;
  Json rank;
  try {
    auto rf = rank_formula_check(act, p);
    rank["applicable"] = true;
    rank["rank"] = rf.rank_p;
    rank["complement_size"] = rf.complement_size;
    rank["holds"] = rf.holds;
    ok = ok && rf.holds;
  } catch (const InfiniteComplementError& e) {
    rank["applicable"] = false;
    rank["witness"] = format_act_word(act, e.witness);
  }
  res["rank_formula"] = rank;
  return {res, ok};
}

std::pair<Json, bool> cmd_act_grassmann(const RunConfig& cfg) {
  FreeAct act = parse_act_input(cfg.input);
  Subact p = parse_subact(cfg.input, act, "p_generators");
  Subact q = parse_subact(cfg.input, act, "q_generators");
  auto rep = verify_grassmann_report(act, p, q, cfg.cap);
  Json res;
  res["h_p"] = series_json(rep.h_p);
  res["h_q"] = series_json(rep.h_q);
  res["h_union"] = series_json(rep.h_union);
  res["h_intersection"] = series_json(rep.h_inter);
  res["rk_p"] = rep.rk_p;
  res["rk_q"] = rep.rk_q;
  res["rk_union"] = rep.rk_union;
  res["rk_intersection"] = rep.rk_inter;
  res["empty_intersection"] = rep.empty_intersection;
  res["series_ok"] = rep.series_ok;
  res["rank_ok"] = rep.rank_ok;
  return {res, rep.ok};
}

CoreGraph fold_from_input(const RunConfig& cfg) {
  auto [rank, words] = parse_group_input(cfg.input);
  return fold(words, rank);
}

Json gsfg_json(const GsfgReport& rep) {
  Json res;
  res["v"] = rep.v;
  res["b"] = rep.b;
  res["a"] = rat_vector_json(rep.a);
  res["lhs"] = series_json(rep.lhs);
  res["rhs"] = series_json(rep.rhs);
  res["series_ok"] = rep.series_ok;
  res["local_ok"] = rep.local_ok;
  res["base_ok"] = rep.base_ok;
  res["audit_ok"] = rep.audit_ok;
  res["ok"] = rep.ok;
  return res;
}

std::pair<Json, bool> cmd_group_series(const RunConfig& cfg) {
  CoreGraph g = fold_from_input(cfg);
  auto rep = verify_generalized_schreier_report(g, cfg.radius);
  return {gsfg_json(rep), rep.ok};
}

std::pair<Json, bool> cmd_group_verify(const RunConfig& cfg) {
  CoreGraph g = fold_from_input(cfg);
  auto rep = verify_generalized_schreier_report(g, cfg.radius);
  Json res = gsfg_json(rep);
  bool ok = rep.ok;
  if (g.complete()) {
    auto cls = classical_schreier_check(g);
    res["classical"] = {{"index", cls.index}, {"rank", cls.rank_h}, {"holds", cls.holds}};
    ok = ok && cls.holds;
  } else {
    res["classical"] = {{"index", "infinite"}};
  }
  return {res, ok};
}

std::pair<Json, bool> cmd_group_even(const RunConfig& cfg) {
  CoreGraph g = fold_from_input(cfg);
  auto rep = even_subgroup_series(g, cfg.radius);
  Json res;
  res["is_even"] = rep.is_even;
  res["h_hat"] = series_json(rep.h_hat);
  res["halved_relation_ok"] = rep.halved_ok;
  res["divided_form_ok"] = rep.divided_ok;
  res["doubled_form_ok"] = rep.doubled_ok;
  return {res, rep.ok};
}

Json edge_json(const EdgeRef& e) {
  Json j;
  j["from"] = e.from;
  std::string label(1, generator_letter(sym_generator(e.label)));
  if (sym_is_inverse(e.label)) label[0] = static_cast<char>(std::toupper(label[0]));
  j["label"] = label;
  return j;
}

std::pair<Json, bool> cmd_group_surgery(const RunConfig& cfg) {
  Json res;
  if (cfg.input.contains("e1") && cfg.input.contains("e2")) {
    // explicit surgery on a named pair of edges
    CoreGraph g = fold_from_input(cfg);
    CosetGraph before = coset_graph(g, cfg.radius);
    SpanningTree t = spanning_tree(before);
    auto read_edge = [&](const char* key) {
      const Json& e = cfg.input[key];
      EdgeRef ref;
      ref.from = e.value("from", -1);
      std::string label = e.value("label", "");
      GroupWord w;
      try {
        w = parse_word(label, g.rank);
      } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
      }
      if (w.syms.size() != 1) throw UsageError("edge label must be a single letter");
      ref.label = w.syms[0];
      return ref;
    };
    EdgeRef e1 = read_edge("e1"), e2 = read_edge("e2");
    CosetGraph after = surgery(before, t, e1, e2);  // throws invalid_argument on bad pairs
    auto gens_before = schreier_generators(before, t);
    auto gens_after = schreier_generators(after, spanning_tree(after));
    res["v_before"] = before.sphere_sizes;
    res["v_after"] = after.sphere_sizes;
    res["b_before"] = gens_before.b;
    res["b_after"] = gens_after.b;
    res["spheres_equal"] = before.sphere == after.sphere;
    res["b_differs"] = gens_before.b != gens_after.b;
    bool degrees_equal = true;
    for (int v = 0; v < before.num_vertices(); ++v)
      for (Sym s = 0; s < 2 * before.rank; ++s)
        if ((before.edge(v, s) >= 0) != (after.edge(v, s) >= 0)) degrees_equal = false;
    res["degree_profile_equal"] = degrees_equal;
    return {res, degrees_equal && before.sphere == after.sphere};
  }

  // search mode
  int rank = require_int(cfg.input, "rank", 1, max_rank_supported());
  auto inst = find_surgery_instance(rank, cfg.radius, cfg.budget, cfg.seed);
  if (!inst) {
    res["found"] = false;
    res["note"] = "no admissible edge pair found within the budget";
    return {res, true};
  }
  res["found"] = true;
  res["origin"] = inst->origin;
  res["attempts"] = inst->attempts;
  res["e1"] = edge_json(inst->e1);
  res["e2"] = edge_json(inst->e2);
  res["v"] = inst->v;
  res["b_before"] = inst->b_before;
  res["b_after"] = inst->b_after;
  res["b_differs"] = inst->b_differs;
  res["spheres_equal"] = inst->before.sphere == inst->after.sphere;
  bool degrees_equal = true;
  for (int v = 0; v < inst->before.num_vertices(); ++v)
    for (Sym s = 0; s < 2 * inst->before.rank; ++s)
      if ((inst->before.edge(v, s) >= 0) != (inst->after.edge(v, s) >= 0)) degrees_equal = false;
  res["degree_profile_equal"] = degrees_equal;
  if (!inst->b_differs) res["note"] = "no b-changing instance found; property checks only";
  return {res, degrees_equal && inst->before.sphere == inst->after.sphere};
}

std::pair<Json, bool> cmd_group_enum(const RunConfig& cfg) {
  int rank = require_int(cfg.input, "rank", 1, max_rank_supported());
  int max_index = require_int(cfg.input, "max_index", 1, 6);
  auto subs = enumerate_subgroups(rank, max_index);
  Json list = Json::array();
  bool ok = true;
  for (const CoreGraph& g : subs) {
    auto cls = classical_schreier_check(g);
    ok = ok && cls.holds;
    list.push_back(Json{{"index", cls.index}, {"rank", cls.rank_h}, {"classical_ok", cls.holds}});
  }
  Json res;
  res["count"] = subs.size();
  res["subgroups"] = list;
  return {res, ok};
}

ModuleShape module_shape_from_input(const Json& j) {
  ModuleShape shape;
  shape.coords = require_int(j, "s", 1, 64);
  shape.rank = require_int(j, "r", 1, 16);
  return shape;
}

std::vector<NCPoly<RationalField>> module_gens_from_input(const Json& j,
                                                          const ModuleShape& shape) {
  RationalField Q;
  std::vector<NCPoly<RationalField>> gens;
  if (!j.contains("generators") || !j["generators"].is_array())
    throw UsageError("module input needs a 'generators' array of element strings");
  for (const Json& g : j["generators"]) {
    try {
      gens.push_back(parse_module_element(Q, shape, g.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return gens;
}

std::pair<Json, bool> cmd_mod_basis(const RunConfig& cfg) {
  RationalField Q;
  ModuleShape shape = module_shape_from_input(cfg.input);
  auto gens = module_gens_from_input(cfg.input, shape);
  auto basis = interreduce(Q, shape, gens);
  Json list = Json::array();
  for (const auto& e : basis.elems) list.push_back(format_module_element(Q, e));
  Json res;
  res["basis"] = list;
  res["rank"] = basis.size();
  res["basis_series"] = series_json(basis_census(shape, basis, cfg.cap));
  res["hilbert_series"] = series_json(module_hilbert(Q, shape, basis, cfg.cap));
  return {res, true};
}

std::pair<Json, bool> cmd_mod_verify(const RunConfig& cfg) {
  RationalField Q;
  ModuleShape shape = module_shape_from_input(cfg.input);
  auto gens = module_gens_from_input(cfg.input, shape);
  auto rep = verify_tpsfm_report(Q, shape, gens, cfg.cap);
  Json res;
  res["basis_rank"] = rep.basis.size();
  res["basis_series"] = series_json(rep.basis_series);
  res["hilbert_series"] = series_json(rep.hilbert);
  res["rhs_series"] = series_json(rep.rhs);
  res["series_ok"] = rep.series_ok;
  res["finite_dimensional"] = rep.finite_dimensional;
  if (rep.finite_dimensional) {
    res["dim"] = rep.dim_m;
    res["lewin_ok"] = rep.lewin_ok;
  }
  return {res, rep.ok};
}

Json affine_json(const AffinePresentation& ap) {
  Json res;
  res["p"] = ap.p();
  res["q"] = ap.q();
  res["generators"] = ap.gen_names;
  res["generator_degrees"] = ap.gen_shift;
  Json rows = Json::array();
  for (const auto& row : ap.rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  res["matrix"] = rows;
  return res;
}

std::pair<Json, bool> cmd_mod_affine(const RunConfig& cfg) {
  Presentation pres = parse_presentation_input(cfg.input);
  AffinePresentation ap = higman_affinize(pres);
  Json res = affine_json(ap);
  res["added_generators"] = ap.added_gens;
  bool ok = true;
  if (pres.kind == AlgebraKind::FreeAssociative) {
    auto chk = affinize_series_check(pres, ap, cfg.cap);
    res["series_check"] = {{"input", series_json(chk.input_series)},
                           {"output", series_json(chk.output_series)},
                           {"ok", chk.ok}};
    ok = chk.ok;
  }
  return {res, ok};
}

Json witness_json(const LargenessWitness& wit) {
  Json steps = Json::array();
  for (const auto& step : wit.steps) {
    Json s;
    Json m = Json::array();
    for (const auto& row : step.basis_change) m.push_back(rat_vector_json(row));
    s["basis_change"] = m;
    s["expanded_column"] = step.expanded_column;
    s["generators_after"] = step.gen_names_after;
    steps.push_back(s);
  }
  Json res;
  res["steps"] = steps;
  res["codim"] = wit.codim;
  res["k"] = wit.k;
  res["zero_column"] = wit.zero_column;
  res["final"] = affine_json(wit.final_presentation);
  return res;
}

std::pair<Json, bool> cmd_mod_large(const RunConfig& cfg) {
  Json res;
  if (cfg.input.value("example", "") == "bound_large") {
    int s = require_int(cfg.input, "s", 1, 16);
    int r = require_int(cfg.input, "r", 2, 16);
    int bound = cfg.input.value("bound", 6);
    BoundLargeReport rep;
    try {
      rep = bound_large_example(s, r, bound);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (rep.witness) res["witness"] = witness_json(*rep.witness);
    res["direct_submodule"] = {{"codim", rep.direct_codim},
                               {"rank", rep.direct_rank},
                               {"ok", rep.direct_ok}};
    res["no_surjection"] = {{"bound", rep.solve_bound}, {"ok", rep.no_surjection_ok}};
    return {res, rep.ok};
  }
  Presentation pres = parse_presentation_input(cfg.input);
  AffinePresentation ap = higman_affinize(pres);
  LargenessWitness wit;
  try {
    wit = largeness_witness(ap);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  res = witness_json(wit);
  res["affinization_added"] = ap.added_gens;
  bool ok = wit.zero_column >= 0 && wit.codim <= wit.k;
  return {res, ok};
}

std::pair<Json, bool> cmd_mod_nilparts(const RunConfig& cfg) {
  Json res;
  bool ok = true;
  bool did_something = false;
  if (cfg.input.contains("j")) {
    std::vector<int> j = cfg.input["j"].get<std::vector<int>>();
    std::vector<Word> words;
    try {
      words = f_polynomial_words(j);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Json terms = Json::array();
    for (const Word& w : words) {
      std::string t;
      for (int letter : w) t += "y" + std::to_string(letter + 1);
      terms.push_back(t.empty() ? "1" : t);
    }
    Int expect = multinomial(j);
    res["f_polynomial"] = {{"multidegree", j},
                           {"terms", terms},
                           {"term_count", words.size()},
                           {"multinomial", expect.get_str()}};
    ok = ok && Int(static_cast<long>(words.size())) == expect;
    did_something = true;
  }
  if (cfg.input.contains("l")) {
    int l = require_int(cfg.input, "l", 0, 1000);
    int k = require_int(cfg.input, "k", 1, 64);
    int r = require_int(cfg.input, "r", 2, 64);
    int m = growth_gap(l, k, r);
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), r, m);
    res["growth_gap"] = {{"l", l},
                         {"k", k},
                         {"r", r},
                         {"m", m},
                         {"d_k", multidegree_count(k, l + m).get_str()},
                         {"r_pow_m", power.get_str()}};
    ok = ok && multidegree_count(k, l + m) < power;
    did_something = true;
  }
  if (!did_something)
    throw UsageError("mod-nilparts input needs 'j' (f polynomial) and/or 'l','k','r' (growth gap)");
  return {res, ok};
}

// ---- rendering --------------------------------------------------------------

void flatten_csv(const std::string& prefix, const Json& j, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_csv(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), os);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      for (size_t i = 0; i < j.size(); ++i)
        os << prefix << "," << i << "," << j[i].dump() << "\n";
    } else {
      for (size_t i = 0; i < j.size(); ++i)
        flatten_csv(prefix + "[" + std::to_string(i) + "]", j[i], os);
    }
  } else {
    os << prefix << ",," << j.dump() << "\n";
  }
}

std::string render_dot(const RunConfig& cfg) {
  if (cfg.command == "group-enum") {
    int rank = require_int(cfg.input, "rank", 1, max_rank_supported());
    int max_index = require_int(cfg.input, "max_index", 1, 6);
    std::string out;
    for (const CoreGraph& g : enumerate_subgroups(rank, max_index)) out += dot_core(g);
    return out;
  }
  auto [rank, words] = parse_group_input(cfg.input);
  CoreGraph g = fold(words, rank);
  return dot_core(g) + dot_coset(coset_graph(g, cfg.radius));
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  Json envelope;
  envelope["command"] = cfg.command;
  envelope["config"] = {{"cap", cfg.cap},       {"radius", cfg.radius}, {"seed", cfg.seed},
                        {"budget", cfg.budget}, {"format", cfg.format}, {"input", cfg.input_name}};
  envelope["version"] = library_version();

  try {
    if (cfg.format == "dot") {
      if (cfg.command.rfind("group-", 0) != 0)
        throw UsageError("dot output is only available for group subcommands");
      return {0, render_dot(cfg)};
    }

    std::pair<Json, bool> out;
    if (cfg.command == "act-basis")
      out = cmd_act_basis(cfg);
    else if (cfg.command == "act-verify")
      out = cmd_act_verify(cfg);
    else if (cfg.command == "act-grassmann")
      out = cmd_act_grassmann(cfg);
    else if (cfg.command == "group-series")
      out = cmd_group_series(cfg);
    else if (cfg.command == "group-verify")
      out = cmd_group_verify(cfg);
    else if (cfg.command == "group-even")
      out = cmd_group_even(cfg);
    else if (cfg.command == "group-surgery")
      out = cmd_group_surgery(cfg);
    else if (cfg.command == "group-enum")
      out = cmd_group_enum(cfg);
    else if (cfg.command == "mod-basis")
      out = cmd_mod_basis(cfg);
    else if (cfg.command == "mod-verify")
      out = cmd_mod_verify(cfg);
    else if (cfg.command == "mod-affine")
      out = cmd_mod_affine(cfg);
    else if (cfg.command == "mod-large")
      out = cmd_mod_large(cfg);
    else if (cfg.command == "mod-nilparts")
      out = cmd_mod_nilparts(cfg);
    else
      throw UsageError("unknown subcommand '" + cfg.command + "'");

    envelope["result"] = out.first;
    envelope["ok"] = out.second;
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "field,index,value\n";
      flatten_csv("", envelope, os);
      return {out.second ? 0 : 1, os.str()};
    }
    if (cfg.format != "json") throw UsageError("format must be json, csv or dot");
    return {out.second ? 0 : 1, envelope.dump(2) + "\n"};
  } catch (const UsageError& e) {
    envelope["error"] = {{"message", e.what()}};
    return {2, envelope.dump(2) + "\n"};
  } catch (const Json::exception& e) {
    envelope["error"] = {{"message", e.what()}};
    return {2, envelope.dump(2) + "\n"};
  } catch (const std::invalid_argument& e) {
    envelope["error"] = {{"message", e.what()}};
    return {2, envelope.dump(2) + "\n"};
  } catch (const std::exception& e) {
    envelope["error"] = {{"message", std::string("internal error: ") + e.what()}};
    return {2, envelope.dump(2) + "\n"};
  }
}

RegressResult run_regress(const std::string& corpusDir) {
  namespace fs = std::filesystem;
  RegressResult out;
  if (!fs::is_directory(corpusDir)) {
    out.exit_code = 2;
    out.table = "error: corpus directory '" + corpusDir + "' does not exist\n";
    return out;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpusDir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::ostringstream table;
  std::ostringstream timing;
  table << "case                                     command          status\n";
  int failures = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (const fs::path& f : files) {
    std::string name = f.stem().string();
    std::string command = "-";
    std::string status;
    auto c0 = std::chrono::steady_clock::now();
    try {
      std::ifstream in(f);
      Json spec = Json::parse(in);
      RunConfig cfg;
      cfg.command = spec.at("command").get<std::string>();
      command = cfg.command;
      cfg.input = spec.value("input", Json::object());
      cfg.input_name = f.filename().string();
      cfg.cap = spec.value("cap", 8);
      cfg.radius = spec.value("radius", 4);
      cfg.seed = spec.value("seed", 12345ULL);
      cfg.budget = spec.value("budget", 200000LL);
      RunResult r = run_command(cfg);
      status = r.exit_code == 0 ? "PASS" : (r.exit_code == 1 ? "FAIL" : "ERROR");
      if (r.exit_code != 0) ++failures;
    } catch (const std::exception& e) {
      status = "ERROR";
      ++failures;
    }
    auto c1 = std::chrono::steady_clock::now();
    timing << name << " "
           << std::chrono::duration_cast<std::chrono::milliseconds>(c1 - c0).count() << " ms\n";
    std::string padded_name = name;
    padded_name.resize(40, ' ');
    std::string padded_cmd = command;
    padded_cmd.resize(16, ' ');
    table << padded_name << " " << padded_cmd << " " << status << "\n";
  }
  auto t1 = std::chrono::steady_clock::now();
  table << "total: " << files.size() << " cases, " << failures << " failed\n";
  timing << "total "
         << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
  out.exit_code = failures == 0 ? 0 : 1;
  out.table = table.str();
  out.timing = timing.str();
  return out;
}

}  // namespace schreier
