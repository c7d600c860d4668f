#include "monoideal/runner.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "monoideal/betti.hpp"
#include "monoideal/graph.hpp"
#include "monoideal/polarize.hpp"
#include "monoideal/powers.hpp"
#include "monoideal/scp.hpp"

namespace monoideal {

namespace {

Json degree_json(const ExpVec& a) {
  Json arr = Json::array();
  for (Exp e : a) arr.push_back(e);
  return arr;
}

Json betti_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, v] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["degree"] = degree_json(key.second);
    e["value"] = v;
    entries.push_back(e);
  }
  Json out;
  out["entries"] = entries;
  out["pd"] = t.pd();
  out["depth"] = t.depth();
  out["reg_quotient"] = t.reg();
  out["reg_ideal"] = t.reg() + 1;
  out["characteristic"] = t.field.characteristic;
  return out;
}

Json summary_json(const HomologicalSummary& s) {
  Json out;
  out["depth"] = s.depth;
  out["pd"] = s.pd;
  out["reg_quotient"] = s.reg;
  out["reg_ideal"] = s.reg + 1;
  out["dim"] = s.krull_dim;
  out["cohen_macaulay"] = s.cohen_macaulay;
  out["gorenstein"] = s.gorenstein;
  if (s.a_invariant)
    out["a_invariant"] = *s.a_invariant;
  else
    out["a_invariant"] = nullptr;
  return out;
}

Json sequences_json(const MonotoneReport& r) {
  Json out;
  Json depths = Json::array(), regs = Json::array();
  for (const auto& d : r.depths) d ? depths.push_back(*d) : depths.push_back(nullptr);
  for (const auto& g : r.regs) g ? regs.push_back(*g) : regs.push_back(nullptr);
  out["depths"] = depths;
  out["regs"] = regs;
  out["depth_non_increasing"] = r.depth_non_increasing;
  out["reg_non_decreasing"] = r.reg_non_decreasing;
  out["notes"] = r.notes;
  return out;
}

std::vector<std::string> vertex_names(const ContextPtr& ctx, std::uint64_t mask) {
  std::vector<std::string> out;
  for (int v = 0; v < ctx->size(); ++v)
    if (mask >> v & 1) out.push_back(ctx->name(v));
  return out;
}

const Graph& graph_binding(const Session& s, const std::string& name) {
  const auto& b = s.get(name);
  if (const auto* g = std::get_if<Graph>(&b)) return *g;
  throw PreconditionError("binding is not a graph: " + name);
}

Clutter clutter_binding(const Session& s, const std::string& name) {
  const auto& b = s.get(name);
  if (const auto* c = std::get_if<Clutter>(&b)) return *c;
  if (const auto* g = std::get_if<Graph>(&b)) return g->as_clutter();
  if (const auto* I = std::get_if<MonomialIdeal>(&b)) return clutter_of_ideal(*I);
  throw PreconditionError("binding is not a clutter or graph: " + name);
}

std::string need_arg(const std::vector<std::string>& args, std::size_t i,
                     const std::string& what) {
  if (i >= args.size()) throw PreconditionError("missing argument: " + what);
  return args[i];
}

}  // namespace

ResourceCaps parse_caps(const std::string& text, ResourceCaps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw PreconditionError("caps entries must look like name=value: " + item);
    std::string key = item.substr(0, eq);
    std::size_t value = std::stoull(item.substr(eq + 1));
    if (key == "lattice")
      base.max_lcm_lattice = value;
    else if (key == "faces")
      base.max_complex_faces = value;
    else if (key == "scp")
      base.max_scp_bases = value;
    else if (key == "monomials")
      base.max_intermediate_monomials = value;
    else if (key == "cliques")
      base.max_cliques = value;
    else
      throw PreconditionError("unknown cap: " + key);
  }
  return base;
}

Json run_command(const std::string& command, const Session& session,
                 const std::vector<std::string>& args, const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Json doc;
  doc["command"] = command;
  doc["field_characteristic"] = opts.field.characteristic;
  doc["resource_notes"] = Json::array();
  Json inputs;
  inputs["ring"] = session.context->names();
  Json out;

  const std::string name = args.empty() ? std::string() : args[0];
  if (!name.empty()) inputs["name"] = name;

  if (command == "depth" || command == "reg" || command == "summary") {
    MonomialIdeal I = session.as_ideal(name);
    inputs["generators"] = I.gen_strings();
    auto s = homological_summary(I, opts.field, opts.caps);
    if (command == "depth") {
      out["depth"] = s.depth;
    } else if (command == "reg") {
      out["reg_quotient"] = s.reg;
      out["reg_ideal"] = s.reg + 1;
    } else {
      out = summary_json(s);
    }
  } else if (command == "betti") {
    MonomialIdeal I = session.as_ideal(name);
    inputs["generators"] = I.gen_strings();
    out = betti_json(betti_table(I, opts.field, opts.caps));
  } else if (command == "polarize") {
    MonomialIdeal I = session.as_ideal(name);
    inputs["generators"] = I.gen_strings();
    auto p = polarize_full(I);
    out["new_vars"] = p.new_vars;
    out["polarized"] = p.polarized_strings;
    out["generators"] = p.ideal.gen_strings();
    Json origin = Json::array();
    for (std::size_t i = 0; i < p.new_vars.size(); ++i) {
      Json o;
      o["var"] = p.new_vars[i];
      o["origin"] = session.context->name(p.origin[i].first);
      o["level"] = p.origin[i].second;
      origin.push_back(o);
    }
    out["origin_map"] = origin;
  } else if (command == "dual") {
    const auto& b = session.get(name);
    if (std::holds_alternative<Clutter>(b) || std::holds_alternative<Graph>(b)) {
      Clutter dual = cover_dual(clutter_binding(session, name));
      Json edges = Json::array();
      for (auto e : dual.edges()) edges.push_back(vertex_names(session.context, e));
      out["edges"] = edges;
    } else {
      MonomialIdeal I = session.as_ideal(name);
      inputs["generators"] = I.gen_strings();
      out["generators"] = alexander_dual(I).gen_strings();
    }
  } else if (command == "radical") {
    MonomialIdeal I = session.as_ideal(name);
    inputs["generators"] = I.gen_strings();
    out["generators"] = radical(I).gen_strings();
  } else if (command == "colon") {
    MonomialIdeal I = session.as_ideal(name);
    Monomial f = parse_monomial(session.context, need_arg(args, 1, "monomial"));
    inputs["generators"] = I.gen_strings();
    inputs["monomial"] = f.str();
    out["generators"] = colon(I, f).gen_strings();
  } else if (command == "power" || command == "symbolic") {
    MonomialIdeal I = session.as_ideal(name);
    long k = std::stol(need_arg(args, 1, "exponent k"));
    inputs["generators"] = I.gen_strings();
    inputs["k"] = k;
    MonomialIdeal R = command == "power" ? power(I, k, opts.caps)
                                         : symbolic_power(I, k, opts.caps);
    out["generators"] = R.gen_strings();
  } else if (command == "lower") {
    MonomialIdeal I = session.as_ideal(name);
    std::string varname = need_arg(args, 1, "variable");
    auto idx = session.context->index_of(varname);
    if (!idx) throw PreconditionError("unknown variable: " + varname);
    inputs["generators"] = I.gen_strings();
    inputs["variable"] = varname;
    auto d = lower_top_degree(I, *idx);
    out["q"] = d.q;
    if (d.p)
      out["p"] = *d.p;
    else
      out["p"] = nullptr;
    out["clause"] = clause_name(d.clause);
    Json top = Json::array(), rest = Json::array();
    for (const auto& m : d.top) top.push_back(m.str());
    for (const auto& m : d.rest) rest.push_back(m.str());
    out["top_generators"] = top;
    out["other_generators"] = rest;
    out["lowered"] = d.lowered.gen_strings();
    if (d.collapsed) out["collapsed"] = d.collapsed->gen_strings();
  } else if (command == "classify") {
    Clutter c = clutter_binding(session, name);
    auto cls = classify(c);
    out["uniform"] = cls.uniform;
    out["unmixed"] = cls.unmixed;
    if (cls.very_well_covered)
      out["very_well_covered"] = *cls.very_well_covered;
    else
      out["very_well_covered"] = nullptr;
    Json covers = Json::array();
    for (auto cv : c.min_covers()) covers.push_back(vertex_names(session.context, cv));
    out["min_covers"] = covers;
    if (const auto* g = std::get_if<Graph>(&session.get(name))) {
      auto st = structure(*g);
      out["components"] = st.components.size();
      out["isolated"] = st.isolated.size();
      out["c0"] = st.c0;
      out["bipartite"] = st.bipartite;
      out["triangle_free"] = st.triangle_free;
      out["limit_depth_formula"] = st.limit_depth_formula;
      out["has_perfect_matching"] = st.perfect_matching.has_value();
    }
  } else if (command == "scp") {
    Clutter c = clutter_binding(session, name);
    auto rep = scp_vertices(incidence_matrix(c), opts.caps);
    Json verts = Json::array();
    for (const auto& v : rep.vertices) {
      Json row = Json::array();
      for (const auto& q : v) row.push_back(q.convert_to<std::string>());
      verts.push_back(row);
    }
    out["vertices"] = verts;
    out["integral"] = rep.integral;
    if (rep.fractional_witness) {
      Json row = Json::array();
      for (const auto& q : *rep.fractional_witness) row.push_back(q.convert_to<std::string>());
      out["fractional_witness"] = row;
    } else {
      out["fractional_witness"] = nullptr;
    }
  } else if (command == "mfmc") {
    Clutter c = clutter_binding(session, name);
    auto rep = mfmc_bounded(c, opts.max_k, opts.caps);
    out["checked_up_to"] = rep.checked_up_to;
    if (rep.fails_at) {
      out["fails_at"] = *rep.fails_at;
      out["witness"] = rep.witness->str();
    } else {
      out["holds_up_to_K"] = true;
    }
  } else if (command == "sequences") {
    MonomialIdeal I = session.as_ideal(name);
    inputs["generators"] = I.gen_strings();
    inputs["mode"] = opts.mode;
    PowerMode mode = opts.mode == "symbolic" ? PowerMode::symbolic : PowerMode::ordinary;
    auto rep = monotone_sequences(I, opts.max_k, mode, opts.field, opts.caps);
    out = sequences_json(rep);
    doc["resource_notes"] = rep.notes;
  } else if (command == "cm2") {
    const Graph& g = graph_binding(session, name);
    auto rep = cm_square_predicates(g, opts.field, opts.caps);
    out["combinatorial_cm2"] = rep.combinatorial_cm2;
    out["homological_cm2"] = rep.homological_cm2;
    out["depth_zero_triangle"] = rep.depth_zero_triangle;
    out["depth_square"] = rep.depth_square;
    out["agree"] = rep.agree;
  } else {
    throw PreconditionError("unknown command: " + command);
  }

  doc["inputs"] = inputs;
  doc["outputs"] = out;
  if (opts.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    doc["timing_ms"] = ms;
  } else {
    doc["timing_ms"] = nullptr;
  }
  return doc;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open fixture: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct PaperItem {
  std::string name;
  std::string status;  // "pass" | "fail" | "inconclusive (resource)"
  Json detail;
};

}  // namespace

Json paper_suite(const std::string& fixtures_dir, const RunOptions& opts) {
  std::vector<PaperItem> items;
  auto add = [&](const std::string& name, bool ok, Json detail) {
    items.push_back({name, ok ? "pass" : "fail", std::move(detail)});
  };
  const auto& caps = opts.caps;
  const auto& field = opts.field;

  // Worked polarization example: exact strings.
  {
    Session s = parse_session(read_file(fixtures_dir + "/polar_example.mi"));
    const MonomialIdeal& L = s.ideal("L");
    auto p = polarize_full(L);
    auto find = [&](const std::string& mono) -> std::string {
      Monomial m = parse_monomial(s.context, mono);
      for (std::size_t i = 0; i < L.gens().size(); ++i)
        if (L.gens()[i] == m) return p.polarized_strings[i];
      return "<generator not found>";
    };
    Json detail;
    detail["f_pol"] = find("x1^3*x2^3");
    detail["f1_pol"] = find("x1^2*x3");
    detail["f2_pol"] = find("x1*x3^2");
    detail["f3_pol"] = find("x2^2*x3");
    detail["X_L"] = p.new_vars;
    bool ok = detail["f_pol"] == "x1,2*x1,3*x1*x2,2*x2,3*x2" &&
              detail["f1_pol"] == "x1,2*x1,3*x3,2" && detail["f2_pol"] == "x1,2*x3,2*x3" &&
              detail["f3_pol"] == "x2,2*x2,3*x3,2" &&
              p.new_vars == std::vector<std::string>{"x1,2", "x1,3", "x2,2", "x2,3", "x3,2"};
    add("polarization-worked-example", ok, detail);
  }

  // Regularity 5 pair (regularity of the ideals, reg(R/I)+1).
  {
    Session s = parse_session(read_file(fixtures_dir + "/reg5.mi"));
    long rI = homological_summary(s.ideal("I"), field, caps).reg + 1;
    long rL = homological_summary(s.ideal("L"), field, caps).reg + 1;
    Json detail;
    detail["reg_ideal_I"] = rI;
    detail["reg_ideal_L"] = rL;
    add("regularity-5-pair", rI == 5 && rL == 5, detail);
  }

  // Regularity 16 vs 13 under lowering at x1.
  {
    Session s = parse_session(read_file(fixtures_dir + "/reg16.mi"));
    const MonomialIdeal& I = s.ideal("I");
    auto lowered = lower_top_degree(I, 0).lowered;
    long rI = homological_summary(I, field, caps).reg + 1;
    long rL = homological_summary(lowered, field, caps).reg + 1;
    Json detail;
    detail["reg_ideal_I"] = rI;
    detail["reg_ideal_L"] = rL;
    add("regularity-16-13", rI == 16 && rL == 13, detail);
  }

  // Kaiser cover-ideal depth sequence 8, 5, 0, 4.
  {
    Session s = parse_session(read_file(fixtures_dir + "/kaiser.mi"));
    MonomialIdeal I = s.as_ideal("G");
    MonomialIdeal J = alexander_dual(I);
    Json detail;
    long d1 = homological_summary(J, field, caps).depth;
    detail["depth_J"] = d1;
    MonomialIdeal J2 = power(J, 2, caps);
    long d2 = homological_summary(J2, field, caps).depth;
    detail["depth_J2"] = d2;
    MonomialIdeal J3 = product(J2, J, caps);
    auto w = depth_zero_witness(J3, caps);
    bool d3_ok = w.status == WitnessStatus::found;
    detail["depth_J3_witness"] = d3_ok ? w.witness->str() : "none";
    add("kaiser-depths", d1 == 8 && d2 == 5 && d3_ok, detail);

    // stretch item: k = 4 may exhaust the lattice cap
    PaperItem stretch;
    stretch.name = "kaiser-depth-4-stretch";
    try {
      MonomialIdeal J4 = power(J, 4, caps);
      long d4 = homological_summary(J4, field, caps).depth;
      stretch.detail["depth_J4"] = d4;
      stretch.status = d4 == 4 ? "pass" : "fail";
    } catch (const ResourceError& e) {
      stretch.status = "inconclusive (resource)";
      stretch.detail["reason"] = e.what();
    }
    items.push_back(std::move(stretch));
  }

  // Fig. 1 graph: I(G) Gorenstein and R/I(G)^2 Cohen-Macaulay.
  {
    Session s = parse_session(read_file(fixtures_dir + "/fig1.mi"));
    MonomialIdeal I = s.as_ideal("G");
    auto s1 = homological_summary(I, field, caps);
    auto s2 = homological_summary(power(I, 2, caps), field, caps);
    Json detail;
    detail["gorenstein"] = s1.gorenstein;
    detail["cm_square"] = s2.cohen_macaulay;
    add("fig1-gorenstein", s1.gorenstein && s2.cohen_macaulay, detail);
  }

  // Non-additivity of depth on disjoint squares of triangles.
  {
    Session sx = parse_session(read_file(fixtures_dir + "/triangle.mi"));
    Session sy = parse_session(read_file(fixtures_dir + "/triangle_y.mi"));
    Session sxy = parse_session(read_file(fixtures_dir + "/two_triangles.mi"));
    long dA = homological_summary(power(sx.as_ideal("T"), 2, caps), field, caps).depth;
    long dB = homological_summary(power(sy.as_ideal("T"), 2, caps), field, caps).depth;
    long dR = homological_summary(power(sxy.as_ideal("G"), 2, caps), field, caps).depth;
    Json detail;
    detail["depth_A"] = dA;
    detail["depth_B"] = dB;
    detail["depth_sum"] = dR;
    add("non-additivity", dA == 0 && dB == 0 && dR == 1, detail);
  }

  // Triangle symbolic-square witness: x1x2x3 in I^(2) \ I^2, MFMC fails at 2.
  {
    Session s = parse_session(read_file(fixtures_dir + "/triangle.mi"));
    MonomialIdeal I = s.as_ideal("T");
    Monomial m = parse_monomial(s.context, "x1*x2*x3");
    bool in_symbolic = symbolic_power(I, 2, caps).contains(m);
    bool in_ordinary = power(I, 2, caps).contains(m);
    auto rep = mfmc_bounded(clutter_of_ideal(I), 2, caps);
    Json detail;
    detail["in_symbolic_square"] = in_symbolic;
    detail["in_ordinary_square"] = in_ordinary;
    detail["mfmc_fails_at"] = rep.fails_at ? Json(*rep.fails_at) : Json(nullptr);
    detail["mfmc_witness"] = rep.witness ? Json(rep.witness->str()) : Json(nullptr);
    add("triangle-symbolic-square",
        in_symbolic && !in_ordinary && rep.fails_at == 2 && rep.witness &&
            rep.witness->str() == "x1*x2*x3",
        detail);
  }

  Json out;
  out["command"] = "paper";
  out["field_characteristic"] = field.characteristic;
  Json arr = Json::array();
  bool all_ok = true;
  for (const auto& item : items) {
    Json j;
    j["item"] = item.name;
    j["status"] = item.status;
    j["detail"] = item.detail;
    arr.push_back(j);
    if (item.status == "fail") all_ok = false;
  }
  out["items"] = arr;
  out["pass"] = all_ok;
  return out;
}

}  // namespace monoideal
