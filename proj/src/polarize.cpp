#include "monoideal/polarize.hpp"

#include <algorithm>

namespace monoideal {

namespace {

struct PolarizationScheme {
  ContextPtr extended;
  std::vector<Exp> gammas;
  // level_index[i][j-2] = extended-context index of x_{i,j}
  std::vector<std::vector<int>> level_index;
};

PolarizationScheme build_scheme(const ContextPtr& ctx, const std::vector<Exp>& gammas) {
  PolarizationScheme s;
  s.gammas = gammas;
  int n = ctx->size();
  std::vector<std::string> names = ctx->names();
  s.level_index.resize(static_cast<std::size_t>(n));
  int next = n;
  for (int i = 0; i < n; ++i)
    for (Exp j = 2; j <= gammas[static_cast<std::size_t>(i)]; ++j) {
      names.push_back(ctx->name(i) + "," + std::to_string(j));
      s.level_index[static_cast<std::size_t>(i)].push_back(next++);
    }
  s.extended = make_context(std::move(names));
  return s;
}

// Polarize one monomial; also emits the rule-order factor string.
Monomial polarize_monomial(const PolarizationScheme& s, const Monomial& g,
                           std::string* printed) {
  int n = static_cast<int>(s.gammas.size());
  ExpVec e(static_cast<std::size_t>(s.extended->size()), 0);
  std::string out;
  auto emit = [&](int idx) {
    e[static_cast<std::size_t>(idx)] = 1;
    if (printed) {
      if (!out.empty()) out += '*';
      out += s.extended->name(idx);
    }
  };
  for (int i = 0; i < n; ++i) {
    Exp c = g.deg_in(i);
    if (c == 0) continue;
    Exp gamma = s.gammas[static_cast<std::size_t>(i)];
    if (c > gamma)
      throw PreconditionError("monomial exponent exceeds the polarization degree bound");
    if (gamma == 1) {
      emit(i);
    } else if (c < gamma) {
      for (Exp j = 2; j <= c + 1; ++j)
        emit(s.level_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 2)]);
    } else {  // c == gamma
      for (Exp j = 2; j <= gamma; ++j)
        emit(s.level_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 2)]);
      emit(i);
    }
  }
  if (printed) *printed = out.empty() ? "1" : out;
  return Monomial(s.extended, std::move(e));
}

}  // namespace

PolarizationResult polarize_full(const MonomialIdeal& J) {
  if (J.is_zero()) throw PreconditionError("polarize_full requires a nonzero ideal");
  int n = J.nvars();
  std::vector<Exp> gammas(static_cast<std::size_t>(n), 0);
  for (const auto& g : J.gens())
    for (int i = 0; i < n; ++i)
      gammas[static_cast<std::size_t>(i)] =
          std::max(gammas[static_cast<std::size_t>(i)], g.deg_in(i));
  auto scheme = build_scheme(J.context(), gammas);

  std::vector<Monomial> pol;
  std::vector<std::string> strings;
  pol.reserve(J.gens().size());
  for (const auto& g : J.gens()) {
    std::string printed;
    pol.push_back(polarize_monomial(scheme, g, &printed));
    strings.push_back(std::move(printed));
  }

  PolarizationResult r{MonomialIdeal::from_generators(scheme.extended, pol),
                       {},
                       {},
                       pol,
                       std::move(strings),
                       gammas};
  for (int i = 0; i < n; ++i)
    for (Exp j = 2; j <= gammas[static_cast<std::size_t>(i)]; ++j) {
      r.new_vars.push_back(J.context()->name(i) + "," + std::to_string(j));
      r.origin.emplace_back(i, static_cast<int>(j));
    }
  return r;
}

std::vector<Monomial> polarize_in(const PolarizationResult& host,
                                  const std::vector<Monomial>& mons) {
  PolarizationScheme s;
  s.extended = host.ideal.context();
  s.gammas = host.gammas;
  int n = static_cast<int>(host.gammas.size());
  s.level_index.resize(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < host.origin.size(); ++k)
    s.level_index[static_cast<std::size_t>(host.origin[k].first)].push_back(
        n + static_cast<int>(k));
  std::vector<Monomial> out;
  out.reserve(mons.size());
  for (const auto& m : mons) out.push_back(polarize_monomial(s, m, nullptr));
  return out;
}

LoweringData lower_top_degree(const MonomialIdeal& I, int var) {
  if (var < 0 || var >= I.nvars()) throw PreconditionError("variable index out of range");
  Exp q = 0;
  for (const auto& g : I.gens()) q = std::max(q, g.deg_in(var));
  if (q == 0)
    throw PreconditionError("variable does not occur in the generating set");

  std::vector<Monomial> top, rest, lowered_gens;
  Exp p = 0;
  for (const auto& g : I.gens()) {
    if (g.deg_in(var) == q) {
      top.push_back(g);
      ExpVec e(g.exps());
      e[static_cast<std::size_t>(var)] -= 1;
      lowered_gens.emplace_back(I.context(), std::move(e));
    } else {
      rest.push_back(g);
      lowered_gens.push_back(g);
      p = std::max(p, g.deg_in(var));
    }
  }
  std::optional<Exp> p_opt;
  if (!rest.empty()) p_opt = p;

  LoweringClause clause;
  if (!p_opt.has_value()) {
    clause = LoweringClause::b;  // p undefined: dividing once is still valid
  } else if (*p_opt >= 1 && q - *p_opt >= 2) {
    clause = LoweringClause::a;
  } else if (q - *p_opt == 1) {
    clause = LoweringClause::b;
  } else {  // p == 0, q >= 2
    clause = LoweringClause::c;
  }

  std::optional<MonomialIdeal> collapsed;
  if (clause == LoweringClause::c) {
    std::vector<Monomial> cg;
    for (const auto& g : I.gens()) {
      if (g.deg_in(var) == q) {
        ExpVec e(g.exps());
        e[static_cast<std::size_t>(var)] = 1;
        cg.emplace_back(I.context(), std::move(e));
      } else {
        cg.push_back(g);
      }
    }
    collapsed = MonomialIdeal::from_generators(I.context(), std::move(cg));
  }
  return LoweringData{var,
                      q,
                      p_opt,
                      std::move(top),
                      std::move(rest),
                      MonomialIdeal::from_generators(I.context(), std::move(lowered_gens)),
                      clause,
                      std::move(collapsed)};
}

MonomialIdeal collapse_top_power(const MonomialIdeal& I, int var) {
  if (var < 0 || var >= I.nvars()) throw PreconditionError("variable index out of range");
  Exp q = 0;
  for (const auto& g : I.gens()) q = std::max(q, g.deg_in(var));
  if (q < 2)
    throw PreconditionError("collapse_top_power requires top degree >= 2");
  for (const auto& g : I.gens())
    if (g.deg_in(var) != 0 && g.deg_in(var) != q)
      throw PreconditionError(
          "mixed intermediate degrees in the collapse variable; use lower_top_degree");
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    ExpVec e(g.exps());
    if (e[static_cast<std::size_t>(var)] == q) e[static_cast<std::size_t>(var)] = 1;
    out.emplace_back(I.context(), std::move(e));
  }
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

MonomialIdeal stretch_variable(const MonomialIdeal& I, int var, Exp d) {
  if (var < 0 || var >= I.nvars()) throw PreconditionError("variable index out of range");
  if (d < 1) throw PreconditionError("stretch_variable requires d >= 1");
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    ExpVec e(g.exps());
    e[static_cast<std::size_t>(var)] = checked_mul(e[static_cast<std::size_t>(var)], d);
    out.emplace_back(I.context(), std::move(e));
  }
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

const char* clause_name(LoweringClause c) {
  switch (c) {
    case LoweringClause::a: return "a";
    case LoweringClause::b: return "b";
    case LoweringClause::c: return "c";
  }
  return "?";
}

}  // namespace monoideal
