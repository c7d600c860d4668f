#include <doctest.h>

#include "monoideal/betti.hpp"
#include "monoideal/complex.hpp"
#include "monoideal/graph.hpp"
#include "monoideal/polarize.hpp"
#include "test_util.hpp"

using namespace monoideal;
using namespace testutil;

namespace {

const FieldSpec F0 = FieldSpec::rationals();

struct DepthReg {
  long depth;
  long reg;
};

DepthReg dr(const MonomialIdeal& I) {
  auto s = homological_summary(I, F0);
  return {s.depth, s.reg};
}

}  // namespace

TEST_CASE("colon and sum corollary clauses on random pairs") {
  std::mt19937_64 rng(42);
  int done = 0;
  for (int trial = 0; done < 60; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 4));  // n <= 5
    int n = ctx->size();
    auto I = random_ideal(rng, ctx, 6, 3);
    auto f = random_monomial(rng, ctx, 3);
    long k = static_cast<long>(f.degree());
    auto base = dr(I);

    auto If = colon(I, f);
    auto fI = sum(I, MonomialIdeal::from_generators(ctx, {f}));
    if (!fI.is_proper()) continue;
    ++done;

    DepthReg c = If.is_unit() ? DepthReg{static_cast<long>(n), 0} : dr(If);
    auto s = dr(fI);
    CHECK(s.depth >= base.depth - 1);                      // (i)
    if (!If.is_unit()) CHECK(base.depth <= c.depth);       // (ii)
    if (!If.is_unit()) CHECK(base.reg >= c.reg);           // (iv)
    CHECK(s.reg <= base.reg + k - 1);                      // (v)
    bool vi = base.depth == c.depth || base.depth == s.depth;
    if (!If.is_unit()) CHECK(vi);                          // (vi)
    if (k == 1 && !If.is_unit()) {
      bool vii = base.reg == c.reg + 1 || base.reg == s.reg;
      CHECK(vii);                                          // (vii)
    }
    // (iii) with distinct variables
    int vars = 1 + static_cast<int>(rng() % n);
    std::vector<Monomial> xs;
    for (int v = 0; v < vars; ++v) {
      ExpVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(v)] = 1;
      xs.emplace_back(ctx, std::move(e));
    }
    auto VI = sum(I, MonomialIdeal::from_generators(ctx, xs));
    if (VI.is_proper()) CHECK(dr(VI).depth >= base.depth - vars);
  }
}

TEST_CASE("Froberg invariance of polarization") {
  std::mt19937_64 rng(20180917);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 3));  // n <= 4
    auto J = random_ideal(rng, ctx, 6, 3);
    auto p = polarize_full(J);
    auto polarized = betti_table(p.ideal, F0);
    auto direct = betti_table(J, F0);
    long nx = static_cast<long>(p.new_vars.size());
    // depth(R[X]/J^pol) = |X_J| + depth(R/J), pd equal, reg equal
    CHECK(polarized.depth() == nx + direct.depth());
    CHECK(polarized.pd() == direct.pd());
    CHECK(polarized.reg() == direct.reg());
  }
}

TEST_CASE("polarization difference proposition") {
  std::mt19937_64 rng(1729);
  int done = 0;
  for (int trial = 0; done < 30; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 3));
    auto I = random_ideal(rng, ctx, 5, 3);
    auto f = random_monomial(rng, ctx, 3);
    // generic position as in the paper's proof: f outside I, dividing nothing
    if (I.contains(f)) continue;
    bool divides_gen = false;
    for (const auto& g : I.gens())
      if (f.divides(g)) divides_gen = true;
    if (divides_gen) continue;
    ++done;

    auto L = sum(I, MonomialIdeal::from_generators(ctx, {f}));
    auto host = polarize_full(L);
    auto fi_pol = polarize_in(host, I.gens());
    auto Ipol = MonomialIdeal::from_generators(host.ideal.context(), fi_pol);

    auto tL = betti_table(host.ideal, F0);
    auto tI = betti_table(Ipol, F0);
    auto dL = dr(L);
    auto dI = dr(I);
    // depth(R[X_L]/L^pol) - depth(R[X_L]/(f_i^pol)) = depth(R/L) - depth(R/I)
    CHECK(tL.depth() - tI.depth() == dL.depth - dI.depth);
    // reg(R[X_L]/L^pol) = reg(R/L) and reg(R[X_L]/(f_i^pol)) = reg(R/I)
    CHECK(tL.reg() == dL.reg);
    CHECK(tI.reg() == dI.reg);
  }
}

TEST_CASE("lowering theorems on random ideals") {
  std::mt19937_64 rng(314159);
  int seen_a = 0, seen_b = 0, seen_c = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 3));
    auto I = random_ideal(rng, ctx, 5, 4);
    int var = static_cast<int>(rng() % ctx->size());
    bool occurs = false;
    for (const auto& g : I.gens())
      if (g.deg_in(var) > 0) occurs = true;
    if (!occurs) continue;
    auto d = lower_top_degree(I, var);
    if (!d.lowered.is_proper()) continue;  // depth(0) = ∞; the inequalities are vacuous
    auto di = dr(I);
    auto dl = dr(d.lowered);
    switch (d.clause) {
      case LoweringClause::a:
        ++seen_a;
        CHECK(di.depth == dl.depth);
        CHECK(dl.reg <= di.reg);
        CHECK(di.reg <= dl.reg + 1);
        break;
      case LoweringClause::b:
        ++seen_b;
        CHECK(dl.depth >= di.depth);
        CHECK(dl.reg <= di.reg);
        break;
      case LoweringClause::c: {
        ++seen_c;
        REQUIRE(d.collapsed.has_value());
        auto dc = dr(*d.collapsed);
        CHECK(di.depth == dc.depth);
        CHECK(dc.reg <= di.reg);
        CHECK(di.reg <= dc.reg + d.q - 1);
        break;
      }
    }
  }
  // all three regimes must actually occur in the sample
  CHECK(seen_a > 0);
  CHECK(seen_b > 0);
  CHECK(seen_c > 0);
}

TEST_CASE("radical chain: iterated collapse reaches the radical") {
  std::mt19937_64 rng(626);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 3));
    auto I = random_ideal(rng, ctx, 5, 4);
    // lower at every variable until squarefree
    auto J = I;
    int guard = 0;
    while (!J.is_squarefree()) {
      REQUIRE(++guard < 200);
      for (int v = 0; v < ctx->size(); ++v) {
        Exp q = 0;
        for (const auto& g : J.gens()) q = std::max(q, g.deg_in(v));
        if (q >= 2) {
          J = lower_top_degree(J, v).lowered;
          break;
        }
      }
    }
    CHECK(J == radical(I));
    auto di = dr(I);
    auto dj = dr(J);
    CHECK(dj.depth >= di.depth);
    CHECK(dj.reg <= di.reg);
  }
}

TEST_CASE("a-invariant comparison for Cohen-Macaulay ideals") {
  std::mt19937_64 rng(8128);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 15; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 3));
    auto I = random_ideal(rng, ctx, 4, 3);
    auto si = homological_summary(I, F0);
    if (!si.cohen_macaulay) continue;
    auto sj = homological_summary(radical(I), F0);
    REQUIRE(sj.cohen_macaulay);  // radical of CM is CM
    REQUIRE(si.a_invariant.has_value());
    REQUIRE(sj.a_invariant.has_value());
    CHECK(*sj.a_invariant <= *si.a_invariant);
    ++done;
  }
  CHECK(done > 0);
}

TEST_CASE("skeleton depth equals n - pd on random squarefree ideals") {
  std::mt19937_64 rng(100003);
  for (int trial = 0; trial < 25; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 5));  // n <= 6 here
    auto I = random_ideal(rng, ctx, 6, 1, /*squarefree=*/true);
    if (I.is_zero() || !I.is_proper()) continue;
    for (auto field : {F0, FieldSpec::prime(2)}) {
      auto t = betti_table(I, field);
      CHECK(skeleton_depth(I, field) == ctx->size() - t.pd());
      CHECK(terai_check(I, field));
    }
  }
}

TEST_CASE("regularity additivity across disjoint variable blocks") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    int na = 2 + static_cast<int>(rng() % 2), nb = 2 + static_cast<int>(rng() % 2);
    auto ctxA = make_context(na);
    auto ctxB = make_context(nb, "y");
    auto A = random_ideal(rng, ctxA, 4, 2);
    auto B = random_ideal(rng, ctxB, 4, 2);
    // embed both in the joint ring
    std::vector<std::string> names = ctxA->names();
    for (const auto& m : ctxB->names()) names.push_back(m);
    auto ctx = make_context(names);
    std::vector<Monomial> ga, gb;
    for (const auto& g : A.gens()) {
      ExpVec e(g.exps());
      e.resize(static_cast<std::size_t>(na + nb), 0);
      ga.emplace_back(ctx, std::move(e));
    }
    for (const auto& g : B.gens()) {
      ExpVec e(static_cast<std::size_t>(na), 0);
      for (Exp x : g.exps()) e.push_back(x);
      gb.emplace_back(ctx, std::move(e));
    }
    auto IA = MonomialIdeal::from_generators(ctx, ga);
    auto IB = MonomialIdeal::from_generators(ctx, gb);
    long ra = dr(A).reg, rb = dr(B).reg;
    CHECK(dr(sum(IA, IB)).reg == ra + rb);
    CHECK(dr(product(IA, IB)).reg == ra + rb + 1);
  }
}

TEST_CASE("triangle dichotomy on random graphs") {
  std::mt19937_64 rng(7777);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);  // n <= 7
    auto ctx = make_context(n);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    if (edges.empty()) continue;
    auto g = Graph::make(ctx, edges);
    auto I = g.edge_ideal_of();
    bool eq = power(I, 2) == symbolic_power(I, 2);
    CHECK(eq == structure(g).triangle_free);
  }
}

TEST_CASE("CM of the square decomposes over components") {
  std::mt19937_64 rng(90210);
  int done = 0;
  for (int trial = 0; trial < 80 && done < 20; ++trial) {
    // two disjoint random blocks without isolated vertices
    int na = 2 + static_cast<int>(rng() % 2), nb = 2 + static_cast<int>(rng() % 2);
    auto ctx = make_context(na + nb);
    std::vector<std::pair<int, int>> ea, eb;
    for (int a = 0; a < na; ++a)
      for (int b = a + 1; b < na; ++b)
        if (rng() % 2 == 0) ea.emplace_back(a, b);
    for (int a = 0; a < nb; ++a)
      for (int b = a + 1; b < nb; ++b)
        if (rng() % 2 == 0) eb.emplace_back(na + a, na + b);
    if (ea.empty() || eb.empty()) continue;
    auto whole_edges = ea;
    whole_edges.insert(whole_edges.end(), eb.begin(), eb.end());
    auto g = Graph::make(ctx, whole_edges);
    if (!structure(g).isolated.empty()) continue;
    // CM over the full ring is insensitive to the untouched variables, so
    // each block can be judged in place
    auto cm_of = [&](const std::vector<std::pair<int, int>>& edges) {
      auto sub = Graph::make(ctx, edges);
      return homological_summary(power(sub.edge_ideal_of(), 2), F0).cohen_macaulay;
    };
    bool whole = homological_summary(power(g.edge_ideal_of(), 2), F0).cohen_macaulay;
    CHECK(whole == (cm_of(ea) && cm_of(eb)));
    ++done;
  }
  CHECK(done > 0);
}
