#include <doctest.h>

#include "monoideal/powers.hpp"
#include "monoideal/scp.hpp"
#include "test_util.hpp"

using namespace monoideal;
using namespace testutil;

namespace {

const FieldSpec F0 = FieldSpec::rationals();

Clutter c3(const ContextPtr& ctx) { return Clutter::make(ctx, {0b011, 0b101, 0b110}); }
Clutter c4(const ContextPtr& ctx) {
  return Clutter::make(ctx, {0b0011, 0b0110, 0b1100, 0b1001});
}

}  // namespace

TEST_CASE("clutter construction enforces the antichain rule") {
  auto ctx = make_context(3);
  CHECK_THROWS_AS(Clutter::make(ctx, {0b011, 0b001}), PreconditionError);
  CHECK_THROWS_AS(Clutter::make(ctx, {0}), PreconditionError);
}

TEST_CASE("edge ideal and duality") {
  auto ctx3 = make_context(3);
  auto C3 = c3(ctx3);
  CHECK(edge_ideal(C3) == ideal_of(ctx3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  // the triangle is self-dual
  CHECK(cover_dual(C3) == C3);

  auto ctx4 = make_context(4);
  auto C4 = c4(ctx4);
  CHECK(cover_dual(C4).edges() == std::vector<std::uint64_t>{0b0101, 0b1010});
  CHECK(cover_dual(cover_dual(C4)) == C4);
}

TEST_CASE("deletion removes edges meeting the set") {
  auto ctx = make_context(3);
  auto C3 = c3(ctx);
  auto d = deletion(C3, 0b001);
  CHECK(d.edges() == std::vector<std::uint64_t>{0b110});
}

TEST_CASE("duality formulas") {
  auto ctx = make_context(3);
  auto C3 = c3(ctx);
  // part (iii) with f = x1: (I(C3), x1)^∨ = x1 (x2, x3)
  auto r = duality_formulas_check(C3, mono(ctx, {1, 0, 0}));
  CHECK(r.part_i);
  CHECK(r.part_ii);
  REQUIRE(r.part_iii.has_value());
  CHECK(*r.part_iii);
  // f = 1 trivially satisfies parts (i) and (ii)
  auto r1 = duality_formulas_check(C3, Monomial::one(ctx));
  CHECK(r1.part_i);
  CHECK(r1.part_ii);

  auto ctx4 = make_context(4);
  auto r2 = duality_formulas_check(c4(ctx4), mono(ctx4, {1, 0, 1, 0}));
  CHECK(r2.part_i);
  CHECK(r2.part_ii);
}

TEST_CASE("duality formulas on random clutters") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto ctx = make_context(n);
    auto I = random_ideal(rng, ctx, 5, 1, /*squarefree=*/true);
    if (I.is_zero() || !I.is_proper()) continue;
    auto C = clutter_of_ideal(I);
    auto f = random_monomial(rng, ctx, 1, /*squarefree=*/true);
    auto r = duality_formulas_check(C, f);
    CHECK(r.part_i);
    CHECK(r.part_ii);
    if (r.part_iii) CHECK(*r.part_iii);
  }
}

TEST_CASE("classification") {
  auto ctx4 = make_context(4);
  auto r4 = classify(c4(ctx4));
  CHECK(r4.uniform);
  CHECK(r4.unmixed);
  REQUIRE(r4.very_well_covered.has_value());
  CHECK(*r4.very_well_covered);

  auto ctx3 = make_context(3);
  auto p3 = classify(Clutter::make(ctx3, {0b011, 0b110}));  // path
  CHECK_FALSE(p3.unmixed);

  auto mixed = classify(Clutter::make(ctx3, {0b001, 0b110}));
  CHECK_FALSE(mixed.uniform);
}

TEST_CASE("set covering polyhedron vertices") {
  auto ctx3 = make_context(3);
  auto rep3 = scp_vertices(incidence_matrix(c3(ctx3)));
  CHECK_FALSE(rep3.integral);
  REQUIRE(rep3.fractional_witness.has_value());
  bool found_half = false;
  for (const auto& v : rep3.vertices)
    if (v == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)})
      found_half = true;
  CHECK(found_half);

  auto ctx4 = make_context(4);
  CHECK(scp_vertices(incidence_matrix(c4(ctx4))).integral);

  // single edge {x1} in one variable: Q = {x1 >= 1}, vertex (1)
  auto ctx1 = make_context(1);
  auto rep1 = scp_vertices(incidence_matrix(Clutter::make(ctx1, {0b1})));
  REQUIRE(rep1.vertices.size() == 1);
  CHECK(rep1.vertices[0] == std::vector<Rational>{Rational(1)});
  CHECK(rep1.integral);

  ResourceCaps tiny;
  tiny.max_scp_bases = 2;
  CHECK_THROWS_AS(scp_vertices(incidence_matrix(c4(ctx4)), tiny), ResourceError);
}

TEST_CASE("dual integrality holds for integral corpus clutters") {
  // Q(A) integral => Q(B) integral for the dual
  auto ctx4 = make_context(4);
  auto C4 = c4(ctx4);
  REQUIRE(scp_vertices(incidence_matrix(C4)).integral);
  CHECK(scp_vertices(incidence_matrix(cover_dual(C4))).integral);

  auto ctx2 = make_context(2);
  auto edge = Clutter::make(ctx2, {0b11});
  REQUIRE(scp_vertices(incidence_matrix(edge)).integral);
  CHECK(scp_vertices(incidence_matrix(cover_dual(edge))).integral);
}

TEST_CASE("mfmc_bounded") {
  auto ctx3 = make_context(3);
  auto rep = mfmc_bounded(c3(ctx3), 2);
  REQUIRE(rep.fails_at.has_value());
  CHECK(*rep.fails_at == 2);
  CHECK(rep.witness->str() == "x1*x2*x3");

  auto ctx4 = make_context(4);
  CHECK(mfmc_bounded(c4(ctx4), 3).holds_up_to_K());

  auto ctx2 = make_context(2);
  CHECK(mfmc_bounded(Clutter::make(ctx2, {0b11}), 4).holds_up_to_K());
  CHECK_THROWS_AS(mfmc_bounded(c3(ctx3), 1), PreconditionError);
}

TEST_CASE("transversal edge and cover finders") {
  auto ctx4 = make_context(4);
  auto e = find_transversal_edge(c4(ctx4));
  REQUIRE(e.has_value());
  CHECK(*e == 0b0011);  // {x1, x2} meets both covers once

  auto ctx3 = make_context(3);
  CHECK_FALSE(find_transversal_edge(c3(ctx3)).has_value());

  auto ctx2 = make_context(2);
  auto single = Clutter::make(ctx2, {0b11});
  CHECK(find_transversal_edge(single) == 0b11);
  CHECK(find_transversal_cover(c4(ctx4)).has_value());
}

TEST_CASE("transversal existence under integrality, on the corpus") {
  // unmixed + integral Q(A) -> transversal edge; uniform + integral -> transversal cover
  std::vector<std::pair<int, std::vector<std::uint64_t>>> corpus = {
      {4, {0b0011, 0b0110, 0b1100, 0b1001}},        // C4
      {2, {0b11}},                                  // single edge
      {4, {0b0011, 0b1100}},                        // perfect matching
      {3, {0b011, 0b110}},                          // path (uniform, not unmixed)
      {5, {0b00011, 0b00110, 0b01100, 0b11000}},    // path P5
  };
  for (const auto& [n, edges] : corpus) {
    auto ctx = make_context(n);
    auto c = Clutter::make(ctx, edges);
    if (!scp_vertices(incidence_matrix(c)).integral) continue;
    auto cls = classify(c);
    if (cls.unmixed) CHECK(find_transversal_edge(c).has_value());
    if (cls.uniform) CHECK(find_transversal_cover(c).has_value());
  }
}

TEST_CASE("colon power identity") {
  auto ctx4 = make_context(4);
  auto C4 = c4(ctx4);
  CHECK(colon_power_identity(edge_ideal(C4), mono(ctx4, {1, 1, 0, 0}), 2));

  auto ctx3 = make_context(3);
  auto C3 = c3(ctx3);
  CHECK_FALSE(colon_power_identity(edge_ideal(C3), mono(ctx3, {1, 1, 0}), 1));

  auto ctx2 = make_context(2);
  CHECK(colon_power_identity(ideal_of(ctx2, {{1, 1}}), mono(ctx2, {1, 1}), 3));
}

TEST_CASE("monotone sequences") {
  auto ctx4 = make_context(4);
  auto rep = monotone_sequences(edge_ideal(c4(ctx4)), 3, PowerMode::ordinary, F0);
  CHECK(rep.depth_non_increasing);
  CHECK(rep.reg_non_decreasing);
  REQUIRE(rep.depths.size() == 3);
  CHECK(*rep.depths[0] == 1);

  // Principal ideals have constant depth
  auto ctx2 = make_context(2);
  auto prep = monotone_sequences(ideal_of(ctx2, {{1, 1}}), 3, PowerMode::ordinary, F0);
  CHECK(*prep.depths[0] == *prep.depths[1]);
  CHECK(*prep.depths[1] == *prep.depths[2]);

  // resource exhaustion shows up as a gap, not a failure
  ResourceCaps tiny;
  tiny.max_lcm_lattice = 4;
  auto gappy = monotone_sequences(edge_ideal(c4(ctx4)), 2, PowerMode::ordinary, F0, tiny);
  CHECK_FALSE(gappy.notes.empty());
}
