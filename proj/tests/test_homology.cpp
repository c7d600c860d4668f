#include <doctest.h>

#include "monoideal/complex.hpp"
#include "test_util.hpp"

using namespace monoideal;
using namespace testutil;

namespace {

SimplicialComplex rp2(const ContextPtr& ctx) {
  // minimal 6-vertex triangulation of the real projective plane
  auto f = [](std::initializer_list<int> vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << (v - 1);
    return m;
  };
  return SimplicialComplex::from_facets(
      ctx, {f({1, 2, 3}), f({1, 2, 4}), f({1, 3, 5}), f({1, 4, 6}), f({1, 5, 6}),
            f({2, 3, 6}), f({2, 4, 5}), f({2, 5, 6}), f({3, 4, 5}), f({3, 4, 6})});
}

}  // namespace

TEST_CASE("stanley_reisner on small ideals") {
  auto ctx2 = make_context(2);
  auto d = stanley_reisner(ideal_of(ctx2, {{1, 1}}));
  CHECK(d.facets() == std::vector<std::uint64_t>{0b01, 0b10});

  auto ctx3 = make_context(3);
  auto tri = stanley_reisner(ideal_of(ctx3, {{1, 1, 1}}));
  CHECK(tri.facets() == std::vector<std::uint64_t>{0b011, 0b101, 0b110});

  auto c3 = stanley_reisner(ideal_of(ctx3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(c3.facets() == std::vector<std::uint64_t>{0b001, 0b010, 0b100});
}

TEST_CASE("stanley_reisner round-trips with complex_to_ideal") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    auto ctx = make_context(2 + static_cast<int>(rng() % 5));
    auto I = random_ideal(rng, ctx, 6, 1, /*squarefree=*/true);
    if (!I.is_proper()) continue;
    CHECK(complex_to_ideal(stanley_reisner(I)) == I);
  }
}

TEST_CASE("void and irrelevant complexes are distinguished") {
  auto ctx = make_context(2);
  auto v = SimplicialComplex::void_complex(ctx);
  auto irr = SimplicialComplex::irrelevant_complex(ctx);
  CHECK(v.is_void());
  CHECK(v.dim() == -2);
  CHECK(irr.is_irrelevant());
  CHECK(irr.dim() == -1);
  CHECK(reduced_homology_dims(v, FieldSpec::rationals()).empty());
  auto h = reduced_homology_dims(irr, FieldSpec::rationals());
  REQUIRE(h.size() == 1);
  CHECK(h[0] == 1);  // H~_{-1} = K
  // SR complex of the maximal ideal is {∅}
  CHECK(stanley_reisner(ideal_of(ctx, {{1, 0}, {0, 1}})).is_irrelevant());
}

TEST_CASE("reduced homology of standard spaces") {
  auto F0 = FieldSpec::rationals();
  auto ctx = make_context(6);
  // two points
  auto two = SimplicialComplex::from_facets(ctx, {0b01, 0b10});
  CHECK(reduced_homology_dims(two, F0) == std::vector<long>{0, 1});
  // boundary of a triangle = circle
  auto circle = SimplicialComplex::from_facets(ctx, {0b011, 0b101, 0b110});
  CHECK(reduced_homology_dims(circle, F0) == std::vector<long>{0, 0, 1});
  // solid simplex is acyclic
  auto solid = SimplicialComplex::from_facets(ctx, {0b111});
  CHECK(reduced_homology_dims(solid, F0) == std::vector<long>{0, 0, 0, 0});
  // 2-sphere
  auto sphere = SimplicialComplex::from_facets(ctx, {0b0111, 0b1011, 0b1101, 0b1110});
  CHECK(reduced_homology_dims(sphere, F0) == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("projective plane homology depends on the field") {
  auto ctx = make_context(6);
  auto p = rp2(ctx);
  CHECK(reduced_homology_dims(p, FieldSpec::rationals()) ==
        std::vector<long>{0, 0, 0, 0});
  CHECK(reduced_homology_dims(p, FieldSpec::prime(2)) == std::vector<long>{0, 0, 1, 1});
  CHECK(reduced_homology_dims(p, FieldSpec::prime(3)) ==
        std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("Reisner criterion") {
  auto ctx = make_context(6);
  auto F0 = FieldSpec::rationals();
  // circle is CM, two disjoint edges are not (disconnected, dim 1)
  CHECK(is_cohen_macaulay_complex(
      SimplicialComplex::from_facets(ctx, {0b011, 0b101, 0b110}), F0));
  CHECK_FALSE(is_cohen_macaulay_complex(
      SimplicialComplex::from_facets(ctx, {0b0011, 0b1100}), F0));
  // RP^2 is CM over Q but not over F_2
  CHECK(is_cohen_macaulay_complex(rp2(ctx), F0));
  CHECK_FALSE(is_cohen_macaulay_complex(rp2(ctx), FieldSpec::prime(2)));
}

TEST_CASE("skeleton depth on the stated examples") {
  auto F0 = FieldSpec::rationals();
  auto ctx2 = make_context(2);
  CHECK(skeleton_depth(ideal_of(ctx2, {{1, 1}}), F0) == 1);
  auto ctx3 = make_context(3);
  CHECK(skeleton_depth(ideal_of(ctx3, {{1, 1, 1}}), F0) == 2);
  CHECK(skeleton_depth(ideal_of(ctx3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), F0) == 1);
}

TEST_CASE("links and skeletons") {
  auto ctx = make_context(4);
  auto sphere = SimplicialComplex::from_facets(ctx, {0b0111, 0b1011, 0b1101, 0b1110});
  // link of a vertex in the 2-sphere boundary is a circle
  auto lk = sphere.link(0b0001);
  CHECK(reduced_homology_dims(lk, FieldSpec::rationals()) == std::vector<long>{0, 0, 1});
  auto skel1 = sphere.skeleton(0);
  CHECK(skel1.dim() == 0);
  CHECK(skel1.facets().size() == 4);
}
