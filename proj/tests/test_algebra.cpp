#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "kmbranch/algebra.hpp"
#include "kmbranch/errors.hpp"

using namespace kmbranch;

namespace {

Weight wt(const AffineAlgebra& g, std::vector<long long> labels, Rat d = 0) {
  Weight w = zero_weight(g);
  for (size_t i = 0; i < labels.size(); ++i) w.labels[i] = labels[i];
  w.d = d;
  return w;
}

}  // namespace

TEST_CASE("rank-1 affine matrix") {
  auto g = build_affine({{2, -2}, {-2, 2}});
  CHECK(g.marks == std::vector<long long>{1, 1});
  CHECK(g.comarks == std::vector<long long>{1, 1});
  CHECK(g.coxeter == 2);
  CHECK(g.dual_coxeter == 2);
}

TEST_CASE("cyclic rank-2 affine matrix") {
  auto g = build_affine({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(g.marks == std::vector<long long>{1, 1, 1});
  CHECK(g.comarks == std::vector<long long>{1, 1, 1});
  CHECK(g.coxeter == 3);
}

TEST_CASE("finite-type matrix is rejected") {
  CHECK_THROWS_AS(build_affine({{2, -1}, {-1, 2}}), NotAffine);
}

TEST_CASE("non-GCM matrices are rejected") {
  CHECK_THROWS_AS(build_affine({{1, -2}, {-2, 2}}), NotGCM);
  CHECK_THROWS_AS(build_affine({{2, 1}, {-2, 2}}), NotGCM);
  CHECK_THROWS_AS(build_affine({{2, 0}, {-2, 2}}), NotGCM);
  CHECK_THROWS_AS(build_affine({{2, -1, 0}, {-1, 2}}), NotGCM);
}

TEST_CASE("presets match their Cartan matrices") {
  auto g1 = preset_algebra("A1_1");
  CHECK(g1.cartan == std::vector<std::vector<long long>>{{2, -2}, {-2, 2}});
  auto g2 = preset_algebra("A2_1");
  CHECK(g2.n() == 3);
  CHECK(g2.cartan[0][1] == -1);
  CHECK(g2.cartan[0][2] == -1);
  auto g4 = preset_algebra("A4_1");
  CHECK(g4.n() == 5);
  CHECK(g4.cartan[0][4] == -1);
  CHECK(g4.cartan[0][2] == 0);
  CHECK(g4.coxeter == 5);
  CHECK_THROWS_AS(preset_algebra("E8_1"), IoFailure);
}

TEST_CASE("simple roots carry Cartan columns and the d-marker") {
  auto g = preset_algebra("A1_1");
  auto a1 = simple_root(g, 1);
  CHECK(a1.labels == RatVec{-2, 2});
  CHECK(a1.d == 0);
  auto a0 = simple_root(g, 0);
  CHECK(a0.labels == RatVec{2, -2});
  CHECK(a0.d == 1);
  CHECK_THROWS_AS(simple_root(g, 2), IndexOutOfRange);
  CHECK_THROWS_AS(simple_root(g, -1), IndexOutOfRange);
}

TEST_CASE("delta pairs to zero with every simple coroot") {
  for (auto name : {"A1_1", "A2_1", "A3_1"}) {
    auto g = preset_algebra(name);
    auto dl = delta_weight(g);
    for (int i = 0; i < g.n(); ++i) CHECK(pair(dl, simple_coroot(g, i)) == 0);
    CHECK(pair(dl, scaling_element(g)) == g.marks[0]);
    CHECK(level(g, dl) == 0);
    // delta equals the mark-weighted sum of simple roots
    Weight s = zero_weight(g);
    for (int i = 0; i < g.n(); ++i) s = s + Rat(g.marks[i]) * simple_root(g, i);
    CHECK(s == dl);
  }
}

TEST_CASE("fundamental weights are dual to coroots; levels are comarks") {
  auto g = preset_algebra("A2_1");
  for (int i = 0; i < g.n(); ++i) {
    auto f = fundamental_weight(g, i);
    for (int j = 0; j < g.n(); ++j)
      CHECK(pair(f, simple_coroot(g, j)) == (i == j ? 1 : 0));
    CHECK(level(g, f) == g.comarks[i]);
  }
  CHECK(level(g, rho_weight(g)) == g.dual_coxeter);
}

TEST_CASE("root coordinates: membership and non-membership") {
  auto g = preset_algebra("A1_1");
  auto b = plain_basis(g);

  auto k = root_coords(b, delta_weight(g));
  REQUIRE(k.has_value());
  CHECK(*k == RatVec{1, 1});

  CHECK_FALSE(root_coords(b, fundamental_weight(g, 0)).has_value());

  auto w = simple_root(g, 0) + Rat(2) * simple_root(g, 1);
  auto k2 = root_coords(b, w);
  REQUIRE(k2.has_value());
  CHECK(*k2 == RatVec{1, 2});
  CHECK(from_root_coords(b, *k2) == w);
  CHECK(depth_below(zero_weight(g), Rat(-1) * w) == 1);
}

TEST_CASE("round trip through root coordinates on a rank-2 algebra") {
  auto g = preset_algebra("A2_1");
  auto b = plain_basis(g);
  RatVec k{Rat(3), Rat(1, 2), Rat(-2)};
  auto w = from_root_coords(b, k);
  auto back = root_coords(b, w);
  REQUIRE(back.has_value());
  CHECK(*back == k);
}

TEST_CASE("winding data at u=2 on the rank-1 algebra") {
  auto g = preset_algebra("A1_1");
  auto w = winding_construct(g, 2);

  CHECK(w.roots[0].labels == RatVec{2, -2});
  CHECK(w.roots[0].d == 2);
  CHECK(w.roots[1] == simple_root(g, 1));

  CHECK(w.coroots[0].coeffs == RatVec{2, 1});
  CHECK(w.coroots[0].d_coeff == 0);
  CHECK(w.coroots[1].coeffs == RatVec{0, 1});

  // dotted rho coincides with Lambda_1 here
  CHECK(w.rho == fundamental_weight(g, 1));

  // dotted fundamentals stay dual to the dotted coroots
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      CHECK(pair(w.fundamentals[i], w.coroots[j]) == (i == j ? 1 : 0));
}

TEST_CASE("winding data at u=3: fractional label on dotted rho") {
  auto g = preset_algebra("A1_1");
  auto w = winding_construct(g, 3);
  CHECK(w.rho.labels == RatVec{Rat(-1, 3), Rat(1)});
  CHECK(w.rho.d == 0);
}

TEST_CASE("winding construct validates its index") {
  auto g = preset_algebra("A1_1");
  CHECK_THROWS_AS(winding_construct(g, 0), NonPositive);
  CHECK_THROWS_AS(winding_construct(g, -2), NonPositive);
  // every u is coprime to mark 1, so u=6 is fine here
  CHECK_NOTHROW(winding_construct(g, 6));
}

TEST_CASE("u=1 winding is the identity construction") {
  auto g = preset_algebra("A2_1");
  auto w = winding_construct(g, 1);
  for (int i = 0; i < g.n(); ++i) {
    CHECK(w.roots[i] == simple_root(g, i));
    CHECK(w.coroots[i] == simple_coroot(g, i));
    CHECK(w.fundamentals[i] == fundamental_weight(g, i));
  }
  CHECK(w.rho == rho_weight(g));
}

TEST_CASE("dotted Cartan pairings reproduce the Cartan matrix") {
  for (long long u : {1, 2, 3, 5}) {
    auto g = preset_algebra("A2_1");
    auto w = winding_construct(g, u);
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        CHECK(pair(w.roots[j], w.coroots[i]) == g.cartan[i][j]);
  }
}

TEST_CASE("dotted basis: delta scaling and rho labels") {
  auto g = preset_algebra("A2_1");
  auto u = 2;
  auto wd = winding_construct(g, u);
  auto b = dotted_basis(g, wd);
  CHECK(b.delta == Rat(u) * delta_weight(g));
  // dotted rho has every dotted label equal to 1
  for (int i = 0; i < g.n(); ++i) CHECK(b.pairing(b.rho, i) == 1);
  // dotted coordinates of the dotted delta are the marks
  auto k = root_coords(b, b.delta);
  REQUIRE(k.has_value());
  CHECK(*k == RatVec{1, 1, 1});
}
