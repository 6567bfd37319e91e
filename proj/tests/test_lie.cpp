#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stromver/lie.hpp"

using namespace stromver;

TEST_CASE("sl2 structure constants from 2x2 commutators") {
  Sl2Data d = sl2_standard();
  const auto& g = d.algebra;
  LieElement A = g.basis_element(0), B = g.basis_element(1),
             C = g.basis_element(2);
  // [A0,B0] = 2 B0
  LieElement ab = g.bracket(A, B);
  CHECK(ab[1] == GaussRational(2));
  CHECK(ab[0].is_zero());
  CHECK(ab[2].is_zero());
  // [A0,C0] = -2 C0, [B0,C0] = A0
  CHECK(g.bracket(A, C)[2] == GaussRational(-2));
  CHECK(g.bracket(B, C)[0] == GaussRational(1));
  CHECK(g.bracket(B, B) == LieElement(3));
  // h = diag(2,1,1)
  CHECK(d.h0.h(0, 0) == GaussRational(2));
  CHECK(d.h0.h(1, 1) == GaussRational(1));
  CHECK(d.h0.h(2, 2) == GaussRational(1));
  CHECK(d.h0.h(0, 1).is_zero());
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("trace form Gram matrix") {
  Sl2Data d = sl2_standard();
  const auto& g = d.algebra;
  CHECK(g.trace_form(g.basis_element(0), g.basis_element(0)) ==
        GaussRational(2));
  CHECK(g.trace_form(g.basis_element(1), g.basis_element(1)).is_zero());
  CHECK(g.trace_form(g.basis_element(1), g.basis_element(2)) ==
        GaussRational(1));
  CHECK(!g.trace_gram().det().is_zero());
  // ad-invariance: tr([z,x],y) + tr(x,[z,y]) = 0
  for (size_t z = 0; z < 3; ++z)
    for (size_t x = 0; x < 3; ++x)
      for (size_t y = 0; y < 3; ++y) {
        GaussRational s =
            g.trace_form(g.bracket(g.basis_element(z), g.basis_element(x)),
                         g.basis_element(y)) +
            g.trace_form(g.basis_element(x),
                         g.bracket(g.basis_element(z), g.basis_element(y)));
        CHECK(s.is_zero());
      }
}

TEST_CASE("ad matrices") {
  Sl2Data d = sl2_standard();
  const auto& g = d.algebra;
  Mat adA = g.ad(g.basis_element(0));
  CHECK(adA(1, 1) == GaussRational(2));
  CHECK(adA(2, 2) == GaussRational(-2));
  CHECK(adA(0, 0).is_zero());
  CHECK(g.ad(LieElement(3)).is_zero());
  for (size_t i = 0; i < 3; ++i) CHECK(g.ad(g.basis_element(i)).trace().is_zero());
  // ad([x,y]) = [ad x, ad y]
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      Mat lhs = g.ad(g.bracket(g.basis_element(i), g.basis_element(j)));
      Mat rhs = commutator(g.ad(g.basis_element(i)), g.ad(g.basis_element(j)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("su(2) generators") {
  Sl2Data d = sl2_standard();
  auto u = su2_generators(d.algebra);
  // each generator is fixed by X -> -X^dagger (skew-Hermitian realization)
  for (const auto& gen : u) {
    LieElement fixed = d.dagger.apply(gen);
    for (size_t i = 0; i < 3; ++i) CHECK(fixed[i] == gen[i]);
  }
  // real brackets close: [u2,u3] = 2 u1 and cyclic
  auto& g = d.algebra;
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    LieElement br = g.bracket(u[b], u[c]);
    for (size_t i = 0; i < 3; ++i) CHECK(br[i] == GaussRational(2) * u[a][i]);
  }
  // span_R{u1,u2,u3} intersects i*span trivially: the six vectors
  // u1,u2,u3,iu1,iu2,iu3 are linearly independent over R.
  std::vector<std::vector<GaussRational>> real_vecs;
  for (int mult = 0; mult < 2; ++mult)
    for (const auto& gen : u) {
      std::vector<GaussRational> v;
      for (const auto& z : gen) {
        GaussRational w = mult ? GaussRational::i() * z : z;
        v.emplace_back(w.re());
        v.emplace_back(w.im());
      }
      real_vecs.push_back(v);
    }
  CHECK(span_rank(real_vecs) == 6);
  CHECK_THROWS_AS(su2_generators(abelian3().algebra), InvalidAlgebra);
}

TEST_CASE("h0 is infinitesimally Ad(SU(2))-invariant") {
  Sl2Data d = sl2_standard();
  auto u = su2_generators(d.algebra);
  const auto& g = d.algebra;
  for (const auto& gen : u)
    for (size_t x = 0; x < 3; ++x)
      for (size_t y = 0; y < 3; ++y) {
        GaussRational s =
            d.h0(g.bracket(gen, g.basis_element(x)), g.basis_element(y)) +
            d.h0(g.basis_element(x), g.bracket(gen, g.basis_element(y)));
        CHECK(s.is_zero());
      }
}

TEST_CASE("JSON loader validates invariants") {
  // sl2 descriptor round-trips
  std::string good = R"({
    "dim": 3,
    "labels": ["A0","B0","C0"],
    "structure": [[0,1,1,"2"],[0,2,2,"-2"],[1,2,0,"1"]],
    "hermitian": [["2","0","0"],["0","1","0"],["0","0","1"]]
  })";
  AlgebraDescriptor d = load_algebra_json(good);
  CHECK(is_sl2_standard(d.algebra));

  // broken Jacobi is rejected with a named violation
  std::string bad = R"({
    "dim": 3,
    "structure": [[0,1,1,"2"],[0,2,2,"-2"],[1,2,0,"1"],[1,2,1,"1"]]
  })";
  CHECK_THROWS_WITH_AS(load_algebra_json(bad), "Jacobi identity violated",
                       InvalidAlgebra);

  std::string nonpd = R"({
    "dim": 2,
    "hermitian": [["1","0"],["0","-1"]]
  })";
  CHECK_THROWS_AS(load_algebra_json(nonpd), InvalidAlgebra);
}

TEST_CASE("dagger is an involution compatible with brackets") {
  Sl2Data d = sl2_standard();
  CHECK_NOTHROW(d.dagger.validate(d.algebra));
}
