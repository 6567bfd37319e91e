#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stromver/connection.hpp"
#include "stromver/rep.hpp"

using namespace stromver;

namespace {

const Sl2Data& sl2() {
  static Sl2Data d = sl2_standard();
  return d;
}

size_t inv_dim(const std::string& recipe) {
  return invariant_subspace(build_module(recipe, sl2())).size();
}

}  // namespace

TEST_CASE("base modules and recipe grammar") {
  ModuleSpace v0 = build_module("V0", sl2());
  CHECK(v0.dim == 2);
  ModuleSpace adj = build_module("g", sl2());
  CHECK(adj.dim == 3);
  CHECK(build_module("wedge4(dual(g + gbar))", sl2()).dim == 15);
  CHECK(build_module("g * g", sl2()).dim == 9);
  CHECK(build_module("wedge2(sym2(V0)) ⊗ sym2(V0)", sl2()).dim == 9);
  CHECK(build_module("sym3(V0)", sl2()).dim == 4);

  CHECK_THROWS_AS(build_module("sym(V0)", sl2()), MalformedRecipe);
  CHECK_THROWS_AS(build_module("wedge2(V0", sl2()), MalformedRecipe);
  CHECK_THROWS_AS(build_module("nosuch", sl2()), MalformedRecipe);
  CHECK_THROWS_AS(build_module("g g", sl2()), MalformedRecipe);
}

TEST_CASE("decompositions") {
  auto dec = decompose(build_module("wedge2(sym2(V0))", sl2()));
  CHECK(dec.mult == std::map<int, size_t>{{2, 1}});

  dec = decompose(build_module("sym2(V0) ⊗ sym2(V0)", sl2()));
  CHECK(dec.mult == std::map<int, size_t>{{0, 1}, {2, 1}, {4, 1}});

  dec = decompose(build_module("g", sl2()));
  CHECK(dec.mult == std::map<int, size_t>{{2, 1}});

  dec = decompose(build_module("V0 ⊗ V0", sl2()));
  CHECK(dec.mult == std::map<int, size_t>{{0, 1}, {2, 1}});

  // wedge2(g ⊕ gbar) has dim 15 = 3 + 3 + 9
  ModuleSpace w2 = build_module("wedge2(g + gbar)", sl2());
  CHECK(w2.dim == 15);
  size_t total = 0;
  for (auto [m, mult] : decompose(w2).mult) total += mult * (m + 1);
  CHECK(total == 15);
}

TEST_CASE("invariant subspace dimensions") {
  // invariant 1-forms: none
  CHECK(inv_dim("dual(g + gbar)") == 0);
  // invariant 4-forms: exactly one
  CHECK(inv_dim("wedge4(dual(g + gbar))") == 1);
  // endomorphisms: the identity line
  CHECK(inv_dim("g * dual(g)") == 1);
  // invariant 5-forms: none
  CHECK(inv_dim("wedge5(dual(g + gbar))") == 0);
  // invariant 2-forms: omega's line
  CHECK(inv_dim("wedge2(dual(g + gbar))") == 1);
  // invariant 6-forms: the volume line
  CHECK(inv_dim("wedge6(dual(g + gbar))") == 1);
}

TEST_CASE("locating invariant vectors") {
  // omega^2 spans the invariant line of 4-forms
  ModuleSpace w4 = build_module("wedge4(dual(g + gbar))", sl2());
  InvariantForm omega = kaehler_form(&sl2().algebra, sl2().h0);
  InvariantForm omega2 = wedge(omega, omega);
  LocateResult r = locate_invariant(w4, form_to_wedge_vector(omega2, 4));
  CHECK(r.in_line);
  CHECK(!r.coeff.is_zero());

  // a single monomial term of omega^2 is not invariant
  InvariantForm part(&sl2().algebra);
  part.add_term(GaussRational(1), {0, 1, 3, 4});
  CHECK(!locate_invariant(w4, form_to_wedge_vector(part, 4)).in_line);

  // the identity endomorphism
  ModuleSpace endo = build_module("g * dual(g)", sl2());
  std::vector<GaussRational> id(9);
  for (int i = 0; i < 3; ++i) id[i * 3 + i] = GaussRational(1);
  LocateResult rid = locate_invariant(endo, id);
  CHECK(rid.in_line);
  CHECK(!rid.coeff.is_zero());

  // omega itself in the 2-form module
  ModuleSpace w2 = build_module("wedge2(dual(g + gbar))", sl2());
  CHECK(locate_invariant(w2, form_to_wedge_vector(omega, 2)).in_line);

  CHECK_THROWS_AS(
      locate_invariant(build_module("dual(g + gbar)", sl2()), {}),
      std::invalid_argument);
}

TEST_CASE("torsion tensor sits on the invariant line") {
  auto c = chern_connection(sl2().algebra, sl2().h0);
  SkewReport rep = torsion_skew_check(torsion(c), sl2().h0, sl2().dagger);
  REQUIRE(rep.hat_skew);
  // s_hat lives in wedge2(g) ⊗ g; coordinates over pairs (i<j) tensor k
  ModuleSpace mod = build_module("wedge2(g) ⊗ g", sl2());
  REQUIRE(mod.dim == 9);
  std::vector<GaussRational> cand(9);
  size_t p = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) cand[p++] = rep.s_hat[(i * 3 + j) * 3 + k];
  LocateResult r = locate_invariant(mod, cand);
  CHECK(r.in_line);
  CHECK(!r.coeff.is_zero());
}

TEST_CASE("invariant dimension equals Sym^0 multiplicity") {
  for (const char* recipe :
       {"g", "g * g", "wedge2(g + gbar)", "wedge4(dual(g + gbar))",
        "sym2(V0) ⊗ sym2(V0)", "V0 ⊗ V0", "g * dual(g)"}) {
    ModuleSpace m = build_module(recipe, sl2());
    auto dec = decompose(m);
    size_t m0 = dec.mult.count(0) ? dec.mult.at(0) : 0;
    CHECK(invariant_subspace(m).size() == m0);
  }
}

TEST_CASE("decomposition report JSON") {
  std::string j = decomposition_json(build_module("sym2(V0) ⊗ sym2(V0)", sl2()));
  CHECK(j.find("\"invariant_dim\": 1") != std::string::npos);
  CHECK(j.find("\"0\": 1") != std::string::npos);
  CHECK(j.find("\"4\": 1") != std::string::npos);
}
