#pragma once

#include <map>

#include "stromver/forms.hpp"

namespace stromver {

struct MalformedRecipe : std::runtime_error {
  explicit MalformedRecipe(const std::string& what) : std::runtime_error(what) {}
};

/// An su(2)-module presented by the exact matrices of the three generators
/// u1, u2, u3 (normalized so [u2,u3] = 2u1 and cyclic).
struct ModuleSpace {
  std::string recipe;
  size_t dim = 0;
  std::array<Mat, 3> action;
};

/// Builds a module from a recipe string. Grammar:
///   expr   := term (('⊕' | '+') term)*
///   term   := factor (('⊗' | '*') factor)*
///   factor := 'V0' | 'g' | 'gbar' | 'dual(' expr ')' | 'conj(' expr ')'
///           | 'sym'N '(' expr ')' | 'wedge'N '(' expr ')' | '(' expr ')'
/// 'g' is the adjoint module of d.algebra, 'gbar' its conjugate twist,
/// 'V0' the standard two-dimensional module. Generator actions are
/// functorial (Leibniz on tensor/wedge/sym, negative transpose on dual,
/// entrywise conjugation on the twist) and the commutation relations are
/// verified exactly on the result.
ModuleSpace build_module(const std::string& recipe, const Sl2Data& d);

/// Exact kernel of the stacked generator actions.
std::vector<std::vector<GaussRational>> invariant_subspace(const ModuleSpace& m);

/// Isotypic multiplicities keyed by symmetric-power index m, i.e. mult[m]
/// copies of Sym^m(V0) (dimension m + 1), computed from Casimir
/// eigenspaces: C = -sum rho(u_a)^2 acts on Sym^m as m(m+2).
struct Decomposition {
  std::map<int, size_t> mult;
};

Decomposition decompose(const ModuleSpace& m);

struct LocateResult {
  bool in_line = false;
  GaussRational coeff;  // relative to the computed basis vector of the line
};

/// Requires dim invariant_subspace(m) == 1; tests membership of the
/// candidate in the invariant line.
LocateResult locate_invariant(const ModuleSpace& m,
                              const std::vector<GaussRational>& candidate);

/// Coordinates of a homogeneous degree-k invariant form in the module
/// wedgeK(dual(g ⊕ gbar)), whose basis is the lexicographically ordered
/// strictly increasing k-subsets of the 2n generator ids.
std::vector<GaussRational> form_to_wedge_vector(const InvariantForm& f, int k);

std::string decomposition_json(const ModuleSpace& m);

}  // namespace stromver
