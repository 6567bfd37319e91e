#pragma once

#include <complex>

#include "stromver/forms.hpp"

namespace stromver {

struct InvalidRank : std::invalid_argument {
  explicit InvalidRank(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a floating-point rank decision has no clear singular-value
/// gap at the tolerance; carries the offending values in what().
struct IndeterminateRank : std::runtime_error {
  explicit IndeterminateRank(const std::string& what)
      : std::runtime_error(what) {}
};

/// Finitely presented group; relator words use one letter per generator,
/// capital letters for inverses ("aBAb" = a b^-1 a^-1 b).
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;
  bool is_free = false;
};

/// Complex dense matrix for the floating arithmetic lane.
using CMatD = std::vector<std::vector<std::complex<double>>>;

struct UnitaryRep {
  enum class Mode { Exact, Floating };
  size_t n = 0;
  Mode mode = Mode::Exact;
  std::vector<std::string> names;
  std::vector<Mat> exact;     // per generator, mode == Exact
  std::vector<CMatD> approx;  // per generator, mode == Floating
  size_t generator_count() const {
    return mode == Mode::Exact ? exact.size() : approx.size();
  }
};

struct ResidualReport {
  bool pass = false;
  std::vector<double> residuals;  // max-norm per generator / relator
};

/// Per-generator residual of U U^dagger - Id (identically zero in exact mode).
ResidualReport check_unitary(const UnitaryRep& rep, double eps = 1e-10);

/// Evaluates each relator word and compares with the identity.
ResidualReport check_relations(const UnitaryRep& rep,
                               const GroupPresentation& pres,
                               double eps = 1e-10);

/// Determinant-one clock and shift pair in SU(n) with commutator a primitive
/// n-th root of unity times the identity. Exact Q(i) matrices for n = 2 and
/// n = 4 (for n = 4 the clock is conjugated into Q(i) entries; the literal
/// diagonal normalization needs an 8th root of unity), floating otherwise.
UnitaryRep clock_shift(size_t n);

struct CommutantReport {
  size_t dimension = 0;
  UnitaryRep::Mode mode = UnitaryRep::Mode::Exact;
  std::vector<Mat> basis;  // exact mode only
};

/// Solves X rho(g) = rho(g) X over all generators; dimension 1 means the
/// representation is irreducible (Schur). Floating mode decides rank by a
/// singular-value gap and throws IndeterminateRank when there is none.
CommutantReport commutant(const UnitaryRep& rep, double eps = 1e-10);

/// Coefficient of alpha ^ omega^2 against the unit-volume normalization.
GaussRational degree(const InvariantForm& alpha, const HermitianForm& h);

struct FlatBundle {
  UnitaryRep rep;
  GroupPresentation presentation;
  /// Curvature and first Chern form vanish identically by flatness; the
  /// degree is therefore 0 without further input.
};

/// JSON report: degree, commutant dimension, and the stability verdict.
/// "stable" rests on the irreducible-unitary-flat criterion, not on a
/// subsheaf enumeration; reducible representations yield "inapplicable".
std::string stability_report(const FlatBundle& bundle, double eps = 1e-10);

/// Loads {"n": k, "mode": "exact"|"float", "generators": {...},
/// "relators": [...], "free": bool}. Exact generator entries are scalar
/// strings, floating entries [re, im] pairs.
std::pair<UnitaryRep, GroupPresentation> load_rep_json(
    const std::string& json_text);

}  // namespace stromver
