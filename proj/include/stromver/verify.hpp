#pragma once

#include <optional>

#include "stromver/connection.hpp"
#include "stromver/lattice.hpp"

namespace stromver {

enum class Verdict { Pass, Fail, Conditional, NoSolution };

std::string verdict_name(Verdict v);

/// The data of one candidate solution: a unimodular complex 3-fold geometry
/// in its invariant frame, a trivializing section of the canonical bundle, a
/// metric connection on the tangent bundle and a bundle connection (a flat
/// unitary bundle by default, or a custom invariant connection).
struct StromingerInstance {
  const LieAlgebraData* alg = nullptr;
  const Sl2Data* sl2 = nullptr;  // set when alg is the built-in sl2; enables
                                 // the representation-theoretic cross-checks
  HermitianForm h{Mat()};
  TopFormSection omega_section;
  InvariantConnection tangent;
  bool custom_bundle = false;
  InvariantConnection bundle_conn;  // used when custom_bundle
  FlatBundle bundle;                // used otherwise
  std::optional<GaussRational> alpha_prime;
  Convention conv;
};

enum class SolutionSet { NotApplicable, Unique, All, Empty };

struct EquationEntry {
  std::string id;
  Verdict verdict = Verdict::Fail;
  std::string details;  // deterministic JSON object
  // anomaly-balance constants (st4): LHS and the two trace terms as exact
  // multiples of omega^2
  GaussRational c_lhs, c_r, c_f;
  SolutionSet solution = SolutionSet::NotApplicable;
  GaussRational alpha_unique;
  // st5: the scalar of the star-projected endomorphism, by both routes
  GaussRational lambda_star, lambda_trace;
};

EquationEntry verify_st1(const StromingerInstance& in);
EquationEntry verify_st2(const StromingerInstance& in);
EquationEntry verify_st3(const StromingerInstance& in);
EquationEntry verify_st4(const StromingerInstance& in);
EquationEntry verify_st5(const StromingerInstance& in);

struct VerificationReport {
  std::vector<EquationEntry> entries;
  std::string json;  // full deterministic report
  /// 0: all pass (a unique or unconstrained alpha' counts as passing);
  /// 1: an equation fails; 3: the anomaly balance has no solution.
  int exit_code = 0;
};

VerificationReport full_report(const StromingerInstance& in);

/// The built-in instance: sl2 with h0, unit canonical section, the chosen
/// tangent connection, and the rank-2 clock-shift flat bundle.
StromingerInstance builtin_instance(const Sl2Data& d,
                                    const InvariantConnection& tangent,
                                    Convention conv = {});

/// The torus control case: abelian algebra, identity metric, frame-flat
/// tangent connection, trivial line bundle.
StromingerInstance torus_instance(const AlgebraDescriptor& d);

}  // namespace stromver
