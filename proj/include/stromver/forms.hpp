#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stromver/lie.hpp"

namespace stromver {

struct AmbientMismatch : std::invalid_argument {
  AmbientMismatch() : std::invalid_argument("forms over different algebras") {}
};

/// Sign conventions shared by the differential and the frame bracket.
/// Right-invariant coframes obey d sigma^k = s*(1/2) c^k_{ij} sigma^i^sigma^j
/// and the bracket of right-invariant vector fields is -s times the algebra
/// bracket; the two signs are tied so that torsion and d stay consistent.
struct Convention {
  int d_sign = +1;
  int frame_bracket_sign() const { return -d_sign; }
};

/// Generator ids: 0..dim-1 are the holomorphic coframe sigma^i, dim..2dim-1
/// the conjugates. A monomial is a sorted id set, stored as a pair of bit
/// masks; antisymmetry is normalized away at construction.
struct FormKey {
  uint16_t holo = 0;
  uint16_t anti = 0;
  friend auto operator<=>(const FormKey&, const FormKey&) = default;
};

class InvariantForm {
 public:
  InvariantForm() : alg_(nullptr) {}
  explicit InvariantForm(const LieAlgebraData* alg) : alg_(alg) {}

  static InvariantForm constant(const LieAlgebraData* alg,
                                const GaussRational& c);
  static InvariantForm sigma(const LieAlgebraData* alg, size_t i);
  static InvariantForm sigma_bar(const LieAlgebraData* alg, size_t i);

  const LieAlgebraData* algebra() const { return alg_; }
  size_t dim() const { return alg_ ? alg_->dim() : 0; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<FormKey, GaussRational>& terms() const { return terms_; }

  /// Adds coeff * (product of the listed generator ids, in the given order).
  void add_term(const GaussRational& coeff, const std::vector<int>& ids);

  GaussRational coeff(const FormKey& k) const;

  /// True iff every term has the given bidegree.
  bool homogeneous(int* p_out = nullptr, int* q_out = nullptr) const;

  friend InvariantForm operator+(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm operator*(const GaussRational& c, const InvariantForm& a);
  friend bool operator==(const InvariantForm& a, const InvariantForm& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  const LieAlgebraData* alg_;
  std::map<FormKey, GaussRational> terms_;

  void insert(const FormKey& k, const GaussRational& v);
  friend InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);
  friend InvariantForm ce_differential(const InvariantForm& a, Convention conv);
  friend InvariantForm conjugate(const InvariantForm& a);
};

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);

/// Chevalley-Eilenberg differential under the given sign convention.
InvariantForm ce_differential(const InvariantForm& a, Convention conv = {});

/// Bidegree pieces of d: del raises (p,q) to (p+1,q), delbar to (p,q+1).
InvariantForm del(const InvariantForm& a, Convention conv = {});
InvariantForm delbar(const InvariantForm& a, Convention conv = {});

InvariantForm conjugate(const InvariantForm& a);

/// omega = (i/2) sum h_{mn} sigma^m ^ sigmabar^n.
InvariantForm kaehler_form(const LieAlgebraData* alg, const HermitianForm& h);

/// Riemannian star of Re(h), extended complex-bilinearly. Requires dim 3
/// (six real dimensions). vol = omega^3 / 3!.
InvariantForm hodge_star(const InvariantForm& a, const HermitianForm& h);

/// d* = -star d star.
InvariantForm codifferential(const InvariantForm& a, const HermitianForm& h,
                             Convention conv = {});

/// Nowhere-zero section coeff * theta_0 of the canonical bundle, theta_0
/// the dual of e_1 ^ ... ^ e_n.
struct TopFormSection {
  GaussRational coefficient{1};
};

/// ||Omega||^2 for the constant section: |coeff|^2 / det(h).
GaussRational omega_norm_sq(const TopFormSection& theta,
                            const HermitianForm& h);

/// Coefficient v with vol = v * (sigma^1..sigma^n sigmabar^1..sigmabar^n).
GaussRational volume_coefficient(const LieAlgebraData* alg,
                                 const HermitianForm& h);

std::string form_terms_json(const InvariantForm& a);

}  // namespace stromver
