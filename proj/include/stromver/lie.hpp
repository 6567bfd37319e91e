#pragma once

#include <array>
#include <string>
#include <vector>

#include "stromver/linalg.hpp"

namespace stromver {

struct InvalidAlgebra : std::invalid_argument {
  explicit InvalidAlgebra(const std::string& what)
      : std::invalid_argument(what) {}
};

using LieElement = std::vector<GaussRational>;

/// A complex Lie algebra presented by structure constants in a fixed basis:
/// [e_i, e_j] = c^k_{ij} e_k. Validation enforces antisymmetry, the Jacobi
/// identity and unimodularity (sum_k c^k_{ik} = 0).
class LieAlgebraData {
 public:
  LieAlgebraData(size_t dim, std::vector<std::string> labels);

  size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const GaussRational& c(size_t k, size_t i, size_t j) const {
    return c_[(k * dim_ + i) * dim_ + j];
  }
  void set_c(size_t k, size_t i, size_t j, const GaussRational& v);

  /// Throws InvalidAlgebra naming the violated invariant.
  void validate() const;

  bool is_abelian() const;

  LieElement basis_element(size_t i) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  Mat ad(const LieElement& x) const;

  /// Symmetric bilinear pairing used as the trace form. For sl2_standard this
  /// is trace(AB) in the defining representation; custom algebras fall back
  /// to the Killing form.
  const Mat& trace_gram() const { return trace_gram_; }
  void set_trace_gram(Mat g) { trace_gram_ = std::move(g); }
  GaussRational trace_form(const LieElement& x, const LieElement& y) const;

  Mat killing_form() const;

 private:
  size_t dim_;
  std::vector<std::string> labels_;
  std::vector<GaussRational> c_;
  Mat trace_gram_;
};

/// Hermitian form h_{ij} = h(e_i, e_j), linear in the first slot.
struct HermitianForm {
  Mat h;

  explicit HermitianForm(Mat m) : h(std::move(m)) {}
  size_t dim() const { return h.rows(); }

  /// Conjugate symmetry and positive definiteness (leading principal minors).
  void validate() const;

  GaussRational operator()(const LieElement& x, const LieElement& y) const;
  bool is_diagonal() const;
};

/// Conjugate-linear involution X -> -X^dagger cutting out the compact real
/// form. Stored as the matrix applied after coefficient conjugation.
struct DaggerMap {
  Mat d;

  LieElement apply(const LieElement& x) const;
  void validate(const LieAlgebraData& g) const;
};

struct Sl2Data {
  LieAlgebraData algebra;
  HermitianForm h0;
  DaggerMap dagger;
};

/// The built-in instance: sl(2,C) in the basis A0 = diag(1,-1), B0 = e_12,
/// C0 = e_21, with h0(A,B) = trace(A B^*).
Sl2Data sl2_standard();

bool is_sl2_standard(const LieAlgebraData& g);

/// Generators of the real subalgebra su(2): u1 = i A0, u2 = B0 - C0,
/// u3 = i(B0 + C0). Throws InvalidAlgebra unless g is the built-in sl2.
std::array<LieElement, 3> su2_generators(const LieAlgebraData& g);

/// Loads { "dim": n, "structure": [[i,j,k,"scalar"]...],
///         "hermitian": [["scalar"...]...] } and validates all invariants.
struct AlgebraDescriptor {
  LieAlgebraData algebra;
  HermitianForm hermitian;
};
AlgebraDescriptor load_algebra_json(const std::string& json_text);

/// Abelian C^3 with the identity Hermitian form (the Kaehler control case).
AlgebraDescriptor abelian3();

}  // namespace stromver
