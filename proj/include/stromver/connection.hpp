#pragma once

#include "stromver/forms.hpp"

namespace stromver {

struct SingularMetric : std::invalid_argument {
  SingularMetric() : std::invalid_argument("metric is singular") {}
};

enum class ConnectionKind { Chern, Bismut, Gauduchon, Custom };

std::string kind_name(ConnectionKind k);

/// Metric connection on the (1,0) tangent bundle in the invariant frame.
/// gamma10[i] is the coefficient matrix of nabla in the direction E_i,
/// gamma01[i] in the direction Ebar_i; both act on (1,0) frame indices.
/// The action on (0,1) sections is the conjugate: nabla_X Ebar_j =
/// conj(Gamma(Xbar))^l_j Ebar_l.
struct InvariantConnection {
  const LieAlgebraData* alg = nullptr;
  ConnectionKind kind = ConnectionKind::Custom;
  GaussRational gauduchon_t;
  Convention conv;
  std::vector<Mat> gamma10, gamma01;

  size_t dim() const { return alg ? alg->dim() : 0; }
  /// Frame direction a in 0..2n-1 (E_i for a < n, Ebar_{a-n} otherwise).
  const Mat& gamma(size_t a) const {
    return a < dim() ? gamma10[a] : gamma01[a - dim()];
  }
};

/// [X_a, X_b] expanded over the 2n frame directions. Mixed brackets vanish;
/// same-type brackets carry the frame sign from the shared convention.
std::vector<GaussRational> frame_bracket(const LieAlgebraData& g,
                                         Convention conv, size_t a, size_t b);

InvariantConnection chern_connection(const LieAlgebraData& g,
                                     const HermitianForm& h,
                                     Convention conv = {});

/// The unique metric connection whose lowered torsion is a 3-form; solved as
/// an exact linear system in the connection coefficients. Throws
/// SingularMetric / InvalidAlgebra("bismut connection not unique") as needed.
InvariantConnection bismut_connection(const LieAlgebraData& g,
                                      const HermitianForm& h,
                                      Convention conv = {});

/// Linear interpolation t * bismut between the Chern (t = 0) and Bismut
/// (t = 1) coefficient tensors; the (1,1) metric is the same for all t.
InvariantConnection gauduchon_family(const LieAlgebraData& g,
                                     const HermitianForm& h,
                                     const GaussRational& t,
                                     Convention conv = {});

/// Exact residuals of metric compatibility, one n x n matrix per holomorphic
/// frame direction (the antiholomorphic equations are their conjugates).
std::vector<Mat> metric_residual(const InvariantConnection& conn,
                                 const HermitianForm& h);

/// End-valued invariant 2-form R(X_a, X_b), indexed over frame pairs.
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  CurvatureTensor(size_t n, std::vector<Mat> upper) : n_(n), r_(std::move(upper)) {}

  size_t dim() const { return n_; }
  /// R(X_a, X_b), antisymmetric in (a, b); a, b in 0..2n-1.
  Mat operator()(size_t a, size_t b) const;

  bool is_zero() const;
  /// True iff some R(E_i, E_j) (resp. R(Ebar_i, Ebar_j)) is nonzero.
  bool has_20_part() const;
  bool has_02_part() const;

 private:
  size_t n_ = 0;
  std::vector<Mat> r_;  // upper triangle, row-major over 2n x 2n pairs
  size_t upper_index(size_t a, size_t b) const;
};

CurvatureTensor curvature(const InvariantConnection& conn);

/// Frame components of T(X_a, X_b) = nabla_a X_b - nabla_b X_a - [X_a, X_b].
struct TorsionTensor {
  size_t n = 0;
  /// t[a * 2n + b] has 2n frame components.
  std::vector<std::vector<GaussRational>> t;

  const std::vector<GaussRational>& operator()(size_t a, size_t b) const {
    return t[a * 2 * n + b];
  }
  /// T^k_{ij} with all three indices holomorphic.
  const GaussRational& holo(size_t k, size_t i, size_t j) const {
    return t[i * 2 * n + j][k];
  }
};

TorsionTensor torsion(const InvariantConnection& conn);

/// Torsion with both form slots raised by the conjugate-linear h' and, for
/// s_hat, the slotwise dagger identification of the conjugate module.
struct SkewReport {
  bool hat_skew = false;  // s_hat totally antisymmetric
  bool raw_skew = false;  // s itself totally antisymmetric
  std::vector<GaussRational> s, s_hat;  // flat [i][j][k], row-major
};

SkewReport torsion_skew_check(const TorsionTensor& T, const HermitianForm& h,
                              const DaggerMap& dagger);

/// Sum of trace(R_alpha R_beta) over 2-form basis products: an invariant
/// 4-form (the first Chern-Weil form of R up to normalization).
InvariantForm trace_r_wedge_r(const InvariantConnection& conn);

/// trace(R) as an invariant 2-form.
InvariantForm curvature_trace_form(const InvariantConnection& conn);

/// Endomorphism coefficient A with R ^ omega^2 = A * (full top monomial).
Mat r_wedge_omega2_coefficient(const InvariantConnection& conn,
                               const HermitianForm& h);

/// Ambrose-Singer at the invariant level over the *real* frame: the span of
/// curvature endomorphisms closed under bracket with the connection
/// coefficients. Spans are taken over Q (the holonomy algebra is a real
/// subalgebra; complex spans would overshoot).
std::vector<Mat> holonomy_algebra(const InvariantConnection& conn);

/// True iff every basis endomorphism is trace-free and skew-Hermitian
/// with respect to h (h B + B^dagger h = 0).
bool su3_containment(const std::vector<Mat>& basis, const HermitianForm& h);

std::string connection_json(const InvariantConnection& conn,
                            const HermitianForm& h);

}  // namespace stromver
