#include "stromver/lie.hpp"

#include <json.hpp>

namespace stromver {

LieAlgebraData::LieAlgebraData(size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
  if (dim == 0) throw InvalidAlgebra("dim must be positive");
  if (labels_.empty()) {
    for (size_t i = 0; i < dim_; ++i)
      labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw InvalidAlgebra("label count != dim");
}

void LieAlgebraData::set_c(size_t k, size_t i, size_t j,
                           const GaussRational& v) {
  c_[(k * dim_ + i) * dim_ + j] = v;
  c_[(k * dim_ + j) * dim_ + i] = -v;
}

void LieAlgebraData::validate() const {
  for (size_t k = 0; k < dim_; ++k)
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j)
        if (c(k, i, j) != -c(k, j, i))
          throw InvalidAlgebra("antisymmetry violated at (" +
                               std::to_string(k) + "," + std::to_string(i) +
                               "," + std::to_string(j) + ")");
  // Jacobi: sum_m c^m_{ij} c^l_{mk} + cyclic = 0
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j)
      for (size_t k = 0; k < dim_; ++k)
        for (size_t l = 0; l < dim_; ++l) {
          GaussRational s;
          for (size_t m = 0; m < dim_; ++m) {
            s += c(m, i, j) * c(l, m, k);
            s += c(m, j, k) * c(l, m, i);
            s += c(m, k, i) * c(l, m, j);
          }
          if (!s.is_zero()) throw InvalidAlgebra("Jacobi identity violated");
        }
  for (size_t i = 0; i < dim_; ++i) {
    GaussRational s;
    for (size_t k = 0; k < dim_; ++k) s += c(k, i, k);
    if (!s.is_zero()) throw InvalidAlgebra("unimodularity violated");
  }
}

bool LieAlgebraData::is_abelian() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

LieElement LieAlgebraData::basis_element(size_t i) const {
  LieElement e(dim_);
  e[i] = GaussRational(1);
  return e;
}

LieElement LieAlgebraData::bracket(const LieElement& x,
                                   const LieElement& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket operand size");
  LieElement r(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      for (size_t k = 0; k < dim_; ++k) {
        const GaussRational& ck = c(k, i, j);
        if (!ck.is_zero()) r[k] += x[i] * y[j] * ck;
      }
    }
  }
  return r;
}

Mat LieAlgebraData::ad(const LieElement& x) const {
  Mat m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) {
    LieElement col = bracket(x, basis_element(j));
    for (size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

GaussRational LieAlgebraData::trace_form(const LieElement& x,
                                         const LieElement& y) const {
  const Mat& g = trace_gram_.rows() == dim_ ? trace_gram_ : killing_form();
  GaussRational r;
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) r += x[i] * g(i, j) * y[j];
  return r;
}

Mat LieAlgebraData::killing_form() const {
  Mat g(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j)
      g(i, j) = (ad(basis_element(i)) * ad(basis_element(j))).trace();
  return g;
}

void HermitianForm::validate() const {
  if (h.rows() != h.cols()) throw InvalidAlgebra("hermitian form not square");
  for (size_t i = 0; i < h.rows(); ++i)
    for (size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != h(j, i).conj())
        throw InvalidAlgebra("conjugate symmetry violated");
  // Leading principal minors of a Hermitian matrix are real; positivity of
  // all of them is equivalent to positive definiteness.
  for (size_t k = 1; k <= h.rows(); ++k) {
    Mat minor(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor(i, j) = h(i, j);
    GaussRational d = minor.det();
    if (!d.is_real() || !(d.re() > 0))
      throw InvalidAlgebra("hermitian form not positive definite");
  }
}

GaussRational HermitianForm::operator()(const LieElement& x,
                                        const LieElement& y) const {
  GaussRational r;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) r += x[i] * h(i, j) * y[j].conj();
  return r;
}

bool HermitianForm::is_diagonal() const {
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      if (i != j && !h(i, j).is_zero()) return false;
  return true;
}

LieElement DaggerMap::apply(const LieElement& x) const {
  LieElement conj(x.size());
  for (size_t i = 0; i < x.size(); ++i) conj[i] = x[i].conj();
  return d.apply(conj);
}

void DaggerMap::validate(const LieAlgebraData& g) const {
  const size_t n = g.dim();
  for (size_t i = 0; i < n; ++i) {
    LieElement twice = apply(apply(g.basis_element(i)));
    LieElement e = g.basis_element(i);
    if (twice != e) throw InvalidAlgebra("dagger is not an involution");
  }
  // dagger([X,Y]) = [dagger(X), dagger(Y)] on all basis pairs
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      LieElement lhs = apply(g.bracket(g.basis_element(i), g.basis_element(j)));
      LieElement rhs =
          g.bracket(apply(g.basis_element(i)), apply(g.basis_element(j)));
      if (lhs != rhs) throw InvalidAlgebra("dagger-bracket compatibility");
    }
}

Sl2Data sl2_standard() {
  LieAlgebraData g(3, {"A0", "B0", "C0"});
  // [A0,B0] = 2 B0, [A0,C0] = -2 C0, [B0,C0] = A0 (2x2 commutators)
  g.set_c(1, 0, 1, GaussRational(2));
  g.set_c(2, 0, 2, GaussRational(-2));
  g.set_c(0, 1, 2, GaussRational(1));
  Mat tr(3, 3);
  tr(0, 0) = GaussRational(2);
  tr(1, 2) = GaussRational(1);
  tr(2, 1) = GaussRational(1);
  g.set_trace_gram(tr);
  g.validate();

  Mat h(3, 3);
  h(0, 0) = GaussRational(2);
  h(1, 1) = GaussRational(1);
  h(2, 2) = GaussRational(1);
  HermitianForm h0(h);
  h0.validate();

  // A0 -> -A0, B0 -> -C0, C0 -> -B0
  Mat d(3, 3);
  d(0, 0) = GaussRational(-1);
  d(1, 2) = GaussRational(-1);
  d(2, 1) = GaussRational(-1);
  DaggerMap dagger{d};
  dagger.validate(g);

  return {std::move(g), std::move(h0), std::move(dagger)};
}

bool is_sl2_standard(const LieAlgebraData& g) {
  if (g.dim() != 3) return false;
  const Sl2Data ref = sl2_standard();
  for (size_t k = 0; k < 3; ++k)
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        if (g.c(k, i, j) != ref.algebra.c(k, i, j)) return false;
  return true;
}

std::array<LieElement, 3> su2_generators(const LieAlgebraData& g) {
  if (!is_sl2_standard(g))
    throw InvalidAlgebra("su2_generators requires the built-in sl2 basis");
  const GaussRational i = GaussRational::i();
  LieElement u1 = {i, GaussRational(0), GaussRational(0)};
  LieElement u2 = {GaussRational(0), GaussRational(1), GaussRational(-1)};
  LieElement u3 = {GaussRational(0), i, i};
  return {u1, u2, u3};
}

AlgebraDescriptor load_algebra_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra descriptor: ") + e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ParseError("algebra descriptor: missing integral 'dim'");
  size_t dim = j["dim"].get<size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  LieAlgebraData g(dim, labels);
  if (j.contains("structure")) {
    for (const auto& entry : j["structure"]) {
      if (!entry.is_array() || entry.size() != 4)
        throw ParseError("structure entry must be [i,j,k,\"scalar\"]");
      size_t i = entry[0].get<size_t>();
      size_t jj = entry[1].get<size_t>();
      size_t k = entry[2].get<size_t>();
      if (i >= dim || jj >= dim || k >= dim)
        throw ParseError("structure index out of range");
      g.set_c(k, i, jj, GaussRational::parse(entry[3].get<std::string>()));
    }
  }
  g.validate();
  Mat h = Mat::identity(dim);
  if (j.contains("hermitian")) {
    const auto& hj = j["hermitian"];
    if (hj.size() != dim) throw ParseError("hermitian row count != dim");
    for (size_t r = 0; r < dim; ++r) {
      if (hj[r].size() != dim) throw ParseError("hermitian col count != dim");
      for (size_t cidx = 0; cidx < dim; ++cidx)
        h(r, cidx) = GaussRational::parse(hj[r][cidx].get<std::string>());
    }
  }
  HermitianForm hf(h);
  hf.validate();
  return {std::move(g), std::move(hf)};
}

AlgebraDescriptor abelian3() {
  LieAlgebraData g(3, {"e1", "e2", "e3"});
  g.validate();
  HermitianForm h(Mat::identity(3));
  return {std::move(g), std::move(h)};
}

}  // namespace stromver
