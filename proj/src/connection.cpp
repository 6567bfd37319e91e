#include "stromver/connection.hpp"

#include <json.hpp>

namespace stromver {

namespace {

size_t conj_dir(size_t a, size_t n) { return a < n ? a + n : a - n; }

// Riemannian pairing of the complexified frame: g(E_l, Ebar_m) = h_{lm},
// holomorphic (and antiholomorphic) pairs are isotropic.
GaussRational frame_g(const HermitianForm& h, size_t l, size_t m) {
  size_t n = h.dim();
  if (l < n && m >= n) return h.h(l, m - n);
  if (l >= n && m < n) return h.h(m, l - n);
  return GaussRational(0);
}

}  // namespace

std::string kind_name(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::Chern:
      return "chern";
    case ConnectionKind::Bismut:
      return "bismut";
    case ConnectionKind::Gauduchon:
      return "gauduchon";
    default:
      return "custom";
  }
}

std::vector<GaussRational> frame_bracket(const LieAlgebraData& g,
                                         Convention conv, size_t a, size_t b) {
  const size_t n = g.dim();
  std::vector<GaussRational> r(2 * n);
  const GaussRational s(conv.frame_bracket_sign());
  if (a < n && b < n) {
    for (size_t l = 0; l < n; ++l) r[l] = s * g.c(l, a, b);
  } else if (a >= n && b >= n) {
    for (size_t l = 0; l < n; ++l) r[l + n] = s * g.c(l, a - n, b - n).conj();
  }
  return r;
}

InvariantConnection chern_connection(const LieAlgebraData& g,
                                     const HermitianForm& h, Convention conv) {
  if (h.h.det().is_zero()) throw SingularMetric();
  InvariantConnection c;
  c.alg = &g;
  c.kind = ConnectionKind::Chern;
  c.conv = conv;
  c.gamma10.assign(g.dim(), Mat(g.dim(), g.dim()));
  c.gamma01.assign(g.dim(), Mat(g.dim(), g.dim()));
  return c;
}

InvariantConnection bismut_connection(const LieAlgebraData& g,
                                      const HermitianForm& h, Convention conv) {
  if (h.h.det().is_zero()) throw SingularMetric();
  const size_t n = g.dim();
  // Real unknowns: re/im of Gamma10[i](r,c), then of Gamma01[i](r,c).
  const size_t block = n * n * n;  // complex unknowns per family
  const size_t nreal = 4 * block;
  auto u10 = [&](size_t i, size_t r, size_t c) { return (i * n + r) * n + c; };
  auto u01 = [&](size_t i, size_t r, size_t c) {
    return block + (i * n + r) * n + c;
  };

  std::vector<std::vector<GaussRational>> rows;
  std::vector<GaussRational> rhs;
  // Two real rows per complex equation; terms are z*x or z*conj(x).
  auto new_eq = [&]() -> size_t {
    rows.emplace_back(nreal);
    rows.emplace_back(nreal);
    rhs.emplace_back();
    rhs.emplace_back();
    return rows.size() - 2;
  };
  auto add = [&](size_t eq, const GaussRational& z, size_t cu, bool conj) {
    // complex unknown cu = x_re + i x_im at real columns (2cu, 2cu+1)
    auto& re_row = rows[eq];
    auto& im_row = rows[eq + 1];
    re_row[2 * cu] += z.re();
    im_row[2 * cu] += z.im();
    if (conj) {
      re_row[2 * cu + 1] += z.im();
      im_row[2 * cu + 1] -= z.re();
    } else {
      re_row[2 * cu + 1] -= z.im();
      im_row[2 * cu + 1] += z.re();
    }
  };
  auto add_const = [&](size_t eq, const GaussRational& z) {
    rhs[eq] -= z.re();
    rhs[eq + 1] -= z.im();
  };

  const GaussRational fbs(conv.frame_bracket_sign());

  // Metric compatibility in the E_i directions (the Ebar_i equations are
  // the conjugates): sum_m Gamma10[i](m,j) h(m,k) + h(j,m) conj(Gamma01[i](m,k)).
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        size_t eq = new_eq();
        for (size_t m = 0; m < n; ++m) {
          add(eq, h.h(m, k), u10(i, m, j), false);
          add(eq, h.h(j, m), u01(i, m, k), true);
        }
      }

  // Lowered torsion components.
  // B(E_i,E_j,Ebar_k) = sum_l (Gamma10[i](l,j) - Gamma10[j](l,i) - fbs c^l_{ij}) h(l,k)
  // B(E_i,Ebar_j,E_k) = sum_l conj(Gamma01[i](l,j)) h(k,l)
  // B(E_i,Ebar_j,Ebar_k) = -sum_l Gamma01[j](l,i) h(l,k)
  // Total skewness reduces to: B(E_i,E_j,Ebar_k) = -B(E_i,Ebar_k,E_j) and
  // antisymmetry of B(E_i,Ebar_j,Ebar_k) in its last two slots; the purely
  // holomorphic components vanish identically (isotropic pairing) and the
  // conjugate sector follows by reality.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        size_t eq = new_eq();
        for (size_t l = 0; l < n; ++l) {
          add(eq, h.h(l, k), u10(i, l, j), false);
          add(eq, -h.h(l, k), u10(j, l, i), false);
          add_const(eq, -fbs * g.c(l, i, j) * h.h(l, k));
          add(eq, h.h(j, l), u01(i, l, k), true);
        }
        size_t eq2 = new_eq();
        for (size_t l = 0; l < n; ++l) {
          add(eq2, -h.h(l, k), u01(j, l, i), false);
          add(eq2, -h.h(l, j), u01(k, l, i), false);
        }
      }

  Mat A(rows.size(), nreal);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < nreal; ++c) A(r, c) = rows[r][c];
  std::vector<GaussRational> x;
  if (!A.solve(rhs, x))
    throw InvalidAlgebra("skew-torsion connection: inconsistent system");
  if (!A.kernel().empty())
    throw InvalidAlgebra("skew-torsion connection: not unique");

  InvariantConnection c;
  c.alg = &g;
  c.kind = ConnectionKind::Bismut;
  c.conv = conv;
  c.gamma10.assign(n, Mat(n, n));
  c.gamma01.assign(n, Mat(n, n));
  for (size_t i = 0; i < n; ++i)
    for (size_t r = 0; r < n; ++r)
      for (size_t cc = 0; cc < n; ++cc) {
        size_t a = u10(i, r, cc), b = u01(i, r, cc);
        c.gamma10[i](r, cc) = GaussRational(x[2 * a].re(), x[2 * a + 1].re());
        c.gamma01[i](r, cc) = GaussRational(x[2 * b].re(), x[2 * b + 1].re());
      }
  return c;
}

InvariantConnection gauduchon_family(const LieAlgebraData& g,
                                     const HermitianForm& h,
                                     const GaussRational& t, Convention conv) {
  InvariantConnection c = bismut_connection(g, h, conv);
  c.kind = ConnectionKind::Gauduchon;
  c.gauduchon_t = t;
  for (auto& m : c.gamma10) m = t * m;
  for (auto& m : c.gamma01) m = t * m;
  return c;
}

std::vector<Mat> metric_residual(const InvariantConnection& conn,
                                 const HermitianForm& h) {
  const size_t n = conn.dim();
  std::vector<Mat> out;
  for (size_t i = 0; i < n; ++i) {
    Mat r(n, n);
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t m = 0; m < n; ++m)
          r(j, k) += conn.gamma10[i](m, j) * h.h(m, k) +
                     h.h(j, m) * conn.gamma01[i](m, k).conj();
    out.push_back(std::move(r));
  }
  return out;
}

size_t CurvatureTensor::upper_index(size_t a, size_t b) const {
  // (a, b) with a < b in a 2n x 2n upper triangle
  return a * (2 * n_) + b;
}

Mat CurvatureTensor::operator()(size_t a, size_t b) const {
  if (a == b) return Mat(n_, n_);
  if (a < b) return r_[upper_index(a, b)];
  return GaussRational(-1) * r_[upper_index(b, a)];
}

bool CurvatureTensor::is_zero() const {
  for (const auto& m : r_)
    if (m.rows() && !m.is_zero()) return false;
  return true;
}

bool CurvatureTensor::has_20_part() const {
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = a + 1; b < n_; ++b)
      if (!(*this)(a, b).is_zero()) return true;
  return false;
}

bool CurvatureTensor::has_02_part() const {
  for (size_t a = n_; a < 2 * n_; ++a)
    for (size_t b = a + 1; b < 2 * n_; ++b)
      if (!(*this)(a, b).is_zero()) return true;
  return false;
}

CurvatureTensor curvature(const InvariantConnection& conn) {
  const size_t n = conn.dim();
  std::vector<Mat> upper(2 * n * 2 * n);
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = a + 1; b < 2 * n; ++b) {
      Mat r = commutator(conn.gamma(a), conn.gamma(b));
      auto fb = frame_bracket(*conn.alg, conn.conv, a, b);
      for (size_t l = 0; l < 2 * n; ++l)
        if (!fb[l].is_zero()) r = r - fb[l] * conn.gamma(l);
      upper[a * 2 * n + b] = std::move(r);
    }
  return CurvatureTensor(n, std::move(upper));
}

TorsionTensor torsion(const InvariantConnection& conn) {
  const size_t n = conn.dim();
  // nabla_{X_a} X_b over frame components
  auto nabla = [&](size_t a, size_t b) {
    std::vector<GaussRational> r(2 * n);
    if (b < n) {
      const Mat& m = conn.gamma(a);
      for (size_t l = 0; l < n; ++l) r[l] = m(l, b);
    } else {
      const Mat& m = conn.gamma(conj_dir(a, n));
      for (size_t l = 0; l < n; ++l) r[l + n] = m(l, b - n).conj();
    }
    return r;
  };
  TorsionTensor T;
  T.n = n;
  T.t.assign(4 * n * n, {});
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = 0; b < 2 * n; ++b) {
      std::vector<GaussRational> r = nabla(a, b);
      std::vector<GaussRational> s = nabla(b, a);
      auto fb = frame_bracket(*conn.alg, conn.conv, a, b);
      for (size_t l = 0; l < 2 * n; ++l) r[l] = r[l] - s[l] - fb[l];
      T.t[a * 2 * n + b] = std::move(r);
    }
  return T;
}

SkewReport torsion_skew_check(const TorsionTensor& T, const HermitianForm& h,
                              const DaggerMap& dagger) {
  const size_t n = T.n;
  if (h.h.det().is_zero()) throw SingularMetric();
  Mat hinv = h.h.inverse();
  SkewReport rep;
  rep.s.assign(n * n * n, GaussRational(0));
  rep.s_hat.assign(n * n * n, GaussRational(0));
  auto at = [n](std::vector<GaussRational>& v, size_t i, size_t j,
                size_t k) -> GaussRational& { return v[(i * n + j) * n + k]; };
  // conjugate-linear raise on both form slots: h'(sigma^i) = (h^{-1})_{im} e_m
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t k = 0; k < n; ++k) {
        GaussRational v;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            v += T.holo(k, i, j).conj() * hinv(i, a) * hinv(j, b);
        at(rep.s, a, b, k) = v;
      }
  // slotwise identification of the conjugate module with the module
  const Mat& d = dagger.d;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        GaussRational v;
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b)
            v += d(i, a) * d(j, b) * at(rep.s, a, b, k).conj();
        at(rep.s_hat, i, j, k) = v;
      }
  auto totally_skew = [&](std::vector<GaussRational>& t) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          if (at(t, i, j, k) != -at(t, j, i, k)) return false;
          if (at(t, i, j, k) != -at(t, i, k, j)) return false;
        }
    return true;
  };
  rep.raw_skew = totally_skew(rep.s);
  rep.hat_skew = totally_skew(rep.s_hat);
  return rep;
}

InvariantForm trace_r_wedge_r(const InvariantConnection& conn) {
  const size_t n = conn.dim();
  CurvatureTensor R = curvature(conn);
  InvariantForm out(conn.alg);
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = a + 1; b < 2 * n; ++b) {
      Mat rab = R(a, b);
      if (rab.is_zero()) continue;
      for (size_t c = 0; c < 2 * n; ++c)
        for (size_t d = c + 1; d < 2 * n; ++d) {
          GaussRational tr = (rab * R(c, d)).trace();
          if (!tr.is_zero())
            out.add_term(tr, {static_cast<int>(a), static_cast<int>(b),
                              static_cast<int>(c), static_cast<int>(d)});
        }
    }
  return out;
}

InvariantForm curvature_trace_form(const InvariantConnection& conn) {
  const size_t n = conn.dim();
  CurvatureTensor R = curvature(conn);
  InvariantForm out(conn.alg);
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = a + 1; b < 2 * n; ++b) {
      GaussRational tr = R(a, b).trace();
      if (!tr.is_zero())
        out.add_term(tr, {static_cast<int>(a), static_cast<int>(b)});
    }
  return out;
}

Mat r_wedge_omega2_coefficient(const InvariantConnection& conn,
                               const HermitianForm& h) {
  const size_t n = conn.dim();
  CurvatureTensor R = curvature(conn);
  InvariantForm omega = kaehler_form(conn.alg, h);
  InvariantForm omega2 = wedge(omega, omega);
  const FormKey top{static_cast<uint16_t>((1u << n) - 1),
                    static_cast<uint16_t>((1u << n) - 1)};
  Mat acc(n, n);
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = a + 1; b < 2 * n; ++b) {
      InvariantForm pair(conn.alg);
      pair.add_term(GaussRational(1), {static_cast<int>(a), static_cast<int>(b)});
      GaussRational v = wedge(pair, omega2).coeff(top);
      if (!v.is_zero()) acc = acc + v * R(a, b);
    }
  return acc;
}

std::vector<Mat> holonomy_algebra(const InvariantConnection& conn) {
  const size_t n = conn.dim();
  // Real frame X_i = E_i + Ebar_i, Y_i = i(E_i - Ebar_i); holonomy is a real
  // Lie algebra, so all spans below are over the rationals (the flattening
  // keeps re/im parts in separate real coordinates).
  using Dir = std::vector<std::pair<size_t, GaussRational>>;
  std::vector<Dir> real_dirs;
  for (size_t i = 0; i < n; ++i) {
    real_dirs.push_back({{i, GaussRational(1)}, {i + n, GaussRational(1)}});
    real_dirs.push_back({{i, GaussRational::i()}, {i + n, -GaussRational::i()}});
  }
  CurvatureTensor R = curvature(conn);
  auto r_real = [&](const Dir& u, const Dir& v) {
    Mat m(n, n);
    for (auto& [a, ca] : u)
      for (auto& [b, cb] : v) m = m + (ca * cb) * R(a, b);
    return m;
  };
  auto gamma_real = [&](const Dir& u) {
    Mat m(n, n);
    for (auto& [a, ca] : u) m = m + ca * conn.gamma(a);
    return m;
  };
  auto flatten = [&](const Mat& m) {
    std::vector<GaussRational> v(2 * n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        v[i * n + j] = GaussRational(m(i, j).re());
        v[n * n + i * n + j] = GaussRational(m(i, j).im());
      }
    return v;
  };
  auto unflatten = [&](const std::vector<GaussRational>& v) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m(i, j) = GaussRational(v[i * n + j].re(), v[n * n + i * n + j].re());
    return m;
  };

  std::vector<std::vector<GaussRational>> vecs;
  for (size_t p = 0; p < real_dirs.size(); ++p)
    for (size_t q = p + 1; q < real_dirs.size(); ++q) {
      Mat m = r_real(real_dirs[p], real_dirs[q]);
      if (!m.is_zero()) vecs.push_back(flatten(m));
    }
  std::vector<std::vector<GaussRational>> basis = span_basis(vecs);
  for (;;) {
    std::vector<std::vector<GaussRational>> next = basis;
    for (const auto& bv : basis) {
      Mat b = unflatten(bv);
      for (const auto& u : real_dirs) {
        Mat br = commutator(gamma_real(u), b);
        if (!br.is_zero()) next.push_back(flatten(br));
      }
    }
    next = span_basis(next);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  std::vector<Mat> out;
  for (const auto& v : basis) out.push_back(unflatten(v));
  return out;
}

bool su3_containment(const std::vector<Mat>& basis, const HermitianForm& h) {
  for (const auto& b : basis) {
    if (!b.trace().is_zero()) return false;
    if (!(h.h * b + b.adjoint() * h.h).is_zero()) return false;
  }
  return true;
}

std::string connection_json(const InvariantConnection& conn,
                            const HermitianForm& h) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(conn.kind);
  if (conn.kind == ConnectionKind::Gauduchon)
    j["t"] = conn.gauduchon_t.str();
  auto dump = [](const std::vector<Mat>& ms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& m : ms) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t jj = 0; jj < m.cols(); ++jj) row.push_back(m(i, jj).str());
        rows.push_back(row);
      }
      arr.push_back(rows);
    }
    return arr;
  };
  j["gamma10"] = dump(conn.gamma10);
  j["gamma01"] = dump(conn.gamma01);
  bool compatible = true;
  for (const auto& r : metric_residual(conn, h))
    if (!r.is_zero()) compatible = false;
  j["metric_compatible"] = compatible;
  return j.dump(2);
}

}  // namespace stromver
