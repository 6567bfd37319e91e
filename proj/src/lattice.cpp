#include "stromver/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace stromver {

namespace {

using Cd = std::complex<double>;
using EMat = Eigen::MatrixXcd;

EMat to_eigen(const CMatD& m) {
  EMat e(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) e(i, j) = m[i][j];
  return e;
}

CMatD from_eigen(const EMat& e) {
  CMatD m(e.rows(), std::vector<Cd>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m[i][j] = e(i, j);
  return m;
}

EMat gen_eigen(const UnitaryRep& rep, size_t g) {
  if (rep.mode == UnitaryRep::Mode::Floating) return to_eigen(rep.approx[g]);
  EMat e(rep.n, rep.n);
  const Mat& m = rep.exact[g];
  for (size_t i = 0; i < rep.n; ++i)
    for (size_t j = 0; j < rep.n; ++j)
      e(i, j) = Cd(m(i, j).re_double(), m(i, j).im_double());
  return e;
}

double max_abs(const EMat& e) {
  double r = 0;
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      r = std::max(r, std::abs(e(i, j)));
  return r;
}

size_t gen_index(const UnitaryRep& rep, char c) {
  std::string name(1, static_cast<char>(std::tolower(c)));
  for (size_t i = 0; i < rep.names.size(); ++i)
    if (rep.names[i] == name) return i;
  throw ParseError(std::string("unknown generator '") + c + "'");
}

}  // namespace

ResidualReport check_unitary(const UnitaryRep& rep, double eps) {
  ResidualReport r;
  r.pass = true;
  for (size_t g = 0; g < rep.generator_count(); ++g) {
    if (rep.mode == UnitaryRep::Mode::Exact) {
      Mat res = rep.exact[g] * rep.exact[g].adjoint() - Mat::identity(rep.n);
      double rd = 0;
      if (!res.is_zero()) {
        r.pass = false;
        for (size_t i = 0; i < rep.n; ++i)
          for (size_t j = 0; j < rep.n; ++j)
            rd = std::max(rd, std::abs(res(i, j).re_double()) +
                                  std::abs(res(i, j).im_double()));
      }
      r.residuals.push_back(rd);
    } else {
      EMat u = to_eigen(rep.approx[g]);
      double rd = max_abs(u * u.adjoint() - EMat::Identity(rep.n, rep.n));
      r.residuals.push_back(rd);
      if (rd > eps) r.pass = false;
    }
  }
  return r;
}

ResidualReport check_relations(const UnitaryRep& rep,
                               const GroupPresentation& pres, double eps) {
  ResidualReport r;
  r.pass = true;
  for (const auto& word : pres.relators) {
    if (rep.mode == UnitaryRep::Mode::Exact) {
      Mat acc = Mat::identity(rep.n);
      for (char c : word) {
        const Mat& g = rep.exact[gen_index(rep, c)];
        acc = acc * (std::isupper(static_cast<unsigned char>(c)) ? g.inverse()
                                                                 : g);
      }
      Mat res = acc - Mat::identity(rep.n);
      double rd = 0;
      if (!res.is_zero()) {
        r.pass = false;
        for (size_t i = 0; i < rep.n; ++i)
          for (size_t j = 0; j < rep.n; ++j)
            rd = std::max(rd, std::abs(res(i, j).re_double()) +
                                  std::abs(res(i, j).im_double()));
      }
      r.residuals.push_back(rd);
    } else {
      EMat acc = EMat::Identity(rep.n, rep.n);
      for (char c : word) {
        EMat g = to_eigen(rep.approx[gen_index(rep, c)]);
        acc = acc * (std::isupper(static_cast<unsigned char>(c))
                         ? EMat(g.inverse())
                         : g);
      }
      double rd = max_abs(acc - EMat::Identity(rep.n, rep.n));
      r.residuals.push_back(rd);
      if (rd > eps) r.pass = false;
    }
  }
  return r;
}

UnitaryRep clock_shift(size_t n) {
  if (n < 2) throw InvalidRank("clock_shift needs n >= 2");
  UnitaryRep rep;
  rep.n = n;
  rep.names = {"a", "b"};
  const GaussRational i = GaussRational::i();
  if (n == 2) {
    Mat clock(2, 2), shift(2, 2);
    clock(0, 0) = i;
    clock(1, 1) = -i;
    shift(0, 1) = i;
    shift(1, 0) = i;
    rep.exact = {clock, shift};
    return rep;
  }
  if (n == 4) {
    // signed 4-cycle shift (determinant 1) and a clock conjugated into
    // Q(i): U = diag(1,i,-1,-i) * (1+i)/2 * (I + S^2)
    Mat shift(4, 4);
    shift(1, 0) = shift(2, 1) = shift(3, 2) = GaussRational(1);
    shift(0, 3) = GaussRational(-1);
    Mat s2 = shift * shift;
    Mat d(4, 4);
    d(0, 0) = GaussRational(1);
    d(1, 1) = i;
    d(2, 2) = GaussRational(-1);
    d(3, 3) = -i;
    GaussRational half_1pi(Rational(1, 2), Rational(1, 2));
    Mat clock = half_1pi * (d * (Mat::identity(4) + s2));
    rep.exact = {clock, shift};
    return rep;
  }
  rep.mode = UnitaryRep::Mode::Floating;
  const double pi = std::numbers::pi;
  bool even = n % 2 == 0;
  EMat clock = EMat::Zero(n, n), shift = EMat::Zero(n, n);
  for (size_t k = 0; k < n; ++k) {
    double phase = 2 * pi * k / n + (even ? pi / static_cast<double>(n) : 0.0);
    clock(k, k) = Cd(std::cos(phase), std::sin(phase));
  }
  for (size_t k = 0; k + 1 < n; ++k) shift(k + 1, k) = 1.0;
  shift(0, n - 1) = even ? -1.0 : 1.0;
  rep.approx = {from_eigen(clock), from_eigen(shift)};
  return rep;
}

CommutantReport commutant(const UnitaryRep& rep, double eps) {
  const size_t n = rep.n;
  const size_t gens = rep.generator_count();
  CommutantReport out;
  out.mode = rep.mode;
  if (rep.mode == UnitaryRep::Mode::Exact) {
    Mat sys(gens * n * n, n * n);
    for (size_t g = 0; g < gens; ++g) {
      const Mat& a = rep.exact[g];
      // (XA - AX)_{rs}: coefficient of X_{pq} is delta_{pr} A_{qs} - A_{rp} delta_{qs}
      for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) {
          size_t row = (g * n + r) * n + s;
          for (size_t q = 0; q < n; ++q) sys(row, r * n + q) += a(q, s);
          for (size_t p = 0; p < n; ++p) sys(row, p * n + s) -= a(r, p);
        }
    }
    auto ker = sys.kernel();
    out.dimension = ker.size();
    for (const auto& v : ker) {
      Mat x(n, n);
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) x(p, q) = v[p * n + q];
      out.basis.push_back(std::move(x));
    }
    return out;
  }
  EMat sys = EMat::Zero(gens * n * n, n * n);
  for (size_t g = 0; g < gens; ++g) {
    EMat a = gen_eigen(rep, g);
    for (size_t r = 0; r < n; ++r)
      for (size_t s = 0; s < n; ++s) {
        size_t row = (g * n + r) * n + s;
        for (size_t q = 0; q < n; ++q) sys(row, r * n + q) += a(q, s);
        for (size_t p = 0; p < n; ++p) sys(row, p * n + s) -= a(r, p);
      }
  }
  Eigen::JacobiSVD<EMat> svd(sys);
  auto sv = svd.singularValues();
  double dropped_max = 0, kept_min = 0;
  size_t null_dim = 0;
  bool any_kept = false;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= eps) {
      ++null_dim;
      dropped_max = std::max(dropped_max, sv(k));
    } else {
      kept_min = any_kept ? std::min(kept_min, sv(k)) : sv(k);
      any_kept = true;
    }
  }
  if (any_kept && dropped_max > 0 && kept_min / dropped_max < 1e3)
    throw IndeterminateRank("singular-value gap too small: kept " +
                            std::to_string(kept_min) + " vs dropped " +
                            std::to_string(dropped_max) + " at eps " +
                            std::to_string(eps));
  out.dimension = null_dim;
  return out;
}

GaussRational degree(const InvariantForm& alpha, const HermitianForm& h) {
  const LieAlgebraData* alg = alpha.algebra();
  if (!alg) return GaussRational(0);
  const size_t n = alg->dim();
  InvariantForm omega = kaehler_form(alg, h);
  InvariantForm integrand = wedge(alpha, wedge(omega, omega));
  const FormKey top{static_cast<uint16_t>((1u << n) - 1),
                    static_cast<uint16_t>((1u << n) - 1)};
  return integrand.coeff(top) / volume_coefficient(alg, h);
}

std::string stability_report(const FlatBundle& bundle, double eps) {
  nlohmann::ordered_json j;
  j["rank"] = bundle.rep.n;
  j["mode"] =
      bundle.rep.mode == UnitaryRep::Mode::Exact ? "exact" : "float";
  ResidualReport u = check_unitary(bundle.rep, eps);
  ResidualReport rel = check_relations(bundle.rep, bundle.presentation, eps);
  j["unitary"] = u.pass;
  j["relations"] = bundle.presentation.is_free ? true : rel.pass;
  // the bundle is flat by construction, so its first Chern form vanishes
  j["degree"] = "0";
  CommutantReport c = commutant(bundle.rep, eps);
  j["commutant_dim"] = c.dimension;
  j["criterion"] = "degree-zero irreducible unitary flat bundle; "
                   "no subsheaf enumeration performed";
  j["verdict"] = c.dimension == 1 ? "stable" : "inapplicable (reducible)";
  return j.dump(2);
}

std::pair<UnitaryRep, GroupPresentation> load_rep_json(
    const std::string& json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rep descriptor: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError("rep descriptor: missing integral 'n'");
  UnitaryRep rep;
  GroupPresentation pres;
  rep.n = j["n"].get<size_t>();
  if (rep.n == 0) throw InvalidRank("rank must be positive");
  std::string mode = j.value("mode", "exact");
  if (mode != "exact" && mode != "float")
    throw ParseError("rep descriptor: mode must be 'exact' or 'float'");
  rep.mode =
      mode == "exact" ? UnitaryRep::Mode::Exact : UnitaryRep::Mode::Floating;
  if (!j.contains("generators") || !j["generators"].is_object())
    throw ParseError("rep descriptor: missing 'generators' object");
  for (auto& [name, mat] : j["generators"].items()) {
    if (!mat.is_array() || mat.size() != rep.n)
      throw ParseError("generator '" + name + "': row count != n");
    rep.names.push_back(name);
    pres.generators.push_back(name);
    if (rep.mode == UnitaryRep::Mode::Exact) {
      Mat m(rep.n, rep.n);
      for (size_t r = 0; r < rep.n; ++r) {
        if (mat[r].size() != rep.n)
          throw ParseError("generator '" + name + "': column count != n");
        for (size_t c = 0; c < rep.n; ++c)
          m(r, c) = GaussRational::parse(mat[r][c].get<std::string>());
      }
      rep.exact.push_back(std::move(m));
    } else {
      CMatD m(rep.n, std::vector<Cd>(rep.n));
      for (size_t r = 0; r < rep.n; ++r) {
        if (mat[r].size() != rep.n)
          throw ParseError("generator '" + name + "': column count != n");
        for (size_t c = 0; c < rep.n; ++c) {
          const auto& e = mat[r][c];
          if (!e.is_array() || e.size() != 2)
            throw ParseError("generator '" + name +
                             "': float entries are [re, im] pairs");
          m[r][c] = Cd(e[0].get<double>(), e[1].get<double>());
        }
      }
      rep.approx.push_back(std::move(m));
    }
  }
  if (j.contains("relators"))
    pres.relators = j["relators"].get<std::vector<std::string>>();
  pres.is_free = j.value("free", pres.relators.empty());
  return {std::move(rep), std::move(pres)};
}

}  // namespace stromver
