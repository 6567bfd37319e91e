#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "stromver/lattice.hpp"

using namespace stromver;

namespace {

const Sl2Data& sl2() {
  static Sl2Data d = sl2_standard();
  return d;
}

Mat word_commutator(const Mat& a, const Mat& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace

TEST_CASE("clock-shift pair, rank 2 (exact)") {
  UnitaryRep rep = clock_shift(2);
  CHECK(rep.mode == UnitaryRep::Mode::Exact);
  ResidualReport u = check_unitary(rep);
  CHECK(u.pass);
  CHECK(u.residuals == std::vector<double>{0.0, 0.0});
  CHECK(rep.exact[0].det() == GaussRational(1));
  CHECK(rep.exact[1].det() == GaussRational(1));
  Mat c = word_commutator(rep.exact[0], rep.exact[1]);
  CHECK(c == GaussRational(-1) * Mat::identity(2));

  // the group commutator relator fails: [a,b] = -Id, not Id
  GroupPresentation pres{{"a", "b"}, {"abAB"}, false};
  CHECK(!check_relations(rep, pres, 1e-12).pass);
  // but commuting diagonal matrices satisfy it
  UnitaryRep diag;
  diag.n = 2;
  diag.names = {"a", "b"};
  Mat d1 = Mat::identity(2), d2 = Mat::identity(2);
  d1(0, 0) = GaussRational::i();
  d2(1, 1) = -GaussRational::i();
  diag.exact = {d1, d2};
  CHECK(check_relations(diag, pres, 1e-12).pass);
}

TEST_CASE("clock-shift pair, rank 4 (exact)") {
  UnitaryRep rep = clock_shift(4);
  CHECK(rep.mode == UnitaryRep::Mode::Exact);
  CHECK(check_unitary(rep).pass);
  CHECK(rep.exact[0].det() == GaussRational(1));
  CHECK(rep.exact[1].det() == GaussRational(1));
  Mat c = word_commutator(rep.exact[0], rep.exact[1]);
  CHECK(c == GaussRational::i() * Mat::identity(4));
  CHECK(commutant(rep).dimension == 1);
}

TEST_CASE("clock-shift pair, rank 3 and 5 (floating)") {
  for (size_t n : {size_t(3), size_t(5), size_t(6)}) {
    UnitaryRep rep = clock_shift(n);
    CHECK(rep.mode == UnitaryRep::Mode::Floating);
    CHECK(check_unitary(rep, 1e-12).pass);
    // commutator = primitive n-th root of unity times Id
    auto mul = [&](const CMatD& a, const CMatD& b) {
      CMatD r(n, std::vector<std::complex<double>>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
      return r;
    };
    auto adj = [&](const CMatD& a) {
      CMatD r(n, std::vector<std::complex<double>>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = std::conj(a[j][i]);
      return r;
    };
    CMatD c = mul(mul(rep.approx[0], rep.approx[1]),
                  mul(adj(rep.approx[0]), adj(rep.approx[1])));
    std::complex<double> zeta =
        std::polar(1.0, 2 * std::acos(-1.0) / static_cast<double>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        std::complex<double> want = i == j ? zeta : 0.0;
        CHECK(std::abs(c[i][j] - want) < 1e-10);
      }
    CHECK(commutant(rep).dimension == 1);
  }
  CHECK_THROWS_AS(clock_shift(1), InvalidRank);
  CHECK_THROWS_AS(clock_shift(0), InvalidRank);
}

TEST_CASE("commutant detects reducibility") {
  CHECK(commutant(clock_shift(2)).dimension == 1);

  UnitaryRep sum;  // direct sum of two characters
  sum.n = 2;
  sum.names = {"a"};
  Mat d(2, 2);
  d(0, 0) = GaussRational::i();
  d(1, 1) = GaussRational(-1);
  sum.exact = {d};
  auto rep = commutant(sum);
  CHECK(rep.dimension == 2);
  // scalars always commute
  for (const auto& b : rep.basis)
    CHECK((b * sum.exact[0] - sum.exact[0] * b).is_zero());

  UnitaryRep triv;
  triv.n = 1;
  triv.names = {"a"};
  triv.exact = {Mat::identity(1)};
  CHECK(commutant(triv).dimension == 1);
}

TEST_CASE("floating rank decisions fail loudly without a gap") {
  UnitaryRep rep;
  rep.n = 3;
  rep.mode = UnitaryRep::Mode::Floating;
  rep.names = {"a", "b"};
  CMatD a(3, std::vector<std::complex<double>>(3));
  CMatD b = a;
  for (int i = 0; i < 3; ++i) a[i][i] = b[i][i] = 1.0;
  a[1][1] += 5e-11;  // below eps: should be treated as commuting
  b[2][2] += 2e-8;   // above eps but within the gap guard of 5e-11
  rep.approx = {a, b};
  CHECK_THROWS_AS(commutant(rep, 1e-10), IndeterminateRank);
}

TEST_CASE("degree") {
  const auto* g = &sl2().algebra;
  InvariantForm zero(g);
  CHECK(degree(zero, sl2().h0).is_zero());

  InvariantForm alpha(g);
  alpha.add_term(GaussRational::i(), {1, 4});  // i sigma^2 sigmabar^2
  CHECK(degree(alpha, sl2().h0) == GaussRational(4));

  // exact 2-forms have degree zero
  InvariantForm delta(g);
  delta.add_term(GaussRational(1), {0});
  delta.add_term(GaussRational(1), {3});
  CHECK(degree(ce_differential(delta), sl2().h0).is_zero());
}

TEST_CASE("degree is well defined modulo exact forms") {
  const auto* g = &sl2().algebra;
  InvariantForm alpha(g);
  alpha.add_term(GaussRational::i(), {1, 4});
  GaussRational base = degree(alpha, sl2().h0);
  std::mt19937_64 rng(20240819);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int iter = 0; iter < 20; ++iter) {
    InvariantForm delta(g);
    for (int id = 0; id < 6; ++id)
      delta.add_term(GaussRational(Rational(coeff(rng), 1 + iter % 4),
                                   Rational(coeff(rng))),
                     {id});
    InvariantForm shifted = alpha + ce_differential(delta);
    CHECK(degree(shifted, sl2().h0) == base);
  }
}

TEST_CASE("stability report") {
  FlatBundle b{clock_shift(2), GroupPresentation{{"a", "b"}, {}, true}};
  std::string rep = stability_report(b);
  CHECK(rep.find("\"degree\": \"0\"") != std::string::npos);
  CHECK(rep.find("\"commutant_dim\": 1") != std::string::npos);
  CHECK(rep.find("\"verdict\": \"stable\"") != std::string::npos);

  UnitaryRep sum;
  sum.n = 2;
  sum.names = {"a"};
  Mat d(2, 2);
  d(0, 0) = GaussRational(1);
  d(1, 1) = GaussRational(-1);
  sum.exact = {d};
  FlatBundle rb{sum, GroupPresentation{{"a"}, {}, true}};
  std::string rrep = stability_report(rb);
  CHECK(rrep.find("inapplicable") != std::string::npos);

  UnitaryRep line;
  line.n = 1;
  line.names = {"a"};
  line.exact = {Mat::identity(1)};
  FlatBundle lb{line, GroupPresentation{{"a"}, {}, true}};
  CHECK(stability_report(lb).find("\"verdict\": \"stable\"") !=
        std::string::npos);
}

TEST_CASE("rep descriptor JSON") {
  std::string text = R"({
    "n": 2,
    "mode": "exact",
    "generators": {
      "a": [["i", "0"], ["0", "-i"]],
      "b": [["0", "i"], ["i", "0"]]
    },
    "relators": ["aaaa"]
  })";
  auto [rep, pres] = load_rep_json(text);
  CHECK(rep.n == 2);
  CHECK(rep.mode == UnitaryRep::Mode::Exact);
  CHECK(check_unitary(rep).pass);
  CHECK(check_relations(rep, pres).pass);  // a^4 = Id
  CHECK(!pres.is_free);

  std::string floaty = R"({
    "n": 1,
    "mode": "float",
    "generators": {"a": [[[0.0, 1.0]]]}
  })";
  auto [frep, fpres] = load_rep_json(floaty);
  CHECK(frep.mode == UnitaryRep::Mode::Floating);
  CHECK(fpres.is_free);
  CHECK(check_unitary(frep).pass);

  CHECK_THROWS_AS(load_rep_json("{"), ParseError);
  CHECK_THROWS_AS(load_rep_json(R"({"n": 2, "generators": {"a": [["1"]]}})"),
                  ParseError);
  CHECK_THROWS_AS(load_rep_json(R"({"n": 0, "generators": {}})"), InvalidRank);
}
