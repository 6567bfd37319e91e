#include "stromver/forms.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace stromver {

namespace {

std::vector<int> key_ids(const FormKey& k, size_t dim) {
  std::vector<int> ids;
  for (size_t i = 0; i < dim; ++i)
    if (k.holo & (1u << i)) ids.push_back(static_cast<int>(i));
  for (size_t i = 0; i < dim; ++i)
    if (k.anti & (1u << i)) ids.push_back(static_cast<int>(dim + i));
  return ids;
}

// Sign of the shuffle merging two ascending id sequences.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

InvariantForm InvariantForm::constant(const LieAlgebraData* alg,
                                      const GaussRational& c) {
  InvariantForm f(alg);
  f.add_term(c, {});
  return f;
}

InvariantForm InvariantForm::sigma(const LieAlgebraData* alg, size_t i) {
  InvariantForm f(alg);
  f.add_term(GaussRational(1), {static_cast<int>(i)});
  return f;
}

InvariantForm InvariantForm::sigma_bar(const LieAlgebraData* alg, size_t i) {
  InvariantForm f(alg);
  f.add_term(GaussRational(1), {static_cast<int>(alg->dim() + i)});
  return f;
}

void InvariantForm::insert(const FormKey& k, const GaussRational& v) {
  if (v.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void InvariantForm::add_term(const GaussRational& coeff,
                             const std::vector<int>& ids) {
  if (coeff.is_zero()) return;
  std::vector<int> v = ids;
  int sign = 1;
  // insertion sort, tracking parity
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return;  // repeated generator
  FormKey k;
  const int n = static_cast<int>(dim());
  for (int id : v) {
    if (id < n)
      k.holo |= static_cast<uint16_t>(1u << id);
    else
      k.anti |= static_cast<uint16_t>(1u << (id - n));
  }
  insert(k, sign == 1 ? coeff : -coeff);
}

GaussRational InvariantForm::coeff(const FormKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussRational() : it->second;
}

bool InvariantForm::homogeneous(int* p_out, int* q_out) const {
  int p = -1, q = -1;
  for (const auto& [k, v] : terms_) {
    int tp = std::popcount(k.holo);
    int tq = std::popcount(k.anti);
    if (p < 0) {
      p = tp;
      q = tq;
    } else if (p != tp || q != tq) {
      return false;
    }
  }
  if (p_out) *p_out = p;
  if (q_out) *q_out = q;
  return true;
}

InvariantForm operator+(const InvariantForm& a, const InvariantForm& b) {
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_) throw AmbientMismatch();
  InvariantForm r = a;
  if (!r.alg_) r.alg_ = b.alg_;
  for (const auto& [k, v] : b.terms_) r.insert(k, v);
  return r;
}

InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) {
  return a + (GaussRational(-1) * b);
}

InvariantForm operator*(const GaussRational& c, const InvariantForm& a) {
  InvariantForm r(a.algebra());
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms()) r.insert(k, c * v);
  return r;
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_) throw AmbientMismatch();
  const LieAlgebraData* alg = a.alg_ ? a.alg_ : b.alg_;
  InvariantForm r(alg);
  const size_t n = alg ? alg->dim() : 0;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      if ((ka.holo & kb.holo) || (ka.anti & kb.anti)) continue;
      auto ia = key_ids(ka, n);
      auto ib = key_ids(kb, n);
      int sg = merge_sign(ia, ib);
      FormKey k{static_cast<uint16_t>(ka.holo | kb.holo),
                static_cast<uint16_t>(ka.anti | kb.anti)};
      r.insert(k, sg == 1 ? va * vb : -(va * vb));
    }
  }
  return r;
}

namespace {

// d of a single generator: (2,0) for holomorphic ids, (0,2) for conjugates.
void add_d_generator(InvariantForm& out, const GaussRational& coeff, int id,
                     const std::vector<int>& rest, int pos_sign,
                     const LieAlgebraData& g, Convention conv, bool holo_only,
                     bool anti_only) {
  const int n = static_cast<int>(g.dim());
  const bool bar = id >= n;
  if (bar && holo_only) return;
  if (!bar && anti_only) return;
  const int k = bar ? id - n : id;
  const GaussRational s(conv.d_sign);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GaussRational c = g.c(static_cast<size_t>(k), static_cast<size_t>(i),
                            static_cast<size_t>(j));
      if (c.is_zero()) continue;
      if (bar) c = c.conj();
      std::vector<int> ids;
      ids.reserve(rest.size() + 2);
      ids.push_back(bar ? n + i : i);
      ids.push_back(bar ? n + j : j);
      ids.insert(ids.end(), rest.begin(), rest.end());
      GaussRational v = s * c * coeff;
      out.add_term(pos_sign == 1 ? v : -v, ids);
    }
}

InvariantForm differentiate(const InvariantForm& a, Convention conv,
                            bool holo_only, bool anti_only) {
  const LieAlgebraData* g = a.algebra();
  InvariantForm r(g);
  if (!g) return r;
  const size_t n = g->dim();
  for (const auto& [key, v] : a.terms()) {
    std::vector<int> ids = key_ids(key, n);
    for (size_t pos = 0; pos < ids.size(); ++pos) {
      std::vector<int> rest;
      rest.reserve(ids.size() - 1);
      for (size_t q = 0; q < ids.size(); ++q)
        if (q != pos) rest.push_back(ids[q]);
      int pos_sign = (pos % 2 == 0) ? 1 : -1;
      add_d_generator(r, v, ids[pos], rest, pos_sign, *g, conv, holo_only,
                      anti_only);
    }
  }
  return r;
}

}  // namespace

InvariantForm ce_differential(const InvariantForm& a, Convention conv) {
  return differentiate(a, conv, false, false);
}

InvariantForm del(const InvariantForm& a, Convention conv) {
  return differentiate(a, conv, true, false);
}

InvariantForm delbar(const InvariantForm& a, Convention conv) {
  return differentiate(a, conv, false, true);
}

InvariantForm conjugate(const InvariantForm& a) {
  InvariantForm r(a.algebra());
  for (const auto& [k, v] : a.terms_) {
    int p = std::popcount(k.holo);
    int q = std::popcount(k.anti);
    FormKey ck{k.anti, k.holo};
    GaussRational cv = v.conj();
    if ((p * q) % 2 != 0) cv = -cv;
    r.insert(ck, cv);
  }
  return r;
}

InvariantForm kaehler_form(const LieAlgebraData* alg, const HermitianForm& h) {
  InvariantForm w(alg);
  const size_t n = alg->dim();
  const GaussRational half_i(Rational(0), Rational(1, 2));
  for (size_t m = 0; m < n; ++m)
    for (size_t nn = 0; nn < n; ++nn) {
      if (h.h(m, nn).is_zero()) continue;
      w.add_term(half_i * h.h(m, nn),
                 {static_cast<int>(m), static_cast<int>(n + nn)});
    }
  return w;
}

GaussRational volume_coefficient(const LieAlgebraData* alg,
                                 const HermitianForm& h) {
  if (alg->dim() != 3)
    throw DimensionMismatch("volume form requires complex dimension 3");
  InvariantForm w = kaehler_form(alg, h);
  InvariantForm w3 = wedge(wedge(w, w), w);
  FormKey top{0b111, 0b111};
  return w3.coeff(top) / GaussRational(6);
}

InvariantForm hodge_star(const InvariantForm& a, const HermitianForm& h) {
  const LieAlgebraData* g = a.algebra();
  if (!g || g->dim() != 3)
    throw DimensionMismatch("hodge star requires complex dimension 3");
  const int n = 3, total = 6;
  Mat hinv = h.h.inverse();
  // Complex-bilinear pairing on the coframe: <sigma^i, sigmabar^j> =
  // 2 (h^{-1})_{ji}, all other pairings zero.
  auto pairing = [&](int x, int y) -> GaussRational {
    if (x < n && y >= n) return GaussRational(2) * hinv(y - n, x);
    if (y < n && x >= n) return GaussRational(2) * hinv(x - n, y);
    return GaussRational();
  };
  const GaussRational v = volume_coefficient(g, h);

  InvariantForm r(g);
  for (const auto& [key, coeff] : a.terms()) {
    std::vector<int> J = key_ids(key, n);
    const int k = static_cast<int>(J.size());
    for (uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> I, K;
      for (int b = 0; b < total; ++b)
        ((mask >> b) & 1u ? I : K).push_back(b);
      Mat gram(k, k);
      for (int r1 = 0; r1 < k; ++r1)
        for (int c1 = 0; c1 < k; ++c1) gram(r1, c1) = pairing(I[r1], J[c1]);
      GaussRational gd = k == 0 ? GaussRational(1) : gram.det();
      if (gd.is_zero()) continue;
      int sg = merge_sign(I, K);
      GaussRational contrib = coeff * gd * v;
      r.add_term(sg == 1 ? contrib : -contrib, K);
    }
  }
  return r;
}

InvariantForm codifferential(const InvariantForm& a, const HermitianForm& h,
                             Convention conv) {
  return GaussRational(-1) *
         hodge_star(ce_differential(hodge_star(a, h), conv), h);
}

GaussRational omega_norm_sq(const TopFormSection& theta,
                            const HermitianForm& h) {
  GaussRational d = h.h.det();
  return theta.coefficient * theta.coefficient.conj() * d.inv();
}

std::string InvariantForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const size_t n = dim();
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "((" << std::popcount(k.holo) << "," << std::popcount(k.anti)
       << ")) " << v.str();
    for (size_t i = 0; i < n; ++i)
      if (k.holo & (1u << i)) os << " s" << (i + 1);
    for (size_t i = 0; i < n; ++i)
      if (k.anti & (1u << i)) os << " sb" << (i + 1);
  }
  return os.str();
}

std::string form_terms_json(const InvariantForm& a) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  const size_t n = a.dim();
  for (const auto& [k, v] : a.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"holo\":[";
    bool f2 = true;
    for (size_t i = 0; i < n; ++i)
      if (k.holo & (1u << i)) {
        if (!f2) os << ",";
        f2 = false;
        os << (i + 1);
      }
    os << "],\"anti\":[";
    f2 = true;
    for (size_t i = 0; i < n; ++i)
      if (k.anti & (1u << i)) {
        if (!f2) os << ",";
        f2 = false;
        os << (i + 1);
      }
    os << "],\"coeff\":\"" << v.str() << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace stromver
