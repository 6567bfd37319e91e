#include "stromver/rep.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace stromver {

namespace {

void check_su2_relations(const ModuleSpace& m) {
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    Mat lhs = commutator(m.action[b], m.action[c]);
    if (!(lhs == GaussRational(2) * m.action[a]))
      throw MalformedRecipe("generator actions violate su(2) relations in '" +
                            m.recipe + "'");
  }
}

ModuleSpace base_v0() {
  ModuleSpace m;
  m.recipe = "V0";
  m.dim = 2;
  const GaussRational i = GaussRational::i();
  Mat u1(2, 2), u2(2, 2), u3(2, 2);
  u1(0, 0) = i;
  u1(1, 1) = -i;
  u2(0, 1) = GaussRational(1);
  u2(1, 0) = GaussRational(-1);
  u3(0, 1) = i;
  u3(1, 0) = i;
  m.action = {u1, u2, u3};
  return m;
}

ModuleSpace base_adjoint(const Sl2Data& d) {
  ModuleSpace m;
  m.recipe = "g";
  m.dim = d.algebra.dim();
  auto u = su2_generators(d.algebra);
  for (int a = 0; a < 3; ++a) m.action[a] = d.algebra.ad(u[a]);
  return m;
}

ModuleSpace conj_module(ModuleSpace m) {
  for (auto& a : m.action) a = a.conjugate();
  return m;
}

ModuleSpace dual_module(ModuleSpace m) {
  for (auto& a : m.action) a = GaussRational(-1) * a.transpose();
  return m;
}

ModuleSpace dsum_module(const ModuleSpace& a, const ModuleSpace& b) {
  ModuleSpace m;
  m.dim = a.dim + b.dim;
  for (int g = 0; g < 3; ++g) {
    Mat r(m.dim, m.dim);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) r(i, j) = a.action[g](i, j);
    for (size_t i = 0; i < b.dim; ++i)
      for (size_t j = 0; j < b.dim; ++j)
        r(a.dim + i, a.dim + j) = b.action[g](i, j);
    m.action[g] = std::move(r);
  }
  return m;
}

ModuleSpace tensor_module(const ModuleSpace& a, const ModuleSpace& b) {
  ModuleSpace m;
  m.dim = a.dim * b.dim;
  for (int g = 0; g < 3; ++g) {
    Mat r(m.dim, m.dim);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t k = 0; k < a.dim; ++k) {
        const GaussRational& v = a.action[g](i, k);
        if (v.is_zero()) continue;
        for (size_t j = 0; j < b.dim; ++j) r(i * b.dim + j, k * b.dim + j) += v;
      }
    for (size_t j = 0; j < b.dim; ++j)
      for (size_t l = 0; l < b.dim; ++l) {
        const GaussRational& v = b.action[g](j, l);
        if (v.is_zero()) continue;
        for (size_t i = 0; i < a.dim; ++i) r(i * b.dim + j, i * b.dim + l) += v;
      }
    m.action[g] = std::move(r);
  }
  return m;
}

std::vector<std::vector<size_t>> tuples(size_t dim, size_t k, bool strict) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < dim; ++i) {
      cur.push_back(i);
      self(self, strict ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ModuleSpace power_module(const ModuleSpace& a, size_t k, bool wedge_power) {
  auto basis = tuples(a.dim, k, wedge_power);
  std::map<std::vector<size_t>, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  ModuleSpace m;
  m.dim = basis.size();
  for (int g = 0; g < 3; ++g) {
    Mat r(m.dim, m.dim);
    for (size_t col = 0; col < basis.size(); ++col) {
      const auto& T = basis[col];
      for (size_t slot = 0; slot < k; ++slot)
        for (size_t to = 0; to < a.dim; ++to) {
          const GaussRational& v = a.action[g](to, T[slot]);
          if (v.is_zero()) continue;
          std::vector<size_t> nt = T;
          nt[slot] = to;
          GaussRational sign(1);
          if (wedge_power) {
            // insertion sort with sign; a duplicate index kills the term
            for (size_t p = 1; p < nt.size(); ++p)
              for (size_t q = p; q > 0 && nt[q - 1] > nt[q]; --q) {
                std::swap(nt[q - 1], nt[q]);
                sign = -sign;
              }
            bool dup = false;
            for (size_t p = 1; p < nt.size(); ++p)
              if (nt[p - 1] == nt[p]) dup = true;
            if (dup) continue;
          } else {
            std::sort(nt.begin(), nt.end());
          }
          r(index.at(nt), col) += sign * v;
        }
    }
    m.action[g] = std::move(r);
  }
  return m;
}

struct Parser {
  std::string s;
  size_t pos = 0;
  const Sl2Data* d;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw MalformedRecipe(what + " at offset " + std::to_string(pos) + " in '" +
                          s + "'");
  }

  ModuleSpace expr() {
    ModuleSpace m = term();
    while (eat('+')) m = dsum_module(m, term());
    return m;
  }
  ModuleSpace term() {
    ModuleSpace m = factor();
    while (eat('*')) m = tensor_module(m, factor());
    return m;
  }
  ModuleSpace factor() {
    skip_ws();
    if (eat('(')) {
      ModuleSpace m = expr();
      if (!eat(')')) fail("expected ')'");
      return m;
    }
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) fail("expected module name");
    if (name == "V0") return base_v0();
    if (name == "g" || name == "adjoint") return base_adjoint(*d);
    if (name == "gbar") return conj_module(base_adjoint(*d));
    auto arg = [&]() {
      if (!eat('(')) fail("expected '(' after '" + name + "'");
      ModuleSpace m = expr();
      if (!eat(')')) fail("expected ')'");
      return m;
    };
    if (name == "dual") return dual_module(arg());
    if (name == "conj") return conj_module(arg());
    for (const char* prefix : {"sym", "wedge"}) {
      if (name.rfind(prefix, 0) == 0) {
        std::string digits = name.substr(std::string(prefix).size());
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
          fail("expected power after '" + std::string(prefix) + "'");
        size_t k = std::stoul(digits);
        return power_module(arg(), k, std::string(prefix) == "wedge");
      }
    }
    fail("unknown module '" + name + "'");
  }
};

}  // namespace

ModuleSpace build_module(const std::string& recipe, const Sl2Data& d) {
  std::string normalized;
  for (size_t i = 0; i < recipe.size();) {
    if (recipe.compare(i, 3, "⊕") == 0) {
      normalized += '+';
      i += 3;
    } else if (recipe.compare(i, 3, "⊗") == 0) {
      normalized += '*';
      i += 3;
    } else {
      normalized += recipe[i++];
    }
  }
  Parser p{normalized, 0, &d};
  ModuleSpace m = p.expr();
  p.skip_ws();
  if (p.pos != normalized.size()) p.fail("trailing input");
  m.recipe = recipe;
  check_su2_relations(m);
  return m;
}

std::vector<std::vector<GaussRational>> invariant_subspace(
    const ModuleSpace& m) {
  Mat stacked(3 * m.dim, m.dim);
  for (int g = 0; g < 3; ++g)
    for (size_t i = 0; i < m.dim; ++i)
      for (size_t j = 0; j < m.dim; ++j)
        stacked(g * m.dim + i, j) = m.action[g](i, j);
  return stacked.kernel();
}

Decomposition decompose(const ModuleSpace& m) {
  Mat cas(m.dim, m.dim);
  for (int g = 0; g < 3; ++g) cas = cas - m.action[g] * m.action[g];
  Decomposition dec;
  size_t remaining = m.dim;
  for (int k = 0; remaining > 0; ++k) {
    if (static_cast<size_t>(k) + 1 > m.dim)
      throw MalformedRecipe("Casimir spectrum of '" + m.recipe +
                            "' is not of su(2) type");
    Mat shifted = cas;
    GaussRational ev(k * (k + 2));
    for (size_t i = 0; i < m.dim; ++i) shifted(i, i) -= ev;
    size_t kd = shifted.kernel().size();
    if (kd == 0) continue;
    if (kd % (k + 1) != 0)
      throw MalformedRecipe("Casimir eigenspace of '" + m.recipe +
                            "' has non-integral multiplicity");
    dec.mult[k] = kd / (k + 1);
    remaining -= kd;
  }
  return dec;
}

LocateResult locate_invariant(const ModuleSpace& m,
                              const std::vector<GaussRational>& candidate) {
  auto basis = invariant_subspace(m);
  if (basis.size() != 1)
    throw std::invalid_argument("locate_invariant needs a 1-dim invariant space");
  const auto& v = basis[0];
  if (candidate.size() != v.size())
    throw DimensionMismatch("candidate size != module dimension");
  size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  GaussRational c = candidate[p] / v[p];
  for (size_t i = 0; i < v.size(); ++i)
    if (candidate[i] != c * v[i]) return {false, GaussRational(0)};
  return {true, c};
}

std::vector<GaussRational> form_to_wedge_vector(const InvariantForm& f, int k) {
  const size_t n = f.dim();
  auto basis = tuples(2 * n, static_cast<size_t>(k), true);
  std::vector<GaussRational> out(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) {
    FormKey key;
    for (size_t id : basis[b]) {
      if (id < n)
        key.holo |= static_cast<uint16_t>(1u << id);
      else
        key.anti |= static_cast<uint16_t>(1u << (id - n));
    }
    out[b] = f.coeff(key);
  }
  return out;
}

std::string decomposition_json(const ModuleSpace& m) {
  Decomposition dec = decompose(m);
  nlohmann::ordered_json j;
  j["module"] = m.recipe;
  j["invariant_dim"] = invariant_subspace(m).size();
  nlohmann::ordered_json irreps = nlohmann::ordered_json::object();
  for (const auto& [hw, mult] : dec.mult) irreps[std::to_string(hw)] = mult;
  j["irreps"] = irreps;
  return j.dump(2);
}

}  // namespace stromver
