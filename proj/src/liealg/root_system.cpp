#include "qhr/liealg/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace qhr::liealg {

CartanType CartanType::parse(const std::string& text) {
  if (text.size() < 2) throw LieAlgebraError("algebra name '" + text + "' must look like D4");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw LieAlgebraError("algebra name '" + text + "' must look like D4");
  }
  return t;
}

namespace {

// Squared lengths of simple roots (long roots = 2) and edges of the Dynkin
// diagram, Bourbaki numbering (0-based here).
struct Diagram {
  std::vector<Rational> lengths;
  std::vector<std::pair<int, int>> edges;
};

Diagram diagram_for(const CartanType& t) {
  const int n = t.rank;
  Diagram d;
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.series) {
    case 'A':
      if (n < 1) break;
      d.lengths.assign(n, Rational(2));
      chain(0, n);
      return d;
    case 'B':
      if (n < 2) break;
      d.lengths.assign(n, Rational(2));
      d.lengths[n - 1] = 1;
      chain(0, n);
      return d;
    case 'C':
      if (n < 2) break;
      d.lengths.assign(n, Rational(1));
      d.lengths[n - 1] = 2;
      chain(0, n);
      return d;
    case 'D':
      if (n < 4) break;
      d.lengths.assign(n, Rational(2));
      chain(0, n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      return d;
    case 'E':
      if (n < 6 || n > 8) break;
      d.lengths.assign(n, Rational(2));
      d.edges = {{0, 2}, {2, 3}, {1, 3}};
      for (int i = 3; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      return d;
    case 'F':
      if (n != 4) break;
      d.lengths = {Rational(2), Rational(2), Rational(1), Rational(1)};
      d.edges = {{0, 1}, {1, 2}, {2, 3}};
      return d;
    case 'G':
      if (n != 2) break;
      d.lengths = {make_rational(2, 3), Rational(2)};
      d.edges = {{0, 1}};
      return d;
    default:
      break;
  }
  throw LieAlgebraError("unsupported Cartan type " + t.name());
}

std::vector<int> to_key(const RVec& v) {
  std::vector<int> k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = static_cast<int>(v[i].get_num().get_si());
  return k;
}

}  // namespace

RVec RootSystem::simple_root(int i) const {
  RVec v = zeros(rank());
  v[i] = 1;
  return v;
}

RVec RootSystem::simple_coroot(int i) const { return coroot(simple_root(i)); }

Rational RootSystem::form(const RVec& a, const RVec& b) const {
  Rational s = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0 && gram_[i][j] != 0) row += gram_[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

RVec RootSystem::coroot(const RVec& alpha) const { return (Rational(2) / norm2(alpha)) * alpha; }

RVec RootSystem::reflect(const RVec& alpha, const RVec& v) const {
  return v - (form(v, coroot(alpha))) * alpha;
}

Rational RootSystem::height(const RVec& v) const {
  Rational s = 0;
  for (const auto& c : v) s += c;
  return s;
}

int RootSystem::root_index(const RVec& v) const {
  for (const auto& c : v)
    if (!is_integer(c)) return -1;
  const auto it = index_.find(to_key(v));
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RVec& v) const { return root_index(v) >= 0; }

std::vector<int> RootSystem::exponents() const {
  std::map<int, int> by_height;
  int max_h = 0;
  for (const auto& a : positive_) {
    const int h = static_cast<int>(height(a).get_num().get_si());
    ++by_height[h];
    max_h = std::max(max_h, h);
  }
  // multiplicity of exponent m equals (#roots of height m) - (#roots of height m+1)
  std::vector<int> ex;
  for (int m = 1; m <= max_h; ++m) {
    const int mult = by_height[m] - by_height[m + 1];
    for (int k = 0; k < mult; ++k) ex.push_back(m);
  }
  return ex;
}

Integer RootSystem::weyl_order_from_heights() const {
  Integer order = 1;
  for (int m : exponents()) order *= (m + 1);
  return order;
}

RVec RootSystem::from_weight_coords(const std::vector<long>& coeffs) const {
  RVec v = zeros(rank());
  for (int i = 0; i < rank(); ++i) v = v + Rational(coeffs[i]) * fundamental_weights_[i];
  return v;
}

RVec RootSystem::weight_coords(const RVec& v) const {
  RVec c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = form(v, simple_coroot(i));
  return c;
}

RootSystem build_root_system(const CartanType& type) {
  const Diagram d = diagram_for(type);
  const int n = type.rank;
  RootSystem rs;
  rs.type_ = type;
  rs.gram_.assign(n, zeros(n));
  for (int i = 0; i < n; ++i) rs.gram_[i][i] = d.lengths[i];
  for (auto [i, j] : d.edges) {
    // (alpha_i|alpha_j) = -max(|a_i|^2,|a_j|^2)/2 for joined nodes
    const Rational v = -std::max(d.lengths[i], d.lengths[j]) / 2;
    rs.gram_[i][j] = v;
    rs.gram_[j][i] = v;
  }
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational a = 2 * rs.gram_[i][j] / rs.gram_[i][i];
      rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Roots: closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<RVec> frontier;
  for (int i = 0; i < n; ++i) {
    frontier.push_back(rs.simple_root(i));
    seen.insert(to_key(frontier.back()));
  }
  std::vector<RVec> all = frontier;
  while (!frontier.empty()) {
    std::vector<RVec> next;
    for (const auto& r : frontier)
      for (int i = 0; i < n; ++i) {
        // s_i(r) = r - <r, alpha_i^vee> alpha_i
        RVec s = r;
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += r[j].get_num().get_si() * rs.cartan_[i][j];
        s[i] -= pairing;
        if (seen.insert(to_key(s)).second) {
          next.push_back(s);
          all.push_back(s);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& r : all) {
    bool positive = true;
    for (const auto& c : r) positive &= (c >= 0);
    if (positive) rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), [&](const RVec& a, const RVec& b) {
    const Rational ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.roots_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.roots_.push_back(-r);

  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[to_key(rs.roots_[i])] = static_cast<int>(i);

  rs.theta_ = rs.positive_.back();
  rs.rho_ = zeros(n);
  rs.rho_vee_ = zeros(n);
  for (const auto& a : rs.positive_) {
    rs.rho_ = rs.rho_ + make_rational(1, 2) * a;
    rs.rho_vee_ = rs.rho_vee_ + make_rational(1, 2) * rs.coroot(a);
  }
  rs.coxeter_ = static_cast<int>(rs.height(rs.theta_).get_num().get_si()) + 1;
  const Rational hd = rs.form(rs.rho_, rs.coroot(rs.theta_)) + 1;
  rs.dual_coxeter_ = static_cast<int>(hd.get_num().get_si());

  Rational long_len = 0, short_len = 2;
  for (const auto& len : d.lengths) {
    long_len = std::max(long_len, len);
    short_len = std::min(short_len, len);
  }
  rs.lacety_ = static_cast<int>(Rational(long_len / short_len).get_num().get_si());

  // omega_i = sum_k c_k alpha_k with sum_k (alpha_j^vee|alpha_k) c_k = delta_ij
  RMat coroot_gram(n, zeros(n));
  for (int j = 0; j < n; ++j) {
    const RVec cj = rs.simple_coroot(j);
    for (int k = 0; k < n; ++k) coroot_gram[j][k] = rs.form(cj, rs.simple_root(k));
  }
  const RMat inv = inverse(coroot_gram);
  rs.fundamental_weights_.assign(n, zeros(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) rs.fundamental_weights_[i][k] = inv[k][i];
  return rs;
}

}  // namespace qhr::liealg
