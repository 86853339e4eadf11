#include "qhr/liealg/weyl.hpp"

#include <deque>
#include <map>
#include <unordered_set>

namespace qhr::liealg {

namespace {

std::vector<int> int_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
    }
  return r;
}

std::vector<int> to_int_matrix(const RMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> r(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(m[i][j])) throw LieAlgebraError("Weyl matrix is not integral in root coordinates");
      r[i * n + j] = static_cast<int>(m[i][j].get_num().get_si());
    }
  return r;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

RVec WeylElement::apply_with(const std::vector<int>& m, const RVec& v) const {
  RVec r(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) {
      const int c = m[i * rank_ + j];
      if (c != 0 && v[j] != 0) s += c * v[j];
    }
    r[i] = s;
  }
  return r;
}

RMat WeylElement::matrix() const {
  RMat m(rank_, zeros(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = matrix_[i * rank_ + j];
  return m;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  return WeylElement(rank_, int_mul(rank_, matrix_, other.matrix_), int_mul(rank_, other.inverse_, inverse_),
                     sign_ * other.sign_);
}

WeylElement identity_element(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  return WeylElement(n, id, id, 1);
}

WeylElement root_reflection(const RootSystem& rs, const RVec& alpha) {
  const int n = rs.rank();
  RMat m(n, zeros(n));
  for (int j = 0; j < n; ++j) {
    const RVec col = rs.reflect(alpha, rs.simple_root(j));
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  const auto im = to_int_matrix(m);
  return WeylElement(n, im, im, -1);
}

WeylElement simple_reflection(const RootSystem& rs, int i) { return root_reflection(rs, rs.simple_root(i)); }

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t cap) {
  const Integer order = rs.weyl_order_from_heights();
  if (order > Integer(static_cast<unsigned long>(cap)))
    throw WeylCapExceeded("Weyl group of " + rs.name() + " has order " + order.get_str() + " > cap " +
                              std::to_string(cap),
                          order);
  const int n = rs.rank();
  // 2*rho has integer coordinates and a free W-orbit, so w(2 rho) identifies w.
  RVec two_rho = Rational(2) * rs.rho();
  auto key_of = [&](const WeylElement& w) {
    const RVec v = w.apply(two_rho);
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = static_cast<int>(v[i].get_num().get_si());
    return k;
  };
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements;
  elements.reserve(order.get_ui());
  std::unordered_set<std::vector<int>, VecHash> seen;
  elements.push_back(identity_element(rs));
  seen.insert(key_of(elements.front()));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = s.compose(elements[head]);
      if (seen.insert(key_of(next)).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace qhr::liealg
