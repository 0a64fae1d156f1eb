#pragma once

// Binary relations on {1..n} as boolean matrices (one 64-bit row mask per
// row; n <= 64), their type B analogue on {-n..-1, 1..n}, and the letter
// assignments sending sigma_i to a (signed) transposition and tau_i to the
// equality relation enlarged by that transposition.
//
// Matrix convention: entry (i, j) = 1 means column-index j relates to
// row-index i, i.e. rows are outputs.  The product is the usual boolean
// matrix product, so permutation matrices compose right factor first.

#include "singart/coxeter.hpp"
#include "singart/words.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace singart {

class BoolMat {
public:
  BoolMat() = default;

  explicit BoolMat(int n) : n_(n), rows_(n, 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("BoolMat: need 1 <= n <= 64");
  }

  static BoolMat identity(int n) {
    BoolMat m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Matrix of a permutation given as 0-based images: col j -> row img[j].
  static BoolMat from_images(const std::vector<int>& img) {
    BoolMat m(static_cast<int>(img.size()));
    for (int j = 0; j < m.n_; ++j) m.set(img[j], j, true);
    return m;
  }

  int size() const { return n_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool v) {
    if (v) rows_[i] |= (std::uint64_t{1} << j);
    else rows_[i] &= ~(std::uint64_t{1} << j);
  }
  std::uint64_t row(int i) const { return rows_[i]; }

  friend BoolMat operator*(const BoolMat& a, const BoolMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BoolMat: size mismatch");
    BoolMat out(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      std::uint64_t acc = 0;
      std::uint64_t r = a.rows_[i];
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        acc |= b.rows_[j];
      }
      out.rows_[i] = acc;
    }
    return out;
  }

  friend bool operator==(const BoolMat&, const BoolMat&) = default;
  friend auto operator<=>(const BoolMat&, const BoolMat&) = default;

  /// Every row and every column non-zero.
  bool is_essential() const {
    std::uint64_t cols = 0;
    for (int i = 0; i < n_; ++i) {
      if (rows_[i] == 0) return false;
      cols |= rows_[i];
    }
    std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return cols == full;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) out += get(i, j) ? '1' : '0';
      if (i + 1 < n_) out += '\n';
    }
    return out;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline BoolMat parse_boolmat(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string tok;
  while (in >> tok) lines.push_back(tok);
  BoolMat m(static_cast<int>(lines.size()));
  for (int i = 0; i < m.size(); ++i) {
    if (static_cast<int>(lines[i].size()) != m.size())
      throw std::invalid_argument("parse_boolmat: ragged rows");
    for (int j = 0; j < m.size(); ++j) m.set(i, j, lines[i][j] == '1');
  }
  return m;
}

/// Completes every connected component of the bipartite graph of rho to a
/// complete bipartite graph.  Union-find on 2n vertices (rows, then cols).
inline BoolMat complete_components(const BoolMat& rho) {
  int n = rho.size();
  std::vector<int> parent(2 * n);
  for (int i = 0; i < 2 * n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rho.get(i, j)) parent[find(i)] = find(n + j);
  // component -> row mask / col mask
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> comp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rho.get(i, j)) {
        auto& [rmask, cmask] = comp[find(i)];
        rmask |= std::uint64_t{1} << i;
        cmask |= std::uint64_t{1} << j;
      }
  BoolMat out(n);
  for (const auto& [root, masks] : comp) {
    auto [rmask, cmask] = masks;
    for (int i = 0; i < n; ++i)
      if ((rmask >> i) & 1u)
        for (int j = 0; j < n; ++j)
          if ((cmask >> j) & 1u) out.set(i, j, true);
  }
  return out;
}

/// tau image in type A: equality relation plus (i,i+1) and (i+1,i);
/// labels are 1-based, matrix indices 0-based.
inline BoolMat tau_relation_A(int n, int label) {
  BoolMat m = BoolMat::identity(n);
  m.set(label - 1, label, true);
  m.set(label, label - 1, true);
  return m;
}

inline BoolMat sigma_relation_A(int n, int label) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[label - 1], img[label]);
  return BoolMat::from_images(img);
}

/// eta: sigma_i -> transposition matrix, tau_i -> equality + transposition.
inline GeneratorAssignment<BoolMat> eta_assignment(int n) {
  GeneratorAssignment<BoolMat> a;
  a.identity = BoolMat::identity(n);
  a.mul = [](const BoolMat& x, const BoolMat& y) { return x * y; };
  for (int i = 1; i <= n - 1; ++i) {
    a.sigma[i] = sigma_relation_A(n, i);
    a.sigma_inv[i] = a.sigma[i];  // involutions
    a.tau[i] = tau_relation_A(n, i);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Type B: 2n x 2n matrices over index order -n..-1, 1..n, invariant under
// 180 degree rotation.

/// Matrix position of the signed point k (k in -n..-1, 1..n).
inline int signed_index(int n, int k) { return k < 0 ? k + n : n + k - 1; }

/// Inverse of signed_index.
inline int signed_value(int n, int idx) { return idx < n ? idx - n : idx - n + 1; }

class BoolMatB {
public:
  BoolMatB() = default;

  /// Takes the full 2n x 2n matrix; checks rotation invariance.
  explicit BoolMatB(BoolMat m) : m_(std::move(m)) {
    if (m_.size() % 2 != 0) throw std::invalid_argument("BoolMatB: odd size");
    int k = m_.size();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (m_.get(i, j) != m_.get(k - 1 - i, k - 1 - j))
          throw std::invalid_argument("BoolMatB: not rotation invariant");
  }

  static BoolMatB identity(int n) { return BoolMatB(BoolMat::identity(2 * n)); }

  int points() const { return m_.size() / 2; }
  const BoolMat& matrix() const { return m_; }

  /// Entry addressed by signed point values: out relates to in?
  bool get(int out, int in) const {
    int n = points();
    return m_.get(signed_index(n, out), signed_index(n, in));
  }

  friend BoolMatB operator*(const BoolMatB& a, const BoolMatB& b) {
    BoolMatB out;
    out.m_ = a.m_ * b.m_;  // rotation invariance is preserved by products
    return out;
  }

  friend bool operator==(const BoolMatB&, const BoolMatB&) = default;
  friend auto operator<=>(const BoolMatB&, const BoolMatB&) = default;

  std::string to_string() const { return m_.to_string(); }

private:
  BoolMat m_;
};

/// Signed permutation matrix of a GroupElt of type B.
inline BoolMatB signed_perm_matrix(const GroupElt& w) {
  int n = w.degree();
  BoolMat m(2 * n);
  for (int j = 1; j <= n; ++j) {
    int im = w.image(j);
    m.set(signed_index(n, im), signed_index(n, j), true);
    m.set(signed_index(n, -im), signed_index(n, -j), true);
  }
  return BoolMatB(std::move(m));
}

/// tau image in type B: equality relation plus the (signed) transposition
/// pairs of generator `label` (0-based Coxeter labels).
inline BoolMatB tau_relation_B(int n, int label) {
  BoolMat m = BoolMat::identity(2 * n);
  if (label == 0) {
    m.set(signed_index(n, 1), signed_index(n, -1), true);
    m.set(signed_index(n, -1), signed_index(n, 1), true);
  } else {
    int i = label;
    m.set(signed_index(n, i), signed_index(n, i + 1), true);
    m.set(signed_index(n, i + 1), signed_index(n, i), true);
    m.set(signed_index(n, -i), signed_index(n, -(i + 1)), true);
    m.set(signed_index(n, -(i + 1)), signed_index(n, -i), true);
  }
  return BoolMatB(std::move(m));
}

inline GeneratorAssignment<BoolMatB> eta_b_assignment(int n) {
  GeneratorAssignment<BoolMatB> a;
  a.identity = BoolMatB::identity(n);
  a.mul = [](const BoolMatB& x, const BoolMatB& y) { return x * y; };
  for (int i = 0; i <= n - 1; ++i) {
    a.sigma[i] = signed_perm_matrix(generator(Family::B, n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = tau_relation_B(n, i);
  }
  return a;
}

}  // namespace singart
