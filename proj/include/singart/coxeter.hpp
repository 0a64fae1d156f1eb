#pragma once

// Coxeter matrices, Coxeter graphs and their odd skeletons, plus concrete
// element arithmetic for the finite Coxeter groups of types A, B and I2(m).
//
// Type A_{n-1} is realized as the symmetric group S_n acting on {1..n},
// type B_n as signed permutations of {1..n}, and I2(m) as the dihedral
// group of order 2m in rotation/reflection coordinates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace singart {

enum class Family { A, B, I2 };

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Symmetric matrix m_{s,t} over an ordered label set; kInfinity marks the
/// unbounded entry.
class CoxeterMatrix {
public:
  CoxeterMatrix() = default;

  CoxeterMatrix(std::vector<int> labels, std::map<std::pair<int, int>, int> entries)
      : labels_(std::move(labels)), entries_(std::move(entries)) {
    validate();
  }

  const std::vector<int>& labels() const { return labels_; }
  std::size_t rank() const { return labels_.size(); }

  int entry(int s, int t) const {
    if (s == t) return 1;
    auto it = entries_.find(ordered(s, t));
    if (it == entries_.end()) throw std::invalid_argument("CoxeterMatrix: unknown label pair");
    return it->second;
  }

  int position_of(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("CoxeterMatrix: unknown label");
    return static_cast<int>(it - labels_.begin());
  }

  bool has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

private:
  static std::pair<int, int> ordered(int s, int t) { return {std::min(s, t), std::max(s, t)}; }

  void validate() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        int m = entry(labels_[i], labels_[j]);
        if (m != kInfinity && m < 2)
          throw std::invalid_argument("CoxeterMatrix: off-diagonal entry below 2");
      }
  }

  std::vector<int> labels_;
  std::map<std::pair<int, int>, int> entries_;
};

/// Builds the type A_{n-1}, B_n or I2(m) matrix.  For A and B the parameter
/// is n (labels 1..n-1 resp. 0..n-1); for I2 it is the edge label m.
inline CoxeterMatrix standard_matrix(Family family, int n_or_m) {
  std::vector<int> labels;
  std::map<std::pair<int, int>, int> ent;
  switch (family) {
    case Family::A: {
      if (n_or_m < 2) throw std::invalid_argument("standard_matrix: type A needs n >= 2");
      int n = n_or_m;
      for (int i = 1; i <= n - 1; ++i) labels.push_back(i);
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) ent[{i, j}] = (j == i + 1) ? 3 : 2;
      break;
    }
    case Family::B: {
      if (n_or_m < 2) throw std::invalid_argument("standard_matrix: type B needs n >= 2");
      int n = n_or_m;
      for (int i = 0; i <= n - 1; ++i) labels.push_back(i);
      for (int i = 0; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) ent[{i, j}] = (j != i + 1) ? 2 : (i == 0 ? 4 : 3);
      break;
    }
    case Family::I2: {
      if (n_or_m < 2) throw std::invalid_argument("standard_matrix: I2 needs m >= 2");
      labels = {1, 2};
      ent[{1, 2}] = n_or_m;
      break;
    }
  }
  return CoxeterMatrix(std::move(labels), std::move(ent));
}

/// Parses either the `type=A n=4` shorthand or an explicit whitespace
/// separated integer matrix (with `inf` for the unbounded entry).
inline CoxeterMatrix parse_coxeter_matrix(const std::string& text) {
  if (text.find("type=") != std::string::npos) {
    std::istringstream in(text);
    std::string tok;
    char type = 0;
    int n = -1, m = -1;
    while (in >> tok) {
      if (tok.rfind("type=", 0) == 0) type = tok[5];
      else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
      else if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
    }
    if (type == 'A') return standard_matrix(Family::A, n);
    if (type == 'B') return standard_matrix(Family::B, n);
    if (type == 'I') return standard_matrix(Family::I2, m >= 0 ? m : n);
    throw std::invalid_argument("parse_coxeter_matrix: unknown type");
  }
  std::istringstream in(text);
  std::vector<int> vals;
  std::string tok;
  while (in >> tok) vals.push_back(tok == "inf" ? kInfinity : std::stoi(tok));
  auto k = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(vals.size()))));
  if (k * k != vals.size()) throw std::invalid_argument("parse_coxeter_matrix: not square");
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 1);
  std::map<std::pair<int, int>, int> ent;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        if (vals[i * k + j] != 1) throw std::invalid_argument("diagonal entry must be 1");
        continue;
      }
      if (vals[i * k + j] != vals[j * k + i]) throw std::invalid_argument("matrix not symmetric");
      ent[{labels[std::min(i, j)], labels[std::max(i, j)]}] = vals[i * k + j];
    }
  return CoxeterMatrix(std::move(labels), std::move(ent));
}

/// Connected components of the odd skeleton: the Coxeter graph with all
/// edges labelled by an even number or by infinity removed.
struct OddComponents {
  std::vector<std::vector<int>> components;  // sorted labels per block
  std::map<int, int> component_of;           // label -> block index

  std::size_t size() const { return components.size(); }
};

inline OddComponents odd_components(const CoxeterMatrix& M) {
  const auto& labels = M.labels();
  std::map<int, int> parent;
  for (int s : labels) parent[s] = s;
  auto find = [&](int s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      int m = M.entry(labels[i], labels[j]);
      if (m != kInfinity && m > 1 && m % 2 == 1) parent[find(labels[i])] = find(labels[j]);
    }
  std::map<int, std::vector<int>> blocks;
  for (int s : labels) blocks[find(s)].push_back(s);
  OddComponents out;
  for (auto& [root, members] : blocks) {
    std::sort(members.begin(), members.end());
    for (int s : members) out.component_of[s] = static_cast<int>(out.components.size());
    out.components.push_back(members);
  }
  return out;
}

/// Element of a finite Coxeter group of type A, B or I2(m).
///
/// Storage: type A keeps the one-line permutation of {1..n}; type B the
/// signed one-line form; I2(m) a (rotation, reflection) pair together
/// with m itself so that elements are self-contained.
class GroupElt {
public:
  GroupElt() = default;

  static GroupElt perm(std::vector<int> one_line) {
    GroupElt g;
    g.family_ = Family::A;
    g.data_ = std::move(one_line);
    g.check_perm(false);
    return g;
  }

  static GroupElt signed_perm(std::vector<int> one_line) {
    GroupElt g;
    g.family_ = Family::B;
    g.data_ = std::move(one_line);
    g.check_perm(true);
    return g;
  }

  static GroupElt dihedral(int m, int rot, bool refl) {
    if (m < 2) throw std::invalid_argument("GroupElt: dihedral m >= 2");
    GroupElt g;
    g.family_ = Family::I2;
    g.data_ = {m, ((rot % m) + m) % m, refl ? 1 : 0};
    return g;
  }

  static GroupElt identity(Family family, int n_or_m) {
    switch (family) {
      case Family::A: {
        std::vector<int> v(n_or_m);
        std::iota(v.begin(), v.end(), 1);
        return perm(std::move(v));
      }
      case Family::B: {
        std::vector<int> v(n_or_m);
        std::iota(v.begin(), v.end(), 1);
        return signed_perm(std::move(v));
      }
      case Family::I2:
        return dihedral(n_or_m, 0, false);
    }
    throw std::logic_error("unreachable");
  }

  Family family() const { return family_; }

  /// Rank parameter: n for types A/B, m for I2.
  int degree() const {
    return family_ == Family::I2 ? data_[0] : static_cast<int>(data_.size());
  }

  /// One-line image (types A and B only), 1-based position.
  int image(int i) const { return data_[i - 1]; }

  const std::vector<int>& one_line() const { return data_; }

  int dihedral_rot() const { return data_[1]; }
  bool dihedral_refl() const { return data_[2] != 0; }

  bool is_identity() const {
    if (family_ == Family::I2) return data_[1] == 0 && data_[2] == 0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  friend bool operator==(const GroupElt&, const GroupElt&) = default;
  friend auto operator<=>(const GroupElt&, const GroupElt&) = default;

  std::string to_string() const {
    std::ostringstream out;
    if (family_ == Family::I2) {
      out << "(m=" << data_[0] << ",r=" << data_[1] << (data_[2] ? ",refl" : "") << ")";
      return out.str();
    }
    out << "[";
    for (std::size_t i = 0; i < data_.size(); ++i) out << (i ? "," : "") << data_[i];
    out << "]";
    return out.str();
  }

private:
  void check_perm(bool with_signs) const {
    std::vector<bool> seen(data_.size(), false);
    for (int v : data_) {
      int a = with_signs ? std::abs(v) : v;
      if (a < 1 || a > static_cast<int>(data_.size()) || seen[a - 1] || (!with_signs && v < 0))
        throw std::invalid_argument("GroupElt: not a valid (signed) permutation");
      seen[a - 1] = true;
    }
  }

  Family family_ = Family::A;
  std::vector<int> data_;
};

inline void require_compatible(const GroupElt& a, const GroupElt& b) {
  if (a.family() != b.family() || a.degree() != b.degree())
    throw std::invalid_argument("GroupElt: family/rank mismatch");
}

inline GroupElt multiply(const GroupElt& a, const GroupElt& b) {
  require_compatible(a, b);
  switch (a.family()) {
    case Family::A: {
      int n = a.degree();
      std::vector<int> v(n);
      for (int i = 1; i <= n; ++i) v[i - 1] = a.image(b.image(i));
      return GroupElt::perm(std::move(v));
    }
    case Family::B: {
      int n = a.degree();
      std::vector<int> v(n);
      for (int i = 1; i <= n; ++i) {
        int bi = b.image(i);
        int ai = a.image(std::abs(bi));
        v[i - 1] = bi < 0 ? -ai : ai;
      }
      return GroupElt::signed_perm(std::move(v));
    }
    case Family::I2: {
      int m = a.degree();
      int k1 = a.dihedral_rot(), k2 = b.dihedral_rot();
      bool r1 = a.dihedral_refl(), r2 = b.dihedral_refl();
      int k = r1 ? k1 - k2 : k1 + k2;
      return GroupElt::dihedral(m, k, r1 != r2);
    }
  }
  throw std::logic_error("unreachable");
}

inline GroupElt inverse(const GroupElt& a) {
  switch (a.family()) {
    case Family::A: {
      int n = a.degree();
      std::vector<int> v(n);
      for (int i = 1; i <= n; ++i) v[a.image(i) - 1] = i;
      return GroupElt::perm(std::move(v));
    }
    case Family::B: {
      int n = a.degree();
      std::vector<int> v(n);
      for (int i = 1; i <= n; ++i) {
        int ai = a.image(i);
        v[std::abs(ai) - 1] = ai < 0 ? -i : i;
      }
      return GroupElt::signed_perm(std::move(v));
    }
    case Family::I2:
      if (a.dihedral_refl()) return a;
      return GroupElt::dihedral(a.degree(), -a.dihedral_rot(), false);
  }
  throw std::logic_error("unreachable");
}

/// generator(A, n, i) is the transposition (i, i+1) in S_n, 1 <= i <= n-1.
/// generator(B, n, 0) is the sign flip at position 1; generator(B, n, i)
/// the double transposition. generator(I2, m, 1) and (I2, m, 2) are the
/// two dihedral reflections.
inline GroupElt generator(Family family, int n_or_m, int label) {
  switch (family) {
    case Family::A: {
      if (label < 1 || label > n_or_m - 1) throw std::invalid_argument("generator: bad index");
      auto g = GroupElt::identity(Family::A, n_or_m).one_line();
      std::swap(g[label - 1], g[label]);
      return GroupElt::perm(std::move(g));
    }
    case Family::B: {
      if (label < 0 || label > n_or_m - 1) throw std::invalid_argument("generator: bad index");
      auto g = GroupElt::identity(Family::B, n_or_m).one_line();
      if (label == 0) g[0] = -1;
      else std::swap(g[label - 1], g[label]);
      return GroupElt::signed_perm(std::move(g));
    }
    case Family::I2: {
      if (label == 1) return GroupElt::dihedral(n_or_m, 0, true);
      if (label == 2) return GroupElt::dihedral(n_or_m, n_or_m - 1, true);
      throw std::invalid_argument("generator: bad index");
    }
  }
  throw std::logic_error("unreachable");
}

/// Right descent test: l(w s) < l(w).
inline bool is_right_descent(const GroupElt& w, int label) {
  switch (w.family()) {
    case Family::A:
      return w.image(label) > w.image(label + 1);
    case Family::B:
      if (label == 0) return w.image(1) < 0;
      return w.image(label) > w.image(label + 1);
    case Family::I2: {
      int m = w.degree(), k = w.dihedral_rot();
      auto len = [m](int kk, bool refl) {
        return refl ? std::min(2 * kk + 1, 2 * (m - kk) - 1) : std::min(2 * kk, 2 * (m - kk));
      };
      GroupElt ws = multiply(w, generator(Family::I2, m, label));
      return len(ws.dihedral_rot(), ws.dihedral_refl()) < len(k, w.dihedral_refl());
    }
  }
  throw std::logic_error("unreachable");
}

/// A specific reduced expression: repeatedly strip the smallest-index
/// right descent.  Returns generator labels whose left-to-right product
/// is w.
inline std::vector<int> reduced_word(const GroupElt& w) {
  std::vector<int> labels;
  switch (w.family()) {
    case Family::A:
      for (int i = 1; i <= w.degree() - 1; ++i) labels.push_back(i);
      break;
    case Family::B:
      for (int i = 0; i <= w.degree() - 1; ++i) labels.push_back(i);
      break;
    case Family::I2:
      labels = {1, 2};
      break;
  }
  std::vector<int> word;
  GroupElt cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (int s : labels)
      if (is_right_descent(cur, s)) {
        word.push_back(s);
        cur = multiply(cur, generator(cur.family(), cur.degree(), s));
        found = true;
        break;
      }
    if (!found) throw std::logic_error("reduced_word: no descent on non-identity element");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline int length(const GroupElt& w) { return static_cast<int>(reduced_word(w).size()); }

/// Finite Coxeter group context bundling the family, its rank parameter and
/// the matching Coxeter matrix.
class CoxGroup {
public:
  CoxGroup(Family family, int n_or_m)
      : family_(family), n_or_m_(n_or_m), matrix_(standard_matrix(family, n_or_m)) {}

  Family family() const { return family_; }
  int param() const { return n_or_m_; }
  const CoxeterMatrix& matrix() const { return matrix_; }

  GroupElt identity() const { return GroupElt::identity(family_, n_or_m_); }
  GroupElt gen(int label) const { return generator(family_, n_or_m_, label); }

  GroupElt from_word(const std::vector<int>& labels) const {
    GroupElt g = identity();
    for (int s : labels) g = multiply(g, gen(s));
    return g;
  }

  /// All group elements, by BFS over right multiplication.
  std::vector<GroupElt> elements() const {
    std::set<GroupElt> seen{identity()};
    std::vector<GroupElt> frontier{identity()}, all{identity()};
    while (!frontier.empty()) {
      std::vector<GroupElt> next;
      for (const auto& g : frontier)
        for (int s : matrix_.labels()) {
          GroupElt h = multiply(g, gen(s));
          if (seen.insert(h).second) {
            next.push_back(h);
            all.push_back(h);
          }
        }
      frontier = std::move(next);
    }
    return all;
  }

private:
  Family family_;
  int n_or_m_;
  CoxeterMatrix matrix_;
};

}  // namespace singart
