#pragma once

// Dual symmetric inverse monoids I*_n and IB*_n, realized as completed
// essential boolean matrices, together with the projection from essential
// relations, uniformity / factorization sigma*xi, the tuple encoding of
// type B idempotents, and the lambda letter assignments.

#include "singart/binrel.hpp"
#include "singart/coxeter.hpp"
#include "singart/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace singart {

/// Bijection between two set partitions of {1..n}, canonically stored as a
/// completed essential boolean matrix; equality is bit equality.
class BlockBijection {
public:
  BlockBijection() = default;

  /// Completes the given essential relation (the projection pi).
  explicit BlockBijection(const BoolMat& rho) : mat_(complete_components(rho)) {
    if (!rho.is_essential()) throw std::invalid_argument("BlockBijection: relation not essential");
  }

  static BlockBijection identity(int n) { return BlockBijection(BoolMat::identity(n)); }

  const BoolMat& matrix() const { return mat_; }
  int size() const { return mat_.size(); }

  friend BlockBijection operator*(const BlockBijection& a, const BlockBijection& b) {
    return BlockBijection(a.mat_ * b.mat_);
  }

  friend bool operator==(const BlockBijection&, const BlockBijection&) = default;
  friend auto operator<=>(const BlockBijection&, const BlockBijection&) = default;

  /// Component blocks as (top = codomain, bottom = domain) 1-based point
  /// sets, ordered by the minimum of the bottom set.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks() const {
    int n = mat_.size();
    std::vector<bool> col_done(n, false);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (int j = 0; j < n; ++j) {
      if (col_done[j]) continue;
      // rows related to column j, then all columns of any such row
      std::vector<int> rows, cols;
      for (int i = 0; i < n; ++i)
        if (mat_.get(i, j)) rows.push_back(i);
      for (int jj = 0; jj < n; ++jj)
        if (mat_.get(rows[0], jj)) {
          cols.push_back(jj);
          col_done[jj] = true;
        }
      std::vector<int> top, bottom;
      for (int i : rows) top.push_back(i + 1);
      for (int c : cols) bottom.push_back(c + 1);
      out.push_back({std::move(top), std::move(bottom)});
    }
    return out;
  }

  bool is_uniform() const {
    for (const auto& [top, bottom] : blocks())
      if (top.size() != bottom.size()) return false;
    return true;
  }

private:
  BoolMat mat_;
};

inline BlockBijection pi_project(const BoolMat& rho) { return BlockBijection(rho); }

/// Idempotent of I*_n attached to a set partition (1-based classes).
inline BlockBijection idempotent_from_partition(int n, const std::vector<std::vector<int>>& classes) {
  BoolMat m(n);
  std::vector<bool> seen(n, false);
  for (const auto& c : classes)
    for (int a : c)
      for (int b : c) {
        if (a < 1 || a > n || (a == b && seen[a - 1]))
          throw std::invalid_argument("idempotent_from_partition: bad partition");
        if (a == b) seen[a - 1] = true;
        m.set(a - 1, b - 1, true);
      }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("idempotent_from_partition: not a partition of 1..n");
  return BlockBijection(m);
}

/// Deterministic factorization a = sigma * xi with xi the idempotent of
/// the domain partition.  Inside each block pair the witness sigma maps
/// the sorted bottom points to the sorted top points in order.
inline std::pair<GroupElt, BlockBijection> factorize(const BlockBijection& a) {
  if (!a.is_uniform()) throw std::invalid_argument("factorize: block bijection not uniform");
  int n = a.size();
  std::vector<int> img(n);
  std::vector<std::vector<int>> classes;
  for (const auto& [top, bottom] : a.blocks()) {
    for (std::size_t k = 0; k < bottom.size(); ++k) img[bottom[k] - 1] = top[k];
    classes.push_back(bottom);
  }
  return {GroupElt::perm(std::move(img)), idempotent_from_partition(n, classes)};
}

inline BlockBijection perm_block(const GroupElt& w) {
  int n = w.degree();
  std::vector<int> img0(n);
  for (int j = 1; j <= n; ++j) img0[j - 1] = w.image(j) - 1;
  return BlockBijection(BoolMat::from_images(img0));
}

/// lambda: sigma_i -> transposition, tau_i -> xi_i = pi(tau image of eta).
inline GeneratorAssignment<BlockBijection> lambda_assignment(int n) {
  GeneratorAssignment<BlockBijection> a;
  a.identity = BlockBijection::identity(n);
  a.mul = [](const BlockBijection& x, const BlockBijection& y) { return x * y; };
  for (int i = 1; i <= n - 1; ++i) {
    a.sigma[i] = BlockBijection(sigma_relation_A(n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = BlockBijection(tau_relation_A(n, i));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Type B.

class BlockBijectionB {
public:
  BlockBijectionB() = default;

  explicit BlockBijectionB(const BoolMatB& rho)
      : mat_(BoolMatB(complete_components(rho.matrix()))) {
    if (!rho.matrix().is_essential())
      throw std::invalid_argument("BlockBijectionB: relation not essential");
  }

  static BlockBijectionB identity(int n) { return BlockBijectionB(BoolMatB::identity(n)); }

  const BoolMatB& matrix() const { return mat_; }
  int points() const { return mat_.points(); }

  friend BlockBijectionB operator*(const BlockBijectionB& a, const BlockBijectionB& b) {
    BlockBijectionB out;
    out.mat_ = BoolMatB(complete_components((a.mat_ * b.mat_).matrix()));
    return out;
  }

  friend bool operator==(const BlockBijectionB&, const BlockBijectionB&) = default;
  friend auto operator<=>(const BlockBijectionB&, const BlockBijectionB&) = default;

  /// Blocks over signed point values, ordered by minimal bottom index.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks() const {
    int n = points();
    const BoolMat& m = mat_.matrix();
    std::vector<bool> col_done(2 * n, false);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (int j = 0; j < 2 * n; ++j) {
      if (col_done[j]) continue;
      std::vector<int> rows, cols;
      for (int i = 0; i < 2 * n; ++i)
        if (m.get(i, j)) rows.push_back(i);
      for (int jj = 0; jj < 2 * n; ++jj)
        if (m.get(rows[0], jj)) {
          cols.push_back(jj);
          col_done[jj] = true;
        }
      std::vector<int> top, bottom;
      for (int i : rows) top.push_back(signed_value(n, i));
      for (int c : cols) bottom.push_back(signed_value(n, c));
      out.push_back({std::move(top), std::move(bottom)});
    }
    return out;
  }

  bool is_uniform() const {
    for (const auto& [top, bottom] : blocks())
      if (top.size() != bottom.size()) return false;
    return true;
  }

private:
  BoolMatB mat_;
};

/// Deterministic type B factorization; the witness is a signed permutation
/// mapping each sorted bottom block to its sorted top block in order, which
/// is bar-equivariant because the block structure is.
inline std::pair<GroupElt, BlockBijectionB> factorize_b(const BlockBijectionB& a) {
  if (!a.is_uniform()) throw std::invalid_argument("factorize_b: not uniform");
  int n = a.points();
  std::vector<int> img(n, 0);
  for (const auto& [top, bottom] : a.blocks())
    for (std::size_t k = 0; k < bottom.size(); ++k)
      if (bottom[k] > 0) img[bottom[k] - 1] = top[k];
      else img[-bottom[k] - 1] = -top[k];
  GroupElt sigma = GroupElt::signed_perm(std::move(img));
  BoolMat xi(2 * n);
  for (const auto& [top, bottom] : a.blocks())
    for (int x : bottom)
      for (int y : bottom) xi.set(signed_index(n, y), signed_index(n, x), true);
  return {sigma, BlockBijectionB(BoolMatB(std::move(xi)))};
}

inline BlockBijectionB signed_perm_block(const GroupElt& w) {
  return BlockBijectionB(signed_perm_matrix(w));
}

inline GeneratorAssignment<BlockBijectionB> lambda_b_assignment(int n) {
  GeneratorAssignment<BlockBijectionB> a;
  a.identity = BlockBijectionB::identity(n);
  a.mul = [](const BlockBijectionB& x, const BlockBijectionB& y) { return x * y; };
  for (int i = 0; i <= n - 1; ++i) {
    a.sigma[i] = signed_perm_block(generator(Family::B, n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = BlockBijectionB(tau_relation_B(n, i));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Tuple encoding of IB* idempotents.

/// Idempotents of IB*_n correspond to tuples (rho, Y, f): a partition rho
/// of {1..n}, a union Y of rho-classes and a sign function on Y, with f
/// canonicalized to + at each class minimum.  Classes are stored sorted by
/// minimum; `signs` is parallel to the class elements and empty for
/// classes outside Y.
struct SymPartitionTuple {
  int n = 0;
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> signs;

  friend bool operator==(const SymPartitionTuple&, const SymPartitionTuple&) = default;
};

inline BlockBijectionB tuple_to_idempotent(const SymPartitionTuple& t) {
  int n = t.n;
  BoolMat m(2 * n);
  auto fill = [&](const std::vector<int>& pts) {
    for (int x : pts)
      for (int y : pts) m.set(signed_index(n, y), signed_index(n, x), true);
  };
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    if (t.signs[c].empty()) {
      // class outside Y: one self-barred block C union -C
      std::vector<int> pts;
      for (int i : t.classes[c]) { pts.push_back(i); pts.push_back(-i); }
      fill(pts);
    } else {
      std::vector<int> pts, barred;
      for (std::size_t k = 0; k < t.classes[c].size(); ++k) {
        int v = t.signs[c][k] * t.classes[c][k];
        pts.push_back(v);
        barred.push_back(-v);
      }
      fill(pts);
      fill(barred);
    }
  }
  return BlockBijectionB(BoolMatB(std::move(m)));
}

inline SymPartitionTuple idempotent_to_tuple(const BlockBijectionB& b) {
  int n = b.points();
  SymPartitionTuple t;
  t.n = n;
  std::set<std::vector<int>> handled;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks = b.blocks();
  for (const auto& [top, bottom] : blocks) {
    if (top != bottom) throw std::invalid_argument("idempotent_to_tuple: not an idempotent");
    std::vector<int> block = bottom;
    std::sort(block.begin(), block.end());
    if (handled.count(block)) continue;
    std::vector<int> barred;
    for (int x : block) barred.push_back(-x);
    std::sort(barred.begin(), barred.end());
    handled.insert(block);
    handled.insert(barred);
    std::vector<int> cls, sgn;
    if (block == barred) {
      for (int x : block)
        if (x > 0) cls.push_back(x);
      t.classes.push_back(cls);
      t.signs.push_back({});
      continue;
    }
    // paired block: choose the representative with + at the minimal abs point
    std::vector<std::pair<int, int>> abs_pts;  // (abs value, sign)
    for (int x : block) abs_pts.push_back({std::abs(x), x > 0 ? 1 : -1});
    std::sort(abs_pts.begin(), abs_pts.end());
    int flip = abs_pts[0].second;  // normalize so the minimum carries +
    for (auto [a, s] : abs_pts) {
      cls.push_back(a);
      sgn.push_back(s * flip);
    }
    t.classes.push_back(cls);
    t.signs.push_back(sgn);
  }
  // order classes by minimum
  std::vector<std::size_t> idx(t.classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return t.classes[a][0] < t.classes[b][0];
  });
  SymPartitionTuple out;
  out.n = n;
  for (std::size_t i : idx) {
    out.classes.push_back(t.classes[i]);
    out.signs.push_back(t.signs[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct constructions, independent of generator closures.

inline std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> go = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    // index loop: the recursion below grows and shrinks cur
    for (std::size_t j = 0; j < cur.size(); ++j) {
      cur[j].push_back(i);
      go(i + 1);
      cur[j].pop_back();
    }
    cur.push_back({i});
    go(i + 1);
    cur.pop_back();
  };
  go(1);
  return out;
}

inline std::vector<GroupElt> all_perms(int n) { return CoxGroup(Family::A, n).elements(); }
inline std::vector<GroupElt> all_signed_perms(int n) { return CoxGroup(Family::B, n).elements(); }

/// F*_n as the set of all sigma * xi_rho products.
inline std::set<BlockBijection> fstar_direct(int n) {
  std::set<BlockBijection> out;
  auto partitions = all_partitions(n);
  for (const auto& w : all_perms(n)) {
    BlockBijection pw = perm_block(w);
    for (const auto& rho : partitions) out.insert(pw * idempotent_from_partition(n, rho));
  }
  return out;
}

/// All idempotents of IB*_n via the tuple description.
inline std::vector<BlockBijectionB> ibstar_idempotents(int n) {
  std::vector<BlockBijectionB> out;
  for (const auto& rho : all_partitions(n)) {
    std::size_t k = rho.size();
    for (std::size_t ymask = 0; ymask < (std::size_t{1} << k); ++ymask) {
      // enumerate sign patterns, minimum of each Y-class pinned to +
      std::vector<std::size_t> ycls;
      for (std::size_t c = 0; c < k; ++c)
        if ((ymask >> c) & 1) ycls.push_back(c);
      std::size_t free_signs = 0;
      for (std::size_t c : ycls) free_signs += rho[c].size() - 1;
      for (std::size_t smask = 0; smask < (std::size_t{1} << free_signs); ++smask) {
        SymPartitionTuple t;
        t.n = n;
        std::size_t bit = 0;
        for (std::size_t c = 0; c < k; ++c) {
          t.classes.push_back(rho[c]);
          if (!((ymask >> c) & 1)) {
            t.signs.push_back({});
            continue;
          }
          std::vector<int> sgn{1};
          for (std::size_t j = 1; j < rho[c].size(); ++j)
            sgn.push_back(((smask >> bit++) & 1) ? -1 : 1);
          t.signs.push_back(sgn);
        }
        out.push_back(tuple_to_idempotent(t));
      }
    }
  }
  return out;
}

/// FB*_n as the set of all sigma * xi products over signed permutations
/// and IB* idempotents.
inline std::set<BlockBijectionB> fbstar_direct(int n) {
  std::set<BlockBijectionB> out;
  auto idems = ibstar_idempotents(n);
  for (const auto& w : all_signed_perms(n)) {
    BlockBijectionB pw = signed_perm_block(w);
    for (const auto& e : idems) out.insert(pw * e);
  }
  return out;
}

}  // namespace singart
