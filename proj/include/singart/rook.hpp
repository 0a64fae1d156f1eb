#pragma once

// Symmetric inverse monoid IS_n (partial permutations), its signed variant
// SIS_n, the restriction maps from (type B) block bijections to (signed)
// partial permutations, and the phi letter assignments.
//
// Composition matches the matrix convention of binrel: (a*b)(x) = a(b(x)).

#include "singart/coxeter.hpp"
#include "singart/dualsym.hpp"
#include "singart/words.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace singart {

/// Partial permutation of {1..n}; 0 marks an undefined point.
class PartialPerm {
public:
  PartialPerm() = default;
  explicit PartialPerm(int n) : t_(n, 0) {}

  explicit PartialPerm(std::vector<int> targets) : t_(std::move(targets)) { validate(false); }

  static PartialPerm identity(int n) {
    PartialPerm p(n);
    for (int i = 1; i <= n; ++i) p.t_[i - 1] = i;
    return p;
  }

  /// Partial identity undefined exactly on X.
  static PartialPerm partial_identity(int n, const std::vector<int>& undefined_on) {
    PartialPerm p = identity(n);
    for (int i : undefined_on) p.t_[i - 1] = 0;
    return p;
  }

  int size() const { return static_cast<int>(t_.size()); }
  int target(int i) const { return t_[i - 1]; }
  const std::vector<int>& targets() const { return t_; }

  int rank() const {
    int r = 0;
    for (int v : t_) r += v != 0;
    return r;
  }
  bool in_tilde() const { return rank() != size() - 1; }

  friend PartialPerm operator*(const PartialPerm& a, const PartialPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("PartialPerm: size mismatch");
    PartialPerm out(a.size());
    for (int i = 1; i <= a.size(); ++i) {
      int m = b.target(i);
      out.t_[i - 1] = m == 0 ? 0 : a.target(m);
    }
    return out;
  }

  friend bool operator==(const PartialPerm&, const PartialPerm&) = default;
  friend auto operator<=>(const PartialPerm&, const PartialPerm&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i) out += ",";
      out += t_[i] == 0 ? "-" : std::to_string(t_[i]);
    }
    return out + "]";
  }

protected:
  void validate(bool with_signs) const {
    std::vector<bool> seen(t_.size(), false);
    for (int v : t_) {
      if (v == 0) continue;
      int a = with_signs ? std::abs(v) : v;
      if (a < 1 || a > static_cast<int>(t_.size()) || seen[a - 1] || (!with_signs && v < 0))
        throw std::invalid_argument("PartialPerm: invalid targets");
      seen[a - 1] = true;
    }
  }

  std::vector<int> t_;
};

/// Signed partial permutation: targets in +-{1..n}, absolute values distinct.
class SignedPartialPerm {
public:
  SignedPartialPerm() = default;
  explicit SignedPartialPerm(int n) : t_(n, 0) {}
  explicit SignedPartialPerm(std::vector<int> targets) : t_(std::move(targets)) { validate(); }

  static SignedPartialPerm identity(int n) {
    SignedPartialPerm p(n);
    for (int i = 1; i <= n; ++i) p.t_[i - 1] = i;
    return p;
  }

  static SignedPartialPerm partial_identity(int n, const std::vector<int>& undefined_on) {
    SignedPartialPerm p = identity(n);
    for (int i : undefined_on) p.t_[i - 1] = 0;
    return p;
  }

  /// epsilon_i: sign flip at point i.
  static SignedPartialPerm sign_flip(int n, int i) {
    SignedPartialPerm p = identity(n);
    p.t_[i - 1] = -i;
    return p;
  }

  static SignedPartialPerm from_group(const GroupElt& w) {
    if (w.family() != Family::B) throw std::invalid_argument("from_group: expected type B element");
    return SignedPartialPerm(w.one_line());
  }

  int size() const { return static_cast<int>(t_.size()); }
  int target(int i) const { return t_[i - 1]; }
  const std::vector<int>& targets() const { return t_; }

  int rank() const {
    int r = 0;
    for (int v : t_) r += v != 0;
    return r;
  }

  friend SignedPartialPerm operator*(const SignedPartialPerm& a, const SignedPartialPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("SignedPartialPerm: size mismatch");
    SignedPartialPerm out(a.size());
    for (int i = 1; i <= a.size(); ++i) {
      int m = b.target(i);
      if (m == 0) continue;
      int v = a.target(std::abs(m));
      out.t_[i - 1] = m < 0 ? -v : v;
    }
    return out;
  }

  friend bool operator==(const SignedPartialPerm&, const SignedPartialPerm&) = default;
  friend auto operator<=>(const SignedPartialPerm&, const SignedPartialPerm&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i) out += ",";
      out += t_[i] == 0 ? "-" : std::to_string(t_[i]);
    }
    return out + "]";
  }

private:
  void validate() const {
    std::vector<bool> seen(t_.size(), false);
    for (int v : t_) {
      if (v == 0) continue;
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(t_.size()) || seen[a - 1])
        throw std::invalid_argument("SignedPartialPerm: invalid targets");
      seen[a - 1] = true;
    }
  }

  std::vector<int> t_;
};

/// Restriction of a block bijection to its singleton blocks.
inline PartialPerm restrict_to_singletons(const BlockBijection& a) {
  PartialPerm out(a.size());
  std::vector<int> t(a.size(), 0);
  for (const auto& [top, bottom] : a.blocks())
    if (top.size() == 1 && bottom.size() == 1) t[bottom[0] - 1] = top[0];
  return PartialPerm(std::move(t));
}

/// Type B restriction: point i maps to w when both {i}-side blocks are
/// pure singletons, with the sign carried by the block pairing.
inline SignedPartialPerm restrict_to_singletons_b(const BlockBijectionB& a) {
  int n = a.points();
  std::vector<int> t(n, 0);
  for (const auto& [top, bottom] : a.blocks())
    if (top.size() == 1 && bottom.size() == 1 && bottom[0] > 0) t[bottom[0] - 1] = top[0];
  return SignedPartialPerm(std::move(t));
}

/// phi: sigma_i -> full transposition, tau_i -> partial identity undefined
/// on {i, i+1}.
inline GeneratorAssignment<PartialPerm> phi_assignment(int n) {
  GeneratorAssignment<PartialPerm> a;
  a.identity = PartialPerm::identity(n);
  a.mul = [](const PartialPerm& x, const PartialPerm& y) { return x * y; };
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 1], img[i]);
    a.sigma[i] = PartialPerm(std::move(img));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = PartialPerm::partial_identity(n, {i, i + 1});
  }
  return a;
}

/// Type B phi: sigma_0 -> sign flip at 1, tau_0 -> partial identity
/// undefined at 1; higher indices as in type A.
inline GeneratorAssignment<SignedPartialPerm> phi_b_assignment(int n) {
  GeneratorAssignment<SignedPartialPerm> a;
  a.identity = SignedPartialPerm::identity(n);
  a.mul = [](const SignedPartialPerm& x, const SignedPartialPerm& y) { return x * y; };
  a.sigma[0] = SignedPartialPerm::sign_flip(n, 1);
  a.sigma_inv[0] = a.sigma[0];
  a.tau[0] = SignedPartialPerm::partial_identity(n, {1});
  for (int i = 1; i <= n - 1; ++i) {
    a.sigma[i] = SignedPartialPerm::from_group(generator(Family::B, n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = SignedPartialPerm::partial_identity(n, {i, i + 1});
  }
  return a;
}

/// All partial permutations of {1..n}, by direct recursion.
inline std::set<PartialPerm> all_partial_perms(int n) {
  std::set<PartialPerm> out;
  std::vector<int> t(n, 0);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> go = [&](int i) {
    if (i > n) {
      out.insert(PartialPerm(t));
      return;
    }
    t[i - 1] = 0;
    go(i + 1);
    for (int v = 1; v <= n; ++v)
      if (!used[v]) {
        used[v] = true;
        t[i - 1] = v;
        go(i + 1);
        used[v] = false;
      }
    t[i - 1] = 0;
  };
  go(1);
  return out;
}

inline std::set<PartialPerm> all_partial_perms_no_corank1(int n) {
  std::set<PartialPerm> out;
  for (const auto& p : all_partial_perms(n))
    if (p.in_tilde()) out.insert(p);
  return out;
}

inline std::set<SignedPartialPerm> all_signed_partial_perms(int n) {
  std::set<SignedPartialPerm> out;
  std::vector<int> t(n, 0);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> go = [&](int i) {
    if (i > n) {
      out.insert(SignedPartialPerm(t));
      return;
    }
    t[i - 1] = 0;
    go(i + 1);
    for (int v = 1; v <= n; ++v)
      if (!used[v])
        for (int s : {1, -1}) {
          used[v] = true;
          t[i - 1] = s * v;
          go(i + 1);
          used[v] = false;
        }
    t[i - 1] = 0;
  };
  go(1);
  return out;
}

}  // namespace singart
