#pragma once

// Generic verification machinery: relation checking for generator
// assignments and for finite monoid presentations, closure enumeration by
// BFS, and closed-form / direct-enumeration counting oracles.

#include "singart/laurent.hpp"
#include "singart/words.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace singart {

/// Evaluates both sides of every relation; returns the names of the ones
/// that fail.  Relations mentioning inverse letters are skipped when the
/// assignment has no inverse images.
template <class T>
std::vector<std::string> check_relations(const GeneratorAssignment<T>& a,
                                         const std::vector<Relation>& rels) {
  std::vector<std::string> failures;
  for (const auto& r : rels) {
    if (a.sigma_inv.empty()) {
      bool uses_inv = false;
      for (const auto* side : {&r.lhs, &r.rhs})
        for (const auto& l : *side)
          if (l.kind == LetterKind::SigmaInv) uses_inv = true;
      if (uses_inv) continue;
    }
    if (!(evaluate(a, r.lhs) == evaluate(a, r.rhs))) failures.push_back(r.name);
  }
  return failures;
}

/// Finite monoid with named generators, for checking diagram presentations.
template <class T>
struct NamedMonoid {
  std::map<std::string, T> gens;
  T identity;
  std::function<T(const T&, const T&)> mul;

  T eval(const std::vector<std::string>& word) const {
    T acc = identity;
    for (const auto& g : word) {
      auto it = gens.find(g);
      if (it == gens.end()) throw std::invalid_argument("NamedMonoid: unknown generator " + g);
      acc = mul(acc, it->second);
    }
    return acc;
  }
};

struct PresRelation {
  std::vector<std::string> lhs, rhs;
  std::string name;
};

template <class T>
std::vector<std::string> check_presentation(const NamedMonoid<T>& m,
                                            const std::vector<PresRelation>& rels) {
  std::vector<std::string> failures;
  for (const auto& r : rels)
    if (!(m.eval(r.lhs) == m.eval(r.rhs))) failures.push_back(r.name);
  return failures;
}

template <class T>
struct Closure {
  std::set<T> elements;
  bool capped = false;
};

/// Monoid generated by `gens` under `mul`, BFS by right multiplication.
/// Stops (with capped = true) once the cap is exceeded.
template <class T>
Closure<T> enumerate_closure(const std::vector<T>& gens, const T& identity,
                             const std::function<T(const T&, const T&)>& mul,
                             std::size_t cap = 2'000'000) {
  Closure<T> out;
  out.elements.insert(identity);
  std::vector<T> frontier{identity};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        T y = mul(x, g);
        if (out.elements.insert(y).second) {
          if (out.elements.size() > cap) {
            out.capped = true;
            return out;
          }
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting oracles.

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline BigInt stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return stirling2(n - 1, k - 1) + BigInt(k) * stirling2(n - 1, k);
}

inline BigInt double_factorial_odd(int n) {  // (2n-1)!!
  BigInt r = 1;
  for (int i = 1; i <= 2 * n - 1; i += 2) r *= i;
  return r;
}

/// |IS_n| = sum_k C(n,k)^2 k!
inline BigInt count_partial_perms(int n) {
  BigInt r = 0;
  for (int k = 0; k <= n; ++k) r += binomial(n, k) * binomial(n, k) * factorial(k);
  return r;
}

/// Partial permutations without rank n-1 maps: |IS_n| - n^2 (n-1)!
inline BigInt count_partial_perms_no_corank1(int n) {
  return count_partial_perms(n) - binomial(n, n - 1) * binomial(n, n - 1) * factorial(n - 1);
}

/// |SIS_n| = sum_k C(n,k)^2 k! 2^k
inline BigInt count_signed_partial_perms(int n) {
  BigInt r = 0;
  for (int k = 0; k <= n; ++k)
    r += binomial(n, k) * binomial(n, k) * factorial(k) * (BigInt(1) << k);
  return r;
}

/// |Br_n| = (2n-1)!!
inline BigInt count_brauer(int n) { return double_factorial_odd(n); }

/// |I*_n| = sum_k S(n,k)^2 k!
inline BigInt count_dual_symmetric(int n) {
  BigInt r = 0;
  for (int k = 0; k <= n; ++k) r += stirling2(n, k) * stirling2(n, k) * factorial(k);
  return r;
}

/// Number of involutions (possibly with fixed points) of a k-point set
/// that commute with the given point involution `bar`.  With the identity
/// for `bar` and allow_fixed this is the telephone number; forbidding
/// fixed points gives perfect-matching counts.  Direct recursion.
inline BigInt count_equivariant_involutions(int k, bool allow_fixed,
                                            const std::function<int(int)>& bar) {
  std::vector<int> match(k, -1);
  std::function<BigInt()> go = [&]() -> BigInt {
    int p = -1;
    for (int i = 0; i < k; ++i)
      if (match[i] < 0) { p = i; break; }
    if (p < 0) return 1;
    BigInt total = 0;
    auto place = [&](int a, int b) {
      // pair {a,b} plus its bar image; returns false if inconsistent
      int ab = bar(a), bb = bar(b);
      std::vector<std::pair<int, int>> edges{{a, b}, {ab, bb}};
      std::vector<int> touched;
      bool ok = true;
      for (auto [u, w] : edges) {
        if (match[u] < 0 && match[w] < 0 && (u != w || a == b)) {
          if (u == w) { match[u] = u; touched.push_back(u); }
          else { match[u] = w; match[w] = u; touched.push_back(u); touched.push_back(w); }
        } else if (match[u] == w && match[w] == u) {
          // already placed by the mirrored edge
        } else {
          ok = false;
          break;
        }
      }
      if (ok) total += go();
      for (int u : touched) match[u] = -1;
    };
    if (allow_fixed) place(p, p);
    for (int q = p + 1; q < k; ++q)
      if (match[q] < 0) place(p, q);
    return total;
  };
  return go();
}

inline BigInt count_partial_brauer(int n) {
  return count_equivariant_involutions(2 * n, true, [](int i) { return i; });
}

}  // namespace singart
