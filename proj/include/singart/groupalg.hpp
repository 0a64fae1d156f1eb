#pragma once

// Desingularization targets over the finite Coxeter group: the integral
// group algebra of W and the Boolean semialgebra of subsets of W, with the
// letter assignments parametrized by a weight per odd-skeleton component.

#include "singart/coxeter.hpp"
#include "singart/laurent.hpp"
#include "singart/words.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>

namespace singart {

/// Element of Z(W); zero coefficients never stored.
class IntGroupAlgElt {
public:
  IntGroupAlgElt() = default;

  static IntGroupAlgElt basis(const GroupElt& w, const BigInt& c = 1) {
    IntGroupAlgElt e;
    if (c != 0) e.support_[w] = c;
    return e;
  }

  const std::map<GroupElt, BigInt>& support() const { return support_; }

  void add(const GroupElt& w, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = support_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) support_.erase(it);
    }
  }

  friend IntGroupAlgElt operator+(const IntGroupAlgElt& a, const IntGroupAlgElt& b) {
    IntGroupAlgElt out = a;
    for (const auto& [w, c] : b.support_) out.add(w, c);
    return out;
  }

  friend IntGroupAlgElt operator*(const IntGroupAlgElt& a, const IntGroupAlgElt& b) {
    IntGroupAlgElt out;
    for (const auto& [u, cu] : a.support_)
      for (const auto& [v, cv] : b.support_) out.add(multiply(u, v), cu * cv);
    return out;
  }

  friend bool operator==(const IntGroupAlgElt&, const IntGroupAlgElt&) = default;

  std::string to_string() const {
    if (support_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : support_) {
      if (!first) out << " + ";
      first = false;
      out << c << "*" << w.to_string();
    }
    return out.str();
  }

private:
  std::map<GroupElt, BigInt> support_;
};

/// Finite subset of W with set-product multiplication.
class BoolGroupAlgElt {
public:
  BoolGroupAlgElt() = default;
  explicit BoolGroupAlgElt(std::set<GroupElt> elems) : elems_(std::move(elems)) {}

  const std::set<GroupElt>& elements() const { return elems_; }

  friend BoolGroupAlgElt operator*(const BoolGroupAlgElt& a, const BoolGroupAlgElt& b) {
    BoolGroupAlgElt out;
    for (const auto& u : a.elems_)
      for (const auto& v : b.elems_) out.elems_.insert(multiply(u, v));
    return out;
  }

  friend bool operator==(const BoolGroupAlgElt&, const BoolGroupAlgElt&) = default;

private:
  std::set<GroupElt> elems_;
};

/// Weight per odd-skeleton component: a Laurent polynomial in x.
using PhiAssignment = std::map<int, Laurent>;

/// Set-valued weight per odd-skeleton component (exponent sets).
using PhiSet = std::map<int, std::set<int>>;

/// Substitutes x -> s into a weight polynomial; s is an involution, so
/// only exponent parity matters.
inline IntGroupAlgElt substitute_involution(const Laurent& phi, const GroupElt& s,
                                            const GroupElt& e) {
  BigInt even = 0, odd = 0;
  for (const auto& [exp, c] : phi.coeffs()) (exp % 2 == 0 ? even : odd) += c;
  IntGroupAlgElt out;
  out.add(e, even);
  out.add(s, odd);
  return out;
}

/// sigma_s and its inverse both map to s; tau_s maps to Phi(K_s)
/// evaluated at x = s.
inline GeneratorAssignment<IntGroupAlgElt> delta_bar_assignment(const CoxGroup& W,
                                                                const PhiAssignment& phi) {
  OddComponents K = odd_components(W.matrix());
  GeneratorAssignment<IntGroupAlgElt> a;
  GroupElt e = W.identity();
  a.identity = IntGroupAlgElt::basis(e);
  a.mul = [](const IntGroupAlgElt& x, const IntGroupAlgElt& y) { return x * y; };
  for (int s : W.matrix().labels()) {
    GroupElt gs = W.gen(s);
    a.sigma[s] = IntGroupAlgElt::basis(gs);
    a.sigma_inv[s] = a.sigma[s];
    auto it = phi.find(K.component_of.at(s));
    if (it == phi.end()) throw std::invalid_argument("delta_bar: Phi not total");
    a.tau[s] = substitute_involution(it->second, gs, e);
  }
  return a;
}

inline GeneratorAssignment<BoolGroupAlgElt> bool_delta_assignment(const CoxGroup& W,
                                                                  const PhiSet& phi) {
  OddComponents K = odd_components(W.matrix());
  GeneratorAssignment<BoolGroupAlgElt> a;
  GroupElt e = W.identity();
  a.identity = BoolGroupAlgElt({e});
  a.mul = [](const BoolGroupAlgElt& x, const BoolGroupAlgElt& y) { return x * y; };
  for (int s : W.matrix().labels()) {
    GroupElt gs = W.gen(s);
    a.sigma[s] = BoolGroupAlgElt({gs});
    a.sigma_inv[s] = a.sigma[s];
    auto it = phi.find(K.component_of.at(s));
    if (it == phi.end()) throw std::invalid_argument("bool_delta: Phi not total");
    std::set<GroupElt> img;
    for (int i : it->second) img.insert(i % 2 == 0 ? e : gs);
    a.tau[s] = BoolGroupAlgElt(std::move(img));
  }
  return a;
}

/// Uniform Phi helpers: the same weight on every odd component.
inline PhiAssignment uniform_phi(const CoxeterMatrix& M, const Laurent& p) {
  PhiAssignment phi;
  for (std::size_t k = 0; k < odd_components(M).size(); ++k) phi[static_cast<int>(k)] = p;
  return phi;
}

inline PhiSet uniform_phi_set(const CoxeterMatrix& M, const std::set<int>& s) {
  PhiSet phi;
  for (std::size_t k = 0; k < odd_components(M).size(); ++k) phi[static_cast<int>(k)] = s;
  return phi;
}

}  // namespace singart
