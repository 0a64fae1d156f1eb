#pragma once

// Hecke algebra of a finite Coxeter group in the standard basis over
// Z[v, v^-1], normalized so that (H_s + v)(H_s - v^-1) = 0 (the convention
// under which H_s + v is bar-invariant), together with the bar involution,
// the canonical basis, and the evaluation of singular words with
// Hecke-valued weights.

#include "singart/coxeter.hpp"
#include "singart/laurent.hpp"
#include "singart/words.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <string>

namespace singart {

/// Hecke algebra element in the standard basis; zero terms never stored.
class HeckeElt {
public:
  HeckeElt() = default;

  static HeckeElt basis(const GroupElt& w, const Laurent& c = Laurent(1)) {
    HeckeElt h;
    if (!c.is_zero()) h.terms_[w] = c;
    return h;
  }

  const std::map<GroupElt, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent coeff(const GroupElt& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add(const GroupElt& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, c);
    return out;
  }
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, -c);
    return out;
  }
  friend HeckeElt operator*(const Laurent& c, const HeckeElt& h) {
    HeckeElt out;
    for (const auto& [w, cw] : h.terms_) out.add(w, c * cw);
    return out;
  }

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << c.to_string() << ")*H" << w.to_string();
    }
    return out.str();
  }

private:
  std::map<GroupElt, Laurent> terms_;
};

/// Weight per odd-skeleton component for Hecke-valued evaluation: a
/// Laurent polynomial in x whose coefficients live in Z[v, v^-1].
using HeckePhi = std::map<int, XPoly>;

class HeckeAlgebra {
public:
  explicit HeckeAlgebra(CoxGroup W) : W_(std::move(W)) {}

  const CoxGroup& group() const { return W_; }

  HeckeElt one() const { return HeckeElt::basis(W_.identity()); }
  HeckeElt std_basis(const GroupElt& w) const { return HeckeElt::basis(w); }

  /// Right multiplication by the standard generator H_s; on a right
  /// descent, H_w H_s = H_{ws} + (v^-1 - v) H_w.
  HeckeElt mul_gen(const HeckeElt& h, int s) const {
    static const Laurent vm = v_pow(-1) - v_pow(1);
    HeckeElt out;
    GroupElt gs = W_.gen(s);
    for (const auto& [w, c] : h.terms()) {
      GroupElt ws = multiply(w, gs);
      if (is_right_descent(w, s)) {
        out.add(ws, c);
        out.add(w, vm * c);
      } else {
        out.add(ws, c);
      }
    }
    return out;
  }

  /// Right multiplication by H_s^{-1} = H_s + (v - v^{-1}).
  HeckeElt mul_gen_inv(const HeckeElt& h, int s) const {
    static const Laurent vm = v_pow(-1) - v_pow(1);
    return mul_gen(h, s) - (vm * h);
  }

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out;
    for (const auto& [u, d] : b.terms()) {
      HeckeElt acc = a;
      for (int s : reduced_word(u)) acc = mul_gen(acc, s);
      out = out + (d * acc);
    }
    return out;
  }

  /// Bar involution: v -> v^{-1}, H_s -> H_s^{-1}.
  HeckeElt bar(const HeckeElt& h) const {
    HeckeElt out;
    for (const auto& [w, c] : h.terms()) {
      HeckeElt acc = one();
      for (int s : reduced_word(w)) acc = mul_gen_inv(acc, s);
      out = out + (c.bar() * acc);
    }
    return out;
  }

  /// Canonical basis element: the unique bar-invariant element equal to
  /// H_w plus terms with coefficients in v Z[v].
  HeckeElt kl(const GroupElt& w) const {
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      auto it = kl_cache_.find(w);
      if (it != kl_cache_.end()) return it->second;
    }
    HeckeElt result;
    if (w.is_identity()) {
      result = one();
    } else {
      int s = -1;
      for (int t : W_.matrix().labels())
        if (is_right_descent(w, t)) { s = t; break; }
      GroupElt wp = multiply(w, W_.gen(s));
      HeckeElt c = mul_gen(kl(wp), s) + (v_pow(1) * kl(wp));  // kl(wp) * (H_s + v)
      // clean lower terms until all off-diagonal coefficients lie in vZ[v]
      while (true) {
        GroupElt worst;
        bool found = false;
        int worst_len = -1;
        for (const auto& [x, cx] : c.terms()) {
          if (x == w || cx.in_positive_part()) continue;
          int l = length(x);
          if (l > worst_len) { worst_len = l; worst = x; found = true; }
        }
        if (!found) break;
        Laurent cx = c.coeff(worst);
        Laurent m = Laurent(cx.coeff(0));
        for (const auto& [e, coef] : cx.coeffs())
          if (e < 0) m += Laurent::monomial(coef, e) + Laurent::monomial(coef, -e);
        c = c - (m * kl(worst));
      }
      result = c;
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    kl_cache_.emplace(w, result);
    return result;
  }

  HeckeElt gen_power(int s, int e) const {
    HeckeElt acc = one();
    for (int i = 0; i < std::abs(e); ++i) acc = e > 0 ? mul_gen(acc, s) : mul_gen_inv(acc, s);
    return acc;
  }

  /// sigma_s -> H_s, sigma_s^{-1} -> H_s^{-1}, tau_s -> Phi(K_s)[H_s].
  GeneratorAssignment<HeckeElt> upsilon_assignment(const HeckePhi& phi) const {
    OddComponents K = odd_components(W_.matrix());
    GeneratorAssignment<HeckeElt> a;
    a.identity = one();
    a.mul = [this](const HeckeElt& x, const HeckeElt& y) { return mul(x, y); };
    for (int s : W_.matrix().labels()) {
      a.sigma[s] = HeckeElt::basis(W_.gen(s));
      a.sigma_inv[s] = mul_gen_inv(one(), s);
      auto it = phi.find(K.component_of.at(s));
      if (it == phi.end()) throw std::invalid_argument("upsilon: Phi not total");
      HeckeElt img;
      for (const auto& [xexp, cv] : it->second.terms()) img = img + (cv * gen_power(s, xexp));
      a.tau[s] = img;
    }
    return a;
  }

private:
  CoxGroup W_;
  mutable std::mutex cache_mutex_;
  mutable std::map<GroupElt, HeckeElt> kl_cache_;
};

}  // namespace singart
