#pragma once

// Laurent polynomials in one variable with exact integer coefficients,
// plus the two-variable flavor (coefficients again Laurent) needed when a
// weight polynomial in x is paired with the quantum parameter v.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace singart {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[v, v^-1].  Zero coefficients are never stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) coeffs_[0] = c; }
  Laurent(const BigInt& c) { if (c != 0) coeffs_[0] = c; }

  static Laurent monomial(const BigInt& c, int exp) {
    Laurent p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) { return Laurent() - a; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [e1, c1] : a.coeffs_)
      for (const auto& [e2, c2] : b.coeffs_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend auto operator<=>(const Laurent&, const Laurent&) = default;

  /// v -> v^-1.
  Laurent bar() const {
    Laurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
    return out;
  }

  /// True when every exponent is strictly positive (membership in v Z[v]).
  bool in_positive_part() const {
    return coeffs_.empty() || coeffs_.begin()->first > 0;
  }

  bool nonnegative_coeffs() const {
    for (const auto& [e, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  std::string to_string(const std::string& var = "v") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      BigInt a = c;
      if (first) {
        if (a < 0) { out << "-"; a = -a; }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) out << a;
      else {
        if (a != 1) out << a << "*";
        out << var;
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

private:
  void add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, BigInt> coeffs_;
};

inline Laurent v_pow(int e) { return Laurent::monomial(1, e); }

namespace detail {

struct PolyToken {
  BigInt coeff;
  int vexp;
  int xexp;
};

/// Parses a sum of monomial terms like `2*v^-1*x^3`, `v`, `-x`, `5`.
/// Both `v` and `x` are accepted; callers decide which variables make
/// sense in their context.
inline std::vector<PolyToken> parse_poly_terms(const std::string& text) {
  std::vector<PolyToken> terms;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("parse_poly: expected + or - before term");
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    first = false;
    PolyToken t{BigInt(1), 0, 0};
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
        t.coeff *= BigInt(num);
        saw_factor = true;
      } else if (i < text.size() && (text[i] == 'v' || text[i] == 'x')) {
        char var = text[i++];
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          int s = 1;
          if (i < text.size() && (text[i] == '-' || text[i] == '+')) { if (text[i] == '-') s = -1; ++i; }
          std::string num;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
          if (num.empty()) throw std::invalid_argument("parse_poly: bad exponent");
          exp = s * std::stoi(num);
        }
        (var == 'v' ? t.vexp : t.xexp) += exp;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("parse_poly: empty term");
    t.coeff *= sign;
    terms.push_back(std::move(t));
    skip_ws();
  }
  return terms;
}

}  // namespace detail

/// Parses a one-variable Laurent polynomial; `v` and `x` are synonyms here.
inline Laurent parse_laurent(const std::string& text) {
  Laurent p;
  for (const auto& t : detail::parse_poly_terms(text))
    p += Laurent::monomial(t.coeff, t.vexp + t.xexp);
  return p;
}

/// Laurent polynomial in x with coefficients in Z[v, v^-1].  Used for
/// weights evaluated inside the Hecke algebra, where the x-degree turns
/// into a generator power and the coefficient stays scalar.
class XPoly {
public:
  XPoly() = default;
  XPoly(const Laurent& scalar) { if (!scalar.is_zero()) terms_[0] = scalar; }

  static XPoly monomial(const Laurent& c, int xexp) {
    XPoly p;
    if (!c.is_zero()) p.terms_[xexp] = c;
    return p;
  }

  const std::map<int, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XPoly& operator+=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }

  friend bool operator==(const XPoly&, const XPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << c.to_string() << ")";
      if (e != 0) {
        out << "*x";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

private:
  std::map<int, Laurent> terms_;
};

inline XPoly parse_xpoly(const std::string& text) {
  XPoly p;
  for (const auto& t : detail::parse_poly_terms(text))
    p += XPoly::monomial(Laurent::monomial(t.coeff, t.vexp), t.xexp);
  return p;
}

}  // namespace singart
