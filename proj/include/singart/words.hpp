#pragma once

// Words in the singular Artin monoid alphabet {sigma_s, sigma_s^-1, tau_s},
// the defining relation list attached to a Coxeter matrix, and generic
// evaluation of words in any target monoid via a generator assignment.

#include "singart/coxeter.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace singart {

enum class LetterKind { Sigma, SigmaInv, Tau };

struct Letter {
  LetterKind kind;
  int label;  // Coxeter-matrix label

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline std::string letter_to_string(const Letter& l) {
  std::string prefix = l.kind == LetterKind::Sigma ? "s" : l.kind == LetterKind::SigmaInv ? "S" : "t";
  return prefix + std::to_string(l.label);
}

inline std::string word_to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += " ";
    out += letter_to_string(l);
  }
  return out;
}

/// Tokens: `s<i>` for sigma, `S<i>` for its inverse, `t<i>` for tau, where
/// <i> is a generator label of the ambient Coxeter matrix.
inline Word parse_word(const std::string& text, const CoxeterMatrix& M) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S' && tok[0] != 't'))
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    int label = std::stoi(tok.substr(1));
    if (!M.has_label(label))
      throw std::invalid_argument("parse_word: label out of range in '" + tok + "'");
    LetterKind kind = tok[0] == 's'   ? LetterKind::Sigma
                      : tok[0] == 'S' ? LetterKind::SigmaInv
                                      : LetterKind::Tau;
    w.push_back({kind, label});
  }
  return w;
}

struct Relation {
  Word lhs, rhs;
  std::string name;
};

namespace detail {

/// sigma_a sigma_b sigma_a ... with `count` factors.
inline Word alternating_sigmas(int a, int b, int count) {
  Word w;
  for (int i = 0; i < count; ++i) w.push_back({LetterKind::Sigma, i % 2 == 0 ? a : b});
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// Defining relations of the singular Artin monoid attached to M, together
/// with the cancellation relations for the inverse letters.  Pairs with an
/// infinite edge label contribute nothing.
inline std::vector<Relation> singular_relations(const CoxeterMatrix& M) {
  using detail::alternating_sigmas;
  using detail::concat;
  std::vector<Relation> rels;
  auto tag = [](const std::string& base, int s, int t) {
    return base + "(" + std::to_string(s) + "," + std::to_string(t) + ")";
  };
  for (int s : M.labels()) {
    rels.push_back({{{LetterKind::Sigma, s}, {LetterKind::SigmaInv, s}}, {}, tag("inv-right", s, s)});
    rels.push_back({{{LetterKind::SigmaInv, s}, {LetterKind::Sigma, s}}, {}, tag("inv-left", s, s)});
    rels.push_back({{{LetterKind::Tau, s}, {LetterKind::Sigma, s}},
                    {{LetterKind::Sigma, s}, {LetterKind::Tau, s}},
                    tag("tau-sigma-commute", s, s)});
  }
  const auto& labels = M.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i == j) continue;
      int s = labels[i], t = labels[j];
      int m = M.entry(s, t);
      if (m == kInfinity) continue;
      if (i < j)
        rels.push_back({alternating_sigmas(s, t, m), alternating_sigmas(t, s, m), tag("braid", s, t)});
      if (m % 2 == 1) {
        // tau_s sigma_t sigma_s ... sigma_s (m factors) = sigma_t ... sigma_s tau_t
        Word lhs = concat({{LetterKind::Tau, s}}, alternating_sigmas(t, s, m - 1));
        Word rhs = concat(alternating_sigmas(t, s, m - 1), {{LetterKind::Tau, t}});
        rels.push_back({lhs, rhs, tag("tau-braid-odd", s, t)});
      } else {
        // tau_s sigma_t ... sigma_t (m factors) = sigma_t ... sigma_t tau_s
        Word lhs = concat({{LetterKind::Tau, s}}, alternating_sigmas(t, s, m - 1));
        Word rhs = concat(alternating_sigmas(t, s, m - 1), {{LetterKind::Tau, s}});
        rels.push_back({lhs, rhs, tag("tau-braid-even", s, t)});
        if (m == 2 && i < j)
          rels.push_back({{{LetterKind::Tau, s}, {LetterKind::Tau, t}},
                          {{LetterKind::Tau, t}, {LetterKind::Tau, s}},
                          tag("tau-commute", s, t)});
      }
    }
  return rels;
}

/// Additional defining relations of the diagram-monoid quotients, encoded
/// as singular words: Sigma letters stand for the group-like generator
/// images, Tau letters for the idempotent-like ones.  Every displayed
/// relation is instantiated at all index translates the rank allows.
/// Families: FSTAR, ROOK, SIS, FBSTAR, BRAUER, BRAUER_B.
inline std::vector<Relation> extra_relations(const std::string& family, const CoxeterMatrix& M) {
  std::vector<Relation> rels;
  const auto& labels = M.labels();
  auto has = [&](int l) { return M.has_label(l); };
  auto sig = [](int l) { return Letter{LetterKind::Sigma, l}; };
  auto tau = [](int l) { return Letter{LetterKind::Tau, l}; };
  auto tag = [&](const std::string& base, int i) { return family + ":" + base + "(" + std::to_string(i) + ")"; };

  auto add_quotient_core = [&]() {
    // s_i^2 = e, t_i^2 = t_i, t_i t_{i+1} = t_{i+1} t_i, t_i s_i = t_i
    for (int i : labels) {
      rels.push_back({{sig(i), sig(i)}, {}, tag("unit-square", i)});
      rels.push_back({{tau(i), tau(i)}, {tau(i)}, tag("idempotent", i)});
      rels.push_back({{tau(i), sig(i)}, {tau(i)}, tag("absorb", i)});
      if (has(i + 1))
        rels.push_back({{tau(i), tau(i + 1)}, {tau(i + 1), tau(i)}, tag("adjacent-commute", i)});
    }
  };
  auto add_newsing = [&](int start) {
    // t_i t_{i+2} = t_i t_{i+1} t_{i+2}
    for (int i : labels)
      if (i >= start && has(i + 1) && has(i + 2))
        rels.push_back({{tau(i), tau(i + 2)}, {tau(i), tau(i + 1), tau(i + 2)}, tag("gap-fill", i)});
  };

  if (family == "FSTAR" || family == "FBSTAR") {
    add_quotient_core();
    if (family == "FBSTAR") {
      rels.push_back({{sig(1), tau(0), sig(1), tau(0)}, {tau(0), sig(1), tau(0), sig(1)}, family + ":rel1"});
      rels.push_back({{sig(0), tau(1), sig(0), tau(1)}, {tau(1), sig(0), tau(1), sig(0)}, family + ":rel2"});
      rels.push_back({{tau(0), tau(1)}, {sig(0), tau(1), sig(0), tau(1)}, family + ":rel3"});
    }
  } else if (family == "ROOK") {
    add_quotient_core();
    add_newsing(1);
  } else if (family == "SIS") {
    add_quotient_core();
    add_newsing(1);
    rels.push_back({{tau(0), sig(1), tau(0)}, {tau(1)}, family + ":fold"});
  } else if (family == "BRAUER" || family == "BRAUER_B") {
    int lo = family == "BRAUER" ? 1 : 1;  // rel-br.* indices stay positive in type B
    for (int i : labels) {
      if (i < lo) continue;
      rels.push_back({{sig(i), sig(i)}, {}, tag("unit-square", i)});
      rels.push_back({{tau(i), tau(i)}, {tau(i)}, tag("idempotent", i)});
      rels.push_back({{tau(i), sig(i)}, {tau(i)}, tag("absorb-right", i)});
      rels.push_back({{sig(i), tau(i)}, {tau(i)}, tag("absorb-left", i)});
      for (int j : {i - 1, i + 1}) {
        if (j < lo || !has(j)) continue;
        rels.push_back({{tau(i), tau(j), tau(i)}, {tau(i)}, tag("contract(" + std::to_string(j) + ")", i)});
        rels.push_back({{tau(i), tau(j), sig(i)}, {tau(i), sig(j)}, tag("slide-right(" + std::to_string(j) + ")", i)});
        rels.push_back({{sig(i), tau(j), tau(i)}, {sig(j), tau(i)}, tag("slide-left(" + std::to_string(j) + ")", i)});
      }
    }
    if (family == "BRAUER_B") {
      rels.push_back({{tau(0), tau(0)}, {tau(0)}, family + ":B0"});
      rels.push_back({{tau(1), tau(0), tau(1)}, {tau(1)}, family + ":B1"});
      rels.push_back({{tau(1), sig(0), tau(1)}, {tau(1)}, family + ":B1.5"});
      rels.push_back({{tau(0), tau(1), tau(0)}, {tau(0), sig(1), tau(0)}, family + ":B2"});
      rels.push_back({{sig(1), tau(0), sig(1), tau(0)}, {tau(0), sig(1), tau(0)}, family + ":B3a"});
      rels.push_back({{tau(0), sig(1), tau(0), sig(1)}, {tau(0), sig(1), tau(0)}, family + ":B3b"});
      rels.push_back({{tau(1), tau(0)}, {tau(1), sig(1), tau(0), sig(1)}, family + ":B4"});
      rels.push_back({{tau(0), tau(1)}, {sig(1), tau(0), sig(1), tau(1)}, family + ":B5"});
      rels.push_back({{tau(0), sig(0)}, {tau(0)}, family + ":B6a"});
      rels.push_back({{sig(0), tau(0)}, {tau(0)}, family + ":B6b"});
    }
  } else {
    throw std::invalid_argument("extra_relations: unknown family " + family);
  }
  return rels;
}

/// Images of the three letter families in some target monoid, indexed by
/// matrix label, plus the multiplication that combines them.  The inverse
/// images may be absent for targets where sigma_s is not invertible.
template <class T>
struct GeneratorAssignment {
  std::map<int, T> sigma;
  std::map<int, T> sigma_inv;  // may be empty
  std::map<int, T> tau;
  T identity;
  std::function<T(const T&, const T&)> mul;

  const T& image(const Letter& l) const {
    const std::map<int, T>* table = l.kind == LetterKind::Sigma     ? &sigma
                                    : l.kind == LetterKind::SigmaInv ? &sigma_inv
                                                                     : &tau;
    auto it = table->find(l.label);
    if (it == table->end())
      throw std::invalid_argument("GeneratorAssignment: no image for " + letter_to_string(l));
    return it->second;
  }
};

template <class T>
T evaluate(const GeneratorAssignment<T>& a, const Word& w) {
  T acc = a.identity;
  for (const auto& l : w) acc = a.mul(acc, a.image(l));
  return acc;
}

/// Deterministic word sampler.  Only letter kinds present in the
/// assignment alphabet make sense; callers pass the allowed kinds.
inline Word random_word(std::mt19937_64& rng, const CoxeterMatrix& M,
                        const std::vector<LetterKind>& kinds, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> kind_dist(0, kinds.size() - 1);
  std::uniform_int_distribution<std::size_t> lab_dist(0, M.labels().size() - 1);
  int len = len_dist(rng);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back({kinds[kind_dist(rng)], M.labels()[lab_dist(rng)]});
  return w;
}

}  // namespace singart
