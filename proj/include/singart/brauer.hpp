#pragma once

// Brauer diagrams, partial and Z2-colored partial Brauer diagrams, type B
// Brauer diagrams, their multiplications with exact loop-count bookkeeping,
// the chi letter assignments, the colored-diagram translation of the type B
// monoid, and defects / normal forms.
//
// Point indexing: a diagram on two rows of R points stores a matching as an
// involution on 2R indices, top row 0..R-1 left-to-right, bottom ("primed")
// row R..2R-1.  For type A rows, index i stands for the point i+1.  For
// type B rows, R = 2n and the row order is -n..-1, 1..n (see signed_index).
// match[p] == p marks a singleton (partial diagrams only).
//
// Gluing order: in a*b, diagram a sits on top and its primed row is
// identified with b's plain row, as in the worked multiplication example
// of the source presentation of the monoid.

#include "singart/binrel.hpp"
#include "singart/coxeter.hpp"
#include "singart/words.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace singart {

struct ScalarExponents {
  long k_closed = 0;
  long k_open = 0;
  std::array<long, 2> k_by_color{0, 0};

  ScalarExponents& operator+=(const ScalarExponents& o) {
    k_closed += o.k_closed;
    k_open += o.k_open;
    k_by_color[0] += o.k_by_color[0];
    k_by_color[1] += o.k_by_color[1];
    return *this;
  }
  friend bool operator==(const ScalarExponents&, const ScalarExponents&) = default;
};

namespace detail {

inline void check_involution(const std::vector<int>& match, bool allow_fixed) {
  for (int i = 0; i < static_cast<int>(match.size()); ++i) {
    int j = match[i];
    if (j < 0 || j >= static_cast<int>(match.size()) || match[j] != i || (!allow_fixed && j == i))
      throw std::invalid_argument("diagram: not a valid matching");
  }
}

struct GlueResult {
  std::vector<int> match;                 // matching on result points
  std::map<std::pair<int, int>, int> color;  // colors of result 2-blocks
  ScalarExponents exp;
};

/// Glues two diagrams over rows of width R.  `acolor`/`bcolor` may be
/// null for uncolored diagrams; `colored` switches loop bookkeeping
/// between k_closed and k_by_color.
inline GlueResult glue(int R, const std::vector<int>& amatch, const std::vector<int>& bmatch,
                       const std::map<std::pair<int, int>, int>* acolor,
                       const std::map<std::pair<int, int>, int>* bcolor, bool colored) {
  // Combined vertex space: a's points 0..2R-1, b's points 2R..4R-1.
  // Interface edges join a's bottom R+j with b's top 2R+j.
  auto edge_color = [&](bool in_a, int p, int q) -> int {
    const auto* c = in_a ? acolor : bcolor;
    if (!c) return 0;
    auto it = c->find({std::min(p, q), std::max(p, q)});
    return it == c->end() ? 0 : it->second;
  };
  std::vector<bool> visited(4 * R, false);
  GlueResult out;
  out.match.assign(2 * R, 0);
  auto is_external = [&](int v) { return v < R || v >= 3 * R; };
  auto to_result = [&](int v) { return v < R ? v : v - 2 * R; };

  // Walks from vertex v (not across its diagram edge first if from_interface
  // is false).  Returns the terminal vertex and accumulates color.
  auto diagram_step = [&](int v) -> int {
    // follow the matching edge inside v's own diagram
    if (v < 2 * R) {
      int m = amatch[v];
      return m;
    }
    int m = bmatch[v - 2 * R];
    return m + 2 * R;
  };
  auto interface_partner = [&](int v) -> int {
    // a-bottom R..2R-1 <-> b-top 2R..3R-1
    if (v >= R && v < 2 * R) return v + R;
    if (v >= 2 * R && v < 3 * R) return v - R;
    return -1;
  };

  // Phase 1: paths starting at external vertices.
  for (int start = 0; start < 4 * R; ++start) {
    if (!is_external(start) || visited[start]) continue;
    visited[start] = true;
    int v = start;
    int color_sum = 0;
    int terminal = -1;  // external endpoint, or -1 when the path dies
    while (true) {
      int w = diagram_step(v);
      if (w == v) {  // singleton stops the path
        terminal = -1;
        break;
      }
      bool in_a = v < 2 * R;
      color_sum += edge_color(in_a, in_a ? v : v - 2 * R, in_a ? w : w - 2 * R);
      visited[w] = true;
      if (is_external(w)) {
        terminal = w;
        break;
      }
      int x = interface_partner(w);
      visited[x] = true;
      v = x;
    }
    int rp = to_result(start);
    if (terminal < 0) {
      out.match[rp] = rp;  // singleton in the result
    } else {
      int rq = to_result(terminal);
      out.match[rp] = rq;
      out.match[rq] = rp;
      if (colored && color_sum % 2 != 0)
        out.color[{std::min(rp, rq), std::max(rp, rq)}] = 1;
      visited[terminal] = true;
    }
  }

  // Phase 2: components supported entirely on the interface.
  for (int start = R; start < 3 * R; ++start) {
    if (visited[start] || interface_partner(start) < 0) continue;
    // walk forward until we close a loop or die at singletons on both ends
    int v = start;
    int color_sum = 0;
    bool closed = false;
    visited[v] = true;
    while (true) {
      int w = diagram_step(v);
      if (w == v) break;  // open end
      bool in_a = v < 2 * R;
      color_sum += edge_color(in_a, in_a ? v : v - 2 * R, in_a ? w : w - 2 * R);
      if (w == start || visited[w]) {  // closed the loop
        closed = true;
        break;
      }
      visited[w] = true;
      v = interface_partner(w);
      if (v == start) { closed = true; break; }
      visited[v] = true;
    }
    if (!closed) {
      // walk the other direction from start's interface partner
      int u = interface_partner(start);
      if (!visited[u]) {
        visited[u] = true;
        v = u;
        while (true) {
          int w = diagram_step(v);
          if (w == v) break;
          bool in_a = v < 2 * R;
          color_sum += edge_color(in_a, in_a ? v : v - 2 * R, in_a ? w : w - 2 * R);
          visited[w] = true;
          v = interface_partner(w);
          if (visited[v]) break;
          visited[v] = true;
        }
      }
      out.exp.k_open += 1;
    } else {
      if (colored) out.exp.k_by_color[((color_sum % 2) + 2) % 2] += 1;
      else out.exp.k_closed += 1;
    }
  }
  return out;
}

}  // namespace detail

class BrauerDiagram {
public:
  BrauerDiagram() = default;

  BrauerDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (static_cast<int>(match_.size()) != 2 * n) throw std::invalid_argument("BrauerDiagram: size");
    detail::check_involution(match_, false);
  }

  static BrauerDiagram identity(int n) {
    std::vector<int> m(2 * n);
    for (int i = 0; i < n; ++i) { m[i] = n + i; m[n + i] = i; }
    return BrauerDiagram(n, std::move(m));
  }

  /// Diagram of a permutation: bottom point j joins top point w(j).
  static BrauerDiagram from_perm(const GroupElt& w) {
    int n = w.degree();
    std::vector<int> m(2 * n);
    for (int j = 1; j <= n; ++j) { m[n + j - 1] = w.image(j) - 1; m[w.image(j) - 1] = n + j - 1; }
    return BrauerDiagram(n, std::move(m));
  }

  /// Hook generator: arcs {i, i+1} on both rows, 1-based label.
  static BrauerDiagram hook(int n, int label) {
    BrauerDiagram d = identity(n);
    int i = label - 1;
    d.match_[i] = i + 1; d.match_[i + 1] = i;
    d.match_[n + i] = n + i + 1; d.match_[n + i + 1] = n + i;
    return d;
  }

  int n() const { return n_; }
  const std::vector<int>& match() const { return match_; }

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
  int n_ = 0;
  std::vector<int> match_;
};

inline std::pair<BrauerDiagram, ScalarExponents> mul_brauer(const BrauerDiagram& a,
                                                            const BrauerDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mul_brauer: size mismatch");
  auto g = detail::glue(a.n(), a.match(), b.match(), nullptr, nullptr, false);
  return {BrauerDiagram(a.n(), std::move(g.match)), g.exp};
}

class PartialBrauerDiagram {
public:
  PartialBrauerDiagram() = default;

  PartialBrauerDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (static_cast<int>(match_.size()) != 2 * n)
      throw std::invalid_argument("PartialBrauerDiagram: size");
    detail::check_involution(match_, true);
  }

  static PartialBrauerDiagram identity(int n) {
    return PartialBrauerDiagram(n, BrauerDiagram::identity(n).match());
  }

  static PartialBrauerDiagram from_brauer(const BrauerDiagram& d) {
    return PartialBrauerDiagram(d.n(), d.match());
  }

  int n() const { return n_; }
  const std::vector<int>& match() const { return match_; }

  friend bool operator==(const PartialBrauerDiagram&, const PartialBrauerDiagram&) = default;
  friend auto operator<=>(const PartialBrauerDiagram&, const PartialBrauerDiagram&) = default;

private:
  int n_ = 0;
  std::vector<int> match_;
};

inline std::pair<PartialBrauerDiagram, ScalarExponents> mul_partial(const PartialBrauerDiagram& a,
                                                                    const PartialBrauerDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mul_partial: size mismatch");
  auto g = detail::glue(a.n(), a.match(), b.match(), nullptr, nullptr, false);
  return {PartialBrauerDiagram(a.n(), std::move(g.match)), g.exp};
}

/// Partial Brauer diagram with a Z2 color on every 2-element block; blocks
/// with color 0 are not stored.
class ColoredPartialBrauer {
public:
  ColoredPartialBrauer() = default;

  ColoredPartialBrauer(PartialBrauerDiagram d, std::map<std::pair<int, int>, int> color)
      : d_(std::move(d)), color_(std::move(color)) {
    for (auto it = color_.begin(); it != color_.end();) {
      auto [p, q] = it->first;
      if (p >= q || d_.match()[p] != q)
        throw std::invalid_argument("ColoredPartialBrauer: color on a non-block");
      if (it->second % 2 == 0) it = color_.erase(it);
      else { it->second = 1; ++it; }
    }
  }

  static ColoredPartialBrauer identity(int n) {
    return ColoredPartialBrauer(PartialBrauerDiagram::identity(n), {});
  }

  const PartialBrauerDiagram& diagram() const { return d_; }
  const std::map<std::pair<int, int>, int>& colors() const { return color_; }

  int color_of(int p, int q) const {
    auto it = color_.find({std::min(p, q), std::max(p, q)});
    return it == color_.end() ? 0 : it->second;
  }

  friend bool operator==(const ColoredPartialBrauer&, const ColoredPartialBrauer&) = default;
  friend auto operator<=>(const ColoredPartialBrauer&, const ColoredPartialBrauer&) = default;

private:
  PartialBrauerDiagram d_;
  std::map<std::pair<int, int>, int> color_;
};

inline std::pair<ColoredPartialBrauer, ScalarExponents> mul_colored(const ColoredPartialBrauer& a,
                                                                    const ColoredPartialBrauer& b) {
  if (a.diagram().n() != b.diagram().n()) throw std::invalid_argument("mul_colored: size mismatch");
  auto g = detail::glue(a.diagram().n(), a.diagram().match(), b.diagram().match(), &a.colors(),
                        &b.colors(), true);
  return {ColoredPartialBrauer(PartialBrauerDiagram(a.diagram().n(), std::move(g.match)),
                               std::move(g.color)),
          g.exp};
}

/// Type B Brauer diagram: bar-equivariant fixed-point-free matching on
/// 4n points; each row has width 2n in the order -n..-1, 1..n.
class BrauerBDiagram {
public:
  BrauerBDiagram() = default;

  BrauerBDiagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
    if (static_cast<int>(match_.size()) != 4 * n) throw std::invalid_argument("BrauerBDiagram: size");
    detail::check_involution(match_, false);
    for (int p = 0; p < 4 * n; ++p)
      if (match_[bar(p)] != bar(match_[p]))
        throw std::invalid_argument("BrauerBDiagram: not bar-equivariant");
  }

  int bar(int p) const { return p < 2 * n_ ? 2 * n_ - 1 - p : 6 * n_ - 1 - p; }

  static BrauerBDiagram identity(int n) {
    std::vector<int> m(4 * n);
    for (int i = 0; i < 2 * n; ++i) { m[i] = 2 * n + i; m[2 * n + i] = i; }
    return BrauerBDiagram(n, std::move(m));
  }

  static BrauerBDiagram from_signed_perm(const GroupElt& w) {
    int n = w.degree();
    std::vector<int> m(4 * n);
    for (int j = 1; j <= n; ++j)
      for (int s : {1, -1}) {
        int top = signed_index(n, s * w.image(j));
        int bot = 2 * n + signed_index(n, s * j);
        m[bot] = top;
        m[top] = bot;
      }
    return BrauerBDiagram(n, std::move(m));
  }

  /// Hook generators: label >= 1 joins {i, i+1} and {-i, -(i+1)} on both
  /// rows; label 0 joins {-1, 1} on both rows.
  static BrauerBDiagram hook(int n, int label) {
    BrauerBDiagram d = identity(n);
    auto arc = [&](int a, int b) {
      int ta = signed_index(n, a), tb = signed_index(n, b);
      d.match_[ta] = tb; d.match_[tb] = ta;
      d.match_[2 * n + ta] = 2 * n + tb; d.match_[2 * n + tb] = 2 * n + ta;
    };
    if (label == 0) arc(-1, 1);
    else { arc(label, label + 1); arc(-label, -(label + 1)); }
    return d;
  }

  int n() const { return n_; }
  const std::vector<int>& match() const { return match_; }

  friend bool operator==(const BrauerBDiagram&, const BrauerBDiagram&) = default;
  friend auto operator<=>(const BrauerBDiagram&, const BrauerBDiagram&) = default;

private:
  int n_ = 0;
  std::vector<int> match_;
};

inline std::pair<BrauerBDiagram, ScalarExponents> mul_brauer_b(const BrauerBDiagram& a,
                                                               const BrauerBDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mul_brauer_b: size mismatch");
  auto g = detail::glue(2 * a.n(), a.match(), b.match(), nullptr, nullptr, false);
  return {BrauerBDiagram(a.n(), std::move(g.match)), g.exp};  // ctor re-checks equivariance
}

/// chi at diagram level (exponents dropped), for relation checking.
inline GeneratorAssignment<BrauerDiagram> chi_assignment(int n) {
  GeneratorAssignment<BrauerDiagram> a;
  a.identity = BrauerDiagram::identity(n);
  a.mul = [](const BrauerDiagram& x, const BrauerDiagram& y) { return mul_brauer(x, y).first; };
  for (int i = 1; i <= n - 1; ++i) {
    a.sigma[i] = BrauerDiagram::from_perm(generator(Family::A, n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = BrauerDiagram::hook(n, i);
  }
  return a;
}

inline GeneratorAssignment<BrauerBDiagram> chi_b_assignment(int n) {
  GeneratorAssignment<BrauerBDiagram> a;
  a.identity = BrauerBDiagram::identity(n);
  a.mul = [](const BrauerBDiagram& x, const BrauerBDiagram& y) { return mul_brauer_b(x, y).first; };
  for (int i = 0; i <= n - 1; ++i) {
    a.sigma[i] = BrauerBDiagram::from_signed_perm(generator(Family::B, n, i));
    a.sigma_inv[i] = a.sigma[i];
    a.tau[i] = BrauerBDiagram::hook(n, i);
  }
  return a;
}

/// Evaluation with exponent accumulation.
inline std::pair<BrauerDiagram, ScalarExponents> chi_eval(const Word& w, int n) {
  auto a = chi_assignment(n);
  BrauerDiagram acc = a.identity;
  ScalarExponents exp;
  for (const auto& l : w) {
    auto [d, e] = mul_brauer(acc, a.image(l));
    acc = std::move(d);
    exp += e;
  }
  return {acc, exp};
}

inline std::pair<BrauerBDiagram, ScalarExponents> chi_b_eval(const Word& w, int n) {
  auto a = chi_b_assignment(n);
  BrauerBDiagram acc = a.identity;
  ScalarExponents exp;
  for (const auto& l : w) {
    auto [d, e] = mul_brauer_b(acc, a.image(l));
    acc = std::move(d);
    exp += e;
  }
  return {acc, exp};
}

// ---------------------------------------------------------------------------
// Translation between type B Brauer diagrams and Z2-colored partial Brauer
// diagrams on the positive points.

inline ColoredPartialBrauer to_apb(const BrauerBDiagram& d) {
  int n = d.n();
  std::vector<int> m(2 * n);
  std::map<std::pair<int, int>, int> color;
  // signed point value of a combined index
  auto value = [&](int p) { return p < 2 * n ? signed_value(n, p) : signed_value(n, p - 2 * n); };
  auto is_top = [&](int p) { return p < 2 * n; };
  // positive-point result index
  auto pos_index = [&](int p) {
    int v = std::abs(value(p));
    return is_top(p) ? v - 1 : n + v - 1;
  };
  for (int p = 0; p < 4 * n; ++p) {
    int q = d.match()[p];
    if (value(p) < 0) continue;  // work from the positive representative
    int rp = pos_index(p);
    if (q == d.bar(p)) {  // i joined with -i (same row): singleton
      m[rp] = rp;
      continue;
    }
    int rq = pos_index(q);
    m[rp] = rq;
    m[rq] = rp;
    if (value(q) < 0) color[{std::min(rp, rq), std::max(rp, rq)}] = 1;
  }
  return ColoredPartialBrauer(PartialBrauerDiagram(n, std::move(m)), std::move(color));
}

inline BrauerBDiagram from_apb(const ColoredPartialBrauer& c) {
  int n = c.diagram().n();
  std::vector<int> m(4 * n, -1);
  auto combined = [&](int rp, int sign) {
    // result index back to the signed combined index
    int v = rp < n ? rp + 1 : rp - n + 1;
    int idx = signed_index(n, sign * v);
    return rp < n ? idx : 2 * n + idx;
  };
  auto link = [&](int a, int b) { m[a] = b; m[b] = a; };
  for (int rp = 0; rp < 2 * n; ++rp) {
    int rq = c.diagram().match()[rp];
    if (rq == rp) {
      link(combined(rp, 1), combined(rp, -1));
      continue;
    }
    if (rq < rp) continue;
    int s = c.color_of(rp, rq) == 1 ? -1 : 1;
    link(combined(rp, 1), combined(rq, s));
    link(combined(rp, -1), combined(rq, -s));
  }
  return BrauerBDiagram(n, std::move(m));
}

// ---------------------------------------------------------------------------
// Defects and normal form of type B diagrams.

/// Absolute values of top points matched within the top row.
inline std::set<int> left_defect(const BrauerBDiagram& d) {
  std::set<int> out;
  int n = d.n();
  for (int p = 0; p < 2 * n; ++p)
    if (d.match()[p] < 2 * n) out.insert(std::abs(signed_value(n, p)));
  return out;
}

inline std::set<int> right_defect(const BrauerBDiagram& d) {
  std::set<int> out;
  int n = d.n();
  for (int p = 2 * n; p < 4 * n; ++p)
    if (d.match()[p] >= 2 * n) out.insert(std::abs(signed_value(n, p - 2 * n)));
  return out;
}

struct BrauerBNormalForm {
  BrauerBDiagram left_idempotent;
  GroupElt unit;  // signed permutation witness
  BrauerBDiagram right_idempotent;
};

/// d = e_L * sigma * e_R with e_L carrying d's top arcs (mirrored to its
/// own bottom), e_R carrying d's bottom arcs (mirrored to its own top),
/// and sigma the through-strand map extended over the defects by matching
/// sorted right-defect values to sorted left-defect values with + signs.
inline BrauerBNormalForm normal_form(const BrauerBDiagram& d) {
  int n = d.n();
  std::vector<int> el(4 * n), er(4 * n);
  auto ident = BrauerBDiagram::identity(n).match();
  el = ident;
  er = ident;
  for (int p = 0; p < 2 * n; ++p) {
    int q = d.match()[p];
    if (q < 2 * n && p < q) {  // top arc {p, q}
      el[p] = q; el[q] = p;
      el[2 * n + p] = 2 * n + q; el[2 * n + q] = 2 * n + p;
    }
  }
  for (int p = 2 * n; p < 4 * n; ++p) {
    int q = d.match()[p];
    if (q >= 2 * n && p < q) {  // bottom arc
      er[p] = q; er[q] = p;
      er[p - 2 * n] = q - 2 * n; er[q - 2 * n] = p - 2 * n;
    }
  }
  std::vector<int> img(n, 0);
  for (int p = 2 * n; p < 4 * n; ++p) {  // through strands: bottom -> top
    int q = d.match()[p];
    if (q >= 2 * n) continue;
    int from = signed_value(n, p - 2 * n), to = signed_value(n, q);
    if (from > 0) img[from - 1] = to;
  }
  std::set<int> ldef = left_defect(d), rdef = right_defect(d);
  std::vector<int> dl(ldef.begin(), ldef.end());
  std::vector<int> dr(rdef.begin(), rdef.end());
  if (dl.size() != dr.size()) throw std::logic_error("normal_form: defect size mismatch");
  for (std::size_t k = 0; k < dl.size(); ++k) img[dr[k] - 1] = dl[k];
  return {BrauerBDiagram(n, std::move(el)), GroupElt::signed_perm(std::move(img)),
          BrauerBDiagram(n, std::move(er))};
}

// ---------------------------------------------------------------------------
// Exhaustive diagram sets (enumeration oracles live in tests via
// count_equivariant_involutions; these produce the actual elements).

inline std::vector<BrauerDiagram> all_brauer(int n) {
  std::vector<BrauerDiagram> out;
  std::vector<int> m(2 * n, -1);
  std::function<void()> go = [&]() {
    int p = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (m[i] < 0) { p = i; break; }
    if (p < 0) {
      out.push_back(BrauerDiagram(n, m));
      return;
    }
    for (int q = p + 1; q < 2 * n; ++q)
      if (m[q] < 0) {
        m[p] = q; m[q] = p;
        go();
        m[p] = m[q] = -1;
      }
  };
  go();
  return out;
}

inline std::vector<BrauerBDiagram> all_brauer_b(int n) {
  std::vector<BrauerBDiagram> out;
  BrauerBDiagram probe = BrauerBDiagram::identity(n);
  std::vector<int> m(4 * n, -1);
  std::function<void()> go = [&]() {
    int p = -1;
    for (int i = 0; i < 4 * n; ++i)
      if (m[i] < 0) { p = i; break; }
    if (p < 0) {
      out.push_back(BrauerBDiagram(n, m));
      return;
    }
    for (int q = 0; q < 4 * n; ++q) {
      if (q == p || m[q] >= 0) continue;
      int bp = probe.bar(p), bq = probe.bar(q);
      if (bp == p || bq == q) continue;  // bar has no fixed points here anyway
      if (bp == q) {
        // self-barred edge {p, bar(p)}
        m[p] = q; m[q] = p;
        go();
        m[p] = m[q] = -1;
      } else if (m[bp] < 0 && m[bq] < 0) {
        m[p] = q; m[q] = p; m[bp] = bq; m[bq] = bp;
        go();
        m[p] = m[q] = m[bp] = m[bq] = -1;
      }
    }
  };
  go();
  return out;
}

}  // namespace singart
