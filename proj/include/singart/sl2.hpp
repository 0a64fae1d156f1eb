#pragma once

// Graded bimodules over the dual numbers D = C[x]/(x^2) at the scale where
// the identity functor is D itself and the wall-crossing object is D (x) D.
// Provides the two adjunction maps, total complexes of commuting squares,
// Gaussian-elimination minimization, and an exact chain-isomorphism test.
//
// Everything is exact: coefficients are rationals, invertibility is tested
// by determinant, and a failed isomorphism search is exhaustive.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace singart::sl2 {

using Rat = boost::multiprecision::cpp_rational;

/// Dense rational matrix, row-major; sizes stay tiny (at most 8x8).
struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (const Rat& v : a)
      if (v != 0) return false;
    return true;
  }

  friend QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("QMat: shape mismatch");
    QMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Rat& v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
      }
    return out;
  }

  friend QMat operator+(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat: shape mismatch");
    QMat out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
  }

  friend QMat operator-(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat: shape mismatch");
    QMat out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
  }

  friend QMat operator*(const Rat& c, const QMat& x) {
    QMat out = x;
    for (Rat& v : out.a) v *= c;
    return out;
  }

  friend bool operator==(const QMat&, const QMat&) = default;

  /// Determinant by Gaussian elimination over the rationals; 0x0 gives 1.
  Rat det() const {
    if (rows != cols) throw std::invalid_argument("QMat: det of non-square");
    QMat m = *this;
    Rat d = 1;
    for (int c = 0; c < cols; ++c) {
      int piv = -1;
      for (int r = c; r < rows; ++r)
        if (m.at(r, c) != 0) { piv = r; break; }
      if (piv < 0) return 0;
      if (piv != c) {
        for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
        d = -d;
      }
      d *= m.at(c, c);
      for (int r = c + 1; r < rows; ++r) {
        if (m.at(r, c) == 0) continue;
        Rat f = m.at(r, c) / m.at(c, c);
        for (int j = c; j < cols; ++j) m.at(r, j) -= f * m.at(c, j);
      }
    }
    return d;
  }
};

/// Basis of the kernel of m, as coefficient vectors.
inline std::vector<std::vector<Rat>> nullspace(const QMat& m) {
  QMat r = m;
  std::vector<int> pivot_col;
  int lead = 0;
  for (int row = 0; row < r.rows && lead < r.cols; ++row) {
    int piv = -1;
    while (lead < r.cols) {
      for (int i = row; i < r.rows; ++i)
        if (r.at(i, lead) != 0) { piv = i; break; }
      if (piv >= 0) break;
      ++lead;
    }
    if (piv < 0) break;
    for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
    Rat p = r.at(row, lead);
    for (int j = 0; j < r.cols; ++j) r.at(row, j) /= p;
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || r.at(i, lead) == 0) continue;
      Rat f = r.at(i, lead);
      for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivot_col.push_back(lead);
    ++lead;
  }
  std::vector<bool> is_pivot(r.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < r.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(r.cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Indecomposable summand: E is the regular bimodule D with basis {1, x};
/// S is D (x) D with basis {1(x)1, x(x)1, 1(x)x, x(x)x} and deg(1(x)1) = -1.
/// A shift of k subtracts k from every degree.
struct Summand {
  char kind = 'E';  // 'E' or 'S'
  int shift = 0;

  int dim() const { return kind == 'E' ? 2 : 4; }

  std::vector<int> degrees() const {
    if (kind == 'E') return {0 - shift, 2 - shift};
    return {-1 - shift, 1 - shift, 1 - shift, 3 - shift};
  }

  friend bool operator==(const Summand&, const Summand&) = default;
};

namespace detail {

inline QMat left_x(char kind) {
  if (kind == 'E') {
    QMat m(2, 2);
    m.at(1, 0) = 1;
    return m;
  }
  QMat m(4, 4);
  m.at(1, 0) = 1;
  m.at(3, 2) = 1;
  return m;
}

inline QMat right_x(char kind) {
  if (kind == 'E') return left_x('E');
  QMat m(4, 4);
  m.at(2, 0) = 1;
  m.at(3, 1) = 1;
  return m;
}

}  // namespace detail

/// Direct sum of shifted copies of E and S.
struct Bimod {
  std::vector<Summand> parts;

  static Bimod e(int shift = 0) { return Bimod{{Summand{'E', shift}}}; }
  static Bimod s(int shift = 0) { return Bimod{{Summand{'S', shift}}}; }

  int dim() const {
    int d = 0;
    for (const auto& p : parts) d += p.dim();
    return d;
  }

  int offset(std::size_t part) const {
    int d = 0;
    for (std::size_t i = 0; i < part; ++i) d += parts[i].dim();
    return d;
  }

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& p : parts)
      for (int d : p.degrees()) out.push_back(d);
    return out;
  }

  Bimod shifted(int k) const {
    Bimod out = *this;
    for (auto& p : out.parts) p.shift += k;
    return out;
  }

  static Bimod sum(const Bimod& x, const Bimod& y) {
    Bimod out = x;
    out.parts.insert(out.parts.end(), y.parts.begin(), y.parts.end());
    return out;
  }

  QMat left_action() const { return action(true); }
  QMat right_action() const { return action(false); }

  friend bool operator==(const Bimod&, const Bimod&) = default;

 private:
  QMat action(bool left) const {
    QMat m(dim(), dim());
    int off = 0;
    for (const auto& p : parts) {
      QMat b = left ? detail::left_x(p.kind) : detail::right_x(p.kind);
      for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) m.at(off + i, off + j) = b.at(i, j);
      off += p.dim();
    }
    return m;
  }
};

inline Bimod make_theta_e() { return Bimod::e(); }
inline Bimod make_theta_s() { return Bimod::s(); }
inline Bimod shift(const Bimod& m, int k) { return m.shifted(k); }

/// adj_s: 1 -> 1(x)x + x(x)1, degree +1 (so degree 0 as theta_e<-1> -> theta_s).
inline QMat adj_lower() {
  QMat m(4, 2);
  m.at(1, 0) = 1;
  m.at(2, 0) = 1;
  m.at(3, 1) = 1;
  return m;
}

/// adj^s: the multiplication map D (x) D -> D, degree +1.
inline QMat adj_upper() {
  QMat m(2, 4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  return m;
}

/// alpha_s = adj_s adj^s: 1(x)1 -> 1(x)x + x(x)1, degree +2.
inline QMat alpha_s() { return adj_lower() * adj_upper(); }

/// beta_counit = adj^s adj_s: 1 -> 2x, degree +2.
inline QMat beta_counit() { return adj_upper() * adj_lower(); }

inline bool is_bimodule_map(const Bimod& x, const Bimod& y, const QMat& f) {
  if (f.rows != y.dim() || f.cols != x.dim()) return false;
  return f * x.left_action() == y.left_action() * f &&
         f * x.right_action() == y.right_action() * f;
}

inline bool is_degree_zero(const Bimod& x, const Bimod& y, const QMat& f) {
  if (f.rows != y.dim() || f.cols != x.dim()) return false;
  std::vector<int> dx = x.degrees(), dy = y.degrees();
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j)
      if (f.at(i, j) != 0 && dy[i] != dx[j]) return false;
  return true;
}

/// Cochain complex of bimodules; d[i] maps obj[i] -> obj[i+1].
struct Complex {
  int lo = 0;
  std::vector<Bimod> obj;
  std::vector<QMat> d;

  void validate() const {
    if (d.size() + 1 != obj.size() && !(obj.empty() && d.empty()))
      throw std::invalid_argument("Complex: differential count mismatch");
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!is_bimodule_map(obj[i], obj[i + 1], d[i]))
        throw std::invalid_argument("Complex: differential is not a bimodule map");
      if (!is_degree_zero(obj[i], obj[i + 1], d[i]))
        throw std::invalid_argument("Complex: differential is not degree zero");
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (!(d[i + 1] * d[i]).is_zero()) throw std::invalid_argument("Complex: d^2 != 0");
  }
};

/// Commuting square A -> B, A -> C, B -> D, C -> D.
struct Square {
  Bimod A, B, C, D;
  QMat top;     // A -> B
  QMat left;    // A -> C
  QMat right;   // B -> D
  QMat bottom;  // C -> D
};

/// Total complex [A -> B + C -> D]; the vertical differential in the odd
/// column is negated so that d^2 = 0.
inline Complex total_complex(const Square& sq, int lo = 0) {
  if (!(sq.right * sq.top == sq.bottom * sq.left))
    throw std::invalid_argument("total_complex: square does not commute");
  Complex c;
  c.lo = lo;
  c.obj = {sq.A, Bimod::sum(sq.B, sq.C), sq.D};
  QMat d0(sq.B.dim() + sq.C.dim(), sq.A.dim());
  for (int i = 0; i < sq.top.rows; ++i)
    for (int j = 0; j < sq.top.cols; ++j) d0.at(i, j) = sq.top.at(i, j);
  for (int i = 0; i < sq.left.rows; ++i)
    for (int j = 0; j < sq.left.cols; ++j) d0.at(sq.B.dim() + i, j) = sq.left.at(i, j);
  QMat d1(sq.D.dim(), sq.B.dim() + sq.C.dim());
  for (int i = 0; i < sq.right.rows; ++i)
    for (int j = 0; j < sq.right.cols; ++j) d1.at(i, j) = sq.right.at(i, j);
  for (int i = 0; i < sq.bottom.rows; ++i)
    for (int j = 0; j < sq.bottom.cols; ++j) d1.at(i, sq.B.dim() + j) = -sq.bottom.at(i, j);
  c.d = {d0, d1};
  c.validate();
  return c;
}

namespace detail {

/// A degree-zero bimodule map between equal summands is a scalar multiple
/// of the identity; such a block can be cancelled when the scalar is nonzero.
struct Cancel {
  std::size_t pos;   // differential index
  std::size_t src;   // part of obj[pos]
  std::size_t dst;   // part of obj[pos + 1]
  Rat scalar;
};

inline bool find_cancel(const Complex& c, Cancel& out) {
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    const Bimod& x = c.obj[i];
    const Bimod& y = c.obj[i + 1];
    for (std::size_t q = 0; q < x.parts.size(); ++q)
      for (std::size_t p = 0; p < y.parts.size(); ++p) {
        if (!(x.parts[q] == y.parts[p])) continue;
        Rat s = c.d[i].at(y.offset(p), x.offset(q));
        if (s != 0) {
          out = {i, q, p, s};
          return true;
        }
      }
  }
  return false;
}

inline QMat drop_rows(const QMat& m, int from, int count) {
  QMat out(m.rows - count, m.cols);
  for (int i = 0, r = 0; i < m.rows; ++i) {
    if (i >= from && i < from + count) continue;
    for (int j = 0; j < m.cols; ++j) out.at(r, j) = m.at(i, j);
    ++r;
  }
  return out;
}

inline QMat drop_cols(const QMat& m, int from, int count) {
  QMat out(m.rows, m.cols - count);
  for (int j = 0, cc = 0; j < m.cols; ++j) {
    if (j >= from && j < from + count) continue;
    for (int i = 0; i < m.rows; ++i) out.at(i, cc) = m.at(i, j);
    ++cc;
  }
  return out;
}

}  // namespace detail

/// Gaussian elimination of contractible summand pairs; the result is
/// homotopy equivalent and has no invertible differential component left.
inline Complex minimize(Complex c) {
  c.validate();
  detail::Cancel k;
  while (detail::find_cancel(c, k)) {
    const Bimod& x = c.obj[k.pos];
    const Bimod& y = c.obj[k.pos + 1];
    int qo = x.offset(k.src), qd = x.parts[k.src].dim();
    int po = y.offset(k.dst), pd = y.parts[k.dst].dim();
    // d = [phi beta; gamma delta] with phi = scalar * id; keep delta - gamma phi^{-1} beta
    const QMat& d = c.d[k.pos];
    QMat nd(d.rows - pd, d.cols - qd);
    for (int i = 0, r = 0; i < d.rows; ++i) {
      if (i >= po && i < po + pd) continue;
      for (int j = 0, cc = 0; j < d.cols; ++j) {
        if (j >= qo && j < qo + qd) continue;
        Rat v = d.at(i, j);
        for (int t = 0; t < pd; ++t) v -= d.at(i, qo + t) * d.at(po + t, j) / k.scalar;
        nd.at(r, cc) = v;
        ++cc;
      }
      ++r;
    }
    if (k.pos > 0) c.d[k.pos - 1] = detail::drop_rows(c.d[k.pos - 1], qo, qd);
    if (k.pos + 1 < c.d.size()) c.d[k.pos + 1] = detail::drop_cols(c.d[k.pos + 1], po, pd);
    c.d[k.pos] = nd;
    c.obj[k.pos].parts.erase(c.obj[k.pos].parts.begin() + static_cast<long>(k.src));
    c.obj[k.pos + 1].parts.erase(c.obj[k.pos + 1].parts.begin() + static_cast<long>(k.dst));
  }
  // drop zero objects at either end
  while (!c.obj.empty() && c.obj.front().parts.empty()) {
    c.obj.erase(c.obj.begin());
    if (!c.d.empty()) c.d.erase(c.d.begin());
    ++c.lo;
  }
  while (!c.obj.empty() && c.obj.back().parts.empty()) {
    c.obj.pop_back();
    if (!c.d.empty()) c.d.pop_back();
  }
  c.validate();
  return c;
}

/// Basis of the space of degree-zero bimodule maps x -> y, built from the
/// hom spaces between indecomposables: maps out of S are free on the image
/// of 1(x)1, maps out of E land in the centralizer of x.
inline std::vector<QMat> hom_basis(const Bimod& x, const Bimod& y) {
  std::vector<QMat> out;
  auto embed = [&](std::size_t q, std::size_t p, const QMat& b) {
    QMat m(y.dim(), x.dim());
    int ro = y.offset(p), co = x.offset(q);
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) m.at(ro + i, co + j) = b.at(i, j);
    out.push_back(std::move(m));
  };
  for (std::size_t q = 0; q < x.parts.size(); ++q)
    for (std::size_t p = 0; p < y.parts.size(); ++p) {
      const Summand& a = x.parts[q];
      const Summand& b = y.parts[p];
      int k = b.shift - a.shift;  // degree of the underlying map
      if (a.kind == 'E' && b.kind == 'E') {
        if (k == 0) embed(q, p, QMat::identity(2));
        if (k == 2) embed(q, p, detail::left_x('E'));
      } else if (a.kind == 'S' && b.kind == 'S') {
        if (k == 0) embed(q, p, QMat::identity(4));
        if (k == 2) {
          embed(q, p, detail::left_x('S'));
          embed(q, p, detail::right_x('S'));
        }
        if (k == 4) embed(q, p, detail::left_x('S') * detail::right_x('S'));
      } else if (a.kind == 'E' && b.kind == 'S') {
        if (k == 1) embed(q, p, adj_lower());
        if (k == 3) {
          QMat m(4, 2);
          m.at(3, 0) = 1;  // 1 -> x(x)x
          embed(q, p, m);
        }
      } else {
        if (k == 1) embed(q, p, adj_upper());
        if (k == 3) {
          QMat m(2, 4);
          m.at(1, 0) = 1;  // 1(x)1 -> x
          embed(q, p, m);
        }
      }
    }
  return out;
}

struct IsoResult {
  bool iso = false;
  std::vector<QMat> maps;  // one invertible map per position when iso
};

namespace detail {

struct IsoEdge {
  std::size_t src, dst;
  QMat mx, my;  // the edge map in the first and second diagram
};

/// Shared search: find degree-zero bimodule maps f_i: xs[i] -> ys[i],
/// all invertible, with f_dst mx = my f_src for every edge. The compatible
/// maps are cut out by exact linear algebra; the invertibility search runs
/// over an integer grid large enough that the product of the determinant
/// polynomials cannot vanish on all of it without vanishing identically,
/// so a negative answer is exhaustive.
inline IsoResult iso_search(const std::vector<Bimod>& xs, const std::vector<Bimod>& ys,
                            const std::vector<IsoEdge>& edges) {
  std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    if (xs[i].dim() != ys[i].dim()) return {};
  if (m == 0) return {true, {}};

  std::vector<std::vector<QMat>> homs(m);
  std::vector<int> base(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    homs[i] = hom_basis(xs[i], ys[i]);
    base[i + 1] = base[i] + static_cast<int>(homs[i].size());
    if (homs[i].empty() && xs[i].dim() > 0) return {};
  }
  int nvars = base[m];

  int nrows = 0;
  for (const auto& e : edges) nrows += ys[e.dst].dim() * xs[e.src].dim();
  QMat sys(nrows, nvars);
  int row0 = 0;
  for (const auto& e : edges) {
    int bs = xs[e.src].dim();
    for (std::size_t t = 0; t < homs[e.dst].size(); ++t) {
      QMat lhs = homs[e.dst][t] * e.mx;
      for (int r = 0; r < lhs.rows; ++r)
        for (int cidx = 0; cidx < lhs.cols; ++cidx)
          sys.at(row0 + r * bs + cidx, base[e.dst] + static_cast<int>(t)) += lhs.at(r, cidx);
    }
    for (std::size_t t = 0; t < homs[e.src].size(); ++t) {
      QMat rhs = e.my * homs[e.src][t];
      for (int r = 0; r < rhs.rows; ++r)
        for (int cidx = 0; cidx < rhs.cols; ++cidx)
          sys.at(row0 + r * bs + cidx, base[e.src] + static_cast<int>(t)) -= rhs.at(r, cidx);
    }
    row0 += ys[e.dst].dim() * bs;
  }

  std::vector<std::vector<Rat>> ns = nullspace(sys);
  std::size_t r = ns.size();
  if (r == 0) {
    bool all_zero = true;
    for (std::size_t i = 0; i < m; ++i) all_zero = all_zero && xs[i].dim() == 0;
    return all_zero ? IsoResult{true, std::vector<QMat>(m)} : IsoResult{};
  }

  int total_dim = 0;
  for (std::size_t i = 0; i < m; ++i) total_dim += xs[i].dim();
  long grid = total_dim + 1;  // per-variable degree of the det product is <= total_dim
  double space = 1;
  for (std::size_t i = 0; i < r; ++i) space *= static_cast<double>(grid);
  if (space > 5e6) throw std::runtime_error("iso_search: search space too large");

  std::vector<long> coef(r, 0);
  auto build = [&](std::size_t pos) {
    QMat f(ys[pos].dim(), xs[pos].dim());
    for (std::size_t j = 0; j < r; ++j) {
      if (coef[j] == 0) continue;
      for (int t = base[pos]; t < base[pos + 1]; ++t) {
        if (ns[j][static_cast<std::size_t>(t)] == 0) continue;
        f = f + (Rat(coef[j]) * ns[j][static_cast<std::size_t>(t)]) *
                    homs[pos][static_cast<std::size_t>(t - base[pos])];
      }
    }
    return f;
  };
  while (true) {
    // advance odometer; the all-zero point is skipped as never invertible
    std::size_t j = 0;
    while (j < r && coef[j] == grid - 1) coef[j++] = 0;
    if (j == r) break;
    ++coef[j];
    std::vector<QMat> maps;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      QMat f = build(i);
      if (f.rows > 0 && f.det() == 0) ok = false;
      else maps.push_back(std::move(f));
    }
    if (ok) return {true, maps};
  }
  return {};
}

}  // namespace detail

/// Decides whether two complexes are isomorphic as complexes of graded
/// bimodules; a negative answer is exhaustive.
inline IsoResult complexes_isomorphic(const Complex& c1, const Complex& c2) {
  c1.validate();
  c2.validate();
  if (c1.lo != c2.lo || c1.obj.size() != c2.obj.size()) return {};
  std::vector<detail::IsoEdge> edges;
  for (std::size_t i = 0; i < c1.d.size(); ++i)
    edges.push_back({i, i + 1, c1.d[i], c2.d[i]});
  return detail::iso_search(c1.obj, c2.obj, edges);
}

/// Decides whether two commuting squares are isomorphic as diagrams, via
/// corner-wise invertible maps commuting with all four edges. This is
/// strictly finer than isomorphism of the total complexes: a total-complex
/// isomorphism may mix the two middle summands.
inline IsoResult squares_isomorphic(const Square& s1, const Square& s2) {
  std::vector<Bimod> xs = {s1.A, s1.B, s1.C, s1.D};
  std::vector<Bimod> ys = {s2.A, s2.B, s2.C, s2.D};
  std::vector<detail::IsoEdge> edges = {{0, 1, s1.top, s2.top},
                                        {0, 2, s1.left, s2.left},
                                        {1, 3, s1.right, s2.right},
                                        {2, 3, s1.bottom, s2.bottom}};
  return detail::iso_search(xs, ys, edges);
}

namespace detail {

inline int d3(int i, int j, int k) { return 4 * i + 2 * j + k; }

/// Change of basis from S<1> + S<-1> to D (x) D (x) D: the first copy embeds
/// as a (x) 1 (x) b, the second as a (x) x (x) b.
inline QMat theta_ss_iso() {
  // column order within each copy matches the S basis {1(x)1, x(x)1, 1(x)x, x(x)x}
  QMat p(8, 8);
  int c = 0;
  for (int mid : {0, 1}) {
    p.at(d3(0, mid, 0), c++) = 1;
    p.at(d3(1, mid, 0), c++) = 1;
    p.at(d3(0, mid, 1), c++) = 1;
    p.at(d3(1, mid, 1), c++) = 1;
  }
  return p;
}

inline QMat transpose(const QMat& m) {
  QMat out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

/// a (x) b -> a (x) adj(b) on D (x) D -> D (x) D (x) D.
inline QMat tensor_adj_right() {
  QMat f(8, 4);
  for (int i : {0, 1}) {
    f.at(d3(i, 0, 1), 2 * 0 + i) += 1;  // source index convention below
    f.at(d3(i, 1, 0), 2 * 0 + i) += 1;
    f.at(d3(i, 1, 1), 2 * 1 + i) += 1;
  }
  return f;
}

/// a (x) b -> adj(a) (x) b.
inline QMat tensor_adj_left() {
  QMat f(8, 4);
  for (int k : {0, 1}) {
    f.at(d3(0, 1, k), 2 * k + 0) += 1;
    f.at(d3(1, 0, k), 2 * k + 0) += 1;
    f.at(d3(1, 1, k), 2 * k + 1) += 1;
  }
  return f;
}

/// u (x) v (x) w -> u (x) xv (x) w + xu (x) v (x) w (alpha on the left pair).
inline QMat tensor_alpha_left() {
  QMat f(8, 8);
  for (int i : {0, 1})
    for (int j : {0, 1})
      for (int k : {0, 1}) {
        if (j == 0) f.at(d3(i, 1, k), d3(i, j, k)) += 1;
        if (i == 0) f.at(d3(1, j, k), d3(i, j, k)) += 1;
      }
  return f;
}

/// u (x) v (x) w -> u (x) xv (x) w + u (x) v (x) xw (alpha on the right pair).
inline QMat tensor_alpha_right() {
  QMat f(8, 8);
  for (int i : {0, 1})
    for (int j : {0, 1})
      for (int k : {0, 1}) {
        if (j == 0) f.at(d3(i, 1, k), d3(i, j, k)) += 1;
        if (k == 0) f.at(d3(i, j, 1), d3(i, j, k)) += 1;
      }
  return f;
}

}  // namespace detail

/// The square whose total complex represents theta-hat_s composed with the
/// derived shuffling functor: S<-1> -> S<1> vertically (alpha), and
/// S<-1> -> S<1> + S<-1> horizontally (id tensor adj).
inline Square square_74_lhs() {
  QMat p = detail::theta_ss_iso();
  QMat pt = detail::transpose(p);  // permutation matrix
  Square sq;
  sq.A = Bimod::s(-1);
  sq.B = Bimod::sum(Bimod::s(1), Bimod::s(-1));
  sq.C = Bimod::s(1);
  sq.D = sq.B.shifted(2);
  sq.top = pt * detail::tensor_adj_right();
  sq.left = alpha_s();
  sq.right = pt * detail::tensor_alpha_left() * p;
  sq.bottom = sq.top;
  return sq;
}

/// The opposite composition order: adj on the left tensor factor, alpha on
/// the right pair.
inline Square square_74_rhs() {
  QMat p = detail::theta_ss_iso();
  QMat pt = detail::transpose(p);
  Square sq;
  sq.A = Bimod::s(-1);
  sq.B = Bimod::sum(Bimod::s(1), Bimod::s(-1));
  sq.C = Bimod::s(1);
  sq.D = sq.B.shifted(2);
  sq.top = pt * detail::tensor_adj_left();
  sq.left = alpha_s();
  sq.right = pt * detail::tensor_alpha_right() * p;
  sq.bottom = sq.top;
  return sq;
}

/// E<-2> -> S<-1> -> S<1> with E below; the right vertical is twice left
/// multiplication by x.
inline Square square_76_lhs() {
  Square sq;
  sq.A = Bimod::e(-2);
  sq.B = Bimod::s(-1);
  sq.C = Bimod::e(0);
  sq.D = Bimod::s(1);
  sq.top = adj_lower();
  sq.left = beta_counit();
  sq.right = Rat(2) * detail::left_x('S');
  sq.bottom = adj_lower();
  return sq;
}

/// Same square with the right vertical replaced by twice right
/// multiplication by x; linearly independent from the other choice.
inline Square square_76_rhs() {
  Square sq = square_76_lhs();
  sq.right = Rat(2) * detail::right_x('S');
  return sq;
}

/// Cone of the map from [E<1> -> S<2>] to [S -> E<1>] whose middle component
/// is the identity of E<1>; minimizes to S -> S<2> with differential alpha.
inline Complex cone_of_xi() {
  Complex c;
  c.lo = 0;
  c.obj = {Bimod::sum(Bimod::e(1), Bimod::s(0)), Bimod::sum(Bimod::s(2), Bimod::e(1))};
  QMat d(6, 6);
  QMat madj = adj_lower();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) d.at(i, j) = -madj.at(i, j);
  d.at(4, 0) = 1;
  d.at(5, 1) = 1;
  QMat mu = adj_upper();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) d.at(4 + i, 2 + j) = mu.at(i, j);
  c.d = {d};
  c.validate();
  return c;
}

}  // namespace singart::sl2
