#include "singart/hecke.hpp"

#include "singart/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace singart;

TEST_CASE("quadratic relation and inverses") {
  for (auto [f, p] : {std::pair{Family::A, 3}, {Family::B, 2}, {Family::I2, 5}}) {
    HeckeAlgebra H{CoxGroup(f, p)};
    const CoxGroup& W = H.group();
    for (int s : W.matrix().labels()) {
      HeckeElt hs = H.std_basis(W.gen(s));
      // (H_s + v)(H_s - v^-1) = 0
      HeckeElt lhs = H.mul(hs, hs);
      HeckeElt expect = H.one() + ((v_pow(-1) - v_pow(1)) * hs);
      CHECK(lhs == expect);
      CHECK(H.mul_gen_inv(H.mul_gen(H.one(), s), s) == H.one());
      CHECK(H.mul_gen(H.mul_gen_inv(H.one(), s), s) == H.one());
    }
  }
}

TEST_CASE("standard basis multiplication respects lengths") {
  HeckeAlgebra H{CoxGroup(Family::A, 4)};
  const CoxGroup& W = H.group();
  for (const auto& w : W.elements())
    for (int s : W.matrix().labels()) {
      HeckeElt prod = H.mul_gen(H.std_basis(w), s);
      GroupElt ws = multiply(w, W.gen(s));
      if (!is_right_descent(w, s)) {
        CHECK(prod == H.std_basis(ws));
      } else {
        CHECK(prod.coeff(ws) == Laurent(1));
        CHECK(prod.coeff(w) == v_pow(-1) - v_pow(1));
        CHECK(prod.terms().size() == 2);
      }
    }
}

TEST_CASE("multiplication is associative") {
  HeckeAlgebra H{CoxGroup(Family::B, 2)};
  const CoxGroup& W = H.group();
  auto elems = W.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        HeckeElt ab_c = H.mul(H.mul(H.std_basis(a), H.std_basis(b)), H.std_basis(c));
        HeckeElt a_bc = H.mul(H.std_basis(a), H.mul(H.std_basis(b), H.std_basis(c)));
        CHECK(ab_c == a_bc);
      }
}

TEST_CASE("bar is an involution fixing the canonical basis") {
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 4}, {Family::I2, 6}}) {
    HeckeAlgebra H{CoxGroup(f, p)};
    const CoxGroup& W = H.group();
    for (const auto& w : W.elements()) {
      HeckeElt c = H.kl(w);
      CHECK(H.bar(c) == c);
      CHECK(H.bar(H.bar(H.std_basis(w))) == H.std_basis(w));
      // unitriangular with coefficients in vZ[v] below the top term
      CHECK(c.coeff(w) == Laurent(1));
      for (const auto& [x, cx] : c.terms())
        if (!(x == w)) {
          CHECK(cx.in_positive_part());
          CHECK(cx.nonnegative_coeffs());
          CHECK(length(x) < length(w));
        }
    }
  }
}

TEST_CASE("canonical basis of a generator") {
  for (auto [f, p] : {std::pair{Family::A, 3}, {Family::B, 2}, {Family::I2, 7}}) {
    HeckeAlgebra H{CoxGroup(f, p)};
    const CoxGroup& W = H.group();
    for (int s : W.matrix().labels())
      CHECK(H.kl(W.gen(s)) == H.std_basis(W.gen(s)) + (v_pow(1) * H.one()));
  }
}

TEST_CASE("dihedral canonical basis in closed form") {
  // in I2(m) every element below w appears with coefficient v^(l(w)-l(x))
  for (int m = 3; m <= 6; ++m) {
    HeckeAlgebra H{CoxGroup(Family::I2, m)};
    const CoxGroup& W = H.group();
    for (const auto& w : W.elements()) {
      int lw = length(w);
      HeckeElt expect;
      for (const auto& x : W.elements()) {
        int lx = length(x);
        // all shorter elements lie below w in Bruhat order here
        if (x == w) expect = expect + H.std_basis(x);
        else if (lx < lw) expect = expect + (v_pow(lw - lx) * H.std_basis(x));
      }
      CHECK(H.kl(w) == expect);
    }
  }
}

TEST_CASE("longest element canonical basis in type A3") {
  HeckeAlgebra H{CoxGroup(Family::A, 4)};
  const CoxGroup& W = H.group();
  GroupElt w0 = GroupElt::perm({4, 3, 2, 1});
  HeckeElt c = H.kl(w0);
  // all Kazhdan-Lusztig polynomials at the longest element are trivial
  for (const auto& x : W.elements()) CHECK(c.coeff(x) == v_pow(6 - length(x)));
}

TEST_CASE("upsilon images satisfy the defining relations") {
  std::vector<XPoly> weights = {
      parse_xpoly("1"), parse_xpoly("x"), parse_xpoly("v + x"),
      parse_xpoly("x^-1"), parse_xpoly("v^-1 + 2*x^2")};
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 3},
                      {Family::I2, 4}, {Family::I2, 5}, {Family::I2, 6}}) {
    HeckeAlgebra H{CoxGroup(f, p)};
    const CoxeterMatrix& M = H.group().matrix();
    auto rels = singular_relations(M);
    for (const auto& phi : weights) {
      HeckePhi hp;
      for (std::size_t k = 0; k < odd_components(M).size(); ++k)
        hp[static_cast<int>(k)] = phi;
      CHECK(check_relations(H.upsilon_assignment(hp), rels).empty());
    }
  }
}

TEST_CASE("the weight v + x sends tau to the canonical generator") {
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 5}}) {
    HeckeAlgebra H{CoxGroup(f, p)};
    const CoxGroup& W = H.group();
    const CoxeterMatrix& M = W.matrix();
    HeckePhi hp;
    for (std::size_t k = 0; k < odd_components(M).size(); ++k)
      hp[static_cast<int>(k)] = parse_xpoly("v + x");
    auto a = H.upsilon_assignment(hp);
    for (int s : M.labels()) CHECK(a.tau.at(s) == H.kl(W.gen(s)));
  }
}
