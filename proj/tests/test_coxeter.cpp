#include "singart/coxeter.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace singart;

namespace {

// Independent length oracle: BFS distance from the identity in the right
// Cayley graph.
std::map<GroupElt, int> cayley_lengths(const CoxGroup& W) {
  std::map<GroupElt, int> dist;
  dist[W.identity()] = 0;
  std::vector<GroupElt> frontier{W.identity()};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<GroupElt> next;
    for (const auto& g : frontier)
      for (int s : W.matrix().labels()) {
        GroupElt h = multiply(g, W.gen(s));
        if (dist.emplace(h, d).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return dist;
}

long long expected_order(Family f, int p) {
  if (f == Family::I2) return 2LL * p;
  long long r = 1;
  for (int i = 2; i <= p; ++i) r *= i;
  if (f == Family::B) r <<= p;
  return r;
}

}  // namespace

TEST_CASE("group orders match the classical formulas") {
  for (int n = 2; n <= 5; ++n)
    CHECK(CoxGroup(Family::A, n).elements().size() == static_cast<std::size_t>(expected_order(Family::A, n)));
  for (int n = 2; n <= 4; ++n)
    CHECK(CoxGroup(Family::B, n).elements().size() == static_cast<std::size_t>(expected_order(Family::B, n)));
  for (int m = 2; m <= 7; ++m)
    CHECK(CoxGroup(Family::I2, m).elements().size() == static_cast<std::size_t>(expected_order(Family::I2, m)));
}

TEST_CASE("reduced words agree with the Cayley-graph length oracle") {
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 5}, {Family::I2, 6}}) {
    CoxGroup W(f, p);
    auto dist = cayley_lengths(W);
    for (const auto& w : W.elements()) {
      auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == dist.at(w));
      CHECK(W.from_word(word) == w);
    }
  }
}

TEST_CASE("inverse and associativity") {
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 5}}) {
    CoxGroup W(f, p);
    auto elems = W.elements();
    for (const auto& w : elems) {
      CHECK(multiply(w, inverse(w)) == W.identity());
      CHECK(multiply(inverse(w), w) == W.identity());
    }
    // spot-check associativity on a deterministic sample
    for (std::size_t i = 0; i < elems.size(); i += 3)
      for (std::size_t j = 1; j < elems.size(); j += 5) {
        const auto& a = elems[i];
        const auto& b = elems[j];
        const auto& c = elems[(i + j) % elems.size()];
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      }
  }
}

TEST_CASE("generators satisfy the Coxeter matrix exponents") {
  for (auto [f, p] : {std::pair{Family::A, 5}, {Family::B, 4}, {Family::I2, 7}}) {
    CoxGroup W(f, p);
    const auto& M = W.matrix();
    for (int s : M.labels())
      for (int t : M.labels()) {
        GroupElt prod = W.identity();
        int m = M.entry(s, t);
        for (int i = 0; i < m; ++i) prod = multiply(prod, multiply(W.gen(s), W.gen(t)));
        // (st)^m = e, and no smaller positive power works for s != t
        CHECK(prod.is_identity());
        if (s != t && m > 2) {
          GroupElt part = multiply(W.gen(s), W.gen(t));
          GroupElt acc = part;
          for (int i = 1; i < m; ++i) {
            CHECK(!acc.is_identity());
            acc = multiply(acc, part);
          }
        }
      }
  }
}

TEST_CASE("descents match length differences") {
  for (auto [f, p] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::I2, 4}}) {
    CoxGroup W(f, p);
    auto dist = cayley_lengths(W);
    for (const auto& w : W.elements())
      for (int s : W.matrix().labels()) {
        GroupElt ws = multiply(w, W.gen(s));
        CHECK(is_right_descent(w, s) == (dist.at(ws) < dist.at(w)));
      }
  }
}

TEST_CASE("standard matrices") {
  CoxeterMatrix A = standard_matrix(Family::A, 4);
  CHECK(A.labels() == std::vector<int>{1, 2, 3});
  CHECK(A.entry(1, 2) == 3);
  CHECK(A.entry(1, 3) == 2);
  CoxeterMatrix B = standard_matrix(Family::B, 3);
  CHECK(B.labels() == std::vector<int>{0, 1, 2});
  CHECK(B.entry(0, 1) == 4);
  CHECK(B.entry(1, 2) == 3);
  CHECK(B.entry(0, 2) == 2);
  CoxeterMatrix I = standard_matrix(Family::I2, 6);
  CHECK(I.entry(1, 2) == 6);
}

TEST_CASE("matrix parsing") {
  CHECK(parse_coxeter_matrix("type=A n=4").labels() == standard_matrix(Family::A, 4).labels());
  CHECK(parse_coxeter_matrix("type=B n=3").entry(0, 1) == 4);
  CHECK(parse_coxeter_matrix("type=I m=5").entry(1, 2) == 5);
  CoxeterMatrix M = parse_coxeter_matrix("1 3 2  3 1 inf  2 inf 1");
  CHECK(M.entry(1, 2) == 3);
  CHECK(M.entry(2, 3) == kInfinity);
  CHECK_THROWS(parse_coxeter_matrix("1 3  2 1"));
}

TEST_CASE("odd skeleton components") {
  // A_{n-1}: single component (all edges labelled 3)
  auto KA = odd_components(standard_matrix(Family::A, 5));
  CHECK(KA.size() == 1);
  // B_n: {0} split off by the even edge, {1..n-1} joined
  auto KB = odd_components(standard_matrix(Family::B, 4));
  CHECK(KB.size() == 2);
  CHECK(KB.component_of.at(0) != KB.component_of.at(1));
  CHECK(KB.component_of.at(1) == KB.component_of.at(3));
  // I2(m): joined iff m is odd
  CHECK(odd_components(standard_matrix(Family::I2, 5)).size() == 1);
  CHECK(odd_components(standard_matrix(Family::I2, 6)).size() == 2);
}
