#include "singart/dualsym.hpp"

#include "singart/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace singart;

namespace {

template <class T>
Closure<T> close_over(const GeneratorAssignment<T>& a) {
  std::vector<T> gens;
  for (const auto& [s, g] : a.sigma) gens.push_back(g);
  for (const auto& [s, g] : a.tau) gens.push_back(g);
  return enumerate_closure<T>(gens, a.identity, a.mul);
}

}  // namespace

TEST_CASE("lambda satisfies the defining relations") {
  for (int n = 2; n <= 5; ++n) {
    auto fails = check_relations(lambda_assignment(n), singular_relations(standard_matrix(Family::A, n)));
    CHECK(fails.empty());
  }
  for (int n = 2; n <= 4; ++n) {
    auto fails = check_relations(lambda_b_assignment(n), singular_relations(standard_matrix(Family::B, n)));
    CHECK(fails.empty());
  }
}

TEST_CASE("lambda satisfies the quotient presentation") {
  for (int n = 2; n <= 4; ++n) {
    auto fails = check_relations(lambda_assignment(n), extra_relations("FSTAR", standard_matrix(Family::A, n)));
    CHECK(fails.empty());
  }
  for (int n = 2; n <= 3; ++n) {
    auto fails = check_relations(lambda_b_assignment(n), extra_relations("FBSTAR", standard_matrix(Family::B, n)));
    CHECK(fails.empty());
  }
}

TEST_CASE("generated monoid equals the direct construction, type A") {
  for (int n = 2; n <= 4; ++n) {
    auto cl = close_over(lambda_assignment(n));
    REQUIRE(!cl.capped);
    CHECK(cl.elements == fstar_direct(n));
  }
  // 3, 16, 131
  CHECK(fstar_direct(2).size() == 3);
  CHECK(fstar_direct(3).size() == 16);
  CHECK(fstar_direct(4).size() == 131);
}

TEST_CASE("generated monoid equals the direct construction, type B") {
  for (int n = 2; n <= 3; ++n) {
    auto cl = close_over(lambda_b_assignment(n));
    REQUIRE(!cl.capped);
    CHECK(cl.elements == fbstar_direct(n));
  }
  CHECK(fbstar_direct(2).size() == 27);
  CHECK(fbstar_direct(3).size() == 438);
}

TEST_CASE("projection completes essential relations") {
  BoolMat rho = parse_boolmat("1100 0110 0010 0001");
  BlockBijection b = pi_project(rho);
  // the first three points collapse into one block pair
  auto blocks = b.blocks();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].first == std::vector<int>{1, 2, 3});
  CHECK(blocks[0].second == std::vector<int>{1, 2, 3});
  CHECK_THROWS(pi_project(parse_boolmat("10 10")));
}

TEST_CASE("factorization recombines, type A") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : fstar_direct(n)) {
      REQUIRE(a.is_uniform());
      auto [sigma, xi] = factorize(a);
      CHECK(perm_block(sigma) * xi == a);
      // xi is the idempotent of the domain partition
      CHECK(xi * xi == xi);
    }
}

TEST_CASE("factorization recombines, type B") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : fbstar_direct(n)) {
      REQUIRE(a.is_uniform());
      auto [sigma, xi] = factorize_b(a);
      CHECK(signed_perm_block(sigma) * xi == a);
      CHECK(xi * xi == xi);
    }
}

TEST_CASE("idempotent tuple encoding round trips") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : ibstar_idempotents(n)) {
      CHECK(e * e == e);
      CHECK(tuple_to_idempotent(idempotent_to_tuple(e)) == e);
    }
  // distinct tuples give distinct idempotents
  std::set<BlockBijectionB> seen;
  for (const auto& e : ibstar_idempotents(3)) seen.insert(e);
  CHECK(seen.size() == ibstar_idempotents(3).size());
}

TEST_CASE("idempotent counts per rank") {
  // tuples (rho, Y, f): sum over partitions, Y unions of classes, signs
  // with the class minimum pinned to +
  auto count = [](int n) {
    BigInt total = 0;
    for (const auto& rho : all_partitions(n)) {
      BigInt prod = 1;
      for (const auto& cls : rho) prod *= (BigInt(1) << (cls.size() - 1)) + 1;
      total += prod;
    }
    return total;
  };
  for (int n = 1; n <= 4; ++n)
    CHECK(BigInt(ibstar_idempotents(n).size()) == count(n));
}

TEST_CASE("partition enumeration matches Bell numbers") {
  std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52};
  for (int n = 1; n <= 5; ++n) CHECK(all_partitions(n).size() == bell[n]);
}

TEST_CASE("uniformity detects rank defects") {
  BlockBijection e = idempotent_from_partition(3, {{1, 2}, {3}});
  CHECK(e.is_uniform());
  // join unequal block sizes: {1,2}|{3} against {1}|{2,3}
  BoolMat m(3);
  m.set(0, 0, true); m.set(0, 1, true);
  m.set(1, 0, true); m.set(1, 1, true);
  m.set(2, 2, true);
  BlockBijection f(m);
  BoolMat g(3);
  g.set(0, 0, true);
  g.set(1, 1, true); g.set(1, 2, true);
  g.set(2, 1, true); g.set(2, 2, true);
  BlockBijection h(g);
  CHECK((f * h).is_uniform());  // completion merges to equal sizes
}
