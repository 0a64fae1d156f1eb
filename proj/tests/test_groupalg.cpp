#include "singart/groupalg.hpp"

#include "singart/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace singart;

namespace {

std::vector<CoxGroup> test_groups() {
  std::vector<CoxGroup> out;
  out.emplace_back(Family::A, 4);
  out.emplace_back(Family::B, 3);
  for (int m = 3; m <= 6; ++m) out.emplace_back(Family::I2, m);
  return out;
}

}  // namespace

TEST_CASE("group algebra arithmetic") {
  CoxGroup W(Family::A, 3);
  IntGroupAlgElt e = IntGroupAlgElt::basis(W.identity());
  IntGroupAlgElt s = IntGroupAlgElt::basis(W.gen(1));
  CHECK(s * s == e);           // generators are involutions
  IntGroupAlgElt sum = s + s;
  CHECK(sum.support().at(W.gen(1)) == 2);
  CHECK((sum * sum).support().at(W.identity()) == 4);
  // zero coefficients vanish from the support
  IntGroupAlgElt z = IntGroupAlgElt::basis(W.gen(1), 1);
  z.add(W.gen(1), -1);
  CHECK(z.support().empty());
}

TEST_CASE("involution substitution splits by parity") {
  CoxGroup W(Family::A, 3);
  GroupElt s = W.gen(1), e = W.identity();
  Laurent phi = parse_laurent("x^2 + 3*x + x^-1 - 2");
  IntGroupAlgElt img = substitute_involution(phi, s, e);
  CHECK(img.support().at(e) == -1);  // 1 - 2
  CHECK(img.support().at(s) == 4);   // 3 + 1
  CHECK(substitute_involution(Laurent(), s, e) == IntGroupAlgElt());
}

TEST_CASE("group algebra images satisfy the defining relations for many weights") {
  std::vector<Laurent> weights = {
      Laurent(1), parse_laurent("x"), parse_laurent("1 + x"),
      parse_laurent("2 + 3*x"), parse_laurent("x^-1 + x^2"), Laurent()};
  for (const auto& W : test_groups()) {
    const auto& M = W.matrix();
    auto rels = singular_relations(M);
    for (const auto& p : weights)
      CHECK(check_relations(delta_bar_assignment(W, uniform_phi(M, p)), rels).empty());
  }
}

TEST_CASE("set-valued images satisfy the defining relations") {
  std::vector<std::set<int>> weights = {{0}, {1}, {0, 1}, {2}, {0, 3}, {}};
  for (const auto& W : test_groups()) {
    const auto& M = W.matrix();
    auto rels = singular_relations(M);
    for (const auto& s : weights)
      CHECK(check_relations(bool_delta_assignment(W, uniform_phi_set(M, s)), rels).empty());
  }
}

TEST_CASE("component-dependent weights work when components are respected") {
  // B_3 has two odd components: {0} and {1,2}
  CoxGroup W(Family::B, 3);
  auto K = odd_components(W.matrix());
  REQUIRE(K.size() == 2);
  PhiAssignment phi;
  phi[K.component_of.at(0)] = parse_laurent("1 + x");
  phi[K.component_of.at(1)] = parse_laurent("2*x");
  CHECK(check_relations(delta_bar_assignment(W, phi), singular_relations(W.matrix())).empty());
  // a missing component must be rejected
  PhiAssignment partial;
  partial[K.component_of.at(0)] = Laurent(1);
  CHECK_THROWS(delta_bar_assignment(W, partial));
}

TEST_CASE("tau images depend only on the component") {
  // in A_4 all generators share one odd component, so all tau images agree
  CoxGroup W(Family::A, 5);
  auto a = delta_bar_assignment(W, uniform_phi(W.matrix(), parse_laurent("1 + 2*x")));
  GroupElt e = W.identity();
  for (int s : W.matrix().labels()) {
    CHECK(a.tau.at(s).support().at(e) == 1);
    CHECK(a.tau.at(s).support().at(W.gen(s)) == 2);
  }
}

TEST_CASE("boolean product is the set product") {
  CoxGroup W(Family::A, 3);
  BoolGroupAlgElt x({W.identity(), W.gen(1)});
  BoolGroupAlgElt y({W.gen(2)});
  BoolGroupAlgElt xy = x * y;
  CHECK(xy.elements().size() == 2);
  CHECK(xy.elements().count(W.gen(2)) == 1);
  CHECK(xy.elements().count(multiply(W.gen(1), W.gen(2))) == 1);
  // idempotent subsets: subgroups
  BoolGroupAlgElt sub({W.identity(), W.gen(1)});
  CHECK(sub * sub == sub);
}
