#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "su3braid/errors.hpp"
#include "su3braid/matgroup.hpp"
#include "su3braid/verification.hpp"
#include "support.hpp"

using namespace su3braid;
using testsupport::BraidGroup;

namespace {

UnitaryMatrix diag3(long a, long b, long c) {
  return UnitaryMatrix::checked(Matrix::diagonal({Cyclo(a), Cyclo(b), Cyclo(c)}));
}

}  // namespace

TEST_CASE("closure") {
  const auto& bg = BraidGroup::get();
  CHECK(close({diag3(-1, -1, 1)}).order() == 2);
  CHECK(close({bg.g1}).order() == 18);
  CHECK(bg.group.order() == 162);
  CHECK(bg.group.identity().matrix.matrix().is_identity());
  CHECK(bg.group.index_of(bg.g1).has_value());
  CHECK_THROWS_AS(close({bg.g1, bg.g2}, 100), GroupTooLarge);
  CHECK_NOTHROW(close({bg.g1, bg.g2}, 162));
}

TEST_CASE("closure ordering is breadth first") {
  const auto& g = BraidGroup::get().group;
  std::size_t prev_len = 0;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const std::size_t len = g[i].word->size();
    CHECK(len >= prev_len);
    if (len == prev_len) CHECK(g[i - 1].key < g[i].key);
    prev_len = len;
  }
}

TEST_CASE("element orders") {
  const auto& bg = BraidGroup::get();
  CHECK(element_order(bg.group.identity()) == 1);
  CHECK(element_order(bg.A) == 9);
  CHECK(element_order(bg.B) == 3);
  CHECK(element_order(bg.T1) == 2);
  CHECK_THROWS_AS(element_order(bg.A, 8), OrderExceedsCap);
}

TEST_CASE("subgroups") {
  const auto& bg = BraidGroup::get();
  CHECK(bg.normal.order() == 27);
  CHECK(bg.complement.order() == 6);
  CHECK(subgroup(bg.group, {bg.group.identity()}).order() == 1);
  const GpElement outside = make_element(diag3(1, -1, -1), 72);
  CHECK_THROWS_AS(subgroup(bg.group, {outside}), GeneratorNotInGroup);
}

TEST_CASE("normality") {
  const auto& bg = BraidGroup::get();
  CHECK(is_normal(bg.group, bg.normal));
  CHECK_FALSE(is_normal(bg.group, bg.complement));
  CHECK(is_normal(bg.group, bg.group));
  const auto foreign = close({diag3(1, -1, -1)});
  CHECK_THROWS_AS(is_normal(bg.group, foreign), NotASubgroup);
}

TEST_CASE("intersections") {
  const auto& bg = BraidGroup::get();
  const auto a = subgroup(bg.group, {bg.A});
  const auto b = subgroup(bg.group, {bg.B});
  CHECK(intersect(a, b).order() == 1);
  CHECK(intersect(bg.complement, bg.normal).order() == 1);
  CHECK(intersect(bg.normal, bg.normal).order() == 27);
  CHECK(intersect(a, bg.normal).order() == 9);
}

TEST_CASE("abelian invariants") {
  const auto& bg = BraidGroup::get();
  CHECK(abelian_invariants(bg.normal) == std::vector<std::size_t>{9, 3});
  CHECK(abelian_invariants(subgroup(bg.group, {bg.A})) == std::vector<std::size_t>{9});
  CHECK(abelian_invariants(subgroup(bg.group, {bg.group.identity()})).empty());
  CHECK(abelian_invariants(close({diag3(-1, -1, 1), diag3(1, -1, -1)})) == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(abelian_invariants(bg.complement), NotAbelian);
}

TEST_CASE("semidirect product") {
  const auto& bg = BraidGroup::get();
  const auto r = semidirect_verify(bg.group, bg.normal, bg.complement);
  CHECK(r.normal);
  CHECK(r.trivial_intersection);
  CHECK(r.order_product);
  CHECK(r.product_bijective);
  CHECK(r.all());

  CHECK_FALSE(semidirect_verify(bg.group, bg.normal, bg.normal).trivial_intersection);
  const auto r2 = semidirect_verify(bg.group, subgroup(bg.group, {bg.A}), bg.complement);
  CHECK_FALSE(r2.order_product);
  CHECK_FALSE(r2.all());
}

TEST_CASE("decomposition") {
  const auto& bg = BraidGroup::get();
  auto [n1, h1] = decompose(bg.g1, bg.normal, bg.complement);
  CHECK(n1.matrix == bg.nh("A^5 B^2").matrix);
  CHECK(h1.matrix == bg.T3.matrix);
  auto [n2, h2] = decompose(bg.g2, bg.normal, bg.complement);
  CHECK(n2.matrix == bg.nh("A^-1 B").matrix);
  CHECK(h2.matrix == bg.nh("T3 T1 T3").matrix);
  auto [ni, hi] = decompose(bg.group.identity().matrix, bg.normal, bg.complement);
  CHECK(ni.matrix.matrix().is_identity());
  CHECK(hi.matrix.matrix().is_identity());

  CHECK_THROWS_AS(decompose(diag3(1, -1, -1), bg.normal, bg.complement), NoFactorization);
  CHECK_THROWS_AS(decompose(bg.g1, bg.normal, bg.group), NonUniqueFactorization);
}

TEST_CASE("property: decomposition is a bijection onto N x H") {
  const auto& bg = BraidGroup::get();
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : bg.group.elements()) {
    auto [n, h] = decompose(e.matrix, bg.normal, bg.complement);
    CHECK(bg.normal.contains(n));
    CHECK(bg.complement.contains(h));
    CHECK(n.matrix * h.matrix == e.matrix.with_order(72));
    seen.emplace(n.key, h.key);
  }
  CHECK(seen.size() == 162);
}

TEST_CASE("property: the product map is a homomorphism") {
  const auto& bg = BraidGroup::get();
  std::mt19937 rng(testsupport::kSeed);
  std::uniform_int_distribution<std::size_t> pick_n(0, 26), pick_h(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& n1 = bg.normal[pick_n(rng)].matrix;
    const auto& n2 = bg.normal[pick_n(rng)].matrix;
    const auto& h1 = bg.complement[pick_h(rng)].matrix;
    const auto& h2 = bg.complement[pick_h(rng)].matrix;
    CHECK((n1 * (h1 * n2 * h1.inverse())) * (h1 * h2) == (n1 * h1) * (n2 * h2));
  }
}

TEST_CASE("property: closure soundness and Lagrange") {
  const auto& bg = BraidGroup::get();
  const auto& g = bg.group;
  std::mt19937 rng(testsupport::kSeed + 3);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = g[pick(rng)].matrix;
    const auto& y = g[pick(rng)].matrix;
    CHECK(g.contains(x * y));
    CHECK(g.contains(x.inverse()));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const auto sub = subgroup(g, {g[pick(rng)], g[pick(rng)]});
    CHECK(g.order() % sub.order() == 0);
  }
}

TEST_CASE("property: stored words reproduce their matrices") {
  const auto& g = BraidGroup::get().group;
  for (const auto& e : g.elements()) {
    REQUIRE(e.word.has_value());
    CHECK(word_eval(*e.word, g.generators()).matrix == e.matrix);
  }
}

TEST_CASE("words") {
  const auto& bg = BraidGroup::get();
  const std::vector<GpElement> gens{make_element(bg.g1, 72), make_element(bg.g2, 72)};
  const Word f = parse_word("G1 G2 G1^-1 G1^-1", {"G1", "G2"});
  CHECK(f == Word{1, 2, -1, -1});
  CHECK(word_eval(f, gens).matrix.matrix() == reference::f_matrix());
  CHECK(word_eval({}, gens).matrix.matrix().is_identity());
  CHECK(bg.T3.matrix.matrix() == reference::t3());
  CHECK(parse_word("(G1 G2)^2 I 1", {"G1", "G2"}) == Word{1, 2, 1, 2});
  CHECK(parse_word("(G1 G2)^-1", {"G1", "G2"}) == Word{-2, -1});
  CHECK(format_word({1, -2, 2}, {"G1", "G2"}) == "G1 G2^-1 G2");
  CHECK(format_word({}, {"G1", "G2"}) == "I");
  CHECK_THROWS_AS(word_eval({3}, gens), IndexOutOfRange);
  CHECK_THROWS_AS(word_eval({0}, gens), IndexOutOfRange);
  CHECK_THROWS_AS(parse_word("G3", {"G1", "G2"}), UnboundName);
  CHECK_THROWS_AS(parse_word("(G1 G2", {"G1", "G2"}), WordSyntaxError);
  CHECK_THROWS_AS(parse_word("G1^", {"G1", "G2"}), WordSyntaxError);
}

TEST_CASE("relations") {
  const auto& bg = BraidGroup::get();
  const std::map<std::string, GpElement> named{{"A", bg.A}, {"B", bg.B}, {"T1", bg.T1}, {"T3", bg.T3}};
  const std::vector<Relation> rels{{"A^9", "I"},         {"B^3", "I"},          {"T1^2", "I"},
                                   {"T3^2", "I"},        {"(T1 T3)^3", "I"},    {"(T3 T1)^3", "I"},
                                   {"T3 A T3^-1", "A^7 B^2"}, {"T1 B T1^-1", "A^6 B^2"},
                                   {"T3 B T3^-1", "A^3 B^2"}, {"T1 A T1^-1", "A"},  {"A^8", "I"}};
  const auto out = check_relations(named, rels);
  REQUIRE(out.size() == rels.size());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) CHECK(out[i]);
  CHECK_FALSE(out.back());
  CHECK_THROWS_AS(check_relations(named, {{"C", "I"}}), UnboundName);
}

TEST_CASE("Cayley table") {
  const auto& g = BraidGroup::get().group;
  const CayleyTable table(g);
  CHECK(table.size() == 162);
  std::mt19937 rng(testsupport::kSeed + 4);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng);
    CHECK(g[table.at(i, j)].matrix == g[i].matrix * g[j].matrix);
    CHECK(table.at(i, table.inverse(i)) == 0);
  }
}

TEST_CASE("conjugacy classes") {
  const auto& bg = BraidGroup::get();
  const auto classes = conjugacy_classes(bg.group);
  CHECK(classes.front() == std::vector<std::size_t>{0});
  std::size_t total = 0;
  for (const auto& c : classes) {
    CHECK(162 % c.size() == 0);
    total += c.size();
  }
  CHECK(total == 162);
  for (const auto& c : conjugacy_classes(bg.normal)) CHECK(c.size() == 1);
  CHECK(conjugacy_classes(bg.complement).size() == 3);
}

TEST_CASE("isomorphism search") {
  const auto& bg = BraidGroup::get();
  const auto self = find_isomorphism(bg.group, bg.group);
  REQUIRE(self.has_value());
  for (std::size_t i = 0; i < bg.group.order(); ++i) CHECK(self->element_map[i] == i);

  const auto smaller = subgroup(bg.group, {bg.A, bg.B, bg.T3});
  CHECK(smaller.order() == 54);
  CHECK_FALSE(find_isomorphism(bg.group, smaller).has_value());

  // Z6 and S3 have equal order but are not isomorphic.
  const auto z6 = close({UnitaryMatrix::checked(Matrix::diagonal(
      {root_of_unity(6, 1), root_of_unity(6, 5), Cyclo(1, 6)}))});
  CHECK(z6.order() == 6);
  CHECK_FALSE(find_isomorphism(z6, bg.complement).has_value());
  CHECK(same_element_set(bg.group, bg.group));
  CHECK_FALSE(same_element_set(bg.group, bg.normal));
}
