#include <random>

#include "doctest.h"

#include "su3braid/errors.hpp"
#include "su3braid/matgroup.hpp"
#include "su3braid/su3families.hpp"
#include "support.hpp"

using namespace su3braid;

TEST_CASE("C family generators") {
  const auto gens = c_generators({9, 1, 1});
  REQUIRE(gens.size() == 2);
  const Matrix& e = gens[0].matrix();
  const Matrix& f = gens[1].matrix();
  CHECK(f == Matrix::diagonal({root_of_unity(9, 1), root_of_unity(9, 1), root_of_unity(9, -2)}));
  CHECK(pow(gens[0], 3).matrix().is_identity());
  CHECK_FALSE(e.is_identity());
  CHECK(e.determinant().is_one());
  CHECK(f.determinant().is_one());
  CHECK(family_order(CParams{9, 1, 1}) == 36);
  CHECK(c_generators({9, 1, 1}, 72)[1].matrix().scalar_order() == 72);
}

TEST_CASE("D family generators") {
  const DParams p{{9, 1, 1}, 2, 1, 1};
  const auto gens = d_generators(p);
  REQUIRE(gens.size() == 3);
  const Matrix expected{{Cyclo(-1), Cyclo(0), Cyclo(0)}, {Cyclo(0), Cyclo(0), Cyclo(-1)},
                        {Cyclo(0), Cyclo(-1), Cyclo(0)}};
  CHECK(gens[2].matrix() == expected);
  CHECK(gens[2].matrix().determinant().is_one());
  CHECK(close(gens).order() == 162);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(c_generators({0, 0, 0}), InvalidParameters);
  CHECK_THROWS_AS(c_generators({3, 3, 0}), InvalidParameters);
  CHECK_THROWS_AS(c_generators({3, 0, -1}), InvalidParameters);
  CHECK_THROWS_AS(d_generators({{3, 0, 0}, 0, 0, 0}), InvalidParameters);
  CHECK_THROWS_AS(d_generators({{3, 0, 0}, 2, 2, 0}), InvalidParameters);
  CHECK_THROWS_AS(c_generators({9, 1, 1}, 18), NonDivisibleOrder);
}

TEST_CASE("property: family matrices are special unitary") {
  std::mt19937 rng(testsupport::kSeed);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int d = std::uniform_int_distribution<int>(1, 8)(rng);
    std::uniform_int_distribution<int> ln(0, n - 1), ld(0, d - 1);
    const DParams p{{n, ln(rng), ln(rng)}, d, ld(rng), ld(rng)};
    for (const auto& g : d_generators(p)) {
      CHECK(g.matrix().is_unitary());
      CHECK(g.matrix().determinant().is_one());
    }
  }
}

TEST_CASE("property: small C families close under the default cap") {
  std::mt19937 rng(testsupport::kSeed + 1);
  for (int n = 1; n <= 12; ++n) {
    std::uniform_int_distribution<int> label(0, n - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const CParams p{n, label(rng), label(rng)};
      const auto g = close(c_generators(p));
      CAPTURE(n);
      // The diagonal part has at most n^2 elements of determinant 1.
      CHECK(g.order() % 3 == 0);
      CHECK(g.order() <= static_cast<std::size_t>(3 * n * n));
    }
  }
}
