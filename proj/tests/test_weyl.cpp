#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive_weyl.hpp"
#include "random_inputs.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/weyl.hpp"

using namespace tropgb;

namespace {
Operator op(const char* src, int n) { return parse_operator(src, n); }
}  // namespace

TEST_CASE("single-variable commutation") {
  // d1 * x1 = x1 d1 + h^2
  CHECK(commutation_expansion(1, 1, 1, 1) == op("x1*d1 + h^2", 1));
  // d1^2 * x1^2 = x1^2 d1^2 + 4 x1 d1 h^2 + 2 h^4
  CHECK(commutation_expansion(2, 2, 1, 1) == op("x1^2*d1^2 + 4*x1*d1*h^2 + 2*h^4", 1));
  // distinct indices commute
  CHECK(mul(op("d2", 2), op("x1", 2)) == op("x1*d2", 2));
}

TEST_CASE("products in the homogenized algebra") {
  // 2 d2 * (4 x1 x2 + 3 x1^2) in D_2
  CHECK(mul(op("2*d2", 2), op("4*x1*x2 + 3*x1^2", 2)) ==
        op("8*x1*x2*d2 + 8*x1*h^2 + 6*x1^2*d2", 2));
  const Operator f = op("3*x1*d1 - 2*d2^2 + 5", 2);
  CHECK(mul(op("1", 2), f) == f);
  CHECK(mul(f, op("1", 2)) == f);
  CHECK(sub(mul(op("x1", 2), op("x2", 2)), mul(op("x2", 2), op("x1", 2))).is_zero());
}

TEST_CASE("homogenization and dehomogenization") {
  CHECK(homogenize(op("2*d2 + x2 + 1", 2)) == op("2*d2 + x2 + h", 2));
  CHECK(homogenize(op("4*x1*d2 + x2*x3", 3)) == op("4*x1*d2 + x2*x3", 3));
  const Operator f = op("x1*d1 + x2^2", 2);
  CHECK(homogenize(f) == f);
  CHECK_THROWS_AS(homogenize(op("x1*h", 1)), std::invalid_argument);

  CHECK(dehomogenize(op("8*x1*h^2", 2)) == op("8*x1", 2));
  CHECK(dehomogenize(op("x1*h + x1", 1)) == op("2*x1", 1));
}

TEST_CASE("homogeneity predicate") {
  CHECK(is_homogeneous(op("4*x1*x2 + 3*x1^2", 2)));
  CHECK_FALSE(is_homogeneous(op("x1 + x1^2", 1)));
  CHECK(is_homogeneous(Operator(2)));
}

TEST_CASE("dehomogenize is a left inverse of homogenize") {
  testing::Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    const Operator f = testing::random_operator(rng, 2, 4, 5, /*with_h=*/false);
    CHECK(dehomogenize(homogenize(f)) == f);
  }
}

TEST_CASE("closed-form product equals the word-rewriting oracle") {
  testing::Rng rng(42);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Operator f = testing::random_operator(rng, n, 4, 5);
    const Operator g = testing::random_operator(rng, n, 4, 5);
    CHECK(mul(f, g) == testing::naive_mul(f, g));
  }
}

TEST_CASE("ring laws on random operators") {
  testing::Rng rng(99);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const Operator a = testing::random_operator(rng, n, 3, 4);
    const Operator b = testing::random_operator(rng, n, 3, 4);
    const Operator c = testing::random_operator(rng, n, 3, 4);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));

    Operator h(n);
    ExpVec he = ExpVec::zero(n);
    he.gamma = 1;
    h.add_term(he, Rational(1));
    CHECK(mul(h, a) == mul(a, h));
  }
}

TEST_CASE("products of homogeneous operators are homogeneous of summed degree") {
  testing::Rng rng(123);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int da = static_cast<int>(rng() % 4), db = static_cast<int>(rng() % 4);
    const Operator a = testing::random_homogeneous(rng, n, da, 4);
    const Operator b = testing::random_homogeneous(rng, n, db, 4);
    const Operator p = mul(a, b);
    CHECK(is_homogeneous(p));
    if (!p.is_zero()) CHECK(p.terms().begin()->first.degree() == da + db);
  }
}
