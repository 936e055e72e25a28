#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgb/buchberger.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/sigengine.hpp"

using namespace tropgb;

namespace {

OrderConfig example_config() {
  return OrderConfig(2, {Rational(1), Rational(1), Rational(2), Rational(2)},
                     {Rational(-1), Rational(-1), Rational(1), Rational(1)}, Tiebreak::Lex,
                     Valuation(3));
}

}  // namespace

TEST_CASE("two commuting monomial generators") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> gens = {parse_operator("x2", 2), parse_operator("x1", 2)};
  const BuchbergerResult out = buchberger(gens, cfg);
  REQUIRE(out.basis.size() == 2);
  CHECK(out.stats.normal_pairs_processed == 1);
  CHECK(out.stats.zero_reductions == 1);
}

TEST_CASE("a single generator makes no pairs") {
  const OrderConfig cfg = example_config();
  const BuchbergerResult out =
      buchberger(std::vector<Operator>{parse_operator("x1*d1 + x2*d2", 2)}, cfg);
  REQUIRE(out.basis.size() == 1);
  CHECK(out.stats.pairs_generated == 0);
}

TEST_CASE("baseline completes the worked example") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> gens = {parse_operator("2*d2 + x2", 2),
                                      parse_operator("4*x1*x2 + 3*x1^2", 2)};
  const BuchbergerResult out = buchberger(gens, cfg);
  REQUIRE(out.basis.size() == 3);
  CHECK(verify_groebner(out.basis, cfg));

  const F5Result f5 = f5_groebner(gens, cfg);
  CHECK(verify_groebner(f5.basis, cfg));
  CHECK(same_leading_ideal(out.basis, f5.basis, cfg));
}

TEST_CASE("the verifier rejects an incomplete basis") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> incomplete = {parse_operator("2*d2 + x2", 2),
                                            parse_operator("4*x1*x2 + 3*x1^2", 2)};
  CHECK_FALSE(verify_groebner(incomplete, cfg));
  CHECK(verify_groebner(std::vector<Operator>{parse_operator("x1*d2", 2)}, cfg));
}

TEST_CASE("leading ideal comparison") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> g = {parse_operator("x1", 2), parse_operator("d2", 2)};
  CHECK(same_leading_ideal(g, g, cfg));
  CHECK_FALSE(same_leading_ideal(std::vector<Operator>{parse_operator("x1", 2)},
                                 std::vector<Operator>{parse_operator("x1^2", 2)}, cfg));
}

TEST_CASE("baseline input validation") {
  const OrderConfig cfg = example_config();
  CHECK_THROWS_AS(buchberger(std::vector<Operator>{}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(buchberger(std::vector<Operator>{Operator(2)}, cfg), std::invalid_argument);
}
