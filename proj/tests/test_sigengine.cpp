#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "random_inputs.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/sigengine.hpp"

using namespace tropgb;

namespace {

OrderConfig example_config() {
  return OrderConfig(2, {Rational(1), Rational(1), Rational(2), Rational(2)},
                     {Rational(-1), Rational(-1), Rational(1), Rational(1)}, Tiebreak::Lex,
                     Valuation(3));
}

ModMono mono(const char* src, int n, int idx) {
  const Operator f = parse_operator(src, n);
  REQUIRE(f.term_count() == 1);
  return ModMono{f.terms().begin()->first, idx};
}

SigOperator seed(const char* src, int n, int idx) {
  return SigOperator{parse_operator(src, n), Signature{ModMono{ExpVec::zero(n), idx}}};
}

std::set<ExpVec> leading_set(const std::vector<Operator>& basis, const OrderConfig& cfg) {
  std::set<ExpVec> out;
  for (const auto& g : basis) out.insert(leading_monomial(g, cfg));
  return out;
}

std::set<ModMono> syzygy_set(const SyzygySet& s) {
  return {s.monos().begin(), s.monos().end()};
}

}  // namespace

TEST_CASE("spair construction cancels leading terms") {
  const OrderConfig cfg = example_config();
  SyzygySet syz;
  const SigOperator f1 = seed("2*d2 + x2", 2, 1);
  const SigOperator f2 = seed("4*x1*x2 + 3*x1^2", 2, 2);

  const SigPair p = spair(f2, f1, syz, cfg);
  CHECK(p.spair_op == parse_operator("6*x1^2*d2 - 4*x1*x2^2 + 8*x1*h^2", 2));
  CHECK(p.guessed_sig.mono == mono("d2", 2, 2));

  const SigOperator g1{parse_operator("8*x1*h^2", 2), Signature{mono("d2", 2, 2)}};
  const SigPair q = spair(g1, f1, syz, cfg);
  CHECK(q.spair_op == parse_operator("-8*x1*x2*h^2", 2));
  CHECK(q.guessed_sig.mono == mono("d2^2", 2, 2));

  CHECK(spair(f2, f2, syz, cfg).spair_op.is_zero());
}

TEST_CASE("redundancy detection certifies a syzygy leading monomial") {
  const OrderConfig cfg = example_config();
  SyzygySet syz;
  std::vector<SigOperator> basis = {seed("2*d2 + x2", 2, 1), seed("4*x1*x2 + 3*x1^2", 2, 2)};
  basis.push_back(SigOperator{parse_operator("8*x1*h^2", 2), Signature{mono("d2", 2, 2)}});

  const Operator sp = parse_operator("-24*x1^2*h^2", 2);
  auto cert = find_redundancy(sp, Signature{mono("x2*d2", 2, 2)}, basis, syz, cfg);
  REQUIRE(cert.has_value());
  CHECK(*cert == mono("x1*d2", 2, 2));

  CHECK_FALSE(find_redundancy(sp, Signature{mono("x2*d2", 2, 2)}, {}, syz, cfg).has_value());
  // an element is not redundant to itself: the shift is equal, not larger
  CHECK_FALSE(
      find_redundancy(basis[2].op, basis[2].sig, basis, syz, cfg).has_value());
}

TEST_CASE("normal pair filters") {
  const OrderConfig cfg = example_config();
  Stats stats;
  std::uint64_t seq = 0;

  SyzygySet syz;
  std::vector<SigOperator> basis = {seed("2*d2 + x2", 2, 1)};
  const SigOperator f2 = seed("4*x1*x2 + 3*x1^2", 2, 2);
  auto pairs = make_normal_pairs(f2, basis, syz, cfg, stats, seq);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].guessed_sig.mono == mono("d2", 2, 2));

  // g1 pairs with f1 but its pair with f2 is redundant (a multiple of g1)
  basis.push_back(f2);
  const SigOperator g1{parse_operator("8*x1*h^2", 2), Signature{mono("d2", 2, 2)}};
  pairs = make_normal_pairs(g1, basis, syz, cfg, stats, seq);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].guessed_sig.mono == mono("d2^2", 2, 2));
  CHECK(syzygy_set(syz).count(mono("x1*d2", 2, 2)) == 1);

  // with both shifted signatures known syzygy multiples nothing survives
  SyzygySet full;
  full.append(mono("d2", 2, 2));
  full.append(mono("x1*x2", 2, 1));
  Stats stats2;
  auto none = make_normal_pairs(f2, std::vector<SigOperator>{seed("2*d2 + x2", 2, 1)}, full,
                                cfg, stats2, seq);
  CHECK(none.empty());
  CHECK(stats2.pruned_by_syzygy == 1);
}

TEST_CASE("queue pruning: syzygy divisibility then one pair per signature") {
  const OrderConfig cfg = example_config();
  Stats stats;
  SyzygySet syz;
  syz.append(mono("d2^2", 2, 2));

  std::vector<SigPair> pairs;
  SigPair a;
  a.spair_op = parse_operator("x1*d2", 2);
  a.guessed_sig = Signature{mono("d2^3", 2, 2)};
  a.seq = 0;
  SigPair b;
  b.spair_op = parse_operator("4*x1*x2 + 3*x1^2", 2);
  b.guessed_sig = Signature{mono("x1*d2", 2, 2)};
  b.seq = 1;
  SigPair c;
  c.spair_op = parse_operator("3*x1^2", 2);  // smaller leading term than b
  c.guessed_sig = Signature{mono("x1*d2", 2, 2)};
  c.seq = 2;
  pairs = {a, b, c};

  prune(pairs, syz, cfg, stats);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].spair_op == c.spair_op);
  CHECK(stats.pruned_by_syzygy == 1);
  CHECK(stats.pruned_rewritable == 1);

  std::vector<SigPair> empty;
  prune(empty, syz, cfg, stats);
  CHECK(empty.empty());
}

TEST_CASE("one signature round reproduces the worked example") {
  const OrderConfig cfg = example_config();
  SigGrResult round = sig_gr(seed("4*x1*x2 + 3*x1^2", 2, 2),
                             {seed("2*d2 + x2", 2, 1)}, SyzygySet{}, cfg);

  REQUIRE(round.basis.size() == 3);
  CHECK(round.basis[2].op == parse_operator("8*x1*h^2", 2));
  CHECK(round.basis[2].sig.mono == mono("d2", 2, 2));
  CHECK(syzygy_set(round.syzygies).count(mono("d2^2", 2, 2)) == 1);
  CHECK(round.stats.zero_reductions == 1);
  CHECK(round.stats.normal_pairs_processed == 2);
}

TEST_CASE("full driver on the worked example") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> gens = {parse_operator("2*d2 + x2", 2),
                                      parse_operator("4*x1*x2 + 3*x1^2", 2)};
  const F5Result result = f5_groebner(gens, cfg);

  REQUIRE(result.basis.size() == 3);
  CHECK(result.basis[2] == parse_operator("8*x1*h^2", 2));
  CHECK(result.basis_dehom[2] == parse_operator("8*x1", 2));
  CHECK(syzygy_set(result.syzygies).count(mono("d2^2", 2, 2)) == 1);
  CHECK(result.stats.zero_reductions == 1);
}

TEST_CASE("single generator needs no pairs") {
  const OrderConfig cfg = example_config();
  const F5Result result = f5_groebner(std::vector<Operator>{parse_operator("x1*d1 + 1", 2)}, cfg);
  REQUIRE(result.basis.size() == 1);
  CHECK(result.basis[0] == parse_operator("x1*d1 + h^2", 2));  // homogenized
  CHECK(result.stats.pairs_generated == 0);
  CHECK(result.stats.zero_reductions == 0);
}

TEST_CASE("input validation") {
  const OrderConfig cfg = example_config();
  CHECK_THROWS_AS(f5_groebner(std::vector<Operator>{}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(f5_groebner(std::vector<Operator>{Operator(2)}, cfg), std::invalid_argument);
}

TEST_CASE("scaling a generator changes neither leading monomials nor syzygies") {
  const OrderConfig cfg = example_config();
  const std::vector<Operator> gens = {parse_operator("2*d2 + x2", 2),
                                      parse_operator("4*x1*x2 + 3*x1^2", 2)};
  const F5Result base = f5_groebner(gens, cfg);

  for (const Rational& c : {make_rational(7, 5), make_rational(-3, 1), make_rational(1, 9)}) {
    for (std::size_t which = 0; which < gens.size(); ++which) {
      std::vector<Operator> scaled = gens;
      scaled[which] = scale(c, scaled[which]);
      const F5Result other = f5_groebner(scaled, cfg);
      CHECK(leading_set(other.basis, cfg) == leading_set(base.basis, cfg));
      CHECK(syzygy_set(other.syzygies) == syzygy_set(base.syzygies));
    }
  }
}
