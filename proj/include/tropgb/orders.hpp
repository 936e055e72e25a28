#ifndef TROPGB_ORDERS_HPP
#define TROPGB_ORDERS_HPP

#include <cstddef>
#include <vector>

#include "tropgb/rational.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

inline Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

/// Classical monomial order used as the final tie-break, always with the
/// fixed variable precedence d1 > ... > dn > x1 > ... > xn.
enum class Tiebreak { Lex, GradedLex, GradedRevLex };

/// Everything the tropical term order and the signature order need:
/// dimension, weight vectors, tie-break order and the coefficient valuation.
struct OrderConfig {
  int n;
  std::vector<Rational> w;      // size 2n: x-weights then d-weights
  std::vector<Rational> omega;  // size 2n
  Tiebreak tiebreak;
  Valuation valuation;

  /// Validates the weight constraints: every w entry nonnegative and each
  /// d-weight strictly above every x-weight.  Throws std::invalid_argument.
  OrderConfig(int n, std::vector<Rational> w, std::vector<Rational> omega,
              Tiebreak tiebreak, Valuation valuation);
};

/// w . (alpha, beta) with w of size 2n.
Rational weight_dot(const std::vector<Rational>& w, const ExpVec& e);

/// Tie-break comparison of the h-stripped monomials x^alpha xi^beta.
Cmp cmp_monomials_tiebreak(const ExpVec& a, const ExpVec& b, Tiebreak t);

/// The tropical term order on terms of the homogenized algebra: total
/// degree first, then on the h-stripped terms w-weight, then
/// -val(coeff) + omega-weight, then the tie-break order.  Equal iff the
/// exponents are identical and the coefficient valuations agree.
Cmp cmp_terms(const Term& a, const Term& b, const OrderConfig& cfg);

/// The unique maximal term of f.  Throws std::domain_error for f = 0.
Term leading(const Operator& f, const OrderConfig& cfg);
ExpVec leading_monomial(const Operator& f, const OrderConfig& cfg);
Rational leading_coefficient(const Operator& f, const OrderConfig& cfg);

/// A module monomial sigma * e_idx (basis index is 1-based).
struct ModMono {
  ExpVec exp;
  int idx = 1;

  friend bool operator==(const ModMono&, const ModMono&) = default;
  friend std::strong_ordering operator<=>(const ModMono& a, const ModMono& b) {
    if (auto c = a.idx <=> b.idx; c != 0) return c;
    return a.exp <=> b.exp;
  }
};

/// True iff d and m share the basis index and d's exponent divides m's.
bool mod_divides(const ModMono& d, const ModMono& m);

/// The growing set S of known leading monomials of syzygies; append-only
/// within a run and queried through divisibility.
class SyzygySet {
 public:
  const std::vector<ModMono>& monos() const { return monos_; }
  std::size_t size() const { return monos_.size(); }

  void append(const ModMono& m) { monos_.push_back(m); }
  /// Appends unless an existing entry already divides m.
  void append_if_new(const ModMono& m);

  bool divides_some(const ModMono& m) const { return divides_some(m, monos_.size()); }
  /// Divisibility against the first `limit` entries only; the engines use
  /// this to evaluate comparisons against an earlier snapshot of S.
  bool divides_some(const ModMono& m, std::size_t limit) const;

 private:
  std::vector<ModMono> monos_;
};

/// The signature order on module monomials: basis index, then total degree,
/// then w-weight, then the syzygy-membership clauses with the tie-break
/// order on the h-stripped monomial.  Membership in the syzygy leading
/// ideal is decided by divisibility against S (the known part).
Cmp cmp_sign(const ModMono& a, const ModMono& b, const SyzygySet& S, const OrderConfig& cfg,
             std::size_t syzygy_limit);
Cmp cmp_sign(const ModMono& a, const ModMono& b, const SyzygySet& S, const OrderConfig& cfg);

}  // namespace tropgb

#endif
