#ifndef TROPGB_WEYL_HPP
#define TROPGB_WEYL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "tropgb/rational.hpp"

namespace tropgb {

/// Exponent triple of a canonical monomial x^alpha d^beta h^gamma in the
/// homogenized Weyl algebra in n variables.  alpha holds the x-exponents,
/// beta the d-exponents (the xi-exponents of the total symbol), gamma the
/// exponent of the central homogenization variable h.
struct ExpVec {
  std::int32_t gamma = 0;
  std::vector<std::int32_t> alpha;
  std::vector<std::int32_t> beta;

  static ExpVec zero(int n) {
    ExpVec e;
    e.alpha.assign(static_cast<std::size_t>(n), 0);
    e.beta.assign(static_cast<std::size_t>(n), 0);
    return e;
  }

  int n() const { return static_cast<int>(alpha.size()); }

  /// Total degree gamma + |alpha| + |beta|.
  int degree() const;
  /// Degree of the h-stripped part, |alpha| + |beta|.
  int xi_degree() const;

  /// Componentwise <= on (gamma, alpha, beta).
  bool divides(const ExpVec& other) const;
  ExpVec plus(const ExpVec& other) const;
  /// Componentwise difference; caller guarantees this->divides fails nowhere.
  ExpVec minus(const ExpVec& other) const;
  bool is_trivial() const;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  /// Lexicographic on (gamma, alpha, beta); fixes the iteration order of
  /// term maps so runs are reproducible.
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) {
    if (auto c = a.gamma <=> b.gamma; c != 0) return c;
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
};

struct Term {
  Rational coeff;
  ExpVec exp;
};

/// A sparse element of the homogenized Weyl algebra: a finite map from
/// normal-form exponents to nonzero rational coefficients.
class Operator {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  Operator() = default;
  explicit Operator(int n) : n_(n) {}

  static Operator from_term(const Term& t) {
    Operator f(t.exp.n());
    f.add_term(t.exp, t.coeff);
    return f;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Merges a term into the map, erasing the entry if the sum cancels.
  void add_term(const ExpVec& exp, const Rational& coeff);

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  TermMap terms_;
};

Operator add(const Operator& f, const Operator& g);
Operator sub(const Operator& f, const Operator& g);
Operator negate(const Operator& f);
Operator scale(const Rational& c, const Operator& f);

/// Normal form of the product d_i^b * x_i^a in one variable:
///   sum over k of k! C(a,k) C(b,k) x_i^(a-k) d_i^(b-k) h^(2k).
Operator commutation_expansion(int d_power, int x_power, int index, int n);

/// Exact noncommutative product in the homogenized algebra.  h is central;
/// the product of homogeneous operators is homogeneous of summed degree.
Operator mul(const Operator& f, const Operator& g);

/// Left multiple t * f for a single term t.
Operator mul_term(const Term& t, const Operator& f);

/// H(f): pads every term with the h-power that lifts it to the maximal
/// xi-degree of f.  Requires f free of h (throws std::invalid_argument).
Operator homogenize(const Operator& f);

/// Substitutes h := 1, merging terms whose (alpha, beta) coincide.
Operator dehomogenize(const Operator& f);

/// True iff all terms share one total degree; vacuously true for 0.
bool is_homogeneous(const Operator& f);

/// Input policy shared by both engines: h-free operators are homogenized,
/// operators already containing h must be homogeneous as given.
Operator ensure_homogenized(const Operator& f);

}  // namespace tropgb

#endif
