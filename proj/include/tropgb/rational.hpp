#ifndef TROPGB_RATIONAL_HPP
#define TROPGB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropgb {

/// Exact rational coefficient. GMP keeps values in lowest terms with a
/// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;

/// Builds a canonical rational from a (possibly unnormalized) fraction.
/// Throws std::invalid_argument on a zero denominator.
Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const mpz_class& numerator, const mpz_class& denominator);

/// An integer extended with +infinity, the codomain of a valuation.
/// +infinity compares above every finite value.
struct ExtendedInt {
  long value = 0;
  bool infinite = false;

  static ExtendedInt infinity() { return {0, true}; }
  static ExtendedInt finite(long v) { return {v, false}; }

  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtendedInt& a, const ExtendedInt& b) {
    return a < b || a == b;
  }
  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite || b.infinite) return infinity();
    return finite(a.value + b.value);
  }
};

/// The p-adic valuation on Q.  val(0) = +infinity; for q = p^m * a/b with
/// p dividing neither a nor b, val(q) = m (m may be negative).
class Valuation {
 public:
  /// Throws std::invalid_argument unless `prime` is an actual prime >= 2.
  explicit Valuation(unsigned long prime);

  unsigned long prime() const { return prime_; }

 private:
  unsigned long prime_;
};

ExtendedInt val(const Rational& q, const Valuation& v);

}  // namespace tropgb

#endif
