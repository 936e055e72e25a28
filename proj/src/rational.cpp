#include "tropgb/rational.hpp"

namespace tropgb {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Valuation::Valuation(unsigned long prime) : prime_(prime) {
  mpz_class p(static_cast<unsigned long>(prime));
  if (prime < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("valuation prime must be a prime >= 2");
}

ExtendedInt val(const Rational& q, const Valuation& v) {
  if (q == 0) return ExtendedInt::infinity();
  mpz_class p(v.prime());
  mpz_class shed;
  long num_mult = static_cast<long>(
      mpz_remove(shed.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
  long den_mult = static_cast<long>(
      mpz_remove(shed.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
  return ExtendedInt::finite(num_mult - den_mult);
}

}  // namespace tropgb
