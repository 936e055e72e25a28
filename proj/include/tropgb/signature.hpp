#ifndef TROPGB_SIGNATURE_HPP
#define TROPGB_SIGNATURE_HPP

#include "tropgb/orders.hpp"
#include "tropgb/rational.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

/// A module monomial with the coefficient tag the algorithms carry along.
/// The tag never participates in any ordering decision.
struct Signature {
  ModMono mono;
  Rational coeff_tag = Rational(1);
};

/// A homogeneous basis element paired with its certified signature.
struct SigOperator {
  Operator op;
  Signature sig;
};

}  // namespace tropgb

#endif
