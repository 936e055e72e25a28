#ifndef TROPGB_BUCHBERGER_HPP
#define TROPGB_BUCHBERGER_HPP

#include <span>
#include <vector>

#include "tropgb/orders.hpp"
#include "tropgb/sigengine.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

struct BuchbergerResult {
  std::vector<Operator> basis;        // homogenized
  std::vector<Operator> basis_dehom;  // with h := 1
  Stats stats;
};

/// Baseline pair-completion on the homogenized algebra.  Deliberately free
/// of pair criteria so the number of useless zero reductions is visible
/// next to the signature engine's.  Pairs are processed by smallest lcm
/// monomial under the tropical order.
BuchbergerResult buchberger(std::span<const Operator> generators, const OrderConfig& cfg);

/// Independent correctness oracle: every S-pair of G reduces to zero by
/// full division against G.  Expects the homogenized basis.
bool verify_groebner(std::span<const Operator> basis, const OrderConfig& cfg);

/// Mutual divisibility of the leading-monomial sets.
bool same_leading_ideal(std::span<const Operator> a, std::span<const Operator> b,
                        const OrderConfig& cfg);

}  // namespace tropgb

#endif
