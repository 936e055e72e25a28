#ifndef TROPGB_REDUCTION_HPP
#define TROPGB_REDUCTION_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tropgb/orders.hpp"
#include "tropgb/signature.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

/// Ecart E(f, g) = #(supp(g) \ supp(f)).
int ecart(const Operator& f, const Operator& g);

/// Result of a division: input = sum of quotient*reducer + remainder,
/// exactly.  Quotients are keyed by the reducer's index in G and tracked
/// only when requested.
struct ReductionOutcome {
  Operator remainder;
  std::map<std::size_t, Operator> quotients;
  bool reduced_to_zero = false;
  std::size_t cache_corrections = 0;  // times the (1-c)^-1 branch fired
  std::size_t steps = 0;
};

/// Optional step-by-step record of the working operator, starting with the
/// input itself.
using ReduceTrace = std::vector<Operator>;

/// Signature-respecting top-reduction of a homogeneous f with guessed
/// signature sig.  Admissible reducers are basis elements whose multiple
/// keeps the guessed signature strictly below sig (and outside S), plus
/// cached intermediates with an equal leading monomial; the reducer of
/// minimal ecart is applied.  A cache hit rescales by (1-c)^-1, which is
/// legal because val(c) > 0 there (checked at runtime).  Stops at the first
/// working operator with no admissible reducer.
ReductionOutcome s_top_reduce(const Operator& f, const Signature& sig,
                              std::span<const SigOperator> basis, const SyzygySet& S,
                              const OrderConfig& cfg, bool with_quotients = true,
                              ReduceTrace* trace = nullptr);

/// Full tropical division: same cached loop without the signature test and
/// with any leading-monomial divisor allowed; leading terms with no divisor
/// move to the remainder and the loop continues on the rest, so no term of
/// the remainder is divisible by any LM of G.
ReductionOutcome normal_form(const Operator& f, std::span<const Operator> basis,
                             const OrderConfig& cfg, bool with_quotients = true,
                             ReduceTrace* trace = nullptr);

}  // namespace tropgb

#endif
