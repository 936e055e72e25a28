#ifndef TROPGB_SIGENGINE_HPP
#define TROPGB_SIGENGINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropgb/orders.hpp"
#include "tropgb/reduction.hpp"
#include "tropgb/signature.hpp"
#include "tropgb/weyl.hpp"

namespace tropgb {

/// A candidate S-pair together with its guessed signature (the larger of
/// the two cofactor-shifted signatures).
struct SigPair {
  Operator spair_op;
  Signature guessed_sig;
  std::pair<std::size_t, std::size_t> provenance;  // basis positions
  std::uint64_t seq = 0;                           // creation order, tie-break
};

struct Stats {
  std::string algorithm;
  std::uint64_t pairs_generated = 0;
  std::uint64_t pruned_by_syzygy = 0;
  std::uint64_t pruned_rewritable = 0;
  std::uint64_t normal_pairs_processed = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;
  double elapsed_seconds = 0.0;

  void merge_counters(const Stats& other);
};

/// The S-pair of two signature-carrying operators: cofactors are built from
/// the componentwise maximum of the leading exponents so the leading terms
/// cancel.  The guessed signature is the larger shifted signature.
SigPair spair(const SigOperator& g1, const SigOperator& g2, const SyzygySet& S,
              const OrderConfig& cfg);

/// Detects redundancy of f to the basis: some g with f = t*g exactly and
/// sig strictly below the shifted signature of g.  Returns the shifted
/// signature monomial, which is then a certified syzygy leading monomial.
std::optional<ModMono> find_redundancy(const Operator& f, const Signature& sig,
                                       std::span<const SigOperator> basis, const SyzygySet& S,
                                       const OrderConfig& cfg);

/// Forms the pairs of `fresh` against every basis element and keeps the
/// normal ones: both shifted signatures outside the known syzygy multiples,
/// distinct from each other, and the S-pair not redundant to the basis
/// including `fresh`.  Redundancy certificates are appended to S.
std::vector<SigPair> make_normal_pairs(const SigOperator& fresh,
                                       std::span<const SigOperator> basis, SyzygySet& S,
                                       const OrderConfig& cfg, Stats& stats,
                                       std::uint64_t& pair_seq);

/// Queue maintenance: drop pairs whose guessed signature is divisible by S,
/// then keep a single representative (minimal spair leading term) among
/// pairs sharing a guessed signature.
void prune(std::vector<SigPair>& pairs, const SyzygySet& S, const OrderConfig& cfg,
           Stats& stats);

struct SigGrResult {
  std::vector<SigOperator> basis;
  SyzygySet syzygies;
  Stats stats;
};

/// One incremental round: extends an s-Groebner basis of the previous ideal
/// by a fully reduced seed carrying a fresh module index, processing pairs
/// by increasing guessed signature; zero reductions record new syzygy
/// leading monomials instead of basis elements.
SigGrResult sig_gr(const SigOperator& seed, std::vector<SigOperator> basis, SyzygySet syzygies,
                   const OrderConfig& cfg);

struct F5Result {
  std::vector<Operator> basis;        // homogenized
  std::vector<Operator> basis_dehom;  // with h := 1
  SyzygySet syzygies;
  Stats stats;
};

/// The full driver: homogenize, sort by increasing leading term, seed the
/// first generator, then for each next generator fully reduce it by the
/// current basis and run a signature round unless it vanished.
F5Result f5_groebner(std::span<const Operator> generators, const OrderConfig& cfg);

}  // namespace tropgb

#endif
