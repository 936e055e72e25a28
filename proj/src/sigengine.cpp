#include "tropgb/sigengine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <stdexcept>

#include "tropgb/parser.hpp"

namespace tropgb {

namespace {
std::string debug_string(const ModMono& m) { return to_string(m); }
std::string debug_string(const Operator& f, const OrderConfig& cfg) {
  return f.is_zero() ? "0" : to_string(f, cfg);
}
}  // namespace

void Stats::merge_counters(const Stats& other) {
  pairs_generated += other.pairs_generated;
  pruned_by_syzygy += other.pruned_by_syzygy;
  pruned_rewritable += other.pruned_rewritable;
  normal_pairs_processed += other.normal_pairs_processed;
  zero_reductions += other.zero_reductions;
}

namespace {

struct SPairParts {
  Term u1, u2;
  ModMono shifted1, shifted2;
  Operator spair_op;
};

SPairParts compute_spair_parts(const SigOperator& g1, const SigOperator& g2,
                               const OrderConfig& cfg) {
  const Term lt1 = leading(g1.op, cfg);
  const Term lt2 = leading(g2.op, cfg);

  ExpVec lcm = lt1.exp;
  lcm.gamma = std::max(lt1.exp.gamma, lt2.exp.gamma);
  for (int i = 0; i < lcm.n(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    lcm.alpha[s] = std::max(lt1.exp.alpha[s], lt2.exp.alpha[s]);
    lcm.beta[s] = std::max(lt1.exp.beta[s], lt2.exp.beta[s]);
  }

  SPairParts parts;
  parts.u1 = Term{lt2.coeff, lcm.minus(lt1.exp)};
  parts.u2 = Term{lt1.coeff, lcm.minus(lt2.exp)};
  parts.shifted1 = ModMono{parts.u1.exp.plus(g1.sig.mono.exp), g1.sig.mono.idx};
  parts.shifted2 = ModMono{parts.u2.exp.plus(g2.sig.mono.exp), g2.sig.mono.idx};
  parts.spair_op = sub(mul_term(parts.u1, g1.op), mul_term(parts.u2, g2.op));
  return parts;
}

Signature pick_guessed_sig(const SPairParts& parts, const SigOperator& g1,
                           const SigOperator& g2, const SyzygySet& S, const OrderConfig& cfg) {
  if (cmp_sign(parts.shifted1, parts.shifted2, S, cfg) == Cmp::Less)
    return Signature{parts.shifted2, parts.u2.coeff * g2.sig.coeff_tag};
  return Signature{parts.shifted1, parts.u1.coeff * g1.sig.coeff_tag};
}

}  // namespace

SigPair spair(const SigOperator& g1, const SigOperator& g2, const SyzygySet& S,
              const OrderConfig& cfg) {
  SPairParts parts = compute_spair_parts(g1, g2, cfg);
  SigPair pair;
  pair.guessed_sig = pick_guessed_sig(parts, g1, g2, S, cfg);
  pair.spair_op = std::move(parts.spair_op);
  return pair;
}

std::optional<ModMono> find_redundancy(const Operator& f, const Signature& sig,
                                       std::span<const SigOperator> basis, const SyzygySet& S,
                                       const OrderConfig& cfg) {
  if (f.is_zero()) return std::nullopt;
  const Term lt = leading(f, cfg);
  for (const SigOperator& g : basis) {
    if (g.op.is_zero()) continue;
    const Term lt_g = leading(g.op, cfg);
    if (!lt_g.exp.divides(lt.exp)) continue;
    const Term t{lt.coeff / lt_g.coeff, lt.exp.minus(lt_g.exp)};
    if (!(mul_term(t, g.op) == f)) continue;
    const ModMono shifted{t.exp.plus(g.sig.mono.exp), g.sig.mono.idx};
    if (cmp_sign(sig.mono, shifted, S, cfg) == Cmp::Less) return shifted;
  }
  return std::nullopt;
}

namespace {

// Redundancy against the basis together with the fresh element that is
// about to join it.
std::optional<ModMono> redundancy_with_fresh(const Operator& f, const Signature& sig,
                                             std::span<const SigOperator> basis,
                                             const SigOperator& fresh, const SyzygySet& S,
                                             const OrderConfig& cfg) {
  if (auto certified = find_redundancy(f, sig, basis, S, cfg)) return certified;
  return find_redundancy(f, sig, std::span<const SigOperator>(&fresh, 1), S, cfg);
}

}  // namespace

std::vector<SigPair> make_normal_pairs(const SigOperator& fresh,
                                       std::span<const SigOperator> basis, SyzygySet& S,
                                       const OrderConfig& cfg, Stats& stats,
                                       std::uint64_t& pair_seq) {
  std::vector<SigPair> kept;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const SigOperator& other = basis[k];
    ++stats.pairs_generated;

    SPairParts parts = compute_spair_parts(fresh, other, cfg);

    // Known-syzygy multiples have unknown true signatures: not a normal pair.
    if (S.divides_some(parts.shifted1) || S.divides_some(parts.shifted2)) {
      ++stats.pruned_by_syzygy;
      continue;
    }
    // The two shifted signatures must differ.
    if (parts.shifted1 == parts.shifted2) continue;

    SigPair pair;
    pair.guessed_sig = pick_guessed_sig(parts, fresh, other, S, cfg);
    pair.spair_op = std::move(parts.spair_op);
    pair.provenance = {basis.size(), k};  // fresh joins the basis right after
    pair.seq = pair_seq++;

    // A strict maximum on the fresh side cannot come from a trivial cofactor.
    if (pair.guessed_sig.mono == parts.shifted1 && parts.u1.exp.is_trivial())
      throw std::logic_error("normal pair with trivial cofactor on the dominating side");

    if (auto certified = redundancy_with_fresh(pair.spair_op, pair.guessed_sig, basis, fresh,
                                               S, cfg);
        certified.has_value()) {
      S.append_if_new(*certified);
      continue;
    }

    kept.push_back(std::move(pair));
  }
  return kept;
}

void prune(std::vector<SigPair>& pairs, const SyzygySet& S, const OrderConfig& cfg,
           Stats& stats) {
  // Syzygy criterion.
  std::vector<SigPair> survivors;
  survivors.reserve(pairs.size());
  for (auto& p : pairs) {
    if (S.divides_some(p.guessed_sig.mono))
      ++stats.pruned_by_syzygy;
    else
      survivors.push_back(std::move(p));
  }

  // Rewritable criterion: one representative per guessed signature, the one
  // with the smallest spair leading term (a zero spair counts as smallest).
  std::map<ModMono, std::size_t> keeper;
  std::vector<bool> drop(survivors.size(), false);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    auto [it, inserted] = keeper.try_emplace(survivors[i].guessed_sig.mono, i);
    if (inserted) continue;
    const SigPair& held = survivors[it->second];
    const SigPair& contender = survivors[i];
    bool contender_wins = false;
    if (contender.spair_op.is_zero())
      contender_wins = !held.spair_op.is_zero();
    else if (!held.spair_op.is_zero())
      contender_wins = cmp_terms(leading(contender.spair_op, cfg), leading(held.spair_op, cfg),
                                 cfg) == Cmp::Less;
    if (contender_wins) {
      drop[it->second] = true;
      it->second = i;
    } else {
      drop[i] = true;
    }
    ++stats.pruned_rewritable;
  }

  std::vector<SigPair> result;
  result.reserve(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i)
    if (!drop[i]) result.push_back(std::move(survivors[i]));
  pairs = std::move(result);
}

namespace {

// Rewritable criterion against the basis: among all known operators of
// guessed signature sigma (the spair itself and every basis multiple m*g
// with shifted signature exactly sigma), only the one with the smallest
// leading term needs processing.
void switch_to_minimal_representative(SigPair& pair, std::span<const SigOperator> basis,
                                      const OrderConfig& cfg) {
  if (pair.spair_op.is_zero()) return;
  Term best_lead = leading(pair.spair_op, cfg);
  const SigOperator* best = nullptr;
  ExpVec best_cofactor;
  for (const SigOperator& g : basis) {
    if (g.op.is_zero()) continue;
    if (g.sig.mono.idx != pair.guessed_sig.mono.idx) continue;
    if (!g.sig.mono.exp.divides(pair.guessed_sig.mono.exp)) continue;
    const ExpVec m = pair.guessed_sig.mono.exp.minus(g.sig.mono.exp);
    const Term lt_g = leading(g.op, cfg);
    const Term candidate{lt_g.coeff, m.plus(lt_g.exp)};
    if (cmp_terms(candidate, best_lead, cfg) == Cmp::Less) {
      best_lead = candidate;
      best = &g;
      best_cofactor = m;
    }
  }
  if (best != nullptr)
    pair.spair_op = mul_term(Term{Rational(1), best_cofactor}, best->op);
}

// Primitivity filter: a remainder is skipped when some basis multiple m*g
// already has its exact leading monomial and its exact signature (the same
// cofactor m on both).  That multiple is s-top-irreducible whenever the
// remainder is, so it already witnesses everything the remainder could.
bool covered_by_basis(const ExpVec& lead, const ModMono& sig,
                      std::span<const SigOperator> basis, const OrderConfig& cfg) {
  for (const SigOperator& g : basis) {
    if (g.op.is_zero()) continue;
    if (g.sig.mono.idx != sig.idx) continue;
    if (!g.sig.mono.exp.divides(sig.exp)) continue;
    const ExpVec lead_g = leading_monomial(g.op, cfg);
    if (!lead_g.divides(lead)) continue;
    if (sig.exp.minus(g.sig.mono.exp) == lead.minus(lead_g)) return true;
  }
  return false;
}

}  // namespace

SigGrResult sig_gr(const SigOperator& seed, std::vector<SigOperator> basis, SyzygySet syzygies,
                   const OrderConfig& cfg) {
  SigGrResult out;
  Stats& stats = out.stats;
  stats.algorithm = "f5";
  std::uint64_t pair_seq = 0;

  std::vector<SigPair> pairs =
      make_normal_pairs(seed, basis, syzygies, cfg, stats, pair_seq);
  basis.push_back(seed);

  bool have_previous = false;
  ModMono previous_sig;
  std::size_t previous_syzygy_count = syzygies.size();

  while (!pairs.empty()) {
    prune(pairs, syzygies, cfg, stats);
    if (pairs.empty()) break;

    // Pop the pair with the smallest guessed signature.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      const Cmp c =
          cmp_sign(pairs[i].guessed_sig.mono, pairs[best].guessed_sig.mono, syzygies, cfg);
      if (c == Cmp::Less || (c == Cmp::Equal && pairs[i].seq < pairs[best].seq)) best = i;
    }
    SigPair pair = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    static const bool debug = std::getenv("TROPGB_DEBUG") != nullptr;
    if (debug)
      std::cerr << "pop sig=" << debug_string(pair.guessed_sig.mono)
                << " prov=(" << pair.provenance.first << "," << pair.provenance.second
                << ") |P|=" << pairs.size() << " |G|=" << basis.size()
                << " |S|=" << syzygies.size() << " spair=" << debug_string(pair.spair_op, cfg)
                << " processed=" << stats.normal_pairs_processed << "\n";

    // Signatures must leave the queue in nondecreasing order; the earlier
    // signature is compared under the syzygy set as it stood when it was
    // popped, since later additions can flip its membership clause.
    if (have_previous &&
        cmp_sign(pair.guessed_sig.mono, previous_sig, syzygies, cfg, previous_syzygy_count) ==
            Cmp::Less)
      throw std::logic_error("guessed signatures popped out of order");
    if (syzygies.divides_some(pair.guessed_sig.mono))
      throw std::logic_error("popped a signature divisible by a known syzygy");
    have_previous = true;
    previous_sig = pair.guessed_sig.mono;
    previous_syzygy_count = syzygies.size();

    switch_to_minimal_representative(pair, basis, cfg);

    // The basis may have grown since the pair was created.
    if (auto certified =
            find_redundancy(pair.spair_op, pair.guessed_sig, basis, syzygies, cfg);
        certified.has_value()) {
      syzygies.append_if_new(*certified);
      continue;
    }

    ++stats.normal_pairs_processed;
    ReductionOutcome red =
        s_top_reduce(pair.spair_op, pair.guessed_sig, basis, syzygies, cfg,
                     /*with_quotients=*/false);

    if (debug) std::cerr << "  -> remainder " << debug_string(red.remainder, cfg) << "\n";

    if (red.reduced_to_zero) {
      ++stats.zero_reductions;
      syzygies.append(pair.guessed_sig.mono);
    } else {
      // Redundant operators stay out of the basis; each one certifies the
      // leading monomial of a syzygy.
      if (auto certified =
              find_redundancy(red.remainder, pair.guessed_sig, basis, syzygies, cfg);
          certified.has_value()) {
        syzygies.append_if_new(*certified);
        continue;
      }
      if (covered_by_basis(leading_monomial(red.remainder, cfg), pair.guessed_sig.mono, basis,
                           cfg))
        continue;
      if (debug)
        std::cerr << "  add #" << basis.size() << " LM="
                  << debug_string(Operator::from_term(leading(red.remainder, cfg)), cfg)
                  << " sig=" << debug_string(pair.guessed_sig.mono)
                  << " terms=" << red.remainder.term_count() << "\n";
      const SigOperator certified{red.remainder,
                                  Signature{pair.guessed_sig.mono, pair.guessed_sig.coeff_tag}};
      std::vector<SigPair> fresh_pairs =
          make_normal_pairs(certified, basis, syzygies, cfg, stats, pair_seq);
      for (auto& p : fresh_pairs) pairs.push_back(std::move(p));
      basis.push_back(certified);
    }
  }

  out.basis = std::move(basis);
  out.syzygies = std::move(syzygies);
  return out;
}

F5Result f5_groebner(std::span<const Operator> generators, const OrderConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (generators.empty()) throw std::invalid_argument("empty generating set");

  std::vector<Operator> prepared;
  for (const Operator& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (g.n() != cfg.n) throw std::invalid_argument("generator dimension mismatch");
    prepared.push_back(ensure_homogenized(g));
  }

  std::stable_sort(prepared.begin(), prepared.end(),
                   [&cfg](const Operator& a, const Operator& b) {
                     return cmp_terms(leading(a, cfg), leading(b, cfg), cfg) == Cmp::Less;
                   });

  F5Result out;
  out.stats.algorithm = "f5";

  std::vector<SigOperator> basis;
  SyzygySet syzygies;
  int next_index = 1;
  basis.push_back(SigOperator{prepared.front(),
                              Signature{ModMono{ExpVec::zero(cfg.n), next_index}, Rational(1)}});

  for (std::size_t j = 1; j < prepared.size(); ++j) {
    std::vector<Operator> ops;
    ops.reserve(basis.size());
    for (const auto& g : basis) ops.push_back(g.op);
    ReductionOutcome red = normal_form(prepared[j], ops, cfg, /*with_quotients=*/false);
    if (red.reduced_to_zero) continue;  // already in the ideal

    ++next_index;
    const SigOperator seed{red.remainder,
                           Signature{ModMono{ExpVec::zero(cfg.n), next_index}, Rational(1)}};
    SigGrResult round = sig_gr(seed, std::move(basis), std::move(syzygies), cfg);
    basis = std::move(round.basis);
    syzygies = std::move(round.syzygies);
    out.stats.merge_counters(round.stats);
  }

  out.stats.basis_size = basis.size();
  for (const auto& g : basis) {
    if (std::find(out.basis.begin(), out.basis.end(), g.op) == out.basis.end())
      out.basis.push_back(g.op);
    const Operator dehom = dehomogenize(g.op);
    if (std::find(out.basis_dehom.begin(), out.basis_dehom.end(), dehom) ==
        out.basis_dehom.end())
      out.basis_dehom.push_back(dehom);
  }
  out.syzygies = std::move(syzygies);

  const auto stop = std::chrono::steady_clock::now();
  out.stats.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return out;
}

}  // namespace tropgb
