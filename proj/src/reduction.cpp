#include "tropgb/reduction.hpp"

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>

namespace tropgb {

int ecart(const Operator& f, const Operator& g) {
  int count = 0;
  for (const auto& [exp, c] : g.terms())
    if (f.terms().find(exp) == f.terms().end()) ++count;
  return count;
}

namespace {

struct CacheEntry {
  Operator op;
  ExpVec lead;
  std::map<std::size_t, Operator> quotients;
  Operator tail_remainder;  // used by normal_form only
};

struct Candidate {
  int ecart_value = std::numeric_limits<int>::max();
  bool from_cache = false;
  std::size_t index = 0;       // basis or cache position
  Operator multiple;           // m*g for a basis reducer
  ExpVec cofactor;             // the monomial m
  bool found = false;

  bool beats(const Candidate& other) const {
    if (!other.found) return true;
    if (ecart_value != other.ecart_value) return ecart_value < other.ecart_value;
    if (from_cache != other.from_cache) return !from_cache;
    return index < other.index;
  }
};

void check_descent(const Operator& next, const Term& previous_lead, const OrderConfig& cfg) {
  if (next.is_zero()) return;
  if (cmp_terms(leading(next, cfg), previous_lead, cfg) != Cmp::Less)
    throw std::logic_error("reduction failed to decrease the leading term");
}

Rational cache_correction_factor(const Rational& c, const OrderConfig& cfg) {
  const ExtendedInt vc = val(c, cfg.valuation);
  if (vc.infinite || vc.value <= 0)
    throw std::logic_error("cache correction requires val(c) > 0");
  return Rational(1) / (Rational(1) - c);
}

void rescale_quotients(std::map<std::size_t, Operator>& quotients, const Rational& factor,
                       const Rational& c, const std::map<std::size_t, Operator>& snapshot) {
  for (const auto& [k, h] : snapshot) {
    auto it = quotients.find(k);
    if (it == quotients.end())
      quotients.emplace(k, scale(-c, h));
    else
      it->second = sub(it->second, scale(c, h));
  }
  for (auto& [k, h] : quotients) h = scale(factor, h);
  for (auto it = quotients.begin(); it != quotients.end();)
    it = it->second.is_zero() ? quotients.erase(it) : std::next(it);
}

}  // namespace

ReductionOutcome s_top_reduce(const Operator& f, const Signature& sig,
                              std::span<const SigOperator> basis, const SyzygySet& S,
                              const OrderConfig& cfg, bool with_quotients,
                              ReduceTrace* trace) {
  ReductionOutcome out;
  Operator q = f;
  std::vector<CacheEntry> cache;
  if (trace) trace->push_back(q);

  static const bool debug_red = std::getenv("TROPGB_DEBUG_RED") != nullptr;
  bool debug_this = debug_red && sig.mono.exp.degree() > 40;

  while (!q.is_zero()) {
    const Term lead_q = leading(q, cfg);

    Candidate best;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const SigOperator& g = basis[k];
      if (g.op.is_zero()) continue;
      const ExpVec lead_g = leading_monomial(g.op, cfg);
      if (!lead_g.divides(lead_q.exp)) continue;
      const ExpVec m = lead_q.exp.minus(lead_g);

      // Regular reducers only: the multiple's shifted signature must stay
      // strictly below sig.  The true signature of m*g is at most the
      // shifted one, so this keeps the working signature intact.
      const ModMono guessed{m.plus(g.sig.mono.exp), g.sig.mono.idx};
      if (debug_this) {
        std::cerr << "    cand k=" << k << " sig(g) idx=" << g.sig.mono.idx
                  << " deg=" << g.sig.mono.exp.degree()
                  << " shifted deg=" << guessed.exp.degree() << " verdict="
                  << static_cast<int>(cmp_sign(guessed, sig.mono, S, cfg)) << "\n";
      }
      if (cmp_sign(guessed, sig.mono, S, cfg) != Cmp::Less) continue;

      Candidate c;
      c.multiple = mul_term(Term{Rational(1), m}, g.op);
      c.ecart_value = ecart(q, c.multiple);
      c.from_cache = false;
      c.index = k;
      c.cofactor = m;
      c.found = true;
      if (c.beats(best)) best = std::move(c);
    }
    for (std::size_t t = 0; t < cache.size(); ++t) {
      if (cache[t].lead != lead_q.exp) continue;
      Candidate c;
      c.ecart_value = ecart(q, cache[t].op);
      c.from_cache = true;
      c.index = t;
      c.found = true;
      if (c.beats(best)) best = std::move(c);
    }

    if (debug_this) {
      std::cerr << "  step " << out.steps << " LM(q) only examined once\n";
      debug_this = false;
    }
    if (!best.found) break;  // s-top-irreducible with respect to sig

    Operator next;
    if (!best.from_cache) {
      const Rational c = lead_q.coeff / leading_coefficient(best.multiple, cfg);
      next = sub(q, scale(c, best.multiple));
      if (best.ecart_value > 0)
        cache.push_back(
            {q, lead_q.exp, with_quotients ? out.quotients : std::map<std::size_t, Operator>{}, {}});
      if (with_quotients) {
        auto [it, ignored] = out.quotients.try_emplace(best.index, Operator(f.n()));
        it->second.add_term(best.cofactor, c);
        if (it->second.is_zero()) out.quotients.erase(it);
      }
    } else {
      const CacheEntry& entry = cache[best.index];
      const Rational c = lead_q.coeff / leading_coefficient(entry.op, cfg);
      const Rational factor = cache_correction_factor(c, cfg);
      next = scale(factor, sub(q, scale(c, entry.op)));
      if (best.ecart_value > 0)
        cache.push_back(
            {q, lead_q.exp, with_quotients ? out.quotients : std::map<std::size_t, Operator>{}, {}});
      if (with_quotients) rescale_quotients(out.quotients, factor, c, entry.quotients);
      ++out.cache_corrections;
    }

    check_descent(next, lead_q, cfg);
    q = std::move(next);
    ++out.steps;
    if (trace) trace->push_back(q);
  }

  out.remainder = q;
  out.reduced_to_zero = q.is_zero();
  return out;
}

ReductionOutcome normal_form(const Operator& f, std::span<const Operator> basis,
                             const OrderConfig& cfg, bool with_quotients,
                             ReduceTrace* trace) {
  ReductionOutcome out;
  Operator q = f;
  Operator remainder(f.n());
  std::vector<CacheEntry> cache;
  if (trace) trace->push_back(q);

  while (!q.is_zero()) {
    const Term lead_q = leading(q, cfg);

    Candidate best;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Operator& g = basis[k];
      if (g.is_zero()) continue;
      const ExpVec lead_g = leading_monomial(g, cfg);
      if (!lead_g.divides(lead_q.exp)) continue;
      const ExpVec m = lead_q.exp.minus(lead_g);
      Candidate c;
      c.multiple = mul_term(Term{Rational(1), m}, g);
      c.ecart_value = ecart(q, c.multiple);
      c.from_cache = false;
      c.index = k;
      c.cofactor = m;
      c.found = true;
      if (c.beats(best)) best = std::move(c);
    }
    for (std::size_t t = 0; t < cache.size(); ++t) {
      if (cache[t].lead != lead_q.exp) continue;
      Candidate c;
      c.ecart_value = ecart(q, cache[t].op);
      c.from_cache = true;
      c.index = t;
      c.found = true;
      if (c.beats(best)) best = std::move(c);
    }

    if (!best.found) {
      // No divisor: the leading term is part of the remainder.  The state
      // still enters the cache so a later recurrence of this exponent folds
      // into it instead of looping.
      cache.push_back({q, lead_q.exp,
                       with_quotients ? out.quotients : std::map<std::size_t, Operator>{},
                       remainder});
      remainder.add_term(lead_q.exp, lead_q.coeff);
      Operator next = q;
      next.add_term(lead_q.exp, -lead_q.coeff);
      check_descent(next, lead_q, cfg);
      q = std::move(next);
      ++out.steps;
      if (trace) trace->push_back(q);
      continue;
    }

    Operator next;
    if (!best.from_cache) {
      const Rational c = lead_q.coeff / leading_coefficient(best.multiple, cfg);
      next = sub(q, scale(c, best.multiple));
      if (best.ecart_value > 0)
        cache.push_back({q, lead_q.exp,
                         with_quotients ? out.quotients : std::map<std::size_t, Operator>{},
                         remainder});
      if (with_quotients) {
        auto [it, ignored] = out.quotients.try_emplace(best.index, Operator(f.n()));
        it->second.add_term(best.cofactor, c);
        if (it->second.is_zero()) out.quotients.erase(it);
      }
    } else {
      const CacheEntry& entry = cache[best.index];
      const Rational c = lead_q.coeff / leading_coefficient(entry.op, cfg);
      const Rational factor = cache_correction_factor(c, cfg);
      next = scale(factor, sub(q, scale(c, entry.op)));
      if (best.ecart_value > 0)
        cache.push_back({q, lead_q.exp,
                         with_quotients ? out.quotients : std::map<std::size_t, Operator>{},
                         remainder});
      if (with_quotients) rescale_quotients(out.quotients, factor, c, entry.quotients);
      remainder = scale(factor, sub(remainder, scale(c, entry.tail_remainder)));
      ++out.cache_corrections;
    }

    check_descent(next, lead_q, cfg);
    q = std::move(next);
    ++out.steps;
    if (trace) trace->push_back(q);
  }

  out.remainder = remainder;
  out.reduced_to_zero = remainder.is_zero();
  return out;
}

}  // namespace tropgb
