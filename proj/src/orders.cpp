#include "tropgb/orders.hpp"

namespace tropgb {

OrderConfig::OrderConfig(int n_in, std::vector<Rational> w_in, std::vector<Rational> omega_in,
                         Tiebreak tiebreak_in, Valuation valuation_in)
    : n(n_in),
      w(std::move(w_in)),
      omega(std::move(omega_in)),
      tiebreak(tiebreak_in),
      valuation(valuation_in) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const auto size = static_cast<std::size_t>(2 * n);
  if (w.size() != size || omega.size() != size)
    throw std::invalid_argument("weight vectors must have 2n entries");
  Rational max_x(0);
  for (int i = 0; i < n; ++i) {
    if (w[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("x-weights must be nonnegative");
    max_x = std::max(max_x, w[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(n + i)] <= max_x)
      throw std::invalid_argument("each d-weight must exceed every x-weight");
}

Rational weight_dot(const std::vector<Rational>& w, const ExpVec& e) {
  Rational acc(0);
  const int n = e.n();
  for (int i = 0; i < n; ++i)
    if (e.alpha[static_cast<std::size_t>(i)] != 0)
      acc += w[static_cast<std::size_t>(i)] * e.alpha[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i)
    if (e.beta[static_cast<std::size_t>(i)] != 0)
      acc += w[static_cast<std::size_t>(n + i)] * e.beta[static_cast<std::size_t>(i)];
  return acc;
}

namespace {

// Lex with precedence d1 > ... > dn > x1 > ... > xn.
Cmp cmp_lex(const ExpVec& a, const ExpVec& b) {
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (a.beta[s] != b.beta[s]) return a.beta[s] < b.beta[s] ? Cmp::Less : Cmp::Greater;
  }
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (a.alpha[s] != b.alpha[s]) return a.alpha[s] < b.alpha[s] ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Equal;
}

// Reverse-lex tail: scan variables from least precedence upward; at the
// first difference the smaller exponent belongs to the larger monomial.
Cmp cmp_revlex_tail(const ExpVec& a, const ExpVec& b) {
  const int n = a.n();
  for (int i = n - 1; i >= 0; --i) {
    const auto s = static_cast<std::size_t>(i);
    if (a.alpha[s] != b.alpha[s]) return a.alpha[s] > b.alpha[s] ? Cmp::Less : Cmp::Greater;
  }
  for (int i = n - 1; i >= 0; --i) {
    const auto s = static_cast<std::size_t>(i);
    if (a.beta[s] != b.beta[s]) return a.beta[s] > b.beta[s] ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Equal;
}

}  // namespace

Cmp cmp_monomials_tiebreak(const ExpVec& a, const ExpVec& b, Tiebreak t) {
  switch (t) {
    case Tiebreak::Lex:
      return cmp_lex(a, b);
    case Tiebreak::GradedLex: {
      const int da = a.xi_degree(), db = b.xi_degree();
      if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
      return cmp_lex(a, b);
    }
    case Tiebreak::GradedRevLex: {
      const int da = a.xi_degree(), db = b.xi_degree();
      if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
      return cmp_revlex_tail(a, b);
    }
  }
  return Cmp::Equal;
}

Cmp cmp_terms(const Term& a, const Term& b, const OrderConfig& cfg) {
  const int da = a.exp.degree(), db = b.exp.degree();
  if (da != db) return da < db ? Cmp::Less : Cmp::Greater;

  const Rational wa = weight_dot(cfg.w, a.exp);
  const Rational wb = weight_dot(cfg.w, b.exp);
  if (wa != wb) return wa < wb ? Cmp::Less : Cmp::Greater;

  // -val(coeff) + omega-weight, exactly; coefficients are nonzero terms so
  // both valuations are finite.
  const ExtendedInt va = val(a.coeff, cfg.valuation);
  const ExtendedInt vb = val(b.coeff, cfg.valuation);
  const Rational ta = weight_dot(cfg.omega, a.exp) - Rational(va.value);
  const Rational tb = weight_dot(cfg.omega, b.exp) - Rational(vb.value);
  if (ta != tb) return ta < tb ? Cmp::Less : Cmp::Greater;

  return cmp_monomials_tiebreak(a.exp, b.exp, cfg.tiebreak);
}

Term leading(const Operator& f, const OrderConfig& cfg) {
  if (f.is_zero()) throw std::domain_error("leading term of the zero operator");
  auto it = f.terms().begin();
  Term best{it->second, it->first};
  for (++it; it != f.terms().end(); ++it) {
    Term current{it->second, it->first};
    if (cmp_terms(best, current, cfg) == Cmp::Less) best = current;
  }
  return best;
}

ExpVec leading_monomial(const Operator& f, const OrderConfig& cfg) {
  return leading(f, cfg).exp;
}

Rational leading_coefficient(const Operator& f, const OrderConfig& cfg) {
  return leading(f, cfg).coeff;
}

bool mod_divides(const ModMono& d, const ModMono& m) {
  return d.idx == m.idx && d.exp.divides(m.exp);
}

void SyzygySet::append_if_new(const ModMono& m) {
  if (!divides_some(m)) monos_.push_back(m);
}

bool SyzygySet::divides_some(const ModMono& m, std::size_t limit) const {
  const std::size_t count = std::min(limit, monos_.size());
  for (std::size_t i = 0; i < count; ++i)
    if (mod_divides(monos_[i], m)) return true;
  return false;
}

Cmp cmp_sign(const ModMono& a, const ModMono& b, const SyzygySet& S, const OrderConfig& cfg,
             std::size_t syzygy_limit) {
  if (a.idx != b.idx) return a.idx < b.idx ? Cmp::Less : Cmp::Greater;

  const int da = a.exp.degree(), db = b.exp.degree();
  if (da != db) return da < db ? Cmp::Less : Cmp::Greater;

  const Rational wa = weight_dot(cfg.w, a.exp);
  const Rational wb = weight_dot(cfg.w, b.exp);
  if (wa != wb) return wa < wb ? Cmp::Less : Cmp::Greater;

  // Known-syzygy membership splits the stratum: non-members below members.
  const bool sa = S.divides_some(a, syzygy_limit);
  const bool sb = S.divides_some(b, syzygy_limit);
  if (sa != sb) return sa ? Cmp::Greater : Cmp::Less;

  // Equal index, degree and w-weight with an equal h-stripped monomial
  // forces an equal gamma, so Equal really means identical.
  return cmp_monomials_tiebreak(a.exp, b.exp, cfg.tiebreak);
}

Cmp cmp_sign(const ModMono& a, const ModMono& b, const SyzygySet& S, const OrderConfig& cfg) {
  return cmp_sign(a, b, S, cfg, S.size());
}

}  // namespace tropgb
