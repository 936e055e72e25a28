#include "tropgb/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace tropgb {

int ExpVec::degree() const { return gamma + xi_degree(); }

int ExpVec::xi_degree() const {
  int d = 0;
  for (auto a : alpha) d += a;
  for (auto b : beta) d += b;
  return d;
}

bool ExpVec::divides(const ExpVec& other) const {
  if (gamma > other.gamma) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > other.alpha[i]) return false;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] > other.beta[i]) return false;
  return true;
}

ExpVec ExpVec::plus(const ExpVec& other) const {
  ExpVec r = *this;
  r.gamma += other.gamma;
  for (std::size_t i = 0; i < alpha.size(); ++i) r.alpha[i] += other.alpha[i];
  for (std::size_t i = 0; i < beta.size(); ++i) r.beta[i] += other.beta[i];
  return r;
}

ExpVec ExpVec::minus(const ExpVec& other) const {
  ExpVec r = *this;
  r.gamma -= other.gamma;
  for (std::size_t i = 0; i < alpha.size(); ++i) r.alpha[i] -= other.alpha[i];
  for (std::size_t i = 0; i < beta.size(); ++i) r.beta[i] -= other.beta[i];
  return r;
}

bool ExpVec::is_trivial() const {
  if (gamma != 0) return false;
  for (auto a : alpha)
    if (a != 0) return false;
  for (auto b : beta)
    if (b != 0) return false;
  return true;
}

void Operator::add_term(const ExpVec& exp, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Operator add(const Operator& f, const Operator& g) {
  Operator r = f;
  for (const auto& [exp, c] : g.terms()) r.add_term(exp, c);
  return r;
}

Operator sub(const Operator& f, const Operator& g) {
  Operator r = f;
  for (const auto& [exp, c] : g.terms()) r.add_term(exp, -c);
  return r;
}

Operator negate(const Operator& f) {
  Operator r(f.n());
  for (const auto& [exp, c] : f.terms()) r.add_term(exp, -c);
  return r;
}

Operator scale(const Rational& c, const Operator& f) {
  Operator r(f.n());
  if (c == 0) return r;
  for (const auto& [exp, coeff] : f.terms()) r.add_term(exp, c * coeff);
  return r;
}

namespace {

// k! * C(a,k) * C(b,k), exactly.
mpz_class commutation_coefficient(unsigned long k, unsigned long a, unsigned long b) {
  mpz_class fac, bin_a, bin_b;
  mpz_fac_ui(fac.get_mpz_t(), k);
  mpz_bin_uiui(bin_a.get_mpz_t(), a, k);
  mpz_bin_uiui(bin_b.get_mpz_t(), b, k);
  return fac * bin_a * bin_b;
}

// Accumulates cf*cg * (x^af d^bf h^gf) * (x^ag d^bg h^gg) into `out` by
// commuting d^bf past x^ag index by index.
void accumulate_term_product(const Rational& coeff, const ExpVec& a, const ExpVec& b,
                             Operator& out) {
  const int n = a.n();
  std::vector<std::int32_t> k(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> kmax(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    kmax[static_cast<std::size_t>(i)] =
        std::min(a.beta[static_cast<std::size_t>(i)], b.alpha[static_cast<std::size_t>(i)]);

  for (;;) {
    mpz_class num(1);
    std::int32_t ktotal = 0;
    for (int i = 0; i < n; ++i) {
      const auto ki = static_cast<unsigned long>(k[static_cast<std::size_t>(i)]);
      if (ki != 0)
        num *= commutation_coefficient(
            ki, static_cast<unsigned long>(b.alpha[static_cast<std::size_t>(i)]),
            static_cast<unsigned long>(a.beta[static_cast<std::size_t>(i)]));
      ktotal += k[static_cast<std::size_t>(i)];
    }
    ExpVec exp = ExpVec::zero(n);
    exp.gamma = a.gamma + b.gamma + 2 * ktotal;
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      exp.alpha[s] = a.alpha[s] + b.alpha[s] - k[s];
      exp.beta[s] = a.beta[s] + b.beta[s] - k[s];
    }
    out.add_term(exp, coeff * Rational(num));

    int i = 0;
    while (i < n && k[static_cast<std::size_t>(i)] == kmax[static_cast<std::size_t>(i)]) {
      k[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++k[static_cast<std::size_t>(i)];
  }
}

}  // namespace

Operator commutation_expansion(int d_power, int x_power, int index, int n) {
  if (index < 1 || index > n) throw std::invalid_argument("variable index out of range");
  ExpVec a = ExpVec::zero(n);
  a.beta[static_cast<std::size_t>(index - 1)] = d_power;
  ExpVec b = ExpVec::zero(n);
  b.alpha[static_cast<std::size_t>(index - 1)] = x_power;
  Operator out(n);
  accumulate_term_product(Rational(1), a, b, out);
  return out;
}

Operator mul(const Operator& f, const Operator& g) {
  Operator out(f.n());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) accumulate_term_product(ca * cb, ea, eb, out);
  return out;
}

Operator mul_term(const Term& t, const Operator& f) {
  Operator out(f.n());
  for (const auto& [exp, c] : f.terms())
    accumulate_term_product(t.coeff * c, t.exp, exp, out);
  return out;
}

Operator homogenize(const Operator& f) {
  int max_deg = 0;
  for (const auto& [exp, c] : f.terms()) {
    if (exp.gamma != 0)
      throw std::invalid_argument("homogenize expects an operator free of h");
    max_deg = std::max(max_deg, exp.xi_degree());
  }
  Operator out(f.n());
  for (const auto& [exp, c] : f.terms()) {
    ExpVec e = exp;
    e.gamma = max_deg - exp.xi_degree();
    out.add_term(e, c);
  }
  return out;
}

Operator dehomogenize(const Operator& f) {
  Operator out(f.n());
  for (const auto& [exp, c] : f.terms()) {
    ExpVec e = exp;
    e.gamma = 0;
    out.add_term(e, c);
  }
  return out;
}

bool is_homogeneous(const Operator& f) {
  bool first = true;
  int deg = 0;
  for (const auto& [exp, c] : f.terms()) {
    if (first) {
      deg = exp.degree();
      first = false;
    } else if (exp.degree() != deg) {
      return false;
    }
  }
  return true;
}

Operator ensure_homogenized(const Operator& f) {
  bool has_h = false;
  for (const auto& [exp, c] : f.terms())
    if (exp.gamma != 0) has_h = true;
  if (!has_h) return homogenize(f);
  if (!is_homogeneous(f))
    throw std::invalid_argument("generator contains h but is not homogeneous");
  return f;
}

}  // namespace tropgb
