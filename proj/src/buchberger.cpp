#include "tropgb/buchberger.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <queue>

#include "tropgb/reduction.hpp"

namespace tropgb {

namespace {

ExpVec lead_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec lcm = a;
  lcm.gamma = std::max(a.gamma, b.gamma);
  for (int i = 0; i < lcm.n(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    lcm.alpha[s] = std::max(a.alpha[s], b.alpha[s]);
    lcm.beta[s] = std::max(a.beta[s], b.beta[s]);
  }
  return lcm;
}

// Queue entry with the comparison data precomputed; the heap pops the
// smallest lcm monomial, ties by creation order.
struct PendingPair {
  std::size_t first = 0, second = 0;
  ExpVec lcm;
  int degree = 0;
  Rational w_weight;
  Rational omega_weight;
  std::uint64_t seq = 0;
};

struct PairAfter {
  const OrderConfig* cfg;
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.w_weight != b.w_weight) return a.w_weight > b.w_weight;
    if (a.omega_weight != b.omega_weight) return a.omega_weight > b.omega_weight;
    const Cmp c = cmp_monomials_tiebreak(a.lcm, b.lcm, cfg->tiebreak);
    if (c != Cmp::Equal) return c == Cmp::Greater;
    return a.seq > b.seq;
  }
};

Operator spair_of(const Operator& g1, const Operator& g2, const OrderConfig& cfg) {
  const Term lt1 = leading(g1, cfg);
  const Term lt2 = leading(g2, cfg);
  const ExpVec lcm = lead_lcm(lt1.exp, lt2.exp);
  const Term u1{lt2.coeff, lcm.minus(lt1.exp)};
  const Term u2{lt1.coeff, lcm.minus(lt2.exp)};
  return sub(mul_term(u1, g1), mul_term(u2, g2));
}

}  // namespace

BuchbergerResult buchberger(std::span<const Operator> generators, const OrderConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (generators.empty()) throw std::invalid_argument("empty generating set");

  std::vector<Operator> basis;
  for (const Operator& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (g.n() != cfg.n) throw std::invalid_argument("generator dimension mismatch");
    basis.push_back(ensure_homogenized(g));
  }

  BuchbergerResult out;
  out.stats.algorithm = "buchberger";

  std::uint64_t seq = 0;
  std::priority_queue<PendingPair, std::vector<PendingPair>, PairAfter> queue{PairAfter{&cfg}};
  auto enqueue = [&](std::size_t i, std::size_t j) {
    PendingPair p;
    p.first = i;
    p.second = j;
    p.lcm = lead_lcm(leading_monomial(basis[i], cfg), leading_monomial(basis[j], cfg));
    p.degree = p.lcm.degree();
    p.w_weight = weight_dot(cfg.w, p.lcm);
    p.omega_weight = weight_dot(cfg.omega, p.lcm);
    p.seq = seq++;
    queue.push(std::move(p));
    ++out.stats.pairs_generated;
  };

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

  while (!queue.empty()) {
    const PendingPair pair = queue.top();
    queue.pop();
    ++out.stats.normal_pairs_processed;

    const Operator sp = spair_of(basis[pair.first], basis[pair.second], cfg);
    ReductionOutcome red = normal_form(sp, basis, cfg, /*with_quotients=*/false);
    if (red.reduced_to_zero) {
      ++out.stats.zero_reductions;
      continue;
    }
    const std::size_t fresh = basis.size();
    basis.push_back(red.remainder);
    for (std::size_t i = 0; i < fresh; ++i) enqueue(i, fresh);
  }

  out.stats.basis_size = basis.size();
  for (const auto& g : basis) {
    if (std::find(out.basis.begin(), out.basis.end(), g) == out.basis.end())
      out.basis.push_back(g);
    const Operator dehom = dehomogenize(g);
    if (std::find(out.basis_dehom.begin(), out.basis_dehom.end(), dehom) ==
        out.basis_dehom.end())
      out.basis_dehom.push_back(dehom);
  }

  const auto stop = std::chrono::steady_clock::now();
  out.stats.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return out;
}

bool verify_groebner(std::span<const Operator> basis, const OrderConfig& cfg) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Operator sp = spair_of(basis[i], basis[j], cfg);
      if (!normal_form(sp, basis, cfg, /*with_quotients=*/false).reduced_to_zero)
        return false;
    }
  }
  return true;
}

namespace {

bool covered_by(std::span<const Operator> a, std::span<const Operator> b,
                const OrderConfig& cfg) {
  for (const Operator& f : a) {
    const ExpVec lm = leading_monomial(f, cfg);
    bool divided = false;
    for (const Operator& g : b) {
      if (leading_monomial(g, cfg).divides(lm)) {
        divided = true;
        break;
      }
    }
    if (!divided) return false;
  }
  return true;
}

}  // namespace

bool same_leading_ideal(std::span<const Operator> a, std::span<const Operator> b,
                        const OrderConfig& cfg) {
  return covered_by(a, b, cfg) && covered_by(b, a, cfg);
}

}  // namespace tropgb
