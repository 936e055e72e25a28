#include "tropgb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tropgb {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, int n) : src_(src), n_(n) {}

  Operator parse() {
    skip_ws();
    if (eof()) throw ParseError("empty expression", pos_);
    Operator total(n_);
    bool negative = consume_sign();
    total = add(total, signed_term(negative));
    skip_ws();
    while (!eof()) {
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      total = add(total, signed_term(c == '-'));
      skip_ws();
    }
    return total;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume_sign() {
    if (!eof() && peek() == '-') {
      ++pos_;
      return true;
    }
    return false;
  }

  Operator signed_term(bool negative) {
    Operator t = parse_term();
    return negative ? negate(t) : t;
  }

  unsigned long parse_uint() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    unsigned long value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1000000000UL) throw ParseError("number too large", pos_);
      ++pos_;
    }
    return value;
  }

  mpz_class parse_integer() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      ++pos_;
    }
    return mpz_class(digits);
  }

  Rational parse_rational() {
    const mpz_class num = parse_integer();
    mpz_class den = 1;
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    return make_rational(num, den);
  }

  Operator parse_factor() {
    skip_ws();
    if (eof()) throw ParseError("expected a variable", pos_);
    const std::size_t var_pos = pos_;
    const char c = peek();
    ExpVec exp = ExpVec::zero(n_);
    if (c == 'h') {
      ++pos_;
      exp.gamma = 1;
    } else if (c == 'x' || c == 'd') {
      ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected a variable index", pos_);
      const unsigned long k = parse_uint();
      if (k < 1 || k > static_cast<unsigned long>(n_))
        throw ParseError("variable index out of range", var_pos);
      if (c == 'x')
        exp.alpha[k - 1] = 1;
      else
        exp.beta[k - 1] = 1;
    } else {
      throw ParseError("unknown variable", var_pos);
    }
    skip_ws();
    unsigned long power = 1;
    if (!eof() && peek() == '^') {
      ++pos_;
      const std::size_t exp_pos = pos_;
      power = parse_uint();
      if (power > 1000) throw ParseError("exponent too large", exp_pos);
    }
    exp.gamma *= static_cast<std::int32_t>(power);
    for (auto& a : exp.alpha) a *= static_cast<std::int32_t>(power);
    for (auto& b : exp.beta) b *= static_cast<std::int32_t>(power);
    return Operator::from_term(Term{Rational(1), exp});
  }

  Operator parse_term() {
    skip_ws();
    if (eof()) throw ParseError("expected a term", pos_);
    Operator product(n_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      product = Operator::from_term(Term{parse_rational(), ExpVec::zero(n_)});
    } else {
      product = parse_factor();
    }
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      product = mul(product, parse_factor());
      skip_ws();
    }
    return product;
  }

  std::string_view src_;
  int n_;
  std::size_t pos_ = 0;
};

void append_power(std::string& out, const std::string& name, std::int32_t power, bool& first) {
  if (power == 0) return;
  if (!first) out += '*';
  first = false;
  out += name;
  if (power > 1) out += "^" + std::to_string(power);
}

std::string monomial_string(const ExpVec& e) {
  std::string out;
  bool first = true;
  for (int i = 0; i < e.n(); ++i)
    append_power(out, "x" + std::to_string(i + 1), e.alpha[static_cast<std::size_t>(i)], first);
  for (int i = 0; i < e.n(); ++i)
    append_power(out, "d" + std::to_string(i + 1), e.beta[static_cast<std::size_t>(i)], first);
  append_power(out, "h", e.gamma, first);
  return out;
}

std::string magnitude_string(const Rational& c) {
  return Rational(abs(c)).get_str();
}

}  // namespace

Operator parse_operator(std::string_view src, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  return ExpressionParser(src, n).parse();
}

std::string to_string(const Term& t) {
  const std::string mono = monomial_string(t.exp);
  if (mono.empty()) return t.coeff.get_str();
  if (t.coeff == 1) return mono;
  if (t.coeff == -1) return "-" + mono;
  return t.coeff.get_str() + "*" + mono;
}

std::string to_string(const Operator& f, const OrderConfig& cfg) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [exp, c] : f.terms()) terms.push_back(Term{c, exp});
  std::sort(terms.begin(), terms.end(), [&cfg](const Term& a, const Term& b) {
    return cmp_terms(a, b, cfg) == Cmp::Greater;
  });

  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const bool negative = t.coeff < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(t.exp);
    const std::string mag = magnitude_string(t.coeff);
    if (mono.empty())
      out += mag;
    else if (mag == "1")
      out += mono;
    else
      out += mag + "*" + mono;
  }
  return out;
}

std::string to_string(const ModMono& m) {
  const std::string mono = monomial_string(m.exp);
  const std::string basis = "e" + std::to_string(m.idx);
  return mono.empty() ? basis : mono + "*" + basis;
}

}  // namespace tropgb
