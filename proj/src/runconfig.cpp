#include "tropgb/runconfig.hpp"

#include <fstream>

#include "tropgb/parser.hpp"

namespace tropgb {

namespace {

Rational rational_from_json(const nlohmann::json& v, const char* field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      Rational q(v.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(field) + ": malformed rational '" +
                                  v.get<std::string>() + "'");
    }
  }
  throw std::invalid_argument(std::string(field) +
                              ": weights must be integers or \"p/q\" strings");
}

std::vector<Rational> rational_vector(const nlohmann::json& doc, const char* field,
                                      std::size_t expected) {
  if (!doc.contains(field) || !doc[field].is_array())
    throw std::invalid_argument(std::string(field) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : doc[field]) out.push_back(rational_from_json(v, field));
  if (out.size() != expected)
    throw std::invalid_argument(std::string(field) + " must have 2n entries");
  return out;
}

}  // namespace

AlgorithmChoice algorithm_from_string(const std::string& name) {
  if (name == "f5") return AlgorithmChoice::F5;
  if (name == "buchberger") return AlgorithmChoice::Buchberger;
  if (name == "both") return AlgorithmChoice::Both;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string to_string(AlgorithmChoice a) {
  switch (a) {
    case AlgorithmChoice::F5: return "f5";
    case AlgorithmChoice::Buchberger: return "buchberger";
    case AlgorithmChoice::Both: return "both";
  }
  return "both";
}

Tiebreak tiebreak_from_string(const std::string& name) {
  if (name == "lex") return Tiebreak::Lex;
  if (name == "grlex" || name == "graded-lex") return Tiebreak::GradedLex;
  if (name == "grevlex" || name == "graded-reverse-lex") return Tiebreak::GradedRevLex;
  throw std::invalid_argument("unknown tiebreak '" + name + "'");
}

std::string to_string(Tiebreak t) {
  switch (t) {
    case Tiebreak::Lex: return "lex";
    case Tiebreak::GradedLex: return "graded-lex";
    case Tiebreak::GradedRevLex: return "graded-reverse-lex";
  }
  return "lex";
}

RunConfig RunConfig::from_json(const nlohmann::json& doc) {
  RunConfig cfg;
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("config needs an integer field 'n'");
  cfg.n = doc["n"].get<int>();
  if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");

  if (!doc.contains("prime") || !doc["prime"].is_number_integer())
    throw std::invalid_argument("config needs an integer field 'prime'");
  cfg.prime = doc["prime"].get<unsigned long>();

  const auto expected = static_cast<std::size_t>(2 * cfg.n);
  cfg.w = rational_vector(doc, "w", expected);
  cfg.omega = rational_vector(doc, "omega", expected);

  if (doc.contains("tiebreak")) cfg.tiebreak = tiebreak_from_string(doc["tiebreak"]);
  if (doc.contains("algorithm")) cfg.algorithm = algorithm_from_string(doc["algorithm"]);
  if (doc.contains("verify")) cfg.verify = doc["verify"].get<bool>();

  if (!doc.contains("generators") || !doc["generators"].is_array() ||
      doc["generators"].empty())
    throw std::invalid_argument("config needs a nonempty 'generators' array");
  for (const auto& g : doc["generators"]) cfg.generators.push_back(g.get<std::string>());

  cfg.order_config();  // validates prime and weight constraints up front
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
  }
  return from_json(doc);
}

OrderConfig RunConfig::order_config() const {
  return OrderConfig(n, w, omega, tiebreak, Valuation(prime));
}

std::vector<Operator> RunConfig::parsed_generators() const {
  std::vector<Operator> out;
  out.reserve(generators.size());
  for (const auto& src : generators) out.push_back(parse_operator(src, n));
  return out;
}

}  // namespace tropgb
