#ifndef TROPGB_RUNCONFIG_HPP
#define TROPGB_RUNCONFIG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tropgb/orders.hpp"

namespace tropgb {

enum class AlgorithmChoice { F5, Buchberger, Both };

/// A full run description as read from a JSON config document.
struct RunConfig {
  int n = 0;
  unsigned long prime = 2;
  std::vector<Rational> w;
  std::vector<Rational> omega;
  Tiebreak tiebreak = Tiebreak::Lex;
  AlgorithmChoice algorithm = AlgorithmChoice::Both;
  bool verify = false;
  std::vector<std::string> generators;

  /// Throws std::invalid_argument on missing fields, malformed rationals or
  /// weight vectors violating the order constraints.
  static RunConfig from_json(const nlohmann::json& doc);
  static RunConfig from_file(const std::string& path);

  OrderConfig order_config() const;
  std::vector<Operator> parsed_generators() const;
};

AlgorithmChoice algorithm_from_string(const std::string& name);
std::string to_string(AlgorithmChoice a);
Tiebreak tiebreak_from_string(const std::string& name);
std::string to_string(Tiebreak t);

}  // namespace tropgb

#endif
