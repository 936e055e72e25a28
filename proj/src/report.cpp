#include "tropgb/report.hpp"

#include <sstream>

#include "tropgb/buchberger.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/sigengine.hpp"

namespace tropgb {

namespace {

nlohmann::json stats_json(const Stats& s) {
  return {
      {"algorithm", s.algorithm},
      {"pairs_generated", s.pairs_generated},
      {"pruned_by_syzygy", s.pruned_by_syzygy},
      {"pruned_rewritable", s.pruned_rewritable},
      {"normal_pairs_processed", s.normal_pairs_processed},
      {"zero_reductions", s.zero_reductions},
      {"basis_size", s.basis_size},
      {"elapsed_ms", s.elapsed_seconds * 1000.0},
  };
}

nlohmann::json basis_json(const std::vector<Operator>& basis, const OrderConfig& order) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : basis) arr.push_back(to_string(g, order));
  return arr;
}

}  // namespace

RunReport run(const RunConfig& cfg) {
  RunReport report;
  report.verification_requested = cfg.verify;

  const OrderConfig order = cfg.order_config();
  const std::vector<Operator> generators = cfg.parsed_generators();

  nlohmann::json& doc = report.document;
  doc["n"] = cfg.n;
  doc["prime"] = cfg.prime;
  doc["tiebreak"] = to_string(cfg.tiebreak);
  doc["algorithm"] = to_string(cfg.algorithm);
  doc["generators"] = cfg.generators;

  const bool run_f5 =
      cfg.algorithm == AlgorithmChoice::F5 || cfg.algorithm == AlgorithmChoice::Both;
  const bool run_buchberger =
      cfg.algorithm == AlgorithmChoice::Buchberger || cfg.algorithm == AlgorithmChoice::Both;

  F5Result f5;
  BuchbergerResult bb;

  if (run_f5) {
    f5 = f5_groebner(generators, order);
    nlohmann::json block;
    block["basis"] = basis_json(f5.basis_dehom, order);
    block["basis_homogenized"] = basis_json(f5.basis, order);
    nlohmann::json syz = nlohmann::json::array();
    for (const auto& m : f5.syzygies.monos()) syz.push_back(to_string(m));
    block["syzygy_leading_monomials"] = syz;
    block["stats"] = stats_json(f5.stats);
    if (cfg.verify) {
      const bool ok = verify_groebner(f5.basis, order);
      block["verified"] = ok;
      report.verification_ok = report.verification_ok && ok;
    }
    doc["f5"] = block;
  }

  if (run_buchberger) {
    bb = buchberger(generators, order);
    nlohmann::json block;
    block["basis"] = basis_json(bb.basis_dehom, order);
    block["basis_homogenized"] = basis_json(bb.basis, order);
    block["stats"] = stats_json(bb.stats);
    if (cfg.verify) {
      const bool ok = verify_groebner(bb.basis, order);
      block["verified"] = ok;
      report.verification_ok = report.verification_ok && ok;
    }
    doc["buchberger"] = block;
  }

  if (cfg.verify && run_f5 && run_buchberger) {
    const bool same = same_leading_ideal(bb.basis, f5.basis, order);
    doc["same_leading_ideal"] = same;
    report.verification_ok = report.verification_ok && same;
  }

  return report;
}

std::string render_text(const RunReport& report) {
  const nlohmann::json& doc = report.document;
  std::ostringstream out;
  for (const char* engine : {"f5", "buchberger"}) {
    if (!doc.contains(engine)) continue;
    const auto& block = doc[engine];
    out << engine << " basis (" << block["basis"].size() << " elements):\n";
    for (const auto& g : block["basis"]) out << "  " << g.get<std::string>() << "\n";
    const auto& stats = block["stats"];
    out << "  pairs: " << stats["pairs_generated"] << " generated, "
        << stats["normal_pairs_processed"] << " reduced, " << stats["zero_reductions"]
        << " to zero";
    if (engine == std::string("f5"))
      out << ", pruned " << stats["pruned_by_syzygy"] << " by syzygy / "
          << stats["pruned_rewritable"] << " rewritable";
    out << "\n";
    if (block.contains("verified"))
      out << "  verified: " << (block["verified"].get<bool>() ? "yes" : "NO") << "\n";
  }
  if (doc.contains("same_leading_ideal"))
    out << "same leading ideal: " << (doc["same_leading_ideal"].get<bool>() ? "yes" : "NO")
        << "\n";
  return out.str();
}

}  // namespace tropgb
