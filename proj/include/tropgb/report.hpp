#ifndef TROPGB_REPORT_HPP
#define TROPGB_REPORT_HPP

#include <json.hpp>

#include "tropgb/runconfig.hpp"

namespace tropgb {

struct RunReport {
  nlohmann::json document;
  bool verification_requested = false;
  bool verification_ok = true;
};

/// Runs the configured engines and assembles the JSON report: bases
/// (homogenized and dehomogenized), discovered syzygy leading monomials,
/// per-algorithm stats, and verification verdicts when requested.  The
/// document is byte-stable across runs except for the elapsed_ms fields.
RunReport run(const RunConfig& cfg);

/// Human-readable rendering for stdout.
std::string render_text(const RunReport& report);

}  // namespace tropgb

#endif
