#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evcom/identity.hpp"
#include "evcom/oracle.hpp"
#include "evcom/saturate.hpp"

namespace evcom {

/// One cross-check of a saturation degree against the oracle; agrees is
/// empty when the check was skipped (the reason lands in the warnings).
struct OracleCheck {
  int k = 0;
  std::optional<bool> agrees;
};

struct AnalysisDocument {
  std::optional<TwoTermIdentity> identity;
  SaturationReport report;
  std::optional<int> predicted_degree;
  std::vector<OracleCheck> oracle_checks;
  std::vector<std::string> warnings;
  std::int64_t timing_ms = 0;
};

struct AnalyzeOptions {
  SaturationOptions saturation;
  int oracle_max_k = 6;   ///< cross-check degrees up to this; 0 disables
  int oracle_node_cap = 8;
};

/// classify + saturate + per-degree oracle cross-checks + family
/// annotations. A disagreement between a family's known degree and the
/// computed one is a hard error, never a silently emitted document.
AnalysisDocument analyze(const TwoTermIdentity& identity, AnalyzeOptions options = {});

/// Stable wire format, schema tag "evcom/1". Absent values are null,
/// never omitted.
nlohmann::json document_to_json(const AnalysisDocument& doc);

/// Inverse of document_to_json for everything the schema carries.
AnalysisDocument document_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisDocument& doc);

}  // namespace evcom
