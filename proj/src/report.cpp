#include "evcom/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "evcom/words.hpp"

namespace evcom {

namespace {

using nlohmann::json;

std::string oracle_skip_reason(int k, const AnalyzeOptions& options) {
  if (options.oracle_max_k <= 0) return "oracle cross-checks disabled";
  if (k > options.oracle_max_k) {
    return "k = " + std::to_string(k) + " exceeds --oracle-max-k " +
           std::to_string(options.oracle_max_k);
  }
  return "k = " + std::to_string(k) + " exceeds the oracle node cap " +
         std::to_string(options.oracle_node_cap);
}

bool oracle_agrees_unscaled(const TwoTermIdentity& identity, const ChainRow& row,
                            const EquivalenceGraph& graph) {
  (void)identity;
  Subgroup engine(row.k, row.witness_generators);
  return graph.identity_group() == engine.elements();
}

bool oracle_agrees_scaled(const SaturationReport& report, const ChainRow& row,
                          const EquivalenceGraph& graph) {
  const bool engine_dead =
      report.nilpotency_degree && *report.nilpotency_degree <= row.k;
  if (graph.identity_vanishes() != engine_dead) return false;
  if (engine_dead) return true;
  return graph.identity_group().size() == row.order;
}

}  // namespace

AnalysisDocument analyze(const TwoTermIdentity& identity, AnalyzeOptions options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisDocument doc;
  doc.identity = identity;
  doc.report = saturate(identity, options.saturation);
  doc.predicted_degree = predicted_degree(identity, doc.report.classification);

  if (doc.predicted_degree && doc.report.ec_degree &&
      *doc.predicted_degree != *doc.report.ec_degree) {
    throw std::logic_error("computed degree " + std::to_string(*doc.report.ec_degree) +
                           " contradicts the known family degree " +
                           std::to_string(*doc.predicted_degree));
  }
  if (doc.predicted_degree && !doc.report.ec_degree) {
    doc.warnings.push_back("family degree " + std::to_string(*doc.predicted_degree) +
                           " not reached within max degree " +
                           std::to_string(doc.report.max_degree_used));
  }

  if (has_flag(doc.report.classification, IdentityFlag::Vacuous)) {
    doc.warnings.push_back("vacuous identity: sigma is the identity permutation");
  } else if (has_flag(doc.report.classification, IdentityFlag::FixesEndpoint)) {
    GeneralAnalysis general = analyze_general(identity, options.saturation);
    std::ostringstream msg;
    msg << "sigma fixes an endpoint, so no degree becomes fully symmetric; ";
    if (general.bordered_degree) {
      msg << "interior rearrangements hold from total degree " << *general.bordered_degree
          << " (core degree " << *general.core_degree << " + prefix "
          << general.blocks.fixed_prefix << " + suffix "
          << identity.n - general.blocks.moved_end << ")";
    } else {
      msg << "no core degree was reached within the configured limits";
    }
    doc.warnings.push_back(msg.str());
  }

  for (const ChainRow& row : doc.report.chain) {
    OracleCheck check;
    check.k = row.k;
    if (options.oracle_max_k <= 0 || row.k > options.oracle_max_k ||
        row.k > options.oracle_node_cap) {
      doc.warnings.push_back("oracle check skipped at k = " + std::to_string(row.k) + ": " +
                             oracle_skip_reason(row.k, options));
    } else {
      EquivalenceGraph::BuildOptions build;
      build.node_cap_k = options.oracle_node_cap;
      const EquivalenceGraph graph = EquivalenceGraph::build(identity, row.k, build);
      check.agrees = identity.unscaled() ? oracle_agrees_unscaled(identity, row, graph)
                                         : oracle_agrees_scaled(doc.report, row, graph);
    }
    doc.oracle_checks.push_back(check);
  }

  doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return doc;
}

json document_to_json(const AnalysisDocument& doc) {
  json j;
  j["schema"] = "evcom/1";
  const TwoTermIdentity& identity = *doc.identity;
  j["identity"] = {{"n", identity.n},
                   {"sigma_oneline", format_oneline(identity.sigma)},
                   {"sigma_cycles", format_cycles(identity.sigma)},
                   {"q", format_rational(identity.q)}};
  json chain = json::array();
  for (const ChainRow& row : doc.report.chain) {
    chain.push_back({{"k", row.k},
                     {"order", row.order},
                     {"is_full", row.is_full},
                     {"contains_alternating", row.contains_alternating}});
  }
  j["chain"] = std::move(chain);
  j["ec_degree"] = doc.report.ec_degree ? json(*doc.report.ec_degree) : json(nullptr);
  j["nilpotency_degree"] =
      doc.report.nilpotency_degree ? json(*doc.report.nilpotency_degree) : json(nullptr);
  json classification = json::array();
  for (IdentityFlag flag : doc.report.classification) classification.push_back(flag_name(flag));
  j["classification"] = std::move(classification);
  json oracle = json::array();
  for (const OracleCheck& check : doc.oracle_checks) {
    oracle.push_back({{"k", check.k}, {"agrees", check.agrees ? json(*check.agrees) : json(nullptr)}});
  }
  j["oracle"] = std::move(oracle);
  j["warnings"] = doc.warnings;
  j["timing_ms"] = doc.timing_ms;
  return j;
}

AnalysisDocument document_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != "evcom/1") {
    throw InputError("unsupported document schema");
  }
  AnalysisDocument doc;
  const json& identity = j.at("identity");
  const Permutation sigma =
      parse_perm(identity.at("sigma_oneline").get<std::string>(), identity.at("n").get<int>());
  doc.identity = TwoTermIdentity(sigma, parse_rational(identity.at("q").get<std::string>()));
  doc.report.identity = doc.identity;
  for (const json& row : j.at("chain")) {
    ChainRow r;
    r.k = row.at("k").get<int>();
    r.order = row.at("order").get<std::uint64_t>();
    r.is_full = row.at("is_full").get<bool>();
    r.contains_alternating = row.at("contains_alternating").get<bool>();
    doc.report.chain.push_back(std::move(r));
  }
  if (!j.at("ec_degree").is_null()) doc.report.ec_degree = j.at("ec_degree").get<int>();
  if (!j.at("nilpotency_degree").is_null()) {
    doc.report.nilpotency_degree = j.at("nilpotency_degree").get<int>();
  }
  for (const json& name : j.at("classification")) {
    const auto flag = flag_from_name(name.get<std::string>());
    if (!flag) throw InputError("unknown classification flag " + name.get<std::string>());
    doc.report.classification.push_back(*flag);
  }
  for (const json& check : j.at("oracle")) {
    OracleCheck c;
    c.k = check.at("k").get<int>();
    if (!check.at("agrees").is_null()) c.agrees = check.at("agrees").get<bool>();
    doc.oracle_checks.push_back(c);
  }
  doc.warnings = j.at("warnings").get<std::vector<std::string>>();
  doc.timing_ms = j.at("timing_ms").get<std::int64_t>();
  return doc;
}

std::string render_text(const AnalysisDocument& doc) {
  const TwoTermIdentity& identity = *doc.identity;
  std::ostringstream out;
  Word lhs(static_cast<std::size_t>(identity.n));
  std::iota(lhs.begin(), lhs.end(), 1);
  out << "identity: " << render_word(lhs) << " = ";
  if (!identity.unscaled()) out << format_rational(identity.q) << " * ";
  out << render_word(word_of(identity.sigma)) << "\n";
  out << "sigma: " << format_oneline(identity.sigma) << " = " << format_cycles(identity.sigma)
      << ", q = " << format_rational(identity.q) << "\n";
  if (!doc.report.classification.empty()) {
    out << "classification:";
    for (IdentityFlag flag : doc.report.classification) out << ' ' << flag_name(flag);
    out << "\n";
  }
  if (doc.predicted_degree) out << "family degree: " << *doc.predicted_degree << "\n";
  out << "\n  k  |H_k|      full  alternating\n";
  for (const ChainRow& row : doc.report.chain) {
    out << "  " << row.k << "  ";
    std::string order = std::to_string(row.order);
    out << order << std::string(order.size() < 9 ? 9 - order.size() : 1, ' ');
    out << (row.is_full ? "yes " : "no  ") << "  " << (row.contains_alternating ? "yes" : "no")
        << "\n";
  }
  out << "\n";
  if (doc.report.ec_degree) {
    out << "eventually commutative of degree " << *doc.report.ec_degree << "\n";
  } else if (doc.report.nilpotency_degree) {
    out << "nilpotent of degree " << *doc.report.nilpotency_degree
        << " (every degree-" << *doc.report.nilpotency_degree << " product vanishes)\n";
  } else {
    out << "no terminal degree within max degree " << doc.report.max_degree_used << "\n";
  }
  for (const OracleCheck& check : doc.oracle_checks) {
    out << "oracle k=" << check.k << ": "
        << (check.agrees ? (*check.agrees ? "agree" : "DISAGREE") : "skipped") << "\n";
  }
  for (const std::string& warning : doc.warnings) out << "warning: " << warning << "\n";
  out << "timing: " << doc.timing_ms << " ms\n";
  return out.str();
}

}  // namespace evcom
