#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evcom/errors.hpp"
#include "evcom/oracle.hpp"
#include "evcom/report.hpp"
#include "evcom/saturate.hpp"
#include "evcom/verify.hpp"
#include "evcom/words.hpp"

namespace {

using evcom::InputError;
using evcom::Permutation;
using evcom::Rational;
using evcom::TwoTermIdentity;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

Permutation parse_sigma(const std::string& text, std::optional<int> n) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '(' && !n) {
    throw InputError("--sigma uses cycle notation, which requires --n");
  }
  try {
    return evcom::parse_perm(text, n);
  } catch (const InputError& err) {
    throw InputError("invalid --sigma: " + std::string(err.what()));
  }
}

Rational parse_q(const std::string& text) {
  Rational q;
  try {
    q = evcom::parse_rational(text);
  } catch (const InputError& err) {
    throw InputError("invalid --q: " + std::string(err.what()));
  }
  if (q == 0) throw InputError("invalid --q: q must be nonzero");
  return q;
}

struct AnalyzeArgs {
  std::string sigma;
  std::optional<int> n;
  std::string q = "1";
  std::optional<int> max_degree;
  int oracle_max_k = 6;
  std::string format = "text";
  std::string seed_latyshev = "on";
};

int run_analyze(const AnalyzeArgs& args) {
  const TwoTermIdentity identity(parse_sigma(args.sigma, args.n), parse_q(args.q));
  evcom::AnalyzeOptions options;
  options.saturation.max_degree = args.max_degree;
  options.saturation.seed_latyshev = args.seed_latyshev == "on";
  options.oracle_max_k = args.oracle_max_k;
  options.oracle_node_cap = args.oracle_max_k > 8 ? 9 : 8;
  const evcom::AnalysisDocument doc = evcom::analyze(identity, options);
  if (args.format == "json") {
    std::cout << evcom::document_to_json(doc).dump(2) << "\n";
  } else {
    std::cout << evcom::render_text(doc);
  }
  return kExitOk;
}

struct LiftArgs {
  std::string sigma;
  std::optional<int> n;
  std::optional<int> i;
  std::string format = "text";
};

int run_lift(const LiftArgs& args) {
  const Permutation sigma = parse_sigma(args.sigma, args.n);
  const int m = sigma.size();
  if (args.i && (*args.i < 0 || *args.i > m + 1)) {
    throw InputError("invalid --i: must lie in 0.." + std::to_string(m + 1));
  }
  std::vector<int> positions;
  if (args.i) {
    positions.push_back(*args.i);
  } else {
    positions.resize(static_cast<std::size_t>(m) + 2);
    std::iota(positions.begin(), positions.end(), 0);
  }
  json lifts = json::array();
  for (int i : positions) {
    const Permutation tau = evcom::lift_ti(sigma, i);
    const evcom::Word lhs = evcom::word_of(Permutation::identity(m + 1));
    const evcom::Word rhs = evcom::word_of(tau);
    if (args.format == "json") {
      lifts.push_back({{"i", i},
                       {"oneline", evcom::format_oneline(tau)},
                       {"cycles", evcom::format_cycles(tau)},
                       {"lhs", evcom::render_word(lhs)},
                       {"rhs", evcom::render_word(rhs)}});
    } else {
      std::cout << "T_" << i << ": " << evcom::format_oneline(tau) << " = "
                << evcom::format_cycles(tau) << "\n";
      std::cout << "  " << evcom::render_word(lhs) << "\n";
      std::cout << "  = " << evcom::render_word(rhs) << "\n";
    }
  }
  if (args.format == "json") {
    std::cout << json{{"sigma", evcom::format_oneline(sigma)}, {"lifts", lifts}}.dump(2)
              << "\n";
  }
  return kExitOk;
}

struct OracleArgs {
  std::string sigma;
  std::optional<int> n;
  std::string q = "1";
  int k = 0;
  int node_cap = 8;
  std::vector<std::string> queries;
  std::string format = "text";
};

int run_oracle(const OracleArgs& args) {
  const TwoTermIdentity identity(parse_sigma(args.sigma, args.n), parse_q(args.q));
  evcom::EquivalenceGraph::BuildOptions build;
  build.node_cap_k = args.node_cap;
  const auto graph = evcom::EquivalenceGraph::build(identity, args.k, build);

  const auto components = graph.components();
  std::uint64_t dead = 0;
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  for (const auto& component : components) {
    dead += component.dead ? 1 : 0;
    ++size_histogram[component.size];
  }
  const auto group = graph.identity_group();

  json queries = json::array();
  std::vector<std::string> query_lines;
  for (const std::string& raw : args.queries) {
    const auto split = raw.find(';');
    if (split == std::string::npos) {
      throw InputError("invalid --query: expected two permutations separated by ';'");
    }
    const Permutation a = evcom::parse_perm(raw.substr(0, split), args.k);
    const Permutation b = evcom::parse_perm(raw.substr(split + 1), args.k);
    const auto verdict = graph.equivalent(a, b);
    std::string text;
    switch (verdict.kind) {
      case evcom::EquivalenceGraph::Verdict::Kind::Scalar:
        text = evcom::format_rational(verdict.scalar);
        break;
      case evcom::EquivalenceGraph::Verdict::Kind::Zero: text = "ZERO"; break;
      case evcom::EquivalenceGraph::Verdict::Kind::Absent: text = "ABSENT"; break;
    }
    queries.push_back({{"a", evcom::format_oneline(a)},
                       {"b", evcom::format_oneline(b)},
                       {"verdict", text}});
    query_lines.push_back(evcom::format_oneline(a) + " ; " + evcom::format_oneline(b) +
                          " -> " + text);
  }

  if (args.format == "json") {
    json sizes = json::array();
    for (const auto& [size, count] : size_histogram) {
      sizes.push_back({{"size", size}, {"count", count}});
    }
    std::cout << json{{"k", args.k},
                      {"monomials", graph.node_count()},
                      {"components", components.size()},
                      {"dead_components", dead},
                      {"component_sizes", sizes},
                      {"identity_group_order", group.size()},
                      {"identity_vanishes", graph.identity_vanishes()},
                      {"queries", queries}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }

  std::cout << "degree " << args.k << ": " << graph.node_count() << " monomials, "
            << components.size() << " components (" << dead << " dead)\n";
  std::cout << "component sizes:";
  for (const auto& [size, count] : size_histogram) {
    std::cout << " " << size << " x" << count;
  }
  std::cout << "\n";
  if (dead == components.size()) std::cout << "all components dead\n";
  std::cout << "|identity group| = " << group.size() << "\n";
  std::cout << "identity monomial vanishes: " << (graph.identity_vanishes() ? "yes" : "no")
            << "\n";
  for (const std::string& line : query_lines) std::cout << line << "\n";
  return kExitOk;
}

struct VerifyArgs {
  int max_n = 6;
  bool skip_oracle = false;
};

int run_verify(const VerifyArgs& args) {
  evcom::VerifyOptions options;
  options.max_n = args.max_n;
  options.skip_oracle = args.skip_oracle;
  const auto rows = evcom::verify_paper(options);
  const int failed = evcom::print_rows(std::cout, rows);
  return failed == 0 ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  CLI::App app{"exact analysis of two-term monomial identities"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "saturate the identity and report the terminal degree");
  analyze->add_option("--sigma", analyze_args.sigma, "permutation, \"[3,2,1]\" or \"(1 3)\"")
      ->required();
  analyze->add_option("--n", analyze_args.n, "ambient size (required with cycle notation)");
  analyze->add_option("--q", analyze_args.q, "scalar, integer or p/q (default 1)");
  analyze->add_option("--max-degree", analyze_args.max_degree, "largest degree to compute");
  analyze->add_option("--oracle-max-k", analyze_args.oracle_max_k,
                      "cross-check degrees up to this with the oracle (0 disables, max 9)")
      ->check(CLI::Range(0, 9));
  analyze->add_option("--format", analyze_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--seed-latyshev", analyze_args.seed_latyshev,
                      "seed the prefix/suffix commutation identities (on/off)")
      ->check(CLI::IsMember({"on", "off"}));

  LiftArgs lift_args;
  CLI::App* lift = app.add_subcommand("lift", "apply the degree-raising substitutions");
  lift->add_option("--sigma", lift_args.sigma, "permutation to lift")->required();
  lift->add_option("--n", lift_args.n, "ambient size (required with cycle notation)");
  lift->add_option("--i", lift_args.i, "single position (default: all of 0..n+1)");
  lift->add_option("--format", lift_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "build the degree-k consequence graph and answer queries");
  oracle->add_option("--sigma", oracle_args.sigma, "permutation of the identity")->required();
  oracle->add_option("--n", oracle_args.n, "ambient size (required with cycle notation)");
  oracle->add_option("--q", oracle_args.q, "scalar, integer or p/q (default 1)");
  oracle->add_option("--k", oracle_args.k, "degree of the graph (k! nodes)")->required();
  oracle->add_option("--node-cap", oracle_args.node_cap,
                     "largest admissible k (default 8; 9 needs this raised)")
      ->check(CLI::Range(1, 9));
  oracle->add_option("--query", oracle_args.queries,
                     "pair \"a;b\" to test for equivalence (repeatable)");
  oracle->add_option("--format", oracle_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run the quantitative verification table");
  verify->add_option("--max-n", verify_args.max_n, "largest identity degree (default 6)")
      ->check(CLI::Range(3, 7));
  verify->add_flag("--skip-oracle", verify_args.skip_oracle, "skip the oracle-backed rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(lift)) return run_lift(lift_args);
    if (app.got_subcommand(oracle)) return run_oracle(oracle_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
  } catch (const evcom::SaturationCapError& err) {
    std::cerr << "resource limit: " << err.what() << "\n";
    if (!err.partial().chain.empty()) {
      std::cerr << "partial chain computed through degree " << err.partial().chain.back().k
                << "\n";
    }
    return kExitResource;
  } catch (const evcom::ResourceError& err) {
    std::cerr << "resource limit: " << err.what() << "\n";
    return kExitResource;
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
