#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "evcom/perm.hpp"

namespace evcom {

struct VerifyRow {
  std::string tag;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool skipped = false;
  std::int64_t ms = 0;
};

struct VerifyOptions {
  int max_n = 6;            ///< largest identity degree the table exercises
  bool skip_oracle = false;  ///< mark the oracle-backed rows SKIPPED
};

/// Runs the whole quantitative verification table: the named families, the
/// sharpness family with its containment profile, the exhaustive universal
/// bound, the seed and block-symmetry memberships, oracle/engine agreement,
/// the scaled nilpotency cases, the lift dual-route sweep, and the engine
/// vs naive-closure comparison.
std::vector<VerifyRow> verify_paper(const VerifyOptions& options = {});

/// One line per row; returns the number of failed (non-skipped) rows.
int print_rows(std::ostream& out, const std::vector<VerifyRow>& rows);

/// Brute-force product closure, the independent check for the subgroup
/// engine. Returns the sorted element set; throws ResourceError above cap.
std::vector<Permutation> naive_closure(int degree, const std::vector<Permutation>& generators,
                                       std::size_t cap = 1000000);

}  // namespace evcom
