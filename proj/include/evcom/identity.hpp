#pragma once

#include <string>

#include "evcom/errors.hpp"
#include "evcom/perm.hpp"
#include "evcom/rational.hpp"

namespace evcom {

/// The input relation x_1 ... x_n = q * x_{sigma(1)} ... x_{sigma(n)}.
/// q = 1 selects the unscaled theory (monomial identity subgroups H_k and
/// eventual commutativity); q != 1 the scaled theory (nilpotency).
struct TwoTermIdentity {
  int n;
  Permutation sigma;
  Rational q;

  TwoTermIdentity(Permutation sigma_, Rational q_ = Rational(1))
      : n(sigma_.size()), sigma(std::move(sigma_)), q(std::move(q_)) {
    if (q == 0) throw InputError("q must be nonzero");
  }

  bool unscaled() const { return q == 1; }
};

}  // namespace evcom
