#pragma once

/**
 * @file kodaira.hpp
 * @brief Euler number, K^2 and signature of the double Kodaira fibration X2.
 */

#include <optional>
#include <string>

#include "slopestab/numerics.hpp"
#include "slopestab/surfaces.hpp"

namespace slopestab {

struct KodairaInvariants {
  BigInt d;
  BigInt p;  // genus of the base curve B
  BigInt fiber_genus;
  BigInt euler;
  BigInt K_squared;
  BigInt signature;
  /// Set when d was overridden rather than taken as r^(2q).
  std::optional<std::string> note;
};

/// Closed forms. With include_branch_terms = false every |G| term is dropped,
/// which is the unbranched product direction (signature 0).
KodairaInvariants invariants(const KodairaParams& params, bool include_branch_terms = true);

/// K_X2^2 computed on the X2 intersection lattice.
BigInt invariants_from_lattice(const KodairaParams& params);

}  // namespace slopestab
