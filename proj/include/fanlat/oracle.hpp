#pragma once

// Brute-force lattice membership: enumerate integer coefficient vectors with
// entries in [-bound, bound] over a generator list. Used to cross-check the
// normal-form membership test.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fanlat/filtration.hpp"
#include "fanlat/intlin.hpp"

namespace fanlat::oracle {

// Generators with duplicates (up to sign) and zero vectors removed.
std::vector<IntVector> distinct_generators(const std::vector<IntVector>& generators);

// Coefficients c with sum c_i g_i = target, |c_i| <= bound, if any exist.
// Throws std::length_error when more than `max_candidates` vectors would be tried.
std::optional<IntVector> find_combination(const std::vector<IntVector>& generators, std::span<const Integer> target,
                                          long bound, std::size_t max_candidates = 50'000'000);

// Star-kernel basis vectors of every nonzero cone with codimension <= k.
std::vector<IntVector> level_generators(const FiltrationProfile& profile, std::size_t k);

}  // namespace fanlat::oracle
