#pragma once

// Codimension filtration F_0 ⊆ F_1 ⊆ ... ⊆ F_n of the relation lattice, where
// F_k is generated by relations supported on stars of nonzero cones of
// codimension at most k.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanlat/fan.hpp"
#include "fanlat/intlin.hpp"
#include "fanlat/lattices.hpp"

namespace fanlat {

struct StarKernel {
  std::size_t cone = 0;  // index into Fan::cones()
  std::size_t codim = 0;
  Sublattice lattice;
};

struct FiltrationProfile {
  SupportPolicy policy = SupportPolicy::inclusive;
  Sublattice relations;            // L_rel of the fan
  std::vector<Sublattice> levels;  // F_0 .. F_n
  std::vector<StarKernel> star_kernels;

  std::size_t top() const { return levels.size() - 1; }
  // (cone, star-kernel rank) for the cones of codimension exactly k.
  std::vector<std::pair<std::size_t, std::size_t>> contributing(std::size_t k) const;
  // Smallest k with r in F_k; nullopt when r is outside F_n.
  std::optional<std::size_t> depth(std::span<const Integer> r) const;
};

FiltrationProfile filtration(const Fan& fan, SupportPolicy policy);

// Throws NotARelation for vectors outside L_rel and for the zero vector.
std::optional<std::size_t> depth(const Fan& fan, std::span<const Integer> r, SupportPolicy policy);
std::optional<std::size_t> depth(const Fan& fan, const FiltrationProfile& profile,
                                 std::span<const Integer> r);

struct GenerationReport {
  SupportPolicy policy = SupportPolicy::inclusive;
  std::optional<bool> complete;  // nullopt when completeness cannot be decided
  std::size_t rank = 0;
  std::size_t relation_rank = 0;
  std::vector<std::size_t> level_ranks;
  bool penultimate_equals_relations = false;  // F_{n-1} = L_rel
  bool top_equals_relations = false;          // F_n = L_rel
  // [L_rel : F_{n-1}]; nullopt when F_{n-1} has smaller rank. Values above 1
  // occur on some complete fans with non-unimodular cones.
  std::optional<Integer> penultimate_index;

  // Generation fails although the fan is complete.
  bool theorem_violated() const { return complete.value_or(false) && !penultimate_equals_relations; }
};
GenerationReport check_generation(const Fan& fan, SupportPolicy policy);

struct DecompositionPiece {
  std::size_t ray = 0;  // the star this piece lives on
  RaySet star_rays;
  IntVector vector;
};

struct Decomposition {
  IntVector relation;
  std::vector<DecompositionPiece> pieces;  // nonzero pieces, by ray index
  std::string method;                      // "zero", "single-star", "routed" or "star-solve"
  std::string note;                        // why routing gave way to the exact solve
  std::size_t moves = 0;                   // transfer moves between stars
  std::size_t split_defects = 0;           // defects routed summand by summand
};

struct DecomposeOptions {
  // Return one piece when the relation already lives on a single star.
  bool single_star_shortcut = true;
};

// Throws FanError for non-complete fans, NotARelation for vectors outside
// L_rel and NotLocallyGenerated when r is not a sum of star relations.
Decomposition local_decompose(const Fan& fan, std::span<const Integer> r,
                              const DecomposeOptions& options = {});

struct DecompositionCheck {
  bool sums_to_relation = false;
  bool pieces_are_relations = false;
  bool supports_in_stars = false;

  bool ok() const { return sums_to_relation && pieces_are_relations && supports_in_stars; }
};
DecompositionCheck verify_decomposition(const Fan& fan, const Decomposition& d);

}  // namespace fanlat
