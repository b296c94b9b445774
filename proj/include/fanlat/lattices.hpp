#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanlat/fan.hpp"
#include "fanlat/intlin.hpp"

namespace fanlat {

// Which rays of Star(tau) a star-supported relation may use.
//   inclusive: every ray of the star, tau's own rays included.
//   exclusive: only star rays outside tau.
enum class SupportPolicy { inclusive, exclusive };

std::string to_string(SupportPolicy policy);
SupportPolicy parse_policy(const std::string& text);

struct RayLattice {
  Sublattice sublattice;
  std::optional<Integer> index;  // [N : L]; nullopt when infinite
};

// A sublattice of the free group on `ray_labels`. Labels are ray indices of
// the fan the lattice was computed from.
struct RelLattice {
  std::vector<std::size_t> ray_labels;
  Sublattice sublattice;

  std::size_t rank() const { return sublattice.rank(); }
  std::vector<IntVector> basis() const { return sublattice.basis_vectors(); }
};

RayLattice ray_lattice(const Fan& fan);
RelLattice rel_lattice(const Fan& fan);

// Relations supported on the rays of Star(tau), zero-extended to all rays.
RelLattice rel_lattice_star(const Fan& fan, const Cone& tau, SupportPolicy policy);
// Support set used by rel_lattice_star.
RaySet star_support(const Fan& fan, const Cone& tau, SupportPolicy policy);

// Relations among tau's own rays, zero-extended to all rays.
RelLattice rel_lattice_internal(const Fan& fan, const Cone& tau);

// Relation lattice of the localized fan; labels are the base rays the
// quotient rays came from.
RelLattice rel_lattice_localized(const Fan& fan, const Cone& tau);

struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};
ClassGroup class_group(const Fan& fan);

// Whether r is an integer relation among the rays: sum r_i v_i = 0.
bool is_relation(const Fan& fan, std::span<const Integer> r);

}  // namespace fanlat
