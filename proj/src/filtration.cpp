#include "fanlat/filtration.hpp"

#include <algorithm>

#include "fanlat/errors.hpp"

namespace fanlat {

std::vector<std::pair<std::size_t, std::size_t>> FiltrationProfile::contributing(std::size_t k) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& sk : star_kernels)
    if (sk.codim == k) out.emplace_back(sk.cone, sk.lattice.rank());
  return out;
}

std::optional<std::size_t> FiltrationProfile::depth(std::span<const Integer> r) const {
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (levels[k].contains(r)) return k;
  return std::nullopt;
}

FiltrationProfile filtration(const Fan& fan, SupportPolicy policy) {
  FiltrationProfile out;
  out.policy = policy;
  out.relations = rel_lattice(fan).sublattice;
  const std::size_t m = fan.ray_count();
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const Cone& tau = fan.cone(i);
    if (tau.rays.empty()) continue;
    out.star_kernels.push_back({i, tau.codim, rel_lattice_star(fan, tau, policy).sublattice});
  }
  Sublattice running(m);
  for (std::size_t k = 0; k <= fan.rank(); ++k) {
    std::vector<Sublattice> parts{running};
    for (const auto& sk : out.star_kernels)
      if (sk.codim == k) parts.push_back(sk.lattice);
    running = lattice_sum(parts, m);
    out.levels.push_back(running);
  }
  return out;
}

std::optional<std::size_t> depth(const Fan& fan, const FiltrationProfile& profile,
                                 std::span<const Integer> r) {
  if (is_zero(r)) throw NotARelation("the zero relation has no filtration depth");
  if (!is_relation(fan, r)) throw NotARelation(to_string(r) + " is not a relation among the rays");
  return profile.depth(r);
}

std::optional<std::size_t> depth(const Fan& fan, std::span<const Integer> r, SupportPolicy policy) {
  return depth(fan, filtration(fan, policy), r);
}

GenerationReport check_generation(const Fan& fan, SupportPolicy policy) {
  GenerationReport out;
  out.policy = policy;
  out.rank = fan.rank();
  try {
    out.complete = is_complete(fan);
  } catch (const FanError&) {
    out.complete = std::nullopt;
  }
  const FiltrationProfile profile = filtration(fan, policy);
  out.relation_rank = profile.relations.rank();
  for (const auto& level : profile.levels) out.level_ranks.push_back(level.rank());
  out.penultimate_equals_relations = lattice_equal(profile.levels[fan.rank() - 1], profile.relations);
  out.top_equals_relations = lattice_equal(profile.levels[fan.rank()], profile.relations);
  out.penultimate_index = relative_index(profile.levels[fan.rank() - 1], profile.relations);
  return out;
}

DecompositionCheck verify_decomposition(const Fan& fan, const Decomposition& d) {
  DecompositionCheck out;
  IntVector total(fan.ray_count());
  out.pieces_are_relations = true;
  out.supports_in_stars = true;
  for (const auto& piece : d.pieces) {
    if (piece.vector.size() != fan.ray_count()) throw DimensionError("piece has wrong length");
    if (!is_relation(fan, piece.vector)) out.pieces_are_relations = false;
    const RaySet support = star(fan, fan.cone_of({piece.ray})).rays;
    for (std::size_t i = 0; i < piece.vector.size(); ++i) {
      total[i] += piece.vector[i];
      if (sgn(piece.vector[i]) != 0 && !std::binary_search(support.begin(), support.end(), i))
        out.supports_in_stars = false;
    }
  }
  out.sums_to_relation = total == d.relation;
  return out;
}

}  // namespace fanlat
