#include "fanlat/lattices.hpp"

#include <algorithm>
#include <numeric>

#include "fanlat/errors.hpp"

namespace fanlat {
namespace {

std::vector<std::size_t> all_labels(std::size_t m) {
  std::vector<std::size_t> labels(m);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return labels;
}

// Kernel of V restricted to `support`, embedded in Z^{all rays}.
Sublattice kernel_on(const Fan& fan, const RaySet& support) {
  const Sublattice local = integer_kernel(fan.ray_matrix(support));
  IntMatrix lifted(local.rank(), fan.ray_count());
  for (std::size_t i = 0; i < local.rank(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j) lifted(i, support[j]) = local.basis()(i, j);
  return Sublattice::generated_by(fan.ray_count(), lifted);
}

}  // namespace

std::string to_string(SupportPolicy policy) {
  return policy == SupportPolicy::inclusive ? "inclusive" : "exclusive";
}

SupportPolicy parse_policy(const std::string& text) {
  if (text == "inclusive") return SupportPolicy::inclusive;
  if (text == "exclusive") return SupportPolicy::exclusive;
  throw ParseError("unknown support policy '" + text + "'");
}

RayLattice ray_lattice(const Fan& fan) {
  RayLattice out{Sublattice::generated_by(fan.rank(), fan.rays()), std::nullopt};
  out.index = sublattice_index(out.sublattice);
  return out;
}

RelLattice rel_lattice(const Fan& fan) {
  return {all_labels(fan.ray_count()), integer_kernel(fan.ray_matrix())};
}

RaySet star_support(const Fan& fan, const Cone& tau, SupportPolicy policy) {
  RaySet rays = star(fan, tau).rays;
  if (policy == SupportPolicy::exclusive)
    std::erase_if(rays, [&](std::size_t r) {
      return std::binary_search(tau.rays.begin(), tau.rays.end(), r);
    });
  return rays;
}

RelLattice rel_lattice_star(const Fan& fan, const Cone& tau, SupportPolicy policy) {
  if (tau.rays.empty()) throw FanError("star lattices are not defined for the zero cone");
  return {all_labels(fan.ray_count()), kernel_on(fan, star_support(fan, tau, policy))};
}

RelLattice rel_lattice_internal(const Fan& fan, const Cone& tau) {
  if (!fan.find_cone(tau.rays)) throw FanError("cone is not in the fan");
  return {all_labels(fan.ray_count()), kernel_on(fan, tau.rays)};
}

RelLattice rel_lattice_localized(const Fan& fan, const Cone& tau) {
  const QuotientFan q = localize(fan, tau);
  return {q.ray_origin, integer_kernel(q.ray_matrix())};
}

ClassGroup class_group(const Fan& fan) {
  const IntMatrix dual = fan.ray_matrix().transpose();  // M -> Z^{rays}
  if (matrix_rank(dual) != fan.rank())
    throw FanError("class group requires rays spanning the ambient space");
  const SmithForm f = snf(dual);
  ClassGroup out;
  out.free_rank = fan.ray_count() - fan.rank();
  for (const auto& d : smith_diagonal(f.s))
    if (d > 1) out.torsion.push_back(d);
  return out;
}

bool is_relation(const Fan& fan, std::span<const Integer> r) {
  if (r.size() != fan.ray_count()) throw DimensionError("relation length does not match ray count");
  return is_zero(fan.ray_matrix() * r);
}

}  // namespace fanlat
