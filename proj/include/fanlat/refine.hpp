#pragma once

// Stellar subdivisions and the comparison of filtration depths across a
// refinement that keeps every old ray.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanlat/fan.hpp"
#include "fanlat/filtration.hpp"
#include "fanlat/lattices.hpp"

namespace fanlat {

// Replaces every cone containing `sigma` by its joins with the new ray `w`,
// which must lie in the relative interior of `sigma`. The new ray is appended
// after the old rays.
Fan stellar_subdivide(const Fan& fan, const Cone& sigma, std::span<const Integer> w);

// Position of each ray of `before` among the rays of `after`. Throws FanError
// when some ray of `before` is missing.
std::vector<std::size_t> ray_embedding(const Fan& before, const Fan& after);

// Zero-padding of a relation of `before` into the ray coordinates of `after`.
IntVector refinement_injection(const Fan& before, const Fan& after, std::span<const Integer> r);

enum class DepthComparison { preserved, lowered, violation, incomparable };
std::string to_string(DepthComparison c);

struct DepthRecord {
  IntVector relation;  // in the coordinates of `before`
  std::optional<std::size_t> depth_before;
  std::optional<std::size_t> depth_after;
  SupportPolicy policy = SupportPolicy::inclusive;
  DepthComparison comparison = DepthComparison::incomparable;
};

struct SubdivisionTrace {
  std::size_t trial = 0;
  Fan before;
  Fan after;
  std::optional<IntVector> new_ray;      // set for stellar subdivisions
  std::optional<Cone> subdivided_cone;   // cone of `before`
  std::vector<std::size_t> injection;    // before ray -> after ray
  std::vector<DepthRecord> depth_records;

  std::size_t violations() const;
};

// Depth records for every basis relation of L_rel(before). `after` must
// contain the rays of `before` and every cone of `after` must sit inside a
// cone of `before`.
SubdivisionTrace trace_refinement(const Fan& before, const Fan& after, SupportPolicy policy);

struct ConjectureScan {
  SupportPolicy policy = SupportPolicy::inclusive;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SubdivisionTrace> traces;  // ordered by trial index
  std::vector<std::string> skipped;

  std::size_t violations() const;
  std::size_t incomparable() const;
};

// Random stellar subdivisions of a complete simplicial fan. Trial t draws from
// its own generator seeded by (seed, t), so results do not depend on order.
ConjectureScan conjecture_scan(const Fan& fan, SupportPolicy policy, std::size_t trials,
                               std::uint64_t seed);

// The stellar subdivision drawn by trial `trial` of a scan with `seed`.
struct RandomSubdivision {
  Cone cone;
  IntVector ray;
};
std::optional<RandomSubdivision> draw_subdivision(const Fan& fan, std::uint64_t seed, std::size_t trial);

}  // namespace fanlat
