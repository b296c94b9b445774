#pragma once

// Rational fans stored combinatorially: primitive ray generators plus the
// face-closed list of cones, each cone a sorted set of ray indices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fanlat/intlin.hpp"

namespace fanlat {

using RaySet = std::vector<std::size_t>;

struct Cone {
  RaySet rays;  // sorted ray indices
  std::size_t dim = 0;
  std::size_t codim = 0;

  friend bool operator==(const Cone&, const Cone&) = default;
};

enum class Validation {
  full,     // every pair of maximal cones checked exactly
  partial,  // exact check skipped for some pairs; sampled separation instead
  trusted,  // non-simplicial input accepted on the caller's word
};
std::string to_string(Validation v);

struct FanOptions {
  // Full cone list; required for non-simplicial fans.
  std::optional<std::vector<RaySet>> cones;
  // Accept non-simplicial cone lists without intersection validation.
  bool trust = false;
  // Completeness asserted by the caller; only consulted for trusted fans.
  std::optional<bool> assert_complete;
  bool validate_intersections = true;
  // Ambient rank up to which pairwise intersections are checked exactly.
  std::size_t exact_rank_limit = 4;
  std::size_t fourier_motzkin_limit = 4096;
  std::string name;
};

class Fan {
 public:
  std::size_t rank() const { return rank_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }

  // Sorted by dimension, then lexicographically; the zero cone comes first.
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  const Cone& zero_cone() const { return cones_.front(); }
  const std::vector<std::size_t>& maximal_cones() const { return maximal_; }
  std::optional<std::size_t> find_cone(const RaySet& rays) const;
  // Throws FanError if `rays` is not a cone of this fan.
  const Cone& cone_of(const RaySet& rays) const;

  bool simplicial() const { return simplicial_; }
  Validation validation() const { return validation_; }
  const std::vector<std::string>& findings() const { return findings_; }
  const std::string& name() const { return name_; }
  std::optional<bool> asserted_complete() const { return asserted_complete_; }

  // n x |rays| matrix whose columns are the ray generators (the map V).
  IntMatrix ray_matrix() const;
  IntMatrix ray_matrix(const RaySet& subset) const;

 private:
  friend Fan build_fan(std::size_t, std::vector<IntVector>, std::vector<RaySet>, const FanOptions&);
  friend Fan apply_unimodular(const Fan&, const IntMatrix&);

  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<std::size_t> maximal_;
  bool simplicial_ = true;
  Validation validation_ = Validation::full;
  std::vector<std::string> findings_;
  std::string name_;
  std::optional<bool> asserted_complete_;
};

Fan build_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<RaySet> maximal_cones,
              const FanOptions& options = {});

IntVector primitive(std::span<const Integer> v);

struct Star {
  std::vector<std::size_t> cones;  // indices into Fan::cones()
  RaySet rays;
};
Star star(const Fan& fan, const Cone& tau);

// Exact combinatorial completeness test for simplicial fans, cross-checked by
// sampling points and locating each in a maximal cone.
bool is_complete(const Fan& fan);

struct QuotientFan {
  Fan base;
  Cone tau;
  std::size_t quotient_rank = 0;
  // quotient_rank x n; kills the saturated span of tau and maps N onto Z^quotient_rank.
  IntMatrix projection;
  std::vector<IntVector> rays;
  std::vector<std::size_t> ray_origin;  // quotient ray -> base ray index
  std::vector<RaySet> cones;            // images of the cones of Star(tau)
  std::vector<std::string> warnings;

  IntMatrix ray_matrix() const;
};
QuotientFan localize(const Fan& fan, const Cone& tau);

Fan apply_unimodular(const Fan& fan, const IntMatrix& u);

// Whether v lies in the closed cone spanned by the rays of `cone`, or in its
// relative interior. Simplicial cones only.
bool cone_contains(const Fan& fan, const Cone& cone, std::span<const Integer> v);
bool cone_relative_interior_contains(const Fan& fan, const Cone& cone, std::span<const Integer> v);

}  // namespace fanlat
