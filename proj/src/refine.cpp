#include "fanlat/refine.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "fanlat/errors.hpp"

namespace fanlat {
namespace {

// Portable draw in [0, n); std distributions differ between standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t(trial) >> 32)};
  return std::mt19937_64(seq);
}

void check_refines(const Fan& before, const Fan& after) {
  if (!before.simplicial()) throw FanError("refinement checks require a simplicial coarse fan");
  for (std::size_t idx : after.maximal_cones()) {
    const Cone& fine = after.cone(idx);
    const bool inside = std::any_of(before.maximal_cones().begin(), before.maximal_cones().end(),
                                    [&](std::size_t b) {
                                      return std::all_of(fine.rays.begin(), fine.rays.end(), [&](std::size_t r) {
                                        return cone_contains(before, before.cone(b), after.ray(r));
                                      });
                                    });
    if (!inside) throw FanError("a cone of the refined fan is not contained in any cone of the original");
  }
}

SubdivisionTrace trace_with(const Fan& before, const FiltrationProfile& before_profile, const Fan& after,
                            SupportPolicy policy) {
  SubdivisionTrace trace;
  trace.before = before;
  trace.after = after;
  trace.injection = ray_embedding(before, after);
  check_refines(before, after);
  const FiltrationProfile after_profile = filtration(after, policy);
  for (const auto& r : before_profile.relations.basis_vectors()) {
    DepthRecord rec;
    rec.relation = r;
    rec.policy = policy;
    rec.depth_before = before_profile.depth(r);
    rec.depth_after = after_profile.depth(refinement_injection(before, after, r));
    if (!rec.depth_before) rec.comparison = DepthComparison::incomparable;
    else if (!rec.depth_after || *rec.depth_after > *rec.depth_before) rec.comparison = DepthComparison::violation;
    else if (*rec.depth_after == *rec.depth_before) rec.comparison = DepthComparison::preserved;
    else rec.comparison = DepthComparison::lowered;
    trace.depth_records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace

Fan stellar_subdivide(const Fan& fan, const Cone& sigma, std::span<const Integer> w) {
  if (!fan.simplicial()) throw FanError("stellar subdivision requires a simplicial fan");
  const Cone& target = fan.cone_of(sigma.rays);
  if (w.size() != fan.rank()) throw DimensionError("new ray has wrong length");
  const IntVector ray = primitive(w);
  if (std::find(fan.rays().begin(), fan.rays().end(), ray) != fan.rays().end())
    throw FanError("new ray " + to_string(ray) + " equals an existing ray");
  if (!cone_relative_interior_contains(fan, target, ray))
    throw FanError("new ray " + to_string(ray) + " is not in the relative interior of the cone");

  const std::size_t new_index = fan.ray_count();
  std::vector<RaySet> maximal;
  for (std::size_t idx : fan.maximal_cones()) {
    const RaySet& m = fan.cone(idx).rays;
    if (!std::includes(m.begin(), m.end(), target.rays.begin(), target.rays.end())) {
      maximal.push_back(m);
      continue;
    }
    for (std::size_t drop : target.rays) {
      RaySet c;
      std::copy_if(m.begin(), m.end(), std::back_inserter(c), [&](std::size_t r) { return r != drop; });
      c.push_back(new_index);
      maximal.push_back(std::move(c));
    }
  }
  std::vector<IntVector> rays = fan.rays();
  rays.push_back(ray);
  FanOptions options;
  options.name = fan.name();
  return build_fan(fan.rank(), std::move(rays), std::move(maximal), options);
}

std::vector<std::size_t> ray_embedding(const Fan& before, const Fan& after) {
  if (before.rank() != after.rank()) throw FanError("fans live in lattices of different rank");
  std::map<IntVector, std::size_t> position;
  for (std::size_t i = 0; i < after.ray_count(); ++i) position.emplace(after.ray(i), i);
  std::vector<std::size_t> out;
  for (const auto& v : before.rays()) {
    auto it = position.find(v);
    if (it == position.end()) throw FanError("ray " + to_string(v) + " is missing from the refined fan");
    out.push_back(it->second);
  }
  return out;
}

IntVector refinement_injection(const Fan& before, const Fan& after, std::span<const Integer> r) {
  const auto embed = ray_embedding(before, after);
  if (!is_relation(before, r)) throw NotARelation(to_string(r) + " is not a relation of the original fan");
  IntVector out(after.ray_count());
  for (std::size_t i = 0; i < embed.size(); ++i) out[embed[i]] = r[i];
  if (!is_relation(after, out)) throw InvariantBreach("padded relation does not annihilate the refined rays");
  return out;
}

std::string to_string(DepthComparison c) {
  switch (c) {
    case DepthComparison::preserved: return "preserved";
    case DepthComparison::lowered: return "lowered";
    case DepthComparison::violation: return "violation";
    case DepthComparison::incomparable: return "incomparable";
  }
  return "unknown";
}

std::size_t SubdivisionTrace::violations() const {
  return static_cast<std::size_t>(std::count_if(depth_records.begin(), depth_records.end(), [](const auto& r) {
    return r.comparison == DepthComparison::violation;
  }));
}

SubdivisionTrace trace_refinement(const Fan& before, const Fan& after, SupportPolicy policy) {
  return trace_with(before, filtration(before, policy), after, policy);
}

std::size_t ConjectureScan::violations() const {
  std::size_t n = 0;
  for (const auto& t : traces) n += t.violations();
  return n;
}

std::size_t ConjectureScan::incomparable() const {
  std::size_t n = 0;
  for (const auto& t : traces)
    n += static_cast<std::size_t>(std::count_if(t.depth_records.begin(), t.depth_records.end(), [](const auto& r) {
      return r.comparison == DepthComparison::incomparable;
    }));
  return n;
}

std::optional<RandomSubdivision> draw_subdivision(const Fan& fan, std::uint64_t seed, std::size_t trial) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < fan.cones().size(); ++i)
    if (fan.cone(i).dim >= 2) candidates.push_back(i);
  if (candidates.empty()) return std::nullopt;
  auto rng = trial_rng(seed, trial);
  const Cone& cone = fan.cone(candidates[pick(rng, candidates.size())]);
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntVector w(fan.rank());
    for (std::size_t r : cone.rays) {
      const long c = 1 + static_cast<long>(pick(rng, 3));
      for (std::size_t i = 0; i < fan.rank(); ++i) w[i] += c * fan.ray(r)[i];
    }
    w = primitive(w);
    if (std::find(fan.rays().begin(), fan.rays().end(), w) == fan.rays().end()) return RandomSubdivision{cone, w};
  }
  return std::nullopt;
}

ConjectureScan conjecture_scan(const Fan& fan, SupportPolicy policy, std::size_t trials, std::uint64_t seed) {
  if (!fan.simplicial() || !is_complete(fan))
    throw FanError("conjecture scans require a complete simplicial fan");
  ConjectureScan scan;
  scan.policy = policy;
  scan.seed = seed;
  scan.trials = trials;
  if (trials == 0) return scan;
  const FiltrationProfile before = filtration(fan, policy);
  for (std::size_t t = 0; t < trials; ++t) {
    auto draw = draw_subdivision(fan, seed, t);
    if (!draw) {
      scan.skipped.push_back("trial " + std::to_string(t) + ": no admissible subdivision drawn");
      continue;
    }
    try {
      const Fan after = stellar_subdivide(fan, draw->cone, draw->ray);
      SubdivisionTrace trace = trace_with(fan, before, after, policy);
      trace.trial = t;
      trace.new_ray = draw->ray;
      trace.subdivided_cone = draw->cone;
      scan.traces.push_back(std::move(trace));
    } catch (const FanError& e) {
      scan.skipped.push_back("trial " + std::to_string(t) + ": " + e.what());
    }
  }
  return scan;
}

}  // namespace fanlat
