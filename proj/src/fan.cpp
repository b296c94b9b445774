#include "fanlat/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fanlat/errors.hpp"
#include "fanlat/polyhedral.hpp"

namespace fanlat {
namespace {

std::string describe(const RaySet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

bool is_subset(const RaySet& small, const RaySet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void add_all_faces(const RaySet& cone, std::set<RaySet>& out) {
  const std::size_t k = cone.size();
  if (k > 24) throw FanError("cone " + describe(cone) + " has too many rays to enumerate faces");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    RaySet face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) face.push_back(cone[i]);
    out.insert(std::move(face));
  }
}

// Whether the rational cones over `a` and `b` meet only in the cone over
// a ∩ b. Both are simplicial, so this fails iff some nonnegative combination
// of `a` with positive weight off the common face also lies in cone(b).
std::optional<bool> meet_in_common_face(const Fan& fan, const RaySet& a, const RaySet& b,
                                        std::size_t limit) {
  RaySet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const std::size_t n = fan.rank();
  IntMatrix m(n + 1, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = fan.ray(a[i])[r];
    if (!std::binary_search(common.begin(), common.end(), a[i])) m(n, i) = 1;
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.size() + j) = -fan.ray(b[j])[r];
  IntVector rhs(n + 1);
  rhs[n] = 1;
  auto overlap = nonnegative_feasible(m, rhs, limit);
  if (!overlap) return std::nullopt;
  return !*overlap;
}

// Sampled check: random relative-interior points of `a` must avoid cone(b).
bool sampled_separation(const Fan& fan, const Cone& a, const Cone& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(1, 7);
  for (int trial = 0; trial < 16; ++trial) {
    IntVector p(fan.rank());
    for (std::size_t idx : a.rays) {
      const int c = coeff(rng);
      for (std::size_t r = 0; r < fan.rank(); ++r) p[r] += c * fan.ray(idx)[r];
    }
    if (cone_contains(fan, b, p)) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> cone_coordinates(const Fan& fan, const Cone& cone,
                                                      std::span<const Integer> v) {
  if (!fan.simplicial()) throw FanError("cone membership requires a simplicial fan");
  if (v.size() != fan.rank()) throw DimensionError("vector length does not match fan rank");
  if (cone.rays.empty()) {
    if (is_zero(v)) return std::vector<Rational>{};
    return std::nullopt;
  }
  return rational_solve(fan.ray_matrix(cone.rays), v);
}

}  // namespace

std::string to_string(Validation v) {
  switch (v) {
    case Validation::full: return "full";
    case Validation::partial: return "partial";
    case Validation::trusted: return "trusted";
  }
  return "unknown";
}

std::optional<std::size_t> Fan::find_cone(const RaySet& rays) const {
  auto it = std::find_if(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.rays == rays; });
  if (it == cones_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

const Cone& Fan::cone_of(const RaySet& rays) const {
  RaySet sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  auto idx = find_cone(sorted);
  if (!idx) throw FanError("cone " + describe(sorted) + " is not in the fan");
  return cones_[*idx];
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_columns(rays_, rank_); }

IntMatrix Fan::ray_matrix(const RaySet& subset) const {
  IntMatrix m(rank_, subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j)
    for (std::size_t i = 0; i < rank_; ++i) m(i, j) = rays_.at(subset[j])[i];
  return m;
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) throw FanError("the zero vector has no primitive generator");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Fan build_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<RaySet> maximal_cones,
              const FanOptions& options) {
  if (rank == 0) throw FanError("ambient lattice rank must be positive");
  Fan fan;
  fan.rank_ = rank;
  fan.name_ = options.name;

  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank)
      throw DimensionError("ray " + std::to_string(i) + " has length " +
                           std::to_string(rays[i].size()) + ", expected " + std::to_string(rank));
    if (is_zero(rays[i])) throw FanError("zero ray at index " + std::to_string(i));
    IntVector p = primitive(rays[i]);
    auto [it, inserted] = seen.emplace(p, i);
    if (!inserted)
      throw FanError("duplicate ray: rays " + std::to_string(it->second) + " and " +
                     std::to_string(i) + " both normalize to " + to_string(p));
    fan.rays_.push_back(std::move(p));
  }

  auto normalize_cone = [&](RaySet& c) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw FanError("cone " + describe(c) + " repeats a ray index");
    if (!c.empty() && c.back() >= fan.rays_.size())
      throw FanError("cone index out of range in " + describe(c));
  };
  auto independent = [&](const RaySet& c) { return matrix_rank(fan.ray_matrix(c)) == c.size(); };

  std::set<RaySet> all{RaySet{}};
  for (auto& c : maximal_cones) normalize_cone(c);
  if (!options.cones) {
    for (const auto& c : maximal_cones) {
      if (!independent(c))
        throw FanError("dependent rays in simplicial cone " + describe(c) +
                       " (non-simplicial fans need an explicit cone list and trust)");
      add_all_faces(c, all);
    }
  } else {
    for (RaySet c : *options.cones) {
      normalize_cone(c);
      all.insert(std::move(c));
    }
    all.insert(maximal_cones.begin(), maximal_cones.end());
    fan.simplicial_ = std::all_of(all.begin(), all.end(), independent);
    if (fan.simplicial_) {
      for (const auto& c : all)
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
          RaySet face = c;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!all.count(face))
            throw FanError("cone list is not face-closed: " + describe(face) + " missing below " +
                           describe(c));
        }
    } else if (!options.trust) {
      throw FanError("non-simplicial fan requires the trust option");
    } else {
      fan.validation_ = Validation::trusted;
      fan.asserted_complete_ = options.assert_complete;
      fan.findings_.push_back("non-simplicial cone list accepted without intersection checks");
    }
  }
  for (std::size_t i = 0; i < fan.rays_.size(); ++i)
    if (!all.count(RaySet{i})) throw FanError("ray " + std::to_string(i) + " is not a cone of the fan");

  std::vector<RaySet> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RaySet& a, const RaySet& b) { return a.size() < b.size(); });
  for (auto& c : ordered) {
    Cone cone;
    cone.dim = fan.simplicial_ ? c.size() : matrix_rank(fan.ray_matrix(c));
    cone.codim = rank - cone.dim;
    cone.rays = std::move(c);
    fan.cones_.push_back(std::move(cone));
  }
  for (std::size_t i = 0; i < fan.cones_.size(); ++i) {
    const auto& c = fan.cones_[i].rays;
    bool maximal = true;
    for (std::size_t j = i + 1; j < fan.cones_.size() && maximal; ++j) {
      const auto& d = fan.cones_[j].rays;
      if (d.size() > c.size() && is_subset(c, d)) maximal = false;
    }
    if (maximal) fan.maximal_.push_back(i);
  }

  if (fan.simplicial_ && options.validate_intersections) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    bool partial = false;
    for (std::size_t x = 0; x < fan.maximal_.size(); ++x)
      for (std::size_t y = x + 1; y < fan.maximal_.size(); ++y) {
        const Cone& a = fan.cones_[fan.maximal_[x]];
        const Cone& b = fan.cones_[fan.maximal_[y]];
        std::optional<bool> ok;
        if (rank <= options.exact_rank_limit)
          ok = meet_in_common_face(fan, a.rays, b.rays, options.fourier_motzkin_limit);
        if (!ok) {
          partial = true;
          ok = sampled_separation(fan, a, b, rng) && sampled_separation(fan, b, a, rng);
        }
        if (!*ok)
          throw FanError("cones " + describe(a.rays) + " and " + describe(b.rays) +
                         " intersect outside their common face");
      }
    if (partial) {
      fan.validation_ = Validation::partial;
      fan.findings_.push_back("pairwise intersections checked by sampling only");
    }
  } else if (fan.simplicial_) {
    fan.validation_ = Validation::partial;
    fan.findings_.push_back("pairwise intersection validation disabled");
  }
  return fan;
}

Star star(const Fan& fan, const Cone& tau) {
  if (!fan.find_cone(tau.rays)) throw FanError("cone " + describe(tau.rays) + " is not in the fan");
  Star out;
  std::set<std::size_t> rays;
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const auto& c = fan.cones()[i].rays;
    if (!is_subset(tau.rays, c)) continue;
    out.cones.push_back(i);
    rays.insert(c.begin(), c.end());
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

bool is_complete(const Fan& fan) {
  if (!fan.simplicial()) {
    if (fan.asserted_complete()) return *fan.asserted_complete();
    throw FanError("completeness of a non-simplicial fan must be asserted in its metadata");
  }
  const std::size_t n = fan.rank();
  for (std::size_t idx : fan.maximal_cones())
    if (fan.cone(idx).dim != n) return false;

  const auto& maxi = fan.maximal_cones();
  std::vector<std::vector<std::size_t>> adjacent(maxi.size());
  for (const auto& ridge : fan.cones()) {
    if (ridge.dim + 1 != n) continue;
    std::vector<std::size_t> owners;
    for (std::size_t k = 0; k < maxi.size(); ++k)
      if (is_subset(ridge.rays, fan.cone(maxi[k]).rays)) owners.push_back(k);
    if (owners.size() != 2) return false;
    adjacent[owners[0]].push_back(owners[1]);
    adjacent[owners[1]].push_back(owners[0]);
  }
  if (maxi.empty()) return false;
  std::vector<bool> reached(maxi.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j : adjacent[k])
      if (!reached[j]) {
        reached[j] = true;
        queue.push_back(j);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;

  // Sampled cover check: every sampled lattice point must lie in a maximal cone.
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int sample = 0; sample < 32; ++sample) {
    IntVector p(n);
    for (auto& x : p) x = entry(rng);
    bool covered = false;
    for (std::size_t idx : maxi)
      if (cone_contains(fan, fan.cone(idx), p)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

IntMatrix QuotientFan::ray_matrix() const { return IntMatrix::from_columns(rays, quotient_rank); }

QuotientFan localize(const Fan& fan, const Cone& tau) {
  const Star st = star(fan, tau);
  QuotientFan q{fan, tau, fan.rank() - tau.dim, {}, {}, {}, {}, {}};
  const SmithForm f = snf(fan.ray_matrix(tau.rays));
  q.projection = f.u.select_rows(tau.dim, fan.rank());

  std::map<std::size_t, std::size_t> index_of;
  std::map<IntVector, std::size_t> images;
  for (std::size_t r : st.rays) {
    if (std::binary_search(tau.rays.begin(), tau.rays.end(), r)) continue;
    IntVector image = q.projection * std::span<const Integer>(fan.ray(r));
    if (is_zero(image))
      throw FanError("ray " + std::to_string(r) + " lies in the span of " + describe(tau.rays));
    image = primitive(image);
    auto [it, inserted] = images.emplace(image, r);
    if (!inserted)
      q.warnings.push_back("rays " + std::to_string(it->second) + " and " + std::to_string(r) +
                           " have the same image " + to_string(image));
    index_of[r] = q.rays.size();
    q.rays.push_back(std::move(image));
    q.ray_origin.push_back(r);
  }
  for (std::size_t ci : st.cones) {
    RaySet image;
    for (std::size_t r : fan.cone(ci).rays)
      if (auto it = index_of.find(r); it != index_of.end()) image.push_back(it->second);
    std::sort(image.begin(), image.end());
    q.cones.push_back(std::move(image));
  }
  return q;
}

Fan apply_unimodular(const Fan& fan, const IntMatrix& u) {
  if (u.rows() != fan.rank() || u.cols() != fan.rank())
    throw DimensionError("transform must be a square matrix of the fan's rank");
  if (!is_unimodular(u)) throw FanError("transform is not unimodular");
  Fan out = fan;
  for (auto& v : out.rays_) {
    v = u * std::span<const Integer>(v);
    if (primitive(v) != v) throw InvariantBreach("unimodular image of a primitive ray is not primitive");
  }
  return out;
}

bool cone_contains(const Fan& fan, const Cone& cone, std::span<const Integer> v) {
  auto coords = cone_coordinates(fan, cone, v);
  return coords && std::all_of(coords->begin(), coords->end(),
                               [](const Rational& x) { return sgn(x) >= 0; });
}

bool cone_relative_interior_contains(const Fan& fan, const Cone& cone, std::span<const Integer> v) {
  auto coords = cone_coordinates(fan, cone, v);
  return coords && std::all_of(coords->begin(), coords->end(),
                               [](const Rational& x) { return sgn(x) > 0; });
}

}  // namespace fanlat
