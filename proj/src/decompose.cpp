// Constructive local generation: split a relation of a complete fan into
// relations each supported on the star of a single ray.
//
// Slot ρ holds x_ρ ∈ Z^{S_ρ}, S_ρ the ray set of Star(ρ). Initially x_ρ is the
// ρ-coordinate of r, so Σ x_ρ = r. Slots are processed in ray order; a slot
// whose image V(x_ρ) is nonzero hands that image on to a later slot through
// transfer moves (+y in one slot, -y in a neighbour, y supported on the
// intersection of their stars), which never change Σ x_ρ. The last slot ends
// with V = 0 because the images of all slots sum to V(r) = 0.
//
// A hop needs the defect in the integer span of the shared rays, which can
// fail on non-unimodular cones. Relations outside the span of the star
// relations are rejected up front; if routing still gets stuck, the pieces
// come from an exact solve over the star relations instead.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "fanlat/errors.hpp"
#include "fanlat/filtration.hpp"

namespace fanlat {
namespace {

class Router {
 public:
  Router(const Fan& fan, std::vector<RaySet> stars)
      : fan_(fan),
        v_(fan.ray_matrix()),
        stars_(std::move(stars)),
        slots_(fan.ray_count(), IntVector(fan.ray_count())) {}

  std::vector<IntVector>& slots() { return slots_; }
  std::size_t moves() const { return moves_; }
  std::size_t splits() const { return splits_; }

  IntVector image(std::size_t slot) const { return v_ * std::span<const Integer>(slots_[slot]); }

  // False when some part of the defect cannot be moved to a later slot.
  bool settle(std::size_t k) {
    IntVector defect = image(k);
    if (is_zero(defect)) return true;
    if (k + 1 == slots_.size())
      throw InvariantBreach("last slot carries a nonzero image " + to_string(defect));
    if (route(k, defect, slots_[k])) return true;

    // Route each ray summand of the defect on its own.
    ++splits_;
    const IntVector content = slots_[k];
    for (std::size_t eta = 0; eta < content.size(); ++eta) {
      if (sgn(content[eta]) == 0) continue;
      IntVector carried(content.size());
      carried[eta] = content[eta];
      IntVector part = v_ * std::span<const Integer>(carried);
      if (!route(k, part, carried)) {
        std::ostringstream os;
        os << "defect " << to_string(part) << " (ray " << eta << ") stuck in the star of ray " << k;
        stuck_ = os.str();
        return false;
      }
    }
    return true;
  }

  const std::string& stuck() const { return stuck_; }

 private:
  const RaySet& shared(std::size_t a, std::size_t b) {
    const auto key = std::minmax(a, b);
    auto it = shared_.find(key);
    if (it == shared_.end()) {
      RaySet common;
      std::set_intersection(stars_[a].begin(), stars_[a].end(), stars_[b].begin(), stars_[b].end(),
                            std::back_inserter(common));
      it = shared_.emplace(key, std::move(common)).first;
    }
    return it->second;
  }

  // y supported on shared(a, b) with V(y) = defect, preferring the part of
  // `carried` that lives there.
  std::optional<IntVector> transfer(std::size_t a, std::size_t b, const IntVector& defect,
                                    const IntVector& carried) {
    const RaySet& common = shared(a, b);
    if (common.empty()) return std::nullopt;
    IntVector restricted(carried.size());
    for (std::size_t r : common) restricted[r] = carried[r];
    if (v_ * std::span<const Integer>(restricted) == defect) return restricted;
    auto coeffs = integer_solve(fan_.ray_matrix(common), defect);
    if (!coeffs) return std::nullopt;
    IntVector y(carried.size());
    for (std::size_t j = 0; j < common.size(); ++j) y[common[j]] = (*coeffs)[j];
    return y;
  }

  // Breadth-first search for the nearest later slot; hops must admit a
  // transfer of the full defect. Ties go to the smallest ray index.
  bool route(std::size_t k, const IntVector& defect, IntVector carried) {
    const std::size_t m = slots_.size();
    std::vector<std::size_t> parent(m, m);
    std::vector<IntVector> hop(m);
    std::vector<bool> seen(m, false);
    seen[k] = true;
    std::vector<std::size_t> layer{k};
    std::size_t target = m;
    while (!layer.empty() && target == m) {
      std::vector<std::size_t> next;
      for (std::size_t a : layer)
        for (std::size_t b = 0; b < m; ++b) {
          if (seen[b]) continue;
          const IntVector& from_carried = a == k ? carried : hop[a];
          auto y = transfer(a, b, defect, from_carried);
          if (!y) continue;
          seen[b] = true;
          parent[b] = a;
          hop[b] = std::move(*y);
          next.push_back(b);
        }
      std::sort(next.begin(), next.end());
      for (std::size_t b : next)
        if (b > k) {
          target = b;
          break;
        }
      layer = std::move(next);
    }
    if (target == m) return false;

    std::vector<std::size_t> path{target};
    while (path.back() != k) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 1; i < path.size(); ++i) {
      const IntVector& y = hop[path[i]];
      for (std::size_t j = 0; j < y.size(); ++j) {
        slots_[path[i - 1]][j] -= y[j];
        slots_[path[i]][j] += y[j];
      }
      ++moves_;
    }
    return true;
  }

  const Fan& fan_;
  IntMatrix v_;
  std::vector<RaySet> stars_;
  std::vector<IntVector> slots_;
  std::map<std::pair<std::size_t, std::size_t>, RaySet> shared_;
  std::size_t moves_ = 0;
  std::size_t splits_ = 0;
  std::string stuck_;
};

// Exact solve over the star-kernel generators of all rays, used when routing
// gets stuck although r lies in their span.
std::vector<IntVector> solve_over_stars(const std::vector<RelLattice>& kernels, std::span<const Integer> r) {
  std::vector<IntVector> columns;
  std::vector<std::size_t> owner;
  for (std::size_t rho = 0; rho < kernels.size(); ++rho)
    for (auto& b : kernels[rho].basis()) {
      columns.push_back(std::move(b));
      owner.push_back(rho);
    }
  auto coeffs = integer_solve(IntMatrix::from_columns(columns, r.size()), r);
  if (!coeffs) throw InvariantBreach("relation is in the star lattice but the exact solve failed");
  std::vector<IntVector> slots(kernels.size(), IntVector(r.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < r.size(); ++i) slots[owner[j]][i] += (*coeffs)[j] * columns[j][i];
  return slots;
}

}  // namespace

Decomposition local_decompose(const Fan& fan, std::span<const Integer> r,
                              const DecomposeOptions& options) {
  if (!is_complete(fan)) throw FanError("local decomposition requires a complete fan");
  if (!is_relation(fan, r)) throw NotARelation(to_string(r) + " is not a relation among the rays");

  const std::size_t m = fan.ray_count();
  Decomposition out;
  out.relation.assign(r.begin(), r.end());
  if (is_zero(r)) {
    out.method = "zero";
    return out;
  }

  std::vector<RaySet> stars(m);
  for (std::size_t rho = 0; rho < m; ++rho) stars[rho] = star(fan, fan.cone_of({rho})).rays;

  if (options.single_star_shortcut) {
    for (std::size_t rho = 0; rho < m; ++rho) {
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i)
        if (sgn(r[i]) != 0 && !std::binary_search(stars[rho].begin(), stars[rho].end(), i)) inside = false;
      if (inside) {
        out.method = "single-star";
        out.pieces.push_back({rho, stars[rho], out.relation});
        return out;
      }
    }
  }

  // Routing can only succeed inside the span of the star relations.
  std::vector<RelLattice> kernels;
  for (std::size_t rho = 0; rho < m; ++rho)
    kernels.push_back(rel_lattice_star(fan, fan.cone_of({rho}), SupportPolicy::inclusive));
  std::vector<Sublattice> parts;
  for (const auto& k : kernels) parts.push_back(k.sublattice);
  const Sublattice local = lattice_sum(parts, m);
  if (!local.contains(r)) {
    const auto index = relative_index(local, rel_lattice(fan).sublattice);
    throw NotLocallyGenerated(to_string(r) + " is not a sum of star-supported relations; they generate a sublattice of index " +
                              (index ? index->get_str() : std::string("infinity")) + " in the relation lattice");
  }

  Router router(fan, stars);
  for (std::size_t rho = 0; rho < m; ++rho) router.slots()[rho][rho] = r[rho];
  bool routed = true;
  for (std::size_t k = 0; k < m && routed; ++k) routed = router.settle(k);

  out.moves = router.moves();
  out.split_defects = router.splits();
  std::vector<IntVector> slots;
  if (routed) {
    out.method = "routed";
    slots = router.slots();
  } else {
    out.method = "star-solve";
    out.note = router.stuck();
    slots = solve_over_stars(kernels, r);
  }
  for (std::size_t rho = 0; rho < m; ++rho) {
    if (!is_zero(slots[rho])) out.pieces.push_back({rho, stars[rho], slots[rho]});
  }
  if (!verify_decomposition(fan, out).ok())
    throw InvariantBreach("local decomposition failed its own verification");
  return out;
}

}  // namespace fanlat
