#include "fanlat/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fanlat/errors.hpp"

namespace fanlat::oracle {

std::vector<IntVector> distinct_generators(const std::vector<IntVector>& generators) {
  std::set<IntVector> seen;
  std::vector<IntVector> out;
  for (const auto& g : generators) {
    if (is_zero(g)) continue;
    IntVector negated = g;
    for (auto& x : negated) x = -x;
    if (seen.count(g) || seen.count(negated)) continue;
    seen.insert(g);
    out.push_back(g);
  }
  return out;
}

std::optional<IntVector> find_combination(const std::vector<IntVector>& generators, std::span<const Integer> target,
                                          long bound, std::size_t max_candidates) {
  const std::size_t g = generators.size();
  for (const auto& v : generators)
    if (v.size() != target.size()) throw DimensionError("generator length does not match target");
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
  double total = 1;
  for (std::size_t i = 0; i < g; ++i) total *= static_cast<double>(width);
  if (total > static_cast<double>(max_candidates))
    throw std::length_error("brute-force search space too large");

  IntVector coeffs(g, Integer(-bound));
  IntVector sum(target.size());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += coeffs[i] * generators[i][j];
  while (true) {
    if (std::equal(sum.begin(), sum.end(), target.begin(), target.end())) return coeffs;
    // Odometer step, keeping the running sum in step with the coefficients.
    std::size_t i = 0;
    for (; i < g; ++i) {
      if (coeffs[i] < bound) {
        coeffs[i] += 1;
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += generators[i][j];
        break;
      }
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= 2 * bound * generators[i][j];
      coeffs[i] = -bound;
    }
    if (i == g) return std::nullopt;
  }
}

std::vector<IntVector> level_generators(const FiltrationProfile& profile, std::size_t k) {
  std::vector<IntVector> gens;
  for (const auto& sk : profile.star_kernels) {
    if (sk.codim > k) continue;
    for (auto& v : sk.lattice.basis_vectors()) gens.push_back(std::move(v));
  }
  return distinct_generators(gens);
}

}  // namespace fanlat::oracle
