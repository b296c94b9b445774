#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanlat/intlin.hpp"
#include "test_support.hpp"

namespace fanlat::testing {

// Up to 6x6, entries in [-9, 9]; a fixed seed keeps the suite reproducible.
inline std::vector<IntMatrix> property_matrices(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    // Every fourth matrix is a low-rank product, so kernels and torsion show up.
    if (i % 4 == 3) {
      const std::size_t k = 1 + rng() % std::min(r, c);
      IntMatrix m = random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
      bool small = true;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < c; ++b) small = small && abs(m(a, b)) <= 9;
      if (small) {
        out.push_back(std::move(m));
        continue;
      }
    }
    out.push_back(random_matrix(rng, r, c));
  }
  return out;
}

// Returns a description of the first violated contract, if any.
inline std::optional<std::string> check_intlin_properties(const IntMatrix& m) {
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << what << " for\n" << m;
    return std::optional<std::string>(os.str());
  };
  const HermiteForm hf = hnf(m);
  if (!is_unimodular(hf.u)) return fail("hnf transform not unimodular");
  if (!(hf.u * m == hf.h)) return fail("u*m != h");
  if (!is_hnf(hf.h)) return fail("hnf shape violated");

  const SmithForm sf = snf(m);
  if (!is_unimodular(sf.u) || !is_unimodular(sf.w)) return fail("snf transforms not unimodular");
  if (!(sf.u * m * sf.w == sf.s)) return fail("u*m*w != s");
  for (std::size_t i = 0; i < sf.s.rows(); ++i)
    for (std::size_t j = 0; j < sf.s.cols(); ++j)
      if (i != j && sgn(sf.s(i, j)) != 0) return fail("snf not diagonal");
  const IntVector d = smith_diagonal(sf.s);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) < 0) return fail("negative invariant factor");
    if (i + 1 < d.size() && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
      return fail("divisibility chain broken");
  }

  const Sublattice k = integer_kernel(m);
  if (!(m * k.basis().transpose()).is_zero()) return fail("kernel basis not orthogonal");
  if (k.rank() + hf.rank != m.cols()) return fail("kernel rank wrong");
  if (!(saturation(k) == k)) return fail("kernel not saturated");
  const Sublattice rows = Sublattice::generated_by(m.cols(), m);
  const Sublattice sat = saturation(rows);
  if (!(saturation(sat) == sat)) return fail("saturation not idempotent");
  if (!sat.contains(rows)) return fail("saturation lost generators");
  return std::nullopt;
}

}  // namespace fanlat::testing
