// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanlat/corpus.hpp"
#include "fanlat/filtration.hpp"
#include "fanlat/io.hpp"
#include "fanlat/lattices.hpp"
#include "fanlat/oracle.hpp"
#include "fanlat/refine.hpp"
#include "intlin_properties.hpp"
#include "test_support.hpp"

using namespace fanlat;
using fanlat::testing::vec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<std::string> kCompleteFans{"p2", "p1xp1", "p3", "p2xp1", "blowup_p2"};

Outcome projective_plane(double& limit) {
  limit = 0.1;
  Outcome out;
  const Fan& f = catalog_entry("p2").fan;
  out.require(rel_lattice(f).basis() == std::vector<IntVector>{vec({1, 1, 1})}, "basis is not {(1,1,1)}");
  out.require(depth(f, vec({1, 1, 1}), SupportPolicy::inclusive) == 1u, "inclusive depth is not 1");
  return out;
}

Outcome product_fan(double& limit) {
  limit = 1.0;
  Outcome out;
  const Fan& f = catalog_entry("p2xp1").fan;
  const RelLattice rel = rel_lattice(f);
  const IntVector r1 = vec({1, 1, 1, 0, 0}), r2 = vec({0, 0, 0, 1, 1});
  out.require(rel.rank() == 2, "relation rank is not 2");
  out.require(rel.sublattice == Sublattice::generated_by(5, {r1, r2}), "basis does not span r1, r2");

  const auto inc = filtration(f, SupportPolicy::inclusive);
  const auto exc = filtration(f, SupportPolicy::exclusive);
  out.require(depth(f, exc, r1) == 2u, "exclusive depth of r1 is not 2");
  out.require(depth(f, exc, r2) == 1u, "exclusive depth of r2 is not 1");
  out.require(depth(f, inc, r1) == 1u, "inclusive depth of r1 is not 1");

  const Json report = summary_report(f, {SupportPolicy::inclusive, SupportPolicy::exclusive});
  bool flagged = false;
  for (const auto& d : report["discrepancies"])
    flagged = flagged || (parse_int_vector(d["relation"]) == r1 && d["inclusive_depth"] == 1 &&
                          d["exclusive_depth"] == 2);
  out.require(flagged, "report does not flag the r1 policy discrepancy");

  // Brute force with coefficients in [-3, 3].
  auto found = [&](const FiltrationProfile& p, std::size_t k, const IntVector& r) {
    return oracle::find_combination(oracle::level_generators(p, k), r, 3).has_value();
  };
  out.require(found(exc, 2, r1) && !found(exc, 1, r1), "oracle disagrees on exclusive depth of r1");
  out.require(found(exc, 1, r2) && !found(exc, 0, r2), "oracle disagrees on exclusive depth of r2");
  out.require(found(inc, 1, r1) && !found(inc, 0, r1), "oracle disagrees on inclusive depth of r1");
  return out;
}

Outcome generation(double& limit) {
  limit = 1.0 * static_cast<double>(kCompleteFans.size());
  Outcome out;
  for (const auto& name : kCompleteFans) {
    const auto start = std::chrono::steady_clock::now();
    const Fan& f = catalog_entry(name).fan;
    const auto p = filtration(f, SupportPolicy::inclusive);
    const std::size_t n = f.rank();
    out.require(is_complete(f), name + " is not complete");
    out.require(p.levels[n - 1] == p.relations, name + ": F_{n-1} != L_rel");
    out.require(p.levels[n] == p.relations, name + ": F_n != L_rel");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < 1.0, name + " took longer than 1 s");
  }
  return out;
}

Outcome decomposition(double& limit) {
  limit = 5.0;
  Outcome out;
  for (const auto& name : kCompleteFans) {
    const Fan& f = catalog_entry(name).fan;
    for (const auto& r : rel_lattice(f).basis()) {
      for (bool shortcut : {true, false}) {
        DecomposeOptions options;
        options.single_star_shortcut = shortcut;
        const Decomposition d = local_decompose(f, r, options);
        const DecompositionCheck c = verify_decomposition(f, d);
        const std::string where = name + " " + to_string(r) + (shortcut ? "" : " (routed)");
        out.require(c.sums_to_relation, where + ": pieces do not sum to the relation");
        out.require(c.pieces_are_relations, where + ": a piece is not a relation");
        out.require(c.supports_in_stars, where + ": a piece leaves its star");
      }
    }
  }
  return out;
}

Outcome exclusive_counterpoint(double& limit) {
  limit = 1.0;
  Outcome out;
  const Fan& f = catalog_entry("p3").fan;
  const GenerationReport g = check_generation(f, SupportPolicy::exclusive);
  out.require(g.level_ranks.back() == 0, "exclusive F_n is not rank 0");
  out.require(g.relation_rank == 1, "L_rel is not rank 1");
  out.require(g.theorem_violated(), "report does not mark the exclusive policy as violating generation");
  out.require(generation_json(g)["theorem_violated"] == true, "serialized report lacks the violation flag");
  return out;
}

Outcome functoriality(double& limit) {
  limit = 10.0;
  Outcome out;
  std::mt19937_64 rng(6);
  for (const auto& entry : catalog()) {
    const Fan& f = entry.fan;
    const auto basis = rel_lattice(f).basis();
    std::vector<std::vector<std::optional<std::size_t>>> depths;
    for (auto policy : {SupportPolicy::inclusive, SupportPolicy::exclusive}) {
      const auto p = filtration(f, policy);
      depths.emplace_back();
      for (const auto& r : basis) depths.back().push_back(depth(f, p, r));
    }
    for (int t = 0; t < 20; ++t) {
      const IntMatrix u = fanlat::testing::random_unimodular(rng, f.rank(), 12);
      const Fan g = apply_unimodular(f, u);
      out.require(rel_lattice(g).basis() == basis, entry.name + ": relation basis changed");
      std::size_t i = 0;
      for (auto policy : {SupportPolicy::inclusive, SupportPolicy::exclusive}) {
        const auto p = filtration(g, policy);
        for (std::size_t j = 0; j < basis.size(); ++j)
          out.require(depth(g, p, basis[j]) == depths[i][j], entry.name + ": depth changed");
        ++i;
      }
    }
  }
  return out;
}

Outcome refinement(double& limit) {
  limit = 30.0;
  Outcome out;
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog())
    if (e.fan.simplicial()) entries.push_back(&e);
  std::size_t done = 0;
  for (std::size_t trial = 0; done < 100 && trial < 400; ++trial) {
    const CatalogEntry& e = *entries[trial % entries.size()];
    const auto draw = draw_subdivision(e.fan, 2024, trial);
    if (!draw) continue;
    const Fan g = stellar_subdivide(e.fan, draw->cone, draw->ray);
    const std::string where = e.name + " trial " + std::to_string(trial);
    for (const auto& r : rel_lattice(e.fan).basis())
      out.require(is_relation(g, refinement_injection(e.fan, g, r)), where + ": padded relation not in kernel");
    out.require(rel_lattice(g).rank() == rel_lattice(e.fan).rank() + (g.ray_count() - e.fan.ray_count()),
                where + ": relation rank did not grow by the number of new rays");
    out.require(g.ray_count() == e.fan.ray_count() + 1, where + ": expected one new ray");
    ++done;
  }
  out.require(done == 100, "fewer than 100 subdivisions were drawn");
  return out;
}

Outcome conjecture(double& limit) {
  limit = 30.0;
  Outcome out;
  for (const char* name : {"p2", "p2xp1"}) {
    const ConjectureScan scan = conjecture_scan(catalog_entry(name).fan, SupportPolicy::inclusive, 100, 51);
    out.require(scan.traces.size() == 100, std::string(name) + ": some trials were skipped");
    if (scan.violations() > 0) {
      const std::string path = std::string("counterexample_") + name + ".json";
      write_json_file(path, scan_json(scan)["counterexamples"]);
      out.require(false, std::string(name) + ": " + std::to_string(scan.violations()) +
                             " violations, written to " + path);
    }
  }
  return out;
}

Outcome intlin_properties(double& limit) {
  limit = 5.0;
  Outcome out;
  for (const auto& m : fanlat::testing::property_matrices(500, 9)) {
    if (auto failure = fanlat::testing::check_intlin_properties(m)) {
      out.require(false, *failure);
      break;
    }
  }
  return out;
}

struct Criterion {
  const char* label;
  std::function<Outcome(double&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 projective plane relation basis and depth", projective_plane},
      {"2 product fan depths under both policies with oracle confirmation", product_fan},
      {"3 inclusive generation on complete catalog fans", generation},
      {"4 local decomposition invariants", decomposition},
      {"5 exclusive policy fails generation on p3", exclusive_counterpoint},
      {"6 unimodular invariance of bases and depths", functoriality},
      {"7 refinement injection over 100 stellar subdivisions", refinement},
      {"8 monotonicity scan on p2 and p2xp1", conjecture},
      {"9 intlin property suite", intlin_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    double limit = 0;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.run(limit);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && secs >= limit) {
      outcome.ok = false;
      std::ostringstream os;
      os << "runtime " << secs << " s exceeds " << limit << " s";
      outcome.detail = os.str();
    }
    std::printf("%s  criterion %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.label, secs,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    failures += !outcome.ok;
  }
  return failures == 0 ? 0 : 1;
}
