// fanlat: command-line front end. Reports go to stdout (or --json <path>) as
// JSON; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error,
// 3 internal invariant breach.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanlat/corpus.hpp"
#include "fanlat/errors.hpp"
#include "fanlat/filtration.hpp"
#include "fanlat/io.hpp"
#include "fanlat/lattices.hpp"
#include "fanlat/oracle.hpp"
#include "fanlat/refine.hpp"

using namespace fanlat;

namespace {

constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;
constexpr int kInvariantBreach = 3;

struct Options {
  std::string fan;
  std::string policy;
  std::string relation;
  std::string cone;
  std::string ray;
  std::string json_path;
  std::string fan_out;
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  long max_coeff = 0;
  bool trust = false;
  bool no_shortcut = false;
};

Fan load_fan(const Options& o) {
  const std::string prefix = "catalog:";
  if (o.fan.rfind(prefix, 0) == 0) {
    const std::string name = o.fan.substr(prefix.size());
    for (const auto& e : catalog())
      if (e.name == name) return e.fan;
    throw ParseError("no catalog entry named '" + name + "'");
  }
  return read_fan_file(o.fan, o.trust);
}

std::vector<SupportPolicy> policies(const std::string& text) {
  if (text == "both") return {SupportPolicy::inclusive, SupportPolicy::exclusive};
  return {parse_policy(text)};
}

RaySet parse_cone(const Fan& fan, const std::string& text) {
  RaySet out;
  for (const auto& x : parse_int_list(text)) {
    if (sgn(x) < 0 || x >= fan.ray_count())
      throw ParseError("cone index out of range: " + x.get_str() + " (fan has " + std::to_string(fan.ray_count()) +
                       " rays)");
    out.push_back(x.get_ui());
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVector parse_relation(const Fan& fan, const std::string& text) {
  IntVector r = parse_int_list(text);
  if (r.size() != fan.ray_count())
    throw ParseError("relation has " + std::to_string(r.size()) + " entries, fan has " +
                     std::to_string(fan.ray_count()) + " rays");
  return r;
}

// The relations a command acts on: --relation if given, else the HNF basis.
std::vector<IntVector> target_relations(const Fan& fan, const Options& o) {
  if (!o.relation.empty()) return {parse_relation(fan, o.relation)};
  return rel_lattice(fan).basis();
}

void emit(const Json& doc, const Options& o) {
  if (o.json_path.empty()) std::cout << doc.dump(2) << '\n';
  else write_json_file(o.json_path, doc);
}

Json strip_header(Json doc) {
  for (const char* key : {"version", "command", "fan"}) doc.erase(key);
  return doc;
}

int cmd_validate(const Options& o) {
  Json doc;
  try {
    doc = validation_report(load_fan(o));
  } catch (const FanError& e) {
    doc = {{"version", kReportVersion}, {"command", "validate"}, {"valid", false}, {"findings", {e.what()}}};
    emit(doc, o);
    return kSemanticFailure;
  } catch (const DimensionError& e) {
    doc = {{"version", kReportVersion}, {"command", "validate"}, {"valid", false}, {"findings", {e.what()}}};
    emit(doc, o);
    return kSemanticFailure;
  }
  emit(doc, o);
  return 0;
}

int cmd_report(const Options& o) {
  emit(summary_report(load_fan(o), policies(o.policy)), o);
  return 0;
}

int cmd_relations(const Options& o) {
  emit(relations_report(load_fan(o)), o);
  return 0;
}

int cmd_classgroup(const Options& o) {
  emit(classgroup_report(load_fan(o)), o);
  return 0;
}

int cmd_filtration(const Options& o) {
  const Fan fan = load_fan(o);
  Json doc = new_report("filtration", fan);
  Json per_policy = Json::object();
  for (SupportPolicy p : policies(o.policy)) {
    Json entry = strip_header(filtration_report(fan, filtration(fan, p)));
    entry["generation"] = generation_json(check_generation(fan, p));
    per_policy[to_string(p)] = std::move(entry);
  }
  doc["policies"] = std::move(per_policy);
  emit(doc, o);
  return 0;
}

// Brute-force confirmation of a depth: r is found among the level-d
// generators and not among the level-(d-1) ones.
Json oracle_check(const FiltrationProfile& profile, const IntVector& r, std::optional<std::size_t> d, long bound,
                  bool& disagreement) {
  Json out = {{"bound", bound}};
  try {
    auto found = [&](std::size_t k) {
      return oracle::find_combination(oracle::level_generators(profile, k), r, bound).has_value();
    };
    bool confirmed;
    if (d) confirmed = found(*d) && (*d == 0 || !found(*d - 1));
    else confirmed = !found(profile.top());
    // A bounded search cannot prove absence, so only a positive finding that
    // contradicts the normal form counts as a disagreement.
    const bool contradiction = d ? (*d > 0 && found(*d - 1)) : found(profile.top());
    disagreement = disagreement || contradiction;
    out["confirmed"] = confirmed;
    out["contradiction"] = contradiction;
  } catch (const std::length_error&) {
    out["confirmed"] = nullptr;
    out["note"] = "search space too large for this bound";
  }
  return out;
}

int cmd_depth(const Options& o) {
  const Fan fan = load_fan(o);
  const auto relations = target_relations(fan, o);
  Json doc = new_report("depth", fan);
  bool disagreement = false;
  Json per_policy = Json::object();
  for (SupportPolicy p : policies(o.policy)) {
    const FiltrationProfile profile = filtration(fan, p);
    Json rows = Json::array();
    for (const auto& r : relations) {
      const auto d = depth(fan, profile, r);
      Json row = {{"relation", to_json(r)}, {"depth", depth_json(d)}};
      if (o.max_coeff > 0) row["oracle"] = oracle_check(profile, r, d, o.max_coeff, disagreement);
      rows.push_back(std::move(row));
    }
    per_policy[to_string(p)] = std::move(rows);
  }
  doc["policies"] = std::move(per_policy);
  emit(doc, o);
  return disagreement ? kSemanticFailure : 0;
}

int cmd_decompose(const Options& o) {
  const Fan fan = load_fan(o);
  if (!is_complete(fan)) throw FanError("local decomposition requires a complete fan");
  DecomposeOptions options;
  options.single_star_shortcut = !o.no_shortcut;
  Json doc = new_report("decompose", fan);
  Json items = Json::array();
  bool ok = true;
  for (const auto& r : target_relations(fan, o)) {
    const Decomposition d = local_decompose(fan, r, options);
    ok = ok && verify_decomposition(fan, d).ok();
    items.push_back(decomposition_json(fan, d));
  }
  doc["decompositions"] = std::move(items);
  doc["all_checks_pass"] = ok;
  emit(doc, o);
  return ok ? 0 : kInvariantBreach;
}

int cmd_localize(const Options& o) {
  const Fan fan = load_fan(o);
  const Cone& tau = fan.cone_of(parse_cone(fan, o.cone));
  emit(localize_report(fan, localize(fan, tau)), o);
  return 0;
}

int cmd_subdivide(const Options& o) {
  const Fan fan = load_fan(o);
  const Cone& sigma = fan.cone_of(parse_cone(fan, o.cone));
  const IntVector w = parse_int_list(o.ray);
  if (w.size() != fan.rank()) throw ParseError("--ray must have " + std::to_string(fan.rank()) + " entries");
  const Fan after = stellar_subdivide(fan, sigma, w);
  Json doc = new_report("subdivide", fan);
  Json traces = Json::array();
  std::size_t violations = 0;
  for (SupportPolicy p : policies(o.policy)) {
    SubdivisionTrace trace = trace_refinement(fan, after, p);
    trace.new_ray = after.rays().back();
    trace.subdivided_cone = sigma;
    violations += trace.violations();
    Json tj = trace_json(trace);
    tj["policy"] = to_string(p);
    traces.push_back(std::move(tj));
  }
  doc["traces"] = std::move(traces);
  doc["violations"] = violations;
  if (!o.fan_out.empty()) write_json_file(o.fan_out, fan_to_json(after));
  emit(doc, o);
  return 0;
}

int cmd_conjecture(const Options& o) {
  const Fan fan = load_fan(o);
  Json doc = new_report("conjecture", fan);
  Json scans = Json::array();
  std::size_t violations = 0;
  for (SupportPolicy p : policies(o.policy)) {
    const ConjectureScan scan = conjecture_scan(fan, p, o.trials, o.seed);
    violations += scan.violations();
    scans.push_back(scan_json(scan));
  }
  doc["scans"] = std::move(scans);
  doc["violations"] = violations;
  emit(doc, o);
  return 0;
}

int cmd_catalog_list(const Options& o) {
  Json doc = {{"version", kReportVersion}, {"command", "catalog list"}};
  Json entries = Json::array();
  for (const auto& e : catalog())
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"rank", e.fan.rank()},
                       {"rays", e.fan.ray_count()},
                       {"maximal_cones", e.fan.maximal_cones().size()}});
  doc["entries"] = std::move(entries);
  emit(doc, o);
  return 0;
}

int cmd_catalog_export(const Options& o) {
  for (const auto& e : catalog())
    if (e.name == o.name) {
      emit(fan_to_json(e.fan), o);
      return 0;
    }
  throw ParseError("no catalog entry named '" + o.name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of relations among the rays of rational fans"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto add_fan = [&](CLI::App* cmd) {
    cmd->add_option("fan", o.fan, "fan file, or catalog:<name>")->required();
    cmd->add_flag("--trust", o.trust, "accept non-simplicial cone lists without intersection checks");
    cmd->add_option("--json", o.json_path, "write the report to this path instead of stdout");
  };
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) { cmd->callback([&action, fn] { action = fn; }); };

  auto* validate = app.add_subcommand("validate", "check the fan axioms");
  add_fan(validate);
  bind(validate, cmd_validate);

  auto* report = app.add_subcommand("report", "lattices, class group, completeness and filtration depths");
  add_fan(report);
  report->add_option("--policy", o.policy, "inclusive, exclusive or both")
      ->check(CLI::IsMember({"inclusive", "exclusive", "both"}));
  bind(report, cmd_report);

  auto* relations = app.add_subcommand("relations", "HNF basis of the relation lattice");
  add_fan(relations);
  bind(relations, cmd_relations);

  auto* classgroup = app.add_subcommand("classgroup", "invariant factors of the class group");
  add_fan(classgroup);
  bind(classgroup, cmd_classgroup);

  auto* filt = app.add_subcommand("filtration", "codimension filtration levels");
  add_fan(filt);
  filt->add_option("--policy", o.policy, "inclusive, exclusive or both")
      ->check(CLI::IsMember({"inclusive", "exclusive", "both"}));
  bind(filt, cmd_filtration);

  auto* dep = app.add_subcommand("depth", "filtration depth of relations");
  add_fan(dep);
  dep->add_option("--policy", o.policy, "inclusive, exclusive or both")
      ->check(CLI::IsMember({"inclusive", "exclusive", "both"}));
  dep->add_option("--relation", o.relation, "comma-separated relation; default: each basis relation");
  dep->add_option("--max-coeff", o.max_coeff, "confirm depths by brute force with coefficients in [-B, B]")
      ->check(CLI::Range(0L, 20L));
  bind(dep, cmd_depth);

  auto* dec = app.add_subcommand("decompose", "split relations into star-supported pieces");
  add_fan(dec);
  dec->add_option("--relation", o.relation, "comma-separated relation; default: each basis relation");
  dec->add_flag("--no-shortcut", o.no_shortcut, "route even when the relation lives on one star");
  bind(dec, cmd_decompose);

  auto* loc = app.add_subcommand("localize", "quotient fan at a cone");
  add_fan(loc);
  loc->add_option("--cone", o.cone, "comma-separated ray indices")->required();
  bind(loc, cmd_localize);

  auto* sub = app.add_subcommand("subdivide", "stellar subdivision and depth comparison");
  add_fan(sub);
  sub->add_option("--cone", o.cone, "comma-separated ray indices")->required();
  sub->add_option("--ray", o.ray, "new ray in the relative interior of the cone")->required();
  sub->add_option("--policy", o.policy, "inclusive, exclusive or both")
      ->check(CLI::IsMember({"inclusive", "exclusive", "both"}));
  sub->add_option("--fan-out", o.fan_out, "write the subdivided fan to this path");
  bind(sub, cmd_subdivide);

  auto* conj = app.add_subcommand("conjecture", "random stellar subdivisions and depth monotonicity");
  add_fan(conj);
  conj->add_option("--policy", o.policy, "inclusive, exclusive or both")
      ->check(CLI::IsMember({"inclusive", "exclusive", "both"}));
  conj->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  conj->add_option("--seed", o.seed, "seed")->capture_default_str();
  bind(conj, cmd_conjecture);

  auto* cat = app.add_subcommand("catalog", "built-in fans");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list catalog entries");
  list->add_option("--json", o.json_path, "write to this path instead of stdout");
  bind(list, cmd_catalog_list);
  auto* exp = cat->add_subcommand("export", "print a catalog fan as a fan file");
  exp->add_option("name", o.name, "entry name")->required();
  exp->add_option("--json", o.json_path, "write to this path instead of stdout");
  bind(exp, cmd_catalog_export);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  // Report defaults to both policies so that disagreements stay visible.
  if (o.policy.empty()) o.policy = report->parsed() ? "both" : "inclusive";

  try {
    return action(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemanticFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariantBreach;
  }
}
