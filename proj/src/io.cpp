#include "fanlat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fanlat/errors.hpp"

namespace fanlat {
namespace {

const Json& require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<RaySet> parse_cone_list(const Json& value, std::size_t ray_count, const char* what) {
  if (!value.is_array()) throw ParseError(std::string("'") + what + "' must be an array of index lists");
  std::vector<RaySet> out;
  for (const auto& cone : value) {
    if (!cone.is_array()) throw ParseError(std::string("entries of '") + what + "' must be arrays");
    RaySet c;
    for (const auto& idx : cone) {
      if (!idx.is_number_integer() || idx.get<long long>() < 0)
        throw ParseError(std::string("cone indices in '") + what + "' must be nonnegative integers");
      const auto i = idx.get<unsigned long long>();
      if (i >= ray_count)
        throw ParseError("cone index out of range: " + std::to_string(i) + " (fan has " +
                         std::to_string(ray_count) + " rays)");
      c.push_back(static_cast<std::size_t>(i));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Json rays_json(const std::vector<IntVector>& rays) {
  Json out = Json::array();
  for (const auto& v : rays) {
    Json row = Json::array();
    for (const auto& x : v) {
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(x.get_str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json cone_json(const RaySet& c) { return Json(c); }

Json vectors_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Integer parse_integer(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<unsigned long long>()));
    return Integer(std::to_string(value.get<long long>()));
  }
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("not a decimal integer: '" + s + "'");
    return x;
  }
  throw ParseError("expected an integer, got " + value.dump());
}

IntVector parse_int_vector(const Json& value) {
  if (!value.is_array()) throw ParseError("expected an array of integers, got " + value.dump());
  IntVector out;
  for (const auto& x : value) out.push_back(parse_integer(x));
  return out;
}

IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty entry in integer list '" + text + "'");
    out.push_back(parse_integer(Json(item.substr(first, last - first + 1))));
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

Fan fan_from_json(const Json& doc, bool trust_override) {
  if (!doc.is_object()) throw ParseError("fan document must be a JSON object");
  const Json& rank_json = require(doc, "rank");
  if (!rank_json.is_number_integer() || rank_json.get<long long>() < 1)
    throw ParseError("'rank' must be a positive integer");
  const auto rank = static_cast<std::size_t>(rank_json.get<long long>());

  const Json& rays_doc = require(doc, "rays");
  if (!rays_doc.is_array()) throw ParseError("'rays' must be an array of integer vectors");
  std::vector<IntVector> rays;
  for (const auto& r : rays_doc) {
    IntVector v = parse_int_vector(r);
    if (v.size() != rank)
      throw ParseError("ray " + std::to_string(rays.size()) + " has length " + std::to_string(v.size()) +
                       ", expected " + std::to_string(rank));
    rays.push_back(std::move(v));
  }
  auto maximal = parse_cone_list(require(doc, "maximal_cones"), rays.size(), "maximal_cones");

  FanOptions options;
  options.trust = trust_override;
  if (auto it = doc.find("cones"); it != doc.end() && !it->is_null())
    options.cones = parse_cone_list(*it, rays.size(), "cones");
  if (auto it = doc.find("metadata"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ParseError("'metadata' must be an object");
    if (auto n = it->find("name"); n != it->end()) {
      if (!n->is_string()) throw ParseError("'metadata.name' must be a string");
      options.name = n->get<std::string>();
    }
    if (auto t = it->find("trust"); t != it->end()) {
      if (!t->is_boolean()) throw ParseError("'metadata.trust' must be a boolean");
      options.trust = options.trust || t->get<bool>();
    }
    if (auto c = it->find("assert_complete"); c != it->end()) {
      if (!c->is_boolean()) throw ParseError("'metadata.assert_complete' must be a boolean");
      options.assert_complete = c->get<bool>();
    }
  }
  return build_fan(rank, std::move(rays), std::move(maximal), options);
}

Json fan_to_json(const Fan& fan) {
  Json doc;
  doc["rank"] = fan.rank();
  doc["rays"] = rays_json(fan.rays());
  Json maximal = Json::array();
  for (std::size_t idx : fan.maximal_cones()) maximal.push_back(cone_json(fan.cone(idx).rays));
  doc["maximal_cones"] = std::move(maximal);
  if (!fan.simplicial()) {
    Json cones = Json::array();
    for (const auto& c : fan.cones()) cones.push_back(cone_json(c.rays));
    doc["cones"] = std::move(cones);
  }
  Json meta = Json::object();
  if (!fan.name().empty()) meta["name"] = fan.name();
  if (fan.validation() == Validation::trusted) meta["trust"] = true;
  if (fan.asserted_complete()) meta["assert_complete"] = *fan.asserted_complete();
  if (!meta.empty()) doc["metadata"] = std::move(meta);
  return doc;
}

Fan read_fan_file(const std::string& path, bool trust_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fan file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return fan_from_json(doc, trust_override);
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const Sublattice& lattice) { return vectors_json(lattice.basis_vectors()); }

Json depth_json(const std::optional<std::size_t>& depth) {
  if (depth) return *depth;
  return "unreachable";
}

Json new_report(const std::string& command, const Fan& fan) {
  Json doc;
  doc["version"] = kReportVersion;
  doc["command"] = command;
  doc["fan"] = {{"name", fan.name()}, {"rank", fan.rank()}, {"rays", fan.ray_count()}};
  return doc;
}

Json validation_report(const Fan& fan) {
  Json doc = new_report("validate", fan);
  doc["valid"] = true;
  doc["simplicial"] = fan.simplicial();
  doc["validation"] = to_string(fan.validation());
  doc["findings"] = fan.findings();
  doc["cone_count"] = fan.cones().size();
  doc["maximal_cone_count"] = fan.maximal_cones().size();
  return doc;
}

Json relations_report(const Fan& fan) {
  Json doc = new_report("relations", fan);
  const RelLattice rel = rel_lattice(fan);
  doc["relations"] = {{"rank", rel.rank()}, {"basis", to_json(rel.sublattice)}};
  return doc;
}

Json classgroup_report(const Fan& fan) {
  Json doc = new_report("classgroup", fan);
  const ClassGroup cl = class_group(fan);
  Json torsion = Json::array();
  for (const auto& d : cl.torsion) torsion.push_back(to_json(d));
  doc["class_group"] = {{"free_rank", cl.free_rank}, {"torsion", torsion}};
  return doc;
}

Json filtration_report(const Fan& fan, const FiltrationProfile& profile) {
  Json doc = new_report("filtration", fan);
  doc["policy"] = to_string(profile.policy);
  Json levels = Json::array();
  for (std::size_t k = 0; k < profile.levels.size(); ++k) {
    Json contributors = Json::array();
    for (auto [cone, rank] : profile.contributing(k))
      contributors.push_back({{"cone", cone_json(fan.cone(cone).rays)}, {"kernel_rank", rank}});
    levels.push_back({{"k", k},
                      {"rank", profile.levels[k].rank()},
                      {"basis", to_json(profile.levels[k])},
                      {"contributing", std::move(contributors)}});
  }
  doc["levels"] = std::move(levels);
  doc["relations_rank"] = profile.relations.rank();
  return doc;
}

Json generation_json(const GenerationReport& report) {
  Json doc;
  doc["policy"] = to_string(report.policy);
  doc["complete"] = report.complete ? Json(*report.complete) : Json(nullptr);
  doc["relation_rank"] = report.relation_rank;
  doc["level_ranks"] = report.level_ranks;
  doc["penultimate_equals_relations"] = report.penultimate_equals_relations;
  doc["top_equals_relations"] = report.top_equals_relations;
  doc["penultimate_index"] = report.penultimate_index ? to_json(*report.penultimate_index) : Json("infinite");
  doc["theorem_violated"] = report.theorem_violated();
  return doc;
}

Json summary_report(const Fan& fan, const std::vector<SupportPolicy>& policies) {
  Json doc = new_report("report", fan);
  const RayLattice rays = ray_lattice(fan);
  doc["ray_lattice"] = {{"rank", rays.sublattice.rank()},
                        {"index", rays.index ? to_json(*rays.index) : Json("infinite")},
                        {"basis", to_json(rays.sublattice)}};
  const RelLattice rel = rel_lattice(fan);
  doc["relations"] = {{"rank", rel.rank()}, {"basis", to_json(rel.sublattice)}};
  doc["exact_sequence_ranks_add_up"] = rel.rank() + rays.sublattice.rank() == fan.ray_count();
  try {
    doc["class_group"] = classgroup_report(fan)["class_group"];
  } catch (const FanError& e) {
    doc["class_group"] = {{"error", e.what()}};
  }
  try {
    doc["complete"] = is_complete(fan);
  } catch (const FanError&) {
    doc["complete"] = nullptr;
  }

  const auto basis = rel.basis();
  std::map<SupportPolicy, std::vector<std::optional<std::size_t>>> depths;
  Json per_policy = Json::object();
  for (SupportPolicy policy : policies) {
    const FiltrationProfile profile = filtration(fan, policy);
    Json entry;
    std::vector<std::size_t> ranks;
    for (const auto& level : profile.levels) ranks.push_back(level.rank());
    entry["level_ranks"] = ranks;
    Json ds = Json::array();
    for (const auto& r : basis) {
      auto d = profile.depth(r);
      depths[policy].push_back(d);
      ds.push_back({{"relation", to_json(r)}, {"depth", depth_json(d)}});
    }
    entry["depths"] = std::move(ds);
    entry["generation"] = generation_json(check_generation(fan, policy));
    per_policy[to_string(policy)] = std::move(entry);
  }
  doc["policies"] = std::move(per_policy);

  if (depths.count(SupportPolicy::inclusive) && depths.count(SupportPolicy::exclusive)) {
    Json found = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& inc = depths[SupportPolicy::inclusive][i];
      const auto& exc = depths[SupportPolicy::exclusive][i];
      if (inc == exc) continue;
      found.push_back({{"relation", to_json(basis[i])},
                       {"inclusive_depth", depth_json(inc)},
                       {"exclusive_depth", depth_json(exc)},
                       {"note",
                        "depth under the literal star support (all rays of the star) differs from depth "
                        "when the cone's own rays are excluded"}});
    }
    doc["discrepancies"] = std::move(found);
  }
  return doc;
}

Json localize_report(const Fan& fan, const QuotientFan& quotient) {
  Json doc = new_report("localize", fan);
  doc["tau"] = cone_json(quotient.tau.rays);
  doc["quotient_rank"] = quotient.quotient_rank;
  doc["projection"] = vectors_json(quotient.projection.row_vectors());
  doc["rays"] = vectors_json(quotient.rays);
  doc["ray_origin"] = quotient.ray_origin;
  Json cones = Json::array();
  for (const auto& c : quotient.cones) cones.push_back(cone_json(c));
  doc["cones"] = std::move(cones);
  doc["warnings"] = quotient.warnings;
  const Sublattice rel = integer_kernel(quotient.ray_matrix());
  doc["relations"] = {{"rank", rel.rank()}, {"basis", to_json(rel)}};
  return doc;
}

Json decomposition_json(const Fan& fan, const Decomposition& d) {
  Json doc;
  doc["relation"] = to_json(d.relation);
  doc["method"] = d.method;
  doc["moves"] = d.moves;
  doc["split_defects"] = d.split_defects;
  if (!d.note.empty()) doc["note"] = d.note;
  Json pieces = Json::array();
  for (const auto& p : d.pieces)
    pieces.push_back({{"ray", p.ray}, {"star_rays", cone_json(p.star_rays)}, {"vector", to_json(p.vector)}});
  doc["pieces"] = std::move(pieces);
  const DecompositionCheck check = verify_decomposition(fan, d);
  doc["checks"] = {{"sums_to_relation", check.sums_to_relation},
                   {"pieces_are_relations", check.pieces_are_relations},
                   {"supports_in_stars", check.supports_in_stars}};
  return doc;
}

Json trace_json(const SubdivisionTrace& trace) {
  Json doc;
  doc["trial"] = trace.trial;
  doc["new_ray"] = trace.new_ray ? to_json(*trace.new_ray) : Json(nullptr);
  doc["subdivided_cone"] = trace.subdivided_cone ? cone_json(trace.subdivided_cone->rays) : Json(nullptr);
  doc["injection"] = trace.injection;
  doc["after"] = fan_to_json(trace.after);
  Json records = Json::array();
  for (const auto& r : trace.depth_records) {
    IntVector padded(trace.after.ray_count());
    for (std::size_t i = 0; i < trace.injection.size(); ++i) padded[trace.injection[i]] = r.relation[i];
    records.push_back({{"relation", to_json(r.relation)},
                       {"padded", to_json(padded)},
                       {"padded_is_relation", is_relation(trace.after, padded)},
                       {"policy", to_string(r.policy)},
                       {"depth_before", depth_json(r.depth_before)},
                       {"depth_after", depth_json(r.depth_after)},
                       {"comparison", to_string(r.comparison)}});
  }
  doc["records"] = std::move(records);
  doc["violations"] = trace.violations();
  return doc;
}

Json scan_json(const ConjectureScan& scan) {
  Json doc;
  doc["policy"] = to_string(scan.policy);
  doc["seed"] = scan.seed;
  doc["trials"] = scan.trials;
  doc["violations"] = scan.violations();
  doc["incomparable"] = scan.incomparable();
  doc["skipped"] = scan.skipped;
  Json traces = Json::array();
  Json counterexamples = Json::array();
  for (const auto& t : scan.traces) {
    Json tj = trace_json(t);
    if (t.violations() > 0) counterexamples.push_back(tj);
    traces.push_back(std::move(tj));
  }
  doc["traces"] = std::move(traces);
  doc["counterexamples"] = std::move(counterexamples);
  return doc;
}

}  // namespace fanlat
