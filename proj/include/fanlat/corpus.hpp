#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanlat/fan.hpp"
#include "fanlat/lattices.hpp"

namespace fanlat {

// Reference data stored alongside a catalog fan. Every field that is set is
// recomputed and compared by the test suite.
struct KnownData {
  std::optional<std::vector<IntVector>> relation_basis;  // canonical HNF rows
  std::optional<bool> complete;
  std::optional<ClassGroup> class_group;
  std::optional<std::optional<Integer>> ray_index;  // inner nullopt: infinite
  // Depth of each relation_basis row per policy; nullopt entries are unreachable.
  std::map<SupportPolicy, std::vector<std::optional<std::size_t>>> depths;
  std::map<SupportPolicy, std::vector<std::size_t>> level_ranks;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Fan fan;
  KnownData known;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // throws FanError if unknown

}  // namespace fanlat
