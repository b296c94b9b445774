#include "fanlat/corpus.hpp"

#include "fanlat/errors.hpp"

namespace fanlat {
namespace {

using Depths = std::vector<std::optional<std::size_t>>;
constexpr std::optional<std::size_t> kUnreachable = std::nullopt;

std::vector<IntVector> vectors(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

Fan make(const std::string& name, std::size_t rank, std::initializer_list<std::initializer_list<long>> rays,
         std::vector<RaySet> maximal) {
  FanOptions options;
  options.name = name;
  return build_fan(rank, vectors(rays), std::move(maximal), options);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e{"p2", "projective plane", make("p2", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), {}};
    e.known.relation_basis = vectors({{1, 1, 1}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{1, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1};
    e.known.depths[SupportPolicy::exclusive] = Depths{kUnreachable};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 1, 1};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 0, 0};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"p1xp1", "product of two projective lines",
                   make("p1xp1", 2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}), {}};
    e.known.relation_basis = vectors({{1, 1, 0, 0}, {0, 0, 1, 1}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{2, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1, 1};
    e.known.depths[SupportPolicy::exclusive] = Depths{1, 1};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 2, 2};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 2, 2};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"p3", "projective 3-space; its four rays form the circuit u1+u2+u3+u4 = 0",
                   make("p3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
                   {}};
    e.known.relation_basis = vectors({{1, 1, 1, 1}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{1, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1};
    e.known.depths[SupportPolicy::exclusive] = Depths{kUnreachable};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 1, 1, 1};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 0, 0, 0};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"p2xp1", "product fan of the projective plane and the projective line",
                   make("p2xp1", 3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                        {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}}),
                   {}};
    e.known.relation_basis = vectors({{1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{2, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1, 1};
    e.known.depths[SupportPolicy::exclusive] = Depths{2, 1};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 2, 2, 2};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 1, 2, 2};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"blowup_p2", "projective plane blown up at the fixed point of the cone <v1,v2>",
                   make("blowup_p2", 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 3}, {1, 3}, {1, 2}, {0, 2}}), {}};
    e.known.relation_basis = vectors({{1, 1, 0, -1}, {0, 0, 1, 1}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{2, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1, 1};
    e.known.depths[SupportPolicy::exclusive] = Depths{kUnreachable, 1};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 2, 2};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 1, 1};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"halfplane2", "a single two-dimensional cone whose rays generate an index-2 lattice",
                   make("halfplane2", 2, {{1, 1}, {1, -1}}, {{0, 1}}), {}};
    e.known.relation_basis = std::vector<IntVector>{};
    e.known.complete = false;
    e.known.class_group = ClassGroup{0, {Integer(2)}};
    e.known.ray_index = Integer(2);
    e.known.depths[SupportPolicy::inclusive] = Depths{};
    e.known.depths[SupportPolicy::exclusive] = Depths{};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 0, 0};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 0, 0};
    out.push_back(std::move(e));
  }
  {
    // Square cone over u1..u4 split along the diagonal u1-u3, closed off below
    // by a single ray.
    CatalogEntry e{"sigma_c", "square cone split along a diagonal, completed by one ray below",
                   make("sigma_c", 3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, -1}},
                        {{0, 1, 2}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}}),
                   {}};
    e.known.relation_basis = vectors({{1, 0, 1, 0, 2}, {0, 1, 0, 1, 2}});
    e.known.complete = true;
    e.known.class_group = ClassGroup{2, {}};
    e.known.ray_index = Integer(1);
    e.known.depths[SupportPolicy::inclusive] = Depths{1, 1};
    e.known.depths[SupportPolicy::exclusive] = Depths{2, 2};
    e.known.level_ranks[SupportPolicy::inclusive] = {0, 2, 2, 2};
    e.known.level_ranks[SupportPolicy::exclusive] = {0, 0, 2, 2};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw FanError("no catalog entry named '" + name + "'");
}

}  // namespace fanlat
