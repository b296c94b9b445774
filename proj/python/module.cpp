#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fanlat/corpus.hpp"
#include "fanlat/errors.hpp"
#include "fanlat/fan.hpp"
#include "fanlat/filtration.hpp"
#include "fanlat/intlin.hpp"
#include "fanlat/io.hpp"
#include "fanlat/lattices.hpp"
#include "fanlat/refine.hpp"

namespace py = pybind11;

// mpz_class <-> Python int, through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& x, return_value_policy, handle) {
    const std::string text = x.get_str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

using namespace fanlat;

namespace {

using Rows = std::vector<IntVector>;

IntMatrix to_matrix(const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

py::object to_python(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

RaySet sorted_rays(RaySet rays) {
  std::sort(rays.begin(), rays.end());
  return rays;
}

Fan make_fan(std::size_t rank, Rows rays, std::vector<RaySet> maximal, std::optional<std::vector<RaySet>> cones,
             bool trust, std::optional<bool> assert_complete, std::string name) {
  FanOptions options;
  options.cones = std::move(cones);
  options.trust = trust;
  options.assert_complete = assert_complete;
  options.name = std::move(name);
  return build_fan(rank, std::move(rays), std::move(maximal), options);
}

py::dict decomposition_dict(const Fan& fan, const Decomposition& d) {
  py::list pieces;
  for (const auto& p : d.pieces) pieces.append(py::make_tuple(p.ray, p.vector));
  const DecompositionCheck check = verify_decomposition(fan, d);
  py::dict out;
  out["relation"] = d.relation;
  out["method"] = d.method;
  out["moves"] = d.moves;
  out["pieces"] = pieces;
  out["ok"] = check.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(fanlat, m) {
  m.doc() = "Relation lattices of rational fans and their codimension filtration.";

  static py::exception<Error> base(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<FanError>(m, "FanError", base.ptr());
  py::register_exception<NotARelation>(m, "NotARelation", base.ptr());
  py::register_exception<NotLocallyGenerated>(m, "NotLocallyGenerated", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvariantBreach>(m, "InvariantBreach", base.ptr());

  py::enum_<SupportPolicy>(m, "SupportPolicy")
      .value("inclusive", SupportPolicy::inclusive)
      .value("exclusive", SupportPolicy::exclusive);

  // Integer linear algebra on row lists.
  m.def(
      "hnf",
      [](const Rows& rows) {
        const HermiteForm f = hnf(to_matrix(rows));
        return py::make_tuple(f.h.row_vectors(), f.u.row_vectors());
      },
      py::arg("rows"), "Row Hermite normal form: (h, u) with h = u * m.");
  m.def(
      "snf",
      [](const Rows& rows) {
        const SmithForm f = snf(to_matrix(rows));
        return py::make_tuple(f.s.row_vectors(), f.u.row_vectors(), f.w.row_vectors());
      },
      py::arg("rows"), "Smith normal form: (s, u, w) with s = u * m * w.");
  m.def(
      "integer_kernel", [](const Rows& rows, std::size_t cols) {
        return integer_kernel(IntMatrix::from_rows(rows, cols)).basis_vectors();
      },
      py::arg("rows"), py::arg("cols"), "HNF basis of {x : m x = 0}.");

  py::class_<Fan>(m, "Fan")
      .def(py::init(&make_fan), py::arg("rank"), py::arg("rays"), py::arg("maximal_cones"),
           py::arg("cones") = py::none(), py::arg("trust") = false, py::arg("assert_complete") = py::none(),
           py::arg("name") = "")
      .def_property_readonly("rank", &Fan::rank)
      .def_property_readonly("rays", &Fan::rays)
      .def_property_readonly("name", &Fan::name)
      .def_property_readonly("simplicial", &Fan::simplicial)
      .def_property_readonly("validation", [](const Fan& f) { return to_string(f.validation()); })
      .def_property_readonly("cones",
                             [](const Fan& f) {
                               std::vector<RaySet> out;
                               for (const auto& c : f.cones()) out.push_back(c.rays);
                               return out;
                             })
      .def_property_readonly("maximal_cones",
                             [](const Fan& f) {
                               std::vector<RaySet> out;
                               for (std::size_t i : f.maximal_cones()) out.push_back(f.cone(i).rays);
                               return out;
                             })
      .def("to_json", [](const Fan& f) { return fan_to_json(f).dump(2); })
      .def_static("from_json", [](const std::string& text) {
        Json doc;
        try {
          doc = Json::parse(text);
        } catch (const Json::exception& e) {
          throw ParseError(e.what());
        }
        return fan_from_json(doc);
      })
      .def("__repr__", [](const Fan& f) {
        return "<Fan " + (f.name().empty() ? std::string("unnamed") : f.name()) + " rank=" +
               std::to_string(f.rank()) + " rays=" + std::to_string(f.ray_count()) + ">";
      });

  m.def("catalog", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_fan", [](const std::string& name) { return catalog_entry(name).fan; }, py::arg("name"));

  m.def("is_complete", &is_complete, py::arg("fan"));
  m.def("relation_basis", [](const Fan& f) { return rel_lattice(f).basis(); }, py::arg("fan"));
  m.def(
      "ray_lattice",
      [](const Fan& f) {
        const RayLattice l = ray_lattice(f);
        return py::make_tuple(l.sublattice.basis_vectors(), l.index);
      },
      py::arg("fan"), "(basis, index); index is None when infinite.");
  m.def(
      "class_group",
      [](const Fan& f) {
        const ClassGroup c = class_group(f);
        return py::make_tuple(c.free_rank, c.torsion);
      },
      py::arg("fan"));
  m.def(
      "star_relations",
      [](const Fan& f, const RaySet& cone, SupportPolicy policy) {
        return rel_lattice_star(f, f.cone_of(sorted_rays(cone)), policy).basis();
      },
      py::arg("fan"), py::arg("cone"), py::arg("policy") = SupportPolicy::inclusive);
  m.def(
      "localize", [](const Fan& f, const RaySet& cone) {
        return to_python(localize_report(f, localize(f, f.cone_of(sorted_rays(cone)))));
      },
      py::arg("fan"), py::arg("cone"));

  m.def(
      "filtration",
      [](const Fan& f, SupportPolicy policy) {
        std::vector<Rows> levels;
        for (const auto& l : filtration(f, policy).levels) levels.push_back(l.basis_vectors());
        return levels;
      },
      py::arg("fan"), py::arg("policy") = SupportPolicy::inclusive, "HNF bases of F_0 .. F_n.");
  m.def(
      "depth",
      [](const Fan& f, const IntVector& r, SupportPolicy policy) { return depth(f, r, policy); },
      py::arg("fan"), py::arg("relation"), py::arg("policy") = SupportPolicy::inclusive,
      "Smallest k with the relation in F_k, or None when unreachable.");
  m.def(
      "check_generation",
      [](const Fan& f, SupportPolicy policy) { return to_python(generation_json(check_generation(f, policy))); },
      py::arg("fan"), py::arg("policy") = SupportPolicy::inclusive);
  m.def(
      "report",
      [](const Fan& f) {
        return to_python(summary_report(f, {SupportPolicy::inclusive, SupportPolicy::exclusive}));
      },
      py::arg("fan"), "Summary report under both support policies.");
  m.def(
      "local_decompose",
      [](const Fan& f, const IntVector& r, bool shortcut) {
        DecomposeOptions options;
        options.single_star_shortcut = shortcut;
        return decomposition_dict(f, local_decompose(f, r, options));
      },
      py::arg("fan"), py::arg("relation"), py::arg("shortcut") = true);

  m.def(
      "stellar_subdivide",
      [](const Fan& f, const RaySet& cone, const IntVector& w) {
        return stellar_subdivide(f, f.cone_of(sorted_rays(cone)), w);
      },
      py::arg("fan"), py::arg("cone"), py::arg("ray"));
  m.def(
      "refinement_injection",
      [](const Fan& before, const Fan& after, const IntVector& r) { return refinement_injection(before, after, r); },
      py::arg("before"), py::arg("after"), py::arg("relation"));
  m.def(
      "conjecture_scan",
      [](const Fan& f, SupportPolicy policy, std::size_t trials, std::uint64_t seed) {
        return to_python(scan_json(conjecture_scan(f, policy, trials, seed)));
      },
      py::arg("fan"), py::arg("policy") = SupportPolicy::inclusive, py::arg("trials") = 10, py::arg("seed") = 0);
}
