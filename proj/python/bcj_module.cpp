// Python bindings. Structured results cross the boundary as the same JSON
// documents the CLI writes; the Python package decodes them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcj/bcjmap.hpp"
#include "bcj/casson_morita.hpp"
#include "bcj/errors.hpp"
#include "bcj/orbits.hpp"
#include "bcj/search.hpp"
#include "bcj/serialize.hpp"
#include "bcj/suites.hpp"
#include "bcj/wedge.hpp"

namespace py = pybind11;
using bcj::io::json;

namespace {

bcj::SubsurfaceBasis mod2_basis(int genus, const std::vector<std::pair<std::string, std::string>>& pairs) {
  bcj::SubsurfaceBasis s{genus, {}};
  for (const auto& [A, B] : pairs) s.pairs.emplace_back(bcj::parse_hclass(genus, A), bcj::parse_hclass(genus, B));
  return s;
}

bcj::ZSubsurfaceBasis integral_basis(int genus, const std::vector<std::pair<std::string, std::string>>& pairs) {
  bcj::ZSubsurfaceBasis s{genus, {}};
  for (const auto& [A, B] : pairs) {
    s.pairs.emplace_back(bcj::parse_zhclass(genus, A), bcj::parse_zhclass(genus, B));
  }
  return s;
}

std::string search_json(int genus, int max_support, bool include_families, bool include_bp,
                        const std::string& disjointness, int workers) {
  bcj::SearchParams p;
  p.genus = genus;
  p.max_support = max_support;
  p.include_families = include_families;
  p.include_bp = include_bp;
  p.disjointness = bcj::parse_disjointness(disjointness);
  p.workers = workers;
  bcj::ImageReport r;
  {
    py::gil_scoped_release release;
    r = bcj::image_rank_report(p);
  }
  return bcj::io::to_json(r).dump();
}

std::string verify_json(int genus, std::size_t trials, std::uint64_t seed, bool exhaustive_mu) {
  bcj::DiagramReport r;
  {
    py::gil_scoped_release release;
    r = bcj::verify_diagrams(genus, trials, seed, exhaustive_mu);
  }
  return bcj::io::to_json(r).dump();
}

std::string eval_json(const std::string& catalog_text) {
  const bcj::io::Catalog cat = bcj::io::catalog_from_json(json::parse(catalog_text));
  json out = json::array();
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    out.push_back(bcj::io::to_json(bcj::io::eval_entry(cat.entries[i], cat.genus, i)));
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_bcj, m) {
  m.doc() = "Birman-Craggs-Johnson homomorphism computations";

  py::register_exception<bcj::Error>(m, "BcjError", PyExc_ValueError);

  m.attr("MAX_GENUS") = bcj::kMaxGenus;
  m.attr("__version__") = bcj::io::kToolVersion;

  m.def("b2_dimension", &bcj::b2_dimension, py::arg("genus"));
  m.def("dims_json", [](int g) { return bcj::io::to_json(bcj::dims(g)).dump(); }, py::arg("genus"));
  m.def("orbits_json", [](int g) { return bcj::io::to_json(bcj::orbit_classes(g)).dump(); },
        py::arg("genus"));
  m.def("search_json", &search_json, py::arg("genus"), py::arg("max_support") = 3,
        py::arg("include_families") = false, py::arg("include_bp") = false,
        py::arg("disjointness") = "orthogonal", py::arg("workers") = 1);
  m.def("verify_json", &verify_json, py::arg("genus"), py::arg("trials") = 100, py::arg("seed") = 1,
        py::arg("exhaustive_mu") = false);
  m.def("eval_json", &eval_json, py::arg("catalog"));

  m.def(
      "bar", [](int g, const std::string& c) { return bcj::to_string(bcj::bar(bcj::parse_hclass(g, c))); },
      py::arg("genus"), py::arg("cls"), "bar(c) for a class written like 'a1+b2'.");
  m.def(
      "sigma_separating",
      [](int g, const std::vector<std::pair<std::string, std::string>>& basis) {
        return bcj::to_string(bcj::sigma(bcj::make_separating_twist(mod2_basis(g, basis))));
      },
      py::arg("genus"), py::arg("basis"));
  m.def(
      "sigma_bp",
      [](int g, const std::vector<std::pair<std::string, std::string>>& basis, const std::string& c) {
        return bcj::to_string(bcj::sigma(bcj::make_bp_map(mod2_basis(g, basis), bcj::parse_hclass(g, c))));
      },
      py::arg("genus"), py::arg("basis"), py::arg("C"));
  m.def(
      "wedge",
      [](int g, const std::string& p, const std::string& q) {
        return bcj::to_string(bcj::wedge(bcj::parse_bool_poly(g, p), bcj::parse_bool_poly(g, q)));
      },
      py::arg("genus"), py::arg("p"), py::arg("q"));
  m.def(
      "is_index_matched",
      [](int g, const std::string& m1, const std::string& m2) {
        return bcj::is_index_matched(g, bcj::parse_monomial(g, m1), bcj::parse_monomial(g, m2));
      },
      py::arg("genus"), py::arg("m1"), py::arg("m2"));
  m.def(
      "rho_separating",
      [](int g, const std::vector<std::pair<std::string, std::string>>& basis) {
        return bcj::to_string(bcj::rho_separating(integral_basis(g, basis)));
      },
      py::arg("genus"), py::arg("basis"));
  m.def(
      "mu_rho_separating",
      [](int g, const std::vector<std::pair<std::string, std::string>>& basis) {
        return bcj::to_string(bcj::mu(bcj::rho_separating(integral_basis(g, basis))));
      },
      py::arg("genus"), py::arg("basis"));
  m.def(
      "cm_generator",
      [](int g, const std::string& u, const std::string& v) {
        return bcj::to_string(bcj::cm_generator(bcj::parse_zhclass(g, u), bcj::parse_zhclass(g, v)));
      },
      py::arg("genus"), py::arg("u"), py::arg("v"));
  m.def(
      "epsilon",
      [](int g, const std::vector<std::vector<std::int64_t>>& L,
         const std::vector<std::pair<std::string, std::string>>& basis) {
        const bcj::LinkingMatrix lm(g, L);
        return bcj::epsilon(lm, bcj::rho_separating(integral_basis(g, basis))).str();
      },
      py::arg("genus"), py::arg("L"), py::arg("basis"),
      "epsilon(L, rho(T_c)) as a decimal string.");
}
