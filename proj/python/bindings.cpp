#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dihedralsig/coloring.hpp"
#include "dihedralsig/coverarith.hpp"
#include "dihedralsig/covers.hpp"
#include "dihedralsig/errors.hpp"
#include "dihedralsig/pipeline.hpp"
#include "dihedralsig/surfaces.hpp"
#include "dihedralsig/table.hpp"
#include "dihedralsig/xi.hpp"

namespace py = pybind11;
using namespace dihedralsig;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

Integer from_py(const py::handle& v) { return Integer(py::str(v).cast<std::string>()); }

IntMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = from_py(rows[i][j]);
  }
  return m;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

py::list integers_to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

KnotRecord knot_record(const std::string& name, const std::string& pd, const std::string& braid,
                       const std::string& table) {
  const int given = !name.empty() + !pd.empty() + !braid.empty();
  if (given != 1) throw InputError("give exactly one of: name, pd, braid");
  if (!pd.empty()) return adhoc_record("pd", parse_pd(pd, true));
  if (!braid.empty()) {
    const auto b = parse_braid(braid);
    return adhoc_record("braid", braid_closure(b), b);
  }
  return load_table(table.empty() ? default_table_path() : table).find(name);
}

PipelineOptions options(const std::string& cache_dir) {
  PipelineOptions o;
  if (!cache_dir.empty()) o.cache = ResultCache(cache_dir);
  return o;
}

}  // namespace

PYBIND11_MODULE(_dihedralsig, m) {
  m.doc() = "Dihedral covers, linking forms and ribbon obstructions for knots";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<IndeterminateError>(m, "IndeterminateError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());

  py::class_<KnotDiagram>(m, "KnotDiagram")
      .def_static("parse", &parse_pd, py::arg("text"), py::arg("allow_unknot") = false)
      .def_static("from_braid", [](const std::string& text) { return braid_closure(parse_braid(text)); })
      .def_property_readonly("crossings", &KnotDiagram::crossings)
      .def_property_readonly("crossing_count", &KnotDiagram::crossing_count)
      .def_property_readonly("writhe", &KnotDiagram::writhe)
      .def_property_readonly("bridge_upper_bound", &KnotDiagram::bridge_upper_bound)
      .def("mirror", &KnotDiagram::mirror)
      .def("determinant", [](const KnotDiagram& d) { return to_py(determinant(d)); })
      .def("double_cover_homology", [](const KnotDiagram& d) { return double_cover_homology(d).to_string(); })
      .def("goeritz_matrix", [](const KnotDiagram& d) { return matrix_to_py(goeritz_matrix(d)); })
      .def("colorings",
           [](const KnotDiagram& d, std::int64_t p) {
             py::list out;
             for (const auto& c : fox_colorings(d, p)) out.append(py::make_tuple(c.labels, c.surjective));
             return out;
           },
           py::arg("p"))
      .def("branched_homology",
           [](const KnotDiagram& d, const std::vector<std::int64_t>& labels, std::int64_t p) {
             const Coloring c{p, labels, labels_surjective(labels, p)};
             const auto h = branched_homology(d, c);
             return py::make_tuple(h.unbranched.to_string(), h.branched.to_string(), h.branched.rank);
           },
           py::arg("labels"), py::arg("p"))
      .def("__str__", &KnotDiagram::to_pd_string);

  m.def("smith_invariants",
        [](const std::vector<std::vector<py::object>>& rows) { return integers_to_py(smith_invariants(matrix_from_py(rows))); });
  m.def("cokernel", [](const std::vector<std::vector<py::object>>& rows) { return cokernel(matrix_from_py(rows)).to_string(); });
  m.def("seifert_matrix", [](const std::string& braid) { return matrix_to_py(seifert_matrix(parse_braid(braid)).L); });
  m.def("tristram_levine",
        [](const std::vector<std::vector<py::object>>& L, std::int64_t p, std::int64_t k) {
          return tristram_levine(matrix_from_py(L), p, k);
        },
        py::arg("L"), py::arg("p"), py::arg("k"));
  m.def("assemble_xi",
        [](std::int64_t p, const py::object& L_V, const py::object& sigma_W, const std::vector<int>& tl) {
          return to_py(*assemble_xi(p, from_py(L_V), from_py(sigma_W), tl).xi);
        },
        py::arg("p"), py::arg("L_V"), py::arg("sigma_W"), py::arg("tl"));
  m.def("ribbon_bound", &ribbon_bound, py::arg("p"), py::arg("rk"));
  m.def("bridge_bound", &bridge_bound, py::arg("p"), py::arg("n"));
  m.def("genus_bound", &genus_bound, py::arg("p"), py::arg("n"));
  m.def("viro_signature",
        [](std::int64_t n, const py::object& sigma_Y, const std::map<std::int64_t, py::object>& euler) {
          CoverSpec s{n, from_py(sigma_Y), {}};
          for (const auto& [r, e] : euler) s.euler_numbers[r] = from_py(e);
          return to_py(viro_signature(s));
        },
        py::arg("n"), py::arg("sigma_Y"), py::arg("euler_numbers") = std::map<std::int64_t, py::object>{});
  m.def("sashka_signature",
        [](std::int64_t p, const py::object& sigma_Y, const py::object& e_B, const py::object& xi) {
          return to_py(sashka_signature(p, from_py(sigma_Y), from_py(e_B), from_py(xi)));
        },
        py::arg("p"), py::arg("sigma_Y"), py::arg("e_B"), py::arg("xi"));
  m.def("ih_euler_characteristic", &ih_euler_characteristic, py::arg("p"), py::arg("rk"));
  m.def("disk_cover_euler", &disk_cover_euler, py::arg("p"));

  m.def("default_table_path", &default_table_path);
  m.def("knot_names", [](const std::string& table) {
    std::vector<std::string> names;
    for (const auto& k : load_table(table.empty() ? default_table_path() : table).knots) names.push_back(k.name);
    return names;
  }, py::arg("table") = "");

  // Report functions return JSON text; the Python wrapper decodes it.
  m.def("_color_census",
        [](const std::string& name, const std::string& pd, const std::string& braid, const std::string& table,
           std::int64_t p) { return color_census(knot_record(name, pd, braid, table), p).dump(); });
  m.def("_det_report", [](const std::string& name, const std::string& pd, const std::string& braid,
                          const std::string& table) { return det_report(knot_record(name, pd, braid, table)).dump(); });
  m.def("_obstruct_report",
        [](const std::string& name, const std::string& pd, const std::string& braid, const std::string& table,
           std::int64_t p, const std::string& sigma_w_json, const std::string& cache_dir) {
          const SigmaWInputs sw = sigma_w_json.empty() ? SigmaWInputs{} : parse_sigma_w(sigma_w_json);
          return obstruct_report(knot_record(name, pd, braid, table), p, sw, options(cache_dir)).dump();
        });
  m.def("_full_report", [](const std::string& table, const std::vector<std::int64_t>& primes, const std::string& cache_dir) {
    return full_report(load_table(table.empty() ? default_table_path() : table), primes, options(cache_dir)).dump(2);
  });
}
