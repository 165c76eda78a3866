// Python bindings for the main operations. Integer matrices cross the
// boundary as lists of python ints (arbitrary precision, transported as
// decimal strings); structured objects (Siegel points, witnesses,
// certificates) cross as JSON strings in the library's wire formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ppav/levels.hpp"
#include "ppav/serialize.hpp"
#include "ppav/strata.hpp"

namespace py = pybind11;

namespace {

using PyMatrix = std::vector<std::vector<py::object>>;

ppav::Integer integer_from_py(const py::handle& obj) {
  return ppav::int_from_string(py::str(obj).cast<std::string>());
}

py::object integer_to_py(const ppav::Integer& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

ppav::IntegerMatrix matrix_from_py(const PyMatrix& rows) {
  if (rows.empty()) return {};
  ppav::IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ppav::DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = integer_from_py(rows[i][j]);
  }
  return m;
}

py::list matrix_to_py(const ppav::IntegerMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(integer_to_py(m(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

py::tuple type_to_py(const ppav::InvolutionType& t) { return py::make_tuple(t.x, t.y, t.z); }

}  // namespace

PYBIND11_MODULE(ppav_core, m) {
  m.doc() = "exact computations with integral symplectic involutions and period matrices";

  py::register_exception<ppav::Error>(m, "PpavError");

  m.def("is_symplectic", [](const PyMatrix& r) { return ppav::is_symplectic(matrix_from_py(r)); },
        py::arg("matrix"));

  m.def("classify", [](const PyMatrix& r) {
          return type_to_py(ppav::classify_involution(matrix_from_py(r)));
        },
        py::arg("matrix"), "type (x, y, z) of an integral symplectic involution");

  m.def("reiner_normal_form", [](int x, int y, int z) {
          return matrix_to_py(ppav::reiner_normal_form(ppav::InvolutionType(x, y, z)).matrix());
        },
        py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("random_symplectic", [](std::size_t g, std::uint64_t seed, std::size_t word_length) {
          return matrix_to_py(ppav::random_symplectic(g, seed, word_length));
        },
        py::arg("g"), py::arg("seed"), py::arg("word_length") = 12);

  m.def("group_closure_order", [](const std::vector<PyMatrix>& gens, std::size_t cap) {
          std::vector<ppav::IntegerMatrix> ms;
          ms.reserve(gens.size());
          for (const PyMatrix& gen : gens) ms.push_back(matrix_from_py(gen));
          return ppav::group_closure(ms, cap).size();
        },
        py::arg("generators"), py::arg("cap") = 1u << 20);

  m.def("admissible_triples", [](int g) {
          py::list out;
          for (const ppav::InvolutionType& t : ppav::admissible_triples(g))
            out.append(type_to_py(t));
          return out;
        },
        py::arg("g"));

  m.def("component_dimension", [](int x, int y, int z) {
          return ppav::component_dimension(ppav::InvolutionType(x, y, z));
        },
        py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("component_count_bound", &ppav::component_count_bound, py::arg("g"));

  m.def("dual_classes", [](int g) {
          py::list out;
          for (const ppav::ComponentClass& c : ppav::dual_classes(g))
            out.append(py::make_tuple(type_to_py(c.representative), type_to_py(c.dual),
                                      c.dimension));
          return out;
        },
        py::arg("g"));

  m.def("jacobian_type", [](int i, int g) { return type_to_py(ppav::jacobian_type(i, g)); },
        py::arg("i"), py::arg("g"));

  m.def("act", [](const PyMatrix& r, const std::string& siegel_json) {
          ppav::SiegelPoint z = ppav::siegel_from_json(ppav::parse_json(siegel_json));
          return ppav::to_json(ppav::act(matrix_from_py(r), z)).dump();
        },
        py::arg("matrix"), py::arg("siegel_json"));

  m.def("is_fixed", [](const PyMatrix& r, const std::string& siegel_json) {
          ppav::SiegelPoint z = ppav::siegel_from_json(ppav::parse_json(siegel_json));
          return ppav::is_fixed(matrix_from_py(r), z);
        },
        py::arg("matrix"), py::arg("siegel_json"));

  m.def("f0_witness_json", [](int g) {
          std::vector<ppav::GaussianRational> a(static_cast<std::size_t>(g),
                                                ppav::GaussianRational::i());
          return ppav::to_json(ppav::family_f0_witness(g, a)).dump();
        },
        py::arg("g"));

  m.def("fx_witness_json", [](int g, int x) {
          return ppav::to_json(ppav::family_fx_witness(g, x, ppav::FxParameters::defaults(g, x)))
              .dump();
        },
        py::arg("g"), py::arg("x"));

  m.def("master_witness_json", [](int g) {
          ppav::MasterWitness mw =
              ppav::odd_g_master_witness(g, ppav::MasterParameters::defaults(g));
          ppav::json invs = ppav::json::array();
          for (const ppav::SymplecticInvolution& r : mw.involutions)
            invs.push_back(ppav::to_json(r));
          return ppav::json{{"witness", ppav::to_json(mw.witness)}, {"involutions", invs}}.dump();
        },
        py::arg("g"));

  m.def("certificate_json", [](int g) { return ppav::to_json(ppav::connectivity_certificate(g)).dump(); },
        py::arg("g"), "connectivity certificate; raises PpavError if a check fails");

  m.def("reduce_mod", [](const PyMatrix& r, long n) {
          ppav::SymplecticInvolution inv =
              ppav::SymplecticInvolution::from_matrix(matrix_from_py(r));
          return matrix_to_py(ppav::reduce_mod(inv, n).matrix());
        },
        py::arg("matrix"), py::arg("n"));

  m.def("conjugate_mod_p", [](const PyMatrix& a, const PyMatrix& b, long p) {
          ppav::LevelStructure la = ppav::LevelStructure::from_matrix(matrix_from_py(a), p);
          ppav::LevelStructure lb = ppav::LevelStructure::from_matrix(matrix_from_py(b), p);
          return ppav::conjugate_mod_p(la, lb, p);
        },
        py::arg("a"), py::arg("b"), py::arg("p"));

  m.def("conjugacy_certificate_check",
        [](const PyMatrix& e, const PyMatrix& a, const PyMatrix& b, long n) {
          ppav::LevelStructure la = ppav::LevelStructure::from_matrix(matrix_from_py(a), n);
          ppav::LevelStructure lb = ppav::LevelStructure::from_matrix(matrix_from_py(b), n);
          return ppav::conjugacy_certificate_check(matrix_from_py(e), la, lb, n);
        },
        py::arg("e"), py::arg("a"), py::arg("b"), py::arg("n"));

  m.def("g3_conjugator", [](long p) { return matrix_to_py(ppav::g3_conjugator(p)); },
        py::arg("p"));
}
