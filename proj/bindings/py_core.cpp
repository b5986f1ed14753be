#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gca/json_io.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const gca::Json& j) {
    switch (j.type()) {
        case gca::Json::value_t::null: return py::none();
        case gca::Json::value_t::boolean: return py::bool_(j.get<bool>());
        case gca::Json::value_t::number_integer: return py::int_(j.get<long long>());
        case gca::Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case gca::Json::value_t::number_float: return py::float_(j.get<double>());
        case gca::Json::value_t::string: return py::str(j.get<std::string>());
        case gca::Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case gca::Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

gca::Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        gca::Json out = gca::Json::object();
        for (auto item : obj.cast<py::dict>()) {
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        }
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        gca::Json out = gca::Json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("unsupported value in JSON-like argument");
}

gca::WeightPoint weights_from_dict(const py::dict& d) {
    gca::WeightPoint w{};
    for (auto item : d) {
        const std::string name = item.first.cast<std::string>();
        const std::string value = py::str(item.second).cast<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < gca::kNumWeightSymbols; ++i) {
            if (name == gca::weight_symbol_name(static_cast<gca::WeightSymbol>(i))) {
                w[i] = gca::parse_rational(value);
                found = true;
                break;
            }
        }
        if (!found) throw py::value_error("unknown weight symbol: " + name);
    }
    return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations in the centrally extended planar Galilean conformal algebra";
    m.attr("__version__") = "0.1.0";

    m.def("dim", [](int level) { return gca::pbw_basis(level).size(); },
          py::arg("level"), "Dimension of the graded component at the given level");

    m.def("pbw_basis",
          [](int level) {
              py::list out;
              for (const auto& mono : gca::pbw_basis(level)) out.append(mono.str());
              return out;
          },
          py::arg("level"), "Canonical ordered-monomial basis, rendered as strings");

    m.def("gram",
          [](int level) {
              gca::VermaModule<gca::WeightPolynomial> module(gca::symbolic_weights());
              return json_to_py(gca::gram_to_json(level, module.gram(level)));
          },
          py::arg("level"), "Symbolic Gram matrix as {level, basis, entries}");

    m.def("gram_eval",
          [](int level, const py::dict& weights, int jobs) {
              const gca::WeightPoint point = weights_from_dict(weights);
              const gca::RationalMatrix mat = gca::gram_evaluated(level, point, jobs);
              py::list rows;
              for (const auto& row : mat) {
                  py::list cells;
                  for (const auto& v : row) cells.append(gca::to_string(v));
                  rows.append(cells);
              }
              return rows;
          },
          py::arg("level"), py::arg("weights"), py::arg("jobs") = 1,
          "Gram matrix evaluated at rational weights, entries as strings");

    m.def("det",
          [](const py::list& rows) {
              gca::RationalMatrix m;
              for (auto row : rows) {
                  gca::RationalVector r;
                  for (auto cell : row.cast<py::sequence>()) {
                      r.push_back(gca::parse_rational(py::str(cell).cast<std::string>()));
                  }
                  m.push_back(std::move(r));
              }
              return gca::to_string(gca::det_exact(m));
          },
          py::arg("rows"), "Exact determinant of a rational matrix given as strings");

    m.def("kac_power",
          [](int level) { return json_to_py(gca::to_json(gca::kac_power(level))); },
          py::arg("level"));

    m.def("kac_verify",
          [](int level, int trials, std::uint64_t seed, int jobs) {
              return json_to_py(gca::to_json(gca::verify_theorem(level, trials, seed, jobs)));
          },
          py::arg("level"), py::arg("trials") = 5, py::arg("seed") = 1, py::arg("jobs") = 1);

    m.def("solve_cocycles",
          [](int window) { return json_to_py(gca::to_json(gca::solve_cocycles(window))); },
          py::arg("window"));

    m.def("exotic_check", &gca::exotic_check, py::arg("window"));

    m.def("coad_algebra",
          [](const py::dict& current, const py::dict& gamma, int degree_cap) {
              const auto x = gca::current_from_json(py_to_json(current));
              const auto g = gca::density_from_json(py_to_json(gamma));
              return json_to_py(gca::to_json(gca::coad_algebra(x, g, degree_cap)));
          },
          py::arg("current"), py::arg("gamma"),
          py::arg("degree_cap") = gca::kDefaultTrigDegreeCap);

    m.def("pairing",
          [](const py::dict& gamma, const py::dict& current) {
              const auto g = gca::density_from_json(py_to_json(gamma));
              const auto x = gca::current_from_json(py_to_json(current));
              return gca::to_string(gca::pairing(g, x));
          },
          py::arg("gamma"), py::arg("current"));

    m.def("schwarzian",
          [](const py::dict& p, std::size_t grid) {
              const auto poly = gca::trig_from_json(py_to_json(p));
              py::list out;
              for (double v : gca::schwarzian(poly, grid).samples) out.append(v);
              return out;
          },
          py::arg("p"), py::arg("grid") = 1024);

    m.def("coad_group",
          [](const py::dict& group, const py::dict& gamma, std::size_t grid) {
              const auto g = gca::group_from_json(py_to_json(group), grid);
              const auto d = gca::density_from_json(py_to_json(gamma));
              return json_to_py(gca::to_json(gca::coad_group(g, d, grid)));
          },
          py::arg("group"), py::arg("gamma"), py::arg("grid") = 1024);

    m.def("isotropy",
          [](const py::dict& gamma, int degree) {
              const auto g = gca::density_from_json(py_to_json(gamma));
              return json_to_py(gca::to_json(gca::isotropy_solve(g, degree)));
          },
          py::arg("gamma"), py::arg("degree"));

    m.def("vf_check",
          [](int window) { return json_to_py(gca::to_json(gca::vf_realize_check(window))); },
          py::arg("window"));

    m.def("bracket",
          [](const py::dict& x, const py::dict& y) {
              return json_to_py(gca::to_json(
                  gca::bracket(gca::element_from_json(py_to_json(x)),
                               gca::element_from_json(py_to_json(y)))));
          },
          py::arg("x"), py::arg("y"),
          "Bracket of two elements given as {label: rational-string} maps");
}
