#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gf2max/gf2max.hpp"

namespace py = pybind11;
using namespace gf2max;

namespace {

// Python ints are arbitrary precision; go through decimal text both ways.
py::int_ to_py(const BigInt& v)
{
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& v)
{
    return parse_bigint(py::str(v).cast<std::string>());
}

Gf2Poly poly_arg(const py::object& obj)
{
    if (py::isinstance<Gf2Poly>(obj))
        return obj.cast<Gf2Poly>();
    if (py::isinstance<py::int_>(obj))
        return Gf2Poly::from_bigint(from_py(obj.cast<py::int_>()));
    return parse_poly(obj.cast<std::string>());
}

Limits make_limits(const py::kwargs& kw)
{
    Limits l;
    if (kw.contains("cap_enum"))
        l.enumeration = kw["cap_enum"].cast<int>();
    if (kw.contains("cap_factor"))
        l.factoring = kw["cap_factor"].cast<int>();
    if (kw.contains("cap_brute"))
        l.brute_force = kw["cap_brute"].cast<int>();
    if (kw.contains("cap_gl"))
        l.exhaustive = kw["cap_gl"].cast<int>();
    return l;
}

py::list codes(const std::vector<Gf2Mat>& ms)
{
    py::list out;
    for (const auto& m : ms)
        out.append(to_py(encode(m).code));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Maximal-order matrices over GF(2)";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Gf2Poly>(m, "Poly")
        .def(py::init([](const py::object& o) { return poly_arg(o); }))
        .def_property_readonly("degree", [](const Gf2Poly& f) -> std::optional<std::size_t> { return f.degree(); })
        .def("__int__", [](const Gf2Poly& f) { return to_py(f.to_bigint()); })
        .def("__str__", [](const Gf2Poly& f) { return to_string(f); })
        .def("__repr__", [](const Gf2Poly& f) { return "Poly('" + to_string(f) + "')"; })
        .def("__hash__", [](const Gf2Poly& f) { return py::hash(py::str(to_integer_string(f))); })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def("__mul__", [](const Gf2Poly& a, const Gf2Poly& b) { return poly_mul(a, b); });

    py::class_<Gf2Mat>(m, "Matrix")
        .def(py::init<int>())
        .def_static("identity", &Gf2Mat::identity)
        .def_static("decode", [](int n, const py::int_& code) { return decode({n, from_py(code)}); })
        .def_static("parse", [](const std::string& text, std::optional<int> n) { return parse_matrix(text, n); },
                    py::arg("text"), py::arg("n") = py::none())
        .def_property_readonly("n", &Gf2Mat::size)
        .def_property_readonly("code", [](const Gf2Mat& a) { return to_py(encode(a).code); })
        .def("get", &Gf2Mat::get)
        .def("rows", [](const Gf2Mat& a) {
            std::vector<std::string> out;
            for (int i = 0; i < a.size(); ++i)
                out.push_back(format_state(a.row(i), a.size()));
            return out;
        })
        .def("inverse", &mat_inverse)
        .def("__pow__", [](const Gf2Mat& a, const py::int_& e) { return mat_pow(a, from_py(e)); })
        .def("__str__", [](const Gf2Mat& a) { return format_grid(a); })
        .def("__repr__", [](const Gf2Mat& a) { return "Matrix(n=" + std::to_string(a.size()) + ", code=" + format_code(a) + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self * py::self);

    py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ValueError);

    m.def("is_irreducible", [](const py::object& f) { return is_irreducible(poly_arg(f)); });
    m.def("is_primitive", [](const py::object& f, const py::kwargs& kw) {
        return is_primitive(poly_arg(f), make_limits(kw));
    });
    m.def("primitive_polynomials", [](int n, const py::kwargs& kw) { return enumerate_primitive(n, make_limits(kw)); });
    m.def("count_primitive", [](int n, const py::kwargs& kw) { return count_primitive(n, make_limits(kw)); });
    m.def("mersenne_factors", [](int n) { return factor_mersenne(n).factors; });

    m.def("companion", [](const py::object& f) { return companion(poly_arg(f)); });
    m.def("char_poly", &char_poly);
    m.def("min_poly", &min_poly);
    m.def("rank", &mat_rank);
    m.def("order", [](const Gf2Mat& a) { return mat_order(a); });

    m.def("gl_order", [](int n) { return to_py(gl_order(n)); });
    m.def("class_size", [](int n) { return to_py(class_size(n)); });
    m.def("total_max_order_count", [](int n, const py::kwargs& kw) {
        return to_py(total_max_order_count(n, make_limits(kw)));
    });
    m.def("centralizer", [](const Gf2Mat& a) { return codes(centralizer_of_cyclic(a).elements()); });
    m.def("verify_centralizer", [](const Gf2Mat& a) { return verify_centralizer(a); });
    m.def("conjugacy_class", [](const py::object& f, const py::kwargs& kw) {
        return codes(conjugacy_class(poly_arg(f), make_limits(kw)).matrices);
    });
    m.def(
        "sample_conjugates",
        [](const py::object& f, std::size_t count, std::uint64_t seed) {
            return codes(sample_conjugates(poly_arg(f), count, seed).matrices);
        },
        py::arg("f"), py::arg("count"), py::arg("seed") = 0);
    m.def(
        "census",
        [](int n, unsigned threads) {
            py::dict out;
            for (const auto& [f, size] : brute_force_census(n, {}, threads).buckets)
                out[py::cast(f)] = size;
            return out;
        },
        py::arg("n"), py::arg("threads") = 1);
    m.def(
        "verify",
        [](int n, unsigned threads) {
            const auto report = verify_dimension(n, {}, threads);
            py::list checks;
            for (const auto& c : report.checks)
                checks.append(py::make_tuple(c.name, c.passed, c.detail));
            return py::make_tuple(report.passed(), checks);
        },
        py::arg("n"), py::arg("threads") = 1);

    m.def("orbit_length", [](const Gf2Mat& a, const std::string& seed) {
        return orbit_length(a, parse_state(seed, a.size()));
    });
    m.def("full_period_check", [](const Gf2Mat& a) { return full_period_check(a); });
    m.def(
        "stream",
        [](const Gf2Mat& a, const std::string& seed, std::uint64_t steps) {
            StateStream s(a, parse_state(seed, a.size()));
            std::vector<std::string> out;
            for (std::uint64_t k = 0; k < steps; ++k)
                out.push_back(format_state(s.next(), a.size()));
            return out;
        },
        py::arg("a"), py::arg("seed"), py::arg("steps"));
}
