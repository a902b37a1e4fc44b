#include "weakvis/cli.hpp"
#include "weakvis/dynamics.hpp"
#include "weakvis/realization.hpp"
#include "weakvis/scheme_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace weakvis;

namespace
{

Ket ket_from(const std::vector<std::size_t>& dims, std::vector<Complex> amps)
{
	return Ket(Shape(dims), std::move(amps));
}

ProjectorProduct product_from(const std::vector<std::pair<std::size_t, std::size_t>>& factors)
{
	std::vector<ProjectorProduct::Factor> out;
	for(const auto& [subsystem, level] : factors)
	{
		out.push_back({subsystem, level});
	}
	return ProjectorProduct(std::move(out));
}

} // namespace

PYBIND11_MODULE(_weakvis, m)
{
	m.doc() = "Weak-value tensors of projector products for pre- and post-selected qudit systems";

	static py::exception<Error> error_type(m, "WeakvisError", PyExc_ValueError);
	py::register_exception_translator([](std::exception_ptr p) {
		try
		{
			if(p)
			{
				std::rethrow_exception(p);
			}
		}
		catch(const Error& e)
		{
			py::set_error(error_type, e.what());
		}
	});

	py::class_<Ket>(m, "Ket")
		.def(py::init(&ket_from), py::arg("dims"), py::arg("amps"))
		.def_property_readonly("dims", [](const Ket& k) { return k.shape().dims(); })
		.def_property_readonly("amps",
		                       [](const Ket& k) { return std::vector<Complex>(k.amps().begin(), k.amps().end()); })
		.def("norm", [](const Ket& k) { return norm(k); })
		.def("__len__", &Ket::size)
		.def("__repr__", [](const Ket& k) { return "<Ket shape=" + k.shape().to_string() + ">"; });

	py::enum_<TensorKind>(m, "TensorKind")
		.value("weak", TensorKind::weak)
		.value("expectation", TensorKind::expectation);

	py::class_<WeakValueTensor>(m, "WeakValueTensor")
		.def_property_readonly("dims", [](const WeakValueTensor& t) { return t.shape.dims(); })
		.def_readonly("components", &WeakValueTensor::components)
		.def_readonly("kind", &WeakValueTensor::kind)
		.def_readonly("overlap", &WeakValueTensor::overlap)
		.def("at", [](const WeakValueTensor& t, const std::vector<std::size_t>& label) { return t.at(label); })
		.def("marginal", &marginalize, py::arg("axis"))
		.def("total", &total_sum);

	py::class_<Scenario>(m, "Scenario")
		.def_readonly("name", &Scenario::name)
		.def_readonly("pre", &Scenario::pre)
		.def_readonly("post", &Scenario::post)
		.def_readonly("labels", &Scenario::labels)
		.def_readonly("params", &Scenario::params);

	m.def("tensor_product", py::overload_cast<const Ket&, const Ket&>(&tensor_product));
	m.def("inner", &inner, py::arg("bra"), py::arg("ket"));
	m.def("normalize", &normalize);
	m.def(
		"weak_value",
		[](const Ket& pre, const Ket& post, const std::vector<std::pair<std::size_t, std::size_t>>& factors) {
			return weak_value(pre, post, product_from(factors));
		},
		py::arg("pre"), py::arg("post"), py::arg("factors"),
		"Weak value of a projector product given as [(subsystem, level), ...].");
	m.def("weak_tensor", &weak_tensor, py::arg("pre"), py::arg("post"));
	m.def("expectation_tensor", &expectation_tensor, py::arg("state"));
	m.def("marginalize", &marginalize, py::arg("tensor"), py::arg("axis"));
	m.def("total_sum", &total_sum, py::arg("tensor"));
	m.def(
		"apply_pauli_string",
		[](const std::string& s, const Ket& k) { return apply_pauli_string(PauliString::parse(s), k); },
		py::arg("string"), py::arg("ket"));
	m.def(
		"stabilizer_eigenvalue",
		[](const Ket& k, const std::string& s) { return stabilizer_eigenvalue(k, PauliString::parse(s)); },
		py::arg("state"), py::arg("string"));
	m.def("diagonal_cells", [](const std::vector<std::size_t>& dims) { return diagonal_cells(Shape(dims)); });

	m.def("scenario_names", &scenario_names);
	m.def(
		"scenario",
		[](const std::string& name, std::optional<double> gamma, std::size_t parties, std::size_t levels) {
			return scenario_by_name(name, {gamma, parties, levels});
		},
		py::arg("name"), py::arg("gamma") = py::none(), py::arg("parties") = 3, py::arg("levels") = 2);
	m.def(
		"render",
		[](const Scenario& s, const std::string& format) { return render_scheme(make_scheme(s), parse_format(format)); },
		py::arg("scenario"), py::arg("format") = "text");
	m.def(
		"scheme_json", [](const Scenario& s) { return to_json(make_scheme(s)).dump(); }, py::arg("scenario"));

	m.def(
		"evolve",
		[](const Ket& state, const std::vector<double>& energies, double t) {
			return evolve(state, DiagonalHamiltonian{state.shape(), energies}, t);
		},
		py::arg("state"), py::arg("energies"), py::arg("t"),
		"Exact evolution under a diagonal Hamiltonian given by its basis energies.");
	m.def("epr_pair", &epr_pair);
	m.def(
		"closed_product_form",
		[](const std::string& family, double t, std::optional<double> eps, std::optional<double> eps2,
	       std::optional<double> phi) { return closed_product_form(parse_family(family), {eps, eps2, phi}, t); },
		py::arg("family"), py::arg("t"), py::arg("eps") = py::none(), py::arg("eps2") = py::none(),
		py::arg("phi") = py::none());
	m.def(
		"evolve_exact",
		[](const std::string& family, double t, std::optional<double> eps, std::optional<double> eps2,
	       std::optional<double> phi) {
			const auto setup = reference_setup(parse_family(family), {eps, eps2, phi});
			return evolve(setup.initial, setup.hamiltonian, t);
		},
		py::arg("family"), py::arg("t"), py::arg("eps") = py::none(), py::arg("eps2") = py::none(),
		py::arg("phi") = py::none(), "Exact evolution of the initial state and Hamiltonian a family describes.");
	m.def(
		"compare_states",
		[](const Ket& a, const Ket& b) {
			const auto r = compare_states(a, b);
			return py::dict(py::arg("fidelity") = r.fidelity, py::arg("max_component_diff") = r.max_component_diff);
		},
		py::arg("a"), py::arg("b"));

	m.def(
		"cli_main",
		[](const std::vector<std::string>& args) {
			std::ostringstream out;
			std::ostringstream err;
			const int code = cli_main(args, out, err);
			return py::make_tuple(code, out.str(), err.str());
		},
		py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
