#include "weakvis/dynamics.hpp"

#include "weakvis/weakvalues.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace weakvis
{

namespace
{

const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

double require(const std::optional<double>& value, const char* name, ProductFamily family)
{
	if(!value)
	{
		throw Error(ErrorKind::MissingParam,
		            std::string(to_string(family)) + " needs parameter '" + name + "'");
	}
	if(!std::isfinite(*value))
	{
		throw Error(ErrorKind::NonFiniteAmplitude, std::string("parameter '") + name + "' is not finite");
	}
	return *value;
}

// (|10> e^{-i a t} - |01> e^{-i b t}) / sqrt(2), flat order |00>,|01>,|10>,|11>
Ket epr_factor(double phase_10, double phase_01)
{
	return Ket(Shape{2, 2},
	           {0.0, -std::polar(1.0, phase_01) * inv_sqrt2, std::polar(1.0, phase_10) * inv_sqrt2, 0.0});
}

// (|000> e^{i a} + |111> e^{i b}) / sqrt(2)
Ket ghz_factor(double phase_000, double phase_111)
{
	std::vector<Complex> amps(8);
	amps[0] = std::polar(1.0, phase_000) * inv_sqrt2;
	amps[7] = std::polar(1.0, phase_111) * inv_sqrt2;
	return Ket(Shape::uniform(3, 2), std::move(amps));
}

Ket ghz3()
{
	return ghz_factor(0.0, 0.0);
}

// Selector fixing consecutive subsystems starting at `offset` to `levels`.
std::vector<ProjectorProduct::Factor> fix(std::size_t offset, std::initializer_list<std::size_t> levels)
{
	std::vector<ProjectorProduct::Factor> out;
	for(const auto level : levels)
	{
		out.push_back({offset++, level});
	}
	return out;
}

ProjectorProduct join(std::initializer_list<std::vector<ProjectorProduct::Factor>> parts)
{
	std::vector<ProjectorProduct::Factor> all;
	for(const auto& p : parts)
	{
		all.insert(all.end(), p.begin(), p.end());
	}
	return ProjectorProduct(std::move(all));
}

} // namespace

DiagonalHamiltonian build_hamiltonian(const Shape& shape, std::span<const HamiltonianTerm> terms)
{
	DiagonalHamiltonian h{shape, std::vector<double>(shape.total(), 0.0)};
	for(const auto& term : terms)
	{
		if(!std::isfinite(term.coupling))
		{
			throw Error(ErrorKind::NonFiniteAmplitude, "coupling is not finite");
		}
		term.selector.validate(shape);
		for(std::size_t k = 0; k < h.energies.size(); ++k)
		{
			if(term.selector.selects(shape, k))
			{
				h.energies[k] += term.coupling;
			}
		}
	}
	return h;
}

Ket evolve(const Ket& state, const DiagonalHamiltonian& h, double t)
{
	if(!(state.shape() == h.shape) || h.energies.size() != state.size())
	{
		throw Error(ErrorKind::ShapeMismatch,
		            state.shape().to_string() + " vs Hamiltonian " + h.shape.to_string());
	}
	std::vector<Complex> amps(state.size());
	for(std::size_t k = 0; k < amps.size(); ++k)
	{
		const double angle = h.energies[k] * t;
		if(angle == 0.0 || state[k] == Complex(0.0, 0.0))
		{
			amps[k] = state[k];
			continue;
		}
		// Rotate in extended precision and round once, so repeated steps do
		// not accumulate a systematic modulus drift.
		using Wide = std::complex<long double>;
		const Wide a(state[k].real(), state[k].imag());
		const Wide rotated = a * std::polar(1.0L, -static_cast<long double>(angle));
		const long double scale = std::abs(a) / std::abs(rotated);
		amps[k] = Complex(static_cast<double>(rotated.real() * scale), static_cast<double>(rotated.imag() * scale));
	}
	return Ket(state.shape(), std::move(amps));
}

Ket epr_pair()
{
	return epr_factor(0.0, 0.0);
}

std::string_view to_string(ProductFamily family) noexcept
{
	switch(family)
	{
	case ProductFamily::psit1: return "psit1";
	case ProductFamily::E111: return "E111";
	case ProductFamily::Hamm2: return "Hamm2";
	case ProductFamily::GHZ2: return "GHZ2";
	case ProductFamily::PsiGHZ11: return "PsiGHZ11";
	}
	return "unknown";
}

ProductFamily parse_family(std::string_view name)
{
	for(const auto f : {ProductFamily::psit1, ProductFamily::E111, ProductFamily::Hamm2,
	                    ProductFamily::GHZ2, ProductFamily::PsiGHZ11})
	{
		if(to_string(f) == name)
		{
			return f;
		}
	}
	throw Error(ErrorKind::UnknownFamily, "no product family named '" + std::string(name) + "'");
}

Ket closed_product_form(ProductFamily family, const ProductParams& params, double t)
{
	switch(family)
	{
	case ProductFamily::psit1:
	{
		const double eps = require(params.eps, "eps", family);
		const auto f = epr_factor(-eps * t, 0.0);
		return tensor_product(f, f);
	}
	case ProductFamily::E111:
	{
		const double eps = require(params.eps, "eps", family);
		const auto f = epr_factor(-eps * t, 0.0);
		const std::array factors{f, f, f};
		return tensor_product(factors);
	}
	case ProductFamily::Hamm2:
	{
		const double eps1 = require(params.eps, "eps", family);
		const double eps2 = require(params.eps2, "eps2", family);
		const std::array factors{
			epr_factor(-eps1 * t, 0.0),
			epr_factor(-(eps1 - eps2) * t, 0.0),
			epr_factor(0.0, -eps2 * t),
		};
		return tensor_product(factors);
	}
	case ProductFamily::GHZ2:
	{
		const double phi = require(params.phi, "phi", family);
		const auto f = ghz_factor(-phi * t, 0.0);
		return tensor_product(f, f);
	}
	case ProductFamily::PsiGHZ11:
	{
		const double phi = require(params.phi, "phi", family);
		const double eps = require(params.eps, "eps", family);
		const double beta = phi + eps;
		const std::array factors{
			ghz_factor(-phi * t, 0.0),
			ghz_factor(eps * t, 0.0),
			ghz_factor(0.0, -beta * t),
		};
		return tensor_product(factors);
	}
	}
	throw Error(ErrorKind::UnknownFamily, "unhandled product family");
}

ReferenceSetup reference_setup(ProductFamily family, const ProductParams& params)
{
	const auto epr = epr_pair();
	switch(family)
	{
	case ProductFamily::psit1:
	{
		const double eps = require(params.eps, "eps", family);
		auto initial = tensor_product(epr, epr);
		const std::array terms{HamiltonianTerm{eps, join({fix(0, {1, 0}), fix(2, {1, 0})})}};
		auto h = build_hamiltonian(initial.shape(), terms);
		return {std::move(initial), std::move(h)};
	}
	case ProductFamily::E111:
	{
		const double eps = require(params.eps, "eps", family);
		const std::array pairs{epr, epr, epr};
		auto initial = tensor_product(pairs);
		const std::array terms{
			HamiltonianTerm{eps, join({fix(0, {1, 0}), fix(2, {1, 0}), fix(4, {1, 0})})}};
		auto h = build_hamiltonian(initial.shape(), terms);
		return {std::move(initial), std::move(h)};
	}
	case ProductFamily::Hamm2:
	{
		const double eps1 = require(params.eps, "eps", family);
		const double eps2 = require(params.eps2, "eps2", family);
		const std::array pairs{epr, epr, epr};
		auto initial = tensor_product(pairs);
		const std::array terms{
			HamiltonianTerm{eps1, join({fix(0, {1, 0}), fix(2, {1, 0})})},
			HamiltonianTerm{eps2, join({fix(0, {0, 1}), fix(2, {0, 1})})},
		};
		auto h = build_hamiltonian(initial.shape(), terms);
		return {std::move(initial), std::move(h)};
	}
	case ProductFamily::GHZ2:
	{
		const double phi = require(params.phi, "phi", family);
		const auto g = ghz3();
		auto initial = tensor_product(g, g);
		const std::array terms{HamiltonianTerm{phi, join({fix(0, {0, 0, 0}), fix(3, {0, 0, 0})})}};
		auto h = build_hamiltonian(initial.shape(), terms);
		return {std::move(initial), std::move(h)};
	}
	case ProductFamily::PsiGHZ11:
	{
		const double phi = require(params.phi, "phi", family);
		const double eps = require(params.eps, "eps", family);
		const auto g = ghz3();
		const std::array cubes{g, g, g};
		auto initial = tensor_product(cubes);
		// Cube 3 couples to the |111> sub-cube of cube 2 with beta = phi + eps.
		const std::array terms{
			HamiltonianTerm{phi, join({fix(0, {0, 0, 0}), fix(3, {0, 0, 0})})},
			HamiltonianTerm{phi + eps, join({fix(3, {1, 1, 1}), fix(6, {1, 1, 1})})},
		};
		auto h = build_hamiltonian(initial.shape(), terms);
		return {std::move(initial), std::move(h)};
	}
	}
	throw Error(ErrorKind::UnknownFamily, "unhandled product family");
}

StateComparison compare_states(const Ket& a, const Ket& b)
{
	if(!(a.shape() == b.shape()))
	{
		throw Error(ErrorKind::ShapeMismatch, a.shape().to_string() + " vs " + b.shape().to_string());
	}
	const Ket na = normalize(a);
	const Ket nb = normalize(b);
	StateComparison out;
	out.fidelity = std::norm(inner(na, nb));

	std::size_t pivot = 0;
	for(std::size_t k = 1; k < na.size(); ++k)
	{
		if(std::abs(na[k]) > std::abs(na[pivot]))
		{
			pivot = k;
		}
	}
	Complex align{1.0, 0.0};
	if(std::abs(nb[pivot]) > 0.0)
	{
		align = std::polar(1.0, std::arg(na[pivot]) - std::arg(nb[pivot]));
	}
	for(std::size_t k = 0; k < na.size(); ++k)
	{
		out.max_component_diff = std::max(out.max_component_diff, std::abs(na[k] - align * nb[k]));
	}
	return out;
}

std::vector<PhaseEntry> phase_report(const Ket& state, const Ket& reference)
{
	if(!(state.shape() == reference.shape()))
	{
		throw Error(ErrorKind::ShapeMismatch,
		            state.shape().to_string() + " vs " + reference.shape().to_string());
	}
	constexpr double floor = 1e-12;
	std::vector<PhaseEntry> out;
	for(std::size_t k = 0; k < state.size(); ++k)
	{
		if(std::abs(state[k]) > floor && std::abs(reference[k]) > floor)
		{
			double phase = std::arg(state[k] / reference[k]);
			if(phase <= -std::numbers::pi)
			{
				phase = std::numbers::pi;
			}
			out.push_back({state.shape().label(k), phase});
		}
	}
	return out;
}

} // namespace weakvis
