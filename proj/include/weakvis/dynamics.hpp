#pragma once

// Diagonal (computational-basis) Hamiltonians and their exact evolution,
// with natural units hbar = 1.
//
// Qubit layout for the multi-pair systems: EPR pair j occupies subsystems
// (2j, 2j+1) = (I, II) of that pair; GHZ cube j occupies (3j, 3j+1, 3j+2)
// = (I, II, III) of that cube.

#include "weakvis/hilbert.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weakvis
{

struct HamiltonianTerm
{
	double coupling = 0.0;
	ProjectorProduct selector;
};

struct DiagonalHamiltonian
{
	Shape shape;
	std::vector<double> energies;
};

/// Energies add over every term whose selector matches a basis label.
DiagonalHamiltonian build_hamiltonian(const Shape& shape, std::span<const HamiltonianTerm> terms);

/// amp_k(t) = amp_k(0) * exp(-i E_k t).
Ket evolve(const Ket& state, const DiagonalHamiltonian& h, double t);

/// (|10> - |01>) / sqrt(2)
Ket epr_pair();

enum class ProductFamily
{
	psit1,
	E111,
	Hamm2,
	GHZ2,
	PsiGHZ11
};

std::string_view to_string(ProductFamily family) noexcept;
/// Throws UnknownFamily.
ProductFamily parse_family(std::string_view name);

/// Couplings named by the families: eps (epsilon, or epsilon_1 for Hamm2),
/// eps2 (epsilon_2), phi. PsiGHZ11 uses beta = phi + eps.
struct ProductParams
{
	std::optional<double> eps;
	std::optional<double> eps2;
	std::optional<double> phi;
};

/// The closed product forms written for the multi-pair evolutions, factor
/// by factor, each factor normalised. Throws MissingParam.
Ket closed_product_form(ProductFamily family, const ProductParams& params, double t);

/// Initial product state and interaction Hamiltonian a family describes.
struct ReferenceSetup
{
	Ket initial;
	DiagonalHamiltonian hamiltonian;
};

ReferenceSetup reference_setup(ProductFamily family, const ProductParams& params);

struct StateComparison
{
	double fidelity = 0.0;
	double max_component_diff = 0.0;
};

/// Fidelity |<a|b>|^2/(<a|a><b|b>) and the largest component difference
/// of the normalised states after aligning the global phase on a's
/// largest-magnitude component.
StateComparison compare_states(const Ket& a, const Ket& b);

struct PhaseEntry
{
	BasisLabel label;
	double phase = 0.0;
};

/// arg(state_k / reference_k) in (-pi, pi] on labels where both
/// amplitudes exceed 1e-12 in magnitude.
std::vector<PhaseEntry> phase_report(const Ket& state, const Ket& reference);

} // namespace weakvis
