#include "weakvis/realization.hpp"

#include <cmath>

namespace weakvis
{

namespace
{

std::size_t cell_count(std::size_t levels, std::size_t axes)
{
	if(levels < 2 || axes < 1)
	{
		throw Error(ErrorKind::OutOfRange, "need at least 2 levels and 1 axis");
	}
	return Shape::uniform(axes, levels).total();
}

} // namespace

BasisLabel cell_to_basis(const HypercubeRealization& r)
{
	const std::size_t cells = cell_count(r.levels, r.axes);
	if(r.cell >= cells)
	{
		throw Error(ErrorKind::OutOfRange,
		            "cell " + std::to_string(r.cell) + " of " + std::to_string(cells));
	}
	BasisLabel label(r.axes);
	std::size_t rest = r.cell;
	for(std::size_t j = r.axes; j-- > 0;)
	{
		label[j] = rest % r.levels;
		rest /= r.levels;
	}
	return label;
}

std::size_t basis_to_cell(std::span<const std::size_t> label, std::size_t levels, std::size_t axes)
{
	cell_count(levels, axes);
	if(label.size() != axes)
	{
		throw Error(ErrorKind::OutOfRange, "label has " + std::to_string(label.size()) +
		                                       " digits, expected " + std::to_string(axes));
	}
	std::size_t cell = 0;
	for(const auto digit : label)
	{
		if(digit >= levels)
		{
			throw Error(ErrorKind::OutOfRange, "digit " + std::to_string(digit) + " >= " +
			                                       std::to_string(levels));
		}
		cell = cell * levels + digit;
	}
	return cell;
}

std::vector<BasisLabel> diagonal_cells(const Shape& shape)
{
	if(!shape.is_uniform())
	{
		throw Error(ErrorKind::NonUniformShape, "diagonal needs equal dimensions, got " + shape.to_string());
	}
	std::vector<BasisLabel> out;
	for(std::size_t i = 0; i < shape.dim(0); ++i)
	{
		out.emplace_back(shape.rank(), i);
	}
	return out;
}

bool is_diagonal_supported(const Ket& state, double tol)
{
	const auto& shape = state.shape();
	if(!shape.is_uniform())
	{
		throw Error(ErrorKind::NonUniformShape, "diagonal needs equal dimensions, got " + shape.to_string());
	}
	std::size_t step = 0;
	for(std::size_t j = 0, p = 1; j < shape.rank(); ++j, p *= shape.dim(0))
	{
		step += p;
	}
	double off_diagonal = 0.0;
	for(std::size_t k = 0; k < state.size(); ++k)
	{
		if(k % step != 0)
		{
			off_diagonal += std::norm(state[k]);
		}
	}
	return off_diagonal < tol;
}

std::optional<double> stabilizer_eigenvalue(const Ket& state, const PauliString& s)
{
	constexpr double tol = 1e-10;
	const Ket image = apply_pauli_string(s, state);
	std::size_t pivot = 0;
	for(std::size_t k = 1; k < state.size(); ++k)
	{
		if(std::abs(state[k]) > std::abs(state[pivot]))
		{
			pivot = k;
		}
	}
	if(std::abs(state[pivot]) <= tol)
	{
		return std::nullopt;
	}
	const Complex lambda = image[pivot] / state[pivot];
	if(std::abs(lambda.imag()) > tol)
	{
		return std::nullopt;
	}
	for(std::size_t k = 0; k < state.size(); ++k)
	{
		if(std::abs(image[k] - lambda * state[k]) > tol)
		{
			return std::nullopt;
		}
	}
	return lambda.real();
}

} // namespace weakvis
