#pragma once

// Index maps between the d^n cells of an n-dimensional grid (one physical
// particle in a square, cube or hypercube) and the basis labels of the n
// realised qudits. Cells are numbered by big-endian base-d digits, the
// same rule the hilbert module uses for flat indices.

#include "weakvis/hilbert.hpp"

#include <optional>
#include <vector>

namespace weakvis
{

struct HypercubeRealization
{
	std::size_t levels = 2; ///< d, cells per axis
	std::size_t axes = 1;   ///< n
	std::size_t cell = 0;
};

/// Throws OutOfRange if cell >= d^n (or d < 2, n < 1).
BasisLabel cell_to_basis(const HypercubeRealization& r);
std::size_t basis_to_cell(std::span<const std::size_t> label, std::size_t levels, std::size_t axes);

/// (i, ..., i) for every level i; throws NonUniformShape.
std::vector<BasisLabel> diagonal_cells(const Shape& shape);

/// True iff the squared amplitude mass off the diagonal cells is below tol.
bool is_diagonal_supported(const Ket& state, double tol);

/// lambda with s|state> = lambda|state> (component-wise within 1e-10), or
/// nullopt when the state is not an eigenstate. Throws NonQubitShape.
std::optional<double> stabilizer_eigenvalue(const Ket& state, const PauliString& s);

} // namespace weakvis
