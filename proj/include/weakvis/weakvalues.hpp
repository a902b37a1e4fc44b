#pragma once

#include "weakvis/hilbert.hpp"

#include <span>
#include <vector>

namespace weakvis
{

enum class TensorKind
{
	weak,
	expectation
};

constexpr std::string_view to_string(TensorKind kind) noexcept
{
	return kind == TensorKind::weak ? "weak" : "expectation";
}

/// One complex component per joint basis label, axes in subsystem order.
/// `overlap` is <post|pre> for weak tensors and <psi|psi> = 1 for
/// expectation tensors.
struct WeakValueTensor
{
	Shape shape;
	std::vector<Complex> components;
	TensorKind kind = TensorKind::weak;
	Complex overlap{1.0, 0.0};

	[[nodiscard]] const Complex& at(std::span<const std::size_t> label) const
	{
		return components.at(shape.flat_index(label));
	}
};

/// Row-major D x D matrix acting on a ket of the given shape.
struct DenseOperator
{
	Shape shape;
	std::vector<Complex> entries;

	[[nodiscard]] std::size_t dim() const noexcept { return shape.total(); }
	[[nodiscard]] const Complex& operator()(std::size_t row, std::size_t col) const
	{
		return entries[row * dim() + col];
	}
	Complex& operator()(std::size_t row, std::size_t col) { return entries[row * dim() + col]; }

	static DenseOperator identity(const Shape& shape);
};

/// Relative orthogonality threshold: a selection is rejected when
/// |<post|pre>| <= orthogonality_tolerance * |pre| * |post|.
inline constexpr double orthogonality_tolerance = 1e-10;

/// <post|pre>, throwing OrthogonalSelection when below the threshold.
Complex checked_overlap(const Ket& pre, const Ket& post);

/// <post|op|pre> / <post|pre> for a projector product.
Complex weak_value(const Ket& pre, const Ket& post, const ProjectorProduct& op);

/// Full-product weak values for every joint label.
WeakValueTensor weak_tensor(const Ket& pre, const Ket& post);

/// <psi|Pi...|psi> = |amp|^2 of the normalised state.
WeakValueTensor expectation_tensor(const Ket& state);

/// Sum over every axis except `keep`; entry i is the single-projector value
/// of level i on that subsystem.
std::vector<Complex> marginalize(const WeakValueTensor& t, std::size_t keep);

Complex total_sum(const WeakValueTensor& t);

/// Reorders axes so that new axis j is old axis `order[j]`.
WeakValueTensor permute_axes(const WeakValueTensor& t, std::span<const std::size_t> order);

/// <post|A|pre> / <post|pre> with a dense matrix; reference path for the
/// masking implementation above.
Complex weak_value_observable(const Ket& pre, const Ket& post, const DenseOperator& op);

} // namespace weakvis
