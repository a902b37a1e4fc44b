#include "weakvis/weakvalues.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace weakvis
{

namespace
{

void require_same_shape(const Ket& a, const Ket& b)
{
	if(!(a.shape() == b.shape()))
	{
		throw Error(ErrorKind::ShapeMismatch,
		            a.shape().to_string() + " vs " + b.shape().to_string());
	}
}

} // namespace

DenseOperator DenseOperator::identity(const Shape& shape)
{
	DenseOperator op{shape, std::vector<Complex>(shape.total() * shape.total())};
	for(std::size_t k = 0; k < shape.total(); ++k)
	{
		op(k, k) = 1.0;
	}
	return op;
}

Complex checked_overlap(const Ket& pre, const Ket& post)
{
	require_same_shape(pre, post);
	const Complex overlap = inner(post, pre);
	const double floor = orthogonality_tolerance * norm(pre) * norm(post);
	if(!(std::abs(overlap) > floor))
	{
		throw Error(ErrorKind::OrthogonalSelection, "pre- and post-selected states are orthogonal");
	}
	return overlap;
}

Complex weak_value(const Ket& pre, const Ket& post, const ProjectorProduct& op)
{
	const Complex overlap = checked_overlap(pre, post);
	op.validate(pre.shape());
	Complex numerator{0.0, 0.0};
	for(std::size_t k = 0; k < pre.size(); ++k)
	{
		if(op.selects(pre.shape(), k))
		{
			numerator += std::conj(post[k]) * pre[k];
		}
	}
	return numerator / overlap;
}

WeakValueTensor weak_tensor(const Ket& pre, const Ket& post)
{
	const Complex overlap = checked_overlap(pre, post);
	WeakValueTensor t{pre.shape(), std::vector<Complex>(pre.size()), TensorKind::weak, overlap};
	for(std::size_t k = 0; k < pre.size(); ++k)
	{
		t.components[k] = std::conj(post[k]) * pre[k] / overlap;
	}
	return t;
}

WeakValueTensor expectation_tensor(const Ket& state)
{
	const Ket psi = normalize(state);
	WeakValueTensor t{psi.shape(), std::vector<Complex>(psi.size()), TensorKind::expectation,
	                  Complex{1.0, 0.0}};
	for(std::size_t k = 0; k < psi.size(); ++k)
	{
		t.components[k] = std::norm(psi[k]);
	}
	return t;
}

std::vector<Complex> marginalize(const WeakValueTensor& t, std::size_t keep)
{
	if(keep >= t.shape.rank())
	{
		throw Error(ErrorKind::SubsystemOutOfRange,
		            "axis " + std::to_string(keep) + " for shape " + t.shape.to_string());
	}
	std::vector<Complex> out(t.shape.dim(keep));
	for(std::size_t k = 0; k < t.components.size(); ++k)
	{
		out[t.shape.level_of(k, keep)] += t.components[k];
	}
	return out;
}

Complex total_sum(const WeakValueTensor& t)
{
	return std::accumulate(t.components.begin(), t.components.end(), Complex{0.0, 0.0});
}

WeakValueTensor permute_axes(const WeakValueTensor& t, std::span<const std::size_t> order)
{
	const std::size_t n = t.shape.rank();
	std::vector<std::size_t> check(order.begin(), order.end());
	std::sort(check.begin(), check.end());
	std::vector<std::size_t> expected(n);
	std::iota(expected.begin(), expected.end(), 0);
	if(check != expected)
	{
		throw Error(ErrorKind::InvalidShape, "axis order is not a permutation");
	}
	std::vector<std::size_t> dims(n);
	for(std::size_t j = 0; j < n; ++j)
	{
		dims[j] = t.shape.dim(order[j]);
	}
	WeakValueTensor out{Shape(dims), std::vector<Complex>(t.components.size()), t.kind, t.overlap};
	BasisLabel relabeled(n);
	for(std::size_t k = 0; k < t.components.size(); ++k)
	{
		const auto label = t.shape.label(k);
		for(std::size_t j = 0; j < n; ++j)
		{
			relabeled[j] = label[order[j]];
		}
		out.components[out.shape.flat_index(relabeled)] = t.components[k];
	}
	return out;
}

Complex weak_value_observable(const Ket& pre, const Ket& post, const DenseOperator& op)
{
	require_same_shape(pre, post);
	if(!(op.shape == pre.shape()) || op.entries.size() != op.dim() * op.dim())
	{
		throw Error(ErrorKind::ShapeMismatch, "operator does not act on " + pre.shape().to_string());
	}
	const Complex overlap = checked_overlap(pre, post);
	const std::size_t d = op.dim();
	Complex numerator{0.0, 0.0};
	for(std::size_t r = 0; r < d; ++r)
	{
		Complex row{0.0, 0.0};
		for(std::size_t c = 0; c < d; ++c)
		{
			row += op(r, c) * pre[c];
		}
		numerator += std::conj(post[r]) * row;
	}
	return numerator / overlap;
}

} // namespace weakvis
