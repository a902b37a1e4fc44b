#include "weakvis/weakvalues.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace weakvis;

namespace
{

const double r3 = 1.0 / std::numbers::sqrt3;
constexpr double tol = 1e-10;

Ket cheshire_pre() { return Ket(Shape{2, 2}, {r3, r3, 0.0, r3}); }
Ket cheshire_post() { return Ket(Shape{2, 2}, {r3, -r3, 0.0, r3}); }
Ket hardy_pre() { return Ket(Shape{2, 2}, {1.0, 0.0, 1.0, 1.0}); }
Ket hardy_post() { return Ket(Shape{2, 2}, {1.0, -1.0, -1.0, 1.0}); }

void expect_complex(Complex got, Complex want, double eps = tol)
{
	EXPECT_LT(std::abs(got - want), eps) << "got " << got << " want " << want;
}

} // namespace

TEST(WeakValue, Examples)
{
	// (spin, position): Pi_up = {0,0}, Pi_L = {1,0}
	expect_complex(weak_value(cheshire_pre(), cheshire_post(), ProjectorProduct{{0, 0}, {1, 0}}), 1.0);
	expect_complex(weak_value(cheshire_pre(), cheshire_post(), ProjectorProduct{{0, 0}, {1, 1}}), -1.0);

	const auto zero = Ket(Shape{2}, {1.0, 0.0});
	expect_complex(weak_value(zero, zero, ProjectorProduct{{0, 0}}), 1.0);

	// (positron, electron): Pi_Lp = {0,0}, Pi_Re = {1,1}
	expect_complex(weak_value(hardy_pre(), hardy_post(), ProjectorProduct{{0, 0}, {1, 1}}), 0.0);
}

TEST(WeakValue, OrthogonalSelectionIsRejected)
{
	const auto zero = Ket(Shape{2}, {1.0, 0.0});
	const auto one = Ket(Shape{2}, {0.0, 1.0});
	try
	{
		weak_value(zero, one, ProjectorProduct{});
		FAIL();
	}
	catch(const Error& e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::OrthogonalSelection);
	}
	// The threshold is relative: a tiny but non-orthogonal pair is fine.
	const auto tiny = Ket(Shape{2}, {1e-8, 1e-8});
	expect_complex(weak_value(tiny, tiny.scaled(1e-6), ProjectorProduct{{0, 1}}), 0.5);
	EXPECT_THROW(weak_value(zero, Ket(Shape{2, 2}, {1.0, 0.0, 0.0, 0.0}), ProjectorProduct{}), Error);
}

TEST(WeakTensor, Examples)
{
	const auto hardy = weak_tensor(hardy_pre(), hardy_post());
	EXPECT_EQ(hardy.kind, TensorKind::weak);
	expect_complex(hardy.overlap, 1.0);
	const std::vector<Complex> hardy_expected{1.0, 0.0, -1.0, 1.0};
	const std::vector<Complex> cheshire_expected{1.0, -1.0, 0.0, 1.0};
	const auto cheshire = weak_tensor(cheshire_pre(), cheshire_post());
	for(std::size_t k = 0; k < 4; ++k)
	{
		expect_complex(hardy.components[k], hardy_expected[k]);
		expect_complex(cheshire.components[k], cheshire_expected[k]);
	}

	const auto shape = Shape::uniform(3, 3);
	std::vector<Complex> pre(27);
	std::vector<Complex> post(27);
	pre[0] = pre[13] = pre[26] = r3;
	post[0] = post[13] = r3;
	post[26] = -r3;
	const auto ghz = weak_tensor(Ket(shape, pre), Ket(shape, post));
	for(std::size_t k = 0; k < 27; ++k)
	{
		const Complex want = k == 0 || k == 13 ? 1.0 : k == 26 ? -1.0 : 0.0;
		expect_complex(ghz.components[k], want);
	}
}

TEST(ExpectationTensor, Examples)
{
	const double r2 = 1.0 / std::numbers::sqrt2;
	const auto bell = expectation_tensor(Ket(Shape{2, 2}, {0.0, r2, r2, 0.0}));
	EXPECT_EQ(bell.kind, TensorKind::expectation);
	expect_complex(bell.components[0], 0.0);
	expect_complex(bell.components[1], 0.5);
	expect_complex(bell.components[2], 0.5);
	expect_complex(bell.components[3], 0.0);

	std::vector<Complex> amps(8);
	amps[0] = amps[7] = 1.0; // normalised internally
	const auto ghz = expectation_tensor(Ket(Shape::uniform(3, 2), amps));
	expect_complex(ghz.components[0], 0.5);
	expect_complex(ghz.components[7], 0.5);

	const auto basis = expectation_tensor(Ket(Shape{2, 2}, {1.0, 0.0, 0.0, 0.0}));
	EXPECT_EQ(basis.components, (std::vector<Complex>{1.0, 0.0, 0.0, 0.0}));

	EXPECT_THROW(expectation_tensor(Ket::zero(Shape{2})), Error);
}

TEST(Marginalize, Examples)
{
	const auto hardy = weak_tensor(hardy_pre(), hardy_post());
	const auto electron = marginalize(hardy, 1);
	expect_complex(electron[0], 0.0); // Le
	expect_complex(electron[1], 1.0); // Re
	const auto positron = marginalize(hardy, 0);
	expect_complex(positron[0], 1.0); // Lp
	expect_complex(positron[1], 0.0); // Rp

	const auto cheshire = weak_tensor(cheshire_pre(), cheshire_post());
	const auto position = marginalize(cheshire, 1);
	expect_complex(position[0], 1.0);
	expect_complex(position[1], 0.0);

	const double r2 = 1.0 / std::numbers::sqrt2;
	const auto bell = expectation_tensor(Ket(Shape{2, 2}, {0.0, r2, r2, 0.0}));
	for(std::size_t axis = 0; axis < 2; ++axis)
	{
		const auto m = marginalize(bell, axis);
		expect_complex(m[0], 0.5);
		expect_complex(m[1], 0.5);
	}
	EXPECT_THROW(marginalize(bell, 2), Error);
}

TEST(TotalSum, Examples)
{
	expect_complex(total_sum(weak_tensor(hardy_pre(), hardy_post())), 1.0);
	std::mt19937_64 rng(1);
	expect_complex(total_sum(expectation_tensor(oracle::random_ket(Shape{3, 2}, rng))), 1.0);
}

TEST(WeakValueObservable, Examples)
{
	std::mt19937_64 rng(17);
	const Shape shape{2, 3};
	const auto pre = oracle::random_ket(shape, rng);
	const auto post = oracle::random_ket(shape, rng);
	expect_complex(weak_value_observable(pre, post, DenseOperator::identity(shape)), 1.0);

	const auto pi_up_l = oracle::to_dense_operator(
		Shape{2, 2}, oracle::projector_product_matrix(Shape{2, 2}, ProjectorProduct{{0, 0}, {1, 0}}));
	expect_complex(weak_value_observable(cheshire_pre(), cheshire_post(), pi_up_l), 1.0);

	const auto zero = Ket(Shape{2}, {1.0, 0.0});
	const auto sigma_z = oracle::to_dense_operator(Shape{2}, oracle::pauli_matrix(Pauli::Z));
	expect_complex(weak_value_observable(zero, zero, sigma_z), 1.0);

	EXPECT_THROW(weak_value_observable(zero, zero, DenseOperator::identity(Shape{3})), Error);
}

TEST(WeakTensorProperties, CompletenessAndMarginals)
{
	std::mt19937_64 rng(21);
	for(const auto& dims : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 3}, {3, 3}, {3, 3, 3}, {2, 3, 2}})
	{
		const Shape shape(dims);
		for(int trial = 0; trial < 100; ++trial)
		{
			const auto pre = oracle::random_ket(shape, rng);
			const auto post = oracle::random_ket(shape, rng);
			const auto t = weak_tensor(pre, post);
			expect_complex(total_sum(t), 1.0);
			for(std::size_t axis = 0; axis < shape.rank(); ++axis)
			{
				const auto m = marginalize(t, axis);
				for(std::size_t level = 0; level < shape.dim(axis); ++level)
				{
					expect_complex(m[level], weak_value(pre, post, ProjectorProduct{{axis, level}}));
				}
			}
		}
	}
}

TEST(WeakTensorProperties, RescalingInvariance)
{
	std::mt19937_64 rng(23);
	const Shape shape{3, 2};
	for(int trial = 0; trial < 50; ++trial)
	{
		const auto pre = oracle::random_ket(shape, rng);
		const auto post = oracle::random_ket(shape, rng);
		const auto base = weak_tensor(pre, post);
		const auto scaled = weak_tensor(pre.scaled({-2.5, 0.7}), post.scaled({0.0, 1e-3}));
		for(std::size_t k = 0; k < shape.total(); ++k)
		{
			expect_complex(scaled.components[k], base.components[k]);
		}
	}
}

TEST(WeakTensorProperties, EqualSelectionsGiveExpectations)
{
	std::mt19937_64 rng(29);
	const Shape shape{2, 3, 2};
	for(int trial = 0; trial < 50; ++trial)
	{
		const auto psi = oracle::random_ket(shape, rng);
		const auto weak = weak_tensor(psi, psi);
		const auto strong = expectation_tensor(psi);
		for(std::size_t k = 0; k < shape.total(); ++k)
		{
			expect_complex(weak.components[k], strong.components[k]);
			EXPECT_LT(std::abs(weak.components[k].imag()), tol);
		}
	}
}

TEST(WeakTensorProperties, MaskingMatchesDenseOracle)
{
	std::mt19937_64 rng(31);
	for(const auto& dims : std::vector<std::vector<std::size_t>>{{2, 2}, {3, 2}, {2, 2, 2}, {4, 4}, {2, 2, 2, 2, 2, 2}})
	{
		const Shape shape(dims);
		const auto products = oracle::all_projector_products(shape);
		for(int trial = 0; trial < 5; ++trial)
		{
			const auto pre = oracle::random_ket(shape, rng);
			const auto post = oracle::random_ket(shape, rng);
			for(const auto& p : products)
			{
				const auto dense = oracle::projector_product_matrix(shape, p);
				const auto via_mask = weak_value(pre, post, p);
				expect_complex(via_mask, oracle::weak_value(pre, post, dense));
				expect_complex(via_mask, weak_value_observable(pre, post, oracle::to_dense_operator(shape, dense)));
			}
		}
	}
}

TEST(WeakTensorProperties, MarginalsDoNotDetermineTheTensor)
{
	// Two different 2x2 tensors with identical marginals: the Hardy tensor
	// and the same tensor with +-1 moved around a 2x2 cycle.
	const auto hardy = weak_tensor(hardy_pre(), hardy_post());
	WeakValueTensor other = hardy;
	const std::vector<Complex> shift{1.0, -1.0, -1.0, 1.0};
	for(std::size_t k = 0; k < 4; ++k)
	{
		other.components[k] += shift[k];
	}
	EXPECT_NE(other.components, hardy.components);
	for(std::size_t axis = 0; axis < 2; ++axis)
	{
		const auto a = marginalize(hardy, axis);
		const auto b = marginalize(other, axis);
		for(std::size_t i = 0; i < 2; ++i)
		{
			expect_complex(a[i], b[i]);
		}
	}
}

TEST(PermuteAxes, TransposeAndErrors)
{
	const auto hardy = weak_tensor(hardy_pre(), hardy_post());
	const std::vector<std::size_t> swap{1, 0};
	const auto t = permute_axes(hardy, swap);
	EXPECT_EQ(t.components, (std::vector<Complex>{hardy.components[0], hardy.components[2], hardy.components[1],
	                                              hardy.components[3]}));
	const std::vector<std::size_t> bad{0, 0};
	EXPECT_THROW(permute_axes(hardy, bad), Error);

	std::mt19937_64 rng(37);
	const Shape shape{2, 3, 4};
	const auto r = weak_tensor(oracle::random_ket(shape, rng), oracle::random_ket(shape, rng));
	const std::vector<std::size_t> order{2, 0, 1};
	const auto p = permute_axes(r, order);
	EXPECT_EQ(p.shape, (Shape{4, 2, 3}));
	const std::vector<std::size_t> old_label{1, 2, 3};
	const std::vector<std::size_t> new_label{3, 1, 2};
	EXPECT_EQ(p.at(new_label), r.at(old_label));
}
