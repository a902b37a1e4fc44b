#include "weakvis/scenarios.hpp"

#include "weakvis/weakvalues.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace weakvis;

namespace
{

constexpr double tol = 1e-10;
const double r2 = 1.0 / std::numbers::sqrt2;

void expect_components(const WeakValueTensor& t, const std::vector<Complex>& want)
{
	ASSERT_EQ(t.components.size(), want.size());
	for(std::size_t k = 0; k < want.size(); ++k)
	{
		EXPECT_LT(std::abs(t.components[k] - want[k]), tol) << "component " << k << ": " << t.components[k];
	}
}

ErrorKind kind_of(auto&& fn)
{
	try
	{
		fn();
	}
	catch(const Error& e)
	{
		return e.kind();
	}
	ADD_FAILURE() << "no error raised";
	return ErrorKind::IoError;
}

} // namespace

TEST(Bell, States)
{
	EXPECT_EQ(bell(BellKind::psi_plus).pre, Ket(Shape{2, 2}, {0.0, r2, r2, 0.0}));
	EXPECT_EQ(bell(BellKind::psi_minus).pre, Ket(Shape{2, 2}, {0.0, r2, -r2, 0.0}));
	EXPECT_EQ(bell(BellKind::phi_plus).pre, Ket(Shape{2, 2}, {r2, 0.0, 0.0, r2}));
	EXPECT_EQ(bell(BellKind::phi_minus).pre, Ket(Shape{2, 2}, {r2, 0.0, 0.0, -r2}));
	EXPECT_FALSE(bell(BellKind::phi_minus).has_post());
	expect_components(expectation_tensor(bell(BellKind::psi_minus).pre), {0.0, 0.5, 0.5, 0.0});
}

TEST(Ghz, Forms)
{
	std::vector<Complex> qubits(8);
	qubits[0] = qubits[7] = r2;
	EXPECT_EQ(ghz(3, 2).pre, Ket(Shape::uniform(3, 2), qubits));

	std::vector<Complex> qutrits(27);
	qutrits[0] = qutrits[26] = r2;
	EXPECT_EQ(ghz(3, 3).pre, Ket(Shape::uniform(3, 3), qutrits));

	EXPECT_EQ(ghz(2, 2).pre, bell(BellKind::phi_plus).pre);

	const auto diag = ghz(3, 3, true);
	const double r3 = 1.0 / std::sqrt(3.0);
	EXPECT_NEAR(diag.pre[0].real(), r3, 1e-15);
	EXPECT_NEAR(diag.pre[13].real(), r3, 1e-15);
	EXPECT_NEAR(diag.pre[26].real(), r3, 1e-15);
	EXPECT_NEAR(norm(diag.pre), 1.0, 1e-15);

	EXPECT_EQ(kind_of([] { ghz(1, 2); }), ErrorKind::InvalidCount);
	EXPECT_EQ(kind_of([] { ghz(3, 1); }), ErrorKind::InvalidCount);
}

TEST(Cheshire, TensorMarginalsOverlap)
{
	const auto s = cheshire();
	EXPECT_EQ(s.labels, (AxisLabels{{"up", "down"}, {"L", "R"}}));
	const auto t = weak_tensor(s.pre, *s.post);
	expect_components(t, {1.0, -1.0, 0.0, 1.0});
	const auto position = marginalize(t, 1);
	const auto spin = marginalize(t, 0);
	EXPECT_LT(std::abs(position[0] - 1.0), tol);
	EXPECT_LT(std::abs(spin[1] - 1.0), tol);
	EXPECT_LT(std::abs(t.overlap - 1.0 / 3.0), tol);
}

TEST(Hardy, TensorMarginalsOverlap)
{
	const auto s = hardy();
	const auto t = weak_tensor(s.pre, *s.post);
	expect_components(t, {1.0, 0.0, -1.0, 1.0});
	const auto positron = marginalize(t, 0);
	const auto electron = marginalize(t, 1);
	EXPECT_LT(std::abs(positron[0] - 1.0), tol);
	EXPECT_LT(std::abs(positron[1]), tol);
	EXPECT_LT(std::abs(electron[0]), tol);
	EXPECT_LT(std::abs(electron[1] - 1.0), tol);
	EXPECT_EQ(t.overlap, Complex(1.0));
	// Kept unnormalised.
	EXPECT_NEAR(norm(s.pre), std::sqrt(3.0), 1e-15);
	EXPECT_NEAR(norm(*s.post), 2.0, 1e-15);
}

TEST(HardyOverlapLabels, RelabelsOnly)
{
	const auto s = hardy_overlap_labels(hardy());
	EXPECT_EQ(s.labels, (AxisLabels{{"O", "NO"}, {"NO", "O"}}));
	EXPECT_EQ(hardy_overlap_labels(s).labels, s.labels);
	EXPECT_EQ(s.pre, hardy().pre);
	EXPECT_EQ(*s.post, *hardy().post);

	// <N_{NO,O}> = +1, <N_{NO,NO}> = -1, <N_{O,O}> = 0, <N_{O,NO}> = +1,
	// looked up by label name (positron first, electron second).
	const auto t = weak_tensor(s.pre, *s.post);
	auto value = [&](const std::string& positron, const std::string& electron) {
		const auto find = [](const std::vector<std::string>& v, const std::string& x) {
			return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
		};
		const std::vector<std::size_t> label{find(s.labels[0], positron), find(s.labels[1], electron)};
		return t.at(label);
	};
	EXPECT_LT(std::abs(value("NO", "O") - 1.0), tol);
	EXPECT_LT(std::abs(value("NO", "NO") + 1.0), tol);
	EXPECT_LT(std::abs(value("O", "O")), tol);
	EXPECT_LT(std::abs(value("O", "NO") - 1.0), tol);

	EXPECT_EQ(kind_of([] { hardy_overlap_labels(cheshire()); }), ErrorKind::WrongScenario);
}

TEST(HardyGamma, PiAndClosedForm)
{
	// gamma = pi: pre = |LL> - |LR> + |RL> + |RR>, overlap 1 + 1 - 1 + 1 = 2.
	const auto s = hardy_gamma(std::numbers::pi);
	const auto t = weak_tensor(s.pre, *s.post);
	EXPECT_LT(std::abs(t.overlap - 2.0), tol);
	expect_components(t, {0.5, 0.5, -0.5, 0.5});

	for(const double gamma : {0.3, 1.0, 2.0, 4.0, 6.0})
	{
		const auto g = hardy_gamma(gamma);
		const auto tg = weak_tensor(g.pre, *g.post);
		EXPECT_LT(std::abs(total_sum(tg) - 1.0), tol);
		const Complex closed = 1.0 / (1.0 - std::polar(1.0, gamma));
		EXPECT_LT(std::abs(tg.components[0] - closed), tol);
		// Dense oracle for the whole tensor.
		for(std::size_t k = 0; k < 4; ++k)
		{
			const auto p = ProjectorProduct::full(g.shape.label(k));
			EXPECT_LT(std::abs(tg.components[k] -
			                   oracle::weak_value(g.pre, *g.post, oracle::projector_product_matrix(g.shape, p))),
			          tol);
		}
	}
}

TEST(HardyGamma, DivergesTowardZero)
{
	EXPECT_EQ(kind_of([] { hardy_gamma(0.0); }), ErrorKind::OrthogonalSelection);
	EXPECT_EQ(kind_of([] { hardy_gamma(2.0 * std::numbers::pi); }), ErrorKind::OrthogonalSelection);

	const auto reference = weak_tensor(hardy().pre, *hardy().post);
	double previous = 0.0;
	for(const double gamma : {1e-1, 1e-2, 1e-3, 1e-4})
	{
		const auto g = hardy_gamma(gamma);
		const auto t = weak_tensor(g.pre, *g.post);
		const double magnitude = std::abs(t.components[0]);
		EXPECT_NEAR(magnitude * std::abs(1.0 - std::polar(1.0, gamma)), 1.0, 1e-9);
		EXPECT_GT(magnitude, previous);
		EXPECT_GT(std::abs(t.components[0] - reference.components[0]), 1.0);
		previous = magnitude;
	}
}

TEST(Ghz3Selected, Tensor)
{
	const auto s = ghz3_selected();
	const auto t = weak_tensor(s.pre, *s.post);
	std::vector<Complex> want(27);
	want[0] = want[13] = 1.0;
	want[26] = -1.0;
	expect_components(t, want);
	EXPECT_LT(std::abs(t.overlap - 1.0 / 3.0), tol);
}

TEST(Custom, Wrapping)
{
	const auto zero = Ket(Shape{2}, {1.0, 0.0});
	const auto s = custom(zero, zero);
	EXPECT_EQ(s.labels, (AxisLabels{{"0", "1"}}));
	expect_components(weak_tensor(s.pre, *s.post), {1.0, 0.0});

	EXPECT_EQ(kind_of([&] { custom(zero, zero, {{"a", "b", "c"}}); }), ErrorKind::LabelMismatch);
	EXPECT_EQ(kind_of([&] { custom(zero, zero, {{"a", "b"}, {"c", "d"}}); }), ErrorKind::LabelMismatch);
	EXPECT_EQ(kind_of([&] { custom(zero, Ket(Shape{3}, {1.0, 0.0, 0.0})); }), ErrorKind::ShapeMismatch);

	std::mt19937_64 rng(41);
	for(int trial = 0; trial < 20; ++trial)
	{
		const auto c = custom(oracle::random_ket(Shape{3, 3}, rng), oracle::random_ket(Shape{3, 3}, rng));
		EXPECT_LT(std::abs(total_sum(weak_tensor(c.pre, *c.post)) - 1.0), tol);
	}
}

TEST(Catalog, EveryNameBuildsAndIsDeterministic)
{
	ScenarioOptions options;
	options.gamma = 0.25;
	for(const auto& name : scenario_names())
	{
		const auto a = scenario_by_name(name, options);
		const auto b = scenario_by_name(name, options);
		EXPECT_EQ(a.name, name);
		EXPECT_EQ(a.pre, b.pre);
		EXPECT_EQ(a.post.has_value(), b.post.has_value());
		if(a.post)
		{
			EXPECT_EQ(*a.post, *b.post);
			EXPECT_NO_THROW(checked_overlap(a.pre, *a.post));
		}
		ASSERT_EQ(a.labels.size(), a.shape.rank());
		for(std::size_t j = 0; j < a.shape.rank(); ++j)
		{
			EXPECT_EQ(a.labels[j].size(), a.shape.dim(j));
		}
	}
	EXPECT_EQ(kind_of([] { scenario_by_name("hardy-gamma"); }), ErrorKind::MissingParam);
	EXPECT_EQ(kind_of([] { scenario_by_name("nope"); }), ErrorKind::UnknownScenario);
}

TEST(Equivalence, CheshireIsHardyWithAxesSwapped)
{
	const auto c = weak_tensor(cheshire().pre, *cheshire().post);
	const auto h = weak_tensor(hardy().pre, *hardy().post);
	// Cheshire (spin, position) corresponds to Hardy (electron, positron).
	const std::vector<std::size_t> swap{1, 0};
	const auto h_swapped = permute_axes(h, swap);
	for(std::size_t k = 0; k < 4; ++k)
	{
		EXPECT_LT(std::abs(c.components[k] - h_swapped.components[k]), tol);
	}
	auto sorted_real = [](const WeakValueTensor& t) {
		std::vector<double> v;
		for(const auto& x : t.components)
		{
			v.push_back(std::round(x.real()));
		}
		std::sort(v.begin(), v.end());
		return v;
	};
	EXPECT_EQ(sorted_real(c), (std::vector<double>{-1.0, 0.0, 1.0, 1.0}));
	EXPECT_EQ(sorted_real(c), sorted_real(h));
}
