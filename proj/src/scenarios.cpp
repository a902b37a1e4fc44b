#include "weakvis/scenarios.hpp"

#include "weakvis/weakvalues.hpp"

#include <cmath>
#include <numbers>

namespace weakvis
{

namespace
{

const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
const double inv_sqrt3 = 1.0 / std::numbers::sqrt3;

void check_labels(const Shape& shape, const AxisLabels& labels)
{
	if(labels.size() != shape.rank())
	{
		throw Error(ErrorKind::LabelMismatch, "expected labels for " + std::to_string(shape.rank()) +
		                                          " axes, got " + std::to_string(labels.size()));
	}
	for(std::size_t j = 0; j < labels.size(); ++j)
	{
		if(labels[j].size() != shape.dim(j))
		{
			throw Error(ErrorKind::LabelMismatch,
			            "axis " + std::to_string(j) + " has " + std::to_string(shape.dim(j)) +
			                " levels but " + std::to_string(labels[j].size()) + " labels");
		}
	}
}

} // namespace

AxisLabels default_labels(const Shape& shape)
{
	AxisLabels labels(shape.rank());
	for(std::size_t j = 0; j < shape.rank(); ++j)
	{
		for(std::size_t i = 0; i < shape.dim(j); ++i)
		{
			labels[j].push_back(std::to_string(i));
		}
	}
	return labels;
}

Scenario bell(BellKind kind)
{
	const Shape shape{2, 2};
	std::vector<Complex> amps(4);
	std::string name;
	switch(kind)
	{
	case BellKind::psi_plus:
		amps = {0.0, inv_sqrt2, inv_sqrt2, 0.0};
		name = "bell-psi-plus";
		break;
	case BellKind::psi_minus:
		amps = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
		name = "bell-psi-minus";
		break;
	case BellKind::phi_plus:
		amps = {inv_sqrt2, 0.0, 0.0, inv_sqrt2};
		name = "bell-phi-plus";
		break;
	case BellKind::phi_minus:
		amps = {inv_sqrt2, 0.0, 0.0, -inv_sqrt2};
		name = "bell-phi-minus";
		break;
	}
	return Scenario{name, shape, Ket(shape, std::move(amps)), std::nullopt, default_labels(shape), {}};
}

Scenario ghz(std::size_t parties, std::size_t levels, bool all_diagonal)
{
	if(parties < 2 || levels < 2)
	{
		throw Error(ErrorKind::InvalidCount, "ghz needs at least 2 parties and 2 levels");
	}
	const auto shape = Shape::uniform(parties, levels);
	std::vector<Complex> amps(shape.total());
	// Flat index of |i..i> is i * (1 + d + d^2 + ...).
	std::size_t diagonal_step = 0;
	for(std::size_t j = 0, p = 1; j < parties; ++j, p *= levels)
	{
		diagonal_step += p;
	}
	if(all_diagonal)
	{
		const double a = 1.0 / std::sqrt(static_cast<double>(levels));
		for(std::size_t i = 0; i < levels; ++i)
		{
			amps[i * diagonal_step] = a;
		}
	}
	else
	{
		amps[0] = inv_sqrt2;
		amps[(levels - 1) * diagonal_step] = inv_sqrt2;
	}
	Scenario s{"ghz", shape, Ket(shape, std::move(amps)), std::nullopt, default_labels(shape), {}};
	s.params["parties"] = static_cast<double>(parties);
	s.params["levels"] = static_cast<double>(levels);
	return s;
}

Scenario cheshire()
{
	// (spin, position): |up L>, |up R>, |down L>, |down R>
	const Shape shape{2, 2};
	Ket pre(shape, {inv_sqrt3, inv_sqrt3, 0.0, inv_sqrt3});
	Ket post(shape, {inv_sqrt3, -inv_sqrt3, 0.0, inv_sqrt3});
	return Scenario{"cheshire", shape, std::move(pre), std::move(post), {{"up", "down"}, {"L", "R"}}, {}};
}

Scenario hardy()
{
	// (positron, electron): |Lp Le>, |Lp Re>, |Rp Le>, |Rp Re>, unnormalised
	const Shape shape{2, 2};
	Ket pre(shape, {1.0, 0.0, 1.0, 1.0});
	Ket post(shape, {1.0, -1.0, -1.0, 1.0});
	return Scenario{"hardy", shape, std::move(pre), std::move(post), {{"Lp", "Rp"}, {"Le", "Re"}}, {}};
}

Scenario hardy_overlap_labels(const Scenario& s)
{
	if(s.name != "hardy" && s.name != "hardy-overlap")
	{
		throw Error(ErrorKind::WrongScenario, "expected the hardy scenario, got '" + s.name + "'");
	}
	Scenario out = s;
	out.name = "hardy-overlap";
	out.labels = {{"O", "NO"}, {"NO", "O"}};
	return out;
}

Scenario hardy_gamma(double gamma)
{
	if(!std::isfinite(gamma))
	{
		throw Error(ErrorKind::NonFiniteAmplitude, "gamma must be finite");
	}
	Scenario s = hardy();
	s.name = "hardy-gamma";
	s.pre = Ket(s.shape, {1.0, std::polar(1.0, gamma), 1.0, 1.0});
	s.params["gamma"] = gamma;
	checked_overlap(s.pre, *s.post);
	return s;
}

Scenario ghz3_selected()
{
	const auto shape = Shape::uniform(3, 3);
	std::vector<Complex> pre(shape.total());
	std::vector<Complex> post(shape.total());
	// |000>, |111>, |222> sit at flat 0, 13, 26
	pre[0] = pre[13] = pre[26] = inv_sqrt3;
	post[0] = post[13] = inv_sqrt3;
	post[26] = -inv_sqrt3;
	return Scenario{"ghz3-selected", shape,          Ket(shape, std::move(pre)),
	                Ket(shape, std::move(post)), default_labels(shape), {}};
}

Scenario custom(Ket pre, std::optional<Ket> post, AxisLabels labels, std::string name)
{
	if(post && !(post->shape() == pre.shape()))
	{
		throw Error(ErrorKind::ShapeMismatch,
		            pre.shape().to_string() + " vs " + post->shape().to_string());
	}
	if(labels.empty())
	{
		labels = default_labels(pre.shape());
	}
	check_labels(pre.shape(), labels);
	Shape shape = pre.shape();
	return Scenario{std::move(name), std::move(shape), std::move(pre), std::move(post), std::move(labels), {}};
}

const std::vector<std::string>& scenario_names()
{
	static const std::vector<std::string> names{
		"bell-psi-plus", "bell-psi-minus", "bell-phi-plus", "bell-phi-minus", "ghz",
		"cheshire",      "hardy",          "hardy-overlap", "hardy-gamma",    "ghz3-selected",
	};
	return names;
}

Scenario scenario_by_name(const std::string& name, const ScenarioOptions& options)
{
	if(name == "bell-psi-plus") return bell(BellKind::psi_plus);
	if(name == "bell-psi-minus") return bell(BellKind::psi_minus);
	if(name == "bell-phi-plus") return bell(BellKind::phi_plus);
	if(name == "bell-phi-minus") return bell(BellKind::phi_minus);
	if(name == "ghz") return ghz(options.parties, options.levels);
	if(name == "cheshire") return cheshire();
	if(name == "hardy") return hardy();
	if(name == "hardy-overlap") return hardy_overlap_labels(hardy());
	if(name == "hardy-gamma")
	{
		if(!options.gamma)
		{
			throw Error(ErrorKind::MissingParam, "hardy-gamma needs a gamma value");
		}
		return hardy_gamma(*options.gamma);
	}
	if(name == "ghz3-selected") return ghz3_selected();
	throw Error(ErrorKind::UnknownScenario, "no scenario named '" + name + "'");
}

} // namespace weakvis
