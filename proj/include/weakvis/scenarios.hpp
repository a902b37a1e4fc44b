#pragma once

// Named pre/post-selected scenarios.
//
// Axis conventions (rows of a rendered grid are axis 0):
//   cheshire        axis 0 = spin (up, down), axis 1 = position (L, R)
//   hardy           axis 0 = positron (Lp, Rp), axis 1 = electron (Le, Re)
//   hardy-overlap   as hardy, levels renamed positron Lp->O, Rp->NO and
//                   electron Le->NO, Re->O
//   ghz, bell-*     qubit/qudit levels named "0", "1", ...

#include "weakvis/hilbert.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weakvis
{

using AxisLabels = std::vector<std::vector<std::string>>;

struct Scenario
{
	std::string name;
	Shape shape;
	Ket pre;
	std::optional<Ket> post;
	AxisLabels labels;
	std::map<std::string, double> params;

	[[nodiscard]] bool has_post() const noexcept { return post.has_value(); }
};

/// Levels named "0".."d-1" on every axis.
AxisLabels default_labels(const Shape& shape);

enum class BellKind
{
	psi_plus,
	psi_minus,
	phi_plus,
	phi_minus
};

Scenario bell(BellKind kind);

/// Two-term (|0..0> + |l-1..l-1>)/sqrt(2), or with `all_diagonal` the
/// l-term uniform superposition of |i..i>. Throws InvalidCount for
/// parties < 2 or levels < 2.
Scenario ghz(std::size_t parties, std::size_t levels, bool all_diagonal = false);

Scenario cheshire();
Scenario hardy();
/// Relabels a hardy scenario's levels with overlap/no-overlap names.
/// Throws WrongScenario for anything else.
Scenario hardy_overlap_labels(const Scenario& s);
/// Hardy post-selection with pre-state |LL> + e^{i gamma}|Lp Re> + |RL> + |RR>.
/// Throws OrthogonalSelection when gamma is a multiple of 2 pi.
Scenario hardy_gamma(double gamma);
Scenario ghz3_selected();

/// Throws ShapeMismatch / LabelMismatch. Empty `labels` means default labels.
Scenario custom(Ket pre, std::optional<Ket> post, AxisLabels labels = {},
                std::string name = "custom");

/// Names accepted by scenario_by_name, in listing order.
const std::vector<std::string>& scenario_names();

struct ScenarioOptions
{
	std::optional<double> gamma;
	std::size_t parties = 3;
	std::size_t levels = 2;
};

/// Builds a catalog scenario by CLI name; hardy-gamma requires options.gamma
/// (MissingParam otherwise). Unknown names throw UnknownScenario.
Scenario scenario_by_name(const std::string& name, const ScenarioOptions& options = {});

} // namespace weakvis
