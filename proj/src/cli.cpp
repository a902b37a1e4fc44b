#include "weakvis/cli.hpp"

#include "weakvis/dynamics.hpp"
#include "weakvis/realization.hpp"
#include "weakvis/scheme_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace weakvis
{

namespace
{

const std::vector<std::pair<std::string, std::string>> scenario_descriptions{
	{"bell-psi-plus", "(|01> + |10>)/sqrt2, expectation scheme"},
	{"bell-psi-minus", "(|01> - |10>)/sqrt2, expectation scheme"},
	{"bell-phi-plus", "(|00> + |11>)/sqrt2, expectation scheme"},
	{"bell-phi-minus", "(|00> - |11>)/sqrt2, expectation scheme"},
	{"ghz", "(|0..0> + |l-1..l-1>)/sqrt2, expectation scheme (--parties, --levels)"},
	{"cheshire", "quantum Cheshire cat, rows spin (up,down), columns position (L,R)"},
	{"hardy", "Hardy's paradox, rows positron (Lp,Rp), columns electron (Le,Re)"},
	{"hardy-overlap", "Hardy's paradox with overlap (O) / no-overlap (NO) labels"},
	{"hardy-gamma", "Hardy family with relative phase gamma on |Lp Re> (--gamma)"},
	{"ghz3-selected", "3-qutrit GHZ pre/post selection with a sign flip on |222>"},
};

std::string fmt(const char* pattern, double value)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, pattern, value);
	return buf;
}

std::string amplitude_text(const Complex& c)
{
	return fmt("%+.6f", c.real()) + fmt("%+.6f", c.imag()) + "i";
}

std::string ket_label(const BasisLabel& label, const Shape& shape)
{
	const bool compact = std::all_of(shape.dims().begin(), shape.dims().end(), [](auto d) { return d <= 10; });
	std::string out = "|";
	for(std::size_t j = 0; j < label.size(); ++j)
	{
		if(!compact && j)
		{
			out += ',';
		}
		out += std::to_string(label[j]);
	}
	return out + ">";
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out)
{
	if(out_path.empty())
	{
		out << content;
		return;
	}
	std::ofstream file(out_path, std::ios::binary);
	if(!file || !(file << content))
	{
		throw Error(ErrorKind::IoError, "cannot write " + out_path);
	}
}

int run_evolve(const std::string& family_name, const std::string& setup_name, const ProductParams& params,
               double t, bool compare, std::ostream& out)
{
	const bool exact = family_name == "exact";
	const auto family = parse_family(exact ? setup_name : family_name);
	const auto setup = reference_setup(family, params);
	const Ket exact_state = evolve(setup.initial, setup.hamiltonian, t);
	const Ket product_state = closed_product_form(family, params, t);
	const Ket& shown = exact ? exact_state : product_state;
	const Ket reference = exact ? setup.initial : closed_product_form(family, params, 0.0);

	if(exact)
	{
		out << "family: exact (setup " << to_string(family) << ", diagonal evolution)\n";
	}
	else
	{
		out << "family: " << family_name << " (product form)\n";
	}
	out << "time: " << fmt("%.6f", t) << '\n';
	out << "params:";
	if(params.eps) out << " eps=" << fmt("%g", *params.eps);
	if(params.eps2) out << " eps2=" << fmt("%g", *params.eps2);
	if(params.phi) out << " phi=" << fmt("%g", *params.phi);
	out << "\n\namplitudes (nonzero):\n";
	for(std::size_t k = 0; k < shown.size(); ++k)
	{
		if(std::abs(shown[k]) > 1e-12)
		{
			out << "  " << ket_label(shown.shape().label(k), shown.shape()) << "  " << amplitude_text(shown[k])
			    << '\n';
		}
	}
	out << "\nphase report (relative to t = 0):\n";
	for(const auto& entry : phase_report(shown, reference))
	{
		out << "  " << ket_label(entry.label, shown.shape()) << "  " << fmt("%+.6f", entry.phase) << '\n';
	}
	if(compare)
	{
		const auto report = compare_states(exact_state, product_state);
		out << "\ncompare (exact evolution vs " << to_string(family) << " product form):\n";
		out << "  fidelity: " << fmt("%.12f", report.fidelity) << '\n';
		out << "  max_component_diff: " << fmt("%.12f", report.max_component_diff) << '\n';
		out << "  discrepancy: " << (report.fidelity < 1.0 - 1e-10 ? "yes" : "no") << '\n';
	}
	return exit_ok;
}

int run_realize(std::size_t levels, std::size_t axes, std::ostream& out)
{
	const auto shape = Shape::uniform(axes, levels);
	out << "cells of a " << axes << "-axis grid with " << levels << " levels per axis (" << shape.total()
	    << " cells):\n";
	for(std::size_t cell = 0; cell < shape.total(); ++cell)
	{
		const auto label = cell_to_basis({levels, axes, cell});
		out << "  cell " << cell << " -> " << ket_label(label, shape) << '\n';
	}
	out << "diagonal cells:";
	for(const auto& label : diagonal_cells(shape))
	{
		out << ' ' << ket_label(label, shape) << "(cell " << basis_to_cell(label, levels, axes) << ')';
	}
	out << '\n';
	return exit_ok;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Weak-value tensors of projector products for pre- and post-selected qudit systems", "weakvis"};
	app.require_subcommand(1);

	auto* scenario_cmd = app.add_subcommand("scenario", "Scenario catalog");
	scenario_cmd->require_subcommand(1);
	auto* list_cmd = scenario_cmd->add_subcommand("list", "List built-in scenarios");

	const std::vector<std::string> formats{"text", "json", "svg"};

	std::string run_name;
	std::optional<double> gamma;
	std::size_t parties = 3;
	std::size_t levels = 2;
	std::string format = "text";
	std::string out_path;
	auto* run_cmd = app.add_subcommand("run", "Compute and render a built-in scenario");
	run_cmd->add_option("name", run_name, "Scenario name (see `scenario list`)")->required();
	run_cmd->add_option("--gamma", gamma, "Relative phase for hardy-gamma");
	run_cmd->add_option("--parties", parties, "Parties for ghz")->check(CLI::PositiveNumber);
	run_cmd->add_option("--levels", levels, "Levels per party for ghz")->check(CLI::PositiveNumber);
	run_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
	run_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

	std::string pre_path;
	std::string post_path;
	auto* tensor_cmd = app.add_subcommand("tensor", "Compute and render a tensor for states read from files");
	tensor_cmd->add_option("--pre", pre_path, "Scenario file with the pre-selected state")->required();
	tensor_cmd->add_option("--post", post_path, "Scenario file whose \"pre\" state is the post-selection");
	tensor_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
	tensor_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

	std::string family;
	std::string setup = "psit1";
	ProductParams params;
	double time = 0.0;
	bool compare = false;
	auto* evolve_cmd = app.add_subcommand("evolve", "Multiwise-interaction dynamics");
	evolve_cmd->add_option("--family", family)
		->required()
		->check(CLI::IsMember({"psit1", "E111", "Hamm2", "GHZ2", "PsiGHZ11", "exact"}));
	evolve_cmd->add_option("--setup", setup, "System evolved exactly when --family exact")
		->check(CLI::IsMember({"psit1", "E111", "Hamm2", "GHZ2", "PsiGHZ11"}));
	evolve_cmd->add_option("--eps", params.eps, "Coupling epsilon (epsilon_1 for Hamm2)");
	evolve_cmd->add_option("--eps2", params.eps2, "Coupling epsilon_2 (Hamm2)");
	evolve_cmd->add_option("--phi", params.phi, "GHZ coupling phi");
	evolve_cmd->add_option("--time", time)->required();
	evolve_cmd->add_flag("--compare", compare, "Report exact-vs-product-form fidelity");

	std::size_t realize_levels = 2;
	std::size_t realize_axes = 1;
	auto* realize_cmd = app.add_subcommand("realize", "Cell <-> basis table of a hypercube realization");
	realize_cmd->add_option("--levels", realize_levels)->required();
	realize_cmd->add_option("--axes", realize_axes)->required();

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(std::move(reversed));
	}
	catch(const CLI::ParseError& e)
	{
		const int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try
	{
		if(list_cmd->parsed())
		{
			for(const auto& [name, description] : scenario_descriptions)
			{
				out << name << std::string(name.size() < 16 ? 16 - name.size() : 1, ' ') << description << '\n';
			}
			return exit_ok;
		}
		if(run_cmd->parsed())
		{
			const auto s = scenario_by_name(run_name, {gamma, parties, levels});
			emit(render_scheme(make_scheme(s), parse_format(format)), out_path, out);
			return exit_ok;
		}
		if(tensor_cmd->parsed())
		{
			auto s = read_scenario_file(pre_path);
			if(!post_path.empty())
			{
				auto post_file = read_scenario_file(post_path);
				s = custom(s.pre, post_file.pre, s.labels, s.name);
			}
			emit(render_scheme(make_scheme(s), parse_format(format)), out_path, out);
			return exit_ok;
		}
		if(evolve_cmd->parsed())
		{
			return run_evolve(family, setup, params, time, compare, out);
		}
		if(realize_cmd->parsed())
		{
			return run_realize(realize_levels, realize_axes, out);
		}
	}
	catch(const Error& e)
	{
		err << "error: " << e.what() << '\n';
		switch(e.kind())
		{
		case ErrorKind::MissingParam:
		case ErrorKind::UnknownScenario:
		case ErrorKind::UnknownFamily: return exit_usage;
		default: return exit_domain_error;
		}
	}
	err << app.help();
	return exit_usage;
}

} // namespace weakvis
