#include "weakvis/scheme_io.hpp"

#include "weakvis/render.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace weakvis
{

using nlohmann::json;

namespace
{

[[noreturn]] void schema(const std::string& field, const std::string& what)
{
	throw Error(ErrorKind::SchemaViolation, field + ": " + what);
}

json complex_to_json(const Complex& c)
{
	return json::array({c.real(), c.imag()});
}

json complex_list_to_json(std::span<const Complex> values)
{
	json out = json::array();
	for(const auto& c : values)
	{
		out.push_back(complex_to_json(c));
	}
	return out;
}

Complex complex_from_json(const json& j, const std::string& field)
{
	if(!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
	{
		schema(field, "expected [re, im]");
	}
	return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_list_from_json(const json& j, const std::string& field)
{
	if(!j.is_array())
	{
		schema(field, "expected an array of [re, im] pairs");
	}
	std::vector<Complex> out;
	out.reserve(j.size());
	for(const auto& e : j)
	{
		out.push_back(complex_from_json(e, field));
	}
	return out;
}

Shape shape_from_json(const json& j, const std::string& field)
{
	if(!j.is_array() || j.empty())
	{
		schema(field, "expected a non-empty array of dimensions");
	}
	std::vector<std::size_t> dims;
	for(const auto& d : j)
	{
		if(!d.is_number_unsigned() || d.get<std::size_t>() < 2)
		{
			schema(field, "dimensions must be integers >= 2");
		}
		dims.push_back(d.get<std::size_t>());
	}
	try
	{
		return Shape(std::move(dims));
	}
	catch(const Error& e)
	{
		schema(field, e.what());
	}
}

AxisLabels labels_from_json(const json& j, const Shape& shape, const std::string& field)
{
	if(!j.is_array() || j.size() != shape.rank())
	{
		schema(field, "expected one label list per axis");
	}
	AxisLabels labels;
	for(std::size_t a = 0; a < j.size(); ++a)
	{
		const auto& axis = j[a];
		if(!axis.is_array() || axis.size() != shape.dim(a))
		{
			schema(field, "axis " + std::to_string(a) + " needs " + std::to_string(shape.dim(a)) + " labels");
		}
		auto& out = labels.emplace_back();
		for(const auto& l : axis)
		{
			if(!l.is_string())
			{
				schema(field, "labels must be strings");
			}
			out.push_back(l.get<std::string>());
		}
	}
	return labels;
}

Ket state_from_json(const json& j, const Shape& shape, const std::string& field)
{
	if(!j.is_object() || !j.contains("amps"))
	{
		schema(field + ".amps", "missing");
	}
	auto amps = complex_list_from_json(j["amps"], field + ".amps");
	if(amps.size() != shape.total())
	{
		schema(field + ".amps", "expected " + std::to_string(shape.total()) + " amplitudes, got " +
		                            std::to_string(amps.size()));
	}
	return Ket(shape, std::move(amps));
}

std::string read_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if(!in)
	{
		throw Error(ErrorKind::IoError, "cannot open " + path.string());
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
	std::ofstream out(path, std::ios::binary);
	if(!out)
	{
		throw Error(ErrorKind::IoError, "cannot write " + path.string());
	}
	out << content;
	if(!out)
	{
		throw Error(ErrorKind::IoError, "write failed for " + path.string());
	}
}

std::string complex_text(const Complex& c)
{
	std::string out = format_cell(c.real());
	if(std::abs(c.imag()) > imaginary_warning_threshold)
	{
		char buf[64];
		std::snprintf(buf, sizeof buf, "%+.4fi", c.imag());
		out += buf;
	}
	return out;
}

} // namespace

SchemeDocument make_scheme(const Scenario& s)
{
	auto t = s.post ? weak_tensor(s.pre, *s.post) : expectation_tensor(s.pre);
	return make_scheme(s.name, std::move(t), s.labels);
}

SchemeDocument make_scheme(std::string name, WeakValueTensor t, AxisLabels labels)
{
	SchemeDocument doc;
	doc.scenario = std::move(name);
	doc.labels = labels.empty() ? default_labels(t.shape) : std::move(labels);
	for(std::size_t a = 0; a < t.shape.rank(); ++a)
	{
		doc.marginals.push_back(marginalize(t, a));
	}
	doc.total = total_sum(t);
	doc.tensor = std::move(t);
	return doc;
}

json to_json(const SchemeDocument& doc)
{
	json marginals = json::array();
	for(const auto& m : doc.marginals)
	{
		marginals.push_back(complex_list_to_json(m));
	}
	return json{
		{"scenario", doc.scenario},
		{"shape", doc.tensor.shape.dims()},
		{"labels", doc.labels},
		{"kind", std::string(to_string(doc.tensor.kind))},
		{"components", complex_list_to_json(doc.tensor.components)},
		{"overlap", complex_to_json(doc.tensor.overlap)},
		{"marginals", marginals},
		{"total", complex_to_json(doc.total)},
	};
}

SchemeDocument scheme_from_json(const json& j)
{
	if(!j.is_object())
	{
		schema("<root>", "expected an object");
	}
	for(const char* key : {"scenario", "shape", "labels", "kind", "components", "overlap", "marginals", "total"})
	{
		if(!j.contains(key))
		{
			schema(key, "missing");
		}
	}
	SchemeDocument doc;
	if(!j["scenario"].is_string())
	{
		schema("scenario", "expected a string");
	}
	doc.scenario = j["scenario"].get<std::string>();
	doc.tensor.shape = shape_from_json(j["shape"], "shape");
	doc.labels = labels_from_json(j["labels"], doc.tensor.shape, "labels");
	const auto kind = j["kind"].is_string() ? j["kind"].get<std::string>() : std::string{};
	if(kind == "weak")
	{
		doc.tensor.kind = TensorKind::weak;
	}
	else if(kind == "expectation")
	{
		doc.tensor.kind = TensorKind::expectation;
	}
	else
	{
		schema("kind", "expected \"weak\" or \"expectation\"");
	}
	doc.tensor.components = complex_list_from_json(j["components"], "components");
	if(doc.tensor.components.size() != doc.tensor.shape.total())
	{
		schema("components", "length does not match shape");
	}
	doc.tensor.overlap = complex_from_json(j["overlap"], "overlap");
	const auto& marginals = j["marginals"];
	if(!marginals.is_array() || marginals.size() != doc.tensor.shape.rank())
	{
		schema("marginals", "expected one list per axis");
	}
	for(std::size_t a = 0; a < marginals.size(); ++a)
	{
		auto m = complex_list_from_json(marginals[a], "marginals");
		if(m.size() != doc.tensor.shape.dim(a))
		{
			schema("marginals", "axis " + std::to_string(a) + " has the wrong length");
		}
		doc.marginals.push_back(std::move(m));
	}
	doc.total = complex_from_json(j["total"], "total");
	return doc;
}

SchemeFormat parse_format(std::string_view name)
{
	if(name == "json") return SchemeFormat::json;
	if(name == "text") return SchemeFormat::text;
	if(name == "svg") return SchemeFormat::svg;
	throw Error(ErrorKind::SchemaViolation, "format: expected json, text or svg");
}

std::string render_scheme_text(const SchemeDocument& doc)
{
	const auto& t = doc.tensor;
	std::ostringstream os;
	os << "scenario: " << doc.scenario << '\n';
	os << "shape: " << t.shape.to_string() << "  kind: " << to_string(t.kind) << '\n';
	if(t.kind == TensorKind::weak)
	{
		os << "overlap <post|pre>: " << complex_text(t.overlap) << '\n';
	}
	os << '\n';
	if(t.shape.rank() == 2)
	{
		os << render_grid(t, doc.labels);
	}
	else if(t.shape.rank() == 3)
	{
		os << render_cube(t, doc.labels);
	}
	else
	{
		for(std::size_t k = 0; k < t.components.size(); ++k)
		{
			const auto label = t.shape.label(k);
			os << '(';
			for(std::size_t a = 0; a < label.size(); ++a)
			{
				os << (a ? "," : "") << doc.labels[a][label[a]];
			}
			os << ")  " << complex_text(t.components[k]) << '\n';
		}
	}
	os << '\n';
	for(std::size_t a = 0; a < doc.marginals.size(); ++a)
	{
		os << "marginal axis " << a << ':';
		for(std::size_t i = 0; i < doc.marginals[a].size(); ++i)
		{
			os << "  " << doc.labels[a][i] << '=' << complex_text(doc.marginals[a][i]);
		}
		os << '\n';
	}
	os << "total: " << complex_text(doc.total) << '\n';
	return os.str();
}

std::string render_scheme(const SchemeDocument& doc, SchemeFormat format)
{
	switch(format)
	{
	case SchemeFormat::json: return to_json(doc).dump(2) + "\n";
	case SchemeFormat::text: return render_scheme_text(doc);
	case SchemeFormat::svg: return render_svg(doc.tensor, doc.labels, doc.scenario);
	}
	return {};
}

void write_scheme(const SchemeDocument& doc, const std::filesystem::path& path, SchemeFormat format)
{
	write_file(path, render_scheme(doc, format));
}

json scenario_to_json(const Scenario& s)
{
	json j{
		{"name", s.name},
		{"shape", s.shape.dims()},
		{"pre", {{"amps", complex_list_to_json(s.pre.amps())}}},
		{"labels", s.labels},
	};
	if(s.post)
	{
		j["post"] = {{"amps", complex_list_to_json(s.post->amps())}};
	}
	return j;
}

Scenario scenario_from_json_text(std::string_view text)
{
	json j;
	try
	{
		j = json::parse(text);
	}
	catch(const json::parse_error& e)
	{
		// e.byte is 1-based and points just past the offending character.
		const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
		std::size_t line = 1;
		std::size_t column = 1;
		for(std::size_t i = 0; i < offset; ++i)
		{
			if(text[i] == '\n')
			{
				++line;
				column = 1;
			}
			else
			{
				++column;
			}
		}
		throw Error(ErrorKind::ParseError,
		            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
	}
	if(!j.is_object())
	{
		schema("<root>", "expected an object");
	}
	if(!j.contains("shape"))
	{
		schema("shape", "missing");
	}
	const Shape shape = shape_from_json(j["shape"], "shape");
	if(!j.contains("pre"))
	{
		schema("pre", "missing");
	}
	Ket pre = state_from_json(j["pre"], shape, "pre");
	std::optional<Ket> post;
	if(j.contains("post") && !j["post"].is_null())
	{
		post = state_from_json(j["post"], shape, "post");
	}
	AxisLabels labels;
	if(j.contains("labels"))
	{
		labels = labels_from_json(j["labels"], shape, "labels");
	}
	std::string name = "custom";
	if(j.contains("name"))
	{
		if(!j["name"].is_string())
		{
			schema("name", "expected a string");
		}
		name = j["name"].get<std::string>();
	}
	return custom(std::move(pre), std::move(post), std::move(labels), std::move(name));
}

Scenario read_scenario_file(const std::filesystem::path& path)
{
	return scenario_from_json_text(read_file(path));
}

void write_scenario_file(const Scenario& s, const std::filesystem::path& path)
{
	write_file(path, scenario_to_json(s).dump(2) + "\n");
}

} // namespace weakvis
