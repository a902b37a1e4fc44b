#include "weakvis/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace weakvis
{

namespace
{

// Code points, not bytes, so UTF-8 labels line up.
std::size_t display_width(const std::string& s)
{
	return static_cast<std::size_t>(
		std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t width)
{
	const auto w = display_width(s);
	return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width)
{
	const auto w = display_width(s);
	return w >= width ? s : s + std::string(width - w, ' ');
}

std::string fixed(double value, int precision)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.*f", precision, value);
	return buf;
}

std::string xml_escape(const std::string& s)
{
	std::string out;
	for(const char c : s)
	{
		switch(c)
		{
		case '&': out += "&amp;"; break;
		case '<': out += "&lt;"; break;
		case '>': out += "&gt;"; break;
		case '"': out += "&quot;"; break;
		default: out.push_back(c);
		}
	}
	return out;
}

AxisLabels labels_or_default(const WeakValueTensor& t, const AxisLabels& labels)
{
	if(labels.empty())
	{
		return default_labels(t.shape);
	}
	bool ok = labels.size() == t.shape.rank();
	for(std::size_t j = 0; ok && j < labels.size(); ++j)
	{
		ok = labels[j].size() == t.shape.dim(j);
	}
	if(!ok)
	{
		throw Error(ErrorKind::LabelMismatch, "labels do not match shape " + t.shape.to_string());
	}
	return labels;
}

std::string label_tuple(const AxisLabels& labels, const BasisLabel& label)
{
	std::string out = "(";
	for(std::size_t j = 0; j < label.size(); ++j)
	{
		out += (j ? "," : "") + labels[j][label[j]];
	}
	return out + ")";
}

void append_imaginary_warning(std::ostringstream& os, const WeakValueTensor& t, const AxisLabels& labels)
{
	std::string cells;
	for(std::size_t k = 0; k < t.components.size(); ++k)
	{
		if(std::abs(t.components[k].imag()) > imaginary_warning_threshold)
		{
			cells += " " + label_tuple(labels, t.shape.label(k)) + "=" +
			         format_cell(t.components[k].real()) + (t.components[k].imag() < 0 ? "-" : "+") +
			         fixed(std::abs(t.components[k].imag()), 4) + "i";
		}
	}
	if(!cells.empty())
	{
		os << "warning: imaginary parts above 1e-9 (only real parts shown):" << cells << '\n';
	}
}

// Rows x cols table of pre-formatted cells.
struct Table
{
	std::vector<std::string> row_labels;
	std::vector<std::string> col_labels;
	std::vector<std::vector<std::string>> cells;
};

void write_table(std::ostringstream& os, const Table& table, const std::vector<std::string>* row_band,
                 const std::vector<std::string>* col_band, const std::string* corner)
{
	std::size_t head = row_band || col_band ? 3 : 0; // "sum"
	for(const auto& r : table.row_labels)
	{
		head = std::max(head, display_width(r));
	}
	std::size_t width = 7;
	for(const auto& c : table.col_labels)
	{
		width = std::max(width, display_width(c));
	}
	for(const auto& row : table.cells)
	{
		for(const auto& c : row)
		{
			width = std::max(width, display_width(c));
		}
	}
	const std::string gap = "  ";
	std::string line = pad_right("", head);
	for(const auto& c : table.col_labels)
	{
		line += gap + pad_left(c, width);
	}
	if(row_band)
	{
		line += "  |" + gap + pad_left("sum", width);
	}
	os << line << '\n';
	for(std::size_t r = 0; r < table.cells.size(); ++r)
	{
		line = pad_right(table.row_labels[r], head);
		for(const auto& c : table.cells[r])
		{
			line += gap + pad_left(c, width);
		}
		if(row_band)
		{
			line += "  |" + gap + pad_left((*row_band)[r], width);
		}
		os << line << '\n';
	}
	if(col_band)
	{
		const std::size_t total_width =
			head + table.col_labels.size() * (gap.size() + width) + (row_band ? 3 + gap.size() + width : 0);
		os << std::string(total_width, '-') << '\n';
		line = pad_right("sum", head);
		for(const auto& c : *col_band)
		{
			line += gap + pad_left(c, width);
		}
		if(row_band && corner)
		{
			line += "  |" + gap + pad_left(*corner, width);
		}
		os << line << '\n';
	}
}

const char* fill_for(double value)
{
	if(std::abs(value) < 5e-5)
	{
		return "#f0f0f0";
	}
	return value > 0 ? "#9ecae1" : "#fc9272";
}

} // namespace

std::string format_cell(double value)
{
	if(std::abs(value) < 5e-5)
	{
		return "0.0000";
	}
	char buf[64];
	std::snprintf(buf, sizeof buf, "%+.4f", value);
	return buf;
}

std::string render_grid(const WeakValueTensor& t, const AxisLabels& labels_in)
{
	if(t.shape.rank() != 2)
	{
		throw Error(ErrorKind::NotTwoAxes, "grid rendering needs a rank-2 tensor, got " + t.shape.to_string());
	}
	const auto labels = labels_or_default(t, labels_in);
	const std::size_t rows = t.shape.dim(0);
	const std::size_t cols = t.shape.dim(1);

	Table table{labels[0], labels[1], {}};
	std::vector<std::string> row_sums;
	std::vector<std::string> col_sums;
	const auto row_marginal = marginalize(t, 0);
	const auto col_marginal = marginalize(t, 1);
	for(std::size_t r = 0; r < rows; ++r)
	{
		auto& row = table.cells.emplace_back();
		for(std::size_t c = 0; c < cols; ++c)
		{
			row.push_back(format_cell(t.components[r * cols + c].real()));
		}
		row_sums.push_back(format_cell(row_marginal[r].real()));
	}
	for(std::size_t c = 0; c < cols; ++c)
	{
		col_sums.push_back(format_cell(col_marginal[c].real()));
	}
	const auto corner = format_cell(total_sum(t).real());

	std::ostringstream os;
	write_table(os, table, &row_sums, &col_sums, &corner);
	append_imaginary_warning(os, t, labels);
	return os.str();
}

std::string render_cube(const WeakValueTensor& t, const AxisLabels& labels_in)
{
	if(t.shape.rank() != 3)
	{
		throw Error(ErrorKind::NotThreeAxes, "cube rendering needs a rank-3 tensor, got " + t.shape.to_string());
	}
	const auto labels = labels_or_default(t, labels_in);
	const std::size_t d0 = t.shape.dim(0);
	const std::size_t d1 = t.shape.dim(1);
	const std::size_t d2 = t.shape.dim(2);

	std::ostringstream os;
	for(std::size_t i = 0; i < d0; ++i)
	{
		if(i)
		{
			os << '\n';
		}
		os << "axis 0 = " << labels[0][i] << '\n';
		Table table{labels[1], labels[2], {}};
		for(std::size_t j = 0; j < d1; ++j)
		{
			auto& row = table.cells.emplace_back();
			for(std::size_t k = 0; k < d2; ++k)
			{
				const bool diagonal = i == j && j == k;
				row.push_back((diagonal ? "*" : "") + format_cell(t.components[(i * d1 + j) * d2 + k].real()));
			}
		}
		write_table(os, table, nullptr, nullptr, nullptr);
	}
	os << "* marks diagonal cells (i,i,i)\n";
	append_imaginary_warning(os, t, labels);
	return os.str();
}

std::string render_svg(const WeakValueTensor& t, const AxisLabels& labels_in, const std::string& title)
{
	const std::size_t rank = t.shape.rank();
	if(rank != 2 && rank != 3)
	{
		throw Error(ErrorKind::UnsupportedRank, "SVG rendering supports rank 2 or 3, got " + t.shape.to_string());
	}
	const auto labels = labels_or_default(t, labels_in);

	constexpr int cell = 80;
	constexpr int margin_left = 90;
	constexpr int margin_top = 90;
	constexpr int slice_gap = 60;
	constexpr int margin_bottom = 50;

	const std::size_t slices = rank == 3 ? t.shape.dim(0) : 1;
	const std::size_t rows = t.shape.dim(rank - 2);
	const std::size_t cols = t.shape.dim(rank - 1);
	const int slice_width = static_cast<int>(cols) * cell;
	const int width = margin_left + static_cast<int>(slices) * slice_width +
	                  static_cast<int>(slices - 1) * slice_gap + 40;
	const int height = margin_top + static_cast<int>(rows) * cell + margin_bottom;

	bool complex_warning = false;
	for(const auto& c : t.components)
	{
		complex_warning = complex_warning || std::abs(c.imag()) > imaginary_warning_threshold;
	}

	std::ostringstream os;
	os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
	   << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
	os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
	os << "<g font-family=\"sans-serif\" text-anchor=\"middle\">\n";
	if(!title.empty())
	{
		os << "<text x=\"" << width / 2 << "\" y=\"28\" font-size=\"18\">" << xml_escape(title) << "</text>\n";
	}
	for(std::size_t s = 0; s < slices; ++s)
	{
		const int x0 = margin_left + static_cast<int>(s) * (slice_width + slice_gap);
		if(rank == 3)
		{
			os << "<text x=\"" << x0 + slice_width / 2 << "\" y=\"" << margin_top - 42
			   << "\" font-size=\"14\">axis 0 = " << xml_escape(labels[0][s]) << "</text>\n";
		}
		const auto& row_labels = labels[rank - 2];
		const auto& col_labels = labels[rank - 1];
		for(std::size_t c = 0; c < cols; ++c)
		{
			os << "<text x=\"" << x0 + static_cast<int>(c) * cell + cell / 2 << "\" y=\"" << margin_top - 12
			   << "\" font-size=\"14\">" << xml_escape(col_labels[c]) << "</text>\n";
		}
		for(std::size_t r = 0; r < rows; ++r)
		{
			const int y = margin_top + static_cast<int>(r) * cell;
			os << "<text x=\"" << x0 - 12 << "\" y=\"" << y + cell / 2 + 5
			   << "\" font-size=\"14\" text-anchor=\"end\">" << xml_escape(row_labels[r]) << "</text>\n";
			for(std::size_t c = 0; c < cols; ++c)
			{
				const std::size_t flat = (s * rows + r) * cols + c;
				const double value = t.components[flat].real();
				const bool diagonal = rank == 3 && s == r && r == c;
				const int x = x0 + static_cast<int>(c) * cell;
				os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
				   << "\" fill=\"" << fill_for(value) << "\" stroke=\"#333333\" stroke-width=\""
				   << (diagonal ? 3 : 1) << "\"/>\n";
				os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5 << "\" font-size=\"15\">"
				   << format_cell(value) << "</text>\n";
			}
		}
	}
	const int footer_y = margin_top + static_cast<int>(rows) * cell + 30;
	os << "<text x=\"" << margin_left << "\" y=\"" << footer_y
	   << "\" font-size=\"13\" text-anchor=\"start\">total " << format_cell(total_sum(t).real()) << " ("
	   << to_string(t.kind) << ")" << (complex_warning ? "; warning: complex components, real parts shown" : "")
	   << "</text>\n";
	os << "</g>\n</svg>\n";
	return os.str();
}

} // namespace weakvis
