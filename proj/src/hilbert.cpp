#include "weakvis/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weakvis
{

Shape::Shape(std::vector<std::size_t> dims)
	: dims_(std::move(dims))
{
	if(dims_.empty())
	{
		throw Error(ErrorKind::InvalidShape, "shape needs at least one subsystem");
	}
	total_ = 1;
	for(const auto d : dims_)
	{
		if(d < 2)
		{
			throw Error(ErrorKind::InvalidShape, "local dimension must be >= 2");
		}
		if(d > max_dimension || total_ > max_dimension / d)
		{
			throw Error(ErrorKind::DimensionOverflow,
			            "total dimension exceeds " + std::to_string(max_dimension));
		}
		total_ *= d;
	}
	strides_.assign(dims_.size(), 1);
	for(std::size_t j = dims_.size() - 1; j > 0; --j)
	{
		strides_[j - 1] = strides_[j] * dims_[j];
	}
}

Shape Shape::uniform(std::size_t count, std::size_t levels)
{
	return Shape(std::vector<std::size_t>(count, levels));
}

bool Shape::is_qubit() const noexcept
{
	return std::all_of(dims_.begin(), dims_.end(), [](auto d) { return d == 2; });
}

bool Shape::is_uniform() const noexcept
{
	return std::adjacent_find(dims_.begin(), dims_.end(), std::not_equal_to<>{}) == dims_.end();
}

std::size_t Shape::flat_index(std::span<const std::size_t> label) const
{
	if(label.size() != dims_.size())
	{
		throw Error(ErrorKind::LengthMismatch, "label length does not match shape rank");
	}
	std::size_t flat = 0;
	for(std::size_t j = 0; j < dims_.size(); ++j)
	{
		if(label[j] >= dims_[j])
		{
			throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(label[j]) +
			                                            " on subsystem " + std::to_string(j));
		}
		flat += label[j] * strides_[j];
	}
	return flat;
}

BasisLabel Shape::label(std::size_t flat) const
{
	if(flat >= total_)
	{
		throw Error(ErrorKind::OutOfRange, "flat index " + std::to_string(flat));
	}
	BasisLabel out(dims_.size());
	for(std::size_t j = 0; j < dims_.size(); ++j)
	{
		out[j] = (flat / strides_[j]) % dims_[j];
	}
	return out;
}

std::size_t Shape::level_of(std::size_t flat, std::size_t subsystem) const
{
	return (flat / strides_[subsystem]) % dims_[subsystem];
}

Shape Shape::concat(const Shape& other) const
{
	auto dims = dims_;
	dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
	return Shape(std::move(dims));
}

std::string Shape::to_string() const
{
	std::ostringstream os;
	os << '[';
	for(std::size_t j = 0; j < dims_.size(); ++j)
	{
		os << (j ? "," : "") << dims_[j];
	}
	os << ']';
	return os.str();
}

Ket::Ket(Shape shape, std::vector<Complex> amps)
	: shape_(std::move(shape)), amps_(std::move(amps))
{
	if(amps_.size() != shape_.total())
	{
		throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(shape_.total()) +
		                                           " amplitudes, got " + std::to_string(amps_.size()));
	}
	for(const auto& a : amps_)
	{
		if(!std::isfinite(a.real()) || !std::isfinite(a.imag()))
		{
			throw Error(ErrorKind::NonFiniteAmplitude, "amplitude is NaN or infinite");
		}
	}
}

Ket Ket::basis(const Shape& shape, std::span<const std::size_t> label)
{
	std::vector<Complex> amps(shape.total());
	amps[shape.flat_index(label)] = 1.0;
	return Ket(shape, std::move(amps));
}

Ket Ket::zero(const Shape& shape)
{
	return Ket(shape, std::vector<Complex>(shape.total()));
}

Ket Ket::scaled(Complex factor) const
{
	auto amps = amps_;
	for(auto& a : amps)
	{
		a *= factor;
	}
	return Ket(shape_, std::move(amps));
}

Ket make_ket(const Shape& shape, std::vector<Complex> amps)
{
	return Ket(shape, std::move(amps));
}

Ket tensor_product(const Ket& a, const Ket& b)
{
	auto shape = a.shape().concat(b.shape());
	std::vector<Complex> amps;
	amps.reserve(shape.total());
	for(const auto& x : a.amps())
	{
		for(const auto& y : b.amps())
		{
			amps.push_back(x * y);
		}
	}
	return Ket(std::move(shape), std::move(amps));
}

Ket tensor_product(std::span<const Ket> factors)
{
	if(factors.empty())
	{
		throw Error(ErrorKind::InvalidShape, "tensor product of zero factors");
	}
	Ket out = factors.front();
	for(const auto& f : factors.subspan(1))
	{
		out = tensor_product(out, f);
	}
	return out;
}

Complex inner(const Ket& bra, const Ket& ket)
{
	if(!(bra.shape() == ket.shape()))
	{
		throw Error(ErrorKind::ShapeMismatch,
		            bra.shape().to_string() + " vs " + ket.shape().to_string());
	}
	Complex acc{0.0, 0.0};
	for(std::size_t k = 0; k < ket.size(); ++k)
	{
		acc += std::conj(bra[k]) * ket[k];
	}
	return acc;
}

double norm(const Ket& k)
{
	double acc = 0.0;
	for(const auto& a : k.amps())
	{
		acc += std::norm(a);
	}
	return std::sqrt(acc);
}

Ket normalize(const Ket& k)
{
	const double n = norm(k);
	if(!(n > 1e-12))
	{
		throw Error(ErrorKind::ZeroVector, "cannot normalise a (near-)zero vector");
	}
	return k.scaled(1.0 / n);
}

ProjectorProduct::ProjectorProduct(std::vector<Factor> factors)
	: factors_(std::move(factors))
{
	std::sort(factors_.begin(), factors_.end(),
	          [](const Factor& a, const Factor& b) { return a.subsystem < b.subsystem; });
	for(std::size_t i = 1; i < factors_.size(); ++i)
	{
		if(factors_[i].subsystem == factors_[i - 1].subsystem)
		{
			throw Error(ErrorKind::DuplicateSubsystem,
			            "subsystem " + std::to_string(factors_[i].subsystem) + " named twice");
		}
	}
}

ProjectorProduct ProjectorProduct::full(std::span<const std::size_t> label)
{
	std::vector<Factor> factors;
	factors.reserve(label.size());
	for(std::size_t j = 0; j < label.size(); ++j)
	{
		factors.push_back({j, label[j]});
	}
	return ProjectorProduct(std::move(factors));
}

void ProjectorProduct::validate(const Shape& shape) const
{
	for(const auto& f : factors_)
	{
		if(f.subsystem >= shape.rank())
		{
			throw Error(ErrorKind::SubsystemOutOfRange,
			            "subsystem " + std::to_string(f.subsystem) + " for shape " + shape.to_string());
		}
		if(f.level >= shape.dim(f.subsystem))
		{
			throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(f.level) +
			                                            " on subsystem " + std::to_string(f.subsystem));
		}
	}
}

bool ProjectorProduct::selects(const Shape& shape, std::size_t flat) const
{
	return std::all_of(factors_.begin(), factors_.end(), [&](const Factor& f) {
		return shape.level_of(flat, f.subsystem) == f.level;
	});
}

Ket apply_projector_product(const ProjectorProduct& p, const Ket& k)
{
	p.validate(k.shape());
	std::vector<Complex> amps(k.amps().begin(), k.amps().end());
	for(std::size_t i = 0; i < amps.size(); ++i)
	{
		if(!p.selects(k.shape(), i))
		{
			amps[i] = 0.0;
		}
	}
	return Ket(k.shape(), std::move(amps));
}

PauliString PauliString::parse(std::string_view text)
{
	std::vector<Pauli> letters;
	letters.reserve(text.size());
	for(const char c : text)
	{
		switch(c)
		{
		case 'I': letters.push_back(Pauli::I); break;
		case 'X': letters.push_back(Pauli::X); break;
		case 'Y': letters.push_back(Pauli::Y); break;
		case 'Z': letters.push_back(Pauli::Z); break;
		default:
			throw Error(ErrorKind::InvalidShape, std::string("not a Pauli letter: '") + c + "'");
		}
	}
	return PauliString(std::move(letters));
}

std::string PauliString::to_string() const
{
	std::string out;
	for(const auto p : letters_)
	{
		out.push_back("IXYZ"[static_cast<int>(p)]);
	}
	return out;
}

Ket apply_pauli_string(const PauliString& s, const Ket& k)
{
	const auto& shape = k.shape();
	if(!shape.is_qubit())
	{
		throw Error(ErrorKind::NonQubitShape, "Pauli strings need an all-qubit shape");
	}
	if(s.size() != shape.rank())
	{
		throw Error(ErrorKind::LengthMismatch, "Pauli string length " + std::to_string(s.size()) +
		                                           " for " + std::to_string(shape.rank()) + " qubits");
	}
	const std::size_t n = shape.rank();
	std::size_t flip = 0;
	for(std::size_t j = 0; j < n; ++j)
	{
		const auto p = s.letters()[j];
		if(p == Pauli::X || p == Pauli::Y)
		{
			flip |= std::size_t{1} << (n - 1 - j);
		}
	}
	// P|x> = phase(x) |x ^ flip>, with Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>.
	std::vector<Complex> out(k.size());
	for(std::size_t x = 0; x < k.size(); ++x)
	{
		Complex phase{1.0, 0.0};
		for(std::size_t j = 0; j < n; ++j)
		{
			const bool bit = (x >> (n - 1 - j)) & 1U;
			switch(s.letters()[j])
			{
			case Pauli::Y: phase *= bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0}; break;
			case Pauli::Z:
				if(bit)
				{
					phase = -phase;
				}
				break;
			default: break;
			}
		}
		out[x ^ flip] += phase * k[x];
	}
	return Ket(shape, std::move(out));
}

} // namespace weakvis
