#pragma once

// Dense state vectors over ordered qudit shapes.
//
// Index convention: subsystem 0 is the leftmost tensor factor and flat
// indices are big-endian, i.e. flat = sum_j level_j * prod_{k>j} dims_k.
// So for shape [2,2] the amplitudes are ordered |00>, |01>, |10>, |11>.

#include "weakvis/error.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weakvis
{

using Complex = std::complex<double>;
using BasisLabel = std::vector<std::size_t>;

class Shape
{
public:
	/// Largest total dimension accepted anywhere in the library.
	static constexpr std::size_t max_dimension = std::size_t{1} << 20;

	Shape() = default;
	explicit Shape(std::vector<std::size_t> dims);
	Shape(std::initializer_list<std::size_t> dims)
		: Shape(std::vector<std::size_t>(dims))
	{
	}

	/// All-qubit (or all-qudit) shape with `count` subsystems.
	static Shape uniform(std::size_t count, std::size_t levels);

	[[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
	[[nodiscard]] std::size_t rank() const noexcept { return dims_.size(); }
	[[nodiscard]] std::size_t dim(std::size_t subsystem) const { return dims_.at(subsystem); }
	[[nodiscard]] std::size_t total() const noexcept { return total_; }
	[[nodiscard]] bool is_qubit() const noexcept;
	[[nodiscard]] bool is_uniform() const noexcept;

	[[nodiscard]] std::size_t flat_index(std::span<const std::size_t> label) const;
	[[nodiscard]] BasisLabel label(std::size_t flat) const;
	/// Level of `subsystem` inside basis state `flat`, without materialising the label.
	[[nodiscard]] std::size_t level_of(std::size_t flat, std::size_t subsystem) const;

	/// Concatenation; throws DimensionOverflow past max_dimension.
	[[nodiscard]] Shape concat(const Shape& other) const;

	[[nodiscard]] std::string to_string() const;

	friend bool operator==(const Shape& a, const Shape& b) noexcept { return a.dims_ == b.dims_; }

private:
	std::vector<std::size_t> dims_;
	std::vector<std::size_t> strides_;
	std::size_t total_ = 0;
};

/// Amplitude vector; kets are never normalised implicitly.
class Ket
{
public:
	Ket() = default;
	/// Validates length and finiteness (LengthMismatch, NonFiniteAmplitude).
	Ket(Shape shape, std::vector<Complex> amps);

	static Ket basis(const Shape& shape, std::span<const std::size_t> label);
	static Ket zero(const Shape& shape);

	[[nodiscard]] const Shape& shape() const noexcept { return shape_; }
	[[nodiscard]] std::span<const Complex> amps() const noexcept { return amps_; }
	[[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
	[[nodiscard]] const Complex& operator[](std::size_t k) const { return amps_[k]; }
	[[nodiscard]] const Complex& at(std::span<const std::size_t> label) const
	{
		return amps_.at(shape_.flat_index(label));
	}

	[[nodiscard]] Ket scaled(Complex factor) const;

	friend bool operator==(const Ket& a, const Ket& b) noexcept
	{
		return a.shape_ == b.shape_ && a.amps_ == b.amps_;
	}

private:
	Shape shape_;
	std::vector<Complex> amps_;
};

/// Same as the constructor; named entry point matching the other builders.
Ket make_ket(const Shape& shape, std::vector<Complex> amps);

Ket tensor_product(const Ket& a, const Ket& b);
Ket tensor_product(std::span<const Ket> factors);

/// <bra|ket>, conjugate-linear in `bra`.
Complex inner(const Ket& bra, const Ket& ket);
double norm(const Ket& k);
/// Throws ZeroVector when norm <= 1e-12.
Ket normalize(const Ket& k);

/// Product of single-subsystem basis projectors, stored with strictly
/// increasing subsystem indices. The empty product is the identity.
class ProjectorProduct
{
public:
	struct Factor
	{
		std::size_t subsystem;
		std::size_t level;
		friend bool operator==(const Factor&, const Factor&) = default;
	};

	ProjectorProduct() = default;
	/// Sorts the factors; throws DuplicateSubsystem on repeated subsystems.
	explicit ProjectorProduct(std::vector<Factor> factors);
	ProjectorProduct(std::initializer_list<Factor> factors)
		: ProjectorProduct(std::vector<Factor>(factors))
	{
	}

	/// Full product fixing every subsystem to the given label.
	static ProjectorProduct full(std::span<const std::size_t> label);

	[[nodiscard]] const std::vector<Factor>& factors() const noexcept { return factors_; }
	[[nodiscard]] bool empty() const noexcept { return factors_.empty(); }

	/// Throws SubsystemOutOfRange / LevelOutOfRange if not applicable to `shape`.
	void validate(const Shape& shape) const;
	/// True if basis state `flat` lies in the range of the projector.
	[[nodiscard]] bool selects(const Shape& shape, std::size_t flat) const;

	friend bool operator==(const ProjectorProduct&, const ProjectorProduct&) = default;

private:
	std::vector<Factor> factors_;
};

Ket apply_projector_product(const ProjectorProduct& p, const Ket& k);

enum class Pauli : unsigned char
{
	I,
	X,
	Y,
	Z
};

class PauliString
{
public:
	PauliString() = default;
	explicit PauliString(std::vector<Pauli> letters)
		: letters_(std::move(letters))
	{
	}
	/// Parses e.g. "YYX"; throws InvalidShape on other characters.
	static PauliString parse(std::string_view text);

	[[nodiscard]] const std::vector<Pauli>& letters() const noexcept { return letters_; }
	[[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
	[[nodiscard]] std::string to_string() const;

private:
	std::vector<Pauli> letters_;
};

Ket apply_pauli_string(const PauliString& s, const Ket& k);

} // namespace weakvis
