#include "weakvis/realization.hpp"

#include "weakvis/scenarios.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <set>

using namespace weakvis;

namespace
{

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

Ket qubits(std::size_t n, std::vector<std::pair<std::size_t, Complex>> entries)
{
	const auto shape = Shape::uniform(n, 2);
	std::vector<Complex> amps(shape.total());
	for(const auto& [k, a] : entries)
	{
		amps[k] = a;
	}
	return normalize(Ket(shape, std::move(amps)));
}

} // namespace

TEST(CellMaps, Example)
{
	EXPECT_EQ(cell_to_basis({2, 3, 5}), (BasisLabel{1, 0, 1}));
	EXPECT_EQ(cell_to_basis({3, 2, 7}), (BasisLabel{2, 1}));
	const std::vector<std::size_t> label{1, 0, 1};
	EXPECT_EQ(basis_to_cell(label, 2, 3), 5u);
}

TEST(CellMaps, ExhaustiveBijection)
{
	for(std::size_t d = 2; d <= 4; ++d)
	{
		for(std::size_t n = 1; n <= 5; ++n)
		{
			const auto shape = Shape::uniform(n, d);
			std::set<BasisLabel> seen;
			for(std::size_t cell = 0; cell < shape.total(); ++cell)
			{
				const auto label = cell_to_basis({d, n, cell});
				ASSERT_EQ(label.size(), n);
				EXPECT_EQ(basis_to_cell(label, d, n), cell);
				EXPECT_EQ(label, shape.label(cell));
				seen.insert(label);
			}
			EXPECT_EQ(seen.size(), shape.total());
		}
	}
}

TEST(CellMaps, Errors)
{
	EXPECT_EQ(kind_of([] { cell_to_basis({2, 3, 8}); }), ErrorKind::OutOfRange);
	EXPECT_EQ(kind_of([] { cell_to_basis({1, 3, 0}); }), ErrorKind::OutOfRange);
	EXPECT_EQ(kind_of([] { cell_to_basis({2, 0, 0}); }), ErrorKind::OutOfRange);
	const std::vector<std::size_t> bad_level{1, 2, 0};
	EXPECT_EQ(kind_of([&] { basis_to_cell(bad_level, 2, 3); }), ErrorKind::OutOfRange);
	const std::vector<std::size_t> short_label{1, 0};
	EXPECT_EQ(kind_of([&] { basis_to_cell(short_label, 2, 3); }), ErrorKind::OutOfRange);
}

TEST(DiagonalCells, Examples)
{
	EXPECT_EQ(diagonal_cells(Shape::uniform(3, 3)), (std::vector<BasisLabel>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
	EXPECT_EQ(diagonal_cells(Shape{2, 2}), (std::vector<BasisLabel>{{0, 0}, {1, 1}}));
	EXPECT_EQ(kind_of([] { diagonal_cells(Shape{2, 3}); }), ErrorKind::NonUniformShape);
}

TEST(DiagonalSupport, Examples)
{
	EXPECT_TRUE(is_diagonal_supported(ghz(3, 2).pre, 1e-12));
	EXPECT_TRUE(is_diagonal_supported(ghz(3, 3, true).pre, 1e-12));

	// (|000> + |001>)/sqrt 2 = |00> (x) |+>: one off-diagonal cell, and it factorises.
	const auto split = qubits(3, {{0, 1.0}, {1, 1.0}});
	EXPECT_FALSE(is_diagonal_supported(split, 1e-12));
	const auto plus = normalize(Ket(Shape{2}, {1.0, 1.0}));
	const auto product = tensor_product(tensor_product(Ket::basis(Shape{2}, std::vector<std::size_t>{0}),
	                                                   Ket::basis(Shape{2}, std::vector<std::size_t>{0})),
	                                    plus);
	for(std::size_t k = 0; k < 8; ++k)
	{
		EXPECT_LT(std::abs(split[k] - product[k]), 1e-15);
	}

	// Tolerance is on squared off-diagonal mass.
	const auto tiny = qubits(2, {{0, 1.0}, {1, 1e-4}});
	EXPECT_FALSE(is_diagonal_supported(tiny, 1e-9));
	EXPECT_TRUE(is_diagonal_supported(tiny, 1e-7));
}

TEST(DiagonalSupport, EveryTwoTermGhzForm)
{
	for(std::size_t d = 2; d <= 4; ++d)
	{
		for(std::size_t n = 2; n <= 5; ++n)
		{
			EXPECT_TRUE(is_diagonal_supported(ghz(n, d).pre, 1e-12)) << n << " x " << d;
		}
	}
}

TEST(Stabilizer, GhzSigns)
{
	const auto g = ghz(3, 2).pre;
	EXPECT_EQ(stabilizer_eigenvalue(g, PauliString::parse("XXX")), 1.0);
	EXPECT_EQ(stabilizer_eigenvalue(g, PauliString::parse("YYX")), -1.0);
	EXPECT_EQ(stabilizer_eigenvalue(g, PauliString::parse("YXY")), -1.0);
	EXPECT_EQ(stabilizer_eigenvalue(g, PauliString::parse("XYY")), -1.0);
	EXPECT_EQ(stabilizer_eigenvalue(g, PauliString::parse("ZZI")), 1.0);
	EXPECT_FALSE(stabilizer_eigenvalue(g, PauliString::parse("YXX")).has_value());

	const auto zz = Ket::basis(Shape{2, 2}, std::vector<std::size_t>{0, 0});
	EXPECT_FALSE(stabilizer_eigenvalue(zz, PauliString::parse("XX")).has_value());
	EXPECT_EQ(stabilizer_eigenvalue(zz, PauliString::parse("ZZ")), 1.0);

	EXPECT_EQ(kind_of([] { stabilizer_eigenvalue(ghz(3, 3).pre, PauliString::parse("XXX")); }),
	          ErrorKind::NonQubitShape);
}

TEST(Stabilizer, AgreesWithDenseOracle)
{
	const auto g = ghz(3, 2).pre;
	const oracle::Vector v = oracle::to_eigen(g);
	const char letters[] = {'I', 'X', 'Y', 'Z'};
	for(int code = 0; code < 64; ++code)
	{
		std::string text{letters[code / 16], letters[(code / 4) % 4], letters[code % 4]};
		const auto s = PauliString::parse(text);
		const oracle::Vector sv = oracle::pauli_string_matrix(s) * v;
		std::optional<double> want;
		for(const double lambda : {1.0, -1.0})
		{
			if((sv - lambda * v).norm() < 1e-12)
			{
				want = lambda;
			}
		}
		EXPECT_EQ(stabilizer_eigenvalue(g, s), want) << text;
	}
}
