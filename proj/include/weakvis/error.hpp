#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weakvis
{

enum class ErrorKind
{
	LengthMismatch,
	NonFiniteAmplitude,
	DimensionOverflow,
	InvalidShape,
	ShapeMismatch,
	ZeroVector,
	SubsystemOutOfRange,
	DuplicateSubsystem,
	LevelOutOfRange,
	NonQubitShape,
	OrthogonalSelection,
	InvalidCount,
	WrongScenario,
	LabelMismatch,
	UnknownScenario,
	UnknownFamily,
	MissingParam,
	OutOfRange,
	NonUniformShape,
	NotTwoAxes,
	NotThreeAxes,
	UnsupportedRank,
	ParseError,
	SchemaViolation,
	IoError,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept
{
	switch(kind)
	{
	case ErrorKind::LengthMismatch: return "LengthMismatch";
	case ErrorKind::NonFiniteAmplitude: return "NonFiniteAmplitude";
	case ErrorKind::DimensionOverflow: return "DimensionOverflow";
	case ErrorKind::InvalidShape: return "InvalidShape";
	case ErrorKind::ShapeMismatch: return "ShapeMismatch";
	case ErrorKind::ZeroVector: return "ZeroVector";
	case ErrorKind::SubsystemOutOfRange: return "SubsystemOutOfRange";
	case ErrorKind::DuplicateSubsystem: return "DuplicateSubsystem";
	case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
	case ErrorKind::NonQubitShape: return "NonQubitShape";
	case ErrorKind::OrthogonalSelection: return "OrthogonalSelection";
	case ErrorKind::InvalidCount: return "InvalidCount";
	case ErrorKind::WrongScenario: return "WrongScenario";
	case ErrorKind::LabelMismatch: return "LabelMismatch";
	case ErrorKind::UnknownScenario: return "UnknownScenario";
	case ErrorKind::UnknownFamily: return "UnknownFamily";
	case ErrorKind::MissingParam: return "MissingParam";
	case ErrorKind::OutOfRange: return "OutOfRange";
	case ErrorKind::NonUniformShape: return "NonUniformShape";
	case ErrorKind::NotTwoAxes: return "NotTwoAxes";
	case ErrorKind::NotThreeAxes: return "NotThreeAxes";
	case ErrorKind::UnsupportedRank: return "UnsupportedRank";
	case ErrorKind::ParseError: return "ParseError";
	case ErrorKind::SchemaViolation: return "SchemaViolation";
	case ErrorKind::IoError: return "IoError";
	}
	return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above; the
/// CLI prints `name()` on stderr.
class Error : public std::runtime_error
{
public:
	Error(ErrorKind kind, const std::string& what)
		: std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_{kind}
	{
	}

	[[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
	[[nodiscard]] std::string_view name() const noexcept { return error_name(kind_); }

private:
	ErrorKind kind_;
};

} // namespace weakvis
