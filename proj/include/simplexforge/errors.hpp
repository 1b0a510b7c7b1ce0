#pragma once

#include <stdexcept>
#include <string>

namespace simplexforge {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NonFiniteInput : Error {
    explicit NonFiniteInput(const std::string& what) : Error(what) {}
};

struct InvalidProfile : Error {
    explicit InvalidProfile(const std::string& what) : Error(what) {}
};

/// A step of the inductive construction found its hypothesis violated at
/// runtime (e.g. the reflected apex lands inside the body instead of outside).
struct PreconditionViolated : Error {
    int level;
    double margin;
    PreconditionViolated(int level_, double margin_, const std::string& what)
        : Error(what), level(level_), margin(margin_) {}
};

struct IterationCapExceeded : Error {
    explicit IterationCapExceeded(const std::string& what) : Error(what) {}
};

/// A continuity sweep that must cross the boundary failed to find a crossing.
struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string& what) : Error(what) {}
};

/// The cone-step sweep never reached a unit-diameter section dilatation.
struct ConeStepError : Error {
    explicit ConeStepError(const std::string& what) : Error(what) {}
};

struct SpecParseError : Error {
    std::size_t position;
    SpecParseError(std::size_t position_, const std::string& what)
        : Error(what), position(position_) {}
};

struct ExportError : Error {
    explicit ExportError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace simplexforge
