#pragma once

#include <stdexcept>
#include <string>

namespace magwedge {

// Runtime failure of a numerical procedure (as opposed to a precondition
// violation, which is reported as std::invalid_argument).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A minimizer's coarse scan ended on the bracket boundary, or a sign-change
// bracket could not be established.
struct BracketError : NumericalError {
    explicit BracketError(const std::string& what) : NumericalError(what) {}
};

// The ODE-system matrix pencil turned out to have a non-real or non-positive
// spectrum; callers should fall back to the direct grid minimizer.
struct SpectrumError : NumericalError {
    explicit SpectrumError(const std::string& what) : NumericalError(what) {}
};

}  // namespace magwedge
