#pragma once

#include <stdexcept>
#include <string>

namespace spindec {

// Every library error carries a stable name that the CLI prints on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Bad arguments: out-of-range indices, invalid chain sizes, a outside [0,1], ...
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

// Numerical failures. The CLI maps these to exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class DegenerateMode : public NumericError {
public:
    explicit DegenerateMode(const std::string& what) : NumericError("DegenerateMode", what) {}
};

class SingularField : public NumericError {
public:
    explicit SingularField(const std::string& what) : NumericError("SingularField", what) {}
};

class ZeroAlpha : public NumericError {
public:
    explicit ZeroAlpha(const std::string& what) : NumericError("ZeroAlpha", what) {}
};

class NumericalNegativity : public NumericError {
public:
    explicit NumericalNegativity(const std::string& what)
        : NumericError("NumericalNegativity", what) {}
};

class NotHermitian : public NumericError {
public:
    explicit NotHermitian(const std::string& what) : NumericError("NotHermitian", what) {}
};

class NoConvergence : public NumericError {
public:
    explicit NoConvergence(const std::string& what) : NumericError("NoConvergence", what) {}
};

class NotDensityMatrix : public NumericError {
public:
    explicit NotDensityMatrix(const std::string& what) : NumericError("NotDensityMatrix", what) {}
};

// A heuristic was asked for outside the sign configuration it was derived for.
class WrongRegime : public Error {
public:
    explicit WrongRegime(const std::string& what) : Error("WrongRegime", what) {}
};

} // namespace spindec
