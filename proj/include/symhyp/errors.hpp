#pragma once

#include <stdexcept>
#include <string>

namespace symhyp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division by zero in a coefficient field.
struct DivideByZero : Error {
    explicit DivideByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// A formula denominator vanished at the supplied parameter point.
struct NonGenericParameters : Error {
    explicit NonGenericParameters(const std::string& msg = "non-generic parameters")
        : Error(msg) {}
};

// A degeneration limit does not exist (negative valuation at the limit point).
struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& msg = "pole at zero") : Error(msg) {}
};

// A coefficient expected to be real came out with nonzero imaginary part.
struct NonzeroImaginary : Error {
    explicit NonzeroImaginary(const std::string& msg = "nonzero imaginary part") : Error(msg) {}
};

// An exponent map failed the symmetry check when collecting to the m-basis.
struct NonSymmetric : Error {
    explicit NonSymmetric(const std::string& msg = "non-symmetric exponent map") : Error(msg) {}
};

struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& msg = "unsupported family") : Error(msg) {}
};

struct UnsupportedParameters : Error {
    explicit UnsupportedParameters(const std::string& msg = "unsupported parameters")
        : Error(msg) {}
};

// Hermite Pieri coefficients with |J| < r have no closed form; callers must
// go through the degeneration-based extraction instead.
struct HermiteGeneralCase : Error {
    explicit HermiteGeneralCase(const std::string& msg = "hermite coefficient without closed form")
        : Error(msg) {}
};

struct BadInput : Error {
    explicit BadInput(const std::string& msg) : Error(msg) {}
};

}  // namespace symhyp
