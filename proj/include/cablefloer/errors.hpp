#pragma once

#include <stdexcept>
#include <string>

namespace cablefloer {

// Input polynomial fails one of the structural constraints; `constraint`
// names the first violated one ("asymmetric", "coefficient-magnitude",
// "non-alternating", "normalization", "non-integer-exponent").
struct invalid_polynomial_error : std::runtime_error {
    std::string constraint;
    invalid_polynomial_error(std::string c, const std::string& msg)
        : std::runtime_error(msg), constraint(std::move(c)) {}
};

// Operation not available for the link's regime (Boundary / NotLSpace /
// nonpositive linking number). CLI maps this to exit code 3.
struct unsupported_regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed CLI/knot-spec/grading input. CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cablefloer
