#pragma once

#include <cstdint>
#include <string>

#include "cablefloer/laurent.hpp"

namespace cablefloer {

/// An L-space knot, represented by its Alexander polynomial. The polynomial
/// determines everything computed here: the genus is its top exponent and the
/// chi stream (cached at construction) gives the h-function and HFK ranks.
struct LSpaceKnot {
    LaurentPoly alexander;  // integer exponents, symmetric, top coefficient +1
    int64_t genus = 0;
    ChiSeries chi;

    friend bool operator==(const LSpaceKnot& a, const LSpaceKnot& b) {
        return a.alexander == b.alexander;
    }
};

/// Checks the structural constraints on an Alexander polynomial (coefficients
/// +-1 alternating in sign, symmetric, Delta(1) = 1) and builds the knot.
/// The sign is normalized so the top coefficient is +1 before checking.
/// Throws invalid_polynomial_error naming the violated constraint.
LSpaceKnot validate(const LaurentPoly& delta);

LSpaceKnot unknot();
LSpaceKnot trefoil();

/// Torus knot T(p,q), gcd(p,q) = 1, p,q > 0; exact polynomial division of
/// (t^{pq/2}-t^{-pq/2})(t^{1/2}-t^{-1/2}) by (t^{p/2}-t^{-p/2})(t^{q/2}-t^{-q/2}).
LSpaceKnot torus_knot(int64_t p, int64_t q);

/// The (m,n) cable of K, m >= 1, gcd(m,n) = 1. For m = 1 this is K itself
/// (requires n >= 2g(K)-1); for m > 1 requires n > m(2g(K)-1) and n >= 1,
/// the exact range in which the cable is again an L-space knot.
LSpaceKnot cable_knot(const LSpaceKnot& K, int64_t m, int64_t n);

/// h-function at doubled grading v2 (must be even): sum of chi coefficients
/// strictly above v2.
int64_t h_knot(const LSpaceKnot& K, int64_t v2);

/// dim HFK(K, v) in {0,1}: equals h(v-1) - h(v) = chi_v.
int64_t hfl_rank(const LSpaceKnot& K, int64_t v2);

/// Same as h_knot / hfl_rank but on the plain (undoubled) integer lattice.
int64_t h_at(const LSpaceKnot& K, int64_t v);
int64_t rank_at(const LSpaceKnot& K, int64_t v);

/// Knot-spec grammar: "unknot" | "trefoil" | "torus(p,q)" |
/// "cable(<knot>,m,n)" | "poly:<laurent string>".
LSpaceKnot parse_knot_spec(const std::string& spec);

}  // namespace cablefloer
