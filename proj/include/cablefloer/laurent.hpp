#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cablefloer/errors.hpp"

namespace cablefloer {

/// Integer Laurent polynomial in one formal variable t. Exponents are stored
/// doubled so that the half-integer lattice Z + 1/2 is exact: the stored key
/// e represents the monomial t^{e/2}. No zero coefficients are kept.
struct LaurentPoly {
    std::map<int64_t, int64_t> coeffs;  // doubled exponent -> coefficient

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int64_t e2, int64_t c);

    bool is_zero() const { return coeffs.empty(); }
    int64_t coeff(int64_t e2) const;
    void add_term(int64_t e2, int64_t c);

    /// Largest doubled exponent with nonzero coefficient; requires nonzero.
    int64_t top_exponent2() const;
    int64_t bottom_exponent2() const;

    int64_t eval_at_one() const;
    bool is_symmetric() const;  // p(t) == p(1/t)
    bool has_integer_exponents() const;

    /// t -> t^m substitution (doubled exponents scale by m).
    LaurentPoly substitute_power(int64_t m) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// Exact quotient; throws invalid_polynomial_error if division leaves a
    /// remainder or the divisor is zero.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /// Compact text form, e.g. "t^3-t^2+t^-2" or "t^1/2-t^-1/2".
    std::string to_string(const std::string& var = "t") const;
    static LaurentPoly parse(const std::string& text);
};

/// The coefficient stream of Delta(t)/(1-t^{-1}) = Delta(t)*(1+t^{-1}+...).
/// The stream is eventually constant: coeff(e) == finite[e] for e >= tail_start
/// and coeff(e) == tail_value for e < tail_start. For a valid L-space knot
/// polynomial the tail value is 1 and every coefficient lies in {0,1}.
struct ChiSeries {
    std::map<int64_t, int64_t> finite;  // doubled exponent -> coefficient, e >= tail_start
    int64_t tail_start = 0;            // doubled
    int64_t tail_value = 1;

    int64_t coeff(int64_t e2) const;
    /// Sum of coefficients at exponents >= e2 (exact, tail handled symbolically
    /// as zero contribution only when tail_value == 0; requires the sum to be
    /// finite, i.e. e2 >= tail_start or tail_value == 0).
    int64_t sum_from(int64_t e2) const;
    int64_t max_exponent2() const;
};

/// Expands Delta(t)/(1-t^{-1}). Requires Delta symmetric with Delta(1) = 1 and
/// integer exponents; throws invalid_polynomial_error otherwise.
ChiSeries chi_expand(const LaurentPoly& delta);

/// Multiplies the infinite stream by a polynomial p with p(1) = 0, which makes
/// the product finite. Throws std::invalid_argument if p(1) != 0.
LaurentPoly chi_times_poly(const ChiSeries& chi, const LaurentPoly& p);

}  // namespace cablefloer
