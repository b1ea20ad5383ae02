#pragma once

#include <cstdint>
#include <vector>

#include "cablefloer/knots.hpp"

namespace cablefloer {

enum class Regime { Strict, Boundary, NotLSpace };

/// Alexander multigrading of an r-component link: a vector of doubled
/// integers. Every coordinate must have the parity of l(r-1), matching the
/// lattice Z + l(r-1)/2.
using Grading = std::vector<int64_t>;

/// The r-component cable link K_{rm,rn}. Each component is the cable knot
/// K_{m,n}; pairwise linking number l = mn. The regime tag records whether
/// the link is an L-space link and, if so, whether the cabling slope is in
/// the strict range n/m > 2g(K)-1 or on the boundary n = 2g(K)-1 (m = 1).
struct CableLink {
    LSpaceKnot knot;
    int r = 1;
    int64_t m = 1, n = 1;
    int64_t l = 1;    // pairwise linking number mn
    int64_t c2 = 0;   // doubled c = l(r-1)/2
    Regime regime = Regime::NotLSpace;
    LSpaceKnot companion;       // K_{m,n}, valid unless regime == NotLSpace
    int64_t companion_genus = 0;

    /// Parity of valid doubled grading coordinates.
    int64_t lattice_parity() const { return ((c2 % 2) + 2) % 2; }
    void check_grading(const Grading& v) const;
    void require_lspace(const char* op) const;
    void require_strict(const char* op) const;
};

/// Applies the L-space classification: Strict iff n/m > 2g(K)-1, Boundary iff
/// n = m(2g(K)-1) (forces m = 1), NotLSpace otherwise.
CableLink classify(const LSpaceKnot& K, int r, int64_t m, int64_t n);

/// h-function: sorts the coordinates ascending and evaluates
/// sum_i h_{m,n}(v_i - c + (i-1)l). Exact for any grading in the lattice.
int64_t h_cable(const CableLink& L, const Grading& v);

/// Diagonal restriction of h and its decrement profile
/// beta(k) = h(k-1,...,k-1) - h(k,...,k) - 1. Outside the stored window the
/// profile continues with beta = r-1 on the left (h affine of slope -r) and
/// beta = -1, h = 0 on the right; construction asserts both tails stabilized.
struct DiagonalProfile {
    int r = 1;
    int64_t k2_min = 0, k2_max = 0;  // doubled, inclusive, step 2
    std::vector<int64_t> hh;         // hh[i] = h((k2_min + 2i)/2 diagonal)
    std::vector<int64_t> beta;       // beta[i] at k2 = k2_min + 2i

    int64_t hh_at(int64_t k2) const;
    int64_t beta_at(int64_t k2) const;
};

DiagonalProfile diagonal_profile(const CableLink& L);

/// beta via HFK ranks of the companion knot:
/// max{j in [0,r-1] : dim HFK(K_{m,n}, k-c+lj) = 1}, or -1 if the j = 0 group
/// vanishes. Valid in the Strict regime only.
int64_t beta_via_hfk(const CableLink& L, int64_t k2);

/// chi generating function in the diagonal variable t = t_1...t_r:
/// chi_{K_{m,n}}(t) * (t^{l/2} - t^{-l/2})^{r-1}, a finite Laurent polynomial.
/// Requires r >= 2.
LaurentPoly multivariable_chi(const CableLink& L);

/// Euler characteristic at one multigrading by inclusion-exclusion:
/// sum over subsets B of (-1)^{|B|-1} h(v - e_B).
int64_t chi_at_grading(const CableLink& L, const Grading& v);

/// Consistency-check path for the h-function: re-derives h(v) from the chi
/// generating functions of all sublinks K_{r'm,r'n}. Quadratic in the window;
/// intended for tests, not production evaluation.
int64_t h_cable_by_inversion(const CableLink& L, const Grading& v);

}  // namespace cablefloer
