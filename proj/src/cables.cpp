#include "cablefloer/cables.hpp"

#include <algorithm>
#include <numeric>

namespace cablefloer {

void CableLink::check_grading(const Grading& v) const {
    if (int(v.size()) != r)
        throw parse_error("grading must have " + std::to_string(r) + " coordinates");
    for (int64_t x : v)
        if (((x % 2) + 2) % 2 != lattice_parity())
            throw parse_error("grading parity mismatch: coordinates lie in Z + " +
                              std::to_string(lattice_parity()) + "/2");
}

void CableLink::require_lspace(const char* op) const {
    if (regime == Regime::NotLSpace)
        throw unsupported_regime_error(std::string(op) + ": not an L-space link");
    if (l < 1)
        throw unsupported_regime_error(std::string(op) +
                                       ": unsupported for nonpositive linking number");
}

void CableLink::require_strict(const char* op) const {
    require_lspace(op);
    if (regime == Regime::Boundary)
        throw unsupported_regime_error(std::string(op) + ": unsupported in Boundary regime");
}

CableLink classify(const LSpaceKnot& K, int r, int64_t m, int64_t n) {
    if (r < 1) throw parse_error("r must be >= 1");
    if (m < 1) throw parse_error("m must be >= 1");
    if (std::gcd(m, n < 0 ? -n : n) != 1) throw parse_error("m and n must be coprime");

    CableLink L;
    L.knot = K;
    L.r = r;
    L.m = m;
    L.n = n;
    L.l = m * n;
    L.c2 = L.l * (r - 1);
    const int64_t g = K.genus;
    if (n > m * (2 * g - 1)) {
        L.regime = Regime::Strict;
    } else if (n == m * (2 * g - 1)) {
        L.regime = Regime::Boundary;  // gcd(m,n)=1 forces m=1 here
    } else {
        L.regime = Regime::NotLSpace;
    }
    L.companion = K;
    if (L.regime != Regime::NotLSpace && (m == 1 || n >= 1)) {
        L.companion = cable_knot(K, m, n);
        L.companion_genus = L.companion.genus;
    }
    return L;
}

int64_t h_cable(const CableLink& L, const Grading& v) {
    L.require_lspace("h_cable");
    L.check_grading(v);
    Grading s = v;
    std::sort(s.begin(), s.end());
    int64_t h = 0;
    for (int i = 0; i < L.r; i++) h += h_at(L.companion, (s[i] - L.c2) / 2 + int64_t(i) * L.l);
    return h;
}

namespace {

int64_t diag_h(const CableLink& L, int64_t k2) {
    int64_t h = 0;
    for (int j = 0; j < L.r; j++) h += h_at(L.companion, (k2 - L.c2) / 2 + int64_t(j) * L.l);
    return h;
}

}  // namespace

int64_t DiagonalProfile::hh_at(int64_t k2) const {
    if (k2 > k2_max) return 0;
    if (k2 < k2_min) return hh.front() + r * ((k2_min - k2) / 2);  // slope -r tail
    return hh[size_t((k2 - k2_min) / 2)];
}

int64_t DiagonalProfile::beta_at(int64_t k2) const {
    if (k2 > k2_max) return -1;
    if (k2 < k2_min) return r - 1;
    return beta[size_t((k2 - k2_min) / 2)];
}

DiagonalProfile diagonal_profile(const CableLink& L) {
    L.require_lspace("diagonal_profile");
    const int64_t gc = L.companion_genus;
    int64_t w2 = 2 * gc + L.l * L.r + 4;
    for (int attempt = 0;; attempt++) {
        int64_t lo = -w2, hi = w2;
        // Align to the lattice parity.
        if (((lo % 2) + 2) % 2 != L.lattice_parity()) lo++;
        if (((hi % 2) + 2) % 2 != L.lattice_parity()) hi--;

        DiagonalProfile P;
        P.r = L.r;
        P.k2_min = lo;
        P.k2_max = hi;
        int64_t prev = diag_h(L, lo - 2);
        const int64_t h_at_min_minus_1 = prev;
        for (int64_t k2 = lo; k2 <= hi; k2 += 2) {
            int64_t h = diag_h(L, k2);
            P.hh.push_back(h);
            P.beta.push_back(prev - h - 1);
            prev = h;
        }
        // Certify both tails before trusting the window.
        const bool left_ok =
            P.beta.front() == L.r - 1 && h_at_min_minus_1 - P.hh.front() == L.r &&
            (lo - L.c2) / 2 + (int64_t(L.r) - 1) * L.l <= -gc;
        const bool right_ok = P.hh.back() == 0 && P.beta.back() == -1 && (hi - 2 - L.c2) / 2 >= gc;
        if (left_ok && right_ok) return P;
        if (attempt >= 8) throw std::logic_error("diagonal profile failed to stabilize");
        w2 *= 2;
    }
}

int64_t beta_via_hfk(const CableLink& L, int64_t k2) {
    L.require_strict("beta_via_hfk");
    if (((k2 % 2) + 2) % 2 != L.lattice_parity()) throw parse_error("grading parity mismatch");
    int64_t best = -1;
    for (int64_t j = 0; j < L.r; j++)
        if (rank_at(L.companion, (k2 - L.c2) / 2 + j * L.l) == 1) best = j;
    return best;
}

LaurentPoly multivariable_chi(const CableLink& L) {
    if (L.r < 2) throw std::invalid_argument("multivariable_chi requires r >= 2");
    L.require_lspace("multivariable_chi");
    LaurentPoly factor;  // t^{l/2} - t^{-l/2} in the diagonal variable
    factor.add_term(L.l, 1);
    factor.add_term(-L.l, -1);
    LaurentPoly out = chi_times_poly(L.companion.chi, factor);
    for (int i = 2; i < L.r; i++) out = out * factor;
    return out;
}

int64_t chi_at_grading(const CableLink& L, const Grading& v) {
    L.require_lspace("chi_at_grading");
    L.check_grading(v);
    int64_t total = 0;
    for (uint32_t B = 0; B < (uint32_t(1) << L.r); B++) {
        Grading u = v;
        for (int i = 0; i < L.r; i++)
            if (B & (uint32_t(1) << i)) u[i] -= 2;
        const int64_t sign = (__builtin_popcount(B) % 2 == 1) ? 1 : -1;
        total += sign * h_cable(L, u);
    }
    return total;
}

int64_t h_cable_by_inversion(const CableLink& L, const Grading& v) {
    L.require_lspace("h_cable_by_inversion");
    L.check_grading(v);
    int64_t total = 0;
    for (uint32_t S = 1; S < (uint32_t(1) << L.r); S++) {
        const int rp = __builtin_popcount(S);
        int64_t vmax2 = INT64_MIN;
        for (int i = 0; i < L.r; i++)
            if (S & (uint32_t(1) << i)) vmax2 = std::max(vmax2, v[i]);
        // Threshold for the projected grading, doubled.
        const int64_t smin2 = vmax2 + 2 - L.l * (int64_t(L.r) - rp);
        int64_t inner;
        if (rp == 1) {
            inner = L.companion.chi.sum_from(smin2);
        } else {
            const CableLink sub = classify(L.knot, rp, L.m, L.n);
            const LaurentPoly chi = multivariable_chi(sub);
            inner = 0;
            for (auto& [e, c] : chi.coeffs)
                if (e >= smin2) inner += c;
        }
        total += (rp % 2 == 1 ? 1 : -1) * inner;
    }
    return total;
}

}  // namespace cablefloer
