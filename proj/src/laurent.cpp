#include "cablefloer/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace cablefloer {

LaurentPoly LaurentPoly::monomial(int64_t e2, int64_t c) {
    LaurentPoly p;
    if (c != 0) p.coeffs[e2] = c;
    return p;
}

int64_t LaurentPoly::coeff(int64_t e2) const {
    auto it = coeffs.find(e2);
    return it == coeffs.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int64_t e2, int64_t c) {
    if (c == 0) return;
    auto it = coeffs.find(e2);
    if (it == coeffs.end()) {
        coeffs[e2] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

int64_t LaurentPoly::top_exponent2() const {
    if (coeffs.empty()) throw std::logic_error("top_exponent2 of zero polynomial");
    return coeffs.rbegin()->first;
}

int64_t LaurentPoly::bottom_exponent2() const {
    if (coeffs.empty()) throw std::logic_error("bottom_exponent2 of zero polynomial");
    return coeffs.begin()->first;
}

int64_t LaurentPoly::eval_at_one() const {
    int64_t s = 0;
    for (auto& [e, c] : coeffs) s += c;
    return s;
}

bool LaurentPoly::is_symmetric() const {
    for (auto& [e, c] : coeffs)
        if (coeff(-e) != c) return false;
    return true;
}

bool LaurentPoly::has_integer_exponents() const {
    for (auto& [e, c] : coeffs)
        if (e % 2 != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::substitute_power(int64_t m) const {
    LaurentPoly out;
    for (auto& [e, c] : coeffs) out.add_term(e * m, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto& [ea, ca] : a.coeffs)
        for (auto& [eb, cb] : b.coeffs) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero())
        throw invalid_polynomial_error("division-by-zero", "division by zero polynomial");
    LaurentPoly rem = *this, quot;
    const int64_t dtop = divisor.top_exponent2();
    const int64_t dc = divisor.coeffs.rbegin()->second;
    while (!rem.is_zero()) {
        const int64_t rtop = rem.top_exponent2();
        const int64_t rc = rem.coeffs.rbegin()->second;
        if (rc % dc != 0)
            throw invalid_polynomial_error("inexact-division", "division leaves a remainder");
        const int64_t q = rc / dc;
        const int64_t sh = rtop - dtop;
        quot.add_term(sh, q);
        for (auto& [e, c] : divisor.coeffs) rem.add_term(e + sh, -q * c);
        if (!rem.is_zero() && rem.top_exponent2() >= rtop)
            throw invalid_polynomial_error("inexact-division", "division does not terminate");
    }
    return quot;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // High exponents first, matching the usual written form.
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        int64_t e = it->first, c = it->second;
        if (c < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        int64_t a = std::abs(c);
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (e != 2) {
                os << "^";
                if (e % 2 == 0) {
                    os << e / 2;
                } else {
                    os << e << "/2";
                }
            }
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    }
};

int64_t parse_int(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        neg = c.peek() == '-';
        c.i++;
    }
    c.skip_ws();
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw parse_error("expected integer in polynomial at position " + std::to_string(c.i));
    int64_t v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        c.i++;
    }
    return neg ? -v : v;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly out;
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw parse_error("empty polynomial");
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        int64_t sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            c.i++;
            c.skip_ws();
        }
        int64_t coeff = 1;
        bool saw_coeff = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_int(c);
            saw_coeff = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                c.i++;
                c.skip_ws();
            }
        }
        int64_t e2 = 0;
        if (!c.done() && c.peek() == 't') {
            c.i++;
            e2 = 2;  // bare t
            if (!c.done() && c.peek() == '^') {
                c.i++;
                int64_t num = parse_int(c);
                if (!c.done() && c.peek() == '/') {
                    c.i++;
                    int64_t den = parse_int(c);
                    if (den != 2) throw parse_error("exponent denominator must be 2");
                    e2 = num;
                } else {
                    e2 = 2 * num;
                }
            }
        } else if (!saw_coeff) {
            throw parse_error("expected term in polynomial at position " + std::to_string(c.i));
        }
        out.add_term(e2, sign * coeff);
    }
    return out;
}

int64_t ChiSeries::coeff(int64_t e2) const {
    if (e2 < tail_start) return tail_value;
    auto it = finite.find(e2);
    return it == finite.end() ? 0 : it->second;
}

int64_t ChiSeries::sum_from(int64_t e2) const {
    int64_t s = 0;
    if (e2 < tail_start) {
        if (tail_value != 0) {
            // Tail contributes (tail_start - e2)/2 lattice steps of tail_value.
            s += tail_value * ((tail_start - e2) / 2);
        }
        e2 = tail_start;
    }
    for (auto it = finite.lower_bound(e2); it != finite.end(); ++it) s += it->second;
    return s;
}

int64_t ChiSeries::max_exponent2() const {
    if (!finite.empty()) return finite.rbegin()->first;
    return tail_start - 2;
}

ChiSeries chi_expand(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw invalid_polynomial_error("normalization", "Delta(1) must be 1, got 0");
    if (!delta.has_integer_exponents())
        throw invalid_polynomial_error("non-integer-exponent",
                                       "Delta must be supported on integer exponents");
    if (!delta.is_symmetric())
        throw invalid_polynomial_error("asymmetric", "Delta(t) must equal Delta(1/t)");
    if (delta.eval_at_one() != 1)
        throw invalid_polynomial_error("normalization", "Delta(1) must be 1");

    // coeff(e) = sum of Delta coefficients at exponents >= e; constant = 1
    // below the bottom of the support.
    ChiSeries chi;
    const int64_t top = delta.top_exponent2();
    const int64_t bot = delta.bottom_exponent2();
    int64_t running = 0;
    std::map<int64_t, int64_t> vals;
    for (int64_t e = top; e >= bot; e -= 2) {
        running += delta.coeff(e);
        vals[e] = running;
    }
    // Everything below bot equals Delta(1) = 1. Canonicalize tail_start as the
    // smallest exponent above which some coefficient differs from 1.
    chi.tail_value = 1;
    int64_t ts = bot;
    while (ts <= top && vals[ts] == 1) ts += 2;
    chi.tail_start = ts;
    for (auto& [e, v] : vals)
        if (e >= ts && v != 0) chi.finite[e] = v;
    return chi;
}

LaurentPoly chi_times_poly(const ChiSeries& chi, const LaurentPoly& p) {
    if (p.eval_at_one() != 0)
        throw std::invalid_argument("chi_times_poly requires p(1) == 0");
    if (p.is_zero()) return LaurentPoly::zero();
    LaurentPoly out;
    // Support of the product is bounded: above by max exponents, below by
    // tail_start + bottom(p) since the constant tail annihilates p.
    const int64_t hi = chi.max_exponent2() + p.top_exponent2();
    const int64_t lo = chi.tail_start + p.bottom_exponent2();
    for (int64_t e = lo; e <= hi; e++) {
        int64_t c = 0;
        for (auto& [ep, cp] : p.coeffs) c += cp * chi.coeff(e - ep);
        out.add_term(e, c);
    }
    return out;
}

}  // namespace cablefloer
