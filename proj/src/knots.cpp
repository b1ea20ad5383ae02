#include "cablefloer/knots.hpp"

#include <numeric>
#include <vector>

namespace cablefloer {

LSpaceKnot validate(const LaurentPoly& delta_in) {
    if (delta_in.is_zero())
        throw invalid_polynomial_error("normalization", "Delta(1) must be 1, got 0");
    if (!delta_in.has_integer_exponents())
        throw invalid_polynomial_error("non-integer-exponent",
                                       "knot Alexander polynomial must have integer exponents");
    LaurentPoly delta = delta_in;
    if (delta.coeffs.rbegin()->second < 0) {
        // Top coefficient normalized to be positive.
        LaurentPoly neg;
        for (auto& [e, c] : delta.coeffs) neg.add_term(e, -c);
        delta = neg;
    }
    if (!delta.is_symmetric())
        throw invalid_polynomial_error("asymmetric", "Delta(t) must equal Delta(1/t)");
    int64_t prev = 0;
    for (auto it = delta.coeffs.rbegin(); it != delta.coeffs.rend(); ++it) {
        int64_t c = it->second;
        if (c != 1 && c != -1)
            throw invalid_polynomial_error(
                "coefficient-magnitude",
                "coefficient " + std::to_string(c) + " at t^" + std::to_string(it->first / 2) +
                    " (all nonzero coefficients must be +-1)");
        if (prev != 0 && c == prev)
            throw invalid_polynomial_error("non-alternating",
                                           "nonzero coefficients must alternate in sign");
        prev = c;
    }
    if (delta.eval_at_one() != 1)
        throw invalid_polynomial_error("normalization", "Delta(1) must be 1");

    LSpaceKnot K;
    K.alexander = delta;
    K.genus = delta.top_exponent2() / 2;
    K.chi = chi_expand(delta);
    return K;
}

LSpaceKnot unknot() { return validate(LaurentPoly::one()); }

LSpaceKnot trefoil() { return torus_knot(2, 3); }

LSpaceKnot torus_knot(int64_t p, int64_t q) {
    if (p <= 0 || q <= 0) throw parse_error("torus knot parameters must be positive");
    if (std::gcd(p, q) != 1) throw parse_error("torus knot parameters must be coprime");
    auto binom = [](int64_t a) {  // t^{a/2} - t^{-a/2}, doubled exponent a
        LaurentPoly r;
        r.add_term(a, 1);
        r.add_term(-a, -1);
        return r;
    };
    LaurentPoly num = binom(p * q) * binom(1);
    LaurentPoly den = binom(p) * binom(q);
    return validate(num.divide_exact(den));
}

LSpaceKnot cable_knot(const LSpaceKnot& K, int64_t m, int64_t n) {
    if (m < 1) throw parse_error("cable parameter m must be >= 1");
    if (std::gcd(m, n < 0 ? -n : n) != 1) throw parse_error("cable parameters must be coprime");
    const int64_t g = K.genus;
    if (m == 1) {
        if (n < 2 * g - 1)
            throw parse_error("cable(K,1,n) requires n >= 2g(K)-1 = " + std::to_string(2 * g - 1));
        return K;  // K_{1,n} = K
    }
    if (n < 1 || n <= m * (2 * g - 1))
        throw parse_error("cable(K,m,n) with m>1 requires n/m > 2g(K)-1 and n >= 1");
    LaurentPoly delta = K.alexander.substitute_power(m) * torus_knot(m, n).alexander;
    LSpaceKnot C = validate(delta);
    // g(K_{m,n}) = m g(K) + (m-1)(n-1)/2; the top exponent must agree.
    const int64_t expected = m * g + (m - 1) * (n - 1) / 2;
    if (C.genus != expected)
        throw std::logic_error("cable genus mismatch: " + std::to_string(C.genus) + " vs " +
                               std::to_string(expected));
    return C;
}

int64_t h_knot(const LSpaceKnot& K, int64_t v2) {
    if (v2 % 2 != 0) throw parse_error("knot grading must be an integer");
    return K.chi.sum_from(v2 + 2);
}

int64_t hfl_rank(const LSpaceKnot& K, int64_t v2) {
    if (v2 % 2 != 0) throw parse_error("knot grading must be an integer");
    return K.chi.coeff(v2);
}

int64_t h_at(const LSpaceKnot& K, int64_t v) { return K.chi.sum_from(2 * v + 2); }

int64_t rank_at(const LSpaceKnot& K, int64_t v) { return K.chi.coeff(2 * v); }

namespace {

// Splits "a,b,c" at top level (no nesting of parens).
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int64_t to_int(const std::string& s) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw parse_error("bad integer: " + s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad integer: " + s);
    }
}

}  // namespace

LSpaceKnot parse_knot_spec(const std::string& spec_in) {
    const std::string spec = strip(spec_in);
    if (spec == "unknot") return unknot();
    if (spec == "trefoil") return trefoil();
    if (spec.rfind("poly:", 0) == 0) return validate(LaurentPoly::parse(spec.substr(5)));
    auto call = [&](const std::string& name) -> std::vector<std::string> {
        if (spec.rfind(name + "(", 0) != 0 || spec.back() != ')')
            throw parse_error("unrecognized knot spec: " + spec);
        return split_args(spec.substr(name.size() + 1, spec.size() - name.size() - 2));
    };
    if (spec.rfind("torus(", 0) == 0) {
        auto args = call("torus");
        if (args.size() != 2) throw parse_error("torus(p,q) takes two arguments");
        return torus_knot(to_int(strip(args[0])), to_int(strip(args[1])));
    }
    if (spec.rfind("cable(", 0) == 0) {
        auto args = call("cable");
        if (args.size() != 3) throw parse_error("cable(<knot>,m,n) takes three arguments");
        LSpaceKnot inner = parse_knot_spec(args[0]);
        return cable_knot(inner, to_int(strip(args[1])), to_int(strip(args[2])));
    }
    throw parse_error("unrecognized knot spec: " + spec);
}

}  // namespace cablefloer
