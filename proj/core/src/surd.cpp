#include "zetalab/surd.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace zetalab {

SurdValue surd_add(const SurdValue& u, const SurdValue& v) {
    return {u.a + v.a, u.b + v.b, u.c + v.c, u.d + v.d};
}

SurdValue surd_sub(const SurdValue& u, const SurdValue& v) {
    return {u.a - v.a, u.b - v.b, u.c - v.c, u.d - v.d};
}

SurdValue surd_neg(const SurdValue& u) { return {-u.a, -u.b, -u.c, -u.d}; }

// basis products: r2*r3 = r6, r2*r6 = 2*r3, r3*r6 = 3*r2, r6*r6 = 6
SurdValue surd_mul(const SurdValue& u, const SurdValue& v) {
    SurdValue r;
    r.a = u.a * v.a + u.b * v.b * Rational(2) + u.c * v.c * Rational(3) + u.d * v.d * Rational(6);
    r.b = u.a * v.b + u.b * v.a + (u.c * v.d + u.d * v.c) * Rational(3);
    r.c = u.a * v.c + u.c * v.a + (u.b * v.d + u.d * v.b) * Rational(2);
    r.d = u.a * v.d + u.d * v.a + u.b * v.c + u.c * v.b;
    return r;
}

SurdValue surd_conj2(const SurdValue& u) { return {u.a, -u.b, u.c, -u.d}; }
SurdValue surd_conj3(const SurdValue& u) { return {u.a, u.b, -u.c, -u.d}; }

Rational surd_norm(const SurdValue& u) {
    SurdValue p = surd_mul(surd_mul(u, surd_conj2(u)), surd_mul(surd_conj3(u), surd_conj2(surd_conj3(u))));
    if (!p.is_rational()) throw std::logic_error("surd_norm: conjugate product not rational");
    return p.a;
}

SurdValue surd_inv(const SurdValue& u) {
    if (u.is_zero()) throw std::domain_error("surd_inv: zero has no inverse");
    SurdValue adj = surd_mul(surd_mul(surd_conj2(u), surd_conj3(u)), surd_conj2(surd_conj3(u)));
    Rational n = surd_norm(u);
    Rational inv_n = Rational(1) / n;
    return {adj.a * inv_n, adj.b * inv_n, adj.c * inv_n, adj.d * inv_n};
}

HPReal surd_eval(const SurdValue& u, long precision_bits) {
    if (precision_bits < 16) throw std::invalid_argument("surd_eval: precision_bits must be >= 16");
    long wp = working_precision(precision_bits);
    HPReal r2 = sqrt(HPReal(2, wp));
    HPReal r3 = sqrt(HPReal(3, wp));
    HPReal r6 = sqrt(HPReal(6, wp));
    HPReal out(u.a, wp);
    out += HPReal(u.b, wp) * r2;
    out += HPReal(u.c, wp) * r3;
    out += HPReal(u.d, wp) * r6;
    return out;
}

HPReal surd_log(const SurdValue& u, long precision_bits) {
    HPReal v = surd_eval(u, precision_bits);
    if (v.sign() <= 0) throw std::domain_error("surd_log: argument is not positive");
    return log(v);
}

std::string surd_format(const SurdValue& u) {
    std::ostringstream os;
    os << u.a.str() << " + " << u.b.str() << "*r2 + " << u.c.str() << "*r3 + "
       << u.d.str() << "*r6";
    return os.str();
}

SurdValue surd_parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, " + ") == 0) {
            parts.push_back(cur);
            cur.clear();
            i += 3;
        } else {
            cur += text[i++];
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw std::invalid_argument("surd_parse: expected four ' + '-separated components");
    auto coeff = [](const std::string& term, const std::string& suffix) {
        if (suffix.empty()) return Rational::parse(term);
        if (term.size() < suffix.size() + 1 ||
            term.compare(term.size() - suffix.size(), suffix.size(), suffix) != 0 ||
            term[term.size() - suffix.size() - 1] != '*')
            throw std::invalid_argument("surd_parse: malformed term '" + term + "'");
        return Rational::parse(term.substr(0, term.size() - suffix.size() - 1));
    };
    return {coeff(parts[0], ""), coeff(parts[1], "r2"), coeff(parts[2], "r3"),
            coeff(parts[3], "r6")};
}

} // namespace zetalab
