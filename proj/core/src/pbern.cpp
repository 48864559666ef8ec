#include "zetalab/pbern.hpp"

#include <mutex>
#include <sstream>

namespace zetalab {

const Rational& bernoulli_classical(long m) {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= m) {
        long k = static_cast<long>(cache.size());
        Rational s(0);
        for (long j = 0; j < k; ++j) s += binomial(k + 1, j) * cache[j];
        cache.push_back(-s / Rational(k + 1));
    }
    return cache[m];
}

Rational zeta_even_euler_route(long n) {
    if (n < 1) throw std::domain_error("zeta_even_euler_route: n must be >= 1");
    mpz_class p2, fact;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n));
    Rational c = bernoulli_classical(2 * n) * Rational(p2) / Rational(mpz_class(2 * fact));
    if (n % 2 == 0) c = -c;
    return c;
}

Rational PTable::closed_form(long l, long n) const {
    switch (l) {
    case 1: return Rational(1, n);
    case 2: return Rational(3, 10);
    case 3: return Rational(3 * (21 * n - 43), 1400);
    case 4: return Rational(63 * n * n - 387 * n + 590, 14000);
    default: throw std::logic_error("closed_form: only l <= 4");
    }
}

const Rational& PTable::sigma_euler(long n) {
    while (static_cast<long>(sigma_memo_.size()) <= n) {
        long m = static_cast<long>(sigma_memo_.size());
        if (m == 0) {
            sigma_memo_.emplace_back(1, 2);
        } else {
            mpz_class p6;
            mpz_ui_pow_ui(p6.get_mpz_t(), 6, static_cast<unsigned long>(m));
            sigma_memo_.push_back(Rational(2 * m - 1) * zeta_even_euler_route(m) * Rational(p6));
        }
    }
    return sigma_memo_[n];
}

Rational PTable::t_target(long k, long n) {
    if (n < 0) return Rational(0);
    if (k == 0) return n == 0 ? Rational(0) : sigma_euler(n) / Rational(n * (2 * n - 1));
    if (k == 1) return sigma_euler(n);
    auto it = t_memo_.find({k, n});
    if (it != t_memo_.end()) return it->second;
    long km = k - 1;
    Rational v = (Rational(24 * km * km) * t_target(km, n - 1) +
                  Rational((2 * n - 2 * km) * (2 * n - 2 * km - 1)) * t_target(km, n)) /
                 Rational((2 * km + 1) * (2 * km + 2));
    t_memo_.emplace(std::make_pair(k, n), v);
    return v;
}

// Newton forward differences over the first l-1 stored values of P^(l)
Rational PTable::extend_poly(long l, long n) const {
    if (l <= 4) return closed_form(l, n);
    if (rows_built() < 2 * l - 2)
        throw std::logic_error("PTable: need rows up to 2l-2 to extend P^(" + std::to_string(l) + ")");
    auto it = diff_memo_.find(l);
    if (it == diff_memo_.end()) {
        std::vector<Rational> vals;
        for (long m = l; m <= 2 * l - 2; ++m) vals.push_back(rows_[m - 1][l - 1]);
        std::vector<Rational> diffs{vals[0]};
        while (vals.size() > 1) {
            for (size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
            vals.pop_back();
            diffs.push_back(vals[0]);
        }
        it = diff_memo_.emplace(l, std::move(diffs)).first;
    }
    const auto& diffs = it->second;
    Rational out(0), ch(1);
    long t = n - l;
    for (size_t j = 0; j < diffs.size(); ++j) {
        out += diffs[j] * ch;
        ch = ch * Rational(t - static_cast<long>(j)) / Rational(static_cast<long>(j) + 1);
    }
    return out;
}

void PTable::solve_row(long n) {
    std::vector<Rational> row(static_cast<size_t>(n));
    for (long l = 1; l <= std::min<long>(n, 4); ++l) row[l - 1] = closed_form(l, n);
    if (n >= 5) {
        // l with 2l-2 <= n-1 are already pinned by their polynomial
        long lo = (n + 1) / 2 + 1;
        if (lo < 5) lo = 5;
        for (long l = 5; l < lo; ++l) row[l - 1] = extend_poly(l, n);
        long m = n - lo + 1;
        // identities T_0 .. T_{2(m-1)}; augmented matrix over rationals
        std::vector<std::vector<Rational>> A(static_cast<size_t>(m));
        for (long k = 0; k < m; ++k) {
            auto& r = A[static_cast<size_t>(k)];
            r.resize(static_cast<size_t>(m) + 1);
            for (long j = 0; j < m; ++j) {
                long l = lo + j;
                Rational w = binomial(n + 2 * k - l, 2 * k);
                r[static_cast<size_t>(j)] = (l % 2 == 0) ? -w : w;
            }
            Rational rhs = t_target(k, n);
            for (long l = 1; l < lo; ++l) {
                Rational w = binomial(n + 2 * k - l, 2 * k) * row[l - 1];
                rhs -= (l % 2 == 0) ? -w : w;
            }
            r[static_cast<size_t>(m)] = rhs;
        }
        for (long c = 0; c < m; ++c) {
            long piv = c;
            while (piv < m && A[piv][c].is_zero()) ++piv;
            if (piv == m) throw std::logic_error("PTable: singular row system");
            std::swap(A[c], A[piv]);
            Rational inv = Rational(1) / A[c][c];
            for (auto& v : A[c]) v *= inv;
            for (long r = 0; r < m; ++r) {
                if (r == c || A[r][c].is_zero()) continue;
                Rational f = A[r][c];
                for (long j = c; j <= m; ++j) A[r][j] -= f * A[c][j];
            }
        }
        for (long j = 0; j < m; ++j) row[static_cast<size_t>(lo + j - 1)] = A[j][static_cast<size_t>(m)];
    }
    rows_.push_back(std::move(row));
}

void PTable::ensure_rows(long max_n) {
    if (frozen_ && max_n > rows_built())
        throw std::logic_error("PTable: frozen; cannot extend");
    while (rows_built() < max_n) solve_row(rows_built() + 1);
}

void PTable::freeze() {
    // materialize every difference table reachable from the built rows so
    // that frozen reads never mutate
    for (long l = 5; 2 * l - 2 <= rows_built(); ++l)
        if (rows_built() >= l) extend_poly(l, l);
    frozen_ = true;
}

Rational PTable::p_poly(long l, long n) const {
    if (l < 1 || n < l) throw std::domain_error("p_poly: need 1 <= l <= n");
    if (n <= rows_built()) return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(l - 1)];
    return extend_poly(l, n);
}

Rational PTable::sigma_coeff(long n) {
    if (n < 1) throw std::domain_error("sigma_coeff: n must be >= 1");
    ensure_rows(n);
    Rational s(0);
    for (long l = 1; l <= n; ++l) {
        Rational term = binomial(n + 2 - l, 2) * rows_[n - 1][l - 1];
        s += (l % 2 == 0) ? -term : term;
    }
    return s;
}

ZetaEvenCoefficient PTable::zeta_even_coeff(long n) {
    if (n < 1) throw std::domain_error("zeta_even_coeff: n must be >= 1");
    mpz_class p6;
    mpz_ui_pow_ui(p6.get_mpz_t(), 6, static_cast<unsigned long>(n));
    Rational via_p = sigma_coeff(n) / (Rational(2 * n - 1) * Rational(p6));
    Rational via_euler = zeta_even_euler_route(n);
    if (via_p != via_euler)
        throw IntegrityError("zeta_even_coeff: polynomial route disagrees with Bernoulli route at n=" +
                             std::to_string(n));
    return {n, via_p};
}

Rational PTable::bernoulli_even(long m) {
    if (m < 2 || m % 2 != 0) throw std::domain_error("bernoulli_even: m must be even and >= 2");
    long n = m / 2;
    mpz_class fact, p2;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(m));
    Rational b = zeta_even_coeff(n).coeff * Rational(mpz_class(2 * fact)) / Rational(p2);
    if (n % 2 == 0) b = -b;
    return b;
}

Rational PTable::combined_coeff(long n) {
    if (n < 1) throw std::domain_error("combined_coeff: n must be >= 1");
    long m = n + 1;
    ensure_rows(m);
    Rational A(0);
    for (long l = 1; l <= m; ++l) {
        Rational term = binomial(m + 4 - l, 4) * rows_[m - 1][l - 1];
        A += (l % 2 == 0) ? -term : term;
    }
    Rational d6 = Rational(2 * n - 1) * Rational(2 * n) * Rational(2 * n + 1) *
                  Rational(2 * n + 2) * Rational(2 * n + 3) * Rational(2 * n + 4);
    Rational bracket = (A - Rational(2) * sigma_coeff(n)) / d6;
    return (n % 2 == 0) ? -bracket : bracket;
}

std::string PTable::dump_json(long max_n) const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (long n = 1; n <= std::min(max_n, rows_built()); ++n) {
        for (long l = 1; l <= n; ++l) {
            if (!first) os << ",";
            first = false;
            os << "{\"l\":" << l << ",\"n\":" << n << ",\"value\":\""
               << rows_[n - 1][l - 1].str() << "\"}";
        }
    }
    os << "]";
    return os.str();
}

} // namespace zetalab
