#include "qmock/lerch.hpp"

#include "qmock/forms.hpp"

namespace qmock {

QSeries appell_sum(int i, const Rat& order) {
    if (i < 1 || i > 3) throw rejected_input("appell index must be 1, 2 or 3");
    if (!(order > 0)) throw rejected_input("appell_sum needs positive order");
    QSeries s(2, Trunc::at(order));
    if (i == 3) {
        // q^{(n^2+n)/2} (1+q^n)/(1-q^n)^2 = sum_{j>=0} (2j+1) q^{(n^2+n)/2 + jn}
        for (long n = 1; Rat(n * (n + 1), 2) < order; ++n) {
            long j = 0;
            for (Rat e(n * (n + 1), 2); e < order; e += n, ++j)
                s.set_coeff(e, s.coeff(e).rational_value() + (2 * j + 1));
        }
    } else {
        // q^{(n^2+2n)/2}/(1-q^n)^2 = sum_{t>=1} t q^{(n^2+2n)/2 + (t-1)n}
        for (long n = 1; Rat(n * n + 2 * n, 2) < order; ++n) {
            const long sign = (i == 2 && n % 2) ? -1 : 1;
            long t = 1;
            for (Rat e(n * n + 2 * n, 2); e < order; e += n, ++t)
                s.set_coeff(e, s.coeff(e).rational_value() + sign * t);
        }
    }
    return s;
}

QSeries double_sum_expansion(int i, const Rat& order) {
    if (i < 1 || i > 3) throw rejected_input("appell index must be 1, 2 or 3");
    if (!(order > 0)) throw rejected_input("double_sum_expansion needs positive order");
    const int parity = (i == 3) ? 1 : 0; // required parity of m - n
    QSeries s(2, Trunc::at(order));
    for (long n = 1; Rat(n, 2) < order; ++n) {
        for (long m = 1; Rat(m * n, 2) < order; ++m) {
            if (m == n || ((m - n) % 2 + 2) % 2 != parity) continue;
            Rat w(m > n ? m : -m);
            if (i == 2 && m % 2) w = -w;
            const Rat e(m * n, 2);
            s.set_coeff(e, s.coeff(e).rational_value() + w);
        }
    }
    return s;
}

QSeries h_series(int i, const Rat& order) {
    if (i < 1 || i > 3) throw rejected_input("h index must be 1, 2 or 3");
    const Rat inner = order + 1;
    const QSeries e2 = eisenstein(2, inner);
    QSeries num;
    if (i == 3)
        num = QSeries::constant(Rat(-1)) + e2 - appell_sum(3, inner) * Rat(24);
    else
        num = QSeries::constant(Rat(2)) + e2 - appell_sum(i, inner) * Rat(48);
    return num.div(theta(i, inner) * Rat(24)).truncated(Trunc::at(order));
}

QSeries g_series(const Rat& order) {
    if (!(order > 0)) throw rejected_input("g_series needs positive order");
    // Assemble the products on the base lattice, where the fractional
    // exponents already cancel, then rescale tau -> 2 tau.
    const Rat half = order / 2 + 1;
    const QSeries p1 = h_series(1, half) * theta(1, half);
    const QSeries p3 = h_series(3, half) * theta(3, half);
    const QSeries t14 = theta(1, order + 1).pow_int(4);
    const QSeries t24 = theta(2, order + 1).pow_int(4);
    QSeries g = (p1 + p3).subst_tau(Rat(2), Rat(0)) * Rat(-1, 2) +
                (t14 + t24) * Rat(1, 96);
    g = g.truncated(Trunc::at(order));
    if (g.has_fractional_exponent())
        throw error("internal: g has a fractional-exponent residue");
    return g.normalized_lattice();
}

Rat sigma_prime(long n) {
    if (n < 1) throw rejected_input("sigma_prime needs n >= 1");
    Rat acc(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const long big = n / d;
        if (big * big > n) acc += big;  // the large divisor of the pair
        if (d * d == n) acc += Rat(d, 2);
    }
    return acc;
}

QSeries sigma_prime_series(const Rat& order) {
    QSeries s(1, Trunc::at(order));
    s.set_coeff(Rat(0), Rat(-1, 24));
    for (long n = 1; Rat(n) < order; ++n) s.set_coeff(Rat(n), sigma_prime(n));
    return s;
}

QSeries g_bilateral_series(const Rat& order) {
    // -E2/24 - 1/2 [ sum_{n>0} n q^{n^2}/(1-q^n) + sum_{n<0} ... ], where
    // the n < 0 half rewrites to sum_{n>0} n q^{n^2+n}/(1-q^n).
    QSeries s = eisenstein(2, order) * Rat(-1, 24);
    for (long n = 1; Rat(n) * n < order; ++n) {
        for (long e = n * n; Rat(e) < order; e += n)
            s.set_coeff(Rat(e), s.coeff(Rat(e)).rational_value() - Rat(n, 2));
        for (long e = n * (n + 1); Rat(e) < order; e += n)
            s.set_coeff(Rat(e), s.coeff(Rat(e)).rational_value() - Rat(n, 2));
    }
    return s;
}

} // namespace qmock
