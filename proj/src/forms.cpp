#include "qmock/forms.hpp"

namespace qmock {

std::vector<Rat> bernoulli_table(int k) {
    if (k < 0) throw rejected_input("bernoulli index must be >= 0");
    std::vector<Rat> b(static_cast<size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m.
        Rat acc(0);
        mpz_class c(1); // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += Rat(c) * b[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / Rat(c); // c == C(m+1, m) == m+1
    }
    return b;
}

Rat bernoulli(int k) {
    return bernoulli_table(k)[static_cast<size_t>(k)];
}

QSeries eta(const Rat& order) {
    if (!(order > Rat(1, 24))) throw rejected_input("eta needs order > 1/24");
    // prod_{n<=ceil(T)} (1-q^n) agrees with the infinite product below T.
    const long m = rat_ceil(order);
    QSeries p = QSeries::constant(Rat(1)).truncated(Trunc::at(order));
    for (long n = 1; n <= m; ++n) {
        QSeries f = QSeries::constant(Rat(1)) - QSeries::monomial(Rat(1), Rat(n));
        p = p * f.truncated(Trunc::at(order));
    }
    return p.shift_exponent(Rat(1, 24)).truncated(Trunc::at(order));
}

QSeries theta(int i, const Rat& order) {
    if (i < 1 || i > 3) throw rejected_input("theta index must be 1, 2 or 3");
    if (!(order > 0)) throw rejected_input("theta needs positive order");
    const long d = (i == 3) ? 8 : 2;
    QSeries s(d, Trunc::at(order));
    if (i == 3) {
        // exponents (2n+1)^2/8, each hit by n and -n-1
        for (long n = 0;; ++n) {
            const Rat e((2 * n + 1) * (2 * n + 1), 8);
            if (!(e < order)) break;
            s.set_coeff(e, Rat(2));
        }
    } else {
        s.set_coeff(Rat(0), Rat(1));
        for (long n = 1;; ++n) {
            const Rat e(n * n, 2);
            if (!(e < order)) break;
            s.set_coeff(e, Rat(i == 2 && (n % 2) ? -2 : 2));
        }
    }
    return s;
}

QSeries eisenstein(int k, const Rat& order) {
    if (k < 2 || k % 2 != 0) throw rejected_input("Eisenstein weight must be even, >= 2");
    if (!(order > 0)) throw rejected_input("eisenstein needs positive order");
    const Rat factor = Rat(-2 * k) / bernoulli(k);
    const long m = rat_ceil(order);
    // sigma_{k-1} sieve: add d^{k-1} at every multiple of d.
    std::vector<Rat> sigma(static_cast<size_t>(std::max<long>(m, 1)) + 1, Rat(0));
    for (long dd = 1; dd <= m; ++dd) {
        Rat pw(1);
        for (int j = 0; j < k - 1; ++j) pw *= dd;
        for (long n = dd; n <= m; n += dd) sigma[static_cast<size_t>(n)] += pw;
    }
    QSeries s(1, Trunc::at(order));
    s.set_coeff(Rat(0), Rat(1));
    for (long n = 1; n <= m; ++n) {
        if (!(Rat(n) < order)) break;
        s.set_coeff(Rat(n), factor * sigma[static_cast<size_t>(n)]);
    }
    return s;
}

QSeries half_theta(const Rat& order) {
    if (!(order > 1)) throw rejected_input("half_theta needs order > 1");
    QSeries s(1, Trunc::at(order));
    for (long n = 1;; ++n) {
        const Rat e(n * n);
        if (!(e < order)) break;
        s.set_coeff(e, Rat(n));
    }
    return s;
}

} // namespace qmock
