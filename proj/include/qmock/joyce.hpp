#pragma once

#include "qmock/report.hpp"

namespace qmock {

// Polynomial in q over Q, coefficients ascending, trailing coefficient
// nonzero (the zero polynomial is the empty vector).
using QPoly = std::vector<Rat>;

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b); // monic gcd
Rat poly_eval(const QPoly& p, const Rat& x);
QPoly poly_derivative(const QPoly& p);
std::string poly_str(const QPoly& p);

/* Exact ratio of polynomials in q; the value ring for motivic invariants
 * under q = l^{-1}. Always reduced, with monic denominator. */
class QRational {
public:
    QRational() : num_{}, den_{Rat(1)} {}
    QRational(QPoly num, QPoly den); // reduces and normalizes
    explicit QRational(const Rat& c) : num_{}, den_{Rat(1)} {
        if (c != 0) num_ = {c};
    }

    static QRational q_power(long e); // q^e, e may be negative

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    QRational operator-() const;
    QRational operator+(const QRational& o) const;
    QRational operator-(const QRational& o) const;
    QRational operator*(const QRational& o) const;
    QRational operator/(const QRational& o) const;
    bool operator==(const QRational& o) const;
    bool operator!=(const QRational& o) const { return !(*this == o); }

    std::string str() const; // "(num)/(den)" with canonical polynomials

private:
    QPoly num_, den_;
};

struct JoyceParams {
    long self_pairing = 2; // Mukai self-pairing alpha.alpha
    long n = 1;            // positive multiplicity
};

// I(GL(n)) under q = l^{-1}: q^{-n^2} (1-q)(1-q^2)...(1-q^n).
QRational motivic_gl(long n);

// Ordered-composition Joyce sum for n*alpha with moduli measure
// 1/I(GL(k)) per part; weight (-1)^{m-1}/m over compositions of length m.
QRational joyce_sum(const JoyceParams& p, long composition_cap = 16);

// Closed form q^{n^2} / (n (1-q^n)).
QRational joyce_closed(long n);

// Builds F(x) = sum_m x^m / ((1-q)...(1-q^m)) and verifies
// F(x) - F(qx) = x F(x) and [x^n] log F = 1/(n(1-q^n)) for n <= n_max.
IdentityReport qexp_recursion_check(int n_max);

// J_k = sum_{n>0} q^{n^2} / (n^{k+1} (1-q^n)), truncated at `order`.
QSeries jk_series(int k, const Rat& order);

/* The two readings of the curly-J definition. They differ by a factor of
 * two on the bilateral sum; HALF_SUM is the one that satisfies the duality
 * identity for k = 2, 4, 6 and is recorded as canonical. */
enum class CurlyNorm { HALF_SUM, DOUBLE_SUM };
CurlyNorm canonical_curly_norm();

QSeries curly_jk_series(int k, const Rat& order,
                        CurlyNorm norm = canonical_curly_norm());

// D^{k-1} curlyJ_{k-2} + curlyJ_{-k} = -(B_k/2k) E_k, coefficientwise.
IdentityReport duality_check(int k, const Rat& order,
                             CurlyNorm norm = canonical_curly_norm());

// Coefficient of (q-1)^{-1} at q = 1; error beyond a simple pole.
Rat residue_at_one(const QRational& f);

// sum_{n<=n_max} residue(joyce_closed(n))/n^k = -sum 1/n^{k+2}, exactly.
Rat zeta_residue_partial(int k, long n_max);

} // namespace qmock
