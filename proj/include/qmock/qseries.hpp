#pragma once

#include <map>
#include <optional>

#include "qmock/cyclo.hpp"

namespace qmock {

/* Truncation bound: exponents < value are fully determined; terms at or
 * above it are unknown (not zero). The infinite bound marks exactly known
 * series (constants, monomials, finite constructions). */
struct Trunc {
    bool finite = false;
    Rat value;

    static Trunc inf() { return Trunc{}; }
    static Trunc at(const Rat& v) { return Trunc{true, v}; }

    bool operator==(const Trunc& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    // Bound comparison with +infinity semantics.
    bool le(const Rat& r) const { return finite && value <= r; }
    bool gt(const Rat& r) const { return !finite || value > r; }
    static Trunc min(const Trunc& a, const Trunc& b) {
        if (!a.finite) return b;
        if (!b.finite) return a;
        return a.value <= b.value ? a : b;
    }
    Trunc plus(const Rat& r) const { return finite ? at(value + r) : inf(); }
    Trunc scaled(const Rat& s) const { return finite ? at(value * s) : inf(); }
    std::string str() const { return finite ? rat_str(value) : "inf"; }
};

/* Truncated formal Puiseux series in q with exponents on (1/d)Z and
 * coefficients in Q(zeta_N). Exponents are stored as integer slots k
 * meaning q^{k/d}; negative valuations are allowed. All stored
 * coefficients are nonzero and lie strictly below the truncation.
 *
 * Truncation is tracked through every operation; results never pretend
 * to know more than the inputs justify. */
class QSeries {
public:
    using Terms = std::map<long, Cyclo>;

    explicit QSeries(long lattice = 1, Trunc trunc = Trunc::inf(),
                     int coeff_order = Cyclo::kDefaultOrder);

    static QSeries zero(Trunc trunc = Trunc::inf(), long lattice = 1,
                        int coeff_order = Cyclo::kDefaultOrder);
    static QSeries constant(const Rat& c, int coeff_order = Cyclo::kDefaultOrder);
    static QSeries monomial(const Cyclo& c, const Rat& exponent);
    static QSeries monomial(const Rat& c, const Rat& exponent,
                            int coeff_order = Cyclo::kDefaultOrder);

    long lattice() const { return d_; }
    int coeff_order() const { return order_; }
    const Terms& terms() const { return t_; }
    Trunc truncation() const { return trunc_; }
    bool is_zero() const { return t_.empty(); }

    Rat exponent_of(long slot) const { return Rat(slot, d_); }

    // Minimum stored exponent; for an empty series this is the truncation
    // (the earliest exponent at which a hidden term could live).
    Rat valuation() const;

    // Set a coefficient during construction (must lie below truncation).
    void set_coeff(const Rat& exponent, const Cyclo& c);
    void set_coeff(const Rat& exponent, const Rat& c);

    // Coefficient of q^r; zero if absent, error if r >= truncation.
    Cyclo coeff(const Rat& r) const;
    // Coefficient lookup without the range check (used by comparisons).
    Cyclo coeff_unchecked(const Rat& r) const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rat& s) const;
    QSeries operator*(const Cyclo& s) const;

    QSeries div(const QSeries& o) const;
    QSeries pow_int(long k) const; // k >= 0, or k < 0 via div
    QSeries log() const;           // requires constant term 1
    QSeries exp() const;           // requires valuation > 0

    // D = (1/2 pi i) d/dtau: c q^r -> r c q^r.
    QSeries derive() const;

    // tau -> s*tau + b: c q^r -> c e^{2 pi i b r} q^{s r}. The phase must
    // be a power of zeta_N, i.e. b*r*N integral for every stored and
    // representable exponent.
    QSeries subst_tau(const Rat& scale, const Rat& shift) const;

    // Multiply by q^r.
    QSeries shift_exponent(const Rat& r) const;

    // Forget terms at or above the (tighter) truncation t.
    QSeries truncated(const Trunc& t) const;

    // Refine the exponent lattice to a multiple of the current one.
    QSeries refined(long new_lattice) const;

    // Drop the unused lattice refinement (gcd of slots and d).
    QSeries normalized_lattice() const;

    bool all_coeffs_rational() const;
    bool has_fractional_exponent() const;

    // First exponent below `order` (and below both truncations) where the
    // two series disagree; nullopt when they agree on that range.
    struct Mismatch {
        Rat exponent;
        Cyclo lhs, rhs;
    };
    static std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b,
                                                  const Rat& order);

    std::string str(size_t max_terms = 12) const;

private:
    void insert_nonzero(long slot, const Cyclo& c);
    static void unify(QSeries& a, QSeries& b);
    void check_degenerate(const Rat& result_val) const;

    long d_;
    Terms t_;
    Trunc trunc_;
    int order_;
};

} // namespace qmock
