#pragma once

#include <vector>

#include "qmock/rational.hpp"

namespace qmock {

/* Element of the cyclotomic field Q(zeta_N), represented as the canonical
 * residue modulo the N-th cyclotomic polynomial Phi_N: a coefficient vector
 * of length phi(N) = deg Phi_N over Q. zeta_N embeds as the principal root
 * e^{2 pi i/N}. Values are immutable after construction; arithmetic is a
 * field (Phi_N is irreducible), so every nonzero element has an inverse. */
class Cyclo {
public:
    static constexpr int kDefaultOrder = 48;

    Cyclo() : Cyclo(kDefaultOrder) {}
    explicit Cyclo(int order);
    Cyclo(const Rat& value, int order);

    static Cyclo from_rat(const Rat& value, int order = kDefaultOrder);
    static Cyclo integer(long value, int order = kDefaultOrder);
    // zeta_N^k, any integer k (reduced mod N, then mod Phi_N).
    static Cyclo zeta_pow(long k, int order = kDefaultOrder);

    // Coefficients of Phi_N, ascending degree (integers, stored exactly).
    static const std::vector<Rat>& cyclotomic_poly(int order);
    static int phi(int order);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rat rational_value() const;

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& s) const;

    // Field inverse; throws division_by_zero on 0.
    Cyclo inverse() const;
    // Complex conjugation, zeta -> zeta^{N-1}.
    Cyclo conj() const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Short human-readable form ("3/2", "z48^12", "1 - 2*z48^3", ...).
    std::string str() const;

private:
    void check_same(const Cyclo& o) const;

    int order_;
    std::vector<Rat> c_; // length phi(order_)
};

} // namespace qmock
