#pragma once

#include <mpfr.h>

#include <string>

#include "qmock/rational.hpp"

namespace qmock {

/* Arbitrary-precision real, RAII over mpfr_t. Precision is explicit at
 * construction; binary operations produce results at the wider operand
 * precision and round honestly there. */
class Real {
public:
    explicit Real(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(double d, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Real of(long n, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& q, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int sig_digits = 17) const;
    std::string str_sci(int sig_digits = 3) const; // "1.23e-17"

#define QMOCK_REAL_BINOP(op, fn)                                  \
    friend Real operator op(const Real& a, const Real& b) {       \
        Real r(std::max(a.prec(), b.prec()));                     \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                          \
        return r;                                                 \
    }
    QMOCK_REAL_BINOP(+, mpfr_add)
    QMOCK_REAL_BINOP(-, mpfr_sub)
    QMOCK_REAL_BINOP(*, mpfr_mul)
    QMOCK_REAL_BINOP(/, mpfr_div)
#undef QMOCK_REAL_BINOP

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

#define QMOCK_REAL_FN(name, fn)        \
    Real name() const {                \
        Real r(prec());                \
        fn(r.v_, v_, MPFR_RNDN);       \
        return r;                      \
    }
    QMOCK_REAL_FN(abs, mpfr_abs)
    QMOCK_REAL_FN(sqrt, mpfr_sqrt)
    QMOCK_REAL_FN(exp, mpfr_exp)
    QMOCK_REAL_FN(sin, mpfr_sin)
    QMOCK_REAL_FN(cos, mpfr_cos)
    QMOCK_REAL_FN(erf, mpfr_erf)
    QMOCK_REAL_FN(erfc, mpfr_erfc)
    QMOCK_REAL_FN(gamma, mpfr_gamma)
#undef QMOCK_REAL_FN

    Real pow_si(long e) const {
        Real r(prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    static Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    // 10^e at this value's precision (e may be negative).
    static Real pow10(long e, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

/* Complex number over Real; principal-branch sqrt (argument in (-pi, pi]). */
struct Complex {
    Real re, im;

    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(Real(re.prec())) {}

    static Complex zero(mpfr_prec_t bits) { return Complex(Real(bits), Real(bits)); }
    static Complex one(mpfr_prec_t bits) {
        return Complex(Real::of(1L, bits), Real(bits));
    }
    static Complex i_unit(mpfr_prec_t bits) {
        return Complex(Real(bits), Real::of(1L, bits));
    }
    static Complex of(double x, double y, mpfr_prec_t bits) {
        return Complex(Real::of(x, bits), Real::of(y, bits));
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& s) {
        return Complex(a.re * s, a.im * s);
    }
    friend Complex operator*(const Complex& a, long s) {
        return Complex(a.re * s, a.im * s);
    }
    friend Complex operator/(const Complex& a, const Real& s) {
        return Complex(a.re / s, a.im / s);
    }
    friend Complex operator/(const Complex& a, long s) {
        return Complex(a.re / s, a.im / s);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real n = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / n,
                       (a.im * b.re - a.re * b.im) / n);
    }

    Complex mul_i() const { return Complex(-im, re); }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { return abs2().sqrt(); }

    // e^z = e^{re} (cos im + i sin im)
    Complex exp() const {
        const Real m = re.exp();
        return Complex(m * im.cos(), m * im.sin());
    }

    // Principal square root via half-angle; for z on the upper half plane
    // the result has positive real and imaginary parts.
    Complex sqrt() const;

    // z^{3/2} with the principal branch.
    Complex pow_3_2() const { return *this * sqrt(); }

    Complex pow_int(long e) const;

    std::string str(int sig_digits = 17) const {
        return re.str(sig_digits) + (im.sign() < 0 ? " - " : " + ") +
               im.abs().str(sig_digits) + "i";
    }
};

} // namespace qmock
