#include "qmock/hp.hpp"

namespace qmock {

std::string Real::str(int sig_digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", sig_digits, v_);
    return buf;
}

std::string Real::str_sci(int sig_digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", sig_digits - 1, v_);
    return buf;
}

Complex Complex::sqrt() const {
    const mpfr_prec_t bits = prec();
    if (im.sign() == 0) {
        if (re.sign() >= 0) return Complex(re.sqrt(), Real(bits));
        return Complex(Real(bits), (-re).sqrt()); // branch: +i sqrt(|re|)
    }
    // sqrt(z) = sqrt((|z|+re)/2) + i sign(im) sqrt((|z|-re)/2)
    const Real r = abs();
    const Real u = ((r + re) / 2L).sqrt();
    Real v = ((r - re) / 2L).sqrt();
    if (im.sign() < 0) v = -v;
    return Complex(u, v);
}

Complex Complex::pow_int(long e) const {
    if (e < 0) return Complex::one(prec()) / pow_int(-e);
    Complex acc = Complex::one(prec());
    Complex base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

} // namespace qmock
