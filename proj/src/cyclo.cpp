#include "qmock/cyclo.hpp"

#include <map>
#include <sstream>

namespace qmock {

namespace {

using Poly = std::vector<Rat>; // ascending degree, trailing coeff nonzero

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// In-place remainder of a modulo monic divisor m.
void poly_mod(Poly& a, const Poly& m) {
    const int dm = degree(m);
    while (degree(a) >= dm) {
        const Rat lead = a.back();
        const int shift = degree(a) - dm;
        if (lead != 0) {
            for (int i = 0; i < dm; ++i)
                a[shift + i] -= lead * m[i];
        }
        a.pop_back();
        trim(a);
    }
}

// Exact quotient (remainder known to vanish), divisor monic.
Poly poly_div_exact(Poly a, const Poly& m) {
    const int dm = degree(m);
    Poly q(std::max(0, degree(a) - dm + 1), Rat(0));
    while (degree(a) >= dm) {
        const Rat lead = a.back();
        const int shift = degree(a) - dm;
        q[shift] = lead;
        for (int i = 0; i <= dm; ++i)
            a[shift + i] -= lead * m[i];
        trim(a);
    }
    return q;
}

const Poly& cyclotomic(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d, so divide out every proper divisor.
    Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

} // namespace

const std::vector<Rat>& Cyclo::cyclotomic_poly(int order) {
    if (order < 1) throw rejected_input("cyclotomic order must be >= 1");
    return cyclotomic(order);
}

int Cyclo::phi(int order) {
    return degree(cyclotomic_poly(order));
}

Cyclo::Cyclo(int order) : order_(order), c_(phi(order), Rat(0)) {}

Cyclo::Cyclo(const Rat& value, int order) : Cyclo(order) {
    c_[0] = value;
}

Cyclo Cyclo::from_rat(const Rat& value, int order) { return Cyclo(value, order); }

Cyclo Cyclo::integer(long value, int order) { return Cyclo(Rat(value), order); }

Cyclo Cyclo::zeta_pow(long k, int order) {
    const long n = order;
    long e = k % n;
    if (e < 0) e += n;
    Cyclo r(order);
    if (e < static_cast<long>(r.c_.size())) {
        r.c_[static_cast<size_t>(e)] = 1;
        return r;
    }
    Poly p(static_cast<size_t>(e) + 1, Rat(0));
    p.back() = 1;
    poly_mod(p, cyclotomic_poly(order));
    for (size_t i = 0; i < p.size(); ++i) r.c_[i] = p[i];
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw rejected_input("cyclotomic value is not rational");
    return c_[0];
}

void Cyclo::check_same(const Cyclo& o) const {
    if (order_ != o.order_)
        throw order_mismatch("cyclotomic order mismatch: " + std::to_string(order_) +
                             " vs " + std::to_string(o.order_));
}

Cyclo Cyclo::operator-() const {
    Cyclo r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same(o);
    Cyclo r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same(o);
    Cyclo r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same(o);
    Poly p = poly_mul(c_, o.c_);
    poly_mod(p, cyclotomic_poly(order_));
    Cyclo r(order_);
    for (size_t i = 0; i < p.size(); ++i) r.c_[i] = p[i];
    return r;
}

Cyclo Cyclo::operator*(const Rat& s) const {
    Cyclo r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero cyclotomic element");
    // Extended Euclid over Q[x]: s*a + t*Phi = gcd = const, so a^{-1} = s/gcd.
    Poly r0 = cyclotomic_poly(order_);
    Poly r1 = c_;
    trim(r1);
    Poly s0 = {};        // coefficient of a in r0 (Phi has none)
    Poly s1 = {Rat(1)};  // coefficient of a in r1
    while (degree(r1) > 0) {
        // Divide r0 by r1: r0 = q*r1 + r2.
        Poly q(std::max(0, degree(r0) - degree(r1) + 1), Rat(0));
        Poly rem = r0;
        const Rat lead_inv = 1 / r1.back();
        while (degree(rem) >= degree(r1) && !rem.empty()) {
            const Rat f = rem.back() * lead_inv;
            const int shift = degree(rem) - degree(r1);
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] -= f * r1[i];
            trim(rem);
        }
        trim(q);
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Poly s2 = poly_mul(q, s1);
        Poly s_new = s0;
        s_new.resize(std::max(s_new.size(), s2.size()), Rat(0));
        for (size_t i = 0; i < s2.size(); ++i) s_new[i] -= s2[i];
        trim(s_new);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_new);
    }
    if (r1.empty())
        throw division_by_zero("inverse of zero cyclotomic element");
    const Rat g_inv = 1 / r1[0];
    Cyclo out(order_);
    for (size_t i = 0; i < s1.size(); ++i) out.c_[i] = s1[i] * g_inv;
    return out;
}

Cyclo Cyclo::conj() const {
    // zeta^j -> zeta^{-j}; reduce each mapped power mod Phi_N.
    Cyclo r(order_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Cyclo m = zeta_pow(-static_cast<long>(j), order_);
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] += c_[j] * m.c_[i];
    }
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (order_ != o.order_) return false;
    return c_ == o.c_;
}

std::string Cyclo::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1 && i > 0);
        if (!unit) os << rat_str(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace qmock
