#include "qmock/qseries.hpp"

#include <numeric>
#include <sstream>

namespace qmock {

namespace {

// Largest slot with slot/d < bound (slots are integers).
long max_slot_below(const Rat& bound, long d) {
    const Rat scaled = bound * d;
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return z.get_si() - 1; // ceil(bound*d) - 1

}

long lcm_ll(long a, long b) {
    return a / std::gcd(a, b) * static_cast<long>(b);
}

} // namespace

QSeries::QSeries(long lattice, Trunc trunc, int coeff_order)
    : d_(lattice), trunc_(trunc), order_(coeff_order) {
    if (lattice < 1) throw rejected_input("lattice denominator must be positive");
}

QSeries QSeries::zero(Trunc trunc, long lattice, int coeff_order) {
    return QSeries(lattice, trunc, coeff_order);
}

QSeries QSeries::constant(const Rat& c, int coeff_order) {
    QSeries s(1, Trunc::inf(), coeff_order);
    if (c != 0) s.t_.emplace(0, Cyclo(c, coeff_order));
    return s;
}

QSeries QSeries::monomial(const Cyclo& c, const Rat& exponent) {
    QSeries s(static_cast<long>(exponent.get_den().get_si()), Trunc::inf(), c.order());
    if (!c.is_zero()) s.t_.emplace(exponent.get_num().get_si(), c);
    return s;
}

QSeries QSeries::monomial(const Rat& c, const Rat& exponent, int coeff_order) {
    return monomial(Cyclo(c, coeff_order), exponent);
}

Rat QSeries::valuation() const {
    if (!t_.empty()) return Rat(t_.begin()->first, d_);
    if (trunc_.finite) return trunc_.value;
    throw rejected_input("valuation of the exact zero series");
}

void QSeries::insert_nonzero(long slot, const Cyclo& c) {
    if (!c.is_zero()) t_.emplace(slot, c);
}

void QSeries::set_coeff(const Rat& exponent, const Cyclo& c) {
    if (trunc_.le(exponent))
        throw exponent_out_of_range("coefficient at/above truncation");
    const long den = static_cast<long>(exponent.get_den().get_si());
    if (d_ % den != 0) {
        *this = refined(lcm_ll(d_, den));
    }
    const long slot = static_cast<long>(exponent.get_num().get_si()) * (d_ / den);
    auto it = t_.find(slot);
    if (it != t_.end()) t_.erase(it);
    insert_nonzero(slot, c);
}

void QSeries::set_coeff(const Rat& exponent, const Rat& c) {
    set_coeff(exponent, Cyclo(c, order_));
}

Cyclo QSeries::coeff(const Rat& r) const {
    if (trunc_.le(r))
        throw exponent_out_of_range("exponent " + rat_str(r) + " is at/above truncation " +
                                    trunc_.str());
    return coeff_unchecked(r);
}

Cyclo QSeries::coeff_unchecked(const Rat& r) const {
    const Rat scaled = r * d_;
    if (!rat_is_integer(scaled)) return Cyclo(order_); // off-lattice: zero
    auto it = t_.find(scaled.get_num().get_si());
    if (it == t_.end()) return Cyclo(order_);
    return it->second;
}

QSeries QSeries::refined(long new_lattice) const {
    if (new_lattice == d_) return *this;
    if (new_lattice % d_ != 0)
        throw rejected_input("lattice refinement must be a multiple");
    const long f = new_lattice / d_;
    QSeries r(new_lattice, trunc_, order_);
    for (const auto& [k, c] : t_) r.t_.emplace(k * f, c);
    return r;
}

QSeries QSeries::normalized_lattice() const {
    if (t_.empty()) {
        QSeries r(1, trunc_, order_);
        return r;
    }
    long g = d_;
    for (const auto& [k, c] : t_) {
        g = std::gcd(g, k < 0 ? -k : k);
        if (g == 1) return *this;
    }
    QSeries r(static_cast<long>(d_ / g), trunc_, order_);
    for (const auto& [k, c] : t_) r.t_.emplace(k / g, c);
    return r;
}

void QSeries::unify(QSeries& a, QSeries& b) {
    if (a.d_ != b.d_) {
        const long l = static_cast<long>(lcm_ll(a.d_, b.d_));
        a = a.refined(l);
        b = b.refined(l);
    }
}

QSeries QSeries::operator-() const {
    QSeries r(d_, trunc_, order_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries a = *this, b = o;
    unify(a, b);
    QSeries r(a.d_, Trunc::min(a.trunc_, b.trunc_), order_);
    const bool bounded = r.trunc_.finite;
    const long lim = bounded ? max_slot_below(r.trunc_.value, a.d_) : 0;
    for (const auto& [k, c] : a.t_) {
        if (bounded && k > lim) continue;
        r.t_.emplace(k, c);
    }
    for (const auto& [k, c] : b.t_) {
        if (bounded && k > lim) continue;
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.insert_nonzero(k, c);
        } else {
            Cyclo s = it->second + c;
            r.t_.erase(it);
            r.insert_nonzero(k, s);
        }
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries a = *this, b = o;
    unify(a, b);
    // Exactly-zero operand: exactly-zero product.
    if ((a.t_.empty() && !a.trunc_.finite) || (b.t_.empty() && !b.trunc_.finite))
        return zero(Trunc::inf(), 1, order_);
    const Rat va = a.valuation(), vb = b.valuation();
    const Trunc tr = Trunc::min(a.trunc_.plus(vb), b.trunc_.plus(va));
    if (tr.le(va + vb) && !a.t_.empty() && !b.t_.empty())
        throw degenerate_result("product truncation collapses below its valuation");
    QSeries r(a.d_, tr, order_);
    if (a.t_.empty() || b.t_.empty()) return r;
    const bool bounded = tr.finite;
    const long lim = bounded ? max_slot_below(tr.value, a.d_) : 0;
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            const long k = ka + kb;
            if (bounded && k > lim) {
                break; // kb ascending: later kb only larger
            }
            Cyclo prod = ca * cb;
            auto it = r.t_.find(k);
            if (it == r.t_.end()) {
                r.insert_nonzero(k, prod);
            } else {
                Cyclo s = it->second + prod;
                r.t_.erase(it);
                r.insert_nonzero(k, s);
            }
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    return *this * Cyclo(s, order_);
}

QSeries QSeries::operator*(const Cyclo& s) const {
    // An exactly-known zero scalar kills the unknown tail as well.
    if (s.is_zero()) return zero(Trunc::inf(), 1, order_);
    QSeries r(d_, trunc_, order_);
    for (const auto& [k, c] : t_) r.insert_nonzero(k, c * s);
    return r;
}

QSeries QSeries::div(const QSeries& o) const {
    QSeries a = *this, b = o;
    unify(a, b);
    if (b.t_.empty())
        throw division_by_zero(b.trunc_.finite ? "divisor is zero to its truncation"
                                               : "division by the exact zero series");
    const long vb_slot = b.t_.begin()->first;
    const Rat vb(vb_slot, b.d_);
    if (a.t_.empty()) {
        if (!a.trunc_.finite) return zero(Trunc::inf(), 1, order_);
        return zero(Trunc::at(a.trunc_.value - vb), a.d_, order_);
    }
    const long va_slot = a.t_.begin()->first;
    const Rat va(va_slot, a.d_);
    // Error in a at >= T_a shows in the quotient at >= T_a - v_b; error in b
    // at >= T_b shows at >= v_a - v_b + (T_b - v_b).
    const Trunc tq = Trunc::min(a.trunc_.plus(-vb), b.trunc_.plus(va - 2 * vb));

    const Cyclo lead_inv = b.t_.begin()->second.inverse();
    const long vq_slot = va_slot - vb_slot;
    QSeries r(a.d_, tq, order_);

    long last_slot;
    if (tq.finite) {
        last_slot = max_slot_below(tq.value, a.d_);
        if (last_slot < vq_slot)
            throw degenerate_result("quotient truncation collapses below its valuation");
    } else {
        // Exact inputs: the quotient is only representable when division
        // terminates; try the polynomial range, then verify.
        last_slot = a.t_.rbegin()->first - vb_slot;
    }

    for (long k = vq_slot; k <= last_slot; ++k) {
        Cyclo acc = a.coeff_unchecked(Rat(k + vb_slot, a.d_));
        // Subtract sum_{i>0} b[vb+i] * r[k-i], walking the (usually sparse)
        // divisor rather than the dense quotient.
        for (auto itb = std::next(b.t_.begin()); itb != b.t_.end(); ++itb) {
            const long i = itb->first - vb_slot;
            if (i > k - vq_slot) break;
            auto itq = r.t_.find(k - i);
            if (itq == r.t_.end()) continue;
            acc = acc - itb->second * itq->second;
        }
        acc = acc * lead_inv;
        r.insert_nonzero(k, acc);
    }

    if (!tq.finite) {
        // Verify the exact division really terminated.
        QSeries back = r * b;
        if (first_mismatch(back, a, Rat(a.t_.rbegin()->first + 1, a.d_)).has_value() ||
            back.t_ != a.t_)
            throw rejected_input("non-terminating division of exactly-known series; "
                                 "truncate an input first");
    }
    return r;
}

QSeries QSeries::pow_int(long k) const {
    if (k < 0) return QSeries::constant(Rat(1), order_).div(pow_int(-k));
    QSeries acc = QSeries::constant(Rat(1), order_);
    QSeries base = *this;
    long e = k;
    // Truncations combine exactly as in repeated multiplication.
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

QSeries QSeries::derive() const {
    QSeries r(d_, trunc_, order_);
    for (const auto& [k, c] : t_) {
        if (k == 0) continue;
        r.insert_nonzero(k, c * Rat(k, d_));
    }
    return r;
}

QSeries QSeries::log() const {
    if (t_.empty() || t_.begin()->first != 0 ||
        !(t_.begin()->second == Cyclo(Rat(1), order_)))
        throw rejected_input("log requires constant term 1");
    if (!trunc_.finite)
        throw rejected_input("log of an exactly-known series; truncate the input first");
    // D(log a) = D(a)/a, then integrate termwise (log of the constant is 0).
    QSeries u = derive().div(*this);
    QSeries r(u.d_, u.trunc_, order_);
    for (const auto& [k, c] : u.t_) {
        r.insert_nonzero(k, c * Rat(u.d_, k));
    }
    return r;
}

QSeries QSeries::exp() const {
    if (!t_.empty() && t_.begin()->first <= 0)
        throw rejected_input("exp requires positive valuation");
    if (!trunc_.finite) {
        if (t_.empty()) return QSeries::constant(Rat(1), order_);
        throw rejected_input("exp of an exactly-known series; truncate the input first");
    }
    if (t_.empty() && trunc_.value <= 0)
        throw rejected_input("exp input truncated too early to verify its valuation");
    // r b_r = sum_{s>0} s a_s b_{r-s} (slot indices; the lattice scale cancels).
    QSeries r(d_, trunc_, order_);
    r.t_.emplace(0, Cyclo(Rat(1), order_));
    const long lim = max_slot_below(trunc_.value, d_);
    for (long k = 1; k <= lim; ++k) {
        Cyclo acc(order_);
        for (const auto& [s, as] : t_) {
            if (s > k) break;
            auto itb = r.t_.find(k - s);
            if (itb == r.t_.end()) continue;
            acc = acc + as * itb->second * Rat(s);
        }
        acc = acc * Rat(1, k);
        r.insert_nonzero(k, acc);
    }
    return r;
}

QSeries QSeries::subst_tau(const Rat& scale, const Rat& shift) const {
    if (scale <= 0) throw rejected_input("substitution scale must be positive");
    const long sq = static_cast<long>(scale.get_den().get_si());
    const long sp = scale.get_num().get_si();
    QSeries r(static_cast<long>(d_ * sq), trunc_.scaled(scale), order_);
    const long N = order_;
    for (const auto& [k, c] : t_) {
        Cyclo nc = c;
        if (shift != 0) {
            // e^{2 pi i b k/d} = zeta_N^{b k N / d}, which must be integral.
            Rat p = shift * Rat(k, d_) * N;
            if (!rat_is_integer(p))
                throw unsupported_substitution(
                    "phase e^{2 pi i * " + rat_str(shift * Rat(k, d_)) +
                    "} is not in Q(zeta_" + std::to_string(N) + ")");
            nc = nc * Cyclo::zeta_pow(p.get_num().get_si(), N);
        }
        if (!nc.is_zero()) r.t_.emplace(k * sp, nc);
    }
    return r.normalized_lattice();
}

QSeries QSeries::shift_exponent(const Rat& r) const {
    const long den = static_cast<long>(r.get_den().get_si());
    QSeries a = *this;
    if (a.d_ % den != 0) a = a.refined(static_cast<long>(lcm_ll(a.d_, den)));
    const long shift = static_cast<long>(r.get_num().get_si()) * (a.d_ / den);
    QSeries out(a.d_, a.trunc_.plus(r), order_);
    for (const auto& [k, c] : a.t_) out.t_.emplace(k + shift, c);
    return out;
}

QSeries QSeries::truncated(const Trunc& t) const {
    QSeries r(d_, Trunc::min(trunc_, t), order_);
    if (!r.trunc_.finite) {
        r.t_ = t_;
        return r;
    }
    const long lim = max_slot_below(r.trunc_.value, d_);
    for (const auto& [k, c] : t_) {
        if (k > lim) break;
        r.t_.emplace(k, c);
    }
    return r;
}

bool QSeries::all_coeffs_rational() const {
    for (const auto& [k, c] : t_)
        if (!c.is_rational()) return false;
    return true;
}

bool QSeries::has_fractional_exponent() const {
    for (const auto& [k, c] : t_)
        if (k % d_ != 0) return true;
    return false;
}

std::optional<QSeries::Mismatch> QSeries::first_mismatch(const QSeries& a0,
                                                         const QSeries& b0,
                                                         const Rat& order) {
    QSeries a = a0, b = b0;
    unify(a, b);
    Rat bound = order;
    if (a.trunc_.finite && a.trunc_.value < bound) bound = a.trunc_.value;
    if (b.trunc_.finite && b.trunc_.value < bound) bound = b.trunc_.value;
    const long lim = max_slot_below(bound, a.d_);
    auto ia = a.t_.begin(), ib = b.t_.begin();
    while (ia != a.t_.end() || ib != b.t_.end()) {
        long ka = ia != a.t_.end() ? ia->first : lim + 1;
        long kb = ib != b.t_.end() ? ib->first : lim + 1;
        const long k = std::min(ka, kb);
        if (k > lim) break;
        Cyclo ca = (ka == k) ? ia->second : Cyclo(a.order_);
        Cyclo cb = (kb == k) ? ib->second : Cyclo(b.order_);
        if (!(ca == cb)) return Mismatch{Rat(k, a.d_), ca, cb};
        if (ka == k) ++ia;
        if (kb == k) ++ib;
    }
    return std::nullopt;
}

std::string QSeries::str(size_t max_terms) const {
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& [k, c] : t_) {
        if (shown >= max_terms) {
            os << " + ...";
            break;
        }
        if (shown) os << " + ";
        os << "(" << c.str() << ")";
        if (k != 0) {
            os << "*q^(" << rat_str(Rat(k, d_)) << ")";
        }
        ++shown;
    }
    if (t_.empty()) os << "0";
    if (trunc_.finite) os << " + O(q^" << rat_str(trunc_.value) << ")";
    return os.str();
}

} // namespace qmock
