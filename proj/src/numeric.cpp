#include "qmock/numeric.hpp"

#include <algorithm>

namespace qmock {

EvalCtx EvalCtx::make(int digits) {
    if (digits < 10) throw rejected_input("precision must be at least 10 digits");
    EvalCtx ctx{digits, 0, Real(64)};
    ctx.bits = static_cast<mpfr_prec_t>(digits * 3.3219280948873626) + 96;
    ctx.eps = Real::pow10(-(digits + 10), ctx.bits);
    return ctx;
}

Complex to_complex(const Cyclo& c, const EvalCtx& ctx) {
    const int n = c.order();
    // zeta^j for j < phi(N), built incrementally from the principal root.
    const Real two_pi_over_n = Real::pi(ctx.bits) * 2L / static_cast<long>(n);
    const Complex zeta(two_pi_over_n.cos(), two_pi_over_n.sin());
    Complex acc = Complex::zero(ctx.bits);
    Complex zj = Complex::one(ctx.bits);
    const auto& coeffs = c.coeffs();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != 0) acc = acc + zj * Real::of(coeffs[j], ctx.bits);
        if (j + 1 < coeffs.size()) zj = zj * zeta;
    }
    return acc;
}

Complex to_complex(const Cyclo& c, int digits) {
    return to_complex(c, EvalCtx::make(digits));
}

void require_upper_half(const Complex& tau) {
    if (!(tau.im.to_double() > 1e-3))
        throw domain_error("tau must satisfy Im tau > 1e-3");
}

Complex qs_eval(const QSeries& s, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    const long d = s.lattice();
    // wq = e^{2 pi i tau / d}
    const Real two_pi = Real::pi(ctx.bits) * 2L;
    const Complex expo(-(two_pi * tau.im) / d, (two_pi * tau.re) / d);
    const Complex wq = expo.exp();
    Complex acc = Complex::zero(ctx.bits);
    bool have_cur = false;
    long long cur_slot = 0;
    Complex cur = Complex::one(ctx.bits);
    for (const auto& [k, c] : s.terms()) {
        if (!have_cur) {
            cur = wq.pow_int(k);
            cur_slot = k;
            have_cur = true;
        } else if (k != cur_slot) {
            cur = cur * wq.pow_int(k - cur_slot);
            cur_slot = k;
        }
        acc = acc + cur * to_complex(c, ctx);
    }
    return acc;
}

Real qs_eval_tail(const QSeries& s, const Complex& tau, const EvalCtx& ctx) {
    if (!s.truncation().finite) return Real(ctx.bits); // exact: zero tail
    const Real two_pi = Real::pi(ctx.bits) * 2L;
    const Real logq = -(two_pi * tau.im); // log |q|
    return (logq * Real::of(s.truncation().value, ctx.bits)).exp();
}

Real beta_fn(const Real& x) {
    if (x.sign() < 0) throw domain_error("beta_fn needs x >= 0");
    return (Real::pi(x.prec()) * x).sqrt().erfc();
}

Real e_fn(const Real& z) {
    return (Real::pi(z.prec()).sqrt() * z).erf();
}

Complex exp_pi_i(const Complex& x, const EvalCtx& ctx) {
    const Real pi = Real::pi(ctx.bits);
    return Complex(-(pi * x.im), pi * x.re).exp();
}

namespace {

bool tiny(const Real& mag, const Real& eps) { return mag < eps; }

} // namespace

Complex eta_num(const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    const Complex q = exp_pi_i(tau * 2L, ctx);
    Complex prod = Complex::one(ctx.bits);
    Complex qn = Complex::one(ctx.bits);
    for (int n = 1;; ++n) {
        qn = qn * q;
        prod = prod * (Complex::one(ctx.bits) - qn);
        if (tiny(qn.abs(), ctx.eps)) break;
        if (n > 100000) throw accuracy_error("eta product did not converge");
    }
    return exp_pi_i(tau / 12L, ctx) * prod;
}

Complex theta_num(int i, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    if (i < 1 || i > 3) throw rejected_input("theta index must be 1, 2 or 3");
    const Complex w = exp_pi_i(tau, ctx);  // e^{pi i tau}
    const Complex w2 = w * w;
    Complex acc = Complex::zero(ctx.bits);
    if (i == 3) {
        // 2 sum_{n>=0} w^{(n+1/2)^2}; ratio between steps is w^{2n+2}.
        Complex t = exp_pi_i(tau / 4L, ctx);
        Complex step = w2;
        for (int n = 0;; ++n) {
            acc = acc + t;
            if (tiny(t.abs(), ctx.eps)) break;
            t = t * step;
            step = step * w2;
            if (n > 100000) throw accuracy_error("theta3 sum did not converge");
        }
        return acc * 2L;
    }
    acc = Complex::one(ctx.bits);
    Complex t = w; // w^{n^2} at n=1
    Complex step = w * w2;
    for (int n = 1;; ++n) {
        Complex term = t * 2L;
        if (i == 2 && (n % 2)) term = -term;
        acc = acc + term;
        if (tiny(t.abs(), ctx.eps)) break;
        t = t * step;      // w^{(n+1)^2} = w^{n^2} w^{2n+1}
        step = step * w2;
        if (n > 100000) throw accuracy_error("theta sum did not converge");
    }
    return acc;
}

Complex e2_num(const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    // 1 - 24 sum_{k>=1} k q^k / (1 - q^k)
    const Complex q = exp_pi_i(tau * 2L, ctx);
    Complex acc = Complex::zero(ctx.bits);
    Complex qk = Complex::one(ctx.bits);
    for (long k = 1;; ++k) {
        qk = qk * q;
        acc = acc + (qk / (Complex::one(ctx.bits) - qk)) * k;
        if (tiny(qk.abs() * k, ctx.eps)) break;
        if (k > 100000) throw accuracy_error("E2 sum did not converge");
    }
    return Complex::one(ctx.bits) - acc * 24L;
}

Complex theta_z_num(const Complex& z, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    // sum over nu = j + 1/2 and nu = -(j + 1/2)
    const Complex half(Real::of(0.5, ctx.bits), Real(ctx.bits));
    Complex acc = Complex::zero(ctx.bits);
    int quiet = 0;
    for (long j = 0;; ++j) {
        const Complex nu = Complex(Real::of(j, ctx.bits), Real(ctx.bits)) + half;
        Real worst(ctx.bits);
        for (int sgn : {1, -1}) {
            const Complex nv = (sgn > 0) ? nu : -nu;
            // e^{pi i nu^2 tau + 2 pi i nu (z + 1/2)}
            const Complex ex = nv * nv * tau + nv * (z + half) * 2L;
            const Complex term = exp_pi_i(ex, ctx);
            acc = acc + term;
            const Real m = term.abs();
            if (worst < m) worst = m;
        }
        if (tiny(worst, ctx.eps)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (j > 100000) throw accuracy_error("theta(z;tau) sum did not converge");
    }
    return acc;
}

Complex mu_num(const Complex& u, const Complex& v, const Complex& tau,
               const EvalCtx& ctx) {
    require_upper_half(tau);
    const Complex th = theta_z_num(v, tau, ctx);
    const Real pole_floor = Real::pow10(-20, ctx.bits);
    if (th.abs() < pole_floor)
        throw pole_error("v lies on (or too near) the lattice Z tau + Z");
    const Complex one = Complex::one(ctx.bits);
    auto denom = [&](long n) {
        // 1 - e^{2 pi i n tau + 2 pi i u}
        const Complex d = one - exp_pi_i((tau * n + u) * 2L, ctx);
        if (d.abs() < pole_floor)
            throw pole_error("u lies on (or too near) the lattice Z tau + Z");
        return d;
    };
    // n and -n paired, as in the order-two evaluations.
    Complex acc = one / denom(0);
    int quiet = 0;
    for (long n = 1;; ++n) {
        // (-1)^n e^{pi i (n^2 + n) tau + 2 pi i n v} / (1 - e^{2 pi i n tau + 2 pi i u})
        const Complex tp =
            exp_pi_i(tau * (n * n + n) + v * (2 * n), ctx) / denom(n);
        const Complex tm =
            exp_pi_i(tau * (n * n - n) - v * (2 * n), ctx) / denom(-n);
        Complex pair = tp + tm;
        if (n % 2) pair = -pair;
        acc = acc + pair;
        if (tiny(tp.abs(), ctx.eps) && tiny(tm.abs(), ctx.eps)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (n > 100000) throw accuracy_error("mu sum did not converge");
    }
    return exp_pi_i(u, ctx) / th * acc;
}

Complex r_num(const Complex& u, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    const Real y = tau.im;
    const Real a = u.im / y;
    const Real sqrt2y = (y * 2L).sqrt();
    const Real sqrt_pi = Real::pi(ctx.bits).sqrt();
    Complex acc = Complex::zero(ctx.bits);
    int quiet = 0;
    for (long j = 0;; ++j) {
        Real worst(ctx.bits);
        for (int sgn : {1, -1}) {
            const Real nu = Real::of(2 * j + 1, ctx.bits) / 2L * sgn;
            // sign(nu) - E((nu + a) sqrt(2y)) computed as a stable erfc
            const Real x = (nu + a) * sqrt2y;
            Real f = (sqrt_pi * x * sgn).erfc() * sgn;
            // (-1)^{nu - 1/2}: exponent j for nu > 0, j+1 for the mirror
            const bool odd = (sgn > 0) ? (j % 2 != 0) : (j % 2 == 0);
            // e^{-pi i nu^2 tau - 2 pi i nu u}
            Complex term = exp_pi_i(-(tau * ((2 * j + 1) * (2 * j + 1)) / 4L +
                                      u * (2L * sgn * (2 * j + 1)) / 2L),
                                    ctx) *
                           f;
            if (odd) term = -term;
            acc = acc + term;
            const Real m = term.abs();
            if (worst < m) worst = m;
        }
        if (tiny(worst, ctx.eps)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (j > 100000) throw accuracy_error("R sum did not converge");
    }
    return acc;
}

Complex mu_tilde_num(const Complex& u, const Complex& v, const Complex& tau,
                     const EvalCtx& ctx) {
    const Complex r = r_num(u - v, tau, ctx);
    return mu_num(u, v, tau, ctx) + r.mul_i() / 2L;
}

Complex appell_num(int i, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    if (i < 1 || i > 3) throw rejected_input("appell index must be 1, 2 or 3");
    const Complex one = Complex::one(ctx.bits);
    Complex acc = Complex::zero(ctx.bits);
    for (long n = 1;; ++n) {
        const Complex en = exp_pi_i(tau * (2 * n), ctx); // e^{2 pi i n tau}
        const Complex dn = one - en;
        Complex term = Complex::zero(ctx.bits);
        if (i == 3) {
            term = exp_pi_i(tau * (n * n + n), ctx) * (one + en) / (dn * dn);
        } else {
            term = exp_pi_i(tau * (n * n + 2 * n), ctx) / (dn * dn);
            if (i == 2 && (n % 2)) term = -term;
        }
        acc = acc + term;
        if (tiny(term.abs(), ctx.eps)) break;
        if (n > 100000) throw accuracy_error("appell sum did not converge");
    }
    return acc;
}

Complex h_num(int i, const Complex& tau, const EvalCtx& ctx) {
    const Complex e2 = e2_num(tau, ctx);
    const Complex th = theta_num(i, tau, ctx);
    const Complex a = appell_num(i, tau, ctx);
    Complex num = Complex::zero(ctx.bits);
    if (i == 3)
        num = e2 - Complex::one(ctx.bits) - a * 24L;
    else
        num = e2 + Complex::of(2.0, 0.0, ctx.bits) - a * 48L;
    return num / (th * 24L);
}

Complex r_i_series_num(int i, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    if (i < 1 || i > 3) throw rejected_input("R_i index must be 1, 2 or 3");
    const Real y = tau.im;
    const Real sqrt2y = (y * 2L).sqrt();
    Complex acc = Complex::zero(ctx.bits);
    if (i == 3) {
        // sum over nu in Z + 1/2, folded to nu > 0 (both signs agree)
        for (long j = 0;; ++j) {
            const Real nu = Real::of(2 * j + 1, ctx.bits) / 2L;
            const Complex term =
                exp_pi_i(-(tau * ((2 * j + 1) * (2 * j + 1)) / 4L), ctx) *
                (beta_fn(y * 2L * nu * nu) * nu);
            acc = acc + term;
            if (tiny(term.abs(), ctx.eps)) break;
            if (j > 100000) throw accuracy_error("R_3 series did not converge");
        }
    } else {
        for (long n = 1;; ++n) {
            Complex term = exp_pi_i(-(tau * (n * n)), ctx) *
                           (beta_fn(Real::of(2 * n * n, ctx.bits) * y) *
                            Real::of(n, ctx.bits));
            if (i == 2 && (n % 2)) term = -term;
            acc = acc + term;
            if (tiny(term.abs(), ctx.eps)) break;
            if (n > 100000) throw accuracy_error("R_i series did not converge");
        }
    }
    const Complex th_conj = theta_num(i, tau, ctx).conj();
    const Real two_pi = Real::pi(ctx.bits) * 2L;
    return acc - th_conj / (two_pi * sqrt2y);
}

namespace {

/* tanh-sinh rule on [a, b] for a complex-valued analytic integrand;
 * doubles the node density until the estimate stabilizes at eps. */
Complex tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a,
                  const Real& b, const Real& eps, const EvalCtx& ctx) {
    const Real half_pi = Real::pi(ctx.bits) / 2L;
    const Real mid = (a + b) / 2L;
    const Real rad = (b - a) / 2L;
    auto node = [&](const Real& t, Real& x, Real& w) {
        // x = tanh((pi/2) sinh t), w = (pi/2) cosh t / cosh^2((pi/2) sinh t)
        const Real s = (t.exp() - (-t).exp()) / 2L;        // sinh t
        const Real c = (t.exp() + (-t).exp()) / 2L;        // cosh t
        const Real g = half_pi * s;
        const Real ge = g.exp(), gei = (-g).exp();
        const Real ch = (ge + gei) / 2L;
        x = (ge - gei) / (ge + gei);
        w = half_pi * c / (ch * ch);
    };
    Complex sum = f(mid) * half_pi; // t = 0 node: x = 0, w = pi/2
    Real h = Real::of(1L, ctx.bits);
    Complex prev = Complex::zero(ctx.bits);
    for (int level = 0; level < 11; ++level) {
        // add nodes at odd multiples of the current h
        const long stride = (level == 0) ? 1 : 2;
        for (long k = 1;; k += stride) {
            const Real t = h * k;
            Real x(ctx.bits), w(ctx.bits);
            node(t, x, w);
            if (!(w > Real(ctx.bits))) break; // weights underflowed
            const Complex contrib =
                (f(mid + rad * x) + f(mid - rad * x)) * w;
            sum = sum + contrib;
            if (tiny(contrib.abs(), eps) && tiny(w, eps)) break;
            if (k > 100000) throw accuracy_error("tanh-sinh node overflow");
        }
        const Complex estimate = sum * h * rad;
        if (level > 1) {
            const Real diff = (estimate - prev).abs();
            const Real scale = estimate.abs() + Real::of(1L, ctx.bits);
            if (diff < scale * eps) return estimate;
        }
        prev = estimate;
        h = h / 2L;
    }
    throw accuracy_error("quadrature failed to reach tolerance");
}

} // namespace

Complex r_i_quadrature(int i, const Complex& tau, const EvalCtx& ctx) {
    require_upper_half(tau);
    if (i < 1 || i > 3) throw rejected_input("R_i index must be 1, 2 or 3");
    const Real y = tau.im;
    const long c_i = (i == 3) ? 0 : 1; // theta_i constant term
    // integrand along z = tau + i t: (theta_i - c_i)(tau + it) (2y + t)^{-3/2}
    auto f = [&](const Real& t) {
        const Complex z(tau.re, tau.im + t);
        Complex th = theta_num(i, z, ctx);
        if (c_i != 0) th = th - Complex::one(ctx.bits);
        const Real w = (y * 2L + t).pow_si(-3).sqrt(); // (2y+t)^{-3/2}
        return th * w;
    };
    // The quadrature has its own target: the dual-route comparison asks for
    // ~1e-10 agreement, so cap the tolerance work below the context's eps.
    const int quad_digits = std::min(ctx.digits - 5, 26);
    const Real quad_eps = Real::pow10(-quad_digits, ctx.bits);
    // Decay rate of theta_i - c_i is e^{-pi (y+t)/4} at worst (i = 3).
    const double rate = (i == 3) ? 0.25 : 1.0;
    const double tcut_d = (quad_digits + 8) * 2.302585 / (3.14159265 * rate);
    // Geometric segments resolve the fast variation near t = 0.
    Complex total = Complex::zero(ctx.bits);
    Real lo = Real(ctx.bits);
    double hi = 2.0;
    while (true) {
        const Real hi_r = Real::of(std::min(hi, tcut_d), ctx.bits);
        total = total + tanh_sinh(f, lo, hi_r, quad_eps, ctx);
        if (hi >= tcut_d) break;
        lo = hi_r;
        hi *= 3.0;
    }
    // Constant-term tail integrates in closed form: c_i * 2 / sqrt(2y).
    if (c_i != 0)
        total = total + Complex(Real::of(2L * c_i, ctx.bits) / (y * 2L).sqrt(),
                                Real(ctx.bits));
    // The ray parametrization contributes dz = i dt; then
    // R_i = (1/4 pi i) conj(integral) = -conj(total)/(4 pi).
    return -(total.conj()) / (Real::pi(ctx.bits) * 4L);
}

Complex h_tilde_num(int i, const Complex& tau, const EvalCtx& ctx) {
    return h_num(i, tau, ctx) + r_i_series_num(i, tau, ctx);
}

namespace {

Complex g_like(const Complex& tau, const EvalCtx& ctx, bool completed) {
    const Complex tau2 = tau * 2L;
    auto part = [&](int i) {
        return completed ? h_tilde_num(i, tau2, ctx) : h_num(i, tau2, ctx);
    };
    const Complex a = part(1) * theta_num(1, tau2, ctx);
    const Complex b = part(3) * theta_num(3, tau2, ctx);
    const Complex t1 = theta_num(1, tau, ctx);
    const Complex t2 = theta_num(2, tau, ctx);
    return -(a + b) / 2L + (t1.pow_int(4) + t2.pow_int(4)) / 96L;
}

} // namespace

Complex g_num(const Complex& tau, const EvalCtx& ctx) {
    return g_like(tau, ctx, false);
}

Complex g_tilde_num(const Complex& tau, const EvalCtx& ctx) {
    return g_like(tau, ctx, true);
}

Complex shadow_rhs(const Complex& tau, const EvalCtx& ctx) {
    const Complex tau2 = tau * 2L;
    const Complex t1 = theta_num(1, tau2, ctx);
    const Complex t3 = theta_num(3, tau2, ctx);
    const Real y = tau.im;
    const Real pi = Real::pi(ctx.bits);
    const Real den = pi * pi * 64L * y.pow_si(3).sqrt();
    return -(t1 * t1.conj() + t3 * t3.conj()) / den;
}

Complex sderiv_fd(const std::function<Complex(const Complex&)>& f,
                  const EvalCtx& ctx) {
    const Real h = Real::pow10(-(ctx.digits / 3), ctx.bits);
    const Complex hp(h, Real(ctx.bits));
    const Complex diff = f(hp) - f(-hp);
    // (f(h)-f(-h)) / (2h * 2 pi i) = -i (f(h)-f(-h)) / (4 pi h)
    return -(diff.mul_i()) / (Real::pi(ctx.bits) * 4L * h);
}

Complex dbar_fd(const std::function<Complex(const Complex&)>& f,
                const Complex& tau, const Real& step, const EvalCtx& ctx) {
    if (!(step > Real(ctx.bits)) || step > tau.im / 2L)
        throw accuracy_error("finite-difference step unusable at this point");
    const Complex dx(step, Real(ctx.bits));
    const Complex dy(Real(ctx.bits), step);
    const Complex px = (f(tau + dx) - f(tau - dx)) / (step * 2L);
    const Complex py = (f(tau + dy) - f(tau - dy)) / (step * 2L);
    // d/dtau-bar = (1/2)(d/dx + i d/dy); Dbar = (1/2 pi i) d/dtau-bar
    const Complex dtb = (px + py.mul_i()) / 2L;
    return -(dtb.mul_i()) / (Real::pi(ctx.bits) * 2L);
}

} // namespace qmock
