#include "qmock/laws.hpp"

#include <random>

namespace qmock {

namespace {

struct Values {
    Complex lhs, rhs;
};

using Eval = std::function<Values(const LawPoint&, const EvalCtx&)>;

struct Entry {
    LawSpec spec;
    Eval eval;
    int tol_abs_exp = 0; // 0: use the class default
};

Complex cnum(double re, double im, const EvalCtx& ctx) {
    return Complex::of(re, im, ctx.bits);
}

// Order-two points attached to index i: (1/2, tau/2), (1/2, (1+tau)/2),
// (tau/2, (1+tau)/2).
std::pair<Complex, Complex> order_two_pair(int i, const Complex& tau,
                                           const EvalCtx& ctx) {
    const Complex half = cnum(0.5, 0, ctx);
    const Complex t2 = tau / 2L;
    const Complex t2s = (tau + Complex::one(ctx.bits)) / 2L;
    if (i == 1) return {half, t2};
    if (i == 2) return {half, t2s};
    return {t2, t2s};
}

// Bilateral beta-damped sums of the derivative displays:
//   i=1: sum_{n in Z} |n| beta(2 y n^2) e^{-pi i n^2 tau}
//   i=2: the same with (-1)^n;  i=3: over nu in Z + 1/2.
Complex beta_bilateral_sum(int i, const Complex& tau, const EvalCtx& ctx) {
    const Real y = tau.im;
    Complex acc = Complex::zero(ctx.bits);
    if (i == 3) {
        for (long j = 0;; ++j) {
            const Real nu = Real::of(2 * j + 1, ctx.bits) / 2L;
            const Complex term =
                exp_pi_i(-(tau * ((2 * j + 1) * (2 * j + 1)) / 4L), ctx) *
                (beta_fn(y * 2L * nu * nu) * nu) * 2L;
            acc = acc + term;
            if (term.abs() < ctx.eps) break;
        }
        return acc;
    }
    for (long n = 1;; ++n) {
        Complex term = exp_pi_i(-(tau * (n * n)), ctx) *
                       (beta_fn(Real::of(2 * n * n, ctx.bits) * y) *
                        Real::of(2 * n, ctx.bits));
        if (i == 2 && (n % 2)) term = -term;
        acc = acc + term;
        if (term.abs() < ctx.eps) break;
    }
    return acc;
}

// Derivative displays for R at the three order-two arguments.
Complex r_deriv_rhs(int i, const Complex& tau, const EvalCtx& ctx) {
    const Real y = tau.im;
    const Real pi = Real::pi(ctx.bits);
    const Complex s = beta_bilateral_sum(i, tau, ctx);
    const Complex th_term =
        theta_num(i, tau, ctx).conj() / (pi * (y * 2L).sqrt());
    if (i == 3) return (s - th_term).mul_i();
    const Complex inner = s + cnum(0.5, 0, ctx) - th_term;
    const Complex e = exp_pi_i(tau / 4L, ctx);
    if (i == 1) return -(e * inner).mul_i();
    return e * inner;
}

// Derivative displays for mu at the three order-two argument pairs.
Complex mu_deriv_rhs(int i, const Complex& tau, const EvalCtx& ctx) {
    const Complex th = theta_num(i, tau, ctx);
    const Complex e2 = e2_num(tau, ctx);
    const Complex a = appell_num(i, tau, ctx);
    const Complex one = Complex::one(ctx.bits);
    if (i == 3) {
        const Complex inner = one - th.pow_int(4) * 3L - e2 + a * 24L;
        return inner / (th * 24L);
    }
    const Complex inner =
        -(one * 2L) + th * 6L + th.pow_int(4) * 3L - e2 + a * 48L;
    const Complex x = exp_pi_i(tau / 4L, ctx) / (th * 24L) * inner;
    if (i == 2) return -(x.mul_i()); // -i e^{pi i tau/4}/(24 th2) * inner
    return -x;
}

// mu_i / mu'_i as finite differences of mu~ in the s variable.
Complex mu_i_fd(int i, bool primed, const Complex& tau, const EvalCtx& ctx) {
    auto [u0, v0] = order_two_pair(i, tau, ctx);
    return sderiv_fd(
        [&](const Complex& s) {
            return primed ? mu_tilde_num(u0 + s, v0, tau, ctx)
                          : mu_tilde_num(u0, v0 + s, tau, ctx);
        },
        ctx);
}

// h~_i assembled from the mu_i finite differences.
Complex h_tilde_from_mu(int i, const Complex& tau, const EvalCtx& ctx) {
    const Complex mu_i = mu_i_fd(i, false, tau, ctx);
    const Complex th3 = theta_num(i, tau, ctx).pow_int(3);
    if (i == 1) return exp_pi_i(-(tau / 4L), ctx) * mu_i + th3 / 8L;
    if (i == 2)
        return -((exp_pi_i(-(tau / 4L), ctx) * mu_i).mul_i()) + th3 / 8L;
    return -mu_i - th3 / 8L;
}

const Complex& need(const std::optional<Complex>& c, const char* what) {
    if (!c) throw rejected_input(std::string("law needs point component ") + what);
    return *c;
}

std::vector<Entry> build_registry() {
    std::vector<Entry> laws;
    auto add = [&](const std::string& id, LawKind kind, int aux, Eval eval,
                   int tol_abs_exp = 0) {
        laws.push_back(Entry{LawSpec{id, kind, aux}, std::move(eval), tol_abs_exp});
    };

    add("MU_SYM", LawKind::ALGEBRAIC, 2, [](const LawPoint& p, const EvalCtx& c) {
        const Complex& u = need(p.u, "u");
        const Complex& v = need(p.v, "v");
        const Complex a = mu_num(u, v, p.tau, c);
        const Complex b = mu_num(v, u, p.tau, c);
        const Complex d = mu_num(-u, -v, p.tau, c);
        // report the worse of the two symmetry relations
        if ((a - b).abs() > (a - d).abs()) return Values{a, b};
        return Values{a, d};
    });

    add("MU_TILDE_T", LawKind::ALGEBRAIC, 2,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex& u = need(p.u, "u");
            const Complex& v = need(p.v, "v");
            const Complex lhs =
                mu_tilde_num(u, v, p.tau + Complex::one(c.bits), c);
            const Complex rhs =
                exp_pi_i(cnum(-0.25, 0, c), c) * mu_tilde_num(u, v, p.tau, c);
            return Values{lhs, rhs};
        });

    add("MU_TILDE_S", LawKind::ALGEBRAIC, 2,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex& u = need(p.u, "u");
            const Complex& v = need(p.v, "v");
            const Complex mtau = -(Complex::one(c.bits) / p.tau);
            const Complex lhs = mu_tilde_num(u / p.tau, v / p.tau, mtau, c);
            const Complex w = u - v;
            const Complex phase =
                exp_pi_i(cnum(-0.25, 0, c) - w * w / p.tau, c);
            const Complex rhs =
                -(phase * p.tau.sqrt() * mu_tilde_num(u, v, p.tau, c));
            return Values{lhs, rhs};
        });

    add("MU_TILDE_U1", LawKind::ALGEBRAIC, 2,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex& u = need(p.u, "u");
            const Complex& v = need(p.v, "v");
            const Complex lhs =
                mu_tilde_num(u + Complex::one(c.bits), v, p.tau, c);
            return Values{lhs, -mu_tilde_num(u, v, p.tau, c)};
        });

    add("MU_TILDE_UTAU", LawKind::ALGEBRAIC, 2,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex& u = need(p.u, "u");
            const Complex& v = need(p.v, "v");
            const Complex lhs = mu_tilde_num(u + p.tau, v, p.tau, c);
            const Complex rhs = -(exp_pi_i((u - v) * 2L + p.tau, c) *
                                  mu_tilde_num(u, v, p.tau, c));
            return Values{lhs, rhs};
        });

    add("MU3_PLUS", LawKind::ALGEBRAIC, 3,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex& u = need(p.u, "u");
            const Complex& v = need(p.v, "v");
            const Complex& z = need(p.z, "z");
            const Complex lhs =
                mu_num(u + z, v + z, p.tau, c) - mu_num(u, v, p.tau, c);
            const Complex eta3 = eta_num(p.tau, c).pow_int(3);
            const Complex num = eta3 * theta_z_num(u + v + z, p.tau, c) *
                                theta_z_num(z, p.tau, c);
            const Complex den = theta_z_num(u, p.tau, c) *
                                theta_z_num(v, p.tau, c) *
                                theta_z_num(u + z, p.tau, c) *
                                theta_z_num(v + z, p.tau, c);
            return Values{lhs, (num / den).mul_i()};
        });

    for (int i = 1; i <= 3; ++i) {
        add("MU_VANISH_" + std::to_string(i), LawKind::VANISHING, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                auto [u, v] = order_two_pair(i, p.tau, c);
                return Values{mu_tilde_num(u, v, p.tau, c),
                              Complex::zero(c.bits)};
            });
    }

    // The six special values behind the order-two vanishing.
    add("MU_SPECIAL_1", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            auto [u, v] = order_two_pair(1, p.tau, c);
            return Values{mu_num(u, v, p.tau, c),
                          exp_pi_i(p.tau / 4L, c) * (-1L) / 2L};
        });
    add("MU_SPECIAL_2", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            auto [u, v] = order_two_pair(2, p.tau, c);
            return Values{mu_num(u, v, p.tau, c),
                          -(exp_pi_i(p.tau / 4L, c).mul_i()) / 2L};
        });
    add("MU_SPECIAL_3", LawKind::VANISHING, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            auto [u, v] = order_two_pair(3, p.tau, c);
            return Values{mu_num(u, v, p.tau, c), Complex::zero(c.bits)};
        });
    add("R_SPECIAL_1", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex arg = (Complex::one(c.bits) - p.tau) / 2L;
            return Values{r_num(arg, p.tau, c),
                          -(exp_pi_i(p.tau / 4L, c).mul_i())};
        });
    add("R_SPECIAL_2", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            return Values{r_num(-(p.tau / 2L), p.tau, c),
                          exp_pi_i(p.tau / 4L, c)};
        });
    add("R_SPECIAL_3", LawKind::VANISHING, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            return Values{r_num(cnum(-0.5, 0, c), p.tau, c),
                          Complex::zero(c.bits)};
        });

    // mu_i + mu'_i closed forms.
    for (int i = 1; i <= 3; ++i) {
        add("MUSUM_" + std::to_string(i), LawKind::DERIVATIVE, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                const Complex lhs =
                    mu_i_fd(i, false, p.tau, c) + mu_i_fd(i, true, p.tau, c);
                const Complex th3 = theta_num(i, p.tau, c).pow_int(3);
                Complex rhs = Complex::zero(c.bits);
                if (i == 1)
                    rhs = -(exp_pi_i(p.tau / 4L, c) * th3) / 4L;
                else if (i == 2)
                    rhs = -((exp_pi_i(p.tau / 4L, c) * th3).mul_i()) / 4L;
                else
                    rhs = -th3 / 4L;
                return Values{lhs, rhs};
            });
    }

    // h~ transformation table; tau -> tau+1 permutes (1 2), fixes 3 with a
    // phase; tau -> -1/tau swaps 2 and 3 with e^{pi i/4} tau^{3/2}.
    for (int i = 1; i <= 3; ++i) {
        add("HTILDE_T_" + std::to_string(i), LawKind::ALGEBRAIC, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                const Complex lhs =
                    h_tilde_num(i, p.tau + Complex::one(c.bits), c);
                Complex rhs = Complex::zero(c.bits);
                if (i == 1)
                    rhs = h_tilde_num(2, p.tau, c);
                else if (i == 2)
                    rhs = h_tilde_num(1, p.tau, c);
                else
                    rhs = exp_pi_i(cnum(-0.25, 0, c), c) * h_tilde_num(3, p.tau, c);
                return Values{lhs, rhs};
            });
        add("HTILDE_S_" + std::to_string(i), LawKind::ALGEBRAIC, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                const Complex mtau = -(Complex::one(c.bits) / p.tau);
                const Complex lhs = h_tilde_num(i, mtau, c);
                const int j = (i == 1) ? 1 : (i == 2 ? 3 : 2);
                const Complex rhs = exp_pi_i(cnum(0.25, 0, c), c) *
                                    p.tau.pow_3_2() * h_tilde_num(j, p.tau, c);
                return Values{lhs, rhs};
            });
        add("HTILDE_DECOMP_" + std::to_string(i), LawKind::DERIVATIVE, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                return Values{h_tilde_from_mu(i, p.tau, c),
                              h_num(i, p.tau, c) + r_i_series_num(i, p.tau, c)};
            });
    }

    // Prop-style derivative displays for R and mu.
    for (int i = 1; i <= 3; ++i) {
        add("R_DERIV_" + std::to_string(i), LawKind::DERIVATIVE, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                Complex base = Complex::zero(c.bits);
                if (i == 1)
                    base = (Complex::one(c.bits) - p.tau) / 2L;
                else if (i == 2)
                    base = -(p.tau / 2L);
                else
                    base = cnum(-0.5, 0, c);
                const Complex lhs = sderiv_fd(
                    [&](const Complex& s) { return r_num(base - s, p.tau, c); },
                    c);
                return Values{lhs, r_deriv_rhs(i, p.tau, c)};
            });
        add("MU_DERIV_" + std::to_string(i), LawKind::DERIVATIVE, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                auto [u0, v0] = order_two_pair(i, p.tau, c);
                const Complex lhs = sderiv_fd(
                    [&](const Complex& s) {
                        return mu_num(u0, v0 + s, p.tau, c);
                    },
                    c);
                return Values{lhs, mu_deriv_rhs(i, p.tau, c)};
            });
        add("R_QUAD_" + std::to_string(i), LawKind::ALGEBRAIC, 0,
            [i](const LawPoint& p, const EvalCtx& c) {
                return Values{r_i_series_num(i, p.tau, c),
                              r_i_quadrature(i, p.tau, c)};
            },
            -10);
    }

    add("R_COMBO_ZERO", LawKind::VANISHING, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex t4 = p.tau * 4L;
            const Complex lhs =
                r_i_series_num(1, p.tau, c) * theta_num(1, p.tau, c) +
                r_i_series_num(2, p.tau, c) * theta_num(2, p.tau, c) -
                (r_i_series_num(1, t4, c) * theta_num(1, t4, c) +
                 r_i_series_num(3, t4, c) * theta_num(3, t4, c)) *
                    4L;
            return Values{lhs, Complex::zero(c.bits)};
        });

    add("G_MODULAR_T", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            return Values{g_tilde_num(p.tau + Complex::one(c.bits), c),
                          g_tilde_num(p.tau, c)};
        });
    add("G_MODULAR_S", LawKind::ALGEBRAIC, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            const Complex mtau = -(Complex::one(c.bits) / p.tau);
            return Values{g_tilde_num(mtau, c),
                          p.tau * p.tau * g_tilde_num(p.tau, c)};
        });

    add("SHADOW", LawKind::DERIVATIVE, 0,
        [](const LawPoint& p, const EvalCtx& c) {
            const Real step = Real::pow10(-8, c.bits);
            const Complex lhs = dbar_fd(
                [&](const Complex& t) { return g_tilde_num(t, c); }, p.tau,
                step, c);
            return Values{lhs, shadow_rhs(p.tau, c)};
        });

    return laws;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> laws = build_registry();
    return laws;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.spec.id == id) return e;
    throw rejected_input("unknown numerical law: " + id);
}

} // namespace

const std::vector<LawSpec>& law_catalog() {
    static const std::vector<LawSpec> specs = [] {
        std::vector<LawSpec> v;
        for (const auto& e : registry()) v.push_back(e.spec);
        return v;
    }();
    return specs;
}

const LawSpec& law_spec(const std::string& id) { return entry(id).spec; }

std::vector<LawPoint> seeded_points(const LawSpec& spec, int count,
                                    unsigned long seed, int digits) {
    std::mt19937_64 gen(seed);
    auto u01 = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
    const EvalCtx ctx = EvalCtx::make(digits);
    std::vector<LawPoint> pts;
    for (int k = 0; k < count; ++k) {
        // well-conditioned rectangle: x in [-1/2,1/2], y in [1/2,2]
        LawPoint p(Complex::of(-0.5 + u01(), 0.5 + 1.5 * u01(), ctx.bits));
        auto aux = [&] {
            return Complex::of(-0.45 + 0.9 * u01(), 0.05 + 0.35 * u01(),
                               ctx.bits);
        };
        if (spec.aux >= 2) {
            p.u = aux();
            p.v = aux();
        }
        if (spec.aux >= 3) p.z = aux();
        pts.push_back(std::move(p));
    }
    return pts;
}

LawResidual check_law_at(const std::string& id, const LawPoint& pt, int digits) {
    const Entry& e = entry(id);
    const EvalCtx ctx = EvalCtx::make(digits);
    require_upper_half(pt.tau);
    Values v = e.eval(pt, ctx);
    LawResidual res{id,           pt,
                    v.lhs,        v.rhs,
                    (v.lhs - v.rhs).abs(), Real(ctx.bits),
                    false,        digits,
                    0};
    // Equivalent adaptive truncation for the stop threshold at this tau.
    const double y = pt.tau.im.to_double();
    res.truncation =
        static_cast<long>((digits + 10) * 2.302585 / (6.283185 * y)) + 1;
    switch (e.spec.kind) {
        case LawKind::ALGEBRAIC:
        case LawKind::VANISHING: {
            const int ex = e.tol_abs_exp != 0 ? e.tol_abs_exp : -(digits - 10);
            res.tolerance = Real::pow10(ex, ctx.bits);
            break;
        }
        case LawKind::DERIVATIVE: {
            // 1e-6 relative to the larger side (absolute below scale 1)
            Real scale = v.lhs.abs();
            if (scale < v.rhs.abs()) scale = v.rhs.abs();
            if (scale < Real::of(1L, ctx.bits)) scale = Real::of(1L, ctx.bits);
            res.tolerance = scale * Real::pow10(-6, ctx.bits);
            break;
        }
    }
    res.pass = res.residual < res.tolerance;
    return res;
}

LawResidual shadow_check(const Complex& tau, int digits, double step) {
    const EvalCtx ctx = EvalCtx::make(digits);
    require_upper_half(tau);
    const Real h = Real::of(step, ctx.bits);
    const Complex lhs = dbar_fd(
        [&](const Complex& t) { return g_tilde_num(t, ctx); }, tau, h, ctx);
    const Complex rhs = shadow_rhs(tau, ctx);
    LawPoint pt(tau);
    LawResidual res{"SHADOW", pt, lhs, rhs, (lhs - rhs).abs(), Real(ctx.bits),
                    false,    digits, 0};
    Real scale = lhs.abs();
    if (scale < rhs.abs()) scale = rhs.abs();
    if (scale < Real::of(1L, ctx.bits)) scale = Real::of(1L, ctx.bits);
    res.tolerance = scale * Real::pow10(-6, ctx.bits);
    res.pass = res.residual < res.tolerance;
    return res;
}

std::vector<LawResidual> law_check(const std::string& id,
                                   const std::vector<LawPoint>& pts, int digits) {
    std::vector<LawResidual> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(check_law_at(id, p, digits));
    return out;
}

} // namespace qmock
