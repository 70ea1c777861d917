#pragma once

#include <functional>

#include "qmock/hp.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

/* Evaluation context: requested decimal digits, working mantissa bits
 * (with guard), and the stop threshold for adaptive sums. Precision is
 * always explicit; there is no ambient global state. */
struct EvalCtx {
    int digits;
    mpfr_prec_t bits;
    Real eps; // 10^{-(digits + guard digits)}

    static EvalCtx make(int digits);
};

// Principal embedding zeta_N -> e^{2 pi i/N} at the context precision.
Complex to_complex(const Cyclo& c, const EvalCtx& ctx);
Complex to_complex(const Cyclo& c, int digits);

// Upper-half-plane checks: Im tau > 0 and not closer than 1e-3 to the axis.
void require_upper_half(const Complex& tau);

// sum of stored terms c q^r at tau; the unknown tail is NOT bounded here.
Complex qs_eval(const QSeries& s, const Complex& tau, const EvalCtx& ctx);
// Heuristic tail indicator |q|^T for a finite truncation.
Real qs_eval_tail(const QSeries& s, const Complex& tau, const EvalCtx& ctx);

// beta(x) = erfc(sqrt(pi x)) and E(z) = erf(sqrt(pi) z).
Real beta_fn(const Real& x);
Real e_fn(const Real& z);

// e^{pi i x} for complex x.
Complex exp_pi_i(const Complex& x, const EvalCtx& ctx);

Complex eta_num(const Complex& tau, const EvalCtx& ctx);
Complex theta_num(int i, const Complex& tau, const EvalCtx& ctx);
Complex e2_num(const Complex& tau, const EvalCtx& ctx);

// Zwegers' two-variable theta sum over nu in 1/2 + Z.
Complex theta_z_num(const Complex& z, const Complex& tau, const EvalCtx& ctx);

// The Lerch sum mu(u, v; tau); poles of the summand reject the point.
Complex mu_num(const Complex& u, const Complex& v, const Complex& tau,
               const EvalCtx& ctx);

// The correction sum R(u; tau).
Complex r_num(const Complex& u, const Complex& tau, const EvalCtx& ctx);

// mu + (i/2) R(u - v).
Complex mu_tilde_num(const Complex& u, const Complex& v, const Complex& tau,
                     const EvalCtx& ctx);

// Appell-type sums evaluated directly from their defining n-sums.
Complex appell_num(int i, const Complex& tau, const EvalCtx& ctx);

// h_i from the closed quotient forms.
Complex h_num(int i, const Complex& tau, const EvalCtx& ctx);

// R_i: the beta-damped series form, and the ray-integral form.
Complex r_i_series_num(int i, const Complex& tau, const EvalCtx& ctx);
Complex r_i_quadrature(int i, const Complex& tau, const EvalCtx& ctx);

Complex h_tilde_num(int i, const Complex& tau, const EvalCtx& ctx);

// Holomorphic combination g and its completion g~.
Complex g_num(const Complex& tau, const EvalCtx& ctx);
Complex g_tilde_num(const Complex& tau, const EvalCtx& ctx);

// Closed-form shadow -(th1(2t) conj th1(2t) + th3(2t) conj th3(2t)) / (64 pi^2 y^{3/2}).
Complex shadow_rhs(const Complex& tau, const EvalCtx& ctx);

// d/(2 pi i) ds at s = 0 by a central difference with step ~ 10^{-digits/3}.
Complex sderiv_fd(const std::function<Complex(const Complex&)>& f,
                  const EvalCtx& ctx);

// Dbar = (1/2 pi i) d/dtau-bar by central differences with the given step.
Complex dbar_fd(const std::function<Complex(const Complex&)>& f,
                const Complex& tau, const Real& step, const EvalCtx& ctx);

} // namespace qmock
