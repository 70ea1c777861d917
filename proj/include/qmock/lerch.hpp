#pragma once

#include "qmock/report.hpp"

namespace qmock {

/* Appell-type sums attached to the three order-two point pairs:
 *   i=1: sum_{n>=1} q^{(n^2+2n)/2} / (1-q^n)^2
 *   i=2: the same with (-1)^n
 *   i=3: sum_{n>=1} q^{(n^2+n)/2} (1+q^n) / (1-q^n)^2
 * expanded on the half-integer lattice. */
QSeries appell_sum(int i, const Rat& order);

// The double-sum side: sum over pairs m != n > 0 with the parity
// constraint (m-n even for i=1,2; odd for i=3) of +-m q^{mn/2}, the sign
// being that of m-n, with an extra (-1)^m for i=2. Equals 2*appell for
// i=1,2 and appell for i=3.
QSeries double_sum_expansion(int i, const Rat& order);

/* Holomorphic parts of the completed derivative sums:
 *   h1 = (2 + E2 - 48 A1) / (24 theta1)
 *   h2 = (2 + E2 - 48 A2) / (24 theta2)
 *   h3 = (-1 + E2 - 24 A3) / (24 theta3)   (valuation 7/8) */
QSeries h_series(int i, const Rat& order);

// g = -(h1 theta1)(2 tau)/2 - (h3 theta3)(2 tau)/2 + (theta1^4+theta2^4)/96;
// all fractional exponents cancel, leaving an integer-lattice series.
QSeries g_series(const Rat& order);

// Sum of divisors of n greater than sqrt(n), plus sqrt(n)/2 for squares.
Rat sigma_prime(long n);

// -1/24 + sum sigma'(n) q^n (the divisor-oracle route to g).
QSeries sigma_prime_series(const Rat& order);

// -E2/24 - (1/2) sum_{n != 0} n q^{n^2}/(1-q^n) (the bilateral route).
QSeries g_bilateral_series(const Rat& order);

} // namespace qmock
