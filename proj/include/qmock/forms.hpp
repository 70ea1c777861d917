#pragma once

#include "qmock/qseries.hpp"

namespace qmock {

// Exact Bernoulli numbers B_0..B_k under the B_1 = -1/2 convention; the
// defining recursion sum_{j=0}^{m} C(m+1,j) B_j = 0 forces every value.
std::vector<Rat> bernoulli_table(int k);
Rat bernoulli(int k);

// eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), truncated at T (lattice 24).
QSeries eta(const Rat& order);

// Half-period Jacobi thetas at z = 0, with the renumbered indexing:
//   theta1 = sum q^{n^2/2}, theta2 = sum (-1)^n q^{n^2/2},
//   theta3 = sum q^{(n+1/2)^2/2}.
QSeries theta(int i, const Rat& order);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
QSeries eisenstein(int k, const Rat& order);

// sum_{n>0, n^2<T} n q^{n^2}.
QSeries half_theta(const Rat& order);

} // namespace qmock
