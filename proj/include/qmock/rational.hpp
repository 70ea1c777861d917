#pragma once

#include <gmpxx.h>

#include <string>

#include "qmock/errors.hpp"

namespace qmock {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) as long as everything goes through mpq_class.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical string: "p" or "p/q" with q > 1.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw rejected_input("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline long rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

inline long rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

inline bool rat_is_integer(const Rat& r) {
    return r.get_den() == 1;
}

} // namespace qmock
