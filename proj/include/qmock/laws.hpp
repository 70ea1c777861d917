#pragma once

#include <optional>
#include <vector>

#include "qmock/numeric.hpp"

namespace qmock {

// Tolerance classes: algebraic laws are checked in absolute terms at
// 10^{-(digits-10)}; finite-difference laws at 1e-6 relative.
enum class LawKind { ALGEBRAIC, DERIVATIVE, VANISHING };

struct LawPoint {
    Complex tau;
    std::optional<Complex> u, v, z;

    explicit LawPoint(Complex t) : tau(std::move(t)) {}
};

struct LawSpec {
    std::string id;
    LawKind kind;
    int aux; // number of auxiliary points needed: 0, 2 (u,v) or 3 (u,v,z)
};

struct LawResidual {
    std::string law;
    LawPoint point;
    Complex lhs, rhs;
    Real residual;  // |lhs - rhs|, recomputed from lhs and rhs
    Real tolerance; // pass threshold actually applied
    bool pass = false;
    int prec_digits = 0;
    // Equivalent adaptive q-truncation implied by the stop threshold.
    long truncation = 0;
};

const std::vector<LawSpec>& law_catalog();
const LawSpec& law_spec(const std::string& id);

// Deterministic points: tau from [-1/2,1/2] x [1/2,2]; u, v, z from a
// well-conditioned box off the lattice.
std::vector<LawPoint> seeded_points(const LawSpec& spec, int count,
                                    unsigned long seed, int digits);

LawResidual check_law_at(const std::string& id, const LawPoint& pt, int digits);

// The shadow check with an explicit finite-difference step.
LawResidual shadow_check(const Complex& tau, int digits, double step);

std::vector<LawResidual> law_check(const std::string& id,
                                   const std::vector<LawPoint>& pts, int digits);

} // namespace qmock
