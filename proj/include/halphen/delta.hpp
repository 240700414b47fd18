#pragma once

#include <string>
#include <utility>
#include <vector>

#include "halphen/profile.hpp"

namespace halphen {

struct TriangularParts {
    Int T;
    Int R;
};

// Unique T, R with m = T(T+1)/2 + R and 0 <= R <= T. Throws NegativeInput.
TriangularParts triangular_decompose(Int m);

enum class DeltaBranch { A, B, C };

/// Parameters of the extremal profile for (N, s, d): the profile starts at
/// N+1, rises by steps of one to a plateau at s, then descends to zero, with
/// rho and eps absorbing the mass accounting. rho may be negative; intervals
/// with crossed endpoints are empty.
struct DeltaParams {
    Int N = 0;
    Int s = 2;
    Int d = 1;
    Int T = 0;   // min(T(N), s-1)
    Int R = 0;   // N - T(T+1)/2; equals R(N) whenever T(N) <= s-1
    Int rho = 0; // 0 <= eps < s
    Int eps = 0;
    DeltaBranch branch = DeltaBranch::A;
};

// Derives T, R, rho, eps and the branch for (N, s, d).
// Throws DomainError unless s >= 2, d > N >= 0 and d > s^2 - s;
// throws InconsistentParams for branch-C inputs whose piecewise profile
// would be malformed (eps out of [0, s) or total != d).
DeltaParams delta_params(Int N, Int s, Int d);

// Materializes the piecewise profile. Throws InternalInconsistency when the
// construction yields a negative value or a total different from d.
Profile delta_profile(const DeltaParams& params);

// Index from which the tail of the profile is exhausted and the degree
// bounds stabilize: 2s - T + rho - 1. May be clamped to >= 0 by callers.
Int speciality_threshold(const DeltaParams& params);

/// Parameters of the extremal profile in ambient dimension r: N+1, then rho
/// full steps of r-1, then a final eps+1.
struct PrDeltaParams {
    Int N = 0;
    Int d = 0;
    Int r = 3;
    Int rho = 0; // d - N - 2 = rho(r-1) + eps, 0 <= eps < r-1
    Int eps = 0;
};

// Throws DomainError unless r >= 3, N >= 0 and d >= r + N.
std::pair<PrDeltaParams, Profile> delta_pr_profile(Int N, Int d, Int r);

struct PropertyCheck {
    std::string name;
    bool pass = false;
    std::string note;
};

struct DeltaPropertyReport {
    DeltaParams params;
    Profile profile;
    Int n_star = 0;           // 2s - T + rho - 1
    Int first_full_index = 0; // least n with prefix(n) == d
    std::vector<PropertyCheck> checks;
    bool all_pass() const;
};

// Evaluates the structural properties of the profile: value range, total,
// prefix/suffix margins, plateau budget, monotonicity in N, admissibility of
// the profile under its own constraint, and the stabilization threshold.
DeltaPropertyReport delta_property_report(const DeltaParams& params);

} // namespace halphen
