#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "halphen/delta.hpp"
#include "halphen/profile.hpp"

namespace halphen {

using Rational = boost::rational<Int>;

enum class Ambient { P3, Pr };

struct BoundInputs {
    Int g = 0;
    Int d = 0;
    Ambient ambient = Ambient::P3;
    Int s_or_r = 0; // s in the P3 case, r in the Pr case
    Int N = 0;
    std::optional<Int> e_override;
};

/// One evaluated degree bound: the exact double-sum value at the evaluation
/// index, the matching closed form when one applies at that index, and an
/// agreement flag. Values <= 0 are reported as-is (the bound is vacuous).
struct BoundReport {
    BoundInputs inputs;
    Int n_used = 0;
    Int double_sum_bound = 0;
    std::optional<Int> closed_form;
    bool agree = true;
    std::optional<Int> q; // shift used by the non-primary bound
    std::vector<std::string> notes;
};

// double_sum(delta, n) + g - n*d - 1, exact in integers.
Int primary_bound_at(Int g, Int d, const Profile& delta, Int n);

// Degree bound for a primary series of dimension N on a curve of genus g and
// degree d on no surface of degree < s. Evaluates at n = e_override + 1 when
// an upper bound for the speciality level is supplied, otherwise at the
// stabilization threshold.
BoundReport primary_bound(Int g, Int d, Int s, Int N, std::optional<Int> e_override = {});

// Closed-form value of the primary bound at the stabilization threshold,
// evaluated exactly in rationals and asserted to combine to an integer
// (NonIntegerResult otherwise). For N in {1, 2} the specialized forms are
// also evaluated and asserted to agree (InternalInconsistency otherwise).
Int closed_form_bound(Int g, Int d, Int s, Int N);

// Degree bound for a series that need not be primary: shifts the N = 0
// profile by Q = max{n : N+1 >= double_sum(delta_0, n)}.
BoundReport nonprimary_bound(Int g, Int d, Int s, Int N);

// Degree bound for a primary series on a non-degenerate curve in ambient
// dimension r. Default evaluation index rho is always valid: the speciality
// level is < rho.
BoundReport pr_primary_bound(Int g, Int d, Int r, Int N, std::optional<Int> e_override = {});

/// Maximal-genus value for degree-d space curves on no surface of degree
/// < s, by two routes: the profile construction (integer, authoritative) and
/// the classical closed formula (exact rational; non-integral exactly when
/// the two disagree).
struct HalphenGenus {
    Int d = 0;
    Int s = 0;
    Int delta_route = 0;
    Rational printed{0};
    bool agree = false;
    Int n_star = 0;
};

HalphenGenus halphen_genus_bound(Int d, Int s);

// Maximal genus of a non-degenerate degree-d curve in ambient dimension r:
// C(m,2)(r-1) + m*eps with d-1 = m(r-1) + eps, 0 <= eps <= r-2. The d-1
// decomposition is the classical one and the only one matching the curve of
// degree 12 and genus 7 in dimension 6.
Int castelnuovo_genus_bound(Int r, Int d);

// Same formula applied to the decomposition of d instead of d-1; kept so the
// difference between the two conventions stays visible (gives 9, not 7, at
// r = 6, d = 12).
Int castelnuovo_genus_bound_d_convention(Int r, Int d);

enum class GonalityClass { Hyperelliptic, Trigonal, Quadrigonal };

// Upper bound for the speciality level of a base-point-free series of degree
// delta and dimension N: min(delta - N - 1, floor((2g-2)/d), class cap).
// Negative results mean the series is non-special.
Int speciality_envelope(Int delta, Int N, Int g, Int d,
                        std::optional<GonalityClass> cls = {});

} // namespace halphen
