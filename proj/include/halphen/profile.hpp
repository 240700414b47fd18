#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "halphen/errors.hpp"

namespace halphen {

using Int = long long;

// a(a-1)/2 for a >= 2, zero otherwise.
constexpr Int binom2(Int a) { return a >= 2 ? a * (a - 1) / 2 : 0; }

// Floored division (quotient rounded toward -infinity); b > 0.
constexpr Int floor_div(Int a, Int b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Finite-support sequence of non-negative integers indexed over all of Z.
///
/// Values outside the support read as zero, and stored zeros are trimmed, so
/// two profiles compare equal iff they agree pointwise. Indices may be
/// negative (reflection produces them); library-built extremal profiles live
/// on n >= 0.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::map<Int, Int> entries);

    Int at(Int n) const;
    bool empty() const { return entries_.empty(); }
    Int min_index() const; // defined only for non-empty profiles
    Int max_index() const;
    Int total() const { return total_; }

    // prefix(n)     = sum of values at indices <= n
    // double_sum(n) = sum of prefix(j) over j <= n
    Int prefix(Int n) const;
    Int double_sum(Int n) const;

    // Pointwise index reflection i -> 2 - i.
    Profile serre_reflect() const;

    // Dense run of values from min_index() to max_index(); empty for the
    // zero profile.
    std::vector<Int> dense() const;

    const std::map<Int, Int>& entries() const { return entries_; }
    bool operator==(const Profile&) const = default;

private:
    std::map<Int, Int> entries_;
    Int total_ = 0;
};

// Builds a canonical profile from (index, value) pairs; zeros are dropped.
// Throws NegativeValue / DuplicateIndex.
Profile build_profile(const std::vector<std::pair<Int, Int>>& pairs);

// Convenience: values at consecutive indices starting from `offset`.
Profile profile_from_values(const std::vector<Int>& values, Int offset = 0);

struct ProfileSums {
    Int delta1;
    Int phi;
    Int total;
};

// (prefix through n, double sum through n, full total).
ProfileSums profile_sums(const Profile& p, Int n);

/// Growth constraint for profiles of total d coming from space curves on no
/// surface of degree < s: wherever the value drops below some t <= s, the
/// prefix so far must be either still inside the initial triangular budget
/// C(t-1,2) or already within C(t,2) of the full total.
struct P3Star {
    Int s = 2;
    Int d = 1;
};

/// Growth constraint for curves in higher-dimensional ambient space: values
/// below r-1 may occur only before all mass or after all mass.
struct PrStarStar {
    Int r = 3;
};

using AdmissibilityConstraint = std::variant<P3Star, PrStarStar>;

// Tests the constraint at every index (indices outside the support satisfy
// it automatically). Throws TotalMismatch when a P3Star total disagrees with
// the profile, DomainError on bad constraint parameters.
bool check_admissible(const Profile& p, const AdmissibilityConstraint& c);

} // namespace halphen
