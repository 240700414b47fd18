#pragma once

#include <functional>
#include <string>
#include <vector>

#include "halphen/profile.hpp"

namespace halphen {

/// Desk-scale enumeration request: all profiles of total d supported in
/// [0, window] whose start is at least anchor_n + 1 and which satisfy the
/// constraint. The window is deliberately generous; enumeration fails loudly
/// if any admissible profile reaches its last index.
struct EnumerationSpec {
    AdmissibilityConstraint constraint;
    Int total = 1;    // d
    Int anchor_n = 0; // value at 0 must be >= anchor_n + 1
    Int window = 2;   // maximal support index
    Int cap = 14;     // enumeration refuses totals above this

    static EnumerationSpec with_default_window(AdmissibilityConstraint c, Int total, Int anchor_n,
                                               Int cap = 14);
};

enum class ExecMode { Serial, Parallel };

// Enumerates every admissible anchored profile in ascending lexicographic
// order of the value vector (F(0), F(1), ...). The parallel mode partitions
// the search by the value at index 0 and concatenates the per-value results,
// so the output order is identical to the serial mode. Throws CapExceeded
// when total > cap and InternalInconsistency when a result touches the
// window's last index.
std::vector<Profile> enumerate_admissible(const EnumerationSpec& spec,
                                          ExecMode mode = ExecMode::Parallel);

/// Outcome of comparing every enumerated profile against a reference
/// extremal profile: prefix-sum domination, double-sum domination, equality
/// witnesses and the rigidity claim (double sums equal everywhere only for
/// the reference itself).
struct ExtremalityReport {
    Int candidates = 0;
    std::vector<Profile> violations;             // prefix domination failures
    std::vector<Profile> double_sum_violations;  // double-sum domination failures
    std::vector<Profile> equality_witnesses;     // prefix sums equal everywhere
    bool rigidity_holds = true;
    // Only for PrStarStar runs: failures of double-sum domination against the
    // anchor-free (N = 0) reference, starting from the first index where the
    // double sums agree.
    std::vector<Profile> zero_reference_violations;
    std::vector<std::string> metadata;
};

ExtremalityReport verify_extremality(const EnumerationSpec& spec, const Profile& delta_ref,
                                     ExecMode mode = ExecMode::Parallel);

} // namespace halphen
