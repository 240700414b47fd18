#include "halphen/oracle.hpp"

#include <algorithm>

#include "halphen/delta.hpp"

namespace halphen {

namespace {

void validate(const EnumerationSpec& spec) {
    if (spec.total < 1) throw DomainError("enumeration total must be >= 1");
    if (spec.anchor_n < 0) throw DomainError("anchor must be >= 0");
    if (spec.window < 1) throw DomainError("window must be >= 1");
    if (spec.cap < 1) throw DomainError("cap must be >= 1");
    if (spec.total > spec.cap)
        throw CapExceeded("total d = " + std::to_string(spec.total) +
                          " exceeds the enumeration cap " + std::to_string(spec.cap));
    if (const auto* star = std::get_if<P3Star>(&spec.constraint)) {
        if (star->s < 2) throw DomainError("P3Star requires s >= 2");
        if (star->d != spec.total)
            throw TotalMismatch("constraint d = " + std::to_string(star->d) +
                                " differs from enumeration total " + std::to_string(spec.total));
    } else if (const auto* ss = std::get_if<PrStarStar>(&spec.constraint)) {
        if (ss->r < 3) throw DomainError("PrStarStar requires r >= 3");
    }
}

// Depth-first enumeration over positions 0..window, values ascending, so
// emission order is ascending lexicographic on the value vectors. Both
// constraints are per-index tests against the running prefix, which makes
// the incremental pruning exact: once the remaining mass hits zero, the
// all-zero tail is admissible and the vector is emitted without descending
// further.
class Enumerator {
public:
    Enumerator(const EnumerationSpec& spec, std::vector<Profile>& out) : spec_(spec), out_(out) {
        if (const auto* star = std::get_if<P3Star>(&spec.constraint)) {
            is_star_ = true;
            s_ = star->s;
        } else {
            is_star_ = false;
            r_ = std::get<PrStarStar>(spec.constraint).r;
        }
    }

    // Runs the subtree with F(0) = first_value.
    void run_first(Int first_value) {
        values_.clear();
        if (!feasible(0, 0, first_value)) return;
        values_.push_back(first_value);
        if (first_value == spec_.total)
            emit();
        else
            descend(1, first_value);
        values_.pop_back();
    }

    // Runs the subtree with F(0), F(1) fixed; both must already be feasible.
    void run_pair(Int first_value, Int second_value) {
        values_.clear();
        values_.push_back(first_value);
        values_.push_back(second_value);
        if (first_value + second_value == spec_.total)
            emit();
        else
            descend(2, first_value + second_value);
        values_.clear();
    }

    bool first_feasible(Int value) const { return feasible(0, 0, value); }
    bool second_feasible(Int first_value, Int value) const {
        return feasible(1, first_value, value);
    }

private:
    bool feasible(Int /*pos*/, Int prefix_before, Int value) const {
        if (is_star_) {
            for (Int t = value + 1; t <= s_; ++t) {
                if (!(prefix_before <= binom2(t - 1) || prefix_before >= spec_.total - binom2(t)))
                    return false;
            }
            return true;
        }
        // Small values need all mass before or all mass after this index.
        if (value < r_ - 1 && prefix_before != 0 && prefix_before + value != spec_.total)
            return false;
        return true;
    }

    void descend(Int pos, Int placed) {
        if (pos > spec_.window) return;
        const Int remaining = spec_.total - placed;
        for (Int v = 0; v <= remaining; ++v) {
            if (!feasible(pos, placed, v)) continue;
            values_.push_back(v);
            if (v == remaining)
                emit();
            else
                descend(pos + 1, placed + v);
            values_.pop_back();
        }
    }

    void emit() { out_.push_back(profile_from_values(values_)); }

    const EnumerationSpec& spec_;
    std::vector<Profile>& out_;
    std::vector<Int> values_;
    bool is_star_ = true;
    Int s_ = 2;
    Int r_ = 3;
};

void check_window_untouched(const EnumerationSpec& spec, const std::vector<Profile>& results) {
    for (const Profile& p : results) {
        if (!p.empty() && p.max_index() >= spec.window)
            throw InternalInconsistency(
                "admissible profile reaches the enumeration window; widen the window");
    }
}

} // namespace

EnumerationSpec EnumerationSpec::with_default_window(AdmissibilityConstraint c, Int total,
                                                     Int anchor_n, Int cap) {
    EnumerationSpec spec;
    spec.constraint = std::move(c);
    spec.total = total;
    spec.anchor_n = anchor_n;
    spec.window = 2 * total;
    spec.cap = cap;
    return spec;
}

std::vector<Profile> enumerate_admissible(const EnumerationSpec& spec, ExecMode mode) {
    validate(spec);
    const Int first_min = spec.anchor_n + 1;
    if (first_min > spec.total) return {};

    if (mode == ExecMode::Serial) {
        std::vector<Profile> out;
        Enumerator e(spec, out);
        for (Int v0 = first_min; v0 <= spec.total; ++v0) e.run_first(v0);
        check_window_untouched(spec, out);
        return out;
    }

    // Partition by the first two values (one value when the mass is already
    // exhausted). Tasks are built in ascending lexicographic order and the
    // buckets concatenated in the same order, so the stream matches the
    // serial one for any thread count; two levels give the dynamic schedule
    // enough tasks to balance lopsided subtrees.
    struct Task {
        Int first;
        Int second; // -1: nothing placed past the first value
    };
    std::vector<Task> tasks;
    {
        std::vector<Profile> unused;
        Enumerator probe(spec, unused);
        for (Int v0 = first_min; v0 <= spec.total; ++v0) {
            if (!probe.first_feasible(v0)) continue;
            if (v0 == spec.total) {
                tasks.push_back({v0, -1});
                continue;
            }
            for (Int v1 = 0; v1 <= spec.total - v0; ++v1)
                if (probe.second_feasible(v0, v1)) tasks.push_back({v0, v1});
        }
    }

    std::vector<std::vector<Profile>> buckets(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        Enumerator e(spec, buckets[i]);
        if (tasks[i].second < 0)
            e.run_first(tasks[i].first);
        else
            e.run_pair(tasks[i].first, tasks[i].second);
    }

    std::vector<Profile> out;
    for (auto& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    check_window_untouched(spec, out);
    return out;
}

ExtremalityReport verify_extremality(const EnumerationSpec& spec, const Profile& delta_ref,
                                     ExecMode mode) {
    const std::vector<Profile> candidates = enumerate_admissible(spec, mode);

    ExtremalityReport report;
    report.candidates = static_cast<Int>(candidates.size());

    // Reference sums over the whole window.
    const Int window = spec.window;
    std::vector<Int> ref_prefix(static_cast<std::size_t>(window) + 1);
    std::vector<Int> ref_dsum(static_cast<std::size_t>(window) + 1);
    for (Int n = 0; n <= window; ++n) {
        ref_prefix[static_cast<std::size_t>(n)] = delta_ref.prefix(n);
        ref_dsum[static_cast<std::size_t>(n)] = delta_ref.double_sum(n);
    }

    // Optional anchor-free reference for the PrStarStar run.
    const auto* ss = std::get_if<PrStarStar>(&spec.constraint);
    std::vector<Int> zero_dsum;
    if (ss && spec.total >= ss->r) {
        const auto [params0, delta0] = delta_pr_profile(0, spec.total, ss->r);
        (void)params0;
        zero_dsum.resize(static_cast<std::size_t>(window) + 1);
        for (Int n = 0; n <= window; ++n)
            zero_dsum[static_cast<std::size_t>(n)] = delta0.double_sum(n);
        report.metadata.push_back(
            "zero-reference check compares double sums against the N = 0 profile for the same (d, r)");
    }

    enum : unsigned {
        kPrefixViolation = 1,
        kDsumViolation = 2,
        kEqualEverywhere = 4,
        kDsumEqualEverywhere = 8,
        kZeroRefViolation = 16,
    };
    std::vector<unsigned> flags(candidates.size(), 0);

#pragma omp parallel for schedule(static)
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const Profile& f = candidates[idx];
        unsigned flag = kEqualEverywhere | kDsumEqualEverywhere;
        Int fpref = 0, fdsum = 0;
        Int zero_eq_from = -1;
        for (Int n = 0; n <= window; ++n) {
            fpref += f.at(n);
            fdsum += fpref;
            if (fpref < ref_prefix[static_cast<std::size_t>(n)]) flag |= kPrefixViolation;
            if (fpref != ref_prefix[static_cast<std::size_t>(n)]) flag &= ~kEqualEverywhere;
            if (fdsum < ref_dsum[static_cast<std::size_t>(n)]) flag |= kDsumViolation;
            if (fdsum != ref_dsum[static_cast<std::size_t>(n)]) flag &= ~kDsumEqualEverywhere;
            if (!zero_dsum.empty()) {
                if (zero_eq_from < 0 && fdsum == zero_dsum[static_cast<std::size_t>(n)])
                    zero_eq_from = n;
                if (zero_eq_from >= 0 && fdsum < zero_dsum[static_cast<std::size_t>(n)])
                    flag |= kZeroRefViolation;
            }
        }
        flags[idx] = flag;
    }

    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const unsigned flag = flags[idx];
        if (flag & kPrefixViolation) report.violations.push_back(candidates[idx]);
        if (flag & kDsumViolation) report.double_sum_violations.push_back(candidates[idx]);
        if (flag & kEqualEverywhere) report.equality_witnesses.push_back(candidates[idx]);
        if ((flag & kDsumEqualEverywhere) && !(candidates[idx] == delta_ref))
            report.rigidity_holds = false;
        if (flag & kZeroRefViolation) report.zero_reference_violations.push_back(candidates[idx]);
    }
    return report;
}

} // namespace halphen
