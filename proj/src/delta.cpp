#include "halphen/delta.hpp"

#include <algorithm>

namespace halphen {

TriangularParts triangular_decompose(Int m) {
    if (m < 0) throw NegativeInput("triangular_decompose requires m >= 0, got " + std::to_string(m));
    // Largest T with T(T+1)/2 <= m.
    Int t = 0;
    while ((t + 2) * (t + 1) / 2 <= m) ++t;
    return TriangularParts{t, m - t * (t + 1) / 2};
}

namespace {

// Value of the piecewise definition at n > 0, zero outside the segments.
// The printed rising segment ends at s-T-2 and the plateau starts after
// s-T-1, which leaves n = s-T-1 unassigned; since the rising branch reaches
// exactly s there, min(T+n+1, s) is its unique continuous completion and is
// what we evaluate on the whole first range.
Int piece_value(const DeltaParams& q, Int n) {
    const Int s = q.s, T = q.T, rho = q.rho, eps = q.eps;
    if (n < 1 || n > 2 * s - T + rho) return 0;
    if (n <= s - T + rho + 1) return std::min(T + n + 1, s);
    if (n <= s - T + rho + eps + 1) return 2 * s - (n + T - rho - 1);
    return 2 * s - (n + T - rho);
}

struct BuildResult {
    Profile profile;
    std::string defect; // empty when the construction is well-formed
};

BuildResult build_piecewise(const DeltaParams& q) {
    std::map<Int, Int> entries;
    entries[0] = q.N + 1;
    for (Int n = 1; n <= 2 * q.s - q.T + q.rho; ++n) {
        const Int v = piece_value(q, n);
        if (v < 0)
            return {Profile{}, "negative value " + std::to_string(v) + " at n = " + std::to_string(n)};
        if (v > 0) entries[n] = v;
    }
    Profile profile{std::move(entries)};
    if (profile.total() != q.d)
        return {std::move(profile),
                "total " + std::to_string(profile.total()) + " != d = " + std::to_string(q.d)};
    return {std::move(profile), ""};
}

} // namespace

DeltaParams delta_params(Int N, Int s, Int d) {
    if (s < 2) throw DomainError("requires s >= 2, got s = " + std::to_string(s));
    if (!(d > N && N >= 0))
        throw DomainError("requires d > N >= 0, got N = " + std::to_string(N) +
                          ", d = " + std::to_string(d));
    if (d <= s * s - s)
        throw DomainError("requires d > s^2 - s = " + std::to_string(s * s - s) +
                          ", got d = " + std::to_string(d));

    const auto tri = triangular_decompose(N);
    DeltaParams q;
    q.N = N;
    q.s = s;
    q.d = d;
    q.T = std::min(tri.T, s - 1);
    // Residual of N against the clamped T. When T(N) <= s-1 this is R(N);
    // when T(N) > s-1 it keeps N = T(T+1)/2 + R true, which the closed-form
    // bound relies on.
    q.R = N - q.T * (q.T + 1) / 2;

    const Int half = s * (s + 1) / 2;
    // The two defining equations coincide whenever T(N) = s-1 (then
    // N = s(s-1)/2 + R), so the first covers T(N) <= s-1 entirely. The
    // second needs T(N) > s-1 together with enough mass past the start,
    // d - N - 1 >= s(s+1)/2. The triangular fallback handles the remaining
    // corner and is validated against the profile it produces.
    if (tri.T < s - 1 || (tri.T == s - 1 && d - N - 1 < half)) {
        q.branch = DeltaBranch::A;
        const Int rhs = d - 1 - s * (s + 1) - q.R + q.T;
        q.rho = floor_div(rhs, s);
        q.eps = rhs - q.rho * s;
    } else if (d - N - 1 >= half) {
        q.branch = DeltaBranch::B;
        const Int rhs = d - N - 2 - half;
        q.rho = floor_div(rhs, s);
        q.eps = rhs - q.rho * s;
    } else {
        q.branch = DeltaBranch::C;
        const auto trd = triangular_decompose(d - N - 1);
        q.rho = trd.T - s;
        q.eps = trd.R + s - trd.T - 3;
        if (q.eps < 0 || q.eps >= s)
            throw InconsistentParams("branch C yields eps = " + std::to_string(q.eps) +
                                     " outside [0, " + std::to_string(s) + ") for (N, s, d) = (" +
                                     std::to_string(N) + ", " + std::to_string(s) + ", " +
                                     std::to_string(d) + ")");
        const auto built = build_piecewise(q);
        if (!built.defect.empty())
            throw InconsistentParams("branch C profile malformed for (N, s, d) = (" +
                                     std::to_string(N) + ", " + std::to_string(s) + ", " +
                                     std::to_string(d) + "): " + built.defect);
    }
    return q;
}

Profile delta_profile(const DeltaParams& params) {
    auto built = build_piecewise(params);
    if (!built.defect.empty())
        throw InternalInconsistency("piecewise profile for (N, s, d) = (" +
                                    std::to_string(params.N) + ", " + std::to_string(params.s) +
                                    ", " + std::to_string(params.d) + "): " + built.defect);
    return std::move(built.profile);
}

Int speciality_threshold(const DeltaParams& params) {
    return 2 * params.s - params.T + params.rho - 1;
}

std::pair<PrDeltaParams, Profile> delta_pr_profile(Int N, Int d, Int r) {
    if (r < 3) throw DomainError("requires r >= 3, got r = " + std::to_string(r));
    if (N < 0) throw DomainError("requires N >= 0, got N = " + std::to_string(N));
    if (d < r + N)
        throw DomainError("requires d >= r + N = " + std::to_string(r + N) +
                          ", got d = " + std::to_string(d));
    PrDeltaParams q;
    q.N = N;
    q.d = d;
    q.r = r;
    q.rho = (d - N - 2) / (r - 1); // d - N - 2 >= r - 2 >= 1 here
    q.eps = (d - N - 2) % (r - 1);

    std::map<Int, Int> entries;
    entries[0] = N + 1;
    for (Int n = 1; n <= q.rho; ++n) entries[n] = r - 1;
    entries[q.rho + 1] = q.eps + 1;
    Profile profile{std::move(entries)};
    if (profile.total() != d)
        throw InternalInconsistency("ambient-r profile total " + std::to_string(profile.total()) +
                                    " != d = " + std::to_string(d));
    return {q, std::move(profile)};
}

bool DeltaPropertyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass; });
}

DeltaPropertyReport delta_property_report(const DeltaParams& params) {
    DeltaPropertyReport report;
    report.params = params;
    report.profile = delta_profile(params);
    const Profile& p = report.profile;
    const Int s = params.s, d = params.d;
    const Int max_n = p.max_index();

    report.n_star = speciality_threshold(params);
    report.first_full_index = max_n; // values are positive through max_index

    auto add = [&report](std::string name, bool pass, std::string note = "") {
        report.checks.push_back({std::move(name), pass, std::move(note)});
    };

    // (a) values beyond the start stay within [0, s]
    bool a_ok = true;
    for (Int n = 1; n <= max_n; ++n) a_ok = a_ok && p.at(n) >= 0 && p.at(n) <= s;
    add("a: 0 <= value <= s for n > 0", a_ok);

    add("b: total equals d", p.total() == d);

    // (c) strict suffix margin: what remains from n on exceeds C(value,2)
    bool c_ok = true;
    for (Int n = 1; n <= max_n; ++n)
        c_ok = c_ok && (d - p.prefix(n - 1) > binom2(p.at(n)));
    add("c: suffix(n) > C(value(n), 2) for 0 < n <= max support", c_ok);

    // (d) strict prefix margin against the next-lower triangular budget.
    // The descent argument needs prefix(n-1) > C(value(n)-1, 2); the chain
    // with C(value(n), 2) in the middle already fails on profiles such as
    // [2,3,3,2] at n = 1.
    bool d_ok = true;
    for (Int n = 1; n <= max_n; ++n)
        d_ok = d_ok && (p.prefix(n - 1) > binom2(p.at(n) - 1));
    add("d: prefix(n-1) > C(value(n)-1, 2) for 0 < n <= max support", d_ok);

    // (e) plateau budget: mass after the start stays within d - C(s,2)
    bool e_ok = true;
    for (Int n = 1; n <= s - params.T + params.rho; ++n)
        e_ok = e_ok && (p.prefix(n) - p.at(0) <= d - binom2(s));
    add("e: partial sums from 1 through s-T+rho stay <= d - C(s,2)", e_ok);

    // (f) prefix sums never decrease when N grows at fixed (s, d)
    if (params.N >= 1) {
        try {
            const Profile prev = delta_profile(delta_params(params.N - 1, s, d));
            bool f_ok = true;
            const Int hi = std::max(max_n, prev.max_index()) + 1;
            for (Int n = 0; n <= hi; ++n) f_ok = f_ok && (p.prefix(n) >= prev.prefix(n));
            add("f: prefix sums dominate the N-1 profile", f_ok);
        } catch (const DomainError&) {
            add("f: prefix sums dominate the N-1 profile", true,
                "skipped: parameters for N-1 are rejected");
        }
    } else {
        add("f: prefix sums dominate the N-1 profile", true, "skipped: N = 0");
    }

    add("profile satisfies its own P3 growth constraint",
        check_admissible(p, P3Star{s, d}));

    // Stabilization threshold: prefix reaches d at first_full_index, which is
    // n_star or n_star + 1 depending on eps; callers of the degree bound may
    // evaluate at n_star either way.
    add("prefix equals d from max support onward",
        p.prefix(report.first_full_index) == d,
        "n_star = " + std::to_string(report.n_star) +
            ", first full prefix at n = " + std::to_string(report.first_full_index));

    return report;
}

} // namespace halphen
