#include "halphen/bounds.hpp"

#include <algorithm>

namespace halphen {

namespace {

Int rational_to_int(const Rational& v, const char* what) {
    if (v.denominator() != 1)
        throw NonIntegerResult(std::string(what) + " evaluates to " +
                               std::to_string(v.numerator()) + "/" +
                               std::to_string(v.denominator()));
    return v.numerator();
}

Rational half(Int numerator) { return Rational(numerator, 2); }

// Full closed form at the stabilization threshold, in T, R, rho, eps.
Rational closed_form_rational(Int g, Int d, const DeltaParams& q) {
    const Int s = q.s, T = q.T, R = q.R, rho = q.rho, eps = q.eps;
    return Rational(g) + Rational((T - rho - 2 * s) * d) - 1 +
           Rational(rho + 1) * (Rational(R - T) + half(3 * s * s + s) + half(s) * (rho + 2)) -
           half((s - eps) * (s - eps - 1)) + Rational(s * s * s) + half(3 * s * s) + half(s) -
           Rational(2 * s * T) + Rational(2 * s * R) - Rational(R * T) -
           Rational(T * T * T - 3 * T * T + 2 * T, 6);
}

// Specialized pencil / net forms (N = 1 and N = 2); identical to the full
// closed form on their parameter range, asserted at every call.
Rational specialized_form(Int g, const DeltaParams& q) {
    const Int s = q.s, rho = q.rho, eps = q.eps;
    Rational v = Rational(g) - Rational(s * s * s) + half(3 * s * s) + half(3 * s) -
                 half(3 * rho * s * s) - Rational(s * eps) + Rational(2 * rho * s) + half(eps) -
                 half(eps * eps) - half(s * rho * rho) - Rational(rho * eps) - Rational(rho);
    v -= q.N == 1 ? 2 : 1;
    return v;
}

void note_if_vacuous(BoundReport& report) {
    if (report.double_sum_bound <= 0)
        report.notes.push_back("vacuous: bound is <= 0 and is reported unclamped");
}

} // namespace

Int primary_bound_at(Int g, Int d, const Profile& delta, Int n) {
    return delta.double_sum(n) + g - n * d - 1;
}

BoundReport primary_bound(Int g, Int d, Int s, Int N, std::optional<Int> e_override) {
    if (g < 0) throw DomainError("requires g >= 0, got g = " + std::to_string(g));
    const DeltaParams params = delta_params(N, s, d);
    const Profile delta = delta_profile(params);
    const Int n_star = std::max<Int>(speciality_threshold(params), 0);

    BoundReport report;
    report.inputs = BoundInputs{g, d, Ambient::P3, s, N, e_override};
    report.n_used = e_override ? std::max<Int>(*e_override + 1, 0) : n_star;
    report.double_sum_bound = primary_bound_at(g, d, delta, report.n_used);
    if (report.n_used == n_star) {
        report.closed_form = closed_form_bound(g, d, s, N);
        report.agree = *report.closed_form == report.double_sum_bound;
        if (!report.agree)
            report.notes.push_back(
                "closed form assumes the triangular start T(N) <= s-1; the double sum is authoritative");
    }
    note_if_vacuous(report);
    return report;
}

Int closed_form_bound(Int g, Int d, Int s, Int N) {
    if (g < 0) throw DomainError("requires g >= 0, got g = " + std::to_string(g));
    const DeltaParams params = delta_params(N, s, d);
    const Int value = rational_to_int(closed_form_rational(g, d, params), "closed-form bound");
    if (N == 1 || N == 2) {
        const Int special = rational_to_int(specialized_form(g, params), "specialized closed form");
        if (special != value)
            throw InternalInconsistency("specialized N = " + std::to_string(N) +
                                        " closed form gives " + std::to_string(special) +
                                        " but the full form gives " + std::to_string(value));
    }
    return value;
}

BoundReport nonprimary_bound(Int g, Int d, Int s, Int N) {
    if (g < 0) throw DomainError("requires g >= 0, got g = " + std::to_string(g));
    if (N < 0) throw DomainError("requires N >= 0, got N = " + std::to_string(N));
    const DeltaParams params0 = delta_params(0, s, d);
    const Profile delta0 = delta_profile(params0);

    // Largest shift whose double sum still fits inside N+1. double_sum(0) = 1
    // and the sums grow without bound, so the loop terminates.
    Int q_shift = 0;
    while (delta0.double_sum(q_shift + 1) <= N + 1) ++q_shift;

    const Int top = 2 * s + params0.rho - 1;
    BoundReport report;
    report.inputs = BoundInputs{g, d, Ambient::P3, s, N, std::nullopt};
    report.q = q_shift;
    report.n_used = top - q_shift;
    report.double_sum_bound = g - report.n_used * d - 1 + delta0.double_sum(top);
    report.notes.push_back("shifted N = 0 profile; Q = " + std::to_string(q_shift));
    note_if_vacuous(report);
    return report;
}

BoundReport pr_primary_bound(Int g, Int d, Int r, Int N, std::optional<Int> e_override) {
    if (g < 0) throw DomainError("requires g >= 0, got g = " + std::to_string(g));
    const auto [params, delta] = delta_pr_profile(N, d, r);
    const Int rho = params.rho, eps = params.eps;

    BoundReport report;
    report.inputs = BoundInputs{g, d, Ambient::Pr, r, N, e_override};
    report.n_used = e_override ? std::max<Int>(*e_override + 1, 0) : rho;
    report.double_sum_bound = primary_bound_at(g, d, delta, report.n_used);
    if (report.n_used == rho) {
        // rho^2 - rho is even, so this is exact in integers.
        const Int closed = g - eps * rho + N - rho - (rho * rho - rho) / 2 * (r - 1);
        report.closed_form = closed;
        report.agree = closed == report.double_sum_bound;
        if (!report.agree)
            throw InternalInconsistency("ambient-r closed form " + std::to_string(closed) +
                                        " != double sum " + std::to_string(report.double_sum_bound));
    }
    note_if_vacuous(report);
    return report;
}

HalphenGenus halphen_genus_bound(Int d, Int s) {
    const DeltaParams params = delta_params(0, s, d);
    const Profile delta = delta_profile(params);

    HalphenGenus out;
    out.d = d;
    out.s = s;
    out.n_star = speciality_threshold(params);
    out.delta_route = out.n_star * d + 1 - delta.double_sum(out.n_star);

    // Classical formula with d = ks - eps, 0 <= eps <= s-1, kept as an exact
    // rational; it is non-integral exactly where it disagrees with the
    // profile route.
    const Int eps = (s - d % s) % s;
    out.printed = Rational(d * d, 2 * s) + Rational(d * (s - 4), 2) + 1 +
                  Rational(eps, 2) * (Rational(s - eps - 1) + Rational(eps, s));
    out.agree = out.printed == Rational(out.delta_route);
    return out;
}

Int castelnuovo_genus_bound(Int r, Int d) {
    if (r < 3) throw DomainError("requires r >= 3, got r = " + std::to_string(r));
    if (d < r) throw DomainError("requires d >= r, got d = " + std::to_string(d));
    const Int m = (d - 1) / (r - 1);
    const Int eps = (d - 1) % (r - 1);
    return binom2(m) * (r - 1) + m * eps;
}

Int castelnuovo_genus_bound_d_convention(Int r, Int d) {
    if (r < 3) throw DomainError("requires r >= 3, got r = " + std::to_string(r));
    if (d < r) throw DomainError("requires d >= r, got d = " + std::to_string(d));
    const Int m = d / (r - 1);
    const Int eps = d % (r - 1);
    return binom2(m) * (r - 1) + m * eps;
}

Int speciality_envelope(Int delta, Int N, Int g, Int d, std::optional<GonalityClass> cls) {
    if (d < 1) throw DomainError("requires d >= 1, got d = " + std::to_string(d));
    if (!(delta > N && N >= 0))
        throw DomainError("requires delta > N >= 0, got N = " + std::to_string(N) +
                          ", delta = " + std::to_string(delta));
    Int bound = std::min<Int>(delta - N - 1, floor_div(2 * g - 2, d));
    if (cls) {
        switch (*cls) {
            case GonalityClass::Hyperelliptic: bound = std::min<Int>(bound, 0); break;
            case GonalityClass::Trigonal: bound = std::min<Int>(bound, 1); break;
            case GonalityClass::Quadrigonal: bound = std::min<Int>(bound, 2); break;
        }
    }
    return bound;
}

} // namespace halphen
