#include "halphen/json_io.hpp"

namespace halphen {

using nlohmann::json;

json rational_to_json(const Rational& value) {
    if (value.denominator() == 1) return json(value.numerator());
    return json(std::to_string(value.numerator()) + "/" + std::to_string(value.denominator()));
}

void to_json(json& j, const Profile& p) {
    if (p.empty()) {
        j = json{{"offset", 0}, {"values", json::array()}};
        return;
    }
    j = json{{"offset", p.min_index()}, {"values", p.dense()}};
}

void from_json(const json& j, Profile& p) {
    const Int offset = j.at("offset").get<Int>();
    const auto values = j.at("values").get<std::vector<Int>>();
    p = profile_from_values(values, offset);
}

void to_json(json& j, const DeltaParams& q) {
    const char* branch = q.branch == DeltaBranch::A ? "A" : q.branch == DeltaBranch::B ? "B" : "C";
    j = json{{"N", q.N},     {"s", q.s},     {"d", q.d},      {"T", q.T},
             {"R", q.R},     {"rho", q.rho}, {"eps", q.eps},  {"branch", branch}};
}

void to_json(json& j, const PrDeltaParams& q) {
    j = json{{"N", q.N}, {"d", q.d}, {"r", q.r}, {"rho", q.rho}, {"eps", q.eps}};
}

void to_json(json& j, const PropertyCheck& c) {
    j = json{{"name", c.name}, {"pass", c.pass}};
    if (!c.note.empty()) j["note"] = c.note;
}

void to_json(json& j, const DeltaPropertyReport& r) {
    j = json{{"params", r.params},
             {"profile", r.profile},
             {"n_star", r.n_star},
             {"first_full_index", r.first_full_index},
             {"checks", r.checks},
             {"all_pass", r.all_pass()}};
}

void to_json(json& j, const BoundReport& r) {
    json inputs{{"g", r.inputs.g}, {"d", r.inputs.d}, {"N", r.inputs.N}};
    if (r.inputs.ambient == Ambient::P3) {
        inputs["ambient"] = "P3";
        inputs["s"] = r.inputs.s_or_r;
    } else {
        inputs["ambient"] = "Pr";
        inputs["r"] = r.inputs.s_or_r;
    }
    inputs["e_override"] = r.inputs.e_override ? json(*r.inputs.e_override) : json(nullptr);
    j = json{{"inputs", inputs},
             {"n_used", r.n_used},
             {"double_sum_bound", r.double_sum_bound},
             {"closed_form", r.closed_form ? json(*r.closed_form) : json(nullptr)},
             {"agree", r.agree},
             {"q", r.q ? json(*r.q) : json(nullptr)},
             {"notes", r.notes}};
}

void to_json(json& j, const HalphenGenus& r) {
    j = json{{"d", r.d},
             {"s", r.s},
             {"delta_route", r.delta_route},
             {"printed", rational_to_json(r.printed)},
             {"agree", r.agree},
             {"n_star", r.n_star}};
}

void to_json(json& j, const ExtremalityReport& r) {
    j = json{{"candidates", r.candidates},
             {"violations", r.violations},
             {"double_sum_violations", r.double_sum_violations},
             {"equality_witnesses", r.equality_witnesses},
             {"rigidity_holds", r.rigidity_holds},
             {"metadata", r.metadata}};
    if (!r.zero_reference_violations.empty())
        j["zero_reference_violations"] = r.zero_reference_violations;
}

void to_json(json& j, const FamilySpec& s) {
    const char* kind = nullptr;
    switch (s.kind) {
        case FamilyKind::CompleteIntersection: kind = "complete_intersection"; break;
        case FamilyKind::Halphen: kind = "halphen"; break;
        case FamilyKind::TwoLinesLinked: kind = "two_lines_linked"; break;
        case FamilyKind::QuadricType: kind = "quadric_type"; break;
        case FamilyKind::CastelnuovoPr: kind = "castelnuovo_pr"; break;
    }
    j = json{{"kind", kind}, {"name", s.name}, {"d", s.d}, {"g", s.g}};
    if (s.kind == FamilyKind::CastelnuovoPr)
        j["r"] = s.r;
    else
        j["s"] = s.s;
    if (s.e_estimate) j["e_estimate"] = *s.e_estimate;
    if (s.kind == FamilyKind::Halphen) {
        j["m"] = s.m;
        j["e"] = s.e;
    }
    if (s.scroll_a) j["scroll_a"] = *s.scroll_a;
    if (s.scroll_b) j["scroll_b"] = *s.scroll_b;
}

void to_json(json& j, const FamilyReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr{{"series", row.series},
                {"computed", row.computed},
                {"expected", row.expected},
                {"match", row.match}};
        if (row.informational) jr["informational"] = true;
        if (!row.notes.empty()) jr["notes"] = row.notes;
        rows.push_back(std::move(jr));
    }
    j = json{{"family", r.spec}, {"rows", rows}, {"all_required_match", r.all_required_match()}};
}

} // namespace halphen
