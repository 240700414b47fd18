#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "halphen/bounds.hpp"
#include "halphen/delta.hpp"
#include "halphen/families.hpp"
#include "halphen/json_io.hpp"
#include "halphen/oracle.hpp"

namespace halphen::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string format = "markdown";
    Int cap = 14;
};

// Inclusive integer range "lo[:hi[:step]]".
struct Range {
    Int lo = 0;
    Int hi = 0;
    Int step = 1;
};

Range parse_range(const std::string& text) {
    Range range;
    std::istringstream in(text);
    std::string part;
    std::vector<Int> parts;
    while (std::getline(in, part, ':')) {
        std::size_t used = 0;
        try {
            parts.push_back(std::stoll(part, &used));
        } catch (const std::exception&) {
            throw DomainError("bad range: " + text);
        }
        if (used != part.size()) throw DomainError("bad range: " + text);
    }
    if (parts.empty() || parts.size() > 3) throw DomainError("bad range: " + text);
    range.lo = parts[0];
    range.hi = parts.size() > 1 ? parts[1] : parts[0];
    range.step = parts.size() > 2 ? parts[2] : 1;
    if (range.step < 1) throw DomainError("range step must be >= 1: " + text);
    if (range.lo > range.hi) throw DomainError("empty range: " + text);
    return range;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void print_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(cells[i]);
    }
    out << '\n';
}

void print_markdown_table(std::ostream& out, const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    out << "| " << join(header, " | ") << " |\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << '\n';
    for (const auto& row : rows) out << "| " << join(row, " | ") << " |\n";
}

std::string rational_str(const Rational& v) {
    if (v.denominator() == 1) return std::to_string(v.numerator());
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

std::string opt_str(const std::optional<Int>& v) { return v ? std::to_string(*v) : ""; }

void emit_kv(std::ostream& out, const Config& cfg, const json& j,
             const std::vector<std::pair<std::string, std::string>>& kv) {
    if (cfg.format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    if (cfg.format == "csv") {
        std::vector<std::string> header, row;
        for (const auto& [k, v] : kv) {
            header.push_back(k);
            row.push_back(v);
        }
        print_csv_row(out, header);
        print_csv_row(out, row);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : kv) rows.push_back({k, v});
    print_markdown_table(out, {"field", "value"}, rows);
}

std::string profile_str(const Profile& p) {
    if (p.empty()) return "[]";
    std::string s = "[";
    const auto dense = p.dense();
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dense[i]);
    }
    s += "] at offset " + std::to_string(p.min_index());
    return s;
}

void emit_bound(std::ostream& out, const Config& cfg, const BoundReport& report) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("g", std::to_string(report.inputs.g));
    kv.emplace_back("d", std::to_string(report.inputs.d));
    kv.emplace_back(report.inputs.ambient == Ambient::P3 ? "s" : "r",
                    std::to_string(report.inputs.s_or_r));
    kv.emplace_back("N", std::to_string(report.inputs.N));
    kv.emplace_back("e_override", opt_str(report.inputs.e_override));
    kv.emplace_back("n_used", std::to_string(report.n_used));
    kv.emplace_back("double_sum_bound", std::to_string(report.double_sum_bound));
    kv.emplace_back("closed_form", opt_str(report.closed_form));
    kv.emplace_back("agree", report.agree ? "true" : "false");
    kv.emplace_back("q", opt_str(report.q));
    kv.emplace_back("notes", join(report.notes, "; "));
    emit_kv(out, cfg, json(report), kv);
}

void emit_delta_report(std::ostream& out, const Config& cfg, const DeltaPropertyReport& report) {
    if (cfg.format == "json") {
        out << json(report).dump(2) << '\n';
        return;
    }
    if (cfg.format == "csv") {
        print_csv_row(out, {"check", "pass", "note"});
        for (const auto& c : report.checks)
            print_csv_row(out, {c.name, c.pass ? "true" : "false", c.note});
        return;
    }
    const auto& q = report.params;
    out << "params: N=" << q.N << " s=" << q.s << " d=" << q.d << " T=" << q.T << " R=" << q.R
        << " rho=" << q.rho << " eps=" << q.eps << " branch="
        << (q.branch == DeltaBranch::A ? 'A' : q.branch == DeltaBranch::B ? 'B' : 'C') << "\n";
    out << "profile: " << profile_str(report.profile) << "\n";
    out << "n_star: " << report.n_star << " (prefix first reaches d at n = "
        << report.first_full_index << ")\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.checks)
        rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.note});
    print_markdown_table(out, {"check", "result", "note"}, rows);
}

void emit_family(std::ostream& out, const Config& cfg, const FamilyReport& report) {
    if (cfg.format == "json") {
        out << json(report).dump(2) << '\n';
        return;
    }
    const std::vector<std::string> header = {"series", "computed", "expected",
                                             "match",  "informational", "notes"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : report.rows)
        rows.push_back({row.series, std::to_string(row.computed), std::to_string(row.expected),
                        row.match ? "true" : "false", row.informational ? "true" : "false",
                        join(row.notes, "; ")});
    if (cfg.format == "csv") {
        print_csv_row(out, header);
        for (const auto& row : rows) print_csv_row(out, row);
        return;
    }
    out << report.spec.name << ": d=" << report.spec.d << " g=" << report.spec.g;
    if (report.spec.kind == FamilyKind::CastelnuovoPr)
        out << " r=" << report.spec.r;
    else
        out << " s=" << report.spec.s;
    if (report.spec.e_estimate) out << " e_estimate=" << *report.spec.e_estimate;
    out << "\n\n";
    print_markdown_table(out, header, rows);
}

struct TableEmitter {
    const Config& cfg;
    std::ostream& out;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> md_rows;
    json json_rows = json::array();

    TableEmitter(const Config& c, std::ostream& o, std::vector<std::string> h)
        : cfg(c), out(o), header(std::move(h)) {
        if (cfg.format == "csv") print_csv_row(out, header);
    }

    void row(const std::vector<std::string>& cells) {
        if (cfg.format == "csv") {
            print_csv_row(out, cells);
        } else if (cfg.format == "json") {
            json j;
            for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = cells[i];
            json_rows.push_back(std::move(j));
        } else {
            md_rows.push_back(cells);
        }
    }

    void finish() {
        if (cfg.format == "json")
            out << json_rows.dump(2) << '\n';
        else if (cfg.format == "markdown")
            print_markdown_table(out, header, md_rows);
    }
};

template <typename Fn>
void for_range(const Range& r, Fn&& fn) {
    for (Int v = r.lo; v <= r.hi; v += r.step) fn(v);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree bounds for linear series on projective curves"};
    app.require_subcommand(1);
    app.fallthrough(); // inherited: global options may follow the subcommand

    Config cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    app.add_option("--cap", cfg.cap, "enumeration cap for verify")->capture_default_str();

    // delta
    auto* delta_cmd = app.add_subcommand("delta", "extremal profile and its property report");
    Int dN = 0, ds = 2, dd = 1;
    delta_cmd->add_option("--N", dN, "series dimension h0 - 1")->required();
    delta_cmd->add_option("--s", ds, "minimal surface degree")->required();
    delta_cmd->add_option("--d", dd, "curve degree")->required();
    delta_cmd->callback([&] { emit_delta_report(out, cfg, delta_property_report(delta_params(dN, ds, dd))); });

    // delta-pr
    auto* delta_pr_cmd = app.add_subcommand("delta-pr", "extremal profile in ambient dimension r");
    Int pN = 0, pd = 3, prr = 3;
    delta_pr_cmd->add_option("--N", pN)->required();
    delta_pr_cmd->add_option("--d", pd)->required();
    delta_pr_cmd->add_option("--r", prr)->required();
    delta_pr_cmd->callback([&] {
        const auto [params, profile] = delta_pr_profile(pN, pd, prr);
        json j{{"params", params}, {"profile", profile}};
        emit_kv(out, cfg, j,
                {{"N", std::to_string(params.N)},
                 {"d", std::to_string(params.d)},
                 {"r", std::to_string(params.r)},
                 {"rho", std::to_string(params.rho)},
                 {"eps", std::to_string(params.eps)},
                 {"profile", profile_str(profile)}});
    });

    // bound primary|nonprimary|pr
    auto* bound_cmd = app.add_subcommand("bound", "degree bound for a linear series");
    bound_cmd->require_subcommand(1);
    Int bg = 0, bd = 1, bs = 2, br = 3, bN = 1;
    std::optional<Int> be;
    auto* bp = bound_cmd->add_subcommand("primary", "primary series on a space curve");
    bp->add_option("--g", bg)->required();
    bp->add_option("--d", bd)->required();
    bp->add_option("--s", bs)->required();
    bp->add_option("--N", bN)->required();
    bp->add_option("--e", be, "upper bound for the speciality level");
    bp->callback([&] { emit_bound(out, cfg, primary_bound(bg, bd, bs, bN, be)); });
    auto* bn = bound_cmd->add_subcommand("nonprimary", "series that need not be primary");
    bn->add_option("--g", bg)->required();
    bn->add_option("--d", bd)->required();
    bn->add_option("--s", bs)->required();
    bn->add_option("--N", bN)->required();
    bn->callback([&] { emit_bound(out, cfg, nonprimary_bound(bg, bd, bs, bN)); });
    auto* bpr = bound_cmd->add_subcommand("pr", "primary series in ambient dimension r");
    bpr->add_option("--g", bg)->required();
    bpr->add_option("--d", bd)->required();
    bpr->add_option("--r", br)->required();
    bpr->add_option("--N", bN)->required();
    bpr->add_option("--e", be, "upper bound for the speciality level");
    bpr->callback([&] { emit_bound(out, cfg, pr_primary_bound(bg, bd, br, bN, be)); });

    // genus halphen|castelnuovo
    auto* genus_cmd = app.add_subcommand("genus", "maximal-genus bounds");
    genus_cmd->require_subcommand(1);
    Int gd = 1, gs = 2, gr = 3;
    auto* gh = genus_cmd->add_subcommand("halphen", "space curves on no surface of degree < s");
    gh->add_option("--d", gd)->required();
    gh->add_option("--s", gs)->required();
    gh->callback([&] {
        const HalphenGenus genus = halphen_genus_bound(gd, gs);
        emit_kv(out, cfg, json(genus),
                {{"d", std::to_string(genus.d)},
                 {"s", std::to_string(genus.s)},
                 {"delta_route", std::to_string(genus.delta_route)},
                 {"printed", rational_str(genus.printed)},
                 {"agree", genus.agree ? "true" : "false"},
                 {"n_star", std::to_string(genus.n_star)}});
    });
    auto* gc = genus_cmd->add_subcommand("castelnuovo", "non-degenerate curves in dimension r");
    gc->add_option("--r", gr)->required();
    gc->add_option("--d", gd)->required();
    gc->callback([&] {
        const Int genus = castelnuovo_genus_bound(gr, gd);
        json j{{"r", gr},
               {"d", gd},
               {"genus_bound", genus},
               {"note", "uses the d-1 = m(r-1) + eps decomposition"}};
        emit_kv(out, cfg, j,
                {{"r", std::to_string(gr)},
                 {"d", std::to_string(gd)},
                 {"genus_bound", std::to_string(genus)}});
    });

    // family
    auto* family_cmd = app.add_subcommand("family", "worked curve families");
    family_cmd->require_subcommand(1);
    Int fs = 2, fp = 2, fd = 1, fa = 1, fb = 1, fr = 3;
    std::optional<Int> fga, fgb, fgg;
    auto* fci = family_cmd->add_subcommand("ci", "complete intersection (s, p)");
    fci->add_option("--s", fs)->required();
    fci->add_option("--p", fp)->required();
    fci->callback([&] { emit_family(out, cfg, check_family(make_complete_intersection(fs, fp))); });
    auto* fh = family_cmd->add_subcommand("halphen", "maximal-genus space curve (d, s)");
    fh->add_option("--d", fd)->required();
    fh->add_option("--s", fs)->required();
    fh->callback([&] { emit_family(out, cfg, check_family(make_halphen(fd, fs))); });
    auto* ftl = family_cmd->add_subcommand("two-lines", "curve linked to two disjoint lines (s, p)");
    ftl->add_option("--s", fs)->required();
    ftl->add_option("--p", fp)->required();
    ftl->callback([&] { emit_family(out, cfg, check_family(make_two_lines_linked(fs, fp))); });
    auto* fq = family_cmd->add_subcommand("quadric", "curve of type (a, b) on a quadric");
    fq->add_option("--a", fa)->required();
    fq->add_option("--b", fb)->required();
    fq->callback([&] { emit_family(out, cfg, check_family(make_quadric_type(fa, fb))); });
    auto* fcp = family_cmd->add_subcommand("castelnuovo-pr", "maximal-genus curve in dimension r");
    fcp->add_option("--r", fr)->required();
    fcp->add_option("--d", fd)->required();
    fcp->add_option("--a", fga, "scroll curve parameter a");
    fcp->add_option("--b", fgb, "scroll curve parameter b");
    fcp->add_option("--g", fgg, "genus override for non-maximal curves");
    fcp->callback(
        [&] { emit_family(out, cfg, check_family(make_castelnuovo_pr(fr, fd, fga, fgb, fgg))); });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive extremality check at desk scale");
    Int vd = 1, vN = 0, vs = 0, vwindow = 0;
    std::optional<Int> vpr;
    bool vserial = false;
    verify_cmd->add_option("--d", vd)->required();
    verify_cmd->add_option("--N", vN);
    verify_cmd->add_option("--s", vs, "minimal surface degree (space-curve constraint)");
    verify_cmd->add_option("--pr", vpr, "ambient dimension (switches to the r-space constraint)");
    verify_cmd->add_option("--window", vwindow, "maximal support index (default 2d)");
    verify_cmd->add_flag("--serial", vserial, "disable the parallel partition");
    verify_cmd->callback([&] {
        AdmissibilityConstraint constraint;
        Profile reference;
        if (vpr) {
            constraint = PrStarStar{*vpr};
            reference = delta_pr_profile(vN, vd, *vpr).second;
        } else {
            if (vs < 2) throw DomainError("verify requires --s >= 2 or --pr");
            constraint = P3Star{vs, vd};
            reference = delta_profile(delta_params(vN, vs, vd));
        }
        EnumerationSpec spec = EnumerationSpec::with_default_window(constraint, vd, vN, cfg.cap);
        if (vwindow > 0) spec.window = vwindow;
        const ExtremalityReport report =
            verify_extremality(spec, reference, vserial ? ExecMode::Serial : ExecMode::Parallel);
        if (cfg.format == "json") {
            out << json(report).dump(2) << '\n';
        } else {
            emit_kv(out, cfg, json(report),
                    {{"candidates", std::to_string(report.candidates)},
                     {"violations", std::to_string(report.violations.size())},
                     {"double_sum_violations", std::to_string(report.double_sum_violations.size())},
                     {"equality_witnesses", std::to_string(report.equality_witnesses.size())},
                     {"rigidity_holds", report.rigidity_holds ? "true" : "false"}});
        }
    });

    // table
    auto* table_cmd = app.add_subcommand("table", "batch evaluation over inclusive ranges lo[:hi[:step]]");
    table_cmd->require_subcommand(1);
    std::string tg = "0", td = "1", ts = "2", tr = "3", tN = "1";
    std::optional<Int> te;
    auto add_table_range = [](CLI::App* cmd, const char* name, std::string& slot, bool required = true) {
        auto* opt = cmd->add_option(name, slot, "range lo[:hi[:step]]");
        if (required) opt->required();
    };

    auto* tp = table_cmd->add_subcommand("primary", "primary space-curve bounds");
    add_table_range(tp, "--g", tg);
    add_table_range(tp, "--d", td);
    add_table_range(tp, "--s", ts);
    add_table_range(tp, "--N", tN);
    tp->add_option("--e", te);
    tp->callback([&] {
        TableEmitter emit(cfg, out,
                          {"g", "d", "s", "N", "status", "n_used", "double_sum_bound",
                           "closed_form", "agree"});
        for_range(parse_range(tg), [&](Int g) {
            for_range(parse_range(td), [&](Int d) {
                for_range(parse_range(ts), [&](Int s) {
                    for_range(parse_range(tN), [&](Int N) {
                        try {
                            const BoundReport r = primary_bound(g, d, s, N, te);
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(s),
                                      std::to_string(N), "ok", std::to_string(r.n_used),
                                      std::to_string(r.double_sum_bound), opt_str(r.closed_form),
                                      r.agree ? "true" : "false"});
                        } catch (const DomainError&) {
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(s),
                                      std::to_string(N), "rejected", "", "", ""});
                        }
                    });
                });
            });
        });
        emit.finish();
    });

    auto* tn = table_cmd->add_subcommand("nonprimary", "non-primary space-curve bounds");
    add_table_range(tn, "--g", tg);
    add_table_range(tn, "--d", td);
    add_table_range(tn, "--s", ts);
    add_table_range(tn, "--N", tN);
    tn->callback([&] {
        TableEmitter emit(cfg, out, {"g", "d", "s", "N", "status", "n_used", "q", "double_sum_bound"});
        for_range(parse_range(tg), [&](Int g) {
            for_range(parse_range(td), [&](Int d) {
                for_range(parse_range(ts), [&](Int s) {
                    for_range(parse_range(tN), [&](Int N) {
                        try {
                            const BoundReport r = nonprimary_bound(g, d, s, N);
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(s),
                                      std::to_string(N), "ok", std::to_string(r.n_used),
                                      opt_str(r.q), std::to_string(r.double_sum_bound)});
                        } catch (const DomainError&) {
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(s),
                                      std::to_string(N), "rejected", "", "", ""});
                        }
                    });
                });
            });
        });
        emit.finish();
    });

    auto* tpr = table_cmd->add_subcommand("pr", "primary bounds in ambient dimension r");
    add_table_range(tpr, "--g", tg);
    add_table_range(tpr, "--d", td);
    add_table_range(tpr, "--r", tr);
    add_table_range(tpr, "--N", tN);
    tpr->add_option("--e", te);
    tpr->callback([&] {
        TableEmitter emit(cfg, out,
                          {"g", "d", "r", "N", "status", "n_used", "double_sum_bound",
                           "closed_form", "agree"});
        for_range(parse_range(tg), [&](Int g) {
            for_range(parse_range(td), [&](Int d) {
                for_range(parse_range(tr), [&](Int r) {
                    for_range(parse_range(tN), [&](Int N) {
                        try {
                            const BoundReport rep = pr_primary_bound(g, d, r, N, te);
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(r),
                                      std::to_string(N), "ok", std::to_string(rep.n_used),
                                      std::to_string(rep.double_sum_bound), opt_str(rep.closed_form),
                                      rep.agree ? "true" : "false"});
                        } catch (const DomainError&) {
                            emit.row({std::to_string(g), std::to_string(d), std::to_string(r),
                                      std::to_string(N), "rejected", "", "", ""});
                        }
                    });
                });
            });
        });
        emit.finish();
    });

    auto* th = table_cmd->add_subcommand("halphen", "maximal-genus values for space curves");
    add_table_range(th, "--d", td);
    add_table_range(th, "--s", ts);
    th->callback([&] {
        TableEmitter emit(cfg, out, {"d", "s", "status", "delta_route", "printed", "agree"});
        for_range(parse_range(td), [&](Int d) {
            for_range(parse_range(ts), [&](Int s) {
                try {
                    const HalphenGenus genus = halphen_genus_bound(d, s);
                    emit.row({std::to_string(d), std::to_string(s), "ok",
                              std::to_string(genus.delta_route), rational_str(genus.printed),
                              genus.agree ? "true" : "false"});
                } catch (const DomainError&) {
                    emit.row({std::to_string(d), std::to_string(s), "rejected", "", "", ""});
                }
            });
        });
        emit.finish();
    });

    auto* tc = table_cmd->add_subcommand("castelnuovo", "maximal-genus values in dimension r");
    add_table_range(tc, "--r", tr);
    add_table_range(tc, "--d", td);
    tc->callback([&] {
        TableEmitter emit(cfg, out, {"r", "d", "status", "genus_bound"});
        for_range(parse_range(tr), [&](Int r) {
            for_range(parse_range(td), [&](Int d) {
                try {
                    emit.row({std::to_string(r), std::to_string(d), "ok",
                              std::to_string(castelnuovo_genus_bound(r, d))});
                } catch (const DomainError&) {
                    emit.row({std::to_string(r), std::to_string(d), "rejected", ""});
                }
            });
        });
        emit.finish();
    });

    std::vector<const char*> argv;
    argv.push_back("halphen");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace halphen::cli
