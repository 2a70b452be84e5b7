#include "dyckstat/cli.hpp"

#include "dyckstat/bijections.hpp"
#include "dyckstat/catalog.hpp"
#include "dyckstat/checks.hpp"
#include "dyckstat/errors.hpp"
#include "dyckstat/render.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace dyck::cli {

namespace {

using nlohmann::json;

// --- plain renderers (one per command, driven purely by the JSON doc) ---

std::string join_ints(const json& arr) {
    std::string out = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += " ";
        out += arr[i].dump();
    }
    return out + "]";
}

std::string plain_stats(const json& doc) {
    const json& r = doc.at("results");
    std::ostringstream os;
    os << "path: " << doc.at("params").at("path").get<std::string>() << "\n";
    os << "semilength: " << r.at("semilength") << "\n";
    for (const char* key : {"pea", "val", "sp", "ap", "spw", "apw", "sp_prime", "sval", "svw"})
        os << key << ": " << r.at(key) << "\n";
    for (const char* key : {"sp_by_weight", "ap_by_weight", "sval_by_weight", "peak_heights",
                            "valley_heights", "ph_by_height"})
        os << key << ": " << join_ints(r.at(key)) << "\n";
    for (const char* key : {"hill_free", "avoids_uudu", "is_pyramid"})
        os << key << ": " << (r.at(key).get<bool>() ? "true" : "false") << "\n";
    os << "classes:";
    for (const auto& name : r.at("classes")) os << " " << name.get<std::string>();
    os << "\n";
    return os.str();
}

std::string plain_gen(const json& doc) {
    std::ostringstream os;
    for (const auto& p : doc.at("results").at("paths")) os << p.get<std::string>() << "\n";
    return os.str();
}

std::string plain_series(const json& doc) {
    const json& r = doc.at("results");
    std::ostringstream os;
    if (r.contains("values")) {
        for (std::size_t i = 0; i < r.at("values").size(); ++i) {
            if (i) os << " ";
            os << r.at("values")[i].get<std::string>();
        }
        os << "\n";
    } else {
        for (const auto& c : r.at("coefficients"))
            os << "z^" << c.at("power").get<int>() << ": " << c.at("poly").get<std::string>()
               << "\n";
    }
    return os.str();
}

std::string plain_seq(const json& doc) {
    const json& r = doc.at("results");
    std::ostringstream os;
    for (std::size_t i = 0; i < r.at("values").size(); ++i)
        os << i << " " << r.at("values")[i].get<std::string>() << "\n";
    return os.str();
}

std::string plain_verify(const json& doc) {
    std::ostringstream os;
    for (const auto& rep : doc.at("results").at("reports")) {
        os << rep.at("id").get<std::string>() << ": ";
        if (rep.at("ok").get<bool>())
            os << "ok";
        else
            os << "MISMATCH at z^" << rep.at("first_mismatch").get<int>();
        os << " (order " << rep.at("order").get<int>() << ")\n";
    }
    os << "result: " << (doc.at("results").at("all_ok").get<bool>() ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string plain_identities(const json& doc) {
    std::ostringstream os;
    for (const auto& rep : doc.at("results").at("reports")) {
        os << rep.at("name").get<std::string>() << ": ";
        if (rep.at("ok").get<bool>())
            os << "ok\n";
        else
            os << "FAIL at z^" << rep.at("first_mismatch").get<int>() << "\n";
    }
    os << "result: " << (doc.at("results").at("all_ok").get<bool>() ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string plain_bij(const json& doc) {
    const json& r = doc.at("results");
    std::ostringstream os;
    if (r.contains("composition")) os << "composition: " << r.at("composition").get<std::string>() << "\n";
    if (r.contains("path")) os << "path: " << r.at("path").get<std::string>() << "\n";
    if (r.contains("peak")) os << "peak: " << r.at("peak").get<int>() << "\n";
    if (r.contains("i")) os << "i: " << r.at("i").get<int>() << "\n";
    if (r.contains("columns")) {
        int k = 1;
        for (const auto& c : r.at("columns"))
            os << "col " << k++ << ": [" << c.at("bottom").get<int>() << ", "
               << c.at("top").get<int>() << ")\n";
        os << "area: " << r.at("area").get<long long>() << "\n";
        os << "semiperimeter: " << r.at("semiperimeter").get<int>() << "\n";
    }
    return os.str();
}

std::string plain_list(const json& doc) {
    std::ostringstream os;
    for (const auto& e : doc.at("results").at("entries")) {
        os << e.at("id").get<std::string>() << " | " << e.at("variables").get<std::string>()
           << " | " << e.at("description").get<std::string>();
        if (e.at("has_oracle").get<bool>()) os << " [oracle]";
        os << "\n";
    }
    return os.str();
}

std::string plain_check_all(const json& doc) {
    const json& r = doc.at("results");
    std::ostringstream os;
    os << plain_verify(json{{"results", json{{"reports", r.at("verify")},
                                             {"all_ok", r.at("verify_ok")}}}});
    os << plain_identities(json{{"results", json{{"reports", r.at("identities")},
                                                 {"all_ok", r.at("identities_ok")}}}});
    for (const auto& c : r.at("checks")) {
        os << c.at("name").get<std::string>() << ": ";
        if (c.at("ok").get<bool>())
            os << "ok\n";
        else
            os << "FAIL (" << c.at("detail").get<std::string>() << ")\n";
    }
    os << "check-all: " << (r.at("all_ok").get<bool>() ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string render_plain(const json& doc) {
    const std::string cmd = doc.at("command").get<std::string>();
    if (cmd == "stats") return plain_stats(doc);
    if (cmd == "gen") return plain_gen(doc);
    if (cmd == "series") return plain_series(doc);
    if (cmd == "seq") return plain_seq(doc);
    if (cmd == "verify") return plain_verify(doc);
    if (cmd == "identities") return plain_identities(doc);
    if (cmd == "bij") return plain_bij(doc);
    if (cmd == "list") return plain_list(doc);
    if (cmd == "check-all") return plain_check_all(doc);
    throw InvalidArgument("unknown command in document: " + cmd);
}

// --- document builders ---

json series_results(const Series& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(json{{"power", k}, {"poly", s.coeff(k).to_string()}});
    json out{{"order", s.order()}, {"coefficients", coeffs}};
    if (s.coefficients_constant()) {
        json values = json::array();
        for (const std::string& line : bfile_lines(s)) {
            auto space = line.find(' ');
            values.push_back(line.substr(space + 1));
        }
        out["values"] = values;
    }
    return out;
}

std::map<VariableId, Polynomial> parse_bindings(const std::vector<std::string>& sets) {
    std::map<VariableId, Polynomial> out;
    for (const std::string& text : sets) {
        auto eq = text.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("--set expects var=value, got '" + text + "'");
        VariableId v = VariableId::parse(text.substr(0, eq));
        std::string value = text.substr(eq + 1);
        // numeric (integer or a/b rational) or another variable name
        bool numeric = !value.empty() &&
                       (std::isdigit(static_cast<unsigned char>(value[0])) || value[0] == '-');
        if (numeric) {
            out.emplace(v, Polynomial(Rational(value)));
        } else {
            out.emplace(v, Polynomial::variable(VariableId::parse(value)));
        }
    }
    return out;
}

json classes_array(const ClassFlags& f) {
    json arr = json::array();
    if (f.w_strict) arr.push_back("w_strict");
    if (f.w_weak) arr.push_back("w_weak");
    if (f.w_strict_unimodal) arr.push_back("w_strict_unimodal");
    if (f.w_weak_unimodal) arr.push_back("w_weak_unimodal");
    if (f.m_strict) arr.push_back("m_strict");
    if (f.m_weak) arr.push_back("m_weak");
    if (f.m_strict_unimodal) arr.push_back("m_strict_unimodal");
    if (f.m_weak_unimodal) arr.push_back("m_weak_unimodal");
    if (f.in_lambda) arr.push_back("lambda");
    return arr;
}

json verify_report_json(const VerifyReport& r) {
    return json{{"id", r.id}, {"order", r.order}, {"ok", r.ok}, {"first_mismatch", r.first_mismatch}};
}

json identity_report_json(const IdentityReport& r) {
    return json{{"name", r.name}, {"ok", r.ok}, {"first_mismatch", r.first_mismatch}};
}

json check_result_json(const CheckResult& r) {
    return json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}};
}

struct Output {
    json doc;
    int exit_code = 0;
};

void emit(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << o.doc.dump(2) << "\n";
    } else if (format == "bfile") {
        const json& r = o.doc.at("results");
        if (!r.contains("values"))
            throw InvalidArgument("bfile output needs constant coefficients; bind variables");
        std::ostringstream os;
        for (std::size_t i = 0; i < r.at("values").size(); ++i)
            os << i << " " << r.at("values")[i].get<std::string>() << "\n";
        out << os.str();
    } else {
        out << render_plain(o.doc);
    }
}

int oracle_ceiling_default() {
    if (const char* env = std::getenv("DYCKSTAT_ORACLE_MAX")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw InvalidArgument("DYCKSTAT_ORACLE_MAX is not an integer");
        }
    }
    return 12;
}

} // namespace

std::string plain_from_json(const std::string& json_text) {
    return render_plain(json::parse(json_text));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dyck path statistics, generating functions, and bijections"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "plain, json, or bfile")
        ->check(CLI::IsMember({"plain", "json", "bfile"}));

    int order = 10;
    int oracle_max = -1; // resolved against the environment below
    std::string gf, path_text, bij_name;
    std::vector<std::string> sets;
    bool inverse = false;
    int peak = 0, target = -1, weight = -1;

    CLI::App* stats = app.add_subcommand("stats", "statistics of one path");
    stats->add_option("--path", path_text, "path text over U/D")->required();

    CLI::App* gen = app.add_subcommand("gen", "enumerate paths of one semilength");
    gen->add_option("--order", order, "semilength")->required();

    CLI::App* series = app.add_subcommand("series", "expand a catalog entry");
    series->add_option("--gf", gf, "catalog entry id")->required();
    series->add_option("--order", order, "truncation order");
    series->add_option("--set", sets, "variable binding var=value (repeatable)");

    CLI::App* seq = app.add_subcommand("seq", "export a sequence in b-file form");
    seq->add_option("--gf", gf, "catalog entry id")->required();
    seq->add_option("--order", order, "last index");
    seq->add_option("--set", sets, "variable binding var=value (repeatable)");

    CLI::App* verify = app.add_subcommand("verify", "check entries against brute force");
    verify->add_option("--gf", gf, "catalog entry id or 'all'")->required();
    CLI::Option* verify_order = verify->add_option("--order", order, "verification order");
    verify->add_option("--oracle-max", oracle_max, "brute-force ceiling");

    CLI::App* identities = app.add_subcommand("identities", "cross-entry identity checks");
    identities->add_option("--order", order, "comparison order");
    identities->add_option("--oracle-max", oracle_max, "brute-force ceiling");

    CLI::App* bij = app.add_subcommand("bij", "apply a bijection");
    bij->add_option("--bij", bij_name, "wlt, mlt, eq8, dv, or dp")
        ->required()
        ->check(CLI::IsMember({"wlt", "mlt", "eq8", "dv", "dp"}));
    bij->add_option("--path", path_text,
                    "path text; for --inverse: composition (wlt, mlt) or b:t columns (dv, dp)")
        ->required();
    bij->add_flag("--inverse", inverse, "apply the inverse direction");
    bij->add_option("--peak", peak, "distinguished peak index (eq8)");
    bij->add_option("--target", target, "target semilength (eq8 insertion)");
    bij->add_option("--weight", weight, "pyramid size to delete (eq8 with --inverse)");

    CLI::App* list = app.add_subcommand("list", "list the catalog");

    CLI::App* check_all = app.add_subcommand("check-all", "run every verification");
    check_all->add_option("--order", order, "verification order");
    check_all->add_option("--oracle-max", oracle_max, "brute-force ceiling");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (oracle_max < 0) oracle_max = oracle_ceiling_default();
        const Catalog& cat = Catalog::instance();
        Output o;

        if (stats->parsed()) {
            DyckPath p = DyckPath::parse(path_text);
            StatProfile st = analyze(p);
            ClassFlags f = class_flags(p, st);
            json results{{"semilength", p.semilength()},
                         {"pea", st.pea},
                         {"val", st.val},
                         {"sp", st.sp},
                         {"ap", st.ap},
                         {"spw", st.spw},
                         {"apw", st.apw},
                         {"sp_prime", st.sp_prime},
                         {"sval", st.sval},
                         {"svw", st.svw},
                         {"sp_by_weight", st.sp_by_weight},
                         {"ap_by_weight", st.ap_by_weight},
                         {"sval_by_weight", st.sval_by_weight},
                         {"peak_heights", st.peak_heights},
                         {"valley_heights", st.valley_heights},
                         {"ph_by_height", st.ph_by_height},
                         {"hill_free", st.hill_free},
                         {"avoids_uudu", st.avoids_uudu},
                         {"is_pyramid", st.is_pyramid},
                         {"classes", classes_array(f)}};
            o.doc = json{{"command", "stats"},
                         {"params", json{{"path", p.to_string()}}},
                         {"results", results}};
        } else if (gen->parsed()) {
            json paths = json::array();
            for_each_path(order, [&](const DyckPath& p) { paths.push_back(p.to_string()); });
            o.doc = json{{"command", "gen"},
                         {"params", json{{"n", order}}},
                         {"results", json{{"count", paths.size()}, {"paths", paths}}}};
        } else if (series->parsed() || seq->parsed()) {
            auto bindings = parse_bindings(sets);
            Series s = cat.expand(gf, order, bindings);
            json params{{"gf", gf}, {"order", order}};
            if (!sets.empty()) params["set"] = sets;
            o.doc = json{{"command", seq->parsed() ? "seq" : "series"},
                         {"params", params},
                         {"results", series_results(s)}};
            if (seq->parsed() && !o.doc.at("results").contains("values"))
                throw InvalidArgument("seq needs a univariate entry; bind marking variables");
        } else if (verify->parsed()) {
            std::vector<VerifyReport> reports;
            if (gf == "all") {
                for (const std::string& id : cat.ids()) {
                    const GfEntry& e = cat.entry(id);
                    if (!e.oracle) continue;
                    int n = verify_order->count() ? order
                                                  : std::min(e.default_verify_order, oracle_max);
                    reports.push_back(cat.verify(id, n, oracle_max));
                }
            } else {
                int n = verify_order->count()
                            ? order
                            : std::min(cat.entry(gf).default_verify_order, oracle_max);
                reports.push_back(cat.verify(gf, n, oracle_max));
            }
            bool all_ok = true;
            json arr = json::array();
            for (const auto& r : reports) {
                all_ok = all_ok && r.ok;
                arr.push_back(verify_report_json(r));
            }
            o.doc = json{{"command", "verify"},
                         {"params", json{{"gf", gf}, {"oracle_max", oracle_max}}},
                         {"results", json{{"reports", arr}, {"all_ok", all_ok}}}};
            o.exit_code = all_ok ? 0 : 1;
        } else if (identities->parsed()) {
            auto reports = cat.identity_checks(order, oracle_max);
            bool all_ok = true;
            json arr = json::array();
            for (const auto& r : reports) {
                all_ok = all_ok && r.ok;
                arr.push_back(identity_report_json(r));
            }
            o.doc = json{{"command", "identities"},
                         {"params", json{{"order", order}, {"oracle_max", oracle_max}}},
                         {"results", json{{"reports", arr}, {"all_ok", all_ok}}}};
            o.exit_code = all_ok ? 0 : 1;
        } else if (bij->parsed()) {
            json results;
            if (bij_name == "wlt" || bij_name == "mlt") {
                if (!inverse) {
                    DyckPath p = DyckPath::parse(path_text);
                    Composition c = (bij_name == "wlt") ? wlt_to_composition(p)
                                                        : mlt_to_composition(p);
                    results["composition"] = c.to_string();
                } else {
                    Composition c = Composition::parse(path_text);
                    DyckPath p = (bij_name == "wlt") ? wlt_from_composition(c)
                                                     : mlt_from_composition(c);
                    results["path"] = p.to_string();
                }
            } else if (bij_name == "eq8") {
                DyckPath p = DyckPath::parse(path_text);
                if (!inverse) {
                    if (target < 0) throw InvalidArgument("eq8 insertion needs --target");
                    PyramidInsertion ins = eq8_insert(MarkedPath{p, peak}, target);
                    results["path"] = ins.marked.path.to_string();
                    results["peak"] = ins.marked.peak_index;
                    results["i"] = ins.weight_delta;
                } else {
                    if (weight < 1) throw InvalidArgument("eq8 deletion needs --weight");
                    MarkedPath m = eq8_delete(MarkedPath{p, peak}, weight);
                    results["path"] = m.path.to_string();
                    results["peak"] = m.peak_index;
                }
            } else { // dv, dp
                if (!inverse) {
                    DyckPath p = DyckPath::parse(path_text);
                    ColumnPolyomino poly =
                        (bij_name == "dv") ? delest_viennot(p) : deutsch_prodinger(p);
                    json cols = json::array();
                    for (const auto& c : poly.columns())
                        cols.push_back(json{{"bottom", c.bottom}, {"top", c.top}});
                    results["columns"] = cols;
                    results["area"] = poly.area();
                    results["semiperimeter"] = poly.semiperimeter();
                } else {
                    ColumnPolyomino poly = ColumnPolyomino::parse_compact(path_text);
                    DyckPath p = (bij_name == "dv") ? delest_viennot_inverse(poly)
                                                    : deutsch_prodinger_inverse(poly);
                    results["path"] = p.to_string();
                }
            }
            o.doc = json{{"command", "bij"},
                         {"params", json{{"bij", bij_name},
                                         {"input", path_text},
                                         {"inverse", inverse}}},
                         {"results", results}};
        } else if (list->parsed()) {
            json entries = json::array();
            for (const std::string& id : cat.ids()) {
                const GfEntry& e = cat.entry(id);
                entries.push_back(json{{"id", e.id},
                                       {"variables", e.variables},
                                       {"description", e.description},
                                       {"has_oracle", e.oracle.has_value()},
                                       {"default_verify_order", e.default_verify_order}});
            }
            o.doc = json{{"command", "list"},
                         {"params", json::object()},
                         {"results", json{{"entries", entries}}}};
        } else if (check_all->parsed()) {
            bool all_ok = true;
            json verify_arr = json::array();
            bool verify_ok = true;
            for (const std::string& id : cat.ids()) {
                const GfEntry& e = cat.entry(id);
                if (!e.oracle) continue;
                int n = std::min({order, e.default_verify_order, oracle_max});
                VerifyReport r = cat.verify(id, n, oracle_max);
                verify_ok = verify_ok && r.ok;
                verify_arr.push_back(verify_report_json(r));
            }
            json id_arr = json::array();
            bool id_ok = true;
            for (const auto& r : cat.identity_checks(order, oracle_max)) {
                id_ok = id_ok && r.ok;
                id_arr.push_back(identity_report_json(r));
            }
            json checks_arr = json::array();
            bool checks_ok = true;
            auto push_checks = [&](const std::vector<CheckResult>& rs) {
                for (const auto& r : rs) {
                    checks_ok = checks_ok && r.ok;
                    checks_arr.push_back(check_result_json(r));
                }
            };
            push_checks(transform_sweeps(std::min(order, 10)));
            push_checks(cf_stability_checks(order));
            push_checks(mass_and_integrality_checks(order));
            push_checks({ratio_trend_check(16, 8)});
            all_ok = verify_ok && id_ok && checks_ok;
            o.doc = json{{"command", "check-all"},
                         {"params", json{{"order", order}, {"oracle_max", oracle_max}}},
                         {"results", json{{"verify", verify_arr},
                                          {"verify_ok", verify_ok},
                                          {"identities", id_arr},
                                          {"identities_ok", id_ok},
                                          {"checks", checks_arr},
                                          {"all_ok", all_ok}}}};
            o.exit_code = all_ok ? 0 : 1;
        }

        emit(o, format, out);
        return o.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dyck::cli
