#include "swm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "swm/characters.hpp"
#include "swm/fermionic.hpp"
#include "swm/forms.hpp"
#include "swm/gmverify.hpp"
#include "swm/numeric.hpp"
#include "swm/zhupoly.hpp"

namespace swm::cli {

using nlohmann::ordered_json;

ordered_json to_json(const VerificationReport& r)
{
    ordered_json j;
    j["identity_id"] = r.identity_id;
    j["params"] = ordered_json::object();
    for (const auto& [k, v] : r.params) {
        j["params"][k] = v;
    }
    j["order"] = r.order.to_string();
    j["status"] = r.passed() ? "pass" : "fail";
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent.to_string()},
                               {"lhs", r.first_mismatch->lhs.to_string()},
                               {"rhs", r.first_mismatch->rhs.to_string()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    VerificationReport r;
    r.identity_id = j.at("identity_id").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
        r.params[k] = v.get<std::string>();
    }
    r.order = Rational::parse(j.at("order").get<std::string>());
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") {
        throw PreconditionError("unknown status '" + status + "'");
    }
    r.status = status == "pass" ? Status::pass : Status::fail;
    if (const auto& m = j.at("first_mismatch"); !m.is_null()) {
        r.first_mismatch = Mismatch{Rational::parse(m.at("exponent").get<std::string>()),
                                    Rational::parse(m.at("lhs").get<std::string>()),
                                    Rational::parse(m.at("rhs").get<std::string>())};
    }
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
}

ReportList reports_from_json(const nlohmann::json& j)
{
    ReportList out;
    for (const auto& e : j) {
        out.push_back(report_from_json(e));
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + '"';
}

namespace {

std::string params_field(const std::map<std::string, std::string>& params)
{
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) {
            s += ';';
        }
        s += k + '=' + v;
    }
    return s;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_field(fields[i]);
    }
    out << '\n';
}

} // namespace

void emit_report(const ReportList& reports, Format format, std::ostream& out)
{
    if (format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "identity_id,params,order,status,mismatch_exponent,lhs,rhs,runtime_ms\n";
    for (const auto& r : reports) {
        const auto& mm = r.first_mismatch;
        write_csv_row(out, {r.identity_id, params_field(r.params), r.order.to_string(), r.passed() ? "pass" : "fail",
                            mm ? mm->exponent.to_string() : "", mm ? mm->lhs.to_string() : "",
                            mm ? mm->rhs.to_string() : "", std::to_string(r.runtime_ms)});
    }
}

namespace {

struct Options {
    long m = 1;
    std::string module;
    std::string order;
    std::string suite = "all";
    std::string format = "json";
    double tol = 1e-8;
    std::vector<std::string> taus;
    long p = 0;
};

Rational parse_order(const std::string& text, const Rational& fallback)
{
    if (text.empty()) {
        return fallback;
    }
    const Rational o = Rational::parse(text);
    if (o <= 0) {
        throw PreconditionError("order must be positive, got " + text);
    }
    return o;
}

std::vector<TauPoint> parse_taus(const std::vector<std::string>& texts)
{
    if (texts.empty()) {
        return default_law_points();
    }
    std::vector<TauPoint> t;
    for (const auto& s : texts) {
        t.push_back(TauPoint::parse(s));
    }
    return t;
}

void append(ReportList& to, ReportList from) { to.insert(to.end(), from.begin(), from.end()); }

ReportList numeric_reports(const Options& o, const Rational& order)
{
    ReportList r = verify_s_t_laws(parse_taus(o.taus), order, o.tol);
    r.push_back(verify_ns_rank(o.m, order));
    return r;
}

ReportList run_suite(const Options& o, const Rational& order)
{
    static const std::vector<std::string> names{"forms", "characters", "warnaar", "aux", "zhu", "gm", "numeric"};
    if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
        throw PreconditionError("unknown suite '" + o.suite + "'");
    }
    const long p = o.p > 0 ? o.p : 2 * o.m + 1;
    ReportList out;
    for (const auto& name : names) {
        if (o.suite != "all" && o.suite != name) {
            continue;
        }
        if (name == "forms") {
            append(out, verify_form_identities(order));
        } else if (name == "characters") {
            append(out, verify_character_suite(o.m, order));
            append(out, verify_fermionic_chars(o.m, order));
        } else if (name == "warnaar") {
            append(out, verify_warnaar(p, order));
        } else if (name == "aux") {
            append(out, verify_aux_identities(order));
        } else if (name == "zhu") {
            append(out, verify_zhu_suite(o.m));
        } else if (name == "gm") {
            append(out, verify_gm_suite(o.m));
        } else {
            append(out, numeric_reports(o, o.suite == "numeric" ? order : Rational(300)));
        }
    }
    return out;
}

void emit_series(const QSeries& s, Format format, std::ostream& out)
{
    if (format == Format::csv) {
        out << "exponent,coefficient\n";
        for (const auto& [e, c] : s.to_pairs()) {
            write_csv_row(out, {e.to_string(), c.to_string()});
        }
        return;
    }
    ordered_json j;
    j["order"] = s.order().to_string();
    j["terms"] = ordered_json::array();
    for (const auto& [e, c] : s.to_pairs()) {
        j["terms"].push_back({{"exponent", e.to_string()}, {"coefficient", c.to_string()}});
    }
    out << j.dump(2) << '\n';
}

ordered_json poly_json(const RatPoly& p)
{
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) {
        a.push_back(c.to_string());
    }
    return a;
}

void poly_rows(std::ostream& out, const std::string& name, const RatPoly& p)
{
    for (long d = 0; d <= p.degree(); ++d) {
        write_csv_row(out, {name, std::to_string(d), p[d].to_string()});
    }
}

ordered_json reports_json(const ReportList& reports)
{
    ordered_json a = ordered_json::array();
    for (const auto& r : reports) {
        a.push_back(to_json(r));
    }
    return a;
}

std::string fmt_ld(long double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17Lg", x);
    return buf;
}

// Each command writes its document to `out` and returns the reports whose
// statuses decide the exit code.
ReportList dispatch(const std::string& command, const Options& o, Format format, std::ostream& out)
{
    if (command == "char" || command == "superchar") {
        if (o.module.empty()) {
            throw PreconditionError(command + " requires --module");
        }
        const SWModuleId id = SWModuleId::parse(o.m, o.module);
        const Rational order = parse_order(o.order, 20);
        emit_series(command == "char" ? sw_char(id, order) : sw_superchar_theta(id, order), format, out);
        return {};
    }
    if (command == "verify") {
        ReportList r = run_suite(o, parse_order(o.order, o.suite == "numeric" ? 300 : 20));
        emit_report(r, format, out);
        return r;
    }
    if (command == "gm") {
        const RatPoly g = gm_poly(o.m);
        ReportList r = verify_gm_suite(o.m);
        if (format == Format::csv) {
            out << "polynomial,degree,coefficient\n";
            poly_rows(out, "G", g);
        } else {
            ordered_json j;
            j["m"] = o.m;
            j["A_m"] = extract_Am(o.m).to_string();
            j["polynomial"] = poly_json(g);
            j["reports"] = reports_json(r);
            out << j.dump(2) << '\n';
        }
        return r;
    }
    if (command == "zhu") {
        const SingletCurve curve = singlet_curve(o.m);
        const auto ip = interpolation_L(o.m);
        ReportList r = verify_zhu_suite(o.m);
        if (format == Format::csv) {
            out << "polynomial,degree,coefficient\n";
            poly_rows(out, "f", f_m_poly(o.m));
            poly_rows(out, "phi", phi_tilde(o.m));
            poly_rows(out, "L", ip.L);
            poly_rows(out, "r", ip.r);
        } else {
            ordered_json j;
            j["m"] = o.m;
            j["C_m"] = curve.Cm.to_string();
            j["A_bar"] = A_bar(o.m).to_string();
            j["B_m"] = B_m(o.m).to_string();
            j["f"] = poly_json(f_m_poly(o.m));
            j["phi"] = poly_json(phi_tilde(o.m));
            j["L"] = poly_json(ip.L);
            j["r"] = poly_json(ip.r);
            j["reports"] = reports_json(r);
            out << j.dump(2) << '\n';
        }
        return r;
    }
    // numeric
    const Rational order = parse_order(o.order, 300);
    ReportList r = numeric_reports(o, order);
    if (format == Format::csv) {
        emit_report(r, format, out);
        return r;
    }
    ordered_json j;
    j["reports"] = reports_json(r);
    j["t_ratios"] = ordered_json::array();
    for (const TauPoint& tau : parse_taus(o.taus)) {
        for (const auto& [id, z] : t_ratios(o.m, tau, order)) {
            j["t_ratios"].push_back(
                {{"module", id.to_string()}, {"tau", tau.to_string()}, {"re", fmt_ld(z.real())}, {"im", fmt_ld(z.imag())}});
        }
    }
    out << j.dump(2) << '\n';
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Characters and identities for the singlet W-algebras SW(m)", "swm"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_m = [&](CLI::App* s) { s->add_option("--m", o.m, "m >= 1")->check(CLI::PositiveNumber); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_order = [&](CLI::App* s, const std::string& dflt) {
        s->add_option("--order", o.order, "truncation order (rational, default " + dflt + ")");
    };
    auto add_numeric = [&](CLI::App* s) {
        s->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::PositiveNumber);
        s->add_option("--tau", o.taus, "evaluation point a+bi (repeatable)")->allow_extra_args(false);
    };

    for (const char* name : {"char", "superchar"}) {
        auto* s = app.add_subcommand(name, std::string("q-expansion of the ") + name + "acter of a module");
        add_m(s);
        s->add_option("--module", o.module, "lambda:N (1..m+1) or pi:N (1..m)")->required();
        add_order(s, "20");
        add_format(s);
    }
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_m(verify);
    add_order(verify, "20, or 300 for --suite numeric; under --suite all the numeric checks always use 300");
    add_format(verify);
    verify->add_option("--suite", o.suite, "all|forms|characters|warnaar|aux|zhu|gm|numeric")
        ->check(CLI::IsMember({"all", "forms", "characters", "warnaar", "aux", "zhu", "gm", "numeric"}));
    verify->add_option("--p", o.p, "Warnaar modulus (default 2m+1)")->check(CLI::Range(3L, 1000L));
    add_numeric(verify);
    auto* gm = app.add_subcommand("gm", "G_m polynomial and its checks");
    add_m(gm);
    add_format(gm);
    auto* zhu = app.add_subcommand("zhu", "Zhu-algebra polynomials and their checks");
    add_m(zhu);
    add_format(zhu);
    auto* numeric = app.add_subcommand("numeric", "modular laws and rank at points of the upper half-plane");
    add_m(numeric);
    add_order(numeric, "300");
    add_format(numeric);
    add_numeric(numeric);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const Format format = o.format == "csv" ? Format::csv : Format::json;
    std::ostringstream doc;
    ReportList reports;
    try {
        reports = dispatch(command, o, format, doc);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }

    out << doc.str();
    out.flush();
    if (!out) {
        err << "error: failed to write output\n";
        return 1;
    }
    return all_passed(reports) ? 0 : 1;
}

} // namespace swm::cli
