#include "mcc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcc/cohomology.hpp"
#include "mcc/gitwalls.hpp"
#include "mcc/sheafstab.hpp"
#include "mcc/tower.hpp"
#include "mcc/verify/acceptance.hpp"

namespace mcc::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Table, Latex };

struct Output {
    std::string command;
    std::optional<long> r;
    json payload = json::object();
    std::string table;
    std::string latex;
    int code = kOk;
};

/// Usage errors raised by the command handlers themselves.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(ErrorKind::InvalidArgument, msg) {}
};

class Style {
public:
    explicit Style(bool color) : color_(color) {}
    std::string bold(const std::string& s) const { return color_ ? "\033[1m" + s + "\033[0m" : s; }
    std::string verdict(const std::string& s, bool good) const {
        if (!color_) return s;
        return (good ? "\033[32m" : "\033[31m") + s + "\033[0m";
    }

private:
    bool color_;
};

bool color_enabled(bool out_is_tty) {
    const char* env = std::getenv("MCC_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return out_is_tty;
}

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json coefficients_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(integer_json(c));
    return arr;
}

std::string latex_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Integer& c = p.coeffs()[i];
        if (sgn(c) == 0) continue;
        const Integer mag = abs(c);
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i == 1) os << "t";
        if (i > 1) os << "t^{" << i << "}";
    }
    return os.str();
}

std::string latex_ratfun(const RatFun& f) {
    if (f.is_polynomial()) return latex_poly(f.num());
    return "\\frac{" + latex_poly(f.num()) + "}{" + latex_poly(f.den()) + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_r(long r, long min, const std::string& what) {
    if (r < min) throw UsageError(what + " needs --r >= " + std::to_string(min) + ", got " + std::to_string(r));
}

// ---------------------------------------------------------------------------

Output cmd_betti(const std::string& space, long r, const Style& style) {
    if (space != "S" && space != "M") throw UsageError("--space must be S or M");
    Output o;
    o.command = "betti";
    o.r = r;
    IntPoly p;
    bool nonneg = true;
    if (space == "S") {
        require_r(r, 3, "betti --space S");
        p = tower::poincare_S(r).pS;
    } else {
        require_r(r, 1, "betti --space M");
        p = tower::poincare_M(r);
    }
    for (const auto& c : p.coeffs()) nonneg = nonneg && sgn(c) >= 0;
    const Integer euler = p.eval(Rational(-1)).get_num();
    o.payload = {{"space", space},
                 {"coefficients", coefficients_json(p)},
                 {"degree", p.degree()},
                 {"euler", integer_json(euler)},
                 {"palindromic", p.is_palindromic()},
                 {"nonnegative", nonneg},
                 {"polynomial", to_string(p)}};

    std::ostringstream t;
    t << style.bold("P_t(" + space + "), r = " + std::to_string(r)) << "\n";
    t << "degree       " << p.degree() << "\n";
    t << "euler        " << euler << "\n";
    t << "palindromic  " << yes_no(p.is_palindromic()) << "\n";
    t << "nonnegative  " << yes_no(nonneg) << "\n";
    t << style.bold("   i  b_i") << "\n";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (sgn(p.coeffs()[i]) != 0) t << std::setw(4) << i << "  " << p.coeffs()[i] << "\n";
    o.table = t.str();
    o.latex = "P_t(\\mathbf{" + space + "}) = " + latex_poly(p) + "\n";
    return o;
}

Output cmd_terms(long r, bool reconstruct, const Style& style) {
    require_r(r, 3, "terms");
    Output o;
    o.command = "terms";
    o.r = r;
    const auto terms = tower::tower_terms(r);
    json arr = json::array();
    std::ostringstream t;
    std::ostringstream l;
    t << style.bold("tower terms, r = " + std::to_string(r)) << "\n";
    bool mismatch = false;
    for (const auto& term : terms) {
        json j = {{"index", term.index},
                  {"kind", std::string(tower::to_string(term.kind))},
                  {"center", term.center_label},
                  {"center_poincare", to_string(term.center)},
                  {"exceptional", to_string(term.exceptional)},
                  {"expression", to_string(term.literal)}};
        t << term.index << "  " << (term.kind == tower::TermKind::BlowUp ? "+" : "-") << "  " << term.center_label
          << "  " << to_string(term.literal);
        if (reconstruct) {
            std::string verdict;
            try {
                verdict = tower::reconstruct_term(term.index, r) == term.literal ? "ok" : "mismatch";
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::UnsupportedIndex) throw;
                verdict = "literal-only";
            }
            mismatch = mismatch || verdict == "mismatch";
            j["reconstruction"] = verdict;
            t << "  [" << style.verdict(verdict, verdict != "mismatch") << "]";
        }
        t << "\n";
        l << (term.kind == tower::TermKind::BlowUp ? "+" : "-") << " " << latex_ratfun(term.literal) << "\n";
        arr.push_back(std::move(j));
    }
    // the assembled total must be a polynomial and agree with separate
    // evaluation of every closed form at a few rational points
    bool sum_ok = true;
    IntPoly pS;
    try {
        pS = tower::poincare_S(r).pS;
        for (const Rational& x : {Rational(1, 2), Rational(2), Rational(3)}) {
            Rational sum = tower::evaluate_closed_form(0, r, x);
            for (int i = 1; i <= 6; ++i) sum += (i <= 3 ? 1 : -1) * tower::evaluate_closed_form(i, r, x);
            sum.canonicalize();
            sum_ok = sum_ok && sum == pS.eval(x);
        }
    } catch (const NotPolynomialError&) {
        sum_ok = false;
    }
    o.payload = {{"terms", arr}, {"sum_check", sum_ok ? "OK" : "FAIL"}, {"pS", coefficients_json(pS)}};
    t << "sum check  " << style.verdict(sum_ok ? "OK" : "FAIL", sum_ok) << "\n";
    o.table = t.str();
    o.latex = l.str();
    if (mismatch || !sum_ok) o.code = kInconsistent;
    return o;
}

Output cmd_eval(const std::string& expr, const std::string& file, long r, const Style& style) {
    if (expr.empty() == file.empty()) throw UsageError("give exactly one of --expr and --expr-file");
    SpacePtr s;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot read " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        s = parse_space_file(buf.str());
    } else {
        s = parse_space(expr);
    }
    require_r(r, 1, "eval");
    const IntPoly p = poincare(*s, r);
    Output o;
    o.command = "eval";
    o.r = r;
    o.payload = {{"expression", to_string(*s)},
                 {"coefficients", coefficients_json(p)},
                 {"degree", p.degree()},
                 {"polynomial", to_string(p)}};
    o.table = style.bold(to_string(*s)) + "  (r = " + std::to_string(r) + ")\n" + to_string(p) + "\n";
    o.latex = "P_t = " + latex_poly(p) + "\n";
    return o;
}

json verdict_json(const git::StabilityVerdict& v) {
    json j = {{"verdict", std::string(git::to_string(v.cls))}};
    if (v.witness) {
        j["witness"] = {{"orders", v.witness->orders}, {"mu", to_string(v.witness->mu)}, {"locus", v.witness->locus}};
    }
    return j;
}

std::string verdict_text(const git::StabilityVerdict& v) {
    std::string s(git::to_string(v.cls));
    if (v.witness) {
        s += "  orders (";
        for (std::size_t i = 0; i < v.witness->orders.size(); ++i)
            s += (i ? "," : "") + std::to_string(v.witness->orders[i]);
        s += ") mu " + to_string(v.witness->mu) + " at " + v.witness->locus;
    }
    return s;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(git::parse_rational(item));
    return out;
}

Output cmd_walls(const std::string& factors, const std::string& point, const std::string& samples,
                 const Style& style) {
    const git::LinearizedSetup setup = git::parse_setup(factors);
    Output o;
    o.command = "walls";
    const auto walls = git::candidate_walls(setup);
    json wj = json::array();
    std::string wt;
    for (const auto& w : walls) {
        wj.push_back(to_string(w));
        wt += (wt.empty() ? "" : ", ") + to_string(w);
    }
    o.payload["walls"] = wj;
    o.table = style.bold("candidate walls") + "  {" + wt + "}\n";
    o.latex = "\\lambda \\in \\{" + wt + "\\}\n";
    if (!point.empty() || !samples.empty()) {
        if (point.empty() || samples.empty()) throw UsageError("--point and --samples go together");
        const auto pts = git::parse_point(point, setup.factors);
        const auto lambdas = parse_rational_list(samples);
        json scan = json::array();
        for (const auto& [lambda, v] : git::wall_scan(pts, setup, lambdas)) {
            json j = verdict_json(v);
            j["lambda"] = to_string(lambda);
            scan.push_back(std::move(j));
            o.table += "lambda = " + to_string(lambda) + "  " + verdict_text(v) + "\n";
        }
        o.payload["scan"] = scan;
    }
    return o;
}

Output cmd_classify(const std::string& factors, const std::string& point, const std::string& lambda,
                    const Style& style) {
    git::LinearizedSetup setup = git::parse_setup(factors);
    const bool has_free = std::any_of(setup.weights.begin(), setup.weights.end(), [](const auto& w) { return !w; });
    if (has_free) {
        if (lambda.empty()) throw UsageError("--lambda is required when a factor is free");
        setup = git::bind(setup, git::parse_rational(lambda));
    } else if (!lambda.empty()) {
        throw UsageError("--lambda given but no factor is free");
    }
    const auto pts = git::parse_point(point, setup.factors);
    const auto v = git::classify_point(pts, setup);
    Output o;
    o.command = "classify";
    o.payload = verdict_json(v);
    if (!lambda.empty()) o.payload["lambda"] = to_string(git::parse_rational(lambda));
    o.table = style.bold("verdict") + "  " + verdict_text(v) + "\n";
    o.latex = "\\text{" + std::string(git::to_string(v.cls)) + "}\n";
    return o;
}

Output cmd_stab(const std::string& spec, const Style& style) {
    const sheaf::SheafModel model = sheaf::parse_sheaf(spec);
    const auto v = sheaf::classify(model);
    const sheaf::HilbPoly1D h = std::holds_alternative<sheaf::LineSum>(model)
                                    ? sheaf::hilb_line_sum(std::get<sheaf::LineSum>(model).twists)
                                    : std::get<sheaf::Abstract>(model).hilb;
    Output o;
    o.command = "stab";
    o.payload = {{"verdict", std::string(sheaf::to_string(v.cls))},
                 {"hilbert", sheaf::to_string(h)},
                 {"slope", to_string(h.slope())}};
    if (v.minimal_quotient) o.payload["minimal_quotient"] = sheaf::to_string(*v.minimal_quotient);
    std::ostringstream t;
    t << style.bold("verdict") << "  " << sheaf::to_string(v.cls) << "\n";
    t << "hilbert  " << sheaf::to_string(h) << "  slope " << to_string(h.slope()) << "\n";
    if (v.destabilizing_summands) {
        o.payload["destabilizer"] = sheaf::to_string(*v.destabilizing_summands);
        t << "destabilizer  " << sheaf::to_string(*v.destabilizing_summands);
    } else if (v.destabilizer) {
        o.payload["destabilizer"] = sheaf::to_string(*v.destabilizer);
        t << "destabilizer  kernel";
    }
    if (v.destabilizer) {
        o.payload["destabilizer_hilbert"] = sheaf::to_string(*v.destabilizer);
        t << " (" << sheaf::to_string(*v.destabilizer) << ")\n";
    }
    o.table = t.str();
    o.latex = "\\text{" + std::string(sheaf::to_string(v.cls)) + "}\n";
    return o;
}

Output cmd_hilb(const std::string& ideal_text, int vars, const Style& style) {
    const auto ideal = sheaf::parse_ideal(ideal_text, vars);
    const auto res = sheaf::hilb_monomial(ideal);
    Output o;
    o.command = "hilb";
    json coeffs = json::array();
    for (const auto& c : res.polynomial) coeffs.push_back(to_string(c));
    const std::string hp = sheaf::polynomial_in_m(res.polynomial);
    o.payload = {{"dimension", res.dimension},
                 {"hilbert_polynomial", hp},
                 {"coefficients", coeffs},
                 {"series_numerator", to_string(res.numerator, "q")}};
    o.table = style.bold("hilbert polynomial") + "  " + hp + "\ndimension  " + std::to_string(res.dimension) +
              "\nseries  (" + to_string(res.numerator, "q") + ")/(1 - q)^" + std::to_string(res.dimension + 1) + "\n";
    o.latex = "P(m) = " + hp + "\n";
    return o;
}

Output cmd_verify(long rmax, const std::string& reference_table, const Style& style) {
    acceptance::Options opts;
    opts.rmax = rmax;
    if (!reference_table.empty()) {
        // fixture file: the r = 3 Betti numbers b_0, b_2, ..., separated by commas or whitespace
        std::ifstream in(reference_table);
        if (!in) throw UsageError("cannot read " + reference_table);
        opts.reference.clear();
        std::string item;
        while (in >> item) {
            std::replace(item.begin(), item.end(), ',', ' ');
            std::istringstream parts(item);
            long v = 0;
            while (parts >> v) opts.reference.push_back(v);
            if (!parts.eof()) throw UsageError("malformed Betti table in " + reference_table);
        }
    }
    if (rmax < 3) throw UsageError("--rmax must be >= 3");
    const auto results = acceptance::run(opts);
    Output o;
    o.command = "verify";
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        const std::string line = acceptance::format_line(r);
        o.table += style.verdict(line.substr(0, 4), r.pass) + line.substr(4) + "\n";
    }
    o.payload = {{"rmax", rmax}, {"criteria", arr}, {"all_pass", all}};
    o.table += all ? "all criteria passed\n" : "verification FAILED\n";
    o.latex = o.table;
    o.code = all ? kOk : kVerificationFailed;
    return o;
}

void emit(const Output& o, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::Json: {
            json rec = {{"schema_version", "1"}, {"command", o.command}, {"payload", o.payload}};
            if (o.r) rec["r"] = *o.r;
            out << rec.dump(2) << "\n";
            break;
        }
        case Format::Table: out << o.table; break;
        case Format::Latex: out << o.latex; break;
    }
}

void report(std::ostream& err, std::string_view kind, const std::string& message,
            std::optional<std::size_t> offset = std::nullopt) {
    json j = {{"error", std::string(kind)}, {"message", message}};
    if (offset) j["offset"] = *offset;
    err << j.dump() << "\n";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPolynomial: return kInconsistent;
        default: return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty) {
    CLI::App app{"Betti numbers of compactified spaces of rational cubics, GIT walls and sheaf stability", "mcc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    long r = 0;
    bool have_r = false;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "latex"}))
        ->capture_default_str();
    app.add_option_function<long>(
        "--r", [&](const long& v) { r = v, have_r = true; }, "Dimension of the ambient projective space P^r");

    std::string space;
    auto* betti = app.add_subcommand("betti", "Betti numbers of S or M");
    betti->add_option("--space", space, "S (Simpson compactification) or M (Kontsevich space)")->required();

    bool reconstruct = false;
    auto* terms = app.add_subcommand("terms", "The six blow-up and blow-down corrections");
    terms->add_flag("--reconstruct", reconstruct, "Rebuild each term from its geometric description");

    std::string expr, expr_file;
    auto* eval = app.add_subcommand("eval", "Poincare polynomial of a space expression");
    eval->add_option("--expr", expr, "Space expression");
    eval->add_option("--expr-file", expr_file, "File holding one space expression (.msd)");

    std::string factors, point, samples, lambda;
    auto* walls = app.add_subcommand("walls", "Candidate GIT walls for a linearized product");
    walls->add_option("--factors", factors, "e.g. \"sym:3,copies:2|sym:1,copies:4\"")->required();
    walls->add_option("--point", point, "Optional point to scan, e.g. \"z0^3; z0^2*z1 | z1\"");
    walls->add_option("--samples", samples, "Comma-separated lambda values for the scan");

    auto* classify = app.add_subcommand("classify", "Hilbert-Mumford classification of a point");
    classify->add_option("--factors", factors, "Factor specification")->required();
    classify->add_option("--point", point, "Binary forms, `;` between forms, `|` between factors")->required();
    classify->add_option("--lambda", lambda, "Value of the free linearization weight, p/q");

    std::string sheaf_spec;
    auto* stab = app.add_subcommand("stab", "Slope stability of a one-dimensional sheaf model");
    stab->add_option("--sheaf", sheaf_spec, "line:[a,b,...] or abs:am+b;quot:...")->required();

    std::string ideal;
    int vars = 0;
    auto* hilb = app.add_subcommand("hilb", "Hilbert polynomial of a monomial ideal");
    hilb->add_option("--ideal", ideal, "Generators, e.g. \"x2^2, x2*x3, x3^2\"")->required();
    hilb->add_option("--vars", vars, "Number of homogeneous variables")->required();

    long rmax = 12;
    std::string reference_table;
    auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
    verify->add_option("--rmax", rmax, "Largest r in the sweeps")->capture_default_str();
    verify->add_option("--reference-table", reference_table, "File with the reference r=3 Betti numbers b_0, b_2, ...");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        report(err, "UsageError", e.what());
        return kUsage;
    }

    const Format fmt = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Table;
    const Style style(fmt == Format::Table && color_enabled(out_is_tty));
    auto need_r = [&](const char* cmd) {
        if (!have_r) throw UsageError(std::string(cmd) + " needs --r");
        return r;
    };

    try {
        Output o;
        if (*betti) o = cmd_betti(space, need_r("betti"), style);
        else if (*terms) o = cmd_terms(need_r("terms"), reconstruct, style);
        else if (*eval) o = cmd_eval(expr, expr_file, need_r("eval"), style);
        else if (*walls) o = cmd_walls(factors, point, samples, style);
        else if (*classify) o = cmd_classify(factors, point, lambda, style);
        else if (*stab) o = cmd_stab(sheaf_spec, style);
        else if (*hilb) o = cmd_hilb(ideal, vars, style);
        else o = cmd_verify(rmax, reference_table, style);
        emit(o, fmt, out);
        return o.code;
    } catch (const ParseError& e) {
        report(err, kind_name(e.kind()), e.what(), e.offset());
        return kUsage;
    } catch (const Error& e) {
        report(err, kind_name(e.kind()), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        report(err, "InternalError", e.what());
        return kInconsistent;
    }
}

}  // namespace mcc::cli
