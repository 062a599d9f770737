#include "maxcurve_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcurve/analysis.hpp"
#include "maxcurve/combinatorics.hpp"
#include "maxcurve/constructions.hpp"
#include "maxcurve/errors.hpp"
#include "maxcurve/io.hpp"
#include "maxcurve/verify.hpp"
#include "maxcurve_cli/render.hpp"

namespace maxcurve::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Options {
    // construct
    std::string kind;
    int degree = -1;
    std::uint64_t seed = 1;
    int m = 2;
    int k = 2;
    int delta = 0;
    std::string out;
    std::string cert_out;
    std::string curves_out;
    // check / fundamental / render
    std::string what;
    std::string file;
    std::string curves;
    std::string cert;
    std::size_t node = 0;
    bool highlight = false;
    // verify
    std::string preset;
    int max_degree = -1;
    std::size_t seeds = 0;
    std::size_t jobs = 0;
    std::string format = "text";
};

// Destination for the main output: --out when given, else stdout.
void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.out.empty()) {
        out << text;
    } else {
        io::write_file(o.out, text);
    }
}

fs::path companion(const std::string& out, const std::string& suffix)
{
    fs::path p(out);
    p.replace_extension();
    p += suffix;
    return p;
}

Budgets budgets()
{
    if (const char* env = std::getenv("MAXCURVE_BUDGET")) {
        std::string s(env);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            std::strtoull(env, nullptr, 10) == 0) {
            throw FormatError("MAXCURVE_BUDGET must be a positive integer, got \"" + s + "\"");
        }
    }
    return Budgets::from_env();
}

io::NodeSetFile load_nodes(const Options& o)
{
    io::NodeSetFile f = io::parse_nodeset(io::read_file(o.file));
    if (o.degree >= 0) f.degree = o.degree;
    return f;
}

std::vector<Curve> load_curves(const std::string& path)
{
    if (path.empty()) return {};
    return io::parse_curves(io::read_file(path));
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json line_json(const Line& l)
{
    return Json::array({to_string(l.a()), to_string(l.b()), to_string(l.c())});
}

std::string point_text(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// ------------------------------------------------------------ construct

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err)
{
    const Budgets b = budgets();
    if (o.kind == "principal") {
        if (o.degree < 0) throw CLI::ValidationError("--degree", "required for principal");
        emit(o, out, io::nodeset_to_json(principal_lattice(o.degree), o.degree));
        return ok;
    }
    if (o.kind == "chung-yao") {
        if (o.degree < 0) throw CLI::ValidationError("--degree", "required for chung-yao");
        const ChungYaoSet cy = chung_yao(random_general_position_lines(o.degree, o.seed, b));
        emit(o, out, io::nodeset_to_json(cy.nodes, o.degree));
        std::string cert_path = o.cert_out;
        std::string curves_path = o.curves_out;
        if (!o.out.empty()) {
            if (cert_path.empty()) cert_path = companion(o.out, ".cert.json").string();
            if (curves_path.empty()) curves_path = companion(o.out, ".curves.json").string();
        }
        if (!cert_path.empty()) io::write_file(cert_path, io::certificate_to_json(cy.certificate));
        if (!curves_path.empty()) {
            std::vector<Curve> lines;
            for (const auto& l : cy.lines) lines.emplace_back(l);
            io::write_file(curves_path, io::curves_to_json(lines));
        }
        return ok;
    }
    // two-curve
    const auto [f, g] = grid_curves(o.m, o.k);
    TwoCurveOptions opts;
    opts.seed = o.seed;
    opts.budget = b.candidates;
    const TwoCurveSpec spec = two_curve_correct_set(f, g, o.delta, opts);
    const int n = spec.degree();
    emit(o, out, io::nodeset_to_json(spec.nodes(), n));
    std::string curves_path = o.curves_out;
    if (curves_path.empty() && !o.out.empty()) curves_path = companion(o.out, ".curves.json").string();
    if (!curves_path.empty()) {
        const std::vector<Curve> both{spec.f, spec.g};
        io::write_file(curves_path, io::curves_to_json(both));
    }
    (void)err;
    return ok;
}

// ------------------------------------------------------------ check

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
    const io::NodeSetFile file = load_nodes(o);
    const NodeSet& x = file.nodes;
    const int n = file.degree;
    const bool json = o.format == "json";
    Json j{{"check", o.what}, {"degree", n}, {"nodes", x.size()}};
    std::ostringstream text;
    bool pass = true;

    if (o.what == "correct" || o.what == "independent") {
        const std::size_t r = rank(vandermonde(x, n));
        const std::size_t dim = static_cast<std::size_t>(comb::dim_pi(n));
        pass = o.what == "correct" ? (r == dim && x.size() == dim) : r == x.size();
        j["rank"] = r;
        j["dimension"] = dim;
        text << o.what << ": " << (pass ? "pass" : "fail") << " (rank " << r << ", " << x.size()
             << " nodes, dim " << dim << ")\n";
        if (!pass && o.what == "independent") {
            // Nodes whose removal does not lower the rank are witnesses of dependence.
            Json wit = Json::array();
            for (std::size_t i = 0; i < x.size(); ++i) {
                const std::size_t drop[] = {i};
                if (rank(vandermonde(x.without(drop), n)) == r) {
                    wit.push_back(i);
                    text << "  dependent node " << i << " " << point_text(x[i]) << "\n";
                }
            }
            j["witnesses"] = wit;
        }
    } else if (o.what == "maximal-lines") {
        const auto lines = maximal_lines(x, n);
        Json list = Json::array();
        text << "maximal lines: " << lines.size() << "\n";
        for (const auto& l : lines) {
            list.push_back(line_json(l));
            text << "  " << to_string(l) << "\n";
        }
        j["maximal_lines"] = list;
        j["count"] = lines.size();
        // Prop 1.7 bound: no line carries more than n+1 nodes.
        pass = true;
    } else if (o.what == "maximal-curve") {
        if (o.curves.empty()) throw CLI::ValidationError("--curves", "required for maximal-curve");
        const auto curves = load_curves(o.curves);
        Json list = Json::array();
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const Curve& f = curves[i];
            const auto on = nodes_on_curve(x, f);
            const bool maximal = is_maximal_curve(x, f, n);
            const auto predicted = comb::d_count(n, f.total_degree());
            pass = pass && maximal;
            list.push_back(Json{{"curve", i},
                                {"degree", f.total_degree()},
                                {"nodes_on_curve", on.size()},
                                {"d", predicted},
                                {"maximal", maximal}});
            text << "curve " << i << " (degree " << f.total_degree() << "): " << on.size()
                 << " nodes, d(n,k) = " << predicted << ", " << (maximal ? "maximal" : "not maximal")
                 << "\n";
        }
        j["curves"] = list;
    } else {  // gc
        std::optional<GcCertificate> hint;
        if (!o.cert.empty()) hint = io::parse_certificate(io::read_file(o.cert), x.size());
        if (!is_correct(x, n)) {
            pass = false;
            j["status"] = "not correct";
            text << "gc: fail (set is not " << n << "-correct)\n";
        } else {
            const GcResult res = certify_gc(x, n, hint ? &*hint : nullptr);
            pass = res.status == GcResult::Status::certified;
            j["status"] = to_string(res.status);
            if (res.node) j["node"] = *res.node;
            if (!res.detail.empty()) j["detail"] = res.detail;
            text << "gc: " << to_string(res.status);
            if (res.node) text << " (node " << *res.node << " " << point_text(x[*res.node]) << ")";
            if (!res.detail.empty()) text << ": " << res.detail;
            text << "\n";
            if (res.certificate && !o.cert_out.empty())
                io::write_file(o.cert_out, io::certificate_to_json(*res.certificate));
        }
    }
    j["verdict"] = pass ? "pass" : "fail";
    emit(o, out, json ? j.dump(2) + "\n" : text.str());
    (void)err;
    return pass ? ok : math_failure;
}

// ------------------------------------------------------------ fundamental

int cmd_fundamental(const Options& o, std::ostream& out, std::ostream& err)
{
    const io::NodeSetFile file = load_nodes(o);
    if (o.node >= file.nodes.size()) {
        throw CLI::ValidationError("--node", "index " + std::to_string(o.node) + " out of range (" +
                                                 std::to_string(file.nodes.size()) + " nodes)");
    }
    FundamentalPolynomial fp;
    try {
        fp = fundamental_polynomial(file.nodes, o.node, file.degree);
    } catch (const PreconditionError& e) {
        err << "fundamental: " << e.what() << "\n";
        return math_failure;
    }
    if (o.format == "json") {
        Json coeffs = Json::array();
        for (const auto& c : fp.poly.coeffs()) coeffs.push_back(to_string(c));
        Json j{{"node", o.node},
               {"point", point_json(file.nodes[o.node])},
               {"unique", fp.unique},
               {"degree_bound", fp.poly.degree_bound()},
               {"coeffs", coeffs}};
        emit(o, out, j.dump(2) + "\n");
    } else {
        emit(o, out,
             "p*_" + std::to_string(o.node) + " = " + to_string(fp.poly) +
                 (fp.unique ? "\n" : "\n(one of several: set not correct)\n"));
    }
    return ok;
}

// ------------------------------------------------------------ verify

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    SuiteConfig config = preset_config(o.preset);
    config.budgets = budgets();
    config.base_seed = o.seed;
    if (o.max_degree >= 0) {
        config.max_degree = o.max_degree;
        config.principal_max_degree = std::max(o.max_degree, config.principal_max_degree);
    }
    if (o.degree >= 0) {
        config.min_degree = o.degree;
        config.max_degree = o.degree;
    }
    if (config.min_degree > config.max_degree) {
        throw CLI::ValidationError("--max-degree", "below the minimum degree");
    }
    if (o.seeds > 0) config.seeds = o.seeds;
    config.jobs = o.jobs;

    const auto reports = run_suite(config);
    std::string body;
    if (o.format == "json") {
        for (const auto& r : reports) body += io::report_to_json(r) + "\n";
        err << io::summary_table(reports);
    } else {
        for (const auto& r : reports) {
            if (r.verdict == Verdict::pass) continue;
            body += to_string(r.verdict) + "  " + r.proposition + "  " + r.subject;
            if (!r.inapplicable_reason.empty()) body += "  [" + r.inapplicable_reason + "]";
            if (!r.detail.empty()) body += "  " + r.detail;
            body += "\n";
            for (const auto& c : r.components)
                if (!c.holds()) body += "    " + c.name + " differs\n";
            for (const auto& w : r.witnesses) body += "    witness " + point_text(w) + "\n";
        }
        body += io::summary_table(reports);
    }
    emit(o, out, body);
    return passed(reports) ? ok : math_failure;
}

// ------------------------------------------------------------ render

int cmd_render(const Options& o, std::ostream& out, std::ostream& err)
{
    const io::NodeSetFile file = load_nodes(o);
    const auto curves = load_curves(o.curves);
    RenderOptions ro;
    ro.highlight_maximal = o.highlight;
    const Rendering r = render_svg(file.nodes, file.degree, curves, ro);
    emit(o, out, r.svg);
    if (r.approximate_factors > 0) {
        err << "render: " << r.approximate_factors
            << " non-line factor(s) cannot be drawn exactly; emitted sampled polylines\n";
        return usage_error;
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Maximal curves and n-correct node sets: constructions, checks, verification"};
    app.name("maxcurve");
    app.require_subcommand(1);
    app.fallthrough();

    auto* construct = app.add_subcommand("construct", "Build a node set and write it as JSON");
    construct->add_option("kind", o.kind, "principal | chung-yao | two-curve")
        ->required()
        ->check(CLI::IsMember({"principal", "chung-yao", "two-curve"}));
    construct->add_option("--degree,-n", o.degree, "Interpolation degree")->check(CLI::Range(0, 40));
    construct->add_option("--seed,-s", o.seed, "Random seed");
    construct->add_option("--m", o.m, "Degree of the first curve (two-curve)")->check(CLI::Range(1, 12));
    construct->add_option("--k", o.k, "Degree of the second curve (two-curve)")->check(CLI::Range(1, 12));
    construct->add_option("--delta", o.delta, "0 or 1 (two-curve)")->check(CLI::IsMember({0, 1}));
    construct->add_option("--out,-o", o.out, "Node set output path (default stdout)");
    construct->add_option("--cert-out", o.cert_out, "Certificate output path (chung-yao)");
    construct->add_option("--curves-out", o.curves_out, "Curve list output path");

    auto* check = app.add_subcommand("check", "Check a property of a node set file");
    check->add_option("what", o.what, "correct | independent | maximal-lines | maximal-curve | gc")
        ->required()
        ->check(CLI::IsMember({"correct", "independent", "maximal-lines", "maximal-curve", "gc"}));
    check->add_option("file", o.file, "Node set JSON")->required();
    check->add_option("--degree,-n", o.degree, "Override the degree stored in the file")
        ->check(CLI::Range(0, 40));
    check->add_option("--curves", o.curves, "Curve or curve list JSON (maximal-curve)");
    check->add_option("--cert", o.cert, "Certificate hint (gc)");
    check->add_option("--cert-out", o.cert_out, "Write the found certificate (gc)");
    check->add_option("--out,-o", o.out, "Output path (default stdout)");

    auto* fundamental = app.add_subcommand("fundamental", "Fundamental polynomial of one node");
    fundamental->add_option("file", o.file, "Node set JSON")->required();
    fundamental->add_option("--node,-i", o.node, "Node index")->required();
    fundamental->add_option("--degree,-n", o.degree, "Override the degree stored in the file")
        ->check(CLI::Range(0, 40));
    fundamental->add_option("--out,-o", o.out, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("preset", o.preset, "identities | pairwise | triple | gc | construction | all")
        ->required()
        ->check(CLI::IsMember({"identities", "pairwise", "triple", "gc", "construction", "all"}));
    verify->add_option("--max-degree", o.max_degree, "Largest Chung-Yao degree")->check(CLI::Range(1, 12));
    verify->add_option("--degree,-n", o.degree, "Run a single degree")->check(CLI::Range(1, 12));
    verify->add_option("--seeds", o.seeds, "Seeds per degree")->check(CLI::Range(1, 100));
    verify->add_option("--seed,-s", o.seed, "Base seed");
    verify->add_option("--jobs,-j", o.jobs, "Worker threads (0 = hardware)");
    verify->add_option("--out,-o", o.out, "Report output path (default stdout)");

    auto* render = app.add_subcommand("render", "Draw a node set and curves as SVG");
    render->add_option("file", o.file, "Node set JSON")->required();
    render->add_option("--curves", o.curves, "Curve or curve list JSON");
    render->add_flag("--highlight-maximal", o.highlight, "Highlight maximal lines");
    render->add_option("--degree,-n", o.degree, "Override the degree stored in the file")
        ->check(CLI::Range(0, 40));
    render->add_option("--out,-o", o.out, "SVG output path (default stdout)");

    for (auto* sub : {check, fundamental, verify})
        sub->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*construct) return cmd_construct(o, out, err);
        if (*check) return cmd_check(o, out, err);
        if (*fundamental) return cmd_fundamental(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        return cmd_render(o, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "usage: " << e.what() << "\n";
        return usage_error;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << "\n";
        return usage_error;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << "\n";
        return math_failure;
    }
}

}  // namespace maxcurve::cli
