#include "maxcurve/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxcurve/errors.hpp"

namespace maxcurve::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& where, const std::string& what)
{
    throw FormatError(what + " at " + (where.empty() ? "/" : where));
}

Json parse_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

const Json& member(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object()) fail_at(where, "expected object");
    auto it = obj.find(key);
    if (it == obj.end()) fail_at(where, std::string("missing \"") + key + "\"");
    return *it;
}

Rational rational_at(const Json& j, const std::string& where)
{
    if (!j.is_string()) fail_at(where, "expected rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const FormatError& e) {
        fail_at(where, e.what());
    }
}

int int_at(const Json& j, const std::string& where)
{
    if (!j.is_number_integer()) fail_at(where, "expected integer");
    auto v = j.get<long long>();
    if (v < 0 || v > 1000) fail_at(where, "integer out of range");
    return static_cast<int>(v);
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Point point_at(const Json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 2) fail_at(where, "expected [\"x\",\"y\"]");
    return {rational_at(j[0], where + "/0"), rational_at(j[1], where + "/1")};
}

Json line_json(const Line& l)
{
    return Json::array({to_string(l.a()), to_string(l.b()), to_string(l.c())});
}

Line line_at(const Json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 3) fail_at(where, "expected [\"a\",\"b\",\"c\"]");
    Rational a = rational_at(j[0], where + "/0");
    Rational b = rational_at(j[1], where + "/1");
    Rational c = rational_at(j[2], where + "/2");
    if (sgn(a) == 0 && sgn(b) == 0) fail_at(where, "degenerate line");
    return Line(a, b, c);
}

Json factor_json(const Poly& p)
{
    if (auto l = p.as_line()) return line_json(*l);
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"degree_bound", p.degree_bound()}, {"coeffs", std::move(coeffs)}};
}

Poly factor_at(const Json& j, const std::string& where)
{
    if (j.is_array()) return line_at(j, where).poly();
    int n = int_at(member(j, "degree_bound", where), where + "/degree_bound");
    const Json& cs = member(j, "coeffs", where);
    if (!cs.is_array()) fail_at(where + "/coeffs", "expected array");
    if (cs.size() != static_cast<std::size_t>(monomial_count(n)))
        fail_at(where + "/coeffs", "expected " + std::to_string(monomial_count(n)) + " coefficients");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(rational_at(cs[i], where + "/coeffs/" + std::to_string(i)));
    Poly p(n, std::move(coeffs));
    if (p.effective_degree() < 1) fail_at(where, "factor of degree < 1");
    return p;
}

Json curve_json(const Curve& f)
{
    Json factors = Json::array();
    for (const auto& p : f.factors()) factors.push_back(factor_json(p));
    return Json{{"factors", std::move(factors)}, {"squarefree", f.squarefree_certified()}};
}

Curve curve_at(const Json& j, const std::string& where)
{
    const Json& fs = member(j, "factors", where);
    if (!fs.is_array() || fs.empty()) fail_at(where + "/factors", "expected non-empty array");
    std::vector<Poly> factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
        factors.push_back(factor_at(fs[i], where + "/factors/" + std::to_string(i)));
    bool squarefree = true;
    if (auto it = j.find("squarefree"); it != j.end()) {
        if (!it->is_boolean()) fail_at(where + "/squarefree", "expected boolean");
        squarefree = it->get<bool>();
    }
    try {
        return Curve(std::move(factors), squarefree);
    } catch (const PreconditionError& e) {
        fail_at(where, e.what());
    }
}

Json value_json(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    Json pts = Json::array();
    for (const auto& p : std::get<std::vector<Point>>(v)) pts.push_back(point_json(p));
    return pts;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string nodeset_to_json(const NodeSet& x, int degree)
{
    Json nodes = Json::array();
    for (const auto& p : x) nodes.push_back(point_json(p));
    return dump(Json{{"degree", degree}, {"nodes", std::move(nodes)}});
}

NodeSetFile parse_nodeset(std::string_view text)
{
    Json j = parse_text(text);
    int degree = int_at(member(j, "degree", ""), "/degree");
    const Json& ns = member(j, "nodes", "");
    if (!ns.is_array()) fail_at("/nodes", "expected array");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Point p = point_at(ns[i], "/nodes/" + std::to_string(i));
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (pts[k] == p)
                fail_at("/nodes/" + std::to_string(i),
                        "duplicate node (same as /nodes/" + std::to_string(k) + ")");
        pts.push_back(std::move(p));
    }
    return {NodeSet(std::move(pts)), degree};
}

std::string curve_to_json(const Curve& f) { return dump(curve_json(f)); }

Curve parse_curve(std::string_view text) { return curve_at(parse_text(text), ""); }

std::string curves_to_json(std::span<const Curve> curves)
{
    Json list = Json::array();
    for (const auto& f : curves) list.push_back(curve_json(f));
    return dump(Json{{"curves", std::move(list)}});
}

std::vector<Curve> parse_curves(std::string_view text)
{
    Json j = parse_text(text);
    if (j.is_object() && j.contains("factors")) return {curve_at(j, "")};
    const Json& list = member(j, "curves", "");
    if (!list.is_array()) fail_at("/curves", "expected array");
    std::vector<Curve> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(curve_at(list[i], "/curves/" + std::to_string(i)));
    return out;
}

std::string certificate_to_json(const GcCertificate& cert)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < cert.node_lines.size(); ++i) {
        Json lines = Json::array();
        for (const auto& l : cert.node_lines[i]) lines.push_back(line_json(l));
        j[std::to_string(i)] = std::move(lines);
    }
    return dump(j);
}

GcCertificate parse_certificate(std::string_view text, std::size_t node_count)
{
    Json j = parse_text(text);
    if (!j.is_object()) fail_at("", "expected object");
    GcCertificate cert;
    cert.node_lines.resize(node_count);
    for (const auto& [key, lines] : j.items()) {
        std::string where = "/" + key;
        std::size_t idx = 0;
        std::size_t used = 0;
        try {
            idx = std::stoul(key, &used);
        } catch (const std::exception&) {
            fail_at(where, "expected node index key");
        }
        if (used != key.size() || idx >= node_count) fail_at(where, "node index out of range");
        if (!lines.is_array()) fail_at(where, "expected array of lines");
        for (std::size_t k = 0; k < lines.size(); ++k)
            cert.node_lines[idx].push_back(line_at(lines[k], where + "/" + std::to_string(k)));
    }
    return cert;
}

std::string report_to_json(const VerificationReport& r)
{
    Json params = Json::object();
    for (const auto& [name, v] : r.parameters) params[name] = v;
    Json comps = Json::array();
    for (const auto& c : r.components)
        comps.push_back(Json{{"name", c.name},
                             {"measured", value_json(c.measured)},
                             {"predicted", value_json(c.predicted)},
                             {"holds", c.holds()}});
    Json wit = Json::array();
    for (const auto& p : r.witnesses) wit.push_back(point_json(p));
    Json j{{"proposition", r.proposition},
           {"subject", r.subject},
           {"parameters", std::move(params)},
           {"components", std::move(comps)},
           {"verdict", to_string(r.verdict)}};
    if (r.verdict == Verdict::inapplicable) j["inapplicable_reason"] = r.inapplicable_reason;
    j["witnesses"] = std::move(wit);
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

std::string summary_table(std::span<const VerificationReport> reports)
{
    struct Row {
        std::size_t pass = 0, fail = 0, inapplicable = 0;
    };
    std::vector<std::pair<std::string, Row>> rows;
    Row total;
    for (const auto& r : reports) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const auto& e) { return e.first == r.proposition; });
        if (it == rows.end()) {
            rows.emplace_back(r.proposition, Row{});
            it = std::prev(rows.end());
        }
        auto bump = [&](Row& row) {
            switch (r.verdict) {
            case Verdict::pass: ++row.pass; break;
            case Verdict::fail: ++row.fail; break;
            case Verdict::inapplicable: ++row.inapplicable; break;
            }
        };
        bump(it->second);
        bump(total);
    }
    std::size_t width = 11;
    for (const auto& [name, row] : rows) width = std::max(width, name.size());
    std::string out;
    char buf[256];
    auto line = [&](const std::string& name, const Row& row) {
        std::snprintf(buf, sizeof buf, "%-*s %8zu %8zu %8zu\n", static_cast<int>(width),
                      name.c_str(), row.pass, row.fail, row.inapplicable);
        out += buf;
    };
    std::snprintf(buf, sizeof buf, "%-*s %8s %8s %8s\n", static_cast<int>(width), "proposition",
                  "pass", "fail", "n/a");
    out += buf;
    out += std::string(width + 27, '-') + "\n";
    for (const auto& [name, row] : rows) line(name, row);
    out += std::string(width + 27, '-') + "\n";
    line("total", total);
    out += total.fail == 0 ? "verdict: pass\n" : "verdict: fail\n";
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw FormatError("cannot write " + path.string());
}

}  // namespace maxcurve::io
