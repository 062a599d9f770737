#include "maxcurve_cli/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>
#include <vector>

#include "maxcurve/analysis.hpp"

namespace maxcurve::cli {

namespace {

constexpr double canvas = 800.0;
constexpr double margin = 0.05 * canvas;
constexpr int grid = 200;

struct View {
    double x0, y0, scale;

    // World to canvas, y pointing up in the world.
    std::pair<double, double> map(double x, double y) const
    {
        return {margin + (x - x0) * scale, canvas - margin - (y - y0) * scale};
    }
    // Canvas corners in world coordinates.
    double wx(double cx) const { return x0 + (cx - margin) / scale; }
    double wy(double cy) const { return y0 + (canvas - margin - cy) / scale; }
};

View fit(const NodeSet& x)
{
    double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
    if (!x.empty()) {
        lo_x = hi_x = x[0].x.get_d();
        lo_y = hi_y = x[0].y.get_d();
        for (const auto& p : x) {
            lo_x = std::min(lo_x, p.x.get_d());
            hi_x = std::max(hi_x, p.x.get_d());
            lo_y = std::min(lo_y, p.y.get_d());
            hi_y = std::max(hi_y, p.y.get_d());
        }
    }
    double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span <= 0) span = 2;
    // Center the shorter side.
    const double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
    return {cx - span / 2, cy - span / 2, (canvas - 2 * margin) / span};
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

// Segment of a*x + b*y + c = 0 inside the canvas, in canvas coordinates.
std::optional<std::array<double, 4>> clip(const Line& l, const View& v)
{
    const double a = l.a().get_d(), b = l.b().get_d(), c = l.c().get_d();
    const double xmin = v.wx(0), xmax = v.wx(canvas);
    const double ymin = v.wy(canvas), ymax = v.wy(0);
    std::vector<std::pair<double, double>> hits;
    if (b != 0) {
        for (double xx : {xmin, xmax}) {
            double yy = -(a * xx + c) / b;
            if (yy >= ymin && yy <= ymax) hits.emplace_back(xx, yy);
        }
    }
    if (a != 0) {
        for (double yy : {ymin, ymax}) {
            double xx = -(b * yy + c) / a;
            if (xx >= xmin && xx <= xmax) hits.emplace_back(xx, yy);
        }
    }
    if (hits.size() < 2) return std::nullopt;
    std::sort(hits.begin(), hits.end());
    auto [x1, y1] = v.map(hits.front().first, hits.front().second);
    auto [x2, y2] = v.map(hits.back().first, hits.back().second);
    return std::array<double, 4>{x1, y1, x2, y2};
}

double eval_d(const Poly& p, double x, double y)
{
    double sum = 0;
    const int n = p.degree_bound();
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) {
            const Rational& c = p.coeffs()[static_cast<std::size_t>(monomial_index(d - j, j))];
            if (sgn(c) != 0) sum += c.get_d() * std::pow(x, d - j) * std::pow(y, j);
        }
    return sum;
}

// Marching squares on the canvas; one path of disjoint segments.
std::string sample_path(const Poly& p, const View& v)
{
    const double step = canvas / grid;
    std::vector<double> val((grid + 1) * (grid + 1));
    for (int r = 0; r <= grid; ++r)
        for (int c = 0; c <= grid; ++c)
            val[static_cast<std::size_t>(r * (grid + 1) + c)] = eval_d(p, v.wx(c * step), v.wy(r * step));
    auto at = [&](int r, int c) { return val[static_cast<std::size_t>(r * (grid + 1) + c)]; };
    std::string d;
    for (int r = 0; r < grid; ++r)
        for (int c = 0; c < grid; ++c) {
            const std::array<std::pair<int, int>, 4> corner{{{r, c}, {r, c + 1}, {r + 1, c + 1}, {r + 1, c}}};
            std::vector<std::pair<double, double>> cuts;
            for (int e = 0; e < 4; ++e) {
                auto [r1, c1] = corner[static_cast<std::size_t>(e)];
                auto [r2, c2] = corner[static_cast<std::size_t>((e + 1) % 4)];
                const double f1 = at(r1, c1), f2 = at(r2, c2);
                if ((f1 < 0) == (f2 < 0)) continue;
                const double t = f1 / (f1 - f2);
                cuts.emplace_back((c1 + t * (c2 - c1)) * step, (r1 + t * (r2 - r1)) * step);
            }
            for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
                d += "M" + num(cuts[i].first) + " " + num(cuts[i].second) + "L" +
                     num(cuts[i + 1].first) + " " + num(cuts[i + 1].second);
        }
    return d;
}

}  // namespace

Rendering render_svg(const NodeSet& x, int n, std::span<const Curve> curves,
                     const RenderOptions& options)
{
    const View v = fit(x);
    std::vector<Line> maximal;
    if (options.highlight_maximal) maximal = maximal_lines(x, n);
    auto is_maximal = [&](const Line& l) {
        return std::binary_search(maximal.begin(), maximal.end(), l);
    };

    Rendering out;
    std::string body;
    std::vector<Line> drawn;
    auto stroke = [&](const Line& l, bool hl) {
        if (std::find(drawn.begin(), drawn.end(), l) != drawn.end()) return;
        drawn.push_back(l);
        auto seg = clip(l, v);
        if (!seg) return;
        body += "  <line class=\"" + std::string(hl ? "line maximal" : "line") + "\" x1=\"" +
                num((*seg)[0]) + "\" y1=\"" + num((*seg)[1]) + "\" x2=\"" + num((*seg)[2]) +
                "\" y2=\"" + num((*seg)[3]) + "\" stroke=\"" + (hl ? "#c0392b" : "#34495e") +
                "\" stroke-width=\"" + (hl ? "3" : "1.5") + "\"/>\n";
        ++out.strokes;
    };

    for (const auto& f : curves)
        for (const auto& factor : f.factors()) {
            if (auto l = factor.as_line()) {
                stroke(*l, is_maximal(*l));
            } else {
                ++out.approximate_factors;
                body += "  <path class=\"approximate\" d=\"" + sample_path(factor, v) +
                        "\" fill=\"none\" stroke=\"#8e44ad\" stroke-width=\"1.5\"/>\n";
            }
        }
    for (const auto& l : maximal) stroke(l, true);

    for (const auto& p : x) {
        auto [cx, cy] = v.map(p.x.get_d(), p.y.get_d());
        body += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
                "\" r=\"5\" fill=\"#2c3e50\"><title>(" + to_string(p.x) + ", " + to_string(p.y) +
                ")</title></circle>\n";
        ++out.circles;
    }

    out.svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
              "viewBox=\"0 0 800 800\">\n";
    if (out.approximate_factors > 0)
        out.svg += "  <!-- approximate: " + std::to_string(out.approximate_factors) +
                   " non-line factor(s) drawn as sampled polylines -->\n";
    out.svg += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n" + body + "</svg>\n";
    return out;
}

}  // namespace maxcurve::cli
