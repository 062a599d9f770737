#include "maxcurve/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "maxcurve/combinatorics.hpp"
#include "maxcurve/errors.hpp"

namespace maxcurve {

Budgets Budgets::from_env()
{
    Budgets b;
    if (const char* env = std::getenv("MAXCURVE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            b.resamples = v;
            b.candidates = v;
        }
    }
    return b;
}

NodeSet principal_lattice(int n, int i0, int j0)
{
    std::vector<Point> pts;
    for (const auto& lp : comb::triangular_lattice(n, i0, j0).points) {
        pts.push_back({Rational(static_cast<long>(lp.i)), Rational(static_cast<long>(lp.j))});
    }
    return NodeSet(std::move(pts));
}

GcCertificate principal_lattice_certificate(int n, int i0, int j0)
{
    GcCertificate cert;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            std::vector<Line> lines;
            for (int a = 0; a < i; ++a) {
                lines.emplace_back(1, 0, -(i0 + a));
            }
            for (int b = 0; b < j; ++b) {
                lines.emplace_back(0, 1, -(j0 + b));
            }
            for (int s = i + j + 1; s <= n; ++s) {
                lines.emplace_back(1, 1, -(i0 + j0 + s));
            }
            cert.node_lines.push_back(std::move(lines));
        }
    }
    return cert;
}

bool in_general_position(std::span<const Line> lines)
{
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto p = lines[i].intersection(lines[j]);
            if (!p) {
                return false;
            }
            for (std::size_t k = j + 1; k < lines.size(); ++k) {
                if (lines[k].contains(*p)) {
                    return false;
                }
            }
        }
    }
    return true;
}

RationalSampler::RationalSampler(std::uint64_t seed, int numerator_bound, int denominator_bound)
    : rng_(seed), numerator_bound_(numerator_bound), denominator_bound_(denominator_bound)
{
}

Rational RationalSampler::next()
{
    // Plain modular reduction keeps the stream identical across standard libraries.
    const auto span = static_cast<std::uint64_t>(2 * numerator_bound_ + 1);
    const long num = static_cast<long>(rng_() % span) - numerator_bound_;
    const long den = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(denominator_bound_));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

PointSource RationalSampler::source()
{
    return [this] { return point(); };
}

GeneralPositionLines random_general_position_lines(int n, std::uint64_t seed,
                                                   const Budgets& budgets)
{
    if (n < 0) {
        throw PreconditionError("random_general_position_lines: negative degree");
    }
    RationalSampler sampler(seed, 9, 4);
    GeneralPositionLines out{n, {}};
    std::vector<Point> crossings;
    while (out.lines.size() < static_cast<std::size_t>(n + 2)) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt <= budgets.resamples && !placed; ++attempt) {
            const Rational a = sampler.next();
            const Rational b = sampler.next();
            const Rational c = sampler.next();
            if (sgn(a) == 0 && sgn(b) == 0) {
                continue;
            }
            const Line candidate(a, b, c);
            const bool parallel = std::any_of(out.lines.begin(), out.lines.end(),
                                              [&](const Line& l) { return l.parallel_to(candidate); });
            const bool concurrent =
                std::any_of(crossings.begin(), crossings.end(),
                            [&](const Point& p) { return candidate.contains(p); });
            if (parallel || concurrent) {
                continue;
            }
            for (const auto& l : out.lines) {
                crossings.push_back(*l.intersection(candidate));
            }
            out.lines.push_back(candidate);
            placed = true;
        }
        if (!placed) {
            throw ConstructionError("resampling budget exceeded while drawing line " +
                                    std::to_string(out.lines.size()));
        }
    }
    return out;
}

ChungYaoSet chung_yao(const GeneralPositionLines& lines)
{
    const auto& ls = lines.lines;
    if (static_cast<int>(ls.size()) != lines.n + 2 || !in_general_position(ls)) {
        throw PreconditionError("chung_yao: lines are not n+2 lines in general position");
    }
    ChungYaoSet out;
    out.lines = ls;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            pts.push_back(*ls[i].intersection(ls[j]));
            out.node_lines.emplace_back(i, j);
            std::vector<Line> rest;
            for (std::size_t k = 0; k < ls.size(); ++k) {
                if (k != i && k != j) {
                    rest.push_back(ls[k]);
                }
            }
            out.certificate.node_lines.push_back(std::move(rest));
        }
    }
    out.nodes = NodeSet(std::move(pts));
    return out;
}

std::pair<Curve, Curve> grid_curves(int k, int m)
{
    if (k < 1 || m < 1) {
        throw PreconditionError("grid_curves: k and m must be positive");
    }
    std::vector<Line> xs;
    std::vector<Line> ys;
    for (int i = 0; i < k; ++i) {
        xs.emplace_back(1, 0, -i);
    }
    for (int j = 0; j < m; ++j) {
        ys.emplace_back(0, 1, -j);
    }
    return {product_of_lines(xs), product_of_lines(ys)};
}

PointSource curve_point_source(const Curve& f, std::uint64_t seed)
{
    if (!f.line_factored()) {
        throw PreconditionError("curve not samplable");
    }
    struct State {
        std::vector<Line> lines;
        RationalSampler sampler;
        std::size_t next = 0;
    };
    auto state = std::make_shared<State>(State{f.lines(), RationalSampler(seed), 0});
    return [state] {
        const Line& l = state->lines[state->next++ % state->lines.size()];
        return l.at(state->sampler.next());
    };
}

namespace {

// Appends sampled points accepted by `admissible` that raise the rank of
// the degree-n Vandermonde matrix, until |x| == target.
NodeSet greedy_extend(NodeSet x, int n, std::size_t target, const PointSource& sampler,
                      std::size_t budget, const std::function<bool(const Point&)>& admissible)
{
    for (std::size_t tried = 0; x.size() < target; ++tried) {
        if (tried >= budget) {
            throw ConstructionError("sampler exhausted after " + std::to_string(budget) +
                                    " candidates with " + std::to_string(x.size()) + " of " +
                                    std::to_string(target) + " nodes");
        }
        const Point p = sampler();
        if (x.contains(p) || !admissible(p)) {
            continue;
        }
        NodeSet grown = x.with(p);
        if (rank(vandermonde(grown, n)) == grown.size()) {
            x = std::move(grown);
        }
    }
    return x;
}

}  // namespace

NodeSet enlarge_independent(const NodeSet& x, int n, const PointSource& sampler,
                            std::size_t budget)
{
    if (!is_independent(x, n)) {
        throw PreconditionError("enlarge_independent: node set is not " + std::to_string(n) +
                                "-independent");
    }
    return greedy_extend(x, n, monomial_count(n), sampler, budget,
                         [](const Point&) { return true; });
}

NodeSet enlarge_on_curve(const NodeSet& x, const Curve& q, int n,
                         std::optional<PointSource> sampler, std::uint64_t seed,
                         std::size_t budget)
{
    if (!q.squarefree_certified()) {
        throw PreconditionError("enlarge_on_curve: curve is not squarefree-certified");
    }
    for (const auto& p : x) {
        if (!q.vanishes_at(p)) {
            throw PreconditionError("enlarge_on_curve: node off the curve");
        }
    }
    if (!is_independent(x, n)) {
        throw PreconditionError("enlarge_on_curve: node set is not " + std::to_string(n) +
                                "-independent");
    }
    const auto target = static_cast<std::size_t>(comb::d_count(n, q.total_degree()));
    if (x.size() > target) {
        throw PreconditionError("enlarge_on_curve: more than d(n,k) nodes");
    }
    if (!sampler) {
        if (!q.line_factored()) {
            throw ConstructionError("curve not samplable");
        }
        sampler = curve_point_source(q, seed);
    }
    return greedy_extend(x, n, target, *sampler, budget,
                         [&](const Point& p) { return q.vanishes_at(p); });
}

NodeSet TwoCurveSpec::nodes() const
{
    std::vector<Point> pts(intersections.begin(), intersections.end());
    pts.insert(pts.end(), cf.begin(), cf.end());
    pts.insert(pts.end(), cg.begin(), cg.end());
    return NodeSet(std::move(pts));
}

namespace {

NodeSet factor_intersections(const Curve& f, const Curve& g)
{
    if (!f.line_factored() || !g.line_factored()) {
        throw PreconditionError(
            "two_curve_correct_set: intersections must be supplied for non-line factors");
    }
    std::vector<Point> pts;
    for (const auto& lf : f.lines()) {
        for (const auto& lg : g.lines()) {
            const auto p = lf.intersection(lg);
            if (!p) {
                throw ConstructionError("intersection degenerate: parallel factors " +
                                        to_string(lf) + " and " + to_string(lg));
            }
            if (std::find(pts.begin(), pts.end(), *p) != pts.end()) {
                throw ConstructionError("intersection degenerate: repeated point (" +
                                        to_string(p->x) + ", " + to_string(p->y) + ")");
            }
            pts.push_back(*p);
        }
    }
    return NodeSet(std::move(pts));
}

NodeSet correct_subset_on(const Curve& on, const Curve& off, int degree,
                          const std::optional<PointSource>& source, std::uint64_t seed,
                          std::size_t budget)
{
    const std::size_t target = monomial_count(degree);
    if (target == 0) {
        return {};
    }
    PointSource sampler;
    if (source) {
        sampler = *source;
    } else if (on.line_factored()) {
        sampler = curve_point_source(on, seed);
    } else {
        throw ConstructionError("curve not samplable");
    }
    NodeSet picked = greedy_extend({}, degree, target, sampler, budget, [&](const Point& p) {
        return on.vanishes_at(p) && !off.vanishes_at(p);
    });
    if (!is_correct(picked, degree)) {
        throw ConstructionError("two_curve_correct_set: greedy selection is not " +
                                std::to_string(degree) + "-correct");
    }
    return picked;
}

}  // namespace

TwoCurveSpec two_curve_correct_set(const Curve& f, const Curve& g, int delta,
                                   const TwoCurveOptions& options)
{
    if (delta != 0 && delta != 1) {
        throw PreconditionError("two_curve_correct_set: delta must be 0 or 1");
    }
    if (gcd_certificate(f, g).h) {
        throw PreconditionError("two_curve_correct_set: curves share a component");
    }
    const int m = f.total_degree();
    const int k = g.total_degree();

    NodeSet inter;
    if (options.intersections) {
        inter = *options.intersections;
        if (inter.size() != static_cast<std::size_t>(m * k)) {
            throw ConstructionError("intersection degenerate: " + std::to_string(inter.size()) +
                                    " points supplied, " + std::to_string(m * k) + " required");
        }
        for (const auto& p : inter) {
            if (!f.vanishes_at(p) || !g.vanishes_at(p)) {
                throw PreconditionError("two_curve_correct_set: supplied point off a curve");
            }
        }
    } else {
        inter = factor_intersections(f, g);
    }

    TwoCurveSpec spec{f, g, delta, std::move(inter), {}, {}};
    spec.cf = correct_subset_on(f, g, m - 2 + delta, options.f_source, options.seed,
                                options.budget);
    spec.cg = correct_subset_on(g, f, k - 2 + delta, options.g_source, options.seed + 1,
                                options.budget);
    return spec;
}

}  // namespace maxcurve
