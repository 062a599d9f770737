#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "maxcurve/combinatorics.hpp"
#include "maxcurve/errors.hpp"
#include "maxcurve/verify.hpp"

namespace maxcurve {

std::string to_string(Family f)
{
    switch (f) {
    case Family::identities:
        return "identities";
    case Family::sigma:
        return "sigma";
    case Family::construction:
        return "construction";
    case Family::interpolation:
        return "interpolation";
    case Family::maximality:
        return "maximality";
    case Family::pairwise:
        return "pairwise";
    case Family::common_component:
        return "common-component";
    case Family::triple:
        return "triple";
    case Family::gc:
        return "gc";
    case Family::two_curve:
        return "two-curve";
    case Family::fault_injection:
        return "fault-injection";
    }
    return "unknown";
}

SuiteConfig preset_config(std::string_view preset)
{
    SuiteConfig c;
    if (preset == "identities") {
        c.families = {Family::identities, Family::sigma};
    } else if (preset == "pairwise") {
        c.families = {Family::maximality, Family::pairwise, Family::common_component};
    } else if (preset == "triple") {
        c.families = {Family::triple};
    } else if (preset == "gc") {
        c.families = {Family::gc};
    } else if (preset == "construction") {
        c.families = {Family::construction, Family::interpolation, Family::two_curve};
    } else if (preset == "all") {
        c.families = {Family::identities,   Family::sigma,    Family::construction,
                      Family::interpolation, Family::maximality, Family::pairwise,
                      Family::common_component, Family::triple, Family::gc,
                      Family::two_curve};
    } else {
        throw PreconditionError("unknown preset \"" + std::string(preset) + "\"");
    }
    return c;
}

namespace {

using Reports = std::vector<VerificationReport>;
using Task = std::function<Reports()>;
using Count = comb::Count;

// ------------------------------------------------------------ helpers

VerificationReport make_report(std::string proposition, std::string subject,
                               std::vector<std::pair<std::string, std::int64_t>> params = {})
{
    VerificationReport r;
    r.proposition = std::move(proposition);
    r.subject = std::move(subject);
    r.parameters = std::move(params);
    return r;
}

VerificationReport expect_applicable(VerificationReport r, const std::string& subject)
{
    r.subject = subject;
    if (r.verdict == Verdict::inapplicable) {
        r.verdict = Verdict::fail;
        r.detail = "expected applicable: " + r.inapplicable_reason;
    }
    return r;
}

std::vector<std::size_t> bits_of(unsigned mask)
{
    std::vector<std::size_t> out;
    for (std::size_t b = 0; mask >> b; ++b) {
        if ((mask >> b) & 1U) {
            out.push_back(b);
        }
    }
    return out;
}

int popcount(unsigned mask) { return static_cast<int>(bits_of(mask).size()); }

Curve curve_of(const std::vector<Line>& pool, unsigned mask)
{
    std::vector<Line> picked;
    for (std::size_t b : bits_of(mask)) {
        picked.push_back(pool[b]);
    }
    return product_of_lines(picked);
}

std::optional<Curve> maybe_curve_of(const std::vector<Line>& pool, unsigned mask)
{
    if (mask == 0) {
        return std::nullopt;
    }
    return curve_of(pool, mask);
}

struct Subject {
    std::string name;
    CorrectSet set;
    GcCertificate certificate;
    std::vector<Line> construction_lines;
};

Subject chung_yao_subject(int n, std::uint64_t seed, const Budgets& budgets)
{
    ChungYaoSet cy = chung_yao(random_general_position_lines(n, seed, budgets));
    auto cs = CorrectSet::make(cy.nodes, n);
    const std::string name = "chung-yao n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    if (!cs) {
        throw ConstructionError(name + " is not correct");
    }
    return {name, *cs, cy.certificate, cy.lines};
}

Subject principal_subject(int n)
{
    auto cs = CorrectSet::make(principal_lattice(n), n);
    const std::string name = "principal n=" + std::to_string(n);
    if (!cs) {
        throw ConstructionError(name + " is not correct");
    }
    return {name, *cs, principal_lattice_certificate(n), {}};
}

// Lines through two nodes that carry fewer than n + 1 nodes, first `count`
// in line order.
std::vector<Line> non_maximal_node_lines(const NodeSet& x, int n, std::size_t count)
{
    std::set<Line> lines;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            lines.insert(line_through(x[i], x[j]));
        }
    }
    std::vector<Line> out;
    for (const auto& l : lines) {
        if (out.size() == count) {
            break;
        }
        const auto on = std::count_if(x.begin(), x.end(), [&](const Point& p) { return l.contains(p); });
        if (on < n + 1) {
            out.push_back(l);
        }
    }
    return out;
}

// Vertical, horizontal and anti-diagonal maximal line families of T_n.
std::vector<Line> lattice_family(int family, int count, int n)
{
    std::vector<Line> out;
    for (int a = 0; a < count; ++a) {
        if (family == 0) {
            out.emplace_back(1, 0, -a);
        } else if (family == 1) {
            out.emplace_back(0, 1, -a);
        } else {
            out.emplace_back(1, 1, -(n - a));
        }
    }
    return out;
}

template <typename Pred>
std::int64_t count_nodes(const NodeSet& x, Pred pred)
{
    return std::count_if(x.begin(), x.end(), pred);
}

// Components for the maximal-line structure of a correct set.
void add_maximal_line_structure(VerificationReport& r, const NodeSet& x, int n,
                                const std::vector<Line>& mlines)
{
    const auto size = static_cast<std::int64_t>(mlines.size());
    r.add("at_most_n_plus_2", std::int64_t{size <= n + 2 ? 1 : 0}, std::int64_t{1});
    std::int64_t meeting_at_node = 0;
    std::int64_t concurrent_triples = 0;
    for (std::size_t i = 0; i < mlines.size(); ++i) {
        for (std::size_t j = i + 1; j < mlines.size(); ++j) {
            const auto p = mlines[i].intersection(mlines[j]);
            if (p && x.contains(*p)) {
                ++meeting_at_node;
            }
            for (std::size_t k = j + 1; p && k < mlines.size(); ++k) {
                if (mlines[k].contains(*p)) {
                    ++concurrent_triples;
                }
            }
        }
    }
    r.add("pairs_meeting_at_node", meeting_at_node, size * (size - 1) / 2);
    r.add("concurrent_triples", concurrent_triples, std::int64_t{0});
}

// ------------------------------------------------------------ identities

struct Tally {
    std::int64_t holds = 0;
    std::int64_t total = 0;
    std::string first_failure;

    void check(bool ok, const std::string& where)
    {
        ++total;
        if (ok) {
            ++holds;
        } else if (first_failure.empty()) {
            first_failure = where;
        }
    }

    VerificationReport report(std::string proposition, int bound) const
    {
        auto r = make_report(std::move(proposition), "bound=" + std::to_string(bound),
                             {{"bound", bound}});
        r.add("tuples_holding", holds, total);
        r.detail = first_failure.empty() ? "" : "first failure at " + first_failure;
        r.settle();
        return r;
    }
};

std::string tuple(std::initializer_list<Count> values)
{
    std::string s = "(";
    for (Count v : values) {
        s += (s.size() > 1 ? "," : "") + std::to_string(v);
    }
    return s + ")";
}

Count lattice_size(Count n, Count i0, Count j0)
{
    return static_cast<Count>(comb::triangular_lattice(n, i0, j0).points.size());
}

Reports identity_reports(int bound)
{
    using namespace comb;
    Tally enumeration, decomposition, zs0, zsss, zs, nmk1, nmk2, dnk2, k_above_n, dnk3, dims;
    for (Count n = 0; n <= bound; ++n) {
        dims.check(dim_pi(n) == lattice_size(n, 0, 0), tuple({n}));
        for (Count k = 0; k <= bound; ++k) {
            for (Count m = 0; m <= bound; ++m) {
                const Count h = hilbert_count(k, m, n);
                const auto slice = static_cast<Count>(rect_slice(k, m, n).points.size());
                const std::string at = tuple({k, m, n});
                enumeration.check(h == slice, at);
                decomposition.check(lattice_size(n, 0, 0) - lattice_size(n - k, k, 0) -
                                            lattice_size(n - m, 0, m) +
                                            lattice_size(n - k - m, k, m) ==
                                        slice,
                                    at);
                if (k + m <= n + 2) {
                    zs0.check(slice == k * m, at);
                }
                if (k + m >= n + 1) {
                    zsss.check(slice == dim_pi(n) - dim_pi(n - k) - dim_pi(n - m), at);
                }
                if (k >= 1 && m >= 1) {
                    zs.check((slice <= k * m - 1) == (k + m >= n + 3), at);
                }
            }
            const std::string at = tuple({n, k});
            // The sum (n-k+2) + ... + (n+1), accumulated term by term.
            if (k <= n + 2) {
                Count sum = 0;
                for (Count t = n - k + 2; t <= n + 1; ++t) {
                    sum += t;
                }
                dnk2.check(d_count(n, k) == sum && d_count(n, k) == k * (2 * n + 3 - k) / 2, at);
            }
            if (k >= n + 1) {
                k_above_n.check(d_count(n, k) == dim_pi(n), at);
            }
            dnk3.check(d_tilde(n, k) == d_count(n, k) - dim_pi(k - n - 3), at);
        }
        for (Count m = 0; m <= bound; ++m) {
            for (Count k = 0; k <= std::min(m, n); ++k) {
                nmk1.check(d_count(n, m) - d_count(n, k) == d_count(n - k, m - k),
                           tuple({n, m, k}));
            }
            if (m <= n) {
                for (Count k = 0; k <= n - m + 2; ++k) {
                    nmk2.check(d_count(n, m) - m * k == d_count(n - k, m), tuple({n, m, k}));
                }
            }
        }
    }
    return {dims.report("dim-pi-lattice", bound),
            enumeration.report("hilbert-count-enumeration", bound),
            decomposition.report("hilbert-count-lattice-decomposition", bound),
            zs0.report("hilbert-count-full-rectangle", bound),
            zsss.report("hilbert-count-covering-case", bound),
            zs.report("hilbert-count-deficiency", bound),
            nmk1.report("d-difference-shift", bound),
            nmk2.report("d-strip-removal", bound),
            dnk2.report("d-closed-form", bound),
            k_above_n.report("d-saturation", bound),
            dnk3.report("d-tilde-correction", bound)};
}

Reports sigma_reports(int bound)
{
    using namespace comb;
    Tally general, fifth, tilde_sum;
    for (Count n = 0; n <= bound; ++n) {
        for (Count k1 = 0; k1 <= n; ++k1) {
            for (Count k2 = 0; k2 <= n; ++k2) {
                for (Count k3 = 0; k3 <= n; ++k3) {
                    const Count sigma = k1 + k2 + k3 - (n + 2);
                    const std::string at = tuple({n, k1, k2, k3});
                    tilde_sum.check(dim_pi(n) - d_tilde(n - k1, k2) - d_tilde(n - k2, k3) -
                                            d_tilde(n - k3, k1) ==
                                        sigma * (sigma + 1) / 2,
                                    at);
                    if (sigma < -1) {
                        continue;
                    }
                    const auto e = triple_sigma_expressions(n, k1, k2, k3);
                    general.check(std::all_of(e.general.begin(), e.general.end(),
                                              [&](Count v) { return v == e.general[0]; }),
                                  at);
                    if (e.fifth) {
                        fifth.check(*e.fifth == e.general[0], at);
                    }
                }
            }
        }
    }
    return {general.report("sigma-expressions-agree", bound),
            fifth.report("sigma-closed-form-agrees", bound),
            tilde_sum.report("sigma-d-tilde-sum", bound)};
}

// ------------------------------------------------------------ construction

Reports correctness_reports(const std::string& kind, const NodeSet& nodes, int n,
                            const GcCertificate& cert, const std::vector<Line>& construction_lines,
                            const std::string& subject)
{
    Reports out;
    auto correct = make_report(kind + "-correct", subject, {{"n", n}});
    correct.add("node_count", static_cast<std::int64_t>(nodes.size()), comb::dim_pi(n));
    correct.add("rank", static_cast<std::int64_t>(rank(vandermonde(nodes, n))), comb::dim_pi(n));
    correct.settle();
    std::vector<Line> mlines = maximal_lines(nodes, n);
    if (correct.verdict == Verdict::fail) {
        // A line through n + 2 or more nodes explains the defect.
        std::set<Line> seen;
        for (std::size_t i = 0; i < nodes.size() && correct.witnesses.empty(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                const Line l = line_through(nodes[i], nodes[j]);
                if (!seen.insert(l).second) {
                    continue;
                }
                if (count_nodes(nodes, [&](const Point& p) { return l.contains(p); }) >= n + 2) {
                    for (const auto& p : nodes) {
                        if (l.contains(p)) {
                            correct.witnesses.push_back(p);
                        }
                    }
                    correct.detail = "line " + to_string(l) + " carries more than n+1 nodes";
                    break;
                }
            }
        }
    }
    out.push_back(std::move(correct));

    auto certified = make_report(kind + "-gc-certificate", subject, {{"n", n}});
    const auto bad = certificate_violation(nodes, cert, n);
    certified.add("violating_nodes", std::int64_t{bad ? 1 : 0}, std::int64_t{0});
    certified.settle();
    if (bad && *bad < nodes.size()) {
        certified.witnesses.push_back(nodes[*bad]);
    }
    out.push_back(std::move(certified));

    auto structure = make_report(kind + "-maximal-lines", subject, {{"n", n}});
    if (!construction_lines.empty()) {
        structure.add("maximal_lines", static_cast<std::int64_t>(mlines.size()),
                      static_cast<std::int64_t>(n + 2));
        const auto found = std::count_if(construction_lines.begin(), construction_lines.end(),
                                         [&](const Line& l) {
                                             return std::binary_search(mlines.begin(), mlines.end(), l);
                                         });
        structure.add("construction_lines_maximal", static_cast<std::int64_t>(found),
                      static_cast<std::int64_t>(n + 2));
    }
    add_maximal_line_structure(structure, nodes, n, mlines);
    structure.settle();
    out.push_back(std::move(structure));
    return out;
}

Reports gc_search_report(const Subject& s)
{
    const int n = s.set.degree();
    auto r = make_report("gc-search", s.name, {{"n", n}});
    const GcResult result = certify_gc(s.set.nodes(), n);
    r.add("certified", std::int64_t{result.status == GcResult::Status::certified ? 1 : 0},
          std::int64_t{1});
    r.detail = to_string(result.status) + ": " + result.detail;
    r.settle();
    if (result.node) {
        r.witnesses.push_back(s.set.nodes()[*result.node]);
    }
    return {r};
}

Reports grid_slice_reports(int n)
{
    Reports out;
    const NodeSet lattice = principal_lattice(n);
    for (int k = 1; k <= n + 1; ++k) {
        for (int m = 1; m <= n + 1; ++m) {
            const auto [f, g] = grid_curves(k, m);
            std::vector<Point> measured;
            for (const auto& p : lattice) {
                if (f.vanishes_at(p) && g.vanishes_at(p)) {
                    measured.push_back(p);
                }
            }
            std::vector<Point> predicted;
            for (const auto& lp : comb::rect_slice(k, m, n).points) {
                predicted.push_back({Rational(static_cast<long>(lp.i)), Rational(static_cast<long>(lp.j))});
            }
            std::sort(measured.begin(), measured.end());
            std::sort(predicted.begin(), predicted.end());
            auto r = make_report("grid-curves-slice", "principal n=" + std::to_string(n),
                                 {{"n", n}, {"k", k}, {"m", m}});
            r.add("common_nodes", measured, predicted);
            r.settle();
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ------------------------------------------------------------ interpolation

Reports interpolation_reports(const Subject& s, std::size_t trials, std::uint64_t seed)
{
    const NodeSet& x = s.set.nodes();
    const int n = s.set.degree();
    RationalSampler sampler(seed * 7919 + static_cast<std::uint64_t>(n), 12, 5);

    std::int64_t reproduced = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> coeffs(monomial_count(n));
        for (auto& c : coeffs) {
            c = sampler.next();
        }
        const Poly p(n, std::move(coeffs));
        std::vector<Rational> values;
        for (const auto& node : x) {
            values.push_back(p(node));
        }
        if (interpolate(x, values, n) == p) {
            ++reproduced;
        }
    }
    auto reproduction = make_report("interpolation-reproduction", s.name, {{"n", n}});
    reproduction.add("polynomials_reproduced", reproduced, static_cast<std::int64_t>(trials));
    reproduction.settle();

    const FundamentalBasis basis(x, n);
    std::int64_t matched = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> data;
        for (std::size_t i = 0; i < x.size(); ++i) {
            data.push_back(sampler.next());
        }
        const Poly p = basis.interpolate(data);
        for (std::size_t i = 0; i < x.size(); ++i) {
            matched += p(x[i]) == data[i] ? 1 : 0;
        }
    }
    auto lagrange = make_report("lagrange-expansion", s.name, {{"n", n}});
    lagrange.add("values_matched", matched, static_cast<std::int64_t>(trials * x.size()));
    lagrange.settle();
    return {reproduction, lagrange};
}

// ------------------------------------------------------------ maximality

Reports maximality_reports(const Subject& s, std::size_t extra_lines)
{
    Reports out;
    const NodeSet& x = s.set.nodes();
    const int n = s.set.degree();
    std::vector<Line> pool = s.construction_lines;
    const auto construction_count = static_cast<unsigned>(pool.size());
    for (const auto& l : non_maximal_node_lines(x, n, extra_lines)) {
        pool.push_back(l);
    }
    const FundamentalBasis basis(x, n);

    for (unsigned mask = 1; mask < (1U << pool.size()); ++mask) {
        const int k = popcount(mask);
        if (k > n) {
            continue;
        }
        const Curve f = curve_of(pool, mask);
        const auto on = nodes_on_curve(x, f);
        const bool maximal = static_cast<Count>(on.size()) == comb::d_count(n, k);
        bool used_by_all = true;
        for (std::size_t a = 0; a < x.size() && used_by_all; ++a) {
            if (!f.vanishes_at(x[a])) {
                used_by_all = uses_curve(basis, a, f);
            }
        }
        auto r = make_report("maximality-equivalences", s.name,
                             {{"n", n}, {"k", k}, {"lines", mask}});
        r.add("used_by_every_off_curve_node", std::int64_t{used_by_all ? 1 : 0},
              std::int64_t{maximal ? 1 : 0});
        r.add("complement_correct", std::int64_t{check_complement_correct(x, f, n) ? 1 : 0},
              std::int64_t{maximal ? 1 : 0});
        r.settle();
        out.push_back(std::move(r));
    }

    // Products, quotients and coverage among the construction lines.
    const unsigned full = (1U << construction_count) - 1;
    std::map<unsigned, bool> complement_correct;
    for (unsigned a = 1; a <= full; ++a) {
        const int ka = popcount(a);
        if (ka > n) {
            continue;
        }
        const Curve fa = curve_of(pool, a);
        const auto off_a = x.without(nodes_on_curve(x, fa));
        if (!complement_correct.contains(a)) {
            complement_correct[a] = is_correct(off_a, n - ka);
        }
        // Supersets b of a: f = fa and fa * h both maximal.
        for (unsigned b = a + 1; b <= full; ++b) {
            if ((b & a) != a || b == a || popcount(b) > n) {
                continue;
            }
            const Curve h = curve_of(pool, b & ~a);
            const int kh = h.total_degree();
            auto r = make_report("maximal-quotient", s.name,
                                 {{"n", n}, {"k", ka}, {"kh", kh}, {"f", a}, {"fh", b}});
            r.add("complement_correct", std::int64_t{complement_correct[a] ? 1 : 0},
                  std::int64_t{1});
            r.add("h_nodes_off_f", static_cast<std::int64_t>(nodes_on_curve(off_a, h).size()),
                  comb::d_count(n - ka, kh));
            r.settle();
            out.push_back(std::move(r));
        }
        // Disjoint partners c > a.
        for (unsigned c = a + 1; c <= full; ++c) {
            const int kc = popcount(c);
            if ((c & a) != 0 || kc > n) {
                continue;
            }
            const Curve fc = curve_of(pool, c);
            if (ka + kc <= n) {
                auto r = make_report("maximal-product", s.name,
                                     {{"n", n}, {"k1", ka}, {"k2", kc}, {"f1", a}, {"f2", c}});
                r.add("product_nodes",
                      static_cast<std::int64_t>(nodes_on_curve(x, fa * fc).size()),
                      comb::d_count(n, ka + kc));
                r.settle();
                out.push_back(std::move(r));
            } else {
                auto r = make_report("maximal-pair-coverage", s.name,
                                     {{"n", n}, {"k1", ka}, {"k2", kc}, {"f1", a}, {"f2", c}});
                r.add("uncovered_nodes", count_nodes(x, [&](const Point& p) {
                          return !fa.vanishes_at(p) && !fc.vanishes_at(p);
                      }),
                      std::int64_t{0});
                r.settle();
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ intersections

Reports pairwise_cy_reports(const Subject& s)
{
    Reports out;
    const int n = s.set.degree();
    const auto& pool = s.construction_lines;
    const unsigned full = (1U << pool.size()) - 1;
    for (unsigned a = 1; a <= full; ++a) {
        if (popcount(a) > n) {
            continue;
        }
        for (unsigned b = a + 1; b <= full; ++b) {
            if ((a & b) != 0 || popcount(b) > n) {
                continue;
            }
            auto r = verify_pairwise(s.set, curve_of(pool, a), curve_of(pool, b));
            r.parameters.emplace_back("f1", a);
            r.parameters.emplace_back("f2", b);
            out.push_back(expect_applicable(std::move(r), s.name));
        }
    }
    return out;
}

Reports pairwise_lattice_reports(const Subject& s)
{
    Reports out;
    const int n = s.set.degree();
    for (int fa = 0; fa < 3; ++fa) {
        for (int fb = fa + 1; fb < 3; ++fb) {
            for (int k1 = 1; k1 <= n; ++k1) {
                for (int k2 = 1; k2 <= n; ++k2) {
                    auto r = verify_pairwise(s.set, product_of_lines(lattice_family(fa, k1, n)),
                                             product_of_lines(lattice_family(fb, k2, n)));
                    r.parameters.emplace_back("family1", fa);
                    r.parameters.emplace_back("family2", fb);
                    out.push_back(expect_applicable(std::move(r), s.name));
                }
            }
        }
    }
    return out;
}

Reports common_component_reports(const Subject& s)
{
    Reports out;
    const int n = s.set.degree();
    const auto& pool = s.construction_lines;
    const std::size_t lines = pool.size();
    std::size_t assignments = 1;
    for (std::size_t i = 0; i < lines; ++i) {
        assignments *= 4;
    }
    for (std::size_t code = 0; code < assignments; ++code) {
        unsigned h = 0, g1 = 0, g2 = 0;
        std::size_t c = code;
        for (std::size_t i = 0; i < lines; ++i, c /= 4) {
            const auto bit = 1U << i;
            switch (c % 4) {
            case 1:
                h |= bit;
                break;
            case 2:
                g1 |= bit;
                break;
            case 3:
                g2 |= bit;
                break;
            default:
                break;
            }
        }
        if (g1 > g2 || (h | g1) == 0 || (h | g2) == 0 || popcount(h | g1) > n ||
            popcount(h | g2) > n) {
            continue;
        }
        auto r = verify_common_component(s.set, maybe_curve_of(pool, h), maybe_curve_of(pool, g1),
                                         maybe_curve_of(pool, g2));
        r.parameters.emplace_back("h", h);
        r.parameters.emplace_back("g1", g1);
        r.parameters.emplace_back("g2", g2);
        out.push_back(expect_applicable(std::move(r), s.name));
    }
    return out;
}

Reports triple_cy_reports(const Subject& s)
{
    Reports out;
    const int n = s.set.degree();
    const auto& pool = s.construction_lines;
    const unsigned full = (1U << pool.size()) - 1;
    for (unsigned a = 1; a <= full; ++a) {
        if (popcount(a) > n) {
            continue;
        }
        for (unsigned b = a + 1; b <= full; ++b) {
            if ((a & b) != 0 || popcount(b) > n) {
                continue;
            }
            for (unsigned c = b + 1; c <= full; ++c) {
                if (((a | b) & c) != 0 || popcount(c) > n) {
                    continue;
                }
                auto r = verify_triple(s.set, curve_of(pool, a), curve_of(pool, b),
                                       curve_of(pool, c));
                r.parameters.emplace_back("f1", a);
                r.parameters.emplace_back("f2", b);
                r.parameters.emplace_back("f3", c);
                out.push_back(expect_applicable(std::move(r), s.name));
            }
        }
    }
    return out;
}

Reports triple_lattice_reports(const Subject& s)
{
    Reports out;
    const int n = s.set.degree();
    for (int k1 = 1; k1 <= n; ++k1) {
        for (int k2 = 1; k2 <= n; ++k2) {
            for (int k3 = 1; k3 <= n; ++k3) {
                auto r = verify_triple(s.set, product_of_lines(lattice_family(0, k1, n)),
                                       product_of_lines(lattice_family(1, k2, n)),
                                       product_of_lines(lattice_family(2, k3, n)));
                out.push_back(expect_applicable(std::move(r), s.name));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ gc

Reports gc_reports(const Subject& s, const std::vector<Line>& pool)
{
    Reports out;
    const int n = s.set.degree();
    for (unsigned mask = 1; mask < (1U << pool.size()); ++mask) {
        if (popcount(mask) > n) {
            continue;
        }
        auto r = verify_gc_maximal_decomposition(s.set, s.certificate, curve_of(pool, mask));
        r.parameters.emplace_back("lines", mask);
        out.push_back(expect_applicable(std::move(r), s.name));
    }
    return out;
}

// ------------------------------------------------------------ two-curve

VerificationReport two_curve_report(const TwoCurveSpec& spec, const std::string& subject)
{
    const int n = spec.degree();
    const int m = spec.f.total_degree();
    const int k = spec.g.total_degree();
    const int delta = spec.delta;
    const NodeSet x = spec.nodes();
    auto r = make_report("two-curve-construction", subject,
                         {{"n", n}, {"m", m}, {"k", k}, {"delta", delta}});
    r.add("node_count", static_cast<std::int64_t>(x.size()), comb::dim_pi(n));
    r.add("rank", static_cast<std::int64_t>(rank(vandermonde(x, n))), comb::dim_pi(n));
    const auto on_f = static_cast<std::int64_t>(nodes_on_curve(x, spec.f).size());
    const auto on_g = static_cast<std::int64_t>(nodes_on_curve(x, spec.g).size());
    r.add("f_nodes", on_f, comb::d_count(n, m));
    r.add("f_nodes_by_parts", on_f, std::int64_t{m} * k + comb::dim_pi(m - 2 + delta));
    r.add("g_nodes", on_g, comb::d_count(n, k));
    r.add("g_nodes_by_parts", on_g, std::int64_t{m} * k + comb::dim_pi(k - 2 + delta));
    r.settle();
    if (r.verdict == Verdict::pass) {
        // Maximality seen through divisibility: every node off f uses f.
        const FundamentalBasis basis(x, n);
        std::int64_t users = 0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (!spec.f.vanishes_at(x[a])) {
                users += uses_curve(basis, a, spec.f) ? 1 : 0;
            }
        }
        r.add("off_f_nodes_using_f", users, comb::dim_pi(n) - comb::d_count(n, m));
        r.settle();
    }
    return r;
}

TwoCurveSpec grid_two_curve(const TwoCurveCase& c, std::uint64_t seed, const Budgets& budgets)
{
    const auto [f, g] = grid_curves(c.m, c.k);
    TwoCurveOptions options;
    options.seed = seed;
    options.budget = budgets.candidates;
    return two_curve_correct_set(f, g, c.delta, options);
}

std::string grid_two_curve_name(const TwoCurveCase& c, std::uint64_t seed)
{
    return "grid m=" + std::to_string(c.m) + " k=" + std::to_string(c.k) +
           " delta=" + std::to_string(c.delta) + " seed=" + std::to_string(seed);
}

Reports two_curve_reports(const TwoCurveCase& c, std::uint64_t seed, const Budgets& budgets)
{
    return {two_curve_report(grid_two_curve(c, seed, budgets), grid_two_curve_name(c, seed))};
}

// The constructed set as an interpolation subject; no certificate is known.
Subject two_curve_subject(const TwoCurveCase& c, std::uint64_t seed, const Budgets& budgets)
{
    const TwoCurveSpec spec = grid_two_curve(c, seed, budgets);
    const std::string name = "two-curve " + grid_two_curve_name(c, seed);
    auto cs = CorrectSet::make(spec.nodes(), spec.degree());
    if (!cs) {
        throw ConstructionError(name + " is not correct");
    }
    return {name, *cs, {}, {}};
}

// Parabola y = x^2 against the lines y = 1 and y = 4: a maximal curve that
// is not a product of lines.
Reports parabola_reports(int delta, std::uint64_t seed, const Budgets& budgets)
{
    const Curve f({Poly(2, {0, 0, -1, 1, 0, 0})}, true);
    const std::vector<Line> horizontals{Line(0, 1, -1), Line(0, 1, -4)};
    const Curve g = product_of_lines(horizontals);
    TwoCurveOptions options;
    options.seed = seed;
    options.budget = budgets.candidates;
    options.intersections = NodeSet{{-1, 1}, {1, 1}, {-2, 4}, {2, 4}};
    auto sampler = std::make_shared<RationalSampler>(seed);
    options.f_source = [sampler] {
        const Rational t = sampler->next();
        return Point{t, t * t};
    };
    const TwoCurveSpec spec = two_curve_correct_set(f, g, delta, options);
    return {two_curve_report(spec, "parabola delta=" + std::to_string(delta) +
                                       " seed=" + std::to_string(seed))};
}

// ------------------------------------------------------------ fault injection

Reports fault_reports(int n, std::uint64_t seed, const Budgets& budgets)
{
    ChungYaoSet cy = chung_yao(random_general_position_lines(n, seed, budgets));
    const Line& target = cy.lines.front();
    std::size_t moved = cy.nodes.size();
    for (std::size_t i = 0; i < cy.nodes.size(); ++i) {
        if (!target.contains(cy.nodes[i])) {
            moved = i;
            break;
        }
    }
    Point replacement = target.at(0);
    for (long t = 0; cy.nodes.contains(replacement); ++t) {
        replacement = target.at(t);
    }
    std::vector<Point> pts(cy.nodes.begin(), cy.nodes.end());
    pts.at(moved) = replacement;
    const NodeSet corrupted(std::move(pts));
    const std::string subject = "corrupted chung-yao n=" + std::to_string(n) +
                                " seed=" + std::to_string(seed) +
                                " node=" + std::to_string(moved);

    auto bound = make_report("collinearity-bound", subject, {{"n", n}});
    bound.add("nodes_on_line",
              count_nodes(corrupted, [&](const Point& p) { return target.contains(p); }),
              std::int64_t{n + 2});
    bound.add("independent", std::int64_t{is_independent(corrupted, n) ? 1 : 0}, std::int64_t{0});
    bound.settle();

    Reports out{bound};
    for (auto& r : correctness_reports("chung-yao", corrupted, n, cy.certificate, cy.lines, subject)) {
        out.push_back(std::move(r));
    }
    return out;
}

// ------------------------------------------------------------ runner

Reports guarded(const Task& task, const std::string& label)
{
    try {
        return task();
    } catch (const std::exception& e) {
        VerificationReport r;
        r.proposition = "construction-error";
        r.subject = label;
        r.verdict = Verdict::fail;
        r.detail = e.what();
        return {r};
    }
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& config)
{
    std::vector<std::pair<std::string, Task>> tasks;
    auto add = [&](std::string label, Task t) { tasks.emplace_back(std::move(label), std::move(t)); };
    auto seeds = [&] {
        std::vector<std::uint64_t> out;
        for (std::size_t s = 0; s < config.seeds; ++s) {
            out.push_back(config.base_seed + s);
        }
        return out;
    }();
    const Budgets budgets = config.budgets;

    auto each_cy = [&](const std::string& family, auto make_task) {
        for (int n = config.min_degree; n <= config.max_degree; ++n) {
            for (std::uint64_t seed : seeds) {
                add(family + " chung-yao n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                    [=] { return make_task(chung_yao_subject(n, seed, budgets)); });
            }
        }
    };
    auto each_lattice = [&](const std::string& family, auto make_task) {
        for (int n = config.min_degree; n <= config.max_degree; ++n) {
            add(family + " principal n=" + std::to_string(n),
                [=] { return make_task(principal_subject(n)); });
        }
    };

    for (Family family : config.families) {
        const std::string name = to_string(family);
        switch (family) {
        case Family::identities:
            add(name, [b = config.identity_bound] { return identity_reports(b); });
            break;
        case Family::sigma:
            add(name, [b = config.sigma_bound] { return sigma_reports(b); });
            break;
        case Family::construction:
            for (int n = 0; n <= config.principal_max_degree; ++n) {
                add(name + " principal n=" + std::to_string(n), [n] {
                    const Subject s = principal_subject(n);
                    Reports out = correctness_reports("principal", s.set.nodes(), n, s.certificate,
                                                      {}, s.name);
                    for (auto& r : grid_slice_reports(n)) {
                        out.push_back(std::move(r));
                    }
                    return out;
                });
            }
            each_cy(name, [](const Subject& s) {
                Reports out = correctness_reports("chung-yao", s.set.nodes(), s.set.degree(),
                                                  s.certificate, s.construction_lines, s.name);
                for (auto& r : gc_search_report(s)) {
                    out.push_back(std::move(r));
                }
                return out;
            });
            break;
        case Family::interpolation:
            for (int n = 0; n <= config.principal_max_degree; ++n) {
                add(name + " principal n=" + std::to_string(n),
                    [n, trials = config.interpolation_trials] {
                        return interpolation_reports(principal_subject(n), trials, 0);
                    });
            }
            for (int n = config.min_degree; n <= config.max_degree; ++n) {
                for (std::uint64_t seed : seeds) {
                    add(name + " chung-yao n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                        [=, trials = config.interpolation_trials] {
                            return interpolation_reports(chung_yao_subject(n, seed, budgets),
                                                         trials, seed);
                        });
                }
            }
            for (const auto& c : config.two_curve_cases) {
                for (std::uint64_t seed : seeds) {
                    add(name + " two-curve " + grid_two_curve_name(c, seed),
                        [=, trials = config.interpolation_trials] {
                            return interpolation_reports(two_curve_subject(c, seed, budgets),
                                                         trials, seed);
                        });
                }
            }
            break;
        case Family::maximality:
            each_cy(name, [extra = config.extra_lines](const Subject& s) {
                return maximality_reports(s, extra);
            });
            break;
        case Family::pairwise:
            each_cy(name, [](const Subject& s) { return pairwise_cy_reports(s); });
            each_lattice(name, [](const Subject& s) { return pairwise_lattice_reports(s); });
            break;
        case Family::common_component:
            each_cy(name, [](const Subject& s) { return common_component_reports(s); });
            break;
        case Family::triple:
            each_cy(name, [](const Subject& s) { return triple_cy_reports(s); });
            each_lattice(name, [](const Subject& s) { return triple_lattice_reports(s); });
            break;
        case Family::gc:
            each_cy(name, [extra = config.extra_lines](const Subject& s) {
                std::vector<Line> pool = s.construction_lines;
                for (const auto& l : non_maximal_node_lines(s.set.nodes(), s.set.degree(), extra)) {
                    pool.push_back(l);
                }
                return gc_reports(s, pool);
            });
            each_lattice(name, [](const Subject& s) {
                const int n = s.set.degree();
                std::vector<Line> pool;
                for (int fam = 0; fam < 3; ++fam) {
                    for (const auto& l : lattice_family(fam, std::min(n, 3), n)) {
                        pool.push_back(l);
                    }
                }
                // Non-maximal lattice lines x = n-1 and y = n-1 (when distinct from the above).
                if (n >= 4) {
                    pool.emplace_back(1, 0, -(n - 1));
                    pool.emplace_back(0, 1, -(n - 1));
                }
                Reports out = gc_reports(s, pool);
                for (auto& r : gc_search_report(s)) {
                    out.push_back(std::move(r));
                }
                return out;
            });
            break;
        case Family::two_curve:
            for (const auto& c : config.two_curve_cases) {
                for (std::uint64_t seed : seeds) {
                    add(name + " grid m=" + std::to_string(c.m) + " k=" + std::to_string(c.k) +
                            " delta=" + std::to_string(c.delta),
                        [=] { return two_curve_reports(c, seed, budgets); });
                }
            }
            for (int delta = 0; delta <= 1; ++delta) {
                for (std::uint64_t seed : seeds) {
                    add(name + " parabola delta=" + std::to_string(delta),
                        [=] { return parabola_reports(delta, seed, budgets); });
                }
            }
            break;
        case Family::fault_injection:
            for (int n = std::max(config.min_degree, 1); n <= config.max_degree; ++n) {
                add(name + " n=" + std::to_string(n),
                    [=, seed = config.base_seed] { return fault_reports(n, seed, budgets); });
            }
            break;
        }
    }

    std::vector<Reports> results(tasks.size());
    std::size_t jobs = config.jobs != 0 ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            results[i] = guarded(tasks[i].second, tasks[i].first);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    std::vector<VerificationReport> out;
    for (auto& batch : results) {
        for (auto& r : batch) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace maxcurve
