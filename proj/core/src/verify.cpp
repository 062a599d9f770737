#include "maxcurve/verify.hpp"

#include <algorithm>
#include <functional>

#include "maxcurve/combinatorics.hpp"
#include "maxcurve/errors.hpp"

namespace maxcurve {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inapplicable:
        return "inapplicable";
    }
    return "unknown";
}

void VerificationReport::add(std::string name, Value measured, Value predicted)
{
    components.push_back({std::move(name), std::move(measured), std::move(predicted)});
}

void VerificationReport::reject(std::string reason)
{
    verdict = Verdict::inapplicable;
    inapplicable_reason = std::move(reason);
    components.clear();
}

void VerificationReport::settle()
{
    if (verdict == Verdict::inapplicable) {
        return;
    }
    const bool ok = std::all_of(components.begin(), components.end(),
                                [](const Component& c) { return c.holds(); });
    verdict = ok ? Verdict::pass : Verdict::fail;
}

bool passed(std::span<const VerificationReport> reports)
{
    return std::none_of(reports.begin(), reports.end(),
                        [](const VerificationReport& r) { return r.verdict == Verdict::fail; });
}

std::optional<CorrectSet> CorrectSet::make(NodeSet nodes, int n)
{
    if (!is_correct(nodes, n)) {
        return std::nullopt;
    }
    return CorrectSet(std::move(nodes), n);
}

namespace {

using Mask = std::vector<bool>;

Mask incidence(const NodeSet& x, const Curve& f)
{
    Mask m(x.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) {
        m[i] = f.vanishes_at(x[i]);
    }
    return m;
}

std::int64_t count_where(std::size_t size, const std::function<bool(std::size_t)>& pred)
{
    std::int64_t c = 0;
    for (std::size_t i = 0; i < size; ++i) {
        c += pred(i) ? 1 : 0;
    }
    return c;
}

std::vector<Point> points_where(const NodeSet& x, const std::function<bool(std::size_t)>& pred)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (pred(i)) {
            out.push_back(x[i]);
        }
    }
    return out;
}

// Empty when f is squarefree-certified, of degree <= n and maximal.
std::optional<std::string> maximal_failure(const CorrectSet& x, const Curve& f,
                                           const std::string& label)
{
    const int n = x.degree();
    if (!f.squarefree_certified()) {
        return label + " not squarefree-certified";
    }
    if (f.total_degree() > n) {
        return label + " degree exceeds n";
    }
    if (!is_maximal_curve(x.nodes(), f, n)) {
        return label + " not maximal";
    }
    return std::nullopt;
}

// Empty when the curves provably share no component.
std::optional<std::string> coprime_failure(const Curve& a, const Curve& b, const std::string& label)
{
    try {
        if (gcd_certificate(a, b).h) {
            return label + " share a component";
        }
    } catch (const PreconditionError&) {
        return label + " unfactored curve";
    }
    return std::nullopt;
}

std::string degree_subject(int n) { return "n=" + std::to_string(n); }

}  // namespace

VerificationReport verify_pairwise(const CorrectSet& x, const Curve& f1, const Curve& f2)
{
    const int n = x.degree();
    const int k1 = f1.total_degree();
    const int k2 = f2.total_degree();
    VerificationReport r;
    r.proposition = "pairwise-intersection";
    r.subject = degree_subject(n);
    r.parameters = {{"n", n}, {"k1", k1}, {"k2", k2}};
    for (const auto& failure : {maximal_failure(x, f1, "f1"), maximal_failure(x, f2, "f2"),
                                coprime_failure(f1, f2, "f1,f2")}) {
        if (failure) {
            r.reject(*failure);
            return r;
        }
    }
    const Mask on1 = incidence(x.nodes(), f1);
    const Mask on2 = incidence(x.nodes(), f2);
    auto both = [&](std::size_t i) { return on1[i] && on2[i]; };
    r.add("common_nodes", count_where(x.nodes().size(), both), comb::hilbert_count(k1, k2, n));
    if (k1 + k2 >= n + 1) {
        auto neither = [&](std::size_t i) { return !on1[i] && !on2[i]; };
        r.add("uncovered_nodes", count_where(x.nodes().size(), neither), std::int64_t{0});
        if (!r.components.back().holds()) {
            r.witnesses = points_where(x.nodes(), neither);
        }
    }
    r.settle();
    if (r.verdict == Verdict::fail && r.witnesses.empty()) {
        r.witnesses = points_where(x.nodes(), both);
    }
    return r;
}

VerificationReport verify_pairwise(const NodeSet& x, const Curve& f1, const Curve& f2, int n)
{
    if (auto cs = CorrectSet::make(x, n)) {
        return verify_pairwise(*cs, f1, f2);
    }
    VerificationReport r;
    r.proposition = "pairwise-intersection";
    r.subject = degree_subject(n);
    r.reject("node set not n-correct");
    return r;
}

VerificationReport verify_common_component(const CorrectSet& x, const std::optional<Curve>& h,
                                           const std::optional<Curve>& g1,
                                           const std::optional<Curve>& g2)
{
    const int n = x.degree();
    const NodeSet& nodes = x.nodes();
    const int m = h ? h->total_degree() : 0;
    const int s1 = g1 ? g1->total_degree() : 0;
    const int s2 = g2 ? g2->total_degree() : 0;
    VerificationReport r;
    r.proposition = "common-component-intersection";
    r.subject = degree_subject(n);
    r.parameters = {{"n", n}, {"m", m}, {"s1", s1}, {"s2", s2}};

    auto compose = [&](const std::optional<Curve>& g) -> std::optional<Curve> {
        if (h && g) {
            return *h * *g;
        }
        return h ? h : g;
    };
    const std::optional<Curve> f1 = compose(g1);
    const std::optional<Curve> f2 = compose(g2);
    if (!f1 || !f2) {
        r.reject("f1 or f2 trivial");
        return r;
    }
    std::vector<std::optional<std::string>> failures{maximal_failure(x, *f1, "f1"),
                                                     maximal_failure(x, *f2, "f2")};
    if (g1 && g2) {
        failures.push_back(coprime_failure(*g1, *g2, "g1,g2"));
    }
    for (const auto& failure : failures) {
        if (failure) {
            r.reject(*failure);
            return r;
        }
    }

    const Mask on1 = incidence(nodes, *f1);
    const Mask on2 = incidence(nodes, *f2);
    const Mask none(nodes.size(), false);
    const Mask on_h = h ? incidence(nodes, *h) : none;
    const Mask on_g1 = g1 ? incidence(nodes, *g1) : none;
    const Mask on_g2 = g2 ? incidence(nodes, *g2) : none;
    const std::size_t size = nodes.size();

    r.add("common_nodes", count_where(size, [&](std::size_t i) { return on1[i] && on2[i]; }),
          comb::d_count(n, m) + comb::hilbert_count(s1, s2, n - m));

    if (m >= 1 && s1 + s2 + m <= n + 2) {
        r.add("h_nodes", count_where(size, [&](std::size_t i) { return on_h[i]; }),
              comb::d_count(n, m));
        if (s1 >= 1) {
            r.add("g1_nodes_off_h",
                  count_where(size, [&](std::size_t i) { return on_g1[i] && !on_h[i]; }),
                  comb::d_count(n - m, s1));
        }
        if (s2 >= 1) {
            r.add("g2_nodes_off_h",
                  count_where(size, [&](std::size_t i) { return on_g2[i] && !on_h[i]; }),
                  comb::d_count(n - m, s2));
        }
        if (s1 >= 1 && s2 >= 1) {
            r.add("g1_g2_nodes",
                  count_where(size, [&](std::size_t i) { return on_g1[i] && on_g2[i]; }),
                  std::int64_t{s1} * s2);
            r.add("h_g1_g2_nodes",
                  count_where(size,
                              [&](std::size_t i) { return on_h[i] && on_g1[i] && on_g2[i]; }),
                  std::int64_t{0});
        }
    }
    const int s = s1 + s2 + m;
    if (m >= 1 && s1 >= 1 && s2 >= 1 && s <= n) {
        r.add("h_g1_g2_curve_nodes",
              count_where(size, [&](std::size_t i) { return on_h[i] || on_g1[i] || on_g2[i]; }),
              comb::d_count(n, s));
    }
    r.settle();
    if (r.verdict == Verdict::fail) {
        r.witnesses = points_where(nodes, [&](std::size_t i) { return on1[i] && on2[i]; });
    }
    return r;
}

VerificationReport verify_common_component(const NodeSet& x, const std::optional<Curve>& h,
                                           const std::optional<Curve>& g1,
                                           const std::optional<Curve>& g2, int n)
{
    if (auto cs = CorrectSet::make(x, n)) {
        return verify_common_component(*cs, h, g1, g2);
    }
    VerificationReport r;
    r.proposition = "common-component-intersection";
    r.subject = degree_subject(n);
    r.reject("node set not n-correct");
    return r;
}

VerificationReport verify_triple(const CorrectSet& x, const Curve& f1, const Curve& f2,
                                 const Curve& f3)
{
    const int n = x.degree();
    const NodeSet& nodes = x.nodes();
    const int k1 = f1.total_degree();
    const int k2 = f2.total_degree();
    const int k3 = f3.total_degree();
    const int sigma = k1 + k2 + k3 - (n + 2);
    VerificationReport r;
    r.proposition = "triple-intersection";
    r.subject = degree_subject(n);
    r.parameters = {{"n", n}, {"k1", k1}, {"k2", k2}, {"k3", k3}, {"sigma", sigma}};
    for (const auto& failure :
         {maximal_failure(x, f1, "f1"), maximal_failure(x, f2, "f2"), maximal_failure(x, f3, "f3"),
          coprime_failure(f1, f2, "f1,f2"), coprime_failure(f2, f3, "f2,f3"),
          coprime_failure(f1, f3, "f1,f3")}) {
        if (failure) {
            r.reject(*failure);
            return r;
        }
    }
    const Mask a = incidence(nodes, f1);
    const Mask b = incidence(nodes, f2);
    const Mask c = incidence(nodes, f3);
    auto all3 = [&](std::size_t i) { return a[i] && b[i] && c[i]; };
    const std::int64_t common = count_where(nodes.size(), all3);

    if (sigma <= 0) {
        r.add("common_nodes", common, std::int64_t{0});
    }
    if (sigma >= -1) {
        const auto expr = comb::triple_sigma_expressions(n, k1, k2, k3);
        static const char* names[] = {"expr_i", "expr_ii", "expr_iii", "expr_iv"};
        for (std::size_t e = 0; e < expr.general.size(); ++e) {
            r.add(names[e], common, expr.general[e]);
        }
        if (expr.fifth) {
            r.add("expr_v", common, *expr.fifth);
        } else {
            r.detail = "expr_v inapplicable: some ki + kj > n + 2";
        }
        auto uncovered = [&](std::size_t i) { return !a[i] && !b[i] && !c[i]; };
        r.add("uncovered_nodes", count_where(nodes.size(), uncovered), std::int64_t{0});
        if (!r.components.back().holds()) {
            r.witnesses = points_where(nodes, uncovered);
        }
    }
    r.settle();
    if (r.verdict == Verdict::fail && r.witnesses.empty()) {
        r.witnesses = points_where(nodes, all3);
    }
    return r;
}

VerificationReport verify_triple(const NodeSet& x, const Curve& f1, const Curve& f2,
                                 const Curve& f3, int n)
{
    if (auto cs = CorrectSet::make(x, n)) {
        return verify_triple(*cs, f1, f2, f3);
    }
    VerificationReport r;
    r.proposition = "triple-intersection";
    r.subject = degree_subject(n);
    r.reject("node set not n-correct");
    return r;
}

std::optional<std::vector<std::size_t>> find_cascade(const NodeSet& x, std::span<const Line> lines,
                                                     int n)
{
    const std::size_t k = lines.size();
    std::vector<Mask> on(k, Mask(x.size(), false));
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            on[l][i] = lines[l].contains(x[i]);
        }
    }
    std::vector<std::size_t> order;
    std::vector<bool> used(k, false);
    Mask covered(x.size(), false);

    std::function<bool()> extend = [&]() -> bool {
        if (order.size() == k) {
            return true;
        }
        // Step i (1-based) must add exactly n + 2 - i new nodes.
        const auto wanted = static_cast<std::int64_t>(n + 1) - static_cast<std::int64_t>(order.size());
        for (std::size_t l = 0; l < k; ++l) {
            if (used[l]) {
                continue;
            }
            std::int64_t fresh = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                fresh += (on[l][i] && !covered[i]) ? 1 : 0;
            }
            if (fresh != wanted) {
                continue;
            }
            const Mask saved = covered;
            for (std::size_t i = 0; i < x.size(); ++i) {
                covered[i] = covered[i] || on[l][i];
            }
            used[l] = true;
            order.push_back(l);
            if (extend()) {
                return true;
            }
            order.pop_back();
            used[l] = false;
            covered = saved;
        }
        return false;
    };
    if (extend()) {
        return order;
    }
    return std::nullopt;
}

VerificationReport verify_gc_maximal_decomposition(const CorrectSet& x, const GcCertificate& cert,
                                                   const Curve& f)
{
    if (!f.line_factored()) {
        throw PreconditionError("curve not line-factored");
    }
    const int n = x.degree();
    const int k = f.total_degree();
    VerificationReport r;
    r.proposition = "gc-maximal-decomposition";
    r.subject = degree_subject(n);
    r.parameters = {{"n", n}, {"k", k}};
    if (certificate_violation(x.nodes(), cert, n)) {
        r.reject("node set not certified GC_n");
        return r;
    }
    if (!f.squarefree_certified()) {
        r.reject("f not squarefree-certified");
        return r;
    }
    if (k < 1 || k > n) {
        r.reject("f degree outside 1..n");
        return r;
    }
    const std::vector<Line> lines = f.lines();
    const auto cascade = find_cascade(x.nodes(), lines, n);
    const bool maximal = is_maximal_curve(x.nodes(), f, n);
    r.add("maximal", std::int64_t{maximal ? 1 : 0}, std::int64_t{cascade ? 1 : 0});
    if (cascade) {
        std::string order = "cascade order:";
        for (std::size_t l : *cascade) {
            order += " " + std::to_string(l);
        }
        r.detail = order;
    } else {
        r.detail = "no cascade ordering";
    }
    if (maximal) {
        const auto mlines = maximal_lines(x.nodes(), n);
        const bool has_maximal_factor = std::any_of(lines.begin(), lines.end(), [&](const Line& l) {
            return std::binary_search(mlines.begin(), mlines.end(), l);
        });
        if (n <= 5) {
            r.add("maximal_line_factor", std::int64_t{has_maximal_factor ? 1 : 0}, std::int64_t{1});
        } else {
            r.detail += has_maximal_factor ? "; has a maximal-line factor (not asserted, n > 5)"
                                           : "; no maximal-line factor (not asserted, n > 5)";
        }
    }
    r.settle();
    return r;
}

VerificationReport verify_gc_maximal_decomposition(const NodeSet& x, const GcCertificate& cert,
                                                   const Curve& f, int n)
{
    if (auto cs = CorrectSet::make(x, n)) {
        return verify_gc_maximal_decomposition(*cs, cert, f);
    }
    VerificationReport r;
    r.proposition = "gc-maximal-decomposition";
    r.subject = degree_subject(n);
    r.reject("node set not n-correct");
    return r;
}

}  // namespace maxcurve
