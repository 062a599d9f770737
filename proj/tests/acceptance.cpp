// Acceptance run: one line per criterion, PASS only when every report of the
// criterion passes, the expected cases were actually exercised, and the run
// finished inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "maxcurve/verify.hpp"

using namespace maxcurve;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::int64_t param(const VerificationReport& r, const std::string& name, std::int64_t fallback = -1)
{
    for (const auto& [k, v] : r.parameters)
        if (k == name) return v;
    return fallback;
}

std::map<std::string, std::size_t> by_proposition(const std::vector<VerificationReport>& reports)
{
    std::map<std::string, std::size_t> m;
    for (const auto& r : reports) ++m[r.proposition];
    return m;
}

// All reports pass and every listed proposition occurs at least `min` times.
Outcome all_pass(const std::vector<VerificationReport>& reports,
                 const std::vector<std::pair<std::string, std::size_t>>& expected)
{
    Outcome o;
    std::size_t failed = 0, inapplicable = 0;
    std::string first;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fail) {
            if (failed++ == 0) first = r.proposition + " " + r.subject + " " + r.detail;
        }
        if (r.verdict == Verdict::inapplicable) ++inapplicable;
    }
    o.require(failed == 0, std::to_string(failed) + " failing reports (first: " + first + ")");
    const auto counts = by_proposition(reports);
    for (const auto& [name, min] : expected) {
        auto it = counts.find(name);
        const std::size_t got = it == counts.end() ? 0 : it->second;
        o.require(got >= min, name + ": " + std::to_string(got) + " < " + std::to_string(min));
    }
    o.detail = std::to_string(reports.size()) + " reports" +
               (inapplicable ? ", " + std::to_string(inapplicable) + " inapplicable" : "") +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

SuiteConfig config_for(std::vector<Family> families, int max_degree)
{
    SuiteConfig c;
    c.families = std::move(families);
    c.min_degree = 1;
    c.max_degree = max_degree;
    c.seeds = 3;
    return c;
}

Outcome identities()
{
    auto c = config_for({Family::identities}, 1);
    c.identity_bound = 14;
    return all_pass(run_suite(c), {{"hilbert-count-enumeration", 1},
                                   {"d-difference-shift", 1},
                                   {"d-strip-removal", 1},
                                   {"hilbert-count-full-rectangle", 1},
                                   {"hilbert-count-covering-case", 1},
                                   {"hilbert-count-deficiency", 1},
                                   {"hilbert-count-lattice-decomposition", 1},
                                   {"d-tilde-correction", 1}});
}

Outcome sigma()
{
    auto c = config_for({Family::sigma}, 1);
    c.sigma_bound = 12;
    return all_pass(run_suite(c), {{"sigma-expressions-agree", 1}, {"sigma-closed-form-agrees", 1}});
}

Outcome constructions()
{
    auto c = config_for({Family::construction}, 6);
    c.principal_max_degree = 8;
    return all_pass(run_suite(c), {{"principal-correct", 9},
                                   {"principal-gc-certificate", 9},
                                   {"chung-yao-correct", 18},
                                   {"chung-yao-gc-certificate", 18},
                                   {"chung-yao-maximal-lines", 18}});
}

Outcome maximality()
{
    return all_pass(run_suite(config_for({Family::maximality}, 5)),
                    {{"maximality-equivalences", 15},
                     {"maximal-product", 15},
                     {"maximal-pair-coverage", 15}});
}

Outcome intersections()
{
    const auto reports =
        run_suite(config_for({Family::pairwise, Family::common_component, Family::triple}, 5));
    Outcome o = all_pass(reports, {{"pairwise-intersection", 15},
                                   {"common-component-intersection", 15},
                                   {"triple-intersection", 15}});
    bool boundary = false, beyond = false, sigma_nonpos = false, sigma_pos = false;
    for (const auto& r : reports) {
        if (r.verdict != Verdict::pass) continue;
        const auto n = param(r, "n");
        if (r.proposition == "pairwise-intersection") {
            const auto s = param(r, "k1") + param(r, "k2");
            boundary = boundary || s == n + 2;
            beyond = beyond || s > n + 2;
        }
        if (r.proposition == "triple-intersection") {
            const auto sg = param(r, "sigma", -99);
            sigma_nonpos = sigma_nonpos || sg <= 0;
            sigma_pos = sigma_pos || sg >= 1;
        }
    }
    o.require(boundary, "no pairwise case with k1+k2 = n+2");
    o.require(beyond, "no pairwise case with k1+k2 > n+2");
    o.require(sigma_nonpos, "no triple case with sigma <= 0");
    o.require(sigma_pos, "no triple case with sigma >= 1");
    return o;
}

Outcome two_curve()
{
    auto c = config_for({Family::two_curve}, 1);
    c.two_curve_cases = {{2, 2, 0}, {2, 2, 1}, {2, 3, 0}, {2, 3, 1}, {3, 3, 0}, {3, 3, 1}};
    const auto reports = run_suite(c);
    Outcome o = all_pass(reports, {{"two-curve-construction", 18}});
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
    for (const auto& r : reports)
        if (r.verdict == Verdict::pass)
            seen.insert({param(r, "m"), param(r, "k"), param(r, "delta")});
    for (auto [m, k] : {std::pair{2, 2}, {2, 3}, {3, 3}})
        for (int d = 0; d <= 1; ++d)
            o.require(seen.count({m, k, d}) == 1, "case m=" + std::to_string(m) + " k=" +
                                                      std::to_string(k) + " delta=" + std::to_string(d) +
                                                      " missing");
    return o;
}

Outcome gc_cascade()
{
    const auto reports = run_suite(config_for({Family::gc}, 5));
    Outcome o = all_pass(reports, {{"gc-maximal-decomposition", 15}});
    bool maximal = false, non_maximal = false;
    for (const auto& r : reports) {
        if (r.proposition != "gc-maximal-decomposition" || r.verdict != Verdict::pass) continue;
        for (const auto& comp : r.components)
            if (comp.name == "maximal") {
                const auto v = std::get<std::int64_t>(comp.measured);
                maximal = maximal || v == 1;
                non_maximal = non_maximal || v == 0;
            }
    }
    o.require(maximal && non_maximal, "both maximal and non-maximal line products must occur");
    return o;
}

Outcome interpolation()
{
    auto c = config_for({Family::interpolation}, 6);
    c.principal_max_degree = 8;
    c.interpolation_trials = 20;
    return all_pass(run_suite(c), {{"interpolation-reproduction", 9 + 18 + 18},
                                   {"lagrange-expansion", 9 + 18 + 18}});
}

Outcome fault_injection()
{
    auto c = config_for({Family::fault_injection}, 5);
    const auto reports = run_suite(c);
    Outcome o;
    std::map<std::int64_t, bool> witnessed;
    std::size_t bounds = 0;
    for (const auto& r : reports) {
        const auto n = param(r, "n");
        if (r.proposition == "collinearity-bound") {
            ++bounds;
            o.require(r.verdict == Verdict::pass, "independence not lost for n=" + std::to_string(n));
            witnessed.try_emplace(n, false);
        } else if (r.verdict == Verdict::fail && !r.witnesses.empty()) {
            witnessed[n] = true;
        }
    }
    o.require(bounds == 5, "expected 5 corrupted sets, got " + std::to_string(bounds));
    for (const auto& [n, w] : witnessed)
        o.require(w, "no failing report with witness for n=" + std::to_string(n));
    o.detail = std::to_string(reports.size()) + " reports" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "combinatorial identities, parameters <= 14", 1, identities},
        {2, "five triple-intersection expressions agree, n <= 12", 5, sigma},
        {3, "principal n <= 8 and Chung-Yao n <= 6 correct, certified, maximal lines", 60, constructions},
        {4, "maximality equivalences on Chung-Yao sets, n <= 5", 300, maximality},
        {5, "pairwise, common-component and triple intersection counts, n <= 5", 600, intersections},
        {6, "two-curve construction, (m,k) in {(2,2),(2,3),(3,3)}, delta in {0,1}", 120, two_curve},
        {7, "GC cascade characterization, n <= 5", 300, gc_cascade},
        {8, "interpolation fidelity on every constructed correct set", 60, interpolation},
        {9, "fault injection breaks independence and yields witnessed failures", 10, fault_injection},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d: %s [%.2f s / limit %.0f s%s] %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.title, secs, c.limit_seconds, in_time ? "" : ", TOO SLOW", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d of %zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
