#include <gtest/gtest.h>

#include "maxcurve/analysis.hpp"
#include "maxcurve/constructions.hpp"
#include "maxcurve/errors.hpp"
#include "maxcurve/io.hpp"
#include "maxcurve/verify.hpp"

using namespace maxcurve;

namespace {

const Component* find(const VerificationReport& r, const std::string& name)
{
    for (const auto& c : r.components)
        if (c.name == name) return &c;
    return nullptr;
}

std::int64_t measured(const VerificationReport& r, const std::string& name)
{
    const Component* c = find(r, name);
    if (!c) throw std::runtime_error("no component " + name);
    return std::get<std::int64_t>(c->measured);
}

Curve lines_of(const ChungYaoSet& cy, std::initializer_list<std::size_t> idx)
{
    std::vector<Line> ls;
    for (auto i : idx) ls.push_back(cy.lines[i]);
    return product_of_lines(ls);
}

ChungYaoSet cy(int n, std::uint64_t seed = 1) { return chung_yao(random_general_position_lines(n, seed)); }

}  // namespace

TEST(Report, SettleAndReject)
{
    VerificationReport r;
    r.add("a", std::int64_t{1}, std::int64_t{1});
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::pass);
    r.add("b", std::int64_t{1}, std::int64_t{2});
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::fail);
    r.reject("f1 not maximal");
    EXPECT_EQ(r.verdict, Verdict::inapplicable);
    EXPECT_EQ(r.inapplicable_reason, "f1 not maximal");
    EXPECT_TRUE(r.components.empty());
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::inapplicable);
    std::vector<VerificationReport> list{r};
    EXPECT_TRUE(passed(list));
}

TEST(CorrectSet, OnlyForCorrectSets)
{
    EXPECT_TRUE(CorrectSet::make(principal_lattice(3), 3));
    EXPECT_FALSE(CorrectSet::make(principal_lattice(3), 2));
}

TEST(Pairwise, Examples)
{
    auto c4 = cy(4);
    auto r = verify_pairwise(c4.nodes, lines_of(c4, {0}), lines_of(c4, {1, 2}), 4);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(measured(r, "common_nodes"), 2);

    auto c2 = cy(2);
    auto s = verify_pairwise(c2.nodes, lines_of(c2, {0}), lines_of(c2, {1}), 2);
    EXPECT_EQ(s.verdict, Verdict::pass);
    EXPECT_EQ(measured(s, "common_nodes"), 1);

    auto t = verify_pairwise(c2.nodes, lines_of(c2, {0, 1}), lines_of(c2, {2, 3}), 2);
    EXPECT_EQ(t.verdict, Verdict::pass);
    EXPECT_EQ(measured(t, "common_nodes"), 4);
    EXPECT_EQ(measured(t, "uncovered_nodes"), 0);
}

TEST(Pairwise, InapplicableWhenHypothesesFail)
{
    auto c3 = cy(3);
    Line extra = line_through(c3.nodes[0], c3.nodes[c3.nodes.size() - 1]);
    auto r = verify_pairwise(c3.nodes, Curve(extra), lines_of(c3, {0}), 3);
    if (!is_maximal_curve(c3.nodes, Curve(extra), 3)) {
        EXPECT_EQ(r.verdict, Verdict::inapplicable);
        EXPECT_FALSE(r.inapplicable_reason.empty());
    }
    auto shared = verify_pairwise(c3.nodes, lines_of(c3, {0, 1}), lines_of(c3, {1, 2}), 3);
    EXPECT_EQ(shared.verdict, Verdict::inapplicable);
    auto bad = verify_pairwise(principal_lattice(2), lines_of(c3, {0}), lines_of(c3, {1}), 3);
    EXPECT_EQ(bad.verdict, Verdict::inapplicable);
}

TEST(CommonComponent, Examples)
{
    auto c5 = cy(5);
    auto r = verify_common_component(c5.nodes, lines_of(c5, {0}), lines_of(c5, {1}),
                                     lines_of(c5, {2}), 5);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(measured(r, "common_nodes"), 7);

    auto s = verify_common_component(c5.nodes, lines_of(c5, {0, 1}), lines_of(c5, {2}),
                                     lines_of(c5, {3}), 5);
    EXPECT_EQ(s.verdict, Verdict::pass);
    EXPECT_EQ(measured(s, "g1_g2_nodes"), 1);
    EXPECT_EQ(measured(s, "h_g1_g2_nodes"), 0);

    // Trivial h reduces to the pairwise count.
    auto t = verify_common_component(c5.nodes, std::nullopt, lines_of(c5, {0, 1}),
                                     lines_of(c5, {2, 3, 4}), 5);
    auto p = verify_pairwise(c5.nodes, lines_of(c5, {0, 1}), lines_of(c5, {2, 3, 4}), 5);
    EXPECT_EQ(t.verdict, Verdict::pass);
    EXPECT_EQ(measured(t, "common_nodes"), measured(p, "common_nodes"));
}

TEST(Triple, Examples)
{
    auto c2 = cy(2);
    auto r = verify_triple(c2.nodes, lines_of(c2, {0}), lines_of(c2, {1}), lines_of(c2, {2}), 2);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(measured(r, "common_nodes"), 0);

    auto c4 = cy(4);
    auto s = verify_triple(c4.nodes, lines_of(c4, {0}), lines_of(c4, {1, 2}),
                           lines_of(c4, {3, 4, 5}), 4);
    EXPECT_EQ(s.verdict, Verdict::pass);
    EXPECT_EQ(measured(s, "common_nodes"), 0);
    EXPECT_EQ(measured(s, "uncovered_nodes"), 0);
}

TEST(Triple, PositiveSigmaOnLattice)
{
    // x, y(y-1), and three anti-diagonals: sigma = 1, one shared node (0,1).
    auto t3 = principal_lattice(3);
    Curve f1(Line(1, 0, 0));
    std::vector<Line> h{Line(0, 1, 0), Line(0, 1, -1)};
    std::vector<Line> d{Line(1, 1, -1), Line(1, 1, -2), Line(1, 1, -3)};
    auto r = verify_triple(t3, f1, product_of_lines(h), product_of_lines(d), 3);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(measured(r, "expr_i"), 1);
    EXPECT_EQ(measured(r, "expr_v"), 1);
}

TEST(GcDecomposition, Examples)
{
    auto c4 = cy(4);
    auto r = verify_gc_maximal_decomposition(c4.nodes, c4.certificate, lines_of(c4, {0, 1}), 4);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(measured(r, "maximal"), 1);
    EXPECT_NE(r.detail.find("cascade order"), std::string::npos);

    // Construction line plus a line through two nodes that is not one of them.
    std::optional<Line> found;
    for (std::size_t i = 0; i < c4.nodes.size() && !found; ++i)
        for (std::size_t j = i + 1; j < c4.nodes.size() && !found; ++j) {
            Line l = line_through(c4.nodes[i], c4.nodes[j]);
            if (std::find(c4.lines.begin(), c4.lines.end(), l) == c4.lines.end()) found = l;
        }
    ASSERT_TRUE(found);
    Line other = *found;
    std::vector<Line> mixed{c4.lines[0], other};
    auto s = verify_gc_maximal_decomposition(c4.nodes, c4.certificate, product_of_lines(mixed), 4);
    EXPECT_EQ(s.verdict, Verdict::pass);
    EXPECT_EQ(measured(s, "maximal"), 0);
    EXPECT_EQ(s.detail, "no cascade ordering");

    // The certificate of a node is its fundamental polynomial: maximal, degree n.
    auto t = verify_gc_maximal_decomposition(c4.nodes, c4.certificate,
                                             product_of_lines(c4.certificate.node_lines[0]), 4);
    EXPECT_EQ(t.verdict, Verdict::pass);
    EXPECT_EQ(measured(t, "maximal"), 1);

    Curve conic({Poly::monomial(0, 1) - Poly::monomial(2, 0)}, true);
    EXPECT_THROW(verify_gc_maximal_decomposition(c4.nodes, c4.certificate, conic, 4), PreconditionError);
}

TEST(Cascade, Counts)
{
    auto c3 = cy(3);
    std::vector<Line> ls{c3.lines[2], c3.lines[0], c3.lines[4]};
    auto order = find_cascade(c3.nodes, ls, 3);
    ASSERT_TRUE(order);
    EXPECT_EQ(order->size(), 3u);
}

TEST(Suite, PresetsAndErrors)
{
    EXPECT_THROW(preset_config("nonsense"), PreconditionError);
    auto all = preset_config("all");
    EXPECT_EQ(std::count(all.families.begin(), all.families.end(), Family::fault_injection), 0);
    EXPECT_EQ(to_string(Family::two_curve), "two-curve");
}

TEST(Suite, IdentitiesArePureArithmetic)
{
    auto c = preset_config("identities");
    auto reports = run_suite(c);
    EXPECT_FALSE(reports.empty());
    EXPECT_TRUE(passed(reports));
    for (const auto& r : reports) EXPECT_EQ(r.subject.find("chung-yao"), std::string::npos);
}

TEST(Suite, ReproducibleAcrossJobCounts)
{
    SuiteConfig c = preset_config("gc");
    c.max_degree = 3;
    c.seeds = 2;
    c.jobs = 1;
    auto a = run_suite(c);
    c.jobs = 4;
    auto b = run_suite(c);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(io::report_to_json(a[i]), io::report_to_json(b[i]));
    EXPECT_TRUE(passed(a));
}

TEST(Suite, FaultInjectionFailsWithWitness)
{
    SuiteConfig c;
    c.families = {Family::fault_injection};
    c.max_degree = 4;
    c.seeds = 2;
    auto reports = run_suite(c);
    EXPECT_FALSE(passed(reports));
    bool witnessed = false;
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail && !r.witnesses.empty()) witnessed = true;
    EXPECT_TRUE(witnessed);
}

TEST(Suite, ConstructionErrorsBecomeFailures)
{
    SuiteConfig c;
    c.families = {Family::two_curve};
    c.seeds = 1;
    c.budgets.candidates = 1;
    auto reports = run_suite(c);
    bool error_reported = false;
    for (const auto& r : reports)
        if (r.proposition == "construction-error") {
            error_reported = true;
            EXPECT_EQ(r.verdict, Verdict::fail);
            EXPECT_FALSE(r.detail.empty());
        }
    EXPECT_TRUE(error_reported);
}
