#include <gtest/gtest.h>

#include <random>

#include "maxcurve/analysis.hpp"
#include "maxcurve/combinatorics.hpp"
#include "maxcurve/constructions.hpp"
#include "maxcurve/errors.hpp"
#include "oracle.hpp"

using namespace maxcurve;

namespace {

Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

Point pt(long x, long y) { return {q(x), q(y)}; }

NodeSet triangle() { return NodeSet{pt(0, 0), pt(1, 0), pt(0, 1)}; }

oracle::Mat vandermonde_oracle(const NodeSet& x, int n)
{
    oracle::Mat m;
    for (const auto& p : x) m.push_back(oracle::monomials(p.x, p.y, n));
    return m;
}

Curve lines_curve(std::initializer_list<Line> ls)
{
    std::vector<Line> v(ls);
    return product_of_lines(v);
}

// Five points on y = x^2 and one point off it.
NodeSet conic_plus_one()
{
    return NodeSet{pt(0, 0), pt(1, 1), pt(-1, 1), pt(2, 4), pt(-2, 4), pt(0, 3)};
}

}  // namespace

TEST(Vandermonde, Examples)
{
    auto v0 = vandermonde(NodeSet{pt(0, 0)}, 0);
    EXPECT_EQ(v0, RationalMatrix::from_rows({{1}}));
    auto v1 = vandermonde(triangle(), 1);
    EXPECT_EQ(v1, RationalMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
    auto t2 = vandermonde(principal_lattice(2), 2);
    EXPECT_EQ(t2.rows(), 6u);
    EXPECT_EQ(t2.cols(), 6u);
    EXPECT_EQ(rank(t2), 6u);
}

TEST(Vandermonde, MatchesOracleRows)
{
    std::mt19937_64 rng(2);
    RationalSampler s(99);
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(s.point());
    NodeSet x(pts);
    for (int n = 0; n <= 4; ++n) {
        auto v = vandermonde(x, n);
        auto o = vandermonde_oracle(x, n);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j) EXPECT_EQ(v(i, j), o[i][j]);
        EXPECT_EQ(rank(v), oracle::rank(o));
    }
}

TEST(Independence, Examples)
{
    NodeSet collinear{pt(0, 0), pt(1, 1), pt(2, 2)};
    EXPECT_FALSE(is_independent(collinear, 1));
    EXPECT_TRUE(is_independent(NodeSet{pt(5, 7)}, 0));
    NodeSet parabola{pt(0, 0), pt(1, 1), pt(-1, 1), pt(2, 4), pt(-2, 4), pt(3, 9)};
    EXPECT_FALSE(is_independent(parabola, 2));
    EXPECT_LE(rank(vandermonde(parabola, 2)), 5u);
}

TEST(Independence, CollinearityBound)
{
    // n + 2 nodes on a line are never n-independent.
    for (int n = 0; n <= 5; ++n) {
        std::vector<Point> pts;
        for (int i = 0; i < n + 2; ++i) pts.push_back({q(i), q(2 * i + 1, 3)});
        EXPECT_FALSE(is_independent(NodeSet(pts), n));
        pts.pop_back();
        EXPECT_TRUE(is_independent(NodeSet(pts), n));
    }
}

TEST(Correctness, Examples)
{
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(is_correct(principal_lattice(n), n));
    EXPECT_FALSE(is_correct(NodeSet{pt(0, 0), pt(1, 1), pt(2, 2)}, 1));
    auto cy = chung_yao(random_general_position_lines(2, 1));
    EXPECT_TRUE(is_correct(cy.nodes, 2));
    // Right size, wrong rank; and right rank, wrong size.
    EXPECT_FALSE(is_correct(conic_plus_one().without(std::vector<std::size_t>{5}), 2));
    EXPECT_FALSE(is_correct(triangle(), 2));
}

TEST(Correctness, EquivalentFormulations)
{
    RationalSampler s(4, 5, 2);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = trial % 3 + 1;
        std::vector<Point> pts;
        while (pts.size() < static_cast<std::size_t>(comb::dim_pi(n))) {
            Point p = s.point();
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        NodeSet x(pts);
        const bool correct = is_correct(x, n);
        EXPECT_EQ(correct, null_space(vandermonde(x, n)).empty());
        bool all_have = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            try {
                fundamental_polynomial(x, i, n);
            } catch (const PreconditionError&) {
                all_have = false;
            }
        }
        EXPECT_EQ(correct, all_have);
    }
}

TEST(Fundamental, Examples)
{
    auto f = fundamental_polynomial(triangle(), 0, 1);
    EXPECT_TRUE(f.unique);
    EXPECT_EQ(f.poly, Poly::constant(1) - Poly::monomial(1, 0) - Poly::monomial(0, 1));

    NodeSet t2 = principal_lattice(2);
    std::size_t a = 0;
    while (!(t2[a] == pt(2, 0))) ++a;
    auto g = fundamental_polynomial(t2, a, 2);
    Poly expect = q(1, 2) * (Poly::monomial(2, 0) - Poly::monomial(1, 0));
    EXPECT_EQ(g.poly, expect);
    for (std::size_t i = 0; i < t2.size(); ++i) EXPECT_EQ(g.poly(t2[i]), i == a ? 1 : 0);
}

TEST(Fundamental, ChungYaoIsProductOfMissingLines)
{
    auto gp = random_general_position_lines(2, 3);
    auto cy = chung_yao(gp);
    for (std::size_t i = 0; i < cy.nodes.size(); ++i) {
        auto [a, b] = cy.node_lines[i];
        std::vector<Line> rest;
        for (std::size_t l = 0; l < gp.lines.size(); ++l)
            if (l != a && l != b) rest.push_back(gp.lines[l]);
        auto p = fundamental_polynomial(cy.nodes, i, 2).poly;
        EXPECT_TRUE(p.proportional_to(product_of_lines(rest).expanded()));
    }
}

TEST(Fundamental, NonUniqueAndDependent)
{
    NodeSet two{pt(0, 0), pt(1, 0)};
    auto f = fundamental_polynomial(two, 0, 1);
    EXPECT_FALSE(f.unique);
    EXPECT_EQ(f.poly(two[0]), 1);
    EXPECT_EQ(f.poly(two[1]), 0);
    NodeSet collinear{pt(0, 0), pt(1, 0), pt(2, 0)};
    EXPECT_THROW(fundamental_polynomial(collinear, 1, 1), PreconditionError);
}

TEST(Interpolate, Examples)
{
    NodeSet t2 = principal_lattice(2);
    std::vector<Rational> zeros(6, 0), xs;
    EXPECT_TRUE(interpolate(t2, zeros, 2).is_zero());
    for (const auto& p : t2) xs.push_back(p.x);
    EXPECT_EQ(interpolate(t2, xs, 2), Poly::monomial(1, 0));
    for (std::size_t i = 0; i < t2.size(); ++i) {
        std::vector<Rational> e(6, 0);
        e[i] = 1;
        EXPECT_EQ(interpolate(t2, e, 2), fundamental_polynomial(t2, i, 2).poly);
    }
    NodeSet collinear{pt(0, 0), pt(1, 0), pt(2, 0)};
    std::vector<Rational> d{1, 2, 3};
    EXPECT_THROW(interpolate(collinear, d, 1), PreconditionError);
}

TEST(Interpolate, ReproducesPolynomialsAndLagrange)
{
    std::mt19937_64 rng(31);
    auto cy = chung_yao(random_general_position_lines(3, 2));
    FundamentalBasis basis(cy.nodes, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> c(monomial_count(3));
        for (auto& e : c) e = q(static_cast<long>(rng() % 19) - 9, static_cast<long>(1 + rng() % 5));
        Poly p(3, c);
        std::vector<Rational> data;
        for (const auto& a : cy.nodes) data.push_back(p(a));
        EXPECT_EQ(interpolate(cy.nodes, data, 3), p);
        EXPECT_EQ(basis.interpolate(data), p);
    }
    EXPECT_THROW(FundamentalBasis(triangle(), 2), PreconditionError);
}

TEST(NodesOnCurve, Examples)
{
    NodeSet t2 = principal_lattice(2);
    EXPECT_EQ(nodes_on_curve(t2, Curve(Line(1, 0, 0))).size(), 3u);
    EXPECT_TRUE(nodes_on_curve(t2, Curve(Line(1, 0, 5))).empty());
    EXPECT_EQ(nodes_on_curve(t2, lines_curve({Line(1, 0, 0), Line(1, 0, -1)})).size(),
              static_cast<std::size_t>(comb::d_count(2, 2)));
}

TEST(Uses, Examples)
{
    NodeSet t2 = principal_lattice(2);
    std::size_t a = 0;
    while (!(t2[a] == pt(2, 0))) ++a;
    EXPECT_TRUE(uses_curve(t2, a, Curve(Line(1, 0, 0)), 2));
    EXPECT_FALSE(uses_curve(t2, a, Curve(Line(0, 1, 0)), 2));
    EXPECT_THROW(uses_curve(t2, a, lines_curve({Line(1, 0, 0), Line(1, 0, -1), Line(0, 1, -5)}), 2),
                 PreconditionError);
    // A maximal curve is used by every node off it.
    Curve f = lines_curve({Line(1, 0, 0), Line(1, 0, -1)});
    for (std::size_t i = 0; i < t2.size(); ++i)
        if (!f.vanishes_at(t2[i])) EXPECT_TRUE(uses_curve(t2, i, f, 2));
}

TEST(Maximal, CurveExamples)
{
    NodeSet t2 = principal_lattice(2);
    EXPECT_TRUE(is_maximal_curve(t2, Curve(Line(1, 0, 0)), 2));
    EXPECT_TRUE(is_maximal_curve(t2, lines_curve({Line(1, 0, 0), Line(1, 0, -1)}), 2));
    EXPECT_FALSE(is_maximal_curve(t2, Curve(Line(1, 0, -1)), 2));
    Curve doubled({Poly::monomial(1, 0), Poly::monomial(1, 0) + Poly::constant(-1)}, false);
    EXPECT_THROW(is_maximal_curve(t2, doubled, 2), PreconditionError);
    EXPECT_THROW(is_maximal_curve(t2, lines_curve({Line(1, 0, 0), Line(1, 0, -1), Line(1, 0, -2)}), 2),
                 PreconditionError);
}

TEST(Maximal, LinesExamples)
{
    auto gp = random_general_position_lines(2, 5);
    auto cy = chung_yao(gp);
    auto found = maximal_lines(cy.nodes, 2);
    auto expect = gp.lines;
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(found, expect);

    auto t2 = maximal_lines(principal_lattice(2), 2);
    std::vector<Line> lattice{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -2)};
    std::sort(lattice.begin(), lattice.end());
    EXPECT_EQ(t2, lattice);
    EXPECT_LE(t2.size(), 4u);

    auto tri = maximal_lines(triangle(), 1);
    EXPECT_EQ(tri.size(), 3u);
}

TEST(Maximal, ComplementCorrect)
{
    NodeSet t2 = principal_lattice(2);
    EXPECT_TRUE(check_complement_correct(t2, Curve(Line(1, 0, 0)), 2));
    EXPECT_FALSE(check_complement_correct(t2, Curve(Line(1, 0, -1)), 2));
    // A fundamental polynomial seen as a curve of degree n.
    auto cy = chung_yao(random_general_position_lines(3, 4));
    auto [a, b] = cy.node_lines[0];
    std::vector<Line> rest;
    for (std::size_t l = 0; l < cy.lines.size(); ++l)
        if (l != a && l != b) rest.push_back(cy.lines[l]);
    Curve p = product_of_lines(rest);
    EXPECT_TRUE(check_complement_correct(cy.nodes, p, 3));
    EXPECT_TRUE(is_maximal_curve(cy.nodes, p, 3));
    EXPECT_EQ(cy.nodes.size() - nodes_on_curve(cy.nodes, p).size(), 1u);
}

TEST(Maximal, EquivalencesOnChungYao)
{
    const int n = 3;
    auto cy = chung_yao(random_general_position_lines(n, 6));
    FundamentalBasis basis(cy.nodes, n);
    std::vector<Line> pool = cy.lines;
    pool.push_back(line_through(cy.nodes[0], cy.nodes[cy.nodes.size() - 1]));
    for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
        std::vector<Line> chosen;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) chosen.push_back(pool[i]);
        if (static_cast<int>(chosen.size()) > n) continue;
        Curve f = product_of_lines(chosen);
        const bool maximal = is_maximal_curve(cy.nodes, f, n);
        bool used_by_all = true;
        for (std::size_t i = 0; i < cy.nodes.size(); ++i)
            if (!f.vanishes_at(cy.nodes[i])) used_by_all = used_by_all && uses_curve(basis, i, f);
        EXPECT_EQ(maximal, used_by_all);
        EXPECT_EQ(maximal, check_complement_correct(cy.nodes, f, n));
    }
}

TEST(Gc, CertificatesAndSearch)
{
    auto cy = chung_yao(random_general_position_lines(3, 8));
    auto hinted = certify_gc(cy.nodes, 3, &cy.certificate);
    EXPECT_EQ(hinted.status, GcResult::Status::certified);
    EXPECT_FALSE(certificate_violation(cy.nodes, cy.certificate, 3));

    auto searched = certify_gc(cy.nodes, 3);
    ASSERT_EQ(searched.status, GcResult::Status::certified);
    ASSERT_TRUE(searched.certificate);
    EXPECT_FALSE(certificate_violation(cy.nodes, *searched.certificate, 3));

    auto tri = certify_gc(triangle(), 1);
    EXPECT_EQ(tri.status, GcResult::Status::certified);

    auto lattice = certify_gc(principal_lattice(4), 4);
    EXPECT_EQ(lattice.status, GcResult::Status::certified);
    EXPECT_FALSE(certificate_violation(principal_lattice(4), principal_lattice_certificate(4), 4));
}

TEST(Gc, BrokenHintFallsBackToSearch)
{
    auto cy = chung_yao(random_general_position_lines(2, 9));
    GcCertificate bad = cy.certificate;
    std::swap(bad.node_lines[0], bad.node_lines[1]);
    EXPECT_TRUE(certificate_violation(cy.nodes, bad, 2).has_value());
    auto r = certify_gc(cy.nodes, 2, &bad);
    EXPECT_EQ(r.status, GcResult::Status::certified);
}

TEST(Gc, ConicNodeIsNotGc)
{
    NodeSet x = conic_plus_one();
    ASSERT_TRUE(is_correct(x, 2));
    auto p = fundamental_polynomial(x, 5, 2).poly;
    EXPECT_TRUE(p.proportional_to(Poly::monomial(0, 1) - Poly::monomial(2, 0)));
    auto r = certify_gc(x, 2);
    EXPECT_EQ(r.status, GcResult::Status::not_gc);
    ASSERT_TRUE(r.node);
    // The deciding node has no line through three of the other five.
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (i == *r.node || j == *r.node) continue;
            Line l = line_through(x[i], x[j]);
            std::size_t on = 0;
            for (std::size_t k = 0; k < x.size(); ++k)
                if (k != *r.node && l.contains(x[k])) ++on;
            EXPECT_LE(on, 2u);
        }
    EXPECT_EQ(to_string(r.status), "not GC");
}
