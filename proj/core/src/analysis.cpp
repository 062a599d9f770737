#include "maxcurve/analysis.hpp"

#include <algorithm>
#include <set>

#include "maxcurve/combinatorics.hpp"
#include "maxcurve/errors.hpp"

namespace maxcurve {

RationalMatrix vandermonde(const NodeSet& x, int n)
{
    const std::size_t cols = monomial_count(n);
    RationalMatrix v(x.size(), cols);
    std::vector<Rational> xs(std::max(n, 0) + 1), ys(std::max(n, 0) + 1);
    for (std::size_t r = 0; r < x.size(); ++r) {
        xs[0] = 1;
        ys[0] = 1;
        for (int k = 1; k <= n; ++k) {
            xs[k] = xs[k - 1] * x[r].x;
            ys[k] = ys[k - 1] * x[r].y;
        }
        for (int d = 0; d <= n; ++d) {
            for (int j = 0; j <= d; ++j) {
                v(r, monomial_index(d - j, j)) = xs[d - j] * ys[j];
            }
        }
    }
    return v;
}

bool is_independent(const NodeSet& x, int n)
{
    if (x.size() > monomial_count(n)) {
        return false;
    }
    return rank(vandermonde(x, n)) == x.size();
}

bool is_correct(const NodeSet& x, int n)
{
    return x.size() == monomial_count(n) && rank(vandermonde(x, n)) == x.size();
}

namespace {

RationalVector unit_vector(std::size_t size, std::size_t at)
{
    RationalVector e(size);
    e.at(at) = 1;
    return e;
}

Poly poly_from_solution(int n, RationalVector coeffs) { return Poly(n, std::move(coeffs)); }

}  // namespace

FundamentalPolynomial fundamental_polynomial(const NodeSet& x, std::size_t node, int n)
{
    if (node >= x.size()) {
        throw PreconditionError("fundamental_polynomial: node index out of range");
    }
    const SolveResult s = solve(vandermonde(x, n), unit_vector(x.size(), node));
    if (!s.consistent()) {
        throw PreconditionError("node not independent: node " + std::to_string(node) +
                                " has no fundamental polynomial of degree " + std::to_string(n));
    }
    return {poly_from_solution(n, s.solution), s.null_dimension == 0};
}

FundamentalBasis::FundamentalBasis(NodeSet nodes, int n) : nodes_(std::move(nodes)), degree_(n)
{
    const RationalMatrix v = vandermonde(nodes_, n);
    if (v.rows() != v.cols()) {
        throw PreconditionError("node set is not " + std::to_string(n) +
                                "-correct: wrong cardinality");
    }
    RationalMatrix inv;
    try {
        inv = inverse(v);
    } catch (const PreconditionError&) {
        throw PreconditionError("node set is not " + std::to_string(n) + "-correct");
    }
    polys_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        polys_.push_back(poly_from_solution(n, inv.column(i)));
    }
}

Poly FundamentalBasis::interpolate(std::span<const Rational> data) const
{
    if (data.size() != polys_.size()) {
        throw PreconditionError("interpolate: data size does not match node count");
    }
    Poly acc(degree_);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (sgn(data[i]) != 0) {
            acc = acc + data[i] * polys_[i];
        }
    }
    return acc;
}

Poly interpolate(const NodeSet& x, std::span<const Rational> data, int n)
{
    if (data.size() != x.size()) {
        throw PreconditionError("interpolate: data size does not match node count");
    }
    const RationalMatrix v = vandermonde(x, n);
    if (rank(v) != x.size()) {
        throw PreconditionError("dependent node set");
    }
    return poly_from_solution(n, solve(v, data).solution);
}

std::vector<std::size_t> nodes_on_curve(const NodeSet& x, const Curve& f)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.vanishes_at(x[i])) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

// Columns f * x^i y^j, i + j <= n - k, as coefficient vectors in Pi_n.
RationalMatrix multiples_matrix(const Poly& f, int k, int n)
{
    std::vector<RationalVector> cols;
    for (int d = 0; d <= n - k; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Poly shifted = multiply(f, Poly::monomial(d - j, j)).padded(n);
            cols.emplace_back(shifted.coeffs().begin(), shifted.coeffs().end());
        }
    }
    return RationalMatrix::from_columns(monomial_count(n), cols);
}

}  // namespace

bool divisible_in(const Poly& p, const Curve& f, int n)
{
    const int k = f.total_degree();
    if (k > n) {
        throw PreconditionError("degree exceeds n: curve degree " + std::to_string(k) + " > " +
                                std::to_string(n));
    }
    const Poly target = p.padded(n);
    return in_column_span(multiples_matrix(f.expanded(), k, n), target.coeffs());
}

bool uses_curve(const FundamentalBasis& basis, std::size_t node, const Curve& f)
{
    if (f.total_degree() > basis.degree()) {
        throw PreconditionError("degree exceeds n: curve degree " +
                                std::to_string(f.total_degree()) + " > " +
                                std::to_string(basis.degree()));
    }
    if (f.vanishes_at(basis.nodes()[node])) {
        return false;
    }
    return divisible_in(basis.polynomial(node), f, basis.degree());
}

bool uses_curve(const NodeSet& x, std::size_t node, const Curve& f, int n)
{
    return uses_curve(FundamentalBasis(x, n), node, f);
}

bool is_maximal_curve(const NodeSet& x, const Curve& f, int n)
{
    if (!f.squarefree_certified()) {
        throw PreconditionError("not squarefree-certified");
    }
    if (f.total_degree() > n) {
        throw PreconditionError("degree exceeds n: curve degree " +
                                std::to_string(f.total_degree()) + " > " + std::to_string(n));
    }
    return static_cast<comb::Count>(nodes_on_curve(x, f).size()) ==
           comb::d_count(n, f.total_degree());
}

std::vector<Line> maximal_lines(const NodeSet& x, int n)
{
    std::set<Line> seen;
    std::vector<Line> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const Line l = line_through(x[i], x[j]);
            if (!seen.insert(l).second) {
                continue;
            }
            const auto on = std::count_if(x.begin(), x.end(),
                                          [&](const Point& p) { return l.contains(p); });
            if (on == n + 1) {
                out.push_back(l);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_complement_correct(const NodeSet& x, const Curve& f, int n)
{
    const auto on = nodes_on_curve(x, f);
    return is_correct(x.without(on), n - f.total_degree());
}

std::optional<std::size_t> certificate_violation(const NodeSet& x, const GcCertificate& cert,
                                                 int n)
{
    if (cert.node_lines.size() != x.size()) {
        return 0;
    }
    for (std::size_t a = 0; a < x.size(); ++a) {
        const auto& lines = cert.node_lines[a];
        if (static_cast<int>(lines.size()) != n) {
            return a;
        }
        auto on_some = [&](const Point& p) {
            return std::any_of(lines.begin(), lines.end(),
                               [&](const Line& l) { return l.contains(p); });
        };
        if (on_some(x[a])) {
            return a;
        }
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (b != a && !on_some(x[b])) {
                return a;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Exact quotient p / l for a line l known to divide p.
Poly divide_by_line(const Poly& p, const Line& l)
{
    const int d = p.effective_degree();
    const RationalMatrix m = multiples_matrix(l.poly(), 1, d);
    const SolveResult s = solve(m, p.padded(d).coeffs());
    return Poly(d - 1, s.solution);
}

bool line_divides(const Line& l, const Poly& q)
{
    const int d = q.effective_degree();
    for (int t = 0; t <= d; ++t) {
        if (sgn(q(l.at(t))) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

GcResult certify_gc(const NodeSet& x, int n, const GcCertificate* hint)
{
    GcResult result;
    if (hint != nullptr) {
        const auto bad = certificate_violation(x, *hint, n);
        if (!bad) {
            result.status = GcResult::Status::certified;
            result.certificate = *hint;
            result.detail = "hint verified";
            return result;
        }
        result.detail = "hint rejected at node " + std::to_string(*bad) + "; ";
    }

    const FundamentalBasis basis(x, n);
    GcCertificate cert;
    for (std::size_t a = 0; a < x.size(); ++a) {
        std::set<Line> candidates;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                if (i == a || j == a) {
                    continue;
                }
                const Line l = line_through(x[i], x[j]);
                if (!l.contains(x[a])) {
                    candidates.insert(l);
                }
            }
        }

        Poly residual = basis.polynomial(a).trimmed();
        std::vector<Line> chosen;
        while (residual.effective_degree() > 0) {
            auto hit = std::find_if(candidates.begin(), candidates.end(),
                                    [&](const Line& l) { return line_divides(l, residual); });
            if (hit == candidates.end()) {
                // Residual vanishes on the nodes off the chosen lines. Were it a
                // product of d lines, |remaining| > d would force one of them
                // through two remaining nodes, i.e. into the candidate set.
                std::size_t remaining = 0;
                for (std::size_t b = 0; b < x.size(); ++b) {
                    if (b != a && std::none_of(chosen.begin(), chosen.end(),
                                               [&](const Line& l) { return l.contains(x[b]); })) {
                        ++remaining;
                    }
                }
                const auto d = static_cast<std::size_t>(residual.effective_degree());
                result.node = a;
                if (remaining > d) {
                    result.status = GcResult::Status::not_gc;
                    result.detail += "fundamental polynomial of node " + std::to_string(a) +
                                     " has a factor of degree " + std::to_string(d) +
                                     " that is not a product of lines";
                } else {
                    result.status = GcResult::Status::inconclusive;
                    result.detail += "node " + std::to_string(a) + ": residual of degree " +
                                     std::to_string(d) +
                                     " may split into lines through at most one node";
                }
                return result;
            }
            chosen.push_back(*hit);
            residual = divide_by_line(residual, *hit);
        }
        cert.node_lines.push_back(std::move(chosen));
    }
    result.status = GcResult::Status::certified;
    result.certificate = std::move(cert);
    result.detail += "certificate found by search";
    return result;
}

std::string to_string(GcResult::Status status)
{
    switch (status) {
    case GcResult::Status::certified:
        return "certified";
    case GcResult::Status::not_gc:
        return "not GC";
    case GcResult::Status::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

}  // namespace maxcurve
