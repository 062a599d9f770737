#pragma once

// Generators for the node-set families: principal lattices, Chung-Yao sets,
// grid curves, greedy enlargement to independent/correct sets, and the
// two-curve correct set I(f,g) + C(f) + C(g).
//
// Every generator is a deterministic function of its parameters and seed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "maxcurve/analysis.hpp"
#include "maxcurve/point.hpp"
#include "maxcurve/poly.hpp"

namespace maxcurve {

struct Budgets {
    // Redraws allowed for one degenerate random line.
    std::size_t resamples = 64;
    // Candidate points tried by one enlargement.
    std::size_t candidates = 1024;

    /// Defaults, with both budgets overridden by MAXCURVE_BUDGET when it
    /// holds a positive integer.
    static Budgets from_env();
};

/// {(i+i0, j+j0) : i, j >= 0, i + j <= n}, ordered by i then j.
NodeSet principal_lattice(int n, int i0 = 0, int j0 = 0);

/// Node (i+i0, j+j0) gets the lines x = i0..i0+i-1, y = j0..j0+j-1 and
/// x + y = s for i+j < s - i0 - j0 <= n.
GcCertificate principal_lattice_certificate(int n, int i0 = 0, int j0 = 0);

/// No two parallel, no three concurrent.
bool in_general_position(std::span<const Line> lines);

struct GeneralPositionLines {
    int n = 0;
    std::vector<Line> lines;  // n + 2 of them
};

/// n + 2 random rational lines in general position. Degenerate draws are
/// redrawn; ConstructionError("resampling budget exceeded") past the budget.
GeneralPositionLines random_general_position_lines(int n, std::uint64_t seed,
                                                   const Budgets& budgets = {});

struct ChungYaoSet {
    NodeSet nodes;
    GcCertificate certificate;
    std::vector<Line> lines;
    // Indices into `lines` of the two lines through each node.
    std::vector<std::pair<std::size_t, std::size_t>> node_lines;
};

/// The pairwise intersections of the lines; each node's certificate is the
/// product of the n lines not through it. PreconditionError when the lines
/// are not in general position.
ChungYaoSet chung_yao(const GeneralPositionLines& lines);

/// x(x-1)...(x-k+1) and y(y-1)...(y-m+1).
std::pair<Curve, Curve> grid_curves(int k, int m);

using PointSource = std::function<Point()>;

/// Random rationals p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int numerator_bound = 40,
                             int denominator_bound = 7);

    Rational next();
    Point point() { return {next(), next()}; }
    PointSource source();

private:
    std::mt19937_64 rng_;
    int numerator_bound_;
    int denominator_bound_;
};

/// Round-robin over the line factors of `f`, one random parameter per draw.
/// PreconditionError("curve not samplable") unless f is line-factored.
PointSource curve_point_source(const Curve& f, std::uint64_t seed);

/// Greedily appends sampled points that raise the Vandermonde rank until x is
/// n-correct. PreconditionError when x is dependent;
/// ConstructionError("sampler exhausted") when the budget runs out.
NodeSet enlarge_independent(const NodeSet& x, int n, const PointSource& sampler,
                            std::size_t budget = Budgets{}.candidates);

/// Greedy enlargement inside q to d(n, deg q) n-independent nodes. Without a
/// sampler, q must be line-factored (ConstructionError("curve not samplable")).
/// Sampled points not on q are rejected.
NodeSet enlarge_on_curve(const NodeSet& x, const Curve& q, int n,
                         std::optional<PointSource> sampler, std::uint64_t seed = 1,
                         std::size_t budget = Budgets{}.candidates);

struct TwoCurveSpec {
    Curve f;  // degree m
    Curve g;  // degree k
    int delta = 0;
    NodeSet intersections;  // m k points
    NodeSet cf;             // (m-2+delta)-correct, on f off g
    NodeSet cg;             // (k-2+delta)-correct, on g off f

    int degree() const { return f.total_degree() + g.total_degree() - 2 + delta; }
    /// intersections, then cf, then cg.
    NodeSet nodes() const;
};

struct TwoCurveOptions {
    std::uint64_t seed = 1;
    std::size_t budget = Budgets{}.candidates;
    // Needed when a curve has non-line factors.
    std::optional<PointSource> f_source;
    std::optional<PointSource> g_source;
    // Needed when some factor pair is not a pair of lines.
    std::optional<NodeSet> intersections;
};

/// The n-correct set I(f,g) + C(f) + C(g), n = m + k - 2 + delta.
/// PreconditionError for bad delta or shared factors;
/// ConstructionError("intersection degenerate") when the m k intersections
/// are not distinct; ConstructionError("sampler exhausted") on budget exhaustion.
TwoCurveSpec two_curve_correct_set(const Curve& f, const Curve& g, int delta,
                                   const TwoCurveOptions& options = {});

}  // namespace maxcurve
