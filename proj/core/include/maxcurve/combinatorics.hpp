#pragma once

// Integer counting functions for bivariate interpolation: dimensions of
// polynomial spaces, node counts of maximal curves, Hilbert counts of grid
// intersections and the triple-intersection expressions.
//
// Everything is routed through dim_pi, which is extended to all integers
// by N_n = 0 for n < 0, so none of the identities need case splits.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace maxcurve::comb {

using Count = std::int64_t;

/// dim Pi_n = (n+1)(n+2)/2, and 0 for negative n.
Count dim_pi(Count n);

/// d(n,k) = N_n - N_{n-k}: the most n-independent nodes a curve of
/// degree k without multiple components can carry.
Count d_count(Count n, Count k);

/// k(2n+3-k)/2 for all n, k >= 0 (agrees with d_count while k <= n+2).
Count d_tilde(Count n, Count k);

struct LatticePoint {
    Count i = 0;
    Count j = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// {(i,j) : 0 <= i < k, 0 <= j < m, i + j <= n}
struct RectLatticeSlice {
    Count k = 0;
    Count m = 0;
    Count n = 0;
    std::vector<LatticePoint> points;
};

/// {(i+i0, j+j0) : i, j >= 0, i + j <= n}
struct TriangularLattice {
    Count n = 0;
    Count i0 = 0;
    Count j0 = 0;
    std::vector<LatticePoint> points;
};

/// Enumerates the slice point by point; serves as the oracle for hilbert_count.
RectLatticeSlice rect_slice(Count k, Count m, Count n);

TriangularLattice triangular_lattice(Count n, Count i0, Count j0);

/// H^n_{k,m} = N_n - N_{n-k} - N_{n-m} + N_{n-k-m}.
Count hilbert_count(Count k, Count m, Count n);

/// The five closed forms for the number of nodes shared by three maximal
/// curves of degrees k1, k2, k3 in an n-correct set, sigma >= -1.
struct SigmaExpressions {
    Count sigma = 0;
    // (i)-(iv); always defined.
    std::array<Count, 4> general{};
    // (v) sigma(sigma+1)/2; empty when some pair has ki + kj > n + 2.
    std::optional<Count> fifth;
    // Index pairs (0-based) with ki + kj > n + 2.
    std::vector<std::pair<int, int>> violating_pairs;

    bool all_agree() const;
};

/// Throws PreconditionError when sigma = k1+k2+k3-(n+2) < -1 or any
/// argument is negative.
SigmaExpressions triple_sigma_expressions(Count n, Count k1, Count k2, Count k3);

}  // namespace maxcurve::comb
