#include "maxcurve/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "maxcurve/errors.hpp"

namespace maxcurve::comb {

Count dim_pi(Count n)
{
    if (n < 0) {
        return 0;
    }
    return (n + 1) * (n + 2) / 2;
}

Count d_count(Count n, Count k) { return dim_pi(n) - dim_pi(n - k); }

Count d_tilde(Count n, Count k) { return k * (2 * n + 3 - k) / 2; }

RectLatticeSlice rect_slice(Count k, Count m, Count n)
{
    RectLatticeSlice slice{k, m, n, {}};
    for (Count i = 0; i < k; ++i) {
        for (Count j = 0; j < m; ++j) {
            if (i + j <= n) {
                slice.points.push_back({i, j});
            }
        }
    }
    return slice;
}

TriangularLattice triangular_lattice(Count n, Count i0, Count j0)
{
    TriangularLattice lattice{n, i0, j0, {}};
    for (Count i = 0; i <= n; ++i) {
        for (Count j = 0; i + j <= n; ++j) {
            lattice.points.push_back({i + i0, j + j0});
        }
    }
    return lattice;
}

Count hilbert_count(Count k, Count m, Count n)
{
    return dim_pi(n) - dim_pi(n - k) - dim_pi(n - m) + dim_pi(n - k - m);
}

bool SigmaExpressions::all_agree() const
{
    const bool general_agree =
        std::all_of(general.begin(), general.end(), [&](Count v) { return v == general[0]; });
    return general_agree && (!fifth || *fifth == general[0]);
}

SigmaExpressions triple_sigma_expressions(Count n, Count k1, Count k2, Count k3)
{
    if (n < 0 || k1 < 0 || k2 < 0 || k3 < 0) {
        throw PreconditionError("triple_sigma_expressions: negative argument");
    }
    SigmaExpressions out;
    out.sigma = k1 + k2 + k3 - (n + 2);
    if (out.sigma < -1) {
        throw PreconditionError("triple_sigma_expressions: sigma = " + std::to_string(out.sigma) +
                                " < -1");
    }
    const Count big_n = dim_pi(n);
    const Count sigma_term = out.sigma * (out.sigma + 1) / 2;

    out.general[0] = big_n - d_count(n, k1) - d_count(n, k2) - d_count(n, k3) +
                     hilbert_count(k1, k2, n) + hilbert_count(k2, k3, n) +
                     hilbert_count(k1, k3, n);
    out.general[1] = big_n - dim_pi(n - k1) - dim_pi(n - k2) - dim_pi(n - k3) +
                     dim_pi(n - k1 - k2) + dim_pi(n - k2 - k3) + dim_pi(n - k1 - k3);
    out.general[2] = big_n - d_count(n - k1, k2) - d_count(n - k2, k3) - d_count(n - k3, k1);
    out.general[3] = sigma_term - dim_pi(k1 + k2 - n - 3) - dim_pi(k2 + k3 - n - 3) -
                     dim_pi(k3 + k1 - n - 3);

    const std::array<Count, 3> ks{k1, k2, k3};
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            if (ks[a] + ks[b] > n + 2) {
                out.violating_pairs.emplace_back(a, b);
            }
        }
    }
    if (out.violating_pairs.empty()) {
        out.fifth = sigma_term;
    }
    return out;
}

}  // namespace maxcurve::comb
