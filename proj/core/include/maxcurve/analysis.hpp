#pragma once

// Node-set analysis: Vandermonde systems, correctness and independence,
// fundamental polynomials, the "uses" relation, maximal lines and curves,
// and certification of the geometric characterization (GC) property.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxcurve/matrix.hpp"
#include "maxcurve/point.hpp"
#include "maxcurve/poly.hpp"

namespace maxcurve {

/// |X| x dim Pi_n; row i holds the monomials of node i in graded-lex order.
RationalMatrix vandermonde(const NodeSet& x, int n);

/// rank(vandermonde(x, n)) == |x|.
bool is_independent(const NodeSet& x, int n);

/// |x| == dim Pi_n and the Vandermonde matrix has full rank.
bool is_correct(const NodeSet& x, int n);

struct FundamentalPolynomial {
    Poly poly;
    // False when x is independent but not correct: poly is one witness
    // from an affine family.
    bool unique = true;
};

/// The polynomial of Pi_n equal to 1 at node `node` and 0 at the others.
/// PreconditionError("node not independent") when none exists.
FundamentalPolynomial fundamental_polynomial(const NodeSet& x, std::size_t node, int n);

/// All fundamental polynomials of an n-correct set, computed from one
/// exact inverse of the Vandermonde matrix.
class FundamentalBasis {
public:
    /// PreconditionError when `nodes` is not n-correct.
    FundamentalBasis(NodeSet nodes, int n);

    const NodeSet& nodes() const { return nodes_; }
    int degree() const { return degree_; }
    const Poly& polynomial(std::size_t node) const { return polys_.at(node); }

    /// Lagrange expansion sum_i data[i] * p*_i.
    Poly interpolate(std::span<const Rational> data) const;

private:
    NodeSet nodes_;
    int degree_ = 0;
    std::vector<Poly> polys_;
};

/// The p in Pi_n with p = data on x. PreconditionError("dependent node set")
/// unless x is n-independent; unique when x is n-correct.
Poly interpolate(const NodeSet& x, std::span<const Rational> data, int n);

/// Indices of the nodes at which f vanishes.
std::vector<std::size_t> nodes_on_curve(const NodeSet& x, const Curve& f);

/// Whether p lies in f * Pi_{n-k}, k = deg f.
bool divisible_in(const Poly& p, const Curve& f, int n);

/// Node `node` uses f: f divides its fundamental polynomial. False when f
/// vanishes at the node. PreconditionError("degree exceeds n") when deg f > n.
bool uses_curve(const FundamentalBasis& basis, std::size_t node, const Curve& f);
bool uses_curve(const NodeSet& x, std::size_t node, const Curve& f, int n);

/// f passes through exactly d(n, deg f) nodes. Assumes x is n-correct.
/// PreconditionError when f is not squarefree-certified or deg f > n.
bool is_maximal_curve(const NodeSet& x, const Curve& f, int n);

/// Lines through at least two nodes carrying exactly n + 1 nodes, sorted.
std::vector<Line> maximal_lines(const NodeSet& x, int n);

/// x minus the nodes on f is (n-k)-correct. Assumes x is n-correct.
bool check_complement_correct(const NodeSet& x, const Curve& f, int n);

/// For each node, n lines whose product is proportional to the node's
/// fundamental polynomial.
struct GcCertificate {
    std::vector<std::vector<Line>> node_lines;

    friend bool operator==(const GcCertificate&, const GcCertificate&) = default;
};

/// First node whose line product fails to vanish on the other nodes, vanishes
/// at the node itself, or has the wrong number of lines; empty when valid.
std::optional<std::size_t> certificate_violation(const NodeSet& x, const GcCertificate& cert,
                                                 int n);

struct GcResult {
    enum class Status { certified, not_gc, inconclusive };

    Status status = Status::inconclusive;
    std::optional<GcCertificate> certificate;
    // Node that decided a negative or inconclusive verdict.
    std::optional<std::size_t> node;
    std::string detail;
};

/// Checks `hint` when given; otherwise (or when the hint is rejected) peels
/// line factors off every fundamental polynomial, trying lines through two
/// or more nodes. "not GC" is reported only when a residual factor provably
/// is not a product of lines; a residual that could still split into lines
/// through at most one node each yields "inconclusive". Assumes x n-correct.
GcResult certify_gc(const NodeSet& x, int n, const GcCertificate* hint = nullptr);

std::string to_string(GcResult::Status status);

}  // namespace maxcurve
