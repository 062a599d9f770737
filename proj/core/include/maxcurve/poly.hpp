#pragma once

// Dense bivariate polynomials with exact rational coefficients, lines, and
// curves given by factor lists.
//
// Coefficients are laid out in graded-lexicographic order
//   1, x, y, x^2, xy, y^2, x^3, x^2 y, ...
// which is also the column order of every Vandermonde matrix.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxcurve/matrix.hpp"
#include "maxcurve/point.hpp"
#include "maxcurve/rational.hpp"

namespace maxcurve {

/// Position of x^i y^j in the graded-lex layout.
constexpr std::size_t monomial_index(int i, int j)
{
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
}

/// Number of monomials of total degree <= n (0 for negative n).
constexpr std::size_t monomial_count(int n)
{
    return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

class Line;

class Poly {
public:
    /// The zero polynomial in Pi_0.
    Poly() : Poly(0) {}
    /// The zero polynomial in Pi_{degree_bound}.
    explicit Poly(int degree_bound);
    /// PreconditionError unless coeffs.size() == monomial_count(degree_bound).
    Poly(int degree_bound, std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(int i, int j, const Rational& c = 1);

    int degree_bound() const { return degree_bound_; }
    /// Largest total degree with a nonzero coefficient; -1 for the zero polynomial.
    int effective_degree() const;
    bool is_zero() const { return effective_degree() < 0; }

    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Zero for monomials beyond the degree bound.
    Rational coeff(int i, int j) const;
    /// Grows the degree bound when needed.
    void set_coeff(int i, int j, const Rational& c);

    Rational operator()(const Point& p) const;

    /// Same polynomial re-embedded in Pi_n; PreconditionError("degree exceeds
    /// bound") when the effective degree is above n.
    Poly padded(int n) const;
    /// Degree bound lowered to the effective degree (0 for the zero polynomial).
    Poly trimmed() const;
    /// Scaled so that its first nonzero coefficient is 1.
    Poly monic() const;
    bool proportional_to(const Poly& other) const;
    /// The normalized line when the effective degree is exactly 1.
    std::optional<Line> as_line() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    /// Equality of polynomials; degree bounds may differ.
    friend bool operator==(const Poly& a, const Poly& b);

private:
    int degree_bound_ = 0;
    std::vector<Rational> coeffs_;
};

Rational eval(const Poly& p, const Point& pt);
/// Exact product; degree bound = sum of the effective degrees.
Poly multiply(const Poly& p, const Poly& q);

/// Readable form such as "x^2 - x + 1/2"; "0" for the zero polynomial.
std::string to_string(const Poly& p);

/// a x + b y + c = 0, scaled to coprime integers with the first nonzero of
/// (a, b) positive, so equal lines have equal fields.
class Line {
public:
    /// PreconditionError when a = b = 0.
    Line(const Rational& a, const Rational& b, const Rational& c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    Rational operator()(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
    bool contains(const Point& p) const { return sgn((*this)(p)) == 0; }
    bool parallel_to(const Line& other) const;
    /// Empty for parallel or identical lines.
    std::optional<Point> intersection(const Line& other) const;
    /// Point at parameter t along direction (-b, a) from a fixed base point.
    Point at(const Rational& t) const;
    Poly poly() const;

    friend bool operator==(const Line&, const Line&) = default;
    friend bool operator<(const Line& l, const Line& r);

private:
    Rational a_;
    Rational b_;
    Rational c_;
};

std::string to_string(const Line& l);

/// PreconditionError("coincident points") when p1 == p2.
Line line_through(const Point& p1, const Point& p2);

/// An algebraic curve carried as a product of factors. The factors are not
/// assumed irreducible; lines are recognized as degree-1 factors.
class Curve {
public:
    /// Each factor needs effective degree >= 1. When `squarefree_certified`
    /// is set, no two factors may be proportional (PreconditionError); for
    /// non-line factors the caller vouches that they have no repeated
    /// components.
    Curve(std::vector<Poly> factors, bool squarefree_certified);
    explicit Curve(const Line& line);

    const std::vector<Poly>& factors() const { return factors_; }
    int total_degree() const { return total_degree_; }
    bool squarefree_certified() const { return squarefree_; }

    bool line_factored() const;
    /// PreconditionError unless line_factored().
    std::vector<Line> lines() const;

    Poly expanded() const;
    Rational operator()(const Point& p) const;
    bool vanishes_at(const Point& p) const;

    /// Concatenated factor lists; certified iff both are and no factor of one
    /// is proportional to a factor of the other.
    friend Curve operator*(const Curve& a, const Curve& b);

private:
    std::vector<Poly> factors_;
    int total_degree_ = 0;
    bool squarefree_ = false;
};

/// PreconditionError on an empty list. Certified squarefree iff the lines
/// are pairwise distinct.
Curve product_of_lines(std::span<const Line> lines);

/// Expanded product padded to monomial_count(n) entries.
/// PreconditionError("degree exceeds bound") when total_degree > n.
RationalVector curve_coefficient_vector(const Curve& f, int n);

/// Common part and cofactors of two factored curves; empty optionals stand
/// for the trivial (degree 0) product.
struct GcdCertificate {
    std::optional<Curve> h;
    std::optional<Curve> g1;
    std::optional<Curve> g2;
};

/// Matches factors up to proportionality. Throws PreconditionError
/// ("unfactored curve") when a hidden common component cannot be excluded:
/// two non-proportional factors of degree >= 2, or a line of one curve
/// dividing a higher-degree factor of the other.
GcdCertificate gcd_certificate(const Curve& f1, const Curve& f2);

}  // namespace maxcurve
