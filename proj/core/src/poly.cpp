#include "maxcurve/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "maxcurve/errors.hpp"

namespace maxcurve {

Poly::Poly(int degree_bound) : degree_bound_(degree_bound)
{
    if (degree_bound < 0) {
        throw PreconditionError("Poly: negative degree bound");
    }
    coeffs_.resize(monomial_count(degree_bound));
}

Poly::Poly(int degree_bound, std::vector<Rational> coeffs)
    : degree_bound_(degree_bound), coeffs_(std::move(coeffs))
{
    if (degree_bound < 0 || coeffs_.size() != monomial_count(degree_bound)) {
        throw PreconditionError("Poly: " + std::to_string(coeffs_.size()) +
                                " coefficients do not fit degree bound " +
                                std::to_string(degree_bound));
    }
}

Poly Poly::constant(const Rational& c)
{
    Poly p(0);
    p.coeffs_[0] = c;
    return p;
}

Poly Poly::monomial(int i, int j, const Rational& c)
{
    Poly p(i + j);
    p.coeffs_[monomial_index(i, j)] = c;
    return p;
}

int Poly::effective_degree() const
{
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        if (sgn(coeffs_[idx]) != 0) {
            // Total degree d occupies indices [d(d+1)/2, (d+1)(d+2)/2).
            int d = 0;
            while (monomial_count(d) <= idx) {
                ++d;
            }
            return d;
        }
    }
    return -1;
}

Rational Poly::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > degree_bound_) {
        return 0;
    }
    return coeffs_[monomial_index(i, j)];
}

void Poly::set_coeff(int i, int j, const Rational& c)
{
    if (i + j > degree_bound_) {
        *this = padded(i + j);
    }
    coeffs_[monomial_index(i, j)] = c;
}

Rational Poly::operator()(const Point& p) const
{
    std::vector<Rational> xs(degree_bound_ + 1), ys(degree_bound_ + 1);
    xs[0] = 1;
    ys[0] = 1;
    for (int k = 1; k <= degree_bound_; ++k) {
        xs[k] = xs[k - 1] * p.x;
        ys[k] = ys[k - 1] * p.y;
    }
    Rational acc = 0;
    for (int d = 0; d <= degree_bound_; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Rational& c = coeffs_[monomial_index(d - j, j)];
            if (sgn(c) != 0) {
                acc += c * xs[d - j] * ys[j];
            }
        }
    }
    return acc;
}

Poly Poly::padded(int n) const
{
    if (effective_degree() > n) {
        throw PreconditionError("degree exceeds bound: degree " +
                                std::to_string(effective_degree()) + " > " + std::to_string(n));
    }
    Poly out(n);
    const std::size_t keep = std::min(coeffs_.size(), out.coeffs_.size());
    std::copy_n(coeffs_.begin(), keep, out.coeffs_.begin());
    return out;
}

Poly Poly::trimmed() const { return padded(std::max(effective_degree(), 0)); }

Poly Poly::monic() const
{
    auto lead = std::find_if(coeffs_.begin(), coeffs_.end(),
                             [](const Rational& c) { return sgn(c) != 0; });
    if (lead == coeffs_.end()) {
        return *this;
    }
    return Rational(1 / *lead) * *this;
}

bool Poly::proportional_to(const Poly& other) const { return monic() == other.monic(); }

std::optional<Line> Poly::as_line() const
{
    if (effective_degree() != 1) {
        return std::nullopt;
    }
    return Line(coeffs_[1], coeffs_[2], coeffs_[0]);
}

Poly operator+(const Poly& a, const Poly& b)
{
    Poly out = a.padded(std::max(a.degree_bound_, b.degree_bound_));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        out.coeffs_[i] += b.coeffs_[i];
    }
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Rational& s, const Poly& p)
{
    Poly out = p;
    for (auto& c : out.coeffs_) {
        c *= s;
    }
    return out;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

bool operator==(const Poly& a, const Poly& b)
{
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < len; ++i) {
        const Rational ca = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
        const Rational cb = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
        if (ca != cb) {
            return false;
        }
    }
    return true;
}

Rational eval(const Poly& p, const Point& pt) { return p(pt); }

Poly multiply(const Poly& p, const Poly& q)
{
    const int dp = std::max(p.effective_degree(), 0);
    const int dq = std::max(q.effective_degree(), 0);
    Poly out(dp + dq);
    std::vector<Rational> acc(monomial_count(dp + dq));
    for (int d1 = 0; d1 <= dp; ++d1) {
        for (int j1 = 0; j1 <= d1; ++j1) {
            const Rational c1 = p.coeff(d1 - j1, j1);
            if (sgn(c1) == 0) {
                continue;
            }
            for (int d2 = 0; d2 <= dq; ++d2) {
                for (int j2 = 0; j2 <= d2; ++j2) {
                    const Rational c2 = q.coeff(d2 - j2, j2);
                    if (sgn(c2) != 0) {
                        acc[monomial_index(d1 - j1 + d2 - j2, j1 + j2)] += c1 * c2;
                    }
                }
            }
        }
    }
    return Poly(dp + dq, std::move(acc));
}

std::string to_string(const Poly& p)
{
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree_bound(); d >= 0; --d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            Rational c = p.coeff(i, j);
            if (sgn(c) == 0) {
                continue;
            }
            if (!first) {
                os << (sgn(c) < 0 ? " - " : " + ");
                c = abs(c);
            } else if (sgn(c) < 0 && d > 0) {
                os << "-";
                c = abs(c);
            }
            first = false;
            const bool unit = c == 1 && d > 0;
            if (!unit) {
                os << to_string(c);
            }
            if (i > 0) {
                os << (unit ? "" : "*") << "x";
                if (i > 1) {
                    os << "^" << i;
                }
            }
            if (j > 0) {
                os << ((unit && i == 0) ? "" : "*") << "y";
                if (j > 1) {
                    os << "^" << j;
                }
            }
        }
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- Line

Line::Line(const Rational& a, const Rational& b, const Rational& c)
{
    if (sgn(a) == 0 && sgn(b) == 0) {
        throw PreconditionError("Line: a and b are both zero");
    }
    Integer den_lcm = 1;
    for (const Rational* q : {&a, &b, &c}) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den_mpz_t());
    }
    Integer na = a.get_num() * (den_lcm / a.get_den());
    Integer nb = b.get_num() * (den_lcm / b.get_den());
    Integer nc = c.get_num() * (den_lcm / c.get_den());
    Integer g = 0;
    for (const Integer* v : {&na, &nb, &nc}) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    }
    if (sgn(na) < 0 || (sgn(na) == 0 && sgn(nb) < 0)) {
        g = -g;
    }
    a_ = Rational(na / g);
    b_ = Rational(nb / g);
    c_ = Rational(nc / g);
}

bool Line::parallel_to(const Line& other) const { return a_ * other.b_ == b_ * other.a_; }

std::optional<Point> Line::intersection(const Line& other) const
{
    const Rational det = a_ * other.b_ - b_ * other.a_;
    if (sgn(det) == 0) {
        return std::nullopt;
    }
    return Point{(b_ * other.c_ - c_ * other.b_) / det, (c_ * other.a_ - a_ * other.c_) / det};
}

Point Line::at(const Rational& t) const
{
    Point base = sgn(b_) != 0 ? Point{0, -c_ / b_} : Point{-c_ / a_, 0};
    return {base.x - t * b_, base.y + t * a_};
}

Poly Line::poly() const { return Poly(1, {c_, a_, b_}); }

bool operator<(const Line& l, const Line& r)
{
    if (l.a_ != r.a_) {
        return l.a_ < r.a_;
    }
    if (l.b_ != r.b_) {
        return l.b_ < r.b_;
    }
    return l.c_ < r.c_;
}

std::string to_string(const Line& l) { return to_string(l.poly()) + " = 0"; }

Line line_through(const Point& p1, const Point& p2)
{
    if (p1 == p2) {
        throw PreconditionError("coincident points");
    }
    // (y1 - y2) x + (x2 - x1) y + (x1 y2 - x2 y1) vanishes at both points.
    return Line(p1.y - p2.y, p2.x - p1.x, p1.x * p2.y - p2.x * p1.y);
}

// ---------------------------------------------------------------- Curve

namespace {

bool has_proportional_pair(const std::vector<Poly>& factors)
{
    std::vector<Poly> normalized;
    normalized.reserve(factors.size());
    for (const auto& f : factors) {
        normalized.push_back(f.monic().trimmed());
    }
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        for (std::size_t j = i + 1; j < normalized.size(); ++j) {
            if (normalized[i] == normalized[j]) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

Curve::Curve(std::vector<Poly> factors, bool squarefree_certified)
    : factors_(std::move(factors)), squarefree_(squarefree_certified)
{
    if (factors_.empty()) {
        throw PreconditionError("Curve: empty factor list");
    }
    for (auto& f : factors_) {
        const int d = f.effective_degree();
        if (d < 1) {
            throw PreconditionError("Curve: factor of degree < 1");
        }
        f = f.trimmed();
        total_degree_ += d;
    }
    if (squarefree_ && has_proportional_pair(factors_)) {
        throw PreconditionError("Curve: squarefree claim contradicted by repeated factor");
    }
}

Curve::Curve(const Line& line) : Curve({line.poly()}, true) {}

bool Curve::line_factored() const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Poly& f) { return f.effective_degree() == 1; });
}

std::vector<Line> Curve::lines() const
{
    std::vector<Line> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) {
        auto line = f.as_line();
        if (!line) {
            throw PreconditionError("curve not line-factored");
        }
        out.push_back(*line);
    }
    return out;
}

Poly Curve::expanded() const
{
    Poly acc = Poly::constant(1);
    for (const auto& f : factors_) {
        acc = multiply(acc, f);
    }
    return acc;
}

Rational Curve::operator()(const Point& p) const
{
    Rational acc = 1;
    for (const auto& f : factors_) {
        acc *= f(p);
    }
    return acc;
}

bool Curve::vanishes_at(const Point& p) const
{
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Poly& f) { return sgn(f(p)) == 0; });
}

Curve operator*(const Curve& a, const Curve& b)
{
    std::vector<Poly> factors = a.factors_;
    factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
    const bool certified = a.squarefree_ && b.squarefree_ && !has_proportional_pair(factors);
    return Curve(std::move(factors), certified);
}

Curve product_of_lines(std::span<const Line> lines)
{
    if (lines.empty()) {
        throw PreconditionError("product_of_lines: no lines");
    }
    std::vector<Poly> factors;
    factors.reserve(lines.size());
    for (const auto& l : lines) {
        factors.push_back(l.poly());
    }
    const bool distinct = !has_proportional_pair(factors);
    return Curve(std::move(factors), distinct);
}

RationalVector curve_coefficient_vector(const Curve& f, int n)
{
    if (f.total_degree() > n) {
        throw PreconditionError("degree exceeds bound: curve degree " +
                                std::to_string(f.total_degree()) + " > " + std::to_string(n));
    }
    const Poly p = f.expanded().padded(n);
    return RationalVector(p.coeffs().begin(), p.coeffs().end());
}

namespace {

// A line divides q iff q vanishes at deg(q) + 1 distinct points of it.
bool line_divides(const Line& line, const Poly& q)
{
    const int d = q.effective_degree();
    for (int t = 0; t <= d; ++t) {
        if (sgn(q(line.at(t))) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Curve> maybe_curve(std::vector<Poly> factors, bool squarefree)
{
    if (factors.empty()) {
        return std::nullopt;
    }
    return Curve(std::move(factors), squarefree);
}

}  // namespace

GcdCertificate gcd_certificate(const Curve& f1, const Curve& f2)
{
    std::vector<Poly> common;
    std::vector<Poly> rest1;
    std::vector<bool> used(f2.factors().size(), false);
    for (const auto& p : f1.factors()) {
        bool matched = false;
        for (std::size_t j = 0; j < f2.factors().size(); ++j) {
            if (!used[j] && p.proportional_to(f2.factors()[j])) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        (matched ? common : rest1).push_back(p);
    }
    std::vector<Poly> rest2;
    for (std::size_t j = 0; j < f2.factors().size(); ++j) {
        if (!used[j]) {
            rest2.push_back(f2.factors()[j]);
        }
    }

    for (const auto& p : rest1) {
        for (const auto& q : rest2) {
            const int dp = p.effective_degree();
            const int dq = q.effective_degree();
            if (dp >= 2 && dq >= 2) {
                throw PreconditionError(
                    "unfactored curve: cannot decide common components of " + to_string(p) +
                    " and " + to_string(q));
            }
            if ((dp == 1 && dq >= 2 && line_divides(*p.as_line(), q)) ||
                (dq == 1 && dp >= 2 && line_divides(*q.as_line(), p))) {
                throw PreconditionError("unfactored curve: a line factor divides " +
                                        to_string(dp >= 2 ? p : q));
            }
        }
    }

    return {maybe_curve(std::move(common), f1.squarefree_certified()),
            maybe_curve(std::move(rest1), f1.squarefree_certified()),
            maybe_curve(std::move(rest2), f2.squarefree_certified())};
}

}  // namespace maxcurve
