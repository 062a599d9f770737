#pragma once

// Checkable reports: each verifier measures a quantity on a concrete node
// configuration and compares it with the closed-form prediction.
//
// Predicted values come only from maxcurve::comb; measured values come only
// from incidence counts, ranks and divisibility tests on the geometry.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "maxcurve/analysis.hpp"
#include "maxcurve/constructions.hpp"
#include "maxcurve/point.hpp"
#include "maxcurve/poly.hpp"

namespace maxcurve {

// An integer, or a point set kept sorted so that equality is set equality.
using Value = std::variant<std::int64_t, std::vector<Point>>;

struct Component {
    std::string name;
    Value measured;
    Value predicted;

    bool holds() const { return measured == predicted; }
};

enum class Verdict { pass, fail, inapplicable };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string proposition;
    std::string subject;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::vector<Component> components;
    Verdict verdict = Verdict::pass;
    // Name of the violated precondition when inapplicable.
    std::string inapplicable_reason;
    std::vector<Point> witnesses;
    std::string detail;

    void add(std::string name, Value measured, Value predicted);
    /// Marks the report inapplicable and drops any components.
    void reject(std::string reason);
    /// pass iff every component holds; an inapplicable report stays so.
    void settle();
};

bool passed(std::span<const VerificationReport> reports);

/// A node set together with a degree for which it has been checked to be
/// correct; verifiers take it to avoid re-ranking the same set.
class CorrectSet {
public:
    /// Empty when `nodes` is not n-correct.
    static std::optional<CorrectSet> make(NodeSet nodes, int n);

    const NodeSet& nodes() const { return nodes_; }
    int degree() const { return degree_; }

private:
    CorrectSet(NodeSet nodes, int n) : nodes_(std::move(nodes)), degree_(n) {}

    NodeSet nodes_;
    int degree_ = 0;
};

/// Two maximal curves without common components meet in H^n_{k1,k2} nodes;
/// for k1 + k2 >= n + 1 they also cover the set.
VerificationReport verify_pairwise(const CorrectSet& x, const Curve& f1, const Curve& f2);
VerificationReport verify_pairwise(const NodeSet& x, const Curve& f1, const Curve& f2, int n);

/// f1 = h g1 and f2 = h g2 maximal with gcd h meet in d(n,m) + H^{n-m}_{s1,s2}
/// nodes; with s1 + s2 + m <= n + 2 also h maximal, g_i maximal off h,
/// #(g1 g2) = s1 s2 and h g1 g2 empty on X; with s1 + s2 + m <= n the
/// product h g1 g2 is maximal. Empty optionals are trivial factors.
VerificationReport verify_common_component(const CorrectSet& x, const std::optional<Curve>& h,
                                           const std::optional<Curve>& g1,
                                           const std::optional<Curve>& g2);
VerificationReport verify_common_component(const NodeSet& x, const std::optional<Curve>& h,
                                           const std::optional<Curve>& g1,
                                           const std::optional<Curve>& g2, int n);

/// Three pairwise coprime maximal curves: no common node when sigma <= 0;
/// for sigma >= -1 the common count equals every applicable closed form and
/// the curves cover the set.
VerificationReport verify_triple(const CorrectSet& x, const Curve& f1, const Curve& f2,
                                 const Curve& f3);
VerificationReport verify_triple(const NodeSet& x, const Curve& f1, const Curve& f2,
                                 const Curve& f3, int n);

/// In a certified GC set, a product of k distinct lines is maximal iff its
/// lines can be ordered so that the i-th adds exactly n + 2 - i new nodes;
/// a maximal one has a maximal line among its factors (asserted for n <= 5).
/// PreconditionError("curve not line-factored").
VerificationReport verify_gc_maximal_decomposition(const CorrectSet& x, const GcCertificate& cert,
                                                   const Curve& f);
VerificationReport verify_gc_maximal_decomposition(const NodeSet& x, const GcCertificate& cert,
                                                   const Curve& f, int n);

/// Ordering of `lines` with cascade counts n+1, n, ..., n+2-k, if any.
std::optional<std::vector<std::size_t>> find_cascade(const NodeSet& x, std::span<const Line> lines,
                                                     int n);

enum class Family {
    identities,
    sigma,
    construction,
    interpolation,
    maximality,
    pairwise,
    common_component,
    triple,
    gc,
    two_curve,
    fault_injection,
};

std::string to_string(Family f);

struct TwoCurveCase {
    int m = 2;
    int k = 2;
    int delta = 0;
};

struct SuiteConfig {
    std::vector<Family> families;
    // Degree range of the Chung-Yao sets used by geometric families.
    int min_degree = 1;
    int max_degree = 5;
    // Principal lattices 0..principal_max_degree in the construction and
    // interpolation families.
    int principal_max_degree = 5;
    std::size_t seeds = 3;
    std::uint64_t base_seed = 1;
    // Exhaustive ranges of the arithmetic families.
    int identity_bound = 14;
    int sigma_bound = 12;
    std::size_t interpolation_trials = 20;
    // Non-maximal node lines mixed into the line pools of the maximality
    // and gc families.
    std::size_t extra_lines = 3;
    std::vector<TwoCurveCase> two_curve_cases{{2, 2, 0}, {2, 2, 1}, {2, 3, 0},
                                              {2, 3, 1}, {3, 3, 0}, {3, 3, 1}};
    // 0 selects the hardware concurrency.
    std::size_t jobs = 0;
    Budgets budgets;
};

/// identities | pairwise | triple | gc | construction | all, with defaults
/// otherwise. PreconditionError for an unknown name.
SuiteConfig preset_config(std::string_view preset);

/// Evaluates every family in order; output order is stable regardless of
/// `jobs`. Construction errors become failed reports carrying the message.
/// Within the suite an inapplicable verdict where the construction guarantees
/// the hypotheses is reported as a failure.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

}  // namespace maxcurve
