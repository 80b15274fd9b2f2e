#pragma once

#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pseudoval/field.hpp"

namespace pseudoval {

enum class SeqKind { Convergent, Divergent, Stationary };

enum class BallBoundary { Closed, Open };

// Valuation ball: {x : v(x - center) >= radius} (Closed) or > radius (Open).
struct Ball {
    FieldElem center;
    ExtRat radius;
    BallBoundary boundary;

    bool contains(const FieldElem& x) const;
    bool isSingleton() const { return boundary == BallBoundary::Closed && radius.isPlusInfinity(); }
    bool isWholeField() const { return radius.isMinusInfinity(); }

    // Ball identity: same boundary kind, same radius, centers within the radius.
    // Boundary kind and radius are part of the identity even when the value group
    // skips the radius; extension rings can tell such balls apart.
    bool sameSetAs(const Ball& other) const;

    std::string str() const;
};

enum class GaugeFamily { ApproachFromBelow, DescendTo, Constant };

// gamma_n = target -/+ scale * 2^-n (approach / descend); finite targets only.
struct DyadicStepRule {
    Rat scale;
};
// Greedy half-integer truncations: strictly monotone dyadic steps toward a finite
// target, each step the largest power of two that stays strictly on the near side.
struct BinaryTruncationRule {};
// gamma_n = start + n*step; for infinite targets (step sign must match direction).
struct LinearRule {
    Rat start;
    Rat step;
};
struct ExplicitRule {
    std::vector<Rat> values;
};
using GaugeRule = std::variant<DyadicStepRule, BinaryTruncationRule, LinearRule, ExplicitRule>;

// Symbolic gauge-exponent generator. Materialized prefixes are validated: strict
// monotonicity in the family's direction, never crossing (or reaching) the target.
class GaugeGen {
public:
    GaugeGen(GaugeFamily family, ExtRat target, GaugeRule rule);
    static GaugeGen constant(const Rat& gamma);

    GaugeFamily family() const { return family_; }
    const ExtRat& target() const { return target_; }
    const GaugeRule& rule() const { return rule_; }
    const Rat& offset() const { return offset_; }

    Rat at(std::size_t n) const;

    GaugeGen shifted(const Rat& offset) const;  // x -> x + offset
    GaugeGen negated() const;                   // x -> -x, swaps approach/descend

private:
    GaugeFamily family_;
    ExtRat target_;
    GaugeRule rule_;
    Rat offset_;  // additive shift applied after rule evaluation; target_ includes it
};

enum class CoeffKind { Ones, Enumerate, Cycle };

// Nonzero coefficient stream over the coefficient field, with the two symbolic
// modifiers similitude and inversion need (post-scale and pointwise inverse).
struct CoeffStream {
    CoeffKind kind = CoeffKind::Ones;
    std::vector<Rat> cycle;
    Rat scale = Rat(1);
    bool inverted = false;

    Rat at(const BaseK& k, std::size_t n) const;
    bool pairwiseDistinct() const { return kind == CoeffKind::Enumerate; }

    CoeffStream scaled(const BaseK& k, const Rat& factor) const;
    CoeffStream invertedStream(const BaseK& k) const;
};

class SeqSpec;

// pert(n) = coeff * u^(gauge_n + extraExp), extraExp > 0.
struct GaugeMonomialPert {
    Rat coeff;
    Rat extraExp;
};
// Residual of an exact similitude: pert(n) = factor*(src_n - src_base) - lead-term.
struct ScaleResidualPert {
    FieldElem factor;
    std::shared_ptr<const SeqSpec> source;
};
// Residual of exact term inversion of a base-0 divergent source.
struct InvertResidualPert {
    std::shared_ptr<const SeqSpec> source;
};
using Perturbation =
    std::variant<std::monostate, GaugeMonomialPert, ScaleResidualPert, InvertResidualPert>;

// Symbolic sequence s_n = base + coeff_n * u^(gamma_n) + pert(n), v(pert(n)) > gamma_n,
// with u the uniformizing object (p for padic, t for dyadic-t). The gauge family is
// tied to the kind: convergent gauges approach the breadth from below, divergent
// gauges descend to it, stationary gauges are constant.
class SeqSpec {
public:
    SeqSpec(SeqKind kind, FieldElem base, GaugeGen gauge, CoeffStream coeffs = {},
            Perturbation pert = {});

    SeqKind kind() const { return kind_; }
    const FieldElem& base() const { return base_; }
    const FieldConfig& config() const { return base_.config(); }
    const GaugeGen& gauge() const { return gauge_; }
    const CoeffStream& coeffs() const { return coeffs_; }
    const Perturbation& perturbation() const { return pert_; }

    Rat gaugeExpAt(std::size_t n) const;  // rule exponent gamma_n, checked against the value group
    Rat coeffAt(std::size_t n) const;
    FieldElem materialize(std::size_t n) const;

    // Observable gauge delta_n = v(s_{n+1} - s_n), cross-checked against the rule.
    ExtRat gaugeAt(std::size_t n) const;

    // Declared breadth, cross-validated against a 32-term rule prefix and an
    // 8-term materialized prefix on first use.
    ExtRat breadth() const;

    bool breadthIdealContains(const FieldElem& b) const;
    Ball pseudoLimitSet() const;

private:
    FieldElem standardTermAt(std::size_t n) const;  // base + coeff_n * u^gamma_n
    FieldElem uniformizerPow(const Rat& e) const;
    std::optional<FieldElem> pertValueAt(std::size_t n) const;

    SeqKind kind_;
    FieldElem base_;
    GaugeGen gauge_;
    CoeffStream coeffs_;
    Perturbation pert_;
    mutable bool validated_ = false;
};

// Kind of a pairwise-distinct finite sample, by consecutive-difference valuations.
std::optional<SeqKind> classify(std::span<const FieldElem> samples, std::size_t minLen = 4);

// Same limit ball as a set (and compatible kind structure): induces the same
// extension ring.
bool equivalent(const SeqSpec& a, const SeqSpec& b);

SeqSpec translate(const SeqSpec& e, const FieldElem& delta);

} // namespace pseudoval
