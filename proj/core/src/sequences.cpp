#include "pseudoval/sequences.hpp"

#include <algorithm>

namespace pseudoval {

namespace {

Rat ratCeil(const Rat& x) {
    mpz_class f = (-x).floor();
    return Rat(mpq_class(-f));
}

// Smallest integer j with 2^(-j) < d, for d > 0.
long smallestStepExp(const Rat& d) {
    // 2^(-j) < a/b  <=>  a * 2^j > b
    mpz_class a = d.numerator(), b = d.denominator();
    auto holds = [&](long jj) {
        mpz_class lhs = a, rhs = b;
        if (jj >= 0)
            mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(jj));
        else
            mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(-jj));
        return lhs > rhs;
    };
    long j = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - 1;
    while (!holds(j)) ++j;
    while (holds(j - 1)) --j;
    return j;
}

// Greedy from-below truncation walk toward finite target tau.
Rat truncationApproachAt(const Rat& tau, std::size_t n) {
    Rat g = (ratCeil(Rat(2) * tau) - Rat(1)) / Rat(2);
    for (std::size_t k = 0; k < n; ++k) {
        long j = smallestStepExp(tau - g);
        g += Rat::pow2(-j);
    }
    return g;
}

} // namespace

// ---- Ball ------------------------------------------------------------------

bool Ball::contains(const FieldElem& x) const {
    requireSameConfig(x.config(), center.config(), "ball membership");
    ExtRat v = (x - center).valuation();
    return boundary == BallBoundary::Closed ? v >= radius : v > radius;
}

bool Ball::sameSetAs(const Ball& other) const {
    requireSameConfig(center.config(), other.center.config(), "ball comparison");
    // Boundary kind and radius are part of the identity even when the value group
    // skips the radius; a closed and an open ball are never identified, so the
    // kind distinctions downstream (ring equality) stay decidable.
    if (boundary != other.boundary || !(radius == other.radius)) return false;
    ExtRat d = (center - other.center).valuation();
    return boundary == BallBoundary::Closed ? d >= radius : d > radius;
}

std::string Ball::str() const {
    return std::string(boundary == BallBoundary::Closed ? "closed" : "open") + "-ball(center=" +
           center.str() + ", radius=" + radius.str() + ")";
}

// ---- GaugeGen ---------------------------------------------------------------

GaugeGen::GaugeGen(GaugeFamily family, ExtRat target, GaugeRule rule)
    : family_(family), target_(std::move(target)), rule_(std::move(rule)), offset_(0) {
    switch (family_) {
        case GaugeFamily::ApproachFromBelow:
            if (target_.isMinusInfinity()) throw DomainError("cannot approach -inf from below");
            break;
        case GaugeFamily::DescendTo:
            if (target_.isPlusInfinity()) throw DomainError("cannot descend to +inf");
            break;
        case GaugeFamily::Constant:
            if (!target_.isFinite()) throw DomainError("constant gauge needs a finite value");
            break;
    }
    if (const auto* ds = std::get_if<DyadicStepRule>(&rule_)) {
        if (!(ds->scale > Rat(0))) throw DomainError("dyadic-step scale must be positive");
        if (family_ != GaugeFamily::Constant && !target_.isFinite())
            throw DomainError("dyadic-step gauge needs a finite target");
    } else if (std::holds_alternative<BinaryTruncationRule>(rule_)) {
        if (family_ != GaugeFamily::Constant && !target_.isFinite())
            throw DomainError("binary-truncation gauge needs a finite target");
    } else if (const auto* ln = std::get_if<LinearRule>(&rule_)) {
        if (family_ == GaugeFamily::ApproachFromBelow) {
            if (!target_.isPlusInfinity()) throw DomainError("linear gauge needs an infinite target");
            if (!(ln->step > Rat(0))) throw DomainError("approach-from-below needs a positive step");
        } else if (family_ == GaugeFamily::DescendTo) {
            if (!target_.isMinusInfinity()) throw DomainError("linear gauge needs an infinite target");
            if (!(ln->step < Rat(0))) throw DomainError("descend-to needs a negative step");
        }
    } else if (const auto* ex = std::get_if<ExplicitRule>(&rule_)) {
        if (family_ != GaugeFamily::Constant && ex->values.size() < 4)
            throw DomainError("explicit gauge needs at least 4 values");
    }
}

GaugeGen GaugeGen::constant(const Rat& gamma) {
    return GaugeGen(GaugeFamily::Constant, ExtRat(gamma), ExplicitRule{});
}

Rat GaugeGen::at(std::size_t n) const {
    if (family_ == GaugeFamily::Constant) return target_.finite();

    Rat value(0);
    if (const auto* ds = std::get_if<DyadicStepRule>(&rule_)) {
        Rat step = ds->scale * Rat::pow2(-static_cast<long>(n));
        value = family_ == GaugeFamily::ApproachFromBelow ? target_.finite() - step
                                                          : target_.finite() + step;
    } else if (std::holds_alternative<BinaryTruncationRule>(rule_)) {
        Rat tau = target_.finite() - offset_;
        value = family_ == GaugeFamily::ApproachFromBelow
                    ? truncationApproachAt(tau, n) + offset_
                    : -truncationApproachAt(-tau, n) + offset_;
    } else if (const auto* ln = std::get_if<LinearRule>(&rule_)) {
        value = ln->start + Rat(static_cast<long>(n)) * ln->step + offset_;
    } else {
        const auto& vals = std::get<ExplicitRule>(rule_).values;
        if (n >= vals.size()) throw DomainError("explicit gauge exhausted at index " + std::to_string(n));
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            bool ok = family_ == GaugeFamily::ApproachFromBelow ? vals[i] < vals[i + 1]
                                                                : vals[i] > vals[i + 1];
            if (!ok) throw DomainError("explicit gauge is not strictly monotone");
        }
        value = vals[n] + offset_;
    }

    if (target_.isFinite()) {
        bool ok = family_ == GaugeFamily::ApproachFromBelow ? Rat(value) < target_.finite()
                                                            : Rat(value) > target_.finite();
        if (!ok)
            throw DomainError("gauge value " + value.str() + " crosses target " + target_.str());
    }
    return value;
}

GaugeGen GaugeGen::shifted(const Rat& o) const {
    GaugeGen g = *this;
    g.target_ = g.target_ + ExtRat(o);
    g.offset_ += o;
    return g;
}

GaugeGen GaugeGen::negated() const {
    GaugeGen g = *this;
    if (family_ == GaugeFamily::ApproachFromBelow) g.family_ = GaugeFamily::DescendTo;
    else if (family_ == GaugeFamily::DescendTo) g.family_ = GaugeFamily::ApproachFromBelow;
    g.target_ = -target_;
    g.offset_ = -offset_;
    if (auto* ln = std::get_if<LinearRule>(&g.rule_)) {
        ln->start = -ln->start;
        ln->step = -ln->step;
    } else if (auto* ex = std::get_if<ExplicitRule>(&g.rule_)) {
        for (auto& v : ex->values) v = -v;
    }
    // DyadicStepRule and BinaryTruncationRule are symmetric under negation
    return g;
}

// ---- CoeffStream ------------------------------------------------------------

Rat CoeffStream::at(const BaseK& k, std::size_t n) const {
    Rat base(1);
    switch (kind) {
        case CoeffKind::Ones: break;
        case CoeffKind::Enumerate:
            base = k.isPrimeField() ? Rat(static_cast<long>(n % (k.p - 1)) + 1)
                                    : Rat(static_cast<long>(n) + 1);
            break;
        case CoeffKind::Cycle:
            if (cycle.empty()) throw DomainError("empty coefficient cycle");
            base = cycle[n % cycle.size()];
            break;
    }
    if (inverted) base = k.inv(base);
    return k.mul(base, scale);
}

CoeffStream CoeffStream::scaled(const BaseK& k, const Rat& factor) const {
    if (k.isZero(factor)) throw DomainError("zero coefficient scale");
    CoeffStream s = *this;
    s.scale = k.mul(s.scale, factor);
    return s;
}

CoeffStream CoeffStream::invertedStream(const BaseK& k) const {
    CoeffStream s = *this;
    s.inverted = !s.inverted;
    s.scale = k.inv(scale);  // 1/(base*scale) = inv(base)*inv(scale)
    return s;
}

// ---- SeqSpec ----------------------------------------------------------------

SeqSpec::SeqSpec(SeqKind kind, FieldElem base, GaugeGen gauge, CoeffStream coeffs,
                 Perturbation pert)
    : kind_(kind), base_(std::move(base)), gauge_(std::move(gauge)), coeffs_(std::move(coeffs)),
      pert_(std::move(pert)) {
    const FieldConfig& cfg = base_.config();
    BaseK k = cfg.coefficientField();

    static constexpr GaugeFamily required[] = {GaugeFamily::ApproachFromBelow,
                                               GaugeFamily::DescendTo, GaugeFamily::Constant};
    if (gauge_.family() != required[static_cast<int>(kind_)])
        throw DomainError("gauge family does not match the sequence kind");

    if (!cfg.denseValueGroup()) {
        if (kind_ == SeqKind::Convergent && gauge_.target().isFinite())
            throw DomainError(
                "discrete value group: pseudo-convergent sequences are Cauchy (breadth +inf only)");
        if (kind_ == SeqKind::Divergent && gauge_.target().isFinite())
            throw DomainError("discrete value group: gauges cannot descend to a finite breadth");
    }
    if (kind_ == SeqKind::Stationary) {
        if (!cfg.infiniteResidueField())
            throw DomainError("pseudo-stationary sequences need an infinite residue field");
        if (!coeffs_.pairwiseDistinct())
            throw DomainError("pseudo-stationary sequences need pairwise-distinct coefficients");
    }

    if (k.isZero(coeffs_.scale)) throw DomainError("zero coefficient scale");
    if (coeffs_.kind == CoeffKind::Cycle) {
        if (coeffs_.cycle.empty()) throw DomainError("empty coefficient cycle");
        for (const auto& c : coeffs_.cycle)
            if (k.isZero(c)) throw DomainError("zero coefficient in cycle");
    }

    if (const auto* gm = std::get_if<GaugeMonomialPert>(&pert_)) {
        if (!(gm->extraExp > Rat(0))) throw DomainError("perturbation offset must be positive");
        if (!cfg.valueGroupContains(gm->extraExp))
            throw DomainError("perturbation offset is not in the value group");
        if (k.isZero(gm->coeff)) throw DomainError("zero perturbation coefficient");
    } else if (const auto* sr = std::get_if<ScaleResidualPert>(&pert_)) {
        if (!sr->source) throw DomainError("missing perturbation source");
        requireSameConfig(sr->factor.config(), cfg, "perturbation");
        requireSameConfig(sr->source->config(), cfg, "perturbation");
        if (sr->factor.isZero()) throw DomainError("zero similitude factor");
    } else if (const auto* ir = std::get_if<InvertResidualPert>(&pert_)) {
        if (!ir->source) throw DomainError("missing perturbation source");
        requireSameConfig(ir->source->config(), cfg, "perturbation");
        if (ir->source->kind() != SeqKind::Divergent || !ir->source->base().isZero())
            throw DomainError("inversion residual needs a base-0 divergent source");
    }
}

Rat SeqSpec::gaugeExpAt(std::size_t n) const {
    Rat g = gauge_.at(n);
    if (!config().valueGroupContains(g))
        throw DomainError("gauge exponent " + g.str() + " is not in the value group of " +
                          config().str());
    return g;
}

Rat SeqSpec::coeffAt(std::size_t n) const {
    return coeffs_.at(config().coefficientField(), n);
}

FieldElem SeqSpec::uniformizerPow(const Rat& e) const {
    const FieldConfig& cfg = config();
    if (cfg.kind() == FieldConfig::Kind::PAdic)
        return FieldElem::fromRational(cfg, Rat(static_cast<long>(cfg.prime())).pow(e.toLong()));
    return FieldElem::monomial(cfg, Rat(1), e);
}

FieldElem SeqSpec::standardTermAt(std::size_t n) const {
    const FieldConfig& cfg = config();
    Rat g = gaugeExpAt(n), c = coeffAt(n);
    if (cfg.kind() == FieldConfig::Kind::PAdic)
        return base_ + FieldElem::fromRational(cfg, c * Rat(static_cast<long>(cfg.prime())).pow(g.toLong()));
    return base_ + FieldElem::monomial(cfg, c, g);
}

std::optional<FieldElem> SeqSpec::pertValueAt(std::size_t n) const {
    const FieldConfig& cfg = config();
    BaseK k = cfg.coefficientField();
    if (std::holds_alternative<std::monostate>(pert_)) return std::nullopt;
    if (const auto* gm = std::get_if<GaugeMonomialPert>(&pert_)) {
        Rat e = gaugeExpAt(n) + gm->extraExp;
        if (cfg.kind() == FieldConfig::Kind::PAdic)
            return FieldElem::fromRational(
                cfg, gm->coeff * Rat(static_cast<long>(cfg.prime())).pow(e.toLong()));
        return FieldElem::monomial(cfg, gm->coeff, e);
    }
    if (const auto* sr = std::get_if<ScaleResidualPert>(&pert_)) {
        const SeqSpec& src = *sr->source;
        Rat q = sr->factor.valuation().finite();
        Rat lc = sr->factor.leadingCoeff();
        FieldElem lead = [&] {
            Rat c = k.mul(lc, src.coeffAt(n));
            Rat e = src.gaugeExpAt(n) + q;
            if (cfg.kind() == FieldConfig::Kind::PAdic)
                return FieldElem::fromRational(cfg, c * Rat(static_cast<long>(cfg.prime())).pow(e.toLong()));
            return FieldElem::monomial(cfg, c, e);
        }();
        return sr->factor * (src.materialize(n) - src.base()) - lead;
    }
    const auto& ir = std::get<InvertResidualPert>(pert_);
    const SeqSpec& src = *ir.source;
    Rat c = k.inv(src.coeffAt(n));
    Rat e = -src.gaugeExpAt(n);
    FieldElem lead = cfg.kind() == FieldConfig::Kind::PAdic
                         ? FieldElem::fromRational(cfg, c * Rat(static_cast<long>(cfg.prime())).pow(e.toLong()))
                         : FieldElem::monomial(cfg, c, e);
    return src.materialize(n).inverse() - lead;
}

FieldElem SeqSpec::materialize(std::size_t n) const {
    FieldElem std_ = standardTermAt(n);
    auto pert = pertValueAt(n);
    if (!pert) return std_;
    if (!(pert->valuation() > ExtRat(gaugeExpAt(n))))
        throw DomainError("perturbation at index " + std::to_string(n) +
                          " is not below the gauge term");
    return std_ + *pert;
}

ExtRat SeqSpec::gaugeAt(std::size_t n) const {
    ExtRat v = (materialize(n + 1) - materialize(n)).valuation();
    if (!v.isFinite()) throw DomainError("sequence has equal consecutive terms");
    Rat expected = kind_ == SeqKind::Convergent  ? gaugeExpAt(n)
                   : kind_ == SeqKind::Divergent ? gaugeExpAt(n + 1)
                                                 : gauge_.target().finite();
    if (!(v.finite() == expected))
        throw DomainError("materialized gauge " + v.str() + " deviates from rule value " +
                          expected.str() + " at index " + std::to_string(n));
    return v;
}

ExtRat SeqSpec::breadth() const {
    if (kind_ == SeqKind::Stationary) return gauge_.target();
    if (!validated_) {
        std::size_t ruleChecks = 32, matChecks = 8;
        if (const auto* ex = std::get_if<ExplicitRule>(&gauge_.rule())) {
            ruleChecks = std::min(ruleChecks, ex->values.size());
            matChecks = std::min(matChecks, ex->values.size() - 1);
        }
        Rat prev = gaugeExpAt(0);
        for (std::size_t n = 1; n < ruleChecks; ++n) {
            Rat g = gaugeExpAt(n);
            bool ok = kind_ == SeqKind::Convergent ? g > prev : g < prev;
            if (!ok) throw DomainError("gauge prefix is not strictly monotone");
            prev = g;
        }
        for (std::size_t n = 0; n < matChecks; ++n) (void)gaugeAt(n);
        validated_ = true;
    }
    return gauge_.target();
}

bool SeqSpec::breadthIdealContains(const FieldElem& b) const {
    requireSameConfig(b.config(), config(), "breadth ideal");
    ExtRat v = b.valuation();
    switch (kind_) {
        case SeqKind::Convergent: return v >= breadth();
        case SeqKind::Divergent: return v > gaugeAt(0);
        case SeqKind::Stationary: return v > gauge_.target();
    }
    return false;
}

Ball SeqSpec::pseudoLimitSet() const {
    switch (kind_) {
        case SeqKind::Convergent: return Ball{base_, breadth(), BallBoundary::Closed};
        case SeqKind::Divergent: return Ball{base_, breadth(), BallBoundary::Open};
        case SeqKind::Stationary: return Ball{base_, gauge_.target(), BallBoundary::Closed};
    }
    throw DomainError("unreachable");
}

// ---- free functions ---------------------------------------------------------

std::optional<SeqKind> classify(std::span<const FieldElem> samples, std::size_t minLen) {
    if (samples.size() < minLen)
        throw DomainError("classification needs at least " + std::to_string(minLen) + " samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        requireSameConfig(samples[i].config(), samples[0].config(), "classify");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i] == samples[j])
                throw DomainError("classification needs pairwise-distinct samples");

    std::vector<Rat> d;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        d.push_back((samples[i + 1] - samples[i]).valuation().finite());

    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        inc = inc && d[i] < d[i + 1];
        dec = dec && d[i] > d[i + 1];
    }
    if (inc) return SeqKind::Convergent;
    if (dec) return SeqKind::Divergent;

    bool allEqual = true;
    for (std::size_t i = 0; i < samples.size() && allEqual; ++i)
        for (std::size_t j = i + 1; j < samples.size() && allEqual; ++j)
            allEqual = (samples[j] - samples[i]).valuation().finite() == d[0];
    if (allEqual) return SeqKind::Stationary;
    return std::nullopt;
}

bool equivalent(const SeqSpec& a, const SeqSpec& b) {
    requireSameConfig(a.config(), b.config(), "equivalence");
    return a.pseudoLimitSet().sameSetAs(b.pseudoLimitSet());
}

SeqSpec translate(const SeqSpec& e, const FieldElem& delta) {
    requireSameConfig(e.config(), delta.config(), "translate");
    return SeqSpec(e.kind(), e.base() + delta, e.gauge(), e.coeffs(), e.perturbation());
}

} // namespace pseudoval
