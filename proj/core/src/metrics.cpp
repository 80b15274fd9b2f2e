#include "pseudoval/metrics.hpp"

#include "pseudoval/errors.hpp"

#include <cmath>
#include <sstream>

namespace pseudoval {

DistDesc::DistDesc(ExtRat eta, ExtRat delta) : eta_(std::move(eta)), delta_(std::move(delta)) {
    if (eta_.isMinusInfinity())
        throw DomainError("distance descriptor exponent -inf is not a finite distance");
    if (eta_ >= delta_) eta_ = ExtRat::plusInfinity();
}

bool operator==(const DistDesc& a, const DistDesc& b) {
    if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
    return a.eta_ == b.eta_ && a.delta_ == b.delta_;
}

std::strong_ordering DistDesc::compare(const DistDesc& a, const DistDesc& b) {
    if (a == b) return std::strong_ordering::equal;
    if (a.isZero()) return std::strong_ordering::less;
    if (b.isZero()) return std::strong_ordering::greater;
    // Value decreases in eta and increases in delta.
    if (a.delta_ == b.delta_) return b.eta_ <=> a.eta_;
    if (a.eta_ <= b.eta_ && a.delta_ >= b.delta_) return std::strong_ordering::greater;
    if (a.eta_ >= b.eta_ && a.delta_ <= b.delta_) return std::strong_ordering::less;
    throw DomainError("incomparable distance descriptors (" + a.str() + " vs " + b.str() +
                      "): order is exponent-decidable only within dominance");
}

double DistDesc::approxValue() const {
    auto ex = [](const ExtRat& x) {
        if (x.isPlusInfinity()) return 0.0;
        return std::exp(-x.finite().toDouble());
    };
    if (isZero()) return 0.0;
    double v = ex(eta_) - ex(delta_);
    return v > 0.0 ? v : 0.0;
}

std::string DistDesc::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    os << "e^(-" << eta_.str() << ")";
    if (!delta_.isPlusInfinity()) os << " - e^(-" << delta_.str() << ")";
    return os.str();
}

DistDesc distDelta(const ExtRing& w1, const ExtRing& w2) {
    if (w1.spec().kind() != SeqKind::Convergent || w2.spec().kind() != SeqKind::Convergent)
        throw DomainError("distance is defined on pseudo-convergent rings");
    requireSameConfig(w1.spec().config(), w2.spec().config(), "distance");
    if (!(w1.breadth() == w2.breadth()))
        throw DomainError("breadth mismatch: " + w1.breadth().str() + " vs " +
                          w2.breadth().str());
    return DistDesc((w1.spec().base() - w2.spec().base()).valuation(), w1.breadth());
}

DistDesc distPseudoLimitFormula(const FieldElem& b1, const FieldElem& b2, const ExtRat& delta) {
    if (delta.isMinusInfinity())
        throw DomainError("distance space needs a breadth above -inf");
    return DistDesc((b1 - b2).valuation(), delta);
}

DistWindowResult distDeltaWindow(const ExtRing& w1, const ExtRing& w2) {
    if (w1.spec().kind() != SeqKind::Convergent || w2.spec().kind() != SeqKind::Convergent)
        throw DomainError("distance is defined on pseudo-convergent rings");
    requireSameConfig(w1.spec().config(), w2.spec().config(), "distance");
    if (!(w1.breadth() == w2.breadth()))
        throw DomainError("breadth mismatch: " + w1.breadth().str() + " vs " +
                          w2.breadth().str());

    const SeqSpec& e1 = w1.spec();
    const SeqSpec& e2 = w2.spec();
    constexpr std::size_t kCap = 256;
    constexpr std::size_t kRun = 8;
    // v(s_n - t_n) >= min(gauge1_n, gauge2_n) always; one sample strictly below that
    // bound pins the eventual constant, and the distance is then exact.
    for (std::size_t n = 0; n < kCap; ++n) {
        const Rat bound = std::min(e1.gaugeExpAt(n), e2.gaugeExpAt(n));
        const ExtRat v = (e1.materialize(n) - e2.materialize(n)).valuation();
        if (!v.isFinite() || !(v.finite() < bound)) continue;
        for (std::size_t i = 1; i < kRun; ++i) {
            const ExtRat vi = (e1.materialize(n + i) - e2.materialize(n + i)).valuation();
            if (!(vi == v))
                throw WindowError("distance window lost its pinned valuation");
        }
        return {DistDesc(v, w1.breadth()), false, n + kRun};
    }
    // No sample ever dropped below the gauge floor: consistent with (and only with)
    // equivalent rings, but a finite window cannot certify it.
    return {DistDesc::zero(w1.breadth()), true, kCap};
}

SeqSpec zConstruct(const FieldElem& base, const ExtRat& delta) {
    const FieldConfig& cfg = base.config();
    if (delta.isMinusInfinity()) throw DomainError("breadth -inf has no approximating gauge");
    GaugeRule rule;
    if (delta.isPlusInfinity()) {
        rule = LinearRule{Rat(0), Rat(1)};
    } else if (!cfg.denseValueGroup()) {
        throw DomainError(
            "discrete value group: strictly increasing gauges are unbounded, so only "
            "breadth +inf is constructible");
    } else if (delta.finite().isDyadic()) {
        rule = DyadicStepRule{Rat(1, 2)};
    } else {
        rule = BinaryTruncationRule{};
    }
    return SeqSpec(SeqKind::Convergent, base,
                   GaugeGen(GaugeFamily::ApproachFromBelow, delta, rule));
}

SeqSpec scaleSpec(const FieldElem& c, const SeqSpec& src) {
    const FieldConfig& cfg = src.config();
    requireSameConfig(cfg, c.config(), "similitude");
    if (c == FieldElem::zero(cfg)) throw DomainError("similitude factor must be nonzero");

    const Rat vc = c.valuation().finite();
    Perturbation pert;
    if (c == c.standardPart() && std::holds_alternative<std::monostate>(src.perturbation()))
        pert = std::monostate{};  // monomial factor scales the terms exactly
    else
        pert = ScaleResidualPert{c, std::make_shared<const SeqSpec>(src)};
    return SeqSpec(src.kind(), c * src.base(), src.gauge().shifted(vc),
                   src.coeffs().scaled(cfg.coefficientField(), c.leadingCoeff()),
                   std::move(pert));
}

ExtRing similitude(const FieldElem& c, const ExtRing& w) {
    if (w.spec().kind() != SeqKind::Convergent)
        throw DomainError("similitude acts on pseudo-convergent rings");
    return ExtRing(scaleSpec(c, w.spec()));
}

SeqSpec invertSequence(const SeqSpec& e) {
    if (e.kind() != SeqKind::Divergent)
        throw DomainError("term inversion is defined for pseudo-divergent specs");
    const FieldConfig& cfg = e.config();
    if (!(e.base() == FieldElem::zero(cfg)))
        throw DomainError("pseudo-limit must be 0 to invert (translate by -base first)");

    Perturbation pert;
    if (cfg.kind() == FieldConfig::Kind::DyadicT &&
        std::holds_alternative<std::monostate>(e.perturbation()))
        pert = std::monostate{};  // monomial terms invert exactly
    else
        pert = InvertResidualPert{std::make_shared<const SeqSpec>(e)};
    return SeqSpec(SeqKind::Convergent, FieldElem::zero(cfg), e.gauge().negated(),
                   e.coeffs().invertedStream(cfg.coefficientField()), std::move(pert));
}

} // namespace pseudoval
