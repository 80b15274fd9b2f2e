#pragma once

#include "pseudoval/extensions.hpp"

namespace pseudoval {

// Exact distance descriptor: the value max{e^(-eta) - e^(-delta), 0} stored as the
// exponent pair. Zero is canonicalized to eta = +inf. All comparisons stay on the
// exponents; within a fixed delta the order is total (reversed on eta). Across
// different deltas only dominance-decidable comparisons are answered — anything
// else would need transcendental evaluation and throws.
class DistDesc {
public:
    DistDesc(ExtRat eta, ExtRat delta);
    static DistDesc zero(ExtRat delta) { return DistDesc(ExtRat::plusInfinity(), std::move(delta)); }

    bool isZero() const { return eta_.isPlusInfinity(); }
    const ExtRat& eta() const { return eta_; }
    const ExtRat& delta() const { return delta_; }

    // Value equality (distinct exponent pairs denote distinct nonzero values).
    friend bool operator==(const DistDesc& a, const DistDesc& b);
    static std::strong_ordering compare(const DistDesc& a, const DistDesc& b);
    friend bool operator<(const DistDesc& a, const DistDesc& b) { return compare(a, b) < 0; }
    friend bool operator>(const DistDesc& a, const DistDesc& b) { return compare(a, b) > 0; }
    friend bool operator<=(const DistDesc& a, const DistDesc& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const DistDesc& a, const DistDesc& b) { return compare(a, b) >= 0; }

    double approxValue() const;  // display only
    std::string str() const;

private:
    ExtRat eta_, delta_;
};

// d_delta(W1, W2) for two rings in the same space: eta = v(base1 - base2), exact.
DistDesc distDelta(const ExtRing& w1, const ExtRing& w2);

// The algebraic-type formula: DistDesc(v(b1 - b2), delta).
DistDesc distPseudoLimitFormula(const FieldElem& b1, const FieldElem& b2, const ExtRat& delta);

// Independent cross-check of distDelta on materialized sequences: v(s_n - t_n) is
// eventually constant below the gauges when the distance is nonzero; a window scan
// certifies that constant. The zero case has no finite certificate and is flagged.
struct DistWindowResult {
    DistDesc desc;
    bool heuristic;
    std::size_t samples;
};
DistWindowResult distDeltaWindow(const ExtRing& w1, const ExtRing& w2);

// Convergent spec with pseudo-limit base and prescribed breadth delta; the inverse
// of the breadth map on its image. Gauge rule selection: +inf -> linear Cauchy,
// dyadic delta -> half-step approach, other rationals -> binary truncation.
SeqSpec zConstruct(const FieldElem& base, const ExtRat& delta);

// Termwise scaling s_n -> c * s_n at spec level (exact; residual perturbation when
// c is not a monomial).
SeqSpec scaleSpec(const FieldElem& c, const SeqSpec& src);

// The similitude on ring spaces: breadth shifts by v(c), distances scale by e^(-v(c)).
ExtRing similitude(const FieldElem& c, const ExtRing& w);

// Termwise inversion of a pseudo-divergent spec with pseudo-limit 0; yields the
// pseudo-convergent spec of the reciprocals, breadth delta -> -delta.
SeqSpec invertSequence(const SeqSpec& e);

} // namespace pseudoval
