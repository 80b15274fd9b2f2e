#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/literals.hpp>
#include <pseudoval/metrics.hpp>

#include <cmath>

using namespace pseudoval;

namespace {

const FieldConfig DQ = FieldConfig::parse("dyadic-q");
const FieldConfig P5 = FieldConfig::parse("padic-5");

FieldElem el(const std::string& text) { return parseElement(DQ, text); }

ExtRing ringAt(const std::string& base, const Rat& delta) {
    return ExtRing(zConstruct(el(base), ExtRat(delta)));
}

} // namespace

TEST_CASE("DistDesc canonicalizes zero and orders within a delta") {
    DistDesc z = DistDesc::zero(ExtRat(1));
    CHECK(z.isZero());
    CHECK(z.eta() == ExtRat::plusInfinity());
    CHECK(DistDesc(ExtRat(2), ExtRat(1)).isZero());      // eta >= delta collapses
    CHECK(DistDesc(ExtRat(2), ExtRat(1)) == z);

    DistDesc big(ExtRat(Rat(1, 4)), ExtRat(1));
    DistDesc small(ExtRat(Rat(1, 2)), ExtRat(1));
    CHECK(big > small);       // smaller eta, larger value
    CHECK(small < big);
    CHECK(z < small);
    CHECK(big == DistDesc(ExtRat(Rat(1, 4)), ExtRat(1)));
    CHECK(!(big == DistDesc(ExtRat(Rat(1, 4)), ExtRat(2))));
}

TEST_CASE("DistDesc cross-delta comparisons are dominance only") {
    DistDesc a(ExtRat(Rat(1, 4)), ExtRat(1));
    DistDesc b(ExtRat(Rat(1, 4)), ExtRat(2));
    CHECK(a < b);  // same eta, deeper delta, strictly larger value

    DistDesc c(ExtRat(Rat(1, 2)), ExtRat(2));
    // a vs c: eta says a is larger, delta says a is smaller — undecidable exactly.
    CHECK_THROWS_AS((void)DistDesc::compare(a, c), DomainError);

    CHECK(std::abs(a.approxValue() - (std::exp(-0.25) - std::exp(-1.0))) < 1e-12);
}

TEST_CASE("zConstruct picks the rule by the breadth's shape") {
    SeqSpec half = zConstruct(el("0"), ExtRat(1));
    CHECK(std::holds_alternative<DyadicStepRule>(half.gauge().rule()));
    CHECK(half.gaugeExpAt(2) == Rat(7, 8));
    CHECK(half.breadth() == ExtRat(1));

    SeqSpec trunc = zConstruct(el("0"), ExtRat(Rat(1, 3)));
    CHECK(std::holds_alternative<BinaryTruncationRule>(trunc.gauge().rule()));
    CHECK(trunc.breadth() == ExtRat(Rat(1, 3)));

    SeqSpec cauchy = zConstruct(FieldElem::zero(P5), ExtRat::plusInfinity());
    CHECK(std::holds_alternative<LinearRule>(cauchy.gauge().rule()));
    CHECK(cauchy.breadth() == ExtRat::plusInfinity());

    CHECK_THROWS_AS(zConstruct(FieldElem::zero(P5), ExtRat(1)), DomainError);

    // The pseudo-limit set of the construction is the prescribed closed ball.
    Ball b = half.pseudoLimitSet();
    CHECK(b.contains(el("0")));
    CHECK(b.contains(el("1*t^(1)")));
    CHECK(!b.contains(el("1*t^(1/2)")));
}

TEST_CASE("distDelta frozen cases") {
    DistDesc d = distDelta(ringAt("0", Rat(1)), ringAt("1*t^(1/4)", Rat(1)));
    CHECK(d.eta() == ExtRat(Rat(1, 4)));
    CHECK(d.delta() == ExtRat(1));
    CHECK(!d.isZero());

    // Bases within the common breadth ball: distance zero.
    DistDesc z = distDelta(ringAt("0", Rat(1)), ringAt("1*t^(1)", Rat(1)));
    CHECK(z.isZero());

    CHECK_THROWS_AS(distDelta(ringAt("0", Rat(1)), ringAt("0", Rat(2))), DomainError);

    SeqSpec div(SeqKind::Divergent, el("0"),
                GaugeGen(GaugeFamily::DescendTo, ExtRat(1), DyadicStepRule{Rat(1)}));
    CHECK_THROWS_AS(distDelta(ringAt("0", Rat(1)), ExtRing(div)), DomainError);
}

TEST_CASE("distDelta matches the pseudo-limit formula") {
    FieldElem b1 = el("1*t^(1/2) + 1");
    FieldElem b2 = el("2");
    DistDesc viaRings = distDelta(ExtRing(zConstruct(b1, ExtRat(1))),
                                  ExtRing(zConstruct(b2, ExtRat(1))));
    CHECK(viaRings == distPseudoLimitFormula(b1, b2, ExtRat(1)));
    CHECK(viaRings.eta() == ExtRat(0));  // v(t^(1/2) - 1) = 0
}

TEST_CASE("distDeltaWindow certifies nonzero distances exactly") {
    ExtRing w1 = ringAt("0", Rat(1));
    ExtRing w2 = ringAt("1*t^(1/4)", Rat(1));
    DistWindowResult r = distDeltaWindow(w1, w2);
    CHECK(r.desc == distDelta(w1, w2));
    CHECK(!r.heuristic);

    DistWindowResult z = distDeltaWindow(w1, ringAt("1*t^(1)", Rat(1)));
    CHECK(z.desc.isZero());
    CHECK(z.heuristic);       // zero has no finite certificate
    CHECK(z.samples == 256);
}

TEST_CASE("similitude scales breadth and distances by the valuation of c") {
    ExtRing w = ringAt("1*t^(1/4)", Rat(1));
    FieldElem c = el("1*t^(1)");
    ExtRing scaled = similitude(c, w);
    CHECK(scaled.breadth() == ExtRat(2));
    CHECK(scaled.spec().base() == c * w.spec().base());

    DistDesc before = distDelta(w, ringAt("0", Rat(1)));
    DistDesc after = distDelta(scaled, similitude(c, ringAt("0", Rat(1))));
    CHECK(after.eta() == before.eta() + ExtRat(1));
    CHECK(after.delta() == before.delta() + ExtRat(1));

    // c with valuation 0 is an isometry.
    ExtRing iso = similitude(el("2"), w);
    CHECK(iso.breadth() == w.breadth());

    CHECK_THROWS_AS(similitude(FieldElem::zero(DQ), w), DomainError);
}

TEST_CASE("similitudes compose to the identity") {
    ExtRing w = ringAt("1*t^(1/2) + 3", Rat(2));
    FieldElem c = el("1*t^(1) + 1");
    ExtRing back = similitude(c.inverse(), similitude(c, w));
    CHECK(back == w);
    CHECK(back.breadth() == w.breadth());
}

TEST_CASE("scaleSpec is exact termwise scaling") {
    SeqSpec src = zConstruct(el("1*t^(1/4)"), ExtRat(1));
    FieldElem c = el("1*t^(1) + 1*t^(2)");  // non-monomial: residual perturbation
    SeqSpec scaled = scaleSpec(c, src);
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(scaled.materialize(n) == c * src.materialize(n));
    CHECK(scaled.breadth() == ExtRat(2));
}

TEST_CASE("invertSequence mirrors a divergent null sequence") {
    SeqSpec e(SeqKind::Divergent, FieldElem::zero(DQ),
              GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}),
              CoeffStream{CoeffKind::Cycle, {Rat(2), Rat(4)}});
    SeqSpec inv = invertSequence(e);
    CHECK(inv.kind() == SeqKind::Convergent);
    CHECK(inv.breadth() == ExtRat(1));
    FieldElem one = FieldElem::one(DQ);
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(inv.materialize(n) == one / e.materialize(n));

    CHECK_THROWS_AS(invertSequence(zConstruct(el("0"), ExtRat(1))), DomainError);
    SeqSpec offCenter(SeqKind::Divergent, el("1"),
                      GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}));
    CHECK_THROWS_AS(invertSequence(offCenter), DomainError);
}
