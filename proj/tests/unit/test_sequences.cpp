#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/literals.hpp>
#include <pseudoval/sequences.hpp>

#include <vector>

using namespace pseudoval;

namespace {

const FieldConfig DQ = FieldConfig::parse("dyadic-q");
const FieldConfig P5 = FieldConfig::parse("padic-5");

SeqSpec convUnit(const FieldConfig& cfg = DQ) {
    return SeqSpec(SeqKind::Convergent, FieldElem::zero(cfg),
                   GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)}));
}

std::vector<FieldElem> prefix(const SeqSpec& e, std::size_t n) {
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(e.materialize(i));
    return out;
}

} // namespace

TEST_CASE("dyadic-step gauge halves its distance to the target") {
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)});
    CHECK(g.at(0) == Rat(0));
    CHECK(g.at(1) == Rat(1, 2));
    CHECK(g.at(2) == Rat(3, 4));

    GaugeGen d(GaugeFamily::DescendTo, ExtRat(0), DyadicStepRule{Rat(2)});
    CHECK(d.at(0) == Rat(2));
    CHECK(d.at(1) == Rat(1));
    CHECK(d.at(2) == Rat(1, 2));
}

TEST_CASE("binary truncation gauge is the greedy dyadic walk") {
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat(Rat(1, 3)), BinaryTruncationRule{});
    CHECK(g.at(0) == Rat(0));
    CHECK(g.at(1) == Rat(1, 4));
    CHECK(g.at(2) == Rat(5, 16));
    CHECK(g.at(3) == Rat(21, 64));

    GaugeGen d(GaugeFamily::DescendTo, ExtRat(Rat(1, 3)), BinaryTruncationRule{});
    for (int n = 0; n < 6; ++n) {
        CHECK(d.at(n) > Rat(1, 3));
        if (n) CHECK(d.at(n) < d.at(n - 1));
    }
}

TEST_CASE("linear gauge marches to infinity") {
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat::plusInfinity(), LinearRule{Rat(0), Rat(1)});
    CHECK(g.at(0) == Rat(0));
    CHECK(g.at(5) == Rat(5));

    GaugeGen d(GaugeFamily::DescendTo, ExtRat::minusInfinity(), LinearRule{Rat(2), Rat(-3)});
    CHECK(d.at(2) == Rat(-4));

    CHECK_THROWS_AS(GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), LinearRule{Rat(0), Rat(1)}),
                    DomainError);
}

TEST_CASE("gauge family must match the target side") {
    CHECK_THROWS_AS(GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat::minusInfinity(),
                             LinearRule{Rat(0), Rat(-1)}),
                    DomainError);
    CHECK_THROWS_AS(GaugeGen(GaugeFamily::DescendTo, ExtRat::plusInfinity(),
                             LinearRule{Rat(0), Rat(1)}),
                    DomainError);
    CHECK_THROWS_AS(GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(-1)}),
                    DomainError);
}

TEST_CASE("explicit gauges enforce monotonicity lazily") {
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat(1),
               ExplicitRule{{Rat(0), Rat(1, 2), Rat(1, 4), Rat(3, 4)}});
    CHECK(g.at(0) == Rat(0));
    CHECK(g.at(1) == Rat(1, 2));
    CHECK_THROWS_AS(g.at(2), DomainError);   // 1/4 breaks the climb
    CHECK_THROWS_AS(g.at(7), DomainError);   // exhausted

    CHECK_THROWS_AS(GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1),
                             ExplicitRule{{Rat(0), Rat(1, 2)}}),
                    DomainError);            // too short to classify against
}

TEST_CASE("gauge shift and negation") {
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)});
    GaugeGen s = g.shifted(Rat(1, 2));
    CHECK(s.at(0) == Rat(1, 2));
    CHECK(s.target() == ExtRat(Rat(3, 2)));

    GaugeGen n = g.negated();
    CHECK(n.family() == GaugeFamily::DescendTo);
    CHECK(n.target() == ExtRat(-1));
    CHECK(n.at(2) == Rat(-3, 4));
}

TEST_CASE("balls") {
    Ball closed{FieldElem::zero(DQ), ExtRat(1), BallBoundary::Closed};
    Ball open{FieldElem::zero(DQ), ExtRat(1), BallBoundary::Open};
    FieldElem onRim = parseElement(DQ, "1*t^(1)");
    FieldElem inside = parseElement(DQ, "1*t^(2)");

    CHECK(closed.contains(onRim));
    CHECK(!open.contains(onRim));
    CHECK(open.contains(inside));

    Ball shifted{onRim, ExtRat(1), BallBoundary::Closed};
    CHECK(closed.sameSetAs(shifted));          // centers differ by exactly the radius
    CHECK(!open.sameSetAs(Ball{onRim, ExtRat(1), BallBoundary::Open}));
    CHECK(!closed.sameSetAs(open));            // boundary kind is part of the identity

    Ball point{FieldElem::zero(DQ), ExtRat::plusInfinity(), BallBoundary::Closed};
    CHECK(point.isSingleton());
    Ball everything{FieldElem::zero(DQ), ExtRat::minusInfinity(), BallBoundary::Closed};
    CHECK(everything.isWholeField());
}

TEST_CASE("convergent spec materialization") {
    SeqSpec e = convUnit();
    CHECK(e.materialize(0) == parseElement(DQ, "1"));        // gamma_0 = 0
    CHECK(e.materialize(2) == parseElement(DQ, "1*t^(3/4)"));
    CHECK((e.materialize(3) - e.materialize(2)).valuation() == ExtRat(Rat(3, 4)));
    CHECK(e.breadth() == ExtRat(1));
    CHECK(e.gaugeAt(0) == ExtRat(0));
    CHECK(e.gaugeAt(3) == ExtRat(Rat(7, 8)));

    Ball b = e.pseudoLimitSet();
    CHECK(b.boundary == BallBoundary::Closed);
    CHECK(b.radius == ExtRat(1));
    CHECK(b.center == FieldElem::zero(DQ));
}

TEST_CASE("divergent spec gauges descend and the observed gauge leads by one") {
    SeqSpec e(SeqKind::Divergent, FieldElem::zero(DQ),
              GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}));
    CHECK(e.gaugeExpAt(0) == Rat(0));
    CHECK(e.gaugeExpAt(1) == Rat(-1, 2));
    CHECK(e.gaugeAt(0) == ExtRat(Rat(-1, 2)));  // v(s1 - s0) = gamma_1
    CHECK(e.breadth() == ExtRat(-1));
    CHECK(e.pseudoLimitSet().boundary == BallBoundary::Open);
}

TEST_CASE("stationary spec needs pairwise-distinct coefficients") {
    GaugeGen flat = GaugeGen::constant(Rat(1, 2));
    SeqSpec e(SeqKind::Stationary, FieldElem::zero(DQ), flat,
              CoeffStream{CoeffKind::Enumerate});
    CHECK(e.gaugeAt(0) == ExtRat(Rat(1, 2)));
    CHECK(e.gaugeAt(9) == ExtRat(Rat(1, 2)));
    CHECK(e.breadth() == ExtRat(Rat(1, 2)));
    CHECK(e.materialize(1) == parseElement(DQ, "2*t^(1/2)"));

    CHECK_THROWS_AS(SeqSpec(SeqKind::Stationary, FieldElem::zero(DQ), flat,
                            CoeffStream{CoeffKind::Ones}),
                    DomainError);
    CHECK_THROWS_AS(SeqSpec(SeqKind::Stationary, FieldElem::zero(P5),
                            GaugeGen::constant(Rat(1)), CoeffStream{CoeffKind::Enumerate}),
                    DomainError);  // finite residue field
}

TEST_CASE("p-adic specs require infinite breadth") {
    SeqSpec ok(SeqKind::Convergent, FieldElem::zero(P5),
               GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat::plusInfinity(),
                        LinearRule{Rat(0), Rat(1)}));
    CHECK(ok.breadth() == ExtRat::plusInfinity());
    CHECK(ok.materialize(1) == FieldElem::fromRational(P5, Rat(5)));  // c_1 * 5^1

    CHECK_THROWS_AS(SeqSpec(SeqKind::Convergent, FieldElem::zero(P5),
                            GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(4),
                                     ExplicitRule{{Rat(0), Rat(1), Rat(2), Rat(3)}})),
                    DomainError);
}

TEST_CASE("coefficient streams") {
    CoeffStream ones{CoeffKind::Ones};
    CHECK(ones.at(BaseK{0}, 7) == Rat(1));
    CHECK(!ones.pairwiseDistinct());

    CoeffStream en{CoeffKind::Enumerate, {}, Rat(1, 2)};
    CHECK(en.at(BaseK{0}, 0) == Rat(1, 2));
    CHECK(en.at(BaseK{0}, 2) == Rat(3, 2));
    CHECK(en.pairwiseDistinct());

    CoeffStream cyc{CoeffKind::Cycle, {Rat(2), Rat(3)}};
    CHECK(cyc.at(BaseK{0}, 0) == Rat(2));
    CHECK(cyc.at(BaseK{0}, 3) == Rat(3));

    CoeffStream inv{CoeffKind::Cycle, {Rat(2), Rat(4)}, Rat(1), true};
    CHECK(inv.at(BaseK{0}, 0) == Rat(1, 2));
    CHECK(inv.at(BaseK{5}, 1) == Rat(4));  // 4^-1 = 4 mod 5
}

TEST_CASE("gauge-monomial perturbations keep the classification") {
    SeqSpec e(SeqKind::Convergent, FieldElem::zero(DQ),
              GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)}),
              CoeffStream{CoeffKind::Ones}, GaugeMonomialPert{Rat(1), Rat(1, 4)});
    CHECK(e.materialize(0) == parseElement(DQ, "1 + 1*t^(1/4)"));
    CHECK(e.gaugeAt(0) == ExtRat(0));
    CHECK(classify(prefix(e, 6)) == SeqKind::Convergent);

    CHECK_THROWS_AS(SeqSpec(SeqKind::Convergent, FieldElem::zero(DQ),
                            GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1),
                                     DyadicStepRule{Rat(1)}),
                            CoeffStream{CoeffKind::Ones}, GaugeMonomialPert{Rat(1), Rat(0)}),
                    DomainError);  // perturbation must sit strictly above the gauge
}

TEST_CASE("classify recovers each kind from a finite prefix") {
    SeqSpec conv = convUnit();
    CHECK(classify(prefix(conv, 4)) == SeqKind::Convergent);

    SeqSpec div(SeqKind::Divergent, FieldElem::zero(DQ),
                GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}));
    CHECK(classify(prefix(div, 5)) == SeqKind::Divergent);

    SeqSpec stat(SeqKind::Stationary, FieldElem::zero(DQ), GaugeGen::constant(Rat(1, 2)),
                 CoeffStream{CoeffKind::Enumerate});
    CHECK(classify(prefix(stat, 6)) == SeqKind::Stationary);

    // mixed differences: neither monotone nor constant
    std::vector<FieldElem> bad = {
        parseElement(DQ, "0"), parseElement(DQ, "1*t^(1)"),
        parseElement(DQ, "1*t^(1) + 1*t^(3)"), parseElement(DQ, "1*t^(1) + 1*t^(2)")};
    CHECK(classify(bad) == std::nullopt);

    CHECK_THROWS_AS(classify(prefix(conv, 3)), DomainError);  // too short
    std::vector<FieldElem> dup = {parseElement(DQ, "0"), parseElement(DQ, "1*t^(1)"),
                                  parseElement(DQ, "0"), parseElement(DQ, "2*t^(1)")};
    CHECK_THROWS_AS(classify(dup), DomainError);
}

TEST_CASE("equivalence is ball identity") {
    SeqSpec a = convUnit();
    // Same ball, different rule and coefficients.
    SeqSpec b(SeqKind::Convergent, FieldElem::zero(DQ),
              GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1, 2)}),
              CoeffStream{CoeffKind::Enumerate});
    CHECK(equivalent(a, b));

    // Center displaced by exactly the radius: still the same closed ball.
    SeqSpec c(SeqKind::Convergent, parseElement(DQ, "1*t^(1)"),
              GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)}));
    CHECK(equivalent(a, c));

    // Center displaced below the radius: different ball.
    SeqSpec d(SeqKind::Convergent, parseElement(DQ, "1*t^(1/2)"),
              GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)}));
    CHECK(!equivalent(a, d));

    // Same radius but open vs closed ball.
    SeqSpec e(SeqKind::Divergent, FieldElem::zero(DQ),
              GaugeGen(GaugeFamily::DescendTo, ExtRat(1), DyadicStepRule{Rat(1, 4)}));
    CHECK(!equivalent(a, e));
}

TEST_CASE("translate shifts the base and nothing else") {
    SeqSpec e = convUnit();
    FieldElem delta = parseElement(DQ, "2*t^(-1)");
    SeqSpec t = translate(e, delta);
    CHECK(t.materialize(3) == e.materialize(3) + delta);
    CHECK(t.breadth() == e.breadth());
    CHECK(!equivalent(e, t));
}

TEST_CASE("breadth ideal closed forms") {
    auto at = [](const char* text) { return parseElement(DQ, text); };

    SeqSpec conv = convUnit();
    CHECK(conv.breadthIdealContains(at("1*t^(1)")));          // v >= delta
    CHECK(!conv.breadthIdealContains(at("1*t^(7/8)")));
    CHECK(conv.breadthIdealContains(at("0")));

    SeqSpec div(SeqKind::Divergent, FieldElem::zero(DQ),
                GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}));
    // boundary at gamma_1 = -1/2, strict
    CHECK(div.breadthIdealContains(at("(1)/(1*t^(1/4))")));
    CHECK(!div.breadthIdealContains(at("(1)/(1*t^(1/2))")));

    SeqSpec stat(SeqKind::Stationary, FieldElem::zero(DQ), GaugeGen::constant(Rat(1, 2)),
                 CoeffStream{CoeffKind::Enumerate});
    CHECK(stat.breadthIdealContains(at("1*t^(5/8)")));
    CHECK(!stat.breadthIdealContains(at("1*t^(1/2)")));  // strict at gamma
}

TEST_CASE("gauge deviations are caught") {
    // A rule that silently repeats a value trips the monotonicity check
    // instead of emitting a term that would break the classification.
    GaugeGen g(GaugeFamily::ApproachFromBelow, ExtRat(1),
               ExplicitRule{{Rat(0), Rat(1, 2), Rat(1, 2), Rat(3, 4)}});
    SeqSpec e(SeqKind::Convergent, FieldElem::zero(DQ), g);
    CHECK_THROWS_AS(e.materialize(2), DomainError);
}
