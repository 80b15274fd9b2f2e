#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/extensions.hpp>
#include <pseudoval/literals.hpp>
#include <pseudoval/metrics.hpp>
#include <pseudoval/sequences.hpp>

using namespace pseudoval;

namespace {

const FieldConfig DQ = FieldConfig::parse("dyadic-q");

FieldElem el(const std::string& text) { return parseElement(DQ, text); }

// Convergent walk toward breadth 1 centered at 0.
SeqSpec convE() { return zConstruct(FieldElem::zero(DQ), ExtRat(1)); }

SeqSpec divE(const Rat& delta) {
    return SeqSpec(SeqKind::Divergent, FieldElem::zero(DQ),
                   GaugeGen(GaugeFamily::DescendTo, ExtRat(delta), DyadicStepRule{Rat(1)}));
}

} // namespace

TEST_CASE("limit valuation of linear polynomials") {
    SeqSpec e = convE();
    CHECK(limitValuation(e, RatFunc::linear(el("0"))).value == ExtRat(1));
    CHECK(limitValuation(e, RatFunc::linear(el("1*t^(1/2)"))).value == ExtRat(Rat(1, 2)));
    CHECK(limitValuation(e, RatFunc::linear(el("1*t^(2)"))).value == ExtRat(1));
    CHECK(!limitValuation(e, RatFunc::linear(el("0"))).heuristic);
}

TEST_CASE("ring membership on factored inputs is exact") {
    SeqSpec e = convE();
    FieldElem root = el("0");
    FieldElem scaleIn = el("(1)/(1*t^(1/2))");   // t^(-1/2)
    FieldElem scaleOut = el("1*t^(1/2)");

    // X / t^(1/2): A = -1/2, m = 1, A + m*delta = 1/2 > 0.
    Verdict in = ringContains(e, RatFunc::factored(scaleIn, {{root, 1}}));
    CHECK(in.value);
    CHECK(!in.heuristic);

    // t^(1/2) / X: A = 1/2, m = -1, A + m*delta = -1/2 < 0.
    Verdict out = ringContains(e, RatFunc::factored(scaleOut, {{root, -1}}));
    CHECK(!out.value);
    CHECK(!out.heuristic);
}

TEST_CASE("membership analysis separates the out part from the ball multiplicity") {
    SeqSpec e = convE();
    FieldElem far = el("1*t^(-1)");   // v(base - far) = -1, outside the ball

    RatFunc phi = RatFunc::factored(el("1*t^(2)"), {{el("0"), 1}, {far, 2}});
    MembershipAnalysis a = analyzeFactored(e, phi);
    CHECK(a.outPart == Rat(0));        // 2 + 2 * (-1)
    CHECK(a.ballMultiplicity == 1);
    CHECK(a.limitValue == ExtRat(1));  // A + m * delta
    CHECK(a.contains);
    CHECK(a.windowStart == 0);
}

TEST_CASE("boundary ties follow the ball orientation") {
    SeqSpec conv = convE();
    FieldElem root = el("0");

    // Convergent, m > 0, A + m*delta = 0: the limit is approached from below.
    RatFunc up = RatFunc::factored(el("(1)/(1*t^(1))"), {{root, 1}});
    CHECK(!ringContains(conv, up).value);
    // m < 0, same tie: approached from above.
    RatFunc down = RatFunc::factored(el("1*t^(1)"), {{root, -1}});
    CHECK(ringContains(conv, down).value);

    // Divergent mirrors both verdicts.
    SeqSpec div = divE(Rat(1));
    CHECK(ringContains(div, up).value);
    CHECK(!ringContains(div, down).value);

    // Stationary: the tie is attained exactly, so w_E(phi) = 0 lies inside.
    SeqSpec stat(SeqKind::Stationary, FieldElem::zero(DQ), GaugeGen::constant(Rat(1)),
                 CoeffStream{CoeffKind::Enumerate});
    CHECK(ringContains(stat, up).value);
    CHECK(ringContains(stat, down).value);
}

TEST_CASE("window oracle agrees with the closed form") {
    SeqSpec e = convE();
    for (const RatFunc& phi : {RatFunc::linear(el("0")),
                               RatFunc::factored(el("1*t^(1/2)"), {{el("0"), -1}}),
                               RatFunc::factored(el("(1)/(1*t^(1))"), {{el("0"), 1}})}) {
        MembershipAnalysis a = analyzeFactored(e, phi);
        WindowReport w = windowOracle(e, phi, a.windowStart);
        CHECK(w.limitValue == a.limitValue);
        CHECK(w.contains == a.contains);
    }
}

TEST_CASE("window start skips out-of-ball interference") {
    SeqSpec e = convE();
    // Root at s_2 collides with early samples; the analysis must start past it.
    FieldElem nearMiss = e.materialize(2);
    RatFunc phi = RatFunc::factored(FieldElem::one(DQ), {{nearMiss, 1}, {el("0"), 1}});
    MembershipAnalysis a = analyzeFactored(e, phi);
    CHECK(a.windowStart > 2);
    WindowReport w = windowOracle(e, phi, a.windowStart);
    CHECK(w.limitValue == a.limitValue);
}

TEST_CASE("raw mode is windowed and flagged heuristic") {
    SeqSpec e = convE();
    // X + 1: the root sits far outside the ball, so v(s_n + 1) = 0 for every
    // sample and the window stabilizes immediately.
    RatFunc stable = RatFunc::raw(DQ, {el("1"), el("1")}, {el("1")});
    Verdict v = ringContains(e, stable);
    CHECK(v.value);
    CHECK(v.heuristic);

    LimitResult lim = limitValuation(e, stable);
    CHECK(lim.value == ExtRat(0));
    CHECK(lim.heuristic);

    // t^(-1) / (X + 1) stabilizes at -1 < 0.
    RatFunc neg = RatFunc::raw(DQ, {el("(1)/(1*t^(1))")}, {el("1"), el("1")});
    Verdict w = ringContains(e, neg);
    CHECK(!w.value);
    CHECK(w.heuristic);
}

TEST_CASE("non-stabilizing raw input raises WindowError") {
    SeqSpec e = convE();
    // Raw X - 0: v(s_n) = gamma_n climbs forever, so no tail of eight samples
    // ever agrees. The factored form of the same function is exact instead.
    RatFunc rawX = RatFunc::raw(DQ, {el("0"), el("1")}, {el("1")});
    CHECK_THROWS_AS(limitValuation(e, rawX), WindowError);
    CHECK_THROWS_AS(ringContains(e, rawX), WindowError);
    CHECK(limitValuation(e, RatFunc::linear(el("0"))).value == ExtRat(1));
}

TEST_CASE("omega membership") {
    SeqSpec e = convE();
    CHECK(omegaContains(e, el("1*t^(1/4)"), ExtRat(Rat(1, 2))));   // w = 1/4 <= 1/2
    CHECK(!omegaContains(e, el("1*t^(1/4)"), ExtRat(Rat(1, 8))));  // w = 1/4 > 1/8
    CHECK(!omegaContains(e, el("0"), ExtRat(Rat(1, 2))));          // w = delta = 1
    CHECK(omegaContains(e, el("0"), ExtRat(1)));
}

TEST_CASE("reciprocal substitution pairs with sequence inversion") {
    SeqSpec base = divE(Rat(-1));
    SeqSpec inv = invertSequence(base);

    RatFunc phi = RatFunc::factored(el("1*t^(2)"), {{el("1*t^(1)"), 1}});
    RatFunc sub = phi.reciprocalSubstitution();
    Verdict direct = ringContains(base, phi);
    Verdict mirrored = ringContains(inv, sub);
    CHECK(direct.value == mirrored.value);

    RatFunc psi = RatFunc::factored(el("(1)/(1*t^(3))"), {{el("1*t^(1)"), -2}});
    CHECK(ringContains(base, psi).value == ringContains(inv, psi.reciprocalSubstitution()).value);
}

TEST_CASE("ExtRing caches the limit ball and compares by equivalence") {
    ExtRing a(convE());
    ExtRing b(SeqSpec(SeqKind::Convergent, FieldElem::zero(DQ),
                      GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1),
                               DyadicStepRule{Rat(1, 2)}),
              CoeffStream{CoeffKind::Enumerate}));
    CHECK(a == b);
    CHECK(a.breadth() == ExtRat(1));
    CHECK(a.limits().boundary == BallBoundary::Closed);
    CHECK(a.contains(RatFunc::linear(el("0"))).value);

    ExtRing c(divE(Rat(1)));
    CHECK(!(a == c));
}

TEST_CASE("RatFunc string forms") {
    RatFunc lin = RatFunc::scaledLinear(el("0"), el("1*t^(1/2)"));
    CHECK(parseRatFunc(DQ, lin.str()).str() == lin.str());

    RatFunc raw = RatFunc::raw(DQ, {el("0"), el("1")}, {el("1")});
    CHECK(parseRatFunc(DQ, raw.str()).str() == raw.str());

    // fraction-valued coefficients survive the echo
    RatFunc frac = RatFunc::raw(DQ, {el("(1)/(1*t^(1))"), el("2")}, {el("1"), el("1")});
    CHECK(parseRatFunc(DQ, frac.str()).str() == frac.str());

    // over a p-adic base the coefficients are plain rationals
    FieldConfig p5 = FieldConfig::parse("padic-5");
    RatFunc pr = RatFunc::raw(
        p5, {FieldElem::fromRational(p5, Rat(3, 2)), FieldElem::fromRational(p5, Rat(5))},
        {FieldElem::fromRational(p5, Rat(1))});
    CHECK(parseRatFunc(p5, pr.str()).str() == pr.str());

    // comma rows still parse and mean the same polynomial
    CHECK(parseRatFunc(DQ, "[0, 1] / [1]").str() == raw.str());
    CHECK_THROWS_AS(parseRatFunc(DQ, "[(1)*X^0] / [1]"), ParseError);
}
