#include <doctest.h>

#include <pseudoval/documents.hpp>
#include <pseudoval/errors.hpp>
#include <pseudoval/literals.hpp>
#include <pseudoval/metrics.hpp>

using namespace pseudoval;

namespace {

const FieldConfig DQ = FieldConfig::parse("dyadic-q");

// Canonical-form invariant: a doc printed from a parsed doc is bytewise stable.
void checkStable(const std::string& doc) {
    SeqSpec once = seqSpecFromDoc(doc);
    CHECK(seqSpecToDoc(seqSpecFromDoc(seqSpecToDoc(once))) == seqSpecToDoc(once));
}

} // namespace

TEST_CASE("element documents") {
    for (const char* cfg : {"dyadic-q", "dyadic-f5", "padic-7"}) {
        FieldConfig c = FieldConfig::parse(cfg);
        FieldElem e = c.kind() == FieldConfig::Kind::PAdic
                          ? FieldElem::fromRational(c, Rat(21, 4))
                          : parseElement(c, "2*t^(1/2) + 1");
        FieldElem back = elementFromDoc(elementToDoc(e));
        CHECK(back == e);
        CHECK(back.config() == c);
    }
    CHECK_THROWS_AS(elementFromDoc("{\"config\":\"dyadic-q\"}"), DomainError);
    CHECK_THROWS_AS(elementFromDoc("not json"), ParseError);
}

TEST_CASE("sequence documents cover every gauge rule") {
    FieldElem zero = FieldElem::zero(DQ);

    SeqSpec halfStep = zConstruct(zero, ExtRat(1));
    SeqSpec truncation = zConstruct(zero, ExtRat(Rat(1, 3)));
    SeqSpec cauchy = zConstruct(FieldElem::zero(FieldConfig::parse("padic-5")),
                                ExtRat::plusInfinity());
    SeqSpec explicitRule(SeqKind::Convergent, zero,
                         GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1),
                                  ExplicitRule{{Rat(0), Rat(1, 2), Rat(5, 8), Rat(3, 4)}}));
    SeqSpec stationary(SeqKind::Stationary, zero, GaugeGen::constant(Rat(1, 2)),
                       CoeffStream{CoeffKind::Enumerate});
    SeqSpec divergent(SeqKind::Divergent, zero,
                      GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}),
                      CoeffStream{CoeffKind::Cycle, {Rat(2), Rat(3)}});
    SeqSpec perturbed(SeqKind::Convergent, zero,
                      GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(1), DyadicStepRule{Rat(1)}),
                      CoeffStream{CoeffKind::Ones}, GaugeMonomialPert{Rat(2), Rat(1, 4)});

    for (const SeqSpec* s : {&halfStep, &truncation, &cauchy, &explicitRule, &stationary,
                             &divergent, &perturbed}) {
        SeqSpec back = seqSpecFromDoc(seqSpecToDoc(*s));
        CHECK(back.kind() == s->kind());
        CHECK(back.base() == s->base());
        CHECK(equivalent(back, *s));
        for (std::size_t n = 0; n < 4; ++n)
            CHECK(back.materialize(n) == s->materialize(n));
        checkStable(seqSpecToDoc(*s));
    }
}

TEST_CASE("scaled and inverted specs survive the document round-trip") {
    SeqSpec src = zConstruct(parseElement(DQ, "1*t^(1/4)"), ExtRat(1));
    SeqSpec scaled = scaleSpec(parseElement(DQ, "1*t^(1) + 1*t^(2)"), src);
    SeqSpec back = seqSpecFromDoc(seqSpecToDoc(scaled));
    for (std::size_t n = 0; n < 5; ++n)
        CHECK(back.materialize(n) == scaled.materialize(n));
    checkStable(seqSpecToDoc(scaled));

    SeqSpec div(SeqKind::Divergent, FieldElem::zero(DQ),
                GaugeGen(GaugeFamily::DescendTo, ExtRat(-1), DyadicStepRule{Rat(1)}));
    SeqSpec inv = invertSequence(div);
    SeqSpec invBack = seqSpecFromDoc(seqSpecToDoc(inv));
    for (std::size_t n = 0; n < 5; ++n)
        CHECK(invBack.materialize(n) == inv.materialize(n));
    checkStable(seqSpecToDoc(inv));
}

TEST_CASE("sequence documents reject malformed input") {
    CHECK_THROWS_AS(seqSpecFromDoc("{"), ParseError);
    CHECK_THROWS_AS(seqSpecFromDoc("{\"config\":\"dyadic-q\",\"kind\":\"sideways\","
                                   "\"base\":\"0\",\"gauge\":{\"family\":\"approach\","
                                   "\"target\":\"1\",\"rule\":\"dyadic-step\"}}"),
                    DomainError);
    // structurally fine, semantically invalid: stationary over a finite residue field
    CHECK_THROWS_AS(seqSpecFromDoc("{\"config\":\"dyadic-f5\",\"kind\":\"stationary\","
                                   "\"base\":\"0\",\"gauge\":{\"family\":\"constant\","
                                   "\"target\":\"1\",\"rule\":[]},\"coeffs\":\"enumerate\"}"),
                    DomainError);
}

TEST_CASE("lambda space documents") {
    LambdaSpace s(ExtRat(0), ExtRat(1),
                  {{Rat(1, 2), 1}, {Rat(1, 4), 2}, {Rat(3, 4), 3}});
    LambdaSpace back = lambdaSpaceFromDoc(lambdaSpaceToDoc(s));
    CHECK(back.lower() == s.lower());
    CHECK(back.upper() == s.upper());
    REQUIRE(back.points().size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.points()[i].value == s.points()[i].value);
        CHECK(back.points()[i].index == s.points()[i].index);
    }
    CHECK(lambdaSpaceToDoc(back) == lambdaSpaceToDoc(s));

    // unbounded-below space
    LambdaSpace open(ExtRat::minusInfinity(), ExtRat(0), {{Rat(-3), 1}});
    CHECK(lambdaSpaceFromDoc(lambdaSpaceToDoc(open)).lower() == ExtRat::minusInfinity());
}

TEST_CASE("xad documents") {
    FieldElem alpha = parseElement(DQ, "1*t^(1/2)");
    FieldElem c = parseElement(DQ, "1*t^(1)");

    for (XadDescriptor d : {XadDescriptor{alpha, c, XadMarker::StationaryF},
                            XadDescriptor{alpha, c, XadMarker::ConvergentE},
                            XadDescriptor{alpha, c, parseElement(DQ, "3")}}) {
        XadDescriptor back = xadFromDoc(xadToDoc(d));
        CHECK(back.alpha == d.alpha);
        CHECK(back.c == d.c);
        CHECK(back.z.index() == d.z.index());
        CHECK(xadMap(back) == xadMap(d));
        CHECK(xadToDoc(back) == xadToDoc(d));
    }

    CHECK_THROWS_AS(xadFromDoc("{\"config\":\"dyadic-q\",\"alpha\":\"0\",\"c\":\"1\","
                               "\"z\":\"bogus-marker\"}"),
                    ParseError);
}
