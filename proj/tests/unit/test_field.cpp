#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/field.hpp>
#include <pseudoval/literals.hpp>

using namespace pseudoval;

namespace {
FieldElem el(const FieldConfig& cfg, const std::string& text) { return parseElement(cfg, text); }
}

TEST_CASE("FieldConfig parsing and classification") {
    FieldConfig p5 = FieldConfig::parse("padic-5");
    CHECK(p5.kind() == FieldConfig::Kind::PAdic);
    CHECK(p5.prime() == 5);
    CHECK(!p5.denseValueGroup());
    CHECK(!p5.infiniteResidueField());
    CHECK(p5.residueField().p == 5);
    CHECK(p5.str() == "padic-5");

    FieldConfig dq = FieldConfig::parse("dyadic-q");
    CHECK(dq.kind() == FieldConfig::Kind::DyadicT);
    CHECK(dq.denseValueGroup());
    CHECK(dq.infiniteResidueField());
    CHECK(dq.str() == "dyadic-q");

    FieldConfig df5 = FieldConfig::parse("dyadic-f5");
    CHECK(df5.denseValueGroup());
    CHECK(!df5.infiniteResidueField());
    CHECK(df5.residueField().p == 5);

    CHECK_THROWS_AS(FieldConfig::parse("padic-4"), DomainError);     // not prime
    CHECK_THROWS_AS(FieldConfig::parse("dyadic-f4"), DomainError);   // not prime
    CHECK_THROWS_AS(FieldConfig::parse("padic-x"), ParseError);
    CHECK_THROWS_AS(FieldConfig::parse("triadic-q"), ParseError);
}

TEST_CASE("value group membership") {
    FieldConfig p5 = FieldConfig::parse("padic-5");
    CHECK(p5.valueGroupContains(Rat(3)));
    CHECK(p5.valueGroupContains(Rat(-7)));
    CHECK(!p5.valueGroupContains(Rat(1, 2)));

    FieldConfig dq = FieldConfig::parse("dyadic-q");
    CHECK(dq.valueGroupContains(Rat(3, 4)));
    CHECK(dq.valueGroupContains(Rat(-5, 32)));
    CHECK(!dq.valueGroupContains(Rat(1, 3)));
}

TEST_CASE("BaseK prime-field arithmetic") {
    BaseK f5{5};
    CHECK(f5.normalize(Rat(7)) == Rat(2));
    CHECK(f5.normalize(Rat(-1)) == Rat(4));
    CHECK(f5.normalize(Rat(1, 2)) == Rat(3));  // 2^-1 = 3 mod 5
    CHECK(f5.inv(Rat(2)) == Rat(3));
    CHECK(f5.neg(Rat(2)) == Rat(3));
    CHECK(f5.mul(Rat(3), Rat(4)) == Rat(2));
    CHECK_THROWS_AS(f5.inv(Rat(0)), DomainError);
    CHECK_THROWS_AS(f5.normalize(Rat(1, 5)), DomainError);

    BaseK q{0};
    CHECK(q.normalize(Rat(7, 3)) == Rat(7, 3));
    CHECK(q.inv(Rat(-2)) == Rat(-1, 2));
    CHECK(q.str() == "q");
    CHECK(f5.str() == "f5");
}

TEST_CASE("p-adic elements") {
    FieldConfig p5 = FieldConfig::parse("padic-5");
    FieldElem a = FieldElem::fromRational(p5, Rat(50));
    CHECK(a.valuation() == ExtRat(2));
    CHECK(FieldElem::fromRational(p5, Rat(1, 5)).valuation() == ExtRat(-1));
    CHECK(FieldElem::zero(p5).valuation() == ExtRat::plusInfinity());

    FieldElem x = FieldElem::fromRational(p5, Rat(3, 2));
    CHECK(x.residue() == Rat(4));  // 3 * 2^-1 = 3 * 3 = 9 = 4 mod 5
    CHECK(x * x.inverse() == FieldElem::one(p5));
    CHECK((x - x.standardPart()).valuation() > x.valuation());

    CHECK_THROWS_AS(FieldElem::fromRational(p5, Rat(1, 5)).residue(), DomainError);
    CHECK_THROWS_AS(FieldElem::zero(p5).inverse(), DomainError);

    CHECK(parseElement(p5, x.str()) == x);
}

TEST_CASE("dyadic-t elements") {
    FieldConfig dq = FieldConfig::parse("dyadic-q");
    FieldElem u = el(dq, "1*t^(1/2)");
    FieldElem one = FieldElem::one(dq);

    CHECK(u.valuation() == ExtRat(Rat(1, 2)));
    CHECK((u + one).valuation() == ExtRat(0));
    CHECK((u * u).valuation() == ExtRat(1));
    CHECK((u + one) * (u - one) == el(dq, "1*t^(1) + -1"));
    CHECK((one / u).valuation() == ExtRat(Rat(-1, 2)));

    // residue and leading data
    CHECK((u + one).residue() == Rat(1));
    CHECK(el(dq, "3*t^(-1/4) + 2").leadingCoeff() == Rat(3));
    FieldElem y = el(dq, "3*t^(-1/4) + 2");
    CHECK((y - y.standardPart()).valuation() > y.valuation());

    // fractions cancel
    CHECK(el(dq, "(1*t^(1))/(1*t^(1))") == one);
    CHECK(el(dq, "(1*t^(3/2))/(1*t^(1/2))") == el(dq, "1*t^(1)"));

    CHECK_THROWS_AS(el(dq, "1*t^(-1/2)").residue(), DomainError);
    CHECK_THROWS_AS(FieldElem::monomial(dq, Rat(1), Rat(1, 3)), DomainError);
}

TEST_CASE("dyadic coefficients over f5 are reduced") {
    FieldConfig df5 = FieldConfig::parse("dyadic-f5");
    CHECK(FieldElem::monomial(df5, Rat(7), Rat(1, 2)) ==
          FieldElem::monomial(df5, Rat(2), Rat(1, 2)));
    CHECK(FieldElem::monomial(df5, Rat(5), Rat(1, 2)).isZero());
    FieldElem z = el(df5, "4*t^(1/2) + 1");
    CHECK((z + el(df5, "1*t^(1/2)")) == FieldElem::one(df5));
}

TEST_CASE("element literals report failure positions") {
    FieldConfig dq = FieldConfig::parse("dyadic-q");
    CHECK_THROWS_AS(el(dq, "t"), ParseError);
    CHECK_THROWS_AS(el(dq, "1*t^"), ParseError);
    CHECK_THROWS_AS(el(dq, ""), ParseError);

    try {
        el(dq, "1*t^(1/2) + !");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
        CHECK(std::string(e.what()).find("offset 12") != std::string::npos);
    }
}

TEST_CASE("monomials are rejected over p-adic fields") {
    FieldConfig p5 = FieldConfig::parse("padic-5");
    CHECK_THROWS_AS(FieldElem::monomial(p5, Rat(1), Rat(1)), DomainError);
}

TEST_CASE("element strings round-trip") {
    FieldConfig dq = FieldConfig::parse("dyadic-q");
    for (const char* text : {"0", "1*t^(1/2) + 2", "(1)/(1*t^(1/2))",
                             "-3/2*t^(-1) + 1*t^(1/4) + 5"}) {
        FieldElem v = el(dq, text);
        CHECK(parseElement(dq, v.str()) == v);
    }
}
