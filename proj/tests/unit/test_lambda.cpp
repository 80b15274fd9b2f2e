#include <doctest.h>

#include <pseudoval/errors.hpp>
#include <pseudoval/lambda_topology.hpp>

using namespace pseudoval;

namespace {

// (0, 1] with marks 1/2, 1/4, 3/4 enumerated in that order.
LambdaSpace unitSpace() {
    return LambdaSpace(ExtRat(0), ExtRat(1),
                       {{Rat(1, 2), 1}, {Rat(1, 4), 2}, {Rat(3, 4), 3}});
}

} // namespace

TEST_CASE("space validation") {
    CHECK_THROWS_AS(LambdaSpace(ExtRat(1), ExtRat(0), {}), DomainError);
    CHECK_THROWS_AS(LambdaSpace(ExtRat(0), ExtRat(1), {{Rat(2), 1}}), DomainError);
    CHECK_THROWS_AS(LambdaSpace(ExtRat(0), ExtRat(1), {{Rat(0), 1}}), DomainError);  // open end
    CHECK_THROWS_AS(LambdaSpace(ExtRat(0), ExtRat(1), {{Rat(1, 2), 0}}), DomainError);
    CHECK_THROWS_AS(LambdaSpace(ExtRat(0), ExtRat(1), {{Rat(1, 2), 1}, {Rat(1, 4), 1}}),
                    DomainError);  // duplicate index
    CHECK_THROWS_AS(LambdaSpace(ExtRat(0), ExtRat(1), {{Rat(1, 2), 1}, {Rat(1, 2), 2}}),
                    DomainError);  // duplicate mark

    LambdaSpace s = unitSpace();
    CHECK(s.containsPoint(Rat(1)));
    CHECK(!s.containsPoint(Rat(0)));
    CHECK(!s.containsPoint(Rat(5, 4)));
    CHECK(markWeight(s.points()[1]) == Rat(1, 2));
}

TEST_CASE("lambda distance scans [min, max)") {
    LambdaSpace s = unitSpace();

    LambdaDistance d = lambdaDist(s, Rat(3, 10), Rat(3, 5));
    CHECK(d.value == Rat(1));        // only the mark 1/2 (weight 1) is hit
    CHECK(!d.degenerate);

    // order of the arguments is irrelevant
    CHECK(lambdaDist(s, Rat(3, 5), Rat(3, 10)).value == Rat(1));

    // [1/5, 3/10) catches only 1/4 (weight 1/2)
    CHECK(lambdaDist(s, Rat(1, 5), Rat(3, 10)).value == Rat(1, 2));

    // [3/5, 7/10) contains no mark: degenerate zero between distinct points
    LambdaDistance z = lambdaDist(s, Rat(3, 5), Rat(7, 10));
    CHECK(z.value == Rat(0));
    CHECK(z.degenerate);

    // x == y: zero but not degenerate
    LambdaDistance e = lambdaDist(s, Rat(3, 5), Rat(3, 5));
    CHECK(e.value == Rat(0));
    CHECK(!e.degenerate);

    // the left endpoint of the scan is included: d(1/4, 2/5) sees the mark at 1/4
    CHECK(lambdaDist(s, Rat(1, 4), Rat(2, 5)).value == Rat(1, 2));
    // ... but the right endpoint is not: d(1/10, 1/4) stops short of it
    LambdaDistance r = lambdaDist(s, Rat(1, 10), Rat(1, 4));
    CHECK(r.value == Rat(0));
    CHECK(r.degenerate);

    CHECK_THROWS_AS(lambdaDist(s, Rat(0), Rat(1, 2)), DomainError);  // 0 outside
}

TEST_CASE("open balls are half-open intervals") {
    LambdaSpace s = unitSpace();

    // Frozen case: marks of weight >= 9/10 near 3/5 are only the weight-1 mark 1/2.
    CHECK(ballToInterval(s, Rat(3, 5), Rat(9, 10)) == HalfOpen{ExtRat(Rat(1, 2)), ExtRat(1)});

    // A huge radius swallows every mark: the ball is the whole space.
    CHECK(ballToInterval(s, Rat(3, 5), Rat(2)) == HalfOpen{ExtRat(0), ExtRat(1)});

    // A mark at x itself caps the ball from above.
    CHECK(ballToInterval(s, Rat(1, 2), Rat(1, 2)) ==
          HalfOpen{ExtRat(Rat(1, 4)), ExtRat(Rat(1, 2))});

    // Small radius at a low point: bounded below by the heavy mark at 1/4.
    CHECK(ballToInterval(s, Rat(3, 10), Rat(1, 2)) ==
          HalfOpen{ExtRat(Rat(1, 4)), ExtRat(Rat(1, 2))});

    CHECK_THROWS_AS(ballToInterval(s, Rat(2), Rat(1)), DomainError);
    CHECK_THROWS_AS(ballToInterval(s, Rat(1, 2), Rat(0)), DomainError);

    // Every ball contains its center.
    for (long num = 1; num <= 4; ++num)
        CHECK(ballToInterval(s, Rat(num, 4), Rat(1, 3)).contains(Rat(num, 4)));
}

TEST_CASE("cover family and witness") {
    LambdaSpace s = unitSpace();
    std::vector<Rat> gammas = {Rat(1, 4), Rat(1, 8), Rat(1, 16)};

    CHECK(coverSet(s, gammas, 1) == HalfOpen{ExtRat(Rat(1, 4)), ExtRat(1)});
    CHECK(coverSet(s, gammas, 2) == HalfOpen{ExtRat(Rat(1, 8)), ExtRat(Rat(1, 4))});
    CHECK(coverSet(s, gammas, 3) == HalfOpen{ExtRat(Rat(1, 16)), ExtRat(Rat(1, 8))});
    CHECK_THROWS_AS(coverSet(s, gammas, 0), DomainError);
    CHECK_THROWS_AS(coverSet(s, gammas, 4), DomainError);

    // Witness sits below every chosen member: gamma_{max(chosen)+1}.
    CHECK(coverWitness(s, gammas, {1, 2}) == Rat(1, 16));
    CHECK(coverWitness(s, gammas, {1}) == Rat(1, 8));
    CHECK(coverWitness(s, gammas, {}) == Rat(1, 4));
    CHECK(coverWitness(s, gammas, {2, 1}) == Rat(1, 16));  // order-insensitive
    for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
        Rat w = coverWitness(s, gammas, {1, 2});
        CHECK(!coverSet(s, gammas, k).contains(w));
    }

    // The witness pool runs out when the whole prefix is chosen.
    CHECK_THROWS_AS(coverWitness(s, gammas, {1, 2, 3}), DomainError);
    CHECK_THROWS_AS(coverWitness(s, gammas, {5}), DomainError);

    // Gammas must decrease strictly inside (a, b).
    CHECK_THROWS_AS(coverSet(s, {Rat(1, 4), Rat(1, 4)}, 1), DomainError);
    CHECK_THROWS_AS(coverSet(s, {Rat(1)}, 1), DomainError);
    CHECK_THROWS_AS(coverWitness(s, {}, {}), DomainError);
}
