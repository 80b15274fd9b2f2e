#include "pseudoval/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "pseudoval/errors.hpp"
#include "pseudoval/lambda_topology.hpp"
#include "pseudoval/literals.hpp"
#include "pseudoval/metrics.hpp"
#include "pseudoval/residue_zar.hpp"

namespace pseudoval {
namespace {

// Deterministic across platforms: raw mt19937_64 words with explicit modulo.
// std:: distributions are implementation-defined and would break byte-identical
// reports between toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t word() { return eng_(); }
    long below(long n) { return static_cast<long>(word() % static_cast<std::uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool chance(long percent) { return below(100) < percent; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<long>(v.size())))];
    }

private:
    std::mt19937_64 eng_;
};

std::uint64_t mixSeed(std::uint64_t seed, int salt) {
    return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(salt + 1));
}

struct Suite {
    SuiteResult result;

    explicit Suite(std::string name) { result.name = std::move(name); }

    void addCase() { ++result.cases; }
    void require(bool ok, const std::string& what) {
        if (ok) return;
        ++result.failures;
        if (result.notes.size() < 5) result.notes.push_back(what);
    }
};

template <typename F>
SuiteResult timedSuite(const std::string& name, F&& body) {
    Suite s(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(s);
    } catch (const std::exception& e) {
        ++s.result.failures;
        s.result.notes.push_back(std::string("aborted: ") + e.what());
    }
    s.result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::move(s.result);
}

// --- shared generators -------------------------------------------------------

const FieldConfig& dyadicQ() {
    static const FieldConfig cfg = FieldConfig::dyadicOverQ();
    return cfg;
}
const FieldConfig& padic5() {
    static const FieldConfig cfg = FieldConfig::padic(5);
    return cfg;
}
const FieldConfig& dyadicF5() {
    static const FieldConfig cfg = FieldConfig::dyadicOverFp(5);
    return cfg;
}

Rat smallRat(Rng& g, bool nonzero) {
    long num = g.range(-9, 9);
    while (nonzero && num == 0) num = g.range(-9, 9);
    return Rat(num, g.range(1, 9));
}

// Exponent in the dyadic value group, k / 2^e.
Rat dyadicExp(Rng& g, long lo = -8, long hi = 8) {
    return Rat(g.range(lo, hi), 1L << g.range(0, 3));
}

// Nonzero coefficient usable by the config's coefficient field: a unit for PAdic
// (the stream term must have valuation exactly gamma_n), 1..p-1 for F_p.
Rat coeffFor(const FieldConfig& cfg, Rng& g) {
    BaseK k = cfg.coefficientField();
    if (k.p != 0) return Rat(g.range(1, static_cast<long>(k.p) - 1));
    if (cfg.kind() == FieldConfig::Kind::PAdic) {
        long p = static_cast<long>(cfg.prime());
        long num = g.range(1, 9), den = g.range(1, 9);
        while (num % p == 0) ++num;
        while (den % p == 0) ++den;
        return Rat(g.chance(50) ? num : -num, den);
    }
    return smallRat(g, true);
}

// coeff * u^exp where u is t over the dyadic fields and p over the p-adics
// (integral exp only there).
FieldElem uPow(const FieldConfig& cfg, const Rat& coeff, const Rat& exp) {
    if (cfg.kind() != FieldConfig::Kind::PAdic) return FieldElem::monomial(cfg, coeff, exp);
    if (!exp.isInteger()) throw DomainError("p-adic exponent must be integral");
    long e = static_cast<long>(exp.floor().get_si());
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(cfg.prime()),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    Rat step = e >= 0 ? Rat(mpq_class(pw)) : Rat(mpq_class(mpz_class(1), pw));
    return FieldElem::fromRational(cfg, coeff * step);
}

FieldElem randElem(const FieldConfig& cfg, Rng& g) {
    if (cfg.kind() == FieldConfig::Kind::PAdic)
        return FieldElem::fromRational(cfg, smallRat(g, false));
    long nterms = g.range(1, 3);
    FieldElem acc = FieldElem::zero(cfg);
    std::vector<Rat> used;
    for (long i = 0; i < nterms; ++i) {
        Rat exp = dyadicExp(g, -4, 6);
        if (std::find(used.begin(), used.end(), exp) != used.end()) continue;
        used.push_back(exp);
        acc = acc + uPow(cfg, coeffFor(cfg, g), exp);
    }
    return acc;
}

// Smallest quarter-integer (dyadic) / integer (padic) strictly above q.
Rat groupValueAbove(const FieldConfig& cfg, const Rat& q) {
    if (!cfg.denseValueGroup()) return Rat(mpq_class(q.floor() + 1));
    mpz_class f = (q * Rat(4)).floor();
    return Rat(mpq_class(f + 1)) / Rat(4);
}

// Group exponent >= bound (strict when asked, or when the bound is outside the group).
Rat groupValueAtLeast(const FieldConfig& cfg, const Rat& bound, bool strict, Rng& g) {
    if (!strict && cfg.valueGroupContains(bound) && g.chance(40)) return bound;
    Rat extra = cfg.denseValueGroup() ? Rat(g.below(3), 2) : Rat(g.below(2));
    return groupValueAbove(cfg, bound) + extra;
}

// Group exponent strictly below bound.
Rat groupValueBelow(const FieldConfig& cfg, const Rat& bound, Rng& g) {
    Rat down(g.range(1, 4), cfg.denseValueGroup() ? 2 : 1);
    if (cfg.valueGroupContains(bound)) return bound - down;
    return groupValueAbove(cfg, bound) - down - (cfg.denseValueGroup() ? Rat(1, 4) : Rat(0));
}

// Breadth for a convergent spec over cfg: PAdic only +inf; dyadic mixes dyadic
// rationals, thirds (usually outside the value group), and +inf.
ExtRat randConvBreadth(const FieldConfig& cfg, Rng& g) {
    if (!cfg.denseValueGroup()) return ExtRat::plusInfinity();
    switch (g.below(4)) {
        case 0: return ExtRat(dyadicExp(g, -2, 4));
        case 1: return ExtRat(Rat(g.range(-5, 5), 3));
        case 2: return ExtRat::plusInfinity();
        default: return ExtRat(Rat(1));
    }
}

CoeffStream randCoeffs(const FieldConfig& cfg, Rng& g) {
    CoeffStream c;
    long roll = g.below(3);
    if (roll == 1 && cfg == dyadicQ()) {
        c.kind = CoeffKind::Enumerate;
    } else if (roll == 2) {
        c.kind = CoeffKind::Cycle;
        long n = g.range(1, 3);
        for (long i = 0; i < n; ++i) c.cycle.push_back(coeffFor(cfg, g));
    }
    return c;
}

Perturbation maybePert(const FieldConfig& cfg, Rng& g, long percent = 30) {
    if (!g.chance(percent)) return {};
    Rat extra = cfg.denseValueGroup() ? Rat(g.range(1, 4), 2) : Rat(g.range(1, 2));
    return GaugeMonomialPert{coeffFor(cfg, g), extra};
}

GaugeGen convGauge(const FieldConfig& cfg, const ExtRat& delta, Rng& g) {
    if (delta.isPlusInfinity()) {
        Rat start = cfg.denseValueGroup() ? Rat(g.range(-4, 4), 2) : Rat(g.range(-2, 2));
        Rat step = cfg.denseValueGroup() ? Rat(g.range(1, 4), 2) : Rat(g.range(1, 3));
        return GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat::plusInfinity(),
                        LinearRule{start, step});
    }
    if (cfg.valueGroupContains(delta.finite()) && g.chance(50))
        return GaugeGen(GaugeFamily::ApproachFromBelow, delta,
                        DyadicStepRule{Rat(1, 1L << g.range(0, 2))});
    return GaugeGen(GaugeFamily::ApproachFromBelow, delta, BinaryTruncationRule{});
}

GaugeGen divGauge(const FieldConfig& cfg, const ExtRat& delta, Rng& g) {
    if (delta.isMinusInfinity()) {
        Rat start = cfg.denseValueGroup() ? Rat(g.range(-4, 4), 2) : Rat(g.range(-2, 2));
        Rat step = cfg.denseValueGroup() ? Rat(-g.range(1, 4), 2) : Rat(-g.range(1, 3));
        return GaugeGen(GaugeFamily::DescendTo, ExtRat::minusInfinity(), LinearRule{start, step});
    }
    if (cfg.valueGroupContains(delta.finite()) && g.chance(50))
        return GaugeGen(GaugeFamily::DescendTo, delta, DyadicStepRule{Rat(1, 1L << g.range(0, 2))});
    return GaugeGen(GaugeFamily::DescendTo, delta, BinaryTruncationRule{});
}

SeqSpec randConvSpec(const FieldConfig& cfg, const FieldElem& base, const ExtRat& delta, Rng& g,
                     long pertPercent = 30) {
    return SeqSpec(SeqKind::Convergent, base, convGauge(cfg, delta, g), randCoeffs(cfg, g),
                   maybePert(cfg, g, pertPercent));
}

SeqSpec randDivSpec(const FieldConfig& cfg, const FieldElem& base, const ExtRat& delta, Rng& g,
                    long pertPercent = 30) {
    return SeqSpec(SeqKind::Divergent, base, divGauge(cfg, delta, g), randCoeffs(cfg, g),
                   maybePert(cfg, g, pertPercent));
}

// Stationary specs exist only over an infinite residue field with pairwise-distinct
// coefficients; enumeration over Q is the canonical stream.
SeqSpec randStatSpec(const FieldElem& base, const Rat& gamma, Rng& g) {
    CoeffStream coeffs{CoeffKind::Enumerate, {}, smallRat(g, true), false};
    return SeqSpec(SeqKind::Stationary, base, GaugeGen::constant(gamma), coeffs, {});
}

// Pseudo-limit related to `beta`: equal ring (difference above the breadth),
// near miss (below the breadth), or fresh.
FieldElem relatedLimit(const FieldConfig& cfg, const FieldElem& beta, const ExtRat& delta,
                       Rng& g) {
    long roll = g.below(3);
    if (roll == 0) {  // equivalent
        if (!delta.isFinite()) return beta;
        Rat exp = groupValueAtLeast(cfg, delta.finite(), false, g);
        return beta + uPow(cfg, coeffFor(cfg, g), exp);
    }
    if (roll == 1 && delta > ExtRat(Rat(-100))) {  // close but distinct ring
        Rat ref = delta.isFinite() ? delta.finite() : Rat(8);
        return beta + uPow(cfg, coeffFor(cfg, g), groupValueBelow(cfg, ref, g));
    }
    return randElem(cfg, g);
}

// --- factored-function generator ----------------------------------------------

struct BallView {
    FieldElem center;
    ExtRat radius;
    bool openBall;  // divergent limit balls are open
};

BallView ballOf(const SeqSpec& e) {
    Ball b = e.pseudoLimitSet();
    return {b.center, b.radius, b.boundary == BallBoundary::Open};
}

// Root at a chosen position relative to the limit ball.
FieldElem randRoot(const SeqSpec& e, Rng& g) {
    const FieldConfig& cfg = e.config();
    BallView ball = ballOf(e);
    long roll = g.below(100);
    if (roll < 15) return ball.center;  // v = +inf, always in-ball
    if (!ball.radius.isFinite()) {
        // +inf: any offset lands outside; -inf: everything is inside.  Either way a
        // finite-valuation offset exercises the interesting sample arithmetic.
        Rat exp = cfg.denseValueGroup() ? dyadicExp(g, -4, 6) : Rat(g.range(-4, 6));
        return ball.center + uPow(cfg, coeffFor(cfg, g), exp);
    }
    Rat delta = ball.radius.finite();
    Rat exp;
    if (roll < 55) {  // outside
        exp = groupValueBelow(cfg, delta, g);
    } else if (roll < 90) {  // inside
        exp = groupValueAtLeast(cfg, delta, ball.openBall, g);
        if (ball.openBall && !(exp > delta)) exp = groupValueAbove(cfg, delta);
    } else {  // on the sphere v = delta (in-ball for closed, out for open)
        if (cfg.valueGroupContains(delta)) exp = delta;
        else exp = groupValueBelow(cfg, delta, g);
    }
    return ball.center + uPow(cfg, coeffFor(cfg, g), exp);
}

// Stationary cancellation root: hits the n-th materialized term exactly.
FieldElem cancellationRoot(const SeqSpec& e, Rng& g) {
    return e.materialize(static_cast<std::size_t>(g.below(10)));
}

ExtRat effectiveRadius(const SeqSpec& e) {
    return e.kind() == SeqKind::Stationary ? ExtRat(e.gaugeExpAt(0)) : e.breadth();
}

RatFunc randPhi(const SeqSpec& e, Rng& g, bool allowCancellation) {
    const FieldConfig& cfg = e.config();
    std::vector<FactoredFactor> factors;
    long nf = g.range(1, 3);
    for (long i = 0; i < nf; ++i) {
        FieldElem root = (allowCancellation && e.kind() == SeqKind::Stationary && g.chance(30))
                             ? cancellationRoot(e, g)
                             : randRoot(e, g);
        long exp = g.range(-2, 2);
        if (exp == 0) exp = 1;
        factors.push_back({std::move(root), exp});
    }
    FieldElem scale = uPow(cfg, coeffFor(cfg, g),
                                          cfg.denseValueGroup() ? dyadicExp(g, -6, 6)
                                                                : Rat(g.range(-6, 6)));
    RatFunc phi = RatFunc::factored(std::move(scale), std::move(factors));

    // Engineer an exact boundary tie A + m*delta = 0 when representable.
    ExtRat radius = effectiveRadius(e);
    if (radius.isFinite() && g.chance(40)) {
        MembershipAnalysis ana = analyzeFactored(e, phi);
        if (ana.ballMultiplicity != 0) {
            Rat target = -(ana.outPart +
                           ExtRat::mulInt(ana.ballMultiplicity, radius).finite());
            if (cfg.valueGroupContains(target) && !(target == Rat(0))) {
                FieldElem adjusted =
                    phi.scaleFactor() * uPow(cfg, Rat(1), target);
                phi = RatFunc::factored(std::move(adjusted), phi.factors());
            }
        }
    }
    return phi;
}

// Redraw knife-edge functions: at w_E(phi) = 0 with in-ball multiplicity != 0 the
// convergent and divergent rings over the same ball legitimately disagree, so
// identification batteries must avoid that ridge.
RatFunc randPhiAvoidingKnifeEdge(const SeqSpec& e, Rng& g) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatFunc phi = randPhi(e, g, false);
        MembershipAnalysis ana = analyzeFactored(e, phi);
        if (!(ana.limitValue == ExtRat(Rat(0)) && ana.ballMultiplicity != 0)) return phi;
    }
    return RatFunc::constant(FieldElem::one(e.config()));
}

// --- criterion 1: ultrametric axioms -------------------------------------------

void criterion1(Suite& s, Rng& g) {
    struct Cell {
        FieldConfig cfg;
        ExtRat delta;
    };
    const std::vector<Cell> cells = {
        {dyadicQ(), ExtRat(Rat(1))},
        {dyadicQ(), ExtRat(Rat(1, 3))},
        {dyadicQ(), ExtRat::plusInfinity()},
        {padic5(), ExtRat::plusInfinity()},  // discrete group: only the Cauchy cell exists
    };
    for (const Cell& cell : cells) {
        for (int i = 0; i < 200; ++i) {
            FieldElem b1 = randElem(cell.cfg, g);
            FieldElem b2 = relatedLimit(cell.cfg, b1, cell.delta, g);
            FieldElem b3 = relatedLimit(cell.cfg, b2, cell.delta, g);
            ExtRing A(randConvSpec(cell.cfg, b1, cell.delta, g));
            ExtRing B(randConvSpec(cell.cfg, b2, cell.delta, g));
            ExtRing C(randConvSpec(cell.cfg, b3, cell.delta, g));

            DistDesc ab = distDelta(A, B), ba = distDelta(B, A);
            DistDesc bc = distDelta(B, C), ac = distDelta(A, C);
            s.require(ab == ba, "symmetry failed at " + ab.str() + " vs " + ba.str());
            s.require(ab.isZero() == (A == B),
                      "zero-iff-equivalent failed for eta=" + ab.eta().str() +
                          " delta=" + ab.delta().str());
            DistDesc bound = std::max(ab, bc);
            s.require(ac <= bound,
                      "strong triangle failed: " + ac.str() + " > max(" + ab.str() + ", " +
                          bc.str() + ")");
            s.addCase();
        }
    }
}

// --- criterion 2: distance formula agreement -----------------------------------

// A different spec presenting the same ring: base displaced within the limit ball.
SeqSpec displacedWithin(const FieldConfig& cfg, const FieldElem& beta, const ExtRat& delta,
                        Rng& g) {
    FieldElem base = beta;
    if (delta.isFinite() && g.chance(70)) {
        Rat exp = groupValueAtLeast(cfg, delta.finite(), false, g);
        base = beta + uPow(cfg, coeffFor(cfg, g), exp);
    }
    return randConvSpec(cfg, base, delta, g);
}

void criterion2(Suite& s, Rng& g) {
    for (int i = 0; i < 300; ++i) {
        const FieldConfig& cfg = g.chance(75) ? dyadicQ() : padic5();
        ExtRat delta = randConvBreadth(cfg, g);
        FieldElem b1 = randElem(cfg, g);
        FieldElem b2 = relatedLimit(cfg, b1, delta, g);
        ExtRing W1(displacedWithin(cfg, b1, delta, g));
        ExtRing W2(displacedWithin(cfg, b2, delta, g));

        DistDesc viaRings = distDelta(W1, W2);
        DistDesc viaFormula = distPseudoLimitFormula(b1, b2, delta);
        s.require(viaRings == viaFormula,
                  "formula mismatch: rings " + viaRings.str() + " formula " + viaFormula.str());
        if (i % 10 == 0) {
            DistWindowResult w = distDeltaWindow(W1, W2);
            s.require(w.desc == viaRings,
                      "window oracle mismatch: " + w.desc.str() + " vs " + viaRings.str());
            s.require(!w.heuristic || w.desc.isZero(),
                      "window heuristic flag on a pinned nonzero distance");
        }
        s.addCase();
    }
}

// --- criterion 3: well-definedness under representative change ------------------

SeqSpec equivalentVariant(const SeqSpec& e, Rng& g) {
    const FieldConfig& cfg = e.config();
    switch (g.below(3)) {
        case 0:
            return SeqSpec(e.kind(), e.base(), e.gauge(), e.coeffs(), maybePert(cfg, g, 100));
        case 1: {
            if (!e.breadth().isFinite())
                return SeqSpec(e.kind(), e.base(), e.gauge(), randCoeffs(cfg, g),
                               e.perturbation());
            Rat exp = groupValueAtLeast(cfg, e.breadth().finite(), false, g);
            FieldElem base = e.base() + uPow(cfg, coeffFor(cfg, g), exp);
            return SeqSpec(e.kind(), base, e.gauge(), e.coeffs(), e.perturbation());
        }
        default:
            return SeqSpec(e.kind(), e.base(), convGauge(cfg, e.breadth(), g), e.coeffs(),
                           e.perturbation());
    }
}

void criterion3(Suite& s, Rng& g) {
    for (int i = 0; i < 100; ++i) {
        const FieldConfig& cfg = g.chance(80) ? dyadicQ() : padic5();
        ExtRat delta = randConvBreadth(cfg, g);
        FieldElem b1 = randElem(cfg, g);
        FieldElem b2 = relatedLimit(cfg, b1, delta, g);
        SeqSpec e = randConvSpec(cfg, b1, delta, g);
        SeqSpec f = randConvSpec(cfg, b2, delta, g);
        SeqSpec e2 = equivalentVariant(e, g);
        SeqSpec f2 = equivalentVariant(f, g);
        s.require(equivalent(e, e2) && equivalent(f, f2),
                  "variant generator broke ring equivalence");
        DistDesc d1 = distDelta(ExtRing(e), ExtRing(f));
        DistDesc d2 = distDelta(ExtRing(e2), ExtRing(f2));
        s.require(d1 == d2, "distance changed under representatives: " + d1.str() + " vs " +
                                d2.str());
        s.addCase();
    }
}

// --- criterion 4: similitude ----------------------------------------------------

void criterion4(Suite& s, Rng& g) {
    for (int i = 0; i < 100; ++i) {
        const FieldConfig& cfg = g.chance(80) ? dyadicQ() : padic5();
        ExtRat delta = randConvBreadth(cfg, g);
        FieldElem b1 = randElem(cfg, g);
        FieldElem b2 = relatedLimit(cfg, b1, delta, g);
        FieldElem c = randElem(cfg, g);
        while (c.isZero()) c = randElem(cfg, g);

        ExtRing E(randConvSpec(cfg, b1, delta, g));
        ExtRing F(randConvSpec(cfg, b2, delta, g));
        DistDesc d = distDelta(E, F);

        ExtRing sE = similitude(c, E), sF = similitude(c, F);
        ExtRat vc = c.valuation();
        DistDesc shifted(d.eta() + vc, d.delta() + vc);
        DistDesc actual = distDelta(sE, sF);
        s.require(actual == shifted,
                  "descriptor shift mismatch: " + actual.str() + " vs " + shifted.str());

        FieldElem cInv = FieldElem::one(cfg) / c;
        s.require(similitude(cInv, sE) == E, "inverse similitude is not the identity");
        s.addCase();
    }
}

// --- criterion 5: completion / density ------------------------------------------

void criterion5(Suite& s, Rng& g) {
    for (int i = 0; i < 50; ++i) {
        const FieldConfig& cfg = g.chance(85) ? dyadicQ() : padic5();
        ExtRat delta = randConvBreadth(cfg, g);
        FieldElem beta = randElem(cfg, g);
        SeqSpec spec = g.chance(50) ? zConstruct(beta, delta) : randConvSpec(cfg, beta, delta, g);
        ExtRing W(spec);

        for (std::size_t k = 0; k < 5; ++k) {
            Rat gamma = spec.gaugeExpAt(k);  // < delta and inside the value group
            FieldElem sn = spec.materialize(k + 1);
            ExtRing approx(zConstruct(sn, delta));
            DistDesc d = distDelta(W, approx);
            s.require(DistDesc::compare(d, DistDesc(ExtRat(gamma), delta)) < 0,
                      "approximant not strictly within DistDesc(" + gamma.str() + ", " +
                          delta.str() + "): got " + d.str());
        }
        s.addCase();
    }
}

// --- criterion 6: membership closed form vs window oracle -----------------------

SeqSpec randSpecAnyKind(Rng& g) {
    bool padic = g.chance(30);
    const FieldConfig& cfg = padic ? padic5() : dyadicQ();
    long kind = padic ? g.below(2) : g.below(3);
    FieldElem base = randElem(cfg, g);
    switch (kind) {
        case 0:
            return randConvSpec(cfg, base, randConvBreadth(cfg, g), g);
        case 1: {
            ExtRat delta = cfg.denseValueGroup() && g.chance(70)
                               ? ExtRat(g.chance(60) ? dyadicExp(g, -2, 4)
                                                     : Rat(g.range(-5, 5), 3))
                               : ExtRat::minusInfinity();
            return randDivSpec(cfg, base, delta, g);
        }
        default:
            return randStatSpec(base, dyadicExp(g, -2, 4), g);
    }
}

void criterion6(Suite& s, Rng& g) {
    for (int i = 0; i < 300; ++i) {
        SeqSpec e = randSpecAnyKind(g);
        bool cancel = std::holds_alternative<std::monostate>(e.perturbation());
        RatFunc phi = randPhi(e, g, cancel);

        Verdict closed = ringContains(e, phi);
        s.require(!closed.heuristic, "closed form flagged heuristic on factored input");
        MembershipAnalysis ana = analyzeFactored(e, phi);
        try {
            WindowReport w = windowOracle(e, phi, ana.windowStart);
            s.require(closed.value == w.contains,
                      "verdict disagreement on " + phi.str() + ": closed " +
                          (closed.value ? "in" : "out") + ", window " +
                          (w.contains ? "in" : "out"));
            s.require(w.limitValue == ana.limitValue,
                      "limit disagreement on " + phi.str() + ": " + ana.limitValue.str() +
                          " vs " + w.limitValue.str());
        } catch (const WindowError& err) {
            s.require(false, std::string("window oracle unstable: ") + err.what());
        }
        s.addCase();
    }
}

// --- criterion 7: sigma/omega preimage identity ----------------------------------

void criterion7(Suite& s, Rng& g) {
    for (int i = 0; i < 100; ++i) {
        const FieldConfig& cfg = g.chance(85) ? dyadicQ() : padic5();
        ExtRat delta = randConvBreadth(cfg, g);
        FieldElem beta = randElem(cfg, g);
        SeqSpec e = g.chance(50) ? zConstruct(beta, delta) : randConvSpec(cfg, beta, delta, g);

        Rat gamma;  // threshold; need not lie in the value group
        if (delta.isFinite()) {
            switch (g.below(4)) {
                case 0: gamma = delta.finite(); break;
                case 1: gamma = delta.finite() - Rat(1); break;
                case 2: gamma = delta.finite() + Rat(1, 2); break;
                default: gamma = delta.finite() + smallRat(g, false); break;
            }
        } else {
            gamma = smallRat(g, false) + Rat(g.range(0, 6));
        }

        FieldElem t = beta;
        if (g.chance(85)) {
            Rat exp = groupValueAbove(cfg, gamma) + Rat(g.below(3), cfg.denseValueGroup() ? 2 : 1);
            t = beta + uPow(cfg, coeffFor(cfg, g), exp);
        }
        s.require((t - beta).valuation() > ExtRat(gamma), "generator broke v(t-beta) > gamma");

        bool viaBreadth = e.breadth() <= ExtRat(gamma);
        bool viaOmega = omegaContains(e, t, ExtRat(gamma));
        s.require(viaBreadth == viaOmega,
                  "sigma/omega mismatch at gamma=" + gamma.str() + ", delta=" + delta.str());
        s.addCase();
    }
}

// --- criterion 8: lambda-metric suite --------------------------------------------

LambdaSpace randLambdaSpace(Rng& g, std::vector<Rat>& gridOut) {
    long size = g.range(3, 12);
    Rat a(g.range(-3, 1));
    Rat b = a + Rat(g.range(2, 5));
    std::vector<Rat> values;
    while (static_cast<long>(values.size()) < size) {
        Rat v = a + (b - a) * Rat(g.range(1, 64), 64);
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::vector<std::size_t> indices(static_cast<std::size_t>(size));
    std::iota(indices.begin(), indices.end(), 1);
    for (std::size_t i = indices.size(); i > 1; --i)
        std::swap(indices[i - 1], indices[static_cast<std::size_t>(g.below(static_cast<long>(i)))]);

    std::vector<LambdaPoint> points;
    for (long i = 0; i < size; ++i)
        points.push_back({values[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(i)]});

    gridOut = values;  // marks themselves are grid points (boundary cases)
    while (gridOut.size() < 50) {
        Rat v = a + (b - a) * Rat(g.range(1, 101), 101);
        if (std::find(gridOut.begin(), gridOut.end(), v) == gridOut.end()) gridOut.push_back(v);
    }
    return LambdaSpace(ExtRat(a), ExtRat(b), std::move(points));
}

void criterion8(Suite& s, Rng& g) {
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rat> grid;
        LambdaSpace space = randLambdaSpace(g, grid);

        for (const Rat& x : grid) {
            LambdaDistance d = lambdaDist(space, x, x);
            s.require(d.value == Rat(0) && !d.degenerate, "d(x,x) != 0");
        }
        for (int i = 0; i < 300; ++i) {
            const Rat& x = g.pick(grid);
            const Rat& y = g.pick(grid);
            LambdaDistance xy = lambdaDist(space, x, y);
            LambdaDistance yx = lambdaDist(space, y, x);
            s.require(xy.value == yx.value && xy.degenerate == yx.degenerate,
                      "lambda distance asymmetric");
            s.require(xy.degenerate == (xy.value == Rat(0) && !(x == y)),
                      "degeneracy flag inconsistent with value");
            const Rat& z = g.pick(grid);
            LambdaDistance yz = lambdaDist(space, y, z);
            LambdaDistance xz = lambdaDist(space, x, z);
            s.require(xz.value <= std::max(xy.value, yz.value), "lambda triangle failed");
        }

        std::vector<Rat> radii;
        for (std::size_t i = 1; i <= space.points().size(); ++i)
            radii.push_back(Rat(1, static_cast<long>(i)));
        radii.push_back(Rat(2));
        radii.push_back(Rat(1, 2 * static_cast<long>(space.points().size())));

        for (const Rat& x : grid) {
            for (const Rat& rho : radii) {
                HalfOpen interval = ballToInterval(space, x, rho);
                for (const Rat& w : grid) {
                    bool inBall = lambdaDist(space, x, w).value < rho;
                    s.require(interval.contains(w) == inBall,
                              "ball/interval duality failed at x=" + x.str() +
                                  " rho=" + rho.str() + " w=" + w.str());
                }
            }
        }
        s.addCase();
    }
}

// --- criterion 9: no finite subcover ----------------------------------------------

void criterion9(Suite& s, Rng&) {
    LambdaSpace space(ExtRat(Rat(0)), ExtRat(Rat(1)), {});
    std::vector<Rat> gammas;
    for (long k = 1; k <= 12; ++k) gammas.push_back(Rat(1, 1L << k));

    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::size_t> chosen;
        for (unsigned bit = 0; bit < 10; ++bit)
            if (mask & (1u << bit)) chosen.push_back(bit + 1);
        Rat w = coverWitness(space, gammas, chosen);
        s.require(space.containsPoint(w), "witness outside the space");
        for (std::size_t k : chosen)
            s.require(!coverSet(space, gammas, k).contains(w),
                      "witness covered by chosen member " + std::to_string(k));
        s.addCase();
    }
}

// --- criterion 10: residue-space certificates --------------------------------------

KPoly randKPoly(BaseK k, Rng& g, long maxDeg) {
    for (;;) {
        long deg = g.range(0, maxDeg);
        std::vector<Rat> coeffs;
        for (long i = 0; i <= deg; ++i)
            coeffs.push_back(k.p != 0 ? Rat(g.below(static_cast<long>(k.p))) : smallRat(g, false));
        KPoly f(k, std::move(coeffs));
        if (!f.isZero()) return f;
    }
}

KRatFunc randKRatFunc(BaseK k, Rng& g) {
    return KRatFunc::of(randKPoly(k, g, 2), randKPoly(k, g, 2));
}

void criterion10(Suite& s, Rng& g) {
    BaseK f5{5};
    std::vector<KPoly> irreducibles = monicIrreducibles(f5, 3);
    long byDeg[4] = {0, 0, 0, 0};
    for (const KPoly& f : irreducibles) ++byDeg[f.degree()];
    s.require(byDeg[1] == 5 && byDeg[2] == 10 && byDeg[3] == 40,
              "F_5 irreducible counts off: " + std::to_string(byDeg[1]) + "/" +
                  std::to_string(byDeg[2]) + "/" + std::to_string(byDeg[3]));

    std::vector<ZarPoint> sample = {ZarPoint::whole(f5), ZarPoint::infPlace(f5)};
    for (const KPoly& f : irreducibles) sample.push_back(ZarPoint::finPlace(f));

    for (std::size_t i = 1; i < sample.size(); ++i) {
        IsolationCertificate cert = isolatedCertificate(sample[i], 3);
        s.require(cert.unique, "certificate not unique for " + sample[i].str());
        s.require(cert.degreeBound == 3 && cert.sampleSize == sample.size(),
                  "certificate battery has the wrong extent");
        s.addCase();
    }
    try {
        isolatedCertificate(ZarPoint::whole(f5), 3);
        s.require(false, "generic point accepted a certificate");
    } catch (const DomainError&) {
        s.addCase();
    }

    for (int battery = 0; battery < 10; ++battery) {
        std::vector<KRatFunc> opens;
        for (int i = 0; i < 10; ++i) opens.push_back(randKRatFunc(f5, g));
        s.require(genericPointCheck(opens, sample), "generic point missing from intersection");
        s.addCase();
    }

    // xad transport: ring-side containments matching the residue picture.
    const FieldConfig& cfg = dyadicQ();
    for (int inst = 0; inst < 4; ++inst) {
        FieldElem alpha = randElem(cfg, g);
        FieldElem c = uPow(cfg, coeffFor(cfg, g), dyadicExp(g, -2, 3));
        FieldElem z = FieldElem::fromRational(cfg, Rat(g.range(0, 6)));
        if (g.chance(40)) z = z + uPow(cfg, coeffFor(cfg, g), Rat(g.range(1, 3), 2));

        XadDescriptor dF{alpha, c, XadMarker::StationaryF};
        XadDescriptor dE{alpha, c, XadMarker::ConvergentE};
        XadDescriptor dZ{alpha, c, z};
        SeqSpec F = xadRing(dF), E = xadRing(dE), D = xadRing(dZ);

        BaseK k = cfg.residueField();
        s.require(xadMap(dF) == ZarPoint::whole(k), "stationary marker image");
        s.require(xadMap(dE) == ZarPoint::infPlace(k), "convergent marker image");
        s.require(xadMap(dZ) == ZarPoint::finPlace(KPoly(k, {-z.residue(), Rat(1)})),
                  "divergent image place mismatch");

        for (int i = 0; i < 20; ++i) {
            RatFunc phi = randPhi(D, g, false);
            bool inD = ringContains(D, phi).value;
            bool inE = ringContains(E, phi).value;
            bool inF = ringContains(F, phi).value;
            s.require(!inD || inF, "V_D not inside V_F on " + phi.str());
            s.require(!inE || inF, "V_E not inside V_F on " + phi.str());
        }
        // Properness witnesses: w = 0 with in-ball multiplicity -1 / +1.
        RatFunc sepD = RatFunc::factored(c, {{alpha - c * z, -1}});
        s.require(ringContains(F, sepD).value && !ringContains(D, sepD).value,
                  "V_D proper-containment witness failed");
        RatFunc sepE = RatFunc::scaledLinear(alpha, c);
        s.require(ringContains(F, sepE).value && !ringContains(E, sepE).value,
                  "V_E proper-containment witness failed");
        s.addCase();
    }

    // Duplicate residues must be rejected.
    FieldElem z0 = FieldElem::fromRational(cfg, Rat(3));
    FieldElem z1 = z0 + uPow(cfg, Rat(1), Rat(2));
    try {
        xadFinPlaces(cfg, {z0, z1});
        s.require(false, "duplicate residues accepted");
    } catch (const DomainError&) {
        s.addCase();
    }
}

// --- criterion 11: divergent/stationary partition facts -----------------------------

void criterion11(Suite& s, Rng& g) {
    const FieldConfig& cfg = dyadicQ();

    // (a) delta outside the value group: convergent and divergent rings over the
    // same ball are indistinguishable on subbasic opens.
    static const std::vector<long> odd = {3, 5, 7};
    for (int i = 0; i < 50; ++i) {
        long num = g.range(-5, 5);
        long den = g.pick(odd);
        while (num % den == 0) ++num;
        Rat delta(num, den);
        FieldElem beta = randElem(cfg, g);
        SeqSpec conv(SeqKind::Convergent, beta,
                     GaugeGen(GaugeFamily::ApproachFromBelow, ExtRat(delta),
                              BinaryTruncationRule{}),
                     randCoeffs(cfg, g), maybePert(cfg, g));
        SeqSpec div(SeqKind::Divergent, beta,
                    GaugeGen(GaugeFamily::DescendTo, ExtRat(delta), BinaryTruncationRule{}),
                    randCoeffs(cfg, g), maybePert(cfg, g));
        for (int j = 0; j < 20; ++j) {
            RatFunc phi = randPhiAvoidingKnifeEdge(conv, g);
            Verdict vc = ringContains(conv, phi), vd = ringContains(div, phi);
            s.require(vc.value == vd.value,
                      "identification failed at delta=" + delta.str() + " on " + phi.str());
            s.require(!vc.heuristic && !vd.heuristic, "heuristic flag on factored membership");
        }
        s.addCase();
    }

    // (b) finite residue field: each divergent ring of the X_{alpha,delta} family is
    // cut out from its siblings (and every other ball) by p+... finitely many opens.
    {
        const FieldConfig& f5cfg = dyadicF5();
        long p = static_cast<long>(f5cfg.residueField().p);
        for (int inst = 0; inst < 5; ++inst) {
            FieldElem alpha = randElem(f5cfg, g);
            FieldElem c = uPow(f5cfg, coeffFor(f5cfg, g), dyadicExp(g, -2, 3));
            Rat delta = c.valuation().finite();
            long tested = inst % p;

            std::vector<FieldElem> centers;
            for (long r = 0; r < p; ++r)
                centers.push_back(alpha - c * FieldElem::fromRational(f5cfg, Rat(r)));
            SeqSpec dj = xadRing(XadDescriptor{alpha, c,
                                               FieldElem::fromRational(f5cfg, Rat(tested))});
            Ball ball = dj.pseudoLimitSet();

            std::vector<RatFunc> certificate;
            for (long r = 0; r < p; ++r)
                if (r != tested)
                    certificate.push_back(RatFunc::factored(
                        c, {{centers[static_cast<std::size_t>(r)], -1}}));
            certificate.push_back(RatFunc::scaledLinear(alpha, c));

            for (const RatFunc& phi : certificate)
                s.require(ringContains(dj, phi).value, "certificate open misses its own ring");

            int alternatives = 0;
            while (alternatives < 50) {
                FieldElem center = FieldElem::zero(f5cfg);
                switch (g.below(3)) {
                    case 0: {
                        FieldElem z = FieldElem::fromRational(f5cfg, Rat(g.below(p))) +
                                      uPow(f5cfg, coeffFor(f5cfg, g),
                                                          Rat(g.range(1, 4), 2));
                        center = alpha - c * z;
                        break;
                    }
                    case 1:
                        center = alpha + uPow(f5cfg, coeffFor(f5cfg, g),
                                                             groupValueBelow(f5cfg, delta, g));
                        break;
                    default:
                        center = centers[static_cast<std::size_t>(tested)] +
                                 uPow(f5cfg, coeffFor(f5cfg, g), delta);
                        break;
                }
                SeqSpec alt(SeqKind::Divergent, center,
                            GaugeGen(GaugeFamily::DescendTo, ExtRat(delta), DyadicStepRule{Rat(1)}),
                            randCoeffs(f5cfg, g));
                if (alt.pseudoLimitSet().sameSetAs(ball)) continue;  // not an alternative
                ++alternatives;
                bool excluded = false;
                for (const RatFunc& phi : certificate)
                    if (!ringContains(alt, phi).value) {
                        excluded = true;
                        break;
                    }
                s.require(excluded, "alternative divergent ring slipped past the certificate");
            }
            s.addCase();
        }
    }

    // (c) inversion duality phi <-> phi(1/X).
    for (int i = 0; i < 100; ++i) {
        ExtRat delta = g.chance(25) ? ExtRat::minusInfinity() : ExtRat(dyadicExp(g, -3, 3));
        if (g.chance(20) && delta.isFinite()) delta = ExtRat(Rat(g.range(-4, 4), 3));
        SeqSpec e = randDivSpec(cfg, FieldElem::zero(cfg), delta, g);
        SeqSpec inv = invertSequence(e);
        s.require(inv.kind() == SeqKind::Convergent && inv.breadth() == -e.breadth(),
                  "inversion breadth contract broken");
        for (int j = 0; j < 20; ++j) {
            RatFunc phi = randPhi(e, g, false);
            RatFunc phiR = phi.reciprocalSubstitution();
            Verdict lhs = ringContains(e, phi);
            Verdict rhs = ringContains(inv, phiR);
            s.require(lhs.value == rhs.value,
                      "inversion duality failed on " + phi.str());
        }
        s.addCase();
    }

    // (d) stationary separators: B(phi) and B(phi, 1/phi) singletons.
    for (int inst = 0; inst < 10; ++inst) {
        FieldElem beta = randElem(cfg, g);
        Rat gamma = dyadicExp(g, -2, 4);
        SeqSpec e = randStatSpec(beta, gamma, g);
        FieldElem c = uPow(cfg, coeffFor(cfg, g), gamma);
        RatFunc phi = RatFunc::scaledLinear(beta, c);          // (X - beta)/c
        RatFunc phiInv = RatFunc::factored(c, {{beta, -1}});   // c/(X - beta)

        s.require(ringContains(e, phi).value, "separator misses its own stationary ring");
        s.require(ringContains(e, phiInv).value, "inverse separator misses its ring");

        // fixed gauge, varying ball: B(phi) picks out V_E
        for (int a = 0; a < 50; ++a) {
            FieldElem off = uPow(cfg, coeffFor(cfg, g),
                                                groupValueBelow(cfg, gamma, g));
            SeqSpec alt = randStatSpec(beta + off, gamma, g);
            s.require(!ringContains(alt, phi).value,
                      "B(phi) not a singleton across stationary balls");
        }
        // fixed limit, varying gauge: B(phi, 1/phi) picks out V_E
        for (int a = 0; a < 50; ++a) {
            Rat gamma2 = dyadicExp(g, -3, 5);
            while (gamma2 == gamma) gamma2 = dyadicExp(g, -3, 5);
            SeqSpec alt = randStatSpec(beta, gamma2, g);
            bool both = ringContains(alt, phi).value && ringContains(alt, phiInv).value;
            s.require(!both, "B(phi, 1/phi) not a singleton across gauges");
        }
        s.addCase();
    }
}

// --- module batteries ----------------------------------------------------------

void fieldAxioms(Suite& s, Rng& g) {
    const std::vector<FieldConfig> configs = {padic5(), dyadicQ(), dyadicF5()};
    for (const FieldConfig& cfg : configs) {
        for (int i = 0; i < 120; ++i) {
            FieldElem a = randElem(cfg, g), b = randElem(cfg, g), c = randElem(cfg, g);
            s.require((a + b) + c == a + (b + c), "addition not associative");
            s.require(a + b == b + a, "addition not commutative");
            s.require(a * (b + c) == a * b + a * c, "multiplication not distributive");
            s.require(a * b == b * a, "multiplication not commutative");
            s.require((a - a).isZero(), "a - a != 0");
            s.require((a * b).valuation() == a.valuation() + b.valuation(),
                      "valuation not additive");
            ExtRat bound = std::min(a.valuation(), b.valuation());
            s.require((a + b).valuation() >= bound, "ultrametric inequality failed");
            if (!a.isZero()) {
                s.require(FieldElem::one(cfg) / a * a == FieldElem::one(cfg),
                          "inverse failed");
                FieldElem sp = a.standardPart();
                s.require((a - sp).valuation() > a.valuation(),
                          "standard part does not dominate");
            }
            s.require(parseElement(cfg, a.str()) == a, "literal round-trip failed: " + a.str());
            s.addCase();
        }
    }
}

void sequenceBattery(Suite& s, Rng& g) {
    for (int i = 0; i < 100; ++i) {
        SeqSpec e = randSpecAnyKind(g);
        const FieldConfig& cfg = e.config();

        std::vector<FieldElem> prefix;
        for (std::size_t n = 0; n < 6; ++n) prefix.push_back(e.materialize(n));
        auto kind = classify(prefix);
        s.require(kind.has_value() && *kind == e.kind(), "classify disagrees with the spec kind");

        // Observed gauge v(s_{n+1} - s_n): the lower of the two rule exponents, so the
        // index shifts by one for descending (divergent) gauges.
        for (std::size_t n = 0; n < 4; ++n) {
            std::size_t idx = e.kind() == SeqKind::Divergent ? n + 1 : n;
            s.require(e.gaugeAt(n) == ExtRat(e.gaugeExpAt(idx)),
                      "observed gauge drifts from the rule");
        }

        FieldElem d = randElem(cfg, g);
        SeqSpec moved = translate(e, d);
        s.require(moved.base() == e.base() + d, "translate does not shift the base");
        s.require(equivalent(translate(moved, -d), e), "translate round trip failed");
        s.require(equivalent(e, e), "equivalence not reflexive");

        // breadth ideal closed forms per kind
        ExtRat delta = e.breadth();
        Rat probe = delta.isFinite() ? delta.finite() : Rat(g.range(-3, 3));
        std::vector<Rat> exps;
        if (cfg.valueGroupContains(probe)) exps.push_back(probe);
        exps.push_back(groupValueAbove(cfg, probe) + Rat(1));
        exps.push_back(groupValueBelow(cfg, probe - Rat(2), g));
        for (const Rat& exp : exps) {
            FieldElem m = uPow(cfg, Rat(1), exp);
            bool expected;
            switch (e.kind()) {
                case SeqKind::Convergent: expected = ExtRat(exp) >= delta; break;
                case SeqKind::Divergent: expected = ExtRat(exp) > ExtRat(e.gaugeExpAt(1)); break;
                default: expected = ExtRat(exp) > ExtRat(e.gaugeExpAt(0)); break;
            }
            s.require(e.breadthIdealContains(m) == expected,
                      "breadth ideal closed form mismatch at exponent " + exp.str());
        }
        s.addCase();
    }
}

using CriterionFn = void (*)(Suite&, Rng&);

struct CriterionEntry {
    const char* name;
    CriterionFn fn;
};

const CriterionEntry kCriteria[kCriterionCount] = {
    {"criterion-1", criterion1},   {"criterion-2", criterion2},
    {"criterion-3", criterion3},   {"criterion-4", criterion4},
    {"criterion-5", criterion5},   {"criterion-6", criterion6},
    {"criterion-7", criterion7},   {"criterion-8", criterion8},
    {"criterion-9", criterion9},   {"criterion-10", criterion10},
    {"criterion-11", criterion11},
};

} // namespace

SuiteResult runCriterion(int index, std::uint64_t seed) {
    if (index < 1 || index > kCriterionCount)
        throw DomainError("criterion index out of range: " + std::to_string(index));
    const CriterionEntry& entry = kCriteria[index - 1];
    Rng g(mixSeed(seed, index));
    return timedSuite(entry.name, [&](Suite& s) { entry.fn(s, g); });
}

std::vector<SuiteResult> runAllCriteria(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(runCriterion(i, seed));
    return out;
}

std::vector<SuiteResult> runModuleSuite(const std::string& module, std::uint64_t seed) {
    auto criteria = [&](std::initializer_list<int> indices) {
        std::vector<SuiteResult> out;
        for (int i : indices) out.push_back(runCriterion(i, seed));
        return out;
    };
    if (module == "valued_field") {
        Rng g(mixSeed(seed, 101));
        return {timedSuite("field-axioms", [&](Suite& s) { fieldAxioms(s, g); })};
    }
    if (module == "sequences") {
        Rng g(mixSeed(seed, 102));
        return {timedSuite("sequence-battery", [&](Suite& s) { sequenceBattery(s, g); })};
    }
    if (module == "extensions") return criteria({6, 7});
    if (module == "metrics") return criteria({1, 2, 3, 4, 5});
    if (module == "lambda_topology") return criteria({8, 9});
    if (module == "residue_zar") return criteria({10, 11});
    throw DomainError("unknown module \"" + module + "\"");
}

} // namespace pseudoval
