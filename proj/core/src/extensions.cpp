#include "pseudoval/extensions.hpp"

#include "pseudoval/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pseudoval {

namespace {

FieldElem powElem(const FieldElem& x, long e) {
    const FieldConfig& cfg = x.config();
    if (e == 0) return FieldElem::one(cfg);
    FieldElem base = e > 0 ? x : x.inverse();
    long k = e > 0 ? e : -e;
    FieldElem acc = FieldElem::one(cfg);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

// Trim trailing (high-degree) zero coefficients.
void trimPoly(std::vector<FieldElem>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == FieldElem::zero(coeffs.back().config()))
        coeffs.pop_back();
}

FieldElem evalPoly(const std::vector<FieldElem>& coeffs, const FieldElem& x,
                   const FieldConfig& cfg) {
    FieldElem acc = FieldElem::zero(cfg);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

RatFunc RatFunc::factored(FieldElem scale, std::vector<FactoredFactor> factors) {
    const FieldConfig& cfg = scale.config();
    if (scale == FieldElem::zero(cfg))
        throw DomainError("factored function requires a nonzero scale");
    RatFunc f(true, cfg, std::move(scale));
    // Merge repeated roots so each root appears once; a function cannot then be
    // simultaneously zero and pole at the same point.
    for (auto& fac : factors) {
        requireSameConfig(cfg, fac.root.config(), "factored function");
        if (fac.exponent == 0) throw DomainError("factor exponent must be nonzero");
        bool merged = false;
        for (auto& known : f.factors_) {
            if (known.root == fac.root) {
                known.exponent += fac.exponent;
                merged = true;
                break;
            }
        }
        if (!merged) f.factors_.push_back(std::move(fac));
    }
    std::erase_if(f.factors_, [](const FactoredFactor& fac) { return fac.exponent == 0; });
    return f;
}

RatFunc RatFunc::raw(const FieldConfig& cfg, std::vector<FieldElem> num,
                     std::vector<FieldElem> den) {
    for (const auto& c : num) requireSameConfig(cfg, c.config(), "raw function");
    for (const auto& c : den) requireSameConfig(cfg, c.config(), "raw function");
    trimPoly(num);
    trimPoly(den);
    if (den.empty()) throw DomainError("raw function requires a nonzero denominator");
    RatFunc f(false, cfg, FieldElem::one(cfg));
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RatFunc RatFunc::linear(const FieldElem& s) {
    return factored(FieldElem::one(s.config()), {{s, 1}});
}

RatFunc RatFunc::scaledLinear(const FieldElem& s, const FieldElem& c) {
    return factored(FieldElem::one(s.config()) / c, {{s, 1}});
}

bool RatFunc::isZero() const { return !factoredForm_ && num_.empty(); }

const FieldElem& RatFunc::scaleFactor() const {
    if (!factoredForm_) throw DomainError("raw function has no scale factor");
    return scale_;
}

const std::vector<FactoredFactor>& RatFunc::factors() const {
    if (!factoredForm_) throw DomainError("raw function has no factor list");
    return factors_;
}

const std::vector<FieldElem>& RatFunc::rawNumerator() const {
    if (factoredForm_) throw DomainError("factored function has no coefficient lists");
    return num_;
}

const std::vector<FieldElem>& RatFunc::rawDenominator() const {
    if (factoredForm_) throw DomainError("factored function has no coefficient lists");
    return den_;
}

FieldElem RatFunc::evalAt(const FieldElem& x) const {
    requireSameConfig(cfg_, x.config(), "evaluation");
    if (factoredForm_) {
        FieldElem acc = scale_;
        for (const auto& fac : factors_) {
            FieldElem diff = x - fac.root;
            if (fac.exponent < 0 && diff == FieldElem::zero(cfg_))
                throw DomainError("evaluation at a pole");
            acc = acc * powElem(diff, fac.exponent);
        }
        return acc;
    }
    if (isZero()) return FieldElem::zero(cfg_);
    FieldElem d = evalPoly(den_, x, cfg_);
    if (d == FieldElem::zero(cfg_)) throw DomainError("evaluation at a pole");
    return evalPoly(num_, x, cfg_) / d;
}

ExtRat RatFunc::valuationAt(const FieldElem& x) const {
    requireSameConfig(cfg_, x.config(), "evaluation");
    if (factoredForm_) {
        // Roots are distinct after merging, so at most one term is infinite and the
        // sum cannot be indeterminate.
        ExtRat acc = scale_.valuation();
        for (const auto& fac : factors_)
            acc = acc + ExtRat::mulInt(fac.exponent, (x - fac.root).valuation());
        return acc;
    }
    if (isZero()) return ExtRat::plusInfinity();
    ExtRat vn = evalPoly(num_, x, cfg_).valuation();
    ExtRat vd = evalPoly(den_, x, cfg_).valuation();
    if (vn.isPlusInfinity() && vd.isPlusInfinity())
        throw DomainError("indeterminate 0/0 evaluation");
    return vn - vd;
}

RatFunc RatFunc::reciprocal() const {
    if (factoredForm_) {
        std::vector<FactoredFactor> flipped = factors_;
        for (auto& fac : flipped) fac.exponent = -fac.exponent;
        return factored(scale_.inverse(), std::move(flipped));
    }
    if (isZero()) throw DomainError("reciprocal of the zero function");
    return raw(cfg_, den_, num_);
}

RatFunc RatFunc::reciprocalSubstitution() const {
    if (factoredForm_) {
        // (1/X - a) = (-a)(X - 1/a)/X for a != 0, and 1/X for a = 0: nonzero roots
        // invert keeping their exponents, the scale absorbs prod (-a_i)^(e_i), and
        // X picks up exponent -(sum of all exponents).
        const FieldElem zero = FieldElem::zero(cfg_);
        FieldElem scale = scale_;
        std::vector<FactoredFactor> out;
        long totalExp = 0;
        for (const auto& fac : factors_) {
            totalExp += fac.exponent;
            if (fac.root == zero) continue;
            scale = scale * powElem(-fac.root, fac.exponent);
            out.push_back({fac.root.inverse(), fac.exponent});
        }
        if (totalExp != 0) out.push_back({zero, -totalExp});
        return factored(std::move(scale), std::move(out));
    }
    if (isZero()) return *this;
    // num(1/X) = X^(-deg num) * rev(num); balance the X powers on one side.
    std::vector<FieldElem> rnum(num_.rbegin(), num_.rend());
    std::vector<FieldElem> rden(den_.rbegin(), den_.rend());
    const long dn = static_cast<long>(num_.size()) - 1;
    const long dd = static_cast<long>(den_.size()) - 1;
    if (dd > dn)
        rnum.insert(rnum.begin(), static_cast<std::size_t>(dd - dn), FieldElem::zero(cfg_));
    else if (dn > dd)
        rden.insert(rden.begin(), static_cast<std::size_t>(dn - dd), FieldElem::zero(cfg_));
    return raw(cfg_, std::move(rnum), std::move(rden));
}

std::string RatFunc::str() const {
    std::ostringstream os;
    if (factoredForm_) {
        os << "(" << scale_.str() << ")";
        for (const auto& fac : factors_) {
            os << " * (X - (" << fac.root.str() << "))";
            if (fac.exponent != 1) os << "^" << fac.exponent;
        }
        return os.str();
    }
    auto poly = [&os](const std::vector<FieldElem>& coeffs) {
        if (coeffs.empty()) {
            os << "0";
            return;
        }
        bool first = true;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (!first) os << " + ";
            os << "(" << coeffs[i].str() << ")";
            if (i == 1) os << "*X";
            if (i > 1) os << "*X^" << i;
            first = false;
        }
    };
    os << "[";
    poly(num_);
    os << "] / [";
    poly(den_);
    os << "]";
    return os.str();
}

namespace {

bool rootInBall(SeqKind kind, const ExtRat& rootDist, const ExtRat& breadth) {
    switch (kind) {
        case SeqKind::Convergent: return rootDist >= breadth;
        case SeqKind::Divergent: return rootDist > breadth;
        case SeqKind::Stationary: return rootDist >= breadth;
    }
    throw DomainError("unreachable sequence kind");
}

bool eventuallyNonNegative(SeqKind kind, long m, const ExtRat& limit, const Rat& outPart) {
    // v(phi(s_n)) = A + m*gamma_n with gamma_n approaching the breadth from below
    // (Convergent), from above (Divergent), or equal to it (Stationary).
    switch (kind) {
        case SeqKind::Convergent:
            if (m == 0) return outPart.sign() >= 0;
            return m > 0 ? limit > ExtRat(Rat(0)) : limit >= ExtRat(Rat(0));
        case SeqKind::Divergent:
            if (m == 0) return outPart.sign() >= 0;
            return m > 0 ? limit >= ExtRat(Rat(0)) : limit > ExtRat(Rat(0));
        case SeqKind::Stationary:
            return limit >= ExtRat(Rat(0));
    }
    throw DomainError("unreachable sequence kind");
}

} // namespace

MembershipAnalysis analyzeFactored(const SeqSpec& e, const RatFunc& phi) {
    if (!phi.isFactored())
        throw DomainError("closed-form membership analysis requires the factored form");
    requireSameConfig(e.config(), phi.config(), "membership analysis");

    const ExtRat breadth = e.breadth();
    const FieldElem& base = e.base();

    MembershipAnalysis out;
    out.outPart = phi.scaleFactor().valuation().finite();
    out.ballMultiplicity = 0;
    out.windowStart = 0;

    std::optional<Rat> outMax;  // Convergent: largest out-of-ball root distance
    std::optional<Rat> inMin;   // Divergent: smallest finite in-ball root distance
    for (const auto& fac : phi.factors()) {
        const ExtRat dist = (base - fac.root).valuation();
        if (rootInBall(e.kind(), dist, breadth)) {
            out.ballMultiplicity += fac.exponent;
            if (e.kind() == SeqKind::Divergent && !dist.isPlusInfinity()) {
                if (!inMin || dist.finite() < *inMin) inMin = dist.finite();
            }
        } else {
            const Rat d = dist.finite();
            out.outPart += Rat(fac.exponent) * d;
            if (e.kind() == SeqKind::Convergent) {
                if (!outMax || d > *outMax) outMax = d;
            }
        }
    }

    out.limitValue = out.ballMultiplicity == 0
                         ? ExtRat(out.outPart)
                         : ExtRat(out.outPart) + ExtRat::mulInt(out.ballMultiplicity, breadth);
    out.contains = eventuallyNonNegative(e.kind(), out.ballMultiplicity, out.limitValue,
                                         out.outPart);

    // First index past which every out-of-ball (Convergent) or finite in-ball
    // (Divergent) root distance is strictly separated from the gauge exponents.
    auto scanUntil = [&e](auto pred) {
        for (std::size_t n = 0; n < 4096; ++n)
            if (pred(e.gaugeExpAt(n))) return n;
        throw DomainError("gauge does not clear the root distances within 4096 steps");
    };
    if (e.kind() == SeqKind::Convergent && outMax)
        out.windowStart = scanUntil([&](const Rat& g) { return g > *outMax; });
    else if (e.kind() == SeqKind::Divergent && inMin)
        out.windowStart = scanUntil([&](const Rat& g) { return g < *inMin; });
    return out;
}

namespace {

constexpr std::size_t kRawWindow = 64;
constexpr std::size_t kRawTail = 8;

// Windowed evaluation for raw-form functions: 64 samples, accepted when the last
// 8 agree. Always heuristic.
ExtRat rawWindowValue(const SeqSpec& e, const RatFunc& phi) {
    std::vector<ExtRat> vals;
    vals.reserve(kRawWindow);
    for (std::size_t n = 0; n < kRawWindow; ++n)
        vals.push_back(phi.valuationAt(e.materialize(n)));
    const ExtRat& tail = vals.back();
    for (std::size_t i = kRawWindow - kRawTail; i < kRawWindow; ++i)
        if (!(vals[i] == tail))
            throw WindowError("valuation window did not stabilize over 64 samples");
    return tail;
}

} // namespace

LimitResult limitValuation(const SeqSpec& e, const RatFunc& phi) {
    if (phi.isFactored()) return {analyzeFactored(e, phi).limitValue, false};
    if (phi.isZero()) return {ExtRat::plusInfinity(), false};
    return {rawWindowValue(e, phi), true};
}

Verdict ringContains(const SeqSpec& e, const RatFunc& phi) {
    if (phi.isFactored()) return {analyzeFactored(e, phi).contains, false};
    if (phi.isZero()) return {true, false};
    return {rawWindowValue(e, phi) >= ExtRat(Rat(0)), true};
}

bool omegaContains(const SeqSpec& e, const FieldElem& s, const ExtRat& gamma) {
    return analyzeFactored(e, RatFunc::linear(s)).limitValue <= gamma;
}

WindowReport windowOracle(const SeqSpec& e, const RatFunc& phi, std::size_t start,
                          std::size_t length) {
    if (length < 4) throw DomainError("window oracle needs at least 4 samples");
    requireSameConfig(e.config(), phi.config(), "window oracle");

    std::vector<Rat> gammas;
    std::vector<ExtRat> vals;
    for (std::size_t n = start; n < start + length; ++n) {
        gammas.push_back(e.gaugeExpAt(n));
        vals.push_back(phi.valuationAt(e.materialize(n)));
    }

    WindowReport rep;
    rep.start = start;
    rep.length = length;
    rep.exceptional = 0;

    if (e.kind() == SeqKind::Stationary) {
        // Constant gauge: the window value is the mode; off-mode samples are the
        // finitely many coefficient cancellations.
        std::size_t bestCount = 0;
        std::size_t bestAt = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::size_t c = 0;
            for (const auto& v : vals)
                if (v == vals[i]) ++c;
            if (c > bestCount) {
                bestCount = c;
                bestAt = i;
            }
        }
        if (bestCount < length - length / 4)
            throw WindowError("stationary window has no dominant valuation");
        const ExtRat& mode = vals[bestAt];
        if (!mode.isFinite())
            throw WindowError("stationary window is dominated by zeros or poles");
        rep.exceptional = length - bestCount;
        rep.slope = 0;
        rep.intercept = mode.finite();
        rep.limitValue = mode;
        rep.contains = mode >= ExtRat(Rat(0));
        return rep;
    }

    // Past the prescribed start every sample lies exactly on an affine line in the
    // gauge exponent; fit it from the first two samples and verify the rest.
    for (const auto& v : vals)
        if (!v.isFinite()) throw WindowError("zero or pole inside the fit window");
    const Rat slopeRat = (vals[1].finite() - vals[0].finite()) / (gammas[1] - gammas[0]);
    if (!slopeRat.isInteger()) throw WindowError("fitted slope is not an integer");
    rep.slope = slopeRat.toLong();
    rep.intercept = vals[0].finite() - slopeRat * gammas[0];
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (!(vals[i].finite() == rep.intercept + slopeRat * gammas[i]))
            throw WindowError("window samples are not affine in the gauge");

    const ExtRat breadth = e.breadth();
    rep.limitValue = rep.slope == 0 ? ExtRat(rep.intercept)
                                    : ExtRat(rep.intercept) + ExtRat::mulInt(rep.slope, breadth);
    rep.contains = eventuallyNonNegative(e.kind(), rep.slope, rep.limitValue, rep.intercept);
    return rep;
}

} // namespace pseudoval
