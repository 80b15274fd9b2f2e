#include "pseudoval/lambda_topology.hpp"

#include <algorithm>

#include "pseudoval/errors.hpp"

namespace pseudoval {

LambdaSpace::LambdaSpace(ExtRat lower, ExtRat upper, std::vector<LambdaPoint> points)
    : lower_(std::move(lower)), upper_(std::move(upper)), points_(std::move(points)) {
    if (!(lower_ < upper_)) throw DomainError("interval needs lower < upper");
    std::vector<std::size_t> indices;
    for (const auto& p : points_) {
        if (!containsPoint(p.value))
            throw DomainError("marked point " + p.value.str() + " outside (" + lower_.str() +
                              ", " + upper_.str() + "]");
        for (const auto& q : points_)
            if (&p != &q && p.value == q.value)
                throw DomainError("duplicate marked point " + p.value.str());
        indices.push_back(p.index);
    }
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (indices[i] != i + 1)
            throw DomainError("enumeration indices must be a bijection onto 1..n");
}

LambdaDistance lambdaDist(const LambdaSpace& s, const Rat& x, const Rat& y) {
    if (!s.containsPoint(x) || !s.containsPoint(y))
        throw DomainError("distance arguments must lie in the interval");
    if (x == y) return {Rat(0), false};
    const Rat& lo = x < y ? x : y;
    const Rat& hi = x < y ? y : x;
    Rat best(0);
    for (const auto& p : s.points())
        if (lo <= p.value && p.value < hi) best = std::max(best, markWeight(p));
    return {best, best.isZero()};
}

HalfOpen ballToInterval(const LambdaSpace& s, const Rat& x, const Rat& rho) {
    if (!s.containsPoint(x)) throw DomainError("ball center must lie in the interval");
    if (rho.sign() <= 0) throw DomainError("ball radius must be positive");
    ExtRat lo = s.lower();
    ExtRat hi = s.upper();
    for (const auto& p : s.points()) {
        if (markWeight(p) < rho) continue;
        if (p.value < x)
            lo = std::max(lo, ExtRat(p.value));
        else
            hi = std::min(hi, ExtRat(p.value));
    }
    return {lo, hi};
}

namespace {

void checkGammas(const LambdaSpace& s, const std::vector<Rat>& gammas) {
    if (gammas.empty()) throw DomainError("cover family needs at least one gauge point");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (!(ExtRat(gammas[i]) > s.lower() && ExtRat(gammas[i]) < s.upper()))
            throw DomainError("gauge point " + gammas[i].str() + " outside the open interval");
        if (i > 0 && !(gammas[i] < gammas[i - 1]))
            throw DomainError("gauge points must be strictly decreasing");
    }
}

} // namespace

HalfOpen coverSet(const LambdaSpace& s, const std::vector<Rat>& gammas, std::size_t k) {
    checkGammas(s, gammas);
    if (k < 1 || k > gammas.size()) throw DomainError("cover index out of range");
    if (k == 1) return {ExtRat(gammas[0]), s.upper()};
    return {ExtRat(gammas[k - 1]), ExtRat(gammas[k - 2])};
}

Rat coverWitness(const LambdaSpace& s, const std::vector<Rat>& gammas,
                 const std::vector<std::size_t>& chosen) {
    checkGammas(s, gammas);
    std::size_t m = 0;
    for (std::size_t k : chosen) {
        if (k < 1 || k > gammas.size()) throw DomainError("chosen cover index out of range");
        m = std::max(m, k);
    }
    if (m + 1 > gammas.size())
        throw DomainError("need a gauge point below every chosen cover member");
    return gammas[m];  // gamma_{m+1}, 1-based
}

} // namespace pseudoval
