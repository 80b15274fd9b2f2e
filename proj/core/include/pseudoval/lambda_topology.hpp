#pragma once

#include <vector>

#include "pseudoval/extrat.hpp"

namespace pseudoval {

// One marked point with its enumeration index; the point weighs r = 1/index.
struct LambdaPoint {
    Rat value;
    std::size_t index;  // >= 1
};

// The interval (a, b] carrying a finite enumerated set of marked points. List order
// is the enumeration order (it fixes r and is part of the space's identity).
class LambdaSpace {
public:
    LambdaSpace(ExtRat lower, ExtRat upper, std::vector<LambdaPoint> points);

    const ExtRat& lower() const { return lower_; }
    const ExtRat& upper() const { return upper_; }
    const std::vector<LambdaPoint>& points() const { return points_; }

    bool containsPoint(const Rat& x) const {
        return ExtRat(x) > lower_ && ExtRat(x) <= upper_;
    }

private:
    ExtRat lower_, upper_;
    std::vector<LambdaPoint> points_;
};

inline Rat markWeight(const LambdaPoint& p) { return Rat(1, static_cast<long>(p.index)); }

// d(x, y) = max{r(lambda) : lambda in [min,max) ∩ marks}, 0 on an empty hit set.
// A zero between distinct points is possible once the mark set is finite; it is
// reported, not treated as an error.
struct LambdaDistance {
    Rat value;
    bool degenerate;  // value == 0 with x != y
};
LambdaDistance lambdaDist(const LambdaSpace& s, const Rat& x, const Rat& y);

// Half-open interval (lo, hi] with extended endpoints.
struct HalfOpen {
    ExtRat lo, hi;

    bool contains(const Rat& x) const { return ExtRat(x) > lo && ExtRat(x) <= hi; }
    std::string str() const { return "(" + lo.str() + ", " + hi.str() + "]"; }
    friend bool operator==(const HalfOpen&, const HalfOpen&) = default;
};

// The open ball B_d(x, rho) as an interval: (y, z] with
//   y = max{lambda <  x : r(lambda) >= rho}   (else a)
//   z = min{lambda >= x : r(lambda) >= rho}   (else b).
// A mark at x itself caps the ball from above: points beyond it sit at distance
// >= r(x) from x.
HalfOpen ballToInterval(const LambdaSpace& s, const Rat& x, const Rat& rho);

// The k-th member of the no-finite-subcover family: (gamma_1, b] for k = 1,
// (gamma_k, gamma_{k-1}] after that.
HalfOpen coverSet(const LambdaSpace& s, const std::vector<Rat>& gammas, std::size_t k);

// A point of (a, b] missed by every chosen cover member: gamma_{m+1} for
// m = max(chosen), gamma_1 when nothing was chosen.
Rat coverWitness(const LambdaSpace& s, const std::vector<Rat>& gammas,
                 const std::vector<std::size_t>& chosen);

} // namespace pseudoval
