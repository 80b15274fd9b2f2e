#pragma once

#include "pseudoval/sequences.hpp"

namespace pseudoval {

struct FactoredFactor {
    FieldElem root;
    long exponent;  // nonzero
};

// Rational function of X over the configured field.
//
// Factored: scale * prod (X - root_i)^(e_i) — the exact decision path.
// Raw: coefficient-list fraction num(X)/den(X), low-to-high degree — second-class,
// handled by windowed evaluation only.
class RatFunc {
public:
    static RatFunc factored(FieldElem scale, std::vector<FactoredFactor> factors);
    static RatFunc raw(const FieldConfig& cfg, std::vector<FieldElem> num,
                       std::vector<FieldElem> den);
    static RatFunc constant(const FieldElem& c) { return factored(c, {}); }
    static RatFunc linear(const FieldElem& s);  // X - s
    static RatFunc scaledLinear(const FieldElem& s, const FieldElem& c);  // (X - s)/c

    bool isFactored() const { return factoredForm_; }
    bool isZero() const;  // representable in raw form only
    const FieldConfig& config() const { return cfg_; }
    const FieldElem& scaleFactor() const;
    const std::vector<FactoredFactor>& factors() const;
    const std::vector<FieldElem>& rawNumerator() const;
    const std::vector<FieldElem>& rawDenominator() const;

    FieldElem evalAt(const FieldElem& x) const;    // DomainError at poles
    ExtRat valuationAt(const FieldElem& x) const;  // +inf at zeros, -inf at poles

    RatFunc reciprocal() const;              // 1/phi
    RatFunc reciprocalSubstitution() const;  // phi(1/X)

    std::string str() const;

private:
    RatFunc(bool factoredForm, FieldConfig cfg, FieldElem scale)
        : factoredForm_(factoredForm), cfg_(cfg), scale_(std::move(scale)) {}

    bool factoredForm_;
    FieldConfig cfg_;
    FieldElem scale_;  // factored only (one(cfg) placeholder for raw)
    std::vector<FactoredFactor> factors_;
    std::vector<FieldElem> num_, den_;
};

// Closed-form membership data for a factored function against a sequence spec:
//   v(phi(s_n)) = outPart + ballMultiplicity * gamma_n   for n >= windowStart
// (up to finitely many exceptional indices in the stationary boundary-tie case).
struct MembershipAnalysis {
    Rat outPart;                // A = v(scale) + sum of out-of-ball e_i * v(base - a_i)
    long ballMultiplicity;      // m = sum of in-ball exponents
    ExtRat limitValue;          // w_E(phi): one-sided limit of v(phi(s_n))
    bool contains;              // eventually v(phi(s_n)) >= 0
    std::size_t windowStart;    // first index past every out-of-ball root interference
};

MembershipAnalysis analyzeFactored(const SeqSpec& e, const RatFunc& phi);

struct Verdict {
    bool value;
    bool heuristic;
};
struct LimitResult {
    ExtRat value;
    bool heuristic;
};

// w_E(phi) = lim v(phi(s_n)). Exact for factored phi; windowed (heuristic) for raw.
LimitResult limitValuation(const SeqSpec& e, const RatFunc& phi);

// phi in V_E: eventually v(phi(s_n)) >= 0. Exact for factored phi.
Verdict ringContains(const SeqSpec& e, const RatFunc& phi);

// w_E(X - s) <= gamma.
bool omegaContains(const SeqSpec& e, const FieldElem& s, const ExtRat& gamma);

// Independent cross-check: exact evaluation of v(phi(s_n)) on a window starting at
// `start`, an affine fit v_n = intercept + slope * gamma_n over the usable indices,
// and a verdict derived from the fit alone. Throws WindowError when the window is
// not affine (factored inputs at the prescribed start never are).
struct WindowReport {
    ExtRat limitValue;
    bool contains;
    long slope;
    Rat intercept;
    std::size_t start, length, exceptional;
};

WindowReport windowOracle(const SeqSpec& e, const RatFunc& phi, std::size_t start,
                          std::size_t length = 12);

// V_E with its cached limit ball and breadth; equality is spec equivalence.
class ExtRing {
public:
    explicit ExtRing(SeqSpec spec)
        : spec_(std::move(spec)), limits_(spec_.pseudoLimitSet()), breadth_(spec_.breadth()) {}

    const SeqSpec& spec() const { return spec_; }
    const Ball& limits() const { return limits_; }
    const ExtRat& breadth() const { return breadth_; }

    Verdict contains(const RatFunc& phi) const { return ringContains(spec_, phi); }

    friend bool operator==(const ExtRing& a, const ExtRing& b) {
        return equivalent(a.spec_, b.spec_);
    }

private:
    SeqSpec spec_;
    Ball limits_;
    ExtRat breadth_;
};

} // namespace pseudoval
