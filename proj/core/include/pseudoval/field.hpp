#pragma once

#include <string>
#include <vector>

#include "pseudoval/extrat.hpp"
#include "pseudoval/rat.hpp"

namespace pseudoval {

// Coefficient / residue field descriptor: Q (p == 0) or the prime field F_p.
// F_p elements are carried as integer Rats normalized into [0, p).
struct BaseK {
    unsigned long p = 0;

    bool isPrimeField() const { return p != 0; }
    Rat normalize(const Rat& c) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat inv(const Rat& a) const;
    bool eq(const Rat& a, const Rat& b) const { return normalize(a) == normalize(b); }
    bool isZero(const Rat& a) const { return normalize(a).isZero(); }

    std::string str() const { return p == 0 ? "q" : "f" + std::to_string(p); }
    friend bool operator==(const BaseK&, const BaseK&) = default;
};

// The two concrete valued fields:
//   PAdic(p):  Q with the p-adic valuation; value group Z.
//   DyadicT:   fractions of finite sums  sum c_i * t^(q_i)  with q_i in Z[1/2] and
//              coefficients in k (Q or F_p); v = least exponent; value group Z[1/2].
class FieldConfig {
public:
    enum class Kind { PAdic, DyadicT };

    static FieldConfig padic(unsigned long p);
    static FieldConfig dyadicOverQ() { return FieldConfig(Kind::DyadicT, 0); }
    static FieldConfig dyadicOverFp(unsigned long p);

    Kind kind() const { return kind_; }
    unsigned long prime() const { return p_; }

    BaseK coefficientField() const;   // the field the term coefficients live in
    BaseK residueField() const;       // PAdic: F_p; DyadicT: k

    bool denseValueGroup() const { return kind_ == Kind::DyadicT; }
    bool valueGroupContains(const Rat& g) const {
        return kind_ == Kind::PAdic ? g.isInteger() : g.isDyadic();
    }
    bool infiniteResidueField() const { return residueField().p == 0; }

    std::string str() const;
    static FieldConfig parse(const std::string& text);  // "padic-5" | "dyadic-q" | "dyadic-f5"

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    FieldConfig(Kind k, unsigned long p) : kind_(k), p_(p) {}
    Kind kind_;
    unsigned long p_;  // PAdic prime, or DyadicT coefficient characteristic (0 for Q)
};

struct Term {
    Rat coeff;
    Rat exp;
    friend bool operator==(const Term&, const Term&) = default;
};

// Element of the configured field, always in canonical form.
//
// PAdic: an exact rational.
// DyadicT: num/den term lists, each sorted by exponent with nonzero normalized
// coefficients; den shifted so v(den) = 0 and scaled so its least-exponent
// coefficient is 1. Division stays unevaluated; equality cross-multiplies.
class FieldElem {
public:
    static FieldElem zero(const FieldConfig& cfg);
    static FieldElem one(const FieldConfig& cfg);
    static FieldElem fromRational(const FieldConfig& cfg, const Rat& value);
    static FieldElem monomial(const FieldConfig& cfg, const Rat& coeff, const Rat& exp);
    static FieldElem fromTerms(const FieldConfig& cfg, std::vector<Term> num,
                               std::vector<Term> den = {});

    const FieldConfig& config() const { return cfg_; }
    bool isZero() const;

    FieldElem operator-() const;
    FieldElem inverse() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

    friend bool operator==(const FieldElem& a, const FieldElem& b);

    ExtRat valuation() const;           // +inf for zero
    Rat residue() const;                // requires valuation() >= 0
    Rat leadingCoeff() const;           // residue of x * u^{-v(x)}; nonzero x only
    FieldElem standardPart() const;     // leadingCoeff * u^{v(x)}; x - standardPart has larger valuation

    // DyadicT representation access (canonical); throws for PAdic.
    const std::vector<Term>& numeratorTerms() const;
    const std::vector<Term>& denominatorTerms() const;
    // PAdic representation access; throws for DyadicT.
    const Rat& rationalValue() const;

    std::string str() const;

private:
    explicit FieldElem(FieldConfig cfg) : cfg_(cfg) {}

    void canonicalize();

    FieldConfig cfg_;
    Rat rational_;                      // PAdic payload
    std::vector<Term> num_, den_;       // DyadicT payload
};

void requireSameConfig(const FieldConfig& a, const FieldConfig& b, const char* op);

} // namespace pseudoval
