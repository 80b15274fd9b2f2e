#pragma once

#include <compare>
#include <string>

#include "pseudoval/rat.hpp"

namespace pseudoval {

// Rational extended with the two infinities: -inf < every finite value < +inf.
// Valuations take values in {finite} ∪ {+inf}; -inf appears as the conventional
// value of a function at a pole of its reciprocal (limit valuations).
class ExtRat {
public:
    ExtRat() : kind_(Kind::Finite) {}
    ExtRat(Rat v) : kind_(Kind::Finite), v_(std::move(v)) {}  // NOLINT: implicit by design
    ExtRat(long v) : kind_(Kind::Finite), v_(v) {}            // NOLINT

    static ExtRat plusInfinity() { return ExtRat(Kind::PlusInf); }
    static ExtRat minusInfinity() { return ExtRat(Kind::MinusInf); }

    bool isFinite() const { return kind_ == Kind::Finite; }
    bool isPlusInfinity() const { return kind_ == Kind::PlusInf; }
    bool isMinusInfinity() const { return kind_ == Kind::MinusInf; }

    const Rat& finite() const {
        if (!isFinite()) throw DomainError("finite() on " + str());
        return v_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

    // Sum with infinity dominant; (+inf) + (-inf) is a hard error.
    ExtRat operator+(const ExtRat& o) const {
        if (isFinite() && o.isFinite()) return ExtRat(v_ + o.v_);
        if (!isFinite() && !o.isFinite() && kind_ != o.kind_)
            throw DomainError("indeterminate sum of opposite infinities");
        return isFinite() ? o : *this;
    }
    ExtRat operator-() const {
        switch (kind_) {
            case Kind::MinusInf: return plusInfinity();
            case Kind::PlusInf: return minusInfinity();
            default: return ExtRat(-v_);
        }
    }
    ExtRat operator-(const ExtRat& o) const { return *this + (-o); }

    // m * x for integer m != 0 (sign flips infinities); m == 0 with infinite x is an error.
    static ExtRat mulInt(long m, const ExtRat& x) {
        if (x.isFinite()) return ExtRat(Rat(m) * x.v_);
        if (m == 0) throw DomainError("0 * infinity");
        return m > 0 ? x : -x;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::MinusInf: return "-inf";
            case Kind::PlusInf: return "inf";
            default: return v_.str();
        }
    }

private:
    enum class Kind : int { MinusInf = -1, Finite = 0, PlusInf = 1 };
    explicit ExtRat(Kind k) : kind_(k) {}

    Kind kind_;
    Rat v_;
};

} // namespace pseudoval
