#pragma once

#include "pseudoval/metrics.hpp"

namespace pseudoval {

// Dense polynomial in t over the residue field k (Q or F_p), coefficients
// low-to-high, always trimmed and k-normalized.
class KPoly {
public:
    KPoly(BaseK k, std::vector<Rat> coeffs);
    static KPoly zero(BaseK k) { return KPoly(k, {}); }
    static KPoly one(BaseK k) { return KPoly(k, {Rat(1)}); }
    static KPoly variable(BaseK k) { return KPoly(k, {Rat(0), Rat(1)}); }

    const BaseK& field() const { return k_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    Rat leading() const;
    bool isMonic() const { return !isZero() && k_.eq(leading(), Rat(1)); }
    KPoly monic() const;

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    friend bool operator==(const KPoly& a, const KPoly& b) {
        return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    BaseK k_;
    std::vector<Rat> coeffs_;
};

// Long division: a = q*b + r with deg r < deg b.
struct KPolyDiv {
    KPoly quotient, remainder;
};
KPolyDiv divmod(const KPoly& a, const KPoly& b);

KPoly gcdPoly(const KPoly& a, const KPoly& b);  // monic gcd

// Multiplicity of the irreducible `place` in f != 0.
long ordAt(const KPoly& f, const KPoly& place);

// Irreducibility over k. Complete over F_p (trial division); over Q decided by the
// rational-root test, hence only up to degree 3 — higher degrees are refused rather
// than half-checked.
bool isIrreducible(const KPoly& f);

// All monic irreducibles over F_p of degree 1..maxDeg, in a fixed deterministic
// order (degree, then coefficient tuple).
std::vector<KPoly> monicIrreducibles(BaseK k, long maxDeg);

// Rational function in t over k, reduced, with monic denominator.
class KRatFunc {
public:
    static KRatFunc of(KPoly num, KPoly den);
    static KRatFunc poly(KPoly num);
    static KRatFunc reciprocalOf(KPoly den) { return of(KPoly::one(den.field()), std::move(den)); }

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }
    const BaseK& field() const { return num_.field(); }
    bool isZero() const { return num_.isZero(); }

    friend bool operator==(const KRatFunc& a, const KRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    std::string str() const;

private:
    KRatFunc(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    KPoly num_, den_;
};

// A point of Zar(k(t)|k): the whole field k(t), the infinite place (k[1/t]
// localized at 1/t), or the finite place at a monic irreducible.
class ZarPoint {
public:
    enum class Kind { Whole, InfPlace, FinPlace };

    static ZarPoint whole(BaseK k) { return ZarPoint(Kind::Whole, KPoly::zero(k)); }
    static ZarPoint infPlace(BaseK k) { return ZarPoint(Kind::InfPlace, KPoly::zero(k)); }
    static ZarPoint finPlace(KPoly f);

    Kind kind() const { return kind_; }
    const BaseK& field() const { return place_.field(); }
    const KPoly& place() const;

    friend bool operator==(const ZarPoint& a, const ZarPoint& b) {
        return a.kind_ == b.kind_ && a.place_ == b.place_;
    }
    std::string str() const;

private:
    ZarPoint(Kind kind, KPoly place) : kind_(kind), place_(std::move(place)) {}
    Kind kind_;
    KPoly place_;  // meaningful for FinPlace only
};

// psi in P. Whole contains everything; InfPlace counts degrees; FinPlace counts
// orders at its place.
bool zarContains(const ZarPoint& p, const KRatFunc& psi);

// The separating function of an isolated point, with the verification battery it
// was checked against. `unique` records that p was the one point not containing
// the separator; the degree bound is part of the claim.
struct IsolationCertificate {
    ZarPoint point;
    KRatFunc separator;
    long degreeBound;         // -1 when the sample was user-supplied
    std::size_t sampleSize;
    bool unique;
};

// F_p battery: all monic irreducibles of degree <= degreeBound, plus InfPlace and
// Whole. Whole itself has no certificate (it is the unique limit point).
IsolationCertificate isolatedCertificate(const ZarPoint& p, long degreeBound = 3);
// Q (or custom) battery: verification against the supplied sample (p, Whole, and
// InfPlace are included automatically).
IsolationCertificate isolatedCertificate(const ZarPoint& p, std::vector<ZarPoint> sample);

// Whole lies in every nonempty intersection of subbasic opens; precondition (each
// B(psi) nonempty on the sample) is enforced.
bool genericPointCheck(const std::vector<KRatFunc>& opens, const std::vector<ZarPoint>& sample);

// Descriptor for one member of the X_{alpha,delta} family: the stationary ring, the
// convergent ring, or the divergent ring attached to a residue representative z.
enum class XadMarker { StationaryF, ConvergentE };

struct XadDescriptor {
    FieldElem alpha;
    FieldElem c;  // nonzero; v(c) = delta
    std::variant<XadMarker, FieldElem> z;
};

// Residue-side image: StationaryF -> Whole, ConvergentE -> InfPlace,
// z -> FinPlace(t - residue(z)).
ZarPoint xadMap(const XadDescriptor& d);

// Valued-field-side ring of the same member (dyadic configs only; the value group
// must be dense for finite-breadth specs to exist).
SeqSpec xadRing(const XadDescriptor& d);

// FinPlace batch for a set of residue representatives; duplicate residues are an
// error (the z's must hit distinct places).
std::vector<ZarPoint> xadFinPlaces(const FieldConfig& cfg, const std::vector<FieldElem>& zs);

} // namespace pseudoval
