#include "pseudoval/residue_zar.hpp"

#include "pseudoval/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pseudoval {

// ---- KPoly -------------------------------------------------------------------

KPoly::KPoly(BaseK k, std::vector<Rat> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = k_.normalize(c);
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Rat KPoly::leading() const {
    if (isZero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

KPoly KPoly::monic() const {
    if (isZero()) throw DomainError("cannot normalize the zero polynomial to monic");
    const Rat inv = k_.inv(leading());
    std::vector<Rat> out = coeffs_;
    for (auto& c : out) c = k_.mul(c, inv);
    return KPoly(k_, std::move(out));
}

KPoly KPoly::operator+(const KPoly& o) const {
    if (!(k_ == o.k_)) throw DomainError("polynomial fields differ");
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = k_.add(out[i], o.coeffs_[i]);
    return KPoly(k_, std::move(out));
}

KPoly KPoly::operator-(const KPoly& o) const {
    if (!(k_ == o.k_)) throw DomainError("polynomial fields differ");
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = k_.sub(out[i], o.coeffs_[i]);
    return KPoly(k_, std::move(out));
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (!(k_ == o.k_)) throw DomainError("polynomial fields differ");
    if (isZero() || o.isZero()) return zero(k_);
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = k_.add(out[i + j], k_.mul(coeffs_[i], o.coeffs_[j]));
    return KPoly(k_, std::move(out));
}

std::string KPoly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const Rat& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.isZero()) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || !(c == Rat(1))) {
            os << c.str();
            if (d > 0) os << "*";
        }
        if (d == 1) os << "t";
        if (d > 1) os << "t^" << d;
    }
    return os.str();
}

KPolyDiv divmod(const KPoly& a, const KPoly& b) {
    if (!(a.field() == b.field())) throw DomainError("polynomial fields differ");
    if (b.isZero()) throw DomainError("polynomial division by zero");
    const BaseK& k = a.field();
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot;
    const long db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    const Rat leadInv = k.inv(b.leading());
    for (long d = a.degree(); d >= db; --d) {
        const Rat c = k.mul(rem[static_cast<std::size_t>(d)], leadInv);
        if (c.isZero()) continue;
        quot[static_cast<std::size_t>(d - db)] = c;
        for (long i = 0; i <= db; ++i) {
            auto& slot = rem[static_cast<std::size_t>(d - db + i)];
            slot = k.sub(slot, k.mul(c, b.coeffs()[static_cast<std::size_t>(i)]));
        }
    }
    return {KPoly(k, std::move(quot)), KPoly(k, std::move(rem))};
}

KPoly gcdPoly(const KPoly& a, const KPoly& b) {
    KPoly x = a, y = b;
    while (!y.isZero()) {
        KPoly r = divmod(x, y).remainder;
        x = y;
        y = std::move(r);
    }
    return x.isZero() ? x : x.monic();
}

long ordAt(const KPoly& f, const KPoly& place) {
    if (f.isZero()) throw DomainError("order of the zero polynomial");
    if (place.degree() < 1 || !place.isMonic() || !isIrreducible(place))
        throw DomainError("order is taken at a monic irreducible place");
    long ord = 0;
    KPoly cur = f;
    while (true) {
        KPolyDiv d = divmod(cur, place);
        if (!d.remainder.isZero()) return ord;
        ++ord;
        cur = std::move(d.quotient);
    }
}

namespace {

// Enumerate monic polynomials of exact degree d over F_p as counter digits.
std::vector<KPoly> monicOfDegree(const BaseK& k, long d) {
    std::vector<KPoly> out;
    const long p = static_cast<long>(k.p);
    std::vector<long> digits(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<Rat> coeffs;
        coeffs.reserve(static_cast<std::size_t>(d) + 1);
        for (long v : digits) coeffs.emplace_back(v);
        coeffs.emplace_back(1);
        out.emplace_back(k, std::move(coeffs));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

bool hasRationalRoot(const KPoly& f) {
    // Clear denominators to a primitive integer polynomial; candidate roots are
    // (divisor of constant term) / (divisor of leading term).
    mpz_class lcm(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(c.numerator() * (lcm / c.denominator()));
    if (ic.front() == 0) return true;  // root at 0

    auto divisors = [](mpz_class n) {
        n = abs(n);
        std::vector<mpz_class> ds;
        for (mpz_class i(1); i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                ds.push_back(n / i);
            }
        return ds;
    };
    auto evalZero = [&f](const Rat& x) {
        Rat acc(0);
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
        return acc.isZero();
    };
    for (const auto& p : divisors(ic.front()))
        for (const auto& q : divisors(ic.back())) {
            Rat cand(p, q);
            if (evalZero(cand) || evalZero(-cand)) return true;
        }
    return false;
}

} // namespace

bool isIrreducible(const KPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const BaseK& k = f.field();
    if (k.isPrimeField()) {
        // Reducible iff some monic factor of degree in [1, deg/2] divides it.
        for (long d = 1; d <= f.degree() / 2; ++d)
            for (const auto& g : monicOfDegree(k, d))
                if (divmod(f, g).remainder.isZero()) return false;
        return true;
    }
    if (f.degree() > 3)
        throw DomainError(
            "irreducibility over the rationals is decided only to degree 3 "
            "(rational-root test); supply places of lower degree");
    return !hasRationalRoot(f);
}

std::vector<KPoly> monicIrreducibles(BaseK k, long maxDeg) {
    if (!k.isPrimeField())
        throw DomainError("irreducible enumeration requires a finite coefficient field");
    if (maxDeg < 1) throw DomainError("degree bound must be at least 1");
    std::vector<KPoly> out;
    for (long d = 1; d <= maxDeg; ++d)
        for (auto& f : monicOfDegree(k, d))
            if (isIrreducible(f)) out.push_back(std::move(f));
    return out;
}

// ---- KRatFunc ------------------------------------------------------------------

KRatFunc KRatFunc::of(KPoly num, KPoly den) {
    if (!(num.field() == den.field())) throw DomainError("rational function fields differ");
    if (den.isZero()) throw DomainError("zero denominator");
    if (num.isZero()) return KRatFunc(KPoly::zero(num.field()), KPoly::one(num.field()));
    KPoly g = gcdPoly(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).quotient;
        den = divmod(den, g).quotient;
    }
    const BaseK& k = num.field();
    const Rat leadInv = k.inv(den.leading());
    auto scale = [&](const KPoly& f) {
        std::vector<Rat> cs = f.coeffs();
        for (auto& c : cs) c = k.mul(c, leadInv);
        return KPoly(k, std::move(cs));
    };
    return KRatFunc(scale(num), scale(den));
}

KRatFunc KRatFunc::poly(KPoly num) {
    BaseK k = num.field();
    return of(std::move(num), KPoly::one(k));
}

std::string KRatFunc::str() const {
    if (den_ == KPoly::one(field())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- ZarPoint -------------------------------------------------------------------

ZarPoint ZarPoint::finPlace(KPoly f) {
    if (f.degree() < 1 || !f.isMonic() || !isIrreducible(f))
        throw DomainError("a finite place is a monic irreducible of degree >= 1");
    return ZarPoint(Kind::FinPlace, std::move(f));
}

const KPoly& ZarPoint::place() const {
    if (kind_ != Kind::FinPlace) throw DomainError("only finite places carry a polynomial");
    return place_;
}

std::string ZarPoint::str() const {
    switch (kind_) {
        case Kind::Whole: return "whole";
        case Kind::InfPlace: return "inf-place";
        case Kind::FinPlace: return "fin-place(" + place_.str() + ")";
    }
    throw DomainError("unreachable point kind");
}

bool zarContains(const ZarPoint& p, const KRatFunc& psi) {
    if (!(p.field() == psi.field())) throw DomainError("point and function fields differ");
    if (psi.isZero()) return true;  // 0 belongs to every ring
    switch (p.kind()) {
        case ZarPoint::Kind::Whole: return true;
        case ZarPoint::Kind::InfPlace: return psi.den().degree() >= psi.num().degree();
        case ZarPoint::Kind::FinPlace:
            return ordAt(psi.num(), p.place()) >= ordAt(psi.den(), p.place());
    }
    throw DomainError("unreachable point kind");
}

// ---- certificates ---------------------------------------------------------------

namespace {

KRatFunc separatorOf(const ZarPoint& p) {
    switch (p.kind()) {
        case ZarPoint::Kind::Whole:
            throw DomainError("the generic point is the unique limit point; no separator");
        case ZarPoint::Kind::InfPlace:
            return KRatFunc::poly(KPoly::variable(p.field()));
        case ZarPoint::Kind::FinPlace:
            return KRatFunc::reciprocalOf(p.place());
    }
    throw DomainError("unreachable point kind");
}

IsolationCertificate verifyAgainst(const ZarPoint& p, std::vector<ZarPoint> sample,
                                   long degreeBound) {
    KRatFunc psi = separatorOf(p);
    bool sawSelf = false;
    bool unique = true;
    for (const auto& q : sample) {
        const bool member = zarContains(q, psi);
        if (q == p) {
            sawSelf = true;
            unique = unique && !member;
        } else {
            unique = unique && member;
        }
    }
    if (!sawSelf) {
        unique = unique && !zarContains(p, psi);
        sample.push_back(p);
    }
    return {p, std::move(psi), degreeBound, sample.size(), unique};
}

} // namespace

IsolationCertificate isolatedCertificate(const ZarPoint& p, long degreeBound) {
    std::vector<ZarPoint> sample;
    sample.push_back(ZarPoint::whole(p.field()));
    sample.push_back(ZarPoint::infPlace(p.field()));
    for (auto& f : monicIrreducibles(p.field(), degreeBound))
        sample.push_back(ZarPoint::finPlace(std::move(f)));
    return verifyAgainst(p, std::move(sample), degreeBound);
}

IsolationCertificate isolatedCertificate(const ZarPoint& p, std::vector<ZarPoint> sample) {
    sample.push_back(ZarPoint::whole(p.field()));
    sample.push_back(ZarPoint::infPlace(p.field()));
    return verifyAgainst(p, std::move(sample), -1);
}

bool genericPointCheck(const std::vector<KRatFunc>& opens, const std::vector<ZarPoint>& sample) {
    for (const auto& psi : opens) {
        bool nonempty = false;
        for (const auto& q : sample)
            if (zarContains(q, psi)) {
                nonempty = true;
                break;
            }
        if (!nonempty)
            throw DomainError("subbasic open " + psi.str() + " is empty on the sample");
    }
    if (opens.empty()) return true;
    const ZarPoint whole = ZarPoint::whole(opens.front().field());
    return std::all_of(opens.begin(), opens.end(),
                       [&](const KRatFunc& psi) { return zarContains(whole, psi); });
}

// ---- X_{alpha,delta} --------------------------------------------------------------

namespace {

void checkXad(const XadDescriptor& d) {
    requireSameConfig(d.alpha.config(), d.c.config(), "xad descriptor");
    if (d.c == FieldElem::zero(d.c.config()))
        throw DomainError("xad scale must be nonzero (it fixes the breadth)");
    if (const auto* z = std::get_if<FieldElem>(&d.z)) {
        requireSameConfig(d.alpha.config(), z->config(), "xad descriptor");
        if (!(z->valuation() >= ExtRat(Rat(0))))
            throw DomainError("residue representative needs v(z) >= 0");
    }
}

} // namespace

ZarPoint xadMap(const XadDescriptor& d) {
    checkXad(d);
    const FieldConfig& cfg = d.alpha.config();
    const BaseK k = cfg.residueField();
    if (const auto* marker = std::get_if<XadMarker>(&d.z)) {
        if (*marker == XadMarker::StationaryF) {
            if (!cfg.infiniteResidueField())
                throw DomainError(
                    "the stationary member needs an infinite residue field");
            return ZarPoint::whole(k);
        }
        return ZarPoint::infPlace(k);
    }
    const Rat res = std::get<FieldElem>(d.z).residue();
    return ZarPoint::finPlace(KPoly(k, {k.neg(res), Rat(1)}));  // t - residue(z)
}

SeqSpec xadRing(const XadDescriptor& d) {
    checkXad(d);
    const FieldConfig& cfg = d.alpha.config();
    const Rat delta = d.c.valuation().finite();
    if (const auto* marker = std::get_if<XadMarker>(&d.z)) {
        if (*marker == XadMarker::StationaryF)
            return SeqSpec(SeqKind::Stationary, d.alpha, GaugeGen::constant(delta),
                           CoeffStream{CoeffKind::Enumerate, {}, Rat(1), false});
        return zConstruct(d.alpha, ExtRat(delta));
    }
    const FieldElem base = d.alpha - d.c * std::get<FieldElem>(d.z);
    return SeqSpec(SeqKind::Divergent, base,
                   GaugeGen(GaugeFamily::DescendTo, ExtRat(delta), DyadicStepRule{Rat(1)}));
}

std::vector<ZarPoint> xadFinPlaces(const FieldConfig& cfg, const std::vector<FieldElem>& zs) {
    std::vector<Rat> seen;
    std::vector<ZarPoint> out;
    const BaseK k = cfg.residueField();
    for (const auto& z : zs) {
        requireSameConfig(cfg, z.config(), "xad family");
        if (!(z.valuation() >= ExtRat(Rat(0))))
            throw DomainError("residue representative needs v(z) >= 0");
        const Rat res = z.residue();
        for (const auto& s : seen)
            if (s == res)
                throw DomainError("duplicate residue " + res.str() +
                                  " among the representatives");
        seen.push_back(res);
        out.push_back(ZarPoint::finPlace(KPoly(k, {k.neg(res), Rat(1)})));
    }
    return out;
}

} // namespace pseudoval
