#include "pseudoval/field.hpp"

#include <algorithm>

namespace pseudoval {

namespace {

bool isPrime(unsigned long p) {
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

} // namespace

Rat BaseK::normalize(const Rat& c) const {
    if (p == 0) return c;
    // c must be p-integral: reduce num * den^{-1} mod p
    mpz_class pz(p);
    mpz_class den = c.denominator();
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw DomainError("coefficient " + c.str() + " is not defined in F_" + std::to_string(p));
    mpz_class r = (c.numerator() % pz) * deninv % pz;
    if (r < 0) r += pz;
    return Rat(r);
}

Rat BaseK::inv(const Rat& a) const {
    if (p == 0) {
        if (a.isZero()) throw DomainError("inverse of zero");
        return Rat(1) / a;
    }
    mpz_class pz(p);
    mpz_class az = normalize(a).numerator();
    mpz_class r;
    if (az == 0 || mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw DomainError("inverse of zero in F_" + std::to_string(p));
    return Rat(r);
}

FieldConfig FieldConfig::padic(unsigned long p) {
    if (!isPrime(p)) throw DomainError("padic requires a prime, got " + std::to_string(p));
    return FieldConfig(Kind::PAdic, p);
}

FieldConfig FieldConfig::dyadicOverFp(unsigned long p) {
    if (!isPrime(p)) throw DomainError("dyadic-f requires a prime, got " + std::to_string(p));
    return FieldConfig(Kind::DyadicT, p);
}

BaseK FieldConfig::coefficientField() const {
    // PAdic sequence coefficients are residue representatives, so F_p either way
    return BaseK{p_};
}

BaseK FieldConfig::residueField() const {
    return BaseK{p_};
}

std::string FieldConfig::str() const {
    if (kind_ == Kind::PAdic) return "padic-" + std::to_string(p_);
    return p_ == 0 ? "dyadic-q" : "dyadic-f" + std::to_string(p_);
}

FieldConfig FieldConfig::parse(const std::string& text) {
    auto prime = [&](std::size_t at) -> unsigned long {
        if (at >= text.size()) throw ParseError("missing prime in field name '" + text + "'", at);
        unsigned long p = 0;
        for (std::size_t i = at; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("bad prime in field name '" + text + "'", i);
            p = p * 10 + static_cast<unsigned long>(text[i] - '0');
            if (p > 1000000000UL) throw ParseError("prime too large", i);
        }
        return p;
    };
    if (text.rfind("padic-", 0) == 0) return padic(prime(6));
    if (text == "dyadic-q") return dyadicOverQ();
    if (text.rfind("dyadic-f", 0) == 0) return dyadicOverFp(prime(8));
    throw ParseError("unknown field '" + text + "' (expect padic-<p>, dyadic-q, dyadic-f<p>)", 0);
}

void requireSameConfig(const FieldConfig& a, const FieldConfig& b, const char* op) {
    if (!(a == b))
        throw DomainError(std::string(op) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

// ---- term-list helpers (DyadicT) ------------------------------------------

namespace {

using Terms = std::vector<Term>;

// Merge-sort-combine into canonical order; drops zero coefficients.
Terms canonicalTerms(const BaseK& k, Terms ts) {
    for (auto& t : ts) t.coeff = k.normalize(t.coeff);
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    Terms out;
    for (auto& t : ts) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff = k.add(out.back().coeff, t.coeff);
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [&](const Term& t) { return t.coeff.isZero(); });
    return out;
}

Terms mulTerms(const BaseK& k, const Terms& a, const Terms& b) {
    Terms out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(Term{k.mul(x.coeff, y.coeff), x.exp + y.exp});
    return canonicalTerms(k, std::move(out));
}

Terms addTerms(const BaseK& k, const Terms& a, const Terms& b) {
    Terms out = a;
    out.insert(out.end(), b.begin(), b.end());
    return canonicalTerms(k, std::move(out));
}

Terms negTerms(const BaseK& k, Terms a) {
    for (auto& t : a) t.coeff = k.neg(t.coeff);
    return a;
}

} // namespace

// ---- FieldElem -------------------------------------------------------------

FieldElem FieldElem::zero(const FieldConfig& cfg) {
    FieldElem e(cfg);
    if (cfg.kind() == FieldConfig::Kind::DyadicT) e.den_ = {Term{Rat(1), Rat(0)}};
    return e;
}

FieldElem FieldElem::one(const FieldConfig& cfg) {
    return fromRational(cfg, Rat(1));
}

FieldElem FieldElem::fromRational(const FieldConfig& cfg, const Rat& value) {
    FieldElem e(cfg);
    if (cfg.kind() == FieldConfig::Kind::PAdic) {
        e.rational_ = value;
    } else {
        e.num_ = {Term{value, Rat(0)}};
        e.den_ = {Term{Rat(1), Rat(0)}};
        e.canonicalize();
    }
    return e;
}

FieldElem FieldElem::monomial(const FieldConfig& cfg, const Rat& coeff, const Rat& exp) {
    if (cfg.kind() != FieldConfig::Kind::DyadicT)
        throw DomainError("monomial terms only exist in dyadic-t fields");
    FieldElem e(cfg);
    e.num_ = {Term{coeff, exp}};
    e.den_ = {Term{Rat(1), Rat(0)}};
    e.canonicalize();
    return e;
}

FieldElem FieldElem::fromTerms(const FieldConfig& cfg, std::vector<Term> num, std::vector<Term> den) {
    if (cfg.kind() != FieldConfig::Kind::DyadicT)
        throw DomainError("term-list elements only exist in dyadic-t fields");
    FieldElem e(cfg);
    e.num_ = std::move(num);
    e.den_ = den.empty() ? Terms{Term{Rat(1), Rat(0)}} : std::move(den);
    e.canonicalize();
    return e;
}

void FieldElem::canonicalize() {
    BaseK k = cfg_.coefficientField();
    for (const auto& t : num_)
        if (!t.exp.isDyadic())
            throw DomainError("exponent " + t.exp.str() + " is not in Z[1/2]");
    for (const auto& t : den_)
        if (!t.exp.isDyadic())
            throw DomainError("exponent " + t.exp.str() + " is not in Z[1/2]");
    num_ = canonicalTerms(k, std::move(num_));
    den_ = canonicalTerms(k, std::move(den_));
    if (den_.empty()) throw DomainError("zero denominator");
    if (num_.empty()) {
        den_ = {Term{Rat(1), Rat(0)}};
        return;
    }
    // shift so v(den) = 0, then scale so den's least-exponent coefficient is 1
    Rat shift = den_.front().exp;
    if (!shift.isZero()) {
        for (auto& t : num_) t.exp -= shift;
        for (auto& t : den_) t.exp -= shift;
    }
    Rat lc = den_.front().coeff;
    if (!(lc == Rat(1))) {
        Rat ilc = k.inv(lc);
        for (auto& t : num_) t.coeff = k.mul(t.coeff, ilc);
        for (auto& t : den_) t.coeff = k.mul(t.coeff, ilc);
    }
}

bool FieldElem::isZero() const {
    return cfg_.kind() == FieldConfig::Kind::PAdic ? rational_.isZero() : num_.empty();
}

FieldElem FieldElem::operator-() const {
    FieldElem e(cfg_);
    if (cfg_.kind() == FieldConfig::Kind::PAdic) {
        e.rational_ = -rational_;
    } else {
        e.num_ = negTerms(cfg_.coefficientField(), num_);
        e.den_ = den_;
    }
    return e;
}

FieldElem FieldElem::inverse() const {
    if (isZero()) throw DomainError("inverse of zero");
    FieldElem e(cfg_);
    if (cfg_.kind() == FieldConfig::Kind::PAdic) {
        e.rational_ = Rat(1) / rational_;
    } else {
        e.num_ = den_;
        e.den_ = num_;
        e.canonicalize();
    }
    return e;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    requireSameConfig(a.cfg_, b.cfg_, "add");
    FieldElem e(a.cfg_);
    if (a.cfg_.kind() == FieldConfig::Kind::PAdic) {
        e.rational_ = a.rational_ + b.rational_;
    } else {
        BaseK k = a.cfg_.coefficientField();
        e.num_ = addTerms(k, mulTerms(k, a.num_, b.den_), mulTerms(k, b.num_, a.den_));
        e.den_ = mulTerms(k, a.den_, b.den_);
        e.canonicalize();
    }
    return e;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    requireSameConfig(a.cfg_, b.cfg_, "mul");
    FieldElem e(a.cfg_);
    if (a.cfg_.kind() == FieldConfig::Kind::PAdic) {
        e.rational_ = a.rational_ * b.rational_;
    } else {
        BaseK k = a.cfg_.coefficientField();
        e.num_ = mulTerms(k, a.num_, b.num_);
        e.den_ = mulTerms(k, a.den_, b.den_);
        e.canonicalize();
    }
    return e;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    requireSameConfig(a.cfg_, b.cfg_, "eq");
    if (a.cfg_.kind() == FieldConfig::Kind::PAdic) return a.rational_ == b.rational_;
    BaseK k = a.cfg_.coefficientField();
    return mulTerms(k, a.num_, b.den_) == mulTerms(k, b.num_, a.den_);
}

ExtRat FieldElem::valuation() const {
    if (isZero()) return ExtRat::plusInfinity();
    if (cfg_.kind() == FieldConfig::Kind::PAdic)
        return ExtRat(Rat(padicOrder(rational_, cfg_.prime())));
    return ExtRat(num_.front().exp - den_.front().exp);
}

Rat FieldElem::residue() const {
    ExtRat v = valuation();
    if (v < ExtRat(0)) throw DomainError("residue of negative-valuation element");
    if (v > ExtRat(0)) return Rat(0);
    BaseK rk = cfg_.residueField();
    if (cfg_.kind() == FieldConfig::Kind::PAdic) {
        // v = 0 and the fraction is reduced, so the denominator is prime to p
        return rk.normalize(rational_);
    }
    auto coeffAt = [](const Terms& ts, const Rat& e) {
        for (const auto& t : ts)
            if (t.exp == e) return t.coeff;
        return Rat(0);
    };
    return rk.mul(coeffAt(num_, Rat(0)), rk.inv(coeffAt(den_, Rat(0))));
}

Rat FieldElem::leadingCoeff() const {
    if (isZero()) throw DomainError("leading coefficient of zero");
    if (cfg_.kind() == FieldConfig::Kind::PAdic) {
        long v = padicOrder(rational_, cfg_.prime());
        Rat unit = rational_ / Rat(static_cast<long>(cfg_.prime())).pow(v);
        return cfg_.residueField().normalize(unit);
    }
    BaseK k = cfg_.coefficientField();
    return k.mul(num_.front().coeff, k.inv(den_.front().coeff));
}

FieldElem FieldElem::standardPart() const {
    if (isZero()) throw DomainError("standard part of zero");
    Rat lc = leadingCoeff();
    if (cfg_.kind() == FieldConfig::Kind::PAdic) {
        long v = padicOrder(rational_, cfg_.prime());
        return fromRational(cfg_, lc * Rat(static_cast<long>(cfg_.prime())).pow(v));
    }
    return monomial(cfg_, lc, valuation().finite());
}

const std::vector<Term>& FieldElem::numeratorTerms() const {
    if (cfg_.kind() != FieldConfig::Kind::DyadicT) throw DomainError("no term form for padic elements");
    return num_;
}

const std::vector<Term>& FieldElem::denominatorTerms() const {
    if (cfg_.kind() != FieldConfig::Kind::DyadicT) throw DomainError("no term form for padic elements");
    return den_;
}

const Rat& FieldElem::rationalValue() const {
    if (cfg_.kind() != FieldConfig::Kind::PAdic) throw DomainError("no rational form for dyadic-t elements");
    return rational_;
}

namespace {

std::string termsStr(const Terms& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) out += " + ";
        if (ts[i].exp.isZero()) {
            out += ts[i].coeff.str();
        } else {
            out += ts[i].coeff.str() + "*t^(" + ts[i].exp.str() + ")";
        }
    }
    return out;
}

} // namespace

std::string FieldElem::str() const {
    if (cfg_.kind() == FieldConfig::Kind::PAdic) return rational_.str();
    if (num_.empty()) return "0";
    bool trivialDen = den_.size() == 1 && den_.front().coeff == Rat(1) && den_.front().exp.isZero();
    if (trivialDen) return termsStr(num_);
    return "(" + termsStr(num_) + ")/(" + termsStr(den_) + ")";
}

} // namespace pseudoval
