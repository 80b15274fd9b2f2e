#include "pseudoval/rat.hpp"

namespace pseudoval {

Rat::Rat(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);  // operator/ canonicalizes
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.isZero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

bool Rat::isDyadic() const {
    mpz_class d = v_.get_den();
    // d > 0 and d has a single set bit  <=>  d is a power of two
    return mpz_popcount(d.get_mpz_t()) == 1;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

long Rat::toLong() const {
    if (!isInteger()) throw DomainError("toLong on non-integer rational " + str());
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p()) throw DomainError("rational out of long range");
    return n.get_si();
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (isZero()) {
        if (e < 0) throw DomainError("zero to a negative power");
        return Rat(0);
    }
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), ae);
    return e > 0 ? Rat(num, den) : Rat(den, num);
}

Rat Rat::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p) : Rat(mpz_class(1), p);
}

std::string Rat::str() const {
    return v_.get_str();
}

long padicOrder(const Rat& x, unsigned long p) {
    if (x.isZero()) throw DomainError("p-adic order of zero");
    if (p < 2) throw DomainError("p-adic order needs p >= 2");
    mpz_class pz(static_cast<unsigned long>(p));
    auto ord = [&pz](mpz_class n) {
        long k = 0;
        mpz_class q, r;
        for (;;) {
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
            if (r != 0) return k;
            n = q;
            ++k;
        }
    };
    return ord(x.numerator()) - ord(x.denominator());
}

} // namespace pseudoval
