#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pseudoval/errors.hpp"

namespace pseudoval {

// Arbitrary-precision rational, always kept canonical (reduced, denominator > 0).
// mpq_class does not canonicalize fraction constructions on its own, hence the wrapper.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(long n, long d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool isZero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool isInteger() const { return v_.get_den() == 1; }

    // True iff the denominator is a power of two (membership in Z[1/2]).
    bool isDyadic() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    mpz_class floor() const;

    // Exact conversion to long; requires an integer value that fits.
    long toLong() const;

    Rat pow(long e) const;          // this^e, e may be negative (then *this != 0)
    static Rat pow2(long e);        // 2^e for any integer e

    std::string str() const;        // "a" or "a/b", canonical
    double toDouble() const { return v_.get_d(); }  // display only, never normative

private:
    mpq_class v_;
};

// p-adic order of a nonzero rational: ord_p(num) - ord_p(den).
long padicOrder(const Rat& x, unsigned long p);

} // namespace pseudoval
