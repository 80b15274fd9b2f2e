#include "pseudoval/literals.hpp"

#include <cctype>

#include "pseudoval/errors.hpp"

namespace pseudoval {

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    void ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool done() {
        ws();
        return pos >= s.size();
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }
    bool tryEat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!tryEat(c)) fail(std::string("expected '") + c + "'");
    }
    bool tryEatWord(const std::string& w) {
        ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    void expectEnd() {
        ws();
        if (pos != s.size()) fail("trailing input");
    }

    mpz_class integer() {
        ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        mpz_class z(s.substr(digits, pos - digits));
        return neg ? mpz_class(-z) : z;
    }

    Rat rational() {
        mpz_class num = integer();
        if (tryEat('/')) {
            std::size_t at = pos;
            mpz_class den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return Rat(num, den);
        }
        return Rat(num);
    }

    ExtRat extended() {
        ws();
        if (tryEatWord("-inf")) return ExtRat::minusInfinity();
        if (tryEatWord("inf")) return ExtRat::plusInfinity();
        return ExtRat(rational());
    }

    long smallInt(const char* what) {
        mpz_class z = integer();
        if (!z.fits_slong_p()) fail(std::string(what) + " out of range");
        return z.get_si();
    }
};

// One dyadic term: `c*t^(q)` or a bare rational constant.
Term dyadicTerm(Scanner& sc) {
    Rat coeff = sc.rational();
    sc.ws();
    if (sc.tryEat('*')) {
        sc.expect('t');
        sc.expect('^');
        sc.expect('(');
        Rat exp = sc.rational();
        sc.expect(')');
        return {coeff, exp};
    }
    return {coeff, Rat(0)};
}

std::vector<Term> dyadicTerms(Scanner& sc) {
    std::vector<Term> ts;
    ts.push_back(dyadicTerm(sc));
    while (sc.tryEat('+')) ts.push_back(dyadicTerm(sc));
    return ts;
}

FieldElem element(const FieldConfig& cfg, Scanner& sc) {
    if (cfg.kind() == FieldConfig::Kind::PAdic) return FieldElem::fromRational(cfg, sc.rational());
    sc.ws();
    if (sc.peek() == '(') {
        // "(num terms)/(den terms)" — or a parenthesized term list.
        sc.expect('(');
        std::vector<Term> num = dyadicTerms(sc);
        sc.expect(')');
        if (!sc.tryEat('/')) return FieldElem::fromTerms(cfg, num);
        sc.expect('(');
        std::vector<Term> den = dyadicTerms(sc);
        sc.expect(')');
        return FieldElem::fromTerms(cfg, num) / FieldElem::fromTerms(cfg, den);
    }
    return FieldElem::fromTerms(cfg, dyadicTerms(sc));
}

// One coefficient of a bracketed row. Accepts bare element literals, the
// printer's wrapped form "(elem)", and the fraction spelling "(num)/(den)"
// whether wrapped or split across parens at this level.
FieldElem listElement(const FieldConfig& cfg, Scanner& sc) {
    sc.ws();
    if (sc.peek() != '(') return element(cfg, sc);
    sc.expect('(');
    FieldElem v = element(cfg, sc);
    sc.expect(')');
    if (sc.tryEat('/')) {
        sc.expect('(');
        FieldElem den = element(cfg, sc);
        sc.expect(')');
        return v / den;
    }
    return v;
}

// Bracketed coefficient row of a raw rational function: either a comma list
// (positional, low degree first) or the printed expression form
// "(c0) + (c1)*X + (c2)*X^2". Decorated coefficients must be parenthesized;
// repeated degrees accumulate.
std::vector<FieldElem> rawCoeffRow(const FieldConfig& cfg, Scanner& sc) {
    sc.expect('[');
    std::vector<FieldElem> out;
    sc.ws();
    if (sc.tryEat(']')) return out;
    auto put = [&](std::size_t deg, const FieldElem& c) {
        while (out.size() <= deg) out.push_back(FieldElem::zero(cfg));
        out[deg] = out[deg] + c;
    };
    std::size_t next = 0;
    for (;;) {
        FieldElem c = listElement(cfg, sc);
        std::size_t deg = next;
        if (sc.tryEat('*')) {
            sc.expect('X');
            deg = 1;
            if (sc.tryEat('^')) {
                std::size_t at = sc.pos;
                long d = sc.smallInt("coefficient degree");
                if (d < 1) throw ParseError("coefficient degree must be positive", at);
                deg = static_cast<std::size_t>(d);
            }
        }
        put(deg, c);
        next = deg + 1;
        if (sc.tryEat(',') || sc.tryEat('+')) continue;
        sc.expect(']');
        return out;
    }
}

std::vector<Rat> ratList(Scanner& sc) {
    sc.expect('[');
    std::vector<Rat> out;
    if (!sc.tryEat(']')) {
        out.push_back(sc.rational());
        while (sc.tryEat(',')) out.push_back(sc.rational());
        sc.expect(']');
    }
    return out;
}

// Polynomial expression as printed by KPoly::str(): monomials `c*t^d`, `t^d`,
// `c*t`, `t`, or a bare constant, joined by " + " (any term order accepted).
std::vector<Rat> polyExpr(Scanner& sc) {
    std::vector<Rat> coeffs;
    auto addTerm = [&](const Rat& c, long d) {
        if (coeffs.size() <= static_cast<std::size_t>(d)) coeffs.resize(d + 1, Rat(0));
        coeffs[static_cast<std::size_t>(d)] = coeffs[static_cast<std::size_t>(d)] + c;
    };
    do {
        sc.ws();
        Rat c(1);
        bool sawVar = false;
        if (sc.peek() == 't') {
            sc.expect('t');
            sawVar = true;
        } else {
            c = sc.rational();
            if (sc.tryEat('*')) {
                sc.expect('t');
                sawVar = true;
            }
        }
        long d = 0;
        if (sawVar) {
            d = 1;
            if (sc.tryEat('^')) {
                std::size_t at = sc.pos;
                d = sc.smallInt("polynomial degree");
                if (d < 1) throw ParseError("polynomial degree must be positive", at);
            }
        }
        addTerm(c, d);
    } while (sc.tryEat('+'));
    return coeffs;
}

// Coefficient list or printed polynomial expression.
std::vector<Rat> polyCoeffs(Scanner& sc) {
    sc.ws();
    return sc.peek() == '[' ? ratList(sc) : polyExpr(sc);
}

} // namespace

Rat parseRat(const std::string& text) {
    Scanner sc{text};
    Rat r = sc.rational();
    sc.expectEnd();
    return r;
}

ExtRat parseExtRat(const std::string& text) {
    Scanner sc{text};
    ExtRat r = sc.extended();
    sc.expectEnd();
    return r;
}

FieldElem parseElement(const FieldConfig& cfg, const std::string& text) {
    Scanner sc{text};
    FieldElem e = element(cfg, sc);
    sc.expectEnd();
    return e;
}

RatFunc parseRatFunc(const FieldConfig& cfg, const std::string& text) {
    Scanner sc{text};
    sc.ws();
    if (sc.peek() == '[') {
        std::vector<FieldElem> num = rawCoeffRow(cfg, sc);
        sc.expect('/');
        std::vector<FieldElem> den = rawCoeffRow(cfg, sc);
        sc.expectEnd();
        return RatFunc::raw(cfg, std::move(num), std::move(den));
    }
    if (sc.tryEatWord("X")) {
        sc.expectEnd();
        return RatFunc::linear(FieldElem::zero(cfg));
    }
    sc.expect('(');
    FieldElem scale = element(cfg, sc);
    sc.expect(')');
    std::vector<FactoredFactor> factors;
    while (sc.tryEat('*')) {
        sc.expect('(');
        sc.expect('X');
        sc.expect('-');
        sc.expect('(');
        FieldElem root = element(cfg, sc);
        sc.expect(')');
        sc.expect(')');
        long exp = 1;
        if (sc.tryEat('^')) exp = sc.smallInt("factor exponent");
        factors.push_back({std::move(root), exp});
    }
    sc.expectEnd();
    return RatFunc::factored(std::move(scale), std::move(factors));
}

KPoly parseKPoly(BaseK k, const std::string& text) {
    Scanner sc{text};
    std::vector<Rat> coeffs = polyCoeffs(sc);
    sc.expectEnd();
    return KPoly(k, std::move(coeffs));
}

KRatFunc parseKRatFunc(BaseK k, const std::string& text) {
    Scanner sc{text};
    sc.ws();
    std::vector<Rat> num;
    if (sc.peek() == '(') {
        sc.expect('(');
        num = polyCoeffs(sc);
        sc.expect(')');
    } else {
        num = polyCoeffs(sc);
    }
    if (sc.done()) return KRatFunc::poly(KPoly(k, std::move(num)));
    sc.expect('/');
    sc.ws();
    std::vector<Rat> den;
    if (sc.peek() == '(') {
        sc.expect('(');
        den = polyCoeffs(sc);
        sc.expect(')');
    } else {
        den = polyCoeffs(sc);
    }
    sc.expectEnd();
    return KRatFunc::of(KPoly(k, std::move(num)), KPoly(k, std::move(den)));
}

ZarPoint parseZarPoint(BaseK k, const std::string& text) {
    Scanner sc{text};
    if (sc.tryEatWord("whole")) {
        sc.expectEnd();
        return ZarPoint::whole(k);
    }
    if (sc.tryEatWord("inf-place")) {
        sc.expectEnd();
        return ZarPoint::infPlace(k);
    }
    if (sc.tryEatWord("fin-place")) {
        sc.expect('(');
        std::vector<Rat> coeffs = polyCoeffs(sc);
        sc.expect(')');
        sc.expectEnd();
        return ZarPoint::finPlace(KPoly(k, std::move(coeffs)));
    }
    sc.fail("expected 'whole', 'inf-place' or 'fin-place([...])'");
}

} // namespace pseudoval
