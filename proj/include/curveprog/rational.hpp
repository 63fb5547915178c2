#ifndef CURVEPROG_RATIONAL_HPP
#define CURVEPROG_RATIONAL_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "curveprog/errors.hpp"

namespace curveprog {

using Integer = mpz_class;

// Exact rational number, always stored in lowest terms with positive
// denominator. Equality is therefore structural, which lets Rational act as
// a hash key in the progression search.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw ZeroInput("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int signum() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroInput("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw ZeroInput("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    // e may be negative only for nonzero values.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(r); // powers of a canonical fraction stay canonical
    }

    // height(p/q) = max(|p|, |q|) in lowest terms
    Integer height() const {
        Integer a = ::abs(num());
        const Integer& b = den();
        return a >= b ? a : b;
    }

    // "p/q", or just "p" when the denominator is 1
    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

// Accepts "p" and "p/q" with optional leading sign.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&](std::size_t pos, const std::string& why) -> ParseError {
        return ParseError(pos, "bad rational '" + std::string(text) + "': " + why);
    };
    if (text.empty()) throw bad(0, "empty");
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view s, std::size_t off) {
        if (s.empty()) throw bad(off, "empty integer");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad(off, "sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw bad(off + j, "unexpected character");
        Integer mag(std::string(s.substr(i)), 10);
        return s[0] == '-' ? Integer(-mag) : mag;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
    Integer num = parse_int(text.substr(0, slash), 0);
    Integer den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw bad(slash + 1, "zero denominator");
    return Rational(num, den);
}

inline std::size_t hash_integer(const Integer& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
        h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace curveprog

template <>
struct std::hash<curveprog::Rational> {
    std::size_t operator()(const curveprog::Rational& r) const {
        std::size_t h = curveprog::hash_integer(r.num());
        h ^= curveprog::hash_integer(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

#endif
