#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sincasym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
///
/// Every constructor and arithmetic operation leaves the value in canonical
/// form, so equality is structural equality of numerator and denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    /// Parses "p/q", "p", "+p/q" or "-p/q". Decimal points and exponents are refused.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    int sign() const noexcept { return num_.sign(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational abs() const { return num_.sign() < 0 ? -*this : *this; }
    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        return Rational(den_, num_);
    }

    /// "num/den", with "/den" omitted when den = 1 and a leading '-' only for negatives.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// True when gcd(|num|, den) = 1 and den > 0. Always holds for values built through this API.
    bool is_canonical() const {
        return den_ > 0 && boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_) == 1;
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
        s = trim(s);
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        bool negative = false;
        if (allow_sign && (s.front() == '+' || s.front() == '-')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw std::invalid_argument("missing digits in rational literal");
        for (char ch : s) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("not an exact rational literal: '" + std::string(s) + "'");
        }
        BigInt v{std::string(s)};
        if (negative) v = -v;
        return v;
    };
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    BigInt d = parse_int(text.substr(slash + 1), false);
    if (d.is_zero()) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(parse_int(text.substr(0, slash), true), std::move(d));
}

/// Rising factorial a(a+1)...(a+k-1); 1 when k = 0.
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational r(1);
    Rational term = a;
    for (unsigned i = 0; i < k; ++i) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

/// Correctly rounded (round-half-even) conversion of an exact rational to a binary
/// floating type. Works for any Real with numeric_limits<Real>::digits and ldexp.
template <class Real>
Real to_real(const Rational& q) {
    using std::ldexp;
    if (q.is_zero()) return Real(0);
    constexpr int digits = std::numeric_limits<Real>::digits;
    const BigInt p = boost::multiprecision::abs(q.num());
    const BigInt& d = q.den();
    const long long e = static_cast<long long>(boost::multiprecision::msb(p)) -
                        static_cast<long long>(boost::multiprecision::msb(d));
    // Shift so the integer quotient carries digits+2 or digits+3 significant bits.
    const long long shift = digits + 2 - e;
    BigInt quot, rem;
    if (shift >= 0)
        boost::multiprecision::divide_qr(BigInt(p << static_cast<unsigned>(shift)), d, quot, rem);
    else
        boost::multiprecision::divide_qr(p, BigInt(d << static_cast<unsigned>(-shift)), quot, rem);
    const long long bits = static_cast<long long>(boost::multiprecision::msb(quot)) + 1;
    long long extra = bits - digits;
    const BigInt low_mask = (BigInt(1) << static_cast<unsigned>(extra - 1)) - 1;
    const bool round_bit = boost::multiprecision::bit_test(quot, static_cast<unsigned>(extra - 1));
    const bool sticky = !rem.is_zero() || (quot & low_mask) != 0;
    BigInt mant = quot >> static_cast<unsigned>(extra);
    if (round_bit && (sticky || boost::multiprecision::bit_test(mant, 0))) {
        ++mant;
        if (boost::multiprecision::msb(mant) == static_cast<unsigned>(digits)) {
            mant >>= 1;
            ++extra;
        }
    }
    // mant < 2^digits, so the chunked accumulation below is exact.
    Real acc(0);
    const unsigned top = boost::multiprecision::msb(mant);
    for (int chunk = static_cast<int>(top / 32); chunk >= 0; --chunk) {
        const auto piece = static_cast<std::uint32_t>((mant >> (32 * chunk)) & 0xffffffffu);
        acc = ldexp(acc, 32) + Real(piece);
    }
    Real r = ldexp(acc, static_cast<int>(extra - shift));
    return q.sign() < 0 ? Real(-r) : r;
}

}  // namespace sincasym
