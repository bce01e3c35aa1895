#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "zkit/errors.hpp"

namespace zkit {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in canonical form: gcd(|num|, den) = 1,
/// den > 0. The multiprecision backend maintains the invariant; this wrapper
/// pins the serialized form ("num/den") and the accessors the rest of the
/// library relies on.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            return Rat(num, den);
        } catch (const std::exception&) {
            throw ParseError("malformed rational: " + s);
        }
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    Rat operator-() const { return Rat(cpp_rational(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(cpp_rational(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(cpp_rational(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(cpp_rational(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return Rat(cpp_rational(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rat& o) const {
        int c = v_.compare(o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// Largest integer <= value.
    Int floor() const {
        Int q = num() / den();
        if (num() < 0 && q * den() != num()) --q;
        return q;
    }
    Int ceil() const { return -(-*this).floor(); }

    /// value^n for n >= 0 (n small; exact).
    Rat pow(unsigned n) const {
        Rat r(1), base = *this;
        for (unsigned i = n; i > 0; i >>= 1) {
            if (i & 1) r *= base;
            if (i > 1) base *= base;
        }
        return r;
    }

    double to_double() const { return v_.convert_to<double>(); }

    /// Canonical "num/den" form, the wire format for every coordinate.
    std::string str() const { return num().str() + "/" + den().str(); }

private:
    using cpp_rational = boost::multiprecision::cpp_rational;
    explicit Rat(const cpp_rational& v) : v_(v) {}
    cpp_rational v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace zkit
