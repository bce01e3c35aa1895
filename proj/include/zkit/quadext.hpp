#pragma once

#include <compare>
#include <cmath>
#include <string>
#include <utility>

#include "zkit/errors.hpp"
#include "zkit/rat.hpp"

namespace zkit {

namespace detail {

/// Splits n >= 0 as s^2 * d with d squarefree. Trial division up to the cube
/// root leaves a remainder that is 1, p, p*q or p^2 for primes p, q above the
/// bound; the perfect-square check settles the p^2 case.
inline std::pair<Int, Int> extract_square(Int n) {
    Int s = 1;
    if (n == 0) return {1, 0};
    for (Int i = 2; i * i * i <= n; ++i) {
        Int sq = i * i;
        while (n % sq == 0) {
            n /= sq;
            s *= i;
        }
    }
    Int root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
        s *= root;
        n = 1;
    }
    return {s, n};
}

}  // namespace detail

/// Number of the form a + b*sqrt(c) with rational a, b and squarefree integer
/// radicand c >= 0. Canonical form: c == 0 exactly when b == 0, and c is never
/// a perfect square, so equality is structural. This is the full scalar domain
/// of the library: line/ball and line/cone intersection parameters are roots
/// of rational quadratics and never nest radicals.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {}        // NOLINT(google-explicit-constructor)

    QuadExt(const Rat& a, const Rat& b, const Rat& c) : a_(a), b_(b) {
        if (c.sign() < 0) throw NegativeRadicand("radicand must be nonnegative");
        if (b.is_zero() || c.is_zero()) {
            b_ = Rat(0);
            return;
        }
        // sqrt(N/D) = sqrt(N*D)/D; pull out the square part of N*D.
        auto [s, d] = detail::extract_square(c.num() * c.den());
        if (d == 1) {
            a_ += b_ * Rat(s, c.den());
            b_ = Rat(0);
        } else {
            b_ = b_ * Rat(s, c.den());
            c_ = d;
        }
        if (b_.is_zero()) c_ = 0;
    }

    static QuadExt sqrt_of(const Rat& c) { return QuadExt(Rat(0), Rat(1), c); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    Rat c() const { return Rat(c_); }

    bool is_rational() const { return b_.is_zero(); }
    Rat as_rat() const {
        if (!is_rational()) throw InvalidArgument("QuadExt value is irrational");
        return a_;
    }

    /// Exact sign of a + b*sqrt(c): when a and b disagree in sign the radical
    /// is isolated and squared, comparing a^2 against b^2 c.
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == sb) return sa;
        int t = (a_ * a_ - b_ * b_ * Rat(c_)).sign();
        return sa > 0 ? t : -t;
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, c_, 0); }

    QuadExt operator+(const QuadExt& o) const {
        Int c = merged_radicand(o);
        return QuadExt(a_ + o.a_, b_ + o.b_, c, 0);
    }
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }

    QuadExt operator*(const QuadExt& o) const {
        if (b_.is_zero() || o.b_.is_zero() || c_ == o.c_) {
            Int c = merged_radicand(o);
            // (a1 + b1 r)(a2 + b2 r) with r^2 = c
            return QuadExt(a_ * o.a_ + b_ * o.b_ * Rat(c),
                           a_ * o.b_ + b_ * o.a_, c, 0);
        }
        throw MixedRadicand("product would mix radicands sqrt(" + c_.str() +
                            ") and sqrt(" + o.c_.str() + ")");
    }

    QuadExt operator/(const QuadExt& o) const {
        if (o.is_zero()) throw DivisionByZero("QuadExt division by zero");
        // 1/(a + b r) = (a - b r) / (a^2 - b^2 c)
        Rat denom = o.a_ * o.a_ - o.b_ * o.b_ * Rat(o.c_);
        QuadExt conj(o.a_ / denom, -o.b_ / denom, o.c_, 0);
        return *this * conj;
    }

    bool operator==(const QuadExt& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    std::strong_ordering operator<=>(const QuadExt& o) const {
        int s = cmp(o);
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Total order across radicands. Write x - y = P - Q with
    /// P = (a1-a2) + b1 sqrt(c1) and Q = b2 sqrt(c2); when P and Q share a
    /// sign the comparison squares both sides, P^2 - Q^2 again being a
    /// single-radical quantity with computable sign.
    int cmp(const QuadExt& o) const {
        if (c_ == o.c_) {
            // Same radicand: difference is representable, one sign call.
            return QuadExt(a_ - o.a_, b_ - o.b_, c_, 0).sign();
        }
        Rat da = a_ - o.a_;
        int sp = QuadExt(da, b_, c_, 0).sign();
        int sq = o.b_.sign();  // sign of b2*sqrt(c2), c2 > 0 here unless b2 == 0
        if (o.c_ == 0) sq = 0;
        if (sp != sq) return sp < sq ? -1 : 1;
        if (sp == 0) return 0;
        // P^2 - Q^2 = (da^2 + b1^2 c1 - b2^2 c2) + 2 da b1 sqrt(c1)
        int t = QuadExt(da * da + b_ * b_ * Rat(c_) - o.b_ * o.b_ * Rat(o.c_),
                        Rat(2) * da * b_, c_, 0)
                    .sign();
        return sp > 0 ? t : -t;
    }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(Rat(c_).to_double());
    }

    std::string str() const {
        if (is_rational()) return a_.str();
        return a_.str() + "+" + b_.str() + "*sqrt(" + c_.str() + ")";
    }

private:
    // Canonical-form fast path: c is already a squarefree integer.
    QuadExt(Rat a, Rat b, Int c, int) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (b_.is_zero() || c_ == 0) {
            b_ = Rat(0);
            c_ = 0;
        }
    }

    Int merged_radicand(const QuadExt& o) const {
        if (b_.is_zero()) return o.c_;
        if (o.b_.is_zero()) return c_;
        if (c_ == o.c_) return c_;
        throw MixedRadicand("sum would mix radicands sqrt(" + c_.str() +
                            ") and sqrt(" + o.c_.str() + ")");
    }

    Rat a_{0};
    Rat b_{0};
    Int c_{0};
};

enum class Ordering { Less, Equal, Greater };

/// Spec-facing comparison: total order on quadratic extensions agreeing with
/// the reals.
inline Ordering qe_cmp(const QuadExt& x, const QuadExt& y) {
    int c = x.cmp(y);
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

}  // namespace zkit
