#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "legknot/errors.hpp"

namespace legknot {

using Int = boost::multiprecision::cpp_int;

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Floor division (round toward -infinity); cpp_int's operator/ truncates.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// Exact rational scalar, always stored reduced with positive denominator.
// Every computation in this library runs on Rat or Int; nothing ever goes
// through floating point.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : num_(n) {}  // NOLINT: implicit by design
    Rat(Int n) : num_(std::move(n)) {}
    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    // Largest integer <= this.
    Int floor() const { return floor_div(num_, den_); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw DomainError("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    // Canonical text form "num/den" with den > 0, also for integers ("3/1").
    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);  // gcd(0, d) = d, so 0 normalizes to 0/1
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

inline Rat operator+(Rat a, const Rat& b) { return a += b; }
inline Rat operator-(Rat a, const Rat& b) { return a -= b; }
inline Rat operator*(Rat a, const Rat& b) { return a *= b; }
inline Rat operator/(Rat a, const Rat& b) { return a /= b; }

inline bool operator==(const Rat& a, const Rat& b) {
    return a.num() == b.num() && a.den() == b.den();
}
inline bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
// Denominators are positive, so cross-multiplication preserves order.
inline bool operator<(const Rat& a, const Rat& b) {
    return a.num() * b.den() < b.num() * a.den();
}
inline bool operator>(const Rat& a, const Rat& b) { return b < a; }
inline bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
inline bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

}  // namespace legknot
