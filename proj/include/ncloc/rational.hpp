#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ncloc/errors.hpp"

namespace ncloc {

using bigint = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0. Thin value
// wrapper over boost cpp_rational so equality is canonical and exact.
class rat {
  public:
    rat() : v_(0) {}
    rat(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int -> Q
    rat(const bigint& n) : v_(n) {}
    rat(const bigint& num, const bigint& den) : v_(num, den) {
        if (den == 0) throw not_invertible("rational with zero denominator");
    }
    rat(long long num, long long den) : rat(bigint(num), bigint(den)) {}

    static rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rat(bigint(s));
        return rat(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1)));
    }

    bigint num() const { return boost::multiprecision::numerator(v_); }
    bigint den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }

    rat operator-() const { return rat(bigint(-num()), den()); }
    rat& operator+=(const rat& o) { v_ += o.v_; return *this; }
    rat& operator-=(const rat& o) { v_ -= o.v_; return *this; }
    rat& operator*=(const rat& o) { v_ *= o.v_; return *this; }
    rat& operator/=(const rat& o) {
        if (o.is_zero()) throw not_invertible("division of rational by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rat operator+(rat a, const rat& b) { return a += b; }
    friend rat operator-(rat a, const rat& b) { return a -= b; }
    friend rat operator*(rat a, const rat& b) { return a *= b; }
    friend rat operator/(rat a, const rat& b) { return a /= b; }
    friend bool operator==(const rat& a, const rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rat& a, const rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const rat& a, const rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rat& a, const rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rat& a, const rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rat& a, const rat& b) { return a.v_ >= b.v_; }

    rat inv() const {
        if (is_zero()) throw not_invertible("inverse of zero rational");
        return rat(den(), num());
    }

    rat pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        rat acc(1), base(*this);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // "p" for integers, "p/q" otherwise; JSON reports use this verbatim
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

  private:
    boost::multiprecision::cpp_rational v_;
};

inline std::optional<rat> try_inv(const rat& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inv();
}

}  // namespace ncloc
