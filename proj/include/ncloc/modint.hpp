#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ncloc/errors.hpp"

namespace ncloc {

// Residue in Z/n, n > 1. The modulus travels with the value; combining
// residues from different moduli is a usage error (mixed_rings), never a
// silent coercion.
class modint {
  public:
    modint() : v_(0), n_(2) {}
    modint(long long v, long long n) : n_(n) {
        if (n < 2) throw bad_presentation("modulus must be >= 2");
        v_ = v % n;
        if (v_ < 0) v_ += n;
    }

    long long value() const { return v_; }
    long long modulus() const { return n_; }
    std::string ring_id() const { return "Z/" + std::to_string(n_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % n_; }

    modint operator-() const { return modint(-v_, n_); }
    friend modint operator+(const modint& a, const modint& b) {
        a.check(b);
        return modint(a.v_ + b.v_, a.n_);
    }
    friend modint operator-(const modint& a, const modint& b) {
        a.check(b);
        return modint(a.v_ - b.v_, a.n_);
    }
    friend modint operator*(const modint& a, const modint& b) {
        a.check(b);
        return modint(a.v_ * b.v_, a.n_);
    }
    friend bool operator==(const modint& a, const modint& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const modint& a, const modint& b) { return !(a == b); }

    modint inv() const {
        // extended Euclid; non-units are a reportable error, not UB
        long long t = 0, new_t = 1, r = n_, new_r = v_;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1)
            throw not_invertible(std::to_string(v_) + " is not a unit in " + ring_id());
        return modint(t, n_);
    }

  private:
    void check(const modint& o) const {
        if (n_ != o.n_)
            throw mixed_rings("operands live in " + ring_id() + " and " + o.ring_id());
    }

    long long v_;
    long long n_;
};

inline std::optional<modint> try_inv(const modint& x) {
    long long g = x.value(), n = x.modulus();
    // gcd check without throwing
    long long a = g, b = n;
    while (b) { long long t = a % b; a = b; b = t; }
    if (a != 1) return std::nullopt;
    return x.inv();
}

}  // namespace ncloc
