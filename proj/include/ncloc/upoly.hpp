#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/rational.hpp"

namespace ncloc {

// Dense univariate polynomial over Q. Coefficient vector never has a trailing
// zero, so representation equality is ring equality.
class upoly {
  public:
    upoly() = default;
    upoly(const rat& c) {  // NOLINT: constants convert implicitly
        if (!c.is_zero()) c_.push_back(c);
    }
    upoly(long long c) : upoly(rat(c)) {}
    explicit upoly(std::vector<rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static upoly x(long long power = 1, const rat& coeff = rat(1)) {
        if (coeff.is_zero()) return upoly();
        std::vector<rat> c(static_cast<std::size_t>(power) + 1, rat(0));
        c.back() = coeff;
        return upoly(std::move(c));
    }

    long long degree() const { return static_cast<long long>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : rat(0); }
    rat lead() const { return c_.empty() ? rat(0) : c_.back(); }

    friend bool operator==(const upoly& a, const upoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const upoly& a, const upoly& b) { return !(a == b); }

    upoly operator-() const {
        upoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend upoly operator+(const upoly& a, const upoly& b) {
        std::vector<rat> c(std::max(a.c_.size(), b.c_.size()), rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return upoly(std::move(c));
    }
    friend upoly operator-(const upoly& a, const upoly& b) { return a + (-b); }
    friend upoly operator*(const upoly& a, const upoly& b) {
        if (a.is_zero() || b.is_zero()) return upoly();
        std::vector<rat> c(a.c_.size() + b.c_.size() - 1, rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return upoly(std::move(c));
    }

    // euclidean division, exact over Q
    std::pair<upoly, upoly> divmod(const upoly& d) const {
        if (d.is_zero()) throw not_invertible("polynomial division by zero");
        upoly r(*this), q;
        std::vector<rat> qc(r.c_.size() > d.c_.size() - 1 ? r.c_.size() - d.c_.size() + 1 : 1,
                            rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            rat f = r.lead() / d.lead();
            auto k = static_cast<std::size_t>(r.degree() - d.degree());
            qc[k] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[k + i] -= f * d.c_[i];
            r.trim();
        }
        return {upoly(std::move(qc)), r};
    }

    upoly monic() const {
        if (is_zero()) return *this;
        rat l = lead();
        upoly r(*this);
        for (auto& c : r.c_) c = c / l;
        return r;
    }

    upoly pow(long long e) const {
        upoly acc(rat(1)), base(*this);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    rat eval(const rat& v) const {
        rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (long long i = degree(); i >= 0; --i) {
            rat c = coeff(static_cast<std::size_t>(i));
            if (c.is_zero()) continue;
            if (!s.empty()) s += c > rat(0) ? " + " : " - ";
            else if (c < rat(0)) s += "-";
            rat a = c < rat(0) ? -c : c;
            if (i == 0 || !a.is_one()) s += a.str();
            if (i > 0) {
                if (!a.is_one()) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<rat> c_;
};

inline upoly gcd(upoly a, upoly b) {
    while (!b.is_zero()) {
        upoly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

// Field of fractions Q(x); reduced, monic denominator.
class ratfunc {
  public:
    ratfunc() : num_(), den_(rat(1)) {}
    ratfunc(const rat& c) : num_(c), den_(rat(1)) {}  // NOLINT
    ratfunc(long long c) : num_(rat(c)), den_(rat(1)) {}
    ratfunc(const upoly& p) : num_(p), den_(rat(1)) {}  // NOLINT
    ratfunc(upoly n, upoly d) {
        if (d.is_zero()) throw not_invertible("rational function with zero denominator");
        upoly g = gcd(n, d);
        if (!g.is_zero() && !g.is_one()) {
            n = n.divmod(g).first;
            d = d.divmod(g).first;
        }
        rat l = d.lead();
        num_ = n * upoly(l.inv());
        den_ = d.monic();
    }

    static ratfunc x() { return ratfunc(upoly::x()); }

    const upoly& num() const { return num_; }
    const upoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const ratfunc& a, const ratfunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ratfunc& a, const ratfunc& b) { return !(a == b); }

    ratfunc operator-() const {
        ratfunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend ratfunc operator+(const ratfunc& a, const ratfunc& b) {
        return ratfunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ratfunc operator-(const ratfunc& a, const ratfunc& b) { return a + (-b); }
    friend ratfunc operator*(const ratfunc& a, const ratfunc& b) {
        return ratfunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ratfunc operator/(const ratfunc& a, const ratfunc& b) { return a * b.inv(); }

    ratfunc inv() const {
        if (is_zero()) throw not_invertible("inverse of zero rational function");
        return ratfunc(den_, num_);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    upoly num_;
    upoly den_;
};

inline std::optional<ratfunc> try_inv(const ratfunc& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inv();
}

}  // namespace ncloc
