#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/rational.hpp"

namespace ncloc {

// A word is a sequence of generator indices, stored as bytes. The empty word
// is the monoid unit.
using word = std::string;

inline word letter(std::size_t gen_index) { return word(1, static_cast<char>(gen_index)); }

// Word order: weighted degree, then length, then left-to-right comparison
// where the earlier-declared generator is the larger letter. All three keys
// are compatible with concatenation, which is what rule termination needs.
class word_order {
  public:
    word_order() = default;
    explicit word_order(std::vector<long long> weights) : w_(std::move(weights)) {}

    long long weight(const word& u) const {
        long long s = 0;
        for (unsigned char ch : u) s += ch < w_.size() ? w_[ch] : 1;
        return s;
    }

    // -1: u < v, 0: equal, +1: u > v
    int compare(const word& u, const word& v) const {
        long long wu = weight(u), wv = weight(v);
        if (wu != wv) return wu < wv ? -1 : 1;
        if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
        for (std::size_t i = 0; i < u.size(); ++i) {
            auto a = static_cast<unsigned char>(u[i]), b = static_cast<unsigned char>(v[i]);
            if (a != b) return a > b ? -1 : 1;  // smaller index = larger letter
        }
        return 0;
    }

    bool less(const word& u, const word& v) const { return compare(u, v) < 0; }

  private:
    std::vector<long long> w_;
};

// Polynomial in the free associative algebra over a coefficient field F
// (exact rationals by default; the rational-function field for symbolic
// deformation parameters). No stored term has a zero coefficient.
template <class F = rat>
class fpoly {
  public:
    using coeff = F;
    using term_map = std::map<word, F>;

    fpoly() = default;
    fpoly(const F& c) {  // NOLINT: scalars convert implicitly
        if (!c.is_zero()) t_[word()] = c;
    }
    fpoly(long long c) : fpoly(F(c)) {}
    static fpoly from_word(const word& w, const F& c = F(1)) {
        fpoly p;
        if (!c.is_zero()) p.t_[w] = c;
        return p;
    }

    const term_map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }
    std::size_t max_length() const {
        std::size_t m = 0;
        for (const auto& [w, c] : t_) m = std::max(m, w.size());
        return m;
    }
    F coeff_of(const word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? F(0) : it->second;
    }

    void add_term(const word& w, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend fpoly operator+(const fpoly& a, const fpoly& b) {
        fpoly r(a);
        for (const auto& [w, c] : b.t_) r.add_term(w, c);
        return r;
    }
    friend fpoly operator-(const fpoly& a, const fpoly& b) {
        fpoly r(a);
        for (const auto& [w, c] : b.t_) r.add_term(w, F(0) - c);
        return r;
    }
    fpoly operator-() const { return fpoly() - *this; }
    friend fpoly operator*(const fpoly& a, const fpoly& b) {
        fpoly r;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    friend fpoly operator*(const F& c, const fpoly& p) {
        fpoly r;
        for (const auto& [w, pc] : p.t_) r.add_term(w, c * pc);
        return r;
    }
    friend bool operator==(const fpoly& a, const fpoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const fpoly& a, const fpoly& b) { return !(a == b); }
    friend bool operator<(const fpoly& a, const fpoly& b) { return a.t_ < b.t_; }

  private:
    term_map t_;
};

using ncpoly = fpoly<rat>;

}  // namespace ncloc
