#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/rational.hpp"
#include "ncloc/upoly.hpp"

namespace ncloc {

// Euclidean-domain protocol for the two commutative bases: the integers and
// Q[x]. Canonical associates are positive integers / monic polynomials.
template <class B>
struct pid;

template <>
struct pid<bigint> {
    static bigint zero() { return 0; }
    static bigint one() { return 1; }
    static bool is_zero(const bigint& a) { return a == 0; }
    static bool is_unit(const bigint& a) { return a == 1 || a == -1; }
    static bigint canonical(const bigint& a) { return a < 0 ? bigint(-a) : a; }
    static bigint gcd(const bigint& a, const bigint& b) {
        return canonical(boost::multiprecision::gcd(a, b));
    }
    static std::pair<bigint, bigint> divmod(const bigint& a, const bigint& b) {
        bigint q = a / b, r = a % b;
        return {q, r};
    }
    static bigint div_exact(const bigint& a, const bigint& b) { return a / b; }
    static bool smaller(const bigint& a, const bigint& b) {
        return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
    }
    static std::string str(const bigint& a) { return a.str(); }
    static bool finite_quotients() { return true; }
    // all residues mod d, for finite enumeration; d nonzero
    static std::vector<bigint> residues(const bigint& d) {
        std::vector<bigint> out;
        for (bigint i = 0; i < canonical(d); ++i) out.push_back(i);
        return out;
    }
};

template <>
struct pid<upoly> {
    static upoly zero() { return upoly(); }
    static upoly one() { return upoly(rat(1)); }
    static bool is_zero(const upoly& a) { return a.is_zero(); }
    static bool is_unit(const upoly& a) { return a.degree() == 0; }
    static upoly canonical(const upoly& a) { return a.monic(); }
    static upoly gcd(const upoly& a, const upoly& b) { return ncloc::gcd(a, b); }
    static std::pair<upoly, upoly> divmod(const upoly& a, const upoly& b) { return a.divmod(b); }
    static upoly div_exact(const upoly& a, const upoly& b) { return a.divmod(b).first; }
    static bool smaller(const upoly& a, const upoly& b) { return a.degree() < b.degree(); }
    static std::string str(const upoly& a) { return a.str(); }
    static bool finite_quotients() { return false; }
    static std::vector<upoly> residues(const upoly&) {
        throw shape_error("Q[x] quotients are infinite");
    }
};

template <class B>
bool pid_divides(const B& a, const B& b) {  // a | b
    if (pid<B>::is_zero(a)) return pid<B>::is_zero(b);
    return pid<B>::is_zero(pid<B>::divmod(b, a).second);
}

template <class B>
B pid_lcm(const B& a, const B& b) {
    if (pid<B>::is_zero(a) || pid<B>::is_zero(b)) return pid<B>::zero();
    return pid<B>::canonical(pid<B>::div_exact(a * b, pid<B>::gcd(a, b)));
}

// Split d = u * v with u supported on the primes of the f's and v coprime to
// every f; returns {u, v}.
template <class B>
std::pair<B, B> strip_multiplicative_part(const B& d, const std::vector<B>& fs) {
    if (pid<B>::is_zero(d)) {
        // (0) = product of everything; the coprime part of 0 is 0
        return {pid<B>::one(), pid<B>::zero()};
    }
    B v = pid<B>::canonical(d);
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& f : fs) {
            if (pid<B>::is_zero(f)) continue;
            B g = pid<B>::gcd(v, f);
            while (!pid<B>::is_unit(g) && !pid<B>::is_zero(g)) {
                v = pid<B>::canonical(pid<B>::div_exact(v, g));
                progress = true;
                g = pid<B>::gcd(v, f);
            }
        }
    }
    B u = pid<B>::canonical(pid<B>::div_exact(pid<B>::canonical(d), v));
    return {u, v};
}

// ---- finitely generated modules in diagonal (Smith) coordinates ------------

template <class B>
struct smith_result {
    std::vector<B> diag;                 // elementary divisors, canonical associates
    std::vector<std::vector<B>> basis_change;  // V: original coords -> smith coords via x * V
    std::size_t gens = 0;
};

// Diagonalize the relation matrix (rows = relations in B^g) by row and
// column operations, tracking only the column side V since elements live in
// B^g. Plain elementary-divisor form; the divisibility chain is not forced.
template <class B>
smith_result<B> smith(std::vector<std::vector<B>> rel, std::size_t gens) {
    smith_result<B> out;
    out.gens = gens;
    auto& v = out.basis_change;
    v.assign(gens, std::vector<B>(gens, pid<B>::zero()));
    for (std::size_t i = 0; i < gens; ++i) v[i][i] = pid<B>::one();
    for (auto& row : rel)
        if (row.size() != gens) throw shape_error("relation length mismatch");

    std::size_t r = rel.size();
    std::size_t t = 0;
    auto col_sub = [&](std::size_t dst, std::size_t src, const B& q) {
        for (std::size_t i = 0; i < r; ++i) rel[i][dst] = rel[i][dst] - q * rel[i][src];
        for (std::size_t i = 0; i < gens; ++i) v[i][dst] = v[i][dst] - q * v[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < r; ++i) std::swap(rel[i][a], rel[i][b]);
        for (std::size_t i = 0; i < gens; ++i) std::swap(v[i][a], v[i][b]);
    };

    while (t < r && t < gens) {
        // find a nonzero pivot of minimal size at or after (t, t)
        std::size_t pi = r, pj = gens;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < gens; ++j) {
                if (pid<B>::is_zero(rel[i][j])) continue;
                if (pi == r || pid<B>::smaller(rel[i][j], rel[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == r) break;  // all zero
        std::swap(rel[t], rel[pi]);
        if (pj != t) col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (pid<B>::is_zero(rel[i][t])) continue;
                auto [q, rem] = pid<B>::divmod(rel[i][t], rel[t][t]);
                for (std::size_t j = t; j < gens; ++j)
                    rel[i][j] = rel[i][j] - q * rel[t][j];
                if (!pid<B>::is_zero(rem)) {
                    std::swap(rel[t], rel[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < gens; ++j) {
                if (pid<B>::is_zero(rel[t][j])) continue;
                auto [q, rem] = pid<B>::divmod(rel[t][j], rel[t][t]);
                col_sub(j, t, q);
                if (!pid<B>::is_zero(rem)) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }
    out.diag.assign(gens, pid<B>::zero());
    for (std::size_t j = 0; j < std::min(t, gens); ++j)
        out.diag[j] = pid<B>::canonical(rel[j][j]);
    return out;
}

// M = (+) B/(d_i) (+) B^free in diagonal coordinates. d_i are nonzero
// nonunits. Elements are coordinate vectors, torsion coordinates reduced.
template <class B>
class fgmodule {
  public:
    using elem = std::vector<B>;

    fgmodule() = default;
    fgmodule(std::vector<B> torsion, std::size_t free_rank)
        : inv_(std::move(torsion)), free_(free_rank) {
        for (auto& d : inv_) {
            d = pid<B>::canonical(d);
            if (pid<B>::is_zero(d) || pid<B>::is_unit(d))
                throw shape_error("torsion invariant must be a nonzero nonunit");
        }
    }

    // generators e_1..e_g modulo the given relation rows
    static fgmodule from_relations(const std::vector<std::vector<B>>& rel, std::size_t gens) {
        auto s = smith(rel, gens);
        fgmodule m;
        std::vector<std::size_t> torsion_pos, free_pos;
        for (std::size_t j = 0; j < gens; ++j) {
            if (pid<B>::is_zero(s.diag[j])) free_pos.push_back(j);
            else if (!pid<B>::is_unit(s.diag[j])) {
                m.inv_.push_back(s.diag[j]);
                torsion_pos.push_back(j);
            }
            // unit invariant: coordinate dies
        }
        m.free_ = free_pos.size();
        m.gen_images_.clear();
        for (std::size_t i = 0; i < gens; ++i) {
            elem x(m.dim(), pid<B>::zero());
            std::size_t k = 0;
            for (auto j : torsion_pos) x[k++] = s.basis_change[i][j];
            for (auto j : free_pos) x[k++] = s.basis_change[i][j];
            m.gen_images_.push_back(m.reduce(x));
        }
        return m;
    }

    const std::vector<B>& invariants() const { return inv_; }
    std::size_t free_rank() const { return free_; }
    std::size_t dim() const { return inv_.size() + free_; }
    bool is_zero_module() const { return dim() == 0; }
    const std::vector<elem>& generator_images() const { return gen_images_; }

    elem zero() const { return elem(dim(), pid<B>::zero()); }
    elem unit_vector(std::size_t i) const {
        elem x = zero();
        x[i] = pid<B>::one();
        return reduce(x);
    }

    elem reduce(elem x) const {
        if (x.size() != dim()) throw shape_error("element dimension mismatch");
        for (std::size_t i = 0; i < inv_.size(); ++i) {
            x[i] = pid<B>::divmod(x[i], inv_[i]).second;
            // keep a canonical nonneg/low-degree residue
            if constexpr (std::is_same_v<B, bigint>) {
                if (x[i] < 0) x[i] += inv_[i];
            }
        }
        return x;
    }

    elem add(const elem& a, const elem& b) const {
        elem x(a);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] + b[i];
        return reduce(x);
    }
    elem sub(const elem& a, const elem& b) const {
        elem x(a);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] - b[i];
        return reduce(x);
    }
    elem smul(const B& c, const elem& a) const {
        elem x(a);
        for (auto& xi : x) xi = c * xi;
        return reduce(x);
    }
    bool eq(const elem& a, const elem& b) const {
        return reduce(a) == reduce(b);
    }
    bool is_zero(const elem& a) const {
        for (const auto& xi : reduce(a))
            if (!pid<B>::is_zero(xi)) return false;
        return true;
    }

    // generator of the annihilator ideal of x; zero means only 0 kills x
    B annihilator(const elem& x_in) const {
        elem x = reduce(x_in);
        B a = pid<B>::one();
        for (std::size_t i = 0; i < inv_.size(); ++i) {
            if (pid<B>::is_zero(x[i])) continue;
            B need = pid<B>::div_exact(inv_[i], pid<B>::gcd(inv_[i], x[i]));
            a = pid_lcm(a, need);
        }
        for (std::size_t i = inv_.size(); i < x.size(); ++i)
            if (!pid<B>::is_zero(x[i])) return pid<B>::zero();
        return a;
    }

    // solve f y = x; unique when multiplication by f is injective
    std::optional<elem> divide_by(const B& f, const elem& x_in) const {
        elem x = reduce(x_in);
        elem y = zero();
        for (std::size_t i = 0; i < inv_.size(); ++i) {
            // y_i with f y_i = x_i (mod d_i): solvable iff gcd(f, d_i) | x_i
            B g = pid<B>::gcd(f, inv_[i]);
            if (!pid_divides(g, x[i])) return std::nullopt;
            // Bezout: a f + b d = g
            auto [a, b] = bezout(f, inv_[i]);
            (void)b;
            B scaled = pid<B>::div_exact(x[i], g);
            y[i] = pid<B>::divmod(a * scaled, inv_[i]).second;
        }
        for (std::size_t i = inv_.size(); i < x.size(); ++i) {
            if (pid<B>::is_zero(x[i])) continue;
            if (!pid_divides(f, x[i])) return std::nullopt;
            y[i] = pid<B>::div_exact(x[i], f);
        }
        return reduce(y);
    }

    std::optional<std::vector<elem>> enumerate_all(std::size_t cap = 4096) const {
        if (free_ > 0 || !pid<B>::finite_quotients()) return std::nullopt;
        std::vector<elem> out{zero()};
        for (std::size_t i = 0; i < inv_.size(); ++i) {
            auto res = pid<B>::residues(inv_[i]);
            std::vector<elem> next;
            for (const auto& x : out)
                for (const auto& r : res) {
                    elem y(x);
                    y[i] = r;
                    next.push_back(y);
                    if (next.size() > cap) return std::nullopt;
                }
            out = std::move(next);
        }
        return out;
    }

    std::string describe() const {
        std::string s;
        for (const auto& d : inv_) {
            if (!s.empty()) s += " + ";
            s += "B/(" + pid<B>::str(d) + ")";
        }
        for (std::size_t i = 0; i < free_; ++i) {
            if (!s.empty()) s += " + ";
            s += "B";
        }
        return s.empty() ? "0" : s;
    }

  private:
    static std::pair<B, B> bezout(const B& a0, const B& b0) {
        // returns (x, y) with x a0 + y b0 = gcd
        B a = a0, b = b0;
        B x0 = pid<B>::one(), x1 = pid<B>::zero();
        B y0 = pid<B>::zero(), y1 = pid<B>::one();
        while (!pid<B>::is_zero(b)) {
            auto [q, r] = pid<B>::divmod(a, b);
            a = b;
            b = r;
            B nx = x0 - q * x1;
            x0 = x1;
            x1 = nx;
            B ny = y0 - q * y1;
            y0 = y1;
            y1 = ny;
        }
        // a = gcd, possibly non-canonical associate; rescale
        B c = pid<B>::canonical(a);
        if (!pid<B>::is_zero(a) && !(a == c)) {
            B u = pid<B>::div_exact(c, a);  // unit
            x0 = x0 * u;
            y0 = y0 * u;
        }
        return {x0, y0};
    }

    std::vector<B> inv_;
    std::size_t free_ = 0;
    std::vector<elem> gen_images_;
};

// S-torsion submodule data for one multiplicative set: per torsion
// coordinate d = u * v with u the S-part.
template <class B>
struct torsion_split {
    std::vector<B> u;  // S-part of each invariant
    std::vector<B> v;  // coprime part of each invariant
};

template <class B>
torsion_split<B> split_torsion(const fgmodule<B>& m, const std::vector<B>& s_gens) {
    torsion_split<B> t;
    for (const auto& d : m.invariants()) {
        auto [u, v] = strip_multiplicative_part(d, s_gens);
        t.u.push_back(u);
        t.v.push_back(v);
    }
    return t;
}

// M/sigma_S(M): torsion coordinates shrink to their coprime parts; free part
// survives. Coordinates keep their positions (unit invariants collapse).
template <class B>
struct modded {
    fgmodule<B> mod;                  // M / sigma
    std::vector<std::size_t> keep;    // positions of surviving torsion coords in M
};

template <class B>
modded<B> mod_out_torsion(const fgmodule<B>& m, const std::vector<B>& s_gens) {
    auto t = split_torsion(m, s_gens);
    modded<B> out;
    std::vector<B> inv;
    for (std::size_t i = 0; i < t.v.size(); ++i) {
        if (!pid<B>::is_unit(t.v[i])) {
            inv.push_back(t.v[i]);
            out.keep.push_back(i);
        }
    }
    out.mod = fgmodule<B>(inv, m.free_rank());
    return out;
}

template <class B>
typename fgmodule<B>::elem project_mod_torsion(const fgmodule<B>& m, const modded<B>& q,
                                               const typename fgmodule<B>::elem& x) {
    typename fgmodule<B>::elem y;
    for (auto i : q.keep) y.push_back(x[i]);
    for (std::size_t i = m.invariants().size(); i < m.dim(); ++i) y.push_back(x[i]);
    return q.mod.reduce(y);
}

// ---- localized module: fractions m / s with s a closure product ------------

template <class B>
class loc_module {
  public:
    struct elem {
        typename fgmodule<B>::elem m;  // element of M/sigma
        B den;                         // product of S generators
    };

    loc_module() = default;
    loc_module(const fgmodule<B>& base, std::vector<B> s_gens)
        : base_(&base), s_gens_(std::move(s_gens)), q_(mod_out_torsion(base, s_gens_)) {}

    const fgmodule<B>& base() const { return *base_; }
    const fgmodule<B>& modded_module() const { return q_.mod; }
    const std::vector<B>& s_generators() const { return s_gens_; }

    elem from_base(const typename fgmodule<B>::elem& x) const {
        return {project_mod_torsion(*base_, q_, x), pid<B>::one()};
    }
    elem zero() const { return {q_.mod.zero(), pid<B>::one()}; }

    elem with_den(const typename fgmodule<B>::elem& modded_x, const B& den) const {
        return normalize({modded_x, den});
    }

    bool eq(const elem& a, const elem& b) const {
        // cross-multiply inside M/sigma, where every s in S acts injectively
        auto lhs = q_.mod.smul(b.den, a.m);
        auto rhs = q_.mod.smul(a.den, b.m);
        return q_.mod.eq(lhs, rhs);
    }
    bool is_zero(const elem& a) const { return q_.mod.is_zero(a.m); }

    elem add(const elem& a, const elem& b) const {
        elem r{q_.mod.add(q_.mod.smul(b.den, a.m), q_.mod.smul(a.den, b.m)), a.den * b.den};
        return normalize(r);
    }
    elem smul(const B& c, const elem& a) const { return normalize({q_.mod.smul(c, a.m), a.den}); }
    elem div_gen(const elem& a, const B& f) const { return normalize({a.m, a.den * f}); }

    // minimal-denominator representative: cancel generator factors that
    // divide the element exactly
    elem normalize(elem e) const {
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& f : s_gens_) {
                if (pid<B>::is_unit(f)) continue;
                if (!pid_divides(f, e.den)) continue;
                auto divided = q_.mod.divide_by(f, e.m);
                if (divided) {
                    e.den = pid<B>::div_exact(e.den, f);
                    e.m = *divided;
                    progress = true;
                }
            }
        }
        e.den = pid<B>::canonical(e.den);
        return e;
    }

  private:
    const fgmodule<B>* base_ = nullptr;
    std::vector<B> s_gens_;
    modded<B> q_;
};

}  // namespace ncloc
