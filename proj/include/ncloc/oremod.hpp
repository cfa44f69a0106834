#pragma once

#include <optional>
#include <vector>

#include "ncloc/ore.hpp"

namespace ncloc {

// Class of (s, m) in S^{-1}M for M a free module of finite rank over the
// presented ring. Equality: exists r, r' with r s = r' s' in S and r m = r' m'.
template <class F = rat>
struct mod_fraction {
    fpoly<F> den;
    std::vector<fpoly<F>> elem;
};

template <class F = rat>
class ore_mod_calc {
  public:
    ore_mod_calc(const ore_calc<F>& calc, std::size_t rank) : calc_(&calc), rank_(rank) {}

    const ore_calc<F>& scalars() const { return *calc_; }
    std::size_t rank() const { return rank_; }

    mod_fraction<F> make(const fpoly<F>& den, std::vector<fpoly<F>> elem) const {
        const auto& R = calc_->ring();
        if (elem.size() != rank_) throw shape_error("module element rank mismatch");
        mod_fraction<F> m{R.normal_form(den), std::move(elem)};
        for (auto& e : m.elem) e = R.normal_form(e);
        return m;
    }
    mod_fraction<F> zero() const {
        return {fpoly<F>(F(1)), std::vector<fpoly<F>>(rank_, fpoly<F>())};
    }

    eq_result<F> eq(const mod_fraction<F>& x, const mod_fraction<F>& y,
                    std::size_t bound = 0) const {
        const auto& R = calc_->ring();
        if (bound == 0) {
            bound = calc_->bound_for({&x.den, &y.den});
            for (const auto& e : x.elem) bound += e.max_length();
            for (const auto& e : y.elem) bound += e.max_length();
        }
        auto basis = R.basis_words(bound);
        word_solver<F> solver;
        // unknown r against x, unknown r' against y; blocks: r s, r' s',
        // and the coordinatewise difference r m - r' m'
        for (const auto& w : basis) {
            auto p = fpoly<F>::from_word(w);
            fpoly<F> col = tag(0, R.normal_form(p * x.den));
            for (std::size_t i = 0; i < rank_; ++i)
                col = col + tag(2 + i, R.normal_form(p * x.elem[i]));
            solver.add_column(col);
        }
        for (const auto& w : basis) {
            auto p = fpoly<F>::from_word(w);
            fpoly<F> col = tag(1, R.normal_form(p * y.den));
            for (std::size_t i = 0; i < rank_; ++i)
                col = col - tag(2 + i, R.normal_form(p * y.elem[i]));
            solver.add_column(col);
        }
        for (const auto& u : calc_->set().closure(bound)) {
            auto target = tag(0, u) + tag(1, u);
            if (solver.solve(target)) {
                eq_result<F> r;
                r.v = verdict::yes;
                r.bound = bound;
                return r;
            }
        }
        eq_result<F> r;
        r.v = calc_->set().complete_strategy() ? verdict::no_within_bound : verdict::inconclusive;
        r.bound = bound;
        return r;
    }
    bool eq_true(const mod_fraction<F>& x, const mod_fraction<F>& y, std::size_t bound = 0) const {
        return eq(x, y, bound).v == verdict::yes;
    }

    // t^{-1} r . (s, m) = (s* t, r* m) where s* r = r* s
    std::optional<mod_fraction<F>> act(const ore_fraction<F>& f, const mod_fraction<F>& m,
                                       std::size_t bound = 0) const {
        const auto& R = calc_->ring();
        auto w = calc_->ore_witness(m.den, f.num, bound);
        if (!w) return std::nullopt;
        mod_fraction<F> out;
        out.den = R.normal_form(w->s_prime * f.den);
        for (const auto& e : m.elem) out.elem.push_back(R.normal_form(w->r_prime * e));
        return out;
    }

    // (s1, m1) + (s2, m2) = (r1~ s1, r1~ m1 + r2~ m2) with r1~ s1 = r2~ s2 in S
    std::optional<mod_fraction<F>> add(const mod_fraction<F>& x, const mod_fraction<F>& y,
                                       std::size_t bound = 0) const {
        const auto& R = calc_->ring();
        if (bound == 0) bound = calc_->bound_for({&x.den, &y.den});
        auto basis = R.basis_words(bound);
        word_solver<F> s1, s2;
        for (const auto& w : basis) {
            auto p = fpoly<F>::from_word(w);
            s1.add_column(R.normal_form(p * x.den));
            s2.add_column(R.normal_form(p * y.den));
        }
        for (const auto& u : calc_->set().closure(bound)) {
            auto a = s1.solve(u);
            if (!a) continue;
            auto b = s2.solve(u);
            if (!b) continue;
            auto r1 = calc_->combine(basis, *a);
            auto r2 = calc_->combine(basis, *b);
            mod_fraction<F> out;
            out.den = u;
            for (std::size_t i = 0; i < rank_; ++i)
                out.elem.push_back(R.normal_form(r1 * x.elem[i] + r2 * y.elem[i]));
            return out;
        }
        return std::nullopt;
    }

    // torsion criterion: the class of (s, m) vanishes iff some s'' in S
    // annihilates m
    std::optional<fpoly<F>> torsion_witness(const mod_fraction<F>& m, std::size_t bound) const {
        const auto& R = calc_->ring();
        for (const auto& s : calc_->set().closure(bound)) {
            bool kills = true;
            for (const auto& e : m.elem)
                if (!R.normal_form(s * e).is_zero()) {
                    kills = false;
                    break;
                }
            if (kills) return s;
        }
        return std::nullopt;
    }

  private:
    static fpoly<F> tag(std::size_t block, const fpoly<F>& p) {
        fpoly<F> s;
        for (const auto& [w, c] : p.terms())
            s.add_term(word(1, static_cast<char>(200 + block)) + w, c);
        return s;
    }

    const ore_calc<F>* calc_;
    std::size_t rank_;
};

}  // namespace ncloc
