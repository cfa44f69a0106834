#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ncloc/ore.hpp"

namespace ncloc {

// One solved level of the descending recursion: s_k' e_k - e_k' s lies one
// filtration level down (exactly zero at the floor).
template <class F>
struct level_witness {
    long long level = 0;
    fpoly<F> s_prime;
    fpoly<F> e_prime;
    fpoly<F> remainder;  // e_{k-1} = s_k' e_k - e_k' s
};

template <class F>
struct filtered_pair_report {
    fpoly<F> s, e;
    bool ok = false;
    long long failed_level = 0;
    std::vector<level_witness<F>> levels;
    fpoly<F> telescoped_s;  // product s'_{floor} ... s'_{top}
    fpoly<F> telescoped_r;  // e'_{floor} + s'_{floor} e'_{floor+1} + ...
    bool telescoped_valid = false;  // telescoped_r s = telescoped_s e, exactly
};

template <class F>
struct filtered_report {
    bool ok = true;
    long long floor = 0;
    std::vector<filtered_pair_report<F>> pairs;
};

namespace detail {

// keep only the terms of filtration degree >= k
template <class F>
fpoly<F> proj_at_least(const presented_ring<F>& R, const fpoly<F>& p, long long k) {
    fpoly<F> out;
    for (const auto& [w, c] : p.terms())
        if (R.filtration_degree(w) >= k) out.add_term(w, c);
    return out;
}

}  // namespace detail

// Bounded-below filtered-relative left Ore condition, checked level by
// descending level for one pair (s, e): at level k find s', e' with
// s' e - e' s in F_{k-1} (exact zero below the floor), then recurse on the
// remainder. On success the per-level witnesses telescope into a genuine
// Ore witness pair, which is validated exactly.
template <class F>
filtered_pair_report<F> filtered_ore_pair(const ore_calc<F>& calc, const fpoly<F>& s_in,
                                          const fpoly<F>& e_in, long long floor,
                                          std::size_t bound) {
    const auto& R = calc.ring();
    filtered_pair_report<F> rep;
    rep.s = R.normal_form(s_in);
    rep.e = R.normal_form(e_in);

    auto basis = R.basis_words(bound);
    auto closure = calc.set().closure(bound);

    fpoly<F> e_k = rep.e;
    long long k = 0;
    for (const auto& [w, c] : e_k.terms()) k = std::max(k, R.filtration_degree(w));
    if (e_k.is_zero()) k = floor;

    while (true) {
        if (e_k.is_zero()) {
            rep.ok = true;
            break;
        }
        // solve: terms of s' e_k - e' s in degrees >= k must vanish
        word_solver<F> solver;
        for (const auto& w : basis) {
            auto p = fpoly<F>::from_word(w);
            solver.add_column(detail::proj_at_least(R, R.normal_form(p * rep.s), k));
        }
        bool solved = false;
        for (const auto& sp : closure) {
            auto target = detail::proj_at_least(R, R.normal_form(sp * e_k), k);
            auto sol = solver.solve(target);
            if (!sol) continue;
            level_witness<F> lw;
            lw.level = k;
            lw.s_prime = sp;
            lw.e_prime = calc.combine(basis, *sol);
            lw.remainder = R.normal_form(sp * e_k - lw.e_prime * rep.s);
            rep.levels.push_back(lw);
            e_k = lw.remainder;
            solved = true;
            break;
        }
        if (!solved) {
            rep.failed_level = k;
            return rep;
        }
        if (k <= floor) {
            // at the floor the remainder must be exactly zero
            if (!e_k.is_zero()) {
                rep.failed_level = k;
                return rep;
            }
            rep.ok = true;
            break;
        }
        --k;
    }

    // telescope: r' = e'_f + s'_f (e'_{f+1} + s'_{f+1} (... e'_n)), i.e. the
    // sum e'_f + s'_f e'_{f+1} + ... + s'_f ... s'_{n-1} e'_n. Levels are
    // stored top level first, so fold forward with the top as the innermost
    // term; then r' s = (s'_f ... s'_n) e.
    fpoly<F> acc, s_tel(F(1));
    for (const auto& lw : rep.levels) {
        acc = R.normal_form(lw.e_prime + lw.s_prime * acc);
        s_tel = R.normal_form(lw.s_prime * s_tel);
    }
    rep.telescoped_r = acc;
    rep.telescoped_s = s_tel;
    rep.telescoped_valid =
        R.normal_form(rep.telescoped_r * rep.s - rep.telescoped_s * rep.e).is_zero();
    return rep;
}

// Runs the level-descent check for every closure element (as s) up to
// s_levels and every reduced word (as e) up to e_len.
template <class F>
filtered_report<F> filtered_ore_check(const ore_calc<F>& calc, long long floor,
                                      std::size_t s_levels, std::size_t e_len,
                                      std::size_t bound) {
    const auto& R = calc.ring();
    filtered_report<F> rep;
    rep.floor = floor;
    for (const auto& s : calc.set().closure(s_levels)) {
        if (s == fpoly<F>(F(1))) continue;
        for (const auto& w : R.basis_words(e_len)) {
            auto pr = filtered_ore_pair(calc, s, fpoly<F>::from_word(w), floor, bound);
            rep.ok &= pr.ok && pr.telescoped_valid;
            rep.pairs.push_back(std::move(pr));
        }
    }
    return rep;
}

}  // namespace ncloc
