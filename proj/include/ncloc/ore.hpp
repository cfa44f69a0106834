#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/freealg.hpp"
#include "ncloc/linsolve.hpp"
#include "ncloc/presentation.hpp"

namespace ncloc {

// Three-valued answer for bounded searches: a miss is only a definitive "no"
// when the registered witness strategy is complete for the instance family.
enum class verdict { yes, no_within_bound, inconclusive };

inline std::string to_string(verdict v) {
    switch (v) {
        case verdict::yes: return "yes";
        case verdict::no_within_bound: return "no-within-bound";
        default: return "inconclusive";
    }
}

// Multiplicative closure of a generator list inside a presented ring.
// Elements are kept as normal forms; enumeration is by product level, so
// "degree" in search loops means "number of generator factors".
template <class F = rat>
class ore_set {
  public:
    ore_set(const presented_ring<F>& ring, std::vector<fpoly<F>> gens, bool complete = false)
        : ring_(&ring), complete_(complete) {
        for (auto& g : gens) {
            auto n = ring.normal_form(g);
            if (n.is_zero()) throw bad_presentation("zero generator in multiplicative set");
            gens_.push_back(n);
        }
    }

    const presented_ring<F>& ring() const { return *ring_; }
    const std::vector<fpoly<F>>& generators() const { return gens_; }
    bool complete_strategy() const { return complete_; }

    // all products of at most `levels` generators, deduplicated, plus 1;
    // deterministic order: by level, then by term-map comparison
    std::vector<fpoly<F>> closure(std::size_t levels) const {
        std::vector<fpoly<F>> out{fpoly<F>(F(1))};
        std::vector<fpoly<F>> frontier(out);
        for (std::size_t l = 0; l < levels; ++l) {
            std::vector<fpoly<F>> next;
            for (const auto& c : frontier) {
                for (const auto& g : gens_) {
                    auto p = ring_->normal_form(c * g);
                    if (p.is_zero()) continue;  // degenerate sets may reach 0; skip as denominator
                    if (std::find(out.begin(), out.end(), p) == out.end() &&
                        std::find(next.begin(), next.end(), p) == next.end())
                        next.push_back(p);
                }
            }
            if (next.empty()) break;
            std::sort(next.begin(), next.end());
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        return out;
    }

    bool contains(const fpoly<F>& p, std::size_t levels) const {
        auto n = ring_->normal_form(p);
        auto cl = closure(levels);
        return std::find(cl.begin(), cl.end(), n) != cl.end();
    }

  private:
    const presented_ring<F>* ring_;
    std::vector<fpoly<F>> gens_;
    bool complete_;
};

// Left fraction denom^{-1} numer. Stored un-normalized; equality is the Ore
// equivalence, decided by ore_calc.
template <class F = rat>
struct ore_fraction {
    fpoly<F> den;
    fpoly<F> num;
};

template <class F>
struct eq_result {
    verdict v = verdict::inconclusive;
    std::size_t bound = 0;
    // witness (s~, r~) with s~ s' = r~ s and s~ r' = r~ r, when v == yes
    fpoly<F> s_tilde, r_tilde;
};

template <class F>
struct witness_pair {
    fpoly<F> s_prime;
    fpoly<F> r_prime;
};

// Fraction calculus for one (ring, Ore set) pair. All searches are bounded:
// closure elements are enumerated up to the bound, the ring-side unknown is
// solved exactly as a linear system over the reduced words of length <= bound.
template <class F = rat>
class ore_calc {
  public:
    ore_calc(const presented_ring<F>& ring, ore_set<F> set, std::size_t default_bound = 8)
        : ring_(&ring), set_(std::move(set)), default_bound_(default_bound) {}

    const presented_ring<F>& ring() const { return *ring_; }
    const ore_set<F>& set() const { return set_; }

    std::size_t bound_for(std::initializer_list<const fpoly<F>*> inputs) const {
        std::size_t s = 4;
        for (const auto* p : inputs) s += p->max_length();
        return std::max(default_bound_, s);
    }

    ore_fraction<F> make(const fpoly<F>& den, const fpoly<F>& num,
                         bool check_membership = true) const {
        auto d = ring_->normal_form(den);
        auto n = ring_->normal_form(num);
        if (check_membership && !set_.contains(d, bound_for({&d})))
            throw bad_presentation("denominator not found in the multiplicative closure");
        return {d, n};
    }
    ore_fraction<F> embed(const fpoly<F>& r) const {
        return {fpoly<F>(F(1)), ring_->normal_form(r)};
    }
    ore_fraction<F> one() const { return embed(fpoly<F>(F(1))); }
    ore_fraction<F> zero() const { return embed(fpoly<F>()); }

    // left Ore witness for (s, r): s' in closure, r' in span of reduced
    // words, with NF(s' r - r' s) = 0
    std::optional<witness_pair<F>> ore_witness(const fpoly<F>& s, const fpoly<F>& r,
                                               std::size_t bound = 0) const {
        if (bound == 0) bound = bound_for({&s, &r});
        auto sn = ring_->normal_form(s);
        auto rn = ring_->normal_form(r);
        auto basis = ring_->basis_words(bound);
        word_solver<F> solver;
        for (const auto& w : basis) solver.add_column(ring_->normal_form(fpoly<F>::from_word(w) * sn));
        for (const auto& cand : set_.closure(bound)) {
            auto target = ring_->normal_form(cand * rn);
            auto sol = solver.solve(target);
            if (sol) return witness_pair<F>{cand, combine(basis, *sol)};
        }
        return std::nullopt;
    }

    eq_result<F> eq(const ore_fraction<F>& x, const ore_fraction<F>& y,
                    std::size_t bound = 0) const {
        if (bound == 0) bound = bound_for({&x.den, &x.num, &y.den, &y.num});
        // find s~ in S, r~ in R with s~ y.den = r~ x.den and s~ y.num = r~ x.num
        auto basis = ring_->basis_words(bound);
        word_solver<F> solver;
        for (const auto& w : basis) {
            auto p = fpoly<F>::from_word(w);
            solver.add_column(stack2(ring_->normal_form(p * x.den), ring_->normal_form(p * x.num)));
        }
        for (const auto& cand : set_.closure(bound)) {
            auto target = stack2(ring_->normal_form(cand * y.den), ring_->normal_form(cand * y.num));
            auto sol = solver.solve(target);
            if (sol) {
                eq_result<F> r;
                r.v = verdict::yes;
                r.bound = bound;
                r.s_tilde = cand;
                r.r_tilde = combine(basis, *sol);
                return r;
            }
        }
        eq_result<F> r;
        r.v = set_.complete_strategy() ? verdict::no_within_bound : verdict::inconclusive;
        r.bound = bound;
        return r;
    }

    bool eq_true(const ore_fraction<F>& x, const ore_fraction<F>& y, std::size_t bound = 0) const {
        return eq(x, y, bound).v == verdict::yes;
    }
    bool is_zero(const ore_fraction<F>& x, std::size_t bound = 0) const {
        return eq_true(x, zero(), bound);
    }

    // product via r~ y.den = s~ x.num: (s~ x.den)^{-1} (r~ y.num)
    std::optional<ore_fraction<F>> mul(const ore_fraction<F>& x, const ore_fraction<F>& y,
                                       std::size_t bound = 0) const {
        auto ws = mul_witnesses(x, y, 1, bound);
        if (ws.empty()) return std::nullopt;
        return ws.front();
    }

    // first k products computed from distinct middle witnesses; used to test
    // that the result class does not depend on the witness choice
    std::vector<ore_fraction<F>> mul_witnesses(const ore_fraction<F>& x, const ore_fraction<F>& y,
                                               std::size_t k, std::size_t bound = 0) const {
        if (bound == 0) bound = bound_for({&x.den, &x.num, &y.den, &y.num});
        std::vector<ore_fraction<F>> out;
        auto basis = ring_->basis_words(bound);
        word_solver<F> solver;
        for (const auto& w : basis)
            solver.add_column(ring_->normal_form(fpoly<F>::from_word(w) * y.den));
        for (const auto& cand : set_.closure(bound)) {
            if (out.size() >= k) break;
            auto target = ring_->normal_form(cand * x.num);
            auto sol = solver.solve(target);
            if (!sol) continue;
            auto r_tilde = combine(basis, *sol);
            out.push_back({ring_->normal_form(cand * x.den), ring_->normal_form(r_tilde * y.num)});
        }
        return out;
    }

    // sum via s~ x.den = r~ y.den: (s~ x.den)^{-1} (s~ x.num + r~ y.num)
    std::optional<ore_fraction<F>> add(const ore_fraction<F>& x, const ore_fraction<F>& y,
                                       std::size_t bound = 0) const {
        if (bound == 0) bound = bound_for({&x.den, &x.num, &y.den, &y.num});
        auto basis = ring_->basis_words(bound);
        word_solver<F> solver;
        for (const auto& w : basis)
            solver.add_column(ring_->normal_form(fpoly<F>::from_word(w) * y.den));
        for (const auto& cand : set_.closure(bound)) {
            auto target = ring_->normal_form(cand * x.den);
            auto sol = solver.solve(target);
            if (!sol) continue;
            auto r_tilde = combine(basis, *sol);
            return ore_fraction<F>{target, ring_->normal_form(cand * x.num + r_tilde * y.num)};
        }
        return std::nullopt;
    }

    ore_fraction<F> neg(const ore_fraction<F>& x) const { return {x.den, -x.num}; }
    std::optional<ore_fraction<F>> sub(const ore_fraction<F>& x, const ore_fraction<F>& y,
                                       std::size_t bound = 0) const {
        return add(x, neg(y), bound);
    }

    fpoly<F> combine(const std::vector<word>& basis, const std::vector<F>& coeffs) const {
        fpoly<F> p;
        for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
        return p;
    }

  private:
    static fpoly<F> stack2(const fpoly<F>& a, const fpoly<F>& b) {
        fpoly<F> s;
        for (const auto& [w, c] : a.terms()) s.add_term(word(1, static_cast<char>(200)) + w, c);
        for (const auto& [w, c] : b.terms()) s.add_term(word(1, static_cast<char>(201)) + w, c);
        return s;
    }

    const presented_ring<F>* ring_;
    ore_set<F> set_;
    std::size_t default_bound_;
};

// ---- practical predicates ---------------------------------------------------

template <class F>
struct predicate_pair {
    fpoly<F> s, r;
    bool found = false;
    fpoly<F> s_prime, r_prime;
};

template <class F>
struct predicate_report {
    std::vector<predicate_pair<F>> lore_s1_a;   // witnesses r' free in R
    std::vector<predicate_pair<F>> slore_s1_a;  // witnesses r' restricted to span(A)
    std::vector<predicate_pair<F>> lore_s_a;    // s ranges over the closure
    bool lore_s1_a_all = true, slore_s1_a_all = true, lore_s_a_all = true;
    std::size_t bound = 0;
};

// Evaluates lOre(S1, A), slOre(S1, A) and lOre(S, A) by bounded search.
// slOre demands the ring-side witness inside the additive span of A.
template <class F>
predicate_report<F> check_predicates(const ore_calc<F>& calc, const std::vector<fpoly<F>>& s1,
                                     const std::vector<fpoly<F>>& a, std::size_t bound) {
    const auto& R = calc.ring();
    predicate_report<F> rep;
    rep.bound = bound;
    auto basis = R.basis_words(bound);
    auto closure = calc.set().closure(bound);

    auto run_pair = [&](const fpoly<F>& s, const fpoly<F>& r, bool span_a_only) {
        predicate_pair<F> pr;
        pr.s = R.normal_form(s);
        pr.r = R.normal_form(r);
        word_solver<F> solver;
        std::vector<fpoly<F>> cols;
        if (span_a_only)
            for (const auto& ai : a) cols.push_back(R.normal_form(ai));
        else
            for (const auto& w : basis) cols.push_back(fpoly<F>::from_word(w));
        for (const auto& c : cols) solver.add_column(R.normal_form(c * pr.s));
        for (const auto& cand : closure) {
            auto sol = solver.solve(R.normal_form(cand * pr.r));
            if (sol) {
                pr.found = true;
                pr.s_prime = cand;
                fpoly<F> rp;
                for (std::size_t i = 0; i < cols.size(); ++i) rp = rp + (*sol)[i] * cols[i];
                pr.r_prime = R.normal_form(rp);
                break;
            }
        }
        return pr;
    };

    for (const auto& s : s1)
        for (const auto& r : a) {
            auto p1 = run_pair(s, r, false);
            rep.lore_s1_a_all &= p1.found;
            rep.lore_s1_a.push_back(p1);
            auto p2 = run_pair(s, r, true);
            rep.slore_s1_a_all &= p2.found;
            rep.slore_s1_a.push_back(p2);
        }
    for (const auto& s : closure)
        for (const auto& r : a) {
            auto p = run_pair(s, r, false);
            rep.lore_s_a_all &= p.found;
            rep.lore_s_a.push_back(p);
        }
    return rep;
}

// ---- the warning-theorem computation ---------------------------------------

struct counterexample_report {
    long long n = 0;
    std::size_t deg_bound = 0;
    long long rhs_exponent = 2;
    bool solution_found = false;
    ncpoly p;                    // the found P with D^n z1 = P D^rhs
    std::size_t kernel_dim = 0;  // homogeneous solutions of sum c_w NF(w D^rhs) = 0
    std::size_t basis_size = 0;
};

// Decides, by exact linear algebra over the reduced words of length <= deg_p,
// whether D^n z1 = P D^rhs_exponent has a solution P in the given
// counterexample-family ring.
inline counterexample_report counterexample_nonexistence(const qring& ring, long long n,
                                                         std::size_t deg_p,
                                                         long long rhs_exponent = 2) {
    counterexample_report rep;
    rep.n = n;
    rep.deg_bound = deg_p;
    rep.rhs_exponent = rhs_exponent;
    word z1 = ring.gen_word("z1");
    word d = ring.gen_word("D");
    word dn, drhs;
    for (long long i = 0; i < n; ++i) dn += d;
    for (long long i = 0; i < rhs_exponent; ++i) drhs += d;

    auto basis = ring.basis_words(deg_p);
    rep.basis_size = basis.size();
    word_solver<rat> solver;
    for (const auto& w : basis) solver.add_column(ring.normal_form(ncpoly::from_word(w + drhs)));
    rep.kernel_dim = solver.kernel_dim();
    auto target = ring.normal_form(ncpoly::from_word(dn + z1));
    auto sol = solver.solve(target);
    if (sol) {
        rep.solution_found = true;
        for (std::size_t i = 0; i < basis.size(); ++i) rep.p.add_term(basis[i], (*sol)[i]);
    }
    return rep;
}

// ---- assorted section checks ------------------------------------------------

// Annihilation pairs (s, w) with s in the closure, w a reduced word, s w = 0.
template <class F>
std::vector<std::pair<fpoly<F>, fpoly<F>>> find_annihilations(const ore_calc<F>& calc,
                                                              std::size_t bound) {
    std::vector<std::pair<fpoly<F>, fpoly<F>>> out;
    const auto& R = calc.ring();
    for (const auto& s : calc.set().closure(bound)) {
        for (const auto& w : R.basis_words(bound)) {
            if (w.empty()) continue;
            auto p = fpoly<F>::from_word(w);
            if (R.normal_form(s * p).is_zero()) out.emplace_back(s, p);
        }
    }
    return out;
}

// Given s n = 0, find s0 in the closure with s0 (r n) = 0; existence for all
// r is the two-sided ideal property of I_S.
template <class F>
std::optional<fpoly<F>> annihilator_for(const ore_calc<F>& calc, const fpoly<F>& x,
                                        std::size_t bound) {
    const auto& R = calc.ring();
    auto n = R.normal_form(x);
    for (const auto& s : calc.set().closure(bound))
        if (R.normal_form(s * n).is_zero()) return s;
    return std::nullopt;
}

// Left Ore condition for the product set {s t}: given st and r, search
// s' in S, t' in T, r' with r' (s t) = (s' t') r.
template <class F>
bool product_set_ore_witness(const presented_ring<F>& R, const ore_set<F>& s_set,
                             const ore_set<F>& t_set, const fpoly<F>& st, const fpoly<F>& r,
                             std::size_t bound) {
    auto basis = R.basis_words(bound);
    word_solver<F> solver;
    auto stn = R.normal_form(st);
    for (const auto& w : basis) solver.add_column(R.normal_form(fpoly<F>::from_word(w) * stn));
    for (const auto& sp : s_set.closure(bound))
        for (const auto& tp : t_set.closure(bound)) {
            auto target = R.normal_form(sp * tp * r);
            if (solver.solve(target)) return true;
        }
    return false;
}

template <class F>
struct commutative_relation_result {
    bool commutative_formula_holds = false;
    verdict ore_equality = verdict::inconclusive;
    bool agree = false;
};

// The commutative-style criterion  exists s~ in S with s~ (s r' - s' r) = 0
// for fractions x = s^{-1} r, y = s'^{-1} r', compared against genuine Ore
// equality. Disagreements are the point of the check.
template <class F>
commutative_relation_result<F> commutative_relation_check(const ore_calc<F>& calc,
                                                          const ore_fraction<F>& x,
                                                          const ore_fraction<F>& y,
                                                          std::size_t bound = 0) {
    const auto& R = calc.ring();
    if (bound == 0) bound = calc.bound_for({&x.den, &x.num, &y.den, &y.num});
    commutative_relation_result<F> out;
    auto inner = R.normal_form(x.den * y.num - y.den * x.num);
    for (const auto& cand : calc.set().closure(bound)) {
        if (R.normal_form(cand * inner).is_zero()) {
            out.commutative_formula_holds = true;
            break;
        }
    }
    out.ore_equality = calc.eq(x, y, bound).v;
    out.agree = out.commutative_formula_holds == (out.ore_equality == verdict::yes);
    return out;
}

}  // namespace ncloc
