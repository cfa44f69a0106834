#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncloc/ore.hpp"

namespace ncloc {

// A derivation given on generators and extended to the whole presented ring
// by the Leibniz rule. Construction checks that the images are compatible
// with every defining relation, so the map descends to the quotient.
template <class F = rat>
class derivation {
  public:
    derivation(const presented_ring<F>& ring, std::vector<fpoly<F>> gen_images)
        : ring_(&ring), images_(std::move(gen_images)) {
        if (images_.size() != ring.generators().size())
            throw bad_presentation("one image per generator required");
        for (auto& im : images_) im = ring.normal_form(im);
        for (const auto& rule : ring.rules()) {
            auto lhs = apply_raw(fpoly<F>::from_word(rule.lead));
            auto rhs = apply_raw(rule.repl);
            if (!ring.normal_form(lhs - rhs).is_zero())
                throw bad_presentation("derivation does not respect the relations");
        }
    }

    const presented_ring<F>& ring() const { return *ring_; }

    fpoly<F> operator()(const fpoly<F>& p) const { return ring_->normal_form(apply_raw(p)); }

  private:
    fpoly<F> apply_raw(const fpoly<F>& p) const {
        fpoly<F> out;
        for (const auto& [w, c] : p.terms()) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                auto g = static_cast<std::size_t>(static_cast<unsigned char>(w[i]));
                fpoly<F> term = fpoly<F>::from_word(w.substr(0, i), c) * images_[g] *
                                fpoly<F>::from_word(w.substr(i + 1));
                out = out + term;
            }
        }
        return out;
    }

    const presented_ring<F>* ring_;
    std::vector<fpoly<F>> images_;
};

// d-bar(s^{-1} r) = s^{-1} d(r) - s^{-1} d(s) s^{-1} r
template <class F = rat>
class localized_derivation {
  public:
    localized_derivation(const ore_calc<F>& calc, const derivation<F>& d)
        : calc_(&calc), d_(&d) {}

    std::optional<ore_fraction<F>> apply(const ore_fraction<F>& x, std::size_t bound = 0) const {
        ore_fraction<F> t1{x.den, (*d_)(x.num)};
        ore_fraction<F> inner{x.den, (*d_)(x.den)};
        auto t2 = calc_->mul(inner, ore_fraction<F>{x.den, x.num}, bound);
        if (!t2) return std::nullopt;
        return calc_->sub(t1, *t2, bound);
    }

  private:
    const ore_calc<F>* calc_;
    const derivation<F>* d_;
};

// ---- Poisson structures -------------------------------------------------------

// Bracket on a commutative presented ring, given by an antisymmetric table on
// generators and extended as a biderivation. Jacobi is verified on generator
// triples at construction, which suffices for polynomial brackets.
template <class F = rat>
class poisson_structure {
  public:
    poisson_structure(const presented_ring<F>& ring, std::vector<std::vector<fpoly<F>>> table)
        : ring_(&ring), table_(std::move(table)) {
        std::size_t n = ring.generators().size();
        if (table_.size() != n) throw bad_presentation("bracket table size mismatch");
        for (auto& row : table_) {
            if (row.size() != n) throw bad_presentation("bracket table size mismatch");
            for (auto& e : row) e = ring.normal_form(e);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!table_[i][i].is_zero()) throw bad_presentation("bracket not alternating");
            for (std::size_t j = 0; j < n; ++j)
                if (!ring.normal_form(table_[i][j] + table_[j][i]).is_zero())
                    throw bad_presentation("bracket table not antisymmetric");
        }
        // partial derivatives for the biderivation extension
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<fpoly<F>> im(n, fpoly<F>());
            im[i] = fpoly<F>(F(1));
            partials_.emplace_back(ring, im);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    auto gi = fpoly<F>::from_word(letter(i));
                    auto gj = fpoly<F>::from_word(letter(j));
                    auto gk = fpoly<F>::from_word(letter(k));
                    auto jac = bracket(gi, bracket(gj, gk)) + bracket(gk, bracket(gi, gj)) +
                               bracket(gj, bracket(gk, gi));
                    if (!ring.normal_form(jac).is_zero())
                        throw bad_presentation("bracket fails Jacobi on generators");
                }
    }

    const presented_ring<F>& ring() const { return *ring_; }

    // {f, g} = sum_{i,j} (df/dg_i)(dg/dg_j) {g_i, g_j}
    fpoly<F> bracket(const fpoly<F>& f, const fpoly<F>& g) const {
        fpoly<F> out;
        for (std::size_t i = 0; i < table_.size(); ++i) {
            auto fi = partials_[i](f);
            if (fi.is_zero()) continue;
            for (std::size_t j = 0; j < table_.size(); ++j) {
                if (table_[i][j].is_zero()) continue;
                out = out + fi * partials_[j](g) * table_[i][j];
            }
        }
        return ring_->normal_form(out);
    }

  private:
    const presented_ring<F>* ring_;
    std::vector<std::vector<fpoly<F>>> table_;
    std::vector<derivation<F>> partials_;
};

// Localized bracket for a central multiplicative set:
//   Y_{s^{-1} a} : b |-> -s^{-1}{b, a} + s^{-1}{b, s} s^{-1} a
// extended to fractions through the derivation-extension formula.
template <class F = rat>
class localized_poisson {
  public:
    localized_poisson(const ore_calc<F>& calc, const poisson_structure<F>& p)
        : calc_(&calc), p_(&p) {}

    std::optional<ore_fraction<F>> bracket(const ore_fraction<F>& x, const ore_fraction<F>& y,
                                           std::size_t bound = 0) const {
        auto yx = [&](const fpoly<F>& c) -> std::optional<ore_fraction<F>> {
            ore_fraction<F> t1{x.den, -p_->bracket(c, x.num)};
            ore_fraction<F> mid{x.den, p_->bracket(c, x.den)};
            auto t2 = calc_->mul(mid, ore_fraction<F>{x.den, x.num}, bound);
            if (!t2) return std::nullopt;
            return calc_->add(t1, *t2, bound);
        };
        auto yb = yx(y.num);
        if (!yb) return std::nullopt;
        auto u1 = calc_->mul(calc_->make(y.den, fpoly<F>(F(1)), false), *yb, bound);
        if (!u1) return std::nullopt;
        auto yt = yx(y.den);
        if (!yt) return std::nullopt;
        auto u2a = calc_->mul(calc_->make(y.den, fpoly<F>(F(1)), false), *yt, bound);
        if (!u2a) return std::nullopt;
        auto u2 = calc_->mul(*u2a, ore_fraction<F>{y.den, y.num}, bound);
        if (!u2) return std::nullopt;
        return calc_->sub(*u1, *u2, bound);
    }

  private:
    const ore_calc<F>* calc_;
    const poisson_structure<F>* p_;
};

// ---- first order differential calculi ----------------------------------------

// Omega^1 presented with one differential d g per generator and monomial
// commutation rules (d g) h = lambda_{g,h} h (d g); every one-form then has a
// left-normal form sum_g c_g d g.
template <class F = rat>
class fodc {
  public:
    using form = std::vector<fpoly<F>>;  // coefficient of d g_i at index i

    fodc(const presented_ring<F>& ring, std::vector<std::vector<F>> lambda)
        : ring_(&ring), lambda_(std::move(lambda)) {
        std::size_t n = ring.generators().size();
        if (lambda_.size() != n) throw bad_presentation("commutation table size mismatch");
        for (const auto& row : lambda_) {
            if (row.size() != n) throw bad_presentation("commutation table size mismatch");
            for (const auto& l : row)
                if (l.is_zero()) throw bad_presentation("commutation scalar must be nonzero");
        }
        // d must kill every defining relation
        for (const auto& rule : ring.rules()) {
            auto lhs = d(fpoly<F>::from_word(rule.lead));
            auto rhs = d(rule.repl);
            for (std::size_t g = 0; g < n; ++g)
                if (!ring.normal_form(lhs[g] - rhs[g]).is_zero())
                    throw bad_presentation("differential does not respect the relations");
        }
    }

    const presented_ring<F>& ring() const { return *ring_; }
    std::size_t rank() const { return lambda_.size(); }

    form zero_form() const { return form(rank(), fpoly<F>()); }

    bool is_zero(const form& w) const {
        for (const auto& c : w)
            if (!ring_->normal_form(c).is_zero()) return false;
        return true;
    }

    // scalar picked up when d g moves across the word w
    F twist(std::size_t g, const word& w) const {
        F f(1);
        for (unsigned char ch : w) f = f * lambda_[g][ch];
        return f;
    }

    // phi_g(p): (d g) p = phi_g(p) (d g)
    fpoly<F> push_through(std::size_t g, const fpoly<F>& p) const {
        fpoly<F> out;
        for (const auto& [w, c] : p.terms()) out.add_term(w, twist(g, w) * c);
        return ring_->normal_form(out);
    }

    form d(const fpoly<F>& p) const {
        form out = zero_form();
        for (const auto& [w, c] : p.terms()) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                auto g = static_cast<std::size_t>(static_cast<unsigned char>(w[i]));
                word pre = w.substr(0, i);
                word post = w.substr(i + 1);
                // pre (d g) post = twist(g, post) * pre post (d g)
                out[g] = out[g] +
                         fpoly<F>::from_word(pre + post, c * twist(g, post));
            }
        }
        for (auto& cg : out) cg = ring_->normal_form(cg);
        return out;
    }

    form left_act(const fpoly<F>& p, const form& w) const {
        form out = zero_form();
        for (std::size_t g = 0; g < rank(); ++g) out[g] = ring_->normal_form(p * w[g]);
        return out;
    }

    form right_act(const form& w, const fpoly<F>& p) const {
        form out = zero_form();
        for (std::size_t g = 0; g < rank(); ++g)
            out[g] = ring_->normal_form(w[g] * push_through(g, p));
        return out;
    }

  private:
    const presented_ring<F>* ring_;
    std::vector<std::vector<F>> lambda_;
};

template <class F>
struct diff_ore_pair {
    fpoly<F> t, r;
    bool found = false;
    fpoly<F> s;
    typename fodc<F>::form omega;
};

template <class F>
struct diff_ore_report {
    bool all_found = true;
    bool torsion_free_within_bound = true;
    std::size_t bound = 0;
    std::vector<diff_ore_pair<F>> pairs;
};

// differential Ore condition: for every generator t of S and generator r of
// the ring, find s in S and a one-form omega with s (d r) = omega t.
template <class F>
diff_ore_report<F> differential_ore_check(const fodc<F>& calcd, const ore_calc<F>& calc,
                                          std::size_t bound) {
    const auto& R = calcd.ring();
    diff_ore_report<F> rep;
    rep.bound = bound;
    auto basis = R.basis_words(bound);
    auto closure = calc.set().closure(bound);

    // solver per component g for the unknown coefficient c_g in omega
    for (const auto& t : calc.set().generators()) {
        std::vector<word_solver<F>> solvers(calcd.rank());
        std::vector<std::vector<fpoly<F>>> col_polys(calcd.rank());
        for (std::size_t g = 0; g < calcd.rank(); ++g) {
            auto phi_t = calcd.push_through(g, t);
            for (const auto& w : basis) {
                auto col = R.normal_form(fpoly<F>::from_word(w) * phi_t);
                solvers[g].add_column(col);
                col_polys[g].push_back(fpoly<F>::from_word(w));
            }
            rep.torsion_free_within_bound &= solvers[g].kernel_dim() == 0;
        }
        for (const auto& gname : R.generators()) {
            diff_ore_pair<F> pr;
            pr.t = t;
            pr.r = R.gen(gname);
            auto dr = calcd.d(pr.r);
            for (const auto& s : closure) {
                typename fodc<F>::form omega = calcd.zero_form();
                bool ok = true;
                for (std::size_t g = 0; g < calcd.rank() && ok; ++g) {
                    auto target = R.normal_form(s * dr[g]);
                    auto sol = solvers[g].solve(target);
                    if (!sol) {
                        ok = false;
                        break;
                    }
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        omega[g] = omega[g] + (*sol)[i] * col_polys[g][i];
                    omega[g] = R.normal_form(omega[g]);
                }
                if (ok) {
                    pr.found = true;
                    pr.s = s;
                    pr.omega = omega;
                    break;
                }
            }
            rep.all_found &= pr.found;
            rep.pairs.push_back(std::move(pr));
        }
    }
    return rep;
}

}  // namespace ncloc
