#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncloc/matrix.hpp"
#include "ncloc/pid.hpp"
#include "ncloc/presentation.hpp"

namespace ncloc {

template <class F>
struct ring_ops<fpoly<F>> {
    static fpoly<F> zero_like(const fpoly<F>&) { return fpoly<F>(); }
    static fpoly<F> one_like(const fpoly<F>&) { return fpoly<F>(F(1)); }
    static bool is_zero(const fpoly<F>& x) { return x.is_zero(); }
    static std::optional<fpoly<F>> try_invert(const fpoly<F>& x) {
        // only scalars are invertible in the free algebra
        if (!x.is_scalar() || x.is_zero()) return std::nullopt;
        return fpoly<F>(x.coeff_of(word()).inv());
    }
    static std::string id(const fpoly<F>&) { return "free algebra"; }
};

template <>
struct ring_ops<bigint> {
    static bigint zero_like(const bigint&) { return 0; }
    static bigint one_like(const bigint&) { return 1; }
    static bool is_zero(const bigint& x) { return x == 0; }
    static std::optional<bigint> try_invert(const bigint& x) {
        if (x == 1 || x == -1) return x;
        return std::nullopt;
    }
    static std::string id(const bigint&) { return "Z"; }
};

template <>
struct ring_ops<upoly> {
    static upoly zero_like(const upoly&) { return upoly(); }
    static upoly one_like(const upoly&) { return upoly(rat(1)); }
    static bool is_zero(const upoly& x) { return x.is_zero(); }
    static std::optional<upoly> try_invert(const upoly& x) {
        if (x.degree() != 0) return std::nullopt;
        return upoly(x.lead().inv());
    }
    static std::string id(const upoly&) { return "Q[x]"; }
};

// ---- multiplicative sets of matrices ----------------------------------------

// Upper multiplicative set: generators, the 1x1 identity, and all
// block-upper-triangular composites. Membership is decided by a depth-limited
// split search.
template <class F = rat>
class matrix_sigma {
  public:
    matrix_sigma(const presented_ring<F>& base, std::vector<matrix<fpoly<F>>> gens,
                 std::size_t closure_depth = 3)
        : base_(&base), closure_depth_(closure_depth) {
        for (auto& g : gens) {
            if (!g.is_square()) throw shape_error("sigma generators must be square");
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j)
                    g.at(i, j) = base.normal_form(g.at(i, j));
            gens_.push_back(std::move(g));
        }
    }

    const presented_ring<F>& base() const { return *base_; }
    const std::vector<matrix<fpoly<F>>>& generators() const { return gens_; }
    std::size_t closure_depth() const { return closure_depth_; }

    bool contains(const matrix<fpoly<F>>& m_in, std::size_t depth = 0) const {
        if (depth == 0) depth = closure_depth_;
        matrix<fpoly<F>> m(m_in);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = base_->normal_form(m.at(i, j));
        return contains_nf(m, depth);
    }

  private:
    bool contains_nf(const matrix<fpoly<F>>& m, std::size_t depth) const {
        if (m.rows() == 1 && m.at(0, 0) == fpoly<F>(F(1))) return true;
        for (const auto& g : gens_)
            if (g.rows() == m.rows() && same_entries(g, m)) return true;
        if (depth == 0) return false;
        for (std::size_t k = 1; k < m.rows(); ++k) {
            bool lower_zero = true;
            for (std::size_t i = k; i < m.rows() && lower_zero; ++i)
                for (std::size_t j = 0; j < k && lower_zero; ++j)
                    lower_zero &= m.at(i, j).is_zero();
            if (!lower_zero) continue;
            auto rl = m.row_labels();
            auto cl = m.col_labels();
            std::vector<int> r1(rl.begin(), rl.begin() + k), r2(rl.begin() + k, rl.end());
            std::vector<int> c1(cl.begin(), cl.begin() + k), c2(cl.begin() + k, cl.end());
            if (contains_nf(m.submatrix(r1, c1), depth - 1) &&
                contains_nf(m.submatrix(r2, c2), depth - 1))
                return true;
        }
        return false;
    }

    static bool same_entries(const matrix<fpoly<F>>& a, const matrix<fpoly<F>>& b) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!(a.at(i, j) == b.at(i, j))) return false;
        return true;
    }

    const presented_ring<F>* base_;
    std::vector<matrix<fpoly<F>>> gens_;
    std::size_t closure_depth_;
};

// ---- the invertive construction ----------------------------------------------

template <class F>
struct cohn_result {
    presented_ring<F> extended;               // base generators plus inverse-entry generators
    std::vector<std::string> new_generators;  // names of the adjoined entries
    std::vector<fpoly<F>> relations;          // entries of A A' - I and A' A - I, raw
    std::vector<matrix<fpoly<F>>> inverse_matrices;  // A' per sigma generator, in the extended ring
    bool oriented = false;                    // relations could be oriented into rules
    bool confluent = false;                   // oriented system has resolvable ambiguities only
};

namespace cohn_detail {

// lift a polynomial of the base ring into the extended ring (same generator
// indices by construction)
template <class F>
fpoly<F> lift(const fpoly<F>& p) { return p; }

template <class F>
std::optional<rewrite_rule<F>> orient(const presented_ring<F>& r, const fpoly<F>& rel) {
    // rule: largest word rewrites to the rest
    if (rel.is_zero()) return std::nullopt;
    const word* lead = nullptr;
    for (const auto& [w, c] : rel.terms())
        if (!lead || r.order().less(*lead, w)) lead = &w;
    F c = rel.coeff_of(*lead);
    fpoly<F> repl;
    for (const auto& [w, v] : rel.terms())
        if (w != *lead) repl.add_term(w, F(0) - v * c.inv());
    // degenerate: lead appears in repl via equal-order words cannot happen,
    // but a scalar-only relation (inconsistent presentation) can
    if (lead->empty()) return std::nullopt;
    for (const auto& [w, v] : repl.terms())
        if (!r.order().less(w, *lead)) return std::nullopt;
    return rewrite_rule<F>{*lead, repl};
}

}  // namespace cohn_detail

// Universal sigma-inverting presentation: for each generator matrix A of size
// n adjoin n^2 generators forming A' and impose A A' = I = A' A entrywise.
// The result records whether the oriented rewriting system is confluent; when
// it is not, equality questions must go through a faithful evaluation.
template <class F>
cohn_result<F> cohn_presentation(const presented_ring<F>& base, const matrix_sigma<F>& sigma) {
    std::vector<std::string> gens = base.generators();
    std::vector<std::string> fresh;
    std::vector<matrix<fpoly<F>>> inverses;

    for (std::size_t k = 0; k < sigma.generators().size(); ++k) {
        const auto& a = sigma.generators()[k];
        std::size_t n = a.rows();
        matrix<fpoly<F>> ainv(n, n, fpoly<F>());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::string name = "u" + std::to_string(k) + "_" + std::to_string(i + 1) +
                                   std::to_string(j + 1);
                ainv.at(i, j) = fpoly<F>::from_word(letter(gens.size()));
                gens.push_back(name);
                fresh.push_back(name);
            }
        ainv.set_labels(a.col_labels(), a.row_labels());
        inverses.push_back(ainv);
    }

    // relations from A A' = I = A' A
    std::vector<fpoly<F>> relations;
    for (std::size_t k = 0; k < sigma.generators().size(); ++k) {
        const auto& a = sigma.generators()[k];
        const auto& ai = inverses[k];
        std::size_t n = a.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                fpoly<F> left, right;
                for (std::size_t l = 0; l < n; ++l) {
                    left = left + cohn_detail::lift<F>(a.at(i, l)) * ai.at(l, j);
                    right = right + ai.at(i, l) * cohn_detail::lift<F>(a.at(l, j));
                }
                fpoly<F> delta = (i == j) ? fpoly<F>(F(1)) : fpoly<F>();
                relations.push_back(left - delta);
                relations.push_back(right - delta);
            }
    }

    // base rules survive unchanged; orient the new relations on top
    std::vector<rewrite_rule<F>> rules = base.rules();
    std::vector<long long> weights(gens.size(), 1);
    // carry the base order weights through
    {
        word_order base_order = base.order();
        for (std::size_t g = 0; g < base.generators().size(); ++g)
            weights[g] = base_order.weight(letter(g));
    }
    presented_ring<F> probe(gens, rules, weights);
    bool oriented = true;
    for (const auto& rel : relations) {
        auto nf = probe.normal_form(rel);
        if (nf.is_zero()) continue;  // redundant relation
        auto rule = cohn_detail::orient(probe, nf);
        if (!rule) {
            oriented = false;
            continue;
        }
        rules.push_back(*rule);
        probe = presented_ring<F>(gens, rules, weights);
    }

    cohn_result<F> out{presented_ring<F>(gens, rules, weights),
                       fresh,
                       relations,
                       inverses,
                       oriented,
                       false};
    if (oriented) out.confluent = out.extended.all_ambiguities_resolve();
    return out;
}

template <class T>
T coeff_to(const rat& c) { return T(c); }

// Evaluate a free-algebra element at commuting target values (one image per
// generator of the ring the words live in).
template <class T, class F>
T eval_poly(const fpoly<F>& p, const std::vector<T>& images) {
    T acc = ring_ops<T>::zero_like(images.empty() ? T() : images[0]);
    for (const auto& [w, c] : p.terms()) {
        T term = coeff_to<T>(c);
        for (unsigned char ch : w) term = term * images[ch];
        acc = acc + term;
    }
    return acc;
}

// universal property, relatively: the assignment A' |-> f(A)^{-1} must kill
// every presentation relation in the target
template <class T, class F>
bool evaluation_respects_relations(const cohn_result<F>& cp, const matrix_sigma<F>& sigma,
                                   const std::vector<T>& base_images) {
    std::vector<T> images = base_images;
    images.resize(cp.extended.generators().size(), ring_ops<T>::zero_like(base_images[0]));
    std::size_t next = base_images.size();
    for (std::size_t k = 0; k < sigma.generators().size(); ++k) {
        const auto& a = sigma.generators()[k];
        std::size_t n = a.rows();
        matrix<T> fa(n, n, ring_ops<T>::zero_like(base_images[0]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) fa.at(i, j) = eval_poly(a.at(i, j), base_images);
        auto fai = try_invert(fa);
        if (!fai) return false;  // evaluation is not sigma-inverting
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // A'_{ij} was adjoined in row-major order when not reused
                images[next] = fai->at(i, j);
                ++next;
            }
    }
    for (const auto& rel : cp.relations)
        if (!ring_ops<T>::is_zero(eval_poly(rel, images))) return false;
    return true;
}

// ---- rational closure ----------------------------------------------------------

template <class T>
struct closure_solution {
    bool target_inverting = false;
    std::vector<T> x;
};

// Components of the solution of f(A) x = f(b) in the target; members of the
// rational closure by construction.
template <class T, class F>
closure_solution<T> rational_closure_solve(const matrix<fpoly<F>>& a,
                                           const std::vector<fpoly<F>>& b,
                                           const std::vector<T>& images) {
    closure_solution<T> out;
    std::size_t n = a.rows();
    matrix<T> fa(n, n, ring_ops<T>::zero_like(images[0]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fa.at(i, j) = eval_poly(a.at(i, j), images);
    std::vector<T> fb;
    for (const auto& e : b) fb.push_back(eval_poly(e, images));
    auto sol = try_solve(fa, fb);
    if (!sol) return out;  // TargetNotInverting
    out.target_inverting = true;
    out.x = *sol;
    return out;
}

// Sum certificate: embed the systems so the two picked components align, then
// exhibit x_i + y_j as a component of the block system
//   [[A, -A+B], [0, B]] (x+y, y) = (b+c, c).
// Returns the solved block component; the caller compares against x_i + y_j.
// Also reports whether the block matrix stays in the sigma closure.
template <class T>
struct block_certificate {
    bool solved = false;
    bool block_in_closure = false;
    T component;
    block_certificate() : component() {}
    explicit block_certificate(const T& zero) : component(zero) {}
};

template <class T, class F>
block_certificate<T> certify_sum(const matrix_sigma<F>& sigma, const matrix<fpoly<F>>& a,
                                    const std::vector<fpoly<F>>& b, std::size_t i,
                                    const matrix<fpoly<F>>& bb, const std::vector<fpoly<F>>& c,
                                    std::size_t j, const std::vector<T>& images) {
    block_certificate<T> out(ring_ops<T>::zero_like(images[0]));
    std::size_t na = a.rows(), nb = bb.rows();
    std::size_t oa = j > i ? j - i : 0, ob = i > j ? i - j : 0;
    std::size_t k = oa + i;
    std::size_t n = std::max(oa + na, ob + nb);

    auto embed = [&](const matrix<fpoly<F>>& m, std::size_t off) {
        matrix<fpoly<F>> e(n, n, fpoly<F>());
        for (std::size_t r = 0; r < n; ++r) e.at(r, r) = fpoly<F>(F(1));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t s = 0; s < m.cols(); ++s) e.at(off + r, off + s) = m.at(r, s);
        return e;
    };
    auto embed_vec = [&](const std::vector<fpoly<F>>& v, std::size_t off) {
        std::vector<fpoly<F>> e(n, fpoly<F>());
        for (std::size_t r = 0; r < v.size(); ++r) e[off + r] = v[r];
        return e;
    };
    auto at = embed(a, oa);
    auto bt = embed(bb, ob);
    auto bvec = embed_vec(b, oa);
    auto cvec = embed_vec(c, ob);

    matrix<fpoly<F>> block(2 * n, 2 * n, fpoly<F>());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            block.at(r, s) = at.at(r, s);
            block.at(r, n + s) = bt.at(r, s) - at.at(r, s);
            block.at(n + r, n + s) = bt.at(r, s);
        }
    std::vector<fpoly<F>> rhs(2 * n, fpoly<F>());
    for (std::size_t r = 0; r < n; ++r) {
        rhs[r] = bvec[r] + cvec[r];
        rhs[n + r] = cvec[r];
    }
    auto sol = rational_closure_solve(block, rhs, images);
    if (!sol.target_inverting) return out;
    out.solved = true;
    out.component = sol.x[k];
    out.block_in_closure = sigma.contains(block, 2 * n + 2);
    return out;
}

// Product certificate: [[B, -diag(c) P_k], [0, A]] (z, x) = (0, b) makes
// z = y x_k entrywise, so the aligned component is y_j x_i.
template <class T, class F>
block_certificate<T> certify_product(const matrix_sigma<F>& sigma, const matrix<fpoly<F>>& a,
                                     const std::vector<fpoly<F>>& b, std::size_t i,
                                     const matrix<fpoly<F>>& bb, const std::vector<fpoly<F>>& c,
                                     std::size_t j, const std::vector<T>& images) {
    block_certificate<T> out(ring_ops<T>::zero_like(images[0]));
    std::size_t na = a.rows(), nb = bb.rows();
    matrix<fpoly<F>> block(na + nb, na + nb, fpoly<F>());
    for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t s = 0; s < nb; ++s) block.at(r, s) = bb.at(r, s);
    for (std::size_t r = 0; r < na; ++r)
        for (std::size_t s = 0; s < na; ++s) block.at(nb + r, nb + s) = a.at(r, s);
    // -diag(c) P_i: column i of the A-side carries -c_r at row r
    for (std::size_t r = 0; r < nb; ++r) block.at(r, nb + i) = -c[r];
    std::vector<fpoly<F>> rhs(na + nb, fpoly<F>());
    for (std::size_t r = 0; r < na; ++r) rhs[nb + r] = b[r];
    auto sol = rational_closure_solve(block, rhs, images);
    if (!sol.target_inverting) return out;
    out.solved = true;
    out.component = sol.x[j];
    out.block_in_closure = sigma.contains(block, na + nb + 2);
    return out;
}

// ---- quasideterminant-first localization ---------------------------------------

struct qdet_first_entry {
    std::size_t matrix_index;
    std::size_t i, j;         // positions within the generator matrix
    std::string name;         // adjoined generator
    bool stage1;              // inverted as a quasideterminant in stage 1
};

template <class F>
struct qdet_first_result {
    cohn_result<F> presentation;
    std::vector<qdet_first_entry> entries;
    std::vector<std::string> auxiliary;  // deleted-entry inverses added in stage 1
    std::size_t stage1_count = 0;
    std::size_t stage2_count = 0;
};

// Stage 1 inverts quasideterminants whose defining formula can be written in
// the (extended) presentation: any 1x1 entry, any position whose cross terms
// vanish, and the 2x2 case after adjoining the inverse of the deleted entry
// (itself a quasiminor). Stage 2 completes the matrix inverses by the
// invertive method, reusing stage-1 generators as the matching entries of A'.
// Existence and nonvanishing are decided through the supplied evaluation.
template <class F>
qdet_first_result<F> qdet_first_presentation(const presented_ring<F>& base,
                                             const matrix_sigma<F>& sigma,
                                             const std::vector<rat>& eval_point) {
    qdet_first_result<F> out;
    std::vector<std::string> gens = base.generators();
    std::vector<rewrite_rule<F>> rules = base.rules();
    std::vector<long long> weights(gens.size(), 1);
    for (std::size_t g = 0; g < base.generators().size(); ++g)
        weights[g] = base.order().weight(letter(g));
    std::vector<fpoly<F>> relations;

    auto eval_at = [&](const fpoly<F>& p) {
        std::vector<rat> imgs(eval_point);
        return eval_poly<rat>(p, imgs);
    };
    auto add_gen = [&](const std::string& name) {
        auto g = fpoly<F>::from_word(letter(gens.size()));
        gens.push_back(name);
        weights.push_back(1);
        return g;
    };
    auto add_inverse_relations = [&](const fpoly<F>& gen, const fpoly<F>& p) {
        relations.push_back(gen * p - fpoly<F>(F(1)));
        relations.push_back(p * gen - fpoly<F>(F(1)));
    };

    // per-matrix inverse skeletons for stage 2
    std::vector<matrix<fpoly<F>>> inverses;
    std::map<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>, fpoly<F>> aux_inv;

    for (std::size_t k = 0; k < sigma.generators().size(); ++k) {
        const auto& a = sigma.generators()[k];
        std::size_t n = a.rows();
        matrix<fpoly<F>> ainv(n, n, fpoly<F>());
        ainv.set_labels(a.col_labels(), a.row_labels());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::optional<fpoly<F>> expr;
                if (n == 1) {
                    expr = a.at(0, 0);
                } else {
                    bool cross_vanish = true;
                    for (std::size_t l = 0; l < n; ++l)
                        if (l != j && !a.at(i, l).is_zero()) cross_vanish = false;
                    for (std::size_t l = 0; l < n; ++l)
                        if (l != i && !a.at(l, j).is_zero()) cross_vanish = false;
                    if (cross_vanish) {
                        expr = a.at(i, j);
                    } else if (n == 2) {
                        std::size_t ki = 1 - i, lj = 1 - j;
                        const auto& d = a.at(ki, lj);
                        if (!eval_at(d).is_zero()) {
                            auto key = std::make_pair(k, std::make_pair(ki, lj));
                            if (!aux_inv.count(key)) {
                                std::string nm = "e" + std::to_string(k) + "_" +
                                                 std::to_string(ki + 1) + std::to_string(lj + 1);
                                auto e = add_gen(nm);
                                add_inverse_relations(e, d);
                                aux_inv.emplace(key, e);
                                out.auxiliary.push_back(nm);
                            }
                            expr = a.at(i, j) - a.at(i, lj) * aux_inv.at(key) * a.at(ki, j);
                        }
                    }
                }
                bool stage1 = false;
                if (expr) {
                    // existence and nonvanishing at the evaluation point;
                    // auxiliary generators evaluate to the entry inverses
                    std::vector<rat> imgs(eval_point);
                    imgs.resize(gens.size(), rat(0));
                    for (const auto& [key, e] : aux_inv) {
                        auto val = eval_at(sigma.generators()[key.first].at(
                            key.second.first, key.second.second));
                        imgs[static_cast<unsigned char>(e.terms().begin()->first[0])] =
                            val.inv();
                    }
                    auto v = eval_poly<rat>(*expr, imgs);
                    if (!v.is_zero()) stage1 = true;
                }
                std::string name = (stage1 ? "B" : "u") + std::to_string(k) + "_" +
                                   std::to_string(i + 1) + std::to_string(j + 1);
                auto g = add_gen(name);
                if (stage1) {
                    add_inverse_relations(g, *expr);
                    ++out.stage1_count;
                } else {
                    ++out.stage2_count;
                }
                out.entries.push_back({k, i, j, name, stage1});
                // (A^{-1})^j_i = |A|_{ij}^{-1}: the adjoined generator sits at
                // position (j, i) of the inverse matrix
                ainv.at(j, i) = g;
            }
        inverses.push_back(ainv);
    }

    // stage 2: the invertive relations A A' = I = A' A on the skeletons
    for (std::size_t k = 0; k < sigma.generators().size(); ++k) {
        const auto& a = sigma.generators()[k];
        const auto& ai = inverses[k];
        std::size_t n = a.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                fpoly<F> left, right;
                for (std::size_t l = 0; l < n; ++l) {
                    left = left + a.at(i, l) * ai.at(l, j);
                    right = right + ai.at(i, l) * a.at(l, j);
                }
                fpoly<F> delta = (i == j) ? fpoly<F>(F(1)) : fpoly<F>();
                relations.push_back(left - delta);
                relations.push_back(right - delta);
            }
    }

    presented_ring<F> probe(gens, rules, weights);
    bool oriented = true;
    for (const auto& rel : relations) {
        auto nf = probe.normal_form(rel);
        if (nf.is_zero()) continue;
        auto rule = cohn_detail::orient(probe, nf);
        if (!rule) {
            oriented = false;
            continue;
        }
        rules.push_back(*rule);
        probe = presented_ring<F>(gens, rules, weights);
    }
    out.presentation = cohn_result<F>{presented_ring<F>(gens, rules, weights),
                                      {},
                                      relations,
                                      inverses,
                                      oriented,
                                      false};
    if (oriented) out.presentation.confluent = out.presentation.extended.all_ambiguities_resolve();
    return out;
}

// ---- sigma-torsion over a commutative PID base --------------------------------

template <class B>
struct torsion_certificate {
    std::vector<std::vector<B>> a;                  // the matrix, A u = 0
    std::vector<typename fgmodule<B>::elem> u;      // the vector over M
    std::size_t index;                              // certified element = u[index]
};

template <class B>
struct sigma_torsion_report {
    std::vector<typename fgmodule<B>::elem> elements;
    std::vector<torsion_certificate<B>> certificates;
    bool addition_recertified = true;
    std::size_t depth = 0;
    long long height = 0;
};

namespace cohn_detail {

template <class B>
bool mat_kills(const fgmodule<B>& m, const std::vector<std::vector<B>>& a,
               const std::vector<typename fgmodule<B>::elem>& u) {
    for (const auto& row : a) {
        auto acc = m.zero();
        for (std::size_t j = 0; j < row.size(); ++j) acc = m.add(acc, m.smul(row[j], u[j]));
        if (!m.is_zero(acc)) return false;
    }
    return true;
}

}  // namespace cohn_detail

// Bounded enumeration of sigma-torsion elements: m = u_i with A u = 0 for A
// in the block-upper-triangular closure (depth-limited, sampled off-diagonal
// entries, matrix size <= 4). Completeness is not claimed.
template <class B>
sigma_torsion_report<B> sigma_torsion(const fgmodule<B>& m,
                                      const std::vector<B>& gens_1x1, std::size_t depth = 3,
                                      long long height = 8) {
    sigma_torsion_report<B> rep;
    rep.depth = depth;
    rep.height = height;

    // candidate matrices: powers of block-upper-triangular composition
    std::vector<std::vector<std::vector<B>>> candidates;
    for (const auto& g : gens_1x1) candidates.push_back({{g}});
    std::vector<B> off_samples{pid<B>::zero(), pid<B>::one(), pid<B>::zero() - pid<B>::one()};
    if constexpr (std::is_same_v<B, bigint>) {
        off_samples.push_back(bigint(2));
        off_samples.push_back(bigint(height));
    }
    std::vector<std::vector<std::vector<B>>> level = candidates;
    for (std::size_t d = 1; d < depth; ++d) {
        std::vector<std::vector<std::vector<B>>> next;
        for (const auto& x : level)
            for (const auto& g : gens_1x1)
                for (const auto& c : off_samples) {
                    std::size_t n = x.size();
                    if (n + 1 > 4) continue;
                    // [[g, c e_1^T], [0, X]]
                    std::vector<std::vector<B>> blk(n + 1, std::vector<B>(n + 1, pid<B>::zero()));
                    blk[0][0] = g;
                    blk[0][1] = c;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) blk[r + 1][s + 1] = x[r][s];
                    next.push_back(blk);
                }
        candidates.insert(candidates.end(), next.begin(), next.end());
        level = std::move(next);
    }

    auto all = m.enumerate_all(1u << 14);
    for (const auto& a : candidates) {
        std::size_t n = a.size();
        // enumerate u in M^n (finite modules only; free parts contribute
        // nothing to sigma-torsion over a domain unless the matrix is
        // singular, which the bounded sweep skips)
        if (!all) continue;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<typename fgmodule<B>::elem> u;
            for (std::size_t t = 0; t < n; ++t) u.push_back((*all)[idx[t]]);
            if (cohn_detail::mat_kills(m, a, u)) {
                for (std::size_t t = 0; t < n; ++t) {
                    if (m.is_zero(u[t])) continue;
                    bool fresh = true;
                    for (const auto& e : rep.elements)
                        if (m.eq(e, u[t])) fresh = false;
                    if (fresh) {
                        rep.elements.push_back(m.reduce(u[t]));
                        rep.certificates.push_back({a, u, t});
                    }
                }
            }
            std::size_t t = 0;
            while (t < n && ++idx[t] == all->size()) idx[t++] = 0;
            if (t == n) break;
        }
    }

    // closure under addition, re-certified by the block construction
    for (std::size_t p = 0; p < rep.certificates.size(); ++p)
        for (std::size_t q = 0; q < rep.certificates.size(); ++q) {
            const auto& ca = rep.certificates[p];
            const auto& cb = rep.certificates[q];
            std::size_t na = ca.a.size(), nb = cb.a.size();
            if (ca.index != cb.index || na != nb) continue;  // aligned pairs only
            std::vector<std::vector<B>> blk(na + nb, std::vector<B>(na + nb, pid<B>::zero()));
            for (std::size_t r = 0; r < na; ++r)
                for (std::size_t s = 0; s < na; ++s) {
                    blk[r][s] = ca.a[r][s];
                    blk[r][na + s] = pid<B>::zero() - ca.a[r][s];
                    blk[na + r][na + s] = cb.a[r][s];
                }
            std::vector<typename fgmodule<B>::elem> u;
            for (std::size_t r = 0; r < na; ++r) u.push_back(m.add(ca.u[r], cb.u[r]));
            for (std::size_t r = 0; r < nb; ++r) u.push_back(cb.u[r]);
            rep.addition_recertified &= cohn_detail::mat_kills(m, blk, u);
        }
    return rep;
}

// certificate transport along permuted generator sets: if A u = 0 and
// A' = w A w' is the permuted generator, then A' (w'^{-1} u) = 0 certifies
// the same element
template <class B>
bool permuted_certificate_transfers(const fgmodule<B>& m, const torsion_certificate<B>& cert,
                                    const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) {
    std::size_t n = cert.a.size();
    std::vector<std::vector<B>> ap(n, std::vector<B>(n, pid<B>::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ap[row_perm[i]][col_perm[j]] = cert.a[i][j];
    std::vector<typename fgmodule<B>::elem> up(n, m.zero());
    for (std::size_t j = 0; j < n; ++j) up[col_perm[j]] = cert.u[j];
    return cohn_detail::mat_kills(m, ap, up);
}

}  // namespace ncloc
