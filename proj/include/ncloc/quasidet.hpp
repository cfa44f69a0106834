#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncloc/matrix.hpp"
#include "ncloc/rng.hpp"

namespace ncloc {

// |A|_{ij} = a^i_j - sum_{l != j, k != i} a^i_l ((A^{i^}_{j^})^{-1})_{lk} a^k_j.
// An undefined quasideterminant (singular deleted submatrix) is an ordinary
// outcome, reported as nullopt. i and j are labels, not positions.
template <class T>
std::optional<T> qdet(const matrix<T>& a, int i, int j) {
    if (!a.is_square()) throw shape_error("quasideterminant of non-square matrix");
    if (a.rows() == 1) return a.entry(i, j);
    matrix<T> deleted = a.drop(i, j);
    auto dinv = entry_inverter<T>::run(deleted);
    if (!dinv) return std::nullopt;
    T acc = a.entry(i, j);
    for (int l : deleted.col_labels())
        for (int k : deleted.row_labels())
            acc = acc - a.entry(i, l) * dinv->entry(l, k) * a.entry(k, j);
    return acc;
}

// the recursive variant substitutes quasiminors of the deleted submatrix for
// the entries of its inverse; prerequisites differ from the inversion form
template <class T>
std::optional<T> qdet_recursive(const matrix<T>& a, int i, int j) {
    if (a.rows() == 1) return a.entry(i, j);
    matrix<T> deleted = a.drop(i, j);
    T acc = a.entry(i, j);
    for (int l : deleted.col_labels())
        for (int k : deleted.row_labels()) {
            auto q = qdet(deleted, k, l);
            if (!q) return std::nullopt;
            auto qi = ring_ops<T>::try_invert(*q);
            if (!qi) return std::nullopt;
            acc = acc - a.entry(i, l) * (*qi) * a.entry(k, j);
        }
    return acc;
}

template <class T>
struct inv_qdet_result {
    std::optional<matrix<T>> inverse;
    // first (i, j) whose quasideterminant is absent or not invertible
    std::optional<std::pair<int, int>> missing;
};

// (A^{-1})^i_j = (|A|_{ji})^{-1}, provided every quasideterminant exists and
// is invertible.
template <class T>
inv_qdet_result<T> inv_via_qdet(const matrix<T>& a) {
    inv_qdet_result<T> out;
    matrix<T> r(a.rows(), a.cols(), ring_ops<T>::zero_like(a.at(0, 0)));
    r.set_labels(a.col_labels(), a.row_labels());
    for (std::size_t ip = 0; ip < a.rows(); ++ip) {
        for (std::size_t jp = 0; jp < a.cols(); ++jp) {
            int i = a.col_labels()[jp];  // row label of A^{-1}
            int j = a.row_labels()[ip];  // column label of A^{-1}
            auto q = qdet(a, j, i);
            if (!q) {
                out.missing = {j, i};
                return out;
            }
            auto qi = ring_ops<T>::try_invert(*q);
            if (!qi) {
                out.missing = {j, i};
                return out;
            }
            r.at(jp, ip) = *qi;  // (A^{-1})^i_j sits at row pos jp, col pos ip
        }
    }
    out.inverse = r;
    return out;
}

// ---- Cramer rules ------------------------------------------------------------

template <class T>
struct cramer_result {
    bool defined = false;
    std::vector<T> solution;         // indexed by column labels of A
    bool certificate_consistent = true;  // value independent of the row i used
    std::string note;
};

// left rule: |A|_{ij} x^j = |A(j, xi)|_{ij}; x^j = |A|_{ij}^{-1} |A(j, xi)|_{ij},
// the same for every admissible row i.
template <class T>
cramer_result<T> cramer_left(const matrix<T>& a, const std::vector<T>& xi) {
    cramer_result<T> out;
    if (xi.size() != a.rows()) throw shape_error("right-hand side length mismatch");
    for (int j : a.col_labels()) {
        std::vector<T> values;
        for (int i : a.row_labels()) {
            auto qa = qdet(a, i, j);
            if (!qa) continue;
            auto qai = ring_ops<T>::try_invert(*qa);
            if (!qai) continue;
            auto qb = qdet(a.replace_col(j, xi), i, j);
            if (!qb) continue;
            values.push_back((*qai) * (*qb));
        }
        if (values.empty()) {
            out.defined = false;
            out.note = "no admissible row for column " + std::to_string(j);
            return out;
        }
        for (const auto& v : values)
            if (!(ring_ops<T>::is_zero(v - values.front()))) out.certificate_consistent = false;
        out.solution.push_back(values.front());
    }
    out.defined = true;
    return out;
}

// right rule for sum_k y^k B^l_k = zeta^l: y^j |B^T|_{ji} = |(B(j, zeta))^T|_{ji}
template <class T>
cramer_result<T> cramer_right(const matrix<T>& b, const std::vector<T>& zeta) {
    cramer_result<T> out;
    if (zeta.size() != b.rows()) throw shape_error("right-hand side length mismatch");
    matrix<T> bt = b.transpose();
    for (int j : b.col_labels()) {
        std::vector<T> values;
        for (int i : bt.col_labels()) {
            auto qa = qdet(bt, j, i);
            if (!qa) continue;
            auto qai = ring_ops<T>::try_invert(*qa);
            if (!qai) continue;
            auto qb = qdet(b.replace_col(j, zeta).transpose(), j, i);
            if (!qb) continue;
            values.push_back((*qb) * (*qai));
        }
        if (values.empty()) {
            out.defined = false;
            out.note = "no admissible index for row " + std::to_string(j);
            return out;
        }
        for (const auto& v : values)
            if (!(ring_ops<T>::is_zero(v - values.front()))) out.certificate_consistent = false;
        out.solution.push_back(values.front());
    }
    out.defined = true;
    return out;
}

// exact solve oracles through the flat inverse
template <class T>
std::optional<std::vector<T>> solve_left_oracle(const matrix<T>& a, const std::vector<T>& xi) {
    auto ai = entry_inverter<T>::run(a);
    if (!ai) return std::nullopt;
    std::vector<T> x;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T acc = ring_ops<T>::zero_like(a.at(0, 0));
        for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + ai->at(i, k) * xi[k];
        x.push_back(acc);
    }
    return x;
}

template <class T>
std::optional<std::vector<T>> solve_right_oracle(const matrix<T>& b, const std::vector<T>& zeta) {
    auto bi = entry_inverter<T>::run(b);
    if (!bi) return std::nullopt;
    // sum_k y^k B^l_k = zeta^l  =>  y^k = sum_l zeta^l (B^{-1})^k ... on the
    // right: y = zeta B^{-1} computed with zeta multiplying from the left
    std::vector<T> y;
    for (std::size_t k = 0; k < b.cols(); ++k) {
        T acc = ring_ops<T>::zero_like(b.at(0, 0));
        for (std::size_t l = 0; l < b.rows(); ++l) acc = acc + zeta[l] * bi->at(k, l);
        y.push_back(acc);
    }
    return y;
}

// ---- identity suite -----------------------------------------------------------

enum class identity_status { holds, prerequisite_missing, violated };

struct identity_item {
    std::string name;
    identity_status status = identity_status::prerequisite_missing;
    std::size_t instances = 0;  // how many concrete instances were checked
    std::string witness;        // exact counterexample data when violated
};

struct identity_report {
    std::vector<identity_item> items;
    bool all_hold_or_missing() const {
        for (const auto& it : items)
            if (it.status == identity_status::violated) return false;
        return true;
    }
    const identity_item* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }
};

struct suite_options {
    std::uint64_t seed = 1;
    std::size_t jacobi_max_class = 2;  // |I| = |I'| up to this size
};

namespace qdetail {

template <class T>
std::optional<T> inv_of(const std::optional<T>& v) {
    if (!v) return std::nullopt;
    return ring_ops<T>::try_invert(*v);
}

template <class T>
matrix<T> permuted(const matrix<T>& a, const std::vector<int>& rl, const std::vector<int>& cl) {
    matrix<T> p(a.rows(), a.cols(), ring_ops<T>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p.at(i, j) = a.entry(rl[i], cl[j]);
    p.set_labels(rl, cl);
    return p;
}

inline std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> r;
    for (int e : v)
        if (e != x) r.push_back(e);
    return r;
}

// random small-entry rational, for row operations
inline rat random_rat(rng& g) { return rat(g.range(-5, 5)); }

template <class T>
T random_coeff(rng& g, const T& exemplar);

template <>
inline rat random_coeff<rat>(rng& g, const rat&) { return random_rat(g); }

template <>
inline qmat random_coeff<qmat>(rng& g, const qmat& ex) {
    qmat m(ex.rows(), ex.cols(), rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = random_rat(g);
    return m;
}

template <>
inline ratfunc random_coeff<ratfunc>(rng& g, const ratfunc&) { return ratfunc(random_rat(g)); }

template <>
inline modint random_coeff<modint>(rng& g, const modint& ex) {
    return modint(g.range(0, ex.modulus() - 1), ex.modulus());
}

// quasitelescoping recursion: each level contributes a three-factor product of
// quasiminors; level identities are the Muir extensions of the 2x2 expansion
template <class T>
struct qt_level {
    std::optional<T> term;
    bool prerequisites = true;
    bool muir_holds = true;
};

template <class T>
std::optional<T> quasitelescope(const matrix<T>& a, std::vector<qt_level<T>>* levels) {
    std::size_t n = a.rows();
    if (n <= 1) return ring_ops<T>::zero_like(a.at(0, 0));
    auto rl = a.row_labels();
    auto cl = a.col_labels();
    std::vector<int> rtail(rl.begin() + 2, rl.end());
    std::vector<int> ctail(cl.begin() + 2, cl.end());
    auto with = [](int h, const std::vector<int>& t) {
        std::vector<int> v{h};
        v.insert(v.end(), t.begin(), t.end());
        return v;
    };
    auto m1 = a.submatrix(with(rl[0], rtail), with(cl[1], ctail));
    auto m2 = a.submatrix(with(rl[1], rtail), with(cl[1], ctail));
    auto m3 = a.submatrix(with(rl[1], rtail), with(cl[0], ctail));
    auto rest_m = a.submatrix(with(rl[0], rtail), with(cl[0], ctail));

    qt_level<T> lvl;
    auto q1 = qdet(m1, rl[0], cl[1]);
    auto q2i = inv_of(qdet(m2, rl[1], cl[1]));
    auto q3 = qdet(m3, rl[1], cl[0]);
    if (!q1 || !q2i || !q3) {
        lvl.prerequisites = false;
        if (levels) levels->push_back(lvl);
        return std::nullopt;
    }
    lvl.term = (*q1) * (*q2i) * (*q3);
    // Muir extension of the 2x2 expansion at this level:
    //   |rest|_{11} - |A|_{11} = term
    auto q_rest = qdet(rest_m, rl[0], cl[0]);
    auto q_full = qdet(a, rl[0], cl[0]);
    if (q_rest && q_full)
        lvl.muir_holds = ring_ops<T>::is_zero((*q_rest - *q_full) - *lvl.term);
    if (levels) levels->push_back(lvl);

    auto rest = quasitelescope(rest_m, levels);
    if (!rest) return std::nullopt;
    return *lvl.term + *rest;
}

}  // namespace qdetail

// determinant-ratio comparison for commutative field entries
template <class T>
bool qdet_matches_det_ratio(const matrix<T>& a, int i, int j, const T& q) {
    T d_full = det(a);
    T d_min = det(a.drop(i, j));
    auto mi = ring_ops<T>::try_invert(d_min);
    if (!mi) return true;  // ratio undefined; nothing to compare
    std::size_t ip = a.row_pos(i), jp = a.col_pos(j);
    T ratio = d_full * (*mi);
    if ((ip + jp) % 2 == 1) ratio = ring_ops<T>::zero_like(q) - ratio;
    return ring_ops<T>::is_zero(q - ratio);
}

// Runs every identity whose prerequisites hold on the given matrix; each item
// either holds exactly, is reported prerequisite-missing, or carries a
// counterexample witness.
template <class T>
identity_report identity_suite(const matrix<T>& a, const suite_options& opt = {}) {
    identity_report rep;
    rng g(opt.seed);
    std::size_t n = a.rows();
    const auto rl = a.row_labels();
    const auto cl = a.col_labels();
    auto flat_inv = entry_inverter<T>::run(a);

    auto record = [&](const std::string& name, bool any, bool ok, std::size_t count,
                      const std::string& wit) {
        identity_item it;
        it.name = name;
        it.instances = count;
        it.status = !any ? identity_status::prerequisite_missing
                         : (ok ? identity_status::holds : identity_status::violated);
        if (!ok) it.witness = wit;
        rep.items.push_back(it);
    };

    // inverse via quasideterminants against the flat oracle
    {
        auto r = inv_via_qdet(a);
        bool any = r.inverse.has_value() && flat_inv.has_value();
        bool ok = true;
        std::string wit;
        if (any) {
            ok = *r.inverse == *flat_inv;
            if (!ok) wit = "inv_via_qdet differs from flat inverse";
        }
        record("inverse_vs_flat_oracle", any, ok, any ? 1 : 0, wit);
    }

    // row homological relations
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int ip : rl) {
                if (ip == i) continue;
                for (int j : cl)
                    for (int jp : cl) {
                        if (jp == j) continue;
                        auto q_ij = qdet(a, i, j);
                        auto q_ijp = qdet(a, i, jp);
                        auto m1 = qdetail::inv_of(
                            qdet(a.drop(i, jp), ip, j));
                        auto m2 = qdetail::inv_of(
                            qdet(a.drop(i, j), ip, jp));
                        if (!q_ij || !q_ijp || !m1 || !m2) continue;
                        any = true;
                        ++count;
                        T lhs = (*q_ij) * (*m1);
                        T rhs = ring_ops<T>::zero_like(lhs) - (*q_ijp) * (*m2);
                        if (!ring_ops<T>::is_zero(lhs - rhs)) {
                            ok = false;
                            wit = "i=" + std::to_string(i) + " i'=" + std::to_string(ip) +
                                  " j=" + std::to_string(j) + " j'=" + std::to_string(jp);
                        }
                    }
            }
        record("row_homological", any, ok, count, wit);
    }

    // column homological relations
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int ip : rl) {
                if (ip == i) continue;
                for (int j : cl)
                    for (int jp : cl) {
                        if (jp == j) continue;
                        auto q_ij = qdet(a, i, j);
                        auto q_ipj = qdet(a, ip, j);
                        auto m1 = qdetail::inv_of(qdet(a.drop(ip, j), i, jp));
                        auto m2 = qdetail::inv_of(qdet(a.drop(i, j), ip, jp));
                        if (!q_ij || !q_ipj || !m1 || !m2) continue;
                        any = true;
                        ++count;
                        T lhs = (*m1) * (*q_ij);
                        T rhs = ring_ops<T>::zero_like(lhs) - (*m2) * (*q_ipj);
                        if (!ring_ops<T>::is_zero(lhs - rhs)) {
                            ok = false;
                            wit = "i=" + std::to_string(i) + " i'=" + std::to_string(ip) +
                                  " j=" + std::to_string(j) + " j'=" + std::to_string(jp);
                        }
                    }
            }
        record("column_homological", any, ok, count, wit);
    }

    // Laplace expansion by a row: |A|_{il} = a^i_l - sum_{j != l} a^i_j
    // (|A^{i^}_{l^}|_{kj})^{-1} |A^{i^}_{j^}|_{kl}, any row k != i
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int l : cl)
                for (int k : rl) {
                    if (k == i) continue;
                    auto target = qdet(a, i, l);
                    if (!target) continue;
                    T acc = a.entry(i, l);
                    bool have = true;
                    for (int j : cl) {
                        if (j == l) continue;
                        auto m1 = qdetail::inv_of(qdet(a.drop(i, l), k, j));
                        auto m2 = qdet(a.drop(i, j), k, l);
                        if (!m1 || !m2) {
                            have = false;
                            break;
                        }
                        acc = acc - a.entry(i, j) * (*m1) * (*m2);
                    }
                    if (!have) continue;
                    any = true;
                    ++count;
                    if (!ring_ops<T>::is_zero(acc - *target)) {
                        ok = false;
                        wit = "i=" + std::to_string(i) + " l=" + std::to_string(l) +
                              " k=" + std::to_string(k);
                    }
                }
        record("laplace_row", any, ok, count, wit);
    }

    // Laplace expansion by a column: |A|_{lj} = a^l_j - sum_{i != l}
    // |A^{i^}_{j^}|_{lk} (|A^{l^}_{j^}|_{ik})^{-1} a^i_j, any column k != j
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int l : rl)
            for (int j : cl)
                for (int k : cl) {
                    if (k == j) continue;
                    auto target = qdet(a, l, j);
                    if (!target) continue;
                    T acc = a.entry(l, j);
                    bool have = true;
                    for (int i : rl) {
                        if (i == l) continue;
                        auto m1 = qdet(a.drop(i, j), l, k);
                        auto m2 = qdetail::inv_of(qdet(a.drop(l, j), i, k));
                        if (!m1 || !m2) {
                            have = false;
                            break;
                        }
                        acc = acc - (*m1) * (*m2) * a.entry(i, j);
                    }
                    if (!have) continue;
                    any = true;
                    ++count;
                    if (!ring_ops<T>::is_zero(acc - *target)) {
                        ok = false;
                        wit = "l=" + std::to_string(l) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k);
                    }
                }
        record("laplace_col", any, ok, count, wit);
    }

    // Jacobi ratio: (|A_{I u {i}, I' u {j}}|_{ij})^{-1} = |B_{J' u {j}, J u {i}}|_{ji}
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        if (flat_inv) {
            auto subsets = [](const std::vector<int>& pool, std::size_t k) {
                std::vector<std::vector<int>> out;
                std::vector<int> cur;
                std::function<void(std::size_t)> rec = [&](std::size_t start) {
                    if (cur.size() == k) {
                        out.push_back(cur);
                        return;
                    }
                    for (std::size_t p = start; p < pool.size(); ++p) {
                        cur.push_back(pool[p]);
                        rec(p + 1);
                        cur.pop_back();
                    }
                };
                rec(0);
                return out;
            };
            for (int i : rl)
                for (int j : cl) {
                    auto rpool = qdetail::without(rl, i);
                    auto cpool = qdetail::without(cl, j);
                    for (std::size_t k = 0; k <= opt.jacobi_max_class && k <= rpool.size(); ++k) {
                        for (const auto& iset : subsets(rpool, k))
                            for (const auto& ipset : subsets(cpool, k)) {
                                std::vector<int> rows(iset);
                                rows.push_back(i);
                                std::vector<int> cols(ipset);
                                cols.push_back(j);
                                auto lhs = qdetail::inv_of(
                                    qdet(a.submatrix(rows, cols), i, j));
                                // complements
                                std::vector<int> jrows, jcols;
                                for (int r : rl)
                                    if (r != i &&
                                        std::find(iset.begin(), iset.end(), r) == iset.end())
                                        jrows.push_back(r);
                                for (int c : cl)
                                    if (c != j &&
                                        std::find(ipset.begin(), ipset.end(), c) == ipset.end())
                                        jcols.push_back(c);
                                std::vector<int> brows(jcols);  // B rows are A's columns
                                brows.push_back(j);
                                std::vector<int> bcols(jrows);
                                bcols.push_back(i);
                                auto rhs = qdet(flat_inv->submatrix(brows, bcols), j, i);
                                if (!lhs || !rhs) continue;
                                any = true;
                                ++count;
                                if (!ring_ops<T>::is_zero(*lhs - *rhs)) {
                                    ok = false;
                                    wit = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                          " |I|=" + std::to_string(k);
                                }
                            }
                    }
                }
        }
        record("jacobi_ratio", any, ok, count, wit);
    }

    // quasitelescoping sum and its per-level Muir extensions
    {
        std::vector<qdetail::qt_level<T>> levels;
        auto qt = qdetail::quasitelescope(a, &levels);
        auto q11 = qdet(a, rl[0], cl[0]);
        bool any = qt.has_value() && q11.has_value() && n >= 2;
        bool ok = true;
        std::string wit;
        if (any) {
            ok = ring_ops<T>::is_zero(*qt - (a.entry(rl[0], cl[0]) - *q11));
            if (!ok) wit = "QT(A) != a^1_1 - |A|_11";
        }
        record("quasitelescoping", any, ok, any ? 1 : 0, wit);
        bool muir_any = false, muir_ok = true;
        std::size_t muir_count = 0;
        for (const auto& lvl : levels)
            if (lvl.prerequisites && lvl.term) {
                muir_any = true;
                ++muir_count;
                muir_ok &= lvl.muir_holds;
            }
        record("muir_extension_levels", muir_any, muir_ok, muir_count,
               muir_ok ? "" : "level identity failed");
    }

    // row operations: adding left multiples of the other rows to the
    // distinguished row leaves |A|_{ij} unchanged; same when a row l distinct
    // from i is modified by rows other than i and l
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int j : cl) {
                auto base = qdet(a, i, j);
                if (!base) continue;
                // variant (a): modify row i
                matrix<T> b(a);
                std::size_t ipos = a.row_pos(i);
                for (int s : rl) {
                    if (s == i) continue;
                    T lam = qdetail::random_coeff<T>(g, a.at(0, 0));
                    std::size_t spos = a.row_pos(s);
                    for (std::size_t c = 0; c < a.cols(); ++c)
                        b.at(ipos, c) = b.at(ipos, c) + lam * a.at(spos, c);
                }
                auto qb = qdet(b, i, j);
                if (qb) {
                    any = true;
                    ++count;
                    if (!ring_ops<T>::is_zero(*qb - *base)) {
                        ok = false;
                        wit = "modified row i=" + std::to_string(i);
                    }
                }
                // variant (b): modify some row l != i by rows away from i, l
                if (n >= 3) {
                    int l = rl[ipos == 0 ? 1 : 0];
                    matrix<T> c2(a);
                    std::size_t lpos = a.row_pos(l);
                    for (int s : rl) {
                        if (s == i || s == l) continue;
                        T lam = qdetail::random_coeff<T>(g, a.at(0, 0));
                        std::size_t spos = a.row_pos(s);
                        for (std::size_t c = 0; c < a.cols(); ++c)
                            c2.at(lpos, c) = c2.at(lpos, c) + lam * a.at(spos, c);
                    }
                    auto qc = qdet(c2, i, j);
                    if (qc) {
                        any = true;
                        ++count;
                        if (!ring_ops<T>::is_zero(*qc - *base)) {
                            ok = false;
                            wit = "modified row l for i=" + std::to_string(i);
                        }
                    }
                }
            }
        record("row_operation_invariance", any, ok, count, wit);
    }

    // left scaling: mu on row i multiplies |A|_{ij} from the left; scaling a
    // different row by an invertible factor leaves it unchanged
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int j : cl) {
                auto base = qdet(a, i, j);
                if (!base) continue;
                T mu = ring_ops<T>::zero_like(a.at(0, 0));
                do {
                    mu = qdetail::random_coeff<T>(g, a.at(0, 0));
                } while (!ring_ops<T>::try_invert(mu));
                matrix<T> b(a);
                std::size_t ipos = a.row_pos(i);
                for (std::size_t c = 0; c < a.cols(); ++c) b.at(ipos, c) = mu * b.at(ipos, c);
                auto qb = qdet(b, i, j);
                if (qb) {
                    any = true;
                    ++count;
                    if (!ring_ops<T>::is_zero(*qb - mu * (*base))) {
                        ok = false;
                        wit = "scaled distinguished row i=" + std::to_string(i);
                    }
                }
                if (n >= 2) {
                    int l = rl[ipos == 0 ? 1 : 0];
                    matrix<T> c2(a);
                    std::size_t lpos = a.row_pos(l);
                    for (std::size_t c = 0; c < a.cols(); ++c)
                        c2.at(lpos, c) = mu * c2.at(lpos, c);
                    auto qc = qdet(c2, i, j);
                    if (qc) {
                        any = true;
                        ++count;
                        if (!ring_ops<T>::is_zero(*qc - *base)) {
                            ok = false;
                            wit = "scaled other row for i=" + std::to_string(i);
                        }
                    }
                }
            }
        record("left_scaling_covariance", any, ok, count, wit);
    }

    // permutation covariance with tracked labels
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        std::vector<int> prl(rl), pcl(cl);
        for (std::size_t k = prl.size(); k > 1; --k) std::swap(prl[k - 1], prl[g.below(k)]);
        for (std::size_t k = pcl.size(); k > 1; --k) std::swap(pcl[k - 1], pcl[g.below(k)]);
        auto p = qdetail::permuted(a, prl, pcl);
        for (int i : rl)
            for (int j : cl) {
                auto q1 = qdet(a, i, j);
                auto q2 = qdet(p, i, j);
                if (!q1 || !q2) continue;
                any = true;
                ++count;
                if (!ring_ops<T>::is_zero(*q1 - *q2)) {
                    ok = false;
                    wit = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            }
        record("permutation_covariance", any, ok, count, wit);
    }

    // cross-check of the recursive quasiminor form where its prerequisites hold
    {
        bool ok = true, any = false;
        std::size_t count = 0;
        std::string wit;
        for (int i : rl)
            for (int j : cl) {
                auto q1 = qdet(a, i, j);
                auto q2 = qdet_recursive(a, i, j);
                if (!q1 || !q2) continue;
                any = true;
                ++count;
                if (!ring_ops<T>::is_zero(*q1 - *q2)) {
                    ok = false;
                    wit = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            }
        record("recursive_form_crosscheck", any, ok, count, wit);
    }

    return rep;
}

}  // namespace ncloc
