#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncloc/freealg.hpp"

namespace ncloc {

// Exact incremental column-echelon solver for sparse vectors indexed by
// words. Columns are added once; solve() answers "is the target in the span,
// and with which coefficients". Leading term = largest word in the map's
// byte order (any fixed total order works here).
//
// Invariant during reduction of a vector v with base b (a fresh column or a
// solve target): v = b - sum_j combo[j] * column_j.
template <class F>
class word_solver {
  public:
    void add_column(const fpoly<F>& col) {
        std::size_t idx = n_cols_++;
        fpoly<F> c(col);
        std::map<std::size_t, F> combo;
        while (!c.is_zero()) {
            const word& lead = c.terms().rbegin()->first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                F linv = c.terms().rbegin()->second.inv();
                fpoly<F> scaled;
                for (const auto& [w, v] : c.terms()) scaled.add_term(w, linv * v);
                // scaled = linv * (col_idx - sum combo * cols)
                std::map<std::size_t, F> scombo;
                scombo[idx] = linv;
                for (const auto& [j, v] : combo) accumulate(scombo, j, F(0) - linv * v);
                pivots_.emplace(lead, pivot{scaled, scombo});
                return;
            }
            reduce_step(c, combo, it->second);
        }
        ++dependent_;
    }

    // coefficients per added column expressing target, if it is in the span
    std::optional<std::vector<F>> solve(const fpoly<F>& target) const {
        fpoly<F> c(target);
        std::map<std::size_t, F> combo;
        while (!c.is_zero()) {
            const word& lead = c.terms().rbegin()->first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) return std::nullopt;
            reduce_step(c, combo, it->second);
        }
        std::vector<F> out(n_cols_, F(0));
        for (const auto& [j, v] : combo) out[j] = v;
        return out;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t kernel_dim() const { return dependent_; }
    std::size_t columns() const { return n_cols_; }

  private:
    struct pivot {
        fpoly<F> col;                    // leading coefficient 1
        std::map<std::size_t, F> combo;  // col as combination of original columns
    };

    static void accumulate(std::map<std::size_t, F>& m, std::size_t j, const F& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = m.emplace(j, v);
        if (!fresh) {
            it->second = it->second + v;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    // v := v - f * p.col where f is v's leading coefficient
    static void reduce_step(fpoly<F>& c, std::map<std::size_t, F>& combo, const pivot& p) {
        F f = c.terms().rbegin()->second;
        for (const auto& [w, v] : p.col.terms()) c.add_term(w, F(0) - f * v);
        for (const auto& [j, v] : p.combo) accumulate(combo, j, f * v);
    }

    std::map<word, pivot> pivots_;
    std::size_t n_cols_ = 0;
    std::size_t dependent_ = 0;
};

}  // namespace ncloc
