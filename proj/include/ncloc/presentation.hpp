#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncloc/errors.hpp"
#include "ncloc/freealg.hpp"

namespace ncloc {

inline constexpr std::uint64_t default_step_budget = 1000000;

template <class F = rat>
struct rewrite_rule {
    word lead;
    fpoly<F> repl;
};

template <class F>
struct ambiguity {
    word overlap;
    bool resolvable;
    fpoly<F> nf_left;   // the two one-step reducts, fully normalized
    fpoly<F> nf_right;
};

// Finitely presented associative algebra: free algebra over F modulo a
// reduction system. Rules must strictly decrease the word order, which makes
// every rewrite sequence finite; unique normal forms additionally need the
// ambiguity check to come back clean.
template <class F = rat>
class presented_ring {
  public:
    using poly = fpoly<F>;

    presented_ring() = default;  // empty ring of scalars
    presented_ring(std::vector<std::string> gens, std::vector<rewrite_rule<F>> rules,
                   std::vector<long long> order_weights = {},
                   std::map<std::string, long long> filtration_degrees = {})
        : gens_(std::move(gens)), rules_(std::move(rules)), fdeg_(std::move(filtration_degrees)) {
        if (gens_.size() > 120) throw bad_presentation("too many generators");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (index_.count(gens_[i])) throw bad_presentation("duplicate generator " + gens_[i]);
            index_[gens_[i]] = i;
        }
        if (order_weights.empty()) order_weights.assign(gens_.size(), 1);
        if (order_weights.size() != gens_.size())
            throw bad_presentation("order weight per generator required");
        for (long long w : order_weights)
            if (w < 1) throw bad_presentation("order weights must be >= 1");
        order_ = word_order(order_weights);
        for (const auto& r : rules_) {
            if (r.lead.empty()) throw bad_presentation("empty rule lead");
            for (const auto& [w, c] : r.repl.terms())
                if (order_.compare(r.lead, w) <= 0)
                    throw bad_presentation("rule does not decrease the word order");
        }
    }

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<rewrite_rule<F>>& rules() const { return rules_; }
    const word_order& order() const { return order_; }

    std::size_t gen_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw bad_presentation("unknown generator " + name);
        return it->second;
    }
    bool has_gen(const std::string& name) const { return index_.count(name) != 0; }
    poly gen(const std::string& name) const { return poly::from_word(letter(gen_index(name))); }
    word gen_word(const std::string& name) const { return letter(gen_index(name)); }

    long long filtration_degree(const word& w) const {
        long long d = 0;
        for (unsigned char ch : w) {
            auto it = fdeg_.find(gens_[ch]);
            d += it == fdeg_.end() ? 1 : it->second;
        }
        return d;
    }
    bool has_filtration() const { return !fdeg_.empty(); }

    std::string word_str(const word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (unsigned char ch : w) {
            if (!s.empty()) s += "*";
            s += gens_[ch];
        }
        return s;
    }
    std::string poly_str(const poly& p) const {
        if (p.is_zero()) return "0";
        std::string s;
        for (const auto& [w, c] : p.terms()) {
            if (!s.empty()) s += " + ";
            s += coeff_str(c);
            if (!w.empty()) s += "*" + word_str(w);
        }
        return s;
    }

    // leftmost occurrence of any rule lead; earliest position wins, lower
    // rule index breaks ties
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const word& w) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;  // (pos, rule)
        for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
            auto pos = w.find(rules_[ri].lead);
            if (pos == word::npos) continue;
            if (!best || pos < best->first) best = {pos, ri};
        }
        return best;
    }

    bool is_reduced_word(const word& w) const { return !find_redex(w).has_value(); }

    poly normal_form(const poly& p, std::uint64_t budget = default_step_budget) const {
        poly work(p);
        std::uint64_t steps = 0;
        for (;;) {
            const word* redex_word = nullptr;
            std::pair<std::size_t, std::size_t> redex;
            for (const auto& [w, c] : work.terms()) {
                auto r = find_redex(w);
                if (r) {
                    redex_word = &w;
                    redex = *r;
                    break;
                }
            }
            if (!redex_word) return work;
            if (++steps > budget)
                throw non_terminating("normal form exceeded step budget");
            word w = *redex_word;
            F c = work.coeff_of(w);
            work.add_term(w, F(0) - c);
            const auto& rule = rules_[redex.second];
            word pre = w.substr(0, redex.first);
            word post = w.substr(redex.first + rule.lead.size());
            for (const auto& [rw, rc] : rule.repl.terms()) work.add_term(pre + rw + post, c * rc);
        }
    }

    poly nf_mul(const poly& a, const poly& b) const { return normal_form(a * b); }

    // One-step reduction of word w with rule ri at position pos, then full
    // normalization; used by the ambiguity check.
    poly reduce_at(const word& w, std::size_t pos, std::size_t ri) const {
        const auto& rule = rules_[ri];
        poly out;
        word pre = w.substr(0, pos);
        word post = w.substr(pos + rule.lead.size());
        for (const auto& [rw, rc] : rule.repl.terms()) out.add_term(pre + rw + post, rc);
        return normal_form(out);
    }

    // Every overlap and inclusion ambiguity among rule leads, with its
    // resolution status. max_len caps the ambiguity-word length.
    std::vector<ambiguity<F>> overlap_ambiguities(std::size_t max_len = 64) const {
        std::vector<ambiguity<F>> out;
        auto push = [&](const word& w, std::size_t pos1, std::size_t r1, std::size_t pos2,
                        std::size_t r2) {
            if (w.size() > max_len) return;
            poly left = reduce_at(w, pos1, r1);
            poly right = reduce_at(w, pos2, r2);
            out.push_back({w, left == right, left, right});
        };
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = 0; j < rules_.size(); ++j) {
                const word& a = rules_[i].lead;
                const word& b = rules_[j].lead;
                // overlap: proper suffix of a equals proper prefix of b
                for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
                    if (a.compare(a.size() - k, k, b, 0, k) == 0)
                        push(a + b.substr(k), 0, i, a.size() - k, j);
                }
                // inclusion: b strictly inside a
                if (i != j && b.size() < a.size()) {
                    for (std::size_t p = 0; p + b.size() <= a.size(); ++p)
                        if (a.compare(p, b.size(), b) == 0) push(a, 0, i, p, j);
                }
            }
        }
        return out;
    }

    bool all_ambiguities_resolve(std::size_t max_len = 64) const {
        for (const auto& amb : overlap_ambiguities(max_len))
            if (!amb.resolvable) return false;
        return true;
    }

    // All irreducible words of length <= max_len, ascending in the word order.
    std::vector<word> basis_words(std::size_t max_len) const {
        std::vector<word> out{word()};
        std::vector<word> frontier{word()};
        for (std::size_t d = 1; d <= max_len; ++d) {
            std::vector<word> next;
            for (const auto& w : frontier) {
                for (std::size_t g = 0; g < gens_.size(); ++g) {
                    word cand = w + letter(g);
                    bool reducible = false;
                    for (const auto& r : rules_) {
                        if (r.lead.size() <= cand.size() &&
                            cand.compare(cand.size() - r.lead.size(), r.lead.size(), r.lead) == 0) {
                            reducible = true;
                            break;
                        }
                    }
                    if (!reducible) next.push_back(cand);
                }
            }
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end(),
                  [this](const word& u, const word& v) { return order_.less(u, v); });
        return out;
    }

  private:
    static std::string coeff_str(const rat& c) { return c.str(); }
    template <class G>
    static std::string coeff_str(const G& c) { return c.str(); }

    std::vector<std::string> gens_;
    std::vector<rewrite_rule<F>> rules_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, long long> fdeg_;
    word_order order_;
};

using qring = presented_ring<rat>;

// ---- registered example rings ---------------------------------------------

// Quantum plane: generators a, b with a*b -> q*b*a. Normal forms are the
// words b^j a^i. q must avoid 0, 1, -1 to stay a genuine deformation.
template <class F = rat>
presented_ring<F> q_plane(const F& q) {
    if (q.is_zero() || q == F(1) || q == F(-1))
        throw bad_presentation("q-plane parameter must avoid 0, 1, -1");
    std::vector<rewrite_rule<F>> rules;
    word ab = letter(0) + letter(1);
    word ba = letter(1) + letter(0);
    rules.push_back({ab, fpoly<F>::from_word(ba, q)});
    return presented_ring<F>({"a", "b"}, std::move(rules));
}

// Commutative polynomial ring on the named generators: x_i x_j -> x_j x_i
// for i earlier than j never fires; the oriented rules rewrite each earlier
// letter to the right of a later one. Normal forms are sorted words with the
// later-declared generators first.
template <class F = rat>
presented_ring<F> commutative_ring(const std::vector<std::string>& gens) {
    std::vector<rewrite_rule<F>> rules;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            rules.push_back(
                {letter(i) + letter(j), fpoly<F>::from_word(letter(j) + letter(i))});
    return presented_ring<F>(gens, std::move(rules));
}

// The warning-theorem ring: z1, z2, z3, D with
//   z2 z3 D -> D^{e1} z1,  z3 z1 D -> D^{e2} z2,  z1 z2 D -> D^{e3} z3.
// Order weights 3,3,3,1 keep all three rules decreasing for exponents up to 3.
inline qring counterexample_ring(long long e1 = 1, long long e2 = 2, long long e3 = 3) {
    if (e1 < 1 || e2 < 1 || e3 < 1) throw bad_presentation("exponents must be positive");
    long long w = std::max({e1, e2, e3});
    auto dpow = [](long long k) { return word(static_cast<std::size_t>(k), letter(3)[0]); };
    std::vector<rewrite_rule<rat>> rules;
    rules.push_back({letter(1) + letter(2) + letter(3), ncpoly::from_word(dpow(e1) + letter(0))});
    rules.push_back({letter(2) + letter(0) + letter(3), ncpoly::from_word(dpow(e2) + letter(1))});
    rules.push_back({letter(0) + letter(1) + letter(3), ncpoly::from_word(dpow(e3) + letter(2))});
    return qring({"z1", "z2", "z3", "D"}, std::move(rules), {w, w, w, 1});
}

// Truncated polynomial ring F[t]/(t^n), filtration degree of t is -1.
template <class F = rat>
presented_ring<F> truncated_poly_ring(std::size_t n) {
    if (n < 1) throw bad_presentation("truncation order must be >= 1");
    std::vector<rewrite_rule<F>> rules;
    rules.push_back({word(n, letter(0)[0]), fpoly<F>()});
    return presented_ring<F>({"t"}, std::move(rules), {}, {{"t", -1}});
}

// Quantum plane with a central nilpotent deformation parameter adjoined:
// gens a, b, t; ab -> q ba, at -> ta, bt -> tb, t^n -> 0. Filtration degrees
// a, b: 0 and t: -1.
template <class F = rat>
presented_ring<F> q_plane_truncated(const F& q, std::size_t n) {
    std::vector<rewrite_rule<F>> rules;
    rules.push_back({letter(0) + letter(1), fpoly<F>::from_word(letter(1) + letter(0), q)});
    rules.push_back({letter(0) + letter(2), fpoly<F>::from_word(letter(2) + letter(0))});
    rules.push_back({letter(1) + letter(2), fpoly<F>::from_word(letter(2) + letter(1))});
    rules.push_back({word(n, letter(2)[0]), fpoly<F>()});
    return presented_ring<F>({"a", "b", "t"}, std::move(rules), {},
                             {{"a", 0}, {"b", 0}, {"t", -1}});
}

}  // namespace ncloc
