#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ncloc/pid.hpp"

namespace ncloc {

// L_S over a commutative PID: a principal ideal (g) belongs to the filter
// iff some closure element of S is divisible by g, i.e. the part of g
// coprime to the generators is a unit.
template <class B>
struct filter_spec {
    std::vector<B> s_gens;
};

template <class B>
bool in_filter(const B& ideal_gen, const filter_spec<B>& f) {
    if (pid<B>::is_zero(ideal_gen)) return false;  // (F1): the zero ideal is never in
    auto [u, v] = strip_multiplicative_part(ideal_gen, f.s_gens);
    (void)u;
    return pid<B>::is_unit(v);
}

// (J : r) for principal J = (g): the ideal (g / gcd(g, r)).
template <class B>
B ideal_quotient(const B& g, const B& r) {
    if (pid<B>::is_zero(g)) {
        // (0 : r) = 0 for r != 0, and R for r = 0
        return pid<B>::is_zero(r) ? pid<B>::one() : pid<B>::zero();
    }
    B d = pid<B>::gcd(g, r);
    if (pid<B>::is_zero(d)) return pid<B>::canonical(g);  // r = 0
    return pid<B>::canonical(pid<B>::div_exact(pid<B>::canonical(g), d));
}

// ---- torsion radical --------------------------------------------------------

template <class B>
struct sigma_report {
    std::vector<typename fgmodule<B>::elem> generators;  // of sigma(M), in M's coordinates
    std::vector<B> sigma_invariants;                      // sigma(M) = (+) B/(u_i)
    bool idempotent = false;                              // sigma(sigma M) = sigma M
    bool radical = false;                                 // sigma(M / sigma M) = 0
};

template <class B>
sigma_report<B> torsion_sigma(const fgmodule<B>& m, const filter_spec<B>& f) {
    sigma_report<B> rep;
    auto split = split_torsion(m, f.s_gens);
    for (std::size_t i = 0; i < m.invariants().size(); ++i) {
        if (pid<B>::is_unit(split.u[i])) continue;  // no S-torsion in this coordinate
        rep.sigma_invariants.push_back(split.u[i]);
        auto g = m.zero();
        g[i] = split.v[i];  // v_i e_i generates the S-torsion of B/(d_i)
        rep.generators.push_back(m.reduce(g));
    }
    // idempotence: sigma(M) = (+) B/(u_i) with u_i supported on S-primes, so
    // stripping again keeps everything; verify by direct computation
    rep.idempotent = true;
    if (!rep.sigma_invariants.empty()) {
        fgmodule<B> sigma_mod(rep.sigma_invariants, 0);
        auto again = split_torsion(sigma_mod, f.s_gens);
        for (const auto& v : again.v) rep.idempotent &= pid<B>::is_unit(v);
    }
    // radical: M / sigma(M) has invariants v_i, which carry no S-torsion
    rep.radical = true;
    auto q = mod_out_torsion(m, f.s_gens);
    auto again = split_torsion(q.mod, f.s_gens);
    for (const auto& u : again.u) rep.radical &= pid<B>::is_unit(u);
    return rep;
}

// ---- Q_L as a concrete colimit ---------------------------------------------

// Classes of the colimit lim Hom((s^n), M / sigma) are pairs (s^n, value);
// they embed in the localized module with denominator s^n. Minimal-n
// representatives come from loc_module::normalize.
template <class B>
struct gabriel_q_report {
    loc_module<B> loc;     // S^{-1}(M / sigma)
    B s;                   // generator of the cofinal chain (product of S generators)
    bool stabilized = false;
    std::size_t n_used = 0;
    std::string description;  // of M / sigma, the underlying module
};

template <class B>
gabriel_q_report<B> gabriel_q(const fgmodule<B>& m, const filter_spec<B>& f,
                              std::size_t n_max = 12) {
    gabriel_q_report<B> rep;
    rep.loc = loc_module<B>(m, f.s_gens);
    B s = pid<B>::one();
    for (const auto& g : f.s_gens) s = pid<B>::canonical(s * g);
    rep.s = s;
    // the connecting map Hom((s^n), -) -> Hom((s^{n+1}), -) is multiplication
    // by s on M/sigma; it is the same map at every level, so three
    // consecutive bijective steps reduce to one bijectivity test
    const auto& q = rep.loc.modded_module();
    bool bijective = q.free_rank() == 0;
    for (const auto& v : q.invariants())
        bijective &= pid<B>::is_unit(pid<B>::gcd(s, v)) || pid<B>::is_zero(s - pid<B>::one());
    rep.stabilized = bijective;
    rep.n_used = bijective ? 3 : n_max;
    rep.description = q.describe();
    return rep;
}

// class of (s^n |-> value); value is given in M's original Smith coordinates
template <class B>
typename loc_module<B>::elem gabriel_class(const gabriel_q_report<B>& rep,
                                           const fgmodule<B>& m,
                                           const typename fgmodule<B>::elem& value,
                                           std::size_t n) {
    auto e = rep.loc.from_base(m.reduce(value));
    B den = pid<B>::one();
    for (std::size_t i = 0; i < n; ++i) den = den * rep.s;
    return rep.loc.with_den(e.m, den);
}

// ---- the principal-ideal limit formula --------------------------------------

// colim_n Hom((f^n), M) with connecting maps induced by (f^{n+1}) c (f^n).
// Hom((f^n), M) is a copy of M (send the generator f^n to the value), and the
// connecting map is multiplication by f. Classes are pairs (n, value).
template <class B>
struct deligne_report {
    loc_module<B> col;
    B f;
    bool agrees_with_gabriel = false;
    std::string description;
};

template <class B>
deligne_report<B> deligne_limit(const B& f, const fgmodule<B>& m, std::size_t n_max = 12) {
    deligne_report<B> rep;
    rep.f = pid<B>::canonical(f);
    rep.col = loc_module<B>(m, {rep.f});
    rep.description = rep.col.modded_module().describe();

    filter_spec<B> spec{{rep.f}};
    auto gq = gabriel_q(m, spec, n_max);
    // same underlying module of fractions; verify the descriptions and a
    // sweep of raw-chain classes agree
    bool ok = rep.description == gq.description;
    auto raw_class = [&](std::size_t n, const typename fgmodule<B>::elem& value) {
        B den = pid<B>::one();
        for (std::size_t i = 0; i < n; ++i) den = den * rep.f;
        return rep.col.with_den(rep.col.from_base(value).m, den);
    };
    for (std::size_t g = 0; g < m.dim() && ok; ++g) {
        auto v = m.unit_vector(g);
        for (std::size_t n = 0; n + 1 < std::min<std::size_t>(n_max, 5); ++n) {
            // (n, v) and (n+1, f v) are the same class in both colimits
            auto a = raw_class(n, v);
            auto b = raw_class(n + 1, m.smul(rep.f, v));
            ok &= rep.col.eq(a, b);
            auto ga = gabriel_class(gq, m, v, n);
            auto gb = gabriel_class(gq, m, m.smul(rep.f, v), n + 1);
            ok &= gq.loc.eq(ga, gb) && rep.col.eq(a, b) == gq.loc.eq(ga, gb);
        }
    }
    rep.agrees_with_gabriel = ok;
    return rep;
}

// naturality of the limit on a module map phi : M -> N (phi given on Smith
// coordinates and assumed B-linear; linearity is spot-checked)
template <class B, class Phi>
bool deligne_naturality(const B& f, const fgmodule<B>& m, const fgmodule<B>& n, Phi phi,
                        const std::vector<typename fgmodule<B>::elem>& samples) {
    deligne_report<B> dm = deligne_limit(f, m);
    deligne_report<B> dn = deligne_limit(f, n);
    for (const auto& x : samples) {
        // phi must be linear and commute with the connecting maps
        if (!n.eq(phi(m.smul(f, x)), n.smul(f, phi(x)))) return false;
        for (std::size_t k = 0; k < 3; ++k) {
            B den = pid<B>::one();
            for (std::size_t i = 0; i < k; ++i) den = den * f;
            auto a = dn.col.with_den(dn.col.from_base(phi(x)).m, den);
            auto b = dn.col.with_den(dn.col.from_base(phi(m.smul(f, x))).m, den * f);
            if (!dn.col.eq(a, b)) return false;
        }
        (void)dm;
    }
    return true;
}

// ---- globalization lemma -----------------------------------------------------

template <class B>
struct cover_report {
    bool conservative = false;       // joint faithfulness on M
    bool exact_at_m = false;         // ker(iota) = 0
    bool middle_certified = false;   // summandwise gcd/CRT certificates
    bool enumerated = false;         // finite case: all families checked
    bool middle_enumerated_ok = true;
    std::string detail;
};

// Exactness of 0 -> M -> prod_l Q_l M -> prod_{(mu,nu)} Q_mu Q_nu M for a
// finite family of localizations given by generator lists. All ordered index
// pairs enter the difference map. Torsion summands are certified through the
// identity part-coprime-to-both = gcd of the one-sided coprime parts; a free
// summand needs the generators to share no prime. Finite modules are also
// verified by full enumeration.
template <class B>
cover_report<B> cover_exactness(const fgmodule<B>& m,
                                const std::vector<std::vector<B>>& covers,
                                std::size_t enum_cap = 4096) {
    cover_report<B> rep;
    std::size_t nl = covers.size();
    std::vector<torsion_split<B>> splits;
    for (const auto& c : covers) splits.push_back(split_torsion(m, c));

    // exactness at M: for each torsion coordinate, lcm of the coprime parts
    // must reach the full invariant
    rep.exact_at_m = true;
    for (std::size_t i = 0; i < m.invariants().size(); ++i) {
        B l = pid<B>::one();
        for (const auto& sp : splits) l = pid_lcm(l, sp.v[i]);
        rep.exact_at_m &= pid_divides(m.invariants()[i], l);
    }

    // free part: a prime dividing every cover kills B/(p) in all charts
    bool free_ok = true;
    if (m.free_rank() > 0 && nl > 0) {
        B g = pid<B>::zero();
        bool first = true;
        for (const auto& c : covers) {
            B prod = pid<B>::one();
            for (const auto& f : c) prod = prod * f;
            g = first ? pid<B>::canonical(prod) : pid<B>::gcd(g, prod);
            first = false;
        }
        free_ok = pid<B>::is_unit(g);
    }
    rep.conservative = rep.exact_at_m && free_ok;

    // middle certificates, torsion: coprime-to-both part vs gcd of parts
    rep.middle_certified = free_ok;
    for (std::size_t mu = 0; mu < nl; ++mu)
        for (std::size_t nu = 0; nu < nl; ++nu) {
            std::vector<B> both(covers[mu]);
            both.insert(both.end(), covers[nu].begin(), covers[nu].end());
            auto sp = split_torsion(m, both);
            for (std::size_t i = 0; i < m.invariants().size(); ++i) {
                B g = pid<B>::gcd(splits[mu].v[i], splits[nu].v[i]);
                rep.middle_certified &= pid_divides(sp.v[i], g) && pid_divides(g, sp.v[i]);
            }
        }

    // finite case: enumerate prod_l M/sigma_l and compare the kernel of the
    // difference map with the image of M elementwise
    std::vector<modded<B>> qs;
    for (const auto& c : covers) qs.push_back(mod_out_torsion(m, c));
    bool finite = pid<B>::finite_quotients() && m.free_rank() == 0;
    if (finite && nl > 0) {
        std::vector<std::vector<typename fgmodule<B>::elem>> charts;
        for (const auto& q : qs) {
            auto e = q.mod.enumerate_all(enum_cap);
            if (!e) {
                finite = false;
                break;
            }
            charts.push_back(*e);
        }
        auto all_m = m.enumerate_all(enum_cap);
        if (!all_m) finite = false;
        if (finite) {
            rep.enumerated = true;
            // project M/sigma_mu further to M/sigma_{mu,nu}
            auto project_pair = [&](std::size_t mu, std::size_t nu,
                                    const typename fgmodule<B>::elem& x_mu) {
                std::vector<B> both(covers[mu]);
                both.insert(both.end(), covers[nu].begin(), covers[nu].end());
                auto qmn = mod_out_torsion(m, both);
                // x_mu is in q_mu coordinates; lift positions back to M, then
                // project; torsion coords of q_mu sit at qs[mu].keep
                auto lifted = m.zero();
                for (std::size_t k = 0; k < qs[mu].keep.size(); ++k)
                    lifted[qs[mu].keep[k]] = x_mu[k];
                for (std::size_t k = 0; k < m.free_rank(); ++k)
                    lifted[m.invariants().size() + k] = x_mu[qs[mu].keep.size() + k];
                return project_mod_torsion(m, qmn, lifted);
            };
            // image of M
            std::vector<std::vector<typename fgmodule<B>::elem>> image;
            for (const auto& x : *all_m) {
                std::vector<typename fgmodule<B>::elem> fam;
                for (const auto& q : qs) fam.push_back(project_mod_torsion(m, q, x));
                image.push_back(fam);
            }
            // kernel families
            std::vector<std::size_t> idx(nl, 0);
            std::vector<std::vector<typename fgmodule<B>::elem>> kernel;
            for (;;) {
                std::vector<typename fgmodule<B>::elem> fam;
                for (std::size_t l = 0; l < nl; ++l) fam.push_back(charts[l][idx[l]]);
                bool compatible = true;
                for (std::size_t mu = 0; mu < nl && compatible; ++mu)
                    for (std::size_t nu = 0; nu < nl && compatible; ++nu) {
                        if (mu == nu) continue;
                        std::vector<B> both(covers[mu]);
                        both.insert(both.end(), covers[nu].begin(), covers[nu].end());
                        auto qmn = mod_out_torsion(m, both);
                        compatible &= qmn.mod.eq(project_pair(mu, nu, fam[mu]),
                                                 project_pair(nu, mu, fam[nu]));
                    }
                if (compatible) kernel.push_back(fam);
                std::size_t l = 0;
                while (l < nl && ++idx[l] == charts[l].size()) idx[l++] = 0;
                if (l == nl) break;
            }
            // kernel must equal image as sets (image entries are distinct iff
            // exactness at M holds, which is checked separately)
            for (const auto& fam : kernel) {
                bool hit = std::find(image.begin(), image.end(), fam) != image.end();
                rep.middle_enumerated_ok &= hit;
            }
            std::vector<std::vector<typename fgmodule<B>::elem>> dedup;
            for (const auto& fam : image)
                if (std::find(dedup.begin(), dedup.end(), fam) == dedup.end())
                    dedup.push_back(fam);
            rep.middle_enumerated_ok &= dedup.size() == kernel.size();
        }
    }
    rep.detail = m.describe();
    return rep;
}

// ---- filter axioms on principal ideals --------------------------------------

// Exhaustive small-sample verification of (F1)(F2)(F3)(UF)(GF) for L_S over
// the integers, restricted to principal ideals (d), d <= max_d. Returns true
// when every instance satisfies the axiom.
struct filter_axiom_report {
    bool f1 = false, f2 = true, f3 = true, uf = true, gf = true;
};

inline filter_axiom_report check_filter_axioms(const filter_spec<bigint>& f, long long max_d) {
    filter_axiom_report rep;
    auto member = [&](const bigint& g) { return in_filter(g, f); };
    rep.f1 = member(1) && !member(0);
    for (long long a = 1; a <= max_d; ++a) {
        for (long long b = 1; b <= max_d; ++b) {
            bigint ba(a), bb(b);
            // (F2): intersection of principal ideals is the lcm
            if (member(ba) && member(bb)) rep.f2 &= member(pid_lcm(ba, bb));
            // (F3): (a) in L and (a) <= (b), i.e. b | a, forces (b) in L
            if (member(ba) && pid_divides(bb, ba)) rep.f3 &= member(bb);
            // (UF): J in L iff (J : r) in L for all r; (a : b) = a/gcd(a,b)
            if (member(ba)) rep.uf &= member(ideal_quotient(ba, bb));
            // (GF): J = (a) in L and (J' : j) in L for all j in J implies
            // J' = (b) in L; the binding instance is j = a itself
            if (member(ba) && member(ideal_quotient(bb, ba))) rep.gf &= member(bb);
        }
        // UF converse: if (a : r) in L for every r <= max_d (in particular r = 1)
        // then (a) in L; (a : 1) = (a) makes this immediate, checked anyway
        bigint ba(a);
        if (member(ideal_quotient(ba, bigint(1)))) rep.uf &= member(ba);
    }
    return rep;
}

// membership predicate for an intersection of filters
inline bool in_filter_intersection(const bigint& g, const std::vector<filter_spec<bigint>>& fs) {
    for (const auto& f : fs)
        if (!in_filter(g, f)) return false;
    return true;
}

inline filter_axiom_report check_intersection_axioms(const std::vector<filter_spec<bigint>>& fs,
                                                     long long max_d) {
    filter_axiom_report rep;
    auto member = [&](const bigint& g) { return in_filter_intersection(g, fs); };
    rep.f1 = member(1) && !member(0);
    for (long long a = 1; a <= max_d; ++a)
        for (long long b = 1; b <= max_d; ++b) {
            bigint ba(a), bb(b);
            if (member(ba) && member(bb)) rep.f2 &= member(pid_lcm(ba, bb));
            if (member(ba) && pid_divides(bb, ba)) rep.f3 &= member(bb);
            if (member(ba)) rep.uf &= member(ideal_quotient(ba, bb));
            if (member(ba) && member(ideal_quotient(bb, ba))) rep.gf &= member(bb);
        }
    return rep;
}

}  // namespace ncloc
