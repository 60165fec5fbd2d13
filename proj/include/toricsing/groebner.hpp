#ifndef TORICSING_GROEBNER_HPP
#define TORICSING_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "toricsing/binomial.hpp"
#include "toricsing/ints.hpp"
#include "toricsing/lp.hpp"
#include "toricsing/monomial.hpp"
#include "toricsing/order.hpp"

namespace toricsing {

// One-step rewriting m -> m * trail(g) / lead(g), first applicable basis
// element by index, restarting from the front after every hit. The fixed
// strategy makes normal forms deterministic, so equality of normal forms is
// exactly joinability once the system terminates.
inline Monomial normal_form(Monomial m, const std::vector<Binomial>& basis, StepCounter& sc) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& g : basis) {
            if (g.lead().degree() > m.degree()) continue;
            if (g.lead().divides(m)) {
                sc.charge("rewrite step");
                m = m.div(g.lead()).mul(g.trail());
                changed = true;
                break;
            }
        }
    }
    return m;
}

// S(f, g) written as the monomial pair a - b. The S-polynomial of two
// binomials is again a pure difference: a = (lcm/lead_g) * trail_g,
// b = (lcm/lead_f) * trail_f. It vanishes iff a == b.
struct SPair {
    Monomial a, b;
    bool is_zero() const { return a == b; }
};

inline SPair spair(const Binomial& f, const Binomial& g) {
    Monomial l = Monomial::lcm(f.lead(), g.lead());
    return {l.div(g.lead()).mul(g.trail()), l.div(f.lead()).mul(f.trail())};
}

// Reduce both sides of f; nullopt if they meet (f lies in the ideal of the
// rewriting system), otherwise the oriented difference of the normal forms.
inline std::optional<Binomial> reduce_binomial(const Binomial& f, const std::vector<Binomial>& basis,
                                               const TermOrder& o, StepCounter& sc) {
    Monomial a = normal_form(f.lead(), basis, sc);
    Monomial b = normal_form(f.trail(), basis, sc);
    if (a == b) return std::nullopt;
    return Binomial::oriented(std::move(a), std::move(b), o);
}

namespace detail {

struct PendingPair {
    int i, j;  // i < j, indices into the working basis
    Monomial lcm;
};

// Buchberger's first criterion: coprime leads resolve on their own.
inline bool coprime_leads(const Binomial& f, const Binomial& g) {
    return Monomial::coprime(f.lead(), g.lead());
}

// Chain criterion, strict form: drop (i, j) when some other lead divides
// lcm(i, j) and both induced lcms are proper divisors. Soundness needs no
// processing-order bookkeeping; it follows by induction on divisibility.
inline bool chain_drops(const std::vector<Binomial>& basis, int i, int j, const Monomial& lij) {
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
        if (k == i || k == j) continue;
        const Monomial& lk = basis[k].lead();
        if (!lk.divides(lij)) continue;
        if (Monomial::lcm(basis[i].lead(), lk) == lij) continue;
        if (Monomial::lcm(basis[j].lead(), lk) == lij) continue;
        return true;
    }
    return false;
}

// Reduce every generator by the others until stable, dropping any whose
// sides join. Replacing an element with its two-sided normal form modulo the
// rest preserves the generated ideal, and each replacement strictly lowers
// the element under o, so the loop terminates.
inline std::vector<Binomial> autoreduce(const std::vector<Binomial>& gens, const TermOrder& o,
                                        StepCounter& sc) {
    std::vector<Binomial> g;
    for (const auto& f : gens) {
        Binomial b = Binomial::oriented(f.lead(), f.trail(), o);
        if (std::find(g.begin(), g.end(), b) == g.end()) g.push_back(std::move(b));
    }
    auto nf_except = [&](Monomial m, size_t skip) {
        for (bool hit = true; hit;) {
            hit = false;
            for (size_t k = 0; k < g.size(); ++k) {
                if (k == skip || g[k].lead().degree() > m.degree()) continue;
                if (g[k].lead().divides(m)) {
                    sc.charge("rewrite step");
                    m = m.div(g[k].lead()).mul(g[k].trail());
                    hit = true;
                    break;
                }
            }
        }
        return m;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t k = 0; k < g.size();) {
            Monomial a = nf_except(g[k].lead(), k);
            Monomial b = nf_except(g[k].trail(), k);
            if (a == b) {
                g.erase(g.begin() + k);
                changed = true;
                continue;
            }
            Binomial r = Binomial::oriented(std::move(a), std::move(b), o);
            if (!(r == g[k])) {
                g[k] = std::move(r);
                changed = true;
            }
            ++k;
        }
    }
    return g;
}

// Pair bookkeeping after Gebauer and Moller. Appending an element first
// retires queued pairs whose lcm the new lead chains away, then queues the
// new pairs (i, t) surviving three cuts: a new pair with properly dividing
// lcm, a duplicate lcm (one representative per lcm suffices, and a class
// with any coprime-lead member resolves entirely), and coprime leads.
inline void update_pairs(std::vector<Binomial>& basis, std::vector<PendingPair>& pairs,
                         Binomial h) {
    const int t = static_cast<int>(basis.size());
    basis.push_back(std::move(h));
    const Monomial& lt = basis[t].lead();

    std::erase_if(pairs, [&](const PendingPair& p) {
        return lt.divides(p.lcm) &&
               Monomial::lcm(basis[p.i].lead(), lt) != p.lcm &&
               Monomial::lcm(basis[p.j].lead(), lt) != p.lcm;
    });

    std::vector<PendingPair> cand;
    cand.reserve(t);
    for (int i = 0; i < t; ++i)
        cand.push_back({i, t, Monomial::lcm(basis[i].lead(), lt)});
    std::sort(cand.begin(), cand.end(), [](const PendingPair& p, const PendingPair& q) {
        if (p.lcm.degree() != q.lcm.degree()) return p.lcm.degree() < q.lcm.degree();
        if (!(p.lcm == q.lcm)) return Monomial::lex_less(p.lcm, q.lcm);
        return p.i < q.i;
    });

    // Classes of equal lcm are adjacent, and a proper divisor always sits in
    // an earlier class, so one forward pass sees every candidate's divisors.
    std::vector<const Monomial*> reps;
    for (size_t k = 0; k < cand.size();) {
        size_t e = k;
        while (e < cand.size() && cand[e].lcm == cand[k].lcm) ++e;
        bool dominated = false;
        for (const Monomial* r : reps)
            if (r->divides(cand[k].lcm)) { dominated = true; break; }
        if (!dominated) {
            bool coprime = false;
            for (size_t x = k; x < e && !coprime; ++x)
                coprime = Monomial::coprime(basis[cand[x].i].lead(), lt);
            if (!coprime) pairs.push_back(cand[k]);
        }
        reps.push_back(&cand[k].lcm);
        k = e;
    }
}

} // namespace detail

// Minimalize then tail-reduce a marked generating set that is already a
// Groebner basis for `o`; the result is the reduced basis, sorted by lead.
inline std::vector<Binomial> interreduce(std::vector<Binomial> g, const TermOrder& o, StepCounter& sc) {
    std::sort(g.begin(), g.end(), [&](const Binomial& x, const Binomial& y) {
        Cmp c = o.compare(x.lead(), y.lead());
        if (c != Cmp::equal) return c == Cmp::less;
        return o.less(x.trail(), y.trail());
    });
    std::vector<Binomial> minimal;
    for (auto& b : g) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.lead().divides(b.lead())) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(b));
    }
    std::vector<Binomial> out;
    out.reserve(minimal.size());
    for (const auto& b : minimal) {
        Monomial t = normal_form(b.trail(), minimal, sc);
        if (t == b.lead()) continue;  // collapsed to zero
        out.push_back(Binomial::marked(b.lead(), std::move(t)));
    }
    return out;
}

// Buchberger completion for binomial ideals. Every intermediate object is a
// pure binomial, so reduction is monomial rewriting and no coefficient
// arithmetic happens at all. Pair selection is normal: smallest lcm under
// the run's order, smaller indices on ties.
inline MarkedBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& o,
                              std::vector<std::string> vars, const Limits& lim = {}) {
    StepCounter sc{lim.reduction_steps};
    std::vector<Binomial> basis;
    std::vector<detail::PendingPair> pairs;
    for (auto& f : detail::autoreduce(gens, o, sc))
        detail::update_pairs(basis, pairs, std::move(f));

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            Cmp c = o.compare(pairs[k].lcm, pairs[best].lcm);
            if (c == Cmp::less ||
                (c == Cmp::equal && (pairs[k].j < pairs[best].j ||
                                     (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
                best = k;
        }
        detail::PendingPair p = std::move(pairs[best]);
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();
        sc.charge("s-pair");
        SPair s = spair(basis[p.i], basis[p.j]);
        if (s.is_zero()) continue;
        Monomial a = normal_form(s.a, basis, sc);
        Monomial b = normal_form(s.b, basis, sc);
        if (a == b) continue;
        detail::update_pairs(basis, pairs, Binomial::oriented(std::move(a), std::move(b), o));
    }

    MarkedBasis mb;
    mb.vars = std::move(vars);
    mb.elems = interreduce(std::move(basis), o, sc);
    mb.reduced = true;
    return mb;
}

// Strictly positive rational weight w with w . lead > w . trail for every
// element, if one exists. Floating-point simplex proposes, exact arithmetic
// verifies; the exact solver is the sole authority for "no certificate".
inline std::optional<std::vector<Rat>> certify_marked(const MarkedBasis& mb) {
    const int n = mb.nvars();
    if (mb.elems.empty()) return std::vector<Rat>(n, Rat(1));

    std::vector<std::vector<double>> ad;
    std::vector<double> bd;
    std::vector<std::vector<Rat>> ar;
    std::vector<Rat> br;
    auto add_row = [&](const std::vector<int64_t>& u) {
        std::vector<double> rd(n);
        std::vector<Rat> rr(n);
        for (int i = 0; i < n; ++i) {
            rd[i] = static_cast<double>(u[i]);
            rr[i] = Rat(u[i]);
        }
        ad.push_back(std::move(rd));
        bd.push_back(1.0);
        ar.push_back(std::move(rr));
        br.push_back(Rat(1));
    };
    for (const auto& g : mb.elems) add_row(g.direction());
    for (int i = 0; i < n; ++i) {
        std::vector<int64_t> e(n, 0);
        e[i] = 1;
        add_row(e);
    }

    auto exact_dot_positive = [&](const std::vector<Rat>& w) {
        for (const auto& g : mb.elems) {
            Rat s(0);
            std::vector<int64_t> u = g.direction();
            for (int i = 0; i < n; ++i) s += w[i] * Rat(u[i]);
            if (s <= 0) return false;
        }
        for (int i = 0; i < n; ++i)
            if (w[i] <= 0) return false;
        return true;
    };

    auto fast = feasible_point_double(ad, bd);
    if (fast.status == LPStatus::feasible) {
        std::vector<Rat> w(n);
        for (int i = 0; i < n; ++i) w[i] = rationalize(fast.x[i]);
        if (exact_dot_positive(w)) return w;
    }
    auto exact = feasible_point_exact(ar, br);
    if (exact.status != LPStatus::feasible) return std::nullopt;
    if (!exact_dot_positive(exact.x))
        throw std::logic_error("exact certificate failed verification");
    return exact.x;
}

// Confluence check for a marked set. Requires a coherent marking (throws
// marked_incoherent otherwise, a different failure than "not a basis"):
// coherence makes rewriting terminate, and then agreement of the two
// deterministic normal forms across all surviving S-pairs is equivalent to
// the set being a Groebner basis of the ideal it generates.
inline bool is_groebner_marked(const MarkedBasis& mb, const Limits& lim = {}, bool use_chain = true) {
    if (!certify_marked(mb)) throw marked_incoherent("marking admits no positive weight");
    StepCounter sc{lim.reduction_steps};
    const auto& basis = mb.elems;
    const int sz = static_cast<int>(basis.size());
    for (int i = 0; i < sz; ++i) {
        for (int j = i + 1; j < sz; ++j) {
            if (detail::coprime_leads(basis[i], basis[j])) continue;
            Monomial lij = Monomial::lcm(basis[i].lead(), basis[j].lead());
            if (use_chain && detail::chain_drops(basis, i, j, lij)) continue;
            SPair s = spair(basis[i], basis[j]);
            if (s.is_zero()) continue;
            if (normal_form(s.a, basis, sc) != normal_form(s.b, basis, sc)) return false;
        }
    }
    return true;
}

// Minimal generators of the initial ideal: the leads, with any lead divisible
// by another dropped and duplicates collapsed.
inline std::vector<Monomial> initial_ideal(const MarkedBasis& mb) {
    std::vector<Monomial> leads;
    for (const auto& g : mb.elems) leads.push_back(g.lead());
    std::sort(leads.begin(), leads.end(), Monomial::lex_less);
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < leads.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < leads.size() && !covered; ++j)
            covered = j != i && leads[j].divides(leads[i]);
        if (!covered) out.push_back(leads[i]);
    }
    return out;
}

inline bool all_squarefree(const std::vector<Monomial>& ms) {
    return std::all_of(ms.begin(), ms.end(), [](const Monomial& m) { return m.squarefree(); });
}

// Membership of a monomial difference in the ideal of a verified basis.
inline bool reduces_to_zero(const Binomial& f, const MarkedBasis& gb, StepCounter& sc) {
    return normal_form(f.lead(), gb.elems, sc) == normal_form(f.trail(), gb.elems, sc);
}

} // namespace toricsing

#endif
