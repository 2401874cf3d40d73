#include "conevanish/ideal_ops.hpp"

#include <algorithm>

#include "conevanish/kernels.hpp"

namespace conevanish {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw RingMismatchError("ideals live in different rings");
}

// fresh name that cannot collide with parser-produced identifiers
std::string internal_name(const std::string& base, const std::vector<std::string>& taken) {
    std::string name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "~";
    return name;
}

// exact division f / g; throws if not exact
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    std::vector<Polynomial> quot;
    Polynomial r = kernels::reduce_full(f, {g}, &quot);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return quot[0];
}

} // namespace

Polynomial normal_form(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts) {
    if (f.ring() != I.ring()) throw RingMismatchError("polynomial outside ideal ring");
    return kernels::reduce_full(f, I.basis(opts));
}

bool ideal_contains(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    require_same_ring(I, J);
    for (const auto& g : J.gens())
        if (!normal_form(g, I, opts).is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    require_same_ring(I, J);
    const auto& A = I.basis(opts);
    const auto& B = J.basis(opts);
    if (A.size() != B.size()) return false;
    for (std::size_t k = 0; k < A.size(); ++k)
        if (A[k] != B[k]) return false;
    return true;
}

Ideal ideal_power(const Ideal& I, unsigned d) {
    const PolyRing& R = I.ring();
    if (d == 0) return Ideal::unit(R);
    const auto& gens = I.gens();
    if (gens.empty()) return Ideal::zero(R);
    std::vector<Polynomial> out;
    // multisets of size d over the generators, lexicographic on index tuples
    std::vector<unsigned> idx(d, 0);
    for (;;) {
        Polynomial p = Polynomial::one(R);
        for (unsigned k = 0; k < d; ++k) p = p * gens[idx[k]];
        out.push_back(std::move(p));
        int pos = static_cast<int>(d) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] + 1 >= gens.size()) --pos;
        if (pos < 0) break;
        unsigned next = idx[static_cast<unsigned>(pos)] + 1;
        for (unsigned k = static_cast<unsigned>(pos); k < d; ++k) idx[k] = next;
    }
    return Ideal(R, std::move(out));
}

namespace {

// shared elimination core: ring with `front` variables first under block
// order, filter basis elements supported on the back variables only, map
// into a grevlex ring on the back variables.
Ideal eliminate_front(const PolyRing& big, const std::vector<Polynomial>& gens,
                      std::size_t front_count, const std::vector<std::string>& back_names,
                      const GroebnerOptions& opts) {
    Ideal big_ideal(big, gens);
    const auto& B = big_ideal.basis(opts);
    PolyRing small(big.field(), back_names, MonomialOrder::grevlex());
    std::vector<Polynomial> kept;
    for (const auto& g : B) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < front_count && pure; ++i)
                if (t.mono.exp(i)) pure = false;
            if (!pure) break;
        }
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> e(t.mono.exponents().begin() + static_cast<long>(front_count),
                                         t.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        kept.push_back(Polynomial::from_terms(small, std::move(terms)));
    }
    return Ideal(small, std::move(kept));
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep,
                const GroebnerOptions& opts) {
    const PolyRing& R = I.ring();
    std::vector<std::string> drop;
    for (const auto& v : R.vars())
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) drop.push_back(v);
    for (const auto& v : keep)
        if (R.var_index(v) < 0) throw DomainError("eliminate: unknown variable '" + v + "'");

    std::vector<std::string> vars = drop;
    std::vector<std::string> back;
    for (const auto& v : R.vars()) // keep-vars in original relative order
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) {
            vars.push_back(v);
            back.push_back(v);
        }
    PolyRing big(R.field(), vars, MonomialOrder::block(static_cast<std::uint32_t>(drop.size())));
    RingMap to_big = RingMap::rename_by_name(R, big);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(to_big.apply(g));
    return eliminate_front(big, gens, drop.size(), back, opts);
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    require_same_ring(I, J);
    const PolyRing& R = I.ring();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(R);

    // t-trick: eliminate t from t*I + (1-t)*J
    std::string t = internal_name("t~", R.vars());
    std::vector<std::string> vars;
    vars.push_back(t);
    for (const auto& v : R.vars()) vars.push_back(v);
    PolyRing big(R.field(), vars, MonomialOrder::block(1));
    RingMap to_big = RingMap::rename_by_name(R, big);
    Polynomial tp = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::one(big) - tp;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(tp * to_big.apply(f));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * to_big.apply(g));
    Ideal inter = eliminate_front(big, gens, 1, R.vars(), opts);
    // eliminate_front lands in a grevlex clone of R; map back if R uses
    // another order
    if (inter.ring() == R) return inter;
    RingMap back = RingMap::rename_by_name(inter.ring(), R);
    return map_ideal(back, inter);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    require_same_ring(I, J);
    const PolyRing& R = I.ring();
    if (J.is_zero_ideal()) return Ideal::unit(R); // (I : 0) = (1)
    Ideal acc;
    bool first = true;
    for (const auto& f : J.gens()) {
        Ideal q;
        if (f.is_constant()) {
            q = I;
        } else {
            Ideal inter = ideal_intersect(I, Ideal(R, {f}), opts);
            std::vector<Polynomial> qgens;
            for (const auto& h : inter.gens()) qgens.push_back(exact_divide(h, f));
            q = Ideal(R, std::move(qgens));
        }
        acc = first ? q : ideal_intersect(acc, q, opts);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    require_same_ring(I, J);
    Ideal cur = I;
    for (;;) {
        Ideal next = ideal_quotient(cur, J, opts);
        if (ideal_equal(next, cur, opts)) return cur;
        cur = next;
    }
}

Ideal kernel_of_map(const RingMap& m, const std::vector<Polynomial>& target_relations,
                    const GroebnerOptions& opts) {
    const PolyRing& S = m.source();
    const PolyRing& T = m.target();
    // joint ring: target variables first (eliminated), then source variables,
    // renamed if they collide with target names
    std::vector<std::string> vars = T.vars();
    std::vector<std::string> src_names;
    for (const auto& v : S.vars()) {
        std::string nm = internal_name(v, vars);
        vars.push_back(nm);
        src_names.push_back(nm);
    }
    PolyRing big(S.field(), vars, MonomialOrder::block(static_cast<std::uint32_t>(T.nvars())));
    RingMap target_in = RingMap::rename_by_name(T, big);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < S.nvars(); ++i) {
        Polynomial zi = Polynomial::variable(big, T.nvars() + i);
        gens.push_back(zi - target_in.apply(m.images()[i]));
    }
    for (const auto& r : target_relations) {
        if (r.ring() != T) throw RingMismatchError("target relation outside target ring");
        gens.push_back(target_in.apply(r));
    }
    Ideal ker_renamed = eliminate_front(big, gens, T.nvars(), src_names, opts);
    // back to the source ring (positions match)
    RingMap back = RingMap::rename_positional(ker_renamed.ring(), S);
    return map_ideal(back, ker_renamed);
}

Ideal map_ideal(const RingMap& m, const Ideal& I) {
    if (I.ring() != m.source()) throw RingMismatchError("ideal outside map source");
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(m.apply(g));
    return Ideal(m.target(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens = I.gens();
    for (const auto& g : J.gens()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

} // namespace conevanish
