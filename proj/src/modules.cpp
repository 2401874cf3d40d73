#include "conevanish/modules.hpp"

#include <algorithm>

#include "conevanish/kernels.hpp"

namespace conevanish {

VecPoly vec_zero(const FreeModule& F) {
    VecPoly v;
    v.c.assign(F.rank(), Polynomial::zero(F.ring));
    return v;
}

VecPoly vec_basis(const FreeModule& F, std::size_t r) {
    VecPoly v = vec_zero(F);
    v.c[r] = Polynomial::one(F.ring);
    return v;
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
    VecPoly r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
    VecPoly r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    return r;
}

VecPoly vec_scale(const FreeModule& F, const VecPoly& a, const Scalar& s) {
    (void)F;
    VecPoly r = a;
    for (auto& p : r.c) p = p.scaled(s);
    return r;
}

VecPoly vec_poly_mul(const VecPoly& a, const Polynomial& p) {
    VecPoly r = a;
    for (auto& q : r.c) q = q * p;
    return r;
}

bool vec_equal(const VecPoly& a, const VecPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

long vec_degree(const FreeModule& F, const VecPoly& v) {
    long d = -1;
    for (std::size_t r = 0; r < v.c.size(); ++r)
        if (!v.c[r].is_zero()) d = std::max(d, v.c[r].degree() + F.shifts[r]);
    return d;
}

bool vec_is_homogeneous(const FreeModule& F, const VecPoly& v) {
    long d = -2;
    for (std::size_t r = 0; r < v.c.size(); ++r) {
        const auto& p = v.c[r];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        long dr = p.degree() + F.shifts[r];
        if (d == -2) d = dr;
        else if (d != dr) return false;
    }
    return true;
}

ModLead vec_lead(const FreeModule& F, const VecPoly& v) {
    for (std::size_t r = 0; r < v.c.size(); ++r)
        if (!v.c[r].is_zero())
            return {r, v.c[r].lead_monomial(), v.c[r].lead_coeff()};
    throw DomainError("lead of zero module element");
}

namespace {

// v -= s * x^m * basis_elt  (component-wise axpy)
VecPoly vec_axpy(const VecPoly& v, const Scalar& s, const Monomial& m, const VecPoly& w) {
    VecPoly r = v;
    for (std::size_t i = 0; i < r.c.size(); ++i)
        if (!w.c[i].is_zero()) r.c[i] = r.c[i].axpy(s, m, w.c[i]);
    return r;
}

} // namespace

VecPoly vec_reduce_full(const FreeModule& F, const VecPoly& v,
                        const std::vector<VecPoly>& basis,
                        std::vector<Polynomial>* quotients) {
    const PolyRing& R = F.ring;
    const Field& K = R.field();
    std::vector<std::vector<Term>> qt;
    if (quotients) qt.resize(basis.size());

    VecPoly h = v;
    VecPoly rem = vec_zero(F);
    while (!h.is_zero()) {
        ModLead lt = vec_lead(F, h);
        std::size_t idx = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            ModLead bl = vec_lead(F, basis[k]);
            if (bl.comp == lt.comp && bl.mono.divides(lt.mono)) {
                idx = k;
                break;
            }
        }
        if (idx == basis.size()) {
            // move the lead term of h to the remainder
            rem.c[lt.comp] = rem.c[lt.comp] +
                Polynomial::monomial_term(R, lt.mono, lt.coeff);
            h.c[lt.comp] = h.c[lt.comp].tail();
            continue;
        }
        ModLead bl = vec_lead(F, basis[idx]);
        Scalar c = K.div(lt.coeff, bl.coeff);
        Monomial m = lt.mono / bl.mono;
        if (quotients) qt[idx].push_back({m, c});
        h = vec_axpy(h, c, m, basis[idx]);
    }
    if (quotients) {
        quotients->clear();
        quotients->reserve(basis.size());
        for (auto& terms : qt)
            quotients->push_back(Polynomial::from_terms(R, std::move(terms)));
    }
    return rem;
}

namespace {

struct ModPair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t comp;
    std::uint64_t sugar;
};

struct ModEngine {
    const FreeModule& F;
    GroebnerOptions opts;
    std::vector<VecPoly> G;
    std::vector<std::vector<Polynomial>> expr; // in terms of input gens
    std::vector<std::uint64_t> sugar;
    std::vector<ModPair> pairs;
    std::size_t input_count = 0;
    std::uint64_t processed = 0;

    ModEngine(const FreeModule& f, const GroebnerOptions& o) : F(f), opts(o) {}

    void add_element(VecPoly h, std::vector<Polynomial> h_expr, std::uint64_t h_sugar) {
        const std::size_t t = G.size();
        ModLead lt = vec_lead(F, h);

        struct Cand { std::size_t i; Monomial lcm; };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i) {
            ModLead li = vec_lead(F, G[i]);
            if (li.comp != lt.comp) continue;
            cands.push_back({i, Monomial::lcm(li.mono, lt.mono)});
        }
        std::vector<bool> dead(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || dead[a]) continue;
                if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm)
                    dead[a] = true;
            }
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = a + 1; b < cands.size(); ++b)
                if (!dead[b] && cands[b].lcm == cands[a].lcm) dead[b] = true;
        }
        std::vector<ModPair> kept;
        for (auto& pr : pairs) {
            ModLead lead_i = vec_lead(F, G[pr.i]);
            if (pr.comp == lt.comp && lt.mono.divides(pr.lcm) &&
                Monomial::lcm(lead_i.mono, lt.mono) != pr.lcm &&
                Monomial::lcm(vec_lead(F, G[pr.j]).mono, lt.mono) != pr.lcm)
                continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            std::size_t i = cands[a].i;
            ModLead li = vec_lead(F, G[i]);
            std::uint64_t ldeg = cands[a].lcm.degree();
            std::uint64_t s = std::max(sugar[i] + ldeg - li.mono.degree(),
                                       h_sugar + ldeg - lt.mono.degree());
            pairs.push_back({i, t, std::move(cands[a].lcm), lt.comp, s});
        }
        G.push_back(std::move(h));
        expr.push_back(std::move(h_expr));
        sugar.push_back(h_sugar);
    }

    // S-pair with expression tracking
    void process_pair(const ModPair& p) {
        const Field& K = F.ring.field();
        ModLead li = vec_lead(F, G[p.i]);
        ModLead lj = vec_lead(F, G[p.j]);
        Scalar ci = K.inv(li.coeff);
        Scalar cj = K.inv(lj.coeff);
        Monomial ui = p.lcm / li.mono;
        Monomial uj = p.lcm / lj.mono;

        VecPoly s = vec_sub(vec_axpy(vec_zero(F), K.neg(ci), ui, G[p.i]),
                            vec_axpy(vec_zero(F), K.neg(cj), uj, G[p.j]));
        std::vector<Polynomial> quot;
        VecPoly h = vec_reduce_full(F, s, G, &quot);
        if (h.is_zero()) return;

        const PolyRing& R = F.ring;
        std::vector<Polynomial> h_expr(input_count, Polynomial::zero(R));
        Polynomial mi = Polynomial::monomial_term(R, ui, ci);
        Polynomial mj = Polynomial::monomial_term(R, uj, cj);
        for (std::size_t g = 0; g < input_count; ++g)
            h_expr[g] = mi * expr[p.i][g] - mj * expr[p.j][g];
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (quot[k].is_zero()) continue;
            for (std::size_t g = 0; g < input_count; ++g)
                h_expr[g] = h_expr[g] - quot[k] * expr[k][g];
        }
        ModLead lh = vec_lead(F, h);
        Scalar scale = K.inv(lh.coeff);
        VecPoly hm = vec_scale(F, h, scale);
        for (auto& e : h_expr) e = e.scaled(scale);
        add_element(std::move(hm), std::move(h_expr), p.sugar);
    }

    void run() {
        while (!pairs.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const ModPair& a = pairs[k];
                const ModPair& b = pairs[best];
                bool better;
                if (a.sugar != b.sugar) {
                    better = a.sugar < b.sugar;
                } else if (a.comp != b.comp) {
                    better = a.comp < b.comp;
                } else {
                    int c = F.ring.compare(a.lcm, b.lcm);
                    better = c ? c < 0 : (a.i != b.i ? a.i < b.i : a.j < b.j);
                }
                if (better) best = k;
            }
            ModPair p = std::move(pairs[best]);
            pairs.erase(pairs.begin() + static_cast<long>(best));
            if (++processed > opts.pair_budget)
                throw BudgetExceededError("module pair budget exceeded");
            process_pair(p);
        }
    }
};

} // namespace

ModuleGB module_groebner(const FreeModule& F, const std::vector<VecPoly>& gens,
                         const GroebnerOptions& opts) {
    ModEngine eng(F, opts);
    eng.input_count = gens.size();
    const Field& K = F.ring.field();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) {
            // keep indexing aligned: a zero generator contributes nothing
            continue;
        }
        ModLead l = vec_lead(F, gens[j]);
        Scalar scale = K.inv(l.coeff);
        std::vector<Polynomial> e(gens.size(), Polynomial::zero(F.ring));
        e[j] = Polynomial::constant(F.ring, scale);
        std::uint64_t s = static_cast<std::uint64_t>(std::max(vec_degree(F, gens[j]), 0L));
        eng.add_element(vec_scale(F, gens[j], scale), std::move(e), s);
    }
    eng.run();
    return {std::move(eng.G), std::move(eng.expr)};
}

std::vector<VecPoly> syzygy_generators(const FreeModule& F, const std::vector<VecPoly>& gens,
                                       const GroebnerOptions& opts) {
    const PolyRing& R = F.ring;
    const Field& K = R.field();
    for (const auto& g : gens)
        if (!vec_is_homogeneous(F, g))
            throw DomainError("syzygy computation requires homogeneous generators");

    ModuleGB gb = module_groebner(F, gens, opts);
    const std::vector<VecPoly>& G = gb.basis;

    FreeModule Fsyz;
    Fsyz.ring = R;
    for (const auto& g : gens) Fsyz.shifts.push_back(std::max(vec_degree(F, g), 0L));

    std::vector<VecPoly> out;

    // gens[j] = sum_k B[j][k] G[k]; rows of (Id - B*A) are syzygies
    std::vector<std::vector<Polynomial>> B(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) {
            B[j].assign(G.size(), Polynomial::zero(R));
            continue;
        }
        VecPoly r = vec_reduce_full(F, gens[j], G, &B[j]);
        if (!r.is_zero())
            throw DomainError("generator failed to reduce against its own module basis");
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
        VecPoly row = vec_zero(Fsyz);
        row.c[j] = Polynomial::one(R);
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (B[j][k].is_zero()) continue;
            for (std::size_t g = 0; g < gens.size(); ++g)
                row.c[g] = row.c[g] - B[j][k] * gb.expr[k][g];
        }
        if (!row.is_zero()) out.push_back(std::move(row));
    }

    // Schreyer: division traces of every same-component S-pair
    for (std::size_t i = 0; i < G.size(); ++i) {
        ModLead li = vec_lead(F, G[i]);
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            ModLead lj = vec_lead(F, G[j]);
            if (li.comp != lj.comp) continue;
            Monomial L = Monomial::lcm(li.mono, lj.mono);
            Scalar ci = K.inv(li.coeff);
            Scalar cj = K.inv(lj.coeff);
            Monomial ui = L / li.mono;
            Monomial uj = L / lj.mono;
            VecPoly s = vec_sub(vec_axpy(vec_zero(F), K.neg(ci), ui, G[i]),
                                vec_axpy(vec_zero(F), K.neg(cj), uj, G[j]));
            std::vector<Polynomial> quot;
            VecPoly r = vec_reduce_full(F, s, G, &quot);
            if (!r.is_zero())
                throw DomainError("S-pair failed to reduce against a module Groebner basis");
            // syzygy of G: ci*ui e_i - cj*uj e_j - sum quot[k] e_k, pushed to gens via expr
            std::vector<Polynomial> coeffs_on_G(G.size(), Polynomial::zero(R));
            coeffs_on_G[i] = Polynomial::monomial_term(R, ui, ci);
            coeffs_on_G[j] = Polynomial::monomial_term(R, uj, K.neg(cj));
            for (std::size_t k = 0; k < G.size(); ++k)
                coeffs_on_G[k] = coeffs_on_G[k] - quot[k];
            VecPoly row = vec_zero(Fsyz);
            for (std::size_t k = 0; k < G.size(); ++k) {
                if (coeffs_on_G[k].is_zero()) continue;
                for (std::size_t g = 0; g < gens.size(); ++g)
                    row.c[g] = row.c[g] + coeffs_on_G[k] * gb.expr[k][g];
            }
            if (!row.is_zero()) out.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<VecPoly> minimal_generators(const FreeModule& F, std::vector<VecPoly> gens,
                                        const GroebnerOptions& opts) {
    const PolyRing& R = F.ring;
    std::vector<VecPoly> in;
    for (auto& g : gens)
        if (!g.is_zero()) in.push_back(std::move(g));
    std::stable_sort(in.begin(), in.end(), [&](const VecPoly& a, const VecPoly& b) {
        long da = vec_degree(F, a), db = vec_degree(F, b);
        if (da != db) return da < db;
        ModLead la = vec_lead(F, a), lb = vec_lead(F, b);
        if (la.comp != lb.comp) return la.comp < lb.comp;
        return R.compare(la.mono, lb.mono) < 0;
    });
    std::vector<VecPoly> kept;
    for (auto& v : in) {
        if (kept.empty()) {
            kept.push_back(std::move(v));
            continue;
        }
        ModuleGB gb = module_groebner(F, kept, opts);
        if (vec_reduce_full(F, v, gb.basis).is_zero()) continue;
        kept.push_back(std::move(v));
    }
    return kept;
}

} // namespace conevanish
