#include "conevanish/groebner.hpp"

#include <algorithm>
#include <limits>

#include "conevanish/kernels.hpp"

namespace conevanish {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const PolyRing& ring = f.ring();
    const Field& F = ring.field();
    Monomial L = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
    Polynomial a = f.shifted(L / f.lead_monomial()).scaled(F.inv(f.lead_coeff()));
    return a.axpy(F.inv(g.lead_coeff()), L / g.lead_monomial(), g);
}

namespace {

struct Pair {
    std::uint32_t i, j; // i < j
    Monomial lcm;
    std::uint64_t sugar;
};

struct Engine {
    const PolyRing& ring;
    GroebnerOptions opts;
    std::vector<Polynomial> G;
    std::vector<std::uint64_t> sugar;
    std::vector<Pair> pairs;
    GroebnerStats stats;

    explicit Engine(const PolyRing& r, const GroebnerOptions& o) : ring(r), opts(o) {}

    // Gebauer-Moeller update: trims old pairs against the new element, keeps
    // only the needed new pairs, then appends h to the basis.
    void add_element(Polynomial h, std::uint64_t h_sugar) {
        const std::uint32_t t = static_cast<std::uint32_t>(G.size());
        const Monomial& lm_t = h.lead_monomial();

        struct Cand { std::uint32_t i; Monomial lcm; bool coprime; };
        std::vector<Cand> cands;
        cands.reserve(G.size());
        for (std::uint32_t i = 0; i < t; ++i) {
            Monomial L = Monomial::lcm(G[i].lead_monomial(), lm_t);
            cands.push_back({i, std::move(L), G[i].lead_monomial().coprime(lm_t)});
        }

        // M: drop candidates whose lcm is a proper multiple of another's
        std::vector<bool> dead(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || dead[a]) continue;
                if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm)
                    dead[a] = true;
            }
        }
        // F: one representative per lcm class; a coprime member kills the class
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            bool class_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (dead[b]) continue;
                if (cands[b].lcm == cands[a].lcm) {
                    class_coprime = class_coprime || cands[b].coprime;
                    dead[b] = true;
                }
            }
            if (class_coprime) dead[a] = true; // Buchberger's first criterion
        }

        // B: old pairs made redundant by the new lead
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            if (lm_t.divides(pr.lcm) &&
                Monomial::lcm(G[pr.i].lead_monomial(), lm_t) != pr.lcm &&
                Monomial::lcm(G[pr.j].lead_monomial(), lm_t) != pr.lcm)
                continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);

        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (dead[a]) continue;
            std::uint32_t i = cands[a].i;
            std::uint64_t lcm_deg = cands[a].lcm.degree();
            std::uint64_t s = std::max(
                sugar[i] + lcm_deg - G[i].lead_monomial().degree(),
                h_sugar + lcm_deg - lm_t.degree());
            pairs.push_back({i, t, std::move(cands[a].lcm), s});
        }

        G.push_back(std::move(h));
        sugar.push_back(h_sugar);
    }

    // canonical processing order within a batch
    void sort_batch(std::vector<Pair>& batch) const {
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
            int c = ring.compare(a.lcm, b.lcm);
            if (c) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
    }

    GroebnerResult run_batched() {
        GroebnerResult res;
        while (!pairs.empty()) {
            std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
            for (const auto& p : pairs) d = std::min(d, p.sugar);
            if (opts.degree_cap >= 0 && d > static_cast<std::uint64_t>(opts.degree_cap)) {
                res.complete = false;
                res.truncated_at_degree = opts.degree_cap;
                break;
            }
            std::vector<Pair> batch;
            std::vector<Pair> rest;
            for (auto& p : pairs)
                (p.sugar == d ? batch : rest).push_back(std::move(p));
            pairs = std::move(rest);
            sort_batch(batch);

            if (stats.pairs_processed + batch.size() > opts.pair_budget) {
                if (!opts.allow_partial)
                    throw BudgetExceededError("pair budget exceeded at " +
                                              std::to_string(stats.pairs_processed) + " pairs");
                res.complete = false;
                res.truncated_at_degree = static_cast<long>(d) - 1;
                break;
            }
            stats.pairs_processed += batch.size();
            stats.max_degree = std::max(stats.max_degree, static_cast<long>(d));

            std::vector<Polynomial> spolys;
            spolys.reserve(batch.size());
            for (const auto& p : batch) spolys.push_back(s_polynomial(G[p.i], G[p.j]));
            std::vector<Polynomial> snap_reduced =
                kernels::reduce_batch_parallel(spolys, G, opts.threads);

            for (auto& r : snap_reduced) {
                if (r.is_zero()) continue;
                Polynomial h = kernels::reduce_full(r, G); // catch divisors added this batch
                if (h.is_zero()) continue;
                add_element(h.monic(), d);
            }
        }
        res.basis = reduce_basis(ring, G);
        res.stats = stats;
        return res;
    }

    GroebnerResult run_serial() {
        GroebnerResult res;
        while (!pairs.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const Pair& a = pairs[k];
                const Pair& b = pairs[best];
                bool better;
                if (a.sugar != b.sugar) {
                    better = a.sugar < b.sugar;
                } else {
                    int c = ring.compare(a.lcm, b.lcm);
                    better = c ? c < 0 : (a.i != b.i ? a.i < b.i : a.j < b.j);
                }
                if (better) best = k;
            }
            Pair p = std::move(pairs[best]);
            pairs.erase(pairs.begin() + static_cast<long>(best));

            if (opts.degree_cap >= 0 && p.sugar > static_cast<std::uint64_t>(opts.degree_cap)) {
                // put it back conceptually; everything remaining is above the cap
                res.complete = false;
                res.truncated_at_degree = opts.degree_cap;
                break;
            }
            if (stats.pairs_processed + 1 > opts.pair_budget) {
                if (!opts.allow_partial)
                    throw BudgetExceededError("pair budget exceeded at " +
                                              std::to_string(stats.pairs_processed) + " pairs");
                res.complete = false;
                res.truncated_at_degree = static_cast<long>(p.sugar) - 1;
                break;
            }
            ++stats.pairs_processed;
            stats.max_degree = std::max(stats.max_degree, static_cast<long>(p.sugar));

            Polynomial h = kernels::reduce_full(s_polynomial(G[p.i], G[p.j]), G);
            if (!h.is_zero()) add_element(h.monic(), p.sugar);
        }
        res.basis = reduce_basis(ring, G);
        res.stats = stats;
        return res;
    }
};

} // namespace

std::vector<Polynomial> reduce_basis(const PolyRing& ring, std::vector<Polynomial> basis) {
    std::vector<Polynomial> in;
    for (auto& g : basis)
        if (!g.is_zero()) in.push_back(g.monic());
    std::sort(in.begin(), in.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = ring.compare(a.lead_monomial(), b.lead_monomial());
        if (c) return c < 0;
        return a.term_count() < b.term_count();
    });
    // divisor lead monomials always sort earlier, so one ascending pass
    std::vector<Polynomial> minimal;
    for (auto& g : in) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.lead_monomial().divides(g.lead_monomial())) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // tail-reduce each element against the others
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = kernels::reduce_full(minimal[i], others).monic();
    }
    return minimal;
}

namespace {

// Replace each generator by its normal form against the others until stable.
// Preserves the ideal (unlike lead-divisibility pruning, which is only valid
// on a Groebner basis) and fixes a canonical deterministic seed.
std::vector<Polynomial> autoreduce_generators(const PolyRing& ring,
                                              std::vector<Polynomial> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = ring.compare(a.lead_monomial(), b.lead_monomial());
        if (c) return c < 0;
        return a.to_string() < b.to_string();
    });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            Polynomial r = kernels::reduce_full(gens[i], others);
            if (r.is_zero()) {
                gens.erase(gens.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (r != gens[i]) {
                gens[i] = std::move(r);
                changed = true;
            }
        }
    }
    return gens;
}

} // namespace

GroebnerResult groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens,
                              const GroebnerOptions& opts) {
    std::vector<Polynomial> prepared;
    for (const auto& g : gens) {
        if (g.ring() != ring) throw RingMismatchError("generator outside ideal ring");
        if (!g.is_zero()) prepared.push_back(g.monic());
    }
    prepared = autoreduce_generators(ring, std::move(prepared));

    Engine eng(ring, opts);
    for (auto& g : prepared) {
        std::uint64_t s = static_cast<std::uint64_t>(std::max(g.degree(), 0L));
        eng.add_element(std::move(g), s);
    }
    return opts.serial_reference ? eng.run_serial() : eng.run_batched();
}

} // namespace conevanish
