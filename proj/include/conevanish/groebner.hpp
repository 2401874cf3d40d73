#ifndef CONEVANISH_GROEBNER_HPP
#define CONEVANISH_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "conevanish/polynomial.hpp"

namespace conevanish {

struct GroebnerOptions {
    std::uint64_t pair_budget = 1'000'000; // pairs popped before giving up
    long degree_cap = -1;                  // -1 = none; else stop above this sugar degree
    int threads = 0;                       // 0 = kernels::thread_limit()
    bool allow_partial = false;            // truncated result instead of BudgetExceededError
    bool serial_reference = false;         // classic one-pair-at-a-time engine
};

struct GroebnerStats {
    std::uint64_t pairs_processed = 0;
    long max_degree = -1; // largest sugar degree of any processed pair
};

struct GroebnerResult {
    // Reduced Groebner basis: monic, auto-reduced, sorted by increasing lead
    // monomial; byte-identical across runs and thread counts.
    std::vector<Polynomial> basis;
    GroebnerStats stats;
    bool complete = true;
    long truncated_at_degree = -1; // valid through this degree when !complete
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with sugar-degree normal selection and Gebauer-Moeller pair
// elimination. The default engine pops all minimal-sugar pairs at once and
// reduces them against a basis snapshot (the OpenMP kernel); merging back is
// serial in canonical pair order, so results do not depend on thread count.
GroebnerResult groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens,
                              const GroebnerOptions& opts = {});

// Turn any basis into the reduced basis of the same ideal assuming it is a
// Groebner basis; on arbitrary input this is a deterministic auto-reduction.
std::vector<Polynomial> reduce_basis(const PolyRing& ring, std::vector<Polynomial> basis);

} // namespace conevanish

#endif
