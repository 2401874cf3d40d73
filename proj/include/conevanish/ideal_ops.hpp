#ifndef CONEVANISH_IDEAL_OPS_HPP
#define CONEVANISH_IDEAL_OPS_HPP

#include "conevanish/ideal.hpp"
#include "conevanish/ringmap.hpp"

namespace conevanish {

// remainder of f modulo the reduced basis of I; zero iff f is in I
Polynomial normal_form(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts = {});

bool ideal_contains(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

// generated by all d-fold products of generators; I^0 = (1)
Ideal ideal_power(const Ideal& I, unsigned d);

// generators of I intersected with k[keep], via a block order eliminating the
// complement; the result lives in a fresh grevlex ring on `keep`
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep,
                const GroebnerOptions& opts = {});

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

// kernel of the substitution map in m.source: graph ideal in a joint ring,
// eliminate the target variables. `target_relations` are imposed on the
// target side (kernel of source -> target/relations).
Ideal kernel_of_map(const RingMap& m, const std::vector<Polynomial>& target_relations = {},
                    const GroebnerOptions& opts = {});

// apply a ring map to every generator
Ideal map_ideal(const RingMap& m, const Ideal& I);

// sum of generator lists (same ring)
Ideal ideal_sum(const Ideal& I, const Ideal& J);

} // namespace conevanish

#endif
