#ifndef CONEVANISH_VERIFIERS_HPP
#define CONEVANISH_VERIFIERS_HPP

#include "conevanish/certificate.hpp"
#include "conevanish/constructions.hpp"

namespace conevanish {

struct VerifyOptions {
    GroebnerOptions gb;
};

enum class GorensteinMode { hypothesis, direct };

// builds the canonical Segre setting from the variable counts of the factors
ProductConeInstance instance_from_factors(const Ideal& IV, const Ideal& IW,
                                          const GroebnerOptions& opts = {});

// claim prop_3_2: the Rees presentation builds, the special fiber ideal equals
// IV after the canonical renaming T_i -> x_i, and the center has codimension
// one in Y.
Certificate check_exceptional_fiber(const ProductConeInstance& inst,
                                    const VerifyOptions& opts = {});

// claim lemma_3_6: for d = 1..d_max the degree-d piece of the coordinate ring
// of the cone over V x W (saturated presentation) matches the Kunneth h^0
// product. Hypothesis records and the Kunneth H^1 vanishing of the inductive
// step ride along; the direct degreewise test stands on its own.
Certificate check_projective_normality(const Ideal& IV, const Ideal& IW, unsigned d_max,
                                       const VerifyOptions& opts = {});

// 2 * (max generator degree of IV + max of IW), at least 1
unsigned default_normality_dmax(const Ideal& IV, const Ideal& IW);

// claim cor_gorenstein
Certificate check_blowup_gorenstein(const ProductConeInstance& inst, GorensteinMode mode,
                                    const VerifyOptions& opts = {});

struct E1Options {
    VerifyOptions verify;
    bool direct_gorenstein = false;
    GroebnerOptions direct_budget; // applied to the optional direct run
};

// claim example_e1 over two smooth plane cubics; throws DomainError on
// singular or non-cubic input
Certificate verify_example_e1(const Ideal& IE1, const Ideal& IE2, const E1Options& opts = {});

// smallest generating subset of a homogeneous ideal (graded Nakayama greedy)
std::vector<Polynomial> minimal_ideal_generators(const Ideal& I, const GroebnerOptions& opts = {});

} // namespace conevanish

#endif
