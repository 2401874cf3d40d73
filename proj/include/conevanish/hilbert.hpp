#ifndef CONEVANISH_HILBERT_HPP
#define CONEVANISH_HILBERT_HPP

#include <gmpxx.h>

#include "conevanish/ideal_ops.hpp"

namespace conevanish {

// Hilbert series data of S/I: series = numerator(t) / (1-t)^ambient_vars.
// dimension is the Krull dimension of S/I (-1 for the unit ideal) and degree
// the multiplicity, i.e. the value of the reduced numerator at t = 1.
struct HilbertData {
    std::vector<mpz_class> numerator;         // coefficient of t^j at index j
    std::vector<mpz_class> reduced_numerator; // after dividing out (1-t)^s
    int ambient_vars = 0;
    int dimension = 0;
    mpz_class degree = 0;

    std::string numerator_string() const;
};

// All of these require a homogeneous ideal and work through the lead-term
// ideal of the reduced Groebner basis.
HilbertData hilbert_series(const Ideal& I, const GroebnerOptions& opts = {});
mpz_class hilbert_function(const Ideal& I, long d, const GroebnerOptions& opts = {});

// exact value of the Hilbert polynomial at d (agrees with the Hilbert
// function for d at least the regularity; equals the Euler characteristic of
// O_X(d) for every d)
mpz_class hilbert_polynomial_eval(const Ideal& I, long d, const GroebnerOptions& opts = {});

// Krull dimension of S/I from the lead-term ideal; -1 for the unit ideal.
// Homogeneous or affine input (grevlex lead terms carry the dimension either
// way).
int krull_dimension(const Ideal& I, const GroebnerOptions& opts = {});

// numerator of the Hilbert series of S/(monomial ideal), standard pivot
// recursion; exposed for the homological consistency checks
std::vector<mpz_class> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

} // namespace conevanish

#endif
