#ifndef CONEVANISH_MODULES_HPP
#define CONEVANISH_MODULES_HPP

#include "conevanish/groebner.hpp"

namespace conevanish {

// Graded free module F = (+)_r S(-shifts[r]) over a polynomial ring.
struct FreeModule {
    PolyRing ring;
    std::vector<long> shifts;

    std::size_t rank() const { return shifts.size(); }
};

// Element of a free module, dense by component.
struct VecPoly {
    std::vector<Polynomial> c;

    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
};

VecPoly vec_zero(const FreeModule& F);
VecPoly vec_basis(const FreeModule& F, std::size_t r); // e_r
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_scale(const FreeModule& F, const VecPoly& a, const Scalar& s);
VecPoly vec_poly_mul(const VecPoly& a, const Polynomial& p);
bool vec_equal(const VecPoly& a, const VecPoly& b);

// internal degree of a homogeneous element; -1 for zero
long vec_degree(const FreeModule& F, const VecPoly& v);
bool vec_is_homogeneous(const FreeModule& F, const VecPoly& v);

// Lead term under the position-over-term order (lower component index is
// greater, ties by the ring's monomial order).
struct ModLead {
    std::size_t comp;
    Monomial mono;
    Scalar coeff;
};
ModLead vec_lead(const FreeModule& F, const VecPoly& v);

// Full division in the free module: remainder of v modulo `basis`; first
// matching divisor in list order. `quotients` (if given) satisfies
// v = sum quotients[k] * basis[k] + remainder.
VecPoly vec_reduce_full(const FreeModule& F, const VecPoly& v,
                        const std::vector<VecPoly>& basis,
                        std::vector<Polynomial>* quotients = nullptr);

struct ModuleGB {
    std::vector<VecPoly> basis; // monic leads
    // basis[k] = sum_j expr[k][j] * input_gens[j]
    std::vector<std::vector<Polynomial>> expr;
};

// Buchberger for submodules of a free module. S-pairs only between elements
// with the same lead component; the chain criteria apply, the coprime
// criterion does not (it is invalid for modules).
ModuleGB module_groebner(const FreeModule& F, const std::vector<VecPoly>& gens,
                         const GroebnerOptions& opts = {});

// Generators of the syzygy module Syz(gens) in S^(#gens), from the division
// traces of all same-component S-pairs of the module Groebner basis.
// Requires homogeneous gens; the ambient shifts of the result are the
// degrees of the gens.
std::vector<VecPoly> syzygy_generators(const FreeModule& F, const std::vector<VecPoly>& gens,
                                       const GroebnerOptions& opts = {});

// Minimal homogeneous generating subset: ascending degree, keep an element
// iff it is not in the submodule generated by those already kept.
std::vector<VecPoly> minimal_generators(const FreeModule& F, std::vector<VecPoly> gens,
                                        const GroebnerOptions& opts = {});

} // namespace conevanish

#endif
