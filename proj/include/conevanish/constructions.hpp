#ifndef CONEVANISH_CONSTRUCTIONS_HPP
#define CONEVANISH_CONSTRUCTIONS_HPP

#include "conevanish/cohomology.hpp"

namespace conevanish {

// Canonical variable naming used by every builder: x0..xn, y0..ym, z<i><j>
// (row-major), T0..Tn, elimination helper t. Fixed names keep outputs
// byte-reproducible and make renaming-based isomorphism checks possible.
std::string z_var_name(unsigned i, unsigned j, unsigned n, unsigned m);

// The (n,m) Segre setting: P^n x P^m in P^N with coordinates z_ij, the ideal
// of 2x2 minors, and the parametrization z_ij -> x_i y_j.
struct SegreContext {
    unsigned n = 0, m = 0;
    PolyRing ring_z;  // k[z00..znm]
    PolyRing ring_x;  // k[x0..xn]
    PolyRing ring_y;  // k[y0..ym]
    PolyRing ring_xy; // k[x0..xn, y0..ym], target of the parametrization
    Ideal segre_ideal;
    RingMap map_z_to_xy;

    std::size_t z_index(unsigned i, unsigned j) const { return i * (m + 1) + j; }
};

SegreContext build_segre(unsigned n, unsigned m, const Field& field);

// Cones over V x W inside the Segre setting:
//   IY: ideal of Y = C(V x W): minors + column substitutions of gens(IV) +
//       row substitutions of gens(IW),
//   IZ: ideal of the divisor Z = C(V x H), H the section y_m = 0, generated
//       by the last Segre column,
//   m_v: the vertex ideal (all z variables).
struct ProductConeInstance {
    SegreContext ctx;
    Ideal IV; // in ctx.ring_x
    Ideal IW; // in ctx.ring_y
    Ideal IY, IZ, m_v; // in ctx.ring_z
};

// IV, IW may live in any rings with the right variable counts; they are
// renamed positionally onto the canonical coordinates. Errors: mismatched
// fields or variable counts, non-homogeneous input, y_m in IW.
ProductConeInstance build_product_instance(const SegreContext& ctx, const Ideal& IV,
                                           const Ideal& IW,
                                           const GroebnerOptions& opts = {});

// Presentation of the Rees algebra of `center` over (base ring)/base:
// kernel of k[vars, T_0..T_r] -> (k[vars]/base)[t], T_j -> t * center_j.
struct ReesPresentation {
    PolyRing ambient;    // k[base vars, T0..Tr]
    PolyRing ring_t;     // k[T0..Tr]
    Ideal rees_ideal;    // in ambient; contains base
    Ideal base_ideal;    // base mapped into ambient
    Ideal center;        // in the base ring
    unsigned t_vars = 0;
    bool principal_center = false; // blow-up of a Cartier-divisor candidate
    bool truncated = false;        // pair budget hit; presentation valid
    long truncated_at_degree = -1; // through this degree only
    GroebnerStats kernel_stats;
};

ReesPresentation rees_presentation(const Ideal& base, const Ideal& center,
                                   const GroebnerOptions& opts = {});

// Presentation ideal of the special fiber (+)_d I^d / I^d m_v in k[T...]:
// the image of the Rees ideal under base vars -> 0.
Ideal fiber_cone(const ReesPresentation& r, const GroebnerOptions& opts = {});

// Affine chart T_j = 1 of Proj of the Rees algebra, in k[base vars, T_i (i != j)].
Ideal blowup_chart(const ReesPresentation& r, unsigned j);

// I + the c x c minors of the Jacobian of its generators; cuts out the locus
// where the generators fail to define a smooth codimension-c subscheme.
Ideal jacobian_singular_locus(const Ideal& I, unsigned codim);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

} // namespace conevanish

#endif
