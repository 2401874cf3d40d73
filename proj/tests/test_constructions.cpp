#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conevanish/constructions.hpp"
#include "conevanish/parse.hpp"

using namespace conevanish;

namespace {

Ideal fermat_cubic(const PolyRing& R) {
    return Ideal(R, {parse_polynomial(R, R.var(0) + "^3 + " + R.var(1) + "^3 + " +
                                             R.var(2) + "^3")});
}

} // namespace

TEST_CASE("Segre contexts") {
    Field Q = Field::rationals();
    SegreContext s11 = build_segre(1, 1, Q);
    REQUIRE(s11.segre_ideal.gens().size() == 1);
    CHECK(s11.segre_ideal.gens()[0] ==
          parse_polynomial(s11.ring_z, "z00*z11 - z01*z10"));

    // a point factor has no minors
    CHECK(build_segre(0, 3, Q).segre_ideal.is_zero_ideal());
    CHECK(build_segre(2, 0, Q).segre_ideal.is_zero_ideal());

    SegreContext s21 = build_segre(2, 1, Q);
    CHECK(s21.segre_ideal.gens().size() == 3);
    // every minor vanishes under the parametrization
    for (const auto& g : s21.segre_ideal.gens())
        CHECK(s21.map_z_to_xy.apply(g).is_zero());

    SegreContext s22 = build_segre(2, 2, Q);
    CHECK(s22.segre_ideal.gens().size() == 9);
    CHECK(s22.ring_z.nvars() == 9);
}

TEST_CASE("the parametrization kernel recovers the minors, exhaustively") {
    Field Q = Field::rationals();
    for (unsigned n = 0; n <= 2; ++n)
        for (unsigned m = 0; m <= 2; ++m) {
            SegreContext ctx = build_segre(n, m, Q);
            Ideal ker = kernel_of_map(ctx.map_z_to_xy);
            CHECK(ideal_equal(ker, ctx.segre_ideal));
        }
}

TEST_CASE("product cone instances") {
    Field Q = Field::rationals();
    SegreContext ctx = build_segre(1, 1, Q);
    ProductConeInstance conifold =
        build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
    CHECK(ideal_equal(conifold.IY, ctx.segre_ideal));
    REQUIRE(conifold.IZ.gens().size() == 2);
    CHECK(conifold.IZ.gens()[0] == parse_polynomial(ctx.ring_z, "z01"));
    CHECK(conifold.IZ.gens()[1] == parse_polynomial(ctx.ring_z, "z11"));
    CHECK(conifold.m_v.gens().size() == 4);

    // Fermat cubic x P^1: column substitutions appear
    SegreContext c21 = build_segre(2, 1, Q);
    ProductConeInstance fp = build_product_instance(c21, fermat_cubic(c21.ring_x),
                                                    Ideal::zero(c21.ring_y));
    CHECK(fp.IY.gens().size() == 3 + 2); // minors + g_0, g_1
    bool found_g1 = false;
    for (const auto& g : fp.IY.gens())
        if (g == parse_polynomial(c21.ring_z, "z01^3 + z11^3 + z21^3")) found_g1 = true;
    CHECK(found_g1);

    // y_m inside IW violates the coordinate choice
    Ideal bad(c21.ring_y, {Polynomial::variable(c21.ring_y, 1)});
    CHECK_THROWS_AS(build_product_instance(c21, Ideal::zero(c21.ring_x), bad), DomainError);

    // non-homogeneous input
    Ideal inhom(c21.ring_x, {parse_polynomial(c21.ring_x, "x0^2 - x1")});
    CHECK_THROWS_AS(build_product_instance(c21, inhom, Ideal::zero(c21.ring_y)), DomainError);
}

TEST_CASE("instance dimension bookkeeping") {
    Field F = Field::prime(31);
    struct Case { unsigned n, m; bool v_cubic, w_cubic; int dimv, dimw; };
    std::vector<Case> cases = {
        {1, 1, false, false, 1, 1}, // P^1 x P^1
        {2, 1, true, false, 1, 1},  // cubic x P^1
        {2, 2, true, true, 1, 1},   // cubic x cubic
    };
    for (const auto& c : cases) {
        SegreContext ctx = build_segre(c.n, c.m, F);
        Ideal iv = c.v_cubic ? fermat_cubic(ctx.ring_x) : Ideal::zero(ctx.ring_x);
        Ideal iw = c.w_cubic ? fermat_cubic(ctx.ring_y) : Ideal::zero(ctx.ring_y);
        ProductConeInstance inst = build_product_instance(ctx, iv, iw);
        CHECK(inst.IZ.gens().size() == c.n + 1);
        CHECK(krull_dimension(inst.IY) == c.dimv + c.dimw + 1);
        CHECK(krull_dimension(ideal_sum(inst.IY, inst.IZ)) == c.dimv + c.dimw);
    }
}

TEST_CASE("Rees presentations") {
    PolyRing R2 = parse_ring("ring Q[x,y] grevlex");
    Ideal origin(R2, {Polynomial::variable(R2, 0), Polynomial::variable(R2, 1)});
    ReesPresentation blowA2 = rees_presentation(Ideal::zero(R2), origin);
    REQUIRE(blowA2.rees_ideal.gens().size() == 1);
    CHECK(blowA2.rees_ideal.gens()[0] ==
          parse_polynomial(blowA2.ambient, "y*T0 - x*T1"));
    CHECK_FALSE(blowA2.principal_center);

    // principal center: no relations beyond the base
    ReesPresentation cartier = rees_presentation(Ideal::zero(R2),
                                                 Ideal(R2, {Polynomial::variable(R2, 0)}));
    CHECK(cartier.principal_center);
    CHECK(cartier.rees_ideal.is_zero_ideal());

    // conifold: two additional relations
    Field Q = Field::rationals();
    SegreContext ctx = build_segre(1, 1, Q);
    ProductConeInstance conifold =
        build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
    ReesPresentation rp = rees_presentation(conifold.IY, conifold.IZ);
    PolyRing A = rp.ambient;
    Ideal expected(A, {parse_polynomial(A, "z00*z11 - z01*z10"),
                       parse_polynomial(A, "z01*T1 - z11*T0"),
                       parse_polynomial(A, "z00*T1 - z10*T0")});
    CHECK(ideal_equal(rp.rees_ideal, expected));
    CHECK(ideal_contains(rp.rees_ideal, rp.base_ideal));
}

TEST_CASE("every Rees generator dies under the tautological substitution") {
    Field F = Field::prime(31);
    for (unsigned n = 1; n <= 2; ++n) {
        SegreContext ctx = build_segre(n, n, F);
        Ideal iv = n == 2 ? fermat_cubic(ctx.ring_x) : Ideal::zero(ctx.ring_x);
        Ideal iw = n == 2 ? fermat_cubic(ctx.ring_y) : Ideal::zero(ctx.ring_y);
        ProductConeInstance inst = build_product_instance(ctx, iv, iw);
        ReesPresentation rp = rees_presentation(inst.IY, inst.IZ);

        // map T_j -> t * center_j into k[z..., t], then reduce mod the base
        const PolyRing& Z = ctx.ring_z;
        std::vector<std::string> vars = Z.vars();
        vars.push_back("t");
        PolyRing Zt(F, vars, MonomialOrder::grevlex());
        RingMap base_in = RingMap::rename_by_name(Z, Zt);
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k < Z.nvars(); ++k)
            images.push_back(Polynomial::variable(Zt, k));
        Polynomial t = Polynomial::variable(Zt, Z.nvars());
        for (const auto& c : rp.center.gens()) images.push_back(t * base_in.apply(c));
        RingMap taut(rp.ambient, Zt, images);
        std::vector<Polynomial> base_gens;
        for (const auto& g : inst.IY.gens()) base_gens.push_back(base_in.apply(g));
        Ideal base_t(Zt, base_gens);
        for (const auto& g : rp.rees_ideal.gens())
            CHECK(normal_form(taut.apply(g), base_t).is_zero());
    }
}

TEST_CASE("fiber cones recover the first factor") {
    Field Q = Field::rationals();
    // conifold: zero ideal in two T variables
    {
        SegreContext ctx = build_segre(1, 1, Q);
        ProductConeInstance inst =
            build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
        Ideal fib = fiber_cone(rees_presentation(inst.IY, inst.IZ));
        CHECK(fib.is_zero_ideal());
        CHECK(fib.ring().nvars() == 2);
    }
    // Fermat cubic x P^1
    {
        SegreContext ctx = build_segre(2, 1, Q);
        ProductConeInstance inst =
            build_product_instance(ctx, fermat_cubic(ctx.ring_x), Ideal::zero(ctx.ring_y));
        Ideal fib = fiber_cone(rees_presentation(inst.IY, inst.IZ));
        REQUIRE(fib.gens().size() == 1);
        CHECK(fib.gens()[0] == parse_polynomial(fib.ring(), "T0^3 + T1^3 + T2^3"));
    }
    // conic x P^1
    {
        SegreContext ctx = build_segre(2, 1, Q);
        Ideal conic(ctx.ring_x, {parse_polynomial(ctx.ring_x, "x0*x2 - x1^2")});
        ProductConeInstance inst =
            build_product_instance(ctx, conic, Ideal::zero(ctx.ring_y));
        Ideal fib = fiber_cone(rees_presentation(inst.IY, inst.IZ));
        Ideal renamed = map_ideal(RingMap::rename_positional(fib.ring(), ctx.ring_x), fib);
        CHECK(ideal_equal(renamed, conic));
    }
    // principal center: fiber presentation is the zero ideal in one variable,
    // carrying the isomorphism flag
    {
        PolyRing R2 = parse_ring("ring Q[x,y] grevlex");
        ReesPresentation c = rees_presentation(Ideal::zero(R2),
                                               Ideal(R2, {Polynomial::variable(R2, 0)}));
        CHECK(c.principal_center);
        Ideal fib = fiber_cone(c);
        CHECK(fib.is_zero_ideal());
        CHECK(fib.ring().nvars() == 1);
    }
}

TEST_CASE("fiber cones agree with direct power-quotient dimensions") {
    // dim_k (I^d / I^d m) equals the degree-d piece of the fiber ring,
    // checked for d <= 3 on the conifold
    Field Q = Field::rationals();
    SegreContext ctx = build_segre(1, 1, Q);
    ProductConeInstance inst =
        build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
    ReesPresentation rp = rees_presentation(inst.IY, inst.IZ);
    Ideal fib = fiber_cone(rp);

    // I^d is generated in degree d, so dim_k I^d/(m_v I^d) over the base ring
    // equals the degree-d piece of I^d there:
    //   HF(S/IY, d) - HF(S/(IZ^d + IY), d)
    for (unsigned d = 1; d <= 3; ++d) {
        mpz_class fiber_dim = hilbert_function(fib, d);
        Ideal Id = ideal_power(inst.IZ, d);
        mpz_class direct = hilbert_function(inst.IY, d) -
                           hilbert_function(ideal_sum(Id, inst.IY), d);
        CHECK(fiber_dim == direct);
    }
}

TEST_CASE("blow-up charts") {
    Field Q = Field::rationals();
    SegreContext ctx = build_segre(1, 1, Q);
    ProductConeInstance inst =
        build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
    ReesPresentation rp = rees_presentation(inst.IY, inst.IZ);

    Ideal chart0 = blowup_chart(rp, 0);
    CHECK(chart0.ring().nvars() == 5);
    // the chart relations solve for z11 and z10: the Jacobian has two constant
    // pivots, so the chart is smooth of codimension 2
    int dim = krull_dimension(chart0);
    CHECK(dim == 3);
    Ideal sing = jacobian_singular_locus(chart0, 2);
    CHECK(sing.is_unit_ideal());

    CHECK_THROWS_AS(blowup_chart(rp, 2), DomainError);

    // principal center: chart equals the base
    PolyRing R2 = parse_ring("ring Q[x,y] grevlex");
    Ideal base(R2, {parse_polynomial(R2, "x^2 + y^2")});
    ReesPresentation c =
        rees_presentation(base, Ideal(R2, {Polynomial::variable(R2, 0)}));
    Ideal chart = blowup_chart(c, 0);
    CHECK(ideal_equal(chart, map_ideal(RingMap::rename_positional(R2, chart.ring()), base)));
}

TEST_CASE("chart gluing on the conifold") {
    // chart 0 localized at T1 matches chart 1 localized at T0 under the
    // standard coordinate change (the second chart variable is the inverse of
    // the first)
    Field Q = Field::rationals();
    SegreContext ctx = build_segre(1, 1, Q);
    ProductConeInstance inst =
        build_product_instance(ctx, Ideal::zero(ctx.ring_x), Ideal::zero(ctx.ring_y));
    ReesPresentation rp = rees_presentation(inst.IY, inst.IZ);
    Ideal chart0 = blowup_chart(rp, 0); // vars z..., T1
    Ideal chart1 = blowup_chart(rp, 1); // vars z..., T0

    // work in k[z..., u, v]/(uv - 1) with chart0's T1 = u, chart1's T0 = v
    std::vector<std::string> vars = ctx.ring_z.vars();
    vars.push_back("u");
    vars.push_back("v");
    PolyRing glue(Q, vars, MonomialOrder::grevlex());
    auto into_glue = [&](const Ideal& chart, const std::string& last_var_image) {
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k + 1 < chart.ring().nvars(); ++k)
            images.push_back(Polynomial::variable(glue, k));
        images.push_back(parse_polynomial(glue, last_var_image));
        RingMap m(chart.ring(), glue, images);
        return map_ideal(m, chart);
    };
    Ideal g0 = into_glue(chart0, "u");
    Ideal g1 = into_glue(chart1, "v");
    Polynomial rel = parse_polynomial(glue, "u*v - 1");
    Ideal loc0 = ideal_sum(g0, Ideal(glue, {rel}));
    Ideal loc1 = ideal_sum(g1, Ideal(glue, {rel}));
    CHECK(ideal_equal(loc0, loc1));
}

TEST_CASE("Jacobian singular loci") {
    PolyRing R4 = parse_ring("ring Q[x,y,z,w] grevlex");
    Ideal quadric(R4, {parse_polynomial(R4, "x^2 + y^2 + z^2 + w^2")});
    Ideal sing = jacobian_singular_locus(quadric, 1);
    Ideal origin(R4, {Polynomial::variable(R4, 0), Polynomial::variable(R4, 1),
                      Polynomial::variable(R4, 2), Polynomial::variable(R4, 3)});
    CHECK(ideal_equal(sing, origin));

    PolyRing R3 = parse_ring("ring Q[x0,x1,x2] grevlex");
    Ideal conic(R3, {parse_polynomial(R3, "x0*x2 - x1^2")});
    Ideal csing = jacobian_singular_locus(conic, 1);
    Ideal irr(R3, {Polynomial::variable(R3, 0), Polynomial::variable(R3, 1),
                   Polynomial::variable(R3, 2)});
    CHECK(ideal_equal(csing, irr));

    PolyRing R2 = parse_ring("ring Q[x,y] grevlex");
    Ideal node(R2, {parse_polynomial(R2, "x*y")});
    Ideal nsing = jacobian_singular_locus(node, 1);
    CHECK(ideal_contains(nsing,
                         Ideal(R2, {Polynomial::variable(R2, 0), Polynomial::variable(R2, 1)})));
}

TEST_CASE("instances over prime fields match the rational reference") {
    // the fiber ideal of the cubic x P^1 instance is field independent
    for (Field F : {Field::rationals(), Field::prime(31)}) {
        SegreContext ctx = build_segre(2, 1, F);
        ProductConeInstance inst =
            build_product_instance(ctx, fermat_cubic(ctx.ring_x), Ideal::zero(ctx.ring_y));
        Ideal fib = fiber_cone(rees_presentation(inst.IY, inst.IZ));
        REQUIRE(fib.gens().size() == 1);
        CHECK(fib.gens()[0].to_string() == "T0^3 + T1^3 + T2^3");
    }
}
