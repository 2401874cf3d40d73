#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "conevanish/ideal_ops.hpp"
#include "conevanish/kernels.hpp"
#include "conevanish/parse.hpp"

using namespace conevanish;

namespace {

std::string basis_string(const std::vector<Polynomial>& basis) {
    std::string s;
    for (const auto& g : basis) s += g.to_string() + "; ";
    return s;
}

Polynomial random_poly(std::mt19937& rng, const PolyRing& R, int terms, std::uint32_t max_exp) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<std::uint32_t> d(0, max_exp);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<std::uint32_t> e(R.nvars());
        for (auto& x : e) x = d(rng);
        ts.push_back({Monomial(std::move(e)), R.field().from_int(c(rng))});
    }
    return Polynomial::from_terms(R, std::move(ts));
}

// test-only oracle: saturation of a *monomial* ideal by the irrelevant ideal,
// computed by exponent shifting (strip each generator's powers one variable
// at a time until stable) -- no Groebner machinery involved
std::vector<Monomial> monomial_saturation_oracle(std::vector<Monomial> gens, std::size_t nvars) {
    bool changed = true;
    auto divides_some = [&](const Monomial& m, const std::vector<Monomial>& set) {
        for (const auto& g : set)
            if (g.divides(m) && g != m) return true;
        return false;
    };
    while (changed) {
        changed = false;
        std::vector<Monomial> next;
        for (const auto& g : gens) {
            // m is saturated away if for every variable v in its support,
            // m / v is already "forced": simpler equivalent for this oracle:
            // I : x_v for each v, intersected = strip one power of v from the
            // generators divisible by v when every generator shares v
            next.push_back(g);
        }
        // I : (x_0,...,x_n) = intersection of I : x_v; for monomial ideals
        // I : x_v = <m / gcd(m, x_v)>. Iterate I := I : m_irrelevant until stable.
        std::vector<std::vector<Monomial>> quotients;
        for (std::size_t v = 0; v < nvars; ++v) {
            std::vector<Monomial> q;
            for (const auto& g : gens) {
                if (g.exp(v)) {
                    std::vector<std::uint32_t> e = g.exponents();
                    e[v] -= 1;
                    q.push_back(Monomial(std::move(e)));
                } else {
                    q.push_back(g);
                }
            }
            quotients.push_back(std::move(q));
        }
        // intersect the monomial ideals pairwise via lcms
        std::vector<Monomial> inter = quotients[0];
        for (std::size_t v = 1; v < nvars; ++v) {
            std::vector<Monomial> next_inter;
            for (const auto& a : inter)
                for (const auto& b : quotients[v]) next_inter.push_back(Monomial::lcm(a, b));
            inter = std::move(next_inter);
        }
        // minimalize
        std::vector<Monomial> miny;
        for (const auto& m : inter)
            if (!divides_some(m, inter)) {
                bool dup = false;
                for (const auto& kept : miny)
                    if (kept == m) dup = true;
                if (!dup) miny.push_back(m);
            }
        // compare as sets
        auto key = [](const std::vector<Monomial>& s) {
            std::vector<std::vector<std::uint32_t>> k;
            for (const auto& m : s) k.push_back(m.exponents());
            std::sort(k.begin(), k.end());
            return k;
        };
        if (key(miny) != key(gens)) {
            gens = std::move(miny);
            changed = true;
        }
    }
    return gens;
}

} // namespace

TEST_CASE("hand-run Buchberger oracles") {
    // single generator is already a Groebner basis
    PolyRing Z = parse_ring("ring Q[z00,z01,z10,z11] grevlex");
    Ideal quad(Z, {parse_polynomial(Z, "z00*z11 - z01*z10")});
    CHECK(quad.basis().size() == 1);
    CHECK(quad.basis()[0] == parse_polynomial(Z, "z01*z10 - z00*z11")); // monic lead

    // (x - y, y^2) under lex: the one S-pair reduces to zero
    PolyRing L = parse_ring("ring Q[x,y] lex");
    Ideal I1(L, {parse_polynomial(L, "x - y"), parse_polynomial(L, "y^2")});
    CHECK(I1.basis().size() == 2);
    CHECK(basis_string(I1.basis()) == "y^2; x - y; ");

    // (x^2, xy + y^2) under grevlex: S-pair contributes y^3
    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    Ideal I2(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "x*y + y^2")});
    CHECK(basis_string(I2.basis()) == "x*y + y^2; x^2; y^3; ");
}

TEST_CASE("normal forms") {
    PolyRing Z = parse_ring("ring Q[z00,z01,z10,z11] grevlex");
    Ideal quad(Z, {parse_polynomial(Z, "z00*z11 - z01*z10")});
    // grevlex lead of the quadric is z01*z10, so that monomial reduces and
    // z00*z11 is already reduced (under lex the roles swap)
    CHECK(normal_form(parse_polynomial(Z, "z01*z10"), quad) ==
          parse_polynomial(Z, "z00*z11"));
    CHECK(normal_form(parse_polynomial(Z, "z00*z11"), quad) ==
          parse_polynomial(Z, "z00*z11"));

    PolyRing ZL = parse_ring("ring Q[z00,z01,z10,z11] lex");
    Ideal quadL(ZL, {parse_polynomial(ZL, "z00*z11 - z01*z10")});
    CHECK(normal_form(parse_polynomial(ZL, "z00*z11"), quadL) ==
          parse_polynomial(ZL, "z01*z10"));

    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    Polynomial f = parse_polynomial(R, "x^3 + x*y - 2");
    CHECK(normal_form(f, Ideal::zero(R)) == f);
    CHECK(normal_form(parse_polynomial(R, "x^2"), Ideal(R, {parse_polynomial(R, "x")})).is_zero());
}

TEST_CASE("normal form is linear over the field") {
    std::mt19937 rng(29);
    PolyRing R = parse_ring("ring F31[x,y,z] grevlex");
    Ideal I(R, {parse_polynomial(R, "x^2 - y*z"), parse_polynomial(R, "y^3 - z^3 + x*z")});
    const Field& F = R.field();
    for (int k = 0; k < 60; ++k) {
        Polynomial f = random_poly(rng, R, 4, 3);
        Polynomial g = random_poly(rng, R, 4, 3);
        Scalar a = F.from_int(k + 1);
        CHECK(normal_form(f.scaled(a) + g, I) == normal_form(f, I).scaled(a) + normal_form(g, I));
        CHECK(normal_form(normal_form(f, I), I) == normal_form(f, I));
    }
}

TEST_CASE("containment and equality") {
    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    Ideal xy(R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
    Ideal circle(R, {parse_polynomial(R, "x^2 + y^2")});
    CHECK(ideal_contains(xy, circle));
    CHECK_FALSE(ideal_contains(Ideal(R, {parse_polynomial(R, "x^2")}),
                               Ideal(R, {parse_polynomial(R, "x")})));

    CHECK(ideal_equal(xy, Ideal(R, {parse_polynomial(R, "x + y"), parse_polynomial(R, "y")})));
    CHECK_FALSE(ideal_equal(Ideal(R, {parse_polynomial(R, "x")}),
                            Ideal(R, {parse_polynomial(R, "x^2")})));

    Ideal unit(R, {parse_polynomial(R, "x*y - 1"), parse_polynomial(R, "x^2")});
    CHECK(unit.is_unit_ideal());
    CHECK(basis_string(unit.basis()) == "1; ");

    PolyRing S = parse_ring("ring Q[u,v] grevlex");
    CHECK_THROWS_AS(ideal_equal(xy, Ideal::zero(S)), RingMismatchError);
}

TEST_CASE("ideal powers") {
    PolyRing Z = parse_ring("ring Q[z01,z11] grevlex");
    Ideal I(Z, {Polynomial::variable(Z, 0), Polynomial::variable(Z, 1)});
    Ideal sq = ideal_power(I, 2);
    CHECK(sq.gens().size() == 3);
    CHECK(ideal_equal(sq, Ideal(Z, {parse_polynomial(Z, "z01^2"), parse_polynomial(Z, "z01*z11"),
                                    parse_polynomial(Z, "z11^2")})));
    CHECK(ideal_equal(ideal_power(I, 1), I));
    CHECK(ideal_power(I, 0).is_unit_ideal());

    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    Ideal m(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1)});
    Ideal cube = ideal_power(m, 3);
    CHECK(cube.gens().size() == 4); // all degree-3 monomials in x, y
    for (const auto& g : cube.gens()) CHECK(g.degree() == 3);
}

TEST_CASE("elimination") {
    PolyRing C = parse_ring("ring Q[t,x,y] grevlex");
    Ideal par(C, {parse_polynomial(C, "x - t^2"), parse_polynomial(C, "y - t^3")});
    Ideal el = eliminate(par, {"x", "y"});
    REQUIRE(el.basis().size() == 1);
    CHECK(el.basis()[0] == parse_polynomial(el.ring(), "x^3 - y^2"));
    // substitution oracle: x = t^2, y = t^3 kills every generator
    RingMap sub(el.ring(), C, {parse_polynomial(C, "t^2"), parse_polynomial(C, "t^3")});
    for (const auto& g : el.basis()) CHECK(normal_form(sub.apply(g), Ideal::zero(C)).is_zero());

    PolyRing R = parse_ring("ring Q[x] grevlex");
    Ideal x(R, {Polynomial::variable(R, 0)});
    Ideal ex = eliminate(x, {"x"});
    CHECK(ideal_equal(ex, Ideal(ex.ring(), {Polynomial::variable(ex.ring(), 0)})));

    PolyRing TX = parse_ring("ring Q[t,x] grevlex");
    Ideal tx1(TX, {parse_polynomial(TX, "t*x - 1")});
    CHECK(eliminate(tx1, {"x"}).is_zero_ideal());

    // eliminating nothing keeps the ideal
    Ideal all = eliminate(par, {"t", "x", "y"});
    Ideal back = map_ideal(RingMap::rename_by_name(all.ring(), C), all);
    CHECK(ideal_equal(back, par));
}

TEST_CASE("quotients and saturation") {
    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    Ideal x2y(R, {parse_polynomial(R, "x^2*y")});
    Ideal y(R, {parse_polynomial(R, "y")});
    CHECK(ideal_equal(ideal_quotient(x2y, y), Ideal(R, {parse_polynomial(R, "x^2")})));

    Ideal I(R, {parse_polynomial(R, "x^2*y"), parse_polynomial(R, "x*y^2")});
    Ideal m(R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
    Ideal sat = saturate(I, m);
    CHECK(ideal_equal(sat, Ideal(R, {parse_polynomial(R, "x*y")})));
    CHECK(ideal_contains(sat, I));
    CHECK(ideal_equal(saturate(sat, m), sat));

    CHECK(ideal_equal(ideal_quotient(I, Ideal(R, {Polynomial::one(R)})), I));
}

TEST_CASE("monomial saturation matches the exponent-shifting oracle") {
    std::mt19937 rng(31);
    PolyRing R = parse_ring("ring Q[x,y,z] grevlex");
    Ideal irr(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1),
                  Polynomial::variable(R, 2)});
    std::uniform_int_distribution<std::uint32_t> d(0, 3);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Monomial> mono_gens;
        std::vector<Polynomial> poly_gens;
        for (int k = 0; k < 3; ++k) {
            std::vector<std::uint32_t> e = {d(rng), d(rng), d(rng)};
            if (e[0] + e[1] + e[2] == 0) e[0] = 1;
            mono_gens.push_back(Monomial(e));
            poly_gens.push_back(
                Polynomial::monomial_term(R, Monomial(e), R.field().one()));
        }
        Ideal sat = saturate(Ideal(R, poly_gens), irr);
        std::vector<Monomial> oracle = monomial_saturation_oracle(mono_gens, 3);
        std::vector<Polynomial> oracle_gens;
        for (const auto& mm : oracle)
            oracle_gens.push_back(Polynomial::monomial_term(R, mm, R.field().one()));
        CHECK(ideal_equal(sat, Ideal(R, oracle_gens)));
    }
}

TEST_CASE("kernels of maps") {
    // Segre (1,1)
    PolyRing Z = parse_ring("ring Q[z00,z01,z10,z11] grevlex");
    PolyRing XY = parse_ring("ring Q[x0,x1,y0,y1] grevlex");
    std::vector<Polynomial> im;
    for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}})
        im.push_back(Polynomial::variable(XY, static_cast<std::size_t>(i)) *
                     Polynomial::variable(XY, static_cast<std::size_t>(2 + j)));
    RingMap segre(Z, XY, im);
    Ideal ker = kernel_of_map(segre);
    CHECK(ideal_equal(ker, Ideal(Z, {parse_polynomial(Z, "z00*z11 - z01*z10")})));

    // Veronese a -> x^2, b -> xy, c -> y^2
    PolyRing ABC = parse_ring("ring Q[a,b,c] grevlex");
    PolyRing R = parse_ring("ring Q[x,y] grevlex");
    RingMap ver(ABC, R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "x*y"),
                         parse_polynomial(R, "y^2")});
    Ideal vker = kernel_of_map(ver);
    CHECK(ideal_equal(vker, Ideal(ABC, {parse_polynomial(ABC, "a*c - b^2")})));
    // substitution oracle: every kernel generator maps to zero
    for (const auto& g : vker.basis()) CHECK(ver.apply(g).is_zero());

    RingMap id = RingMap::rename_positional(R, R);
    CHECK(kernel_of_map(id).is_zero_ideal());
}

TEST_CASE("Groebner properties on random small ideals") {
    std::mt19937 rng(37);
    PolyRing Q2 = parse_ring("ring Q[x,y] grevlex");
    PolyRing F3 = parse_ring("ring F31[x,y,z] grevlex");
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const PolyRing& R = trial % 2 ? Q2 : F3;
        std::vector<Polynomial> gens;
        int count = 2 + trial % 2;
        for (int k = 0; k < count; ++k) gens.push_back(random_poly(rng, R, 3, 2));
        Ideal I(R, gens);
        const auto& B = I.basis();

        // idempotence: recomputing from the basis returns the basis
        Ideal fromB(R, B);
        CHECK(basis_string(fromB.basis()) == basis_string(B));

        // permutation invariance, byte-for-byte
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(basis_string(Ideal(R, shuffled).basis()) == basis_string(B));

        // every input generator reduces to zero
        for (const auto& g : gens) CHECK(normal_form(g, I).is_zero());

        // spot-check: S-pairs of the reduced basis reduce to zero
        if (B.size() >= 2) {
            Polynomial s = s_polynomial(B[0], B[1]);
            CHECK(kernels::reduce_full(s, B).is_zero());
        }
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("serial reference engine agrees with the batched engine") {
    std::mt19937 rng(41);
    PolyRing R = parse_ring("ring F31[x,y,z] grevlex");
    GroebnerOptions serial;
    serial.serial_reference = true;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens = {random_poly(rng, R, 4, 3), random_poly(rng, R, 4, 3),
                                        random_poly(rng, R, 3, 2)};
        GroebnerResult batched = groebner_basis(R, gens, {});
        GroebnerResult ref = groebner_basis(R, gens, serial);
        CHECK(basis_string(batched.basis) == basis_string(ref.basis));
    }
}

TEST_CASE("results do not depend on the thread count") {
    PolyRing Z = parse_ring("ring F31[z00,z01,z02,z10,z11,z12,z20,z21,z22] grevlex");
    std::vector<Polynomial> gens;
    for (const char* src : {"z00*z11 - z01*z10", "z00*z12 - z02*z10", "z01*z12 - z02*z11",
                            "z10*z21 - z11*z20", "z00*z21 - z01*z20",
                            "z02^3 + z12^3 + z22^3"})
        gens.push_back(parse_polynomial(Z, src));

    int saved = kernels::thread_limit();
    kernels::set_thread_limit(1);
    GroebnerResult one = groebner_basis(Z, gens, {});
    kernels::set_thread_limit(4);
    GroebnerResult four = groebner_basis(Z, gens, {});
    kernels::set_thread_limit(saved);

    CHECK(basis_string(one.basis) == basis_string(four.basis));
    CHECK(one.stats.pairs_processed == four.stats.pairs_processed);
    CHECK(one.stats.max_degree == four.stats.max_degree);
}

TEST_CASE("budgets fail loudly and partial runs are flagged") {
    PolyRing R = parse_ring("ring Q[x,y,z] grevlex");
    std::vector<Polynomial> gens = {parse_polynomial(R, "x^3 - 2*x*y"),
                                    parse_polynomial(R, "x^2*y - 2*y^2 + x"),
                                    parse_polynomial(R, "z^4 - x*y*z")};
    GroebnerOptions starved;
    starved.pair_budget = 1;
    CHECK_THROWS_AS(groebner_basis(R, gens, starved), BudgetExceededError);

    starved.allow_partial = true;
    GroebnerResult partial = groebner_basis(R, gens, starved);
    CHECK_FALSE(partial.complete);
}

TEST_CASE("degree caps truncate homogeneous runs consistently") {
    PolyRing Z = parse_ring("ring F31[z00,z01,z10,z11] grevlex");
    std::vector<Polynomial> gens = {parse_polynomial(Z, "z00*z11 - z01*z10"),
                                    parse_polynomial(Z, "z00^2*z01 - z11^3"),
                                    parse_polynomial(Z, "z10^3 + z01^2*z11")};
    GroebnerResult full = groebner_basis(Z, gens, {});
    GroebnerOptions capped;
    capped.degree_cap = 4;
    GroebnerResult trunc = groebner_basis(Z, gens, capped);
    if (!trunc.complete) {
        // the truncated basis agrees with the full one through the cap
        for (const auto& g : trunc.basis) {
            if (g.degree() > 4) continue;
            bool found = false;
            for (const auto& h : full.basis)
                if (h == g) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("concurrent Groebner queries on one shared ideal") {
    PolyRing R = parse_ring("ring F31[x,y,z] grevlex");
    Ideal I(R, {parse_polynomial(R, "x^2*y - z^3"), parse_polynomial(R, "x*z - y^2"),
                parse_polynomial(R, "y*z^2 - x^2")});
    std::string expected;
    {
        Ideal fresh(R, I.gens());
        expected = basis_string(fresh.basis());
    }
    std::vector<std::thread> pool;
    std::vector<std::string> results(4);
    for (int k = 0; k < 4; ++k)
        pool.emplace_back([&, k] { results[static_cast<std::size_t>(k)] = basis_string(I.basis()); });
    for (auto& t : pool) t.join();
    for (const auto& r : results) CHECK(r == expected);
}
