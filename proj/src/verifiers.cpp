#include "conevanish/verifiers.hpp"

#include <algorithm>

namespace conevanish {

namespace {

Ideal irrelevant_ideal(const PolyRing& R) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < R.nvars(); ++i) vars.push_back(Polynomial::variable(R, i));
    return Ideal(R, std::move(vars));
}

std::vector<std::string> serialize_instance(const ProductConeInstance& inst) {
    std::vector<std::string> out;
    out.push_back(inst.ctx.ring_x.to_string());
    for (const auto& g : canonical_sorted_gens(inst.IV)) out.push_back("IV: " + g.to_string());
    out.push_back(inst.ctx.ring_y.to_string());
    for (const auto& g : canonical_sorted_gens(inst.IW)) out.push_back("IW: " + g.to_string());
    return out;
}

std::vector<std::string> gens_strings(const std::vector<Polynomial>& gens) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.to_string());
    return out;
}

// does the origin satisfy every generator (all constant terms zero)?
bool origin_in_locus(const Ideal& I) {
    for (const auto& g : I.gens()) {
        for (const auto& t : g.terms())
            if (t.mono.is_one() && !I.ring().field().is_zero(t.coeff)) return false;
    }
    return true;
}

struct FactorHypotheses {
    int krull = 0;
    int height = 0;
    std::size_t min_gens = 0;
    bool positive_dimensional = false;
    bool complete_intersection = false;
    bool smooth_codim1 = false;
    int sing_dim = -1;
};

FactorHypotheses factor_hypotheses(const Ideal& I, const GroebnerOptions& opts) {
    FactorHypotheses h;
    h.krull = krull_dimension(I, opts);
    h.height = static_cast<int>(I.ring().nvars()) - h.krull;
    h.min_gens = minimal_ideal_generators(I, opts).size();
    h.positive_dimensional = h.krull >= 2; // affine cone dim 2 = projective dim 1
    h.complete_intersection = static_cast<int>(h.min_gens) == h.height;
    Ideal sing = jacobian_singular_locus(I, static_cast<unsigned>(std::max(h.height, 0)));
    h.sing_dim = krull_dimension(sing, opts);
    h.smooth_codim1 = h.sing_dim <= h.krull - 2;
    return h;
}

void add_factor_hypothesis_checks(Certificate& cert, const std::string& tag,
                                  const FactorHypotheses& h) {
    cert.add_check("hyp_" + tag + "_positive_dimensional", h.positive_dimensional,
                   {{"cone_dimension", h.krull}}, true);
    cert.add_check("hyp_" + tag + "_complete_intersection", h.complete_intersection,
                   {{"minimal_generators", h.min_gens}, {"height", h.height}}, true);
    cert.add_check("hyp_" + tag + "_smooth_codim1", h.smooth_codim1,
                   {{"singular_locus_dimension", h.sing_dim}, {"cone_dimension", h.krull}},
                   true);
}

} // namespace

std::vector<Polynomial> minimal_ideal_generators(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous())
        throw DomainError("minimal generators require a homogeneous ideal");
    std::vector<Polynomial> sorted = canonical_sorted_gens(I);
    std::vector<Polynomial> kept;
    for (const auto& g : sorted) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        Ideal K(I.ring(), kept);
        if (normal_form(g, K, opts).is_zero()) continue;
        kept.push_back(g);
    }
    return kept;
}

ProductConeInstance instance_from_factors(const Ideal& IV, const Ideal& IW,
                                          const GroebnerOptions& opts) {
    if (IV.ring().field() != IW.ring().field())
        throw RingMismatchError("factor ideals must share a field");
    if (IV.ring().nvars() == 0 || IW.ring().nvars() == 0)
        throw DomainError("factors need at least one variable");
    unsigned n = static_cast<unsigned>(IV.ring().nvars()) - 1;
    unsigned m = static_cast<unsigned>(IW.ring().nvars()) - 1;
    SegreContext ctx = build_segre(n, m, IV.ring().field());
    return build_product_instance(ctx, IV, IW, opts);
}

Certificate check_exceptional_fiber(const ProductConeInstance& inst, const VerifyOptions& opts) {
    Certificate cert;
    cert.claim_id = "prop_3_2";
    cert.field = inst.ctx.ring_z.field();
    cert.inputs = serialize_instance(inst);

    ReesPresentation rp = rees_presentation(inst.IY, inst.IZ, opts.gb);
    cert.stats["rees_pairs"] = rp.kernel_stats.pairs_processed;
    cert.stats["rees_max_degree"] = rp.kernel_stats.max_degree;

    if (rp.truncated) {
        cert.add_skipped("rees_presentation",
                         "pair budget exceeded; presentation truncated at degree " +
                             std::to_string(rp.truncated_at_degree));
        cert.add_skipped("fiber_matches_v", "depends on the full Rees presentation");
        cert.add_skipped("center_codimension_one", "depends on the full Rees presentation");
        return cert;
    }
    cert.add_pass("rees_presentation",
                  {{"generators", rp.rees_ideal.gens().size()},
                   {"t_variables", rp.t_vars},
                   {"principal_center", rp.principal_center}});

    Ideal fiber = fiber_cone(rp, opts.gb);
    Ideal fiber_renamed = map_ideal(RingMap::rename_positional(fiber.ring(), inst.ctx.ring_x), fiber);
    bool matches = ideal_equal(fiber_renamed, inst.IV, opts.gb);
    cert.add_check("fiber_matches_v", matches,
                   {{"fiber_ideal", gens_strings(fiber.gens())},
                    {"v_ideal", gens_strings(inst.IV.basis(opts.gb))}});

    int dim_y = krull_dimension(inst.IY, opts.gb);
    int dim_z = krull_dimension(ideal_sum(inst.IY, inst.IZ), opts.gb);
    cert.add_check("center_codimension_one", dim_z == dim_y - 1,
                   {{"dim_y_cone", dim_y}, {"dim_z_cone", dim_z}});
    return cert;
}

unsigned default_normality_dmax(const Ideal& IV, const Ideal& IW) {
    long dv = std::max(IV.max_generator_degree(), 0L);
    long dw = std::max(IW.max_generator_degree(), 0L);
    long d = 2 * (dv + dw);
    return static_cast<unsigned>(std::max(d, 1L));
}

Certificate check_projective_normality(const Ideal& IV, const Ideal& IW, unsigned d_max,
                                       const VerifyOptions& opts) {
    if (d_max < 1) throw DomainError("d_max must be at least 1");
    ProductConeInstance inst = instance_from_factors(IV, IW, opts.gb);
    Certificate cert;
    cert.claim_id = "lemma_3_6";
    cert.field = inst.ctx.ring_z.field();
    cert.inputs = serialize_instance(inst);
    cert.inputs.push_back("d_max: " + std::to_string(d_max));

    FactorHypotheses hv = factor_hypotheses(inst.IV, opts.gb);
    FactorHypotheses hw = factor_hypotheses(inst.IW, opts.gb);
    add_factor_hypothesis_checks(cert, "v", hv);
    add_factor_hypothesis_checks(cert, "w", hw);
    int dim_v = hv.krull - 1, dim_w = hw.krull - 1;
    // both factors full projective spaces: the embedding is projectively
    // normal unconditionally, no induction needed
    bool base_case = inst.IV.is_zero_ideal() && inst.IW.is_zero_ideal();
    bool dim_cond = base_case || (dim_v + dim_w > 2) ||
                    (dim_v == 1 && dim_w == 1 && inst.ctx.n == 2 && inst.ctx.m == 2);
    cert.add_check("hyp_dimension_condition", dim_cond,
                   {{"dim_v", dim_v}, {"dim_w", dim_w}, {"n", inst.ctx.n}, {"m", inst.ctx.m},
                    {"segre_base_case", base_case}},
                   true);

    // the direct degreewise test is valid unconditionally
    Ideal satV = saturate(inst.IV, irrelevant_ideal(inst.ctx.ring_x), opts.gb);
    Ideal satW = saturate(inst.IW, irrelevant_ideal(inst.ctx.ring_y), opts.gb);
    Ideal satY = saturate(inst.IY, inst.m_v, opts.gb);

    CohomologyTable tabV = cohomology_table(satV, 0, static_cast<long>(d_max), false, opts.gb);
    CohomologyTable tabW = cohomology_table(satW, 0, static_cast<long>(d_max), false, opts.gb);

    for (long d = 1; d <= static_cast<long>(d_max); ++d) {
        mpz_class image = hilbert_function(satY, d, opts.gb);
        mpz_class presentation_hf = hilbert_function(inst.IY, d, opts.gb);
        mpz_class factor_product = hilbert_function(satV, d, opts.gb) *
                                   hilbert_function(satW, d, opts.gb);
        mpz_class target = kunneth_dim(tabV, tabW, 0, d);
        bool ok = image == target && factor_product == target;
        cert.add_check("surjective_deg_" + std::to_string(d), ok,
                       {{"image_dim", image.get_str()},
                        {"target_dim", target.get_str()},
                        {"factor_product", factor_product.get_str()},
                        {"hf_presentation", presentation_hf.get_str()}});
    }

    // Kunneth H^1 vanishing for the inductive step: drop the top-degree
    // hypersurface from one factor and pair with the other factor
    auto machinery = [&](const std::string& tag, const Ideal& factor, const Ideal& satOther,
                         const CohomologyTable& tabOther, const PolyRing& ring_factor) {
        std::vector<Polynomial> mingens = minimal_ideal_generators(factor, opts.gb);
        if (mingens.empty()) return; // P^n base case: nothing to drop
        std::sort(mingens.begin(), mingens.end(), [](const Polynomial& a, const Polynomial& b) {
            return a.degree() < b.degree();
        });
        long e = mingens.back().degree();
        mingens.pop_back();
        Ideal chain(ring_factor, mingens);
        Ideal sat_chain = saturate(chain, irrelevant_ideal(ring_factor), opts.gb);
        CohomologyTable tab_chain =
            cohomology_table(sat_chain, 1 - e, static_cast<long>(d_max) - e, false, opts.gb);
        (void)satOther;
        for (long d = 1; d <= static_cast<long>(d_max); ++d) {
            mpz_class h1 = tab_chain.value_or_zero(1, d - e) * tabOther.at(0, d) +
                           tab_chain.value_or_zero(0, d - e) * tabOther.at(1, d);
            cert.add_check("kunneth_h1_vanishing_" + tag + "_deg_" + std::to_string(d), h1 == 0,
                           {{"h1_product", h1.get_str()}, {"dropped_degree", e}}, true);
        }
    };
    if (dim_w >= 1) machinery("v", inst.IV, satW, tabW, inst.ctx.ring_x);
    if (dim_v >= 1) machinery("w", inst.IW, satV, tabV, inst.ctx.ring_y);

    cert.stats["tested_range"] = {1, d_max};
    cert.stats["regularity_v"] = free_resolution(satV, opts.gb).betti.regularity();
    cert.stats["regularity_w"] = free_resolution(satW, opts.gb).betti.regularity();
    return cert;
}

Certificate check_blowup_gorenstein(const ProductConeInstance& inst, GorensteinMode mode,
                                    const VerifyOptions& opts) {
    Certificate cert;
    cert.claim_id = "cor_gorenstein";
    cert.field = inst.ctx.ring_z.field();
    cert.inputs = serialize_instance(inst);
    cert.inputs.push_back(mode == GorensteinMode::direct ? "mode: direct" : "mode: hypothesis");

    FactorHypotheses hv = factor_hypotheses(inst.IV, opts.gb);
    FactorHypotheses hw = factor_hypotheses(inst.IW, opts.gb);
    add_factor_hypothesis_checks(cert, "v", hv);
    add_factor_hypothesis_checks(cert, "w", hw);

    bool hyp_ok = hv.positive_dimensional && hv.complete_intersection && hv.smooth_codim1 &&
                  hw.positive_dimensional && hw.complete_intersection && hw.smooth_codim1;
    if (hyp_ok) {
        cert.add_pass("gorenstein_conclusion",
                      {{"method", "hypothesis"},
                       {"statement", "blow-up is Gorenstein: normal positive-dimensional "
                                     "complete-intersection factors"}});
    } else {
        cert.add_skipped("gorenstein_conclusion",
                         "criteria not applicable: a factor hypothesis failed");
    }

    if (mode == GorensteinMode::direct) {
        ReesPresentation rp = rees_presentation(inst.IY, inst.IZ, opts.gb);
        cert.stats["rees_pairs"] = rp.kernel_stats.pairs_processed;
        if (rp.truncated) {
            cert.add_skipped("charts", "pair budget exceeded while presenting the blow-up");
            return cert;
        }
        for (unsigned j = 0; j < rp.t_vars; ++j) {
            std::string name = "chart_" + std::to_string(j) + "_gorenstein";
            Ideal chart = blowup_chart(rp, j);
            int dim_chart = krull_dimension(chart, opts.gb);
            int codim = static_cast<int>(chart.ring().nvars()) - dim_chart;
            Ideal sing = jacobian_singular_locus(chart, static_cast<unsigned>(std::max(codim, 0)));
            bool smooth_chart = sing.is_unit_ideal(opts.gb);
            bool smooth_at_origin = smooth_chart || !origin_in_locus(sing);
            if (smooth_chart) {
                cert.add_pass(name, {{"smooth_chart", true},
                                     {"smooth_at_origin", smooth_at_origin},
                                     {"chart_dimension", dim_chart}});
            } else if (chart.is_homogeneous()) {
                bool g = is_gorenstein_graded(chart, opts.gb);
                cert.add_check(name, g,
                               {{"smooth_chart", false},
                                {"smooth_at_origin", smooth_at_origin},
                                {"graded_test", g}});
            } else {
                cert.add_skipped(name,
                                 "chart has singular points and a non-homogeneous presentation; "
                                 "no local test available");
            }
        }
    }
    return cert;
}

Certificate verify_example_e1(const Ideal& IE1, const Ideal& IE2, const E1Options& opts) {
    const GroebnerOptions& gb = opts.verify.gb;
    // validate: smooth plane cubics
    auto validate = [&](const Ideal& I, const std::string& which) {
        if (I.ring().nvars() != 3)
            throw DomainError(which + " must live in a three-variable ring");
        if (!I.is_homogeneous()) throw DomainError(which + " must be homogeneous");
        std::vector<Polynomial> mg = minimal_ideal_generators(I, gb);
        if (mg.size() != 1 || mg[0].degree() != 3)
            throw DomainError(which + " must be a plane cubic (one generator of degree 3)");
        Ideal sing = jacobian_singular_locus(I, 1);
        if (krull_dimension(sing, gb) > 0)
            throw DomainError(which + " is singular: the verification requires smooth cubics");
    };
    validate(IE1, "IE1");
    validate(IE2, "IE2");

    ProductConeInstance inst = instance_from_factors(IE1, IE2, gb);
    Certificate cert;
    cert.claim_id = "example_e1";
    cert.field = inst.ctx.ring_z.field();
    cert.inputs = serialize_instance(inst);

    // (a) smoothness witnesses (validation already passed)
    cert.add_pass("smooth_e1", {{"singular_locus_dimension",
                                 krull_dimension(jacobian_singular_locus(inst.IV, 1), gb)}});
    cert.add_pass("smooth_e2", {{"singular_locus_dimension",
                                 krull_dimension(jacobian_singular_locus(inst.IW, 1), gb)}});

    // (b) exceptional fiber
    Certificate fiber_cert = check_exceptional_fiber(inst, opts.verify);
    cert.stats["rees_pairs"] = fiber_cert.stats["rees_pairs"];
    bool fiber_ok = fiber_cert.verdict() == "pass";
    nlohmann::json fiber_witness;
    for (const auto& c : fiber_cert.checks)
        fiber_witness[c.name] = to_string(c.status);
    ReesPresentation rp = rees_presentation(inst.IY, inst.IZ, gb);
    Ideal fiber = fiber_cone(rp, gb);
    fiber_witness["fiber_ideal"] = gens_strings(fiber.gens());
    cert.add_check("exceptional_fiber_matches_e1", fiber_ok, fiber_witness);

    // (c) h^1 of the structure sheaf of the fiber curve
    mpz_class h1 = sheaf_cohomology_dim(inst.IV, 1, 0, false, gb);
    cert.add_check("h1_structure_sheaf", h1 == 1, {{"h1", h1.get_str()}});

    // (d) fiber dimension bound
    int fiber_proj_dim = krull_dimension(fiber, gb) - 1;
    cert.add_check("fiber_dimension_bound", fiber_proj_dim <= 1,
                   {{"fiber_projective_dimension", fiber_proj_dim}});

    // (e) Gorenstein, hypothesis route; direct route optional
    Certificate gcert = check_blowup_gorenstein(inst, GorensteinMode::hypothesis, opts.verify);
    nlohmann::json gwitness;
    for (const auto& c : gcert.checks) gwitness[c.name] = to_string(c.status);
    cert.add_check("gorenstein", gcert.verdict() == "pass", gwitness);

    if (opts.direct_gorenstein) {
        VerifyOptions direct_opts = opts.verify;
        direct_opts.gb = opts.direct_budget;
        try {
            Certificate dcert = check_blowup_gorenstein(inst, GorensteinMode::direct, direct_opts);
            bool any_fail = false, all_charts_skipped = true;
            for (const auto& c : dcert.checks) {
                if (c.name.rfind("chart_", 0) == 0) {
                    if (c.status == CheckStatus::fail) any_fail = true;
                    if (c.status != CheckStatus::skipped) all_charts_skipped = false;
                }
            }
            if (any_fail) {
                cert.add_fail("gorenstein_direct");
            } else if (all_charts_skipped) {
                cert.add_skipped("gorenstein_direct", "no chart admitted a local test");
            } else {
                cert.add_pass("gorenstein_direct");
            }
        } catch (const BudgetExceededError& e) {
            cert.add_skipped("gorenstein_direct", e.what());
        }
    }

    bool all_ok = true;
    for (const auto& c : cert.checks)
        if (c.status == CheckStatus::fail) all_ok = false;
    cert.add_check("pushforward_nonvanishing", all_ok,
                   {{"statement",
                     "the fiber curve has h^1(O) = 1 supported over the vertex, the fiber "
                     "dimension is at most 1, and the blow-up is Gorenstein; together these "
                     "give a nonvanishing first direct image of the dualizing sheaf, "
                     "modulo the listed unverified assumptions"}});

    cert.assumptions_unverified = {
        "R^2 f_* I_E = 0: inferred from the fiber-dimension bound, not recomputed",
        "trivial canonical divisor: omega_X = O_X from smoothness in codimension one, "
        "not recomputed",
        "log canonical: not computed (discrepancy analysis out of scope)"};
    cert.stats["field_note"] =
        "checks are exact over " + cert.field.name() +
        "; ideal membership and Hilbert data are stable under base-field extension";
    return cert;
}

} // namespace conevanish
