#include "conevanish/constructions.hpp"

#include <algorithm>

namespace conevanish {

std::string z_var_name(unsigned i, unsigned j, unsigned n, unsigned m) {
    // single-digit indices concatenate; larger ones get separators
    if (n <= 9 && m <= 9) return "z" + std::to_string(i) + std::to_string(j);
    return "z" + std::to_string(i) + "_" + std::to_string(j);
}

SegreContext build_segre(unsigned n, unsigned m, const Field& field) {
    SegreContext ctx;
    ctx.n = n;
    ctx.m = m;

    std::vector<std::string> zvars;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= m; ++j) zvars.push_back(z_var_name(i, j, n, m));
    ctx.ring_z = PolyRing(field, zvars, MonomialOrder::grevlex());

    std::vector<std::string> xvars, yvars, xyvars;
    for (unsigned i = 0; i <= n; ++i) xvars.push_back("x" + std::to_string(i));
    for (unsigned j = 0; j <= m; ++j) yvars.push_back("y" + std::to_string(j));
    xyvars = xvars;
    for (const auto& v : yvars) xyvars.push_back(v);
    ctx.ring_x = PolyRing(field, xvars, MonomialOrder::grevlex());
    ctx.ring_y = PolyRing(field, yvars, MonomialOrder::grevlex());
    ctx.ring_xy = PolyRing(field, xyvars, MonomialOrder::grevlex());

    // 2x2 minors z_ag z_bd - z_ad z_bg for a < b, g < d
    std::vector<Polynomial> minors;
    for (unsigned a = 0; a <= n; ++a)
        for (unsigned b = a + 1; b <= n; ++b)
            for (unsigned g = 0; g <= m; ++g)
                for (unsigned d = g + 1; d <= m; ++d) {
                    Polynomial p =
                        Polynomial::variable(ctx.ring_z, ctx.z_index(a, g)) *
                            Polynomial::variable(ctx.ring_z, ctx.z_index(b, d)) -
                        Polynomial::variable(ctx.ring_z, ctx.z_index(a, d)) *
                            Polynomial::variable(ctx.ring_z, ctx.z_index(b, g));
                    minors.push_back(std::move(p));
                }
    ctx.segre_ideal = Ideal(ctx.ring_z, std::move(minors));

    std::vector<Polynomial> images;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= m; ++j)
            images.push_back(Polynomial::variable(ctx.ring_xy, i) *
                             Polynomial::variable(ctx.ring_xy, n + 1 + j));
    ctx.map_z_to_xy = RingMap(ctx.ring_z, ctx.ring_xy, std::move(images));
    return ctx;
}

namespace {

// substitute x_a -> z_{a,col} (column substitution g_col of a polynomial on V)
Polynomial column_substitution(const SegreContext& ctx, const Polynomial& g, unsigned col) {
    std::vector<Polynomial> images;
    for (unsigned a = 0; a <= ctx.n; ++a)
        images.push_back(Polynomial::variable(ctx.ring_z, ctx.z_index(a, col)));
    return RingMap(ctx.ring_x, ctx.ring_z, std::move(images)).apply(g);
}

// substitute y_g -> z_{row,g} (row substitution h_row of a polynomial on W)
Polynomial row_substitution(const SegreContext& ctx, const Polynomial& h, unsigned row) {
    std::vector<Polynomial> images;
    for (unsigned g = 0; g <= ctx.m; ++g)
        images.push_back(Polynomial::variable(ctx.ring_z, ctx.z_index(row, g)));
    return RingMap(ctx.ring_y, ctx.ring_z, std::move(images)).apply(h);
}

} // namespace

ProductConeInstance build_product_instance(const SegreContext& ctx, const Ideal& IV,
                                           const Ideal& IW, const GroebnerOptions& opts) {
    if (IV.ring().field() != ctx.ring_z.field() || IW.ring().field() != ctx.ring_z.field())
        throw RingMismatchError("instance ideals must share the context field");
    if (IV.ring().nvars() != ctx.n + 1)
        throw DomainError("IV must live in a ring with " + std::to_string(ctx.n + 1) + " variables");
    if (IW.ring().nvars() != ctx.m + 1)
        throw DomainError("IW must live in a ring with " + std::to_string(ctx.m + 1) + " variables");
    if (!IV.is_homogeneous() || !IW.is_homogeneous())
        throw DomainError("instance ideals must be homogeneous");

    ProductConeInstance inst;
    inst.ctx = ctx;
    inst.IV = map_ideal(RingMap::rename_positional(IV.ring(), ctx.ring_x), IV);
    inst.IW = map_ideal(RingMap::rename_positional(IW.ring(), ctx.ring_y), IW);

    // the section column is y_m: the coordinates must be chosen so y_m
    // restricts to a nonzero section of W
    if (!inst.IW.is_zero_ideal()) {
        Polynomial ym = Polynomial::variable(ctx.ring_y, ctx.m);
        if (normal_form(ym, inst.IW, opts).is_zero())
            throw DomainError("y_m lies in IW; choose coordinates with the section column last");
    }

    std::vector<Polynomial> ygens = ctx.segre_ideal.gens();
    for (const auto& g : inst.IV.gens())
        for (unsigned col = 0; col <= ctx.m; ++col)
            ygens.push_back(column_substitution(ctx, g, col));
    for (const auto& h : inst.IW.gens())
        for (unsigned row = 0; row <= ctx.n; ++row)
            ygens.push_back(row_substitution(ctx, h, row));
    inst.IY = Ideal(ctx.ring_z, std::move(ygens));

    std::vector<Polynomial> zgens;
    for (unsigned i = 0; i <= ctx.n; ++i)
        zgens.push_back(Polynomial::variable(ctx.ring_z, ctx.z_index(i, ctx.m)));
    inst.IZ = Ideal(ctx.ring_z, std::move(zgens));

    std::vector<Polynomial> mv;
    for (std::size_t k = 0; k < ctx.ring_z.nvars(); ++k)
        mv.push_back(Polynomial::variable(ctx.ring_z, k));
    inst.m_v = Ideal(ctx.ring_z, std::move(mv));
    return inst;
}

ReesPresentation rees_presentation(const Ideal& base, const Ideal& center,
                                   const GroebnerOptions& opts) {
    if (base.ring() != center.ring())
        throw RingMismatchError("base and center must share a ring");
    const PolyRing& R = base.ring();
    const Field& K = R.field();
    std::vector<Polynomial> cgens = center.gens();
    if (cgens.empty()) throw DomainError("cannot blow up the zero ideal");

    ReesPresentation res;
    res.center = center;
    res.t_vars = static_cast<unsigned>(cgens.size());
    res.principal_center = cgens.size() == 1;

    std::vector<std::string> ambient_vars = R.vars();
    std::vector<std::string> tnames;
    for (unsigned k = 0; k < res.t_vars; ++k) {
        std::string nm = "T" + std::to_string(k);
        while (std::find(ambient_vars.begin(), ambient_vars.end(), nm) != ambient_vars.end())
            nm += "~";
        ambient_vars.push_back(nm);
        tnames.push_back(nm);
    }
    res.ambient = PolyRing(K, ambient_vars, MonomialOrder::grevlex());
    res.ring_t = PolyRing(K, tnames, MonomialOrder::grevlex());

    // joint ring [t, base vars, T vars], block order eliminating t
    std::vector<std::string> joint_vars;
    std::string tvar = "t";
    while (std::find(ambient_vars.begin(), ambient_vars.end(), tvar) != ambient_vars.end())
        tvar += "~";
    joint_vars.push_back(tvar);
    for (const auto& v : ambient_vars) joint_vars.push_back(v);
    PolyRing joint(K, joint_vars, MonomialOrder::block(1));

    RingMap base_to_joint = RingMap::rename_by_name(R, joint);
    std::vector<Polynomial> gens;
    for (const auto& g : base.gens()) gens.push_back(base_to_joint.apply(g));
    Polynomial t = Polynomial::variable(joint, 0);
    for (unsigned k = 0; k < res.t_vars; ++k) {
        Polynomial Tk = Polynomial::variable(joint, 1 + R.nvars() + k);
        gens.push_back(Tk - t * base_to_joint.apply(cgens[k]));
    }

    GroebnerOptions o = opts;
    o.allow_partial = true;
    GroebnerResult gb = groebner_basis(joint, gens, o);
    res.truncated = !gb.complete;
    res.truncated_at_degree = gb.truncated_at_degree;
    res.kernel_stats = gb.stats;

    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis) {
        bool has_t = false;
        for (const auto& term : g.terms())
            if (term.mono.exp(0)) { has_t = true; break; }
        if (has_t) continue;
        std::vector<Term> terms;
        for (const auto& term : g.terms()) {
            std::vector<std::uint32_t> e(term.mono.exponents().begin() + 1,
                                         term.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), term.coeff});
        }
        kept.push_back(Polynomial::from_terms(res.ambient, std::move(terms)));
    }
    res.rees_ideal = Ideal(res.ambient, std::move(kept));
    res.base_ideal = map_ideal(RingMap::rename_by_name(R, res.ambient), base);
    return res;
}

Ideal fiber_cone(const ReesPresentation& r, const GroebnerOptions& opts) {
    const PolyRing& A = r.ambient;
    const std::size_t base_vars = A.nvars() - r.t_vars;
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < base_vars; ++k) images.push_back(Polynomial::zero(r.ring_t));
    for (unsigned k = 0; k < r.t_vars; ++k)
        images.push_back(Polynomial::variable(r.ring_t, k));
    RingMap kill_base(A, r.ring_t, std::move(images));
    std::vector<Polynomial> gens;
    for (const auto& g : r.rees_ideal.gens()) {
        Polynomial im = kill_base.apply(g);
        if (!im.is_zero()) gens.push_back(std::move(im));
    }
    Ideal raw(r.ring_t, std::move(gens));
    return Ideal(r.ring_t, raw.basis(opts)); // canonical presentation
}

Ideal blowup_chart(const ReesPresentation& r, unsigned j) {
    if (j >= r.t_vars)
        throw DomainError("chart index " + std::to_string(j) + " out of range [0, " +
                          std::to_string(r.t_vars - 1) + "]");
    const PolyRing& A = r.ambient;
    const std::size_t base_vars = A.nvars() - r.t_vars;
    std::vector<std::string> chart_vars;
    for (std::size_t k = 0; k < base_vars; ++k) chart_vars.push_back(A.var(k));
    for (unsigned k = 0; k < r.t_vars; ++k)
        if (k != j) chart_vars.push_back(A.var(base_vars + k));
    PolyRing chart_ring(A.field(), chart_vars, MonomialOrder::grevlex());

    std::vector<Polynomial> images;
    std::size_t next = 0;
    for (std::size_t k = 0; k < base_vars; ++k)
        images.push_back(Polynomial::variable(chart_ring, next++));
    for (unsigned k = 0; k < r.t_vars; ++k) {
        if (k == j) {
            images.push_back(Polynomial::one(chart_ring));
        } else {
            images.push_back(Polynomial::variable(chart_ring, next++));
        }
    }
    RingMap dehomogenize(A, chart_ring, std::move(images));
    std::vector<Polynomial> gens;
    for (const auto& g : r.rees_ideal.gens()) {
        Polynomial im = dehomogenize.apply(g);
        if (!im.is_zero()) gens.push_back(std::move(im));
    }
    return Ideal(chart_ring, std::move(gens));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    const PolyRing& R = f.ring();
    const Field& K = R.field();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::uint32_t e = t.mono.exp(var);
        if (!e) continue;
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[var] -= 1;
        Scalar c = K.mul(t.coeff, K.from_int(static_cast<long>(e)));
        if (!K.is_zero(c)) terms.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    return Polynomial::from_terms(R, std::move(terms));
}

namespace {

// c x c minors of `rows` x `cols` polynomial matrix, by index subsets
void minor_rec(const std::vector<std::vector<Polynomial>>& jac, unsigned c,
               std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
               std::size_t row_start, std::size_t col_start, bool picking_rows,
               std::vector<Polynomial>& out, const PolyRing& R) {
    if (picking_rows) {
        if (rows.size() == c) {
            minor_rec(jac, c, rows, cols, 0, col_start, false, out, R);
            return;
        }
        for (std::size_t r = row_start; r < jac.size(); ++r) {
            rows.push_back(r);
            minor_rec(jac, c, rows, cols, r + 1, col_start, true, out, R);
            rows.pop_back();
        }
        return;
    }
    if (cols.size() == c) {
        // Laplace expansion along the first row
        std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c, Polynomial::zero(R)));
        for (unsigned a = 0; a < c; ++a)
            for (unsigned b = 0; b < c; ++b) sub[a][b] = jac[rows[a]][cols[b]];
        // determinant by recursive expansion (c is small)
        auto det = [&](auto&& self, std::vector<std::vector<Polynomial>> m) -> Polynomial {
            std::size_t k = m.size();
            if (k == 1) return m[0][0];
            Polynomial acc = Polynomial::zero(R);
            for (std::size_t col = 0; col < k; ++col) {
                if (m[0][col].is_zero()) continue;
                std::vector<std::vector<Polynomial>> mm;
                for (std::size_t a = 1; a < k; ++a) {
                    std::vector<Polynomial> rr;
                    for (std::size_t b = 0; b < k; ++b)
                        if (b != col) rr.push_back(m[a][b]);
                    mm.push_back(std::move(rr));
                }
                Polynomial term = m[0][col] * self(self, std::move(mm));
                acc = (col % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        Polynomial d = det(det, std::move(sub));
        if (!d.is_zero()) out.push_back(std::move(d));
        return;
    }
    std::size_t ncols = jac.empty() ? 0 : jac[0].size();
    for (std::size_t cc = col_start; cc < ncols; ++cc) {
        cols.push_back(cc);
        minor_rec(jac, c, rows, cols, 0, cc + 1, false, out, R);
        cols.pop_back();
    }
}

} // namespace

Ideal jacobian_singular_locus(const Ideal& I, unsigned codim) {
    const PolyRing& R = I.ring();
    const auto& gens = I.gens();
    std::vector<Polynomial> out = gens;
    if (codim == 0) {
        // 0x0 minor is the unit: nothing special cuts the locus down
        out.push_back(Polynomial::one(R));
        return Ideal(R, std::move(out));
    }
    if (gens.empty()) return Ideal(R, std::move(out));
    std::vector<std::vector<Polynomial>> jac(gens.size(),
        std::vector<Polynomial>(R.nvars(), Polynomial::zero(R)));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t v = 0; v < R.nvars(); ++v)
            jac[g][v] = partial_derivative(gens[g], v);
    if (codim <= gens.size() && codim <= R.nvars()) {
        std::vector<std::size_t> rows, cols;
        minor_rec(jac, codim, rows, cols, 0, 0, true, out, R);
    }
    // codim > matrix size: no minors exist, the locus stays conservative
    return Ideal(R, std::move(out));
}

} // namespace conevanish
