#include "conevanish/cohomology.hpp"

#include "conevanish/kernels.hpp"

namespace conevanish {

namespace {

Ideal irrelevant_ideal(const PolyRing& R) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < R.nvars(); ++i) vars.push_back(Polynomial::variable(R, i));
    return Ideal(R, std::move(vars));
}

} // namespace

CohomologyEngine::CohomologyEngine(const Ideal& I, bool saturate_first,
                                   const GroebnerOptions& opts)
    : opts_(opts) {
    if (!I.is_homogeneous()) throw DomainError("sheaf cohomology requires a homogeneous ideal");
    Ideal sat = saturate(I, irrelevant_ideal(I.ring()), opts);
    if (!ideal_equal(sat, I, opts)) {
        if (!saturate_first)
            throw DomainError("ideal is not saturated; pass the saturate flag or saturate first");
        I_ = sat;
    } else {
        I_ = I;
    }
    dim_x_ = krull_dimension(I_, opts) - 1;
    if (dim_x_ < 0) throw DomainError("empty projective scheme");
}

const Resolution& CohomologyEngine::resolution() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!res_) res_ = std::make_shared<Resolution>(free_resolution(I_, opts_));
    return *res_;
}

mpz_class CohomologyEngine::h(int i, long twist) const {
    if (i < 0 || i > dim_x_)
        throw DomainError("cohomological index " + std::to_string(i) + " outside [0, dim X]");
    if (i == 0) return hilbert_function(I_, twist, opts_);

    const PolyRing& R = I_.ring();
    const long n = static_cast<long>(R.nvars()) - 1; // X sits in P^n
    const long j = n - i;
    const Resolution& res = resolution();
    const int pd = res.length();
    if (j < 0 || j > pd) return 0;

    // dual complex G^k = Hom(F_k, S(-n-1)) = (+) S(-((n+1) - a)); maps are the
    // transposes of the resolution differentials
    auto dual_shifts = [&](int k) {
        std::vector<long> out;
        for (long a : res.shifts[static_cast<std::size_t>(k)]) out.push_back(n + 1 - a);
        return out;
    };
    auto transpose = [&](int k) {
        // d_k : F_k -> F_{k-1} stored maps[k-1][row][col]; transpose gives
        // G^{k-1} -> G^k
        const auto& m = res.maps[static_cast<std::size_t>(k - 1)];
        std::size_t rows = m.size();
        std::size_t cols = rows ? m[0].size() : 0;
        std::vector<std::vector<Polynomial>> t(cols, std::vector<Polynomial>(rows, Polynomial::zero(R)));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
        return t;
    };

    const long e = -twist;
    std::vector<long> gj = dual_shifts(static_cast<int>(j));

    long dim_gj = 0;
    for (long b : gj) {
        long deg = e - b;
        if (deg >= 0) {
            mpz_class cnt = 1; // C(deg + n, n)
            for (long k = 1; k <= n; ++k) cnt = cnt * (deg + k) / k;
            dim_gj += cnt.get_si();
        }
    }

    std::size_t rank_out = 0;
    if (j < pd) {
        DenseMatrix out_piece = graded_piece_matrix(R, gj, dual_shifts(static_cast<int>(j + 1)),
                                                    transpose(static_cast<int>(j + 1)), e);
        // note: graded_piece_matrix(src=G^j, dst=G^{j+1}); entries[r][c] with
        // r over dst; transpose(j+1) is dst x src shaped already
        rank_out = matrix_rank(R.field(), std::move(out_piece));
    }
    std::size_t rank_in = 0;
    if (j >= 1) {
        DenseMatrix in_piece = graded_piece_matrix(R, dual_shifts(static_cast<int>(j - 1)), gj,
                                                   transpose(static_cast<int>(j)), e);
        rank_in = matrix_rank(R.field(), std::move(in_piece));
    }
    long ker = dim_gj - static_cast<long>(rank_out);
    return mpz_class(ker - static_cast<long>(rank_in));
}

mpz_class CohomologyEngine::euler_characteristic(long twist) const {
    mpz_class chi = 0;
    for (int i = 0; i <= dim_x_; ++i) {
        mpz_class v = h(i, twist);
        chi += (i % 2 == 0) ? v : -v;
    }
    return chi;
}

mpz_class sheaf_cohomology_dim(const Ideal& I, int i, long twist, bool saturate_first,
                               const GroebnerOptions& opts) {
    return CohomologyEngine(I, saturate_first, opts).h(i, twist);
}

const mpz_class& CohomologyTable::at(int i, long d) const {
    auto it = h.find({i, d});
    if (it == h.end())
        throw DomainError("cohomology table missing entry h^" + std::to_string(i) +
                          "(O(" + std::to_string(d) + "))");
    return it->second;
}

mpz_class CohomologyTable::value_or_zero(int i, long d) const {
    if (i < 0 || i > dim_x) {
        if (d < dmin || d > dmax)
            throw DomainError("cohomology table missing twist " + std::to_string(d));
        return 0;
    }
    return at(i, d);
}

CohomologyTable cohomology_table(const Ideal& I, long dmin, long dmax, bool saturate_first,
                                 const GroebnerOptions& opts) {
    CohomologyEngine eng(I, saturate_first, opts);
    eng.resolution(); // materialize before the parallel sweep
    eng.saturated_ideal().basis(opts);
    CohomologyTable tab;
    tab.dim_x = eng.dim_x();
    tab.dmin = dmin;
    tab.dmax = dmax;
    if (dmax < dmin) return tab;

    struct Cell { int i; long d; };
    std::vector<Cell> cells;
    for (int i = 0; i <= tab.dim_x; ++i)
        for (long d = dmin; d <= dmax; ++d) cells.push_back({i, d});
    std::vector<mpz_class> vals(cells.size());
    #pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_limit())
    for (long k = 0; k < static_cast<long>(cells.size()); ++k)
        vals[static_cast<std::size_t>(k)] =
            eng.h(cells[static_cast<std::size_t>(k)].i, cells[static_cast<std::size_t>(k)].d);
    for (std::size_t k = 0; k < cells.size(); ++k)
        tab.h[{cells[k].i, cells[k].d}] = vals[k];
    return tab;
}

mpz_class kunneth_dim(const CohomologyTable& V, const CohomologyTable& W, int i, long d) {
    mpz_class total = 0;
    for (int a = 0; a <= i; ++a) {
        int b = i - a;
        if (a > V.dim_x || b > W.dim_x) continue;
        total += V.at(a, d) * W.at(b, d);
    }
    return total;
}

} // namespace conevanish
