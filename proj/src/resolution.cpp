#include "conevanish/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace conevanish {

long BettiTable::total(int i) const {
    long t = 0;
    for (const auto& [key, v] : beta)
        if (key.first == i) t += v;
    return t;
}

long BettiTable::regularity() const {
    long r = 0;
    for (const auto& [key, v] : beta)
        if (v) r = std::max(r, key.second - key.first);
    return r;
}

std::string BettiTable::to_string() const {
    std::ostringstream out;
    for (const auto& [key, v] : beta)
        out << "beta(" << key.first << "," << key.second << ") = " << v << "\n";
    out << "length = " << length << "\n";
    return out.str();
}

Resolution free_resolution(const Ideal& I, const GroebnerOptions& opts) {
    const PolyRing& R = I.ring();
    if (!I.is_homogeneous()) throw DomainError("free resolution requires a homogeneous ideal");
    if (I.is_unit_ideal(opts)) throw DomainError("free resolution of the unit ideal");

    Resolution res;
    res.ring = R;
    res.shifts.push_back({0});
    res.betti.beta[{0, 0}] = 1;

    FreeModule F0{R, {0}};
    std::vector<VecPoly> gens;
    for (const auto& g : I.gens()) {
        VecPoly v = vec_zero(F0);
        v.c[0] = g;
        gens.push_back(std::move(v));
    }
    gens = minimal_generators(F0, std::move(gens), opts);

    FreeModule F = F0;
    int level = 1;
    while (!gens.empty()) {
        std::vector<long> shifts;
        for (const auto& g : gens) shifts.push_back(vec_degree(F, g));
        std::vector<std::vector<Polynomial>> mat(F.rank(),
            std::vector<Polynomial>(gens.size(), Polynomial::zero(R)));
        for (std::size_t col = 0; col < gens.size(); ++col)
            for (std::size_t row = 0; row < F.rank(); ++row)
                mat[row][col] = gens[col].c[row];
        res.maps.push_back(std::move(mat));
        res.shifts.push_back(shifts);
        for (long s : shifts) ++res.betti.beta[{level, s}];

        std::vector<VecPoly> syz = syzygy_generators(F, gens, opts);
        FreeModule Fn{R, shifts};
        gens = minimal_generators(Fn, std::move(syz), opts);
        F = Fn;
        ++level;
        if (level > static_cast<int>(R.nvars()) + 2)
            throw DomainError("resolution exceeded the syzygy-theorem bound; internal error");
    }
    res.betti.length = res.length();
    return res;
}

bool is_cohen_macaulay(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous()) throw DomainError("Cohen-Macaulay test requires a homogeneous ideal");
    if (I.is_unit_ideal(opts)) throw DomainError("Cohen-Macaulay test on the unit ideal");
    Resolution res = free_resolution(I, opts);
    int depth = static_cast<int>(I.ring().nvars()) - res.length();
    return depth == krull_dimension(I, opts);
}

bool is_gorenstein_graded(const Ideal& I, const GroebnerOptions& opts) {
    if (!I.is_homogeneous()) throw DomainError("Gorenstein test requires a homogeneous ideal");
    if (I.is_unit_ideal(opts)) throw DomainError("Gorenstein test on the unit ideal");
    Resolution res = free_resolution(I, opts);
    int depth = static_cast<int>(I.ring().nvars()) - res.length();
    if (depth != krull_dimension(I, opts)) return false;
    return res.betti.total(res.length()) == 1;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& R, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    const std::size_t n = R.nvars();
    // lexicographic enumeration, deterministic
    std::vector<std::uint32_t> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
        if (pos + 1 == n) {
            cur[pos] = static_cast<std::uint32_t>(rem);
            out.push_back(Monomial(cur));
            return;
        }
        for (long k = rem; k >= 0; --k) {
            cur[pos] = static_cast<std::uint32_t>(k);
            self(self, pos + 1, rem - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<std::uint32_t>{}));
        return out;
    }
    rec(rec, 0, d);
    return out;
}

DenseMatrix graded_piece_matrix(const PolyRing& R,
                                const std::vector<long>& src_shifts,
                                const std::vector<long>& dst_shifts,
                                const std::vector<std::vector<Polynomial>>& entries,
                                long degree) {
    const Field& K = R.field();
    std::vector<std::vector<Monomial>> src_bases, dst_bases;
    std::size_t cols = 0, rows = 0;
    for (long s : src_shifts) {
        src_bases.push_back(monomials_of_degree(R, degree - s));
        cols += src_bases.back().size();
    }
    for (long s : dst_shifts) {
        dst_bases.push_back(monomials_of_degree(R, degree - s));
        rows += dst_bases.back().size();
    }
    // index of a monomial within a basis block (same deterministic order as
    // monomials_of_degree)
    auto index_of = [](const std::vector<Monomial>& basis, const Monomial& m) -> std::size_t {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == m) return k;
        throw DomainError("monomial outside expected graded piece");
    };

    DenseMatrix M;
    M.rows = rows;
    M.cols = cols;
    M.a.assign(rows * cols, K.zero());

    std::size_t col0 = 0;
    for (std::size_t c = 0; c < src_shifts.size(); ++c) {
        std::size_t row0 = 0;
        for (std::size_t r = 0; r < dst_shifts.size(); ++r) {
            const Polynomial& f = entries[r][c];
            if (!f.is_zero()) {
                for (std::size_t sc = 0; sc < src_bases[c].size(); ++sc) {
                    for (const auto& t : f.terms()) {
                        Monomial prod = t.mono * src_bases[c][sc];
                        std::size_t sr = index_of(dst_bases[r], prod);
                        M.at(row0 + sr, col0 + sc) = K.add(M.at(row0 + sr, col0 + sc), t.coeff);
                    }
                }
            }
            row0 += dst_bases[r].size();
        }
        col0 += src_bases[c].size();
    }
    return M;
}

std::size_t matrix_rank(const Field& K, DenseMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t r = rank; r < m.rows; ++r)
            if (!K.is_zero(m.at(r, col))) { pivot = r; break; }
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        Scalar inv = K.inv(m.at(rank, col));
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (K.is_zero(m.at(r, col))) continue;
            Scalar f = K.mul(m.at(r, col), inv);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = K.sub(m.at(r, c), K.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

} // namespace conevanish
