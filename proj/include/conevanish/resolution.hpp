#ifndef CONEVANISH_RESOLUTION_HPP
#define CONEVANISH_RESOLUTION_HPP

#include <map>

#include "conevanish/hilbert.hpp"
#include "conevanish/modules.hpp"

namespace conevanish {

struct BettiTable {
    // beta[{i, j}]: minimal free resolution of S/I has F_i with beta_{i,j}
    // summands S(-j); beta_{0,0} = 1 always.
    std::map<std::pair<int, long>, long> beta;
    int length = 0; // projective dimension of S/I

    long total(int i) const;
    long regularity() const; // max j - i over nonzero entries
    std::string to_string() const;
};

// Minimal graded free resolution of S/I with explicit maps.
// shifts[i] lists the twists of F_i (shifts[0] = {0}); maps[i] for i >= 1 is
// the rank(F_{i-1}) x rank(F_i) matrix of d_i : F_i -> F_{i-1}, stored as
// maps[i][row][col].
struct Resolution {
    PolyRing ring;
    std::vector<std::vector<long>> shifts;
    std::vector<std::vector<std::vector<Polynomial>>> maps;
    BettiTable betti;

    int length() const { return static_cast<int>(shifts.size()) - 1; }
};

// requires homogeneous proper I
Resolution free_resolution(const Ideal& I, const GroebnerOptions& opts = {});

bool is_cohen_macaulay(const Ideal& I, const GroebnerOptions& opts = {});
bool is_gorenstein_graded(const Ideal& I, const GroebnerOptions& opts = {});

// dimension of the degree-e piece of the map (+)S(-src) -> (+)S(-dst) given
// by `entries` (entries[row][col] homogeneous of degree src[col]-dst[row]),
// as an exact matrix over the coefficient field
struct DenseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a; // row-major

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::vector<Monomial> monomials_of_degree(const PolyRing& R, long d);

DenseMatrix graded_piece_matrix(const PolyRing& R,
                                const std::vector<long>& src_shifts,
                                const std::vector<long>& dst_shifts,
                                const std::vector<std::vector<Polynomial>>& entries,
                                long degree);

std::size_t matrix_rank(const Field& K, DenseMatrix m);

} // namespace conevanish

#endif
