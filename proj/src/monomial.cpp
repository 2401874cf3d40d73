#include "conevanish/monomial.hpp"

namespace conevanish {

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b,
                                 std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) return da < db ? -1 : 1;
    // equal degree: last nonzero entry of a - b negative => a > b
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw RingMismatchError("monomials from different rings compared");
    const std::size_t n = a.nvars();
    switch (kind) {
        case OrderKind::grevlex:
            return grevlex_range(a, b, 0, n);
        case OrderKind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
            return 0;
        case OrderKind::block: {
            std::size_t k = block_k < n ? block_k : n;
            if (int c = grevlex_range(a, b, 0, k)) return c;
            return grevlex_range(a, b, k, n);
        }
    }
    return 0;
}

} // namespace conevanish
