#ifndef CONEVANISH_COHOMOLOGY_HPP
#define CONEVANISH_COHOMOLOGY_HPP

#include "conevanish/resolution.hpp"

namespace conevanish {

// Cohomology dimensions h^i(X, O_X(d)) for X = Proj S/I in P^n:
//   i = 0 from the Hilbert function of the saturated ideal,
//   i >= 1 by graded local duality, h^i = dim_k Ext_S^{n-i}(S/I, S(-n-1))_{-d},
// with the Ext pieces read off the dualized minimal free resolution by exact
// linear algebra.
class CohomologyEngine {
public:
    explicit CohomologyEngine(const Ideal& I, bool saturate_first = false,
                              const GroebnerOptions& opts = {});

    int dim_x() const { return dim_x_; }
    const Ideal& saturated_ideal() const { return I_; }
    const Resolution& resolution() const;

    mpz_class h(int i, long twist) const;
    mpz_class euler_characteristic(long twist) const;

private:
    Ideal I_; // saturated
    GroebnerOptions opts_;
    int dim_x_ = -1;
    mutable std::shared_ptr<Resolution> res_;
    mutable std::mutex mu_;
};

mpz_class sheaf_cohomology_dim(const Ideal& I, int i, long twist,
                               bool saturate_first = false, const GroebnerOptions& opts = {});

// h^a(O(d)) for a in [0, dimX], d in [dmin, dmax]
struct CohomologyTable {
    int dim_x = 0;
    long dmin = 0, dmax = -1;
    std::map<std::pair<int, long>, mpz_class> h;

    const mpz_class& at(int i, long d) const; // throws DomainError if missing
    mpz_class value_or_zero(int i, long d) const; // 0 for i outside [0, dimX], throws if d missing
};

CohomologyTable cohomology_table(const Ideal& I, long dmin, long dmax,
                                 bool saturate_first = false, const GroebnerOptions& opts = {});

// dim H^i(V x W, O(d,d)) = sum_{a+b=i} h^a(V,O(d)) h^b(W,O(d))
mpz_class kunneth_dim(const CohomologyTable& V, const CohomologyTable& W, int i, long d);

} // namespace conevanish

#endif
