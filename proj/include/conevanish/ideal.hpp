#ifndef CONEVANISH_IDEAL_HPP
#define CONEVANISH_IDEAL_HPP

#include <memory>
#include <mutex>

#include "conevanish/groebner.hpp"

namespace conevanish {

// Ideal given by a finite generator list. Copies share state; the reduced
// Groebner basis is computed on demand and cached (complete runs only), so
// concurrent use from several threads is safe.
class Ideal {
public:
    Ideal() = default;
    Ideal(PolyRing ring, std::vector<Polynomial> gens);

    static Ideal zero(const PolyRing& r) { return Ideal(r, {}); }
    static Ideal unit(const PolyRing& r) { return Ideal(r, {Polynomial::one(r)}); }

    const PolyRing& ring() const { return s_->ring; }
    const std::vector<Polynomial>& gens() const { return s_->gens; }
    bool is_zero_ideal() const { return s_->gens.empty(); }

    // Complete reduced basis or BudgetExceededError; allow_partial is ignored
    // here so the cached reference stays valid. Pipelines that want truncated
    // bases call the free groebner_basis() on gens() instead.
    const GroebnerResult& groebner(const GroebnerOptions& opts = {}) const;
    const std::vector<Polynomial>& basis(const GroebnerOptions& opts = {}) const {
        return groebner(opts).basis;
    }
    bool is_unit_ideal(const GroebnerOptions& opts = {}) const;

    bool is_homogeneous() const;
    long max_generator_degree() const; // -1 for the zero ideal

    // "(f1, f2, ...)" with generators in stored order
    std::string to_string() const;

    explicit operator bool() const { return static_cast<bool>(s_); }

private:
    struct State {
        PolyRing ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mu;
        mutable std::shared_ptr<const GroebnerResult> gb;
    };
    std::shared_ptr<State> s_;
};

// Stable serialization order for reports and input hashing: ascending total
// degree, then lead monomial, then textual form.
std::vector<Polynomial> canonical_sorted_gens(const Ideal& I);

} // namespace conevanish

#endif
