#ifndef CONEVANISH_POLYNOMIAL_HPP
#define CONEVANISH_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "conevanish/ring.hpp"

namespace conevanish {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Exact multivariate polynomial. Terms are kept strictly decreasing in the
// ring's monomial order (lead term first) with no zero coefficients, so
// equality and serialization are canonical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolyRing& r) { return Polynomial(r); }
    static Polynomial one(const PolyRing& r);
    static Polynomial constant(const PolyRing& r, const Scalar& c);
    static Polynomial variable(const PolyRing& r, std::size_t i, std::uint32_t e = 1);
    static Polynomial monomial_term(const PolyRing& r, Monomial m, Scalar c);
    // sorts, merges equal monomials, drops zeros
    static Polynomial from_terms(const PolyRing& r, std::vector<Term> terms);
    // precondition: terms strictly decreasing, coefficients nonzero
    static Polynomial from_ordered_terms(const PolyRing& r, std::vector<Term> terms);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().mono; }
    const Scalar& lead_coeff() const { return lead().coeff; }
    Polynomial tail() const; // everything after the lead term

    // max total degree; -1 for the zero polynomial
    long degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial shifted(const Monomial& m) const; // multiply by a monomial
    Polynomial pow(std::uint32_t e) const;
    Polynomial monic() const;

    // this - c * m * g, the division-step kernel; one linear merge
    Polynomial axpy(const Scalar& c, const Monomial& m, const Polynomial& g) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // canonical print: decreasing terms, reduced fractions / least residues
    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& o) const;

    PolyRing ring_;
    std::vector<Term> terms_;
};

} // namespace conevanish

#endif
