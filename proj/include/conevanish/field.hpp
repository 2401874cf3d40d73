#ifndef CONEVANISH_FIELD_HPP
#define CONEVANISH_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "conevanish/errors.hpp"

namespace conevanish {

enum class FieldKind { rationals, prime };

// Exact field element. The discriminating field is not stored per element;
// all arithmetic goes through the owning Field so that the prime-field path
// stays a word-sized residue.
class Scalar {
public:
    Scalar() : v_(std::uint32_t{0}) {}
    explicit Scalar(std::uint32_t r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    mpq_class& rational() { return std::get<mpq_class>(v_); }

    bool holds_residue() const { return std::holds_alternative<std::uint32_t>(v_); }

private:
    std::variant<std::uint32_t, mpq_class> v_;
};

// Q or F_p with p < 2^31 prime. Residue arithmetic uses Barrett reduction so
// the Groebner inner loop never divides.
class Field {
public:
    static Field rationals();
    static Field prime(std::uint32_t p); // throws DomainError if p is not prime

    FieldKind kind() const { return kind_; }
    // 0 for Q, p for F_p.
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const; // throws DomainError on b == 0
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    // Reduced fraction over Q, least nonnegative residue over F_p.
    std::string to_string(const Scalar& a) const;

    static bool is_prime(std::uint32_t n);

private:
    Field(FieldKind k, std::uint32_t p);

    std::uint32_t reduce_mul(std::uint64_t x) const; // x < p^2

    FieldKind kind_;
    std::uint32_t p_ = 0;
    std::uint64_t barrett_ = 0; // floor(2^64 / p)
};

} // namespace conevanish

#endif
