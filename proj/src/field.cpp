#include "conevanish/field.hpp"

namespace conevanish {

bool Field::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {
    if (kind_ == FieldKind::prime) {
        // floor(2^64 / p) without 128-bit division at runtime
        barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_);
    }
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        throw DomainError("prime field characteristic must be < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    return Field(FieldKind::prime, p);
}

std::string Field::name() const {
    return kind_ == FieldKind::rationals ? std::string("Q") : "F" + std::to_string(p_);
}

std::uint32_t Field::reduce_mul(std::uint64_t x) const {
    // Barrett: q = floor(x * barrett_ / 2^64) differs from floor(x/p) by at most 2.
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    r -= p_ & -static_cast<std::uint64_t>(r >= p_);
    r -= p_ & -static_cast<std::uint64_t>(r >= p_);
    return static_cast<std::uint32_t>(r);
}

Scalar Field::zero() const {
    return kind_ == FieldKind::prime ? Scalar(std::uint32_t{0}) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
    return kind_ == FieldKind::prime ? Scalar(std::uint32_t{1}) : Scalar(mpq_class(1));
}

Scalar Field::from_int(long v) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(v));
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(v));
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Scalar(static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = static_cast<std::uint64_t>(a.residue()) + b.residue();
        if (s >= p_) s -= p_;
        return Scalar(static_cast<std::uint32_t>(s));
    }
    return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = static_cast<std::uint64_t>(a.residue()) + p_ - b.residue();
        if (s >= p_) s -= p_;
        return Scalar(static_cast<std::uint32_t>(s));
    }
    return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime)
        return Scalar(reduce_mul(static_cast<std::uint64_t>(a.residue()) * b.residue()));
    return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::prime)
        return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
    return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw DomainError("division by zero");
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(1 / a.rational()));
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p_, newr = a.residue();
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += p_;
    return Scalar(static_cast<std::uint32_t>(t));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const {
    return kind_ == FieldKind::prime ? a.residue() == 0 : a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
    return kind_ == FieldKind::prime ? a.residue() == 1 : a.rational() == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    return kind_ == FieldKind::prime ? a.residue() == b.residue()
                                     : a.rational() == b.rational();
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return std::to_string(a.residue());
    mpq_class q = a.rational();
    q.canonicalize();
    return q.get_str();
}

} // namespace conevanish
