#ifndef CONEVANISH_MONOMIAL_HPP
#define CONEVANISH_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "conevanish/errors.hpp"

namespace conevanish {

// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; requires o | this
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] < r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> e_;
};

enum class OrderKind { grevlex, lex, block };

// Total multiplicative monomial order. block(k) compares the exponents of
// the first k variables by grevlex, then the remaining ones by grevlex; this
// eliminates the first k variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::uint32_t block_k = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder block(std::uint32_t k) { return {OrderKind::block, k}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::block || block_k == o.block_k);
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    std::string to_string() const {
        switch (kind) {
            case OrderKind::grevlex: return "grevlex";
            case OrderKind::lex: return "lex";
            case OrderKind::block: return "block(" + std::to_string(block_k) + ")";
        }
        return "";
    }

private:
    static int grevlex_range(const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi);
};

} // namespace conevanish

#endif
