#include "conevanish/polynomial.hpp"

#include <algorithm>

namespace conevanish {

Polynomial Polynomial::one(const PolyRing& r) { return constant(r, r.field().one()); }

Polynomial Polynomial::constant(const PolyRing& r, const Scalar& c) {
    Polynomial p(r);
    if (!r.field().is_zero(c)) p.terms_.push_back({Monomial(r.nvars()), c});
    return p;
}

Polynomial Polynomial::variable(const PolyRing& r, std::size_t i, std::uint32_t e) {
    if (i >= r.nvars()) throw DomainError("variable index out of range");
    Monomial m(r.nvars());
    if (e == 0) return one(r);
    std::vector<std::uint32_t> exps(r.nvars(), 0);
    exps[i] = e;
    Polynomial p(r);
    p.terms_.push_back({Monomial(std::move(exps)), r.field().one()});
    return p;
}

Polynomial Polynomial::monomial_term(const PolyRing& r, Monomial m, Scalar c) {
    Polynomial p(r);
    if (m.nvars() != r.nvars()) throw RingMismatchError("monomial arity mismatch");
    if (!r.field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const PolyRing& r, std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return r.compare(a.mono, b.mono) > 0;
    });
    Polynomial p(r);
    const Field& F = r.field();
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
            if (F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::from_ordered_terms(const PolyRing& r, std::vector<Term> terms) {
    Polynomial p(r);
    p.terms_ = std::move(terms);
    return p;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw DomainError("lead term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::tail() const {
    Polynomial r(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (ring_ != o.ring_) throw RingMismatchError("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const Field& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    const Field& F = ring_.field();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    // merge directly instead of building -o
    check_same_ring(o);
    const Field& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back({o.terms_[j].mono, F.neg(o.terms_[j].coeff)});
            ++j;
        } else {
            Scalar s = F.sub(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        r.terms_.push_back({o.terms_[j].mono, F.neg(o.terms_[j].coeff)});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    const Field& F = ring_.field();
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prods.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const Field& F = ring_.field();
    if (F.is_zero(c)) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = one(ring_);
    for (std::uint32_t k = 0; k < e; ++k) r = r * *this;
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const Field& F = ring_.field();
    if (F.is_one(terms_[0].coeff)) return *this;
    return scaled(F.inv(terms_[0].coeff));
}

Polynomial Polynomial::axpy(const Scalar& c, const Monomial& m, const Polynomial& g) const {
    check_same_ring(g);
    const Field& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        int cmp = ring_.compare(terms_[i].mono, gm);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back({std::move(gm), F.neg(F.mul(c, g.terms_[j].coeff))});
            ++j;
        } else {
            Scalar s = F.sub(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
            if (!F.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        r.terms_.push_back({g.terms_[j].mono * m, F.neg(F.mul(c, g.terms_[j].coeff))});
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_.field();
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !F.eq(terms_[i].coeff, o.terms_[i].coeff))
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = ring_.field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = F.to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (first) {
            out += negative ? "-" : "";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.var(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

} // namespace conevanish
