#include "conevanish/ideal.hpp"

#include <algorithm>

namespace conevanish {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens) {
    auto s = std::make_shared<State>();
    for (auto& g : gens) {
        if (g.ring() != ring) throw RingMismatchError("generator outside ideal ring");
        if (!g.is_zero()) s->gens.push_back(std::move(g));
    }
    s->ring = std::move(ring);
    s_ = std::move(s);
}

const GroebnerResult& Ideal::groebner(const GroebnerOptions& opts) const {
    {
        std::lock_guard<std::mutex> lock(s_->mu);
        if (s_->gb) return *s_->gb;
    }
    GroebnerOptions o = opts;
    o.allow_partial = false;
    GroebnerResult res = groebner_basis(s_->ring, s_->gens, o);
    std::lock_guard<std::mutex> lock(s_->mu);
    if (!s_->gb) s_->gb = std::make_shared<const GroebnerResult>(std::move(res));
    return *s_->gb;
}

bool Ideal::is_unit_ideal(const GroebnerOptions& opts) const {
    const auto& B = basis(opts);
    return B.size() == 1 && B[0].is_constant() && !B[0].is_zero();
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : s_->gens)
        if (!g.is_homogeneous()) return false;
    return true;
}

long Ideal::max_generator_degree() const {
    long d = -1;
    for (const auto& g : s_->gens) d = std::max(d, g.degree());
    return d;
}

std::string Ideal::to_string() const {
    std::string out = "(";
    const auto& gs = s_->gens;
    if (gs.empty()) out += "0";
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) out += ", ";
        out += gs[i].to_string();
    }
    return out + ")";
}

std::vector<Polynomial> canonical_sorted_gens(const Ideal& I) {
    std::vector<Polynomial> gs = I.gens();
    const PolyRing& R = I.ring();
    std::sort(gs.begin(), gs.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = R.compare(a.lead_monomial(), b.lead_monomial());
        if (c) return c < 0;
        return a.to_string() < b.to_string();
    });
    return gs;
}

} // namespace conevanish
