#include "conevanish/ringmap.hpp"

namespace conevanish {

RingMap::RingMap(PolyRing source, PolyRing target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.field() != target_.field())
        throw RingMismatchError("ring map requires identical coefficient fields");
    if (images_.size() != source_.nvars())
        throw DomainError("ring map needs one image per source variable");
    for (const auto& im : images_)
        if (im.ring() != target_)
            throw RingMismatchError("ring map image not in target ring");
}

RingMap RingMap::rename_positional(const PolyRing& source, const PolyRing& target) {
    if (source.nvars() != target.nvars())
        throw DomainError("positional rename requires equal variable counts");
    std::vector<Polynomial> images;
    images.reserve(source.nvars());
    for (std::size_t i = 0; i < source.nvars(); ++i)
        images.push_back(Polynomial::variable(target, i));
    return RingMap(source, target, std::move(images));
}

RingMap RingMap::rename_by_name(const PolyRing& source, const PolyRing& target) {
    std::vector<Polynomial> images;
    images.reserve(source.nvars());
    for (std::size_t i = 0; i < source.nvars(); ++i) {
        int j = target.var_index(source.var(i));
        if (j < 0)
            throw DomainError("variable '" + source.var(i) + "' missing from target ring");
        images.push_back(Polynomial::variable(target, static_cast<std::size_t>(j)));
    }
    return RingMap(source, target, std::move(images));
}

Polynomial RingMap::apply(const Polynomial& f) const {
    if (f.ring() != source_)
        throw RingMismatchError("ring map applied to polynomial outside its source");
    Polynomial acc = Polynomial::zero(target_);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target_, t.coeff);
        for (std::size_t i = 0; i < source_.nvars() && !prod.is_zero(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e) prod = prod * images_[i].pow(e);
        }
        acc = acc + prod;
    }
    return acc;
}

} // namespace conevanish
