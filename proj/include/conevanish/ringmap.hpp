#ifndef CONEVANISH_RINGMAP_HPP
#define CONEVANISH_RINGMAP_HPP

#include "conevanish/polynomial.hpp"

namespace conevanish {

// Substitution homomorphism between polynomial rings over the same field,
// determined by one target image per source variable.
class RingMap {
public:
    RingMap() = default; // empty; usable only after assignment
    RingMap(PolyRing source, PolyRing target, std::vector<Polynomial> images);

    // source var i -> target var i (requires equal variable counts)
    static RingMap rename_positional(const PolyRing& source, const PolyRing& target);
    // source var -> target var of the same name (all names must exist)
    static RingMap rename_by_name(const PolyRing& source, const PolyRing& target);

    const PolyRing& source() const { return source_; }
    const PolyRing& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;

private:
    PolyRing source_, target_;
    std::vector<Polynomial> images_;
};

} // namespace conevanish

#endif
