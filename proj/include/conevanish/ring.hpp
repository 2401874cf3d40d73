#ifndef CONEVANISH_RING_HPP
#define CONEVANISH_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "conevanish/field.hpp"
#include "conevanish/monomial.hpp"

namespace conevanish {

// Declaration of a polynomial ring: coefficient field, ordered variable
// names, monomial order. Cheap to copy (shared immutable payload); equality
// is structural, so independently parsed declarations of the same ring
// compare equal.
class PolyRing {
public:
    PolyRing() = default;
    PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

    const Field& field() const { return d_->field; }
    const MonomialOrder& order() const { return d_->order; }
    std::size_t nvars() const { return d_->vars.size(); }
    const std::string& var(std::size_t i) const { return d_->vars[i]; }
    const std::vector<std::string>& vars() const { return d_->vars; }

    // index of a variable name, or -1
    int var_index(const std::string& name) const;

    int compare(const Monomial& a, const Monomial& b) const { return d_->order.compare(a, b); }

    bool operator==(const PolyRing& o) const;
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

    // "ring Q[x,y] grevlex"
    std::string to_string() const;

    explicit operator bool() const { return static_cast<bool>(d_); }

private:
    struct Data {
        Field field = Field::rationals();
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> d_;
};

} // namespace conevanish

#endif
