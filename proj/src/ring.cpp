#include "conevanish/ring.hpp"

#include <set>

namespace conevanish {

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
    }
    if (order.kind == OrderKind::block && order.block_k > vars.size())
        throw DomainError("block size exceeds variable count");
    auto d = std::make_shared<Data>();
    d->field = field;
    d->vars = std::move(vars);
    d->order = order;
    d_ = std::move(d);
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < d_->vars.size(); ++i)
        if (d_->vars[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::operator==(const PolyRing& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return d_->field == o.d_->field && d_->vars == o.d_->vars && d_->order == o.d_->order;
}

std::string PolyRing::to_string() const {
    std::string s = "ring " + d_->field.name() + "[";
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
        if (i) s += ",";
        s += d_->vars[i];
    }
    s += "] " + d_->order.to_string();
    return s;
}

} // namespace conevanish
