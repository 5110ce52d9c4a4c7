#include "germ/ring.hpp"

#include <set>

namespace germ {

VariableRing::VariableRing(std::string name, std::vector<std::string> variables)
    : name_(std::move(name)), vars_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty())
            throw error("ring '" + name_ + "': empty variable name");
        if (!seen.insert(v).second)
            throw error("ring '" + name_ + "': duplicate variable '" + v + "'");
    }
}

int VariableRing::index_of(const std::string& var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

bool VariableRing::same_as(const VariableRing& other) const {
    return this == &other || vars_ == other.vars_;
}

RingPtr VariableRing::make(std::string name, std::vector<std::string> variables) {
    return std::make_shared<VariableRing>(std::move(name), std::move(variables));
}

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!a || !b || !a->same_as(*b))
        throw error(std::string(where) + ": ring mismatch ('" + (a ? a->name() : "?") +
                    "' vs '" + (b ? b->name() : "?") + "')");
}

}  // namespace germ
