#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace germ {

/// Error raised on mathematically invalid input (ring mismatch, bad form, ...).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class VariableRing;
using RingPtr = std::shared_ptr<const VariableRing>;

/// A named polynomial ring over Q, determined by an ordered list of variables.
/// Variable identity is positional; rings with equal names and variable lists
/// are interchangeable.
class VariableRing {
public:
    VariableRing(std::string name, std::vector<std::string> variables);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const std::string& variable(std::size_t i) const { return vars_.at(i); }

    /// Index of a variable name, or -1 if absent.
    int index_of(const std::string& var) const;

    bool same_as(const VariableRing& other) const;

    static RingPtr make(std::string name, std::vector<std::string> variables);

private:
    std::string name_;
    std::vector<std::string> vars_;
};

/// Throws germ::error unless both rings are compatible.
void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace germ
