#pragma once

#include <cstddef>
#include <string>

#include "germ/monomial.hpp"

namespace germ {

/// Monomial orders used throughout. Global orders are well-orders with 1
/// minimal; the local order ranks 1 maximal. A block order compares the
/// leading block of variables (degrevlex) first; it is the elimination order
/// for that block.
class MonomialOrder {
public:
    enum class Kind {
        DegRevLex,      // global
        Lex,            // global
        NegDegRevLex,   // local
        Block,          // first `nelim` vars by degrevlex, rest by inner kind
    };

    MonomialOrder() : kind_(Kind::DegRevLex) {}

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder local() { return MonomialOrder(Kind::NegDegRevLex); }
    static MonomialOrder block(std::size_t nelim, Kind inner = Kind::DegRevLex) {
        MonomialOrder o(Kind::Block);
        o.nelim_ = nelim;
        o.inner_ = inner;
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t nelim() const { return nelim_; }

    bool is_global() const {
        if (kind_ == Kind::NegDegRevLex) return false;
        if (kind_ == Kind::Block) return inner_ != Kind::NegDegRevLex;
        return true;
    }

    /// Three-way compare: >0 if a ranks above b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const;

    /// Cache key; distinct orders get distinct keys.
    std::string key() const;

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    static int cmp_range(Kind k, const Monomial& a, const Monomial& b,
                         std::size_t lo, std::size_t hi);

    Kind kind_;
    std::size_t nelim_ = 0;
    Kind inner_ = Kind::DegRevLex;
};

}  // namespace germ
