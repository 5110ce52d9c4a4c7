#include "germ/order.hpp"

namespace germ {

// Compare a[lo..hi) against b[lo..hi) under a primitive (non-block) order.
int MonomialOrder::cmp_range(Kind k, const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) {
    switch (k) {
        case Kind::Lex: {
            for (std::size_t i = lo; i < hi; ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        }
        case Kind::DegRevLex:
        case Kind::NegDegRevLex: {
            int da = 0, db = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                da += a[i];
                db += b[i];
            }
            int sign = (k == Kind::NegDegRevLex) ? -1 : 1;
            if (da != db) return (da > db ? 1 : -1) * sign;
            // revlex tie-break: last differing exponent, smaller wins
            for (std::size_t i = hi; i-- > lo;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case Kind::Block:
            break;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != Kind::Block) return cmp_range(kind_, a, b, 0, a.size());
    int c = cmp_range(Kind::DegRevLex, a, b, 0, nelim_);
    if (c != 0) return c;
    return cmp_range(inner_, a, b, nelim_, a.size());
}

std::string MonomialOrder::key() const {
    switch (kind_) {
        case Kind::DegRevLex: return "dp";
        case Kind::Lex: return "lp";
        case Kind::NegDegRevLex: return "ds";
        case Kind::Block: {
            std::string inner = (inner_ == Kind::NegDegRevLex) ? "ds"
                                : (inner_ == Kind::Lex)        ? "lp"
                                                               : "dp";
            return "block" + std::to_string(nelim_) + "," + inner;
        }
    }
    return "?";
}

}  // namespace germ
