#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>

#include "germ/groebner.hpp"

namespace germ {

/// Whether an ideal-theoretic question is asked in the polynomial ring
/// (global) or in the local ring at the origin.
enum class Mode { Global, Local };

inline MonomialOrder order_for(Mode m) {
    return m == Mode::Local ? MonomialOrder::local() : MonomialOrder::degrevlex();
}

/// Ideal given by generators. Equality is mathematical ideal equality, never
/// generator-list equality. Bases are cached per order; caches are guarded by
/// a mutex and never affect mathematical results.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(const RingPtr& ring) {
        return Ideal(ring, {Polynomial::constant(ring, 1)});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_no_generators() const { return gens_.empty(); }

    const GroebnerBasis& basis(const MonomialOrder& order) const;
    const GroebnerBasis& basis(Mode mode) const { return basis(order_for(mode)); }

    bool is_unit(Mode mode) const { return basis(mode).is_unit(); }

    /// Generators replaced by the basis elements for the given mode; the
    /// mathematical value is unchanged.
    Ideal simplified(Mode mode = Mode::Global) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::unordered_map<std::string, GroebnerBasis> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);

/// I ∩ J via elimination of an auxiliary variable from t·I + (1-t)·J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// I ∩ k[vars \ eliminated], as an ideal of the original ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);

/// Like eliminate, but lands in a fresh ring on the kept variables.
Ideal project(const Ideal& I, const std::vector<std::size_t>& keep_vars);

bool contains(const Ideal& I, const Polynomial& p, Mode mode);
bool equals(const Ideal& a, const Ideal& b, Mode mode);
bool is_subideal(const Ideal& a, const Ideal& b, Mode mode);  // a ⊆ b

/// True iff p vanishes on V(I) (Rabinowitsch trick: 1 ∈ I + <1 - z·p>).
bool radical_membership(const Ideal& I, const Polynomial& p);

/// Krull dimension of the quotient; -1 for the unit ideal (empty germ).
int dimension(const Ideal& I, Mode mode);

/// Vector-space dimension of the quotient; nullopt when infinite.
std::optional<long> colength(const Ideal& I, Mode mode);

/// Ideal generated by the images of the generators under substitution of the
/// ring variables by `images` (living in a common source ring).
Ideal pullback(const Ideal& I, const std::vector<Polynomial>& images);

}  // namespace germ
