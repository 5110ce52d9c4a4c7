#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace germ {

/// Exponent vector of fixed length (the ring arity).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t size() const { return e.size(); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }

    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Quotient, valid only when m divides *this.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    /// Storage order only (lexicographic on the exponent vector); not a
    /// monomial order.
    bool operator<(const Monomial& m) const { return e < m.e; }
};

}  // namespace germ
