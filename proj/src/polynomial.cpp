#include "germ/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace germ {

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    TermMap t;
    if (c != 0) t.emplace(Monomial(ring->arity()), c);
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->arity()) throw error("variable index out of range");
    Monomial m(ring->arity());
    m[index] = 1;
    TermMap t;
    t.emplace(std::move(m), mpq_class(1));
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const mpq_class& c) {
    if (m.size() != ring->arity()) throw error("monomial arity mismatch");
    TermMap t;
    if (c != 0) t.emplace(std::move(m), c);
    return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class Polynomial::constant_term() const {
    auto it = terms_.find(Monomial(ring_->arity()));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "add");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "sub");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "mul");
    Polynomial r(ring_, {});
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r(*this);
    for (auto& [m, co] : r.terms_) co *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "eq");
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base(*this);
    while (n > 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return is_zero() ? -1 : d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    int d = degree_in(var);
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d, -1) + 1), zero(ring_));
    for (const auto& [m, c] : terms_) {
        Monomial stripped = m;
        int k = stripped[var];
        stripped[var] = 0;
        out[static_cast<std::size_t>(k)].add_term(stripped, c);
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(ring_, {});
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->arity())
        throw error("substitute: expected " + std::to_string(ring_->arity()) + " images");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    for (const auto& im : images) check_same_ring(target, im.ring(), "substitute");
    // power cache per variable
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    Polynomial r = zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::substitute_var(std::size_t var, const Polynomial& image) const {
    check_same_ring(ring_, image.ring(), "substitute_var");
    std::vector<Polynomial> images;
    images.reserve(ring_->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i)
        images.push_back(i == var ? image : variable(ring_, i));
    return substitute(images);
}

Polynomial Polynomial::map_ring(const RingPtr& new_ring, const std::vector<int>& var_map) const {
    if (var_map.size() != ring_->arity()) throw error("map_ring: bad variable map");
    Polynomial r = zero(new_ring);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_ring->arity());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] < 0)
                throw error("map_ring: variable '" + ring_->variable(i) + "' has no image");
            nm[static_cast<std::size_t>(var_map[i])] = m[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

mpq_class Polynomial::content() const {
    if (terms_.empty()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    mpq_class c = content();
    if (lead_coeff(MonomialOrder::degrevlex()) < 0) c = -c;
    return *this * mpq_class(1 / c);
}

const Monomial& Polynomial::lead_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw error("lead_monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || order.greater(m, *best)) best = &m;
    return *best;
}

const mpq_class& Polynomial::lead_coeff(const MonomialOrder& order) const {
    return terms_.at(lead_monomial(order));
}

int Polynomial::ecart(const MonomialOrder& order) const {
    return total_degree() - lead_monomial(order).total_degree();
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring(), "exact_div");
    if (b.is_zero()) throw error("exact_div: division by zero");
    const MonomialOrder ord = MonomialOrder::degrevlex();
    const Monomial& lmb = b.lead_monomial(ord);
    const mpq_class& lcb = b.lead_coeff(ord);
    Polynomial r(a), q = zero(a.ring());
    while (!r.is_zero()) {
        const Monomial& lmr = r.lead_monomial(ord);
        if (!lmb.divides(lmr))
            throw error("exact_div: division is not exact");
        mpq_class c = r.lead_coeff(ord) / lcb;
        Polynomial t = term(a.ring(), lmr / lmb, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace {

std::string monomial_str(const VariableRing& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.variable(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // collect terms degrevlex-descending for stable output
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        mpq_class c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono = monomial_str(*ring_, t->first);
        if (mono.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono;
        } else {
            os << c.get_str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace germ
