#include "ksv/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ksv {

long PolyRing::weighted_degree(const Exps& e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += long(e[i]) * weights[i];
    return d;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return int(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights, Field field) {
    if (vars.size() != weights.size()) throw Error("ring: one weight per variable required");
    for (int w : weights)
        if (w <= 0) throw Error("ring: weights must be positive");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error("ring: duplicate variable " + vars[i]);
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->weights = std::move(weights);
    r->field = field;
    return r;
}

RingPtr make_chi_ring(int c, Field field, int weight, const std::string& stem) {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int i = 1; i <= c; ++i) {
        vars.push_back(stem + std::to_string(i));
        weights.push_back(weight);
    }
    return make_ring(std::move(vars), std::move(weights), field);
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || !(*a == *b)) throw Error("operands live in different rings");
}

MonomialOrder MonomialOrder::grevlex(size_t nvars) {
    MonomialOrder o;
    o.blocks.emplace_back();
    for (size_t i = 0; i < nvars; ++i) o.blocks[0].push_back(int(i));
    return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& elim_vars, size_t nvars) {
    std::vector<bool> in_elim(nvars, false);
    for (int v : elim_vars) {
        if (v < 0 || size_t(v) >= nvars) throw Error("elimination block variable out of range");
        in_elim[v] = true;
    }
    MonomialOrder o;
    o.blocks.resize(2);
    for (size_t i = 0; i < nvars; ++i) o.blocks[in_elim[i] ? 0 : 1].push_back(int(i));
    if (o.blocks[1].empty()) o.blocks.pop_back();
    return o;
}

int MonomialOrder::compare(const Exps& a, const Exps& b) const {
    for (const auto& blk : blocks) {
        long da = 0, db = 0;
        for (int v : blk) {
            da += a[v];
            db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        // grevlex tie-break: last nonzero entry of a-b negative => a greater
        for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
            int d = a[*it] - b[*it];
            if (d != 0) return d < 0 ? 1 : -1;
        }
    }
    return 0;
}

Polynomial Polynomial::constant(const RingPtr& ring, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(Exps(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long long c) {
    return constant(ring, FieldElement::make(ring->field, c));
}

Polynomial Polynomial::variable(const RingPtr& ring, int i, int power) {
    if (i < 0 || size_t(i) >= ring->nvars()) throw Error("variable index out of range");
    Exps e(ring->nvars(), 0);
    e[i] = power;
    return monomial(ring, e, FieldElement::make(ring->field, 1));
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Exps& e, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exps& e, const FieldElement& c) {
    if (c.is_zero()) return;
    if (e.size() != ring_->nvars()) throw Error("exponent vector has wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Exps& e, const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(exps_mul(m, e), k * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exps_mul(e1, e2), c1 * c2);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ring_ && o.ring_ && *ring_ == *o.ring_ && terms_ == o.terms_;
}

bool Polynomial::is_homogeneous(long* degree) const {
    if (terms_.empty()) return true;
    long d = ring_->weighted_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (ring_->weighted_degree(e) != d) return false;
    if (degree) *degree = d;
    return true;
}

long Polynomial::degree_bound() const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, ring_->weighted_degree(e));
    return d;
}

long Polynomial::plain_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exps_total(e));
    return d;
}

FieldElement Polynomial::constant_term() const {
    Exps z(ring_->nvars(), 0);
    auto it = terms_.find(z);
    if (it == terms_.end()) return FieldElement::make(ring_->field, 0);
    return it->second;
}

bool Polynomial::has_constant_term() const { return !constant_term().is_zero(); }

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != ring_->nvars()) throw Error("evaluation point has wrong length");
    FieldElement acc = FieldElement::make(ring_->field, 0);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= point[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
    if (var_map.size() != ring_->nvars()) throw Error("variable map has wrong length");
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exps ne(target->nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            int t = var_map[i];
            if (t < 0 || size_t(t) >= target->nvars())
                throw Error("variable map target out of range");
            ne[t] += e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // list terms grevlex-descending for stable output
    std::vector<const Exps*> order;
    for (const auto& [e, c] : terms_) order.push_back(&e);
    MonomialOrder g = MonomialOrder::grevlex(ring_->nvars());
    std::sort(order.begin(), order.end(),
              [&](const Exps* a, const Exps* b) { return g.compare(*a, *b) > 0; });
    std::ostringstream out;
    bool first = true;
    for (const Exps* e : order) {
        const FieldElement& c = terms_.at(*e);
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        first = false;
        bool any_var = exps_total(*e) > 0;
        if (!any_var || cs != "1") {
            out << cs;
            if (any_var) out << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << ring_->vars[i];
            if ((*e)[i] > 1) out << "^" << (*e)[i];
        }
    }
    return out.str();
}

Exps exps_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool exps_divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_div(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw Error("monomial division underflow");
    }
    return r;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

long exps_total(const Exps& a) {
    long t = 0;
    for (int x : a) t += x;
    return t;
}

} // namespace ksv
