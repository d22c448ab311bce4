// Sparse multivariate polynomials over an exact field, with per-variable
// positive even weights (weighted grading) and block/grevlex monomial orders.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ksv/field.hpp"

namespace ksv {

using Exps = std::vector<int>; // exponent vector, one entry per variable

struct PolyRing {
    std::vector<std::string> vars;
    std::vector<int> weights; // weighted degree of each variable
    Field field;

    size_t nvars() const { return vars.size(); }
    long weighted_degree(const Exps& e) const;
    bool operator==(const PolyRing& o) const {
        return vars == o.vars && weights == o.weights && field == o.field;
    }
    int var_index(const std::string& name) const; // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights, Field field);
// The standard S = k[chi1..chic], every variable of weight w (default 2).
RingPtr make_chi_ring(int c, Field field, int weight = 2, const std::string& stem = "chi");

void check_same_ring(const RingPtr& a, const RingPtr& b);

// Block order, grevlex inside each block; earlier blocks dominate.
struct MonomialOrder {
    std::vector<std::vector<int>> blocks;

    static MonomialOrder grevlex(size_t nvars);
    // Elimination order: eliminated variables form the dominant block.
    static MonomialOrder elimination(const std::vector<int>& elim_vars, size_t nvars);

    int compare(const Exps& a, const Exps& b) const; // <0, 0, >0 : a<b, a==b, a>b
    bool less(const Exps& a, const Exps& b) const { return compare(a, b) < 0; }
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const FieldElement& c);
    static Polynomial constant(const RingPtr& ring, long long c);
    static Polynomial variable(const RingPtr& ring, int i, int power = 1);
    static Polynomial monomial(const RingPtr& ring, const Exps& e, const FieldElement& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exps, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exps& e, const FieldElement& c); // merges, drops zeros

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Exps& e, const FieldElement& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Weighted degree of a homogeneous polynomial; nullopt if inhomogeneous.
    // Zero polynomial reports homogeneous of any degree (returns nullopt degree).
    bool is_homogeneous(long* degree = nullptr) const;
    long degree_bound() const;      // max weighted degree over terms (0 for 0)
    long plain_degree() const;      // max total (unweighted) degree
    FieldElement constant_term() const;
    bool has_constant_term() const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    // Maps terms through var_map into the target ring (exponents relocated).
    Polynomial map_vars(const RingPtr& target, const std::vector<int>& var_map) const;

    std::string str() const; // grevlex-descending, canonical

  private:
    RingPtr ring_;
    std::map<Exps, FieldElement> terms_; // canonical (lex on exponents), no zeros
};

Exps exps_mul(const Exps& a, const Exps& b);
bool exps_divides(const Exps& a, const Exps& b); // a | b
Exps exps_div(const Exps& a, const Exps& b);     // a / b, requires b | a
Exps exps_lcm(const Exps& a, const Exps& b);
long exps_total(const Exps& a);

} // namespace ksv
