#include "ksv/field.hpp"

namespace ksv {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    if (s >= p) s -= p;
    return uint32_t(s);
}

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t(uint64_t(a) * b % p);
}

uint32_t mod_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

uint32_t mod_inv(uint32_t a, uint32_t p) {
    // extended Euclid; p prime, 0 < a < p
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

} // namespace

std::string Field::name() const {
    return kind == FieldKind::Rational ? "Q" : "F" + std::to_string(p);
}

Field field_Q() { return Field{FieldKind::Rational, 0}; }

Field field_Fp(uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw Error("field modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field{FieldKind::Prime, p};
}

FieldElement FieldElement::make(const Field& f, long long value) {
    if (f.kind == FieldKind::Rational) return FieldElement(mpq_class(static_cast<long>(value)));
    long long r = value % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    return FieldElement(Fp{uint32_t(r), f.p});
}

FieldElement FieldElement::make_ratio(const Field& f, long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    if (f.kind == FieldKind::Rational) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return FieldElement(q);
    }
    return make(f, num) / make(f, den);
}

FieldElement FieldElement::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(c);
}

Field FieldElement::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return field_Q();
    const Fp& f = std::get<Fp>(v_);
    return Field{FieldKind::Prime, f.p};
}

bool FieldElement::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Fp>(v_).v == 0;
}

bool FieldElement::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Fp>(v_).v == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (v_.index() != o.v_.index())
        throw Error("mixed-field operands");
    if (auto* f = std::get_if<Fp>(&v_))
        if (f->p != std::get<Fp>(o.v_).p) throw Error("mixed-field operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_))
        return FieldElement(mpq_class(*q + std::get<mpq_class>(o.v_)));
    const Fp &a = std::get<Fp>(v_), &b = std::get<Fp>(o.v_);
    return FieldElement(Fp{mod_add(a.v, b.v, a.p), a.p});
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_))
        return FieldElement(mpq_class(*q * std::get<mpq_class>(o.v_)));
    const Fp &a = std::get<Fp>(v_), &b = std::get<Fp>(o.v_);
    return FieldElement(Fp{mod_mul(a.v, b.v, a.p), a.p});
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return FieldElement(mpq_class(-*q));
    const Fp& a = std::get<Fp>(v_);
    return FieldElement(Fp{mod_neg(a.v, a.p), a.p});
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error("inversion of zero");
    if (auto* q = std::get_if<mpq_class>(&v_))
        return FieldElement(mpq_class(1 / *q));
    const Fp& a = std::get<Fp>(v_);
    return FieldElement(Fp{mod_inv(a.v, a.p), a.p});
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
    return std::get<Fp>(v_) == std::get<Fp>(o.v_);
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q < std::get<mpq_class>(o.v_);
    return std::get<Fp>(v_).v < std::get<Fp>(o.v_).v;
}

const mpq_class& FieldElement::rational_value() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw Error("not a rational");
}

uint32_t FieldElement::prime_value() const {
    if (auto* f = std::get_if<Fp>(&v_)) return f->v;
    throw Error("not a prime-field element");
}

std::string FieldElement::str() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Fp>(v_).v);
}

} // namespace ksv
