// Exact field arithmetic: Q (arbitrary-precision rationals) and F_p for a
// prime p < 2^31. Elements carry their field; mixing fields is a runtime error.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ksv {

// User-facing error (bad input, violated precondition, parse failure).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Prime };

struct Field {
    FieldKind kind = FieldKind::Rational;
    uint32_t p = 0; // modulus when kind == Prime

    bool operator==(const Field&) const = default;
    std::string name() const;
};

Field field_Q();
Field field_Fp(uint32_t p); // checks primality, p < 2^31

class FieldElement {
  public:
    FieldElement() : v_(mpq_class(0)) {}

    static FieldElement make(const Field& f, long long value);
    static FieldElement make_ratio(const Field& f, long long num, long long den);
    static FieldElement rational(const mpq_class& q);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Total order used only for canonical printing/sorting, not algebra.
    bool operator<(const FieldElement& o) const;

    const mpq_class& rational_value() const;
    uint32_t prime_value() const;

    std::string str() const;

  private:
    struct Fp {
        uint32_t v;
        uint32_t p;
        bool operator==(const Fp&) const = default;
    };
    std::variant<mpq_class, Fp> v_;

    explicit FieldElement(mpq_class q) : v_(std::move(q)) {}
    explicit FieldElement(Fp f) : v_(f) {}
    void check_same(const FieldElement& o) const;
};

} // namespace ksv
