#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksv/field.hpp"

using namespace ksv;

TEST_CASE("rational arithmetic is exact") {
    Field q = field_Q();
    auto half = FieldElement::make_ratio(q, 1, 2);
    auto third = FieldElement::make_ratio(q, 1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half + (-half)).is_zero());
    CHECK((half * half.inv()).is_one());
}

TEST_CASE("prime field arithmetic") {
    Field f5 = field_Fp(5);
    auto three = FieldElement::make(f5, 3);
    auto four = FieldElement::make(f5, 4);
    CHECK((three * four).str() == "2");
    CHECK(FieldElement::make(f5, 2).inv().str() == "3");
    CHECK((three + FieldElement::make(f5, 2)).is_zero());
}

TEST_CASE("error paths") {
    Field q = field_Q();
    Field f5 = field_Fp(5);
    CHECK_THROWS_AS(FieldElement::make(q, 0).inv(), Error);
    CHECK_THROWS_AS(FieldElement::make(f5, 0).inv(), Error);
    CHECK_THROWS_AS(FieldElement::make(q, 1) + FieldElement::make(f5, 1), Error);
    CHECK_THROWS_AS(FieldElement::make(field_Fp(5), 1) + FieldElement::make(field_Fp(7), 1),
                    Error);
    CHECK_THROWS_AS(field_Fp(4), Error);
    CHECK_THROWS_AS(field_Fp(1u << 31 | 1), Error);
}

TEST_CASE("randomized field axioms") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> d(-50, 50);
    std::uniform_int_distribution<long long> dpos(1, 50);

    auto run = [&](auto make_random) {
        for (int i = 0; i < 10000; ++i) {
            FieldElement a = make_random(), b = make_random(), c = make_random();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    };

    Field q = field_Q();
    run([&] { return FieldElement::make_ratio(q, d(rng), dpos(rng)); });
    Field f5 = field_Fp(5);
    run([&] { return FieldElement::make(f5, d(rng)); });
}

TEST_CASE("canonical rational form") {
    Field q = field_Q();
    auto a = FieldElement::make_ratio(q, 2, -4);
    CHECK(a.str() == "-1/2"); // denominator normalized positive, gcd-reduced
    CHECK(FieldElement::make_ratio(q, 6, 3).str() == "2");
}
