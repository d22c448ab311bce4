#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksv/hilbert.hpp"

using namespace ksv;

namespace {

RingPtr ring_xy(Field f = field_Q()) { return make_ring({"x", "y"}, {1, 1}, f); }

Polynomial parse_mono(const RingPtr& r, std::initializer_list<int> exps, long long c) {
    return Polynomial::monomial(r, Exps(exps), FieldElement::make(r->field, c));
}

Exps lead_of(const Polynomial& g, const MonomialOrder& ord) {
    const Exps* best = nullptr;
    for (const auto& [e, c] : g.terms())
        if (!best || ord.compare(e, *best) > 0) best = &e;
    REQUIRE(best != nullptr);
    return *best;
}

} // namespace

TEST_CASE("groebner basis of a Buchberger classic") {
    // I = (x^2, xy + y^2), grevlex x > y: basis {x^2, xy + y^2, y^3}
    auto r = ring_xy();
    Polynomial x2 = parse_mono(r, {2, 0}, 1);
    Polynomial xy_y2 = parse_mono(r, {1, 1}, 1) + parse_mono(r, {0, 2}, 1);
    HomogeneousIdeal I(r, {x2, xy_y2});
    auto gb = I.groebner();
    REQUIRE(gb.size() == 3);
    std::vector<std::string> strs;
    for (const auto& g : gb) strs.push_back(g.str());
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"x*y + y^2", "x^2", "y^3"});
}

TEST_CASE("principal ideal and normal form membership") {
    auto S = make_chi_ring(2, field_Q());
    Polynomial chi1 = Polynomial::variable(S, 0);
    HomogeneousIdeal I(S, {chi1});
    CHECK(I.groebner().size() == 1);
    CHECK(I.groebner()[0].str() == "chi1");
    CHECK(I.contains(chi1 * chi1));
    CHECK_FALSE(I.contains(Polynomial::variable(S, 1)));
}

TEST_CASE("inhomogeneous generator rejected") {
    auto r = ring_xy();
    Polynomial f = parse_mono(r, {2, 0}, 1) + parse_mono(r, {0, 1}, 1);
    CHECK_THROWS_AS(HomogeneousIdeal(r, {f}), Error);
}

TEST_CASE("buchberger criterion holds on output") {
    // every S-polynomial of the returned basis reduces to zero
    std::mt19937 rng(7);
    auto random_ideal = [&](const RingPtr& r) {
        std::uniform_int_distribution<int> nd(1, 3), ed(0, 2), cd(1, 4);
        std::vector<Polynomial> gens;
        int n = nd(rng);
        for (int i = 0; i < n; ++i) {
            Polynomial f(r);
            int terms = nd(rng);
            int deg = nd(rng);
            for (int t = 0; t < terms; ++t) {
                Exps e(r->nvars(), 0);
                int left = deg;
                for (size_t v = 0; v + 1 < r->nvars(); ++v) {
                    std::uniform_int_distribution<int> pick(0, left);
                    e[v] = pick(rng);
                    left -= e[v];
                }
                e[r->nvars() - 1] = left;
                f.add_term(e, FieldElement::make(r->field, cd(rng)));
            }
            if (!f.is_zero()) gens.push_back(f);
        }
        return gens;
    };

    auto r = make_ring({"x", "y", "z"}, {1, 1, 1}, field_Fp(5));
    MonomialOrder ord = MonomialOrder::grevlex(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto gens = random_ideal(r);
        auto gb = groebner_ideal(gens, ord, r);
        for (size_t i = 0; i < gb.size(); ++i) {
            for (size_t j = i + 1; j < gb.size(); ++j) {
                Exps li = lead_of(gb[i], ord), lj = lead_of(gb[j], ord);
                Exps l = exps_lcm(li, lj);
                Polynomial s = gb[i].times_monomial(exps_div(l, li),
                                                    gb[i].terms().at(li).inv()) -
                               gb[j].times_monomial(exps_div(l, lj),
                                                    gb[j].terms().at(lj).inv());
                CHECK(normal_form_poly(s, gb, ord, r).is_zero());
            }
            // reducedness: monic lead, no lead divides another
            CHECK(gb[i].terms().at(lead_of(gb[i], ord)).is_one());
            for (size_t j = 0; j < gb.size(); ++j)
                if (i != j) CHECK_FALSE(exps_divides(lead_of(gb[j], ord), lead_of(gb[i], ord)));
        }
    }
}

TEST_CASE("normal form kills ideal multiples") {
    // normal_form(f*g + h, I) == normal_form(h, I) whenever f in I
    std::mt19937 rng(99);
    auto S = make_chi_ring(3, field_Fp(5));
    std::uniform_int_distribution<int> cd(0, 4), ed(0, 2);
    auto rnd_poly = [&](int maxterms) {
        Polynomial f(S);
        std::uniform_int_distribution<int> td(1, maxterms);
        int terms = td(rng);
        for (int t = 0; t < terms; ++t) {
            Exps e{ed(rng), ed(rng), ed(rng)};
            f.add_term(e, FieldElement::make(S->field, cd(rng)));
        }
        return f;
    };
    int done = 0;
    while (done < 100) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            auto g = rnd_poly(3);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        MonomialOrder ord = MonomialOrder::grevlex(3);
        auto gb = groebner_ideal(gens, ord, S);
        Polynomial f = gens[0].scaled(FieldElement::make(S->field, 2)); // in I
        Polynomial g = rnd_poly(3), h = rnd_poly(3);
        CHECK(normal_form_poly(f * g + h, gb, ord, S) == normal_form_poly(h, gb, ord, S));
        ++done;
    }
}

TEST_CASE("eliminate: substitution and unit survival") {
    // eliminate((y1, chi1 - y1), {y1}) = (chi1)
    auto r = make_ring({"chi1", "y1"}, {2, 2}, field_Q());
    Polynomial chi1 = Polynomial::variable(r, 0), y1 = Polynomial::variable(r, 1);
    HomogeneousIdeal I(r, {y1, chi1 - y1});
    auto [sub, gens] = eliminate(I, {1});
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].str() == "chi1");

    HomogeneousIdeal unit(r, {Polynomial::constant(r, 1)});
    auto [sub2, gens2] = eliminate(unit, {1});
    REQUIRE(gens2.size() == 1);
    CHECK(gens2[0].str() == "1");
}

TEST_CASE("eliminate: unconstrained diagonal") {
    // eliminate((y1, z2, chi1-y1-z1, chi2-y2-z2), {y,z}) = (0)
    auto r = make_ring({"chi1", "chi2", "y1", "y2", "z1", "z2"}, {2, 2, 2, 2, 2, 2}, field_Q());
    auto v = [&](int i) { return Polynomial::variable(r, i); };
    HomogeneousIdeal I(r, {v(2), v(5), v(0) - v(2) - v(4), v(1) - v(3) - v(5)});
    auto [sub, gens] = eliminate(I, {2, 3, 4, 5});
    CHECK(gens.empty());
}

TEST_CASE("eliminate is idempotent and monotone") {
    std::mt19937 rng(3);
    auto r = make_ring({"a", "b", "c"}, {2, 2, 2}, field_Fp(5));
    std::uniform_int_distribution<int> ed(0, 2), cd(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            Exps e{ed(rng), ed(rng), ed(rng)};
            gens.push_back(Polynomial::monomial(r, e, FieldElement::make(r->field, cd(rng))));
        }
        HomogeneousIdeal I(r, gens);
        auto [sub, eg] = eliminate(I, {2});
        // idempotent: eliminating nothing from the result changes nothing
        HomogeneousIdeal J(sub, eg);
        auto [sub2, eg2] = eliminate(J, {});
        HomogeneousIdeal J2(sub2, eg2);
        CHECK(J.groebner().size() == J2.groebner().size());
        // monotone: I subset I' => elim(I) subset elim(I')
        auto bigger = gens;
        bigger.push_back(Polynomial::variable(r, 0));
        HomogeneousIdeal Ip(r, bigger);
        auto [sub3, eg3] = eliminate(Ip, {2});
        HomogeneousIdeal J3(sub3, eg3);
        for (const auto& g : J.groebner()) CHECK(J3.contains(g));
    }
}

TEST_CASE("radical membership via Rabinowitsch") {
    auto S = make_chi_ring(2, field_Q());
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    HomogeneousIdeal I(S, {chi1 * chi1});
    CHECK(radical_membership(chi1, I));
    CHECK_FALSE(radical_membership(chi2, I));
    HomogeneousIdeal J(S, {chi1 * chi1 * chi2 * chi2});
    CHECK(radical_membership(chi1 * chi2, J));
}

TEST_CASE("hilbert series of quotients") {
    auto S = make_chi_ring(2, field_Q()); // weights (2,2)
    HomogeneousIdeal zero(S, {});
    HilbertSeries h0 = hilbert_of_quotient(zero);
    CHECK(h0.proj_dim() == 1);
    CHECK(h0.dims(0, 6) == std::vector<long long>{1, 0, 2, 0, 3, 0, 4});

    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    HilbertSeries h1 = hilbert_of_quotient(HomogeneousIdeal(S, {chi1}));
    CHECK(h1.proj_dim() == 0);
    CHECK(h1.dims(0, 6) == std::vector<long long>{1, 0, 1, 0, 1, 0, 1});

    // S/(chi1^2, chi1 chi2): dims 1,2,1,1,1,... in degrees 0,2,4,6,8
    HilbertSeries h2 = hilbert_of_quotient(HomogeneousIdeal(S, {chi1 * chi1, chi1 * chi2}));
    CHECK(h2.proj_dim() == 0);
    CHECK(h2.dims(0, 8) == std::vector<long long>{1, 0, 2, 0, 1, 0, 1, 0, 1});

    // finite length: S/(chi1, chi2)
    HilbertSeries h3 = hilbert_of_quotient(HomogeneousIdeal(S, {chi1, chi2}));
    CHECK(h3.proj_dim() == -1);
    CHECK(h3.finite_length());
    CHECK(h3.total_dim() == 1);

    // zero module: S/(1)
    HilbertSeries h4 = hilbert_of_quotient(HomogeneousIdeal(S, {Polynomial::constant(S, 1)}));
    CHECK(h4.is_zero());
    CHECK(h4.proj_dim() == HilbertSeries::DIM_ZERO);
}

TEST_CASE("hilbert series agrees with brute-force counts") {
    std::mt19937 rng(11);
    auto S = make_chi_ring(3, field_Fp(5));
    std::uniform_int_distribution<int> ed(0, 2), nd(1, 3), cd(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        int n = nd(rng);
        for (int i = 0; i < n; ++i) {
            Polynomial f(S);
            int terms = nd(rng);
            Exps base{ed(rng), ed(rng), ed(rng)};
            long deg = S->weighted_degree(base);
            f.add_term(base, FieldElement::make(S->field, cd(rng)));
            for (int t = 1; t < terms; ++t) {
                Exps e{ed(rng), ed(rng), ed(rng)};
                if (S->weighted_degree(e) == deg) f.add_term(e, FieldElement::make(S->field, cd(rng)));
            }
            if (!f.is_zero()) gens.push_back(f);
        }
        HomogeneousIdeal I(S, gens);
        HilbertSeries hs = hilbert_of_quotient(I);
        for (int d = 0; d <= 12; ++d)
            CHECK(hs.dim_at(d) == quotient_dim_bruteforce(I, d));
    }
}

TEST_CASE("ideal intersection") {
    auto S = make_chi_ring(2, field_Q());
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    HomogeneousIdeal I(S, {chi1});
    HomogeneousIdeal J(S, {chi2});
    HomogeneousIdeal K = ideal_intersect(I, J);
    CHECK(K.contains(chi1 * chi2));
    CHECK_FALSE(K.contains(chi1));
    CHECK_FALSE(K.contains(chi2));
}
