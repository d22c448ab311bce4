#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksv/homology.hpp"

using namespace ksv;

namespace {

RingPtr S2(Field f = field_Q()) { return make_chi_ring(2, f); }

GradedMap row_map(const RingPtr& S, std::vector<Polynomial> entries, std::vector<int> src_degs) {
    GradedMap phi;
    phi.tgt = FreeModule{S, {0}};
    phi.src = FreeModule{S, std::move(src_degs)};
    phi.a.assign(1, std::move(entries));
    phi.check_homogeneous();
    return phi;
}

} // namespace

TEST_CASE("kernel of a regular-sequence row is the Koszul syzygy") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    GradedMap phi = row_map(S, {chi1, chi2}, {2, 2});
    GradedMap k = kernel(phi);
    REQUIRE(k.src.rank() == 1);
    // (chi2, -chi1) up to scalar
    Polynomial a = k.a[0][0], b = k.a[1][0];
    CHECK(a * chi1 + b * chi2 == Polynomial::zero(S));
    CHECK((a == chi2 || a == -chi2));
}

TEST_CASE("kernel of an injective and of a zero map") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0);
    GradedMap phi = row_map(S, {chi1}, {2});
    CHECK(kernel(phi).src.rank() == 0);

    GradedMap z;
    z.tgt = FreeModule{S, {0}};
    z.src = FreeModule{S, {0}};
    z.a.assign(1, {Polynomial::zero(S)});
    GradedMap k = kernel(z);
    CHECK(k.src.rank() == 1);
    CHECK(k.a[0][0] == Polynomial::constant(S, 1));
}

TEST_CASE("annihilators of cyclic and finite-length modules") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);

    PresentedModule m1(FreeModule{S, {0}}, {{chi1}});
    HomogeneousIdeal a1 = m1.annihilator();
    CHECK(a1.contains(chi1));
    CHECK_FALSE(a1.contains(chi2));

    PresentedModule m2(FreeModule{S, {0}}, {{chi1, chi2}});
    HomogeneousIdeal a2 = m2.annihilator();
    CHECK(a2.contains(chi1));
    CHECK(a2.contains(chi2));
    CHECK_FALSE(a2.is_unit());

    PresentedModule free1 = PresentedModule::free_module(FreeModule{S, {0}});
    CHECK(free1.annihilator().is_zero_ideal());
}

TEST_CASE("tor of a regular pair vanishes") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    PresentedModule X(FreeModule{S, {0}}, {{chi1}});
    PresentedModule Y(FreeModule{S, {0}}, {{chi2}});
    auto tors = tor_modules(X, Y, 2);
    REQUIRE(tors.size() == 3);
    // Tor_0 = S/(chi1, chi2) = k
    CHECK(tors[0].hilbert().finite_length());
    CHECK(tors[0].hilbert().total_dim() == 1);
    CHECK(tors[1].is_zero());
    CHECK(tors[2].is_zero());
}

TEST_CASE("tor of a module with itself is shifted") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0);
    PresentedModule X(FreeModule{S, {0}}, {{chi1}});
    auto tors = tor_modules(X, X, 3);
    // Tor_0 = S/(chi1), Tor_1 = S/(chi1) shifted by 2, Tor_i = 0 for i >= 2
    CHECK(tors[0].dim_at(0) == 1);
    CHECK(tors[0].dim_at(2) == 1);
    CHECK(tors[0].annihilator().contains(chi1));
    CHECK_FALSE(tors[1].is_zero());
    CHECK(tors[1].dim_at(2) == 1);
    CHECK(tors[1].dim_at(0) == 0);
    CHECK(tors[1].annihilator().contains(chi1));
    CHECK(tors[2].is_zero());
    CHECK(tors[3].is_zero());
}

TEST_CASE("tor against a free module is concentrated in degree zero") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    PresentedModule X(FreeModule{S, {0, 0}},
                      {{chi1 * chi2, chi1}, {Polynomial::zero(S), chi2}});
    PresentedModule Y = PresentedModule::free_module(FreeModule{S, {0}});
    auto tors = tor_modules(X, Y, 2);
    for (int d = 0; d <= 10; ++d) CHECK(tors[0].dim_at(d) == X.dim_at(d));
    CHECK(tors[1].is_zero());
    CHECK(tors[2].is_zero());
}

TEST_CASE("dg homology: zero differential and the cyclic example") {
    auto S = S2();
    Polynomial chi2 = Polynomial::variable(S, 1);

    FreeModule F{S, {0}};
    GradedMap zero;
    zero.src = F;
    zero.tgt = F;
    zero.shift = 1;
    zero.a.assign(1, {Polynomial::zero(S)});
    PresentedModule H = dg_homology(F, zero);
    CHECK(H.dim_at(0) == 1);
    CHECK(H.annihilator().is_zero_ideal());

    // F = S^2, gens degree 0 and 1, delta = [[0, chi2],[0,0]]
    FreeModule F2{S, {0, 1}};
    GradedMap delta;
    delta.src = F2;
    delta.tgt = F2;
    delta.shift = 1;
    delta.a = {{Polynomial::zero(S), chi2}, {Polynomial::zero(S), Polynomial::zero(S)}};
    PresentedModule H2 = dg_homology(F2, delta);
    HomogeneousIdeal ann = H2.annihilator();
    CHECK(ann.contains(chi2));
    CHECK_FALSE(ann.contains(Polynomial::variable(S, 0)));
    CHECK(H2.dim_at(0) == 1);
    CHECK(H2.dim_at(2) == 1); // k[chi1] in even degrees
    CHECK(H2.dim_at(1) == 0);
}

TEST_CASE("dg homology input checks") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0);
    FreeModule F{S, {0, 1}};
    GradedMap bad;
    bad.src = F;
    bad.tgt = F;
    bad.shift = 1;
    // delta^2 != 0: [[0, chi],[chi, 0]] is not even homogeneous per grading;
    // use degrees (0,1) with entries on both corners
    bad.a = {{Polynomial::zero(S), chi1}, {Polynomial::zero(S), Polynomial::zero(S)}};
    bad.a[1][1] = Polynomial::zero(S);
    // make an honest non-square-zero example on equal degrees... gens (0,1):
    // delta(g0) = chi * g1 has degree 0+1-1 = 0? entry degree must be
    // srcdeg - tgtdeg + 1 = 0 - 1 + 1 = 0: constant. Use constant 1.
    bad.a = {{Polynomial::zero(S), Polynomial::zero(S)},
             {Polynomial::constant(S, 1), Polynomial::zero(S)}};
    // delta(g0) = g1, delta(g1) = 0: delta^2 = 0 fine; now break it:
    GradedMap bad2 = bad;
    bad2.a[0][1] = chi1; // weighted degree 1 - 0 + 1 = 2: homogeneous, couples back
    CHECK_THROWS_WITH_AS(dg_homology(F, bad2), "not a differential: delta^2 != 0", Error);

    GradedMap inhom = bad;
    inhom.a[1][0] = Polynomial::constant(S, 1) + chi1;
    CHECK_THROWS_AS(dg_homology(F, inhom), Error);
}

TEST_CASE("rank-nullity by degree via hilbert series") {
    auto S = S2(field_Fp(5));
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    // Koszul-style delta on S(0) + S(1)^2 + S(2)
    FreeModule F{S, {0, 1, 1, 2}};
    GradedMap delta;
    delta.src = F;
    delta.tgt = F;
    delta.shift = 1;
    auto z = Polynomial::zero(S);
    delta.a = {{z, chi1, chi2, z}, {z, z, z, chi2}, {z, z, z, -chi1}, {z, z, z, z}};
    PresentedModule H = dg_homology(F, delta);
    // H should be k in degree 0 (Koszul complex is exact away from the end)
    CHECK(H.hilbert().finite_length());
    CHECK(H.hilbert().total_dim() == 1);

    // rank-nullity: dim F_d = dim Z_d + dim B_{d+1}(image in degree d+1? no:
    // im delta sits one degree up). Cross-check via the brute-force dims.
    for (int d = 0; d <= 12; ++d) CHECK(H.dim_at(d) == H.dim_at_bruteforce(d));
}

TEST_CASE("tor is symmetric at the level of hilbert series") {
    std::mt19937 rng(42);
    auto S = S2(field_Fp(5));
    std::uniform_int_distribution<int> ed(0, 2), cd(0, 4), nd(1, 2);
    auto rnd_module = [&]() {
        int ngens = nd(rng), nrels = nd(rng);
        std::vector<int> degs;
        for (int i = 0; i < ngens; ++i) degs.push_back(ed(rng));
        FreeModule F{S, degs};
        PolyMatrix rels(ngens);
        for (int j = 0; j < nrels; ++j) {
            int coldeg = 2 * ed(rng) + 2 + *std::max_element(degs.begin(), degs.end());
            for (int i = 0; i < ngens; ++i) {
                // entry degree = coldeg - degs[i], must be representable (even)
                int need = coldeg - degs[i];
                Polynomial e(S);
                if (need >= 0) {
                    for (int a = 0; 2 * a <= need; ++a) {
                        if (2 * a + (need - 2 * a) != need) continue;
                        if ((need - 2 * a) % 2 != 0) continue;
                        Exps ex{a, (need - 2 * a) / 2};
                        long dcheck = S->weighted_degree(ex);
                        if (dcheck == need)
                            e.add_term(ex, FieldElement::make(S->field, cd(rng)));
                    }
                }
                rels[i].push_back(e);
            }
        }
        return PresentedModule(F, rels);
    };
    int trials = 0;
    while (trials < 10) {
        PresentedModule X = rnd_module(), Y = rnd_module();
        auto txy = tor_modules(X, Y, 2);
        auto tyx = tor_modules(Y, X, 2);
        for (int i = 0; i <= 2; ++i)
            for (int d = 0; d <= 8; ++d) CHECK(txy[i].dim_at(d) == tyx[i].dim_at(d));
        ++trials;
    }
}

TEST_CASE("presented module hilbert vs bruteforce") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    PresentedModule M(FreeModule{S, {0, 2}},
                      {{chi1 * chi1, chi2}, {-chi2, Polynomial::constant(S, 1)}});
    for (int d = 0; d <= 12; ++d) CHECK(M.dim_at(d) == M.dim_at_bruteforce(d));
}

TEST_CASE("minimal generator degrees strip non-minimal generators") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0);
    // gens in degrees 0 and 2 with relation g1 = chi1 g0: minimal gens = {g0}
    PresentedModule M(FreeModule{S, {0, 2}}, {{chi1}, {Polynomial::constant(S, -1)}});
    auto mg = M.minimal_generator_dims();
    REQUIRE(mg.size() == 1);
    CHECK(mg.at(0) == 1);
    CHECK(M.generator_degree_bound() == 0);
}

TEST_CASE("complex minimization preserves homology") {
    auto S = S2();
    Polynomial chi1 = Polynomial::variable(S, 0), chi2 = Polynomial::variable(S, 1);
    auto z = Polynomial::zero(S);
    // C_1 = S(2) + S(0), C_0 = S(0): d = [chi1, 1]: the unit cancels everything
    FreeComplex c;
    c.ring = S;
    c.base = 0;
    c.spots = {FreeModule{S, {0}}, FreeModule{S, {2, 0}}};
    GradedMap d;
    d.src = c.spots[1];
    d.tgt = c.spots[0];
    d.shift = 0;
    d.a = {{chi1, Polynomial::constant(S, 1)}};
    c.d = {d};
    c.check();
    FreeComplex reduced = c;
    minimize_complex(reduced);
    CHECK(reduced.spots[0].rank() == 0);
    CHECK(reduced.spots[1].rank() == 1);
    for (int n = 0; n <= 1; ++n) {
        PresentedModule a = homology_at(c, n);
        PresentedModule b = homology_at(reduced, n);
        for (int deg = 0; deg <= 8; ++deg) CHECK(a.dim_at(deg) == b.dim_at(deg));
    }
}
