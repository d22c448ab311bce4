// Shared test utilities: small module builders and a randomized generator of
// valid dg Lambda-modules (iterated cones, sums, shifts, duals of the basics).
#pragma once

#include <random>

#include "ksv/bgg.hpp"
#include "ksv/extalg.hpp"

namespace ksv::testing {

inline Polynomial var(const RingPtr& r, int i) { return Polynomial::variable(r, i); }

// Lambda-linear degree-0 chain maps X -> Y as a basis of matrices.
inline std::vector<Matrix> chain_map_space(const DgLambdaModule& x, const DgLambdaModule& y) {
    const Field& f = x.alg.field;
    size_t nx = x.dim(), ny = y.dim();
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = 0; i < ny; ++i)
        for (size_t j = 0; j < nx; ++j)
            if (y.deg[i] == x.deg[j]) unknowns.emplace_back(i, j);
    auto uidx = [&](size_t i, size_t j) -> int {
        for (size_t k = 0; k < unknowns.size(); ++k)
            if (unknowns[k] == std::make_pair(i, j)) return int(k);
        return -1;
    };
    std::vector<std::vector<FieldElement>> rows;
    auto add_comm_rows = [&](const Matrix& ax, const Matrix& ay) {
        // F ax - ay F = 0, entrywise equations over the unknowns
        for (size_t i = 0; i < ny; ++i)
            for (size_t j = 0; j < nx; ++j) {
                std::vector<FieldElement> row(unknowns.size(), FieldElement::make(f, 0));
                bool nz = false;
                for (size_t k = 0; k < nx; ++k) {
                    int u = uidx(i, k);
                    if (u >= 0 && !ax.at(k, j).is_zero()) {
                        row[size_t(u)] += ax.at(k, j);
                        nz = true;
                    }
                }
                for (size_t k = 0; k < ny; ++k) {
                    int u = uidx(k, j);
                    if (u >= 0 && !ay.at(i, k).is_zero()) {
                        row[size_t(u)] -= ay.at(i, k);
                        nz = true;
                    }
                }
                if (nz) rows.push_back(std::move(row));
            }
    };
    add_comm_rows(x.d, y.d);
    for (int t = 0; t < x.alg.c; ++t) add_comm_rows(x.act[t], y.act[t]);
    Matrix sys(rows.size(), unknowns.size(), f);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns.size(); ++c) sys.at(r, c) = rows[r][c];
    std::vector<Matrix> out;
    for (const auto& sol : sys.kernel_basis()) {
        Matrix F(ny, nx, f);
        for (size_t k = 0; k < unknowns.size(); ++k) F.at(unknowns[k].first, unknowns[k].second) = sol[k];
        out.push_back(std::move(F));
    }
    return out;
}

// Mapping cone of a Lambda-linear degree-0 chain map.
inline DgLambdaModule mapping_cone(const DgLambdaModule& x, const DgLambdaModule& y,
                                   const Matrix& fmap) {
    const Field& f = x.alg.field;
    size_t nx = x.dim(), ny = y.dim();
    DgLambdaModule out;
    out.alg = x.alg;
    out.names = y.names;
    for (const auto& s : x.names) out.names.push_back("S" + s);
    out.deg = y.deg;
    for (int d : x.deg) out.deg.push_back(d + 1);
    Matrix D(ny + nx, ny + nx, f);
    for (size_t i = 0; i < ny; ++i)
        for (size_t j = 0; j < ny; ++j) D.at(i, j) = y.d.at(i, j);
    for (size_t i = 0; i < ny; ++i)
        for (size_t j = 0; j < nx; ++j) D.at(i, ny + j) = fmap.at(i, j);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < nx; ++j) D.at(ny + i, ny + j) = -x.d.at(i, j);
    out.d = std::move(D);
    for (int t = 0; t < x.alg.c; ++t) {
        Matrix A(ny + nx, ny + nx, f);
        for (size_t i = 0; i < ny; ++i)
            for (size_t j = 0; j < ny; ++j) A.at(i, j) = y.act[t].at(i, j);
        for (size_t i = 0; i < nx; ++i)
            for (size_t j = 0; j < nx; ++j) A.at(ny + i, ny + j) = -x.act[t].at(i, j);
        out.act.push_back(std::move(A));
    }
    return out;
}

struct RandomModules {
    std::mt19937 rng;
    ExteriorAlgebra alg;

    explicit RandomModules(const ExteriorAlgebra& a, uint32_t seed) : rng(seed), alg(a) {}

    DgLambdaModule base() {
        std::uniform_int_distribution<int> pick(0, 2 + alg.c - 1);
        int k = pick(rng);
        DgLambdaModule m;
        if (k == 0) m = trivial_module(alg);
        else if (k == 1) m = lambda_as_module(alg);
        else m = cyclic_quotient(alg, k - 2);
        std::uniform_int_distribution<int> sh(-1, 1);
        return shift(m, sh(rng));
    }

    FieldElement rnd_scalar() {
        if (alg.field.kind == FieldKind::Prime) {
            std::uniform_int_distribution<long long> d(0, alg.field.p - 1);
            return FieldElement::make(alg.field, d(rng));
        }
        std::uniform_int_distribution<long long> d(-3, 3);
        return FieldElement::make(alg.field, d(rng));
    }

    // random valid module of dimension <= maxdim
    DgLambdaModule random_module(size_t maxdim = 8) {
        DgLambdaModule m = base();
        std::uniform_int_distribution<int> steps(0, 2);
        int n = steps(rng);
        for (int s = 0; s < n; ++s) {
            std::uniform_int_distribution<int> what(0, 3);
            switch (what(rng)) {
                case 0: {
                    DgLambdaModule y = trivial_module(alg);
                    if (m.dim() + y.dim() > maxdim) break;
                    auto maps = chain_map_space(m, y);
                    Matrix F(y.dim(), m.dim(), alg.field);
                    for (const auto& b : maps) F = F + b.scaled(rnd_scalar());
                    m = mapping_cone(m, y, F);
                    break;
                }
                case 1: {
                    DgLambdaModule y = trivial_module(alg);
                    std::uniform_int_distribution<int> sh(-1, 1);
                    y = shift(y, sh(rng));
                    if (m.dim() + y.dim() > maxdim) break;
                    m = direct_sum(m, y);
                    break;
                }
                case 2: {
                    if (m.dim() + 2 > maxdim) break;
                    std::uniform_int_distribution<int> dd(0, 2);
                    m = add_contractible(m, dd(rng));
                    break;
                }
                case 3: m = dual(m); break;
            }
        }
        return m;
    }
};

} // namespace ksv::testing
