#include "ksv/freemod.hpp"

#include <algorithm>

namespace ksv {

void GradedMap::check_shape() const {
    if (a.size() != tgt.rank()) throw Error("graded map: row count mismatch");
    for (const auto& row : a)
        if (row.size() != src.rank()) throw Error("graded map: column count mismatch");
}

void GradedMap::check_homogeneous() const {
    check_shape();
    for (size_t i = 0; i < tgt.rank(); ++i)
        for (size_t j = 0; j < src.rank(); ++j) {
            const Polynomial& e = a[i][j];
            if (e.is_zero()) continue;
            long d;
            if (!e.is_homogeneous(&d))
                throw Error("graded map: inhomogeneous entry at (" + std::to_string(i) + "," +
                            std::to_string(j) + "): " + e.str());
            if (d != src.degs[j] + shift - tgt.degs[i])
                throw Error("graded map: entry degree violates grading at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

bool GradedMap::is_zero() const {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::vector<Polynomial> GradedMap::column(size_t j) const {
    std::vector<Polynomial> col;
    for (size_t i = 0; i < tgt.rank(); ++i) col.push_back(a[i][j]);
    return col;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.src.rank() != g.tgt.rank()) throw Error("compose: shape mismatch");
    const RingPtr& ring = f.tgt.ring;
    GradedMap h;
    h.src = g.src;
    h.tgt = f.tgt;
    h.shift = f.shift + g.shift;
    h.a.assign(f.tgt.rank(), std::vector<Polynomial>(g.src.rank(), Polynomial::zero(ring)));
    for (size_t i = 0; i < f.tgt.rank(); ++i)
        for (size_t k = 0; k < f.src.rank(); ++k) {
            if (f.a[i][k].is_zero()) continue;
            for (size_t j = 0; j < g.src.rank(); ++j)
                if (!g.a[k][j].is_zero()) h.a[i][j] = h.a[i][j] + f.a[i][k] * g.a[k][j];
        }
    return h;
}

namespace {

int column_degree(const std::vector<Polynomial>& col, const std::vector<int>& tgt_degs) {
    for (size_t i = 0; i < col.size(); ++i) {
        if (col[i].is_zero()) continue;
        long d;
        if (!col[i].is_homogeneous(&d)) throw Error("inhomogeneous column entry");
        return int(d) + tgt_degs[i];
    }
    throw Error("zero column has no degree");
}

} // namespace

GradedMap kernel(const GradedMap& phi) {
    phi.check_shape();
    const RingPtr& ring = phi.src.ring;
    std::vector<std::vector<Polynomial>> cols;
    if (phi.tgt.rank() == 0 || phi.is_zero()) {
        // whole source
        for (size_t j = 0; j < phi.src.rank(); ++j) {
            std::vector<Polynomial> c(phi.src.rank(), Polynomial::zero(ring));
            c[j] = Polynomial::constant(ring, 1);
            cols.push_back(std::move(c));
        }
    } else {
        cols = kernel_columns(phi.a, ring);
    }
    GradedMap k;
    k.tgt = phi.src;
    k.shift = 0;
    std::vector<int> degs;
    k.a.assign(phi.src.rank(), std::vector<Polynomial>(cols.size(), Polynomial::zero(ring)));
    for (size_t j = 0; j < cols.size(); ++j) {
        degs.push_back(column_degree(cols[j], phi.src.degs));
        for (size_t i = 0; i < phi.src.rank(); ++i) k.a[i][j] = cols[j][i];
    }
    k.src = FreeModule{ring, degs};
    return k;
}

PresentedModule::PresentedModule(FreeModule gens, PolyMatrix relations)
    : gens_(std::move(gens)), rels_(std::move(relations)) {
    if (rels_.empty()) rels_.assign(gens_.rank(), {});
    if (rels_.size() != gens_.rank()) throw Error("presentation: row count mismatch");
    size_t cols = rels_.empty() ? 0 : rels_[0].size();
    for (const auto& row : rels_)
        if (row.size() != cols) throw Error("presentation: ragged relation matrix");
    for (size_t j = 0; j < cols; ++j) {
        bool seen = false;
        long coldeg = 0;
        for (size_t i = 0; i < gens_.rank(); ++i) {
            const Polynomial& e = rels_[i][j];
            if (e.is_zero()) continue;
            long d;
            if (!e.is_homogeneous(&d)) throw Error("presentation: inhomogeneous relation entry");
            long this_deg = d + gens_.degs[i];
            if (seen && this_deg != coldeg)
                throw Error("presentation: relation column is not homogeneous");
            coldeg = this_deg;
            seen = true;
        }
    }
}

PresentedModule PresentedModule::free_module(const FreeModule& f) {
    return PresentedModule(f, PolyMatrix(f.rank()));
}

PresentedModule PresentedModule::quotient_ring(const HomogeneousIdeal& I) {
    FreeModule f{I.ring(), {0}};
    PolyMatrix rels(1);
    for (const Polynomial& g : I.gens()) rels[0].push_back(g);
    return PresentedModule(f, rels);
}

const GroebnerBasis& PresentedModule::relation_basis() const {
    if (!rel_gb_) {
        const RingPtr& ring = gens_.ring;
        ModuleOrder ord =
            ModuleOrder::pot(MonomialOrder::grevlex(ring->nvars()), std::max<size_t>(gens_.rank(), 1));
        std::vector<Vec> gens;
        size_t cols = rels_.empty() ? 0 : rels_[0].size();
        for (size_t j = 0; j < cols; ++j) {
            std::vector<Polynomial> col;
            for (size_t i = 0; i < gens_.rank(); ++i) col.push_back(rels_[i][j]);
            Vec v = vec_from_column(col);
            if (v.empty()) continue;
            vec_sort(v, ord);
            gens.push_back(std::move(v));
        }
        rel_gb_ = buchberger(gens, ord, ring);
    }
    return *rel_gb_;
}

const HilbertSeries& PresentedModule::hilbert() const {
    if (!hilbert_) {
        const RingPtr& ring = gens_.ring;
        const GroebnerBasis& gb = relation_basis();
        // lead submodule, split by position
        std::vector<std::vector<Exps>> leads(gens_.rank());
        for (const Vec& v : gb.elems)
            if (!v.empty()) leads[v.front().mono.pos].push_back(v.front().mono.m);
        HilbertSeries hs;
        hs.weights = ring->weights;
        for (size_t i = 0; i < gens_.rank(); ++i) {
            auto ni = monomial_quotient_numerator(leads[i], hs.weights);
            for (const auto& [d, c] : ni) {
                long long& slot = hs.num[d + gens_.degs[i]];
                slot += c;
                if (slot == 0) hs.num.erase(d + gens_.degs[i]);
            }
        }
        hilbert_ = std::move(hs);
    }
    return *hilbert_;
}

bool PresentedModule::is_zero() const { return hilbert().is_zero(); }

long long PresentedModule::dim_at(int d) const { return hilbert().dim_at(d); }

HomogeneousIdeal PresentedModule::annihilator() const {
    const RingPtr& ring = gens_.ring;
    if (gens_.rank() == 0) return HomogeneousIdeal(ring, {Polynomial::constant(ring, 1)});
    size_t cols = rels_.empty() ? 0 : rels_[0].size();
    std::optional<HomogeneousIdeal> acc;
    for (size_t g = 0; g < gens_.rank(); ++g) {
        // (im rels : e_g) = first coordinates of syzygies of [e_g | rels]
        PolyMatrix m(gens_.rank(), std::vector<Polynomial>(1 + cols, Polynomial::zero(ring)));
        for (size_t i = 0; i < gens_.rank(); ++i) {
            m[i][0] = (i == g) ? Polynomial::constant(ring, 1) : Polynomial::zero(ring);
            for (size_t j = 0; j < cols; ++j) m[i][1 + j] = rels_[i][j];
        }
        auto ker = kernel_columns(m, ring);
        std::vector<Polynomial> colon_gens;
        for (const auto& col : ker)
            if (!col[0].is_zero()) colon_gens.push_back(col[0]);
        HomogeneousIdeal colon(ring, std::move(colon_gens));
        if (!acc)
            acc = std::move(colon);
        else
            acc = ideal_intersect(*acc, colon);
    }
    return *acc;
}

std::map<int, long long> PresentedModule::minimal_generator_dims() const {
    // dims of M / S^{>0} M: kill every relation entry of positive degree
    const RingPtr& ring = gens_.ring;
    const Field& f = ring->field;
    std::map<int, std::vector<size_t>> gens_by_deg;
    for (size_t i = 0; i < gens_.rank(); ++i) gens_by_deg[gens_.degs[i]].push_back(i);
    size_t cols = rels_.empty() ? 0 : rels_[0].size();
    std::map<int, long long> out;
    for (const auto& [d, idx] : gens_by_deg) {
        // relation columns whose entries on degree-d generators are constants
        std::vector<std::vector<FieldElement>> cvecs;
        for (size_t j = 0; j < cols; ++j) {
            std::vector<FieldElement> v;
            bool nonzero = false;
            for (size_t i : idx) {
                FieldElement c = rels_[i][j].constant_term();
                v.push_back(c);
                if (!c.is_zero()) nonzero = true;
            }
            if (nonzero) cvecs.push_back(std::move(v));
        }
        Matrix m(idx.size(), cvecs.size(), f);
        for (size_t j = 0; j < cvecs.size(); ++j)
            for (size_t i = 0; i < idx.size(); ++i) m.at(i, j) = cvecs[j][i];
        long long dim = (long long)idx.size() - (long long)m.rank();
        if (dim != 0) out[d] = dim;
    }
    return out;
}

int PresentedModule::generator_degree_bound() const {
    auto dims = minimal_generator_dims();
    if (dims.empty()) return 0;
    return dims.rbegin()->first;
}

PresentedModule PresentedModule::tensor_over_k(const PresentedModule& a,
                                               const PresentedModule& b, const RingPtr& doubled,
                                               const std::vector<int>& ymap,
                                               const std::vector<int>& zmap) {
    size_t ra = a.gens().rank(), rb = b.gens().rank();
    std::vector<int> degs;
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j) degs.push_back(a.gens().degs[i] + b.gens().degs[j]);
    FreeModule f{doubled, degs};
    size_t ca = a.relations().empty() ? 0 : a.relations()[0].size();
    size_t cb = b.relations().empty() ? 0 : b.relations()[0].size();
    PolyMatrix rels(ra * rb,
                    std::vector<Polynomial>(ca * rb + ra * cb, Polynomial::zero(doubled)));
    // relations of A against every generator of B
    for (size_t j = 0; j < ca; ++j)
        for (size_t t = 0; t < rb; ++t)
            for (size_t i = 0; i < ra; ++i)
                rels[i * rb + t][j * rb + t] = a.relations()[i][j].map_vars(doubled, ymap);
    // generators of A against relations of B
    for (size_t s = 0; s < ra; ++s)
        for (size_t j = 0; j < cb; ++j)
            for (size_t t = 0; t < rb; ++t)
                rels[s * rb + t][ca * rb + s * cb + j] =
                    b.relations()[t][j].map_vars(doubled, zmap);
    return PresentedModule(f, rels);
}

long long PresentedModule::dim_at_bruteforce(int d) const {
    const RingPtr& ring = gens_.ring;
    // basis of the degree-d slice of the ambient free module
    std::vector<std::pair<size_t, Exps>> slice;
    std::function<void(Exps&, size_t, int, size_t)> enumerate = [&](Exps& cur, size_t var,
                                                                    int remaining, size_t gen) {
        if (var == ring->nvars()) {
            if (remaining == 0) slice.emplace_back(gen, cur);
            return;
        }
        int w = ring->weights[var];
        for (int e = 0; e * w <= remaining; ++e) {
            cur[var] = e;
            enumerate(cur, var + 1, remaining - e * w, gen);
        }
        cur[var] = 0;
    };
    for (size_t g = 0; g < gens_.rank(); ++g) {
        int rem = d - gens_.degs[g];
        if (rem < 0) continue;
        Exps cur(ring->nvars(), 0);
        enumerate(cur, 0, rem, g);
    }
    std::map<std::pair<size_t, Exps>, size_t> index;
    for (size_t i = 0; i < slice.size(); ++i) index[slice[i]] = i;

    // columns: monomial multiples of relation columns landing in degree d
    std::vector<std::vector<FieldElement>> cols;
    size_t ncols = rels_.empty() ? 0 : rels_[0].size();
    for (size_t j = 0; j < ncols; ++j) {
        long coldeg = -1;
        for (size_t i = 0; i < gens_.rank(); ++i)
            if (!rels_[i][j].is_zero()) {
                long dd;
                rels_[i][j].is_homogeneous(&dd);
                coldeg = dd + gens_.degs[i];
                break;
            }
        if (coldeg < 0) continue;
        int rem = d - int(coldeg);
        if (rem < 0) continue;
        std::vector<Exps> mults;
        Exps cur(ring->nvars(), 0);
        std::function<void(size_t, int)> enum2 = [&](size_t var, int remaining) {
            if (var == ring->nvars()) {
                if (remaining == 0) mults.push_back(cur);
                return;
            }
            int w = ring->weights[var];
            for (int e = 0; e * w <= remaining; ++e) {
                cur[var] = e;
                enum2(var + 1, remaining - e * w);
            }
            cur[var] = 0;
        };
        enum2(0, rem);
        for (const Exps& m : mults) {
            std::vector<FieldElement> v(slice.size(), FieldElement::make(ring->field, 0));
            for (size_t i = 0; i < gens_.rank(); ++i)
                for (const auto& [e, c] : rels_[i][j].terms())
                    v[index.at({i, exps_mul(e, m)})] += c;
            cols.push_back(std::move(v));
        }
    }
    Matrix m(slice.size(), cols.size(), ring->field);
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < slice.size(); ++i) m.at(i, j) = cols[j][i];
    return (long long)slice.size() - (long long)m.rank();
}

PresentedModule subquotient_homology(const GradedMap* in, const GradedMap* out,
                                     const FreeModule& spot) {
    const RingPtr& ring = spot.ring;
    GradedMap k;
    if (out && !(out->tgt.rank() == 0) && !out->is_zero()) {
        k = kernel(*out);
    } else {
        k.src = spot;
        k.tgt = spot;
        k.shift = 0;
        k.a.assign(spot.rank(), std::vector<Polynomial>(spot.rank(), Polynomial::zero(ring)));
        for (size_t i = 0; i < spot.rank(); ++i) k.a[i][i] = Polynomial::constant(ring, 1);
    }
    size_t nk = k.src.rank();

    ModuleOrder ord = ModuleOrder::pot(MonomialOrder::grevlex(ring->nvars()),
                                       std::max<size_t>(spot.rank(), 1));
    std::vector<Vec> kvecs;
    for (size_t j = 0; j < nk; ++j) {
        Vec v = vec_from_column(k.column(j));
        vec_sort(v, ord);
        kvecs.push_back(std::move(v));
    }

    PolyMatrix rels(nk);
    for (auto& row : rels) row.clear();

    // image columns of `in`, expressed in the kernel generators
    if (in && in->src.rank() > 0) {
        for (size_t j = 0; j < in->src.rank(); ++j) {
            Vec v = vec_from_column(in->column(j));
            vec_sort(v, ord);
            DivisionResult dr = divide(v, kvecs, ord, true);
            if (!dr.remainder.empty())
                throw Error("homology: image is not contained in the kernel");
            for (size_t t = 0; t < nk; ++t) {
                Polynomial c(ring);
                for (const auto& [m, coef] : dr.cofactors[t]) c.add_term(m, coef);
                rels[t].push_back(c);
            }
        }
    }

    // syzygies among the kernel generators are honest relations too
    if (nk > 0) {
        GradedMap kincl = k;
        GradedMap syz = kernel(kincl);
        for (size_t j = 0; j < syz.src.rank(); ++j)
            for (size_t t = 0; t < nk; ++t) rels[t].push_back(syz.a[t][j]);
    }

    return PresentedModule(k.src, rels);
}

PresentedModule dg_homology(const FreeModule& f, const GradedMap& delta) {
    delta.check_homogeneous();
    if (delta.src.rank() != f.rank() || delta.tgt.rank() != f.rank())
        throw Error("dg module: differential must be an endomorphism");
    GradedMap sq = compose(delta, delta);
    if (!sq.is_zero()) throw Error("not a differential: delta^2 != 0");
    return subquotient_homology(&delta, &delta, f);
}

std::vector<GradedMap> resolve(const PresentedModule& x, int max_steps) {
    const RingPtr& ring = x.ring();
    std::vector<GradedMap> maps;
    size_t cols = x.relations().empty() ? 0 : x.relations()[0].size();
    GradedMap d1;
    d1.tgt = x.gens();
    d1.shift = 0;
    std::vector<int> f1degs;
    std::vector<size_t> nonzero_cols;
    for (size_t j = 0; j < cols; ++j) {
        std::vector<Polynomial> col;
        bool nz = false;
        for (size_t i = 0; i < x.gens().rank(); ++i) {
            col.push_back(x.relations()[i][j]);
            nz = nz || !x.relations()[i][j].is_zero();
        }
        if (!nz) continue;
        nonzero_cols.push_back(j);
        f1degs.push_back(column_degree(col, x.gens().degs));
    }
    d1.src = FreeModule{ring, f1degs};
    d1.a.assign(x.gens().rank(), std::vector<Polynomial>(f1degs.size(), Polynomial::zero(ring)));
    for (size_t jj = 0; jj < nonzero_cols.size(); ++jj)
        for (size_t i = 0; i < x.gens().rank(); ++i)
            d1.a[i][jj] = x.relations()[i][nonzero_cols[jj]];
    maps.push_back(d1);
    while ((int)maps.size() < max_steps) {
        const GradedMap& last = maps.back();
        if (last.src.rank() == 0) break;
        GradedMap next = kernel(last);
        maps.push_back(next);
        if (next.src.rank() == 0) break;
    }
    return maps;
}

std::vector<PresentedModule> tor_modules(const PresentedModule& x, const PresentedModule& y,
                                         int maxlen) {
    const RingPtr& ring = x.ring();
    check_same_ring(ring, y.ring());
    std::vector<GradedMap> dF = resolve(x, maxlen + 1);
    std::vector<GradedMap> dG = resolve(y, maxlen + 1);
    std::vector<FreeModule> F{x.gens()}, G{y.gens()};
    for (const auto& d : dF) F.push_back(d.src);
    for (const auto& d : dG) G.push_back(d.src);

    auto block_rank = [&](const std::vector<FreeModule>& mods, size_t p) {
        return p < mods.size() ? mods[p].rank() : 0;
    };
    auto total_module = [&](int n) {
        std::vector<int> degs;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (size_t(p) >= F.size() || size_t(q) >= G.size()) continue;
            for (size_t a = 0; a < F[p].rank(); ++a)
                for (size_t b = 0; b < G[q].rank(); ++b)
                    degs.push_back(F[p].degs[a] + G[q].degs[b]);
        }
        return FreeModule{ring, degs};
    };
    auto block_offset = [&](int n, int p) {
        size_t off = 0;
        for (int pp = 0; pp < p; ++pp) {
            int qq = n - pp;
            if (size_t(pp) >= F.size() || size_t(qq) >= G.size()) continue;
            off += F[pp].rank() * G[qq].rank();
        }
        return off;
    };
    auto total_map = [&](int n) { // D_n : T_n -> T_{n-1}
        GradedMap D;
        D.src = total_module(n);
        D.tgt = total_module(n - 1);
        D.shift = 0;
        D.a.assign(D.tgt.rank(), std::vector<Polynomial>(D.src.rank(), Polynomial::zero(ring)));
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (size_t(p) >= F.size() || size_t(q) >= G.size()) continue;
            size_t src_off = block_offset(n, p);
            size_t rG = G[q].rank();
            // dF (x) id : block (p,q) -> (p-1, q)
            if (p >= 1 && size_t(p) <= dF.size() && block_rank(F, p - 1) > 0) {
                size_t tgt_off = block_offset(n - 1, p - 1);
                const GradedMap& d = dF[p - 1];
                for (size_t r = 0; r < F[p - 1].rank(); ++r)
                    for (size_t c = 0; c < F[p].rank(); ++c) {
                        if (d.a[r][c].is_zero()) continue;
                        for (size_t b = 0; b < rG; ++b)
                            D.a[tgt_off + r * rG + b][src_off + c * rG + b] = d.a[r][c];
                    }
            }
            // (-1)^p id (x) dG : block (p,q) -> (p, q-1)
            if (q >= 1 && size_t(q) <= dG.size() && block_rank(G, q - 1) > 0) {
                size_t tgt_off = block_offset(n - 1, p);
                size_t rGm = G[q - 1].rank();
                const GradedMap& d = dG[q - 1];
                FieldElement sgn = FieldElement::make(ring->field, p % 2 == 0 ? 1 : -1);
                for (size_t a = 0; a < F[p].rank(); ++a)
                    for (size_t r = 0; r < rGm; ++r)
                        for (size_t c = 0; c < G[q].rank(); ++c) {
                            if (d.a[r][c].is_zero()) continue;
                            D.a[tgt_off + a * rGm + r][src_off + a * rG + c] =
                                d.a[r][c].scaled(sgn);
                        }
            }
        }
        return D;
    };

    std::vector<PresentedModule> out;
    for (int n = 0; n <= maxlen; ++n) {
        FreeModule Tn = total_module(n);
        GradedMap Din = total_map(n + 1);
        GradedMap Dout = total_map(n);
        const GradedMap* pin = Tn.rank() > 0 && Din.src.rank() > 0 ? &Din : nullptr;
        const GradedMap* pout = n > 0 && Dout.tgt.rank() > 0 ? &Dout : nullptr;
        if (Tn.rank() == 0) {
            out.push_back(PresentedModule(FreeModule{ring, {}}, PolyMatrix{}));
            continue;
        }
        out.push_back(subquotient_homology(pin, pout, Tn));
    }
    return out;
}

} // namespace ksv
