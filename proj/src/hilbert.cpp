#include "ksv/hilbert.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace ksv {

namespace {

using Num = std::map<int, long long>;

void num_add(Num& a, const Num& b, long long scale, int shift) {
    for (const auto& [d, c] : b) {
        long long& slot = a[d + shift];
        slot += scale * c;
        if (slot == 0) a.erase(d + shift);
    }
}

std::vector<Exps> minimalize(std::vector<Exps> gens) {
    std::vector<Exps> out;
    std::sort(gens.begin(), gens.end(),
              [](const Exps& a, const Exps& b) { return exps_total(a) < exps_total(b); });
    for (const Exps& g : gens) {
        bool redundant = false;
        for (const Exps& h : out)
            if (exps_divides(h, g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

std::map<int, long long> monomial_quotient_numerator(std::vector<Exps> gens,
                                                     const std::vector<int>& weights) {
    gens = minimalize(std::move(gens));
    auto wdeg = [&](const Exps& e) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
        return d;
    };
    // constant generator: unit ideal, quotient is zero
    for (const Exps& g : gens)
        if (exps_total(g) == 0) return {};
    if (gens.empty()) return {{0, 1}};

    // base case: pairwise coprime generators (after minimalization, pure
    // powers of distinct variables qualify): product of (1 - t^deg)
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j) {
            for (size_t v = 0; v < gens[i].size(); ++v)
                if (gens[i][v] > 0 && gens[j][v] > 0) { coprime = false; break; }
        }
    if (coprime) {
        Num acc{{0, 1}};
        for (const Exps& g : gens) {
            Num next;
            num_add(next, acc, 1, 0);
            num_add(next, acc, -1, wdeg(g));
            acc = std::move(next);
        }
        return acc;
    }

    // pivot: generator with the largest support, split off via the sequence
    // 0 -> S/(I':g)(-deg g) -> S/I' -> S/I -> 0 with I' = I minus g
    size_t pivot = 0;
    size_t best_support = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        size_t s = 0;
        for (int e : gens[i]) s += (e > 0);
        if (s >= best_support) { best_support = s; pivot = i; }
    }
    Exps g = gens[pivot];
    std::vector<Exps> rest;
    for (size_t i = 0; i < gens.size(); ++i)
        if (i != pivot) rest.push_back(gens[i]);
    std::vector<Exps> colon;
    for (const Exps& h : rest) {
        Exps q(h.size());
        for (size_t v = 0; v < h.size(); ++v) q[v] = std::max(0, h[v] - g[v]);
        colon.push_back(q);
    }
    Num a = monomial_quotient_numerator(rest, weights);
    Num b = monomial_quotient_numerator(colon, weights);
    Num out;
    num_add(out, a, 1, 0);
    num_add(out, b, -1, wdeg(g));
    return out;
}

std::vector<long long> HilbertSeries::dims(int lo, int hi) const {
    std::vector<long long> out(size_t(hi - lo + 1), 0);
    if (num.empty()) return out;
    int min_deg = num.begin()->first;
    // expand num / prod(1 - t^w) as a power series from min_deg upward
    std::map<int, long long> series = num;
    // series *= 1/(1 - t^w) termwise: s[d] += s[d - w]
    for (int w : weights) {
        for (int d = min_deg; d <= hi; ++d) {
            auto it = series.find(d - w);
            if (it != series.end() && it->second != 0) series[d] += it->second;
        }
        // entries above hi are irrelevant; below min_deg none appear
    }
    for (int d = lo; d <= hi; ++d) {
        auto it = series.find(d);
        out[size_t(d - lo)] = (it == series.end()) ? 0 : it->second;
    }
    return out;
}

long long HilbertSeries::dim_at(int d) const { return dims(d, d)[0]; }

int HilbertSeries::pole_order() const {
    if (num.empty()) return 0;
    // multiplicity of the root t=1 in the numerator
    std::vector<long long> coeffs;
    int lo = num.begin()->first, hi = num.rbegin()->first;
    for (int d = lo; d <= hi; ++d) {
        auto it = num.find(d);
        coeffs.push_back(it == num.end() ? 0 : it->second);
    }
    int mult = 0;
    while (!coeffs.empty()) {
        long long at1 = 0;
        for (long long c : coeffs) at1 += c;
        if (at1 != 0) break;
        // num = (1 - t) q with q_i = sum_{j <= i} c_j
        std::vector<long long> q(coeffs.size() - 1, 0);
        long long run = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            run += coeffs[i];
            q[i] = run;
        }
        coeffs = std::move(q);
        ++mult;
    }
    return int(weights.size()) - mult;
}

int HilbertSeries::proj_dim() const {
    if (is_zero()) return DIM_ZERO;
    return pole_order() - 1;
}

std::map<int, long long> HilbertSeries::polynomial_part() const {
    if (!finite_length() && !is_zero()) throw Error("series is not a polynomial");
    // exact division of num by prod (1 - t^w)
    Num cur = num;
    for (int w : weights) {
        if (cur.empty()) break;
        Num q;
        int lo = cur.begin()->first, hi = cur.rbegin()->first;
        // cur = q * (1 - t^w): q[d] = cur[d] + q[d - w]
        for (int d = lo; d <= hi - w; ++d) {
            long long c = 0;
            auto it = cur.find(d);
            if (it != cur.end()) c = it->second;
            auto qit = q.find(d - w);
            if (qit != q.end()) c += qit->second;
            if (c != 0) q[d] = c;
        }
        // verify remainder is zero
        Num check;
        num_add(check, q, 1, 0);
        num_add(check, q, -1, w);
        Num diff = cur;
        num_add(diff, check, -1, 0);
        if (!diff.empty()) throw Error("series is not a polynomial");
        cur = std::move(q);
    }
    return cur;
}

long long HilbertSeries::total_dim() const {
    long long t = 0;
    for (const auto& [d, c] : polynomial_part()) t += c;
    return t;
}

static Exps lead_monomial(const Polynomial& g, const MonomialOrder& ord) {
    const Exps* best = nullptr;
    for (const auto& [e, c] : g.terms())
        if (!best || ord.compare(e, *best) > 0) best = &e;
    return *best;
}

HilbertSeries hilbert_of_quotient(const HomogeneousIdeal& I) {
    MonomialOrder ord = MonomialOrder::grevlex(I.ring()->nvars());
    std::vector<Exps> leads;
    for (const Polynomial& g : I.groebner()) leads.push_back(lead_monomial(g, ord));
    HilbertSeries hs;
    hs.weights = I.ring()->weights;
    hs.num = monomial_quotient_numerator(std::move(leads), hs.weights);
    return hs;
}

long long quotient_dim_bruteforce(const HomogeneousIdeal& I, int d) {
    const RingPtr& ring = I.ring();
    MonomialOrder ord = MonomialOrder::grevlex(ring->nvars());
    std::vector<Exps> leads;
    for (const Polynomial& g : I.groebner()) leads.push_back(lead_monomial(g, ord));
    long long count = 0;
    Exps cur(ring->nvars(), 0);
    std::function<void(size_t, int)> rec = [&](size_t var, int remaining) {
        if (var == ring->nvars()) {
            if (remaining != 0) return;
            for (const Exps& l : leads)
                if (exps_divides(l, cur)) return;
            ++count;
            return;
        }
        int w = ring->weights[var];
        for (int e = 0; e * w <= remaining; ++e) {
            cur[var] = e;
            rec(var + 1, remaining - e * w);
        }
        cur[var] = 0;
    };
    rec(0, d);
    return count;
}

} // namespace ksv
