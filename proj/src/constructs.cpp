#include "hyperlab/constructs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyperlab/classify.hpp"
#include "hyperlab/ideals.hpp"

namespace hyperlab {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

// ---------- direct product ----------

int pair_encode(const HyperRing& h2, int a, int b) { return a * h2.size() + b; }

std::pair<int, int> pair_decode(const HyperRing& h2, int p) {
    return {p / h2.size(), p % h2.size()};
}

HyperRing make_product(const HyperRing& h1, const HyperRing& h2,
                       std::string name) {
    int n1 = h1.size(), n2 = h2.size(), n = n1 * n2;
    if (n > ElemSet::kMaxCarrier)
        throw std::invalid_argument("make_product: carrier too large");
    std::vector<int> add(static_cast<size_t>(n) * n);
    std::vector<ElemSet> mul(static_cast<size_t>(n) * n, ElemSet(n));
    for (int a1 = 0; a1 < n1; ++a1)
        for (int b1 = 0; b1 < n2; ++b1) {
            int x = a1 * n2 + b1;
            for (int a2 = 0; a2 < n1; ++a2)
                for (int b2 = 0; b2 < n2; ++b2) {
                    int y = a2 * n2 + b2;
                    add[static_cast<size_t>(x) * n + y] =
                        h1.add(a1, a2) * n2 + h2.add(b1, b2);
                    ElemSet s(n);
                    for (int u : h1.mul(a1, a2).elements())
                        for (int v : h2.mul(b1, b2).elements())
                            s.insert(u * n2 + v);
                    mul[static_cast<size_t>(x) * n + y] = s;
                }
        }
    if (name.empty()) name = h1.name() + "x" + h2.name();
    return HyperRing::from_tables(n, std::move(add), std::move(mul),
                                  std::move(name));
}

ElemSet box_ideal(const HyperRing& h1, const HyperRing& h2, const ElemSet& I1,
                  const ElemSet& I2) {
    ElemSet s(h1.size() * h2.size());
    for (int a : I1.elements())
        for (int b : I2.elements()) s.insert(a * h2.size() + b);
    return s;
}

std::optional<std::pair<ElemSet, ElemSet>> decompose_box(const HyperRing& h1,
                                                         const HyperRing& h2,
                                                         const ElemSet& S) {
    ElemSet p1(h1.size()), p2(h2.size());
    for (int x : S.elements()) {
        p1.insert(x / h2.size());
        p2.insert(x % h2.size());
    }
    if (box_ideal(h1, h2, p1, p2) != S) return std::nullopt;
    return std::make_pair(p1, p2);
}

// ---------- quotient ----------

Quotient make_quotient(const HyperRing& h, const ElemSet& I,
                       std::string name) {
    if (!is_hyperideal(h, I))
        throw std::invalid_argument("make_quotient: not a hyperideal");
    int n = h.size();
    std::vector<int> cls(n, -1);
    std::vector<ElemSet> cosets;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        ElemSet coset(n);
        for (int i : I.elements()) coset.insert(h.add(x, i));
        int idx = static_cast<int>(cosets.size());
        for (int y : coset.elements()) cls[y] = idx;
        cosets.push_back(coset);
    }

    int k = static_cast<int>(cosets.size());
    std::vector<int> add(static_cast<size_t>(k) * k);
    std::vector<ElemSet> mul(static_cast<size_t>(k) * k, ElemSet(k));
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            int r1 = cosets[c1].elements().front();
            int r2 = cosets[c2].elements().front();
            add[static_cast<size_t>(c1) * k + c2] = cls[h.add(r1, r2)];
            ElemSet img(k);
            bool first = true;
            for (int a : cosets[c1].elements())
                for (int b : cosets[c2].elements()) {
                    ElemSet cur(k);
                    for (int z : h.mul(a, b).elements()) cur.insert(cls[z]);
                    if (first) {
                        img = cur;
                        first = false;
                    } else if (cur != img) {
                        throw std::runtime_error(
                            "make_quotient: product depends on representatives at " +
                            std::to_string(a) + "," + std::to_string(b));
                    }
                }
            mul[static_cast<size_t>(c1) * k + c2] = img;
        }
    if (name.empty()) name = h.name() + "_mod" + I.to_string();
    return Quotient{HyperRing::from_tables(k, std::move(add), std::move(mul),
                                           std::move(name)),
                    std::move(cls), std::move(cosets)};
}

ElemSet quotient_image(const Quotient& q, const ElemSet& S) {
    ElemSet out(q.ring.size());
    for (int x : S.elements()) out.insert(q.cls[x]);
    return out;
}

ElemSet quotient_preimage(const Quotient& q, const ElemSet& S) {
    ElemSet out(static_cast<int>(q.cls.size()));
    for (int c : S.elements()) out |= q.cosets[c];
    return out;
}

// ---------- 2x2 hypermatrices ----------

int matrix_encode(int n, int a, int b, int c, int d) {
    return ((a * n + b) * n + c) * n + d;
}

std::array<int, 4> matrix_decode(int n, int m) {
    std::array<int, 4> e{};
    e[3] = m % n;
    m /= n;
    e[2] = m % n;
    m /= n;
    e[1] = m % n;
    e[0] = m / n;
    return e;
}

MatrixRing make_matrix_ring(const HyperRing& h, std::string name) {
    int n = h.size();
    if (n > 3)
        throw std::invalid_argument("make_matrix_ring: base carrier above 3");
    int N = n * n * n * n;
    std::vector<int> add(static_cast<size_t>(N) * N);
    std::vector<ElemSet> mul(static_cast<size_t>(N) * N, ElemSet(N));
    for (int x = 0; x < N; ++x) {
        std::array<int, 4> A = matrix_decode(n, x);
        for (int y = 0; y < N; ++y) {
            std::array<int, 4> B = matrix_decode(n, y);
            add[static_cast<size_t>(x) * N + y] =
                matrix_encode(n, h.add(A[0], B[0]), h.add(A[1], B[1]),
                              h.add(A[2], B[2]), h.add(A[3], B[3]));
            ElemSet s11 = h.set_sum(h.mul(A[0], B[0]), h.mul(A[1], B[2]));
            ElemSet s12 = h.set_sum(h.mul(A[0], B[1]), h.mul(A[1], B[3]));
            ElemSet s21 = h.set_sum(h.mul(A[2], B[0]), h.mul(A[3], B[2]));
            ElemSet s22 = h.set_sum(h.mul(A[2], B[1]), h.mul(A[3], B[3]));
            ElemSet out(N);
            for (int e11 : s11.elements())
                for (int e12 : s12.elements())
                    for (int e21 : s21.elements())
                        for (int e22 : s22.elements())
                            out.insert(matrix_encode(n, e11, e12, e21, e22));
            mul[static_cast<size_t>(x) * N + y] = out;
        }
    }
    if (name.empty()) name = "m2_" + h.name();
    MatrixRing mr{HyperRing::from_tables(N, std::move(add), std::move(mul),
                                         std::move(name), /*strict=*/false),
                  n};
    const AxiomFlags& f = mr.ring.flags();
    // commutativity is expected to fail; nothing else may
    if (!f.add_group || !f.mul_total || !f.mul_associative || !f.distributive ||
        !f.sign_rule)
        throw std::runtime_error("make_matrix_ring: axiom lost over " + h.name());
    return mr;
}

ElemSet matrix_ideal(const MatrixRing& mr, const ElemSet& P) {
    int n = mr.base_n;
    ElemSet out(mr.ring.size());
    for (int a : P.elements())
        for (int b : P.elements())
            for (int c : P.elements())
                for (int d : P.elements())
                    out.insert(matrix_encode(n, a, b, c, d));
    return out;
}

// ---------- localization ----------

int Localization::cls_of(int x, int t) const {
    auto it = std::find(s_elems.begin(), s_elems.end(), t);
    if (it == s_elems.end())
        throw std::invalid_argument("cls_of: denominator not in S");
    return pair_cls[static_cast<size_t>(x) * s_elems.size() +
                    static_cast<size_t>(it - s_elems.begin())];
}

Localization localize(const HyperRing& h, const ElemSet& S, std::string name) {
    if (!h.has_scalar_identity())
        throw std::invalid_argument("localize: no scalar identity");
    int one = h.flags().scalar_identities.elements().front();
    if (!S.contains(one))
        throw std::invalid_argument("localize: S must contain the scalar identity");
    if (S.contains(h.zero()))
        throw std::invalid_argument("localize: S must not contain zero");
    for (int s : S.elements())
        for (int t : S.elements())
            if (!h.mul(s, t).subset_of(S))
                throw std::invalid_argument("localize: S not closed under products");

    std::vector<int> s_elems = S.elements();
    int n = h.size(), k = static_cast<int>(s_elems.size());
    int np = n * k;
    auto pidx = [&](int x, int ti) { return x * k + ti; };
    std::vector<int> sidx(n, -1);
    for (int i = 0; i < k; ++i) sidx[s_elems[i]] = i;

    // x1/t1 ~ x2/t2 when t*t1*x2 = t*t2*x1 for some t in S, then closed
    // transitively
    auto trip = [&](int t, int t1, int x) {
        return h.subset_product(h.mul(t, t1), ElemSet::single(n, x));
    };
    UnionFind uf(np);
    for (int x1 = 0; x1 < n; ++x1)
        for (int t1 = 0; t1 < k; ++t1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int t2 = 0; t2 < k; ++t2) {
                    if (pidx(x1, t1) >= pidx(x2, t2)) continue;
                    for (int t : s_elems)
                        if (trip(t, s_elems[t1], x2) ==
                            trip(t, s_elems[t2], x1)) {
                            uf.unite(pidx(x1, t1), pidx(x2, t2));
                            break;
                        }
                }

    std::vector<int> pair_cls(np, -1);
    std::vector<std::pair<int, int>> reps;  // class -> first (x, t index)
    std::vector<int> root_cls(np, -1);
    for (int x = 0; x < n; ++x)
        for (int ti = 0; ti < k; ++ti) {
            int r = uf.find(pidx(x, ti));
            if (root_cls[r] < 0) {
                root_cls[r] = static_cast<int>(reps.size());
                reps.emplace_back(x, ti);
            }
            pair_cls[pidx(x, ti)] = root_cls[r];
        }
    int m = static_cast<int>(reps.size());

    // members of each class, for representative-independence sweeps
    std::vector<std::vector<std::pair<int, int>>> members(m);
    for (int x = 0; x < n; ++x)
        for (int ti = 0; ti < k; ++ti)
            members[pair_cls[pidx(x, ti)]].emplace_back(x, ti);

    std::vector<int> add(static_cast<size_t>(m) * m, -1);
    std::vector<ElemSet> mul(static_cast<size_t>(m) * m, ElemSet(m));
    for (int c1 = 0; c1 < m; ++c1)
        for (int c2 = 0; c2 < m; ++c2) {
            int sum_cls = -1;
            ElemSet prod_img(m);
            bool first = true;
            for (auto [x1, t1i] : members[c1])
                for (auto [x2, t2i] : members[c2]) {
                    int t1 = s_elems[t1i], t2 = s_elems[t2i];
                    // (x1/t1) + (x2/t2) = (t2 x1 + t1 x2) / (t1 t2)
                    ElemSet num = h.set_sum(h.mul(t2, x1), h.mul(t1, x2));
                    ElemSet den = h.mul(t1, t2);
                    for (int a : num.elements())
                        for (int t : den.elements()) {
                            int c = pair_cls[pidx(a, sidx[t])];
                            if (sum_cls < 0) sum_cls = c;
                            else if (c != sum_cls)
                                throw std::runtime_error(
                                    "localize: sum of fractions " +
                                    std::to_string(x1) + "/" + std::to_string(t1) +
                                    " + " + std::to_string(x2) + "/" +
                                    std::to_string(t2) + " spans several classes");
                        }
                    ElemSet cur(m);
                    for (int u : h.mul(x1, x2).elements())
                        for (int w : h.mul(t1, t2).elements())
                            cur.insert(pair_cls[pidx(u, sidx[w])]);
                    if (first) {
                        prod_img = cur;
                        first = false;
                    } else if (cur != prod_img) {
                        throw std::runtime_error(
                            "localize: product depends on representatives at " +
                            std::to_string(x1) + "/" + std::to_string(t1) + " * " +
                            std::to_string(x2) + "/" + std::to_string(t2));
                    }
                }
            add[static_cast<size_t>(c1) * m + c2] = sum_cls;
            mul[static_cast<size_t>(c1) * m + c2] = prod_img;
        }

    std::vector<int> natural(n, -1);
    for (int x = 0; x < n; ++x) natural[x] = pair_cls[pidx(x, sidx[one])];
    if (name.empty()) name = h.name() + "_loc";
    return Localization{HyperRing::from_tables(m, std::move(add), std::move(mul),
                                               std::move(name)),
                        std::move(s_elems), std::move(pair_cls),
                        std::move(natural)};
}

ElemSet localize_ideal(const Localization& loc, const ElemSet& I) {
    int k = static_cast<int>(loc.s_elems.size());
    ElemSet out(loc.ring.size());
    for (int x : I.elements())
        for (int ti = 0; ti < k; ++ti)
            out.insert(loc.pair_cls[static_cast<size_t>(x) * k + ti]);
    return out;
}

// ---------- fundamental ring ----------

FundamentalRing make_fundamental_ring(const HyperRing& h,
                                      std::size_t family_limit,
                                      std::string name) {
    int n = h.size();
    Lab lab(h, ElemSet::kMaxCarrier, family_limit);
    const ProductFamily& fam = lab.family(ProductConvention::kLen1);
    UnionFind uf(n);
    for (const ElemSet& U : fam.sums) {
        const auto el = U.elements();
        for (size_t i = 1; i < el.size(); ++i) uf.unite(el[0], el[i]);
    }

    std::vector<int> cls(n, -1);
    std::vector<ElemSet> classes;
    std::vector<int> root_cls(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        if (root_cls[r] < 0) {
            root_cls[r] = static_cast<int>(classes.size());
            classes.push_back(ElemSet(n));
        }
        cls[x] = root_cls[r];
        classes[cls[x]].insert(x);
    }

    int k = static_cast<int>(classes.size());
    std::vector<int> add(static_cast<size_t>(k) * k);
    std::vector<ElemSet> mul(static_cast<size_t>(k) * k, ElemSet(k));
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            int sum_cls = -1, prod_cls = -1;
            for (int x : classes[c1].elements())
                for (int y : classes[c2].elements()) {
                    int cs = cls[h.add(x, y)];
                    if (sum_cls < 0) sum_cls = cs;
                    else if (cs != sum_cls)
                        throw std::runtime_error(
                            "fundamental ring: sum not well defined at " +
                            std::to_string(x) + "+" + std::to_string(y));
                    for (int z : h.mul(x, y).elements()) {
                        if (prod_cls < 0) prod_cls = cls[z];
                        else if (cls[z] != prod_cls)
                            throw std::runtime_error(
                                "fundamental ring: product not well defined at " +
                                std::to_string(x) + "*" + std::to_string(y));
                    }
                }
            add[static_cast<size_t>(c1) * k + c2] = sum_cls;
            mul[static_cast<size_t>(c1) * k + c2] = ElemSet::single(k, prod_cls);
        }
    if (name.empty()) name = h.name() + "_fund";
    return FundamentalRing{HyperRing::from_tables(k, std::move(add),
                                                  std::move(mul),
                                                  std::move(name)),
                           std::move(cls), std::move(classes)};
}

ElemSet fundamental_image(const FundamentalRing& f, const ElemSet& S) {
    ElemSet out(f.ring.size());
    for (int x : S.elements()) out.insert(f.cls[x]);
    return out;
}

bool is_saturated(const FundamentalRing& f, const ElemSet& S) {
    for (const ElemSet& c : f.classes)
        if (c.intersects(S) && !c.subset_of(S)) return false;
    return true;
}

// ---------- monomial layer ----------

MonomialCheck monomial_ab_prime_check(const HyperRing& h, const ElemSet& P,
                                      int alpha, int beta, int degree_cap) {
    if (alpha < 1 || beta < 1)
        throw std::invalid_argument("monomial_ab_prime_check: exponents start at 1");
    int n = h.size();
    if (!is_hyperideal(h, P) || P == ElemSet::full(n))
        throw std::invalid_argument(
            "monomial_ab_prime_check: need a proper hyperideal");
    Lab lab(h);
    MonomialCheck out;
    // (u x^d1)^alpha (v x^d2) = (u^alpha v) x^(alpha d1 + d2); the monomial
    // lies in the extension of P exactly when its coefficient set lies in P,
    // so each degree pair tests the same coefficient condition
    for (int d1 = 0; d1 <= degree_cap; ++d1)
        for (int d2 = 0; d2 <= degree_cap; ++d2)
            for (int u = 0; u < n; ++u) {
                ElemSet ua = lab.power(u, alpha);
                if (lab.power(u, beta).subset_of(P)) continue;
                for (int v = 0; v < n; ++v) {
                    if (P.contains(v)) continue;
                    if (!h.subset_product(ua, ElemSet::single(n, v)).subset_of(P))
                        continue;
                    out.holds = false;
                    out.u = u;
                    out.n = d1;
                    out.v = v;
                    out.m = d2;
                    return out;
                }
            }
    return out;
}

}  // namespace hyperlab
