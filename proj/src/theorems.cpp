#include "hyperlab/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace hyperlab {

namespace {

std::string b01(bool b) { return b ? "1" : "0"; }

HyperRing zero_mul_ring(int m) {
    std::vector<int> add(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    std::vector<ElemSet> mul(static_cast<std::size_t>(m) * m,
                             ElemSet::single(m, 0));
    return HyperRing::from_tables(m, std::move(add), std::move(mul),
                                  "zm" + std::to_string(m));
}

std::vector<int> range_X(int n) {
    std::vector<int> x;
    for (int i = 1; i < n; ++i) x.push_back(i);
    return x;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus() {
    std::vector<CorpusInstance> out;
    auto put = [&out](std::string id, HyperRing h) {
        bool ident = h.has_identity();
        out.push_back({std::move(id), std::move(h), ident, std::nullopt,
                       std::nullopt});
    };
    auto put_prod = [&out](std::string id, HyperRing f1, HyperRing f2) {
        HyperRing p = make_product(f1, f2, id);
        bool ident = p.has_identity();
        out.push_back({std::move(id), std::move(p), ident, std::move(f1),
                       std::move(f2)});
    };

    for (int n : {2, 3, 4, 5, 6, 8, 9, 12})
        put("z" + std::to_string(n) + "_cl",
            HyperRing::zx_mod(n, {1}, "z" + std::to_string(n) + "_cl"));
    for (int n : {4, 6, 8, 9, 12})
        put("z" + std::to_string(n) + "_full",
            HyperRing::zx_mod(n, range_X(n),
                              "z" + std::to_string(n) + "_full"));
    for (int n : {4, 6, 8, 9, 12})
        put("zx" + std::to_string(n) + "_23",
            HyperRing::zx_mod(n, {2, 3}, "zx" + std::to_string(n) + "_23"));
    put("h4_diag", HyperRing::zx_mod(4, {1, 3}, "h4_diag"));
    for (int m : {2, 3, 4}) put("zm" + std::to_string(m), zero_mul_ring(m));

    put_prod("prod_z4_z6", HyperRing::zx_mod(4, {1}, "z4_cl"),
             HyperRing::zx_mod(6, {1}, "z6_cl"));
    put_prod("prod_zm2_zm2", zero_mul_ring(2), zero_mul_ring(2));

    HyperRing z8f = HyperRing::zx_mod(8, range_X(8), "z8_full");
    put("quot_z8full_q",
        make_quotient(z8f, ElemSet::of(8, {0, 4}), "quot_z8full_q").ring);
    put("quot_z8full_e",
        make_quotient(z8f, ElemSet::of(8, {0, 2, 4, 6}), "quot_z8full_e")
            .ring);
    return out;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::kHypothesisNotMet: return "hypothesis_not_met";
        case Outcome::kHolds: return "holds";
        case Outcome::kViolation: return "violation";
    }
    return "?";
}

// ---------- instance context ----------

InstanceCtx::InstanceCtx(const CorpusInstance& inst)
    : inst_(&inst), lab_(inst.ring) {
    const HyperRing& h = inst.ring;
    const int n = h.size();
    ElemSet all = ElemSet::full(n);

    for (const auto& I : lab_.ideals())
        if (I != all) proper_.push_back(I);

    fund_.emplace(make_fundamental_ring(h));
    fund_lab_.emplace(fund_->ring);

    if (h.has_scalar_identity()) {
        int one = h.flags().scalar_identities.elements().front();
        std::set<ElemSet> seen;
        for (int g = 0; g < n; ++g) {
            ElemSet s = ElemSet::single(n, one);
            s.insert(g);
            bool grew = true;
            while (grew) {
                ElemSet next = s;
                for (int a : s.elements())
                    for (int b : s.elements()) next |= h.mul(a, b);
                grew = next != s;
                s = next;
            }
            if (s.contains(h.zero())) continue;
            if (!seen.insert(s).second) continue;
            Localization loc = localize(h, s);
            Lab llab(loc.ring);
            locs_.push_back({s, std::move(loc), std::move(llab)});
        }
    }

    for (const auto& p : proper_) {
        Quotient q = make_quotient(h, p);
        Lab qlab(q.ring);
        quots_.push_back({p, std::move(q), std::move(qlab)});
    }
    for (const auto& qc : quots_)
        homs_.push_back({quotient_projection(h, qc.q), Lab(h), Lab(qc.q.ring)});

    if (inst.factor1) {
        const HyperRing& f1 = *inst.factor1;
        const HyperRing& f2 = *inst.factor2;
        f1_lab_.emplace(f1);
        f2_lab_.emplace(f2);
        homs_.push_back({product_projection(h, f1, f2, 1), Lab(h), Lab(f1)});
        homs_.push_back({product_projection(h, f1, f2, 2), Lab(h), Lab(f2)});
        homs_.push_back({product_injection(h, f1, f2, 1), Lab(f1), Lab(h)});
        homs_.push_back({product_injection(h, f1, f2, 2), Lab(f2), Lab(h)});
    }

    if (n <= 3) {
        mat_.emplace(make_matrix_ring(h));
        mat_lab_.emplace(mat_->ring);
    }
}

bool InstanceCtx::prime(const ElemSet& p, int a, int b) {
    auto key = std::make_tuple(p, a, b);
    auto it = prime_memo_.find(key);
    if (it != prime_memo_.end()) return it->second;
    bool v = is_ab_prime(lab_, p, a, b);
    prime_memo_.emplace(std::move(key), v);
    return v;
}

bool InstanceCtx::weakly(const ElemSet& p, int a, int b) {
    auto key = std::make_tuple(p, a, b);
    auto it = weakly_memo_.find(key);
    if (it != weakly_memo_.end()) return it->second;
    bool v = is_weakly_ab_prime(lab_, p, a, b);
    weakly_memo_.emplace(std::move(key), v);
    return v;
}

bool InstanceCtx::c1(const ElemSet& p) {
    auto it = c1_memo_.find(p);
    if (it != c1_memo_.end()) return it->second;
    bool v = is_c_hyperideal(lab_, p);
    c1_memo_.emplace(p, v);
    return v;
}

bool InstanceCtx::strong_c1(const ElemSet& p) {
    auto it = sc1_memo_.find(p);
    if (it != sc1_memo_.end()) return it->second;
    bool v = is_strong_c_hyperideal(lab_, p);
    sc1_memo_.emplace(p, v);
    return v;
}

const ElemSet& InstanceCtx::rad(const ElemSet& p) {
    auto it = rad_memo_.find(p);
    if (it != rad_memo_.end()) return it->second;
    return rad_memo_.emplace(p, radical_via_primes(lab_, p)).first->second;
}

Lab* InstanceCtx::factor_lab(int which) {
    if (which == 1) return f1_lab_ ? &*f1_lab_ : nullptr;
    return f2_lab_ ? &*f2_lab_ : nullptr;
}

// ---------- registry ----------

namespace {

TheoremResult base_result(const char* id, InstanceCtx& ctx, int a, int b) {
    TheoremResult r;
    r.theorem_id = id;
    r.instance_id = ctx.inst().id;
    r.alpha = a;
    r.beta = b;
    return r;
}

void finish(TheoremResult& r) {
    if (r.outcome != Outcome::kViolation)
        r.outcome =
            r.checked > 0 ? Outcome::kHolds : Outcome::kHypothesisNotMet;
}

void violate(TheoremResult& r, std::string w) {
    r.outcome = Outcome::kViolation;
    r.witness = std::move(w);
}

TheoremResult eval_characterization_equiv(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("prime_characterization_equiv", ctx, a, b);
    for (const auto& p : ctx.proper()) {
        ++r.checked;
        bool b1 = ctx.prime(p, a, b);
        bool b2 = residual_characterization(ctx.lab(), p, a, b);
        bool b3 = ideal_characterization(ctx.lab(), p, a, b);
        if (b1 != b2 || b2 != b3) {
            violate(r, "P=" + p.to_string() + " prime=" + b01(b1) +
                           " residual=" + b01(b2) + " ideal=" + b01(b3));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_principal_equiv(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("principal_ring_equiv", ctx, a, b);
    if (!ctx.lab().is_principal_ring()) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper()) {
        ++r.checked;
        bool b1 = ctx.prime(p, a, b);
        bool b2 = principal_pair_characterization(ctx.lab(), p, a, b);
        bool b3 = principal_residual_characterization(ctx.lab(), p, a, b);
        bool b4 = principal_element_characterization(ctx.lab(), p, a, b);
        if (b1 != b2 || b2 != b3 || b3 != b4) {
            violate(r, "P=" + p.to_string() + " prime=" + b01(b1) +
                           " pair=" + b01(b2) + " residual=" + b01(b3) +
                           " element=" + b01(b4));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_radical_power(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("radical_power_characterization", ctx, a, b);
    for (const auto& p : ctx.proper()) {
        if (!ctx.c1(p) || !ctx.prime(p, a, b)) continue;
        ++r.checked;
        const ElemSet& rp = ctx.rad(p);
        ElemSet q = q_of(ctx.lab(), p, b);
        if (rp != q) {
            violate(r, "P=" + p.to_string() + " rad=" + rp.to_string() +
                           " q=" + q.to_string());
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_maximal_q(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("maximal_q_implies_prime", ctx, a, b);
    if (!ctx.inst().has_identity) {
        finish(r);
        return r;
    }
    const HyperRing& h = ctx.ring();
    ElemSet all = ElemSet::full(h.size());
    for (const auto& p : ctx.proper()) {
        if (!ctx.c1(p)) continue;
        ElemSet q = q_of(ctx.lab(), p, b);
        if (q == all || !is_hyperideal(h, q)) continue;
        if (!is_maximal(ctx.lab(), q)) continue;
        ++r.checked;
        bool pr = ctx.prime(p, a, b);
        bool rq = ctx.rad(p) == q;
        if (!pr || !rq) {
            violate(r, "P=" + p.to_string() + " Q=" + q.to_string() +
                           " prime=" + b01(pr) + " radmatch=" + b01(rq));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_maximal_powers(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("maximal_power_ideals", ctx, a, b);
    if (!ctx.inst().has_identity) {
        finish(r);
        return r;
    }
    const HyperRing& h = ctx.ring();
    for (const auto& q : ctx.proper()) {
        if (!is_maximal(ctx.lab(), q)) continue;
        for (int n = 1; n <= b; ++n) {
            ++r.checked;
            ElemSet qn = ideal_generate(h, h.set_power(q, n));
            bool pr = ctx.prime(qn, a, b);
            bool rq = ctx.rad(qn) == q;
            if (!pr || !rq) {
                violate(r, "Q=" + q.to_string() + " n=" + std::to_string(n) +
                               " Qn=" + qn.to_string() + " prime=" + b01(pr) +
                               " radmatch=" + b01(rq));
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_common_radical(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("common_radical_intersection", ctx, a, b);
    std::vector<const ElemSet*> v;
    for (const auto& p : ctx.proper())
        if (ctx.c1(p) && ctx.prime(p, a, b)) v.push_back(&p);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (ctx.rad(*v[i]) != ctx.rad(*v[j])) continue;
            ++r.checked;
            ElemSet inter = *v[i] & *v[j];
            if (!ctx.prime(inter, a, b) ||
                ctx.rad(inter) != ctx.rad(*v[i])) {
                violate(r, "P1=" + v[i]->to_string() +
                               " P2=" + v[j]->to_string() +
                               " inter=" + inter.to_string());
                return r;
            }
        }
    finish(r);
    return r;
}

TheoremResult eval_column_law(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("prime_region_column_law", ctx, a, b);
    for (const auto& p : ctx.proper()) {
        ++r.checked;
        bool here = ctx.prime(p, a, b);
        bool next = ctx.prime(p, a + 1, b);
        if (here != next) {
            violate(r, "P=" + p.to_string() + " at_alpha=" + b01(here) +
                           " at_alpha_plus_1=" + b01(next));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_all_prime_structure(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("all_ideals_prime_structure", ctx, a, b);
    if (!ctx.inst().has_identity) {
        finish(r);
        return r;
    }
    const HyperRing& h = ctx.ring();
    ElemSet zero = ElemSet::single(h.size(), h.zero());
    if (!ctx.c1(zero)) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper())
        if (!ctx.prime(p, a, b)) {
            finish(r);
            return r;
        }
    ++r.checked;
    ElemSet bad = nontrivial_idempotents(ctx.lab());
    if (!bad.empty()) {
        violate(r, "idempotents=" + bad.to_string());
        return r;
    }
    for (const auto& p : ctx.proper()) {
        if (!ctx.prime(p, 1, 1) || !ctx.c1(p)) continue;
        ++r.checked;
        if (!is_maximal(ctx.lab(), p)) {
            violate(r, "P=" + p.to_string() + " prime C not maximal");
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_irreducible(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("irreducible_max_length_prime", ctx, a, b);
    if (!ctx.inst().has_identity) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper()) {
        if (!ctx.strong_c1(p)) continue;
        if (max_length(ctx.lab(), p) > b) continue;
        if (!is_irreducible(ctx.lab(), p)) continue;
        ++r.checked;
        if (!ctx.prime(p, a, b)) {
            violate(r, "P=" + p.to_string());
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_localization(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("localization_transfer", ctx, a, b);
    for (auto& lc : ctx.locs()) {
        ElemSet lfull = ElemSet::full(lc.loc.ring.size());
        for (const auto& p : ctx.proper()) {
            if (!ctx.c1(p)) continue;
            if (p.intersects(lc.s)) continue;
            if (!ctx.prime(p, a, b)) continue;
            ++r.checked;
            ElemSet lp = localize_ideal(lc.loc, p);
            if (lp == lfull) {
                violate(r, "S=" + lc.s.to_string() + " P=" + p.to_string() +
                               " localized improper");
                return r;
            }
            if (!is_ab_prime(lc.lab, lp, a, b)) {
                violate(r, "S=" + lc.s.to_string() + " P=" + p.to_string() +
                               " SP=" + lp.to_string());
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_monomial(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("monomial_extension_transfer", ctx, a, b);
    for (const auto& p : ctx.proper()) {
        if (!ctx.prime(p, a, b)) continue;
        ++r.checked;
        MonomialCheck mc = monomial_ab_prime_check(ctx.ring(), p, a, b);
        if (!mc.holds) {
            violate(r, "P=" + p.to_string() + " u=" + std::to_string(mc.u) +
                           " n=" + std::to_string(mc.n) +
                           " v=" + std::to_string(mc.v) +
                           " m=" + std::to_string(mc.m));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_matrix(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("matrix_transfer", ctx, a, b);
    if (!ctx.matrix()) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper()) {
        ElemSet mp = matrix_ideal(*ctx.matrix(), p);
        if (!is_ab_prime(ctx.matrix_lab(), mp, a, b)) continue;
        ++r.checked;
        if (!ctx.prime(p, a, b)) {
            violate(r, "P=" + p.to_string() + " matrix ideal prime, base not");
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_hom_preimage(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("hom_preimage_transfer", ctx, a, b);
    for (std::size_t i = 0; i < ctx.homs().size(); ++i) {
        auto& hc = ctx.homs()[i];
        ElemSet cfull = ElemSet::full(hc.hom.cod.size());
        ElemSet dfull = ElemSet::full(hc.hom.dom.size());
        for (const auto& p2 : hc.cod.ideals()) {
            if (p2 == cfull) continue;
            if (!is_ab_prime(hc.cod, p2, a, b)) continue;
            ElemSet pre = hom_preimage(hc.hom, p2);
            if (pre == dfull) continue;  // improper preimage: no claim
            ++r.checked;
            if (!is_ab_prime(hc.dom, pre, a, b)) {
                violate(r, "hom#" + std::to_string(i) +
                               " P2=" + p2.to_string() +
                               " pre=" + pre.to_string());
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_hom_image(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("hom_image_transfer", ctx, a, b);
    for (std::size_t i = 0; i < ctx.homs().size(); ++i) {
        auto& hc = ctx.homs()[i];
        if (!is_surjective(hc.hom)) continue;
        ElemSet ker = hom_kernel(hc.hom);
        ElemSet dfull = ElemSet::full(hc.hom.dom.size());
        ElemSet cfull = ElemSet::full(hc.hom.cod.size());
        for (const auto& p1 : hc.dom.ideals()) {
            if (p1 == dfull) continue;
            if (!ker.subset_of(p1)) continue;
            if (!is_c_hyperideal(hc.dom, p1)) continue;
            if (!is_ab_prime(hc.dom, p1, a, b)) continue;
            ++r.checked;
            ElemSet img = hom_image(hc.hom, p1);
            if (img == cfull || !is_ab_prime(hc.cod, img, a, b)) {
                violate(r, "hom#" + std::to_string(i) +
                               " P1=" + p1.to_string() +
                               " img=" + img.to_string());
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_quotient(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("quotient_transfer", ctx, a, b);
    for (auto& qc : ctx.quots()) {
        for (const auto& p2 : ctx.proper()) {
            if (!qc.by.subset_of(p2)) continue;
            ++r.checked;
            bool up = ctx.prime(p2, a, b);
            ElemSet down = quotient_image(qc.q, p2);
            bool dp = is_ab_prime(qc.lab, down, a, b);
            if (up != dp) {
                violate(r, "by=" + qc.by.to_string() +
                               " P2=" + p2.to_string() +
                               " down=" + down.to_string() + " up=" +
                               b01(up) + " down_prime=" + b01(dp));
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_weakly_radical(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("weakly_radical_prime", ctx, a, b);
    const HyperRing& h = ctx.ring();
    ElemSet all = ElemSet::full(h.size());
    ElemSet zero = ElemSet::single(h.size(), h.zero());
    if (!ctx.c1(zero)) {
        finish(r);
        return r;
    }
    const ElemSet& r0 = ctx.rad(zero);
    if (r0 == all || !ctx.prime(r0, 1, 1)) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper()) {
        if (!ctx.c1(p) || !ctx.weakly(p, a, b)) continue;
        ++r.checked;
        const ElemSet& rp = ctx.rad(p);
        if (rp == all || !ctx.prime(rp, 1, 1)) {
            violate(r, "P=" + p.to_string() + " rad=" + rp.to_string() +
                           " not prime");
            return r;
        }
        for (int x : rp.minus(r0).elements())
            if (!ctx.lab().power(x, b).subset_of(p)) {
                violate(r, "P=" + p.to_string() + " x=" + std::to_string(x) +
                               " power outside P");
                return r;
            }
    }
    finish(r);
    return r;
}

TheoremResult eval_weakly_maximality(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("weakly_all_ideals_maximality", ctx, a, b);
    if (!ctx.inst().has_identity || a < b) {
        finish(r);
        return r;
    }
    for (const auto& p : ctx.proper())
        if (!ctx.weakly(p, a, b)) {
            finish(r);
            return r;
        }
    ++r.checked;
    for (const auto& p : ctx.proper()) {
        if (!ctx.prime(p, 1, 1) || !ctx.c1(p)) continue;
        ++r.checked;
        if (!is_maximal(ctx.lab(), p)) {
            violate(r, "P=" + p.to_string() + " prime C not maximal");
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_zero_translation(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("zero_pair_translation", ctx, a, b);
    const HyperRing& h = ctx.ring();
    const int n = h.size();
    ElemSet zero = ElemSet::single(n, h.zero());
    ElemSet zset = zero;
    bool zero_strong = ctx.strong_c1(zero);
    for (const auto& p : ctx.proper()) {
        if (!ctx.c1(p)) continue;
        ZeroScan zs = find_ab_zeros(ctx.lab(), p, a, b);
        if (!zs.p_is_weakly_prime) continue;
        for (const auto& z : zs.zeros)
            for (int q : p.elements()) {
                ++r.checked;
                ElemSet s1 = h.subset_product(
                    ctx.lab().power(h.add(z.x, q), a), ElemSet::single(n, z.y));
                if (!s1.contains(h.zero())) {
                    violate(r, "(i) P=" + p.to_string() +
                                   " x=" + std::to_string(z.x) +
                                   " y=" + std::to_string(z.y) +
                                   " a=" + std::to_string(q));
                    return r;
                }
                ++r.checked;
                ElemSet s2 =
                    h.subset_product(ctx.lab().power(z.x, a),
                                     ElemSet::single(n, h.add(z.y, q)));
                if (!s2.contains(h.zero())) {
                    violate(r, "(ii) P=" + p.to_string() +
                                   " x=" + std::to_string(z.x) +
                                   " y=" + std::to_string(z.y) +
                                   " a=" + std::to_string(q));
                    return r;
                }
                if (zero_strong) {
                    ++r.checked;
                    ElemSet s3 = h.subset_product(ctx.lab().power(z.x, a),
                                                  ElemSet::single(n, q));
                    if (s3 != zset) {
                        violate(r, "(iii) P=" + p.to_string() +
                                       " x=" + std::to_string(z.x) +
                                       " a=" + std::to_string(q));
                        return r;
                    }
                }
            }
    }
    finish(r);
    return r;
}

TheoremResult eval_zero_nilpotent(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("zero_pair_nilpotent", ctx, a, b);
    const HyperRing& h = ctx.ring();
    if (!h.flags().strongly_distributive) {
        finish(r);
        return r;
    }
    ElemSet zero = ElemSet::single(h.size(), h.zero());
    bool zc = ctx.c1(zero);
    bool zsc = ctx.strong_c1(zero);
    if (!zc && !zsc) {
        finish(r);
        return r;
    }
    ElemSet ups = nilpotents(ctx.lab());
    for (const auto& p : ctx.proper()) {
        if (!ctx.c1(p)) continue;
        ZeroScan zs = find_ab_zeros(ctx.lab(), p, a, b);
        if (!zs.p_is_weakly_prime) continue;
        for (const auto& z : zs.zeros)
            for (int q : p.elements()) {
                if (zsc) {
                    ++r.checked;
                    if (!h.mul(z.x, q).subset_of(ups)) {
                        violate(r, "(i) P=" + p.to_string() +
                                       " x=" + std::to_string(z.x) +
                                       " a=" + std::to_string(q));
                        return r;
                    }
                }
                if (zc) {
                    ++r.checked;
                    if (!h.mul(z.y, q).subset_of(ups)) {
                        violate(r, "(ii) P=" + p.to_string() +
                                       " y=" + std::to_string(z.y) +
                                       " a=" + std::to_string(q));
                        return r;
                    }
                }
            }
    }
    finish(r);
    return r;
}

TheoremResult eval_equal_witness(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("equal_witness_intersection", ctx, a, b);
    std::map<ElemSet, std::vector<const ElemSet*>> groups;
    for (const auto& p : ctx.proper())
        if (ctx.weakly(p, a, b)) groups[q_of(ctx.lab(), p, b)].push_back(&p);
    for (const auto& [q, v] : groups) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                ++r.checked;
                ElemSet inter = *v[i] & *v[j];
                if (!ctx.weakly(inter, a, b)) {
                    violate(r, "P1=" + v[i]->to_string() +
                                   " P2=" + v[j]->to_string() +
                                   " inter=" + inter.to_string());
                    return r;
                }
            }
        if (v.size() >= 3) {
            ++r.checked;
            ElemSet inter = *v[0];
            for (std::size_t i = 1; i < v.size(); ++i) inter &= *v[i];
            if (!ctx.weakly(inter, a, b)) {
                violate(r, "group inter=" + inter.to_string());
                return r;
            }
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_fundamental(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("fundamental_ring_transfer", ctx, a, b);
    const FundamentalRing& f = ctx.fund();
    ElemSet ffull = ElemSet::full(f.ring.size());
    for (const auto& p : ctx.proper()) {
        ++r.checked;
        bool up = ctx.weakly(p, a, b);
        ElemSet img = fundamental_image(f, p);
        bool down =
            img == ffull || is_weakly_ab_prime(ctx.fund_lab(), img, a, b);
        if (up != down) {
            violate(r, "P=" + p.to_string() + " up=" + b01(up) +
                           " image=" + img.to_string() + " down=" + b01(down));
            return r;
        }
    }
    finish(r);
    return r;
}

TheoremResult eval_product_classification(InstanceCtx& ctx, int a, int b) {
    auto r = base_result("product_classification", ctx, a, b);
    const CorpusInstance& inst = ctx.inst();
    if (!inst.factor1 || !inst.factor1->has_scalar_identity() ||
        !inst.factor2->has_scalar_identity()) {
        finish(r);
        return r;
    }
    const HyperRing& f1 = *inst.factor1;
    const HyperRing& f2 = *inst.factor2;
    Lab* l1 = ctx.factor_lab(1);
    Lab* l2 = ctx.factor_lab(2);
    ElemSet zero = ElemSet::single(ctx.ring().size(), ctx.ring().zero());
    ElemSet full1 = ElemSet::full(f1.size());
    ElemSet full2 = ElemSet::full(f2.size());
    for (const auto& p : ctx.proper()) {
        if (p == zero) continue;
        auto box = decompose_box(f1, f2, p);
        if (!box) continue;  // non-box ideals are outside the theorem
        ++r.checked;
        const ElemSet& p1 = box->first;
        const ElemSet& p2 = box->second;
        bool weakly_p = ctx.weakly(p, a, b);
        bool left = p2 == full2 && p1 != full1 && is_ab_prime(*l1, p1, a, b);
        bool right = p1 == full1 && p2 != full2 && is_ab_prime(*l2, p2, a, b);
        bool boxed = left || right;
        bool prime_p = ctx.prime(p, a, b);
        if (weakly_p != boxed || boxed != prime_p) {
            violate(r, "P=" + p.to_string() + " box=(" + p1.to_string() +
                           "," + p2.to_string() + ") weakly=" +
                           b01(weakly_p) + " box_prime=" + b01(boxed) +
                           " prime=" + b01(prime_p));
            return r;
        }
    }
    finish(r);
    return r;
}

std::vector<TheoremDef> build_registry() {
    std::vector<TheoremDef> reg;
    auto add = [&reg](const char* id, bool report_only,
                      TheoremResult (*fn)(InstanceCtx&, int, int)) {
        reg.push_back({id, report_only, fn});
    };
    add("prime_characterization_equiv", false, eval_characterization_equiv);
    add("principal_ring_equiv", false, eval_principal_equiv);
    add("radical_power_characterization", false, eval_radical_power);
    add("maximal_q_implies_prime", true, eval_maximal_q);
    add("maximal_power_ideals", false, eval_maximal_powers);
    add("common_radical_intersection", false, eval_common_radical);
    add("prime_region_column_law", false, eval_column_law);
    add("all_ideals_prime_structure", false, eval_all_prime_structure);
    add("irreducible_max_length_prime", false, eval_irreducible);
    add("localization_transfer", false, eval_localization);
    add("monomial_extension_transfer", false, eval_monomial);
    add("matrix_transfer", false, eval_matrix);
    add("hom_preimage_transfer", false, eval_hom_preimage);
    add("hom_image_transfer", false, eval_hom_image);
    add("quotient_transfer", false, eval_quotient);
    add("weakly_radical_prime", false, eval_weakly_radical);
    add("weakly_all_ideals_maximality", false, eval_weakly_maximality);
    add("zero_pair_translation", false, eval_zero_translation);
    add("zero_pair_nilpotent", false, eval_zero_nilpotent);
    add("equal_witness_intersection", false, eval_equal_witness);
    add("fundamental_ring_transfer", false, eval_fundamental);
    add("product_classification", false, eval_product_classification);
    return reg;
}

}  // namespace

const std::vector<TheoremDef>& theorem_registry() {
    static const std::vector<TheoremDef> reg = build_registry();
    return reg;
}

const TheoremDef* find_theorem(const std::string& id) {
    for (const auto& def : theorem_registry())
        if (def.id == id) return &def;
    return nullptr;
}

// ---------- suite ----------

SuiteReport run_suite(const std::vector<CorpusInstance>& corpus,
                      const SuiteOptions& opt) {
    SuiteReport rep;
    rep.opt = opt;
    const auto& reg = theorem_registry();
    for (const auto& inst : corpus) rep.instance_ids.push_back(inst.id);

    for (const auto& inst : corpus) {
        InstanceCtx ctx(inst);
        for (const auto& def : reg)
            for (int a = 1; a <= opt.amax; ++a)
                for (int b = 1; b <= opt.bmax; ++b)
                    rep.rows.push_back(def.eval(ctx, a, b));
    }
    std::sort(rep.rows.begin(), rep.rows.end(),
              [](const TheoremResult& x, const TheoremResult& y) {
                  return std::tie(x.theorem_id, x.instance_id, x.alpha,
                                  x.beta) < std::tie(y.theorem_id,
                                                     y.instance_id, y.alpha,
                                                     y.beta);
              });

    std::map<std::string, std::size_t> cov_index;
    for (const auto& def : reg) {
        cov_index[def.id] = rep.coverage.size();
        rep.coverage.push_back({def.id, 0, 0, def.report_only});
    }
    for (const auto& row : rep.rows) {
        auto& cov = rep.coverage[cov_index.at(row.theorem_id)];
        if (row.outcome != Outcome::kHypothesisNotMet) ++cov.satisfied;
        if (row.outcome == Outcome::kViolation) {
            ++cov.violations;
            if (cov.report_only)
                ++rep.report_violations;
            else
                ++rep.violations;
        }
    }
    return rep;
}

std::string report_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["seed"] = r.opt.seed;
    j["grid"]["alpha_max"] = r.opt.amax;
    j["grid"]["beta_max"] = r.opt.bmax;
    j["instances"] = r.instance_ids;

    long holds = 0, notmet = 0;
    for (const auto& row : r.rows) {
        if (row.outcome == Outcome::kHolds) ++holds;
        if (row.outcome == Outcome::kHypothesisNotMet) ++notmet;
    }
    j["summary"]["rows"] = r.rows.size();
    j["summary"]["holds"] = holds;
    j["summary"]["hypothesis_not_met"] = notmet;
    j["summary"]["violations"] = r.violations;
    j["summary"]["report_violations"] = r.report_violations;

    j["coverage"] = nlohmann::ordered_json::array();
    for (const auto& c : r.coverage) {
        nlohmann::ordered_json e;
        e["theorem"] = c.theorem_id;
        e["satisfied"] = c.satisfied;
        e["violations"] = c.violations;
        e["report_only"] = c.report_only;
        j["coverage"].push_back(std::move(e));
    }

    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        if (row.outcome != Outcome::kViolation) continue;
        const TheoremDef* def = find_theorem(row.theorem_id);
        nlohmann::ordered_json e;
        e["theorem"] = row.theorem_id;
        e["instance"] = row.instance_id;
        e["alpha"] = row.alpha;
        e["beta"] = row.beta;
        e["report_only"] = def ? def->report_only : false;
        e["checked"] = row.checked;
        e["witness"] = row.witness;
        j["violations"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

TheoremResult replay_cell(const std::vector<CorpusInstance>& corpus,
                          const std::string& theorem_id,
                          const std::string& instance_id, int alpha,
                          int beta) {
    const TheoremDef* def = find_theorem(theorem_id);
    if (!def) throw std::invalid_argument("unknown theorem: " + theorem_id);
    for (const auto& inst : corpus)
        if (inst.id == instance_id) {
            InstanceCtx ctx(inst);
            return def->eval(ctx, alpha, beta);
        }
    throw std::invalid_argument("unknown instance: " + instance_id);
}

bool is_classical_ring(const HyperRing& h) {
    if (!h.flags().is_hyperring()) return false;
    for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < h.size(); ++b)
            if (h.mul(a, b).count() != 1) return false;
    return true;
}

}  // namespace hyperlab
