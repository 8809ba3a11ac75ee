#include "hyperlab/constructs.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hyperlab/classify.hpp"
#include "hyperlab/ideals.hpp"
#include "test_support.hpp"

using namespace hyperlab;
using namespace hyperlab::testing;

namespace {

ElemSet evens(int n) {
    ElemSet s(n);
    for (int i = 0; i < n; i += 2) s.insert(i);
    return s;
}

}  // namespace

TEST_CASE("product: componentwise tables and box ideals") {
    HyperRing z4 = HyperRing::zx_mod(4, {1}, "z4_cl");
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    HyperRing p = make_product(z4, z6, "z4xz6");

    CHECK(p.size() == 24);
    CHECK(p.flags().is_hyperring());
    CHECK(p.flags().strongly_distributive);
    // scalar identity is the pair of scalar identities
    CHECK(p.flags().scalar_identities == ElemSet::single(24, pair_encode(z6, 1, 1)));

    CHECK(pair_encode(z6, 3, 5) == 23);
    CHECK(pair_decode(z6, 23) == std::pair<int, int>{3, 5});
    CHECK(p.add(pair_encode(z6, 3, 5), pair_encode(z6, 1, 1)) == 0);
    CHECK(p.mul(pair_encode(z6, 2, 3), pair_encode(z6, 2, 2)) == ElemSet::single(24, 0));

    // classical factors: ideal lattice is the product of the factor lattices
    auto ideals = enumerate_hyperideals(p, 24);
    CHECK(ideals.size() == 12);
    for (const auto& I : ideals) {
        auto parts = decompose_box(z4, z6, I);
        REQUIRE(parts.has_value());
        CHECK(is_hyperideal(z4, parts->first));
        CHECK(is_hyperideal(z6, parts->second));
        CHECK(box_ideal(z4, z6, parts->first, parts->second) == I);
    }

    ElemSet i1 = ElemSet::of(4, {0, 2});
    ElemSet i2 = ElemSet::of(6, {0, 3});
    ElemSet box = box_ideal(z4, z6, i1, i2);
    CHECK(box.count() == 4);
    CHECK(is_hyperideal(p, box));
    auto back = decompose_box(z4, z6, box);
    REQUIRE(back.has_value());
    CHECK(back->first == i1);
    CHECK(back->second == i2);
}

TEST_CASE("product: genuine hyper factor and non-box subsets") {
    HyperRing h4 = h4_diag();
    HyperRing m2 = zero_mul(2);
    HyperRing p = make_product(h4, m2, "h4xzm2");

    CHECK(p.size() == 8);
    CHECK(p.flags().is_hyperring());
    // h4 has identities but zm2 has none, so the product has none
    CHECK(p.flags().identities.empty());

    // (1,0)*(3,1) = (1*3) x (0*1) = {1,3} x {0}
    ElemSet got = p.mul(pair_encode(m2, 1, 0), pair_encode(m2, 3, 1));
    CHECK(got == ElemSet::of(8, {pair_encode(m2, 1, 0), pair_encode(m2, 3, 0)}));

    // zm2 x zm2: additively Klein, trivial multiplication. Five ideals,
    // and the diagonal {(0,0),(1,1)} is the one that is not a box.
    HyperRing k = make_product(m2, zero_mul(2), "zm2xzm2");
    auto ideals = enumerate_hyperideals(k, 4);
    CHECK(ideals.size() == 5);
    int boxes = 0;
    for (const auto& I : ideals)
        if (decompose_box(m2, m2, I).has_value()) ++boxes;
    CHECK(boxes == 4);
    CHECK_FALSE(decompose_box(m2, m2, ElemSet::of(4, {0, 3})).has_value());
}

TEST_CASE("quotient: z8_full mod {0,4}") {
    HyperRing h = z8_full();
    Quotient q = make_quotient(h, ElemSet::of(8, {0, 4}), "q84");

    REQUIRE(q.ring.size() == 4);
    CHECK(q.cosets[0] == ElemSet::of(8, {0, 4}));
    CHECK(q.cosets[1] == ElemSet::of(8, {1, 5}));
    CHECK(q.cosets[2] == ElemSet::of(8, {2, 6}));
    CHECK(q.cosets[3] == ElemSet::of(8, {3, 7}));
    CHECK(q.cls[5] == 1);
    CHECK(q.cls[6] == 2);

    CHECK(q.ring.flags().is_hyperring());
    CHECK(q.ring.mul(1, 1) == ElemSet::full(4));
    CHECK(q.ring.mul(2, 2) == ElemSet::single(4, 0));
    CHECK(q.ring.mul(2, 1) == ElemSet::of(4, {0, 2}));
    // odd cosets stay identities, none scalar
    CHECK(q.ring.flags().identities == ElemSet::of(4, {1, 3}));
    CHECK(q.ring.flags().scalar_identities.empty());

    CHECK(quotient_image(q, evens(8)) == ElemSet::of(4, {0, 2}));
    CHECK(quotient_preimage(q, ElemSet::single(4, 0)) == ElemSet::of(8, {0, 4}));
    CHECK(quotient_preimage(q, ElemSet::of(4, {1, 3})) == ElemSet::of(8, {1, 3, 5, 7}));
}

TEST_CASE("quotient: two-class quotients and bad input") {
    Quotient qe = make_quotient(z8_full(), evens(8), "q8e");
    REQUIRE(qe.ring.size() == 2);
    CHECK(qe.ring.mul(1, 1) == ElemSet::full(2));
    CHECK(qe.ring.mul(1, 0) == ElemSet::single(2, 0));
    CHECK(qe.ring.flags().identities == ElemSet::single(2, 1));
    CHECK(qe.ring.flags().scalar_identities.empty());

    // h4_diag mod {0,2} collapses the hyper product: classical Z2
    Quotient qh = make_quotient(h4_diag(), ElemSet::of(4, {0, 2}), "h4q");
    REQUIRE(qh.ring.size() == 2);
    CHECK(qh.ring.mul(1, 1) == ElemSet::single(2, 1));
    CHECK(qh.ring.flags().scalar_identities == ElemSet::single(2, 1));

    CHECK_THROWS_AS(make_quotient(z8_full(), ElemSet::of(8, {0, 1})),
                    std::invalid_argument);
}

TEST_CASE("matrix ring: encoding, honest flags, classical identity") {
    HyperRing z2 = HyperRing::zx_mod(2, {1}, "z2_cl");
    MatrixRing mr = make_matrix_ring(z2, "m2z2");

    REQUIRE(mr.ring.size() == 16);
    CHECK(mr.base_n == 2);
    CHECK(matrix_encode(2, 1, 0, 0, 1) == 9);
    CHECK(matrix_decode(2, 9) == std::array<int, 4>{1, 0, 0, 1});

    const AxiomFlags& f = mr.ring.flags();
    CHECK(f.add_group);
    CHECK(f.mul_total);
    CHECK(f.mul_associative);
    CHECK(f.distributive);
    CHECK(f.sign_rule);
    CHECK_FALSE(f.mul_commutative);
    CHECK(f.identities.contains(9));
    CHECK(f.scalar_identities.contains(9));

    // E01 * E10 = E00 but E10 * E01 = E11
    int e01 = matrix_encode(2, 0, 1, 0, 0);
    int e10 = matrix_encode(2, 0, 0, 1, 0);
    CHECK(mr.ring.mul(e01, e10) == ElemSet::single(16, matrix_encode(2, 1, 0, 0, 0)));
    CHECK(mr.ring.mul(e10, e01) == ElemSet::single(16, matrix_encode(2, 0, 0, 0, 1)));

    CHECK(matrix_ideal(mr, ElemSet::single(2, 0)) == ElemSet::single(16, 0));
    CHECK(matrix_ideal(mr, ElemSet::full(2)) == ElemSet::full(16));

    MatrixRing mr3 = make_matrix_ring(HyperRing::zx_mod(3, {1}, "z3_cl"));
    CHECK(mr3.ring.size() == 81);
    CHECK(mr3.ring.flags().scalar_identities.contains(matrix_encode(3, 1, 0, 0, 1)));
    CHECK_FALSE(mr3.ring.flags().mul_commutative);

    CHECK_THROWS_AS(make_matrix_ring(HyperRing::zx_mod(4, {1})),
                    std::invalid_argument);
}

TEST_CASE("matrix ring: zero-multiplication base and prime transfer instance") {
    MatrixRing mr = make_matrix_ring(zero_mul(2), "m2zm2");
    REQUIRE(mr.ring.size() == 16);
    CHECK(mr.ring.flags().mul_commutative);  // everything multiplies to zero
    CHECK(mr.ring.flags().identities.empty());
    CHECK(mr.ring.mul(5, 7) == ElemSet::single(16, 0));

    // M2({0}) is (1,2)-prime but not (1,1)-prime, matching the base
    ElemSet mz = matrix_ideal(mr, ElemSet::single(2, 0));
    Lab lm(mr.ring);
    CHECK(is_ab_prime(lm, mz, 1, 2));
    CHECK_FALSE(is_ab_prime(lm, mz, 1, 1));
    Lab lb(zero_mul(2));
    CHECK(is_ab_prime(lb, ElemSet::single(2, 0), 1, 2));
    CHECK_FALSE(is_ab_prime(lb, ElemSet::single(2, 0), 1, 1));
}

TEST_CASE("localization: z6 at powers of two collapses to Z3") {
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    Localization loc = localize(z6, ElemSet::of(6, {1, 2, 4}), "z6_at_2");

    REQUIRE(loc.ring.size() == 3);
    CHECK(loc.ring.flags().is_hyperring());
    CHECK(loc.ring.has_scalar_identity());

    // x/1 lands on x mod 3
    CHECK(loc.natural == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(loc.cls_of(4, 2) == loc.cls_of(2, 1));  // 4/2 = 2/1
    CHECK(loc.cls_of(1, 2) != loc.cls_of(1, 1));  // 1/2 is not 1/1
    CHECK(loc.cls_of(5, 2) == loc.cls_of(1, 1));  // 5/2 = 1/1 since 5*2=10=4*1*... via t=2

    // ring structure is Z3: 2/1 + 2/1 = 1/1 and (2/1)^2 = 1/1
    int c2 = loc.natural[2], c1 = loc.natural[1];
    CHECK(loc.ring.add(c2, c2) == c1);
    CHECK(loc.ring.mul(c2, c2) == ElemSet::single(3, c1));

    // 3Z6 dies, 2Z6 blows up to everything
    CHECK(localize_ideal(loc, ElemSet::of(6, {0, 3})) == ElemSet::single(3, loc.natural[0]));
    CHECK(localize_ideal(loc, ElemSet::of(6, {0, 2, 4})) == ElemSet::full(3));

    // localizing at {1,3} kills the 3-part instead
    Localization l3 = localize(z6, ElemSet::of(6, {1, 3}), "z6_at_3");
    REQUIRE(l3.ring.size() == 2);
    CHECK(l3.natural == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(localize_ideal(l3, ElemSet::of(6, {0, 2, 4})) == ElemSet::single(2, l3.natural[0]));
}

TEST_CASE("localization: input validation") {
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    // scalar identity must lie in S
    CHECK_THROWS_AS(localize(z6, ElemSet::of(6, {2, 4})), std::invalid_argument);
    // zero cannot lie in S
    CHECK_THROWS_AS(localize(z6, ElemSet::of(6, {0, 1, 2, 4})), std::invalid_argument);
    // S must be closed under products: 3*3 = 3 is fine, 2*3 = 0 outside
    CHECK_THROWS_AS(localize(z6, ElemSet::of(6, {1, 2, 3})), std::invalid_argument);
    // z8_full has identities but no scalar identity
    CHECK_THROWS_AS(localize(z8_full(), ElemSet::single(8, 1)), std::invalid_argument);
}

TEST_CASE("fundamental ring: h4_diag collapses to classical Z2") {
    FundamentalRing f = make_fundamental_ring(h4_diag());
    REQUIRE(f.ring.size() == 2);
    CHECK(f.cls == std::vector<int>{0, 1, 0, 1});
    CHECK(f.classes[0] == ElemSet::of(4, {0, 2}));
    CHECK(f.classes[1] == ElemSet::of(4, {1, 3}));
    CHECK(f.ring.mul(1, 1) == ElemSet::single(2, 1));
    CHECK(f.ring.flags().scalar_identities == ElemSet::single(2, 1));

    CHECK(fundamental_image(f, ElemSet::of(4, {0, 2})) == ElemSet::single(2, 0));
    CHECK(is_saturated(f, ElemSet::of(4, {0, 2})));
    CHECK_FALSE(is_saturated(f, ElemSet::single(4, 0)));
}

TEST_CASE("fundamental ring: collapse spectrum across fixtures") {
    // z8_full glues everything together
    FundamentalRing f8 = make_fundamental_ring(z8_full());
    CHECK(f8.ring.size() == 1);

    // zero multiplication: gamma* is trivial, the ring is itself (no identity)
    FundamentalRing fm = make_fundamental_ring(zero_mul(4));
    REQUIRE(fm.ring.size() == 4);
    CHECK(fm.cls == std::vector<int>{0, 1, 2, 3});
    CHECK(fm.ring.mul(3, 3) == ElemSet::single(4, 0));
    CHECK(fm.ring.flags().identities.empty());

    // classical input: gamma* is equality, the ring comes back unchanged
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    FundamentalRing f6 = make_fundamental_ring(z6);
    REQUIRE(f6.ring.size() == 6);
    CHECK(f6.ring.mul(2, 3) == ElemSet::single(6, 0));
    CHECK(f6.ring.flags().scalar_identities == ElemSet::single(6, 1));
}

TEST_CASE("fundamental ring: parity and mod-6 collapses with weakly-prime gap") {
    // X = {2,4}: gamma* identifies by parity, fundamental is Z2 with zero product
    HyperRing h24 = HyperRing::zx_mod(12, {2, 4}, "zx12_24");
    FundamentalRing f24 = make_fundamental_ring(h24);
    REQUIRE(f24.ring.size() == 2);
    for (int x = 0; x < 12; ++x) CHECK(f24.cls[x] == x % 2);
    CHECK(f24.ring.mul(1, 1) == ElemSet::single(2, 0));
    CHECK(f24.ring.flags().identities.empty());

    // evens are a saturated hyperideal whose image is the zero ideal; the
    // image is weakly prime downstairs while the source is not upstairs,
    // so the ring-to-hyperring direction genuinely fails
    ElemSet ev = evens(12);
    REQUIRE(is_hyperideal(h24, ev));
    CHECK(is_saturated(f24, ev));
    Lab down24(f24.ring);
    CHECK(is_weakly_ab_prime(down24, fundamental_image(f24, ev), 1, 1));
    Lab up24(h24);
    CHECK_FALSE(is_weakly_ab_prime(up24, ev, 1, 1));

    // X = {3,9}: gamma* classes are residues mod 6, product is 3ab mod 6
    HyperRing h39 = HyperRing::zx_mod(12, {3, 9}, "zx12_39");
    FundamentalRing f39 = make_fundamental_ring(h39);
    REQUIRE(f39.ring.size() == 6);
    for (int x = 0; x < 12; ++x) CHECK(f39.cls[x] == x % 6);
    CHECK(f39.ring.mul(1, 1) == ElemSet::single(6, 3));
    CHECK(f39.ring.mul(2, 3) == ElemSet::single(6, 0));
    CHECK(f39.ring.mul(5, 5) == ElemSet::single(6, 3));
    CHECK(f39.ring.flags().identities.empty());

    ElemSet p06 = ElemSet::of(12, {0, 6});
    REQUIRE(is_hyperideal(h39, p06));
    CHECK(is_saturated(f39, p06));
    Lab down39(f39.ring);
    CHECK(is_weakly_ab_prime(down39, fundamental_image(f39, p06), 1, 1));
    Lab up39(h39);
    CHECK_FALSE(is_weakly_ab_prime(up39, p06, 1, 1));
}

TEST_CASE("monomial layer: prime check matches the base ring") {
    HyperRing h = z8_full();
    ElemSet ev = evens(8), q = ElemSet::of(8, {0, 4});

    for (int a = 1; a <= 3; ++a) {
        CHECK(monomial_ab_prime_check(h, ev, a, 1).holds);
        CHECK(monomial_ab_prime_check(h, q, a, 2).holds);
    }

    MonomialCheck bad = monomial_ab_prime_check(h, q, 3, 1);
    REQUIRE_FALSE(bad.holds);
    // the witness really violates the extended prime condition
    REQUIRE(bad.u >= 0);
    REQUIRE(bad.v >= 0);
    CHECK(bad.n >= 0);
    CHECK(bad.m >= 0);
    Lab l(h);
    CHECK(h.subset_product(l.power(bad.u, 3), ElemSet::single(8, bad.v)).subset_of(q));
    CHECK_FALSE(ElemSet::single(8, bad.u).subset_of(q));
    CHECK_FALSE(q.contains(bad.v));

    // degree-capped check agrees with the base predicate across fixtures
    for (const HyperRing& ring : {z8_full(), h4_diag(), zero_mul(4)}) {
        Lab lab(ring);
        for (const auto& P : lab.ideals()) {
            if (P == ElemSet::full(ring.size())) continue;
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b)
                    CHECK(monomial_ab_prime_check(ring, P, a, b).holds ==
                          is_ab_prime(lab, P, a, b));
        }
    }
}
