#include "hyperlab/homs.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperlab/classify.hpp"
#include "test_support.hpp"

using namespace hyperlab;
using namespace hyperlab::testing;

TEST_CASE("good hom verification: positives and negatives") {
    HyperRing h = z8_full();

    // identity and multiplication by 3 are automorphisms of z8_full:
    // 3*{1..7} is {1..7} again mod 8, so product sets are preserved
    std::vector<int> id(8), tri(8);
    for (int x = 0; x < 8; ++x) {
        id[x] = x;
        tri[x] = 3 * x % 8;
    }
    CHECK(verify_good_hom(h, h, id));
    CHECK(verify_good_hom(h, h, tri));

    // the zero map is a good hom since 0*0 = {0}
    std::vector<int> zero(8, 0);
    CHECK(verify_good_hom(h, h, zero));

    // doubling on classical Z6 is additive but breaks products at (1,1)
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    std::vector<int> dbl(6);
    for (int x = 0; x < 6; ++x) dbl[x] = 2 * x % 6;
    std::string why;
    CHECK_FALSE(verify_good_hom(z6, z6, dbl, &why));
    CHECK(why.find("1") != std::string::npos);

    // non-additive map
    std::vector<int> shift(6);
    for (int x = 0; x < 6; ++x) shift[x] = (x + 1) % 6;
    CHECK_FALSE(verify_good_hom(z6, z6, shift));

    CHECK_THROWS_AS(make_hom(z6, z6, dbl), std::invalid_argument);
    CHECK_THROWS_AS(make_hom(z6, z6, std::vector<int>{0, 1}),
                    std::invalid_argument);

    GoodHom f = make_hom(h, h, tri, "times3");
    CHECK(f(2) == 6);
    CHECK(is_surjective(f));
    CHECK(hom_kernel(f) == ElemSet::single(8, 0));
    GoodHom g = make_hom(h, h, zero);
    CHECK(hom_kernel(g) == ElemSet::full(8));  // improper kernel
    CHECK_FALSE(is_surjective(g));
}

TEST_CASE("quotient projection: kernel, images, prime transfer instance") {
    HyperRing h = z8_full();
    Quotient q = make_quotient(h, ElemSet::of(8, {0, 4}), "q84");
    GoodHom pi = quotient_projection(h, q);

    CHECK(is_surjective(pi));
    CHECK(hom_kernel(pi) == ElemSet::of(8, {0, 4}));
    CHECK(hom_image(pi, ElemSet::of(8, {0, 2, 4, 6})) == ElemSet::of(4, {0, 2}));
    CHECK(hom_preimage(pi, ElemSet::single(4, 0)) == ElemSet::of(8, {0, 4}));
    CHECK(hom_preimage(pi, ElemSet::of(4, {0, 2})) == ElemSet::of(8, {0, 2, 4, 6}));

    // {0,2} is prime downstairs and pulls back to the evens, prime upstairs
    Lab ldown(q.ring);
    Lab lup(h);
    ElemSet pdown = ElemSet::of(4, {0, 2});
    REQUIRE(is_prime(ldown, pdown));
    CHECK(is_prime(lup, hom_preimage(pi, pdown)));
}

TEST_CASE("product projections and injections") {
    HyperRing z4 = HyperRing::zx_mod(4, {1}, "z4_cl");
    HyperRing z6 = HyperRing::zx_mod(6, {1}, "z6_cl");
    HyperRing p = make_product(z4, z6, "z4xz6");

    GoodHom p1 = product_projection(p, z4, z6, 1);
    GoodHom p2 = product_projection(p, z4, z6, 2);
    CHECK(is_surjective(p1));
    CHECK(is_surjective(p2));
    CHECK(p1(pair_encode(z6, 3, 5)) == 3);
    CHECK(p2(pair_encode(z6, 3, 5)) == 5);
    CHECK(hom_kernel(p1) == box_ideal(z4, z6, ElemSet::single(4, 0), ElemSet::full(6)));
    CHECK(hom_kernel(p2) == box_ideal(z4, z6, ElemSet::full(4), ElemSet::single(6, 0)));

    GoodHom i1 = product_injection(p, z4, z6, 1);
    GoodHom i2 = product_injection(p, z4, z6, 2);
    CHECK_FALSE(is_surjective(i1));
    CHECK(i1(3) == pair_encode(z6, 3, 0));
    CHECK(i2(5) == pair_encode(z6, 0, 5));
    CHECK(hom_kernel(i1) == ElemSet::single(4, 0));
    CHECK(hom_image(i1, ElemSet::full(4)) ==
          box_ideal(z4, z6, ElemSet::full(4), ElemSet::single(6, 0)));

    // preimage of a box under the injection is the first factor slice:
    // i1^{-1}(H1 x {0,3}) is all of Z4, an improper pullback
    ElemSet improper = hom_preimage(i1, box_ideal(z4, z6, ElemSet::full(4),
                                                  ElemSet::of(6, {0, 3})));
    CHECK(improper == ElemSet::full(4));

    GoodHom pih = product_projection(make_product(h4_diag(), zero_mul(2)),
                                     h4_diag(), zero_mul(2), 1);
    CHECK(is_surjective(pih));
    CHECK(hom_kernel(pih).count() == 2);

    CHECK_THROWS_AS(product_projection(p, z4, z6, 3), std::invalid_argument);
    CHECK_THROWS_AS(product_projection(z4, z4, z6, 1), std::invalid_argument);
}
