#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "hyperlab/elem_set.hpp"
#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"
#include "test_support.hpp"

using namespace hyperlab;
using namespace hyperlab::testing;

TEST_CASE("ElemSet basics") {
    ElemSet s(8);
    CHECK(s.empty());
    s.insert(0);
    s.insert(4);
    CHECK(s.count() == 2);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK(s.to_string() == "{0,4}");
    CHECK(s.elements() == std::vector<int>{0, 4});

    ElemSet t = ElemSet::of(8, {4, 6});
    CHECK((s | t) == ElemSet::of(8, {0, 4, 6}));
    CHECK((s & t) == ElemSet::single(8, 4));
    CHECK(s.minus(t) == ElemSet::single(8, 0));
    CHECK(s.intersects(t));
    CHECK(s.subset_of(ElemSet::of(8, {0, 2, 4, 6})));
    CHECK_FALSE(ElemSet::of(8, {0, 1}).subset_of(s));

    s.erase(4);
    CHECK(s == ElemSet::single(8, 0));

    CHECK(ElemSet::full(3).elements() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(s.insert(8), std::out_of_range);
    CHECK_THROWS_AS(ElemSet(129), std::invalid_argument);
    // 128 carrier exercises the second word
    ElemSet big(128);
    big.insert(127);
    big.insert(63);
    CHECK(big.elements() == std::vector<int>{63, 127});
    CHECK(big.count() == 2);
}

TEST_CASE("classical Z_n as zx_mod(n,{1})") {
    auto z6 = HyperRing::zx_mod(6, {1}, "z6");
    const auto& f = z6.flags();
    CHECK(f.is_hyperring());
    CHECK(f.strongly_distributive);
    CHECK(f.identities == ElemSet::single(6, 1));
    CHECK(f.scalar_identities == ElemSet::single(6, 1));
    CHECK(z6.mul(2, 3) == ElemSet::single(6, 0));
    CHECK(z6.mul(5, 5) == ElemSet::single(6, 1));
    CHECK(z6.zero() == 0);
    CHECK(z6.neg(2) == 4);
    CHECK(z6.sub(1, 3) == 4);
}

TEST_CASE("z8_full multiplication facts") {
    auto h = z8_full();
    const auto& f = h.flags();
    CHECK(f.is_hyperring());
    CHECK_FALSE(f.strongly_distributive);
    CHECK(f.identities == ElemSet::of(8, {1, 3, 5, 7}));
    CHECK(f.scalar_identities.empty());

    CHECK(h.mul(1, 1) == ElemSet::of(8, {1, 2, 3, 4, 5, 6, 7}));
    CHECK(h.mul(2, 2) == ElemSet::of(8, {0, 4}));
    CHECK(h.mul(2, 1) == ElemSet::of(8, {0, 2, 4, 6}));
    CHECK(h.power(2, 2) == ElemSet::of(8, {0, 4}));
    CHECK(h.power(2, 3) == ElemSet::single(8, 0));
    CHECK(h.power(1, 2) == ElemSet::of(8, {1, 2, 3, 4, 5, 6, 7}));
    CHECK_THROWS_AS(h.power(2, 0), std::invalid_argument);

    CHECK(h.subset_product(ElemSet::of(8, {0, 4}), ElemSet::single(8, 2)) ==
          ElemSet::single(8, 0));
    CHECK(h.set_sum(ElemSet::of(8, {0, 4}), ElemSet::of(8, {0, 4})) ==
          ElemSet::of(8, {0, 4}));
    CHECK(h.set_neg(ElemSet::of(8, {1, 2})) == ElemSet::of(8, {6, 7}));
    CHECK(h.set_power(ElemSet::of(8, {2, 6}), 2) == ElemSet::of(8, {0, 4}));
}

TEST_CASE("h4_diag is a genuine non-strongly-distributive hyperring") {
    auto h = h4_diag();
    const auto& f = h.flags();
    CHECK(f.is_hyperring());
    CHECK_FALSE(f.strongly_distributive);
    CHECK(f.identities == ElemSet::of(4, {1, 3}));
    CHECK(f.scalar_identities.empty());
    CHECK(h.mul(1, 1) == ElemSet::of(4, {1, 3}));
    CHECK(h.mul(3, 3) == ElemSet::of(4, {1, 3}));
    CHECK(h.mul(2, 3) == ElemSet::single(4, 2));
    CHECK(h.mul(2, 2) == ElemSet::single(4, 0));
}

TEST_CASE("zero-multiplication ring has no identity") {
    auto h = zero_mul(2);
    CHECK(h.flags().is_hyperring());
    CHECK(h.flags().strongly_distributive);
    CHECK(h.flags().identities.empty());
    CHECK_FALSE(h.has_identity());
}

TEST_CASE("axiom checker rejects broken tables") {
    int n = 3;
    std::vector<int> add(9);
    std::vector<ElemSet> mul(9);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a * 3 + b] = (a + b) % 3;
            mul[a * 3 + b] = ElemSet::single(3, a * b % 3);
        }

    SUBCASE("non-commutative multiplication") {
        mul[1 * 3 + 2] = ElemSet::single(3, 1);  // 1*2 != 2*1
        CHECK_THROWS_AS(HyperRing::from_tables(n, add, mul, "bad", true),
                        std::invalid_argument);
        auto h = HyperRing::from_tables(n, add, mul, "bad", false);
        CHECK_FALSE(h.flags().mul_commutative);
        CHECK_FALSE(h.flags().is_hyperring());
    }

    SUBCASE("empty product") {
        mul[1 * 3 + 1] = ElemSet(3);
        auto h = HyperRing::from_tables(n, add, mul, "bad", false);
        CHECK_FALSE(h.flags().mul_total);
    }

    SUBCASE("addition not a group") {
        add[0] = 1;  // 0+0 = 1 kills the identity
        auto h = HyperRing::from_tables(n, add, mul, "bad", false);
        CHECK_FALSE(h.flags().add_group);
    }

    SUBCASE("distributivity violated") {
        // make 1*2 too big for {1*1} + {1*1} style sums to cover
        mul[1 * 3 + 2] = ElemSet::of(3, {0, 1, 2});
        mul[2 * 3 + 1] = ElemSet::of(3, {0, 1, 2});
        auto h = HyperRing::from_tables(n, add, mul, "bad", false);
        CHECK_FALSE(h.flags().is_hyperring());
    }

    SUBCASE("witness string populated") {
        mul[1 * 3 + 2] = ElemSet::single(3, 1);
        auto h = HyperRing::from_tables(n, add, mul, "bad", false);
        std::string w;
        auto f = check_axioms(h, &w);
        CHECK_FALSE(f.is_hyperring());
        CHECK_FALSE(w.empty());
    }
}

TEST_CASE("zx_mod input validation") {
    CHECK_THROWS_AS(HyperRing::zx_mod(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(HyperRing::zx_mod(6, {}), std::invalid_argument);
    // X entries are taken mod n, duplicates collapse
    auto a = HyperRing::zx_mod(6, {1, 7});
    auto b = HyperRing::zx_mod(6, {1});
    CHECK(a.mul(2, 3) == b.mul(2, 3));
}

TEST_CASE("hyperideal enumeration matches the exhaustive oracle") {
    for (const HyperRing& h :
         {z8_full(), h4_diag(), zero_mul(2), HyperRing::zx_mod(6, {1}, "z6"),
          HyperRing::zx_mod(12, {2, 3}, "zx12_23"),
          HyperRing::zx_mod(9, {1, 2, 3, 4, 5, 6, 7, 8}, "z9_full")}) {
        CAPTURE(h.name());
        auto got = enumerate_hyperideals(h);
        auto want = oracle_ideals(h);
        CHECK(got == want);
    }
}

TEST_CASE("z8_full has exactly the four chain ideals") {
    auto h = z8_full();
    auto ideals = enumerate_hyperideals(h);
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0] == ElemSet::single(8, 0));
    CHECK(ideals[1] == ElemSet::of(8, {0, 4}));
    CHECK(ideals[2] == ElemSet::of(8, {0, 2, 4, 6}));
    CHECK(ideals[3] == ElemSet::full(8));
    for (const auto& I : ideals) CHECK(is_hyperideal(h, I));
    CHECK_FALSE(is_hyperideal(h, ElemSet::of(8, {0, 2})));
    CHECK_FALSE(is_hyperideal(h, ElemSet(8)));
}

TEST_CASE("ideal generation agrees with the worklist oracle") {
    auto h = z8_full();
    for (uint32_t mask = 0; mask < 256; ++mask) {
        ElemSet gens(8);
        for (int i = 0; i < 8; ++i)
            if (mask & (1u << i)) gens.insert(i);
        CAPTURE(mask);
        CHECK(ideal_generate(h, gens) == oracle_generate(h, gens));
    }
    CHECK(ideal_generate(h, ElemSet::single(8, 2)) ==
          ElemSet::of(8, {0, 2, 4, 6}));
    CHECK(ideal_generate(h, ElemSet::single(8, 4)) == ElemSet::of(8, {0, 4}));
    CHECK(ideal_generate(h, ElemSet::single(8, 3)) == ElemSet::full(8));
    CHECK(ideal_generate(h, ElemSet(8)) == ElemSet::single(8, 0));

    auto k = HyperRing::zx_mod(12, {2, 3}, "zx12_23");
    CHECK(ideal_generate(k, ElemSet::single(12, 4)) ==
          ElemSet::of(12, {0, 4, 8}));
    CHECK(ideal_generate(k, ElemSet::single(12, 1)) ==
          oracle_generate(k, ElemSet::single(12, 1)));
}

TEST_CASE("residuals") {
    auto h = z8_full();
    ElemSet zero = ElemSet::single(8, 0);
    ElemSet q = ElemSet::of(8, {0, 4});
    ElemSet evens = ElemSet::of(8, {0, 2, 4, 6});

    CHECK(residual(h, zero, ElemSet::full(8)) == zero);
    CHECK(residual(h, q, ElemSet::single(8, 2)) == evens);
    CHECK(residual(h, evens, ElemSet::single(8, 1)) == evens);
    // (A : B) is itself a hyperideal whenever A is
    for (const auto& A : enumerate_hyperideals(h))
        for (int b = 0; b < 8; ++b)
            CHECK(is_hyperideal(h, residual(h, A, ElemSet::single(8, b))));
}

TEST_CASE("ideal sum and intersection stay ideals") {
    auto k = HyperRing::zx_mod(12, {2, 3}, "zx12_23");
    auto ideals = enumerate_hyperideals(k);
    for (const auto& A : ideals)
        for (const auto& B : ideals) {
            auto s = ideal_sum(k, A, B);
            CHECK(is_hyperideal(k, s));
            CHECK(A.subset_of(s));
            CHECK(B.subset_of(s));
            CHECK(is_hyperideal(k, A & B));
        }
}
