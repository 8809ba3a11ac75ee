#pragma once

// Derived structures: direct products, quotients by a hyperideal, 2x2
// hypermatrices, localization at a multiplicatively closed set, the
// fundamental (classical) quotient ring, and a monomial layer over a ring.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/elem_set.hpp"
#include "hyperlab/hyperring.hpp"

namespace hyperlab {

// ---------- direct product ----------

// Componentwise product. Element (a,b) is encoded as a * h2.size() + b.
HyperRing make_product(const HyperRing& h1, const HyperRing& h2,
                       std::string name = "");

int pair_encode(const HyperRing& h2, int a, int b);
std::pair<int, int> pair_decode(const HyperRing& h2, int p);

// I1 x I2 as an encoded subset of the product carrier.
ElemSet box_ideal(const HyperRing& h1, const HyperRing& h2,
                  const ElemSet& I1, const ElemSet& I2);

// Splits an encoded subset into its factor projections when it is exactly
// their box, nullopt otherwise.
std::optional<std::pair<ElemSet, ElemSet>> decompose_box(
    const HyperRing& h1, const HyperRing& h2, const ElemSet& S);

// ---------- quotient ----------

struct Quotient {
    HyperRing ring;               // carrier = coset indices
    std::vector<int> cls;         // element -> coset index
    std::vector<ElemSet> cosets;  // coset index -> members
};

// H/I with [a] * [b] = { [c] : c in a'*b' }. Representative independence
// is provable from the axioms but is verified anyway; a violation throws.
// Cosets are indexed by their least member, in increasing order.
Quotient make_quotient(const HyperRing& h, const ElemSet& I,
                       std::string name = "");

ElemSet quotient_image(const Quotient& q, const ElemSet& S);
ElemSet quotient_preimage(const Quotient& q, const ElemSet& S);

// ---------- 2x2 hypermatrices ----------

struct MatrixRing {
    HyperRing ring;  // flags are honest: commutativity is usually lost
    int base_n = 0;
};

// [[a,b],[c,d]] encoded as ((a*n + b)*n + c)*n + d. The base must have
// n <= 3. Everything except commutativity is required to survive.
MatrixRing make_matrix_ring(const HyperRing& h, std::string name = "");

int matrix_encode(int n, int a, int b, int c, int d);
std::array<int, 4> matrix_decode(int n, int m);

// Entrywise box: all matrices with every entry in P.
ElemSet matrix_ideal(const MatrixRing& mr, const ElemSet& P);

// ---------- localization ----------

struct Localization {
    HyperRing ring;            // carrier = fraction classes
    std::vector<int> s_elems;  // S, sorted
    std::vector<int> pair_cls; // (x * |S| + index of t in s_elems) -> class
    std::vector<int> natural;  // x -> class of x over the scalar identity

    int cls_of(int x, int t) const;
};

// S^{-1}H. Requires a scalar identity lying in S, 0 not in S, and S
// closed under products. Fractions x1/t1 ~ x2/t2 when t*t1*x2 = t*t2*x1
// for some t in S, closed off transitively. Sums of fractions must land
// in a single class for every choice of representatives and products must
// be representative independent; a failure throws with a witness.
Localization localize(const HyperRing& h, const ElemSet& S,
                      std::string name = "");

// { x/t : x in I, t in S } as a set of classes.
ElemSet localize_ideal(const Localization& loc, const ElemSet& I);

// ---------- fundamental ring ----------

struct FundamentalRing {
    HyperRing ring;               // classical: every product a singleton
    std::vector<int> cls;         // element -> class index
    std::vector<ElemSet> classes; // class index -> members
};

// Quotient by gamma*: x ~ y when some finite sum of finite products
// contains both; products of length one count, so the relation is
// reflexive. Classes are indexed by their least member, in increasing
// order. Well-definedness of both induced operations is verified; a
// violation throws.
FundamentalRing make_fundamental_ring(const HyperRing& h,
                                      std::size_t family_limit = 50000,
                                      std::string name = "");

ElemSet fundamental_image(const FundamentalRing& f, const ElemSet& S);

// True when S is a union of gamma* classes.
bool is_saturated(const FundamentalRing& f, const ElemSet& S);

// ---------- monomial layer ----------

// Monomials u x^n with coefficients in H and (u x^n)(v x^m) = (u*v) x^{n+m}.
// A monomial lies in the ideal extended from P when its coefficient does.
// The check walks all monomial pairs up to degree_cap and tests the prime
// condition for the extended ideal, which lands back in H degree by degree.
struct MonomialCheck {
    bool holds = true;
    int u = -1, n = -1, v = -1, m = -1;  // witness on failure
};

MonomialCheck monomial_ab_prime_check(const HyperRing& h, const ElemSet& P,
                                      int alpha, int beta,
                                      int degree_cap = 2);

}  // namespace hyperlab
