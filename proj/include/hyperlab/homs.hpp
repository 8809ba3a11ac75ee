#pragma once

// Good homomorphisms between hyperrings: additive maps which carry each
// product set exactly onto the product of the images.

#include <string>
#include <vector>

#include "hyperlab/constructs.hpp"
#include "hyperlab/elem_set.hpp"
#include "hyperlab/hyperring.hpp"

namespace hyperlab {

// Owns copies of both rings so it cannot dangle.
struct GoodHom {
    HyperRing dom;
    HyperRing cod;
    std::vector<int> map;  // dom element -> cod element
    std::string name;

    int operator()(int x) const { return map[x]; }
};

// f(a+b) = f(a)+f(b) and { f(z) : z in a*b } = f(a)*f(b) as sets.
// On failure, *why names the offending pair.
bool verify_good_hom(const HyperRing& h1, const HyperRing& h2,
                     const std::vector<int>& f, std::string* why = nullptr);

// Verifies and packages; throws std::invalid_argument when not a good hom.
GoodHom make_hom(const HyperRing& h1, const HyperRing& h2, std::vector<int> f,
                 std::string name = "");

ElemSet hom_kernel(const GoodHom& f);
ElemSet hom_image(const GoodHom& f, const ElemSet& S);
ElemSet hom_preimage(const GoodHom& f, const ElemSet& T);
bool is_surjective(const GoodHom& f);

// Canonical maps. Each one is still run through the verifier.
GoodHom quotient_projection(const HyperRing& h, const Quotient& q);
GoodHom product_projection(const HyperRing& prod, const HyperRing& h1,
                           const HyperRing& h2, int which);
GoodHom product_injection(const HyperRing& prod, const HyperRing& h1,
                          const HyperRing& h2, int which);

}  // namespace hyperlab
