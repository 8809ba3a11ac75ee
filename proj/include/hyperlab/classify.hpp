#pragma once

#include <string>
#include <vector>

#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"

namespace hyperlab {

// Convention for the product family C: kLen1 admits length-1 products
// (singletons), kLen2 starts at genuine two-factor products. Plain
// C-membership is convention-independent (a singleton meeting P lies in P),
// but the sum family U, and with it strong C-ness, is not.
enum class ProductConvention { kLen1, kLen2 };

struct ProductFamily {
    std::vector<ElemSet> products;
    std::vector<ElemSet> sums;  // finite sums of family products, closed
};

// Per-ring cache: powers, the ideal lattice, primes, product/sum families.
// All accessors compute lazily and memoize. The Lab keeps its own copy of
// the ring, so it stays valid independent of the source object's lifetime.
class Lab {
public:
    explicit Lab(HyperRing h, int max_carrier = 128,
                 std::size_t family_limit = 50000);

    const HyperRing& ring() const { return h_; }

    // x^k for k >= 1; the power row extends on demand and is cached.
    const ElemSet& power(int x, int k);

    const std::vector<ElemSet>& ideals();
    const std::vector<ElemSet>& primes();
    bool is_principal_ring();

    const ProductFamily& family(ProductConvention conv);

private:
    HyperRing h_;
    int max_carrier_;
    std::size_t family_limit_;
    std::vector<std::vector<ElemSet>> pow_;  // pow_[x][k-1]
    bool have_ideals_ = false, have_primes_ = false;
    bool have_principal_ = false, principal_ = false;
    std::vector<ElemSet> ideals_, primes_;
    bool have_family_[2] = {false, false};
    ProductFamily family_[2];
};

// Predicates. P must be a hyperideal; predicates about proper ideals throw
// std::invalid_argument when P is the whole carrier.
bool is_prime(Lab& lab, const ElemSet& p);
bool is_maximal(Lab& lab, const ElemSet& p);
bool is_primary(Lab& lab, const ElemSet& p);
bool is_c_hyperideal(Lab& lab, const ElemSet& p,
                     ProductConvention conv = ProductConvention::kLen1);
bool is_strong_c_hyperideal(Lab& lab, const ElemSet& p,
                            ProductConvention conv = ProductConvention::kLen1);

// rad(P): intersection of primes containing P, the full carrier if none.
ElemSet radical_via_primes(Lab& lab, const ElemSet& p);
// D(P) = {x : x^k subset P for some k >= 1}.
ElemSet radical_via_powers(Lab& lab, const ElemSet& p);

bool is_ab_closed(Lab& lab, const ElemSet& p, int alpha, int beta);
bool is_ab_prime(Lab& lab, const ElemSet& p, int alpha, int beta);
bool is_weakly_ab_prime(Lab& lab, const ElemSet& p, int alpha, int beta);

// Residual characterization: for every x with x^beta not subset of P,
// (P : x^alpha) = P. Equivalent to is_ab_prime.
bool residual_characterization(Lab& lab, const ElemSet& p, int alpha,
                               int beta);
// Ideal-pair characterization: x^alpha o P' subset P forces x^beta subset P
// or P' subset P, quantified over the ideal lattice. Equivalent as well.
bool ideal_characterization(Lab& lab, const ElemSet& p, int alpha, int beta);

// Principal-ring variants quantifying the first slot over ideals.
bool principal_pair_characterization(Lab& lab, const ElemSet& p, int alpha,
                                     int beta);      // P1^a o P2 version
bool principal_residual_characterization(Lab& lab, const ElemSet& p,
                                         int alpha, int beta);
bool principal_element_characterization(Lab& lab, const ElemSet& p,
                                        int alpha, int beta);  // P1^a o {y}

// {x : x^beta subset P}.
ElemSet q_of(Lab& lab, const ElemSet& p, int beta);

enum class RegionKind { kPrime, kClosed, kWeaklyPrime };

struct Region {
    RegionKind kind;
    int amax = 0, bmax = 0;
    std::vector<uint8_t> cells;  // row-major, (alpha-1)*bmax + (beta-1)

    bool at(int alpha, int beta) const {
        return cells[static_cast<std::size_t>(alpha - 1) * bmax + (beta - 1)]
               != 0;
    }
};

// Computes the grid and verifies its structural laws: kPrime regions are
// alpha-independent (column law) and beta-up-closed, kClosed regions are
// alpha-down/beta-up monotone, kWeaklyPrime regions are beta-up-closed.
// A law failure is a library bug and throws std::logic_error.
Region compute_region(Lab& lab, const ElemSet& p, RegionKind kind, int amax,
                      int bmax);

struct AbZero {
    int x = 0, y = 0;
};

struct ZeroScan {
    int alpha = 0, beta = 0;
    bool p_is_weakly_prime = false;
    std::vector<AbZero> zeros;
};

// (alpha,beta)-zeros of P: pairs with 0 in x^a o y subset P, x^b not subset
// of P, y not in P. Empty iff weakly prime and prime coincide at (a,b).
ZeroScan find_ab_zeros(Lab& lab, const ElemSet& p, int alpha, int beta);

// {x : 0 in x^t for some t >= 1}.
ElemSet nilpotents(Lab& lab);
// {e : e in e o e}.
ElemSet idempotents(Lab& lab);
// Idempotents other than 0 and the identities.
ElemSet nontrivial_idempotents(Lab& lab);

// Largest stabilization index over x of the chain P_i = (P : x^i),
// P_0 = P; the index is the smallest i with P_i = P_{i+1}.
int max_length(Lab& lab, const ElemSet& p);

// P is not the intersection of two strictly larger ideals.
bool is_irreducible(Lab& lab, const ElemSet& p);

struct ClassificationReport {
    ElemSet ideal;
    bool proper = false;
    bool prime = false, maximal = false, primary = false;
    bool irreducible = false;
    bool c_len1 = false, c_len2 = false;
    bool strong_c_len1 = false, strong_c_len2 = false;
    ElemSet rad_primes, rad_powers;
    bool powers_radical_equals_ideal = false;  // iff closed region is all of Z+^2
    int max_len = 0;
    Region prime_region, closed_region, weakly_region;
    std::vector<int> zero_counts;  // row-major like Region::cells
    std::string to_string() const;
};

ClassificationReport classify_ideal(Lab& lab, const ElemSet& p, int amax = 4,
                                    int bmax = 4);

}  // namespace hyperlab
