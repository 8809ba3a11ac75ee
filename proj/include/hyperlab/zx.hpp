#pragma once

// Exact arithmetic for the Z_X hyperrings over the full integers: a*b =
// { a x b : x in X }. Finite carriers cannot host these witnesses, so sets
// here are arbitrary-precision and claims are only ever checked on a
// bounded window: a clean scan is evidence, not proof.

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace hyperlab::zx {

using IntSet = std::set<mpz_class>;

IntSet zx_product(const IntSet& A, const IntSet& B,
                  const std::vector<mpz_class>& X);

// left-fold hyperpower, k >= 1
IntSet zx_power(const mpz_class& a, int k, const std::vector<mpz_class>& X);

// Membership oracle for the principal hyperideal <m> = mZ, m >= 1: true
// iff every member of S is divisible by m. Additive closure of {m} gives
// all multiples and absorption r*m stays inside mZ, so <m> really is mZ;
// the tests exercise this on a small window.
bool in_principal(const mpz_class& m, const IntSet& S);

enum class ClaimKind { kClosed, kPrime, kWeaklyPrime };

// An (alpha,beta) claim about the principal hyperideal <modulus> of Z_X.
struct ZxClaim {
    ClaimKind kind;
    mpz_class modulus;
    int alpha = 1;
    int beta = 1;
    std::vector<mpz_class> X;
};

// Direct evaluation of the defining implication at one point: true when
// (x,y) violates the claim. y is ignored for kClosed.
bool violates_claim(const ZxClaim& claim, const mpz_class& x,
                    const mpz_class& y = 0);

struct BoundedVerdict {
    bool counterexample = false;
    mpz_class x, y;   // first violation in scan order (y unused for kClosed)
    long checked = 0; // points (kClosed) or pairs examined
    std::string note; // reiterates that a clean scan proves nothing
};

// Scans x (and y for the prime kinds) over 0, 1, -1, 2, -2, ... up to
// |x|,|y| <= bound and stops at the first violation.
BoundedVerdict bounded_claim_check(const ZxClaim& claim, long bound);

}  // namespace hyperlab::zx
