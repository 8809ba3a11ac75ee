#include "hyperlab/zx.hpp"

#include <stdexcept>

namespace hyperlab::zx {

IntSet zx_product(const IntSet& A, const IntSet& B,
                  const std::vector<mpz_class>& X) {
    if (X.empty()) throw std::invalid_argument("zx_product: X is empty");
    IntSet out;
    for (const mpz_class& a : A)
        for (const mpz_class& b : B)
            for (const mpz_class& x : X) out.insert(a * x * b);
    return out;
}

IntSet zx_power(const mpz_class& a, int k, const std::vector<mpz_class>& X) {
    if (k < 1) throw std::invalid_argument("zx_power: k must be at least 1");
    IntSet cur{a};
    for (int i = 1; i < k; ++i) cur = zx_product(cur, IntSet{a}, X);
    return cur;
}

bool in_principal(const mpz_class& m, const IntSet& S) {
    if (m < 1) throw std::invalid_argument("in_principal: modulus must be >= 1");
    for (const mpz_class& v : S)
        if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) return false;
    return true;
}

bool violates_claim(const ZxClaim& claim, const mpz_class& x,
                    const mpz_class& y) {
    if (claim.alpha < 1 || claim.beta < 1)
        throw std::invalid_argument("violates_claim: exponents start at 1");
    IntSet xa = zx_power(x, claim.alpha, claim.X);
    if (claim.kind == ClaimKind::kClosed)
        return in_principal(claim.modulus, xa) &&
               !in_principal(claim.modulus, zx_power(x, claim.beta, claim.X));
    IntSet lhs = zx_product(xa, IntSet{y}, claim.X);
    if (!in_principal(claim.modulus, lhs)) return false;
    if (claim.kind == ClaimKind::kWeaklyPrime && lhs.count(0)) return false;
    return !in_principal(claim.modulus, zx_power(x, claim.beta, claim.X)) &&
           !mpz_divisible_p(y.get_mpz_t(), claim.modulus.get_mpz_t());
}

namespace {

// 0, 1, -1, 2, -2, ...
mpz_class nth_in_scan(long i) {
    long mag = (i + 1) / 2;
    return i % 2 == 1 ? mpz_class(mag) : mpz_class(-mag);
}

}  // namespace

BoundedVerdict bounded_claim_check(const ZxClaim& claim, long bound) {
    if (bound < 0) throw std::invalid_argument("bounded_claim_check: bad bound");
    BoundedVerdict v;
    v.note = "bounded scan up to " + std::to_string(bound) +
             "; evidence, not proof";
    long points = 2 * bound + 1;
    for (long i = 0; i < points; ++i) {
        mpz_class x = nth_in_scan(i);
        if (claim.kind == ClaimKind::kClosed) {
            ++v.checked;
            if (violates_claim(claim, x)) {
                v.counterexample = true;
                v.x = x;
                return v;
            }
            continue;
        }
        for (long j = 0; j < points; ++j) {
            mpz_class y = nth_in_scan(j);
            ++v.checked;
            if (violates_claim(claim, x, y)) {
                v.counterexample = true;
                v.x = x;
                v.y = y;
                return v;
            }
        }
    }
    return v;
}

}  // namespace hyperlab::zx
