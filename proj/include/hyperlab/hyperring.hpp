#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/elem_set.hpp"

namespace hyperlab {

// Outcome of checking the multiplicative-hyperring axioms on a finite
// structure. `identity` collects every e with a in a*e for all a;
// `scalar_identity` those with a*e = {a} for all a.
struct AxiomFlags {
    bool add_group = false;           // (H,+) abelian group
    bool mul_total = false;           // all products nonempty
    bool mul_commutative = false;
    bool mul_associative = false;     // as subset products
    bool distributive = false;        // a*(b+c) subset of a*b + a*c, both sides
    bool strongly_distributive = false;  // equality in the above
    bool sign_rule = false;           // a*(-b) = (-a)*b = -(a*b)
    ElemSet identities;
    ElemSet scalar_identities;

    bool is_hyperring() const {
        return add_group && mul_total && mul_commutative && mul_associative &&
               distributive && sign_rule;
    }
};

// Finite commutative multiplicative hyperring on carrier {0..n-1}.
// Addition is single-valued (a group); multiplication is set-valued.
// Tables are stored flat, row-major.
class HyperRing {
public:
    // Validates the tables and computes axiom flags. If `strict`, throws
    // std::invalid_argument (with a witness in the message) unless every
    // hyperring axiom holds; otherwise records the flags and carries on,
    // which lets tests build near-misses on purpose.
    static HyperRing from_tables(int n, std::vector<int> add,
                                 std::vector<ElemSet> mul,
                                 std::string name = "", bool strict = true);

    // a*b = { a*x*b mod n : x in X }, addition mod n. Always a hyperring;
    // X = {1} gives the classical ring Z_n.
    static HyperRing zx_mod(int n, const std::vector<int>& X,
                            std::string name = "");

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    const AxiomFlags& flags() const { return flags_; }

    int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int zero() const { return zero_; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    const ElemSet& mul(int a, int b) const {
        return mul_[static_cast<size_t>(a) * n_ + b];
    }

    bool has_identity() const { return !flags_.identities.empty(); }
    bool has_scalar_identity() const { return !flags_.scalar_identities.empty(); }

    // A * B = union of a*b over a in A, b in B.
    ElemSet subset_product(const ElemSet& A, const ElemSet& B) const;

    // A + B = { a + b } (single-valued addition lifted to sets).
    ElemSet set_sum(const ElemSet& A, const ElemSet& B) const;

    ElemSet set_neg(const ElemSet& A) const;

    // x^k as a subset product of k copies of {x}; k >= 1.
    ElemSet power(int x, int k) const;

    // A^k for a set; k >= 1.
    ElemSet set_power(const ElemSet& A, int k) const;

private:
    HyperRing() = default;

    int n_ = 0;
    std::vector<int> add_;       // n*n
    std::vector<int> neg_;       // n
    int zero_ = 0;
    std::vector<ElemSet> mul_;   // n*n
    AxiomFlags flags_;
    std::string name_;

    friend AxiomFlags check_axioms(const HyperRing& h,
                                   std::string* witness);
};

// Recomputes the axiom flags from scratch (the constructor already stores
// them; exposed for tests and the CLI's `check` subcommand). If `witness`
// is non-null it receives a human-readable description of the first
// violated axiom, empty when all hold.
AxiomFlags check_axioms(const HyperRing& h, std::string* witness = nullptr);

}  // namespace hyperlab
