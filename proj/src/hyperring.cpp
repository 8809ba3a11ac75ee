#include "hyperlab/hyperring.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace hyperlab {

ElemSet HyperRing::subset_product(const ElemSet& A, const ElemSet& B) const {
    ElemSet out(n_);
    for (int a : A.elements())
        for (int b : B.elements()) out |= mul(a, b);
    return out;
}

ElemSet HyperRing::set_sum(const ElemSet& A, const ElemSet& B) const {
    ElemSet out(n_);
    for (int a : A.elements())
        for (int b : B.elements()) out.insert(add(a, b));
    return out;
}

ElemSet HyperRing::set_neg(const ElemSet& A) const {
    ElemSet out(n_);
    for (int a : A.elements()) out.insert(neg(a));
    return out;
}

ElemSet HyperRing::power(int x, int k) const {
    return set_power(ElemSet::single(n_, x), k);
}

ElemSet HyperRing::set_power(const ElemSet& A, int k) const {
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
    ElemSet out = A;
    for (int i = 1; i < k; ++i) out = subset_product(out, A);
    return out;
}

namespace {

// Sumsets repeat heavily inside the distributivity sweep; memoize on the
// (unordered) pair of operands.
class SumsetCache {
public:
    explicit SumsetCache(const HyperRing& h) : h_(h) {}

    const ElemSet& sum(const ElemSet& A, const ElemSet& B) {
        auto key = (B < A) ? std::make_pair(B, A) : std::make_pair(A, B);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, h_.set_sum(A, B)).first;
        return it->second;
    }

private:
    const HyperRing& h_;
    std::map<std::pair<ElemSet, ElemSet>, ElemSet> memo_;
};

}  // namespace

AxiomFlags check_axioms(const HyperRing& h, std::string* witness) {
    const int n = h.size();
    AxiomFlags f;
    f.identities = ElemSet(n);
    f.scalar_identities = ElemSet(n);
    std::string why;

    // (H,+): identity, inverses, associativity, commutativity. The stored
    // zero/neg tables are trusted only after re-deriving them here.
    f.add_group = true;
    int zero = -1;
    for (int e = 0; e < n && zero < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (h.add(e, a) != a || h.add(a, e) != a) { ok = false; break; }
        if (ok) zero = e;
    }
    if (zero < 0) {
        f.add_group = false;
        why = "addition has no identity element";
    }
    for (int a = 0; a < n && f.add_group; ++a) {
        bool inv = false;
        for (int b = 0; b < n; ++b)
            if (h.add(a, b) == zero) { inv = true; break; }
        if (!inv) {
            f.add_group = false;
            why = "no additive inverse for " + std::to_string(a);
        }
    }
    for (int a = 0; a < n && f.add_group; ++a)
        for (int b = 0; b < n && f.add_group; ++b) {
            if (h.add(a, b) != h.add(b, a)) {
                f.add_group = false;
                why = "addition not commutative at (" + std::to_string(a) +
                      "," + std::to_string(b) + ")";
                break;
            }
            for (int c = 0; c < n; ++c)
                if (h.add(h.add(a, b), c) != h.add(a, h.add(b, c))) {
                    f.add_group = false;
                    why = "addition not associative";
                    break;
                }
        }

    f.mul_total = true;
    for (int a = 0; a < n && f.mul_total; ++a)
        for (int b = 0; b < n; ++b)
            if (h.mul(a, b).empty()) {
                f.mul_total = false;
                why = "empty product at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")";
                break;
            }

    f.mul_commutative = true;
    for (int a = 0; a < n && f.mul_commutative; ++a)
        for (int b = a + 1; b < n; ++b)
            if (h.mul(a, b) != h.mul(b, a)) {
                f.mul_commutative = false;
                why = "products " + std::to_string(a) + "*" +
                      std::to_string(b) + " and reverse differ";
                break;
            }

    f.mul_associative = f.mul_total;
    for (int a = 0; a < n && f.mul_associative; ++a)
        for (int b = 0; b < n && f.mul_associative; ++b) {
            const ElemSet& ab = h.mul(a, b);
            for (int c = 0; c < n; ++c) {
                ElemSet left = h.subset_product(ab, ElemSet::single(n, c));
                ElemSet right =
                    h.subset_product(ElemSet::single(n, a), h.mul(b, c));
                if (left != right) {
                    f.mul_associative = false;
                    why = "associativity fails at (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(c) +
                          ")";
                    break;
                }
            }
        }

    if (f.add_group && f.mul_total) {
        SumsetCache sums(h);
        f.distributive = true;
        f.strongly_distributive = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const ElemSet& lhs = h.mul(a, h.add(b, c));
                    const ElemSet& rhs = sums.sum(h.mul(a, b), h.mul(a, c));
                    if (!lhs.subset_of(rhs)) {
                        f.distributive = false;
                        f.strongly_distributive = false;
                        if (why.empty())
                            why = "distributivity fails at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")";
                    } else if (lhs != rhs) {
                        f.strongly_distributive = false;
                    }
                    // right distributivity, for structures that are not
                    // commutative (checked anyway; cheap via the memo)
                    const ElemSet& lhs2 = h.mul(h.add(b, c), a);
                    const ElemSet& rhs2 = sums.sum(h.mul(b, a), h.mul(c, a));
                    if (!lhs2.subset_of(rhs2)) {
                        f.distributive = false;
                        f.strongly_distributive = false;
                        if (why.empty())
                            why = "right distributivity fails at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")";
                    } else if (lhs2 != rhs2) {
                        f.strongly_distributive = false;
                    }
                }

        f.sign_rule = true;
        for (int a = 0; a < n && f.sign_rule; ++a)
            for (int b = 0; b < n; ++b) {
                ElemSet neg_ab(n);
                for (int t : h.mul(a, b).elements()) neg_ab.insert(h.neg(t));
                if (h.mul(a, h.neg(b)) != neg_ab ||
                    h.mul(h.neg(a), b) != neg_ab) {
                    f.sign_rule = false;
                    why = "sign rule fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")";
                    break;
                }
            }
    }

    // two-sided, so it also means something when commutativity failed
    for (int e = 0; e < n; ++e) {
        bool ident = true, scalar = true;
        for (int a = 0; a < n; ++a) {
            const ElemSet& ae = h.mul(a, e);
            const ElemSet& ea = h.mul(e, a);
            if (!ae.contains(a) || !ea.contains(a)) {
                ident = false;
                scalar = false;
                break;
            }
            if (ae.count() != 1 || ea.count() != 1) scalar = false;
        }
        if (ident) f.identities.insert(e);
        if (scalar) f.scalar_identities.insert(e);
    }

    if (witness) *witness = f.is_hyperring() ? "" : why;
    return f;
}

HyperRing HyperRing::from_tables(int n, std::vector<int> add,
                                 std::vector<ElemSet> mul, std::string name,
                                 bool strict) {
    if (n < 1 || n > ElemSet::kMaxCarrier)
        throw std::invalid_argument("from_tables: carrier size out of range");
    if (add.size() != static_cast<size_t>(n) * n ||
        mul.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("from_tables: table size mismatch");
    for (int v : add)
        if (v < 0 || v >= n)
            throw std::invalid_argument("from_tables: addition entry out of range");
    for (const auto& s : mul)
        if (s.carrier() != n)
            throw std::invalid_argument("from_tables: product carrier mismatch");

    HyperRing h;
    h.n_ = n;
    h.add_ = std::move(add);
    h.mul_ = std::move(mul);
    h.name_ = std::move(name);

    // derive zero and negation (fallbacks if the group axioms fail and
    // strict mode is off; flags record the failure)
    h.zero_ = 0;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (h.add_[static_cast<size_t>(e) * n + a] != a) { ok = false; break; }
        if (ok) { h.zero_ = e; break; }
    }
    h.neg_.assign(n, h.zero_);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (h.add_[static_cast<size_t>(a) * n + b] == h.zero_) {
                h.neg_[a] = b;
                break;
            }

    std::string why;
    h.flags_ = check_axioms(h, &why);
    if (strict && !h.flags_.is_hyperring())
        throw std::invalid_argument("from_tables(" + h.name_ +
                                    "): not a hyperring: " + why);
    return h;
}

HyperRing HyperRing::zx_mod(int n, const std::vector<int>& X,
                            std::string name) {
    if (n < 1) throw std::invalid_argument("zx_mod: modulus must be positive");
    if (X.empty()) throw std::invalid_argument("zx_mod: X must be nonempty");
    if (n > ElemSet::kMaxCarrier)
        throw std::invalid_argument("zx_mod: modulus too large");

    ElemSet xs(n);
    for (int x : X) xs.insert(((x % n) + n) % n);

    std::vector<int> add(static_cast<size_t>(n) * n);
    std::vector<ElemSet> mul(static_cast<size_t>(n) * n, ElemSet(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<size_t>(a) * n + b] = (a + b) % n;
            ElemSet& s = mul[static_cast<size_t>(a) * n + b];
            for (int x : xs.elements())
                s.insert(static_cast<int>(
                    (static_cast<long long>(a) * x % n) * b % n));
        }

    if (name.empty()) {
        name = "zx_mod(" + std::to_string(n) + ",X=" + xs.to_string() + ")";
    }
    return from_tables(n, std::move(add), std::move(mul), std::move(name),
                       /*strict=*/true);
}

}  // namespace hyperlab
