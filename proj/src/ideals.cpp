#include "hyperlab/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hyperlab {

bool is_hyperideal(const HyperRing& h, const ElemSet& I) {
    if (I.empty()) return false;
    auto elems = I.elements();
    for (int a : elems) {
        for (int b : elems)
            if (!I.contains(h.sub(a, b))) return false;
        for (int r = 0; r < h.size(); ++r)
            if (!h.mul(r, a).subset_of(I)) return false;
    }
    return true;
}

ElemSet ideal_generate(const HyperRing& h, const ElemSet& gens) {
    const int n = h.size();
    ElemSet S(n);
    S.insert(h.zero());
    std::deque<int> fresh;
    for (int g : gens.elements())
        if (!S.contains(g)) { S.insert(g); fresh.push_back(g); }
    if (S.contains(h.zero())) fresh.push_back(h.zero());

    // incremental closure: only pairs involving a newly added element can
    // produce anything new
    while (!fresh.empty()) {
        int a = fresh.front();
        fresh.pop_front();
        ElemSet add(n);
        for (int b : S.elements()) {
            add.insert(h.sub(a, b));
            add.insert(h.sub(b, a));
        }
        for (int r = 0; r < n; ++r) add |= h.mul(r, a);
        for (int x : add.minus(S).elements()) {
            S.insert(x);
            fresh.push_back(x);
        }
    }
    return S;
}

namespace {

// subgroup of (H,+) generated by S: closure under subtraction (0 is in S,
// so a-b covers negation and, via a-(0-b), addition)
ElemSet subgroup_closure(const HyperRing& h, ElemSet S) {
    S.insert(h.zero());
    auto seed = S.elements();
    std::deque<int> fresh(seed.begin(), seed.end());
    while (!fresh.empty()) {
        int a = fresh.front();
        fresh.pop_front();
        for (int b : S.elements()) {
            for (int x : {h.sub(a, b), h.sub(b, a), h.add(a, b)})
                if (!S.contains(x)) {
                    S.insert(x);
                    fresh.push_back(x);
                }
        }
    }
    return S;
}

}  // namespace

std::vector<ElemSet> enumerate_hyperideals(const HyperRing& h, int max_carrier,
                                           size_t limit) {
    const int n = h.size();
    if (n > max_carrier)
        throw std::invalid_argument("enumerate_hyperideals: carrier exceeds bound");
    // walk the additive-subgroup lattice upward from {0}
    std::set<ElemSet> seen;
    std::deque<ElemSet> work;
    ElemSet trivial = ElemSet::single(n, h.zero());
    seen.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        ElemSet S = work.front();
        work.pop_front();
        for (int x = 0; x < n; ++x) {
            if (S.contains(x)) continue;
            ElemSet T = S;
            T.insert(x);
            T = subgroup_closure(h, T);
            if (seen.insert(T).second) {
                if (seen.size() > limit)
                    throw std::runtime_error(
                        "enumerate_hyperideals: subgroup lattice exceeds limit");
                work.push_back(T);
            }
        }
    }

    std::vector<ElemSet> out;
    for (const auto& S : seen) {
        bool absorbs = true;
        for (int a : S.elements()) {
            for (int r = 0; r < n && absorbs; ++r)
                if (!h.mul(r, a).subset_of(S)) absorbs = false;
            if (!absorbs) break;
        }
        if (absorbs) out.push_back(S);
    }
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

ElemSet residual(const HyperRing& h, const ElemSet& A, const ElemSet& B) {
    ElemSet out(h.size());
    for (int x = 0; x < h.size(); ++x) {
        bool in = true;
        for (int b : B.elements())
            if (!h.mul(x, b).subset_of(A)) { in = false; break; }
        if (in) out.insert(x);
    }
    return out;
}

ElemSet ideal_sum(const HyperRing& h, const ElemSet& A, const ElemSet& B) {
    return ideal_generate(h, A | B);
}

}  // namespace hyperlab
