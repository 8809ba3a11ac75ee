#pragma once

// Shared fixtures: the small rings most tests poke at, plus brute-force
// oracles kept deliberately independent of the library's algorithms.

#include <algorithm>
#include <set>
#include <vector>

#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"

namespace hyperlab::testing {

// Z_8 with a*b = {a*x*b mod 8 : 1 <= x <= 7}. The workhorse genuine
// hyperring: not strongly distributive, identities {1,3,5,7}, none scalar.
inline HyperRing z8_full() {
    return HyperRing::zx_mod(8, {1, 2, 3, 4, 5, 6, 7}, "z8_full");
}

// Z_4 with odd*odd = {1,3} and every other product classical. Genuine
// hyperring whose proper ideals are all C-hyperideals.
inline HyperRing h4_diag() {
    int n = 4;
    std::vector<int> add(16);
    std::vector<ElemSet> mul(16);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a * 4 + b] = (a + b) % 4;
            ElemSet s(n);
            s.insert(a * b % 4);
            if (a % 2 == 1 && b % 2 == 1) s.insert((a * b + 2) % 4);
            mul[a * 4 + b] = s;
        }
    return HyperRing::from_tables(n, add, mul, "h4_diag");
}

// Zero-multiplication hyperring on Z_m: a*b = {0}. Valid, strongly
// distributive, no identity.
inline HyperRing zero_mul(int m) {
    std::vector<int> add(static_cast<size_t>(m) * m);
    std::vector<ElemSet> mul(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            add[a * m + b] = (a + b) % m;
            mul[a * m + b] = ElemSet::single(m, 0);
        }
    return HyperRing::from_tables(m, add, mul, "zm" + std::to_string(m));
}

// Exhaustive hyperideal scan over all 2^n subsets. Only for n <= 14.
inline std::vector<ElemSet> oracle_ideals(const HyperRing& h) {
    int n = h.size();
    std::vector<ElemSet> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        ElemSet I(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) I.insert(i);
        bool ok = true;
        for (int a : I.elements()) {
            for (int b : I.elements())
                if (!I.contains(h.sub(a, b))) { ok = false; break; }
            if (!ok) break;
            for (int r = 0; r < n && ok; ++r)
                if (!h.mul(r, a).subset_of(I)) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(I);
    }
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

// Worklist closure under subtraction and absorption, no cleverness.
inline ElemSet oracle_generate(const HyperRing& h, const ElemSet& gens) {
    ElemSet S = gens;
    if (S.empty()) S.insert(h.zero());
    bool grew = true;
    while (grew) {
        grew = false;
        ElemSet next = S;
        for (int a : S.elements()) {
            for (int b : S.elements()) next.insert(h.sub(a, b));
            for (int r = 0; r < h.size(); ++r) next |= h.mul(r, a);
        }
        if (next != S) { S = next; grew = true; }
    }
    return S;
}

}  // namespace hyperlab::testing
