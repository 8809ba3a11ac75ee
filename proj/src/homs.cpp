#include "hyperlab/homs.hpp"

#include <stdexcept>

namespace hyperlab {

bool verify_good_hom(const HyperRing& h1, const HyperRing& h2,
                     const std::vector<int>& f, std::string* why) {
    int n = h1.size();
    if (static_cast<int>(f.size()) != n) {
        if (why) *why = "map size does not match the domain";
        return false;
    }
    for (int v : f)
        if (v < 0 || v >= h2.size()) {
            if (why) *why = "map value out of range";
            return false;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (f[h1.add(a, b)] != h2.add(f[a], f[b])) {
                if (why)
                    *why = "additivity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")";
                return false;
            }
            ElemSet img(h2.size());
            for (int z : h1.mul(a, b).elements()) img.insert(f[z]);
            if (img != h2.mul(f[a], f[b])) {
                if (why)
                    *why = "product mismatch at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")";
                return false;
            }
        }
    return true;
}

GoodHom make_hom(const HyperRing& h1, const HyperRing& h2, std::vector<int> f,
                 std::string name) {
    std::string why;
    if (!verify_good_hom(h1, h2, f, &why))
        throw std::invalid_argument("make_hom: " + why);
    if (name.empty()) name = h1.name() + "->" + h2.name();
    return GoodHom{h1, h2, std::move(f), std::move(name)};
}

ElemSet hom_kernel(const GoodHom& f) {
    ElemSet k(f.dom.size());
    for (int x = 0; x < f.dom.size(); ++x)
        if (f.map[x] == f.cod.zero()) k.insert(x);
    return k;
}

ElemSet hom_image(const GoodHom& f, const ElemSet& S) {
    ElemSet out(f.cod.size());
    for (int x : S.elements()) out.insert(f.map[x]);
    return out;
}

ElemSet hom_preimage(const GoodHom& f, const ElemSet& T) {
    ElemSet out(f.dom.size());
    for (int x = 0; x < f.dom.size(); ++x)
        if (T.contains(f.map[x])) out.insert(x);
    return out;
}

bool is_surjective(const GoodHom& f) {
    return hom_image(f, ElemSet::full(f.dom.size())).count() == f.cod.size();
}

GoodHom quotient_projection(const HyperRing& h, const Quotient& q) {
    return make_hom(h, q.ring, q.cls, h.name() + "->" + q.ring.name());
}

GoodHom product_projection(const HyperRing& prod, const HyperRing& h1,
                           const HyperRing& h2, int which) {
    int n1 = h1.size(), n2 = h2.size();
    if (prod.size() != n1 * n2)
        throw std::invalid_argument("product_projection: carrier mismatch");
    if (which != 1 && which != 2)
        throw std::invalid_argument("product_projection: which must be 1 or 2");
    std::vector<int> f(static_cast<size_t>(prod.size()));
    for (int x = 0; x < prod.size(); ++x) f[x] = which == 1 ? x / n2 : x % n2;
    return make_hom(prod, which == 1 ? h1 : h2, std::move(f),
                    prod.name() + "->pi" + std::to_string(which));
}

GoodHom product_injection(const HyperRing& prod, const HyperRing& h1,
                          const HyperRing& h2, int which) {
    int n1 = h1.size(), n2 = h2.size();
    if (prod.size() != n1 * n2)
        throw std::invalid_argument("product_injection: carrier mismatch");
    if (which != 1 && which != 2)
        throw std::invalid_argument("product_injection: which must be 1 or 2");
    const HyperRing& dom = which == 1 ? h1 : h2;
    std::vector<int> f(static_cast<size_t>(dom.size()));
    for (int x = 0; x < dom.size(); ++x) f[x] = which == 1 ? x * n2 : x;
    return make_hom(dom, prod, std::move(f),
                    "iota" + std::to_string(which) + "->" + prod.name());
}

}  // namespace hyperlab
