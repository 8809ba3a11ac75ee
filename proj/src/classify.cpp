#include "hyperlab/classify.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <utility>
#include <stdexcept>

namespace hyperlab {

namespace {

void require_proper(const HyperRing& h, const ElemSet& p, const char* who) {
    if (p.count() == h.size())
        throw std::invalid_argument(std::string(who) + ": ideal must be proper");
    if (p.empty())
        throw std::invalid_argument(std::string(who) + ": ideal must be nonempty");
}

void require_exponent(int e, const char* who) {
    if (e < 1) throw std::invalid_argument(std::string(who) + ": exponent must be >= 1");
}

}  // namespace

Lab::Lab(HyperRing h, int max_carrier, std::size_t family_limit)
    : h_(std::move(h)), max_carrier_(max_carrier), family_limit_(family_limit) {
    pow_.resize(static_cast<size_t>(h_.size()));
}

const ElemSet& Lab::power(int x, int k) {
    require_exponent(k, "Lab::power");
    auto& row = pow_[static_cast<size_t>(x)];
    if (row.empty()) row.push_back(ElemSet::single(h_.size(), x));
    while (static_cast<int>(row.size()) < k)
        row.push_back(h_.subset_product(row.back(), ElemSet::single(h_.size(), x)));
    return row[static_cast<size_t>(k - 1)];
}

const std::vector<ElemSet>& Lab::ideals() {
    if (!have_ideals_) {
        ideals_ = enumerate_hyperideals(h_, max_carrier_);
        have_ideals_ = true;
    }
    return ideals_;
}

const std::vector<ElemSet>& Lab::primes() {
    if (!have_primes_) {
        for (const auto& p : ideals()) {
            if (p.count() == h_.size()) continue;
            bool prime = true;
            for (int a = 0; a < h_.size() && prime; ++a) {
                if (p.contains(a)) continue;
                for (int b = 0; b < h_.size(); ++b)
                    if (!p.contains(b) && h_.mul(a, b).subset_of(p)) {
                        prime = false;
                        break;
                    }
            }
            if (prime) primes_.push_back(p);
        }
        have_primes_ = true;
    }
    return primes_;
}

bool Lab::is_principal_ring() {
    if (!have_principal_) {
        principal_ = true;
        for (const auto& I : ideals()) {
            bool found = false;
            for (int x : I.elements())
                if (ideal_generate(h_, ElemSet::single(h_.size(), x)) == I) {
                    found = true;
                    break;
                }
            if (!found) {
                principal_ = false;
                break;
            }
        }
        have_principal_ = true;
    }
    return principal_;
}

const ProductFamily& Lab::family(ProductConvention conv) {
    const int idx = conv == ProductConvention::kLen1 ? 0 : 1;
    if (have_family_[idx]) return family_[idx];
    const int n = h_.size();

    std::set<ElemSet> prods;
    std::deque<ElemSet> work;
    auto push = [&](const ElemSet& s) {
        if (prods.insert(s).second) {
            if (prods.size() > family_limit_)
                throw std::runtime_error("Lab::family: product family exceeds limit");
            work.push_back(s);
        }
    };
    if (conv == ProductConvention::kLen1) {
        for (int x = 0; x < n; ++x) push(ElemSet::single(n, x));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) push(h_.mul(a, b));
    }
    while (!work.empty()) {
        ElemSet u = work.front();
        work.pop_front();
        for (int c = 0; c < n; ++c) push(h_.subset_product(u, ElemSet::single(n, c)));
    }

    std::set<ElemSet> sums(prods.begin(), prods.end());
    std::deque<ElemSet> swork(sums.begin(), sums.end());
    while (!swork.empty()) {
        ElemSet u = swork.front();
        swork.pop_front();
        for (const auto& v : prods) {
            ElemSet w = h_.set_sum(u, v);
            if (sums.insert(w).second) {
                if (sums.size() > family_limit_)
                    throw std::runtime_error("Lab::family: sum family exceeds limit");
                swork.push_back(w);
            }
        }
    }

    family_[idx].products.assign(prods.begin(), prods.end());
    family_[idx].sums.assign(sums.begin(), sums.end());
    have_family_[idx] = true;
    return family_[idx];
}

bool is_prime(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "is_prime");
    for (int a = 0; a < h.size(); ++a) {
        if (p.contains(a)) continue;
        for (int b = 0; b < h.size(); ++b)
            if (!p.contains(b) && h.mul(a, b).subset_of(p)) return false;
    }
    return true;
}

bool is_maximal(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "is_maximal");
    for (const auto& I : lab.ideals())
        if (p.subset_of(I) && I != p && I.count() != h.size())
            return false;
    return true;
}

bool is_primary(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "is_primary");
    ElemSet d = radical_via_powers(lab, p);
    for (int a = 0; a < h.size(); ++a) {
        if (p.contains(a)) continue;
        for (int b = 0; b < h.size(); ++b)
            if (!d.contains(b) && h.mul(a, b).subset_of(p)) return false;
    }
    return true;
}

bool is_c_hyperideal(Lab& lab, const ElemSet& p, ProductConvention conv) {
    for (const auto& u : lab.family(conv).products)
        if (u.intersects(p) && !u.subset_of(p)) return false;
    return true;
}

bool is_strong_c_hyperideal(Lab& lab, const ElemSet& p, ProductConvention conv) {
    for (const auto& u : lab.family(conv).sums)
        if (u.intersects(p) && !u.subset_of(p)) return false;
    return true;
}

ElemSet radical_via_primes(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    ElemSet acc = ElemSet::full(h.size());
    bool any = false;
    for (const auto& q : lab.primes())
        if (p.subset_of(q)) {
            acc &= q;
            any = true;
        }
    return any ? acc : ElemSet::full(h.size());
}

ElemSet radical_via_powers(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    ElemSet out(h.size());
    for (int x = 0; x < h.size(); ++x) {
        std::set<ElemSet> seen;
        for (int k = 1;; ++k) {
            const ElemSet& pw = lab.power(x, k);
            if (pw.subset_of(p)) {
                out.insert(x);
                break;
            }
            if (!seen.insert(pw).second) break;  // power sequence cycled
        }
    }
    return out;
}

bool is_ab_closed(Lab& lab, const ElemSet& p, int alpha, int beta) {
    require_proper(lab.ring(), p, "is_ab_closed");
    require_exponent(alpha, "is_ab_closed");
    require_exponent(beta, "is_ab_closed");
    for (int x = 0; x < lab.ring().size(); ++x)
        if (lab.power(x, alpha).subset_of(p) && !lab.power(x, beta).subset_of(p))
            return false;
    return true;
}

bool is_ab_prime(Lab& lab, const ElemSet& p, int alpha, int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "is_ab_prime");
    require_exponent(alpha, "is_ab_prime");
    require_exponent(beta, "is_ab_prime");
    for (int x = 0; x < h.size(); ++x) {
        if (lab.power(x, beta).subset_of(p)) continue;
        const ElemSet& xa = lab.power(x, alpha);
        for (int y = 0; y < h.size(); ++y)
            if (!p.contains(y) &&
                h.subset_product(xa, ElemSet::single(h.size(), y)).subset_of(p))
                return false;
    }
    return true;
}

bool is_weakly_ab_prime(Lab& lab, const ElemSet& p, int alpha, int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "is_weakly_ab_prime");
    require_exponent(alpha, "is_weakly_ab_prime");
    require_exponent(beta, "is_weakly_ab_prime");
    for (int x = 0; x < h.size(); ++x) {
        if (lab.power(x, beta).subset_of(p)) continue;
        const ElemSet& xa = lab.power(x, alpha);
        for (int y = 0; y < h.size(); ++y) {
            if (p.contains(y)) continue;
            ElemSet prod = h.subset_product(xa, ElemSet::single(h.size(), y));
            if (!prod.contains(h.zero()) && prod.subset_of(p)) return false;
        }
    }
    return true;
}

bool residual_characterization(Lab& lab, const ElemSet& p, int alpha, int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "residual_characterization");
    for (int x = 0; x < h.size(); ++x) {
        if (lab.power(x, beta).subset_of(p)) continue;
        if (residual(h, p, lab.power(x, alpha)) != p) return false;
    }
    return true;
}

bool ideal_characterization(Lab& lab, const ElemSet& p, int alpha, int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "ideal_characterization");
    for (int x = 0; x < h.size(); ++x) {
        if (lab.power(x, beta).subset_of(p)) continue;
        const ElemSet& xa = lab.power(x, alpha);
        for (const auto& I : lab.ideals())
            if (!I.subset_of(p) && h.subset_product(xa, I).subset_of(p)) return false;
    }
    return true;
}

bool principal_pair_characterization(Lab& lab, const ElemSet& p, int alpha,
                                     int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "principal_pair_characterization");
    for (const auto& I : lab.ideals()) {
        if (h.set_power(I, beta).subset_of(p)) continue;
        ElemSet ia = h.set_power(I, alpha);
        for (const auto& J : lab.ideals())
            if (!J.subset_of(p) && h.subset_product(ia, J).subset_of(p)) return false;
    }
    return true;
}

bool principal_residual_characterization(Lab& lab, const ElemSet& p, int alpha,
                                         int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "principal_residual_characterization");
    for (const auto& I : lab.ideals()) {
        if (h.set_power(I, beta).subset_of(p)) continue;
        if (residual(h, p, h.set_power(I, alpha)) != p) return false;
    }
    return true;
}

bool principal_element_characterization(Lab& lab, const ElemSet& p, int alpha,
                                        int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "principal_element_characterization");
    for (const auto& I : lab.ideals()) {
        if (h.set_power(I, beta).subset_of(p)) continue;
        ElemSet ia = h.set_power(I, alpha);
        for (int y = 0; y < h.size(); ++y)
            if (!p.contains(y) &&
                h.subset_product(ia, ElemSet::single(h.size(), y)).subset_of(p))
                return false;
    }
    return true;
}

ElemSet q_of(Lab& lab, const ElemSet& p, int beta) {
    require_exponent(beta, "q_of");
    ElemSet out(lab.ring().size());
    for (int x = 0; x < lab.ring().size(); ++x)
        if (lab.power(x, beta).subset_of(p)) out.insert(x);
    return out;
}

Region compute_region(Lab& lab, const ElemSet& p, RegionKind kind, int amax,
                      int bmax) {
    require_proper(lab.ring(), p, "compute_region");
    if (amax < 1 || bmax < 1)
        throw std::invalid_argument("compute_region: grid bounds must be >= 1");
    Region r;
    r.kind = kind;
    r.amax = amax;
    r.bmax = bmax;
    r.cells.assign(static_cast<size_t>(amax) * bmax, 0);
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= bmax; ++b) {
            bool v = false;
            switch (kind) {
                case RegionKind::kPrime: v = is_ab_prime(lab, p, a, b); break;
                case RegionKind::kClosed: v = is_ab_closed(lab, p, a, b); break;
                case RegionKind::kWeaklyPrime:
                    v = is_weakly_ab_prime(lab, p, a, b);
                    break;
            }
            r.cells[static_cast<size_t>(a - 1) * bmax + (b - 1)] = v ? 1 : 0;
        }

    // structural laws; a violation here is a bug, not a math fact
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= bmax; ++b) {
            if (b < bmax && r.at(a, b) && !r.at(a, b + 1))
                throw std::logic_error("compute_region: beta-up closure violated");
            if (kind == RegionKind::kPrime && r.at(a, b) != r.at(1, b))
                throw std::logic_error("compute_region: column law violated");
            if (kind == RegionKind::kClosed && a > 1 && r.at(a, b) && !r.at(a - 1, b))
                throw std::logic_error("compute_region: alpha-down closure violated");
        }
    return r;
}

ZeroScan find_ab_zeros(Lab& lab, const ElemSet& p, int alpha, int beta) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "find_ab_zeros");
    ZeroScan scan;
    scan.alpha = alpha;
    scan.beta = beta;
    scan.p_is_weakly_prime = is_weakly_ab_prime(lab, p, alpha, beta);
    for (int x = 0; x < h.size(); ++x) {
        if (lab.power(x, beta).subset_of(p)) continue;
        const ElemSet& xa = lab.power(x, alpha);
        for (int y = 0; y < h.size(); ++y) {
            if (p.contains(y)) continue;
            ElemSet prod = h.subset_product(xa, ElemSet::single(h.size(), y));
            if (prod.contains(h.zero()) && prod.subset_of(p))
                scan.zeros.push_back({x, y});
        }
    }
    return scan;
}

ElemSet nilpotents(Lab& lab) {
    const HyperRing& h = lab.ring();
    ElemSet out(h.size());
    for (int x = 0; x < h.size(); ++x) {
        std::set<ElemSet> seen;
        for (int k = 1;; ++k) {
            const ElemSet& pw = lab.power(x, k);
            if (pw.contains(h.zero())) {
                out.insert(x);
                break;
            }
            if (!seen.insert(pw).second) break;
        }
    }
    return out;
}

ElemSet idempotents(Lab& lab) {
    const HyperRing& h = lab.ring();
    ElemSet out(h.size());
    for (int e = 0; e < h.size(); ++e)
        if (h.mul(e, e).contains(e)) out.insert(e);
    return out;
}

ElemSet nontrivial_idempotents(Lab& lab) {
    ElemSet out = idempotents(lab);
    out.erase(lab.ring().zero());
    return out.minus(lab.ring().flags().identities);
}

int max_length(Lab& lab, const ElemSet& p) {
    const HyperRing& h = lab.ring();
    require_proper(h, p, "max_length");
    int best = 0;
    for (int x = 0; x < h.size(); ++x) {
        ElemSet prev = p;
        for (int i = 1; i <= h.size() + 1; ++i) {
            ElemSet cur = residual(h, p, lab.power(x, i));
            if (cur == prev) {
                if (i - 1 > best) best = i - 1;
                break;
            }
            prev = cur;
        }
    }
    return best;
}

bool is_irreducible(Lab& lab, const ElemSet& p) {
    require_proper(lab.ring(), p, "is_irreducible");
    const auto& ideals = lab.ideals();
    for (size_t i = 0; i < ideals.size(); ++i) {
        if (!p.subset_of(ideals[i]) || ideals[i] == p) continue;
        for (size_t j = i; j < ideals.size(); ++j) {
            if (!p.subset_of(ideals[j]) || ideals[j] == p) continue;
            if ((ideals[i] & ideals[j]) == p) return false;
        }
    }
    return true;
}

ClassificationReport classify_ideal(Lab& lab, const ElemSet& p, int amax,
                                    int bmax) {
    const HyperRing& h = lab.ring();
    if (!is_hyperideal(h, p))
        throw std::invalid_argument("classify_ideal: not a hyperideal");
    require_proper(h, p, "classify_ideal");
    ClassificationReport rep;
    rep.ideal = p;
    rep.proper = true;
    rep.prime = is_prime(lab, p);
    rep.maximal = is_maximal(lab, p);
    rep.primary = is_primary(lab, p);
    rep.irreducible = is_irreducible(lab, p);
    rep.c_len1 = is_c_hyperideal(lab, p, ProductConvention::kLen1);
    rep.c_len2 = is_c_hyperideal(lab, p, ProductConvention::kLen2);
    rep.strong_c_len1 = is_strong_c_hyperideal(lab, p, ProductConvention::kLen1);
    rep.strong_c_len2 = is_strong_c_hyperideal(lab, p, ProductConvention::kLen2);
    rep.rad_primes = radical_via_primes(lab, p);
    rep.rad_powers = radical_via_powers(lab, p);
    rep.powers_radical_equals_ideal = rep.rad_powers == p;
    rep.max_len = max_length(lab, p);
    rep.prime_region = compute_region(lab, p, RegionKind::kPrime, amax, bmax);
    rep.closed_region = compute_region(lab, p, RegionKind::kClosed, amax, bmax);
    rep.weakly_region = compute_region(lab, p, RegionKind::kWeaklyPrime, amax, bmax);
    rep.zero_counts.assign(static_cast<size_t>(amax) * bmax, 0);
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= bmax; ++b)
            rep.zero_counts[static_cast<size_t>(a - 1) * bmax + (b - 1)] =
                static_cast<int>(find_ab_zeros(lab, p, a, b).zeros.size());
    return rep;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

void render_region(std::ostringstream& os, const char* label, const Region& r) {
    os << label << " (rows alpha=1.." << r.amax << ", cols beta=1.." << r.bmax
       << "):\n";
    for (int a = 1; a <= r.amax; ++a) {
        os << "  ";
        for (int b = 1; b <= r.bmax; ++b) os << (r.at(a, b) ? '#' : '.');
        os << "\n";
    }
}

}  // namespace

std::string ClassificationReport::to_string() const {
    std::ostringstream os;
    os << "ideal: " << ideal.to_string() << "\n";
    os << "proper: " << yn(proper) << "\n";
    os << "prime: " << yn(prime) << "  maximal: " << yn(maximal)
       << "  primary: " << yn(primary) << "  irreducible: " << yn(irreducible)
       << "\n";
    os << "C-hyperideal: " << yn(c_len1) << " (len>=1), " << yn(c_len2)
       << " (len>=2)\n";
    os << "strong C: " << yn(strong_c_len1) << " (len>=1), " << yn(strong_c_len2)
       << " (len>=2)\n";
    os << "rad via primes: " << rad_primes.to_string() << "\n";
    os << "rad via powers: " << rad_powers.to_string() << "\n";
    os << "powers radical equals ideal: " << yn(powers_radical_equals_ideal)
       << "\n";
    os << "max length: " << max_len << "\n";
    render_region(os, "prime region", prime_region);
    render_region(os, "closed region", closed_region);
    render_region(os, "weakly prime region", weakly_region);
    os << "zero counts:\n";
    for (int a = 1; a <= prime_region.amax; ++a) {
        os << " ";
        for (int b = 1; b <= prime_region.bmax; ++b)
            os << " "
               << zero_counts[static_cast<size_t>(a - 1) * prime_region.bmax +
                              (b - 1)];
        os << "\n";
    }
    return os.str();
}

}  // namespace hyperlab
