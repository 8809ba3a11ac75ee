#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hyperlab/classify.hpp"
#include "hyperlab/constructs.hpp"
#include "hyperlab/homs.hpp"

namespace hyperlab {

// One ring under test. Binary products carry their factors so the
// product-classification check can decompose box ideals against them.
// `has_identity` tags instances eligible for the identity-dependent
// checks; the rest see them as hypothesis_not_met.
struct CorpusInstance {
    std::string id;
    HyperRing ring;
    bool has_identity = false;
    std::optional<HyperRing> factor1, factor2;
};

// Deterministic catalog: same call, same rings, same order. The seed is
// echoed into reports but selects nothing; determinism is unconditional.
std::vector<CorpusInstance> generate_corpus();

enum class Outcome { kHypothesisNotMet, kHolds, kViolation };

const char* to_string(Outcome o);

// Verdict of one registry check on one instance at one grid cell.
// `checked` counts the hypothesis-satisfying sub-cases examined; the scan
// stops at the first violation, whose configuration lands in `witness`.
struct TheoremResult {
    std::string theorem_id;
    std::string instance_id;
    int alpha = 0, beta = 0;
    Outcome outcome = Outcome::kHypothesisNotMet;
    long checked = 0;
    std::string witness;
};

// Per-instance evaluation context: the lab, the proper-ideal list, every
// derived structure the registry consumes, and memo tables for the
// predicates the checks hammer on. Built once per instance, shared across
// grid cells.
class InstanceCtx {
public:
    explicit InstanceCtx(const CorpusInstance& inst);

    const CorpusInstance& inst() const { return *inst_; }
    const HyperRing& ring() const { return lab_.ring(); }
    Lab& lab() { return lab_; }
    const std::vector<ElemSet>& proper() const { return proper_; }

    // memoized predicate layer
    bool prime(const ElemSet& p, int a, int b);
    bool weakly(const ElemSet& p, int a, int b);
    bool c1(const ElemSet& p);
    bool strong_c1(const ElemSet& p);
    const ElemSet& rad(const ElemSet& p);  // radical_via_primes

    struct LocCtx {
        ElemSet s;
        Localization loc;
        Lab lab;
    };
    struct QuotCtx {
        ElemSet by;
        Quotient q;
        Lab lab;
    };
    struct HomCtx {
        GoodHom hom;
        Lab dom;
        Lab cod;
    };

    const FundamentalRing& fund() const { return *fund_; }
    Lab& fund_lab() { return *fund_lab_; }
    std::vector<LocCtx>& locs() { return locs_; }
    std::vector<QuotCtx>& quots() { return quots_; }
    std::vector<HomCtx>& homs() { return homs_; }
    const MatrixRing* matrix() const { return mat_ ? &*mat_ : nullptr; }
    Lab& matrix_lab() { return *mat_lab_; }
    Lab* factor_lab(int which);  // 1 or 2, null unless a product instance

private:
    const CorpusInstance* inst_;
    Lab lab_;
    std::vector<ElemSet> proper_;
    std::optional<FundamentalRing> fund_;
    std::optional<Lab> fund_lab_;
    std::vector<LocCtx> locs_;
    std::vector<QuotCtx> quots_;
    std::vector<HomCtx> homs_;
    std::optional<MatrixRing> mat_;
    std::optional<Lab> mat_lab_;
    std::optional<Lab> f1_lab_, f2_lab_;
    std::map<std::tuple<ElemSet, int, int>, bool> prime_memo_, weakly_memo_;
    std::map<ElemSet, bool> c1_memo_, sc1_memo_;
    std::map<ElemSet, ElemSet> rad_memo_;
};

// A registry entry: stable id plus the per-cell evaluator. Report-only
// entries are listed and tallied but never counted as suite violations
// (their one current member runs with an underspecified hypothesis
// dropped, so failures are data, not build breaks).
struct TheoremDef {
    std::string id;
    bool report_only = false;
    std::function<TheoremResult(InstanceCtx&, int, int)> eval;
};

// All executable checks, in fixed order. Ids are stable API.
const std::vector<TheoremDef>& theorem_registry();
const TheoremDef* find_theorem(const std::string& id);

struct SuiteOptions {
    int amax = 4, bmax = 4;
    unsigned seed = 0;
};

struct CoverageRow {
    std::string theorem_id;
    long satisfied = 0;   // rows with outcome != hypothesis_not_met
    long violations = 0;  // rows with outcome == violation
    bool report_only = false;
};

struct SuiteReport {
    SuiteOptions opt;
    std::vector<std::string> instance_ids;
    std::vector<TheoremResult> rows;  // sorted by (theorem, instance, a, b)
    std::vector<CoverageRow> coverage;  // registry order
    long violations = 0;         // enforced channel
    long report_violations = 0;  // report-only channel
};

SuiteReport run_suite(const std::vector<CorpusInstance>& corpus,
                      const SuiteOptions& opt = {});

// Deterministic JSON rendering: identical report, identical bytes.
std::string report_json(const SuiteReport& r);

// Re-evaluates one (theorem, instance, cell) from a fresh context, so a
// reported witness can be reproduced standalone.
TheoremResult replay_cell(const std::vector<CorpusInstance>& corpus,
                          const std::string& theorem_id,
                          const std::string& instance_id, int alpha,
                          int beta);

// Classical ring = hyperring whose products are all singletons.
bool is_classical_ring(const HyperRing& h);

}  // namespace hyperlab
