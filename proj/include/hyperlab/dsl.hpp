#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlab/classify.hpp"
#include "hyperlab/hyperring.hpp"
#include "hyperlab/theorems.hpp"

namespace hyperlab {

// Parse failure with a 1-based position. what() renders
// "line L, col C: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_ = 0;
    int col_ = 0;
};

struct RingDecl {
    std::string name;
    bool is_template = false;  // zx_mod template vs explicit tables
    int n = 0;
    std::vector<int> X;  // template parameter, sorted, deduped
    HyperRing ring;      // built non-strict so near-misses stay inspectable
    int line = 0;
};

struct IdealDecl {
    std::string name;
    std::string ring;
    bool generated = false;  // gen {...} vs literal = {...}
    std::vector<int> elems;  // sorted, deduped
    int line = 0;
};

struct ClaimDecl {
    std::string name;
    std::string ideal;
    bool weakly = false;
    bool graded = false;  // carries an (alpha,beta) prefix
    int alpha = 0;
    int beta = 0;
    std::string predicate;  // prime|closed|primary|maximal|C|strongC
    int line = 0;
};

struct SuiteDecl {
    unsigned seed = 0;
    int amax = 4;
    int bmax = 4;
    int line = 0;
};

struct SpecDocument {
    std::vector<RingDecl> rings;
    std::vector<IdealDecl> ideals;
    std::vector<ClaimDecl> claims;
    std::vector<SuiteDecl> suites;

    const RingDecl* find_ring(const std::string& name) const;
    const IdealDecl* find_ideal(const std::string& name) const;
};

// Line-oriented grammar:
//   ring <name> zx_mod n=<int> X=<int,...>
//   ring <name> table n=<int>        (followed by add/mul table lines)
//   add <i> <j> = <k>
//   mul <i> <j> = {<k>,...}
//   ideal <name> in <ring> = {<int>,...}
//   ideal <name> in <ring> gen {<int>,...}
//   claim <name>: <ideal> is [weakly] (<a>,<b>)-prime
//   claim <name>: <ideal> is (<a>,<b>)-closed
//   claim <name>: <ideal> is prime|primary|maximal|C|strongC
//   suite seed=<int> grid=<a>x<b>
// '#' starts a comment; blank lines are skipped; names must be declared
// before use. Throws ParseError with position on any malformed input.
SpecDocument parse_document(const std::string& text);

// Canonical rendering: rings, ideals, claims, suites in declaration order.
// parse(print(parse(t))) equals parse(t); print of both is identical text.
std::string print_document(const SpecDocument& doc);

// Claim body as canonical text, e.g. "Q is weakly (3,1)-prime".
std::string claim_body(const ClaimDecl& c);

// Element set an ideal declaration denotes (closing under generation when
// declared with gen).
ElemSet ideal_elems(const SpecDocument& doc, const IdealDecl& ideal);

struct ClaimOutcome {
    std::string claim;     // declaration name
    std::string rendered;  // claim_body text
    bool value = false;
};

// Evaluates every claim in declaration order. Throws std::invalid_argument
// when a referenced ring fails the hyperring axioms or a claimed set is not
// a proper hyperideal of it.
std::vector<ClaimOutcome> evaluate_claims(const SpecDocument& doc);

// CI-facing machine report: {version, seed, verdicts, coverage} with one
// verdict per (theorem, instance) aggregated over the grid. A verdict's
// outcome is violation if any cell violated (witness carries the cell),
// holds if any cell had its hypothesis met, hypothesis_not_met otherwise.
// coverage rows carry satisfied (instances with the hypothesis met) and
// vacuous (satisfied == 0). Deterministic for identical reports.
std::string verdict_json(const SuiteReport& report);

}  // namespace hyperlab
