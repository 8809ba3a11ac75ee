// hyperlab: define finite multiplicative hyperrings, classify their
// hyperideals, and run the verification suite. Exit codes: 0 clean,
// 1 violation found, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlab/classify.hpp"
#include "hyperlab/constructs.hpp"
#include "hyperlab/dsl.hpp"
#include "hyperlab/ideals.hpp"
#include "hyperlab/theorems.hpp"
#include "hyperlab/zx.hpp"

namespace {

using namespace hyperlab;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::pair<int, int> parse_grid(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= s.size())
        throw UsageError("grid must look like 4x4");
    try {
        int a = std::stoi(s.substr(0, x));
        int b = std::stoi(s.substr(x + 1));
        if (a < 1 || b < 1) throw UsageError("grid sizes must be positive");
        return {a, b};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("grid must look like 4x4");
    }
}

// Shared ring selection: either a file (with --ring picking a declared
// name, defaulting to the first), or the inline zx_mod template form
// --ring zx_mod --n N --X a,b,...
struct RingArgs {
    std::string file;
    std::string ring;
    int n = 0;
    std::vector<int> X;

    void attach(CLI::App* cmd, bool file_only = false) {
        cmd->add_option("file", file, "structure definition file (.hr)");
        if (!file_only) {
            cmd->add_option("--ring", ring,
                            "ring name in the file, or 'zx_mod'");
            cmd->add_option("--n", n, "carrier size (zx_mod form)");
            cmd->add_option("--X", X, "hyperproduct multipliers (zx_mod)")
                ->delimiter(',');
        } else {
            cmd->add_option("--ring", ring, "ring name in the file");
        }
    }

    // Returns the document when a file was parsed (keeps decls alive).
    std::optional<SpecDocument> resolve(HyperRing& out) const {
        if (ring == "zx_mod" && file.empty()) {
            if (n < 1) throw UsageError("zx_mod form needs --n");
            if (X.empty()) throw UsageError("zx_mod form needs --X");
            out = HyperRing::zx_mod(n, X, "zx_mod");
            return std::nullopt;
        }
        if (file.empty())
            throw UsageError("need a definition file or --ring zx_mod");
        SpecDocument doc = parse_document(slurp(file));
        if (doc.rings.empty()) throw UsageError("no rings in " + file);
        const RingDecl* rd =
            ring.empty() ? &doc.rings.front() : doc.find_ring(ring);
        if (!rd) throw UsageError("no ring named '" + ring + "' in " + file);
        out = rd->ring;
        return doc;
    }
};

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_flags(const HyperRing& h) {
    const AxiomFlags& f = h.flags();
    std::cout << "ring " << h.name()
              << ": hyperring: " << yn(f.is_hyperring()) << "\n";
    if (!f.is_hyperring()) {
        std::string why;
        check_axioms(h, &why);
        std::cout << "  reason: " << why << "\n";
    }
    std::cout << "  strongly distributive: " << yn(f.strongly_distributive)
              << "\n"
              << "  identity: " << yn(h.has_identity())
              << "  scalar identity: " << yn(h.has_scalar_identity())
              << "\n";
}

int cmd_check(const RingArgs& args) {
    HyperRing inline_ring = HyperRing::zx_mod(2, {1});
    bool bad_ring = false;
    std::optional<SpecDocument> doc;

    if (args.ring == "zx_mod" && args.file.empty()) {
        args.resolve(inline_ring);
        print_flags(inline_ring);
        return inline_ring.flags().is_hyperring() ? 0 : 1;
    }
    if (args.file.empty())
        throw UsageError("need a definition file or --ring zx_mod");
    doc = parse_document(slurp(args.file));
    for (const auto& rd : doc->rings) {
        print_flags(rd.ring);
        bad_ring = bad_ring || !rd.ring.flags().is_hyperring();
    }

    int failed = 0;
    if (!doc->claims.empty()) {
        std::vector<ClaimOutcome> outs = evaluate_claims(*doc);
        for (const auto& o : outs) {
            std::cout << "claim " << o.claim << ": " << o.rendered << " = "
                      << (o.value ? "true" : "false") << "\n";
            failed += o.value ? 0 : 1;
        }
        if (failed == 0)
            std::cout << "all claims hold\n";
        else
            std::cout << failed << " claim(s) FAILED\n";
    }
    return failed > 0 || bad_ring ? 1 : 0;
}

int cmd_ideals(const RingArgs& args) {
    HyperRing h = HyperRing::zx_mod(2, {1});
    auto doc = args.resolve(h);
    if (!h.flags().is_hyperring())
        throw UsageError("ring " + h.name() + " is not a hyperring");
    std::vector<ElemSet> ideals =
        enumerate_hyperideals(h, ElemSet::kMaxCarrier);
    std::cout << "ring " << h.name() << ": " << ideals.size()
              << " hyperideals\n";
    for (const auto& i : ideals) std::cout << i.to_string() << "\n";
    return 0;
}

// file + --ideal resolution shared by classify/region
ElemSet resolve_ideal(const SpecDocument& doc, const std::string& name,
                      const HyperRing** ring_out) {
    const IdealDecl* id = doc.find_ideal(name);
    if (!id) throw UsageError("no ideal named '" + name + "'");
    const RingDecl* rd = doc.find_ring(id->ring);
    if (!rd->ring.flags().is_hyperring())
        throw UsageError("ring " + rd->name + " is not a hyperring");
    ElemSet p = ideal_elems(doc, *id);
    if (!is_hyperideal(rd->ring, p))
        throw UsageError("ideal " + name + " = " + p.to_string() +
                         " is not a hyperideal of " + rd->name);
    if (p == ElemSet::full(rd->ring.size()))
        throw UsageError("ideal " + name + " is the whole ring");
    *ring_out = &rd->ring;
    return p;
}

int cmd_classify(const std::string& file, const std::string& ideal,
                 const std::string& grid) {
    auto [amax, bmax] = parse_grid(grid);
    SpecDocument doc = parse_document(slurp(file));
    const HyperRing* ring = nullptr;
    ElemSet p = resolve_ideal(doc, ideal, &ring);
    Lab lab(*ring);
    ClassificationReport rep = classify_ideal(lab, p, amax, bmax);
    std::cout << "ring " << ring->name() << ", ideal " << ideal << " = "
              << p.to_string() << "\n"
              << rep.to_string();
    return 0;
}

void print_region(const char* title, const Region& r) {
    std::cout << title << " (rows alpha=1.." << r.amax << ", cols beta=1.."
              << r.bmax << "):\n";
    for (int a = 1; a <= r.amax; ++a) {
        std::cout << " ";
        for (int b = 1; b <= r.bmax; ++b)
            std::cout << " " << (r.at(a, b) ? "Y" : ".");
        std::cout << "\n";
    }
}

int cmd_region(const std::string& file, const std::string& ideal,
               const std::string& grid) {
    auto [amax, bmax] = parse_grid(grid);
    SpecDocument doc = parse_document(slurp(file));
    const HyperRing* ring = nullptr;
    ElemSet p = resolve_ideal(doc, ideal, &ring);
    Lab lab(*ring);
    std::cout << "ring " << ring->name() << ", ideal " << ideal << " = "
              << p.to_string() << "\n";
    print_region("prime region",
                 compute_region(lab, p, RegionKind::kPrime, amax, bmax));
    print_region("closed region",
                 compute_region(lab, p, RegionKind::kClosed, amax, bmax));
    print_region("weakly prime region",
                 compute_region(lab, p, RegionKind::kWeaklyPrime, amax,
                                bmax));
    return 0;
}

int cmd_fundamental(const RingArgs& args) {
    HyperRing h = HyperRing::zx_mod(2, {1});
    auto doc = args.resolve(h);
    if (!h.flags().is_hyperring())
        throw UsageError("ring " + h.name() + " is not a hyperring");
    FundamentalRing f = make_fundamental_ring(h);
    std::cout << "fundamental ring of " << h.name() << ": "
              << f.ring.size() << " classes\n";
    for (std::size_t i = 0; i < f.classes.size(); ++i)
        std::cout << "class " << i << " = " << f.classes[i].to_string()
                  << (f.classes[i].contains(h.zero()) ? " (zero)" : "")
                  << "\n";
    std::cout << "add table:\n";
    for (int a = 0; a < f.ring.size(); ++a) {
        std::cout << " ";
        for (int b = 0; b < f.ring.size(); ++b)
            std::cout << " " << f.ring.add(a, b);
        std::cout << "\n";
    }
    std::cout << "mul table:\n";
    for (int a = 0; a < f.ring.size(); ++a) {
        std::cout << " ";
        for (int b = 0; b < f.ring.size(); ++b)
            std::cout << " " << f.ring.mul(a, b).elements().front();
        std::cout << "\n";
    }
    return 0;
}

int cmd_theorems(unsigned seed, const std::string& grid,
                 const std::string& json_path) {
    auto [amax, bmax] = parse_grid(grid);
    std::vector<CorpusInstance> corpus = generate_corpus();
    SuiteOptions opt;
    opt.amax = amax;
    opt.bmax = bmax;
    opt.seed = seed;
    SuiteReport rep = run_suite(corpus, opt);

    std::cout << "corpus: " << corpus.size() << " instances, grid " << amax
              << "x" << bmax << ", seed " << seed << "\n";
    for (const auto& c : rep.coverage)
        std::cout << c.theorem_id << ": satisfied=" << c.satisfied
                  << " violations=" << c.violations
                  << (c.report_only ? " [report-only]" : "") << "\n";
    std::cout << "rows: " << rep.rows.size() << "\n";
    for (const auto& row : rep.rows)
        if (row.outcome == Outcome::kViolation)
            std::cout << "VIOLATION " << row.theorem_id << " "
                      << row.instance_id << " (" << row.alpha << ","
                      << row.beta << "): " << row.witness << "\n";
    std::cout << "violations: " << rep.violations << "\n"
              << "report-channel: " << rep.report_violations << "\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw UsageError("cannot write " + json_path);
        out << verdict_json(rep);
        std::cout << "wrote " << json_path << "\n";
    }
    return rep.violations > 0 ? 1 : 0;
}

std::vector<mpz_class> to_mpz(const std::vector<int>& xs) {
    std::vector<mpz_class> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

std::string int_set_str(const zx::IntSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        if (!first) out += ",";
        out += x.get_str();
        first = false;
    }
    return out + "}";
}

int cmd_zx(const std::vector<int>& X, long mod_ideal,
           const std::string& claim, long bound, const std::string& power) {
    if (X.empty()) throw UsageError("zx needs --X");
    std::vector<mpz_class> xs = to_mpz(X);
    int rc = 0;

    if (!power.empty()) {
        auto comma = power.find(',');
        if (comma == std::string::npos)
            throw UsageError("--power wants x,k");
        mpz_class base(power.substr(0, comma));
        int k = std::stoi(power.substr(comma + 1));
        zx::IntSet s = zx::zx_power(base, k, xs);
        std::cout << base.get_str() << "^" << k << " = " << int_set_str(s)
                  << "\n";
    }

    if (!claim.empty()) {
        if (mod_ideal < 1)
            throw UsageError("--claim needs --mod-ideal <m>");
        auto colon = claim.find(':');
        auto comma = claim.find(',', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || comma == std::string::npos)
            throw UsageError("--claim wants kind:alpha,beta");
        std::string kind = claim.substr(0, colon);
        zx::ZxClaim zc;
        if (kind == "closed")
            zc.kind = zx::ClaimKind::kClosed;
        else if (kind == "prime")
            zc.kind = zx::ClaimKind::kPrime;
        else if (kind == "weakly")
            zc.kind = zx::ClaimKind::kWeaklyPrime;
        else
            throw UsageError("claim kind must be closed|prime|weakly");
        zc.alpha = std::stoi(claim.substr(colon + 1, comma - colon - 1));
        zc.beta = std::stoi(claim.substr(comma + 1));
        zc.modulus = mod_ideal;
        zc.X = xs;

        zx::BoundedVerdict v = zx::bounded_claim_check(zc, bound);
        std::cout << "claim " << kind << " (" << zc.alpha << "," << zc.beta
                  << ") on <" << mod_ideal << ">, bound " << bound << ": ";
        if (v.counterexample) {
            std::cout << "counterexample x=" << v.x.get_str();
            if (zc.kind != zx::ClaimKind::kClosed)
                std::cout << " y=" << v.y.get_str();
            std::cout << "\n";
            rc = 1;
        } else {
            std::cout << "no counterexample (checked " << v.checked
                      << ")\n" << v.note << "\n";
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multiplicative hyperring laboratory"};
    app.require_subcommand(1);

    RingArgs check_args;
    auto* check = app.add_subcommand(
        "check", "verify hyperring axioms and evaluate claims");
    check_args.attach(check);

    RingArgs ideals_args;
    auto* ideals =
        app.add_subcommand("ideals", "enumerate all hyperideals");
    ideals_args.attach(ideals);

    std::string cl_file, cl_ideal, cl_grid = "4x4";
    auto* classify =
        app.add_subcommand("classify", "full report for one hyperideal");
    classify->add_option("file", cl_file)->required();
    classify->add_option("--ideal", cl_ideal)->required();
    classify->add_option("--grid", cl_grid);

    std::string rg_file, rg_ideal, rg_grid = "4x4";
    auto* region =
        app.add_subcommand("region", "prime/closed grids as text matrices");
    region->add_option("file", rg_file)->required();
    region->add_option("--ideal", rg_ideal)->required();
    region->add_option("--grid", rg_grid);

    RingArgs fund_args;
    auto* fundamental = app.add_subcommand(
        "fundamental", "fundamental classes and quotient ring tables");
    fund_args.attach(fundamental);

    unsigned th_seed = 0;
    std::string th_grid = "4x4", th_json;
    auto* theorems =
        app.add_subcommand("theorems", "run the verification suite");
    theorems->add_option("--seed", th_seed);
    theorems->add_option("--grid", th_grid);
    theorems->add_option("--json", th_json, "write the machine report here");

    std::vector<int> zx_X;
    long zx_mod_ideal = 0, zx_bound = 200;
    std::string zx_claim, zx_power_arg;
    auto* zxcmd = app.add_subcommand(
        "zx", "bounded integer-hyperring checks (evidence, not proof)");
    zxcmd->add_option("--X", zx_X)->delimiter(',')->required();
    zxcmd->add_option("--mod-ideal", zx_mod_ideal,
                      "principal ideal <m> of Z_X");
    zxcmd->add_option("--claim", zx_claim, "kind:alpha,beta");
    zxcmd->add_option("--bound", zx_bound);
    zxcmd->add_option("--power", zx_power_arg, "x,k: print the hyperpower");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return cmd_check(check_args);
        if (*ideals) return cmd_ideals(ideals_args);
        if (*classify) return cmd_classify(cl_file, cl_ideal, cl_grid);
        if (*region) return cmd_region(rg_file, rg_ideal, rg_grid);
        if (*fundamental) return cmd_fundamental(fund_args);
        if (*theorems) return cmd_theorems(th_seed, th_grid, th_json);
        if (*zxcmd)
            return cmd_zx(zx_X, zx_mod_ideal, zx_claim, zx_bound,
                          zx_power_arg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
