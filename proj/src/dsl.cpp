#include "hyperlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <utility>

#include "hyperlab/ideals.hpp"
#include "json.hpp"

namespace hyperlab {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

namespace {

struct Token {
    enum Kind { kWord, kInt, kPunct } kind;
    std::string text;
    long value = 0;  // kInt only
    int col = 0;     // 1-based
};

std::vector<Token> tokenize_line(const std::string& s, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) ||
                    s[j] == '_'))
                ++j;
            out.push_back({Token::kWord, s.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        bool neg = c == '-' && i + 1 < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[i + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || neg) {
            std::size_t j = i + (neg ? 1 : 0);
            while (j < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            Token t{Token::kInt, s.substr(i, j - i), 0, col};
            t.value = std::stol(t.text);
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        if (std::string("={},():-").find(c) != std::string::npos) {
            out.push_back({Token::kPunct, std::string(1, c), 0, col});
            ++i;
            continue;
        }
        throw ParseError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
    return out;
}

// Cursor over one line's tokens; every expectation failure reports the
// position of the offending token (or just past the line on exhaustion).
struct Cursor {
    const std::vector<Token>& toks;
    std::size_t pos = 0;
    int line;
    int eol_col;

    bool done() const { return pos >= toks.size(); }
    const Token* peek() const { return done() ? nullptr : &toks[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, done() ? eol_col : toks[pos].col, msg);
    }

    const Token& any(const std::string& what) {
        if (done()) fail("expected " + what);
        return toks[pos++];
    }

    std::string word(const std::string& what) {
        const Token& t = any(what);
        if (t.kind != Token::kWord) {
            --pos;
            fail("expected " + what);
        }
        return t.text;
    }

    void keyword(const std::string& kw) {
        const Token& t = any("'" + kw + "'");
        if (t.kind != Token::kWord || t.text != kw) {
            --pos;
            fail("expected '" + kw + "'");
        }
    }

    long integer(const std::string& what) {
        const Token& t = any(what);
        if (t.kind != Token::kInt) {
            --pos;
            fail("expected " + what);
        }
        return t.value;
    }

    void punct(char c) {
        const Token& t = any(std::string("'") + c + "'");
        if (t.kind != Token::kPunct || t.text[0] != c) {
            --pos;
            fail(std::string("expected '") + c + "'");
        }
    }

    bool try_punct(char c) {
        if (!done() && toks[pos].kind == Token::kPunct &&
            toks[pos].text[0] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void end() {
        if (!done()) fail("unexpected trailing tokens");
    }

    // comma-separated integer list
    std::vector<long> int_list(const std::string& what) {
        std::vector<long> xs;
        xs.push_back(integer(what));
        while (try_punct(',')) xs.push_back(integer(what));
        return xs;
    }

    // {a,b,...} with at least one element
    std::vector<long> braced_list(const std::string& what) {
        punct('{');
        if (try_punct('}')) fail("empty set");
        std::vector<long> xs = int_list(what);
        punct('}');
        return xs;
    }
};

std::vector<int> normalize(std::vector<long> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return std::vector<int>(xs.begin(), xs.end());
}

// explicit table under construction
struct OpenTable {
    std::string name;
    int n = 0;
    int line = 0;
    std::vector<std::optional<int>> add;
    std::vector<std::optional<ElemSet>> mul;
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    SpecDocument run() {
        int line = 0;
        std::size_t start = 0;
        while (start <= text_.size()) {
            std::size_t nl = text_.find('\n', start);
            std::string raw = text_.substr(
                start, nl == std::string::npos ? nl : nl - start);
            ++line;
            handle_line(raw, line);
            if (nl == std::string::npos) break;
            start = nl + 1;
        }
        finalize_table();
        return std::move(doc_);
    }

private:
    void handle_line(const std::string& raw, int line) {
        std::vector<Token> toks = tokenize_line(raw, line);
        if (toks.empty()) return;
        Cursor c{toks, 0, line, static_cast<int>(raw.size()) + 1};
        const std::string head = toks[0].text;
        if (toks[0].kind != Token::kWord)
            c.fail("expected a declaration keyword");
        if (head == "add" || head == "mul") {
            table_line(c, head == "add");
            return;
        }
        finalize_table();
        c.pos = 1;
        if (head == "ring")
            ring_decl(c);
        else if (head == "ideal")
            ideal_decl(c);
        else if (head == "claim")
            claim_decl(c);
        else if (head == "suite")
            suite_decl(c);
        else
            throw ParseError(line, toks[0].col,
                             "unknown keyword '" + head + "'");
    }

    void ring_decl(Cursor& c) {
        std::string name = c.word("ring name");
        if (doc_.find_ring(name))
            c.fail("duplicate ring '" + name + "'");
        std::string kind = c.word("'zx_mod' or 'table'");
        if (kind == "zx_mod") {
            c.keyword("n");
            c.punct('=');
            int n = static_cast<int>(c.integer("carrier size"));
            c.keyword("X");
            c.punct('=');
            std::vector<int> xs = normalize(c.int_list("X entry"));
            c.end();
            try {
                HyperRing ring = HyperRing::zx_mod(n, xs, name);
                doc_.rings.push_back(RingDecl{name, true, n, std::move(xs),
                                              std::move(ring), c.line});
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(c.line, 1, e.what());
            }
        } else if (kind == "table") {
            c.keyword("n");
            c.punct('=');
            int n = static_cast<int>(c.integer("carrier size"));
            c.end();
            if (n < 1 || n > ElemSet::kMaxCarrier)
                c.fail("carrier size out of range");
            OpenTable t;
            t.name = name;
            t.n = n;
            t.line = c.line;
            t.add.resize(static_cast<std::size_t>(n) * n);
            t.mul.resize(static_cast<std::size_t>(n) * n);
            table_ = std::move(t);
        } else {
            --c.pos;
            c.fail("expected 'zx_mod' or 'table'");
        }
    }

    void table_line(Cursor& c, bool is_add) {
        if (!table_)
            c.fail(std::string(is_add ? "add" : "mul") +
                   " line outside a table ring");
        c.pos = 1;
        int i = static_cast<int>(c.integer("row index"));
        int j = static_cast<int>(c.integer("column index"));
        if (i < 0 || i >= table_->n || j < 0 || j >= table_->n)
            c.fail("index out of carrier");
        c.punct('=');
        std::size_t at =
            static_cast<std::size_t>(i) * table_->n + j;
        if (is_add) {
            int k = static_cast<int>(c.integer("sum value"));
            if (k < 0 || k >= table_->n) {
                --c.pos;
                c.fail("sum value out of carrier");
            }
            c.end();
            if (table_->add[at]) c.fail("duplicate add entry");
            table_->add[at] = k;
        } else {
            int brace_col = c.done() ? c.eol_col : c.peek()->col;
            std::vector<long> xs = c.braced_list("product element");
            c.end();
            ElemSet s(table_->n);
            for (long x : xs) {
                if (x < 0 || x >= table_->n)
                    throw ParseError(c.line, brace_col,
                                     "product element out of carrier");
                s.insert(static_cast<int>(x));
            }
            if (table_->mul[at]) c.fail("duplicate mul entry");
            table_->mul[at] = std::move(s);
        }
    }

    void finalize_table() {
        if (!table_) return;
        OpenTable t = std::move(*table_);
        table_.reset();
        std::vector<int> add;
        std::vector<ElemSet> mul;
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) {
                std::size_t at = static_cast<std::size_t>(i) * t.n + j;
                if (!t.add[at])
                    throw ParseError(t.line, 1,
                                     "table ring '" + t.name +
                                         "' missing add " +
                                         std::to_string(i) + " " +
                                         std::to_string(j));
                if (!t.mul[at])
                    throw ParseError(t.line, 1,
                                     "table ring '" + t.name +
                                         "' missing mul " +
                                         std::to_string(i) + " " +
                                         std::to_string(j));
                add.push_back(*t.add[at]);
                mul.push_back(*t.mul[at]);
            }
        try {
            HyperRing ring = HyperRing::from_tables(
                t.n, std::move(add), std::move(mul), t.name,
                /*strict=*/false);
            doc_.rings.push_back(RingDecl{t.name, false, t.n, {},
                                          std::move(ring), t.line});
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(t.line, 1, e.what());
        }
    }

    void ideal_decl(Cursor& c) {
        std::string name = c.word("ideal name");
        if (doc_.find_ideal(name))
            c.fail("duplicate ideal '" + name + "'");
        c.keyword("in");
        int ring_col = c.done() ? c.eol_col : c.peek()->col;
        std::string ring = c.word("ring name");
        const RingDecl* rd = doc_.find_ring(ring);
        if (!rd)
            throw ParseError(c.line, ring_col,
                             "unknown ring '" + ring + "'");
        bool generated = false;
        if (c.try_punct('=')) {
            generated = false;
        } else {
            c.keyword("gen");
            generated = true;
        }
        int set_col = c.done() ? c.eol_col : c.peek()->col;
        std::vector<int> elems = normalize(c.braced_list("element"));
        c.end();
        for (int x : elems)
            if (x < 0 || x >= rd->n)
                throw ParseError(c.line, set_col,
                                 "element out of carrier");
        IdealDecl d;
        d.name = name;
        d.ring = ring;
        d.generated = generated;
        d.elems = std::move(elems);
        d.line = c.line;
        doc_.ideals.push_back(std::move(d));
    }

    void claim_decl(Cursor& c) {
        std::string name = c.word("claim name");
        for (const auto& cl : doc_.claims)
            if (cl.name == name) c.fail("duplicate claim '" + name + "'");
        c.punct(':');
        int ideal_col = c.done() ? c.eol_col : c.peek()->col;
        std::string ideal = c.word("ideal name");
        if (!doc_.find_ideal(ideal))
            throw ParseError(c.line, ideal_col,
                             "unknown ideal '" + ideal + "'");
        c.keyword("is");
        ClaimDecl d;
        d.name = name;
        d.ideal = ideal;
        d.line = c.line;
        if (c.peek() && c.peek()->kind == Token::kWord &&
            c.peek()->text == "weakly") {
            ++c.pos;
            d.weakly = true;
        }
        if (c.try_punct('(')) {
            d.graded = true;
            d.alpha = static_cast<int>(c.integer("alpha"));
            c.punct(',');
            d.beta = static_cast<int>(c.integer("beta"));
            c.punct(')');
            c.punct('-');
            int pred_col = c.done() ? c.eol_col : c.peek()->col;
            d.predicate = c.word("graded predicate");
            if (d.predicate != "prime" && d.predicate != "closed")
                throw ParseError(c.line, pred_col,
                                 "unknown graded predicate '" +
                                     d.predicate + "'");
            if (d.weakly && d.predicate != "prime")
                throw ParseError(c.line, pred_col,
                                 "weakly applies only to (a,b)-prime");
            if (d.alpha < 1 || d.beta < 1)
                c.fail("grades must be at least 1");
        } else {
            int pred_col = c.done() ? c.eol_col : c.peek()->col;
            d.predicate = c.word("predicate");
            static const char* kBare[] = {"prime", "primary", "maximal",
                                          "C", "strongC"};
            bool ok = false;
            for (const char* p : kBare) ok = ok || d.predicate == p;
            if (!ok)
                throw ParseError(c.line, pred_col,
                                 "unknown predicate '" + d.predicate + "'");
            if (d.weakly)
                throw ParseError(c.line, pred_col,
                                 "weakly applies only to (a,b)-prime");
        }
        c.end();
        doc_.claims.push_back(std::move(d));
    }

    void suite_decl(Cursor& c) {
        SuiteDecl d;
        d.line = c.line;
        c.keyword("seed");
        c.punct('=');
        long seed = c.integer("seed");
        if (seed < 0) c.fail("seed must be nonnegative");
        d.seed = static_cast<unsigned>(seed);
        c.keyword("grid");
        c.punct('=');
        d.amax = static_cast<int>(c.integer("grid size"));
        // "3x3" arrives as int then word "x3"; "3 x 3" as int, word, int
        std::string w = c.word("<a>x<b> grid");
        if (w == "x") {
            d.bmax = static_cast<int>(c.integer("grid size"));
        } else if (w.size() > 1 && w[0] == 'x' &&
                   w.find_first_not_of("0123456789", 1) ==
                       std::string::npos) {
            d.bmax = std::stoi(w.substr(1));
        } else {
            --c.pos;
            c.fail("expected <a>x<b> grid");
        }
        if (d.amax < 1 || d.bmax < 1) c.fail("grid sizes must be positive");
        c.end();
        doc_.suites.push_back(d);
    }

    const std::string& text_;
    SpecDocument doc_;
    std::optional<OpenTable> table_;
};

}  // namespace

const RingDecl* SpecDocument::find_ring(const std::string& name) const {
    for (const auto& r : rings)
        if (r.name == name) return &r;
    return nullptr;
}

const IdealDecl* SpecDocument::find_ideal(const std::string& name) const {
    for (const auto& i : ideals)
        if (i.name == name) return &i;
    return nullptr;
}

SpecDocument parse_document(const std::string& text) {
    return Parser(text).run();
}

std::string claim_body(const ClaimDecl& c) {
    std::string s = c.ideal + " is ";
    if (c.weakly) s += "weakly ";
    if (c.graded)
        s += "(" + std::to_string(c.alpha) + "," + std::to_string(c.beta) +
             ")-";
    return s + c.predicate;
}

std::string print_document(const SpecDocument& doc) {
    std::string out;
    auto list = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(xs[i]);
        }
        return s;
    };
    for (const auto& r : doc.rings) {
        if (r.is_template) {
            out += "ring " + r.name + " zx_mod n=" + std::to_string(r.n) +
                   " X=" + list(r.X) + "\n";
            continue;
        }
        out += "ring " + r.name + " table n=" + std::to_string(r.n) + "\n";
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                out += "add " + std::to_string(i) + " " + std::to_string(j) +
                       " = " + std::to_string(r.ring.add(i, j)) + "\n";
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j)
                out += "mul " + std::to_string(i) + " " + std::to_string(j) +
                       " = " + r.ring.mul(i, j).to_string() + "\n";
    }
    for (const auto& i : doc.ideals)
        out += "ideal " + i.name + " in " + i.ring +
               (i.generated ? " gen " : " = ") + "{" + list(i.elems) + "}\n";
    for (const auto& c : doc.claims)
        out += "claim " + c.name + ": " + claim_body(c) + "\n";
    for (const auto& s : doc.suites)
        out += "suite seed=" + std::to_string(s.seed) + " grid=" +
               std::to_string(s.amax) + "x" + std::to_string(s.bmax) + "\n";
    return out;
}

ElemSet ideal_elems(const SpecDocument& doc, const IdealDecl& ideal) {
    const RingDecl* rd = doc.find_ring(ideal.ring);
    if (!rd) throw std::invalid_argument("unknown ring " + ideal.ring);
    ElemSet s(rd->n);
    for (int x : ideal.elems) s.insert(x);
    return ideal.generated ? ideal_generate(rd->ring, s) : s;
}

std::vector<ClaimOutcome> evaluate_claims(const SpecDocument& doc) {
    std::vector<ClaimOutcome> out;
    std::map<std::string, Lab> labs;
    for (const auto& c : doc.claims) {
        const IdealDecl* id = doc.find_ideal(c.ideal);
        const RingDecl* rd = doc.find_ring(id->ring);
        if (!rd->ring.flags().is_hyperring())
            throw std::invalid_argument("ring " + rd->name +
                                        " is not a hyperring");
        Lab& lab = labs.try_emplace(rd->name, rd->ring).first->second;
        ElemSet p = ideal_elems(doc, *id);
        if (!is_hyperideal(rd->ring, p))
            throw std::invalid_argument("ideal " + id->name + " = " +
                                        p.to_string() +
                                        " is not a hyperideal of " +
                                        rd->name);
        bool v = false;
        if (c.graded && c.predicate == "prime")
            v = c.weakly ? is_weakly_ab_prime(lab, p, c.alpha, c.beta)
                         : is_ab_prime(lab, p, c.alpha, c.beta);
        else if (c.graded)
            v = is_ab_closed(lab, p, c.alpha, c.beta);
        else if (c.predicate == "prime")
            v = is_prime(lab, p);
        else if (c.predicate == "primary")
            v = is_primary(lab, p);
        else if (c.predicate == "maximal")
            v = is_maximal(lab, p);
        else if (c.predicate == "C")
            v = is_c_hyperideal(lab, p);
        else
            v = is_strong_c_hyperideal(lab, p);
        out.push_back({c.name, claim_body(c), v});
    }
    return out;
}

std::string verdict_json(const SuiteReport& report) {
    struct Agg {
        bool violated = false;
        bool held = false;
        std::string witness;
    };
    std::map<std::pair<std::string, std::string>, Agg> agg;
    for (const auto& row : report.rows) {
        Agg& a = agg[{row.theorem_id, row.instance_id}];
        if (row.outcome == Outcome::kViolation) {
            if (!a.violated) {
                a.violated = true;
                a.witness = "alpha=" + std::to_string(row.alpha) +
                            " beta=" + std::to_string(row.beta) + " " +
                            row.witness;
            }
        } else if (row.outcome == Outcome::kHolds) {
            a.held = true;
        }
    }

    nlohmann::ordered_json j;
    j["version"] = 1;
    j["seed"] = report.opt.seed;
    j["verdicts"] = nlohmann::ordered_json::array();
    std::map<std::string, long> satisfied;
    for (const auto& [key, a] : agg) {
        nlohmann::ordered_json v;
        v["theorem"] = key.first;
        v["instance"] = key.second;
        if (a.violated) {
            v["outcome"] = "violation";
            v["witness"] = a.witness;
        } else {
            v["outcome"] = a.held ? "holds" : "hypothesis_not_met";
        }
        satisfied[key.first] += a.violated || a.held ? 1 : 0;
        j["verdicts"].push_back(std::move(v));
    }
    j["coverage"] = nlohmann::ordered_json::array();
    for (const auto& [th, n] : satisfied) {
        nlohmann::ordered_json c;
        c["theorem"] = th;
        c["satisfied"] = n;
        c["vacuous"] = n == 0;
        j["coverage"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

}  // namespace hyperlab
