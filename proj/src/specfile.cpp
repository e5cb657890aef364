#include "hyperring/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hyperring/ideals.hpp"

namespace hyperring {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw HyperError(ErrorCode::ParseError,
                     "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<uint32_t> parse_uint_list(const std::string& s, int line) {
    std::vector<uint32_t> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                parse_fail(line, "expected integer, got '" + cur + "'");
        out.push_back(uint32_t(std::stoul(cur)));
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

RaSpec parse_ra_compact(const std::string& s, int line) {
    // "RA:6:0,1"
    if (lower(s.substr(0, 3)) != "ra:") parse_fail(line, "expected RA:<n>:<A> factor");
    size_t c2 = s.find(':', 3);
    if (c2 == std::string::npos) parse_fail(line, "expected RA:<n>:<A> factor");
    RaSpec spec;
    spec.n = uint32_t(std::stoul(s.substr(3, c2 - 3)));
    spec.A = parse_uint_list(s.substr(c2 + 1), line);
    return spec;
}

Family parse_family_args(const std::vector<std::string>& toks, size_t start, int line) {
    Family fam;
    fam.kind = Family::Kind::Default;
    for (size_t i = start; i < toks.size(); ++i) {
        size_t eq = toks[i].find('=');
        if (eq == std::string::npos) parse_fail(line, "expected key=value, got " + toks[i]);
        std::string key = lower(toks[i].substr(0, eq));
        std::string val = toks[i].substr(eq + 1);
        if (key == "family") {
            std::string v = lower(val);
            if (v == "ra") fam.kind = Family::Kind::RaSweep;
            else if (v == "product") fam.kind = Family::Kind::ProductSweep;
            else if (v == "quotient") fam.kind = Family::Kind::QuotientSweep;
            else if (v == "default") fam.kind = Family::Kind::Default;
            else parse_fail(line, "unknown family kind " + val);
        } else if (key == "nmax") {
            fam.nmax = uint32_t(std::stoul(val));
        } else if (key == "amax") {
            fam.amax = uint32_t(std::stoul(val));
        } else if (key == "cap") {
            fam.product_cap = uint32_t(std::stoul(val));
        } else if (key == "triples") {
            fam.triples = val == "1" || lower(val) == "true";
        } else {
            parse_fail(line, "unknown suite option " + key);
        }
    }
    return fam;
}

}  // namespace

HyperringSpecFile parse_spec_text(const std::string& text) {
    HyperringSpecFile out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string section;
    std::map<std::string, std::string> ckv;  // construction keys (with line info folded)
    std::map<std::string, int> clines;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') parse_fail(lineno, "unterminated section header");
            section = lower(line.substr(1, line.size() - 2));
            if (section != "construction" && section != "ideals" && section != "queries" &&
                section != "suites")
                parse_fail(lineno, "unknown section [" + section + "]");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) parse_fail(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (section.empty()) parse_fail(lineno, "key outside of any section");

        if (section == "construction") {
            std::string k = lower(key);
            if (ckv.count(k)) parse_fail(lineno, "duplicate construction key " + key);
            ckv[k] = val;
            clines[k] = lineno;
        } else if (section == "ideals") {
            for (const auto& [label, gens] : out.ideals)
                if (label == key) parse_fail(lineno, "duplicate ideal label " + key);
            out.ideals.emplace_back(key, parse_uint_list(val, lineno));
        } else if (section == "queries") {
            if (lower(key) != "query") parse_fail(lineno, "expected 'query = ...'");
            auto toks = split_ws(val);
            if (toks.empty()) parse_fail(lineno, "empty query");
            auto pred = predicate_from_name(toks[0]);
            if (!pred) parse_fail(lineno, "unknown predicate " + toks[0]);
            QuerySpec q;
            q.predicate = *pred;
            size_t at = 1;
            if (at >= toks.size()) parse_fail(lineno, "query missing ideal label");
            q.p_label = toks[at++];
            if (predicate_needs_i(*pred)) {
                if (at >= toks.size()) parse_fail(lineno, "query missing I label");
                q.i_label = toks[at++];
            }
            for (; at < toks.size(); ++at) {
                if (toks[at].rfind("n=", 0) == 0)
                    q.n = uint32_t(std::stoul(toks[at].substr(2)));
                else
                    parse_fail(lineno, "unexpected query token " + toks[at]);
            }
            if (predicate_needs_n(*pred) && !q.n)
                parse_fail(lineno, "predicate requires n=<count>");
            out.queries.push_back(std::move(q));
        } else if (section == "suites") {
            if (lower(key) != "suite") parse_fail(lineno, "expected 'suite = ...'");
            auto toks = split_ws(val);
            if (toks.empty()) parse_fail(lineno, "empty suite line");
            auto id = suite_from_name(toks[0]);
            if (!id) parse_fail(lineno, "unknown suite " + toks[0]);
            out.suites.push_back({*id, parse_family_args(toks, 1, lineno)});
        }
    }

    // assemble construction
    auto need = [&](const char* k) -> std::string {
        auto it = ckv.find(k);
        if (it == ckv.end())
            throw HyperError(ErrorCode::ParseError,
                             std::string("missing construction key '") + k + "'");
        return it->second;
    };
    if (!ckv.count("kind")) {
        if (!ckv.empty() || !out.queries.empty() || !out.ideals.empty())
            throw HyperError(ErrorCode::ParseError, "missing construction kind");
        out.construction = "none";
    } else {
        std::string kind = lower(ckv["kind"]);
        std::vector<std::string> known;
        if (kind == "ra") {
            out.construction = "RA";
            RaSpec spec;
            spec.n = uint32_t(std::stoul(need("n")));
            spec.A = parse_uint_list(need("a"), clines.count("a") ? clines["a"] : 0);
            out.ra = spec;
            known = {"kind", "n", "a"};
        } else if (kind == "product") {
            out.construction = "product";
            for (const auto& tok : split_ws(need("factors"))) {
                std::string f = tok;
                if (!f.empty() && f.back() == ';') f.pop_back();
                out.factors.push_back(parse_ra_compact(f, clines["factors"]));
            }
            if (out.factors.size() < 2)
                throw HyperError(ErrorCode::ParseError, "product needs >= 2 factors");
            known = {"kind", "factors"};
        } else if (kind == "quotient") {
            out.construction = "quotient";
            out.base = parse_ra_compact(need("base"), clines["base"]);
            out.modulo = parse_uint_list(need("modulo"), clines["modulo"]);
            known = {"kind", "base", "modulo"};
        } else if (kind == "tables") {
            out.construction = "tables";
            RawTables t;
            uint32_t m = uint32_t(std::stoul(need("m")));
            t.zero = uint32_t(std::stoul(need("zero")));
            t.neg = parse_uint_list(need("neg"), clines["neg"]);
            t.add.resize(size_t(m) * m);
            t.hmul.resize(size_t(m) * m);
            for (uint32_t r = 0; r < m; ++r) {
                std::string ak = "add." + std::to_string(r);
                auto row = parse_uint_list(need(ak.c_str()), clines[ak]);
                if (row.size() != m)
                    throw HyperError(ErrorCode::ParseError, ak + " must have m entries");
                for (uint32_t cix = 0; cix < m; ++cix) t.add[size_t(r) * m + cix] = row[cix];
                std::string hk = "hmul." + std::to_string(r);
                std::string hv = need(hk.c_str());
                // entries like "[0,1],[0]" or "[0,1] [0]"
                std::vector<std::vector<uint32_t>> sets;
                size_t pos = 0;
                while ((pos = hv.find('[', pos)) != std::string::npos) {
                    size_t close = hv.find(']', pos);
                    if (close == std::string::npos)
                        throw HyperError(ErrorCode::ParseError, hk + ": unterminated set");
                    sets.push_back(parse_uint_list(hv.substr(pos + 1, close - pos - 1),
                                                   clines[hk]));
                    pos = close + 1;
                }
                if (sets.size() != m)
                    throw HyperError(ErrorCode::ParseError, hk + " must have m sets");
                for (uint32_t cix = 0; cix < m; ++cix) {
                    std::sort(sets[cix].begin(), sets[cix].end());
                    t.hmul[size_t(r) * m + cix] = sets[cix];
                }
                known.push_back(ak);
                known.push_back(hk);
            }
            if (ckv.count("labels")) {
                std::istringstream ls(ckv["labels"]);
                std::string lab;
                while (std::getline(ls, lab, ',')) t.labels.push_back(trim(lab));
                known.push_back("labels");
            }
            out.tables = std::move(t);
            known.push_back("kind");
            known.push_back("m");
            known.push_back("zero");
            known.push_back("neg");
        } else {
            throw HyperError(ErrorCode::UnknownConstruction,
                             "unknown construction kind '" + ckv["kind"] + "'");
        }
        for (const auto& [k, v] : ckv) {
            (void)v;
            if (std::find(known.begin(), known.end(), k) == known.end())
                parse_fail(clines[k], "unknown construction key '" + k + "'");
        }
    }
    return out;
}

HyperringSpecFile parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw HyperError(ErrorCode::ParseError, "cannot open spec file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

Ring HyperringSpecFile::instantiate() const {
    if (construction == "RA") return build_ra(*ra);
    if (construction == "product") {
        std::vector<Ring> f;
        for (const auto& spec : factors) f.push_back(build_ra(spec));
        return product_hyperring(f).ring;
    }
    if (construction == "quotient") {
        Ring b = build_ra(*base);
        IndexSet gens(b->size());
        for (uint32_t g : modulo) {
            if (g >= b->size())
                throw HyperError(ErrorCode::BadGenerator,
                                 "modulo generator " + std::to_string(g) + " out of range");
            gens.set(g);
        }
        return quotient_hyperring(b, generated_ideal(b, gens)).ring;
    }
    if (construction == "tables") return FiniteHyperring::create(*tables, "tables");
    throw HyperError(ErrorCode::UnknownConstruction, "spec has no construction");
}

Hyperideal HyperringSpecFile::resolve_ideal(const Ring& r, const std::string& label) const {
    for (const auto& [lab, gens] : ideals) {
        if (lab != label) continue;
        IndexSet g(r->size());
        for (uint32_t v : gens) {
            if (v >= r->size())
                throw HyperError(ErrorCode::BadGenerator,
                                 "ideal generator " + std::to_string(v) +
                                     " out of range for carrier of size " +
                                     std::to_string(r->size()));
            g.set(v);
        }
        return generated_ideal(r, g);
    }
    throw HyperError(ErrorCode::ParseError, "unknown ideal label '" + label + "'");
}

}  // namespace hyperring
