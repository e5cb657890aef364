#include "hyperring/harness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperring/parallel.hpp"

namespace hyperring {

const char* suite_name(SuiteId s) {
    switch (s) {
        case SuiteId::T1: return "T1";
        case SuiteId::T2: return "T2";
        case SuiteId::T3a: return "T3a";
        case SuiteId::T3b: return "T3b";
        case SuiteId::T4: return "T4";
        case SuiteId::T4a: return "T4a";
        case SuiteId::T4b: return "T4b";
        case SuiteId::T5: return "T5";
        case SuiteId::T6: return "T6";
        case SuiteId::T7: return "T7";
        case SuiteId::T8: return "T8";
        case SuiteId::T9a: return "T9a";
        case SuiteId::T9b: return "T9b";
        case SuiteId::T10: return "T10";
        case SuiteId::T11: return "T11";
        case SuiteId::T12: return "T12";
        case SuiteId::T13: return "T13";
        case SuiteId::T14: return "T14";
        case SuiteId::T15: return "T15";
        case SuiteId::T16: return "T16";
        case SuiteId::T17: return "T17";
    }
    return "?";
}

std::vector<SuiteId> all_suites() {
    return {SuiteId::T1,  SuiteId::T2,  SuiteId::T3a, SuiteId::T3b, SuiteId::T4,
            SuiteId::T4a, SuiteId::T4b, SuiteId::T5,  SuiteId::T6,  SuiteId::T7,
            SuiteId::T8,  SuiteId::T9a, SuiteId::T9b, SuiteId::T10, SuiteId::T11,
            SuiteId::T12, SuiteId::T13, SuiteId::T14, SuiteId::T15, SuiteId::T16,
            SuiteId::T17};
}

std::optional<SuiteId> suite_from_name(const std::string& s) {
    for (SuiteId id : all_suites())
        if (s == suite_name(id)) return id;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// family generation
// ---------------------------------------------------------------------------

namespace {

void append_ra_sweep(std::vector<RingInstance>& out, uint32_t nmax, uint32_t amax) {
    for (uint32_t n = 2; n <= nmax; ++n) {
        for (uint32_t sz = 1; sz <= amax && sz <= n; ++sz) {
            std::vector<uint32_t> combo(sz);
            for (uint32_t i = 0; i < sz; ++i) combo[i] = i;
            while (true) {
                RaSpec spec{n, combo};
                RingInstance inst;
                inst.ra = spec;
                inst.ring = build_ra(spec);
                inst.name = inst.ring->name();
                out.push_back(std::move(inst));
                // next lexicographic combination
                int i = int(sz) - 1;
                while (i >= 0 && combo[i] == n - sz + i) --i;
                if (i < 0) break;
                ++combo[i];
                for (uint32_t j = uint32_t(i) + 1; j < sz; ++j) combo[j] = combo[j - 1] + 1;
            }
        }
    }
}

void append_products(std::vector<RingInstance>& out, const std::vector<RingInstance>& ras,
                     uint32_t cap, bool triples) {
    for (size_t i = 0; i < ras.size(); ++i)
        for (size_t j = i; j < ras.size(); ++j) {
            uint64_t m = uint64_t(ras[i].ring->size()) * ras[j].ring->size();
            if (m > cap) continue;
            RingInstance inst;
            inst.product = product_hyperring({ras[i].ring, ras[j].ring}, cap);
            inst.ring = inst.product->ring;
            inst.name = inst.ring->name();
            out.push_back(std::move(inst));
        }
    if (!triples) return;
    for (size_t i = 0; i < ras.size(); ++i)
        for (size_t j = i; j < ras.size(); ++j) {
            uint64_t mij = uint64_t(ras[i].ring->size()) * ras[j].ring->size();
            if (mij > cap) continue;
            for (size_t l = j; l < ras.size(); ++l) {
                uint64_t m = mij * ras[l].ring->size();
                if (m > cap) continue;
                RingInstance inst;
                inst.product =
                    product_hyperring({ras[i].ring, ras[j].ring, ras[l].ring}, cap);
                inst.ring = inst.product->ring;
                inst.name = inst.ring->name();
                out.push_back(std::move(inst));
            }
        }
}

void append_quotients(std::vector<RingInstance>& out, const std::vector<RingInstance>& ras,
                      uint32_t size_cap) {
    for (const auto& base : ras) {
        const IdealLattice& lat = lattice_of(base.ring, size_cap);
        for (const IndexSet& J : lat.ideals) {
            if (J.count() == base.ring->size()) continue;  // improper
            if (J.count() <= 1) continue;                  // zero ideal: isomorphic copy
            RingInstance inst;
            QuotientRing q = quotient_hyperring(base.ring, {base.ring, J});
            inst.ring = q.ring;
            inst.name = inst.ring->name();
            out.push_back(std::move(inst));
        }
    }
}

}  // namespace

std::vector<RingInstance> generate_family(const Family& fam) {
    std::vector<RingInstance> out;
    switch (fam.kind) {
        case Family::Kind::FixtureList:
            return fam.fixtures;
        case Family::Kind::RaSweep:
            append_ra_sweep(out, fam.nmax, fam.amax);
            break;
        case Family::Kind::ProductSweep: {
            std::vector<RingInstance> ras;
            append_ra_sweep(ras, fam.nmax, fam.amax);
            append_products(out, ras, fam.product_cap, fam.triples);
            break;
        }
        case Family::Kind::QuotientSweep: {
            std::vector<RingInstance> ras;
            append_ra_sweep(ras, fam.nmax, fam.amax);
            append_quotients(out, ras, 64);
            break;
        }
        case Family::Kind::Default: {
            std::vector<RingInstance> ras;
            append_ra_sweep(ras, fam.nmax, fam.amax);
            out = ras;
            append_products(out, ras, fam.product_cap, fam.triples);
            append_quotients(out, ras, 64);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// per-ring context with memoized lattice arithmetic
// ---------------------------------------------------------------------------

namespace {

struct Partial {
    uint64_t instances = 0;
    uint64_t skipped = 0;
    std::vector<SuiteFailure> failures;
    std::vector<SuiteFailure> notes;
    std::map<std::string, uint64_t> info;
};

struct Ctx {
    const HarnessConfig* cfg = nullptr;
    const RingInstance* inst = nullptr;
    Ring R;
    uint32_t m = 0;
    std::vector<IndexSet> ideals;
    std::vector<size_t> proper;  // indices of proper ideals

    std::vector<std::vector<int>> prod_idx;   // lattice index of ideal product
    std::vector<int> rad_idx;                 // lattice index of radical
    std::vector<std::vector<int8_t>> iprime_; // memo: P proper x I
    std::vector<int8_t> prime_;               // memo per ideal (proper)
    std::map<std::string, QuotientRing> quotients;

    bool init(const RingInstance& instance, const HarnessConfig& config) {
        cfg = &config;
        inst = &instance;
        R = instance.ring;
        m = R->size();
        if (m > config.size_cap) return false;
        const IdealLattice& lat = lattice_of(R, config.size_cap);
        ideals = lat.ideals;
        for (size_t i = 0; i < ideals.size(); ++i)
            if (ideals[i].count() < m) proper.push_back(i);
        prod_idx.assign(ideals.size(), std::vector<int>(ideals.size(), -1));
        rad_idx.assign(ideals.size(), -1);
        iprime_.assign(ideals.size(), std::vector<int8_t>(ideals.size(), -1));
        prime_.assign(ideals.size(), -1);
        return true;
    }

    Hyperideal ideal(size_t i) const { return {R, ideals[i]}; }

    size_t index_of(const IndexSet& s) const {
        for (size_t i = 0; i < ideals.size(); ++i)
            if (ideals[i] == s) return i;
        throw HyperError(ErrorCode::MalformedTables, "set not in lattice");
    }

    size_t product(size_t i, size_t j) {
        int& memo = prod_idx[i][j];
        if (memo < 0) {
            Hyperideal p = ideal_product(ideal(i), ideal(j));
            memo = int(index_of(p.bits));
            prod_idx[j][i] = memo;
        }
        return size_t(memo);
    }

    size_t radical_of(size_t i) {
        int& memo = rad_idx[i];
        if (memo < 0) memo = int(index_of(radical(ideal(i)).bits));
        return size_t(memo);
    }

    bool pair_implication(const IndexSet& D, const IndexSet& memb) const {
        for (uint32_t a = 0; a < m; ++a) {
            if (memb.test(a)) continue;
            for (uint32_t b = 0; b < m; ++b)
                if (!memb.test(b) && D.contains(R->hmul(a, b))) return false;
        }
        return true;
    }

    bool is_prime_idx(size_t pi) {
        int8_t& memo = prime_[pi];
        if (memo < 0) memo = pair_implication(ideals[pi], ideals[pi]) ? 1 : 0;
        return memo == 1;
    }

    bool is_iprime_idx(size_t pi, size_t ii) {
        int8_t& memo = iprime_[pi][ii];
        if (memo < 0) {
            IndexSet D = ideals[pi] - ideals[product(ii, pi)];
            memo = pair_implication(D, ideals[pi]) ? 1 : 0;
        }
        return memo == 1;
    }

    const QuotientRing& quotient_by(const IndexSet& J) {
        std::string key = J.to_string();
        auto it = quotients.find(key);
        if (it == quotients.end())
            it = quotients.emplace(key, quotient_hyperring(R, {R, J})).first;
        return it->second;
    }

    std::string fp(std::initializer_list<std::pair<const char*, std::string>> kv) const {
        std::string s = "ring=" + inst->name;
        for (const auto& [k, v] : kv) {
            s += '|';
            s += k;
            s += '=';
            s += v;
        }
        return s;
    }
};

void add_failure(Partial& p, std::string fp, std::vector<uint32_t> w, std::string detail) {
    p.failures.push_back({std::move(fp), std::move(w), std::move(detail)});
}

// first (a,b) violating the pairwise implication, for failure witnesses
std::vector<uint32_t> pair_witness(const Ctx& c, const IndexSet& D, const IndexSet& memb) {
    for (uint32_t a = 0; a < c.m; ++a) {
        if (memb.test(a)) continue;
        for (uint32_t b = 0; b < c.m; ++b)
            if (!memb.test(b) && D.contains(c.R->hmul(a, b))) return {a, b};
    }
    return {};
}

// ---------------------------------------------------------------------------
// homomorphism pools
// ---------------------------------------------------------------------------

struct PooledHom {
    std::string name;
    GoodHomomorphism f;
};

std::vector<PooledHom> hom_pool(Ctx& c) {
    std::vector<PooledHom> pool;
    // quotient projections
    bool full_quotients = c.m <= 16;
    for (size_t pi : c.proper) {
        if (!full_quotients && c.ideals[pi].count() > 1) continue;
        const QuotientRing& q = c.quotient_by(c.ideals[pi]);
        pool.push_back({"proj/" + c.ideals[pi].to_string(), q.projection});
    }
    // componentwise projections of products
    if (c.inst->product) {
        const ProductRing& pr = *c.inst->product;
        for (size_t k = 0; k < pr.factors.size(); ++k) {
            std::vector<uint32_t> map(c.m);
            for (uint32_t idx = 0; idx < c.m; ++idx) map[idx] = pr.tuple_of(idx)[k];
            pool.push_back({"pi" + std::to_string(k + 1),
                            build_homomorphism(c.R, pr.factors[k], std::move(map))});
        }
    }
    // mod-d reductions of R_A carriers
    if (c.inst->ra) {
        const RaSpec& ra = *c.inst->ra;
        for (uint32_t d = 2; d < ra.n; ++d) {
            if (ra.n % d) continue;
            std::vector<uint32_t> A2;
            for (uint32_t a : ra.A) A2.push_back(a % d);
            std::sort(A2.begin(), A2.end());
            A2.erase(std::unique(A2.begin(), A2.end()), A2.end());
            Ring target = build_ra({d, A2});
            std::vector<uint32_t> map(c.m);
            for (uint32_t a = 0; a < c.m; ++a) map[a] = a % d;
            pool.push_back({"mod" + std::to_string(d),
                            build_homomorphism(c.R, target, std::move(map))});
        }
    }
    return pool;
}

std::vector<PooledHom> bijective_pool(Ctx& c) {
    std::vector<PooledHom> pool;
    std::vector<uint32_t> id(c.m);
    for (uint32_t i = 0; i < c.m; ++i) id[i] = i;
    pool.push_back({"id", build_homomorphism(c.R, c.R, id)});
    if (c.inst->product && c.inst->product->factors.size() == 2 &&
        c.inst->product->factors[0]->fingerprint() ==
            c.inst->product->factors[1]->fingerprint()) {
        const ProductRing& pr = *c.inst->product;
        std::vector<uint32_t> swp(c.m);
        for (uint32_t idx = 0; idx < c.m; ++idx) {
            auto t = pr.tuple_of(idx);
            std::swap(t[0], t[1]);
            swp[idx] = pr.index_of(t);
        }
        pool.push_back({"swap", build_homomorphism(c.R, c.R, std::move(swp))});
    }
    return pool;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

void suite_t1(Ctx& c, Partial& p) {
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            ++p.instances;
            size_t ip = c.product(ii, pi);
            const QuotientRing& q = c.quotient_by(c.ideals[ip]);
            IndexSet pq = q.projection.image(c.ideals[pi]);
            bool lhs = c.is_iprime_idx(pi, ii);
            bool rhs = is_weakly_prime({q.ring, pq}).verdict;
            if (lhs != rhs) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()}});
                add_failure(p, fp, {},
                            std::string("iprime=") + (lhs ? "true" : "false") +
                                " but weaklyPrime(P/IP)=" + (rhs ? "true" : "false"));
            }
        }
}

void suite_t2(Ctx& c, Partial& p) {
    if (c.m > c.cfg->absorbing_carrier_cap) {
        ++p.skipped;
        return;
    }
    MonomialRing mono{c.R, c.cfg->monomial_dmax};
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            if (!c.is_iprime_idx(pi, ii)) continue;
            ++p.instances;
            const IndexSet& P = c.ideals[pi];
            const IndexSet& IP = c.ideals[c.product(ii, pi)];
            for (uint32_t dn = 0; dn <= mono.dmax; ++dn)
                for (uint32_t dm = 0; dn + dm <= mono.dmax; ++dm)
                    for (uint32_t a = 0; a < c.m; ++a)
                        for (uint32_t b = 0; b < c.m; ++b) {
                            auto prod = monomial_product(mono, {a, dn}, {b, dm});
                            bool trigger = true;
                            for (const Monomial& mn : prod)
                                if (!P.test(mn.coeff) || IP.test(mn.coeff)) trigger = false;
                            if (trigger && !P.test(a) && !P.test(b)) {
                                auto fp = c.fp({{"P", P.to_string()},
                                                {"I", c.ideals[ii].to_string()},
                                                {"deg", std::to_string(dn) + "+" +
                                                            std::to_string(dm)}});
                                add_failure(p, fp, {a, b},
                                            "monomial product inside P[x]-IP[x] but no "
                                            "factor in P[x]");
                                return;
                            }
                        }
        }
}

// shared by T3a / T7: surjective image instance
void check_pushforward(Ctx& c, Partial& p, const PooledHom& h, size_t pi, size_t ii) {
    const GoodHomomorphism& f = h.f;
    IndexSet ker = f.kernel_set();
    if (!c.ideals[pi].contains(ker)) return;
    if (!c.is_iprime_idx(pi, ii)) return;
    ++p.instances;
    Hyperideal fP = image_ideal(f, c.ideal(pi));
    Hyperideal fI = image_ideal(f, c.ideal(ii));
    auto rep = is_i_prime(fP, fI);
    if (!rep.verdict) {
        auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                        {"I", c.ideals[ii].to_string()},
                        {"hom", h.name}});
        add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                    "f(P) is not f(I)-prime");
    }
}

void suite_t3a(Ctx& c, Partial& p) {
    for (const PooledHom& h : hom_pool(c)) {
        if (!h.f.surjective) continue;
        for (size_t pi : c.proper)
            for (size_t ii = 0; ii < c.ideals.size(); ++ii)
                check_pushforward(c, p, h, pi, ii);
    }
}

void suite_t3b(Ctx& c, Partial& p) {
    for (const PooledHom& h : hom_pool(c)) {
        const Ring& T = h.f.target;
        const IdealLattice& tl = lattice_of(T, c.cfg->size_cap);
        for (size_t qi = 0; qi < tl.ideals.size(); ++qi) {
            if (tl.ideals[qi].count() == T->size()) continue;
            for (size_t ii = 0; ii < tl.ideals.size(); ++ii) {
                Hyperideal Q{T, tl.ideals[qi]};
                Hyperideal I{T, tl.ideals[ii]};
                if (!is_i_prime(Q, I).verdict) continue;
                ++p.instances;
                Hyperideal pQ = pullback_ideal(h.f, Q);
                Hyperideal pI = pullback_ideal(h.f, I);
                if (!pQ.proper()) {
                    ++p.skipped;
                    continue;
                }
                auto rep = is_i_prime(pQ, pI);
                if (!rep.verdict) {
                    auto fp = c.fp({{"Q", tl.ideals[qi].to_string()},
                                    {"I", tl.ideals[ii].to_string()},
                                    {"hom", h.name}});
                    add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                                "f^-1(Q) is not f^-1(I)-prime");
                }
            }
        }
    }
}

void suite_t4(Ctx& c, Partial& p) {
    for (size_t pi : c.proper) {
        size_t p2 = c.product(pi, pi);
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            ++p.instances;
            if (!c.is_iprime_idx(pi, ii) || c.is_prime_idx(pi)) continue;
            size_t ip = c.product(ii, pi);
            if (!c.ideals[ip].contains(c.ideals[p2])) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()}});
                add_failure(p, fp, {},
                            "P is I-prime and not prime but P^2=" +
                                c.ideals[p2].to_string() +
                                " is not inside IP=" + c.ideals[ip].to_string());
            }
        }
    }
}

void suite_t4a(Ctx& c, Partial& p) {
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            ++p.instances;
            if (!c.is_iprime_idx(pi, ii) || c.is_prime_idx(pi)) continue;
            size_t ip = c.product(ii, pi);
            size_t rp = c.radical_of(pi);
            size_t rip = c.radical_of(ip);
            if (rp != rip) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()}});
                add_failure(p, fp, {},
                            "radical(P)=" + c.ideals[rp].to_string() +
                                " != radical(IP)=" + c.ideals[rip].to_string());
            }
        }
}

void suite_t4b(Ctx& c, Partial& p) {
    for (size_t pi : c.proper) {
        // stabilized descending power chain
        size_t cur = pi;
        for (uint32_t step = 0; step < c.m + 1; ++step) {
            size_t nxt = c.product(cur, pi);
            if (nxt == cur) break;
            cur = nxt;
        }
        size_t kinf = cur;
        size_t p3 = c.product(c.product(pi, pi), pi);
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            if (!c.is_iprime_idx(pi, ii)) continue;
            size_t ip = c.product(ii, pi);
            if (!c.ideals[p3].contains(c.ideals[ip])) continue;
            ++p.instances;
            if (!c.is_iprime_idx(pi, kinf)) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()}});
                add_failure(p, fp, {},
                            "P is not (cap P^i)-prime, cap=" + c.ideals[kinf].to_string());
            }
        }
    }
}

void suite_t5(Ctx& c, Partial& p) {
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            size_t ip = c.product(ii, pi);
            IndexSet D = c.ideals[pi] - c.ideals[ip];
            IndexSet radP = c.ideals[c.radical_of(pi)];
            // i-primary: trigger inside D, conclusion a in P or b in radical(P)
            bool iprimary = [&] {
                for (uint32_t a = 0; a < c.m; ++a) {
                    if (c.ideals[pi].test(a)) continue;
                    for (uint32_t b = 0; b < c.m; ++b)
                        if (!radP.test(b) && D.contains(c.R->hmul(a, b))) return false;
                }
                return true;
            }();
            if (!iprimary) continue;
            ++p.instances;
            size_t rp = c.radical_of(pi);
            size_t ri = c.radical_of(ii);
            auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                            {"I", c.ideals[ii].to_string()}});
            if (c.ideals[rp].count() == c.m) {
                add_failure(p, fp, {},
                            "radical(P) is the whole ring: not a proper hyperideal, so "
                            "it cannot be radical(I)-prime");
                continue;
            }
            if (!c.is_iprime_idx(rp, ri)) {
                IndexSet Drad = c.ideals[rp] - c.ideals[c.product(ri, rp)];
                add_failure(p, fp, pair_witness(c, Drad, c.ideals[rp]),
                            "radical(P) is not radical(I)-prime");
            }
        }
}

void suite_t6(Ctx& c, Partial& p) {
    // colon table per (ideal, r)
    const size_t L = c.ideals.size();
    std::vector<std::vector<IndexSet>> colons(L);
    auto colon_of = [&](size_t ei, uint32_t r) -> const IndexSet& {
        auto& row = colons[ei];
        if (row.empty()) {
            row.reserve(c.m);
            for (uint32_t x = 0; x < c.m; ++x) {
                IndexSet s(c.m);
                for (uint32_t t = 0; t < c.m; ++t)
                    if (c.ideals[ei].contains(c.R->hmul(x, t))) s.set(t);
                row.push_back(std::move(s));
            }
        }
        return row[r];
    };
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            ++p.instances;
            size_t ip = c.product(ii, pi);
            bool c1 = c.is_iprime_idx(pi, ii);
            bool c2 = true, c3 = true;
            std::string where2, where3;
            for (uint32_t r = 0; r < c.m && (c2 || c3); ++r) {
                if (c.ideals[pi].test(r)) continue;
                const IndexSet& pr = colon_of(pi, r);
                const IndexSet& ipr = colon_of(ip, r);
                if (c2 && pr != (c.ideals[pi] | ipr)) {
                    c2 = false;
                    where2 = "r=" + std::to_string(r);
                }
                if (c3 && !(pr == c.ideals[pi] || pr == ipr)) {
                    c3 = false;
                    where3 = "r=" + std::to_string(r);
                }
            }
            bool c4 = true;
            std::string where4;
            for (size_t ji = 0; ji < L && c4; ++ji)
                for (size_t ki = 0; ki < L && c4; ++ki) {
                    size_t jk = c.product(ji, ki);
                    if (c.ideals[pi].contains(c.ideals[jk]) &&
                        !c.ideals[ip].contains(c.ideals[jk]) &&
                        !c.ideals[pi].contains(c.ideals[ji]) &&
                        !c.ideals[pi].contains(c.ideals[ki])) {
                        c4 = false;
                        where4 = "J=" + c.ideals[ji].to_string() +
                                 ",K=" + c.ideals[ki].to_string();
                    }
                }
            if (c1 != c2 || c1 != c3 || c1 != c4) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()}});
                std::ostringstream os;
                os << "equivalence breaks: (1)=" << c1 << " (2)=" << c2;
                if (!where2.empty()) os << "[" << where2 << "]";
                os << " (3)=" << c3;
                if (!where3.empty()) os << "[" << where3 << "]";
                os << " (4)=" << c4;
                if (!where4.empty()) os << "[" << where4 << "]";
                add_failure(p, fp, {}, os.str());
            }
        }
}

void suite_t7(Ctx& c, Partial& p) {
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            if (!c.is_iprime_idx(pi, ii)) continue;
            for (size_t ji = 0; ji < c.ideals.size(); ++ji) {
                if (!c.ideals[pi].contains(c.ideals[ji])) continue;
                ++p.instances;
                const QuotientRing& q = c.quotient_by(c.ideals[ji]);
                Hyperideal Pq{q.ring, q.projection.image(c.ideals[pi])};
                Hyperideal Iq{q.ring, q.projection.image(c.ideals[ii])};
                auto rep = is_i_prime(Pq, Iq);
                if (!rep.verdict) {
                    auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                    {"I", c.ideals[ii].to_string()},
                                    {"J", c.ideals[ji].to_string()}});
                    add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                                "P/J is not I-prime in R/J");
                }
            }
        }
}

// ---- T8 ----------------------------------------------------------------

struct Bipart {
    Ring left, right;
    Ring full;
    uint32_t mr = 0;

    IndexSet embed(const IndexSet& l, const IndexSet& r) const {
        IndexSet out(full->size());
        l.for_each([&](uint32_t a) { r.for_each([&](uint32_t b) { out.set(a * mr + b); }); });
        return out;
    }
    IndexSet proj_left(const IndexSet& s) const {
        IndexSet out(left->size());
        s.for_each([&](uint32_t i) { out.set(i / mr); });
        return out;
    }
    IndexSet proj_right(const IndexSet& s) const {
        IndexSet out(right->size());
        s.for_each([&](uint32_t i) { out.set(i % mr); });
        return out;
    }
};

// lattice product helpers on a factor ring
size_t factor_product(const Ring& r, const IdealLattice& lat, size_t i, size_t j,
                      std::map<std::pair<size_t, size_t>, size_t>& memo) {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Hyperideal p = ideal_product({r, lat.ideals[i]}, {r, lat.ideals[j]});
    size_t idx = *lat.index_of(p.bits);
    memo.emplace(key, idx);
    return idx;
}

void t8_on_bipart(Ctx& c, Partial& p, const Bipart& bp, bool raw_rerun) {
    const IdealLattice& ll = lattice_of(bp.left, c.cfg->size_cap);
    const IdealLattice& lr = lattice_of(bp.right, c.cfg->size_cap);
    std::map<std::pair<size_t, size_t>, size_t> memo_l, memo_r;
    const size_t full_l = ll.ideals.size() - 1;  // lattice order puts R last
    const size_t full_r = lr.ideals.size() - 1;

    auto ideal_of = [&](const Ring& r, const IdealLattice& lat, size_t i) {
        return Hyperideal{r, lat.ideals[i]};
    };

    for (size_t i1 = 0; i1 < ll.ideals.size(); ++i1)
        for (size_t i2 = 0; i2 < lr.ideals.size(); ++i2) {
            IndexSet I = bp.embed(ll.ideals[i1], lr.ideals[i2]);
            size_t ii = c.index_of(I);

            // forward direction: every ideal of one of the three types is I-prime
            auto check_forward = [&](const IndexSet& Pbits, const char* type) {
                ++p.instances;
                size_t pidx = c.index_of(Pbits);
                if (c.ideals[pidx].count() == c.m) return;
                if (!c.is_iprime_idx(pidx, ii)) {
                    auto fp = c.fp({{"P", Pbits.to_string()},
                                    {"I", I.to_string()},
                                    {"part", std::string("forward-") + type}});
                    IndexSet D = c.ideals[pidx] - c.ideals[c.product(ii, pidx)];
                    add_failure(p, fp, pair_witness(c, D, c.ideals[pidx]),
                                std::string(type) + "-shaped ideal is not I-prime");
                }
            };
            for (size_t p1 = 0; p1 < ll.ideals.size(); ++p1)
                for (size_t p2 = 0; p2 < lr.ideals.size(); ++p2) {
                    bool proper1 = p1 != full_l, proper2 = p2 != full_r;
                    if (proper1 && proper2 &&
                        factor_product(bp.left, ll, i1, p1, memo_l) == p1 &&
                        factor_product(bp.right, lr, i2, p2, memo_r) == p2)
                        check_forward(bp.embed(ll.ideals[p1], lr.ideals[p2]), "type1");
                }
            bool i2r2_full = factor_product(bp.right, lr, i2, full_r, memo_r) == full_r;
            bool i1r1_full = factor_product(bp.left, ll, i1, full_l, memo_l) == full_l;
            if (i2r2_full)
                for (size_t p1 = 0; p1 < ll.ideals.size(); ++p1) {
                    if (p1 == full_l) continue;
                    if (is_i_prime(ideal_of(bp.left, ll, p1), ideal_of(bp.left, ll, i1))
                            .verdict)
                        check_forward(bp.embed(ll.ideals[p1], lr.ideals[full_r]), "type2");
                }
            if (i1r1_full)
                for (size_t p2 = 0; p2 < lr.ideals.size(); ++p2) {
                    if (p2 == full_r) continue;
                    if (is_i_prime(ideal_of(bp.right, lr, p2), ideal_of(bp.right, lr, i2))
                            .verdict)
                        check_forward(bp.embed(ll.ideals[full_l], lr.ideals[p2]), "type3");
                }

            // trichotomy: every I-prime ideal has exactly one of the three types
            for (size_t pi : c.proper) {
                bool primary_verdict = c.is_iprime_idx(pi, ii);
                if (c.cfg->t8_primary_raw_union) {
                    IndexSet ip_raw = raw_union_product(Hyperideal{c.R, c.ideals[ii]},
                                                        Hyperideal{c.R, c.ideals[pi]});
                    primary_verdict =
                        c.pair_implication(c.ideals[pi] - ip_raw, c.ideals[pi]);
                }
                if (!primary_verdict) continue;
                ++p.instances;
                const IndexSet& P = c.ideals[pi];
                IndexSet P1 = bp.proj_left(P);
                IndexSet P2 = bp.proj_right(P);
                bool product_form = bp.embed(P1, P2) == P;
                int types = 0;
                if (product_form) {
                    auto lp1 = ll.index_of(P1), lp2 = lr.index_of(P2);
                    bool proper1 = P1.count() < bp.left->size();
                    bool proper2 = P2.count() < bp.right->size();
                    if (proper1 && proper2 &&
                        factor_product(bp.left, ll, i1, *lp1, memo_l) == *lp1 &&
                        factor_product(bp.right, lr, i2, *lp2, memo_r) == *lp2)
                        ++types;
                    if (!proper2 && proper1 && i2r2_full &&
                        is_i_prime(Hyperideal{bp.left, P1}, ideal_of(bp.left, ll, i1))
                            .verdict)
                        ++types;
                    if (!proper1 && proper2 && i1r1_full &&
                        is_i_prime(Hyperideal{bp.right, P2}, ideal_of(bp.right, lr, i2))
                            .verdict)
                        ++types;
                }
                // componentwise consequence (provable without identity): the
                // projections of a product-form I-prime ideal are Ii-prime
                if (product_form) {
                    if (P1.count() < bp.left->size() &&
                        !is_i_prime(Hyperideal{bp.left, P1}, ideal_of(bp.left, ll, i1))
                             .verdict) {
                        auto fp = c.fp({{"P", P.to_string()},
                                        {"I", I.to_string()},
                                        {"part", "component-left"}});
                        add_failure(p, fp, {}, "left projection is not I1-prime");
                    }
                    if (P2.count() < bp.right->size() &&
                        !is_i_prime(Hyperideal{bp.right, P2}, ideal_of(bp.right, lr, i2))
                             .verdict) {
                        auto fp = c.fp({{"P", P.to_string()},
                                        {"I", I.to_string()},
                                        {"part", "component-right"}});
                        add_failure(p, fp, {}, "right projection is not I2-prime");
                    }
                }
                if (types != 1) {
                    auto fp = c.fp({{"P", P.to_string()},
                                    {"I", I.to_string()},
                                    {"part", "trichotomy"}});
                    add_failure(p, fp, {},
                                "I-prime ideal matches " + std::to_string(types) +
                                    " of the three types (expected exactly 1)" +
                                    (product_form ? "" : " [not of product form]"));
                }
                if (raw_rerun) {
                    // verdict under the other product convention
                    IndexSet ip_other =
                        c.cfg->t8_primary_raw_union
                            ? c.ideals[c.product(ii, pi)]
                            : raw_union_product(Hyperideal{c.R, I}, Hyperideal{c.R, P});
                    bool v_other = c.pair_implication(P - ip_other, P);
                    if (v_other != primary_verdict) ++p.info["t8_divergences"];
                }
            }
        }
}

void suite_t8(Ctx& c, Partial& p) {
    if (!c.inst->product) return;
    if (c.cfg->t8_raw_union_rerun) p.info["t8_divergences"] += 0;
    const ProductRing& pr = *c.inst->product;
    if (pr.factors.size() == 2) {
        Bipart bp{pr.factors[0], pr.factors[1], c.R, pr.factors[1]->size()};
        t8_on_bipart(c, p, bp, c.cfg->t8_raw_union_rerun);
    } else if (pr.factors.size() == 3) {
        if (c.m > 16) {
            ++p.skipped;
            return;
        }
        Ring right = product_hyperring({pr.factors[1], pr.factors[2]}).ring;
        Bipart bp1{pr.factors[0], right, c.R, right->size()};
        t8_on_bipart(c, p, bp1, c.cfg->t8_raw_union_rerun);
        Ring left = product_hyperring({pr.factors[0], pr.factors[1]}).ring;
        Bipart bp2{left, pr.factors[2], c.R, pr.factors[2]->size()};
        t8_on_bipart(c, p, bp2, c.cfg->t8_raw_union_rerun);
    }
}

void suite_t9a(Ctx& c, Partial& p) {
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            if (!c.is_iprime_idx(pi, ii)) continue;
            ++p.instances;
            const IndexSet& P = c.ideals[pi];
            const IndexSet& IP = c.ideals[c.product(ii, pi)];
            bool done = false;
            for (uint32_t a = 0; a < c.m && !done; ++a) {
                if (P.test(a)) continue;
                // K over singletons, then lattice ideals
                for (uint32_t k = 0; k < c.m && !done; ++k) {
                    const IndexSet& aK = c.R->hmul(a, k);
                    if (P.contains(aK) && !IP.contains(aK) && !P.test(k)) {
                        auto fp = c.fp({{"P", P.to_string()},
                                        {"I", c.ideals[ii].to_string()},
                                        {"a", std::to_string(a)},
                                        {"K", "{" + std::to_string(k) + "}"}});
                        add_failure(p, fp, {a, k},
                                    "aK inside P, aK not inside IP, a outside P, yet K "
                                    "not inside P");
                        done = true;
                    }
                }
                for (size_t ki = 0; ki < c.ideals.size() && !done; ++ki) {
                    ElementSet aK = set_product(ElementSet::single(c.R, a),
                                                ElementSet{c.R, c.ideals[ki]});
                    if (P.contains(aK.bits) && !IP.contains(aK.bits) &&
                        !P.contains(c.ideals[ki])) {
                        auto fp = c.fp({{"P", P.to_string()},
                                        {"I", c.ideals[ii].to_string()},
                                        {"a", std::to_string(a)},
                                        {"K", c.ideals[ki].to_string()}});
                        add_failure(p, fp, {a},
                                    "aK inside P, aK not inside IP, a outside P, yet K "
                                    "not inside P");
                        done = true;
                    }
                }
            }
        }
}

void suite_t9b(Ctx& c, Partial& p) {
    // family of subsets: singletons and lattice ideals
    const size_t nsets = c.m + c.ideals.size();
    auto set_of = [&](size_t i) -> IndexSet {
        if (i < c.m) return IndexSet::single(c.m, uint32_t(i));
        return c.ideals[i - c.m];
    };
    auto name_of = [&](size_t i) {
        return i < c.m ? "{" + std::to_string(i) + "}" : c.ideals[i - c.m].to_string();
    };
    // AB products, memoized
    std::vector<std::vector<IndexSet>> ab(nsets);
    auto prod_of = [&](size_t i, size_t j) -> const IndexSet& {
        auto& row = ab[i];
        if (row.empty()) {
            row.reserve(nsets);
            ElementSet A{c.R, set_of(i)};
            for (size_t jj = 0; jj < nsets; ++jj)
                row.push_back(set_product(A, ElementSet{c.R, set_of(jj)}).bits);
        }
        return row[j];
    };
    for (size_t pi : c.proper)
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            if (!c.is_iprime_idx(pi, ii)) continue;
            ++p.instances;
            const IndexSet& P = c.ideals[pi];
            const IndexSet& IP = c.ideals[c.product(ii, pi)];
            bool done = false;
            for (size_t i = 0; i < nsets && !done; ++i) {
                if (P.contains(set_of(i))) continue;
                for (size_t j = i; j < nsets && !done; ++j) {
                    if (P.contains(set_of(j))) continue;
                    const IndexSet& AB = prod_of(i, j);
                    if (P.contains(AB) && !IP.contains(AB)) {
                        auto fp = c.fp({{"P", P.to_string()},
                                        {"I", c.ideals[ii].to_string()},
                                        {"A", name_of(i)},
                                        {"B", name_of(j)}});
                        add_failure(p, fp, {},
                                    "AB inside P and not inside IP, yet neither A nor B "
                                    "inside P");
                        done = true;
                    }
                }
            }
        }
}

void suite_t10(Ctx& c, Partial& p) {
    if (c.m > c.cfg->absorbing_carrier_cap) {
        ++p.skipped;
        return;
    }
    ScanConfig scan{c.cfg->scan_cap, 1};
    std::vector<int8_t> tap(c.ideals.size(), -1);
    auto is_tap = [&](size_t i) {
        if (tap[i] < 0)
            tap[i] = is_two_absorbing_primary(c.ideal(i), scan).verdict ? 1 : 0;
        return tap[i] == 1;
    };
    // collections of size 1 and 2 with a common radical
    std::vector<std::vector<size_t>> collections;
    for (size_t i : c.proper) collections.push_back({i});
    for (size_t i : c.proper)
        for (size_t j : c.proper)
            if (i < j) collections.push_back({i, j});
    for (const auto& col : collections) {
        bool all_tap = true;
        for (size_t i : col)
            if (!is_tap(i)) all_tap = false;
        if (!all_tap) continue;
        size_t rad0 = c.radical_of(col[0]);
        bool same = true;
        for (size_t i : col)
            if (c.radical_of(i) != rad0) same = false;
        if (!same) continue;
        ++p.instances;
        IndexSet cap = c.ideals[col[0]];
        for (size_t i : col) cap &= c.ideals[i];
        std::string cols;
        for (size_t i : col) {
            if (!cols.empty()) cols += '+';
            cols += c.ideals[i].to_string();
        }
        auto fp = c.fp({{"Ps", cols}});
        if (cap != c.ideals[rad0]) {
            add_failure(p, fp, {},
                        "intersection " + cap.to_string() + " differs from the common "
                        "radical " + c.ideals[rad0].to_string());
            continue;
        }
        size_t capi = c.index_of(cap);
        if (c.ideals[capi].count() == c.m) continue;
        for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
            auto rep = is_n_absorbing_i_prime(c.ideal(capi), c.ideal(ii), 2, scan);
            if (!rep.verdict) {
                add_failure(p, c.fp({{"Ps", cols}, {"I", c.ideals[ii].to_string()}}),
                            rep.witness.value_or(std::vector<uint32_t>{}),
                            "intersection is not 2-absorbing I-prime");
                break;
            }
        }
    }
}

void suite_t11(Ctx& c, Partial& p) {
    if (c.m > c.cfg->absorbing_carrier_cap) {
        ++p.skipped;
        return;
    }
    ScanConfig scan{c.cfg->scan_cap, 1};
    for (const PooledHom& h : bijective_pool(c)) {
        for (size_t qi : c.proper)
            for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
                if (!is_n_absorbing_i_prime(c.ideal(qi), c.ideal(ii), 2, scan).verdict)
                    continue;
                ++p.instances;
                Hyperideal pQ = pullback_ideal(h.f, c.ideal(qi));
                Hyperideal pI = pullback_ideal(h.f, c.ideal(ii));
                auto rep = is_n_absorbing_i_prime(pQ, pI, 2, scan);
                if (!rep.verdict) {
                    auto fp = c.fp({{"Q", c.ideals[qi].to_string()},
                                    {"I", c.ideals[ii].to_string()},
                                    {"hom", h.name}});
                    add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                                "h^-1(Q) is not 2-absorbing h^-1(I)-prime");
                }
            }
    }
}

void suite_t12(Ctx& c, Partial& p) {
    ScanConfig scan{c.cfg->scan_cap, 1};
    for (uint32_t n = 1; n <= 2; ++n) {
        if (n >= 2 && c.m > c.cfg->absorbing_carrier_cap) {
            ++p.skipped;
            continue;
        }
        for (size_t pi : c.proper)
            for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
                bool hyp = n == 1 ? c.is_iprime_idx(pi, ii)
                                  : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(ii), n,
                                                           scan)
                                        .verdict;
                if (!hyp) continue;
                ++p.instances;
                size_t rp = c.radical_of(pi);
                size_t ri = c.radical_of(ii);
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()},
                                {"n", std::to_string(n)}});
                if (c.ideals[rp].count() == c.m) {
                    add_failure(p, fp, {},
                                "radical(P) is the whole ring: conclusion is not a "
                                "proper hyperideal");
                    continue;
                }
                auto repA = is_n_absorbing_i_prime(c.ideal(rp), c.ideal(ri), n, scan);
                if (!repA.verdict)
                    add_failure(p, fp, repA.witness.value_or(std::vector<uint32_t>{}),
                                "radical(P) is not n-absorbing radical(I)-prime");
                for (uint32_t a = c.ideals[rp].first(); a < c.m; a = c.ideals[rp].next(a)) {
                    IndexSet an = element_power(c.R, a, n);
                    if (!c.ideals[pi].contains(an)) {
                        add_failure(p, fp, {a},
                                    "a=" + std::to_string(a) + " in radical(P) but a^" +
                                        std::to_string(n) + "=" + an.to_string() +
                                        " is not inside P");
                        break;
                    }
                }
            }
    }
}

void suite_t13(Ctx& c, Partial& p) {
    if (c.m > c.cfg->absorbing_carrier_cap) {
        ++p.skipped;
        return;
    }
    ScanConfig scan{c.cfg->scan_cap, 1};
    std::map<std::tuple<size_t, size_t, uint32_t>, bool> verdict;
    auto nai = [&](size_t pi, size_t ii, uint32_t n) {
        auto key = std::make_tuple(pi, ii, n);
        auto it = verdict.find(key);
        if (it == verdict.end()) {
            bool v = n == 1 ? c.is_iprime_idx(pi, ii)
                            : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(ii), n, scan)
                                  .verdict;
            it = verdict.emplace(key, v).first;
        }
        return it->second;
    };
    const std::vector<std::pair<uint32_t, uint32_t>> npairs = {{1, 1}, {1, 2}, {2, 2}};
    for (size_t ii = 0; ii < c.ideals.size(); ++ii)
        for (size_t p1 : c.proper)
            for (size_t p2 : c.proper) {
                if (p2 < p1) continue;
                if (c.product(ii, p1) != c.product(ii, p2)) continue;
                for (auto [n1, n2] : npairs) {
                    if (!nai(p1, ii, n1) || !nai(p2, ii, n2)) continue;
                    IndexSet cap = c.ideals[p1] & c.ideals[p2];
                    size_t capi = c.index_of(cap);
                    if (c.ideals[capi].count() == c.m) continue;
                    ++p.instances;
                    uint64_t space = 1;
                    bool overflow = false;
                    for (uint32_t i = 0; i <= n1 + n2; ++i) {
                        space *= c.m;
                        if (space > c.cfg->scan_cap) overflow = true;
                    }
                    if (overflow) {
                        ++p.skipped;
                        continue;
                    }
                    auto rep = is_n_absorbing_i_prime(c.ideal(capi), c.ideal(ii), n1 + n2,
                                                      scan);
                    if (!rep.verdict) {
                        auto fp = c.fp({{"P1", c.ideals[p1].to_string()},
                                        {"P2", c.ideals[p2].to_string()},
                                        {"I", c.ideals[ii].to_string()},
                                        {"n", std::to_string(n1) + "+" +
                                                  std::to_string(n2)}});
                        add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                                    "intersection is not (n1+n2)-absorbing I-prime");
                    }
                }
            }
}

void suite_t14(Ctx& c, Partial& p) {
    if (!c.inst->product) return;
    const ProductRing& pr = *c.inst->product;
    const uint32_t k = uint32_t(pr.factors.size());
    if (k == 3 && c.m > 16) {
        ++p.skipped;
        return;
    }
    ScanConfig scan{c.cfg->scan_cap, 1};
    size_t full_idx = c.index_of(IndexSet::full(c.m));

    // Theorem 3.7 slice: I = R (I_i = R_i), P proper nonzero k-absorbing I-prime
    for (size_t pi : c.proper) {
        const IndexSet& P = c.ideals[pi];
        if (P.count() <= 1) continue;  // nonzero required
        bool hyp = k == 1 ? c.is_iprime_idx(pi, full_idx)
                          : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(full_idx), k, scan)
                                .verdict;
        if (!hyp) continue;
        ++p.instances;
        // decomposition P = P1 x ... x Pk
        std::vector<IndexSet> parts;
        for (size_t f = 0; f < k; ++f) parts.push_back(pr.project(P, f));
        IndexSet embedded = pr.embed(parts);
        auto fp = c.fp({{"P", P.to_string()}, {"part", "3.7"}});
        if (embedded != P) {
            add_failure(p, fp, {},
                        "k-absorbing R-prime ideal is not a product of componentwise "
                        "projections");
            continue;
        }
        for (size_t f = 0; f < k; ++f) {
            if (parts[f].count() == pr.factors[f]->size()) continue;
            Hyperideal Pf{pr.factors[f], parts[f]};
            Hyperideal Rf{pr.factors[f], IndexSet::full(pr.factors[f]->size())};
            bool ok = k - 1 == 0
                          ? true
                          : (k - 1 == 1
                                 ? is_i_prime(Pf, Rf, scan).verdict
                                 : is_n_absorbing_i_prime(Pf, Rf, k - 1, scan).verdict);
            if (!ok) {
                add_failure(p, fp, {},
                            "component " + std::to_string(f + 1) +
                                " is not (k-1)-absorbing R-prime");
                break;
            }
        }
    }

    // Theorem [qq] slice: product-form I, P (k-1)-absorbing I-prime
    //   => P = IP or some slot of P is the full factor
    std::vector<const IdealLattice*> flats;
    for (const Ring& f : pr.factors) flats.push_back(&lattice_of(f, c.cfg->size_cap));
    std::vector<size_t> icombo(k, 0);
    while (true) {
        std::vector<IndexSet> iparts;
        for (size_t f = 0; f < k; ++f) iparts.push_back(flats[f]->ideals[icombo[f]]);
        IndexSet I = pr.embed(iparts);
        size_t ii = c.index_of(I);
        for (size_t pi : c.proper) {
            const uint32_t n = k - 1;
            bool hyp = n == 1 ? c.is_iprime_idx(pi, ii)
                              : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(ii), n, scan)
                                    .verdict;
            if (!hyp) continue;
            ++p.instances;
            if (c.product(ii, pi) == pi) continue;  // P = IP branch
            bool full_slot = false;
            for (size_t f = 0; f < k; ++f)
                if (pr.project(c.ideals[pi], f).count() == pr.factors[f]->size())
                    full_slot = true;
            if (!full_slot) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", I.to_string()},
                                {"part", "qq"}});
                add_failure(p, fp, {},
                            "P != IP and no component of P equals the full factor");
            }
        }
        size_t f = k;
        bool done = true;
        while (f-- > 0) {
            if (++icombo[f] < flats[f]->ideals.size()) {
                done = false;
                break;
            }
            icombo[f] = 0;
        }
        if (done) break;
    }
}

void suite_t15(Ctx& c, Partial& p) {
    ScanConfig scan{c.cfg->scan_cap, 1};
    for (uint32_t n = 1; n <= 2; ++n) {
        if (n >= 2 && c.m > c.cfg->absorbing_carrier_cap) {
            ++p.skipped;
            continue;
        }
        for (size_t pi : c.proper) {
            std::vector<Hyperideal> mins = minimal_primes(c.ideal(pi));
            for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
                bool hyp = n == 1 ? c.is_iprime_idx(pi, ii)
                                  : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(ii), n,
                                                           scan)
                                        .verdict;
                if (!hyp) continue;
                ++p.instances;
                if (mins.size() > n) {
                    auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                    {"I", c.ideals[ii].to_string()},
                                    {"n", std::to_string(n)}});
                    add_failure(p, fp, {},
                                std::to_string(mins.size()) +
                                    " minimal primes over P exceed n=" + std::to_string(n));
                }
            }
        }
    }
}

void suite_t16(Ctx& c, Partial& p) {
    if (c.m > c.cfg->localize_carrier_cap || c.inst->product) {
        ++p.skipped;
        return;
    }
    // all multiplicatively closed subsets
    std::vector<IndexSet> closed;
    for (uint64_t mask = 1; mask < (uint64_t(1) << c.m); ++mask) {
        IndexSet S(c.m);
        for (uint32_t i = 0; i < c.m; ++i)
            if (mask >> i & 1) S.set(i);
        bool ok = true;
        S.for_each([&](uint32_t a) {
            S.for_each([&](uint32_t b) {
                if (!S.intersects(c.R->hmul(a, b))) ok = false;
            });
        });
        if (ok) closed.push_back(std::move(S));
    }
    for (const IndexSet& S : closed) {
        LocalizeOutcome out = localize(c.R, S, c.cfg->localize_mode);
        if (!out.ok()) {
            ++p.info[std::string("localize_") + localize_status_name(out.status)];
            p.notes.push_back({c.fp({{"S", S.to_string()}}), out.witness,
                               std::string(localize_status_name(out.status)) + ": " +
                                   out.detail});
            continue;
        }
        ++p.info["localize_Ok"];
        const LocalizedRing& loc = *out.value;
        for (size_t pi : c.proper) {
            if (c.ideals[pi].intersects(S)) continue;
            for (size_t ii = 0; ii < c.ideals.size(); ++ii) {
                if (!c.is_iprime_idx(pi, ii)) continue;
                ++p.instances;
                IndexSet SP = loc.localized_set(c.ideals[pi]);
                IndexSet SI = loc.localized_set(c.ideals[ii]);
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()},
                                {"S", S.to_string()}});
                IdealCheck chk = is_hyperideal(loc.result, SP);
                if (!chk.ok) {
                    add_failure(p, fp, chk.witness,
                                "S^-1 P is not a hyperideal (" + chk.clause + ")");
                    continue;
                }
                if (SP.count() == loc.result->size()) {
                    add_failure(p, fp, {}, "S^-1 P is the whole localized ring");
                    continue;
                }
                IdealCheck chkI = is_hyperideal(loc.result, SI);
                if (!chkI.ok) {
                    add_failure(p, fp, chkI.witness,
                                "S^-1 I is not a hyperideal (" + chkI.clause + ")");
                    continue;
                }
                auto rep = is_i_prime({loc.result, SP}, {loc.result, SI});
                if (!rep.verdict)
                    add_failure(p, fp, rep.witness.value_or(std::vector<uint32_t>{}),
                                "S^-1 P is not S^-1 I-prime");
            }
        }
    }
}

void suite_t17(Ctx& c, Partial& p) {
    if (!c.inst->product) return;
    const ProductRing& pr = *c.inst->product;
    // fixtures: products of non-degenerate hyperfields (lattice {0,R}, R o R = R)
    for (const Ring& f : pr.factors) {
        if (!is_hyperfield(f)) return;
        Hyperideal full{f, IndexSet::full(f->size())};
        if (ideal_product(full, full).bits != full.bits) return;
    }
    const uint32_t n = uint32_t(pr.factors.size()) - 1;
    if (n < 1) return;
    ScanConfig scan{c.cfg->scan_cap, 1};
    // maximal ideal count must reach n+1
    uint32_t maximal = 0;
    for (size_t i : c.proper) {
        bool is_max = true;
        for (size_t j : c.proper)
            if (j != i && c.ideals[j].contains(c.ideals[i]) && c.ideals[j] != c.ideals[i])
                is_max = false;
        if (is_max) ++maximal;
    }
    if (maximal < n + 1) {
        ++p.skipped;
        return;
    }
    for (size_t pi : c.proper)
        for (size_t ii : c.proper) {
            ++p.instances;
            bool ok = n == 1 ? c.is_iprime_idx(pi, ii)
                             : is_n_absorbing_i_prime(c.ideal(pi), c.ideal(ii), n, scan)
                                   .verdict;
            if (!ok) {
                auto fp = c.fp({{"P", c.ideals[pi].to_string()},
                                {"I", c.ideals[ii].to_string()},
                                {"n", std::to_string(n)}});
                add_failure(p, fp, {}, "proper ideal is not n-absorbing I-prime");
            }
        }
}

void run_suite_on_ring(SuiteId s, Ctx& c, Partial& p) {
    switch (s) {
        case SuiteId::T1: suite_t1(c, p); break;
        case SuiteId::T2: suite_t2(c, p); break;
        case SuiteId::T3a: suite_t3a(c, p); break;
        case SuiteId::T3b: suite_t3b(c, p); break;
        case SuiteId::T4: suite_t4(c, p); break;
        case SuiteId::T4a: suite_t4a(c, p); break;
        case SuiteId::T4b: suite_t4b(c, p); break;
        case SuiteId::T5: suite_t5(c, p); break;
        case SuiteId::T6: suite_t6(c, p); break;
        case SuiteId::T7: suite_t7(c, p); break;
        case SuiteId::T8: suite_t8(c, p); break;
        case SuiteId::T9a: suite_t9a(c, p); break;
        case SuiteId::T9b: suite_t9b(c, p); break;
        case SuiteId::T10: suite_t10(c, p); break;
        case SuiteId::T11: suite_t11(c, p); break;
        case SuiteId::T12: suite_t12(c, p); break;
        case SuiteId::T13: suite_t13(c, p); break;
        case SuiteId::T14: suite_t14(c, p); break;
        case SuiteId::T15: suite_t15(c, p); break;
        case SuiteId::T16: suite_t16(c, p); break;
        case SuiteId::T17: suite_t17(c, p); break;
    }
}

}  // namespace

std::vector<TheoremReport> run_suites(const std::vector<SuiteId>& suites,
                                      const std::vector<RingInstance>& family,
                                      const HarnessConfig& cfg) {
    // partial results per (ring, suite); instance order fixed by the family
    std::vector<std::vector<Partial>> partials(family.size(),
                                               std::vector<Partial>(suites.size()));
    parallel_for(family.size(), cfg.jobs, [&](uint64_t fi) {
        Ctx c;
        if (!c.init(family[fi], cfg)) {
            for (auto& p : partials[fi]) ++p.skipped;
            return;
        }
        for (size_t si = 0; si < suites.size(); ++si)
            run_suite_on_ring(suites[si], c, partials[fi][si]);
    });
    std::vector<TheoremReport> reports(suites.size());
    for (size_t si = 0; si < suites.size(); ++si) {
        TheoremReport& rep = reports[si];
        rep.suite = suite_name(suites[si]);
        for (size_t fi = 0; fi < family.size(); ++fi) {
            Partial& p = partials[fi][si];
            rep.instances += p.instances;
            rep.skipped += p.skipped;
            for (auto& f : p.failures) rep.failures.push_back(std::move(f));
            for (auto& f : p.notes) rep.notes.push_back(std::move(f));
            for (auto& [k, v] : p.info) rep.info[k] += v;
        }
        std::stable_sort(rep.failures.begin(), rep.failures.end(),
                         [](const SuiteFailure& a, const SuiteFailure& b) {
                             return a.fingerprint < b.fingerprint;
                         });
        rep.failure_total = rep.failures.size();
        if (rep.failures.size() > cfg.max_recorded_failures)
            rep.failures.resize(cfg.max_recorded_failures);
        std::stable_sort(rep.notes.begin(), rep.notes.end(),
                         [](const SuiteFailure& a, const SuiteFailure& b) {
                             return a.fingerprint < b.fingerprint;
                         });
        if (rep.notes.size() > cfg.max_recorded_failures)
            rep.notes.resize(cfg.max_recorded_failures);
    }
    return reports;
}

TheoremReport run_suite(SuiteId suite, const std::vector<RingInstance>& family,
                        const HarnessConfig& cfg) {
    return run_suites({suite}, family, cfg)[0];
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

namespace {

IndexSet parse_set(const std::string& s, uint32_t width) {
    IndexSet out(width);
    uint32_t cur = 0;
    bool have = false;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + uint32_t(ch - '0');
            have = true;
        } else {
            if (have) out.set(cur);
            cur = 0;
            have = false;
        }
    }
    if (have) out.set(cur);
    return out;
}

RaSpec parse_ra_name(const std::string& s) {
    // RA(n=6,A={0,2})
    RaSpec spec;
    size_t npos = s.find("n=");
    size_t comma = s.find(',', npos);
    spec.n = uint32_t(std::stoul(s.substr(npos + 2, comma - npos - 2)));
    size_t abeg = s.find('{', comma);
    size_t aend = s.find('}', abeg);
    std::string alist = s.substr(abeg + 1, aend - abeg - 1);
    uint32_t cur = 0;
    bool have = false;
    for (char ch : alist) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + uint32_t(ch - '0');
            have = true;
        } else {
            if (have) spec.A.push_back(cur);
            cur = 0;
            have = false;
        }
    }
    if (have) spec.A.push_back(cur);
    return spec;
}

}  // namespace

Ring ring_from_fingerprint(const std::string& fingerprint) {
    std::string name = fingerprint;
    if (name.rfind("ring=", 0) == 0) name = name.substr(5);
    size_t bar = name.find('|');
    if (bar != std::string::npos) name = name.substr(0, bar);

    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t x = name.find(" x ", pos);
        if (x == std::string::npos) {
            parts.push_back(name.substr(pos));
            break;
        }
        parts.push_back(name.substr(pos, x - pos));
        pos = x + 3;
    }
    if (parts.size() > 1) {
        std::vector<Ring> factors;
        for (const auto& s : parts) factors.push_back(build_ra(parse_ra_name(s)));
        return product_hyperring(factors).ring;
    }
    std::string s = parts[0];
    size_t slash = s.find("/{");
    if (slash == std::string::npos) return build_ra(parse_ra_name(s));
    Ring base = build_ra(parse_ra_name(s.substr(0, slash)));
    IndexSet J = parse_set(s.substr(slash + 1), base->size());
    return quotient_hyperring(base, {base, J}).ring;
}

ReplayTrace replay_failure(const TheoremReport& report, size_t index,
                           const HarnessConfig& cfg) {
    if (index >= report.failures.size())
        throw HyperError(ErrorCode::IndexOutOfRange, "failure index out of range");
    const SuiteFailure& fail = report.failures[index];
    ReplayTrace trace;
    trace.lines.push_back("replaying " + report.suite + " failure: " + fail.fingerprint);

    std::string name = fail.fingerprint.substr(5);
    size_t bar = name.find('|');
    if (bar != std::string::npos) name = name.substr(0, bar);
    Ring r = ring_from_fingerprint(fail.fingerprint);
    trace.lines.push_back("rebuilt ring " + r->name() + " with " +
                          std::to_string(r->size()) + " elements");
    // show the recorded sets
    std::map<std::string, std::string> kv;
    {
        std::string rest = fail.fingerprint;
        size_t p2 = rest.find('|');
        while (p2 != std::string::npos) {
            rest = rest.substr(p2 + 1);
            p2 = rest.find('|');
            std::string item = p2 == std::string::npos ? rest : rest.substr(0, p2);
            size_t eq = item.find('=');
            if (eq != std::string::npos) kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    for (const auto& [k, v] : kv) trace.lines.push_back("  " + k + " = " + v);
    if (kv.count("P") && kv.count("I")) {
        Hyperideal P{r, parse_set(kv["P"], r->size())};
        Hyperideal I{r, parse_set(kv["I"], r->size())};
        Hyperideal IP = ideal_product(I, P);
        trace.lines.push_back("  IP = " + IP.bits.to_string());
        trace.lines.push_back("  P-IP = " + (P.bits - IP.bits).to_string());
    }

    // rerun the suite on a single-ring family and expect the same failure
    RingInstance inst;
    inst.ring = r;
    inst.name = name;
    if (name.find(" x ") != std::string::npos) {
        std::vector<Ring> factors;
        size_t pos = 0;
        std::string nm = name;
        while (true) {
            size_t x = nm.find(" x ", pos);
            std::string part = x == std::string::npos ? nm.substr(pos) : nm.substr(pos, x - pos);
            factors.push_back(build_ra(parse_ra_name(part)));
            if (x == std::string::npos) break;
            pos = x + 3;
        }
        inst.product = product_hyperring(factors);
        inst.ring = inst.product->ring;
    } else if (name.rfind("RA(", 0) == 0 && name.find('/') == std::string::npos) {
        inst.ra = parse_ra_name(name);
    }
    auto id = suite_from_name(report.suite);
    if (!id) throw HyperError(ErrorCode::IndexOutOfRange, "unknown suite in report");
    TheoremReport rerun = run_suite(*id, {inst}, cfg);
    for (const auto& f : rerun.failures)
        if (f.fingerprint == fail.fingerprint && f.detail == fail.detail &&
            f.witness == fail.witness) {
            trace.reproduced = true;
            break;
        }
    trace.lines.push_back(trace.reproduced ? "failure reproduced identically"
                                           : "failure did NOT reproduce");
    return trace;
}

}  // namespace hyperring
