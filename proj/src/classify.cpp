#include "hyperring/classify.hpp"

#include <algorithm>

#include "hyperring/parallel.hpp"

namespace hyperring {

namespace {

void require_proper(const Hyperideal& P) {
    if (!P.proper())
        throw HyperError(ErrorCode::ImproperIdeal, "predicate requires a proper hyperideal");
}

/// Lowest (a,b) violating: hmul[a][b] inside D and a,b outside Conc.
/// Returns canonical report for the pairwise implication predicates.
ClassificationReport pair_scan(const Ring& r, const IndexSet& D, const IndexSet& memb_a,
                               const IndexSet& memb_b, const ScanConfig& cfg) {
    const uint32_t m = r->size();
    const uint64_t total = uint64_t(m) * m;
    if (total > cfg.scan_cap)
        throw HyperError(ErrorCode::ScanCapExceeded, "pair scan exceeds cap");
    uint64_t idx = parallel_min_index(total, cfg.jobs, [&](uint64_t i) {
        uint32_t a = uint32_t(i / m), b = uint32_t(i % m);
        if (memb_a.test(a) || memb_b.test(b)) return false;
        return D.contains(r->hmul(a, b));
    });
    ClassificationReport rep;
    if (idx == total) {
        rep.verdict = true;
        rep.scanned = total;
    } else {
        rep.verdict = false;
        rep.witness = {uint32_t(idx / m), uint32_t(idx % m)};
        rep.scanned = idx + 1;
    }
    return rep;
}

}  // namespace

ClassificationReport is_prime(const Hyperideal& P, const ScanConfig& cfg) {
    require_proper(P);
    return pair_scan(P.ring, P.bits, P.bits, P.bits, cfg);
}

ClassificationReport is_weakly_prime(const Hyperideal& P, const ScanConfig& cfg) {
    require_proper(P);
    IndexSet D = P.bits;
    D.reset(P.ring->zero());
    return pair_scan(P.ring, D, P.bits, P.bits, cfg);
}

ClassificationReport is_i_prime(const Hyperideal& P, const Hyperideal& I,
                                const ScanConfig& cfg) {
    require_proper(P);
    require_same_ring(P.ring, I.ring);
    IndexSet D = P.bits - ideal_product(I, P).bits;
    return pair_scan(P.ring, D, P.bits, P.bits, cfg);
}

ClassificationReport is_i_prime_with_difference(const Hyperideal& P, const IndexSet& D,
                                                const ScanConfig& cfg) {
    require_proper(P);
    return pair_scan(P.ring, D, P.bits, P.bits, cfg);
}

ClassificationReport is_primary(const Hyperideal& P, const ScanConfig& cfg) {
    require_proper(P);
    return pair_scan(P.ring, P.bits, P.bits, radical(P).bits, cfg);
}

ClassificationReport is_i_primary(const Hyperideal& P, const Hyperideal& I,
                                  const ScanConfig& cfg) {
    require_proper(P);
    require_same_ring(P.ring, I.ring);
    IndexSet D = P.bits - ideal_product(I, P).bits;
    return pair_scan(P.ring, D, P.bits, radical(P).bits, cfg);
}

namespace {

ClassificationReport absorbing_scan(const Hyperideal& P, const IndexSet& D, uint32_t n,
                                    const ScanConfig& cfg) {
    const Ring& r = P.ring;
    const uint32_t m = r->size();
    uint64_t total = 1;
    for (uint32_t i = 0; i <= n; ++i) {
        total *= m;
        if (total > cfg.scan_cap)
            throw HyperError(ErrorCode::ScanCapExceeded,
                             "tuple space exceeds scan cap of " + std::to_string(cfg.scan_cap));
    }

    auto violates = [&](uint64_t lin) {
        std::vector<uint32_t> xs(n + 1);
        uint64_t v = lin;
        for (uint32_t i = n + 1; i-- > 0;) {
            xs[i] = uint32_t(v % m);
            v /= m;
        }
        IndexSet acc = IndexSet::single(m, xs[0]);
        IndexSet tmp(m);
        for (uint32_t i = 1; i <= n; ++i) {
            fold_product_step(*r, acc, xs[i], tmp);
            std::swap(acc, tmp);
        }
        if (!D.contains(acc)) return false;
        // trigger fired: look for an n-subproduct inside P
        for (uint32_t omit = 0; omit <= n; ++omit) {
            IndexSet sub(m);
            bool started = false;
            for (uint32_t i = 0; i <= n; ++i) {
                if (i == omit) continue;
                if (!started) {
                    sub = IndexSet::single(m, xs[i]);
                    started = true;
                } else {
                    fold_product_step(*r, sub, xs[i], tmp);
                    std::swap(sub, tmp);
                }
            }
            if (P.bits.contains(sub)) return false;
        }
        return true;
    };

    uint64_t idx = parallel_min_index(total, cfg.jobs, violates);
    ClassificationReport rep;
    if (idx == total) {
        rep.verdict = true;
        rep.scanned = total;
    } else {
        rep.verdict = false;
        std::vector<uint32_t> xs(n + 1);
        uint64_t v = idx;
        for (uint32_t i = n + 1; i-- > 0;) {
            xs[i] = uint32_t(v % m);
            v /= m;
        }
        rep.witness = std::move(xs);
        rep.scanned = idx + 1;
    }
    return rep;
}

}  // namespace

ClassificationReport is_n_absorbing(const Hyperideal& P, uint32_t n, const ScanConfig& cfg) {
    require_proper(P);
    if (n == 0) throw HyperError(ErrorCode::ZeroExponent, "n-absorbing requires n >= 1");
    if (n == 1) return is_prime(P, cfg);  // one source of truth for the pairwise case
    return absorbing_scan(P, P.bits, n, cfg);
}

ClassificationReport is_n_absorbing_i_prime(const Hyperideal& P, const Hyperideal& I,
                                            uint32_t n, const ScanConfig& cfg) {
    require_proper(P);
    require_same_ring(P.ring, I.ring);
    if (n == 0) throw HyperError(ErrorCode::ZeroExponent, "n-absorbing requires n >= 1");
    if (n == 1) return is_i_prime(P, I, cfg);
    IndexSet D = P.bits - ideal_product(I, P).bits;
    return absorbing_scan(P, D, n, cfg);
}

ClassificationReport is_two_absorbing_primary(const Hyperideal& P, const ScanConfig& cfg) {
    require_proper(P);
    const Ring& r = P.ring;
    const uint32_t m = r->size();
    const uint64_t total = uint64_t(m) * m * m;
    if (total > cfg.scan_cap)
        throw HyperError(ErrorCode::ScanCapExceeded, "triple scan exceeds cap");
    IndexSet rad = radical(P).bits;

    auto violates = [&](uint64_t lin) {
        uint32_t z = uint32_t(lin % m);
        uint32_t y = uint32_t(lin / m % m);
        uint32_t x = uint32_t(lin / m / m);
        IndexSet xy = r->hmul(x, y);
        IndexSet xyz(m);
        xy.for_each([&](uint32_t u) { xyz |= r->hmul(u, z); });
        if (!P.bits.contains(xyz)) return false;
        if (P.bits.contains(xy)) return false;
        if (rad.contains(r->hmul(x, z))) return false;
        if (rad.contains(r->hmul(y, z))) return false;
        return true;
    };
    uint64_t idx = parallel_min_index(total, cfg.jobs, violates);
    ClassificationReport rep;
    if (idx == total) {
        rep.verdict = true;
        rep.scanned = total;
    } else {
        rep.verdict = false;
        rep.witness = {uint32_t(idx / m / m), uint32_t(idx / m % m), uint32_t(idx % m)};
        rep.scanned = idx + 1;
    }
    return rep;
}

const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::Prime: return "prime";
        case Predicate::WeaklyPrime: return "weaklyPrime";
        case Predicate::IPrime: return "iprime";
        case Predicate::Primary: return "primary";
        case Predicate::IPrimary: return "iprimary";
        case Predicate::TwoAbsorbing: return "twoAbsorbing";
        case Predicate::NAbsorbing: return "nAbsorbing";
        case Predicate::NAbsorbingIPrime: return "nAbsorbingIPrime";
        case Predicate::TwoAbsorbingPrimary: return "twoAbsorbingPrimary";
    }
    return "unknown";
}

std::optional<Predicate> predicate_from_name(const std::string& s) {
    std::string l;
    for (char c : s) l += char(std::tolower(static_cast<unsigned char>(c)));
    if (l == "prime") return Predicate::Prime;
    if (l == "weaklyprime") return Predicate::WeaklyPrime;
    if (l == "iprime") return Predicate::IPrime;
    if (l == "primary") return Predicate::Primary;
    if (l == "iprimary") return Predicate::IPrimary;
    if (l == "twoabsorbing" || l == "2absorbing") return Predicate::TwoAbsorbing;
    if (l == "nabsorbing") return Predicate::NAbsorbing;
    if (l == "nabsorbingiprime") return Predicate::NAbsorbingIPrime;
    if (l == "twoabsorbingprimary" || l == "2absorbingprimary")
        return Predicate::TwoAbsorbingPrimary;
    return std::nullopt;
}

bool predicate_needs_i(Predicate p) {
    return p == Predicate::IPrime || p == Predicate::IPrimary ||
           p == Predicate::NAbsorbingIPrime;
}

bool predicate_needs_n(Predicate p) {
    return p == Predicate::NAbsorbing || p == Predicate::NAbsorbingIPrime;
}

ClassificationReport run_query(const PredicateQuery& q, const ScanConfig& cfg) {
    switch (q.predicate) {
        case Predicate::Prime: return is_prime(q.P, cfg);
        case Predicate::WeaklyPrime: return is_weakly_prime(q.P, cfg);
        case Predicate::IPrime: return is_i_prime(q.P, *q.I, cfg);
        case Predicate::Primary: return is_primary(q.P, cfg);
        case Predicate::IPrimary: return is_i_primary(q.P, *q.I, cfg);
        case Predicate::TwoAbsorbing: return is_n_absorbing(q.P, 2, cfg);
        case Predicate::NAbsorbing: return is_n_absorbing(q.P, *q.n, cfg);
        case Predicate::NAbsorbingIPrime: return is_n_absorbing_i_prime(q.P, *q.I, *q.n, cfg);
        case Predicate::TwoAbsorbingPrimary: return is_two_absorbing_primary(q.P, cfg);
    }
    throw HyperError(ErrorCode::MalformedTables, "unknown predicate");
}

ReplayResult replay_witness(const PredicateQuery& q, const std::vector<uint32_t>& witness) {
    ReplayResult res;
    const Ring& r = q.P.ring;
    auto note = [&](std::string s) { res.trace.push_back(std::move(s)); };

    IndexSet full = tuple_product(r, witness);
    note("product of " + [&] {
        std::string s = "(";
        for (size_t i = 0; i < witness.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(witness[i]);
        }
        return s + ")";
    }() + " = " + full.to_string());

    IndexSet trigger = q.P.bits;
    std::string trigger_desc = "P";
    switch (q.predicate) {
        case Predicate::WeaklyPrime:
            trigger.reset(r->zero());
            trigger_desc = "P-{0}";
            break;
        case Predicate::IPrime:
        case Predicate::IPrimary:
        case Predicate::NAbsorbingIPrime:
            trigger -= ideal_product(*q.I, q.P).bits;
            trigger_desc = "P-IP";
            break;
        default:
            break;
    }
    note("trigger set " + trigger_desc + " = " + trigger.to_string());
    if (!trigger.contains(full)) {
        note("witness does not trigger the hypothesis: no violation");
        return res;
    }
    note("hypothesis holds: product inside " + trigger_desc);

    IndexSet conc_a = q.P.bits;
    IndexSet conc_b = q.P.bits;
    if (q.predicate == Predicate::Primary || q.predicate == Predicate::IPrimary)
        conc_b = radical(q.P).bits;

    if (q.predicate == Predicate::TwoAbsorbingPrimary) {
        IndexSet rad = radical(q.P).bits;
        IndexSet xy = r->hmul(witness[0], witness[1]);
        IndexSet xz = r->hmul(witness[0], witness[2]);
        IndexSet yz = r->hmul(witness[1], witness[2]);
        note("xy=" + xy.to_string() + " xz=" + xz.to_string() + " yz=" + yz.to_string());
        res.reproduced = !q.P.bits.contains(xy) && !rad.contains(xz) && !rad.contains(yz);
        note(res.reproduced ? "no clause satisfied: violation reproduced"
                            : "a clause is satisfied: no violation");
        return res;
    }
    if (witness.size() == 2) {
        bool a_in = conc_a.test(witness[0]);
        bool b_in = conc_b.test(witness[1]);
        note("a in conclusion set: " + std::string(a_in ? "yes" : "no") +
             ", b in conclusion set: " + std::string(b_in ? "yes" : "no"));
        res.reproduced = !a_in && !b_in;
        return res;
    }
    // n-absorbing family: every n-subproduct must stay outside P
    bool any_inside = false;
    for (size_t omit = 0; omit < witness.size(); ++omit) {
        std::vector<uint32_t> sub;
        for (size_t i = 0; i < witness.size(); ++i)
            if (i != omit) sub.push_back(witness[i]);
        IndexSet sp = tuple_product(r, sub);
        note("omit x" + std::to_string(omit + 1) + ": product " + sp.to_string() +
             (q.P.bits.contains(sp) ? " inside P" : " outside P"));
        if (q.P.bits.contains(sp)) any_inside = true;
    }
    res.reproduced = !any_inside;
    return res;
}

}  // namespace hyperring
