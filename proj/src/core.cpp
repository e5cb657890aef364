#include "hyperring/core.hpp"

#include <algorithm>

namespace hyperring {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedTables: return "MalformedTables";
        case ErrorCode::AxiomFailure: return "AxiomFailure";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::EmptyTuple: return "EmptyTuple";
        case ErrorCode::ZeroExponent: return "ZeroExponent";
        case ErrorCode::EmptyA: return "EmptyA";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ScanCapExceeded: return "ScanCapExceeded";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotAdditive: return "NotAdditive";
        case ErrorCode::NotMultiplicative: return "NotMultiplicative";
        case ErrorCode::NotGoodMultiplicative: return "NotGoodMultiplicative";
        case ErrorCode::NotSurjective: return "NotSurjective";
        case ErrorCode::KernelNotContained: return "KernelNotContained";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::ImproperIdeal: return "ImproperIdeal";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownConstruction: return "UnknownConstruction";
        case ErrorCode::BadGenerator: return "BadGenerator";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "Unknown";
}

namespace {

void check_shape(const RawTables& t) {
    const size_t m = t.neg.size();
    if (m == 0)
        throw HyperError(ErrorCode::MalformedTables, "empty carrier");
    if (t.add.size() != m * m)
        throw HyperError(ErrorCode::MalformedTables, "add table is not m*m");
    if (t.hmul.size() != m * m)
        throw HyperError(ErrorCode::MalformedTables, "hmul table is not m*m");
    if (t.zero >= m)
        throw HyperError(ErrorCode::MalformedTables, "zero index out of range");
    if (!t.labels.empty() && t.labels.size() != m)
        throw HyperError(ErrorCode::MalformedTables, "labels length mismatch");
    for (uint32_t v : t.add)
        if (v >= m) throw HyperError(ErrorCode::MalformedTables, "add entry out of range");
    for (uint32_t v : t.neg)
        if (v >= m) throw HyperError(ErrorCode::MalformedTables, "neg entry out of range");
    for (const auto& s : t.hmul)
        for (uint32_t v : s)
            if (v >= m) throw HyperError(ErrorCode::MalformedTables, "hmul entry out of range");
}

std::vector<IndexSet> pack_hmul(const RawTables& t) {
    const uint32_t m = t.size();
    std::vector<IndexSet> out(size_t(m) * m, IndexSet(m));
    for (size_t i = 0; i < out.size(); ++i)
        for (uint32_t v : t.hmul[i]) out[i].set(v);
    return out;
}

uint64_t table_fingerprint(const RawTables& t, const std::vector<IndexSet>& hmul) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(t.size());
    mix(t.zero);
    for (uint32_t v : t.add) mix(v);
    for (uint32_t v : t.neg) mix(v);
    for (const auto& s : hmul) mix(s.hash());
    return h;
}

}  // namespace

ValidationReport FiniteHyperring::validate(const RawTables& t) {
    check_shape(t);
    const uint32_t m = t.size();
    auto hmul = pack_hmul(t);
    auto at = [&](uint32_t a, uint32_t b) -> const IndexSet& {
        return hmul[size_t(a) * m + b];
    };
    auto add = [&](uint32_t a, uint32_t b) { return t.add[size_t(a) * m + b]; };

    ValidationReport rep;
    auto fail = [&](const char* axiom, std::vector<uint32_t> w) {
        for (const auto& f : rep.failures)
            if (f.axiom == axiom) return;  // keep minimal (first) witness per axiom
        rep.failures.push_back({axiom, std::move(w)});
    };

    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b)
            if (at(a, b).empty()) fail("nonempty-hyperproduct", {a, b});

    for (uint32_t a = 0; a < m; ++a) {
        if (add(a, t.zero) != a) fail("group-identity", {a});
        if (add(a, t.neg[a]) != t.zero) fail("group-inverse", {a});
    }
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            if (add(a, b) != add(b, a)) fail("add-commutativity", {a, b});
            for (uint32_t c = 0; c < m; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    fail("add-associativity", {a, b, c});
        }

    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = a; b < m; ++b)
            if (at(a, b) != at(b, a)) fail("hmul-commutativity", {a, b});

    // set-extended associativity: (a o b) o c == a o (b o c)
    IndexSet lhs(m), rhs(m);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b)
            for (uint32_t c = 0; c < m; ++c) {
                lhs.clear();
                at(a, b).for_each([&](uint32_t u) { lhs |= at(u, c); });
                rhs.clear();
                at(b, c).for_each([&](uint32_t u) { rhs |= at(a, u); });
                if (lhs != rhs) fail("hmul-associativity", {a, b, c});
            }

    bool strong = true;
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b)
            for (uint32_t c = 0; c < m; ++c) {
                const IndexSet& l = at(a, add(b, c));
                rhs.clear();
                at(a, b).for_each([&](uint32_t u) {
                    at(a, c).for_each([&](uint32_t v) { rhs.set(add(u, v)); });
                });
                if (!rhs.contains(l)) {
                    fail("inclusive-distributivity", {a, b, c});
                    strong = false;
                } else if (l != rhs) {
                    strong = false;
                }
            }

    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            IndexSet img(m);
            at(a, b).for_each([&](uint32_t u) { img.set(t.neg[u]); });
            if (at(a, t.neg[b]) != img || at(t.neg[a], b) != img)
                fail("sign-compatibility", {a, b});
        }

    rep.ok = rep.failures.empty();
    rep.distributivity = strong ? Distributivity::Strong : Distributivity::Inclusive;
    return rep;
}

Ring FiniteHyperring::create(const RawTables& t, std::string name) {
    ValidationReport rep = validate(t);
    if (!rep.ok) {
        std::string msg = "hyperring axioms violated:";
        for (const auto& f : rep.failures) {
            msg += ' ';
            msg += f.axiom;
        }
        throw HyperError(ErrorCode::AxiomFailure, msg);
    }
    return create_unchecked(t, std::move(name), rep.distributivity);
}

Ring FiniteHyperring::create_unchecked(const RawTables& t, std::string name,
                                       Distributivity dist) {
    check_shape(t);
    auto r = std::shared_ptr<FiniteHyperring>(new FiniteHyperring());
    r->m_ = t.size();
    r->zero_ = t.zero;
    r->add_ = t.add;
    r->neg_ = t.neg;
    r->hmul_ = pack_hmul(t);
    r->dist_ = dist;
    if (t.labels.empty()) {
        r->labels_.reserve(r->m_);
        for (uint32_t i = 0; i < r->m_; ++i) r->labels_.push_back(std::to_string(i));
    } else {
        r->labels_ = t.labels;
    }
    r->fingerprint_ = table_fingerprint(t, r->hmul_);
    r->name_ = name.empty() ? ("ring#" + std::to_string(r->fingerprint_ % 100000)) : std::move(name);
    return r;
}

void require_same_ring(const Ring& a, const Ring& b) {
    if (a.get() != b.get())
        throw HyperError(ErrorCode::RingMismatch, "operands belong to different rings");
}

ElementSet set_sum(const ElementSet& S, const ElementSet& T) {
    require_same_ring(S.ring, T.ring);
    const auto& r = *S.ring;
    IndexSet out(r.size());
    S.bits.for_each([&](uint32_t s) {
        T.bits.for_each([&](uint32_t t) { out.set(r.add(s, t)); });
    });
    return {S.ring, out};
}

ElementSet set_product(const ElementSet& S, const ElementSet& T) {
    require_same_ring(S.ring, T.ring);
    const auto& r = *S.ring;
    IndexSet out(r.size());
    S.bits.for_each([&](uint32_t s) {
        T.bits.for_each([&](uint32_t t) { out |= r.hmul(s, t); });
    });
    return {S.ring, out};
}

void fold_product_step(const FiniteHyperring& r, const IndexSet& acc, uint32_t x,
                       IndexSet& out) {
    out = IndexSet(r.size());
    acc.for_each([&](uint32_t u) { out |= r.hmul(u, x); });
}

IndexSet tuple_product(const Ring& r, const std::vector<uint32_t>& xs) {
    if (xs.empty()) throw HyperError(ErrorCode::EmptyTuple, "tuple_product of empty tuple");
    for (uint32_t x : xs)
        if (x >= r->size())
            throw HyperError(ErrorCode::IndexOutOfRange, "tuple element out of range");
    IndexSet acc = IndexSet::single(r->size(), xs[0]);
    IndexSet tmp(r->size());
    for (size_t i = 1; i < xs.size(); ++i) {
        fold_product_step(*r, acc, xs[i], tmp);
        std::swap(acc, tmp);
    }
    return acc;
}

IndexSet element_power(const Ring& r, uint32_t a, uint32_t n) {
    if (n == 0)
        throw HyperError(ErrorCode::ZeroExponent,
                         "a^0 is undefined: no multiplicative identity is assumed");
    return tuple_product(r, std::vector<uint32_t>(n, a));
}

}  // namespace hyperring
