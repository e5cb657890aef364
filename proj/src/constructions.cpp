#include "hyperring/constructions.hpp"

#include <algorithm>

namespace hyperring {

Ring build_ra(const RaSpec& spec) {
    if (spec.A.empty()) throw HyperError(ErrorCode::EmptyA, "R_A requires a nonempty A");
    if (spec.n < 2) throw HyperError(ErrorCode::MalformedTables, "R_A requires n >= 2");
    for (uint32_t a : spec.A)
        if (a >= spec.n) throw HyperError(ErrorCode::BadGenerator, "A member out of range");

    const uint32_t n = spec.n;
    RawTables t;
    t.zero = 0;
    t.neg.resize(n);
    t.add.resize(size_t(n) * n);
    t.hmul.resize(size_t(n) * n);
    for (uint32_t a = 0; a < n; ++a) {
        t.neg[a] = (n - a) % n;
        for (uint32_t b = 0; b < n; ++b) {
            t.add[size_t(a) * n + b] = (a + b) % n;
            std::vector<uint32_t> prod;
            for (uint32_t x : spec.A) {
                uint32_t v = uint32_t((uint64_t(a) * x % n) * b % n);
                prod.push_back(v);
            }
            std::sort(prod.begin(), prod.end());
            prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
            t.hmul[size_t(a) * n + b] = std::move(prod);
        }
    }
    std::string name = "RA(n=" + std::to_string(n) + ",A={";
    for (size_t i = 0; i < spec.A.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(spec.A[i]);
    }
    name += "})";
    return FiniteHyperring::create(t, name);
}

uint32_t ProductRing::index_of(const std::vector<uint32_t>& tuple) const {
    if (tuple.size() != dims.size())
        throw HyperError(ErrorCode::IndexOutOfRange, "tuple arity mismatch");
    uint32_t idx = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (tuple[i] >= dims[i])
            throw HyperError(ErrorCode::IndexOutOfRange, "tuple entry out of range");
        idx = idx * dims[i] + tuple[i];
    }
    return idx;
}

std::vector<uint32_t> ProductRing::tuple_of(uint32_t index) const {
    std::vector<uint32_t> out(dims.size());
    for (size_t i = dims.size(); i-- > 0;) {
        out[i] = index % dims[i];
        index /= dims[i];
    }
    return out;
}

IndexSet ProductRing::embed(const std::vector<IndexSet>& parts) const {
    IndexSet out(ring->size());
    std::vector<uint32_t> tuple(dims.size(), 0);
    // iterate the cartesian product of the parts
    std::vector<std::vector<uint32_t>> members(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) members[i] = parts[i].to_vector();
    std::vector<size_t> pos(parts.size(), 0);
    for (auto& mv : members)
        if (mv.empty()) return out;
    while (true) {
        for (size_t i = 0; i < parts.size(); ++i) tuple[i] = members[i][pos[i]];
        out.set(index_of(tuple));
        size_t i = parts.size();
        while (i-- > 0) {
            if (++pos[i] < members[i].size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
    }
}

IndexSet ProductRing::project(const IndexSet& s, size_t factor) const {
    IndexSet out(dims[factor]);
    s.for_each([&](uint32_t idx) { out.set(tuple_of(idx)[factor]); });
    return out;
}

ProductRing product_hyperring(const std::vector<Ring>& rings, uint32_t size_cap) {
    if (rings.size() < 2)
        throw HyperError(ErrorCode::MalformedTables, "product requires at least 2 factors");
    uint64_t m = 1;
    for (const auto& r : rings) {
        m *= r->size();
        if (m > size_cap)
            throw HyperError(ErrorCode::TooLarge,
                             "product carrier exceeds cap " + std::to_string(size_cap));
    }
    ProductRing pr;
    pr.factors = rings;
    for (const auto& r : rings) pr.dims.push_back(r->size());

    const uint32_t M = uint32_t(m);
    const size_t k = rings.size();
    std::vector<std::vector<uint32_t>> tuples(M);
    {
        std::vector<uint32_t> tup(k, 0);
        for (uint32_t idx = 0; idx < M; ++idx) {
            uint32_t v = idx;
            for (size_t i = k; i-- > 0;) {
                tup[i] = v % pr.dims[i];
                v /= pr.dims[i];
            }
            tuples[idx] = tup;
        }
    }

    RawTables t;
    t.zero = 0;
    t.neg.resize(M);
    t.add.resize(size_t(M) * M);
    t.hmul.resize(size_t(M) * M);
    t.labels.resize(M);
    bool strong = true;
    for (const auto& r : rings)
        if (r->distributivity() != Distributivity::Strong) strong = false;

    std::vector<uint32_t> tmp(k);
    for (uint32_t a = 0; a < M; ++a) {
        for (size_t i = 0; i < k; ++i) tmp[i] = rings[i]->neg(tuples[a][i]);
        uint32_t idx = 0;
        for (size_t i = 0; i < k; ++i) idx = idx * pr.dims[i] + tmp[i];
        t.neg[a] = idx;
        std::string lab = "(";
        for (size_t i = 0; i < k; ++i) {
            if (i) lab += ',';
            lab += rings[i]->label(tuples[a][i]);
        }
        lab += ')';
        t.labels[a] = std::move(lab);
    }
    // zero index: tuple of zeros
    {
        std::vector<uint32_t> z(k);
        for (size_t i = 0; i < k; ++i) z[i] = rings[i]->zero();
        uint32_t idx = 0;
        for (size_t i = 0; i < k; ++i) idx = idx * pr.dims[i] + z[i];
        t.zero = idx;
    }
    std::vector<const IndexSet*> comp(k);
    std::vector<uint32_t> members(k);
    for (uint32_t a = 0; a < M; ++a) {
        for (uint32_t b = 0; b < M; ++b) {
            uint32_t idx = 0;
            for (size_t i = 0; i < k; ++i)
                idx = idx * pr.dims[i] + rings[i]->add(tuples[a][i], tuples[b][i]);
            t.add[size_t(a) * M + b] = idx;

            for (size_t i = 0; i < k; ++i) comp[i] = &rings[i]->hmul(tuples[a][i], tuples[b][i]);
            std::vector<uint32_t> prod;
            std::vector<uint32_t> pos(k, 0);
            std::vector<std::vector<uint32_t>> compv(k);
            for (size_t i = 0; i < k; ++i) compv[i] = comp[i]->to_vector();
            while (true) {
                uint32_t pidx = 0;
                for (size_t i = 0; i < k; ++i) pidx = pidx * pr.dims[i] + compv[i][pos[i]];
                prod.push_back(pidx);
                size_t i = k;
                bool done = true;
                while (i-- > 0) {
                    if (++pos[i] < compv[i].size()) {
                        done = false;
                        break;
                    }
                    pos[i] = 0;
                }
                if (done) break;
            }
            std::sort(prod.begin(), prod.end());
            t.hmul[size_t(a) * M + b] = std::move(prod);
        }
    }
    std::string name;
    for (size_t i = 0; i < k; ++i) {
        if (i) name += " x ";
        name += rings[i]->name();
    }
    // componentwise axioms are inherited from the factors; skip the m^3 pass
    // for large carriers, validate small ones outright
    if (M <= 40) {
        pr.ring = FiniteHyperring::create(t, name);
    } else {
        pr.ring = FiniteHyperring::create_unchecked(
            t, name, strong ? Distributivity::Strong : Distributivity::Inclusive);
    }
    return pr;
}

IndexSet GoodHomomorphism::image(const IndexSet& s) const {
    IndexSet out(target->size());
    s.for_each([&](uint32_t a) { out.set(map[a]); });
    return out;
}

IndexSet GoodHomomorphism::preimage(const IndexSet& s) const {
    IndexSet out(source->size());
    for (uint32_t a = 0; a < source->size(); ++a)
        if (s.test(map[a])) out.set(a);
    return out;
}

IndexSet GoodHomomorphism::kernel_set() const {
    return preimage(IndexSet::single(target->size(), target->zero()));
}

GoodHomomorphism build_homomorphism(const Ring& source, const Ring& target,
                                    std::vector<uint32_t> map) {
    if (map.size() != source->size())
        throw HyperError(ErrorCode::MalformedTables, "map length must equal source size");
    for (uint32_t v : map)
        if (v >= target->size())
            throw HyperError(ErrorCode::IndexOutOfRange, "map value out of range");

    const uint32_t m = source->size();
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b)
            if (map[source->add(a, b)] != target->add(map[a], map[b]))
                throw HyperError(ErrorCode::NotAdditive,
                                 "f(a+b) != f(a)+f(b) at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");

    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            IndexSet img(target->size());
            source->hmul(a, b).for_each([&](uint32_t x) { img.set(map[x]); });
            const IndexSet& rhs = target->hmul(map[a], map[b]);
            if (img == rhs) continue;
            if (rhs.contains(img))
                throw HyperError(ErrorCode::NotGoodMultiplicative,
                                 "f(a o b) is strictly inside f(a) o f(b) at (" +
                                     std::to_string(a) + "," + std::to_string(b) +
                                     "): inclusion holds but good requires equality");
            throw HyperError(ErrorCode::NotMultiplicative,
                             "f(a o b) is not contained in f(a) o f(b) at (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
        }

    GoodHomomorphism f;
    f.source = source;
    f.target = target;
    f.map = std::move(map);
    IndexSet seen(target->size());
    bool inj = true;
    for (uint32_t a = 0; a < m; ++a) {
        if (seen.test(f.map[a])) inj = false;
        seen.set(f.map[a]);
    }
    f.injective = inj;
    f.surjective = seen.count() == target->size();
    return f;
}

QuotientRing quotient_hyperring(const Ring& r, const Hyperideal& J) {
    require_same_ring(r, J.ring);
    IdealCheck chk = is_hyperideal(r, J.bits);
    if (!chk.ok)
        throw HyperError(ErrorCode::NotAnIdeal, "quotient modulus is not a hyperideal (" +
                                                    chk.clause + ")");
    const uint32_t m = r->size();
    std::vector<uint32_t> coset_of(m, m);
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < m; ++x) {
        if (coset_of[x] != m) continue;
        uint32_t idx = uint32_t(reps.size());
        reps.push_back(x);
        J.bits.for_each([&](uint32_t j) { coset_of[r->add(x, j)] = idx; });
    }
    const uint32_t k = uint32_t(reps.size());
    RawTables t;
    t.zero = coset_of[r->zero()];
    t.neg.resize(k);
    t.add.resize(size_t(k) * k);
    t.hmul.resize(size_t(k) * k);
    t.labels.resize(k);
    for (uint32_t a = 0; a < k; ++a) {
        t.neg[a] = coset_of[r->neg(reps[a])];
        t.labels[a] = "[" + r->label(reps[a]) + "]";
        for (uint32_t b = 0; b < k; ++b) {
            t.add[size_t(a) * k + b] = coset_of[r->add(reps[a], reps[b])];
            std::vector<uint32_t> img;
            r->hmul(reps[a], reps[b]).for_each([&](uint32_t x) { img.push_back(coset_of[x]); });
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            t.hmul[size_t(a) * k + b] = std::move(img);
        }
    }
    std::string name = r->name() + "/" + J.bits.to_string();
    QuotientRing q;
    q.ring = k <= 64 ? FiniteHyperring::create(t, name)
                     : FiniteHyperring::create_unchecked(t, name, r->distributivity());
    std::vector<uint32_t> proj(m);
    for (uint32_t x = 0; x < m; ++x) proj[x] = coset_of[x];
    q.projection = build_homomorphism(r, q.ring, std::move(proj));
    return q;
}

Hyperideal image_ideal(const GoodHomomorphism& f, const Hyperideal& P) {
    require_same_ring(f.source, P.ring);
    if (!f.surjective)
        throw HyperError(ErrorCode::NotSurjective, "image of an ideal needs surjectivity");
    IndexSet img = f.image(P.bits);
    IdealCheck chk = is_hyperideal(f.target, img);
    if (!chk.ok)
        throw HyperError(ErrorCode::NotAnIdeal,
                         "image is not a hyperideal (" + chk.clause + ")");
    return {f.target, img};
}

Hyperideal pushforward_ideal(const GoodHomomorphism& f, const Hyperideal& P) {
    require_same_ring(f.source, P.ring);
    if (!f.surjective)
        throw HyperError(ErrorCode::NotSurjective, "pushforward requires a surjective map");
    if (!P.bits.contains(f.kernel_set()))
        throw HyperError(ErrorCode::KernelNotContained,
                         "kernel-set of f is not contained in P");
    return image_ideal(f, P);
}

Hyperideal pullback_ideal(const GoodHomomorphism& f, const Hyperideal& Q) {
    require_same_ring(f.target, Q.ring);
    IndexSet pre = f.preimage(Q.bits);
    IdealCheck chk = is_hyperideal(f.source, pre);
    if (!chk.ok)
        throw HyperError(ErrorCode::NotAnIdeal,
                         "preimage is not a hyperideal (" + chk.clause + ")");
    return {f.source, pre};
}

std::vector<Monomial> monomial_product(const MonomialRing& ring, Monomial lhs, Monomial rhs) {
    if (lhs.coeff >= ring.base->size() || rhs.coeff >= ring.base->size())
        throw HyperError(ErrorCode::IndexOutOfRange, "monomial coefficient out of range");
    if (lhs.degree > ring.dmax || rhs.degree > ring.dmax ||
        lhs.degree + rhs.degree > ring.dmax)
        throw HyperError(ErrorCode::DegreeOverflow,
                         "product degree exceeds dmax=" + std::to_string(ring.dmax));
    std::vector<Monomial> out;
    ring.base->hmul(lhs.coeff, rhs.coeff).for_each([&](uint32_t c) {
        out.push_back({c, lhs.degree + rhs.degree});
    });
    return out;
}

const char* localize_status_name(LocalizeStatus s) {
    switch (s) {
        case LocalizeStatus::Ok: return "Ok";
        case LocalizeStatus::NotMultiplicativelyClosed: return "NotMultiplicativelyClosed";
        case LocalizeStatus::NotAnEquivalence: return "NotAnEquivalence";
        case LocalizeStatus::IllDefinedTables: return "IllDefinedTables";
    }
    return "Unknown";
}

uint32_t LocalizedRing::pair_class(uint32_t r, uint32_t s) const {
    for (uint32_t i = 0; i < s_list.size(); ++i)
        if (s_list[i] == s) return class_of[r * s_list.size() + i];
    throw HyperError(ErrorCode::IndexOutOfRange, "denominator not in S");
}

IndexSet LocalizedRing::localized_set(const IndexSet& base_set) const {
    IndexSet out(result->size());
    base_set.for_each([&](uint32_t x) {
        for (uint32_t i = 0; i < s_list.size(); ++i) out.set(class_of[x * s_list.size() + i]);
    });
    return out;
}

namespace {

IndexSet triple_product(const FiniteHyperring& r, uint32_t a, uint32_t b, uint32_t c) {
    IndexSet out(r.size());
    r.hmul(a, b).for_each([&](uint32_t u) { out |= r.hmul(u, c); });
    return out;
}

}  // namespace

LocalizeOutcome localize(const Ring& r, const IndexSet& S, LocalizeMode mode, bool strict) {
    LocalizeOutcome out;
    if (S.empty()) {
        out.status = LocalizeStatus::NotMultiplicativelyClosed;
        out.detail = "S is empty";
        return out;
    }
    const uint32_t m = r->size();
    std::vector<uint32_t> s_list = S.to_vector();
    for (uint32_t a : s_list)
        for (uint32_t b : s_list) {
            const IndexSet& p = r->hmul(a, b);
            bool ok = strict ? S.contains(p) : S.intersects(p);
            if (!ok) {
                out.status = LocalizeStatus::NotMultiplicativelyClosed;
                out.detail = strict ? "hmul[a][b] not inside S" : "hmul[a][b] misses S";
                out.witness = {a, b};
                return out;
            }
        }

    const uint32_t ns = uint32_t(s_list.size());
    const uint32_t k = m * ns;
    auto pidx = [&](uint32_t rr, uint32_t si) { return rr * ns + si; };

    // relation matrix
    std::vector<IndexSet> rel(k, IndexSet(k));
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t r1 = i / ns, s1 = s_list[i % ns];
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t r2 = j / ns, s2 = s_list[j % ns];
            for (uint32_t s : s_list) {
                IndexSet lhs = triple_product(*r, s, s1, r2);
                IndexSet rhs = triple_product(*r, s, s2, r1);
                bool related = mode == LocalizeMode::SetEquality ? lhs == rhs
                                                                 : lhs.intersects(rhs);
                if (related) {
                    rel[i].set(j);
                    break;
                }
            }
        }
    }
    // reflexivity and symmetry hold by construction; check transitivity
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = rel[i].first(); j < k; j = rel[i].next(j))
            if (!rel[i].contains(rel[j])) {
                uint32_t l = 0;
                for (uint32_t c = rel[j].first(); c < k; c = rel[j].next(c))
                    if (!rel[i].test(c)) {
                        l = c;
                        break;
                    }
                out.status = LocalizeStatus::NotAnEquivalence;
                out.detail = "transitivity fails";
                out.witness = {i / ns, s_list[i % ns], j / ns, s_list[j % ns],
                               l / ns, s_list[l % ns]};
                return out;
            }

    // classes in order of smallest member pair
    std::vector<uint32_t> class_of(k, k);
    std::vector<uint32_t> class_rep;
    for (uint32_t i = 0; i < k; ++i) {
        if (class_of[i] != k) continue;
        uint32_t c = uint32_t(class_rep.size());
        class_rep.push_back(i);
        rel[i].for_each([&](uint32_t j) { class_of[j] = c; });
    }
    const uint32_t nc = uint32_t(class_rep.size());

    LocalizedRing loc;
    loc.base = r;
    loc.S = S;
    loc.class_of = class_of;
    loc.s_list = s_list;

    // induced tables, checked for representative independence
    RawTables t;
    t.zero = class_of[pidx(r->zero(), 0)];
    t.neg.assign(nc, nc);
    t.add.assign(size_t(nc) * nc, nc);
    t.hmul.assign(size_t(nc) * nc, {});
    t.labels.resize(nc);
    std::vector<std::vector<uint32_t>> members(nc);
    for (uint32_t i = 0; i < k; ++i) members[class_of[i]].push_back(i);
    for (uint32_t c = 0; c < nc; ++c) {
        uint32_t rep = class_rep[c];
        t.labels[c] = r->label(rep / ns) + "/" + r->label(s_list[rep % ns]);
    }

    auto fail_tables = [&](std::string detail, std::vector<uint32_t> w) {
        out.status = LocalizeStatus::IllDefinedTables;
        out.detail = std::move(detail);
        out.witness = std::move(w);
        return out;
    };

    for (uint32_t c = 0; c < nc; ++c) {
        // negation: class of (-r, s) must be member independent
        for (uint32_t i : members[c]) {
            uint32_t v = class_of[pidx(r->neg(i / ns), i % ns)];
            if (t.neg[c] == nc)
                t.neg[c] = v;
            else if (t.neg[c] != v)
                return fail_tables("negation depends on representatives", {i / ns, s_list[i % ns]});
        }
    }

    std::vector<uint32_t> si_of(m, ns);
    for (uint32_t i = 0; i < ns; ++i) si_of[s_list[i]] = i;

    for (uint32_t c1 = 0; c1 < nc; ++c1) {
        for (uint32_t c2 = 0; c2 < nc; ++c2) {
            bool have_add = false, have_mul = false;
            uint32_t add_val = 0;
            IndexSet mul_val(nc);
            for (uint32_t i : members[c1]) {
                uint32_t r1 = i / ns, s1 = s_list[i % ns];
                for (uint32_t j : members[c2]) {
                    uint32_t r2 = j / ns, s2 = s_list[j % ns];
                    IndexSet dens = r->hmul(s1, s2) & S;
                    if (dens.empty())
                        return fail_tables("denominator set misses S", {s1, s2});
                    // addition: (s1 r2 + s2 r1) / (s1 s2)
                    IndexSet nums(m);
                    const IndexSet& s1r2 = r->hmul(s1, r2);
                    const IndexSet& s2r1 = r->hmul(s2, r1);
                    s1r2.for_each([&](uint32_t a) {
                        s2r1.for_each([&](uint32_t b) { nums.set(r->add(a, b)); });
                    });
                    IndexSet acc(nc);
                    nums.for_each([&](uint32_t x) {
                        dens.for_each([&](uint32_t d) { acc.set(class_of[pidx(x, si_of[d])]); });
                    });
                    if (acc.count() != 1)
                        return fail_tables("addition is not single valued",
                                           {r1, s1, r2, s2});
                    uint32_t av = acc.first();
                    if (!have_add) {
                        add_val = av;
                        have_add = true;
                    } else if (add_val != av) {
                        return fail_tables("addition depends on representatives",
                                           {r1, s1, r2, s2});
                    }
                    // hypermultiplication: (r1 r2) / (s1 s2)
                    IndexSet macc(nc);
                    r->hmul(r1, r2).for_each([&](uint32_t x) {
                        dens.for_each([&](uint32_t d) { macc.set(class_of[pidx(x, si_of[d])]); });
                    });
                    if (!have_mul) {
                        mul_val = macc;
                        have_mul = true;
                    } else if (mul_val != macc) {
                        return fail_tables("hmul depends on representatives",
                                           {r1, s1, r2, s2});
                    }
                }
            }
            t.add[size_t(c1) * nc + c2] = add_val;
            t.hmul[size_t(c1) * nc + c2] = mul_val.to_vector();
        }
    }

    ValidationReport rep = FiniteHyperring::validate(t);
    if (!rep.ok)
        return fail_tables("induced tables violate axiom " + rep.failures[0].axiom,
                           rep.failures[0].witness);
    loc.result = FiniteHyperring::create_unchecked(
        t, "S^-1 " + r->name() + " at S=" + S.to_string(), rep.distributivity);
    loc.base_map.resize(m);
    for (uint32_t x = 0; x < m; ++x) loc.base_map[x] = class_of[pidx(x, 0)];
    out.value = std::move(loc);
    return out;
}

}  // namespace hyperring
