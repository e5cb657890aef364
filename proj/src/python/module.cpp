#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/core.hpp"
#include "hyperring/harness.hpp"
#include "hyperring/ideals.hpp"

namespace py = pybind11;
using namespace hyperring;

namespace {

IndexSet to_set(const Ring& r, const std::vector<uint32_t>& xs) {
    IndexSet s(r->size());
    for (uint32_t x : xs) {
        if (x >= r->size()) throw py::value_error("element index out of range");
        s.set(x);
    }
    return s;
}

std::vector<uint32_t> from_set(const IndexSet& s) { return s.to_vector(); }

Hyperideal to_ideal(const Ring& r, const std::vector<uint32_t>& xs) {
    IndexSet s = to_set(r, xs);
    IdealCheck chk = is_hyperideal(r, s);
    if (!chk.ok) throw py::value_error("set is not a hyperideal: " + chk.clause);
    return {r, s};
}

py::dict classification_dict(const ClassificationReport& rep) {
    py::dict d;
    d["verdict"] = rep.verdict;
    d["witness"] = rep.witness ? py::object(py::cast(*rep.witness)) : py::none();
    d["scanned"] = rep.scanned;
    return d;
}

py::dict theorem_dict(const TheoremReport& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["instances"] = rep.instances;
    d["skipped"] = rep.skipped;
    d["passed"] = rep.passed();
    py::list fails;
    for (const auto& f : rep.failures) {
        py::dict e;
        e["instance"] = f.fingerprint;
        e["witness"] = f.witness;
        e["detail"] = f.detail;
        fails.append(e);
    }
    d["failures"] = fails;
    py::dict info;
    for (const auto& [k, v] : rep.info) info[py::str(k)] = v;
    d["info"] = info;
    return d;
}

}  // namespace

struct PyRing {
    Ring r;
};

struct PyProduct {
    ProductRing pr;
};

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite multiplicative hyperring engine";

    py::register_exception<HyperError>(m, "HyperError");

    py::class_<PyRing>(m, "Ring")
        .def_property_readonly("size", [](const PyRing& w) { return w.r->size(); })
        .def_property_readonly("zero", [](const PyRing& w) { return w.r->zero(); })
        .def_property_readonly("name", [](const PyRing& w) { return w.r->name(); })
        .def_property_readonly("strongly_distributive",
                               [](const PyRing& w) {
                                   return w.r->distributivity() == Distributivity::Strong;
                               })
        .def("add", [](const PyRing& w, uint32_t a, uint32_t b) {
                 if (a >= w.r->size() || b >= w.r->size())
                     throw py::value_error("index out of range");
                 return w.r->add(a, b);
             })
        .def("neg", [](const PyRing& w, uint32_t a) {
                 if (a >= w.r->size()) throw py::value_error("index out of range");
                 return w.r->neg(a);
             })
        .def("label", [](const PyRing& w, uint32_t a) {
                 if (a >= w.r->size()) throw py::value_error("index out of range");
                 return w.r->label(a);
             })
        .def("hmul",
             [](const PyRing& w, uint32_t a, uint32_t b) {
                 if (a >= w.r->size() || b >= w.r->size())
                     throw py::value_error("index out of range");
                 return from_set(w.r->hmul(a, b));
             })
        .def("__repr__", [](const PyRing& w) { return "<Ring " + w.r->name() + ">"; });

    m.def("build_ra", [](uint32_t n, const std::vector<uint32_t>& A) {
        return PyRing{build_ra({n, A})};
    }, py::arg("n"), py::arg("A"));

    py::class_<PyProduct>(m, "ProductRing")
        .def_property_readonly("ring", [](const PyProduct& w) { return PyRing{w.pr.ring}; })
        .def("index_of", [](const PyProduct& w, const std::vector<uint32_t>& t) {
            return w.pr.index_of(t);
        })
        .def("tuple_of", [](const PyProduct& w, uint32_t i) {
            if (i >= w.pr.ring->size()) throw py::value_error("index out of range");
            return w.pr.tuple_of(i);
        });

    m.def("product", [](const std::vector<PyRing>& rings, uint32_t cap) {
        std::vector<Ring> rs;
        for (const auto& w : rings) rs.push_back(w.r);
        return PyProduct{product_hyperring(rs, cap)};
    }, py::arg("rings"), py::arg("cap") = 4096);

    m.def("quotient", [](const PyRing& w, const std::vector<uint32_t>& J) {
        QuotientRing q = quotient_hyperring(w.r, to_ideal(w.r, J));
        return py::make_tuple(PyRing{q.ring}, q.projection.map);
    }, py::arg("ring"), py::arg("ideal"));

    m.def("set_sum", [](const PyRing& w, const std::vector<uint32_t>& S,
                        const std::vector<uint32_t>& T) {
        const Ring& r = w.r;
        return from_set(set_sum({r, to_set(w.r, S)}, {r, to_set(w.r, T)}).bits);
    });
    m.def("set_product", [](const PyRing& w, const std::vector<uint32_t>& S,
                            const std::vector<uint32_t>& T) {
        const Ring& r = w.r;
        return from_set(set_product({r, to_set(w.r, S)}, {r, to_set(w.r, T)}).bits);
    });
    m.def("tuple_product", [](const PyRing& w, const std::vector<uint32_t>& xs) {
        return from_set(tuple_product(w.r, xs));
    });
    m.def("element_power", [](const PyRing& w, uint32_t a, uint32_t n) {
        return from_set(element_power(w.r, a, n));
    });

    m.def("is_hyperideal", [](const PyRing& w, const std::vector<uint32_t>& S) {
        IdealCheck chk = is_hyperideal(w.r, to_set(w.r, S));
        py::dict d;
        d["ok"] = chk.ok;
        d["clause"] = chk.clause;
        d["witness"] = chk.witness;
        return d;
    });
    m.def("hyperideals", [](const PyRing& w, uint32_t cap) {
        const IdealLattice& lat = lattice_of(w.r, cap);
        py::list out;
        for (const auto& s : lat.ideals) out.append(from_set(s));
        return out;
    }, py::arg("ring"), py::arg("cap") = 64);
    m.def("prime_hyperideals", [](const PyRing& w, uint32_t cap) {
        const IdealLattice& lat = lattice_of(w.r, cap);
        py::list out;
        for (size_t pi : lat.primes) out.append(from_set(lat.ideals[pi]));
        return out;
    }, py::arg("ring"), py::arg("cap") = 64);
    m.def("generated_ideal", [](const PyRing& w, const std::vector<uint32_t>& gens) {
        return from_set(generated_ideal(w.r, to_set(w.r, gens)).bits);
    });
    m.def("ideal_product", [](const PyRing& w, const std::vector<uint32_t>& P,
                              const std::vector<uint32_t>& Q) {
        return from_set(ideal_product(to_ideal(w.r, P), to_ideal(w.r, Q)).bits);
    });
    m.def("ideal_power", [](const PyRing& w, const std::vector<uint32_t>& P, uint32_t k) {
        return from_set(ideal_power(to_ideal(w.r, P), k).bits);
    });
    m.def("ideal_sum", [](const PyRing& w, const std::vector<uint32_t>& P,
                          const std::vector<uint32_t>& Q) {
        return from_set(ideal_sum(to_ideal(w.r, P), to_ideal(w.r, Q)).bits);
    });
    m.def("ideal_intersect", [](const PyRing& w, const std::vector<uint32_t>& P,
                                const std::vector<uint32_t>& Q) {
        return from_set(ideal_intersect(to_ideal(w.r, P), to_ideal(w.r, Q)).bits);
    });
    m.def("colon", [](const PyRing& w, const std::vector<uint32_t>& P, uint32_t x) {
        return from_set(colon(to_ideal(w.r, P), x).bits);
    });
    m.def("radical", [](const PyRing& w, const std::vector<uint32_t>& P) {
        return from_set(radical(to_ideal(w.r, P)).bits);
    });
    m.def("minimal_primes", [](const PyRing& w, const std::vector<uint32_t>& P) {
        py::list out;
        for (const auto& q : minimal_primes(to_ideal(w.r, P))) out.append(from_set(q.bits));
        return out;
    });
    m.def("is_hyperfield", [](const PyRing& w) { return is_hyperfield(w.r); });

    auto scan = [](uint32_t jobs) { return ScanConfig{uint64_t(1) << 24, jobs}; };
    m.def("is_prime", [scan](const PyRing& w, const std::vector<uint32_t>& P, uint32_t jobs) {
        return classification_dict(is_prime(to_ideal(w.r, P), scan(jobs)));
    }, py::arg("ring"), py::arg("P"), py::arg("jobs") = 1);
    m.def("is_weakly_prime",
          [scan](const PyRing& w, const std::vector<uint32_t>& P, uint32_t jobs) {
              return classification_dict(is_weakly_prime(to_ideal(w.r, P), scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("jobs") = 1);
    m.def("is_i_prime",
          [scan](const PyRing& w, const std::vector<uint32_t>& P,
                 const std::vector<uint32_t>& I, uint32_t jobs) {
              return classification_dict(
                  is_i_prime(to_ideal(w.r, P), to_ideal(w.r, I), scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("I"), py::arg("jobs") = 1);
    m.def("is_primary", [scan](const PyRing& w, const std::vector<uint32_t>& P, uint32_t jobs) {
        return classification_dict(is_primary(to_ideal(w.r, P), scan(jobs)));
    }, py::arg("ring"), py::arg("P"), py::arg("jobs") = 1);
    m.def("is_i_primary",
          [scan](const PyRing& w, const std::vector<uint32_t>& P,
                 const std::vector<uint32_t>& I, uint32_t jobs) {
              return classification_dict(
                  is_i_primary(to_ideal(w.r, P), to_ideal(w.r, I), scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("I"), py::arg("jobs") = 1);
    m.def("is_n_absorbing",
          [scan](const PyRing& w, const std::vector<uint32_t>& P, uint32_t n, uint32_t jobs) {
              return classification_dict(is_n_absorbing(to_ideal(w.r, P), n, scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("n"), py::arg("jobs") = 1);
    m.def("is_n_absorbing_i_prime",
          [scan](const PyRing& w, const std::vector<uint32_t>& P,
                 const std::vector<uint32_t>& I, uint32_t n, uint32_t jobs) {
              return classification_dict(
                  is_n_absorbing_i_prime(to_ideal(w.r, P), to_ideal(w.r, I), n, scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("I"), py::arg("n"), py::arg("jobs") = 1);
    m.def("is_two_absorbing_primary",
          [scan](const PyRing& w, const std::vector<uint32_t>& P, uint32_t jobs) {
              return classification_dict(is_two_absorbing_primary(to_ideal(w.r, P), scan(jobs)));
          }, py::arg("ring"), py::arg("P"), py::arg("jobs") = 1);

    m.def("localize", [](const PyRing& w, const std::vector<uint32_t>& S, bool intersect) {
        LocalizeOutcome out = localize(w.r, to_set(w.r, S),
                                       intersect ? LocalizeMode::Intersect
                                                 : LocalizeMode::SetEquality);
        py::dict d;
        d["status"] = localize_status_name(out.status);
        d["detail"] = out.detail;
        d["witness"] = out.witness;
        if (out.ok()) {
            d["ring"] = py::cast(PyRing{out.value->result});
            d["classes"] = out.value->result->size();
            d["base_map"] = out.value->base_map;
        }
        return d;
    }, py::arg("ring"), py::arg("S"), py::arg("intersect") = false);

    m.def("run_suite",
          [](const std::string& suite, const std::string& family, uint32_t nmax,
             uint32_t amax, uint32_t cap, bool triples, uint32_t jobs) {
              auto id = suite_from_name(suite);
              if (!id) throw py::value_error("unknown suite " + suite);
              Family fam;
              if (family == "ra") fam.kind = Family::Kind::RaSweep;
              else if (family == "product") fam.kind = Family::Kind::ProductSweep;
              else if (family == "quotient") fam.kind = Family::Kind::QuotientSweep;
              else if (family == "default") fam.kind = Family::Kind::Default;
              else throw py::value_error("unknown family " + family);
              fam.nmax = nmax;
              fam.amax = amax;
              fam.product_cap = cap;
              fam.triples = triples;
              HarnessConfig cfg;
              cfg.jobs = jobs;
              return theorem_dict(run_suite(*id, generate_family(fam), cfg));
          },
          py::arg("suite"), py::arg("family") = "ra", py::arg("nmax") = 6,
          py::arg("amax") = 2, py::arg("cap") = 36, py::arg("triples") = true,
          py::arg("jobs") = 1);
}
