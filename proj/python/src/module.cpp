#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qdm/classical.hpp"
#include "qdm/error.hpp"
#include "qdm/families.hpp"
#include "qdm/measure.hpp"
#include "qdm/parity.hpp"
#include "qdm/qdist.hpp"
#include "qdm/states.hpp"
#include "qdm/verify.hpp"

namespace py = pybind11;
using namespace qdm;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DomainError("expected a square 2-D array");
    const auto n = static_cast<std::size_t>(a.shape(0));
    return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

CArray to_array(const ComplexMatrix& m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    CArray out({n, n});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

QuantumPair quantum_pair(const CArray& rho0, const CArray& rho1) {
    return QuantumPair(DensityMatrix(to_matrix(rho0)), DensityMatrix(to_matrix(rho1)));
}

HypothesisPair classical_pair(std::vector<double> p0, std::vector<double> p1) {
    return HypothesisPair(ProbDist(std::move(p0)), ProbDist(std::move(p1)));
}

py::dict bound_terms(const SdBoundTerms& t) {
    py::dict d;
    d["sd_lower_pe"] = t.lower_pe;
    d["sd_lower_b"] = t.lower_b;
    d["sd_upper_k"] = t.upper_k;
    d["sd_upper_b"] = t.upper_b;
    return d;
}

py::list povm_elements(const Povm& p) {
    py::list out;
    for (std::size_t x = 0; x < p.outcomes(); ++x) out.append(to_array(p[x]));
    return out;
}

const char* status_name(CertifyStatus s) {
    switch (s) {
        case CertifyStatus::kCertified: return "certified";
        case CertifyStatus::kRefuted: return "refuted";
        case CertifyStatus::kDegenerate: return "degenerate";
    }
    return "?";
}

py::dict certification(const Certification& c) {
    py::dict d;
    d["measure"] = measure_name(c.fit.measure);
    d["status"] = status_name(c.status);
    d["epsilon"] = c.fit.epsilon;
    d["bound_epsilon"] = c.fit.bound_epsilon;
    d["n0"] = c.fit.n0;
    if (c.witness_n) d["witness_n"] = *c.witness_n;
    return d;
}

py::dict audit(const PairFamily& fam) {
    const AuditResult a = equivalence_audit(fam);
    py::list rows;
    for (const auto& r : a.rows) {
        py::dict d;
        d["n"] = r.n;
        d["k"] = r.k;
        d["pe"] = r.pe;
        d["b"] = r.b;
        d["sd"] = r.sd;
        d["sd_is_upper_bound"] = r.sd_is_upper_bound;
        rows.append(d);
    }
    py::list fits;
    for (const auto& f : a.fits) fits.append(certification(f));
    py::dict out;
    out["family"] = fam.name;
    out["rows"] = rows;
    out["fits"] = fits;
    out["envelopes_hold"] = a.envelopes_hold;
    out["rates_consistent"] = a.rates_consistent;
    out["all_certified"] = a.all_certified;
    return out;
}

py::list reports(const std::vector<IneqReport>& rs) {
    py::list out;
    for (const auto& r : rs) {
        py::dict d;
        d["name"] = r.name;
        d["trials"] = r.trials;
        d["worst_slack"] = r.worst_slack;
        d["violations"] = r.violations;
        d["asserted"] = r.asserted;
        d["passed"] = r.passed();
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distinguishability measures for classical distributions and quantum states";

    auto base = py::register_exception<Error>(m, "QdmError", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<DimensionOverflow>(m, "DimensionOverflow", base.ptr());
    py::register_exception<InvalidValue>(m, "InvalidValue", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    // classical
    m.def("pe", [](std::vector<double> p0, std::vector<double> p1) { return pe(classical_pair(p0, p1)); },
          py::arg("p0"), py::arg("p1"));
    m.def("kolmogorov",
          [](std::vector<double> p0, std::vector<double> p1) { return kolmogorov(classical_pair(p0, p1)); },
          py::arg("p0"), py::arg("p1"));
    m.def("bhattacharyya",
          [](std::vector<double> p0, std::vector<double> p1) { return bhattacharyya(classical_pair(p0, p1)); },
          py::arg("p0"), py::arg("p1"));
    m.def("shannon_dist",
          [](std::vector<double> p0, std::vector<double> p1) { return shannon_dist(classical_pair(p0, p1)); },
          py::arg("p0"), py::arg("p1"), "Mutual information between hypothesis and outcome, in bits.");
    m.def("classical_bounds", [](std::vector<double> p0, std::vector<double> p1) {
        const HypothesisPair h = classical_pair(p0, p1);
        return bound_terms(sd_bound_terms_from_gap(pe(h), kolmogorov(h), bhattacharyya_gap(h)));
    });
    m.def("binary_entropy", &binary_entropy, py::arg("p"));

    // quantum
    m.def("q_pe", [](const CArray& a, const CArray& b) { return q_pe(quantum_pair(a, b)); },
          py::arg("rho0"), py::arg("rho1"));
    m.def("q_kolmogorov", [](const CArray& a, const CArray& b) { return q_kolmogorov(quantum_pair(a, b)); },
          py::arg("rho0"), py::arg("rho1"));
    m.def("q_bhattacharyya",
          [](const CArray& a, const CArray& b) { return q_bhattacharyya(quantum_pair(a, b)); },
          py::arg("rho0"), py::arg("rho1"));
    m.def("sd_bounds", [](const CArray& a, const CArray& b) {
        const SdBounds s = sd_bounds(quantum_pair(a, b));
        py::dict d = bound_terms(s.terms);
        d["lower"] = s.lower;
        d["upper"] = s.upper;
        return d;
    }, py::arg("rho0"), py::arg("rho1"));
    m.def("sd_optimize", [](const CArray& a, const CArray& b, std::size_t restarts, std::size_t iterations,
                            std::uint64_t seed) {
        SdConfig cfg;
        cfg.restarts = restarts;
        cfg.iterations = iterations;
        cfg.seed = seed;
        const SdEstimate e = sd_optimize(quantum_pair(a, b), cfg);
        py::dict d;
        d["value"] = e.value;
        d["converged"] = e.converged;
        d["povm"] = povm_elements(e.povm);
        return d;
    }, py::arg("rho0"), py::arg("rho1"), py::arg("restarts") = 8, py::arg("iterations") = 400,
       py::arg("seed") = kDefaultSeed);
    m.def("helstrom_pvm", [](const CArray& a, const CArray& b) {
        return povm_elements(helstrom_pvm(DensityMatrix(to_matrix(a)), DensityMatrix(to_matrix(b))));
    }, py::arg("rho0"), py::arg("rho1"));
    m.def("measure", [](const std::vector<CArray>& elements, const CArray& rho) {
        std::vector<ComplexMatrix> e;
        for (const auto& x : elements) e.push_back(to_matrix(x));
        const ProbDist p = apply(Povm(std::move(e)), DensityMatrix(to_matrix(rho)));
        return std::vector<double>(p.probs().begin(), p.probs().end());
    }, py::arg("elements"), py::arg("rho"), "Born-rule outcome distribution.");
    m.def("polarization_state", [](double alpha, int sign) {
        return to_array(DensityMatrix::from_pure(polarization_state(alpha, sign)).matrix());
    }, py::arg("alpha"), py::arg("sign") = 1);

    // parity encoding
    m.def("parity_states", [](double alpha, int n) {
        const QuantumPair q = build_parity_states(ParityConfig(alpha, n));
        return py::make_tuple(to_array(q.rho0().matrix()), to_array(q.rho1().matrix()));
    }, py::arg("alpha"), py::arg("n"));
    m.def("parity_k", [](double alpha, int n) { return parity_k(ParityConfig(alpha, n)); },
          py::arg("alpha"), py::arg("n"));
    m.def("parity_b", [](double alpha, int n) { return parity_b(ParityConfig(alpha, n)); },
          py::arg("alpha"), py::arg("n"));
    m.def("parity_sd2", &parity_sd2, py::arg("alpha"));
    m.def("figure_data", [](std::size_t points) {
        py::list out;
        for (const auto& r : emit_figure_data(figure_alpha_grid(points))) {
            out.append(py::make_tuple(r.alpha, r.sd_lower_pe, r.sd_parmi, r.sd_upper_k, r.sd_lower_b,
                                      r.sd_upper_b));
        }
        return out;
    }, py::arg("points") = 200, "Rows (alpha, sd_lower_pe, sd_parmi, sd_upper_k, sd_lower_b, sd_upper_b).");

    // families
    m.def("audit_uniform_vs_modified", [](int n_max) { return audit(uniform_vs_modified_family(n_max)); },
          py::arg("n_max") = 12);
    m.def("audit_parity", [](double alpha, int n_max) { return audit(parity_family(alpha, n_max)); },
          py::arg("alpha"), py::arg("n_max") = 10);

    // randomized checks
    m.def("verify_classical", [](std::size_t trials, std::size_t m_min, std::size_t m_max, std::uint64_t seed) {
        return reports(verify_classical(trials, m_min, m_max, seed));
    }, py::arg("trials") = 10000, py::arg("m_min") = 2, py::arg("m_max") = 16, py::arg("seed") = kDefaultSeed);
    m.def("verify_quantum", [](std::size_t trials, std::size_t d_min, std::size_t d_max, std::uint64_t seed) {
        return reports(verify_quantum(trials, d_min, d_max, seed));
    }, py::arg("trials") = 1000, py::arg("d_min") = 2, py::arg("d_max") = 4, py::arg("seed") = kDefaultSeed);
}
