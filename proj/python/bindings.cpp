#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "autdec/bp.hpp"
#include "autdec/codes.hpp"
#include "autdec/dem_io.hpp"
#include "autdec/ensemble.hpp"
#include "autdec/gf2.hpp"
#include "autdec/noise_sim.hpp"
#include "autdec/osd.hpp"
#include "autdec/stab_map.hpp"
#include "autdec/tanner_aut.hpp"

namespace py = pybind11;
using namespace autdec;

namespace {

// Dense python-side representation: matrices as lists of 0/1 rows, vectors as
// 0/1 lists, permutations as image lists.

BinaryMatrix matrix_in(const std::vector<std::vector<int>>& rows) {
    return BinaryMatrix::from_rows(rows);
}

std::vector<std::vector<int>> matrix_out(const BinaryMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.get(i, j);
    return rows;
}

BinaryVector vector_in(const std::vector<int>& bits) { return BinaryVector::from_bits(bits); }

std::vector<int> vector_out(const BinaryVector& v) {
    std::vector<int> bits(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v.get(i);
    return bits;
}

Permutation perm_in(const std::vector<std::uint32_t>& image) {
    return Permutation(image);
}

std::vector<std::vector<std::uint32_t>> perms_out(const std::vector<Permutation>& ps) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(ps.size());
    for (const Permutation& p : ps) out.push_back(p.image);
    return out;
}

using PriorsArg = std::variant<double, std::vector<double>>;

Priors priors_in(const PriorsArg& arg, std::size_t n) {
    if (std::holds_alternative<double>(arg)) return uniform_priors(n, std::get<double>(arg));
    const auto& probs = std::get<std::vector<double>>(arg);
    if (probs.size() != n)
        throw std::invalid_argument("priors length does not match the column count");
    return make_priors(probs);
}

CssCode load_code(const std::string& name, const std::string& manifest_text) {
    if (name == "qrm15") return build_qrm15();
    const std::string& text = manifest_text.empty() ? builtin_code_manifest() : manifest_text;
    for (const BbSpec& spec : parse_code_manifest(text))
        if (spec.name == name) return build_from_spec(spec);
    throw std::invalid_argument("unknown code '" + name + "'");
}

EnsembleOptions ensemble_options(const std::string& inner, const std::string& metric) {
    EnsembleOptions opts;
    opts.inner = parse_inner_decoder(inner);
    if (metric == "min_weight")
        opts.metric = MetricKind::min_weight;
    else if (metric == "prior_likelihood")
        opts.metric = MetricKind::prior_likelihood;
    else
        throw std::invalid_argument("metric must be min_weight or prior_likelihood");
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "automorphism-ensemble decoder core";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DemParseError>(m, "DemParseError");
    py::register_exception<ManifestParseError>(m, "ManifestParseError");

    py::class_<CssCode>(m, "Code")
        .def_readonly("name", &CssCode::name)
        .def_readonly("n", &CssCode::n)
        .def_readonly("k", &CssCode::k)
        .def_property_readonly("hx", [](const CssCode& c) { return matrix_out(c.hx); })
        .def_property_readonly("hz", [](const CssCode& c) { return matrix_out(c.hz); })
        .def_property_readonly("lx", [](const CssCode& c) { return matrix_out(c.lx); })
        .def_property_readonly("lz", [](const CssCode& c) { return matrix_out(c.lz); })
        .def("__repr__", [](const CssCode& c) {
            return "Code(" + c.name + ", n=" + std::to_string(c.n) +
                   ", k=" + std::to_string(c.k) + ")";
        });

    py::class_<SimSummary>(m, "SimSummary")
        .def_readonly("code", &SimSummary::code)
        .def_readonly("decoder", &SimSummary::decoder)
        .def_readonly("ensemble", &SimSummary::ensemble)
        .def_readonly("p", &SimSummary::p)
        .def_readonly("shots", &SimSummary::shots)
        .def_readonly("failures", &SimSummary::failures)
        .def_readonly("p_logical", &SimSummary::p_logical)
        .def_readonly("wilson_lo", &SimSummary::wilson_lo)
        .def_readonly("wilson_hi", &SimSummary::wilson_hi)
        .def_readonly("max_iters", &SimSummary::max_iters)
        .def_readonly("seed", &SimSummary::seed)
        .def("csv", [](const SimSummary& s) { return csv_row(s); })
        .def("__repr__", [](const SimSummary& s) { return "SimSummary(" + csv_row(s) + ")"; });

    m.def("build_qrm15", &build_qrm15, "The 15-qubit quantum Reed-Muller code.");
    m.def(
        "build_bb",
        [](std::size_t l, std::size_t mm,
           const std::vector<std::pair<unsigned, unsigned>>& a_exps,
           const std::vector<std::pair<unsigned, unsigned>>& b_exps) {
            return build_bb(l, mm, a_exps, b_exps);
        },
        py::arg("l"), py::arg("m"), py::arg("a_exps"), py::arg("b_exps"),
        "Bivariate bicycle code from shift-exponent pairs.");
    m.def("load_code", &load_code, py::arg("name"), py::arg("manifest") = std::string(),
          "Look a code up by name, in the bundled manifest unless one is given.");
    m.def("builtin_manifest", [] { return builtin_code_manifest(); });

    m.def(
        "code_automorphisms",
        [](const CssCode& code, std::size_t k, std::uint64_t seed,
           const std::vector<std::vector<std::uint32_t>>& include) {
            std::vector<Permutation> inc;
            for (const auto& img : include) inc.push_back(perm_in(img));
            return perms_out(assemble_code_automorphisms(code, k, seed, inc));
        },
        py::arg("code"), py::arg("k"), py::arg("seed") = 1,
        py::arg("include") = std::vector<std::vector<std::uint32_t>>(),
        "k column permutations preserving both check row spaces; entry 0 is the identity.");
    m.def(
        "matrix_automorphisms",
        [](const std::vector<std::vector<int>>& h, std::size_t k, std::uint64_t seed) {
            return perms_out(assemble_matrix_automorphisms(matrix_in(h), k, seed));
        },
        py::arg("h"), py::arg("k"), py::arg("seed") = 1,
        "k column permutations preserving the row space of a single matrix.");
    m.def(
        "graph_group_order",
        [](const std::vector<std::vector<int>>& h, std::size_t cap) {
            const GeneratorSet gens = find_automorphism_generators(build_tanner(matrix_in(h)));
            const GroupOrderResult r = group_order(gens.generators, cap);
            return py::make_tuple(r.order, r.overflowed);
        },
        py::arg("h"), py::arg("cap") = 1000000,
        "(order, overflowed) of the Tanner-graph automorphism group of h.");

    m.def(
        "syndrome_map",
        [](const std::vector<std::vector<int>>& h, const std::vector<std::uint32_t>& perm) {
            const SyndromeMap map = compute_stab_map(matrix_in(h), perm_in(perm));
            return py::make_tuple(matrix_out(map.u), map.is_row_permutation);
        },
        py::arg("h"), py::arg("perm"),
        "(U, is_row_permutation) with U*h equal to h with permuted columns.");

    m.def(
        "bp_decode",
        [](const std::vector<std::vector<int>>& h, const PriorsArg& priors,
           const std::vector<int>& syndrome, std::size_t max_iters, double scaling) {
            const BinaryMatrix hm = matrix_in(h);
            BpDecoder dec(hm, priors_in(priors, hm.cols()), BpConfig{max_iters, scaling});
            const BpResult r = dec.decode(vector_in(syndrome));
            py::dict out;
            out["hard"] = vector_out(r.hard);
            out["converged"] = r.converged;
            out["iterations"] = r.iterations_used;
            out["posterior_llrs"] = r.posterior_llrs;
            return out;
        },
        py::arg("h"), py::arg("priors"), py::arg("syndrome"), py::arg("max_iters") = 15,
        py::arg("scaling") = 1.0,
        "Flooding min-sum decoding; priors is one probability or one per column.");

    m.def(
        "osd_decode",
        [](const std::vector<std::vector<int>>& h, const std::vector<double>& posterior_llrs,
           const PriorsArg& priors, const std::vector<int>& syndrome, std::size_t order) {
            const BinaryMatrix hm = matrix_in(h);
            return vector_out(osd_decode(hm, posterior_llrs, priors_in(priors, hm.cols()),
                                         vector_in(syndrome), OsdConfig{order}));
        },
        py::arg("h"), py::arg("posterior_llrs"), py::arg("priors"), py::arg("syndrome"),
        py::arg("order") = 0,
        "Ordered-statistics correction guided by posterior reliabilities.");

    m.def(
        "ensemble_decode",
        [](const std::vector<std::vector<int>>& h, const PriorsArg& priors,
           const std::vector<std::vector<std::uint32_t>>& auts,
           const std::vector<int>& syndrome, const std::string& inner,
           const std::string& metric, std::size_t max_iters, double scaling,
           std::size_t workers) {
            const BinaryMatrix hm = matrix_in(h);
            std::vector<Permutation> perms;
            for (const auto& img : auts) perms.push_back(perm_in(img));
            const EnsembleDecoder ens(hm, priors_in(priors, hm.cols()), perms,
                                      BpConfig{max_iters, scaling},
                                      ensemble_options(inner, metric));
            const DecodeOutcome out = ens.decode(vector_in(syndrome), workers);
            py::dict d;
            d["correction"] = vector_out(out.correction);
            d["success"] = out.success_flag;
            d["winner"] = out.winner;
            d["candidates"] = out.candidates_considered;
            return d;
        },
        py::arg("h"), py::arg("priors"), py::arg("auts"), py::arg("syndrome"),
        py::arg("inner") = "bp", py::arg("metric") = "min_weight", py::arg("max_iters") = 15,
        py::arg("scaling") = 1.0, py::arg("workers") = 1,
        "One decode through every automorphism view; auts[0] must be the identity.");

    m.def(
        "run_capacity",
        [](const CssCode& code, const std::string& decoder, double p, std::size_t shots,
           std::uint64_t seed, std::size_t workers, std::size_t max_iters, double scaling) {
            SimOptions opts;
            opts.workers = workers;
            opts.bp_cfg = BpConfig{max_iters, scaling};
            return run_capacity_experiment(code, decoder, p, shots, seed, opts);
        },
        py::arg("code"), py::arg("decoder"), py::arg("p"), py::arg("shots"),
        py::arg("seed") = 1, py::arg("workers") = 1, py::arg("max_iters") = 15,
        py::arg("scaling") = 1.0,
        "Depolarizing code-capacity run; decoder like 'bp', 'bp+osd0' or 'autbp-8'.");

    m.def(
        "run_dem",
        [](const std::string& dem_text, const std::string& decoder, std::size_t shots,
           std::uint64_t seed, std::size_t workers, const std::string& label) {
            SimOptions opts;
            opts.workers = workers;
            opts.label = label;
            return run_dem_experiment(parse_dem(dem_text), decoder, shots, seed, opts);
        },
        py::arg("dem_text"), py::arg("decoder"), py::arg("shots"), py::arg("seed") = 1,
        py::arg("workers") = 1, py::arg("label") = std::string("dem"),
        "Monte-Carlo run over the fault mechanisms of a detector error model.");

    m.def(
        "parse_dem",
        [](const std::string& text) {
            const DetectorErrorModel dem = parse_dem(text);
            py::dict d;
            d["h"] = matrix_out(dem.h);
            d["priors"] = dem.priors;
            d["observables"] = matrix_out(dem.observables);
            return d;
        },
        py::arg("text"), "Detector matrix, fault priors and observable matrix of a model.");
    m.def(
        "write_dem",
        [](const std::vector<std::vector<int>>& h, const std::vector<double>& priors,
           const std::vector<std::vector<int>>& observables) {
            DetectorErrorModel dem{matrix_in(h), priors, matrix_in(observables)};
            return write_dem(dem);
        },
        py::arg("h"), py::arg("priors"), py::arg("observables"));

    m.def("wilson_interval", &wilson_interval, py::arg("failures"), py::arg("shots"),
          py::arg("z") = 1.96, "95% score interval for a failure count by default.");
    m.def("csv_header", &csv_header);
}
