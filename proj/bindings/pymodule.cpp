// Python bindings: a thin string-in/string-out mirror of the CLI verbs.
// Every payload crosses the boundary as JSON text and every result comes
// back canonicalized, so Python callers compose with files, the CLI, and
// content hashes without a second object model.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "dk/algebra.hpp"
#include "dk/doldkan.hpp"
#include "dk/enriched.hpp"
#include "dk/fixtures.hpp"
#include "dk/json_io.hpp"
#include "dk/suites.hpp"

namespace py = pybind11;
using dk::Json;

namespace {

std::string canon(const Json& j) { return dk::canonical_json(j); }

std::string py_canonical(const std::string& text) { return canon(dk::parse_text(text)); }

std::string py_content_hash(const std::string& text) {
    return dk::content_hash(dk::parse_text(text));
}

std::string py_fixture(const std::string& name, int truncation) {
    return canon(dk::make_fixture(name, truncation));
}

std::string py_normalize(const std::string& text) {
    dk::SimplicialAbGroup A = dk::simplicial_from_json(dk::parse_text(text));
    return canon(dk::to_json(dk::normalize(A).N));
}

std::string py_gamma(const std::string& text, int truncation) {
    dk::ChainComplex C = dk::complex_from_json(dk::parse_text(text));
    return canon(dk::to_json(dk::gamma(C, truncation >= 0 ? truncation : C.T).G));
}

std::string py_homology(const std::string& text) {
    const Json j = dk::parse_text(text);
    const std::string kind = dk::kind_of(j);
    dk::ChainComplex C;
    if (kind == "complex")
        C = dk::complex_from_json(j);
    else if (kind == "simplicial")
        C = dk::normalize(dk::simplicial_from_json(j)).N;
    else if (kind == "dga")
        C = dk::dga_from_json(j).R;
    else if (kind == "simplicial_ring")
        C = dk::normalize(dk::simplicial_ring_from_json(j).A).N;
    else
        throw std::runtime_error("homology expects a complex, simplicial group, or ring");
    return dk::homology_table(C);
}

std::string py_tensor(const std::string& a, const std::string& b) {
    const Json ja = dk::parse_text(a), jb = dk::parse_text(b);
    if (dk::kind_of(ja) == "complex")
        return canon(dk::to_json(dk::tensor(dk::complex_from_json(ja), dk::complex_from_json(jb))));
    return canon(
        dk::to_json(dk::tensor(dk::simplicial_from_json(ja), dk::simplicial_from_json(jb))));
}

std::string py_shuffle(const std::string& a, const std::string& b) {
    return canon(dk::to_json(dk::shuffle(dk::simplicial_from_json(dk::parse_text(a)),
                                         dk::simplicial_from_json(dk::parse_text(b)))));
}

std::string py_aw(const std::string& a, const std::string& b) {
    return canon(dk::to_json(dk::alexander_whitney(dk::simplicial_from_json(dk::parse_text(a)),
                                                   dk::simplicial_from_json(dk::parse_text(b)))));
}

std::string py_gamma_ring(const std::string& text, int truncation) {
    dk::DGAlgebra R = dk::dga_from_json(dk::parse_text(text));
    const int T = truncation >= 0 ? std::min(truncation, R.R.T) : R.R.T;
    return canon(dk::to_json(dk::gamma_ring(R, T).ring));
}

std::string py_normalize_ring(const std::string& text) {
    dk::SimplicialRing S = dk::simplicial_ring_from_json(dk::parse_text(text));
    return canon(dk::to_json(dk::normalize_ring(S).dga));
}

std::string py_graph_tensor(const std::string& a, const std::string& b) {
    return canon(dk::to_json(dk::graph_tensor(dk::igraph_from_json(dk::parse_text(a)),
                                              dk::igraph_from_json(dk::parse_text(b)))));
}

std::string py_run_suite(const std::string& name, std::uint64_t seed, int truncation, int max_rank,
                         int cases) {
    dk::SuiteOptions opt;
    opt.seed = seed;
    if (truncation >= 0) opt.T = truncation;
    if (max_rank >= 1) opt.max_rank = max_rank;
    if (cases >= 0) opt.cases = cases;
    return canon(dk::run_suite(name, opt));
}

}  // namespace

PYBIND11_MODULE(_dkcore, m) {
    m.doc() = "exact Dold-Kan correspondence toolkit (JSON string API)";
    m.def("canonical", &py_canonical, py::arg("text"),
          "reparse JSON text into its canonical serialization");
    m.def("content_hash", &py_content_hash, py::arg("text"),
          "content hash of the canonical form of a payload");
    m.def("fixture", &py_fixture, py::arg("name"), py::arg("truncation") = 3,
          "named example payload");
    m.def("fixture_names", &dk::fixture_names);
    m.def("normalize", &py_normalize, py::arg("simplicial"),
          "Moore complex of a simplicial abelian group");
    m.def("gamma", &py_gamma, py::arg("complex"), py::arg("truncation") = -1,
          "Dold-Kan inverse of a chain complex");
    m.def("homology", &py_homology, py::arg("payload"),
          "homology table of a complex, simplicial group, or ring");
    m.def("tensor", &py_tensor, py::arg("a"), py::arg("b"),
          "tensor product of two complexes or two simplicial groups");
    m.def("shuffle", &py_shuffle, py::arg("a"), py::arg("b"),
          "shuffle map of two simplicial abelian groups");
    m.def("aw", &py_aw, py::arg("a"), py::arg("b"),
          "Alexander-Whitney map of two simplicial abelian groups");
    m.def("gamma_ring", &py_gamma_ring, py::arg("dga"), py::arg("truncation") = -1,
          "simplicial ring Gamma(R) of a dga R");
    m.def("normalize_ring", &py_normalize_ring, py::arg("simplicial_ring"),
          "dga structure on the Moore complex of a simplicial ring");
    m.def("graph_tensor", &py_graph_tensor, py::arg("a"), py::arg("b"),
          "tensor product of two I-graphs");
    m.def("run_suite", &py_run_suite, py::arg("name"), py::arg("seed") = 1,
          py::arg("truncation") = -1, py::arg("max_rank") = -1, py::arg("cases") = -1,
          "run a verification suite and return its canonical report");
    m.def("suite_names", &dk::suite_names);
}
