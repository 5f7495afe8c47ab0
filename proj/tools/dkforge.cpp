// dkforge: command-line front end.
//
//   dkforge <verb> [--in FILE ...] [--out FILE] [--truncation N] [--seed N] [--suite NAME]
//
// Verbs: normalize, gamma, shuffle, aw, homology, gamma-ring, normalize-ring,
// tensor, graph-tensor, check, validate, make.  Inputs are JSON payloads with
// a "kind" field; outputs are canonical JSON (sorted keys, no insignificant
// whitespace).  Exit codes: 0 success, 1 suite check failure, 2 usage or
// validation error.  Module payloads reference their ring by content hash, so
// the ring file must be listed before the module file.  The environment
// variable DKFORGE_MAX_RANK caps the size of random suite instances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dk/fixtures.hpp"
#include "dk/suites.hpp"

namespace {

using dk::Json;

struct Workspace {
    std::vector<Json> inputs;  // parsed payloads, in --in order
    std::map<std::string, dk::DGAlgebra> dga_rings;
    std::map<std::string, dk::SimplicialRing> s_rings;
};

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return dk::parse_text(buf.str());
}

// Parse and fully validate one payload; rings are registered under the
// content hash of both the file's form and the reserialized form.
void admit(Workspace& ws, const Json& j) {
    const std::string kind = dk::kind_of(j);
    if (kind == "complex") {
        dk::complex_from_json(j);
    } else if (kind == "chain_map") {
        dk::chain_map_from_json(j);
    } else if (kind == "simplicial") {
        dk::simplicial_from_json(j);
    } else if (kind == "simplicial_map") {
        dk::simplicial_map_from_json(j);
    } else if (kind == "dga") {
        dk::DGAlgebra R = dk::dga_from_json(j);
        ws.dga_rings[dk::content_hash(j)] = R;
        ws.dga_rings[dk::content_hash(dk::to_json(R))] = R;
    } else if (kind == "simplicial_ring") {
        dk::SimplicialRing S = dk::simplicial_ring_from_json(j);
        ws.s_rings[dk::content_hash(j)] = S;
        ws.s_rings[dk::content_hash(dk::to_json(S))] = S;
    } else if (kind == "dg_module") {
        dk::dg_module_from_json(j, ws.dga_rings);
    } else if (kind == "simplicial_module") {
        dk::simplicial_module_from_json(j, ws.s_rings);
    } else if (kind == "igraph") {
        dk::igraph_from_json(j);
    } else if (kind == "icategory") {
        dk::icategory_from_json(j);
    } else {
        throw std::runtime_error("schema violation: unknown kind '" + kind + "'");
    }
    ws.inputs.push_back(j);
}

Workspace load(const std::vector<std::string>& files) {
    Workspace ws;
    for (const std::string& f : files) {
        try {
            admit(ws, load_file(f));
        } catch (const std::exception& e) {
            throw std::runtime_error(f + ": " + e.what());
        }
    }
    return ws;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write '" + out + "'");
    os << text << "\n";
}

const Json& input_of_kind(const Workspace& ws, size_t i, const std::string& kind) {
    if (i >= ws.inputs.size())
        throw std::runtime_error("expected at least " + std::to_string(i + 1) +
                                 " --in file(s) of kind '" + kind + "'");
    if (dk::kind_of(ws.inputs[i]) != kind)
        throw std::runtime_error("input " + std::to_string(i + 1) + " must have kind '" + kind +
                                 "', got '" + dk::kind_of(ws.inputs[i]) + "'");
    return ws.inputs[i];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dold-Kan correspondence toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> in_files;
    std::string out_file;
    int truncation = -1;  // -1: take the truncation from the input
    std::uint64_t seed = 1;
    std::string suite;
    int cases = 50;
    std::string fixture;

    auto add_common = [&](CLI::App* sub, bool wants_in) {
        if (wants_in) sub->add_option("--in", in_files, "input JSON payload file(s)");
        sub->add_option("--out", out_file, "output file (default: stdout)");
        sub->add_option("--truncation", truncation, "truncation degree");
        return sub;
    };

    CLI::App* c_normalize = add_common(app.add_subcommand(
        "normalize", "Moore complex of a simplicial abelian group"), true);
    CLI::App* c_gamma = add_common(app.add_subcommand(
        "gamma", "Dold-Kan inverse of a chain complex"), true);
    CLI::App* c_shuffle = add_common(app.add_subcommand(
        "shuffle", "shuffle map of two simplicial abelian groups"), true);
    CLI::App* c_aw = add_common(app.add_subcommand(
        "aw", "Alexander-Whitney map of two simplicial abelian groups"), true);
    CLI::App* c_homology = add_common(app.add_subcommand(
        "homology", "homology table of a complex, simplicial group, or dga"), true);
    CLI::App* c_gamma_ring = add_common(app.add_subcommand(
        "gamma-ring", "simplicial ring Gamma(R) of a dga R"), true);
    CLI::App* c_normalize_ring = add_common(app.add_subcommand(
        "normalize-ring", "dga structure on the Moore complex of a simplicial ring"), true);
    CLI::App* c_tensor = add_common(app.add_subcommand(
        "tensor", "tensor product of two complexes or two simplicial groups"), true);
    CLI::App* c_graph_tensor = add_common(app.add_subcommand(
        "graph-tensor", "tensor product of two I-graphs"), true);
    CLI::App* c_validate = add_common(app.add_subcommand(
        "validate", "parse, validate, and canonicalize payloads"), true);

    CLI::App* c_check = app.add_subcommand("check", "run a verification suite");
    c_check->add_option("--suite", suite, "suite name")->required();
    c_check->add_option("--seed", seed, "random seed");
    c_check->add_option("--truncation", truncation, "truncation degree (default 4)");
    c_check->add_option("--cases", cases, "random cases per property");
    c_check->add_option("--out", out_file, "output file for the report (default: stdout)");

    CLI::App* c_make = app.add_subcommand("make", "write a named example payload");
    c_make->add_option("fixture", fixture, "fixture name")->required();
    c_make->add_option("--out", out_file, "output file (default: stdout)");
    c_make->add_option("--truncation", truncation, "truncation degree (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_check->parsed()) {
            dk::SuiteOptions opt;
            opt.seed = seed;
            if (truncation >= 0) opt.T = truncation;
            opt.cases = cases;
            if (const char* cap = std::getenv("DKFORGE_MAX_RANK"))
                opt.max_rank = std::min(opt.max_rank, std::max(1, std::atoi(cap)));
            Json report = dk::run_suite(suite, opt);
            emit(out_file, dk::canonical_json(report));
            std::cerr << "suite " << suite << ": " << report["counts"]["pass"] << " passed, "
                      << report["counts"]["fail"] << " failed in "
                      << report["timings"]["total_ms"] << " ms\n";
            return dk::report_ok(report) ? 0 : 1;
        }
        if (c_make->parsed()) {
            int T = truncation >= 0 ? truncation : 3;
            emit(out_file, dk::canonical_json(dk::make_fixture(fixture, T)));
            return 0;
        }

        Workspace ws = load(in_files);
        if (c_validate->parsed()) {
            for (const Json& j : ws.inputs)
                std::cerr << "ok " << dk::kind_of(j) << " " << dk::content_hash(j) << "\n";
            if (!out_file.empty()) {
                if (ws.inputs.size() != 1)
                    throw std::runtime_error("--out requires exactly one --in payload");
                emit(out_file, dk::canonical_json(ws.inputs[0]));
            }
            return 0;
        }
        if (c_normalize->parsed()) {
            dk::SimplicialAbGroup A = dk::simplicial_from_json(input_of_kind(ws, 0, "simplicial"));
            emit(out_file, dk::canonical_json(dk::to_json(dk::normalize(A).N)));
            return 0;
        }
        if (c_gamma->parsed()) {
            dk::ChainComplex C = dk::complex_from_json(input_of_kind(ws, 0, "complex"));
            int T = truncation >= 0 ? truncation : C.T;
            emit(out_file, dk::canonical_json(dk::to_json(dk::gamma(C, T).G)));
            return 0;
        }
        if (c_shuffle->parsed() || c_aw->parsed()) {
            dk::SimplicialAbGroup A = dk::simplicial_from_json(input_of_kind(ws, 0, "simplicial"));
            dk::SimplicialAbGroup B = dk::simplicial_from_json(input_of_kind(ws, 1, "simplicial"));
            dk::ChainMap f = c_shuffle->parsed() ? dk::shuffle(A, B) : dk::alexander_whitney(A, B);
            emit(out_file, dk::canonical_json(dk::to_json(f)));
            return 0;
        }
        if (c_homology->parsed()) {
            if (ws.inputs.empty()) throw std::runtime_error("homology expects one --in payload");
            const Json& j = ws.inputs[0];
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
            std::string table = dk::homology_table(C);
            if (out_file.empty())
                std::cout << table;
            else {
                std::ofstream os(out_file);
                if (!os) throw std::runtime_error("cannot write '" + out_file + "'");
                os << table;
            }
            return 0;
        }
        if (c_gamma_ring->parsed()) {
            dk::DGAlgebra R = dk::dga_from_json(input_of_kind(ws, 0, "dga"));
            int T = truncation >= 0 ? std::min(truncation, R.R.T) : R.R.T;
            emit(out_file, dk::canonical_json(dk::to_json(dk::gamma_ring(R, T).ring)));
            return 0;
        }
        if (c_normalize_ring->parsed()) {
            dk::SimplicialRing S =
                dk::simplicial_ring_from_json(input_of_kind(ws, 0, "simplicial_ring"));
            emit(out_file, dk::canonical_json(dk::to_json(dk::normalize_ring(S).dga)));
            return 0;
        }
        if (c_tensor->parsed()) {
            if (ws.inputs.size() < 2) throw std::runtime_error("tensor expects two --in payloads");
            const std::string kind = dk::kind_of(ws.inputs[0]);
            if (kind == "complex") {
                dk::ChainComplex C = dk::complex_from_json(input_of_kind(ws, 0, "complex"));
                dk::ChainComplex D = dk::complex_from_json(input_of_kind(ws, 1, "complex"));
                emit(out_file, dk::canonical_json(dk::to_json(dk::tensor(C, D))));
            } else {
                dk::SimplicialAbGroup A =
                    dk::simplicial_from_json(input_of_kind(ws, 0, "simplicial"));
                dk::SimplicialAbGroup B =
                    dk::simplicial_from_json(input_of_kind(ws, 1, "simplicial"));
                emit(out_file, dk::canonical_json(dk::to_json(dk::tensor(A, B))));
            }
            return 0;
        }
        if (c_graph_tensor->parsed()) {
            dk::IGraph G = dk::igraph_from_json(input_of_kind(ws, 0, "igraph"));
            dk::IGraph H = dk::igraph_from_json(input_of_kind(ws, 1, "igraph"));
            emit(out_file, dk::canonical_json(dk::to_json(dk::graph_tensor(G, H))));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "dkforge: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
