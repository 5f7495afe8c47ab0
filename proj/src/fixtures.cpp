#include "dk/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "dk/algebra.hpp"
#include "dk/enriched.hpp"
#include "dk/modules.hpp"
#include "dk/simplicial.hpp"

namespace dk {

std::vector<std::string> fixture_names() {
    return {"sphere0",     "sphere1",    "sphere2",          "disk1",
            "disk2",       "simplex0",   "simplex1",         "simplex2",
            "simplex-identity", "projection", "square-zero",      "dual-numbers",
            "ring-module", "simplicial-module", "unit-graph", "free-arrow"};
}

Json make_fixture(const std::string& name, int T) {
    if (name == "sphere0") return to_json(ChainComplex::sphere(0, T));
    if (name == "sphere1") return to_json(ChainComplex::sphere(1, T));
    if (name == "sphere2") return to_json(ChainComplex::sphere(std::min(2, T), T));
    if (name == "disk1") return to_json(ChainComplex::disk(std::min(1, T), T));
    if (name == "disk2") return to_json(ChainComplex::disk(std::min(2, T), T));
    if (name == "simplex0") return to_json(SimplicialAbGroup::standard_simplex(0, T));
    if (name == "simplex1") return to_json(SimplicialAbGroup::standard_simplex(1, T));
    if (name == "simplex2")
        return to_json(SimplicialAbGroup::standard_simplex(std::min(2, T), T));
    if (name == "simplex-identity")
        return to_json(SimplicialMap::identity(SimplicialAbGroup::standard_simplex(1, T)));
    if (name == "projection") {
        ChainMap proj = ChainMap::zero_map(ChainComplex::disk(1, T), ChainComplex::sphere(1, T));
        proj.f[1] = IntMat::identity(1);
        return to_json(proj);
    }
    if (name == "square-zero") return to_json(square_zero(ChainComplex::sphere(1, T)));
    if (name == "dual-numbers")
        return to_json(constant_ring(dual_numbers_mult(), IntMat::from_rows(2, 1, {1, 0}), T));
    if (name == "ring-module")
        return to_json(DGModule::ring_as_module(square_zero(ChainComplex::sphere(1, T))));
    if (name == "simplicial-module")
        return to_json(SimplicialModule::ring_as_module(
            constant_ring(dual_numbers_mult(), IntMat::from_rows(2, 1, {1, 0}), T)));
    if (name == "unit-graph") return to_json(unit_graph(2, T));
    if (name == "free-arrow") {
        const int Ta = std::max(T, 2);
        IGraph gen;
        gen.nobj = 2;
        gen.T = Ta;
        gen.entry.assign(2, std::vector<ChainComplex>(2, ChainComplex::zero_complex(Ta)));
        gen.entry[0][1] = ChainComplex::disk(2, Ta);
        return to_json(free_category(gen));
    }
    std::string known;
    for (const std::string& n : fixture_names()) known += " " + n;
    throw std::runtime_error("unknown fixture '" + name + "' (try:" + known + ")");
}

}  // namespace dk
