#include <map>
#include <stdexcept>
#include <string>

#include "dk/algebra.hpp"
#include "dk/enriched.hpp"
#include "dk/json_io.hpp"
#include "dk/modules.hpp"
#include "dk/simplicial.hpp"
#include "dk/suites.hpp"
#include "doctest.h"

using dk::ChainComplex;
using dk::ChainMap;
using dk::Int;
using dk::IntMat;

namespace {

// Runs fn, which must throw, and returns the exception text for substring
// checks that stay stable across doctest versions.
template <typename Fn>
std::string thrown_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

dk::SimplicialRing dual_numbers(int T) {
    return dk::constant_ring(dk::dual_numbers_mult(), IntMat::from_rows(2, 1, {1, 0}), T);
}

}  // namespace

TEST_CASE("every payload kind reparses to the same canonical text") {
    auto roundtrip = [](const dk::Json& j, auto parse) {
        const std::string text = dk::canonical_json(j);
        const dk::Json reparsed = dk::to_json(parse(dk::parse_text(text)));
        CHECK(dk::canonical_json(reparsed) == text);
        CHECK(dk::content_hash(reparsed) == dk::content_hash(j));
    };

    ChainComplex S1 = ChainComplex::sphere(1, 3);
    roundtrip(dk::to_json(S1), dk::complex_from_json);
    roundtrip(dk::to_json(ChainMap::identity(S1)), dk::chain_map_from_json);

    dk::SimplicialAbGroup simplex = dk::SimplicialAbGroup::standard_simplex(1, 3);
    roundtrip(dk::to_json(simplex), dk::simplicial_from_json);
    roundtrip(dk::to_json(dk::SimplicialMap::identity(simplex)), dk::simplicial_map_from_json);

    dk::DGAlgebra R = dk::square_zero(ChainComplex::sphere(1, 2));
    roundtrip(dk::to_json(R), dk::dga_from_json);
    roundtrip(dk::to_json(dual_numbers(2)), dk::simplicial_ring_from_json);

    roundtrip(dk::to_json(dk::unit_graph(2, 2)), dk::igraph_from_json);
    roundtrip(dk::to_json(dk::category_from_monoid(R)), dk::icategory_from_json);
}

TEST_CASE("module payloads resolve their ring through the content hash") {
    dk::DGAlgebra R = dk::square_zero(ChainComplex::sphere(1, 2));
    dk::DGModule M = dk::DGModule::ring_as_module(R);
    const dk::Json j = dk::to_json(M);

    std::map<std::string, dk::DGAlgebra> rings{{dk::content_hash(dk::to_json(R)), R}};
    dk::DGModule back = dk::dg_module_from_json(j, rings);
    CHECK(dk::canonical_json(dk::to_json(back)) == dk::canonical_json(j));

    const std::map<std::string, dk::DGAlgebra> empty;
    CHECK(thrown_message([&] { dk::dg_module_from_json(j, empty); })
              .find("unknown ring reference") != std::string::npos);

    dk::SimplicialRing A = dual_numbers(2);
    dk::SimplicialModule N = dk::SimplicialModule::ring_as_module(A);
    std::map<std::string, dk::SimplicialRing> srings{{dk::content_hash(dk::to_json(A)), A}};
    dk::SimplicialModule nback = dk::simplicial_module_from_json(dk::to_json(N), srings);
    CHECK(dk::canonical_json(dk::to_json(nback)) == dk::canonical_json(dk::to_json(N)));
}

TEST_CASE("entries beyond 64 bits serialize as decimal strings and reparse") {
    const Int big("1208925819614629174706176");  // 2^80
    ChainComplex C;
    C.T = 1;
    C.ranks = {1, 1};
    C.d.assign(2, IntMat(0, 0));
    C.d[1] = IntMat(1, 1);
    C.d[1].at(0, 0) = big;
    C.validate();

    const std::string text = dk::canonical_json(dk::to_json(C));
    CHECK(text.find("\"1208925819614629174706176\"") != std::string::npos);
    ChainComplex back = dk::complex_from_json(dk::parse_text(text));
    CHECK(back.d[1].at(0, 0) == big);
    CHECK(back.d[1].at(0, 0) == -(-big));

    CHECK(dk::int_from_json(dk::Json(42)) == Int(42));
    CHECK(dk::int_from_json(dk::Json("-1208925819614629174706176")) == -big);
    CHECK(thrown_message([] { dk::int_from_json(dk::Json("12x")); })
              .find("not a decimal integer") != std::string::npos);
}

TEST_CASE("parsers reject payloads that break the defining identities") {
    const std::string nonsquare =
        R"({"kind":"complex","truncation":2,"ranks":[1,1,1],"diffs":[[[1]],[[1]]]})";
    CHECK(thrown_message([&] { dk::complex_from_json(dk::parse_text(nonsquare)); })
              .find("d∘d nonzero in degree 2") != std::string::npos);

    dk::Json j = dk::to_json(dk::SimplicialAbGroup::standard_simplex(1, 2));
    j["faces"][0][0][0][0] = 7;  // corrupt d_0 at level 1
    CHECK(thrown_message([&] { dk::simplicial_from_json(j); })
              .find("identity fails at level") != std::string::npos);

    CHECK(thrown_message([] { dk::complex_from_json(dk::parse_text(R"({"kind":"igraph"})")); })
              .find("expected kind 'complex'") != std::string::npos);
    CHECK(thrown_message([] { dk::parse_text("{nope"); }).find("json parse error") !=
          std::string::npos);
}

TEST_CASE("content hashes ignore formatting but see every entry") {
    const dk::Json j = dk::to_json(ChainComplex::sphere(2, 3));
    const std::string h = dk::content_hash(j);
    CHECK(h.substr(0, 6) == "fnv1a:");
    CHECK(h.size() == 6 + 16);

    // Pretty-printed text with the same content hashes identically.
    CHECK(dk::content_hash(dk::parse_text(j.dump(2))) == h);

    dk::Json other = dk::to_json(ChainComplex::sphere(1, 3));
    CHECK(dk::content_hash(other) != h);
}

TEST_CASE("suite reports are deterministic and canonicalize without timings") {
    dk::SuiteOptions opt;
    opt.seed = 7;
    opt.T = 3;
    opt.max_rank = 2;
    opt.cases = 3;

    const dk::Json r1 = dk::run_suite("linalg", opt);
    const dk::Json r2 = dk::run_suite("linalg", opt);
    CHECK(dk::report_ok(r1));
    CHECK(r1.contains("timings"));
    const std::string c1 = dk::canonical_json(r1);
    CHECK(c1 == dk::canonical_json(r2));
    CHECK(c1.find("timings") == std::string::npos);
    CHECK(c1.find("\"suite\":\"linalg\"") != std::string::npos);

    opt.seed = 8;
    CHECK(dk::canonical_json(dk::run_suite("linalg", opt)) != c1);

    CHECK_THROWS_AS(dk::run_suite("no-such-suite", opt), std::invalid_argument);
}
