#include "dk/enriched.hpp"

#include <vector>

#include "doctest.h"

using namespace dk;

namespace {

// Z --2--> Z in degrees 1, 0.
ChainComplex two_disk(int T) {
    ChainComplex C = ChainComplex::disk(1, T);
    C.d[1].at(0, 0) = 2;
    return C;
}

// Two-object category with identity endomorphisms, hom01 from 0 to 1, and no
// arrows back; the only nonzero compositions pair an arrow with an identity.
ICategory two_object_category(const ChainComplex& hom01) {
    int T = hom01.T;
    ChainComplex pt = ChainComplex::sphere(0, T);
    ChainComplex zero = ChainComplex::zero_complex(T);
    ICategory C;
    C.O.nobj = 2;
    C.O.T = T;
    C.O.entry = {{pt, hom01}, {zero, pt}};
    C.comp.assign(2, std::vector<std::vector<ChainMap>>(2, std::vector<ChainMap>(2)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                C.comp[i][j][k] =
                    ChainMap::zero_map(tensor(C.O.at(j, k), C.O.at(i, j)), C.O.at(i, k));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            for (int n = 0; n <= T; ++n) {
                // arrow ∘ identity and identity ∘ arrow
                C.comp[i][i][j].f[n] = IntMat::identity(C.O.at(i, j).rank(n));
                C.comp[i][j][j].f[n] = IntMat::identity(C.O.at(i, j).rank(n));
            }
        }
    C.unit = {IntMat::from_rows(1, 1, {1}), IntMat::from_rows(1, 1, {1})};
    return C;
}

// Generator graph: a degree-1 loop at 0 and a contractible pair of arrows 0→1.
IGraph loop_and_arrow_generators(int T) {
    IGraph gen;
    gen.nobj = 2;
    gen.T = T;
    gen.entry.assign(2, std::vector<ChainComplex>(2, ChainComplex::zero_complex(T)));
    gen.entry[0][0] = ChainComplex::sphere(1, T);
    gen.entry[0][1] = ChainComplex::disk(2, T);
    return gen;
}

// The collapse of loop_and_arrow_generators without the loop: the single hom
// complex 0→1 is a contractible disk.
IGraph arrow_only_generators(int T) {
    IGraph gen;
    gen.nobj = 2;
    gen.T = T;
    gen.entry.assign(2, std::vector<ChainComplex>(2, ChainComplex::zero_complex(T)));
    gen.entry[0][1] = ChainComplex::disk(2, T);
    return gen;
}

// A small corpus of 2-object graphs with entry ranks at most 2.
std::vector<IGraph> graph_corpus() {
    int T = 3;
    IGraph A;
    A.nobj = 2;
    A.T = T;
    A.entry = {{ChainComplex::sphere(0, T), ChainComplex::disk(1, T)},
               {ChainComplex::zero_complex(T), ChainComplex::sphere(1, T)}};
    IGraph B;
    B.nobj = 2;
    B.T = T;
    B.entry = {{ChainComplex::disk(2, T),
                ChainComplex::direct_sum(ChainComplex::sphere(0, T), ChainComplex::sphere(1, T))},
               {ChainComplex::sphere(2, T),
                ChainComplex::direct_sum(ChainComplex::sphere(0, T), ChainComplex::sphere(0, T))}};
    IGraph C;
    C.nobj = 2;
    C.T = T;
    C.entry = {{ChainComplex::direct_sum(ChainComplex::disk(1, T), ChainComplex::sphere(0, T)),
                ChainComplex::zero_complex(T)},
               {two_disk(T), ChainComplex::disk(2, T)}};
    return {A, B, C};
}

bool complexes_identical(const ChainComplex& C, const ChainComplex& D) {
    if (!same_shape(C, D)) return false;
    for (int n = 1; n <= C.T; ++n)
        if (C.d[n] != D.d[n]) return false;
    return true;
}

}  // namespace

TEST_CASE("graph tensor: rank formula, units, singleton reduction") {
    std::vector<IGraph> corpus = graph_corpus();
    for (const IGraph& G : corpus) G.validate();

    IGraph U = unit_graph(2, 3);
    U.validate();
    CHECK(U.at(0, 0).rank(0) == 1);
    CHECK(U.at(0, 1).rank(0) == 0);

    for (const IGraph& G : corpus)
        for (const IGraph& H : corpus) {
            IGraph P = graph_tensor(G, H);
            P.validate();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int n = 0; n <= 3; ++n) {
                        int expect = 0;
                        for (int k = 0; k < 2; ++k)
                            for (int p = 0; p <= n; ++p)
                                expect += G.at(k, j).rank(p) * H.at(i, k).rank(n - p);
                        CHECK(P.at(i, j).rank(n) == expect);
                    }
        }

    // tensoring with the unit graph reproduces each entry on the nose
    for (const IGraph& G : corpus) {
        IGraph L = graph_tensor(U, G);
        IGraph R = graph_tensor(G, U);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CHECK(complexes_identical(L.at(i, j), G.at(i, j)));
                CHECK(complexes_identical(R.at(i, j), G.at(i, j)));
            }
    }

    // a single object reduces the graph tensor to the chain-complex tensor
    IGraph G1, H1, K1;
    G1.nobj = H1.nobj = K1.nobj = 1;
    G1.T = H1.T = K1.T = 3;
    G1.entry = {{ChainComplex::disk(2, 3)}};
    H1.entry = {{ChainComplex::direct_sum(ChainComplex::sphere(0, 3), ChainComplex::sphere(1, 3))}};
    K1.entry = {{two_disk(3)}};
    CHECK(complexes_identical(graph_tensor(G1, H1).at(0, 0),
                              tensor(G1.at(0, 0), H1.at(0, 0))));
    ChainMap asc1 = graph_associator(G1, H1, K1, 0, 0);
    asc1.validate();
    CHECK(maps_equal(asc1, associator(G1.at(0, 0), H1.at(0, 0), K1.at(0, 0))));
}

TEST_CASE("graph tensor: associativity reindexing, exhaustively over the corpus") {
    std::vector<IGraph> corpus = graph_corpus();
    for (const IGraph& G : corpus)
        for (const IGraph& H : corpus)
            for (const IGraph& K : corpus)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        ChainMap a = graph_associator(G, H, K, i, j);
                        a.validate();
                        for (int n = 0; n <= 3; ++n) {
                            CHECK(a.f[n].rows() == a.f[n].cols());
                            CHECK(a.f[n] * a.f[n].transpose() ==
                                  IntMat::identity(a.f[n].rows()));
                        }
                    }
}

TEST_CASE("categories: singleton monoids roundtrip, two-object unit laws") {
    DGAlgebra R = square_zero(ChainComplex::disk(1, 3));
    ICategory C = category_from_monoid(R);
    CHECK(validate_category(C).ok);
    DGAlgebra back = monoid_from_category(C);
    CHECK(complexes_identical(back.R, R.R));
    CHECK(back.unit == R.unit);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) CHECK(back.mu(p, q) == R.mu(p, q));

    ICategory arrow = two_object_category(ChainComplex::sphere(0, 3));
    CHECK(validate_category(arrow).ok);
    ICategory arrow1 = two_object_category(ChainComplex::sphere(1, 3));
    CHECK(validate_category(arrow1).ok);

    // breaking a unit is caught
    ICategory bad = two_object_category(ChainComplex::sphere(0, 3));
    bad.comp[0][0][1].f[0].at(0, 0) = -1;
    CheckReport r = validate_category(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.detail.find("unit") != std::string::npos);
}

TEST_CASE("categories: free path categories on a generator graph") {
    ICategory F = free_category(loop_and_arrow_generators(3));
    CHECK(validate_category(F).ok);

    // paths 0→0 are powers of the loop; paths 0→1 are x^a·u or x^a·e
    for (int n = 0; n <= 3; ++n) CHECK(F.O.at(0, 0).rank(n) == 1);
    CHECK(F.O.at(0, 1).rank(0) == 0);
    CHECK(F.O.at(0, 1).rank(1) == 1);
    CHECK(F.O.at(0, 1).rank(2) == 2);
    CHECK(F.O.at(0, 1).rank(3) == 2);
    for (int n = 0; n <= 3; ++n) CHECK(F.O.at(1, 0).rank(n) == 0);
    CHECK(F.O.at(1, 1).rank(0) == 1);
    for (int n = 1; n <= 3; ++n) CHECK(F.O.at(1, 1).rank(n) == 0);

    // within 0→1: basis (u·x, e) in degree 2 and (u·x·x, e·x) in degree 3
    CHECK(F.O.at(0, 1).d[2] == IntMat::from_rows(1, 2, {0, 1}));
    CHECK(F.O.at(0, 1).d[3] == IntMat::from_rows(2, 2, {0, 1, 0, 0}));

    // composing with the loop shifts a path; with the empty path, nothing moves
    CHECK(F.comp[0][0][1].f[2] == IntMat::from_rows(2, 3, {1, 1, 0, 0, 0, 1}));

    // generators with no loops give hom complexes equal to the generators
    ICategory A = free_category(arrow_only_generators(3));
    CHECK(validate_category(A).ok);
    CHECK(complexes_identical(A.O.at(0, 1), ChainComplex::disk(2, 3)));
    CHECK(A.O.at(0, 0).rank(0) == 1);
    CHECK(A.O.at(0, 0).rank(1) == 0);
}

TEST_CASE("free modules and the yoneda correspondence") {
    ICategory F = free_category(loop_and_arrow_generators(3));
    OModule F1 = free_omodule(F, 1);
    F1.validate();

    // maps F_1 → F_1 correspond to degree-0 cycles of O(1,1) = Z
    YonedaData y11 = yoneda(F1, 1);
    CHECK(y11.hom_basis.cols() == 1);
    CHECK(integer_inverse(y11.evaluation).has_value());
    // O(0,1) has nothing in degree 0, so no maps F_0 → F_1
    YonedaData y01 = yoneda(F1, 0);
    CHECK(y01.hom_basis.cols() == 0);

    ICategory arrow = two_object_category(ChainComplex::sphere(0, 3));
    OModule A1 = free_omodule(arrow, 1);
    A1.validate();
    YonedaData a0 = yoneda(A1, 0);
    CHECK(a0.hom_basis.cols() == 1);
    CHECK(integer_inverse(a0.evaluation).has_value());

    // a module concentrated at the source object: equivariance forces every
    // map out of F_1 to vanish, while maps out of F_0 pick a degree-0 cycle
    OModule sky;
    sky.O = arrow;
    sky.M = {ChainComplex::sphere(0, 3), ChainComplex::zero_complex(3)};
    sky.act.assign(2, std::vector<ChainMap>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            ChainComplex src = tensor(sky.M[j], arrow.O.at(i, j));
            sky.act[i][j] = ChainMap::zero_map(src, sky.M[i]);
        }
    sky.act[0][0].f[0].at(0, 0) = 1;
    sky.validate();
    YonedaData s0 = yoneda(sky, 0);
    CHECK(s0.hom_basis.cols() == 1);
    CHECK(integer_inverse(s0.evaluation).has_value());
    YonedaData s1 = yoneda(sky, 1);
    CHECK(s1.hom_basis.cols() == 0);

    // one object: the free module is the ring acting on itself
    DGAlgebra R = square_zero(ChainComplex::sphere(1, 2));
    ICategory CR = category_from_monoid(R);
    OModule FR = free_omodule(CR, 0);
    FR.validate();
    CHECK(maps_equal(FR.act[0][0], DGModule::ring_as_module(R).act_chain_map()));
    YonedaData yr = yoneda(FR, 0);
    CHECK(yr.hom_basis.cols() == R.R.rank(0));
    CHECK(integer_inverse(yr.evaluation).has_value());
}

TEST_CASE("restriction and extension along the identity collapse freely") {
    ICategory arrow = two_object_category(ChainComplex::sphere(0, 3));
    ICategoryMap id = ICategoryMap::identity_map(arrow);
    id.validate();

    OModule F1 = free_omodule(arrow, 1);
    OModule back = restrict_omodule(id, F1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(maps_equal(back.act[i][j], F1.act[i][j]));

    ExtendedOModule E = extend_omodule(id, F1);
    for (int i = 0; i < 2; ++i)
        for (int n = 0; n <= 3; ++n)
            CHECK(E.groups[i][n] == CokernelData{arrow.O.at(i, 1).rank(n), {}});

    CHECK(enriched_adjunction_check(id, 0).ok);
    CHECK(enriched_adjunction_check(id, 1).ok);
}

TEST_CASE("extension is computed over one object exactly as for algebras") {
    DGAlgebra R = square_zero(ChainComplex::sphere(1, 2));
    DGAlgebraMap f = DGAlgebraMap::identity_map(R);
    ExtendedModule Em = extend_scalars(f, DGModule::ring_as_module(R));

    ICategory CR = category_from_monoid(R);
    ICategoryMap psi = ICategoryMap::identity_map(CR);
    ExtendedOModule Ee = extend_omodule(psi, free_omodule(CR, 0));

    DGModule amb = DGModule::free_module(R.R, R);
    for (int n = 0; n <= 2; ++n) {
        CHECK(Ee.Q[0].gens[n] == Em.Q.gens[n]);
        CHECK(Ee.Q[0].rel[n] == Em.Q.rel[n]);
        CHECK(Ee.Q[0].d[n] == Em.Q.d[n]);
        CHECK(Ee.groups[0][n] == Em.groups[n]);
        CHECK(Ee.act[0][0].f[n] == amb.act_chain_map().f[n]);
    }
}

TEST_CASE("pointwise quasi-isomorphisms: collapsing a contractible hom complex") {
    int T = 3;
    ICategory O = free_category(arrow_only_generators(T));
    ICategory R = two_object_category(ChainComplex::zero_complex(T));

    ICategoryMap psi;
    psi.O = O;
    psi.R = R;
    psi.f.assign(2, std::vector<ChainMap>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            psi.f[i][j] = ChainMap::zero_map(O.O.at(i, j), R.O.at(i, j));
    psi.f[0][0].f[0] = IntMat::identity(1);
    psi.f[1][1].f[0] = IntMat::identity(1);
    psi.validate();

    CHECK(enriched_quillen_spot_check(psi).ok);
    CHECK(enriched_adjunction_check(psi, 0).ok);
    CHECK(enriched_adjunction_check(psi, 1).ok);

    // the coequalizer collapses the extension of F_1 onto the representable:
    // nothing is left at object 0, the identity survives at object 1
    ExtendedOModule EM = extend_omodule(psi, free_omodule(O, 1));
    for (int n = 0; n <= T; ++n) {
        CHECK(EM.groups[0][n] == CokernelData{0, {}});
        CHECK(EM.groups[1][n] == CokernelData{R.O.at(1, 1).rank(n), {}});
    }

    // mapping the same contractible hom complex to a sphere is a valid functor
    // but not a pointwise quasi-isomorphism, and the check says so
    ICategory R1 = two_object_category(ChainComplex::sphere(1, T));
    ICategoryMap bad;
    bad.O = O;
    bad.R = R1;
    bad.f.assign(2, std::vector<ChainMap>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            bad.f[i][j] = ChainMap::zero_map(O.O.at(i, j), R1.O.at(i, j));
    bad.f[0][0].f[0] = IntMat::identity(1);
    bad.f[1][1].f[0] = IntMat::identity(1);
    bad.validate();
    CheckReport r = enriched_quillen_spot_check(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.detail.find("quasi") != std::string::npos);
}
