#include "dk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dk/random_gen.hpp"

namespace dk {

namespace {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// A check body returns nothing on success and a failure description otherwise.
using CheckBody = std::function<std::optional<std::string>()>;

struct Recorder {
    SuiteOptions opt;
    std::vector<CheckResult> results;

    Rng rng_for(const std::string& case_id) const { return Rng(opt.seed ^ fnv1a64(case_id)); }

    void check(const std::string& id, const CheckBody& body) {
        CheckResult r;
        r.id = id;
        try {
            auto err = body();
            r.pass = !err.has_value();
            if (err) r.detail = *err;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::optional<std::string> ok() { return std::nullopt; }
std::optional<std::string> bad(const std::string& msg) { return msg; }

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

IntMat unit2() { return IntMat::from_rows(2, 1, {1, 0}); }

// Levelwise swap a⊗b ↦ b⊗a of the simplicial tensor factors.
SimplicialMap simplicial_swap(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    SimplicialMap s = SimplicialMap::zero_map(tensor(A, B), tensor(B, A));
    for (int n = 0; n <= A.T; ++n) s.f[n] = swap_perm(A.rank(n), B.rank(n));
    return s;
}

// ---------------------------------------------------------------- suites --

void suite_eilenberg_zilber(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        Rng rng = rec.rng_for("ez/" + tag);
        SimplicialAbGroup A = random_simplicial_group(rng, opt.T, opt.max_rank, k % 5 == 0);
        SimplicialAbGroup B = random_simplicial_group(rng, opt.T, opt.max_rank, false);
        NormalizationData NA = normalize(A), NB = normalize(B);
        SimplicialAbGroup AB = tensor(A, B);
        NormalizationData NAB = normalize(AB);
        ChainMap nab = normalized_shuffle(NA, NB, NAB);
        ChainMap aw = normalized_aw(NA, NB, NAB);

        rec.check("aw-nabla-identity/" + tag, [&]() {
            ChainMap round = compose(aw, nab);
            if (!maps_equal(round, ChainMap::identity(tensor(NA.N, NB.N))))
                return bad("AW∘∇ is not the identity on NA⊗NB");
            return ok();
        });
        rec.check("nabla-aw-homotopy/" + tag, [&]() {
            ChainMap round = compose(nab, aw);
            if (!homotopy_solve(round, ChainMap::identity(NAB.N)).has_value())
                return bad("no integer chain homotopy from ∇∘AW to the identity");
            if (!is_quasi_iso(round)) return bad("∇∘AW is not a quasi-isomorphism");
            return ok();
        });
        rec.check("ez-quasi-iso/" + tag, [&]() {
            if (!is_quasi_iso(nab)) return bad("normalized shuffle is not a quasi-isomorphism");
            if (!is_quasi_iso(aw)) return bad("normalized AW is not a quasi-isomorphism");
            return ok();
        });
        rec.check("shuffle-symmetry/" + tag, [&]() {
            SimplicialMap swap = simplicial_swap(A, B);
            ChainMap lhs = compose(chain_of(swap), shuffle(A, B));
            ChainMap rhs = compose(shuffle(B, A), symmetry(unnormalized(A), unnormalized(B)));
            if (!maps_equal(lhs, rhs)) return bad("C(τ)∘∇ differs from ∇∘τ");
            return ok();
        });
    }
}

void suite_doldkan_iso(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        Rng rng = rec.rng_for("doldkan/" + tag);
        ChainComplex C = random_complex(rng, opt.T, opt.max_rank);
        GammaData G = gamma(C, opt.T);

        rec.check("gamma-rank-oracle/" + tag, [&]() {
            for (int n = 0; n <= opt.T; ++n) {
                long long want = 0;
                for (int j = 0; j <= n; ++j) want += binom_ll(n, j) * C.rank(j);
                if (G.G.rank(n) != want)
                    return bad("rank of ΓC at level " + std::to_string(n) + " is " +
                               std::to_string(G.G.rank(n)) + ", expected " + std::to_string(want));
            }
            return ok();
        });

        NormalizationData NG = normalize(G.G);
        ChainMap eps = counit_map(G, NG);
        rec.check("counit-iso/" + tag, [&]() {
            for (int n = 0; n <= opt.T; ++n)
                if (!integer_inverse(eps.f[n]).has_value())
                    return bad("ε is not invertible in degree " + std::to_string(n));
            return ok();
        });
        rec.check("triangle-identity/" + tag, [&]() {
            GammaData GN = gamma(NG.N, opt.T);
            SimplicialMap eta = unit_map(G.G, NG, GN);
            SimplicialMap composite = compose(gamma_map(eps, GN, G), eta);
            if (!maps_equal(composite, SimplicialMap::identity(G.G)))
                return bad("Γ(ε)∘η is not the identity on ΓC");
            return ok();
        });

        rec.check("unit-iso/" + tag, [&]() {
            SimplicialAbGroup A = random_simplicial_group(rng, opt.T, opt.max_rank, k % 3 == 0);
            NormalizationData NA = normalize(A);
            SimplicialMap eta = unit_map(A, NA, gamma(NA.N, opt.T));
            for (int n = 0; n <= opt.T; ++n)
                if (!integer_inverse(eta.f[n]).has_value())
                    return bad("η is not invertible at level " + std::to_string(n));
            return ok();
        });
    }
}

void suite_ring_identities(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        Rng rng = rec.rng_for("phi/" + tag);
        ChainComplex C = random_complex(rng, opt.T, opt.max_rank);
        ChainComplex D = random_complex(rng, opt.T, opt.max_rank);
        GammaData GC = gamma(C, opt.T), GD = gamma(D, opt.T);
        GammaData GCD = gamma(tensor(C, D), opt.T);
        SimplicialMap phi = gamma_monoidal(GC, GD, GCD);

        rec.check("phi-monoidal/" + tag, [&]() {
            NormalizationData NGC = normalize(GC.G), NGD = normalize(GD.G);
            NormalizationData NGCD = normalize(GCD.G);
            NormalizationData NTT = normalize(tensor(GC.G, GD.G));
            ChainMap lhs = compose(counit_map(GCD, NGCD),
                                   compose(normalized_of(phi, NTT, NGCD),
                                           normalized_shuffle(NGC, NGD, NTT)));
            ChainMap rhs = tensor_of_maps(counit_map(GC, NGC), counit_map(GD, NGD));
            for (int n = 0; n <= opt.T; ++n)
                if (lhs.f[n] != rhs.f[n])
                    return bad("ε⊗ε square fails in degree " + std::to_string(n));
            return ok();
        });
        rec.check("comonoidal-quasi-iso/" + tag, [&]() {
            SimplicialMap tnabla = gamma_comonoidal(GC, GD, GCD);
            if (!maps_equal(compose(phi, tnabla), SimplicialMap::identity(GCD.G)))
                return bad("φ does not split ∇̃");
            if (!is_weak_equivalence(tnabla)) return bad("∇̃ is not a weak equivalence");
            return ok();
        });
    }

    // ε: NΓR → R is a dg algebra isomorphism for every named example.
    std::vector<std::pair<std::string, DGAlgebra>> named;
    named.emplace_back("integers", dga_integers(opt.T));
    named.emplace_back("square-zero-sphere1", square_zero(ChainComplex::sphere(1, opt.T)));
    named.emplace_back("square-zero-sphere2", square_zero(ChainComplex::sphere(2, opt.T)));
    named.emplace_back("square-zero-disk2", square_zero(ChainComplex::disk(2, opt.T)));
    named.emplace_back("tensor-sphere1", tensor_algebra(ChainComplex::sphere(1, opt.T)));
    named.emplace_back("truncated-tensor-disk2",
                       truncated_tensor_algebra(ChainComplex::disk(2, opt.T), 2));
    named.emplace_back(
        "dual-numbers",
        normalize_ring(constant_ring(dual_numbers_mult(), unit2(), opt.T)).dga);
    named.emplace_back(
        "hochschild-dual-numbers",
        normalize_ring(hochschild_ring(dual_numbers_mult(), unit2(), std::min(opt.T, 2))).dga);
    for (const auto& [name, R] : named)
        rec.check("counit-ring/" + name, [&]() {
            CheckReport rep = counit_ring_check(R, R.R.T);
            if (!rep.ok) return bad(rep.detail);
            return ok();
        });
    for (int k = 0; k < std::min(opt.cases, 10); ++k) {
        const std::string tag = std::to_string(k);
        rec.check("counit-ring-random/" + tag, [&]() {
            Rng rng = rec.rng_for("counit-ring-random/" + tag);
            DGAlgebra R = square_zero(random_complex(rng, opt.T, 2));
            CheckReport rep = counit_ring_check(R, opt.T);
            if (!rep.ok) return bad(rep.detail);
            return ok();
        });
    }

    // Graded commutativity of N(A) for commutative simplicial rings A.
    std::vector<std::pair<std::string, SimplicialRing>> comm;
    comm.emplace_back("constant-dual-numbers",
                      constant_ring(dual_numbers_mult(), unit2(), opt.T));
    comm.emplace_back("constant-involution",
                      constant_ring(involution_ring_mult(), unit2(), opt.T));
    comm.emplace_back("hochschild-dual-numbers",
                      hochschild_ring(dual_numbers_mult(), unit2(), std::min(opt.T, 3)));
    comm.emplace_back("hochschild-involution",
                      hochschild_ring(involution_ring_mult(), unit2(), std::min(opt.T, 3)));
    comm.emplace_back("tensor-dual-involution",
                      tensor_ring(constant_ring(dual_numbers_mult(), unit2(), std::min(opt.T, 3)),
                                  hochschild_ring(involution_ring_mult(), unit2(), std::min(opt.T, 3))));
    for (const auto& [name, S] : comm)
        rec.check("graded-commutativity/" + name, [&]() {
            NormalizedRingData ND = normalize_ring(S);
            const DGAlgebra& R = ND.dga;
            for (int p = 0; p <= R.R.T; ++p)
                for (int q = 0; p + q <= R.R.T; ++q) {
                    IntMat flipped = R.mu(q, p) * swap_perm(R.R.rank(p), R.R.rank(q));
                    if (p % 2 == 1 && q % 2 == 1) flipped = flipped * Int(-1);
                    if (R.mu(p, q) != flipped)
                        return bad("xy ≠ (−1)^{|x||y|}yx on the (" + std::to_string(p) + "," +
                                   std::to_string(q) + ") block");
                }
            return ok();
        });
}

void suite_counterexamples(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;

    // κr·κs = κ(r·ds) for all degree-one basis pairs, per named algebra.
    std::vector<std::pair<std::string, DGAlgebra>> named;
    named.emplace_back("square-zero-sphere1", square_zero(ChainComplex::sphere(1, opt.T)));
    named.emplace_back("square-zero-disk1", square_zero(ChainComplex::disk(1, opt.T)));
    named.emplace_back("tensor-sphere1", tensor_algebra(ChainComplex::sphere(1, opt.T)));
    ChainComplex DD = ChainComplex::direct_sum(ChainComplex::disk(1, 2), ChainComplex::disk(1, 2));
    named.emplace_back("truncated-tensor-two-disks", truncated_tensor_algebra(DD, 2));
    for (const auto& [name, R] : named)
        rec.check("kappa-identity/" + name, [&]() {
            GammaRingData GR = gamma_ring(R, std::min(opt.T, R.R.T));
            int r1 = R.R.rank(1);
            for (int i = 0; i < r1; ++i)
                for (int j = 0; j < r1; ++j) {
                    IntMat ei = IntMat::zero(r1, 1), ej = IntMat::zero(r1, 1);
                    ei.at(i, 0) = 1;
                    ej.at(j, 0) = 1;
                    IntMat lhs = GR.ring.mult[1] *
                                 IntMat::kronecker(kappa(R, GR.G, ei), kappa(R, GR.G, ej));
                    IntMat rds = R.mu(1, 0) * IntMat::kronecker(ei, R.R.d[1] * ej);
                    if (lhs != kappa(R, GR.G, rds))
                        return bad("κr·κs ≠ κ(r·ds) for basis pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
                }
            return ok();
        });

    // ΓR is noncommutative even for a graded-commutative R.
    rec.check("kappa-noncommutative", [&]() {
        DGAlgebra R = truncated_tensor_algebra(DD, 2);
        GammaRingData GR = gamma_ring(R, 2);
        int r1 = R.R.rank(1);
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < r1; ++j) {
                IntMat ei = IntMat::zero(r1, 1), ej = IntMat::zero(r1, 1);
                ei.at(i, 0) = 1;
                ej.at(j, 0) = 1;
                IntMat xy = GR.ring.mult[1] *
                            IntMat::kronecker(kappa(R, GR.G, ei), kappa(R, GR.G, ej));
                IntMat yx = GR.ring.mult[1] *
                            IntMat::kronecker(kappa(R, GR.G, ej), kappa(R, GR.G, ei));
                if (xy != yx) return ok();
            }
        return bad("no noncommuting κ pair found in Γ(tensor algebra)");
    });

    // η is not monoidal: the level-one composite through Γ(Z[2]) vanishes
    // while η itself is injective there; after N the maps are homotopic.
    rec.check("eta-not-monoidal", [&]() {
        CheckReport rep = eta_not_monoidal_witness();
        if (!rep.ok) return bad(rep.detail);
        return ok();
    });

    // The shuffle is symmetric; AW is not.  Stored witness: A = B = ZΔ¹.
    rec.check("aw-asymmetry", [&]() {
        SimplicialAbGroup A = SimplicialAbGroup::standard_simplex(1, 2);
        SimplicialMap swap = simplicial_swap(A, A);
        ChainComplex CA = unnormalized(A);
        ChainMap lhs = compose(chain_of(swap), shuffle(A, A));
        ChainMap rhs = compose(shuffle(A, A), symmetry(CA, CA));
        if (!maps_equal(lhs, rhs)) return bad("shuffle symmetry fails on ZΔ¹");
        ChainMap awl = compose(alexander_whitney(A, A), chain_of(swap));
        ChainMap awr = compose(symmetry(CA, CA), alexander_whitney(A, A));
        if (maps_equal(awl, awr)) return bad("AW∘C(τ) = τ∘AW on ZΔ¹; asymmetry witness lost");
        return ok();
    });
}

void suite_modules(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    const int T = std::min(opt.T, 3);  // nabla instances live one degree lower

    // ∇ descends the normalized shuffle to the relative tensor; over constant
    // coefficients it is the shuffle itself.
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        rec.check("nabla-free/" + tag, [&]() {
            Rng rng = rec.rng_for("nabla-free/" + tag);
            SimplicialRing cz = constant_ring(IntMat::identity(1), IntMat::identity(1), T);
            SimplicialModule P = SimplicialModule::free_module(
                random_simplicial_group(rng, T, opt.max_rank, k % 2 == 0), cz);
            SimplicialModule Pop = SimplicialModule::free_module(
                random_simplicial_group(rng, T, opt.max_rank, false), opposite_ring(cz));
            PresentedMap nz = nabla_A(P, Pop);  // descent is hard-checked inside
            NormalizationData NP = normalize(P.M), NPop = normalize(Pop.M);
            ChainMap nsh = normalized_shuffle(NP, NPop, normalize(tensor(P.M, Pop.M)));
            for (int n = 0; n <= T; ++n)
                if (nz.f[n] != nsh.f[n])
                    return bad("∇ differs from the normalized shuffle in degree " +
                               std::to_string(n));
            return ok();
        });
    }

    SimplicialRing A = gamma_ring(square_zero(ChainComplex::sphere(1, T)), T).ring;
    SimplicialModule MA = SimplicialModule::ring_as_module(A);
    SimplicialModule MAop = SimplicialModule::ring_as_module(opposite_ring(A));

    rec.check("nabla-ring-iso", [&]() {
        PresentedMap nr = nabla_A(MA, MAop);
        if (!is_degreewise_iso(nr)) return bad("NA ⊗_{NA} NA → N(A⊗_A A) is not an isomorphism");
        return ok();
    });
    rec.check("relative-tensor-unit", [&]() {
        RelativeTensorSimplicial rt = relative_tensor_simplicial(MA, MAop);
        for (int n = 0; n <= T; ++n)
            if (!(rt.groups[n] == CokernelData{A.A.rank(n), {}}))
                return bad("A ⊗_A A has the wrong group at level " + std::to_string(n));
        return ok();
    });
    rec.check("relative-tensor-free", [&]() {
        SimplicialAbGroup X = SimplicialAbGroup::standard_simplex(1, T);
        RelativeTensorSimplicial fr =
            relative_tensor_simplicial(SimplicialModule::free_module(X, A), MAop);
        for (int n = 0; n <= T; ++n)
            if (!(fr.groups[n] == CokernelData{X.rank(n) * A.A.rank(n), {}}))
                return bad("(X⊗A) ⊗_A A has the wrong group at level " + std::to_string(n));
        return ok();
    });
    rec.check("relative-tensor-torsion", [&]() {
        SimplicialRing inv = constant_ring(involution_ring_mult(), unit2(), T);
        SimplicialModule sgn{SimplicialAbGroup::constant_group(1, T), inv,
                             std::vector<IntMat>(T + 1, IntMat::from_rows(1, 2, {1, -1}))};
        SimplicialModule trv{SimplicialAbGroup::constant_group(1, T), opposite_ring(inv),
                             std::vector<IntMat>(T + 1, IntMat::from_rows(1, 2, {1, 1}))};
        sgn.validate();
        trv.validate();
        RelativeTensorSimplicial tor = relative_tensor_simplicial(sgn, trv);
        for (int n = 0; n <= T; ++n)
            if (!(tor.groups[n] == CokernelData{0, {2}}))
                return bad("sign ⊗ trivial is not Z/2 at level " + std::to_string(n));
        return ok();
    });

    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        rec.check("koszul-left-action/" + tag, [&]() {
            Rng rng = rec.rng_for("koszul-left-action/" + tag);
            DGAlgebra R = square_zero(random_complex(rng, opt.T, 2));
            DGModule Mop = DGModule::free_module(random_complex(rng, opt.T, opt.max_rank),
                                                 opposite_algebra(R));
            left_action_chain_map(Mop).validate();  // throws if the sign rule fails
            return ok();
        });
        rec.check("adjunction/" + tag, [&]() {
            Rng rng = rec.rng_for("adjunction/" + tag);
            DGAlgebra R = square_zero(random_complex(rng, opt.T, 2));
            ChainComplex X = random_complex(rng, opt.T, opt.max_rank);
            CheckReport rep = adjunction_check(DGAlgebraMap::identity_map(R), X);
            if (!rep.ok) return bad(rep.detail);
            return ok();
        });
    }

    DGAlgebra Rsq = square_zero(ChainComplex::sphere(1, opt.T));
    GammaRingData GR = gamma_ring(Rsq, opt.T);
    NormalizedRingData ND = normalize_ring(GR.ring);
    DGAlgebraMap eps{ND.dga, Rsq, counit_map(GR.G, ND.N)};

    rec.check("adjunction-counit", [&]() {
        eps.validate();
        ChainComplex X = ChainComplex::direct_sum(ChainComplex::sphere(0, opt.T),
                                                  ChainComplex::sphere(1, opt.T));
        CheckReport rep = adjunction_check(eps, X);
        if (!rep.ok) return bad(rep.detail);
        return ok();
    });
    rec.check("extension-unit-quasi-iso", [&]() {
        ChainComplex X = ChainComplex::direct_sum(ChainComplex::sphere(0, opt.T),
                                                  ChainComplex::disk(1, opt.T));
        DGModule Mfree = DGModule::free_module(X, ND.dga);
        ExtendedModule E = extend_scalars(eps, Mfree);
        PresentedMap unit{PresentedComplex::from_chain(Mfree.M), E.Q, extension_unit(eps, Mfree)};
        unit.validate();
        if (!is_quasi_iso(unit)) return bad("M → M⊗_R S is not a quasi-isomorphism along ε");
        return ok();
    });

    // Quillen invariance spot checks along quasi-isomorphisms of algebras.
    DGAlgebra Td = tensor_algebra(ChainComplex::disk(2, opt.T));
    DGAlgebra Z = dga_integers(opt.T);
    ChainMap collapse{Td.R, Z.R, {}};
    for (int n = 0; n <= opt.T; ++n) {
        IntMat f(Z.R.rank(n), Td.R.rank(n));
        if (n == 0) f.at(0, 0) = 1;  // the empty word
        collapse.f.push_back(f);
    }
    DGAlgebraMap collapse_map{Td, Z, collapse};
    for (int k = 0; k < std::min(opt.cases, 10); ++k) {
        const std::string tag = std::to_string(k);
        rec.check("quillen-invariance/" + tag, [&]() {
            Rng rng = rec.rng_for("quillen-invariance/" + tag);
            std::vector<ChainComplex> samples{random_complex(rng, opt.T, opt.max_rank),
                                              random_complex(rng, opt.T, opt.max_rank)};
            CheckReport rep = quillen_invariance_spot_check(collapse_map, samples);
            if (!rep.ok) return bad(rep.detail);
            rep = quillen_invariance_spot_check(eps, samples);
            if (!rep.ok) return bad(rep.detail);
            return ok();
        });
    }
}

// Two-object category with identity endomorphisms and one hom complex 0→1.
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
        for (int j = 0; j < 2; ++j)
            for (int n = 0; n <= T; ++n) {
                C.comp[i][i][j].f[n] = IntMat::identity(C.O.at(i, j).rank(n));
                C.comp[i][j][j].f[n] = IntMat::identity(C.O.at(i, j).rank(n));
            }
    C.unit = {IntMat::from_rows(1, 1, {1}), IntMat::from_rows(1, 1, {1})};
    return C;
}

// The collapse of the free category on one contractible arrow complex onto
// the two-object category with no arrows: a pointwise quasi-isomorphism.
ICategoryMap collapse_functor(int T) {
    IGraph gen;
    gen.nobj = 2;
    gen.T = T;
    gen.entry.assign(2, std::vector<ChainComplex>(2, ChainComplex::zero_complex(T)));
    gen.entry[0][1] = ChainComplex::disk(2, T);
    ICategoryMap psi;
    psi.O = free_category(gen);
    psi.R = two_object_category(ChainComplex::zero_complex(T));
    psi.f.assign(2, std::vector<ChainMap>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            psi.f[i][j] = ChainMap::zero_map(psi.O.O.at(i, j), psi.R.O.at(i, j));
    psi.f[0][0].f[0] = IntMat::identity(1);
    psi.f[1][1].f[0] = IntMat::identity(1);
    return psi;
}

// Random generator graph whose hom complexes vanish in degree zero: a loop
// of degree 1 or 2 on a single object, otherwise spheres/disks above the
// diagonal so that path words stay short.
IGraph random_generators(Rng& rng, int nobj, int T) {
    IGraph gen;
    gen.nobj = nobj;
    gen.T = T;
    gen.entry.assign(nobj, std::vector<ChainComplex>(nobj, ChainComplex::zero_complex(T)));
    if (nobj == 1) {
        gen.entry[0][0] = ChainComplex::sphere(rand_range(rng, 1, 2), T);
        return gen;
    }
    for (int i = 0; i < nobj; ++i)
        for (int j = i + 1; j < nobj; ++j) {
            switch (rand_range(rng, 0, 2)) {
                case 0: break;  // no generators i→j
                case 1: gen.entry[i][j] = ChainComplex::sphere(rand_range(rng, 1, 2), T); break;
                // disks of degree 1 would put generators in degree 0
                case 2: gen.entry[i][j] = T >= 2 ? ChainComplex::disk(2, T)
                                                 : ChainComplex::sphere(1, T); break;
            }
        }
    return gen;
}

void suite_enriched(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        Rng rng = rec.rng_for("graph/" + tag);
        int nobj = 1 + k % 3;
        auto random_graph = [&]() {
            IGraph G;
            G.nobj = nobj;
            G.T = opt.T;
            G.entry.assign(nobj, std::vector<ChainComplex>(nobj));
            for (int i = 0; i < nobj; ++i)
                for (int j = 0; j < nobj; ++j)
                    G.entry[i][j] = random_complex(rng, opt.T, opt.max_rank);
            return G;
        };
        IGraph G = random_graph(), H = random_graph(), K = random_graph();

        rec.check("graph-unit/" + tag, [&]() {
            IGraph U = unit_graph(nobj, opt.T);
            IGraph GU = graph_tensor(G, U), UG = graph_tensor(U, G);
            for (int i = 0; i < nobj; ++i)
                for (int j = 0; j < nobj; ++j) {
                    for (const IGraph* P : {&GU, &UG}) {
                        const ChainComplex& got = P->at(i, j);
                        const ChainComplex& want = G.at(i, j);
                        if (!same_shape(got, want))
                            return bad("unit tensor changes the shape of entry (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
                        for (int n = 1; n <= opt.T; ++n)
                            if (got.d[n] != want.d[n])
                                return bad("unit tensor changes the differential of entry (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
                    }
                }
            return ok();
        });
        rec.check("graph-associator/" + tag, [&]() {
            for (int i = 0; i < nobj; ++i)
                for (int j = 0; j < nobj; ++j) {
                    ChainMap P = graph_associator(G, H, K, i, j);
                    P.validate();
                    for (int n = 0; n <= opt.T; ++n) {
                        if (!(P.f[n] * P.f[n].transpose()).is_identity() ||
                            !(P.f[n].transpose() * P.f[n]).is_identity())
                            return bad("associator at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") is not a permutation in degree " +
                                       std::to_string(n));
                    }
                }
            return ok();
        });
    }

    // Extension of representables along identity functors on free categories.
    for (int k = 0; k < std::min(opt.cases, 12); ++k) {
        const std::string tag = std::to_string(k);
        rec.check("extend-representable/" + tag, [&]() {
            Rng rng = rec.rng_for("extend-representable/" + tag);
            ICategory F = free_category(random_generators(rng, 1 + k % 3, std::min(opt.T, 3)));
            ICategoryMap id = ICategoryMap::identity_map(F);
            for (int j = 0; j < F.O.nobj; ++j) {
                CheckReport rep = enriched_adjunction_check(id, j);
                if (!rep.ok) return bad(rep.detail);
            }
            return ok();
        });
    }

    ICategoryMap psi = collapse_functor(std::min(opt.T, 3));
    rec.check("extend-representable/collapse", [&]() {
        psi.validate();
        for (int j = 0; j < 2; ++j) {
            CheckReport rep = enriched_adjunction_check(psi, j);
            if (!rep.ok) return bad(rep.detail);
        }
        return ok();
    });
    rec.check("quillen-pointwise/collapse", [&]() {
        CheckReport rep = enriched_quillen_spot_check(psi);
        if (!rep.ok) return bad(rep.detail);
        ExtendedOModule EM = extend_omodule(psi, free_omodule(psi.O, 1));
        for (int n = 0; n <= psi.O.O.T; ++n) {
            if (!(EM.groups[0][n] == CokernelData{0, {}}))
                return bad("the collapsed extension is nonzero at object 0, degree " +
                           std::to_string(n));
            if (!(EM.groups[1][n] == CokernelData{psi.R.O.at(1, 1).rank(n), {}}))
                return bad("the collapsed extension differs from the representable at object 1");
        }
        return ok();
    });
    for (int k = 0; k < std::min(opt.cases, 6); ++k) {
        const std::string tag = std::to_string(k);
        rec.check("quillen-pointwise/" + tag, [&]() {
            Rng rng = rec.rng_for("quillen-pointwise/" + tag);
            ICategory F = free_category(random_generators(rng, 1 + k % 3, std::min(opt.T, 3)));
            CheckReport rep = enriched_quillen_spot_check(ICategoryMap::identity_map(F));
            if (!rep.ok) return bad(rep.detail);
            return ok();
        });
    }

    rec.check("singleton-agreement", [&]() {
        DGAlgebra R = square_zero(ChainComplex::sphere(1, std::min(opt.T, 2)));
        ExtendedModule Em = extend_scalars(DGAlgebraMap::identity_map(R),
                                           DGModule::ring_as_module(R));
        ICategory CR = category_from_monoid(R);
        ExtendedOModule Ee =
            extend_omodule(ICategoryMap::identity_map(CR), free_omodule(CR, 0));
        for (int n = 0; n <= R.R.T; ++n) {
            if (Ee.Q[0].rel[n] != Em.Q.rel[n])
                return bad("relations differ from the one-object extension in degree " +
                           std::to_string(n));
            if (!(Ee.groups[0][n] == Em.groups[n]))
                return bad("groups differ from the one-object extension in degree " +
                           std::to_string(n));
        }
        return ok();
    });
}

void suite_model_predicates(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    const int T = opt.T;
    ChainComplex S1 = ChainComplex::sphere(1, T);
    ChainComplex D1 = ChainComplex::disk(1, T);
    ChainComplex Z0 = ChainComplex::zero_complex(T);

    auto expect = [&](const std::string& id, const ChainMap& f, bool fib, bool cof, bool we) {
        rec.check(id, [&, fib, cof, we]() {
            ModelPredicates got = model_predicates(f);
            std::ostringstream msg;
            if (got.is_fibration != fib)
                msg << "is_fibration = " << got.is_fibration << ", want " << fib << "; ";
            if (got.is_cofibration != cof)
                msg << "is_cofibration = " << got.is_cofibration << ", want " << cof << "; ";
            if (got.is_weak_equivalence != we)
                msg << "is_weak_equivalence = " << got.is_weak_equivalence << ", want " << we
                    << "; ";
            if (!msg.str().empty()) return bad(msg.str());
            return ok();
        });
    };

    expect("identity", ChainMap::identity(S1), true, true, true);
    expect("zero-to-disk", ChainMap::zero_map(Z0, D1), false, true, true);
    expect("zero-to-sphere", ChainMap::zero_map(Z0, S1), false, true, false);

    ChainMap proj = ChainMap::zero_map(D1, S1);
    proj.f[1] = IntMat::identity(1);
    expect("disk-onto-sphere", proj, true, false, false);

    ChainMap twice = ChainMap::identity(S1);
    twice.f[1].at(0, 0) = 2;
    expect("multiplication-by-two", twice, false, false, false);

    rec.check("simplicial-fibrations", [&]() {
        GammaData GD = gamma(D1, T), GS = gamma(S1, T);
        if (!is_fibration(SimplicialMap::identity(GS.G)))
            return bad("the identity is not a simplicial fibration");
        if (!is_fibration(gamma_map(proj, GD, GS)))
            return bad("Γ(disk → sphere) is not a simplicial fibration");
        if (is_fibration(gamma_map(twice, GS, GS)))
            return bad("Γ(multiplication by two) is wrongly a simplicial fibration");
        return ok();
    });

    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        rec.check("weak-equivalence-vs-homology/" + tag, [&]() {
            Rng rng = rec.rng_for("weak-equivalence-vs-homology/" + tag);
            ChainComplex C = random_complex(rng, T, opt.max_rank);
            ChainComplex D = random_complex(rng, T, opt.max_rank);
            ChainMap f = random_chain_map(rng, C, D);
            ModelPredicates got = model_predicates(f);
            if (got.is_weak_equivalence != is_quasi_iso(f))
                return bad("is_weak_equivalence disagrees with the homology comparison");
            return ok();
        });
    }
}

void suite_linalg(Recorder& rec) {
    const SuiteOptions& opt = rec.opt;
    for (int k = 0; k < opt.cases; ++k) {
        const std::string tag = std::to_string(k);
        rec.check("snf-batch/" + tag, [&]() {
            Rng rng = rec.rng_for("snf-batch/" + tag);
            for (int t = 0; t < 10; ++t) {
                int rows = rand_range(rng, 1, 6), cols = rand_range(rng, 1, 6);
                IntMat A = random_matrix(rng, rows, cols, -9, 9);
                std::string where = " (matrix " + std::to_string(t) + ")";
                SmithDecomposition s = snf(A);
                if (s.U * A * s.V != s.D) return bad("U·A·V ≠ D" + where);
                Int du = det(s.U), dv = det(s.V);
                if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
                    return bad("U or V is not unimodular" + where);
                std::vector<Int> divs = s.divisors();
                for (int r = 0; r < s.D.rows(); ++r)
                    for (int c = 0; c < s.D.cols(); ++c)
                        if (r != c && s.D.at(r, c) != 0) return bad("D is not diagonal" + where);
                for (size_t i = 0; i + 1 < divs.size(); ++i)
                    if (divs[i + 1] % divs[i] != 0)
                        return bad("divisors are not a divisibility chain" + where);
                IntMat Kb = kernel_basis(A);
                if (!(A * Kb).is_zero()) return bad("kernel basis is not in the kernel" + where);
                if (Kb.cols() != cols - static_cast<int>(divs.size()))
                    return bad("kernel basis has the wrong dimension" + where);
                IntMat X = random_matrix(rng, cols, 2, -4, 4);
                IntMat B = A * X;
                auto Y = solve(A, B);
                if (!Y.has_value() || A * *Y != B) return bad("solve fails on A·X" + where);
            }
            return ok();
        });
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"eilenberg-zilber", "doldkan-iso", "ring-identities", "counterexamples",
            "modules",          "enriched",    "model-predicates", "linalg"};
}

Json run_suite(const std::string& name, const SuiteOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec;
    rec.opt = opt;
    if (name == "eilenberg-zilber")
        suite_eilenberg_zilber(rec);
    else if (name == "doldkan-iso")
        suite_doldkan_iso(rec);
    else if (name == "ring-identities")
        suite_ring_identities(rec);
    else if (name == "counterexamples")
        suite_counterexamples(rec);
    else if (name == "modules")
        suite_modules(rec);
    else if (name == "enriched")
        suite_enriched(rec);
    else if (name == "model-predicates")
        suite_model_predicates(rec);
    else if (name == "linalg")
        suite_linalg(rec);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");

    std::sort(rec.results.begin(), rec.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    int passed = 0, failed = 0;
    Json checks = Json::array();
    for (const CheckResult& r : rec.results) {
        Json c;
        c["id"] = r.id;
        c["status"] = r.pass ? "pass" : "fail";
        if (!r.pass) {
            ++failed;
            Json w;
            w["seed"] = opt.seed;
            w["instance"] = r.id;
            w["detail"] = r.detail;
            c["witness"] = w;
        } else {
            ++passed;
        }
        checks.push_back(c);
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    Json report;
    report["kind"] = "report";
    report["suite"] = name;
    report["seed"] = opt.seed;
    report["truncation"] = opt.T;
    report["max_rank"] = opt.max_rank;
    report["cases_per_property"] = opt.cases;
    report["rng"] = "mt19937_64";
    report["checks"] = checks;
    report["counts"] = Json{{"pass", passed}, {"fail", failed}};
    report["timings"] = Json{{"total_ms", ms}};
    return report;
}

bool report_ok(const Json& report) {
    return report.contains("counts") && report["counts"].value("fail", 1) == 0;
}

}  // namespace dk
