#include "dk/json_io.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(std::string("schema violation: missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("schema violation: '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> rank_vector(const Json& j, const char* key, int expected) {
    const Json& v = field(j, key);
    if (!v.is_array() || static_cast<int>(v.size()) != expected)
        fail(std::string("schema violation: '") + key + "' must be an array of length " +
             std::to_string(expected));
    std::vector<int> out;
    for (const Json& e : v) {
        if (!e.is_number_integer() || e.get<int>() < 0)
            fail(std::string("schema violation: '") + key + "' entries must be nonnegative integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::string pair_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }
std::string triple_key(int i, int j, int k) {
    return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

// shared by "complex", "dga", and the module payloads
ChainComplex complex_from_fields(const Json& j) {
    int T = int_field(j, "truncation");
    if (T < 0) fail("schema violation: negative truncation");
    ChainComplex C;
    C.T = T;
    C.ranks = rank_vector(j, "ranks", T + 1);
    const Json& diffs = field(j, "diffs");
    if (!diffs.is_array() || static_cast<int>(diffs.size()) != T)
        fail("schema violation: 'diffs' must list the differentials d_1..d_T");
    C.d.assign(T + 1, IntMat::zero(0, 0));
    for (int n = 1; n <= T; ++n) C.d[n] = matrix_from_json(diffs[n - 1], C.ranks[n - 1], C.ranks[n]);
    C.validate();
    return C;
}

void complex_to_fields(const ChainComplex& C, Json& j) {
    j["truncation"] = C.T;
    j["ranks"] = C.ranks;
    Json diffs = Json::array();
    for (int n = 1; n <= C.T; ++n) diffs.push_back(matrix_to_json(C.d[n]));
    j["diffs"] = diffs;
}

// shared by "simplicial", "simplicial_ring", "simplicial_module"
SimplicialAbGroup simplicial_from_fields(const Json& j) {
    int T = int_field(j, "truncation");
    if (T < 0) fail("schema violation: negative truncation");
    SimplicialAbGroup A;
    A.T = T;
    A.ranks = rank_vector(j, "ranks", T + 1);
    const Json& faces = field(j, "faces");
    const Json& degens = field(j, "degens");
    if (!faces.is_array() || static_cast<int>(faces.size()) != T)
        fail("schema violation: 'faces' must list the face maps of levels 1..T");
    if (!degens.is_array() || static_cast<int>(degens.size()) != T)
        fail("schema violation: 'degens' must list the degeneracy maps of levels 0..T-1");
    A.face.resize(T + 1);
    A.degen.resize(T + 1);
    for (int n = 1; n <= T; ++n) {
        const Json& lv = faces[n - 1];
        if (!lv.is_array() || static_cast<int>(lv.size()) != n + 1)
            fail("schema violation: level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                 " face maps");
        for (int i = 0; i <= n; ++i)
            A.face[n].push_back(matrix_from_json(lv[i], A.ranks[n - 1], A.ranks[n]));
    }
    for (int n = 0; n < T; ++n) {
        const Json& lv = degens[n];
        if (!lv.is_array() || static_cast<int>(lv.size()) != n + 1)
            fail("schema violation: level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                 " degeneracy maps");
        for (int i = 0; i <= n; ++i)
            A.degen[n].push_back(matrix_from_json(lv[i], A.ranks[n + 1], A.ranks[n]));
    }
    A.validate();
    return A;
}

void simplicial_to_fields(const SimplicialAbGroup& A, Json& j) {
    j["truncation"] = A.T;
    j["ranks"] = A.ranks;
    Json faces = Json::array();
    for (int n = 1; n <= A.T; ++n) {
        Json lv = Json::array();
        for (int i = 0; i <= n; ++i) lv.push_back(matrix_to_json(A.face[n][i]));
        faces.push_back(lv);
    }
    Json degens = Json::array();
    for (int n = 0; n < A.T; ++n) {
        Json lv = Json::array();
        for (int i = 0; i <= n; ++i) lv.push_back(matrix_to_json(A.degen[n][i]));
        degens.push_back(lv);
    }
    j["faces"] = faces;
    j["degens"] = degens;
}

IntMat column_from_json(const Json& j, int rows, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail(std::string("schema violation: '") + what + "' must be an array of length " +
             std::to_string(rows));
    IntMat u = IntMat::zero(rows, 1);
    for (int r = 0; r < rows; ++r) u.at(r, 0) = int_from_json(j[r]);
    return u;
}

Json column_to_json(const IntMat& u) {
    Json a = Json::array();
    for (int r = 0; r < u.rows(); ++r) a.push_back(int_to_json(u.at(r, 0)));
    return a;
}

void expect_kind(const Json& j, const char* kind) {
    if (kind_of(j) != kind)
        fail(std::string("schema violation: expected kind '") + kind + "', got '" + kind_of(j) + "'");
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail("schema violation: '" + j.get<std::string>() + "' is not a decimal integer");
        }
    }
    fail("schema violation: matrix entries must be integers or decimal strings");
}

Json matrix_to_json(const IntMat& A) {
    Json rows = Json::array();
    for (int r = 0; r < A.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < A.cols(); ++c) row.push_back(int_to_json(A.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

IntMat matrix_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail("schema violation: matrix must have " + std::to_string(rows) + " rows, has " +
             std::to_string(j.is_array() ? j.size() : 0));
    IntMat A = IntMat::zero(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail("schema violation: matrix row " + std::to_string(r) + " must have " +
                 std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) A.at(r, c) = int_from_json(row[c]);
    }
    return A;
}

std::string kind_of(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail("schema violation: payload has no 'kind' field");
    return j.at("kind").get<std::string>();
}

Json to_json(const ChainComplex& C) {
    Json j;
    j["kind"] = "complex";
    complex_to_fields(C, j);
    return j;
}

ChainComplex complex_from_json(const Json& j) {
    expect_kind(j, "complex");
    return complex_from_fields(j);
}

Json to_json(const ChainMap& f) {
    Json j;
    j["kind"] = "chain_map";
    j["source"] = to_json(f.source);
    j["target"] = to_json(f.target);
    Json comps = Json::array();
    for (const IntMat& m : f.f) comps.push_back(matrix_to_json(m));
    j["f"] = comps;
    return j;
}

ChainMap chain_map_from_json(const Json& j) {
    expect_kind(j, "chain_map");
    ChainMap f;
    f.source = complex_from_json(field(j, "source"));
    f.target = complex_from_json(field(j, "target"));
    int top = std::min(f.source.T, f.target.T);
    const Json& comps = field(j, "f");
    if (!comps.is_array() || static_cast<int>(comps.size()) != top + 1)
        fail("schema violation: 'f' must list components for degrees 0.." + std::to_string(top));
    for (int n = 0; n <= top; ++n)
        f.f.push_back(matrix_from_json(comps[n], f.target.rank(n), f.source.rank(n)));
    f.validate();
    return f;
}

Json to_json(const SimplicialAbGroup& A) {
    Json j;
    j["kind"] = "simplicial";
    simplicial_to_fields(A, j);
    return j;
}

SimplicialAbGroup simplicial_from_json(const Json& j) {
    expect_kind(j, "simplicial");
    return simplicial_from_fields(j);
}

Json to_json(const SimplicialMap& f) {
    Json j;
    j["kind"] = "simplicial_map";
    j["source"] = to_json(f.source);
    j["target"] = to_json(f.target);
    Json comps = Json::array();
    for (const IntMat& m : f.f) comps.push_back(matrix_to_json(m));
    j["f"] = comps;
    return j;
}

SimplicialMap simplicial_map_from_json(const Json& j) {
    expect_kind(j, "simplicial_map");
    SimplicialMap f;
    f.source = simplicial_from_json(field(j, "source"));
    f.target = simplicial_from_json(field(j, "target"));
    int top = std::min(f.source.T, f.target.T);
    const Json& comps = field(j, "f");
    if (!comps.is_array() || static_cast<int>(comps.size()) != top + 1)
        fail("schema violation: 'f' must list components for levels 0.." + std::to_string(top));
    for (int n = 0; n <= top; ++n)
        f.f.push_back(matrix_from_json(comps[n], f.target.rank(n), f.source.rank(n)));
    f.validate();
    return f;
}

Json to_json(const DGAlgebra& R) {
    Json j;
    j["kind"] = "dga";
    complex_to_fields(R.R, j);
    Json mult = Json::object();
    for (int p = 0; p <= R.R.T; ++p)
        for (int q = 0; p + q <= R.R.T; ++q) mult[pair_key(p, q)] = matrix_to_json(R.mu(p, q));
    j["mult"] = mult;
    j["unit"] = column_to_json(R.unit);
    return j;
}

DGAlgebra dga_from_json(const Json& j) {
    expect_kind(j, "dga");
    DGAlgebra R;
    R.R = complex_from_fields(j);
    int T = R.R.T;
    const Json& mult = field(j, "mult");
    R.mult.resize(T + 1);
    for (int p = 0; p <= T; ++p)
        for (int q = 0; p + q <= T; ++q) {
            if (!mult.contains(pair_key(p, q)))
                fail("schema violation: 'mult' is missing block '" + pair_key(p, q) + "'");
            R.mult[p].push_back(matrix_from_json(mult.at(pair_key(p, q)), R.R.rank(p + q),
                                                 R.R.rank(p) * R.R.rank(q)));
        }
    R.unit = column_from_json(field(j, "unit"), R.R.rank(0), "unit");
    R.validate();
    return R;
}

Json to_json(const SimplicialRing& A) {
    Json j;
    j["kind"] = "simplicial_ring";
    simplicial_to_fields(A.A, j);
    Json mult = Json::array();
    Json unit = Json::array();
    for (int n = 0; n <= A.A.T; ++n) {
        mult.push_back(matrix_to_json(A.mult[n]));
        unit.push_back(column_to_json(A.unit[n]));
    }
    j["mult"] = mult;
    j["unit"] = unit;
    return j;
}

SimplicialRing simplicial_ring_from_json(const Json& j) {
    expect_kind(j, "simplicial_ring");
    SimplicialRing A;
    A.A = simplicial_from_fields(j);
    int T = A.A.T;
    const Json& mult = field(j, "mult");
    const Json& unit = field(j, "unit");
    if (!mult.is_array() || static_cast<int>(mult.size()) != T + 1)
        fail("schema violation: 'mult' must list one matrix per level 0..T");
    if (!unit.is_array() || static_cast<int>(unit.size()) != T + 1)
        fail("schema violation: 'unit' must list one column per level 0..T");
    for (int n = 0; n <= T; ++n) {
        A.mult.push_back(matrix_from_json(mult[n], A.A.rank(n), A.A.rank(n) * A.A.rank(n)));
        A.unit.push_back(column_from_json(unit[n], A.A.rank(n), "unit"));
    }
    A.validate();
    return A;
}

Json to_json(const DGModule& M) {
    Json j;
    j["kind"] = "dg_module";
    j["ring"] = content_hash(to_json(M.R));
    complex_to_fields(M.M, j);
    Json act = Json::object();
    for (int p = 0; p <= M.M.T; ++p)
        for (int q = 0; p + q <= M.M.T; ++q) act[pair_key(p, q)] = matrix_to_json(M.act[p][q]);
    j["act"] = act;
    return j;
}

DGModule dg_module_from_json(const Json& j, const std::map<std::string, DGAlgebra>& rings) {
    expect_kind(j, "dg_module");
    const std::string ref = field(j, "ring").get<std::string>();
    auto it = rings.find(ref);
    if (it == rings.end()) fail("schema violation: unknown ring reference '" + ref + "'");
    DGModule M;
    M.R = it->second;
    M.M = complex_from_fields(j);
    int T = M.M.T;
    const Json& act = field(j, "act");
    M.act.resize(T + 1);
    for (int p = 0; p <= T; ++p)
        for (int q = 0; p + q <= T; ++q) {
            if (!act.contains(pair_key(p, q)))
                fail("schema violation: 'act' is missing block '" + pair_key(p, q) + "'");
            M.act[p].push_back(matrix_from_json(act.at(pair_key(p, q)), M.M.rank(p + q),
                                                M.M.rank(p) * M.R.R.rank(q)));
        }
    M.validate();
    return M;
}

Json to_json(const SimplicialModule& M) {
    Json j;
    j["kind"] = "simplicial_module";
    j["ring"] = content_hash(to_json(M.A));
    simplicial_to_fields(M.M, j);
    Json act = Json::array();
    for (int n = 0; n <= M.M.T; ++n) act.push_back(matrix_to_json(M.act[n]));
    j["act"] = act;
    return j;
}

SimplicialModule simplicial_module_from_json(const Json& j,
                                             const std::map<std::string, SimplicialRing>& rings) {
    expect_kind(j, "simplicial_module");
    const std::string ref = field(j, "ring").get<std::string>();
    auto it = rings.find(ref);
    if (it == rings.end()) fail("schema violation: unknown ring reference '" + ref + "'");
    SimplicialModule M;
    M.A = it->second;
    M.M = simplicial_from_fields(j);
    const Json& act = field(j, "act");
    if (!act.is_array() || static_cast<int>(act.size()) != M.M.T + 1)
        fail("schema violation: 'act' must list one matrix per level 0..T");
    for (int n = 0; n <= M.M.T; ++n)
        M.act.push_back(matrix_from_json(act[n], M.M.rank(n), M.M.rank(n) * M.A.A.rank(n)));
    M.validate();
    return M;
}

Json to_json(const IGraph& G) {
    Json j;
    j["kind"] = "igraph";
    Json objects = Json::array();
    for (int i = 0; i < G.nobj; ++i) objects.push_back(i);
    j["objects"] = objects;
    j["truncation"] = G.T;
    Json entries = Json::object();
    for (int i = 0; i < G.nobj; ++i)
        for (int k = 0; k < G.nobj; ++k) entries[pair_key(i, k)] = to_json(G.at(i, k));
    j["entries"] = entries;
    return j;
}

namespace {

int objects_from_json(const Json& j) {
    const Json& objects = field(j, "objects");
    if (!objects.is_array() || objects.empty())
        fail("schema violation: 'objects' must be a nonempty array");
    for (int i = 0; i < static_cast<int>(objects.size()); ++i)
        if (!objects[i].is_number_integer() || objects[i].get<int>() != i)
            fail("schema violation: objects must be listed as 0..n-1");
    return static_cast<int>(objects.size());
}

IGraph igraph_from_fields(const Json& j) {
    IGraph G;
    G.nobj = objects_from_json(j);
    G.T = int_field(j, "truncation");
    const Json& entries = field(j, "entries");
    G.entry.assign(G.nobj, std::vector<ChainComplex>(G.nobj));
    for (int i = 0; i < G.nobj; ++i)
        for (int k = 0; k < G.nobj; ++k) {
            if (!entries.contains(pair_key(i, k)))
                fail("schema violation: 'entries' is missing '" + pair_key(i, k) + "'");
            G.entry[i][k] = complex_from_json(entries.at(pair_key(i, k)));
        }
    G.validate();
    return G;
}

}  // namespace

IGraph igraph_from_json(const Json& j) {
    expect_kind(j, "igraph");
    return igraph_from_fields(j);
}

Json to_json(const ICategory& C) {
    Json j = to_json(C.O);
    j["kind"] = "icategory";
    Json comp = Json::object();
    for (int i = 0; i < C.O.nobj; ++i)
        for (int k = 0; k < C.O.nobj; ++k)
            for (int l = 0; l < C.O.nobj; ++l) {
                Json comps = Json::array();
                for (const IntMat& m : C.comp[i][k][l].f) comps.push_back(matrix_to_json(m));
                comp[triple_key(i, k, l)] = comps;
            }
    j["comp"] = comp;
    Json units = Json::object();
    for (int i = 0; i < C.O.nobj; ++i) units[std::to_string(i)] = column_to_json(C.unit[i]);
    j["units"] = units;
    return j;
}

ICategory icategory_from_json(const Json& j) {
    expect_kind(j, "icategory");
    ICategory C;
    C.O = igraph_from_fields(j);
    int n = C.O.nobj, T = C.O.T;
    const Json& comp = field(j, "comp");
    const Json& units = field(j, "units");
    C.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (!comp.contains(triple_key(i, k, l)))
                    fail("schema violation: 'comp' is missing '" + triple_key(i, k, l) + "'");
                const Json& comps = comp.at(triple_key(i, k, l));
                ChainComplex src = tensor(C.O.at(k, l), C.O.at(i, k));
                if (!comps.is_array() || static_cast<int>(comps.size()) != T + 1)
                    fail("schema violation: composition components must cover degrees 0..T");
                ChainMap f;
                f.source = src;
                f.target = C.O.at(i, l);
                for (int d = 0; d <= T; ++d)
                    f.f.push_back(matrix_from_json(comps[d], C.O.at(i, l).rank(d), src.rank(d)));
                C.comp[i][k][l] = f;
            }
    for (int i = 0; i < n; ++i) {
        if (!units.contains(std::to_string(i)))
            fail("schema violation: 'units' is missing '" + std::to_string(i) + "'");
        C.unit.push_back(column_from_json(units.at(std::to_string(i)), C.O.at(i, i).rank(0), "units"));
    }
    C.validate();
    return C;
}

std::string canonical_json(const Json& j) {
    Json c = j;
    if (c.is_object()) c.erase("timings");
    return c.dump();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string content_hash(const Json& j) {
    std::uint64_t h = fnv1a64(canonical_json(j));
    std::ostringstream out;
    out << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(std::string("json parse error: ") + e.what());
    }
}

std::string homology_line(int n, const CokernelData& H) {
    std::ostringstream out;
    out << "H_" << n << " = ";
    if (H.free_rank == 0 && H.torsion.empty()) {
        out << "0";
        return out.str();
    }
    bool first = true;
    if (H.free_rank == 1) {
        out << "Z";
        first = false;
    } else if (H.free_rank > 1) {
        out << "Z^" << H.free_rank;
        first = false;
    }
    for (const Int& d : H.torsion) {
        if (!first) out << " ⊕ ";
        out << "Z/" << d.get_str();
        first = false;
    }
    return out.str();
}

std::string homology_table(const ChainComplex& C) {
    HomologyTable H = homology(C);
    std::ostringstream out;
    for (int n = 0; n < static_cast<int>(H.size()); ++n) out << homology_line(n, H[n]) << "\n";
    return out.str();
}

}  // namespace dk
