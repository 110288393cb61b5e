#include "exotic/json_io.hpp"

#include <stdexcept>

namespace exotic {

namespace {

unsigned get_uint(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw std::invalid_argument(std::string("json: missing or bad field '") + field + "'");
    return j[field].get<unsigned>();
}

} // namespace

json matrix_to_json(const RatMatrix& m) {
    json entries = json::array();
    for (const Rational& e : m.entries())
        entries.push_back(rat_to_string(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RatMatrix matrix_from_json(const json& j) {
    const unsigned rows = get_uint(j, "rows");
    const unsigned cols = get_uint(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument("json: matrix needs an 'entries' array");
    const json& entries = j["entries"];
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("json: entries length != rows*cols");
    RatMatrix m(rows, cols);
    std::size_t idx = 0;
    for (const json& e : entries) {
        if (!e.is_string())
            throw std::invalid_argument("json: matrix entries must be strings");
        m.entries()[idx++] = rat_from_string(e.get<std::string>());
    }
    return m;
}

json subspace_to_json(const Subspace& s) {
    return matrix_to_json(s.basis());
}

Subspace subspace_from_json(const json& j) {
    return Subspace::from_rows(matrix_from_json(j));
}

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (unsigned part : p.parts())
        arr.push_back(part);
    return arr;
}

json ambient_to_json(const Ambient& amb) {
    return json{{"p", amb.p}, {"q", amb.q}, {"k", amb.k}};
}

Ambient ambient_from_json(const json& j) {
    return Ambient(get_uint(j, "p"), get_uint(j, "q"), get_uint(j, "k"));
}

json label_to_json(const ExoticOrbitLabel& lab) {
    json j = ambient_to_json(lab.ambient);
    j["r"] = lab.r;
    j["s"] = lab.s;
    j["type"] = to_string(refine_type(lab));
    return j;
}

json tableau_to_json(const MarkedTableau& t) {
    json j = ambient_to_json(t.ambient);
    j["n1"] = t.n1;
    j["n2"] = t.n2;
    j["ell"] = t.ell;
    j["mark"] = t.mark;
    return j;
}

ExoticPoint exotic_point_from_json(const json& j) {
    const Ambient amb = ambient_from_json(j);
    if (!j.contains("L") || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("json: exotic_point needs 'L', 'a', 'b'");
    return ExoticPoint{amb, subspace_from_json(j["L"]), matrix_from_json(j["a"]),
                       matrix_from_json(j["b"])};
}

FlagPair flag_pair_from_json(const json& j) {
    const Ambient amb = ambient_from_json(j);
    if (!j.contains("W") || !j.contains("L"))
        throw std::invalid_argument("json: flag_pair needs 'W', 'L'");
    return FlagPair{amb, subspace_from_json(j["W"]), subspace_from_json(j["L"])};
}

json exotic_point_to_json(const ExoticPoint& pt) {
    json j = ambient_to_json(pt.ambient);
    j["kind"] = "exotic_point";
    j["L"] = subspace_to_json(pt.L);
    j["a"] = matrix_to_json(pt.a);
    j["b"] = matrix_to_json(pt.b);
    return j;
}

json flag_pair_to_json(const FlagPair& fp) {
    json j = ambient_to_json(fp.ambient);
    j["kind"] = "flag_pair";
    j["W"] = subspace_to_json(fp.W);
    j["L"] = subspace_to_json(fp.L);
    return j;
}

json table_to_json(const CorrespondenceTable& table) {
    json entries = json::array();
    for (const CorrespondenceEntry& e : table.entries) {
        entries.push_back(json{{"tableau", tableau_to_json(e.tableau)},
                               {"label", label_to_json(e.label)},
                               {"lambda", partition_to_json(e.good_lam)},
                               {"witness", json{{"x", matrix_to_json(e.witness.x)},
                                                {"W", subspace_to_json(e.witness.W)},
                                                {"L", subspace_to_json(e.witness.L)}}}});
    }
    return json{{"ambient", ambient_to_json(table.ambient)},
                {"entries", std::move(entries)},
                {"bijective", table.bijective}};
}

} // namespace exotic
