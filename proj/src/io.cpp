#include "galetope/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "galetope/errors.hpp"

namespace galetope {

namespace {

using nlohmann::json;

json face_to_json(const Face& f) {
    json a = json::array();
    for (int v : f) a.push_back(v);
    return a;
}

json faces_to_json(const std::vector<Face>& faces) {
    json a = json::array();
    for (const Face& f : faces) a.push_back(face_to_json(f));
    return a;
}

Face face_from_json(const json& a) {
    if (!a.is_array()) throw InvalidInputError("face must be an array of integers");
    std::vector<int> vs;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw InvalidInputError("face entries must be integers");
        vs.push_back(x.get<int>());
    }
    if (!std::is_sorted(vs.begin(), vs.end()) ||
        std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw InvalidInputError("face arrays must be strictly increasing");
    return Face(std::move(vs));
}

std::vector<Face> faces_from_json(const json& a, const char* what) {
    if (!a.is_array()) throw InvalidInputError(std::string(what) + " must be an array");
    std::vector<Face> out;
    for (const auto& f : a) out.push_back(face_from_json(f));
    return out;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("malformed JSON document");
    return j;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInputError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

} // namespace

std::string to_json(const CombPolytope& p) {
    json j;
    j["dim"] = p.dim;
    j["num_vertices"] = p.num_vertices;
    j["facets"] = faces_to_json(p.facets);
    return j.dump(2) + "\n";
}

CombPolytope polytope_from_json(const std::string& text) {
    const json j = parse(text);
    CombPolytope p = make_comb_polytope(int_field(j, "dim"), int_field(j, "num_vertices"),
                                        faces_from_json(j.value("facets", json::array()), "facets"));
    validate(p);
    return p;
}

std::string to_json(const Realization& r) {
    json j;
    j["dim"] = r.dim;
    json pts = json::array();
    for (const RationalPoint& p : r.points) {
        json row = json::array();
        for (const Rational& x : p) row.push_back(x.str());
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

Realization realization_from_json(const std::string& text) {
    const json j = parse(text);
    Realization r;
    r.dim = int_field(j, "dim");
    if (!j.contains("points") || !j["points"].is_array())
        throw InvalidInputError("missing 'points' array");
    for (const auto& row : j["points"]) {
        if (!row.is_array()) throw InvalidInputError("each point must be an array");
        RationalPoint p;
        for (const auto& x : row) {
            if (x.is_number_integer()) {
                p.emplace_back(x.get<long long>());
            } else if (x.is_string()) {
                try {
                    p.emplace_back(Rational(x.get<std::string>()));
                } catch (const std::exception&) {
                    throw InvalidInputError("bad rational literal '" + x.get<std::string>() + "'");
                }
            } else {
                throw InvalidInputError("coordinates must be rational strings");
            }
        }
        if (static_cast<int>(p.size()) != r.dim)
            throw InvalidInputError("point dimension disagrees with 'dim'");
        r.points.push_back(std::move(p));
    }
    return r;
}

std::string to_json(const ConstructionState& state) {
    json j;
    j["dim"] = state.dim;
    j["period"] = state.period;
    j["vertices"] = state.max_vertex + 1;
    json steps = json::array();
    for (const ConstructionStep& s : state.steps) {
        json step;
        step["n"] = s.new_vertex;
        step["beyond"] = faces_to_json(s.beyond);
        step["beneath"] = faces_to_json(s.beneath);
        step["affine"] = faces_to_json(s.affine);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

ConstructionState construction_from_json(const std::string& text) {
    const json j = parse(text);
    const int dim = int_field(j, "dim");
    const int period = int_field(j, "period");
    const int vertices = int_field(j, "vertices");
    ConstructionState state = build(dim, period, vertices - 1);
    if (!j.contains("steps") || !j["steps"].is_array())
        throw InvalidInputError("missing 'steps' array");
    const auto& steps = j["steps"];
    if (steps.size() != state.steps.size())
        throw InvalidInputError("construction log step count disagrees with parameters");
    for (std::size_t i = 0; i < state.steps.size(); ++i) {
        const ConstructionStep& s = state.steps[i];
        const json& logged = steps[i];
        auto same = [](std::vector<Face> a, std::vector<Face> b) {
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
        };
        if (int_field(logged, "n") != s.new_vertex ||
            !same(faces_from_json(logged.value("beyond", json::array()), "beyond"), s.beyond) ||
            !same(faces_from_json(logged.value("beneath", json::array()), "beneath"), s.beneath) ||
            !same(faces_from_json(logged.value("affine", json::array()), "affine"), s.affine))
            throw InvalidInputError("construction log disagrees with the rebuilt construction");
    }
    return state;
}

std::string render_report(const TheoremReport& report) {
    std::ostringstream os;
    os << "# period and cyclicity checks use the induced vertex order\n";
    for (const TheoremCheck& c : report.checks) {
        os << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.witness.empty()) os << ' ' << c.witness;
        os << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

} // namespace galetope
