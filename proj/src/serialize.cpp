#include "zsr/serialize.hpp"

#include "zsr/errors.hpp"

namespace zsr {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
    return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw StructuralError(std::string(what) + " must be a list");
    return j;
}

}  // namespace

Json to_json(const Group& group) { return Json(group.factors()); }

Group group_from_json(const Json& j) {
    std::vector<std::int64_t> factors;
    for (const auto& f : as_array(j, "group")) factors.push_back(as_int(f, "group factor"));
    return Group::canonical(factors);
}

Json element_to_json(const Group& group, int rank) { return Json(group.coords_of(rank)); }

int element_from_json(const Group& group, const Json& j) {
    std::vector<int> coords;
    for (const auto& c : as_array(j, "element")) coords.push_back(as_int(c, "element coordinate"));
    if (static_cast<int>(coords.size()) != group.num_factors())
        throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, " + group.name() +
                              " needs " + std::to_string(group.num_factors()));
    for (int i = 0; i < group.num_factors(); ++i)
        if (coords[i] < 0 || coords[i] >= group.factors()[i])
            throw StructuralError("element coordinate out of range for " + group.name());
    return group.rank_of(coords);
}

Json to_json(const GSeq& seq) {
    Json out = Json::array();
    for (int g : seq.ranks()) out.push_back(element_to_json(seq.group(), g));
    return out;
}

GSeq gseq_from_json(const Group& group, const Json& j) {
    std::vector<int> ranks;
    for (const auto& e : as_array(j, "sequence")) ranks.push_back(element_from_json(group, e));
    return GSeq(group, std::move(ranks));
}

Json to_json(const Edge& edge) { return Json(edge.vertices()); }

Edge edge_from_json(const Json& j) {
    std::vector<int> vs;
    for (const auto& v : as_array(j, "edge")) vs.push_back(as_int(v, "vertex"));
    return Edge(std::move(vs));
}

Json to_json(const EdgeFamily& family) {
    Json out = Json::array();
    for (const auto& e : family.edges()) out.push_back(to_json(e));
    return out;
}

EdgeFamily family_from_json(int n, int r, const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : as_array(j, "family")) edges.push_back(edge_from_json(e));
    return EdgeFamily(n, r, std::move(edges));
}

Json to_json(const Coloring& coloring) {
    Json colors = Json::array();
    for (int c : coloring.color_ranks()) colors.push_back(element_to_json(coloring.group(), c));
    return Json{{"colors", colors}, {"group", to_json(coloring.group())}, {"n", coloring.n()}, {"r", coloring.r()}};
}

Coloring coloring_from_json(const Json& j) {
    const Group g = group_from_json(field(j, "group"));
    const int n = as_int(field(j, "n"), "n");
    const int r = as_int(field(j, "r"), "r");
    std::vector<int> colors;
    for (const auto& c : as_array(field(j, "colors"), "colors")) colors.push_back(element_from_json(g, c));
    return Coloring(g, n, r, std::move(colors));
}

Json to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    return Json{{"ambient", {{"n", d.n}, {"r", d.r}}}, {"parts", parts}, {"sizes", d.sizes}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    const Json& amb = field(j, "ambient");
    d.n = as_int(field(amb, "n"), "n");
    d.r = as_int(field(amb, "r"), "r");
    for (const auto& s : as_array(field(j, "sizes"), "sizes")) d.sizes.push_back(as_int(s, "part size"));
    for (const auto& p : as_array(field(j, "parts"), "parts")) d.parts.push_back(family_from_json(d.n, d.r, p));
    return d;
}

Json to_json(const InvariantRecord& rec) {
    Json j{{"group", to_json(rec.group)}};
    j["davenport"] = rec.davenport ? Json(*rec.davenport) : Json(nullptr);
    Json egz = Json::object();
    for (const auto& [m, s] : rec.egz) egz[std::to_string(m)] = s;
    j["egz"] = egz;
    j["ell"] = rec.ell ? Json(*rec.ell) : Json(nullptr);
    Json wit = Json::object();
    for (const auto& [key, seq] : rec.witnesses) wit[key] = to_json(seq);
    j["witnesses"] = wit;
    return j;
}

InvariantRecord record_from_json(const Json& j) {
    InvariantRecord rec;
    rec.group = group_from_json(field(j, "group"));
    if (j.contains("davenport") && !j.at("davenport").is_null()) rec.davenport = as_int(j.at("davenport"), "davenport");
    if (j.contains("ell") && !j.at("ell").is_null()) rec.ell = as_int(j.at("ell"), "ell");
    if (j.contains("egz")) {
        const Json& egz = j.at("egz");
        if (!egz.is_object()) throw StructuralError("egz must be an object");
        for (const auto& [key, value] : egz.items()) {
            int m = 0;
            try {
                std::size_t used = 0;
                m = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw StructuralError("egz key '" + key + "' is not an integer");
            }
            rec.egz[m] = as_int(value, "egz value");
        }
    }
    if (j.contains("witnesses")) {
        const Json& wit = j.at("witnesses");
        if (!wit.is_object()) throw StructuralError("witnesses must be an object");
        for (const auto& [key, value] : wit.items()) rec.witnesses[key] = gseq_from_json(rec.group, value);
    }
    return rec;
}

Json to_json(const Provenance& p) { return Json{{"formula", p.formula}, {"name", p.name}}; }

Json to_json(const BoundReport& b) {
    Json prov = Json::array();
    for (const auto& p : b.provenance) prov.push_back(to_json(p));
    return Json{{"exact", b.exact ? Json(*b.exact) : Json(nullptr)},
                {"lower", b.lower},
                {"provenance", prov},
                {"upper", b.upper}};
}

std::string status_name(SearchStatus status) { return status == SearchStatus::exact ? "exact" : "inconclusive"; }

std::string outcome_name(LevelOutcome outcome) {
    switch (outcome) {
        case LevelOutcome::bad_coloring: return "bad_coloring";
        case LevelOutcome::exhausted: return "exhausted";
        case LevelOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

Json to_json(const LevelResult& level) { return Json{{"n", level.n}, {"outcome", outcome_name(level.outcome)}}; }

Json to_json(const RamseyResult& res) {
    Json levels = Json::array();
    for (const auto& lv : res.levels) levels.push_back(to_json(lv));
    return Json{{"certificate", res.certificate ? to_json(*res.certificate) : Json(nullptr)},
                {"exact", res.exact() ? Json(*res.exact()) : Json(nullptr)},
                {"levels", levels},
                {"lower", res.lower},
                {"status", status_name(res.status)},
                {"upper", res.upper ? Json(*res.upper) : Json(nullptr)}};
}

}  // namespace zsr
