#include "toricbunch/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricbunch/errors.hpp"

namespace toric {

namespace {

using Json = nlohmann::ordered_json;

constexpr long long kSafeMax = 9007199254740992LL;  // 2^53

Json int_to_json(const Int& x) {
    if (x <= kSafeMax && x >= -kSafeMax) return Json(x.convert_to<long long>());
    return Json(x.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer (number or string)");
}

Json vector_to_json(const IntVector& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVector json_to_vector(const Json& j, std::size_t expected_dim) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    IntVector v;
    for (const Json& x : j) v.push_back(json_to_int(x));
    if (v.size() != expected_dim) throw ParseError("vector has wrong dimension");
    return v;
}

std::vector<std::size_t> json_to_index_set(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of indices");
    std::vector<std::size_t> s;
    for (const Json& x : j) {
        if (!x.is_number_unsigned() && !x.is_number_integer())
            throw ParseError("expected a nonnegative index");
        long long v = x.get<long long>();
        if (v < 0) throw ParseError("expected a nonnegative index");
        s.push_back(static_cast<std::size_t>(v));
    }
    return s;
}

std::size_t json_count(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    const Json& j = doc.at(key);
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError(std::string("\"") + key + "\" must be a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Bunch parse_bunch_payload(const Json& doc) {
    const std::size_t k = json_count(doc, "k_rank");
    if (!doc.contains("bunch")) throw ParseError("missing \"bunch\"");

    std::optional<ProjectedCone> pc;
    std::vector<IntVector> weights;
    if (doc.contains("gamma_generators") || doc.contains("q_matrix")) {
        if (!doc.contains("gamma_generators") || !doc.contains("q_matrix"))
            throw ParseError("gamma_generators and q_matrix must appear together");
        const Json& gens = doc.at("gamma_generators");
        if (!gens.is_array() || gens.empty()) throw ParseError("gamma_generators must be nonempty");
        const std::size_t e = gens.size();
        std::vector<RatVector> gamma;
        for (const Json& g : gens) gamma.push_back(rat_vector(json_to_vector(g, e)));
        const Json& qm = doc.at("q_matrix");
        if (!qm.is_array() || qm.size() != k) throw ParseError("q_matrix must have k_rank rows");
        IntMatrix q(k, e);
        for (std::size_t i = 0; i < k; ++i) {
            IntVector row = json_to_vector(qm.at(i), e);
            for (std::size_t j = 0; j < e; ++j) q.at(i, j) = row[j];
        }
        try {
            pc.emplace(q, gamma);
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what());
        }
        for (const IntVector& g : pc->gamma_generators()) {
            RatVector img = pc->project(rat_vector(g));
            IntVector w(img.size());
            for (std::size_t i = 0; i < img.size(); ++i) w[i] = rat_num(img[i]);
            weights.push_back(w);
        }
    } else {
        if (!doc.contains("weights")) throw ParseError("missing \"weights\"");
        const Json& ws = doc.at("weights");
        if (!ws.is_array() || ws.empty()) throw ParseError("weights must be nonempty");
        for (const Json& w : ws) weights.push_back(json_to_vector(w, k));
        const std::size_t e = weights.size();
        IntMatrix q(k, e);
        for (std::size_t j = 0; j < e; ++j)
            for (std::size_t i = 0; i < k; ++i) q.at(i, j) = weights[j][i];
        std::vector<RatVector> gamma;
        for (std::size_t i = 0; i < e; ++i) {
            RatVector ev(e, Rat(0));
            ev[i] = 1;
            gamma.push_back(ev);
        }
        try {
            pc.emplace(q, gamma);
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what());
        }
    }

    std::vector<Cone> cones;
    for (const Json& entry : doc.at("bunch")) {
        FaceSet s = json_to_index_set(entry);
        for (std::size_t i : s)
            if (i >= pc->e_rank()) throw ParseError("bunch index out of range");
        std::sort(s.begin(), s.end());
        cones.push_back(pc->projected_face(s));
    }
    return Bunch(*pc, cones);
}

Fan parse_fan_payload(const Json& doc) {
    const std::size_t n = json_count(doc, "n_rank");
    if (!doc.contains("rays") || !doc.contains("max_cones"))
        throw ParseError("fan documents need \"rays\" and \"max_cones\"");
    std::vector<IntVector> rays;
    for (const Json& r : doc.at("rays")) rays.push_back(json_to_vector(r, n));
    std::vector<std::vector<std::size_t>> max_cones;
    for (const Json& mc : doc.at("max_cones")) max_cones.push_back(json_to_index_set(mc));
    try {
        return make_fan(n, rays, max_cones);
    } catch (const InvalidFan& err) {
        throw ParseError(err.what());
    }
}

void line_column(const std::string& text, std::size_t byte, std::size_t& line,
                 std::size_t& column) {
    line = 1;
    column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
}

}  // namespace

Document parse_document(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        std::size_t line = 0, column = 0;
        line_column(json_text, err.byte > 0 ? err.byte - 1 : 0, line, column);
        throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + err.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw ParseError("missing \"kind\"");

    Document d;
    d.kind = doc.at("kind").get<std::string>();
    if (doc.contains("name") && doc.at("name").is_string())
        d.name = doc.at("name").get<std::string>();
    if (doc.contains("comment") && doc.at("comment").is_string())
        d.comment = doc.at("comment").get<std::string>();

    if (d.kind == "bunch") {
        d.bunch = parse_bunch_payload(doc);
    } else if (d.kind == "fan") {
        d.fan = parse_fan_payload(doc);
    } else {
        throw ParseError("kind must be \"bunch\" or \"fan\"");
    }
    return d;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize(const Document& d) {
    Json doc;
    doc["kind"] = d.kind;
    if (!d.name.empty()) doc["name"] = d.name;
    if (!d.comment.empty()) doc["comment"] = d.comment;
    if (d.kind == "bunch") {
        const Bunch& b = *d.bunch;
        const ProjectedCone& pc = b.pc();
        doc["k_rank"] = pc.k_rank();
        // Free presentation iff gamma is the standard orthant basis.
        bool orthant = true;
        for (std::size_t i = 0; i < pc.e_rank() && orthant; ++i) {
            IntVector e(pc.e_rank(), Int(0));
            e[i] = 1;
            if (pc.gamma_generators()[i] != e) orthant = false;
        }
        Json ws = Json::array();
        for (const IntVector& w : weight_vectors(b)) ws.push_back(vector_to_json(w));
        doc["weights"] = ws;
        if (!orthant) {
            Json gens = Json::array();
            for (const IntVector& g : pc.gamma_generators()) gens.push_back(vector_to_json(g));
            doc["gamma_generators"] = gens;
            Json qm = Json::array();
            for (std::size_t i = 0; i < pc.q().rows(); ++i)
                qm.push_back(vector_to_json(pc.q().row(i)));
            doc["q_matrix"] = qm;
        }
        Json theta = Json::array();
        for (const BunchElement& el : b.elements()) {
            Json s = Json::array();
            for (std::size_t i : el.witness) s.push_back(i);
            theta.push_back(s);
        }
        doc["bunch"] = theta;
    } else {
        const Fan& f = *d.fan;
        doc["n_rank"] = f.n_rank;
        Json rays = Json::array();
        for (const IntVector& r : f.rays) rays.push_back(vector_to_json(r));
        doc["rays"] = rays;
        Json mcs = Json::array();
        for (const auto& mc : f.max_cones) {
            Json s = Json::array();
            for (std::size_t i : mc) s.push_back(i);
            mcs.push_back(s);
        }
        doc["max_cones"] = mcs;
    }
    return doc.dump(2) + "\n";
}

Document make_bunch_document(const Bunch& b, const std::string& name, const std::string& comment) {
    Document d;
    d.kind = "bunch";
    d.name = name;
    d.comment = comment;
    d.bunch = b;
    return d;
}

Document make_fan_document(const Fan& f, const std::string& name, const std::string& comment) {
    Document d;
    d.kind = "fan";
    d.name = name;
    d.comment = comment;
    d.fan = f;
    return d;
}

std::vector<std::string> builtin_example_names() {
    return {"p123", "p1355", "ex34", "ex47", "oda", "eikelberg-delta", "eikelberg-delta-prime"};
}

Document builtin_example(const std::string& name) {
    auto iv = [](std::initializer_list<int> xs) {
        IntVector v;
        for (int x : xs) v.emplace_back(x);
        return v;
    };
    if (name == "p123") {
        Bunch b = bunch_from_weights(WeightSystem{1, {iv({1}), iv({2}), iv({3})}}, {{0, 1, 2}});
        return make_bunch_document(b, "p123", "weighted projective space with weights 1,2,3");
    }
    if (name == "p1355") {
        Bunch b = bunch_from_weights(WeightSystem{1, {iv({1}), iv({3}), iv({5}), iv({5})}},
                                     {{0, 1, 2, 3}});
        return make_bunch_document(b, "p1355", "weighted projective space with weights 1,3,5,5");
    }
    if (name == "ex34") {
        Fan f = make_fan(3, {iv({1, 0, 1}), iv({0, 1, 2}), iv({1, 0, -2}), iv({0, 1, -1})},
                         {{0, 1, 2, 3}});
        return make_fan_document(
            f, "ex34", "single nonsimplicial cone; its projection drops the third coordinate");
    }
    if (name == "ex47") {
        Fan f = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {0, 2}});
        return make_fan_document(
            f, "ex47", "plane fan missing one maximal cone; converts to the full plane bunch");
    }
    if (name == "oda") {
        WeightSystem ws{3,
                        {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, 0}),
                         iv({1, 0, 1}), iv({0, 1, 1})}};
        Bunch b = bunch_from_weights(ws, {{2, 3, 4}, {0, 3, 5}, {1, 4, 5}, {3, 4, 5}});
        return make_bunch_document(b, "oda", "complete simplicial nonprojective threefold");
    }
    if (name == "eikelberg-delta") {
        Fan f = make_fan(3,
                         {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, 1}), iv({1, 0, -1}),
                          iv({0, 1, -1}), iv({-1, -1, -1})},
                         {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
        return make_fan_document(f, "eikelberg-delta", "fan over the facets of a prism");
    }
    if (name == "eikelberg-delta-prime") {
        Fan f = make_fan(3,
                         {iv({1, 0, 1}), iv({1, 2, 3}), iv({-1, -1, 1}), iv({1, 0, -1}),
                          iv({0, 1, -1}), iv({-1, -1, -1})},
                         {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}});
        return make_fan_document(f, "eikelberg-delta-prime",
                                 "prism fan with one ray moved to (1,2,3)");
    }
    throw UnknownExample("unknown example: " + name);
}

}  // namespace toric
