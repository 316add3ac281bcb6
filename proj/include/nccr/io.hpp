#pragma once

#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nccr/decision.hpp"
#include "nccr/dimer.hpp"
#include "nccr/error.hpp"
#include "nccr/quiver.hpp"
#include "nccr/toric.hpp"

namespace nccr {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error("json_parse",
                               origin + ":" + std::to_string(line_of_byte(text, e.byte)) +
                                   ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "file_not_found", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline long long expect_int(const Json& j, const std::string& field) {
    require(j.is_number_integer(), "json_field", field + ": not an integer");
    return j.get<long long>();
}

} // namespace detail

// ---- Group notation: "Z^r + Z/d1 + Z/d2 ..." ------------------------------

inline std::string format_group(const FinAbGroup& G) {
    if (G.is_trivial())
        return "trivial";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty())
            s += " + ";
        s += part;
    };
    if (G.free_rank == 1)
        append("Z");
    else if (G.free_rank > 1)
        append("Z^" + std::to_string(G.free_rank));
    for (const Int& d : G.torsion)
        append("Z/" + d.str());
    return s;
}

// Accepts the notation above, "trivial"/"0", or a bare comma-separated list
// of invariant factors like "2,4".
inline FinAbGroup parse_group(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    require(!t.empty(), "group_syntax", "empty group description");
    if (t == "trivial" || t == "0" || t == "1")
        return FinAbGroup{};
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    if (t.find('Z') == std::string::npos) {
        // bare factor list
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            require(!item.empty(), "group_syntax", "empty invariant factor in '" + text + "'");
            try {
                torsion.emplace_back(Int(item));
            } catch (...) {
                throw validation_error("group_syntax", "bad invariant factor '" + item + "'");
            }
            require(torsion.back() >= 1, "group_syntax", "invariant factors must be >= 1");
        }
    } else {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, '+')) {
            require(!item.empty(), "group_syntax", "empty summand in '" + text + "'");
            if (item == "Z") {
                free_rank += 1;
            } else if (item.rfind("Z^", 0) == 0) {
                try {
                    free_rank += std::stoull(item.substr(2));
                } catch (...) {
                    throw validation_error("group_syntax", "bad free rank in '" + item + "'");
                }
            } else if (item.rfind("Z/", 0) == 0) {
                try {
                    torsion.emplace_back(Int(item.substr(2)));
                } catch (...) {
                    throw validation_error("group_syntax", "bad torsion order in '" + item + "'");
                }
                require(torsion.back() >= 2, "group_syntax", "torsion orders must be >= 2");
            } else {
                throw validation_error("group_syntax", "unrecognized summand '" + item + "'");
            }
        }
    }
    return iso_invariants(free_rank, torsion);
}

inline std::string format_element(const GroupElement& e) {
    std::vector<std::string> coords;
    for (const Int& x : e.free_part)
        coords.push_back(x.str());
    for (const Int& x : e.torsion_part)
        coords.push_back(x.str());
    if (coords.empty())
        return "0";
    if (coords.size() == 1)
        return coords[0];
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += (i ? "," : "") + coords[i];
    return s + ")";
}

// Splits "0,2" or "(0,0),(1,0)" into coordinate tuples.
inline std::vector<IntVec> parse_element_tuples(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    std::vector<IntVec> out;
    require(!t.empty(), "element_syntax", "empty class list");
    std::size_t i = 0;
    auto parse_int = [&]() {
        std::size_t start = i;
        if (i < t.size() && (t[i] == '-' || t[i] == '+'))
            ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            ++i;
        require(i > start && (t[start] == '-' || t[start] == '+' ||
                              std::isdigit(static_cast<unsigned char>(t[start]))),
                "element_syntax", "expected an integer in '" + text + "'");
        return Int(t.substr(start, i - start));
    };
    while (i < t.size()) {
        if (t[i] == '(') {
            ++i;
            IntVec tuple;
            for (;;) {
                tuple.push_back(parse_int());
                require(i < t.size(), "element_syntax", "unterminated tuple in '" + text + "'");
                if (t[i] == ',') {
                    ++i;
                    continue;
                }
                if (t[i] == ')') {
                    ++i;
                    break;
                }
                throw validation_error("element_syntax", "bad tuple syntax in '" + text + "'");
            }
            out.push_back(std::move(tuple));
        } else {
            out.push_back(IntVec{parse_int()});
        }
        if (i < t.size()) {
            require(t[i] == ',', "element_syntax", "expected ',' between classes");
            ++i;
        }
    }
    return out;
}

inline GroupElement element_from_coords(const FinAbGroup& G, const IntVec& coords) {
    if (G.is_trivial()) {
        // The trivial group has no coordinates; accept "0" as its identity.
        for (const Int& c : coords)
            require(c == 0, "element_syntax", "the trivial group only contains 0");
        return identity_element(G);
    }
    require(coords.size() == G.free_rank + G.torsion.size(), "element_syntax",
            "class tuple has " + std::to_string(coords.size()) + " coordinates, group needs " +
                std::to_string(G.free_rank + G.torsion.size()));
    IntVec free_part(coords.begin(), coords.begin() + G.free_rank);
    IntVec torsion_part(coords.begin() + G.free_rank, coords.end());
    return make_element(G, std::move(free_part), std::move(torsion_part));
}

// ---- Cone files ------------------------------------------------------------

// {"dim": d, "rays": [[...], ...]}
inline ConeData load_cone_json(const Json& j, const std::string& origin) {
    require(j.is_object(), "json_field", origin + ": top level must be an object");
    require(j.contains("dim"), "json_field", origin + ": missing field 'dim'");
    require(j.contains("rays"), "json_field", origin + ": missing field 'rays'");
    long long dim = detail::expect_int(j["dim"], origin + ": dim");
    require(dim >= 0, "json_field", origin + ": dim must be nonnegative");
    require(j["rays"].is_array(), "json_field", origin + ": rays must be an array");
    std::vector<IntVec> rays;
    std::size_t ri = 0;
    for (const auto& row : j["rays"]) {
        require(row.is_array(), "json_field",
                origin + ": rays[" + std::to_string(ri) + "] must be an array");
        IntVec v;
        std::size_t ci = 0;
        for (const auto& x : row) {
            v.emplace_back(detail::expect_int(x, origin + ": rays[" + std::to_string(ri) + "][" +
                                                     std::to_string(ci) + "]"));
            ++ci;
        }
        rays.push_back(std::move(v));
        ++ri;
    }
    return validate_cone(rays, static_cast<std::size_t>(dim));
}

inline ConeData load_cone_file(const std::string& path) {
    return load_cone_json(detail::parse_json_text(detail::read_file(path), path), path);
}

inline Json cone_to_json(const ConeData& c) {
    Json j;
    j["dim"] = c.dim;
    Json rays = Json::array();
    for (const auto& r : c.rays) {
        Json row = Json::array();
        for (const Int& x : r)
            row.push_back(static_cast<long long>(x));
        rays.push_back(row);
    }
    j["rays"] = rays;
    return j;
}

// ---- Dimer files -----------------------------------------------------------

inline RawDimer load_dimer_json(const Json& j, const std::string& origin) {
    require(j.is_object(), "json_field", origin + ": top level must be an object");
    for (const char* field : {"vertices", "edges", "rotations"})
        require(j.contains(field), "json_field",
                origin + ": missing field '" + std::string(field) + "'");
    RawDimer raw;
    std::size_t i = 0;
    for (const auto& v : j["vertices"]) {
        std::string at = origin + ": vertices[" + std::to_string(i) + "]";
        require(v.is_object() && v.contains("id") && v.contains("color"), "json_field",
                at + " needs 'id' and 'color'");
        std::string color = v["color"].get<std::string>();
        require(color == "black" || color == "white", "json_field",
                at + ": color must be \"black\" or \"white\"");
        raw.vertices.push_back({detail::expect_int(v["id"], at + ".id"),
                                color == "black" ? Color::Black : Color::White});
        ++i;
    }
    i = 0;
    for (const auto& e : j["edges"]) {
        std::string at = origin + ": edges[" + std::to_string(i) + "]";
        require(e.is_object() && e.contains("id") && e.contains("black") && e.contains("white") &&
                    e.contains("shift"),
                "json_field", at + " needs 'id', 'black', 'white', 'shift'");
        require(e["shift"].is_array() && e["shift"].size() == 2, "json_field",
                at + ".shift must be [a, b]");
        raw.edges.push_back({detail::expect_int(e["id"], at + ".id"),
                             detail::expect_int(e["black"], at + ".black"),
                             detail::expect_int(e["white"], at + ".white"),
                             Pt{detail::expect_int(e["shift"][0], at + ".shift[0]"),
                                detail::expect_int(e["shift"][1], at + ".shift[1]")}});
        ++i;
    }
    require(j["rotations"].is_object(), "json_field", origin + ": rotations must be an object");
    for (const auto& [key, val] : j["rotations"].items()) {
        long long vid;
        try {
            vid = std::stoll(key);
        } catch (...) {
            throw validation_error("json_field",
                                   origin + ": rotations key '" + key + "' is not a vertex id");
        }
        require(val.is_array(), "json_field", origin + ": rotations[" + key + "] must be an array");
        std::vector<long long> rot;
        std::size_t k = 0;
        for (const auto& x : val)
            rot.push_back(detail::expect_int(x, origin + ": rotations[" + key + "][" +
                                                    std::to_string(k++) + "]"));
        raw.rotations[vid] = std::move(rot);
    }
    return raw;
}

inline DimerModel load_dimer_file(const std::string& path) {
    return validate_dimer(
        load_dimer_json(detail::parse_json_text(detail::read_file(path), path), path));
}

inline Json dimer_to_json(const DimerModel& m) {
    Json j;
    Json vs = Json::array();
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        vs.push_back(Json{{"id", m.vertex_ids[v]},
                          {"color", m.colors[v] == Color::Black ? "black" : "white"}});
    j["vertices"] = vs;
    Json es = Json::array();
    for (std::size_t e = 0; e < m.num_edges(); ++e)
        es.push_back(Json{{"id", m.edge_ids[e]},
                          {"black", m.vertex_ids[m.edge_black[e]]},
                          {"white", m.vertex_ids[m.edge_white[e]]},
                          {"shift", Json::array({m.shifts[e][0], m.shifts[e][1]})}});
    j["edges"] = es;
    Json rot = Json::object();
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Json lst = Json::array();
        for (int e : m.rotation[v])
            lst.push_back(m.edge_ids[e]);
        rot[std::to_string(m.vertex_ids[v])] = lst;
    }
    j["rotations"] = rot;
    return j;
}

// ---- Report serialization ---------------------------------------------------

inline Json group_to_json(const FinAbGroup& G) {
    Json j;
    j["free_rank"] = G.free_rank;
    Json t = Json::array();
    for (const Int& d : G.torsion)
        t.push_back(d.str());
    j["torsion"] = t;
    j["notation"] = format_group(G);
    return j;
}

inline Json element_to_json(const GroupElement& e) {
    Json c = Json::array();
    for (const Int& x : e.free_part)
        c.push_back(x.str());
    for (const Int& x : e.torsion_part)
        c.push_back(x.str());
    return c;
}

inline Json decision_report_to_json(const DecisionReport& rep) {
    Json j;
    j["steady_splitting_nccr"] = rep.steady_splitting ? "yes" : "no";
    j["simplicial"] = rep.simplicial;
    if (rep.gorenstein) {
        Json m = Json::array();
        for (const Int& x : *rep.gorenstein)
            m.push_back(static_cast<long long>(x));
        j["gorenstein"] = m;
    } else {
        j["gorenstein"] = nullptr;
    }
    j["class_group"] = group_to_json(rep.class_group_value);
    Json conds = Json::array();
    for (const auto& c : rep.conditions)
        conds.push_back(Json{{"id", c.id},
                             {"statement", c.statement},
                             {"verdict", c.verdict},
                             {"certified_by", c.certified_by}});
    j["conditions"] = conds;
    if (rep.witness_quotient) {
        Json w;
        w["class_count"] = *rep.witness_class_count;
        w["quotient_group"] = group_to_json(rep.witness_quotient->group);
        Json ws = Json::array();
        for (const auto& x : rep.witness_quotient->weights)
            ws.push_back(element_to_json(x));
        w["weights"] = ws;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = rep.notes;
    return j;
}

inline Json polygon_to_json(const LatticePolygon& p) {
    Json j;
    Json pts = Json::array();
    for (const auto& [pt, mult] : p.points)
        pts.push_back(Json{{"point", Json::array({pt[0], pt[1]})}, {"multiplicity", mult}});
    j["points"] = pts;
    Json hull = Json::array();
    for (const Pt& v : p.hull)
        hull.push_back(Json::array({v[0], v[1]}));
    j["hull"] = hull;
    return j;
}

inline Json dimer_report_to_json(const DimerReport& rep) {
    Json j;
    j["counts"] = Json{{"vertices", rep.vertices}, {"edges", rep.edges}, {"faces", rep.faces}};
    j["consistent"] = rep.consistency.consistent;
    Json cons;
    cons["criterion"] = "zigzag criterion";
    cons["window_radius"] = rep.consistency.window_radius;
    Json zz = Json::array();
    for (const auto& z : rep.consistency.zigzags)
        zz.push_back(Json::array({z.hclass[0], z.hclass[1]}));
    cons["zigzag_classes"] = zz;
    if (rep.consistency.failure) {
        cons["failure"] = Json{{"kind", rep.consistency.failure->kind},
                               {"zigzags", rep.consistency.failure->zigzags},
                               {"edges", rep.consistency.failure->edge_ids}};
    } else {
        cons["failure"] = nullptr;
    }
    j["consistency"] = cons;
    j["hexagonal"] = rep.hexagonal;
    j["steady"] = rep.steady ? "yes" : "no";
    j["polygon"] = polygon_to_json(rep.polygon);
    j["cone"] = rep.cone ? cone_to_json(*rep.cone) : Json(nullptr);
    j["cone_report"] = rep.cone_report ? decision_report_to_json(*rep.cone_report) : Json(nullptr);
    if (rep.quotient) {
        Json q;
        q["group"] = group_to_json(rep.quotient->group);
        Json ws = Json::array();
        for (const auto& x : rep.quotient->weights)
            ws.push_back(element_to_json(x));
        q["weights"] = ws;
        j["quotient"] = q;
    } else {
        j["quotient"] = nullptr;
    }
    j["notes"] = rep.notes;
    return j;
}

inline Json versioned(Json body, const std::string& kind) {
    Json j;
    j["schema"] = 1;
    j["kind"] = kind;
    for (auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

// ---- Text rendering ---------------------------------------------------------

inline std::string format_ray(const IntVec& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? ", " : "") + r[i].str();
    return s + ")";
}

inline std::string render_toric_text(const ConeData& C, const ClassGroup& cg,
                                     const DecisionReport& rep,
                                     const std::vector<std::string>& warnings = {}) {
    std::ostringstream os;
    os << "cone: dim " << C.dim << ", " << C.rays.size() << " rays\n";
    for (std::size_t i = 0; i < C.rays.size(); ++i)
        os << "  ray " << i << ": " << format_ray(C.rays[i]) << "\n";
    os << "validation: ok\n";
    os << "simplicial: " << (rep.simplicial ? "yes" : "no") << "\n";
    if (rep.gorenstein)
        os << "gorenstein: yes, m = " << format_ray(*rep.gorenstein) << "\n";
    else
        os << "gorenstein: no\n";
    os << "Cl = " << format_group(cg.group) << "\n";
    os << "ray classes:\n";
    for (std::size_t i = 0; i < cg.ray_classes.size(); ++i)
        os << "  [D_" << i << "] = " << format_element(cg.ray_classes[i]) << "\n";
    if (rep.witness_quotient) {
        os << "quotient group: " << format_group(rep.witness_quotient->group) << "\n";
        os << "quotient weights:";
        for (const auto& w : rep.witness_quotient->weights)
            os << " " << format_element(w);
        os << "\n";
        os << "witness module: direct sum over all " << *rep.witness_class_count
           << " classes of Cl(R)\n";
    }
    os << "steady splitting NCCR: " << (rep.steady_splitting ? "YES" : "NO") << "\n";
    os << "conditions:\n";
    for (const auto& c : rep.conditions)
        os << "  " << c.id << " " << c.statement << ": " << c.verdict
           << "  [certified by: " << c.certified_by << "]\n";
    os << "vocabulary: M steady means End_R(M) in add_R M with M a generator; "
          "splitting means a direct sum of rank-one modules in refl R\n";
    for (const auto& n : rep.notes)
        os << "note: " << n << "\n";
    for (const auto& w : warnings)
        os << "warning: " << w << "\n";
    return os.str();
}

inline std::string render_dimer_text(const DimerReport& rep) {
    std::ostringstream os;
    os << "dimer: " << rep.vertices << " vertices, " << rep.edges << " edges, " << rep.faces
       << " faces (V - E + F = 0)\n";
    os << "consistency: zigzag criterion, cover window radius "
       << rep.consistency.window_radius << "\n";
    os << "consistent: " << (rep.consistency.consistent ? "yes" : "no") << "\n";
    if (rep.consistency.failure) {
        os << "  failure: " << rep.consistency.failure->kind << ", zigzag(s)";
        for (auto z : rep.consistency.failure->zigzags)
            os << " " << z;
        os << ", edge id(s)";
        for (auto e : rep.consistency.failure->edge_ids)
            os << " " << e;
        os << "\n";
    }
    os << "zigzag classes:";
    for (const auto& z : rep.consistency.zigzags)
        os << " (" << z.hclass[0] << "," << z.hclass[1] << ")";
    os << "\n";
    os << "hexagonal: " << (rep.hexagonal ? "yes" : "no")
       << "  (criterion: every face six-sided; metric regularity is not checked)\n";
    os << "steady: " << (rep.steady ? "yes" : "no") << "\n";
    os << "polygon points (class: multiplicity):\n";
    for (const auto& [pt, mult] : rep.polygon.points)
        os << "  (" << pt[0] << "," << pt[1] << "): " << mult << "\n";
    os << "polygon hull:";
    for (const Pt& v : rep.polygon.hull)
        os << " (" << v[0] << "," << v[1] << ")";
    os << "\n";
    if (rep.cone) {
        os << "induced cone over the polygon at height 1:\n";
        ClassGroup cg = class_group(*rep.cone);
        os << render_toric_text(*rep.cone, cg, *rep.cone_report);
    }
    if (rep.quotient) {
        os << "group: " << format_group(rep.quotient->group) << "\n";
        os << "weights:";
        for (const auto& w : rep.quotient->weights)
            os << " " << format_element(w);
        os << "\n";
    } else if (rep.cone_report) {
        os << "group: " << format_group(rep.cone_report->class_group_value) << "\n";
    }
    for (const auto& n : rep.notes)
        os << "note: " << n << "\n";
    return os.str();
}

inline std::string polygon_to_text(const LatticePolygon& p) {
    std::ostringstream os;
    os << "points\n";
    for (const auto& [pt, mult] : p.points)
        os << pt[0] << " " << pt[1] << " " << mult << "\n";
    os << "hull\n";
    for (const Pt& v : p.hull)
        os << v[0] << " " << v[1] << "\n";
    return os.str();
}

} // namespace nccr
