// Command-line front end: decides steady/splitting NCCR existence for toric
// cones and dimer models, generates hexagonal dimers and McKay quivers, and
// tests class sets for steadiness.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "nccr/decision.hpp"
#include "nccr/io.hpp"
#include "nccr/quiver.hpp"

using namespace nccr;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "file_write", "cannot write " + path);
    out << content;
    require(out.good(), "file_write", "write to " + path + " failed");
}

std::vector<GroupElement> parse_weights(const FinAbGroup& G, const std::string& text,
                                        std::size_t expected) {
    std::vector<GroupElement> out;
    for (const IntVec& coords : parse_element_tuples(text))
        out.push_back(element_from_coords(G, coords));
    require(out.size() == expected, "element_syntax",
            "expected " + std::to_string(expected) + " weights, got " +
                std::to_string(out.size()));
    return out;
}

int cmd_toric(const std::string& path, const std::string& format) {
    ConeData cone = load_cone_file(path);
    ClassGroup cg = class_group(cone);
    DecisionReport rep = steady_splitting_decision_toric(cone);
    if (format == "json") {
        Json body;
        body["cone"] = cone_to_json(cone);
        Json rc = Json::array();
        for (const auto& c : cg.ray_classes)
            rc.push_back(element_to_json(c));
        body["ray_classes"] = rc;
        Json report = decision_report_to_json(rep);
        for (auto& [k, v] : report.items())
            body[k] = v;
        std::cout << versioned(body, "toric").dump(2) << "\n";
    } else {
        std::cout << render_toric_text(cone, cg, rep);
    }
    return 0;
}

int cmd_dimer(const std::string& path, const std::string& format, const std::string& dot_path,
              const std::string& polygon_path, std::size_t max_matchings) {
    DimerModel m = load_dimer_file(path);
    DimerReport rep = steady_decision_dimer(m, max_matchings);
    if (format == "json")
        std::cout << versioned(dimer_report_to_json(rep), "dimer").dump(2) << "\n";
    else
        std::cout << render_dimer_text(rep);
    if (!dot_path.empty())
        write_file(dot_path, quiver_to_dot(dual_quiver(m).quiver, "dual_quiver"));
    if (!polygon_path.empty())
        write_file(polygon_path, polygon_to_text(rep.polygon));
    return 0;
}

int cmd_generate(const std::string& group_text, const std::string& weights_text,
                 const std::string& output, const std::string& dot_path,
                 const std::string& format) {
    FinAbGroup G = parse_group(group_text);
    std::vector<GroupElement> w = parse_weights(G, weights_text, 3);
    DimerModel m = generate_hexagonal_dimer(G, w);
    QuiverWithPotential qp = dual_quiver(m);
    bool iso = quiver_isomorphic(qp.quiver, mckay_quiver(G, w));
    check_internal(iso, "generated dimer's dual quiver is not the McKay quiver");
    write_file(output, dimer_to_json(m).dump(2) + "\n");
    if (!dot_path.empty())
        write_file(dot_path, quiver_to_dot(qp.quiver, "dual_quiver"));
    if (format == "json") {
        Json body;
        body["group"] = group_to_json(G);
        Json ws = Json::array();
        for (const auto& x : w)
            ws.push_back(element_to_json(x));
        body["weights"] = ws;
        body["faces"] = m.num_faces();
        body["edges"] = m.num_edges();
        body["vertices"] = m.num_vertices();
        body["output"] = output;
        body["mckay_cross_check"] = "yes";
        std::cout << versioned(body, "generate").dump(2) << "\n";
    } else {
        std::cout << "generated hexagonal dimer: " << m.num_faces() << " faces, "
                  << m.num_edges() << " edges, " << m.num_vertices() << " vertices\n";
        std::cout << "wrote " << output << "\n";
        std::cout << "dual quiver isomorphic to McKay quiver: yes\n";
    }
    return 0;
}

int cmd_mckay(const std::string& group_text, const std::string& weights_text,
              const std::string& dot_path) {
    FinAbGroup G = parse_group(group_text);
    std::vector<GroupElement> w = parse_weights(G, weights_text, 3);
    Quiver q = mckay_quiver(G, w);
    std::string dot = quiver_to_dot(q, "mckay");
    if (dot_path.empty())
        std::cout << dot;
    else
        write_file(dot_path, dot);
    return 0;
}

int cmd_steady(const std::string& group_text, const std::string& classes_text,
               const std::string& format) {
    FinAbGroup G = parse_group(group_text);
    require(G.is_finite(), "infinite_group", "steady test expects a finite group");
    std::set<GroupElement> classes;
    for (const IntVec& coords : parse_element_tuples(classes_text))
        classes.insert(element_from_coords(G, coords));
    ClassSet set{G, classes};
    bool steady = is_steady_class_set(set);
    bool generates = generates_class_group(set);
    auto closure = subgroup_generated(G, classes);
    if (format == "json") {
        Json body;
        body["group"] = group_to_json(G);
        Json cl = Json::array();
        for (const auto& c : classes)
            cl.push_back(element_to_json(c));
        body["classes"] = cl;
        body["steady"] = steady ? "yes" : "no";
        body["generates_class_group"] = generates ? "yes" : "no";
        Json closj = Json::array();
        for (const auto& c : closure)
            closj.push_back(element_to_json(c));
        body["closure"] = closj;
        std::cout << versioned(body, "steady").dump(2) << "\n";
    } else {
        std::cout << "group: " << format_group(G) << "\n";
        std::cout << "steady: " << (steady ? "yes" : "no") << "\n";
        std::cout << "generates Cl: " << (generates ? "yes" : "no") << "\n";
        if (!steady) {
            std::cout << "closure = {";
            bool first = true;
            for (const auto& c : closure) {
                std::cout << (first ? "" : ",") << format_element(c);
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial steady/splitting NCCR certificates for toric "
                 "singularities and dimer models"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cone_path, dimer_path, output, dot_path, polygon_path;
    std::string group_text, weights_text, classes_text;
    std::size_t max_matchings = kDefaultMatchingEdgeBound;

    auto* toric = app.add_subcommand("toric", "analyze a cone file");
    toric->add_option("cone", cone_path, "cone JSON file")->required();
    toric->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* dimer = app.add_subcommand("dimer", "analyze a dimer model file");
    dimer->add_option("dimer", dimer_path, "dimer JSON file")->required();
    dimer->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    dimer->add_option("--emit-dot", dot_path, "write the dual quiver as DOT");
    dimer->add_option("--emit-polygon", polygon_path, "write the matching polygon as text");
    dimer->add_option("--max-matchings", max_matchings,
                      "edge-count bound for matching enumeration");

    auto* generate = app.add_subcommand("generate", "build the hexagonal dimer of quotient data");
    generate->add_option("--group", group_text, "invariant factors, e.g. 14 or 2,4")->required();
    generate->add_option("--weights", weights_text, "three characters, e.g. 1,5,8")->required();
    generate->add_option("--output,-o", output, "dimer JSON output path")->required();
    generate->add_option("--emit-dot", dot_path, "write the dual quiver as DOT");
    generate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* mckay = app.add_subcommand("mckay", "emit a McKay quiver as DOT");
    mckay->add_option("--group", group_text, "invariant factors")->required();
    mckay->add_option("--weights", weights_text, "three characters")->required();
    mckay->add_option("--emit-dot", dot_path, "output path (stdout if omitted)");

    auto* steady = app.add_subcommand("steady", "test a class set for steadiness");
    steady->add_option("--group", group_text, "invariant factors")->required();
    steady->add_option("--classes", classes_text, "class list, e.g. 0,2 or (0,0),(1,0)")
        ->required();
    steady->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        if (toric->parsed())
            return cmd_toric(cone_path, format);
        if (dimer->parsed())
            return cmd_dimer(dimer_path, format, dot_path, polygon_path, max_matchings);
        if (generate->parsed())
            return cmd_generate(group_text, weights_text, output, dot_path, format);
        if (mckay->parsed())
            return cmd_mckay(group_text, weights_text, dot_path);
        if (steady->parsed())
            return cmd_steady(group_text, classes_text, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
