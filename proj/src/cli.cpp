#include "galetope/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galetope/errors.hpp"
#include "galetope/families.hpp"
#include "galetope/io.hpp"

namespace galetope {

namespace {

std::vector<std::string> split_checks(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_generate(const std::string& family, int dim, int vertices, const std::string& out) {
    FamilySpec spec;
    if (family == "cyclic")
        spec.family = Family::Cyclic;
    else if (family == "braxtope")
        spec.family = Family::Braxtope;
    else if (family == "multiplex")
        spec.family = Family::Multiplex;
    else
        throw InvalidInputError("unknown family '" + family + "'");
    spec.dim = dim;
    spec.num_vertices = vertices;
    const CombPolytope p = generate(spec);
    write_file(out, to_json(p));
    std::cout << family << " dim=" << dim << " vertices=" << vertices << " facets="
              << p.facets.size() << " -> " << out << "\n";
    return 0;
}

int cmd_construct(int dim, int period, int vertices, const std::string& out,
                  const std::string& log) {
    const ConstructionState state = build(dim, period, vertices - 1);
    write_file(out, to_json(state.polytope));
    if (!log.empty()) write_file(log, to_json(state));
    std::cout << "construction dim=" << dim << " period=" << period << " vertices=" << vertices
              << " facets=" << state.polytope.facets.size() << " -> " << out << "\n";
    return 0;
}

int cmd_realize(const std::string& log_path, const std::string& out) {
    const ConstructionState state = construction_from_json(read_file(log_path));
    const Realization r = realize_construction(state);
    write_file(out, to_json(r));
    std::cout << "realized " << r.points.size() << " points in dimension " << r.dim << " -> "
              << out << "\n";
    return 0;
}

int cmd_verify(const std::string& polytope_path, const std::string& realization_path,
               const std::string& checks_spec) {
    const CombPolytope p = polytope_from_json(read_file(polytope_path));
    Realization r;
    bool have_realization = false;
    if (!realization_path.empty()) {
        r = realization_from_json(read_file(realization_path));
        have_realization = true;
    }

    bool any_fail = false;
    const auto line = [&any_fail](const std::string& name, bool pass, const std::string& note) {
        std::cout << name << ' ' << (pass ? "PASS" : "FAIL");
        if (!note.empty()) std::cout << ' ' << note;
        std::cout << '\n';
        if (!pass) any_fail = true;
    };

    const std::vector<std::string> checks = split_checks(checks_spec);
    if (checks.empty()) throw InvalidInputError("no checks requested");
    for (const std::string& c : checks) {
        if (c == "gale") {
            line("gale", is_gale_polytope(p), "");
        } else if (c == "simplicial") {
            line("simplicial", is_simplicial(p), "");
        } else if (c == "braxial") {
            line("braxial", is_braxial(p), "");
        } else if (c == "multiplicial") {
            line("multiplicial", is_multiplicial(p), "");
        } else if (c == "theorems") {
            if (!have_realization)
                throw InvalidInputError("check 'theorems' needs --realization");
            if (hull_facets(r) != p)
                throw InvalidInputError("realization does not realize the polytope");
            Realization prev;
            prev.dim = r.dim;
            prev.points.assign(r.points.begin(), r.points.end() - 1);
            const TheoremReport report =
                run_structure_checks(p, hull_facets(prev), r);
            std::cout << render_report(report);
            if (!report.all_pass()) any_fail = true;
        } else if (c.rfind("period:", 0) == 0) {
            if (!have_realization)
                throw InvalidInputError("check 'period:K' needs --realization");
            if (hull_facets(r) != p)
                throw InvalidInputError("realization does not realize the polytope");
            const int k = std::stoi(c.substr(7));
            std::cout << "# period check uses the induced vertex order\n";
            line("period:" + std::to_string(k), is_periodically_cyclic(r, k), "");
        } else {
            throw InvalidInputError("unknown check '" + c + "'");
        }
    }
    return any_fail ? 1 : 0;
}

int cmd_classify(const std::string& polytope_path) {
    const CombPolytope p = polytope_from_json(read_file(polytope_path));
    std::cout << to_string(classify_gale_braxial(p)) << "\n";
    return 0;
}

int cmd_oracle(const std::string& points_path, const std::string& out) {
    const Realization r = realization_from_json(read_file(points_path));
    const CombPolytope p = hull_facets(r);
    write_file(out, to_json(p));
    std::cout << "hull of " << r.points.size() << " points: " << p.facets.size()
              << " facets -> " << out << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact toolkit for Gale, braxial and periodically-cyclic polytopes"};
    app.require_subcommand(1);

    std::string family, out, log, construction, polytope, realization, checks, points;
    int dim = 0, vertices = 0, period = 0;

    CLI::App* generate = app.add_subcommand("generate", "emit a family's facet file");
    generate->add_option("--family", family, "cyclic|braxtope|multiplex")->required();
    generate->add_option("--dim", dim)->required();
    generate->add_option("--vertices", vertices)->required();
    generate->add_option("--out", out)->required();

    CLI::App* construct = app.add_subcommand("construct", "run the incremental construction");
    construct->add_option("--dim", dim)->required();
    construct->add_option("--period", period)->required();
    construct->add_option("--vertices", vertices)->required();
    construct->add_option("--out", out)->required();
    construct->add_option("--log", log);

    CLI::App* realize = app.add_subcommand("realize", "exact coordinates for a construction log");
    realize->add_option("--construction", construction)->required();
    realize->add_option("--out", out)->required();

    CLI::App* verify = app.add_subcommand("verify", "run property checks");
    verify->add_option("--polytope", polytope)->required();
    verify->add_option("--realization", realization);
    verify->add_option("--checks", checks,
                       "comma list: gale,simplicial,braxial,multiplicial,theorems,period:K")
        ->required();

    CLI::App* classify = app.add_subcommand("classify", "edge-star classification");
    classify->add_option("--polytope", polytope)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact hull facets of a point file");
    oracle->add_option("--points", points)->required();
    oracle->add_option("--out", out)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(family, dim, vertices, out);
        if (construct->parsed()) return cmd_construct(dim, period, vertices, out, log);
        if (realize->parsed()) return cmd_realize(construction, out);
        if (verify->parsed()) return cmd_verify(polytope, realization, checks);
        if (classify->parsed()) return cmd_classify(polytope);
        if (oracle->parsed()) return cmd_oracle(points, out);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedParametersError& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return 2;
    } catch (const NotPolytopalError& e) {
        std::cerr << "not polytopal: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateInputError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateStepError& e) {
        std::cerr << "degenerate step: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    }
}

} // namespace galetope
