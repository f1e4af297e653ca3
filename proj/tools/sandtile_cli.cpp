#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sandtile/io.hpp"
#include "sandtile/svg.hpp"

namespace {

using namespace sandtile;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("JSON parse error: ") + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw validation_error("cannot open output file: " + out_path);
    out << content;
}

void write_json(const std::string& out_path, const json& j) {
    write_output(out_path, j.dump(2) + "\n");
}

ShiftingVector shifting_arg(const StandardRepMatrix& d, const std::string& s) {
    return validate_shifting(d, parse_rational_vector(s));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sandpile groups, basis multijections, and periodic tiles of "
                 "standard representative matrices"};
    app.require_subcommand(1);

    std::string input, out_path, w_str, w2_str, kind_str = "prime", project;
    bool grid = false;

    auto add_common = [&](CLI::App* cmd, bool needs_w) {
        cmd->add_option("input", input, "input JSON file")->required();
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        auto* opt = cmd->add_option("-w,--shifting", w_str,
                                    "shifting vector, comma-separated rationals");
        if (needs_w) opt->required();
        return cmd;
    };

    auto* analyze = add_common(app.add_subcommand("analyze", "basis table, group order, "
                                                             "matrix-tree check"),
                               false);
    auto* reps = add_common(
        app.add_subcommand("reps", "fibers of the sandpile multijection"), true);
    reps->add_option("--project", project, "project representatives (first|last)")
        ->check(CLI::IsMember({"first", "last"}));
    auto* lower = add_common(
        app.add_subcommand("lower", "lower-dimensional tile representatives"), true);
    lower->add_option("--kind", kind_str, "prime | double-prime")
        ->check(CLI::IsMember({"prime", "double-prime"}));
    auto* tile = add_common(app.add_subcommand("tile-svg", "render a 2-D tile as SVG"),
                            false);
    tile->add_option("--kind", kind_str, "full | prime | double-prime")
        ->check(CLI::IsMember({"full", "prime", "double-prime"}));
    tile->add_flag("--grid", grid, "draw a 3x3 grid of lattice translates");
    auto* graph_cmd = add_common(
        app.add_subcommand("graph", "standard representative matrix of a graph"), false);
    auto* chambers = add_common(
        app.add_subcommand("chambers", "chamber equivalence of two shifting vectors"),
        true);
    chambers->add_option("--w2", w2_str, "second shifting vector")->required();
    auto* corners = add_common(
        app.add_subcommand("corners", "w-associated corner points and {0,1}^n forms"),
        true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            write_json(out_path, analyze_report(matrix_from_json(load_json(input))));
        } else if (reps->parsed()) {
            auto d = matrix_from_json(load_json(input));
            auto f = w_representatives(d, shifting_arg(d, w_str));
            if (!project.empty()) {
                for (auto& [b, pts] : f.fibers) {
                    for (auto& p : pts)
                        p = project == "first" ? project_first(d, p) : project_last(d, p);
                    std::sort(pts.begin(), pts.end());
                }
            }
            write_json(out_path, fiber_report(f));
        } else if (lower->parsed()) {
            auto d = matrix_from_json(load_json(input));
            auto w = shifting_arg(d, w_str);
            auto t = build_lower_tile(
                d, w, kind_str == "prime" ? LowerKind::Prime : LowerKind::DoublePrime);
            write_json(out_path, lower_report(d, t, w));
        } else if (tile->parsed()) {
            auto d = matrix_from_json(load_json(input));
            TileKind kind = kind_str == "full"    ? TileKind::Full
                            : kind_str == "prime" ? TileKind::Prime
                                                  : TileKind::DoublePrime;
            std::optional<ShiftingVector> w;
            if (!w_str.empty()) w = shifting_arg(d, w_str);
            write_output(out_path, tile_svg(d, kind, w ? &*w : nullptr, grid));
        } else if (graph_cmd->parsed()) {
            json gj = load_json(input);
            Graph g = graph_from_json(gj);
            auto tree = tree_from_json(gj);
            TreeData td = tree ? tree_data(g, *tree) : spanning_tree(g);
            auto d = graph_to_srm(g, td);
            json report = {{"tree", td.tree_edges},
                           {"edge_order", td.permutation},
                           {"matrix", matrix_to_json(d)},
                           {"group_order",
                            analyze_report(d)["group_order"]}};
            if (!w_str.empty()) {
                auto f = w_representatives(d, shifting_arg(d, w_str));
                report["fibers"] = fiber_report(f)["fibers"];
            }
            write_json(out_path, report);
        } else if (chambers->parsed()) {
            auto d = matrix_from_json(load_json(input));
            write_json(out_path, chambers_report(d, shifting_arg(d, w_str),
                                                 shifting_arg(d, w2_str)));
        } else if (corners->parsed()) {
            auto d = matrix_from_json(load_json(input));
            write_json(out_path, corners_report(d, shifting_arg(d, w_str)));
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
