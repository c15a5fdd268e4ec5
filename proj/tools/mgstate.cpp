// mgstate: mixed graph state analysis from the command line.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mgs/report.hpp"
#include "mgs/verify.hpp"

namespace fs = std::filesystem;
using namespace mgs;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Json> load_golden(const std::string& graph_path, const std::string& golden_path) {
    std::string path = golden_path;
    if (path.empty()) {
        fs::path sidecar = fs::path(graph_path).replace_extension(".golden.json");
        if (!fs::exists(sidecar)) {
            return std::nullopt;
        }
        path = sidecar.string();
    }
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mgstate: stabilizers, subgroups, parents and children of mixed graph states"};
    app.require_subcommand(1);

    std::string path;
    std::string golden;
    bool json = false;
    bool all = false;
    std::optional<size_t> subgroup;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("graph", path, "graph file")->required();
        sub->add_flag("--json", json, "emit JSON");
    };
    auto* analyze = app.add_subcommand("analyze", "skeleton, mixed rank, stabilizer and dual rows");
    auto* subgroups = app.add_subcommand("subgroups", "maximal commutative subgroups of the dual group");
    auto* children = app.add_subcommand("children", "parent extensions and child density matrices");
    auto* signfree = app.add_subcommand("signfree", "row subsets with order-independent products");
    auto* verify = app.add_subcommand("verify", "run every invariant, plus golden comparisons");
    for (auto* s : {analyze, subgroups, children, signfree, verify}) {
        add_common(s);
    }
    auto* sub_opt = children->add_option("--subgroup", subgroup, "subgroup index");
    auto* all_opt = children->add_flag("--all", all, "every subgroup (default)");
    sub_opt->excludes(all_opt);
    verify->add_option("--golden", golden, "golden file (default: <graph>.golden.json when present)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        RunContext ctx;
        ctx.max_qubits = max_qubits_from_env();
        std::string text;
        try {
            text = read_file(path);
        } catch (const std::runtime_error& e) {
            throw InputError(e.what());
        }
        MixedGraph g = parse_graph(text);
        ctx.digest = input_digest(text);

        CommandResult r;
        if (*analyze) {
            ctx.command = "analyze";
            r = cmd_analyze(g, ctx);
        } else if (*subgroups) {
            ctx.command = "subgroups";
            r = cmd_subgroups(g, ctx);
        } else if (*children) {
            ctx.command = "children";
            r = cmd_children(g, ctx, subgroup);
        } else if (*signfree) {
            ctx.command = "signfree";
            r = cmd_signfree(g, ctx);
        } else {
            ctx.command = "verify";
            r = cmd_verify(g, ctx, load_golden(path, golden));
        }
        std::cout << (json ? r.json.dump(2) + "\n" : r.text);
        return r.exit_code;
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInput;
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kInput;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kInput;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInput;
    }
}
