#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netctrl/driver.hpp"
#include "netctrl/graph_io.hpp"
#include "netctrl/matching.hpp"
#include "netctrl/oracle.hpp"
#include "netctrl/random_graphs.hpp"
#include "netctrl/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw netctrl::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad integer: " + token);
        out.push_back(v);
    }
    return out;
}

// Either an inline comma list ("2,4,5") or a path to a file of integers
// separated by whitespace or commas.
netctrl::NodeSet parse_node_argument(const std::string& arg) {
    if (arg.empty()) return {};
    try {
        return netctrl::NodeSet::from(parse_int_list(arg));
    } catch (const std::exception&) {
        // fall through to file handling
    }
    std::ifstream in(arg);
    if (!in) throw netctrl::ParseError("--inaccessible/--drivers: neither a comma list nor a readable file: " + arg);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        for (auto& part : parse_int_list(token)) out.push_back(part);
    }
    return netctrl::NodeSet::from(std::move(out));
}

struct CommonOptions {
    std::string format = "edge-list";
    std::string output = "json";
};

netctrl::Digraph load_graph(const std::string& path, const CommonOptions& opts) {
    return netctrl::parse_graph(read_input(path), netctrl::parse_format_name(opts.format));
}

int run_analyze(const std::vector<std::string>& inputs, const CommonOptions& opts,
                const std::string& inaccessible_arg, int jobs) {
    netctrl::NodeSet inaccessible = parse_node_argument(inaccessible_arg);

    struct Slot {
        std::string text;
        int code = kExitOk;
    };
    std::vector<Slot> slots(inputs.size());

    auto work = [&](std::size_t i) {
        try {
            netctrl::Digraph g = load_graph(inputs[i], opts);
            netctrl::DriverReport report = netctrl::select_driver_nodes(g, inaccessible);
            slots[i].text = opts.output == "text" ? netctrl::report_to_text(report)
                                                  : netctrl::report_to_json(report).dump() + "\n";
        } catch (const netctrl::InfeasibleError& e) {
            slots[i].code = kExitInfeasible;
            std::ostringstream msg;
            msg << inputs[i] << ": infeasible: " << e.what() << "\n";
            std::cerr << msg.str();
        } catch (const std::exception& e) {
            slots[i].code = kExitInputError;
            std::ostringstream msg;
            msg << inputs[i] << ": error: " << e.what() << "\n";
            std::cerr << msg.str();
        }
    };

    if (jobs > 1 && inputs.size() > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::size_t workers = std::min<std::size_t>(jobs, inputs.size());
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < inputs.size(); ++i) work(i);
    }

    int code = kExitOk;
    for (const auto& slot : slots) {
        std::cout << slot.text;
        code = std::max(code, slot.code);
    }
    return code;
}

int run_verify(const std::string& input, const CommonOptions& opts, const std::string& drivers_arg) {
    netctrl::Digraph g = load_graph(input, opts);
    netctrl::NodeSet drivers = parse_node_argument(drivers_arg);
    netctrl::VerificationResult v = netctrl::verify_structural_controllability(g, drivers);
    if (opts.output == "text")
        std::cout << netctrl::verification_to_text(v);
    else
        std::cout << netctrl::verification_to_json(v).dump() << "\n";
    return v.controllable() ? kExitOk : kExitInfeasible;
}

int run_oracle(const std::string& input, const CommonOptions& opts,
               const std::string& inaccessible_arg, const std::string& drivers_arg, int trials,
               std::uint64_t seed, int limit) {
    netctrl::Digraph g = load_graph(input, opts);
    netctrl::NodeSet inaccessible = parse_node_argument(inaccessible_arg);

    nlohmann::ordered_json doc;
    std::ostringstream text;
    bool agree = true;
    bool infeasible = false;

    if (!drivers_arg.empty()) {
        netctrl::NodeSet drivers = parse_node_argument(drivers_arg);
        auto structural = netctrl::verify_structural_controllability(g, drivers);
        auto numeric = netctrl::numeric_controllability_check(g, drivers, trials, seed);
        agree = structural.controllable() == numeric.full_rank;
        doc["structural"] = netctrl::verification_to_json(structural);
        doc["numeric"] = {{"full_rank", numeric.full_rank}, {"max_rank", numeric.max_rank}};
        text << "structural: " << netctrl::verification_to_text(structural);
        text << "numeric: rank " << numeric.max_rank << "/" << g.node_count() << "\n";
    } else {
        int formula_count = -1;
        bool formula_feasible = true;
        try {
            formula_count = netctrl::min_driver_count(g, inaccessible);
        } catch (const netctrl::InfeasibleError&) {
            formula_feasible = false;
        }
        auto brute = netctrl::brute_force_min_drivers(g, inaccessible, limit);
        agree = formula_feasible == brute.feasible &&
                (!brute.feasible || formula_count == brute.count);
        doc["formula"] = formula_feasible ? nlohmann::ordered_json(formula_count)
                                          : nlohmann::ordered_json("infeasible");
        doc["brute_force"] = brute.feasible ? nlohmann::ordered_json(brute.count)
                                            : nlohmann::ordered_json("infeasible");
        text << "formula: "
             << (formula_feasible ? std::to_string(formula_count) : std::string("infeasible"))
             << "\n";
        text << "brute force: "
             << (brute.feasible ? std::to_string(brute.count) : std::string("infeasible")) << "\n";

        if (formula_feasible && brute.feasible) {
            auto report = netctrl::select_driver_nodes(g, inaccessible);
            auto numeric =
                netctrl::numeric_controllability_check(g, report.drivers, trials, seed);
            agree = agree && report.verified() && numeric.full_rank;
            doc["selected"] = netctrl::report_to_json(report)["drivers"];
            doc["numeric"] = {{"full_rank", numeric.full_rank}, {"max_rank", numeric.max_rank}};
            text << "numeric on selection: rank " << numeric.max_rank << "/" << g.node_count()
                 << "\n";
        } else {
            infeasible = true;
        }
    }

    doc["agreement"] = agree;
    text << "agreement: " << (agree ? "yes" : "no") << "\n";
    if (opts.output == "text")
        std::cout << text.str();
    else
        std::cout << doc.dump() << "\n";

    if (!agree) {
        std::cerr << "oracle: routes disagree\n";
        return kExitInfeasible;
    }
    return infeasible ? kExitInfeasible : kExitOk;
}

int run_gen(const CommonOptions& opts, const std::string& model_name, int n, double p, int k,
            double beta, int m, std::uint64_t seed) {
    netctrl::RandomModel model = netctrl::parse_model_name(model_name);
    netctrl::RandomParams params;
    params.p = p;
    params.k = k;
    params.beta = beta;
    params.m = m;
    netctrl::Digraph g = netctrl::generate_random(model, n, params, seed);
    std::cout << netctrl::write_graph(g, netctrl::parse_format_name(opts.format));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural controllability analysis of directed networks"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::vector<std::string> inputs;
    std::string inaccessible_arg;
    std::string drivers_arg;
    int jobs = 1;
    int trials = 5;
    int limit = 12;
    std::uint64_t seed = 1;
    std::string model_name = "erdos-renyi";
    int n = 0;
    double p = 0.0;
    int k = 0;
    double beta = 0.0;
    int m = 0;

    auto add_common = [&](CLI::App* cmd, bool multi_input) {
        if (multi_input)
            cmd->add_option("--input", inputs, "input graph file(s), '-' for stdin")->required();
        else
            cmd->add_option("--input", inputs, "input graph file, '-' for stdin")
                ->required()
                ->expected(1);
        cmd->add_option("--format", opts.format, "graph format")
            ->check(CLI::IsMember({"edge-list", "json", "dot"}));
        cmd->add_option("--output", opts.output, "report format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "select a minimum driver set");
    add_common(analyze, true);
    analyze->add_option("--inaccessible", inaccessible_arg, "comma list or file of inaccessible nodes");
    analyze->add_option("--jobs", jobs, "worker threads for multi-file analysis")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "check a driver set");
    add_common(verify, false);
    verify->add_option("--drivers", drivers_arg, "comma list or file of driver nodes")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "cross-check against enumeration and a numeric realization");
    add_common(oracle, false);
    oracle->add_option("--inaccessible", inaccessible_arg, "comma list or file of inaccessible nodes");
    oracle->add_option("--drivers", drivers_arg, "check these drivers instead of comparing counts");
    oracle->add_option("--trials", trials, "numeric trials")->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "numeric realization seed");
    oracle->add_option("--limit", limit, "brute-force node limit")->check(CLI::PositiveNumber);

    CLI::App* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--model", model_name, "erdos-renyi | small-world | scale-free")
        ->check(CLI::IsMember({"erdos-renyi", "small-world", "scale-free"}));
    gen->add_option("--n", n, "node count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", p, "edge probability (erdos-renyi)");
    gen->add_option("--k", k, "ring out-degree (small-world)");
    gen->add_option("--beta", beta, "rewiring probability (small-world)");
    gen->add_option("--m", m, "out-edges per new node (scale-free)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--format", opts.format, "output graph format")
        ->check(CLI::IsMember({"edge-list", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) return run_analyze(inputs, opts, inaccessible_arg, jobs);
        if (verify->parsed()) return run_verify(inputs.at(0), opts, drivers_arg);
        if (oracle->parsed())
            return run_oracle(inputs.at(0), opts, inaccessible_arg, drivers_arg, trials, seed, limit);
        if (gen->parsed()) return run_gen(opts, model_name, n, p, k, beta, m, seed);
    } catch (const netctrl::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
