// Command-line front-end: validation, scanwidth, diversity solvers, oracle
// cross-checks, instance generation, ILP export, benchmarking.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nswpd/exact.hpp"
#include "nswpd/extension.hpp"
#include "nswpd/generate.hpp"
#include "nswpd/graph.hpp"
#include "nswpd/ilp.hpp"
#include "nswpd/newick.hpp"
#include "nswpd/oracle.hpp"
#include "nswpd/pd.hpp"

namespace {

using json = nlohmann::json;
using nswpd::Rational;

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

class bad_argument : public std::runtime_error {
public:
    explicit bad_argument(const std::string& msg) : std::runtime_error(msg) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << content;
    if (!out) throw io_error("write failed on " + path);
}

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return json(r.numerator());
    return json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

class Stopwatch {
public:
    long long millis() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Shared flag bundle for the net/cost/budget/extension plumbing.
struct CommonOpts {
    std::string net_path;
    std::string costs_path;
    bool unit_costs = false;
    long long budget = -1;
    double budget_frac = -1.0;
    std::string taxa_list;
    std::string extension_path;
    bool strict = false;
};

void add_net_option(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--net", opts.net_path, "input network (eNewick)")->required();
    cmd->add_flag("--strict", opts.strict, "require in-degree-2 reticulations");
}

void add_cost_options(CLI::App* cmd, CommonOpts& opts) {
    auto* costs = cmd->add_option("--costs", opts.costs_path, "taxon cost CSV");
    auto* unit = cmd->add_flag("--unit-costs", opts.unit_costs, "cost 1 per taxon");
    costs->excludes(unit);
}

void add_budget_options(CLI::App* cmd, CommonOpts& opts) {
    auto* b = cmd->add_option("--budget", opts.budget, "budget B");
    auto* f = cmd->add_option("--budget-frac", opts.budget_frac,
                              "B = floor(frac * total taxon cost)")
                  ->check(CLI::Range(0.0, 1.0));
    b->excludes(f);
}

nswpd::Network load_network(const CommonOpts& opts) {
    return nswpd::Network::validate(nswpd::parse_enewick(read_file(opts.net_path)),
                                    opts.strict);
}

nswpd::CostTable load_costs(const CommonOpts& opts, const nswpd::Network& net) {
    if (opts.unit_costs) return nswpd::unit_costs(net);
    if (opts.costs_path.empty()) throw bad_argument("need --costs FILE or --unit-costs");
    return nswpd::parse_costs(read_file(opts.costs_path), net);
}

long long resolve_budget(const CommonOpts& opts, const nswpd::CostTable& costs) {
    if (opts.budget >= 0) return opts.budget;
    if (opts.budget_frac >= 0.0)
        return static_cast<long long>(opts.budget_frac *
                                      static_cast<double>(nswpd::total_cost(costs)));
    throw bad_argument("need --budget or --budget-frac");
}

nswpd::TaxonSet parse_taxa(const nswpd::Network& net, const std::string& list) {
    std::vector<std::string> names;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ','))
        if (!item.empty()) names.push_back(item);
    try {
        return nswpd::make_taxon_set(net, names);
    } catch (const std::out_of_range&) {
        throw bad_argument("unknown taxon in --taxa list");
    }
}

// Extension from file if given, otherwise from the exact pipeline.
std::vector<int> resolve_extension(const CommonOpts& opts, const nswpd::Network& net) {
    if (!opts.extension_path.empty())
        return nswpd::parse_extension(net.dag(), read_file(opts.extension_path));
    return nswpd::nsw_pipeline(net.dag()).extension.parent_map();
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

json taxa_names(const nswpd::Network& net, const nswpd::TaxonSet& taxa) {
    json names = json::array();
    for (int leaf : taxa) names.push_back(net.taxon(leaf));
    return names;
}

int run_validate(const CommonOpts& opts) {
    Stopwatch clock;
    nswpd::Network net = load_network(opts);
    emit({{"problem", "validate"},
          {"value", 1},
          {"taxa", taxa_names(net, net.leaves())},
          {"millis", clock.millis()}});
    return 0;
}

struct NswOpts {
    CommonOpts common;
    bool exact = true;
    bool heuristic = false;
    bool no_reduce = false;
    int upper_bound = -1;
    std::string out_path;
};

int run_nsw(const NswOpts& opts) {
    Stopwatch clock;
    // Scanwidth is defined for arbitrary DAGs, so skip network validation.
    nswpd::Dag g = nswpd::parse_enewick(read_file(opts.common.net_path));
    nswpd::NswOptions options;
    if (opts.upper_bound >= 0) options.upper_bound = opts.upper_bound;
    nswpd::NswResult result =
        opts.heuristic ? nswpd::heuristic_extension(g)
        : opts.no_reduce ? nswpd::optimal_extension_exact(g, options)
                         : nswpd::nsw_pipeline(g, options);
    std::string out = opts.out_path.empty() ? opts.common.net_path + ".ext" : opts.out_path;
    write_file(out, nswpd::serialize_extension(g, result.extension.parent_map()));
    emit({{"problem", "nsw"},
          {"value", result.width},
          {"nsw", result.width},
          {"millis", clock.millis()}});
    return 0;
}

int run_pd_budgeted(const CommonOpts& opts, bool maxtree) {
    Stopwatch clock;
    nswpd::Network net = load_network(opts);
    nswpd::CostTable costs = load_costs(opts, net);
    long long budget = resolve_budget(opts, costs);
    std::vector<int> parent = resolve_extension(opts, net);
    int nsw = nswpd::nsw_of(net.dag(), parent);
    nswpd::BudgetedResult result =
        maxtree ? nswpd::solve_b_maxtree_pd(net, costs, budget, parent)
                : nswpd::solve_b_map_pd(net, costs, budget, parent);
    emit({{"problem", maxtree ? "pd-max" : "pd-map"},
          {"value", rational_json(result.value)},
          {"taxa", taxa_names(net, result.taxa)},
          {"budget", budget},
          {"nsw", nsw},
          {"millis", clock.millis()}});
    return 0;
}

int run_pd_min(const CommonOpts& opts) {
    Stopwatch clock;
    nswpd::Network net = load_network(opts);
    nswpd::TaxonSet taxa = parse_taxa(net, opts.taxa_list);
    std::vector<int> parent = resolve_extension(opts, net);
    int nsw = nswpd::nsw_of(net.dag(), parent);
    Rational value = nswpd::compute_min_tree_pd(net, taxa, parent);
    emit({{"problem", "pd-min"},
          {"value", rational_json(value)},
          {"taxa", taxa_names(net, taxa)},
          {"nsw", nsw},
          {"millis", clock.millis()}});
    return 0;
}

int run_oracle_budgeted(const CommonOpts& opts, bool maxtree) {
    Stopwatch clock;
    nswpd::Network net = load_network(opts);
    nswpd::CostTable costs = load_costs(opts, net);
    long long budget = resolve_budget(opts, costs);
    nswpd::BruteBudgetedResult result = nswpd::brute_budgeted(
        net, costs, budget,
        maxtree ? nswpd::BudgetedVariant::MaxTree : nswpd::BudgetedVariant::Map);
    emit({{"problem", maxtree ? "oracle-max" : "oracle-map"},
          {"value", rational_json(result.value)},
          {"taxa", taxa_names(net, result.taxa)},
          {"budget", budget},
          {"millis", clock.millis()}});
    return 0;
}

int run_oracle_min(const CommonOpts& opts) {
    Stopwatch clock;
    nswpd::Network net = load_network(opts);
    nswpd::TaxonSet taxa = parse_taxa(net, opts.taxa_list);
    Rational value = nswpd::brute_pd_min(net, taxa);
    emit({{"problem", "oracle-min"},
          {"value", rational_json(value)},
          {"taxa", taxa_names(net, taxa)},
          {"millis", clock.millis()}});
    return 0;
}

int run_oracle_nsw(const CommonOpts& opts) {
    Stopwatch clock;
    nswpd::Dag g = nswpd::parse_enewick(read_file(opts.net_path));
    nswpd::ExhaustiveNswResult result = nswpd::exhaustive_nsw(g);
    emit({{"problem", "oracle-nsw"},
          {"value", result.width},
          {"nsw", result.width},
          {"millis", clock.millis()}});
    return 0;
}

struct GenOpts {
    uint64_t seed = 1;
    int leaves = 0;
    int reticulations = 0;
    double contract_frac = 0.0;
    std::string out_prefix = "instance";
};

int run_gen(const GenOpts& opts) {
    Stopwatch clock;
    nswpd::Network net = nswpd::gen_network(opts.leaves, opts.reticulations, opts.seed);
    if (opts.contract_frac > 0.0)
        net = nswpd::contract_shortest(net, opts.contract_frac, opts.seed);
    nswpd::CostTable costs = nswpd::sample_costs(net, opts.seed);
    write_file(opts.out_prefix + ".enwk", nswpd::serialize_enewick(net) + "\n");
    write_file(opts.out_prefix + ".costs.csv", nswpd::serialize_costs(costs));
    emit({{"problem", "gen"},
          {"taxa", taxa_names(net, net.leaves())},
          {"seed", opts.seed},
          {"millis", clock.millis()}});
    return 0;
}

int run_ilp_emit(const CommonOpts& opts, const std::string& out_path) {
    Stopwatch clock;
    nswpd::Dag g = nswpd::parse_enewick(read_file(opts.net_path));
    std::string out = out_path.empty() ? opts.net_path + ".lp" : out_path;
    write_file(out, nswpd::emit_ilp(g));
    emit({{"problem", "ilp-emit"}, {"millis", clock.millis()}});
    return 0;
}

int run_ilp_check(const CommonOpts& opts) {
    Stopwatch clock;
    nswpd::Dag g = nswpd::parse_enewick(read_file(opts.net_path));
    std::vector<int> parent =
        nswpd::parse_extension(g, read_file(opts.extension_path));
    nswpd::IlpModel model = nswpd::build_ilp(g);
    nswpd::CheckResult result =
        nswpd::check_assignment(model, nswpd::encode_extension(g, parent));
    for (const std::string& name : result.violated)
        std::cerr << "violated: " << name << "\n";
    emit({{"problem", "ilp-check"},
          {"value", result.feasible ? 1 : 0},
          {"nsw", result.objective},
          {"millis", clock.millis()}});
    return result.feasible ? 0 : 3;
}

struct BenchOpts {
    std::string corpus_dir;
    std::vector<double> fractions{0.25, 0.5, 0.9};
    std::string out_path;
};

void bench_row(std::ostream& out, const std::string& instance, int n_leaves, int level,
               int nsw, const std::string& problem, const std::string& frac,
               long long millis, const Rational& value) {
    out << instance << "," << n_leaves << "," << level << "," << nsw << "," << problem
        << "," << frac << "," << millis << ",";
    if (value.denominator() == 1)
        out << value.numerator();
    else
        out << value.numerator() << "/" << value.denominator();
    out << "\n";
}

int run_bench(const BenchOpts& opts) {
    namespace fs = std::filesystem;
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(opts.corpus_dir))
        if (entry.path().extension() == ".enwk") inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    std::ostringstream csv;
    csv << "instance,n_leaves,level,nsw,problem,budget_frac,millis,value\n";
    for (const fs::path& path : inputs) {
        nswpd::Network net =
            nswpd::Network::validate(nswpd::parse_enewick(read_file(path.string())));
        fs::path cost_path = path;
        cost_path.replace_extension(".costs.csv");
        nswpd::CostTable costs = fs::exists(cost_path)
                                     ? nswpd::parse_costs(read_file(cost_path.string()), net)
                                     : nswpd::unit_costs(net);
        std::string name = path.stem().string();
        int n_leaves = static_cast<int>(net.leaves().size());
        int level = nswpd::network_level(net);

        Stopwatch nsw_clock;
        nswpd::NswResult nsw = nswpd::nsw_pipeline(net.dag());
        bench_row(csv, name, n_leaves, level, nsw.width, "nsw", "", nsw_clock.millis(),
                  Rational(nsw.width));

        const std::vector<int>& parent = nsw.extension.parent_map();
        long long total = nswpd::total_cost(costs);
        for (double frac : opts.fractions) {
            long long budget = static_cast<long long>(frac * static_cast<double>(total));
            std::ostringstream frac_text;
            frac_text << frac;
            for (bool maxtree : {false, true}) {
                Stopwatch clock;
                nswpd::BudgetedResult result =
                    maxtree ? nswpd::solve_b_maxtree_pd(net, costs, budget, parent)
                            : nswpd::solve_b_map_pd(net, costs, budget, parent);
                bench_row(csv, name, n_leaves, level, nsw.width,
                          maxtree ? "pd-max" : "pd-map", frac_text.str(), clock.millis(),
                          result.value);
            }
        }
        Stopwatch min_clock;
        Rational min_value = nswpd::compute_min_tree_pd(net, net.leaves(), parent);
        bench_row(csv, name, n_leaves, level, nsw.width, "pd-min", "",
                  min_clock.millis(), min_value);
    }
    if (opts.out_path.empty())
        std::cout << csv.str();
    else
        write_file(opts.out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"node-scanwidth tree-extensions and phylogenetic diversity solvers"};
    app.require_subcommand(1);

    CommonOpts validate_opts;
    auto* validate = app.add_subcommand("validate", "check a network file");
    add_net_option(validate, validate_opts);

    NswOpts nsw_opts;
    auto* nsw = app.add_subcommand("nsw", "optimal node scanwidth extension");
    add_net_option(nsw, nsw_opts.common);
    nsw->add_flag("--exact", nsw_opts.exact, "exact solve (default)");
    nsw->add_flag("--heuristic", nsw_opts.heuristic, "greedy upper bound only");
    nsw->add_flag("--no-reduce", nsw_opts.no_reduce, "skip reduction rules");
    nsw->add_option("--upper-bound", nsw_opts.upper_bound, "fail if nsw exceeds K");
    nsw->add_option("--out", nsw_opts.out_path, "extension output file");

    auto* pd = app.add_subcommand("pd", "diversity solvers over an extension");
    pd->require_subcommand(1);
    CommonOpts pd_map_opts, pd_max_opts, pd_min_opts;
    auto* pd_map = pd->add_subcommand("map", "budgeted all-paths diversity");
    auto* pd_max = pd->add_subcommand("max", "budgeted best-switching-tree diversity");
    auto* pd_min = pd->add_subcommand("min", "worst-switching-tree diversity of a set");
    for (auto [cmd, opts] : {std::pair{pd_map, &pd_map_opts}, {pd_max, &pd_max_opts}}) {
        add_net_option(cmd, *opts);
        add_cost_options(cmd, *opts);
        add_budget_options(cmd, *opts);
        cmd->add_option("--extension", opts->extension_path, "precomputed extension file");
    }
    add_net_option(pd_min, pd_min_opts);
    pd_min->add_option("--taxa", pd_min_opts.taxa_list, "comma-separated taxon names")
        ->required();
    pd_min->add_option("--extension", pd_min_opts.extension_path,
                       "precomputed extension file");

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle->require_subcommand(1);
    CommonOpts or_map_opts, or_max_opts, or_min_opts, or_nsw_opts;
    auto* or_map = oracle->add_subcommand("map", "budgeted all-paths by enumeration");
    auto* or_max = oracle->add_subcommand("max", "budgeted max-tree by enumeration");
    auto* or_min = oracle->add_subcommand("min", "min-tree by switching enumeration");
    auto* or_nsw = oracle->add_subcommand("nsw", "scanwidth by extension enumeration");
    for (auto [cmd, opts] : {std::pair{or_map, &or_map_opts}, {or_max, &or_max_opts}}) {
        add_net_option(cmd, *opts);
        add_cost_options(cmd, *opts);
        add_budget_options(cmd, *opts);
    }
    add_net_option(or_min, or_min_opts);
    or_min->add_option("--taxa", or_min_opts.taxa_list, "comma-separated taxon names")
        ->required();
    or_nsw->add_option("--net", or_nsw_opts.net_path, "input network (eNewick)")
        ->required();

    GenOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--seed", gen_opts.seed, "random seed");
    gen->add_option("--leaves", gen_opts.leaves, "number of leaves")->required();
    gen->add_option("--reticulations", gen_opts.reticulations, "number of reticulations");
    gen->add_option("--contract-frac", gen_opts.contract_frac,
                    "contract this fraction of shortest edges")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--out", gen_opts.out_prefix, "output file prefix");

    auto* ilp = app.add_subcommand("ilp", "scanwidth integer program");
    ilp->require_subcommand(1);
    CommonOpts ilp_emit_opts, ilp_check_opts;
    std::string ilp_out;
    auto* ilp_emit = ilp->add_subcommand("emit", "write the model in LP format");
    ilp_emit->add_option("--net", ilp_emit_opts.net_path, "input network (eNewick)")
        ->required();
    ilp_emit->add_option("--out", ilp_out, "LP output file");
    auto* ilp_check = ilp->add_subcommand("check", "verify an extension against the model");
    ilp_check->add_option("--net", ilp_check_opts.net_path, "input network (eNewick)")
        ->required();
    ilp_check->add_option("--extension", ilp_check_opts.extension_path, "extension file")
        ->required();

    BenchOpts bench_opts;
    auto* bench = app.add_subcommand("bench", "time solvers over a corpus directory");
    bench->add_option("--corpus", bench_opts.corpus_dir, "directory of .enwk files")
        ->required();
    bench->add_option("--fractions", bench_opts.fractions, "budget fractions");
    bench->add_option("--out", bench_opts.out_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return run_validate(validate_opts);
        if (*nsw) return run_nsw(nsw_opts);
        if (*pd_map) return run_pd_budgeted(pd_map_opts, false);
        if (*pd_max) return run_pd_budgeted(pd_max_opts, true);
        if (*pd_min) return run_pd_min(pd_min_opts);
        if (*or_map) return run_oracle_budgeted(or_map_opts, false);
        if (*or_max) return run_oracle_budgeted(or_max_opts, true);
        if (*or_min) return run_oracle_min(or_min_opts);
        if (*or_nsw) return run_oracle_nsw(or_nsw_opts);
        if (*gen) return run_gen(gen_opts);
        if (*ilp_emit) return run_ilp_emit(ilp_emit_opts, ilp_out);
        if (*ilp_check) return run_ilp_check(ilp_check_opts);
        if (*bench) return run_bench(bench_opts);
    } catch (const bad_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nswpd::infeasible_parameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nswpd::bound_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nswpd::table_limit_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nswpd::too_many_switchings& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nswpd::too_many_taxa& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nswpd::too_many_vertices& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::runtime_error& e) {
        // parse, validation, cost, extension and oracle-cap errors: bad input
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
