// ilpspace command-line frontend.
//
//   ilpspace solve      --input FILE [--json|--plain] [--threads N] [--metrics]
//   ilpspace candidates --input FILE [--limit K]
//   ilpspace oracle     --input FILE [--mode brute|dp] [--l1cap K]
//   ilpspace generate   --seed S --m M --n N --delta D --bmax B --cmax C --family F
//   ilpspace bench      --family F --sweep bmax=50,100,200 [--out FILE]
//
// solve and oracle exit with 0 (OPTIMAL), 2 (INFEASIBLE), 3 (UNBOUNDED) or
// 1 (error).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ilpspace/candidates.hpp"
#include "ilpspace/generate.hpp"
#include "ilpspace/io.hpp"
#include "ilpspace/oracles.hpp"
#include "ilpspace/pipeline.hpp"

namespace {

using namespace ilpspace;

int exit_code(Status s) {
    switch (s) {
        case Status::Optimal: return 0;
        case Status::Infeasible: return 2;
        case Status::Unbounded: return 3;
    }
    return 1;
}

template <class Vec>
std::string join(const Vec& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

void print_plain(const Instance<BigInt>& inst, const SolveReport<BigInt>& report, bool with_elapsed) {
    std::cout << "status " << to_string(report.result.status) << "\n";
    if (report.result.solution) {
        std::cout << "x " << join(report.result.solution->x) << "\n";
        std::cout << "objective " << report.result.solution->objective << "\n";
    }
    std::cout << "nodes_expanded " << report.metrics.nodes_expanded << "\n";
    std::cout << "max_depth " << report.metrics.max_depth << "\n";
    std::cout << "peak_live_words " << report.metrics.peak_live_words << "\n";
    if (with_elapsed) std::cout << "elapsed_ms " << report.metrics.elapsed_ms << "\n";
    std::cout << "m " << inst.m << "\nn " << inst.n << "\ndelta " << inst.delta << "\ngamma "
              << gamma_bound(inst.m, inst.delta) << "\n";
}

struct SolveArgs {
    std::string input;
    bool plain = false;
    unsigned threads = 1;
    bool metrics = false;
};

int cmd_solve(const SolveArgs& args) {
    auto inst = parse_instance_file(args.input);
    SolveOptions options;
    options.threads = args.threads;
    auto report = solve(inst, options);
    if (args.plain) {
        print_plain(inst, report, args.metrics);
    } else {
        std::cout << result_document(inst, report, {args.metrics}).dump(2) << "\n";
    }
    return exit_code(report.result.status);
}

int cmd_candidates(const std::string& input, std::size_t limit) {
    auto inst = parse_instance_file(input);
    Metrics metrics;
    std::size_t shown = 0;
    auto emit = [&](const Candidate<BigInt>& cand) {
        std::cout << "b' " << join(cand.rhs) << " | x' " << join(cand.indicator) << "\n";
        return limit == 0 || ++shown < limit;
    };
    std::size_t count = enumerate_candidates(inst, metrics, emit);
    std::cout << "count " << count << "\n";
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& mode, const std::string& l1cap) {
    auto inst = parse_instance_file(input);
    SolveStatus<BigInt> verdict;
    if (mode == "dp") {
        auto dp = dp_solve_nonneg(inst);
        verdict.status = dp.solution ? Status::Optimal : Status::Infeasible;
        verdict.solution = dp.solution;
        std::cerr << "state_count " << dp.state_count << "\n";
    } else if (mode == "brute") {
        std::optional<BigInt> cap;
        if (!l1cap.empty()) cap = BigInt(l1cap);
        verdict = oracle_solve(inst, 50'000'000, cap);
    } else {
        throw std::invalid_argument("unknown oracle mode '" + mode + "'");
    }
    SolveReport<BigInt> report;
    report.result = verdict;
    std::cout << result_document(inst, report).dump(2) << "\n";
    return exit_code(verdict.status);
}

int cmd_generate(const GeneratorParams& params) {
    std::ostringstream comment;
    comment << "generated: family=" << to_string(params.family) << " seed=" << params.seed << " m=" << params.m
            << " n=" << params.n << " delta=" << params.delta << " bmax=" << params.bmax
            << " cmax=" << params.cmax;
    std::cout << format_instance(generate_instance(params), comment.str());
    return 0;
}

struct BenchArgs {
    GeneratorParams base;
    std::string sweep = "bmax=50,100,200";
    std::size_t count = 1;
    std::string out;
};

// The swept parameter is set exactly: for bmax every entry of b equals the
// swept value, so ||b||_inf is what the row reports.
int cmd_bench(BenchArgs args) {
    const auto eq = args.sweep.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--sweep expects key=v1,v2,...");
    const std::string key = args.sweep.substr(0, eq);
    std::vector<std::int64_t> values;
    {
        std::stringstream list(args.sweep.substr(eq + 1));
        std::string item;
        while (std::getline(list, item, ',')) values.push_back(std::stoll(item));
    }
    if (key != "bmax" && key != "n" && key != "cmax")
        throw std::invalid_argument("--sweep key must be bmax, n or cmax");

    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw std::runtime_error("cannot write '" + args.out + "'");
    }
    std::ostream& csv = args.out.empty() ? std::cout : file;
    csv << "family,seed,m,n,delta,bmax,cmax,status,peak_live_words,elapsed_ms,dp_state_count,reference,agree\n";

    for (std::int64_t value : values) {
        for (std::size_t k = 0; k < args.count; ++k) {
            GeneratorParams p = args.base;
            p.seed = args.base.seed + k;
            if (key == "bmax") p.bmax = value;
            if (key == "n") p.n = static_cast<std::size_t>(value);
            if (key == "cmax") p.cmax = value;
            auto inst = generate_instance(p);
            if (key == "bmax")
                for (auto& b : inst.b) b = p.family == Family::General && b < 0 ? -value : value;

            auto report = solve(inst);
            std::string dp_states = "";
            std::string reference = "brute";
            SolveStatus<BigInt> expected;
            if (p.family != Family::General) {
                auto dp = dp_solve_nonneg(inst);
                dp_states = std::to_string(dp.state_count);
                reference = "dp";
                expected.status = dp.solution ? Status::Optimal : Status::Infeasible;
                expected.solution = dp.solution;
            } else {
                expected = oracle_solve(inst);
            }
            const bool agree = expected.status == report.result.status &&
                               (!expected.solution || expected.solution->x == report.result.solution->x);
            csv << to_string(p.family) << "," << p.seed << "," << p.m << "," << p.n << "," << inst.delta << ","
                << p.bmax << "," << p.cmax << "," << to_string(report.result.status) << ","
                << report.metrics.peak_live_words << "," << report.metrics.elapsed_ms << "," << dp_states << ","
                << reference << "," << (agree ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for equality-form integer programs with few constraints"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("--input", solve_args.input, "Instance file")->required();
    auto* json_flag = solve_cmd->add_flag("--json", "JSON result document (default)");
    solve_cmd->add_flag("--plain", solve_args.plain, "Line-oriented output")->excludes(json_flag);
    solve_cmd->add_option("--threads", solve_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--metrics", solve_args.metrics, "Include wall-clock time");

    std::string cand_input;
    std::size_t cand_limit = 0;
    auto* cand_cmd = app.add_subcommand("candidates", "Stream candidate supports");
    cand_cmd->add_option("--input", cand_input, "Instance file")->required();
    cand_cmd->add_option("--limit", cand_limit, "Stop after K candidates (0 = all)");

    std::string oracle_input, oracle_mode = "brute", oracle_cap;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run a reference oracle");
    oracle_cmd->add_option("--input", oracle_input, "Instance file")->required();
    oracle_cmd->add_option("--mode", oracle_mode, "brute or dp")->check(CLI::IsMember({"brute", "dp"}));
    oracle_cmd->add_option("--l1cap", oracle_cap, "Override the proven l1 cap of the brute-force search");

    GeneratorParams gen;
    std::string gen_family = "general";
    auto* gen_cmd = app.add_subcommand("generate", "Print a seeded random instance");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--m", gen.m, "Rows");
    gen_cmd->add_option("--n", gen.n, "Columns");
    gen_cmd->add_option("--delta", gen.delta, "Largest |A_ij|");
    gen_cmd->add_option("--bmax", gen.bmax, "Largest |b_i|");
    gen_cmd->add_option("--cmax", gen.cmax, "Largest |c_j|");
    gen_cmd->add_option("--family", gen_family, "general, nonneg or knapsack");

    BenchArgs bench;
    std::string bench_family = "nonneg";
    bench.base.m = 1;
    bench.base.n = 4;
    bench.base.delta = 2;
    auto* bench_cmd = app.add_subcommand("bench", "Space/time sweep against the DP baseline");
    bench_cmd->add_option("--family", bench_family, "general, nonneg or knapsack");
    bench_cmd->add_option("--sweep", bench.sweep, "key=v1,v2,... with key in bmax, n, cmax");
    bench_cmd->add_option("--out", bench.out, "CSV file (default: standard output)");
    bench_cmd->add_option("--count", bench.count, "Instances per sweep value");
    bench_cmd->add_option("--seed", bench.base.seed, "First seed");
    bench_cmd->add_option("--m", bench.base.m, "Rows");
    bench_cmd->add_option("--n", bench.base.n, "Columns");
    bench_cmd->add_option("--delta", bench.base.delta, "Largest |A_ij|");
    bench_cmd->add_option("--cmax", bench.base.cmax, "Largest |c_j|");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*cand_cmd) return cmd_candidates(cand_input, cand_limit);
        if (*oracle_cmd) return cmd_oracle(oracle_input, oracle_mode, oracle_cap);
        if (*gen_cmd) {
            gen.family = parse_family(gen_family);
            if (gen.family == Family::Knapsack && gen.m != 1)
                throw std::invalid_argument("the knapsack family has m = 1");
            return cmd_generate(gen);
        }
        if (*bench_cmd) {
            bench.base.family = parse_family(bench_family);
            return cmd_bench(bench);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
