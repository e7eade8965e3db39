// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support/fuzz.hpp"
#include "support/vertex_enum.hpp"

#include "wopt/cli.hpp"
#include "wopt/io.hpp"
#include "wopt/oracle.hpp"
#include "wopt/reduction.hpp"
#include "wopt/scenario_program.hpp"
#include "wopt/weak_feasibility.hpp"
#include "wopt/weak_optimality.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace wopt;
using namespace wopt::testing;
namespace fs = std::filesystem;

namespace {

const std::string kInstances = WOPT_INSTANCE_DIR;
constexpr std::uint64_t kFuzzSeed = 20240401;
constexpr int kFuzzCount = 1000;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return kInstances + "/" + name; }

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<FuzzInstance> fuzz_population()
{
    InstanceFuzzer fuzz(kFuzzSeed);
    std::vector<FuzzInstance> out;
    for (int i = 0; i < kFuzzCount; ++i)
        out.push_back(fuzz.next());
    return out;
}

void criterion_counterexample(Outcome& o)
{
    const auto start = std::chrono::steady_clock::now();
    const std::string path = golden("counterexample.json");
    CliRun r = run_cli({"check", path});
    Instance inst = instance_from_json(read_json_file(path));
    Report report = report_from_json(Json::parse(r.out), inst.data);
    const double elapsed = seconds_since(start);

    o.require(r.code == cli::kExitYes, "exit code 0");
    o.require(report.verdict == VerdictTag::WeaklyOptimal, "verdict weakly_optimal");
    o.require(report.witness.has_value(), "witness present");
    if (report.witness) {
        WitnessCheck check = check_witness(inst.data, *inst.point, *report.witness);
        o.require(check.valid, "verify_witness: " + check.reason);
        ScenarioProgram lp = make_scenario_program(report.witness->scenario);
        SolveResult opt = solve_lp(lp.sys, lp.objective);
        o.require(opt.feasible() && *opt.optimum == dot(lp.objective, flatten(*inst.point)),
                  "exact optimum equals objective at x");
        o.detail << " witness An=(" << to_string(report.witness->scenario.An(0, 0)) << ","
                 << to_string(report.witness->scenario.An(0, 1)) << ")";
    }
    o.require(elapsed < 1.0, "runtime < 1 s");
    o.detail << " time=" << elapsed << "s";
}

void criterion_example2(Outcome& o)
{
    CliRun r = run_cli({"check", golden("inequality.json")});
    Json j = Json::parse(r.out);
    o.require(r.code == cli::kExitYes && j["verdict"] == "weakly_optimal", "three rows: weakly_optimal");
    o.require(j["stats"]["lp_solves"] == 1, "exactly one testing-system solve");
    o.detail << " three rows: " << j["verdict"].get<std::string>() << ", lp_solves=" << j["stats"]["lp_solves"];

    CliRun four = run_cli({"check", golden("inequality_fourth_row.json")});
    Json k = Json::parse(four.out);
    o.require(four.code == cli::kExitNo && k["verdict"] == "not_weakly_feasible", "fourth row: not_weakly_feasible");
    o.detail << "; four rows: " << k["verdict"].get<std::string>();
}

void criterion_orthant_budget(Outcome& o)
{
    Instance ex3 = instance_from_json(read_json_file(golden("equality.json")));
    Decision d = decide_weak_optimality(ex3.data, *ex3.point);
    o.require(ex3.data.k() == 2 && d.stats.orthants_tried <= 4, "equality instance within 4 systems");
    o.detail << " equality instance: " << d.stats.orthants_tried << " systems (" << to_string(d.verdict.tag) << ")";

    InstanceFuzzer wide(kFuzzSeed + 3, FuzzShape{6, 2, 3, 3});
    std::size_t worst = 0, tried = 0;
    for (int i = 0; i < 150; ++i) {
        FuzzInstance f = wide.next();
        Decision e = decide_weak_optimality(f.data, f.x);
        if (e.stats.orthants_tried > (std::size_t{1} << f.data.k()))
            o.require(false, "orthant count above 2^k");
        worst = std::max(worst, e.stats.orthants_tried);
        tried += e.verdict.tag != VerdictTag::NotWeaklyFeasible;
    }
    o.detail << "; k<=6: 150 instances (" << tried << " reached solving), max " << worst << " systems";

    InstanceFuzzer flat(kFuzzSeed + 4, FuzzShape{0, 3, 3, 3});
    std::size_t solved = 0;
    for (int i = 0; i < 300; ++i) {
        FuzzInstance f = flat.next();
        Decision e = decide_weak_optimality(f.data, f.x);
        if (e.verdict.tag == VerdictTag::NotWeaklyFeasible) {
            o.require(e.stats.orthants_tried == 0, "no system solved before the precheck passes");
            continue;
        }
        ++solved;
        o.require(e.stats.orthants_tried == 1, "k=0 solves exactly one system");
    }
    o.detail << "; k=0: " << solved << " weakly feasible instances, each exactly 1 system";
}

void criterion_soundness(Outcome& o, const std::vector<FuzzInstance>& population)
{
    const auto start = std::chrono::steady_clock::now();
    std::size_t yes = 0, no = 0, infeasible = 0, exceptions = 0, bad = 0;
    for (const auto& f : population) {
        try {
            Decision d = decide_weak_optimality(f.data, f.x);
            switch (d.verdict.tag) {
            case VerdictTag::WeaklyOptimal:
                ++yes;
                if (!d.verdict.witness || !verify_witness(f.data, f.x, *d.verdict.witness))
                    ++bad;
                break;
            case VerdictTag::NotWeaklyOptimal:
                ++no;
                break;
            case VerdictTag::NotWeaklyFeasible:
                ++infeasible;
                break;
            }
        } catch (const std::exception& e) {
            ++exceptions;
            o.detail << " exception: " << e.what();
        }
    }
    const double elapsed = seconds_since(start);
    o.require(population.size() >= 1000, "at least 1000 instances");
    o.require(bad == 0, "every witness verifies");
    o.require(exceptions == 0, "no exceptions");
    o.require(elapsed < 300.0, "runtime < 5 min");
    o.detail << " instances=" << population.size() << " weakly_optimal=" << yes << " not_weakly_optimal=" << no
             << " not_weakly_feasible=" << infeasible << " bad_witnesses=" << bad << " time=" << elapsed << "s";
}

void criterion_oracle(Outcome& o, const std::vector<FuzzInstance>& population)
{
    std::size_t eligible = 0, over_budget = 0, certified = 0, violations = 0;
    for (const auto& f : population) {
        if (f.data.entry_count() > 12)
            continue;
        // The grid size guard is a precondition of the oracle; instances over
        // it are counted and reported, not silently dropped.
        if (grid_size(f.data, 2) > kDefaultOracleBudget) {
            ++over_budget;
            continue;
        }
        ++eligible;
        OracleResult r = corner_grid_oracle(f.data, f.x, 2);
        if (r.tag != OracleResult::Certified)
            continue;
        ++certified;
        if (decide_weak_optimality(f.data, f.x).verdict.tag != VerdictTag::WeaklyOptimal)
            ++violations;
    }
    o.require(violations == 0, "oracle certificate implies weakly_optimal");
    o.require(certified > 0, "oracle certified at least one instance");
    o.detail << " checked=" << eligible << " certified=" << certified << " violations=" << violations
             << " skipped_over_grid_budget=" << over_budget;
}

void criterion_reduction(Outcome& o)
{
    InstanceFuzzer fuzz(kFuzzSeed + 6);
    std::size_t agree = 0, disagree = 0, feasible = 0;
    const int count = 300;
    for (int i = 0; i < count; ++i) {
        auto [Bf, b] = fuzz.interval_system(3, 3);
        const bool expected = weak_feasibility_system_bruteforce(Bf, b);
        ReducedInstance r = reduce_weak_feasibility_to_weak_optimality(Bf, b);
        const bool got = decide_weak_optimality(r.data, r.point).verdict.tag == VerdictTag::WeaklyOptimal;
        (got == expected ? agree : disagree)++;
        feasible += expected;
    }
    o.require(disagree == 0, "exact agreement");
    o.detail << " systems=" << count << " agree=" << agree << " disagree=" << disagree
             << " weakly_feasible=" << feasible;
}

void criterion_kernel(Outcome& o)
{
    InstanceFuzzer fuzz(kFuzzSeed + 7);
    std::size_t mismatches = 0, unsatisfied = 0, feasible = 0, unbounded = 0;
    for (int i = 0; i < 500; ++i) {
        LinearSystem sys = fuzz.linear_system(4, 6);
        RationalVector objective(sys.num_vars);
        for (auto& c : objective)
            c = fuzz.rational(-3, 3);

        SolveResult f = solve_feasibility(sys);
        if (f.status != brute_force_lp(sys, nullptr).status)
            ++mismatches;
        if (f.feasible() && !sys.is_satisfied_by(f.assignment))
            ++unsatisfied;

        SolveResult lp = solve_lp(sys, objective);
        BruteLpResult brute = brute_force_lp(sys, &objective);
        if (lp.status != brute.status)
            ++mismatches;
        else if (lp.status == SolveStatus::Feasible && *lp.optimum != *brute.optimum)
            ++mismatches;
        if (lp.status != SolveStatus::Infeasible && !sys.is_satisfied_by(lp.assignment))
            ++unsatisfied;
        feasible += lp.status == SolveStatus::Feasible;
        unbounded += lp.status == SolveStatus::Unbounded;
    }

    std::size_t degenerate_done = 0, degenerate_mismatch = 0;
    for (int i = 0; i < 100; ++i) {
        LinearSystem sys = fuzz.linear_system(4, 3, 0.0);
        RationalVector corner;
        for (const auto& lb : sys.lower_bounds)
            corner.push_back(*lb);
        for (auto& row : sys.le_rows)
            row.rhs = dot(row.coeffs, corner);
        for (auto& row : sys.eq_rows)
            row.rhs = dot(row.coeffs, corner);
        auto le = sys.le_rows;
        auto eq = sys.eq_rows;
        for (int copy = 0; copy < 2; ++copy) {
            sys.le_rows.insert(sys.le_rows.end(), le.begin(), le.end());
            sys.eq_rows.insert(sys.eq_rows.end(), eq.begin(), eq.end());
        }
        RationalVector objective(sys.num_vars);
        for (auto& c : objective)
            c = fuzz.rational(-2, 2);
        SolveResult lp = solve_lp(sys, objective);
        BruteLpResult brute = brute_force_lp(sys, &objective);
        ++degenerate_done;
        if (lp.status != brute.status || (lp.feasible() && *lp.optimum != *brute.optimum))
            ++degenerate_mismatch;
        if (lp.status != SolveStatus::Infeasible && !sys.is_satisfied_by(lp.assignment))
            ++unsatisfied;
    }
    o.require(mismatches == 0, "agreement with vertex enumeration");
    o.require(unsatisfied == 0, "assignments satisfy constraints exactly");
    o.require(degenerate_done == 100 && degenerate_mismatch == 0, "degenerate systems terminate and agree");
    o.detail << " random=500 (optimal=" << feasible << " unbounded=" << unbounded << ") mismatches=" << mismatches
             << " unsatisfied=" << unsatisfied << " degenerate=" << degenerate_done
             << " degenerate_mismatches=" << degenerate_mismatch;
}

void criterion_determinism(Outcome& o)
{
    const fs::path dir = fs::temp_directory_path() / ("wopt_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::string> instances = {"counterexample.json", "inequality.json", "inequality_fourth_row.json",
                                                "equality.json"};
    std::vector<std::vector<std::string>> commands;
    for (const auto& name : instances) {
        const std::string path = golden(name);
        const std::string report = (dir / (name + ".report")).string();
        std::ofstream(report) << run_cli({"check", path}).out;
        commands.push_back({"check", path});
        commands.push_back({"check", path, "--jobs", "4"});
        commands.push_back({"check", path, "--jobs", "3", "--exhaustive-orthants"});
        commands.push_back({"verify", path, report});
        commands.push_back({"oracle", path});
    }
    commands.push_back({"reduce", golden("system_feasible.json")});
    commands.push_back({"oracle", "--system", golden("system_feasible.json")});

    std::size_t differing = 0;
    for (const auto& args : commands) {
        CliRun first = run_cli(args);
        CliRun second = run_cli(args);
        if (first.code != second.code || first.out != second.out || first.err != second.err) {
            ++differing;
            o.detail << " differs:";
            for (const auto& a : args)
                o.detail << ' ' << fs::path(a).filename().string();
        }
    }
    // Parallel and sequential reports agree apart from the solve counters,
    // which count the whole last batch.
    auto without_stats = [](const std::string& text) {
        Json j = Json::parse(text);
        j.erase("stats");
        return j.dump();
    };
    for (const auto& name : instances) {
        if (without_stats(run_cli({"check", golden(name)}).out) !=
            without_stats(run_cli({"check", golden(name), "--jobs", "4"}).out)) {
            ++differing;
            o.detail << " jobs changes report: " << name;
        }
    }
    fs::remove_all(dir);
    o.require(differing == 0, "byte-identical reports");
    o.detail << " commands=" << commands.size() << " differing=" << differing;
}

} // namespace

int main()
{
    const std::vector<FuzzInstance> population = fuzz_population();
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"1 counterexample weakly optimal with verified witness", criterion_counterexample},
        {"2 inequality example and fourth row", criterion_example2},
        {"3 orthant budget", criterion_orthant_budget},
        {"4 certificate soundness", [&](Outcome& o) { criterion_soundness(o, population); }},
        {"5 oracle agreement (depth 2)", [&](Outcome& o) { criterion_oracle(o, population); }},
        {"6 reduction round trip", criterion_reduction},
        {"7 kernel validity", criterion_kernel},
        {"8 determinism", criterion_determinism},
    };

    int failures = 0;
    for (const auto& [name, body] : criteria) {
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ":" << o.detail.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
