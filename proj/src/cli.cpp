#include "wopt/cli.hpp"
#include "wopt/io.hpp"
#include "wopt/oracle.hpp"
#include "wopt/reduction.hpp"
#include "wopt/weak_feasibility.hpp"
#include "wopt/weak_optimality.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>

namespace wopt::cli {

namespace {

struct Common {
    std::string instance_path;
    std::string point_json;
    std::string format = "json";
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Point resolve_point(const Instance& instance, const std::string& override_json, const std::optional<Point>& fallback)
{
    std::optional<Point> x;
    if (!override_json.empty())
        x = point_from_json(parse_json_text(override_json, "--point"), "--point");
    else if (fallback)
        x = fallback;
    else
        x = instance.point;
    if (!x)
        throw InputError("no point given: add \"point\" to the instance or pass --point");
    if (x->xf.size() != instance.data.m() || x->xn.size() != instance.data.n())
        throw InputError("point: expected xf of length " + std::to_string(instance.data.m()) +
                         " and xn of length " + std::to_string(instance.data.n()));
    return *x;
}

int cmd_check(const Common& common, unsigned jobs, bool exhaustive, bool timing, std::ostream& out)
{
    Instance instance = instance_from_json(read_json_file(common.instance_path));
    Point x = resolve_point(instance, common.point_json, std::nullopt);

    auto started = std::chrono::steady_clock::now();
    Decision decision = decide_weak_optimality(instance.data, x, {std::max(1U, jobs), exhaustive});
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    Report report;
    report.verdict = decision.verdict.tag;
    report.point = x;
    report.witness = decision.verdict.witness;
    report.stats = decision.stats;
    report.exhaustive = exhaustive;
    report.feasible_orthants = decision.feasible_orthants;
    if (timing)
        report.wall_time_ms = elapsed.count();
    emit(out, to_json(report));
    return report.verdict == VerdictTag::WeaklyOptimal ? kExitYes : kExitNo;
}

int cmd_verify(const Common& common, const std::string& report_path, std::ostream& out)
{
    Instance instance = instance_from_json(read_json_file(common.instance_path));
    Json report_json = read_json_file(report_path);
    Report report = report_from_json(report_json, instance.data);
    std::optional<Point> report_point;
    if (report_json.contains("point"))
        report_point = report.point;
    Point x = resolve_point(instance, common.point_json, report_point);

    WitnessCheck check;
    if (!report.witness)
        check = {false, "report carries no witness"};
    else if (report.verdict != VerdictTag::WeaklyOptimal)
        check = {false, "witness attached to a negative verdict"};
    else
        check = check_witness(instance.data, x, *report.witness);

    Json j = Json::object();
    j["valid"] = check.valid;
    if (!check.valid)
        j["reason"] = check.reason;
    emit(out, j);
    return check.valid ? kExitYes : kExitNo;
}

int cmd_reduce(const std::string& system_path, std::ostream& out)
{
    IntervalSystem system = interval_system_from_json(read_json_file(system_path));
    ReducedInstance reduced = reduce_weak_feasibility_to_weak_optimality(system.Bf, system.b);
    Instance instance;
    instance.data = std::move(reduced.data);
    instance.point = std::move(reduced.point);
    emit(out, to_json(instance));
    return kExitYes;
}

int cmd_oracle(const Common& common, std::size_t depth, std::uint64_t budget, bool system_mode, std::ostream& out)
{
    Json input = read_json_file(common.instance_path);
    if (system_mode) {
        IntervalSystem system = interval_system_from_json(input);
        bool feasible = weak_feasibility_system_bruteforce(system.Bf, system.b);
        emit(out, Json{{"weakly_feasible", feasible}});
        return feasible ? kExitYes : kExitNo;
    }
    Instance instance = instance_from_json(input);
    Point x = resolve_point(instance, common.point_json, std::nullopt);
    OracleResult result = corner_grid_oracle(instance.data, x, depth, budget);
    Json j = Json::object();
    j["result"] = result.tag == OracleResult::Certified ? "certified" : "inconclusive";
    j["depth"] = depth;
    j["scenarios_checked"] = result.scenarios_checked;
    if (result.scenario)
        j["scenario"] = to_json(*result.scenario);
    emit(out, j);
    return result.tag == OracleResult::Certified ? kExitYes : kExitNo;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak optimality testing for interval linear programs"};
    app.name("wopt");
    app.require_subcommand(1);

    Common common;
    unsigned jobs = 1;
    bool exhaustive = false;
    bool timing = false;
    std::string report_path;
    std::size_t depth = 2;
    std::uint64_t budget = kDefaultOracleBudget;
    bool system_mode = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json"}));
    };

    CLI::App* check = app.add_subcommand("check", "Decide weak optimality of a point and print a report");
    check->add_option("instance", common.instance_path, "Instance file")->required();
    check->add_option("--point", common.point_json, "Point as JSON {\"xf\": [...], \"xn\": [...]}");
    check->add_option("--jobs", jobs, "Orthant systems solved concurrently")->check(CLI::PositiveNumber);
    check->add_flag("--exhaustive-orthants", exhaustive, "Solve every orthant and list the feasible ones");
    check->add_flag("--timing", timing, "Add wall_time_ms to the report stats");
    add_format(check);

    CLI::App* verify = app.add_subcommand("verify", "Re-check the witness of a report");
    verify->add_option("instance", common.instance_path, "Instance file")->required();
    verify->add_option("report", report_path, "Report produced by check")->required();
    verify->add_option("--point", common.point_json, "Point override");
    add_format(verify);

    std::string system_path;
    CLI::App* reduce = app.add_subcommand("reduce", "Turn an interval system Bf x <= b into a weak optimality instance");
    reduce->add_option("system", system_path, "System file with Bf and b")->required();
    add_format(reduce);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
    oracle->add_option("instance", common.instance_path, "Instance file (or system file with --system)")->required();
    oracle->add_option("--point", common.point_json, "Point override");
    oracle->add_option("--depth", depth, "Interior grid points per interval");
    oracle->add_option("--budget", budget, "Maximum number of grid scenarios");
    oracle->add_flag("--system", system_mode, "Decide weak feasibility of Bf x <= b by orthant enumeration");
    add_format(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (check->parsed())
            return cmd_check(common, jobs, exhaustive, timing, out);
        if (verify->parsed())
            return cmd_verify(common, report_path, out);
        if (reduce->parsed())
            return cmd_reduce(system_path, out);
        return cmd_oracle(common, depth, budget, system_mode, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInput;
}

} // namespace wopt::cli
