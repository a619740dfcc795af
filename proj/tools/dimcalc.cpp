// dimcalc: dimensional analysis from the command line.
//
//   dimcalc analyze <problem-file> [--json]
//   dimcalc check <problem-file> --eq "<equation>"
//   dimcalc rank <problem-file>
//   dimcalc convert --units <units-file> "<literal>" --to "<unit-expr>"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dimcalc/check.hpp"
#include "dimcalc/error.hpp"
#include "dimcalc/problem.hpp"
#include "dimcalc/report.hpp"
#include "dimcalc/units.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dimcalc::ProblemFile load_problem(const std::string& path) {
    try {
        return dimcalc::parse_problem(read_file(path));
    } catch (const dimcalc::ParseError& e) {
        throw std::runtime_error(path + ":" + (e.line() ? std::to_string(e.line()) + ":" + std::to_string(e.column()) + ":" : "") +
                                 " " + std::string(dimcalc::errc_name(e.code())) + ": " + e.message());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensional analysis: dimensional models, Pi relations, homogeneity checks and unit conversion"};
    app.require_subcommand(1);

    std::string problem_path;
    bool as_json = false;
    auto* analyze = app.add_subcommand("analyze", "Enumerate every dimensional model and its Pi relation");
    analyze->add_option("problem", problem_path, "Problem file")->required();
    analyze->add_flag("--json", as_json, "Emit the canonical JSON report");

    std::string equation;
    auto* check = app.add_subcommand("check", "Check an equation for dimensional homogeneity");
    check->add_option("problem", problem_path, "Problem file")->required();
    check->add_option("--eq", equation, "Equation, e.g. \"t^2 = l/g\"")->required();

    auto* rank = app.add_subcommand("rank", "Print the rank of the dimensional matrix");
    rank->add_option("problem", problem_path, "Problem file")->required();

    std::string units_path;
    std::string literal;
    std::string target;
    auto* convert = app.add_subcommand("convert", "Convert a quantity literal to another unit");
    convert->add_option("--units", units_path, "Units file")->required();
    convert->add_option("literal", literal, "Quantity literal, e.g. \"200 cm\"")->required();
    convert->add_option("--to", target, "Target unit expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const auto report = dimcalc::analyze_problem(load_problem(problem_path));
            std::cout << (as_json ? dimcalc::emit_json(report) : dimcalc::render_text(report));
            return dimcalc::exit_code(report);
        }
        if (check->parsed()) {
            const auto problem = load_problem(problem_path);
            const auto result = dimcalc::check_equation(problem, equation);
            std::cout << dimcalc::format_check(problem, result);
            return result.homogeneous() ? dimcalc::kExitOk : dimcalc::kExitNotHomogeneous;
        }
        if (rank->parsed()) {
            std::cout << load_problem(problem_path).matrix().rank() << "\n";
            return dimcalc::kExitOk;
        }
        if (convert->parsed()) {
            const auto reg = dimcalc::parse_units_file(read_file(units_path));
            const auto q = reg.parse_quantity_literal(literal);
            const auto unit = dimcalc::parse_unit_expr(target);
            const auto value = reg.convert(q, unit);
            std::cout << value.get_str() << " " << dimcalc::to_string(unit) << "\n";
            std::cout << "~ " << dimcalc::format_decimal(value) << " " << dimcalc::to_string(unit) << "\n";
            return dimcalc::kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "dimcalc: " << e.what() << "\n";
        return dimcalc::kExitError;
    }
    return dimcalc::kExitError;
}
