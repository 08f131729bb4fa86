#include "pendagm/cli.hpp"

#include "pendagm/errors.hpp"
#include "pendagm/ingham.hpp"
#include "pendagm/pendulum.hpp"
#include "pendagm/renorm.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace pendagm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double pi = std::numbers::pi;

double to_radians(double value, AngleUnit unit) {
    return unit == AngleUnit::degrees ? value * (pi / 180.0) : value;
}

double from_radians(double value, AngleUnit unit) {
    return unit == AngleUnit::degrees ? value * (180.0 / pi) : value;
}

const char* unit_name(AngleUnit unit) {
    return unit == AngleUnit::degrees ? "deg" : "rad";
}

std::string format_double(double v, int precision) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, precision);
    (void)ec;
    return std::string(buf, end);
}

std::string format_cell(const Json& v, int precision) {
    if (v.is_null())
        return "";
    if (v.is_number_float())
        return format_double(v.get<double>(), precision);
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    return v.dump();
}

/// One command's result: ordered scalar fields plus an optional row table.
/// The same data renders as text, CSV (header + rows, or key header + one
/// value row for scalar commands), or a single JSON object.
struct Report {
    Json fields = Json::object();
    std::vector<std::string> columns;
    Json rows = Json::array();
};

void render_text(const Report& r, const OutputSpec& spec, std::ostream& out) {
    size_t width = 0;
    for (const auto& item : r.fields.items())
        width = std::max(width, item.key().size());
    for (const auto& item : r.fields.items()) {
        std::string value = format_cell(item.value(), spec.precision);
        if (value.empty())
            value = "below measurement floor";
        out << item.key() << std::string(width - item.key().size() + 2, ' ') << value << "\n";
    }
    if (r.columns.empty())
        return;
    std::vector<std::vector<std::string>> cells;
    cells.push_back(r.columns);
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        for (const auto& col : r.columns)
            line.push_back(format_cell(row.at(col), spec.precision));
        cells.push_back(std::move(line));
    }
    std::vector<size_t> widths(r.columns.size(), 0);
    for (const auto& line : cells)
        for (size_t i = 0; i < line.size(); ++i)
            widths[i] = std::max(widths[i], line[i].size());
    out << "\n";
    for (const auto& line : cells) {
        for (size_t i = 0; i < line.size(); ++i)
            out << line[i] << std::string(widths[i] - line[i].size() + (i + 1 < line.size() ? 2 : 0), ' ');
        out << "\n";
    }
}

// Comma-separated, '.' decimal point, header row, LF endings.
void render_csv(const Report& r, const OutputSpec& spec, std::ostream& out) {
    auto write_row = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << cells[i];
        out << "\n";
    };
    if (r.columns.empty()) {
        std::vector<std::string> header;
        std::vector<std::string> values;
        for (const auto& item : r.fields.items()) {
            header.push_back(item.key());
            values.push_back(format_cell(item.value(), spec.precision));
        }
        write_row(header);
        write_row(values);
        return;
    }
    write_row(r.columns);
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        for (const auto& col : r.columns)
            cells.push_back(format_cell(row.at(col), spec.precision));
        write_row(cells);
    }
}

void render(const Report& r, const OutputSpec& spec, std::ostream& out) {
    switch (spec.format) {
    case Format::text:
        render_text(r, spec, out);
        return;
    case Format::csv:
        render_csv(r, spec, out);
        return;
    case Format::json: {
        Json doc = r.fields;
        if (!r.columns.empty())
            doc["rows"] = r.rows;
        out << doc.dump(2) << "\n";
        return;
    }
    }
}

struct MethodSpec {
    std::string label;
    ApproxMethod method;
};

MethodSpec parse_method(const std::string& token, int default_order) {
    std::string name = token;
    int order = default_order;
    if (auto colon = token.find(':'); colon != std::string::npos) {
        name = token.substr(0, colon);
        order = std::stoi(token.substr(colon + 1));
    }
    if (name == "huygens")
        return {"huygens", ApproxMethod::huygens()};
    if (name == "p2")
        return {"p2", ApproxMethod::p2()};
    if (name == "bernoulli")
        return {"bernoulli", ApproxMethod::bernoulli()};
    if (name == "series")
        return {"series:" + std::to_string(order), ApproxMethod::series(order)};
    if (name == "agm-arithmetic")
        return {"agm-arithmetic:" + std::to_string(order), ApproxMethod::agm_arithmetic(order)};
    if (name == "agm-geometric")
        return {"agm-geometric:" + std::to_string(order), ApproxMethod::agm_geometric(order)};
    throw DomainError("unknown method '" + token + "'");
}

double oracle_ratio(double alpha) {
    const QuadratureResult k = elliptic_i_quadrature(1.0, std::cos(alpha / 2), 1e-12);
    return k.value / (pi / 2);
}

struct PeriodArgs {
    double amplitude = 0.0;
    double length = 1.0;
    double gravity = 9.80665;
    std::string method = "exact";
    int order = 2;
    bool verify = false;
};

void run_period(const PeriodArgs& args, const OutputSpec& spec, std::ostream& out) {
    const double alpha = to_radians(args.amplitude, spec.unit);
    const PendulumConfig cfg(args.length, args.gravity, alpha);
    const double t0 = period_approx(cfg, ApproxMethod::huygens());

    std::string label = args.method;
    double period = 0.0;
    if (args.method == "exact") {
        period = period_exact(cfg);
    } else {
        const MethodSpec m = parse_method(args.method, args.order);
        label = m.label;
        period = period_approx(cfg, m.method);
    }

    Report report;
    report.fields["command"] = "period";
    report.fields["angle_unit"] = unit_name(spec.unit);
    report.fields["amplitude"] = args.amplitude;
    report.fields["length"] = args.length;
    report.fields["gravity"] = args.gravity;
    report.fields["method"] = label;
    report.fields["period_seconds"] = period;
    report.fields["small_angle_period_seconds"] = t0;
    report.fields["ratio"] = period / t0;
    if (args.verify) {
        const double k_oracle = elliptic_i_quadrature(1.0, std::cos(alpha / 2), 1e-12).value;
        const double t_oracle = 4.0 * std::sqrt(args.length / args.gravity) * k_oracle;
        report.fields["oracle_period_seconds"] = t_oracle;
        report.fields["verify_relative_difference"] = std::abs(period - t_oracle) / t_oracle;
    }
    render(report, spec, out);
}

struct BoundsArgs {
    double amplitude = 0.0;
    int order = 2;
    std::string kind = "auto";
    double oracle_tol = 1e-13;
};

void run_bounds(const BoundsArgs& args, const OutputSpec& spec, std::ostream& out) {
    const double alpha = to_radians(args.amplitude, spec.unit);
    std::string kind = args.kind;
    if (kind == "auto")
        kind = (args.order == 2 || args.order == 3) ? "closed" : "trace";
    const ErrorBudget budget = kind == "closed" ? ingham_bound_closed(alpha, args.order)
                                                : ingham_bound_trace(alpha, args.order);
    const RelativeError big_r = measured_error(alpha, args.order, ApproxKind::arithmetic, args.oracle_tol);
    const RelativeError small_r = measured_error(alpha, args.order, ApproxKind::geometric, args.oracle_tol);

    Report report;
    report.fields["command"] = "bounds";
    report.fields["angle_unit"] = unit_name(spec.unit);
    report.fields["amplitude"] = args.amplitude;
    report.fields["order"] = args.order;
    report.fields["kind"] = kind;
    report.fields["bound"] = budget.bound;
    report.fields["significant_digits"] =
        budget.bound > 0.0 ? significant_digits({budget.bound, ErrorBasis::true_value}) : max_significant_digits;
    report.fields["below_measurement_floor"] =
        big_r.value < measurement_floor || small_r.value < measurement_floor;
    report.fields["measured_R"] = big_r.value < measurement_floor ? Json() : Json(big_r.value);
    report.fields["measured_r"] = small_r.value < measurement_floor ? Json() : Json(small_r.value);
    render(report, spec, out);
}

struct ThresholdArgs {
    int order = 2;
    double epsilon = 0.01;
    std::string kind = "closed";
};

void run_threshold(const ThresholdArgs& args, const OutputSpec& spec, std::ostream& out) {
    const BoundKind kind = args.kind == "closed" ? BoundKind::closed_form : BoundKind::general_trace;
    const double alpha = amplitude_threshold(args.order, args.epsilon, kind);
    const bool entire = alpha >= pi - 2e-9;

    double reported = from_radians(alpha, spec.unit);
    if (entire) {
        reported = spec.unit == AngleUnit::degrees ? 180.0 : pi;
    } else if (spec.unit == AngleUnit::degrees) {
        // 0.01 deg granularity, truncated: the printed amplitude must stay
        // inside the certified region.
        reported = std::floor(reported * 100.0 + 1e-9) / 100.0;
    }

    Report report;
    report.fields["command"] = "threshold";
    report.fields["angle_unit"] = unit_name(spec.unit);
    report.fields["order"] = args.order;
    report.fields["epsilon"] = args.epsilon;
    report.fields["kind"] = args.kind;
    report.fields["max_amplitude"] = reported;
    report.fields["entire_domain"] = entire;
    render(report, spec, out);
}

struct RenormArgs {
    double amplitude = 0.0;
    double length = 1.0;
    double gravity = 9.80665;
    int steps = 1;
};

void run_renorm(const RenormArgs& args, const OutputSpec& spec, std::ostream& out) {
    const double alpha = to_radians(args.amplitude, spec.unit);
    const PendulumConfig cfg(args.length, args.gravity, alpha);
    const auto chain = renormalize_iter(cfg, args.steps);
    const double t_original = period_exact(cfg);

    Report report;
    report.fields["command"] = "renorm";
    report.fields["angle_unit"] = unit_name(spec.unit);
    report.fields["gravity"] = args.gravity;
    report.fields["steps"] = args.steps;
    report.columns = {"step", "amplitude", "length", "ingham_bound_n3", "period_residual"};

    auto make_row = [&](int step, const PendulumConfig& state) {
        Json row = Json::object();
        row["step"] = step;
        row["amplitude"] = from_radians(state.amplitude(), spec.unit);
        row["length"] = state.length();
        row["ingham_bound_n3"] = ingham_bound_closed(state.amplitude(), 3).bound;
        row["period_residual"] = std::abs(period_exact(state) - t_original) / t_original;
        return row;
    };
    report.rows.push_back(make_row(0, cfg));
    for (const RenormStep& step : chain)
        report.rows.push_back(make_row(step.index + 1, step.after));
    render(report, spec, out);
}

struct TableArgs {
    double start = 0.0;
    double stop = 0.0;
    double step = 10.0;
    std::vector<std::string> methods;
};

void run_table(const TableArgs& args, const OutputSpec& spec, std::ostream& out) {
    if (!(args.step > 0.0))
        throw DomainError("table: step must be positive");
    if (args.stop < args.start)
        throw DomainError("table: range start must not exceed stop");
    if (args.methods.empty())
        throw DomainError("table: at least one method is required");

    std::vector<MethodSpec> methods;
    for (const auto& token : args.methods)
        methods.push_back(parse_method(token, 2));

    Report report;
    report.fields["command"] = "table";
    report.fields["angle_unit"] = unit_name(spec.unit);
    report.columns = {"amplitude", "exact_ratio"};
    for (const auto& m : methods) {
        report.columns.push_back(m.label);
        report.columns.push_back(m.label + "_err");
    }

    // Ascending amplitude; the end point is included up to a half-step of slack.
    for (double amp = args.start; amp <= args.stop + args.step * 1e-9; amp += args.step) {
        const double alpha = to_radians(amp, spec.unit);
        const PendulumConfig cfg(1.0, 9.80665, alpha);
        const double t0 = period_approx(cfg, ApproxMethod::huygens());
        const double exact_ratio = period_exact(cfg) / t0;
        const double reference = oracle_ratio(alpha);
        Json row = Json::object();
        row["amplitude"] = amp;
        row["exact_ratio"] = exact_ratio;
        for (const auto& m : methods) {
            const double value = period_approx(cfg, m.method) / t0;
            row[m.label] = value;
            row[m.label + "_err"] = std::abs(value - reference) / reference;
        }
        report.rows.push_back(std::move(row));
    }
    render(report, spec, out);
}

void add_output_options(CLI::App* sub, OutputSpec& spec) {
    std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    std::map<std::string, AngleUnit> units{{"deg", AngleUnit::degrees}, {"rad", AngleUnit::radians}};
    sub->add_option("--format", spec.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    sub->add_option("--unit", spec.unit, "Angle unit for inputs and outputs")
        ->transform(CLI::CheckedTransformer(units, CLI::ignore_case))
        ->default_str("deg");
    sub->add_option("--precision", spec.precision, "Significant digits for text/CSV output")
        ->check(CLI::Range(1, 17))
        ->default_val(12);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simple-pendulum periods via the arithmetic-geometric mean,\n"
                 "with rigorous bounds on the relative error of each approximant."};
    app.require_subcommand(1);
    OutputSpec spec;

    PeriodArgs period_args;
    CLI::App* period = app.add_subcommand("period", "Exact or approximate period of one pendulum");
    period->add_option("--amplitude", period_args.amplitude, "Maximum angular displacement")->required();
    period->add_option("--length", period_args.length, "Pendulum length [m]")->default_val(1.0);
    period->add_option("--gravity", period_args.gravity, "Gravity [m/s^2]")->default_val(9.80665);
    period->add_option("--method", period_args.method,
                       "exact, huygens, p2, bernoulli, series, agm-arithmetic, agm-geometric")
        ->default_str("exact");
    period->add_option("--order", period_args.order, "Series order or AGM index n")->default_val(2);
    period->add_flag("--verify", period_args.verify, "Cross-check against the quadrature oracle");
    add_output_options(period, spec);

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "Error bound and measured errors at one amplitude");
    bounds->add_option("--amplitude", bounds_args.amplitude, "Maximum angular displacement")->required();
    bounds->add_option("--order", bounds_args.order, "AGM index n")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--kind", bounds_args.kind, "trace or closed (default: closed when n is 2 or 3)")
        ->check(CLI::IsMember({"trace", "closed", "auto"}))
        ->default_str("auto");
    bounds->add_option("--oracle-tol", bounds_args.oracle_tol, "Quadrature target for measured errors")
        ->default_val(1e-13);
    add_output_options(bounds, spec);

    ThresholdArgs threshold_args;
    CLI::App* threshold = app.add_subcommand("threshold", "Largest amplitude with bound <= epsilon");
    threshold->add_option("--order", threshold_args.order, "AGM index n")->required()->check(CLI::PositiveNumber);
    threshold->add_option("--epsilon", threshold_args.epsilon, "Relative-error budget")->required();
    threshold->add_option("--kind", threshold_args.kind, "trace or closed")
        ->check(CLI::IsMember({"trace", "closed"}))
        ->default_str("closed");
    add_output_options(threshold, spec);

    RenormArgs renorm_args;
    CLI::App* renorm = app.add_subcommand("renorm", "Iterate the period-preserving renormalization map");
    renorm->add_option("--amplitude", renorm_args.amplitude, "Maximum angular displacement")->required();
    renorm->add_option("--length", renorm_args.length, "Pendulum length [m]")->default_val(1.0);
    renorm->add_option("--gravity", renorm_args.gravity, "Gravity [m/s^2]")->default_val(9.80665);
    renorm->add_option("--steps", renorm_args.steps, "Number of map applications")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    add_output_options(renorm, spec);

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Compare approximation methods over an amplitude range");
    table->add_option("--start", table_args.start, "First amplitude")->required();
    table->add_option("--stop", table_args.stop, "Last amplitude")->required();
    table->add_option("--step", table_args.step, "Amplitude increment")->default_val(10.0);
    table->add_option("--methods", table_args.methods,
                      "Comma-separated list: huygens, p2, bernoulli, series:N, agm-arithmetic:N, agm-geometric:N")
        ->required()
        ->delimiter(',');
    add_output_options(table, spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (period->parsed())
            run_period(period_args, spec, out);
        else if (bounds->parsed())
            run_bounds(bounds_args, spec, out);
        else if (threshold->parsed())
            run_threshold(threshold_args, spec, out);
        else if (renorm->parsed())
            run_renorm(renorm_args, spec, out);
        else if (table->parsed())
            run_table(table_args, spec, out);
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace pendagm::cli
