// tempodisc: command-line surface for the time-average intertemporal
// choice toolkit: decisions, discount curves, preference reversal,
// contrast ratios, discounter simulation, calibration, and population
// dispersion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempodisc/calibrate.hpp"
#include "tempodisc/choice.hpp"
#include "tempodisc/contrast.hpp"
#include "tempodisc/discounting.hpp"
#include "tempodisc/experiments.hpp"
#include "tempodisc/io.hpp"
#include "tempodisc/qmath.hpp"
#include "tempodisc/reversal.hpp"

namespace {

using namespace tempodisc;

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the table to this path instead of stdout");
}

// Meta numbers go through the same 10-digit rounding as table cells.
double round10(double v) {
    return std::strtod(format_double(v).c_str(), nullptr);
}

void emit(const Table& table, nlohmann::json meta, const OutputOptions& opts) {
    meta["tool"] = "tempodisc";
    meta["version"] = kVersion;
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path);
        if (!file)
            throw DataError("cannot open output path: " + opts.out_path);
        os = &file;
    }
    if (opts.format == "json")
        *os << to_json(table, std::move(meta)).dump(2) << "\n";
    else
        write_csv(table, *os);
}

double parse_number(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw DataError("not a number: '" + text + "'");
    return v;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("TEMPODISC_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw DomainError("TEMPODISC_SEED must be an unsigned integer");
        return v;
    }
    return flag_seed;
}

double periods_per_year(const std::string& label) {
    if (label == "year") return 1.0;
    if (label == "quarter") return 4.0;
    if (label == "month") return 12.0;
    if (label == "week") return 52.0;
    if (label == "day") return 365.0;
    throw DomainError("unknown --period-length '" + label +
                      "' (expected year, quarter, month, week, or day)");
}

// ---------------------------------------------------------------- decide

struct DecideState {
    double wealth = 0.0;
    double early_amount = 0.0;
    double late_amount = 0.0;
    double p_early = 1.0;
    double p_late = 1.0;
    double threshold_db = kDefaultIndifferenceThresholdDb;
    OutputOptions out;
};

void run_decide(const DecideState& s) {
    if (!(s.threshold_db > 0.0))
        throw DomainError("--threshold-db must be positive");
    const ChoiceProblem problem(Wealth(s.wealth), s.early_amount, s.late_amount,
                                Probability(s.p_early), Probability(s.p_late));
    const Preference pref = decide(problem, s.threshold_db);

    Table table{{"side", "decision_average", "early_average", "late_average", "contrast_db"}, {}};
    table.add_row({std::string(side_name(pref.side)), pref.decision_average.value(),
                   pref.early_average.value(), pref.late_average.value(), pref.contrast_db});
    emit(table,
         {{"subcommand", "decide"},
          {"wealth", round10(s.wealth)},
          {"early_amount", round10(s.early_amount)},
          {"late_amount", round10(s.late_amount)},
          {"p_early", round10(s.p_early)},
          {"p_late", round10(s.p_late)},
          {"threshold_db", round10(s.threshold_db)}},
         s.out);
}

void setup_decide(CLI::App& app) {
    auto state = std::make_shared<DecideState>();
    auto* cmd = app.add_subcommand("decide", "Pick the payment hypothesis with the larger time average");
    cmd->add_option("--wealth", state->wealth, "Personal wealth W0")->required();
    cmd->add_option("--early-amount", state->early_amount, "Amount m due after one period")->required();
    cmd->add_option("--late-amount", state->late_amount, "Amount M due after the long period")->required();
    cmd->add_option("--p-early", state->p_early, "First-period probability of m")->required();
    cmd->add_option("--p-late", state->p_late, "First-period probability of M")->required();
    cmd->add_option("--threshold-db", state->threshold_db, "Indifference contrast band in dB")
        ->capture_default_str();
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_decide(*state); });
}

// ----------------------------------------------------------------- curve

struct CurveState {
    double q = 2.0;
    double rho = 0.0;
    double p_m = 1.0;
    double n_max = 0.0;
    double step = 1.0;
    OutputOptions out;
};

void run_curve(const CurveState& s) {
    if (!(s.step > 0.0))
        throw DomainError("--step must be positive");
    const DiscountModel model(QIndex(s.q), Rate(s.rho), Probability(s.p_m), Wealth(1.0));
    Table table{{"n", "factor"}, {}};
    for (long long k = 0;; ++k) {
        const double n = static_cast<double>(k) * s.step;
        if (n > s.n_max)
            break;
        table.add_row({n, q_discount_factor(model, PeriodCount(n))});
    }
    emit(table,
         {{"subcommand", "curve"},
          {"q", round10(s.q)},
          {"rho", round10(s.rho)},
          {"p_m", round10(s.p_m)},
          {"n_max", round10(s.n_max)},
          {"step", round10(s.step)}},
         s.out);
}

void setup_curve(CLI::App& app) {
    auto state = std::make_shared<CurveState>();
    auto* cmd = app.add_subcommand("curve", "Discount factor versus delayed periods");
    cmd->add_option("--q", state->q, "Entropic index, q >= 1")->required();
    cmd->add_option("--rho", state->rho, "Per-period discount rate")->required();
    cmd->add_option("--p-m", state->p_m, "First-period payment probability")->capture_default_str();
    cmd->add_option("--n-max", state->n_max, "Last period to tabulate")->required();
    cmd->add_option("--step", state->step, "Sampling step in periods")->capture_default_str();
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_curve(*state); });
}

// -------------------------------------------------------------- reversal

struct ReversalState {
    double rate = 0.0;
    int n_max = 10;
    OutputOptions out;
};

void run_reversal(const ReversalState& s) {
    const ReversalScenario scenario(GrowthRate(s.rate), s.n_max);
    const ReversalCurves curves = reversal_curves(scenario);
    const PeriodCount crossing = crossing_point(scenario.rate);

    Table table{{"n", "time_avg_m", "time_avg_2m"}, {}};
    for (std::size_t i = 0; i < curves.early.size(); ++i)
        table.add_row({curves.early.points()[i].n, curves.early.points()[i].value,
                       curves.late.points()[i].value});
    if (s.out.format == "csv")
        std::cerr << "crossing n* = " << format_double(crossing.value()) << "\n";
    emit(table,
         {{"subcommand", "reversal"},
          {"rate", round10(s.rate)},
          {"n_max", s.n_max},
          {"crossing", round10(crossing.value())}},
         s.out);
}

void setup_reversal(CLI::App& app) {
    auto state = std::make_shared<ReversalState>();
    auto* cmd = app.add_subcommand("reversal", "Time averages of M now versus 2M one period later");
    cmd->add_option("--rate", state->rate, "Growth rate a = M / W0")->required();
    cmd->add_option("--n-max", state->n_max, "Last period to tabulate")->capture_default_str();
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_reversal(*state); });
}

// -------------------------------------------------------------- contrast

struct ContrastState {
    double x_m = 0.0;
    double q = 2.0;
    double p_m = 1.0;
    long long n_max = 0;
    OutputOptions out;
};

void run_contrast(const ContrastState& s) {
    if (s.n_max < 1)
        throw DomainError("--n-max must be >= 1");
    Table table{{"n", "contrast_db"}, {}};
    for (long long n = 1; n <= s.n_max; ++n) {
        const ContrastQuery query(GrowthRate(s.x_m), QIndex(s.q), Probability(s.p_m),
                                  PeriodCount(static_cast<double>(n)));
        table.add_row({n, contrast_db(query)});
    }
    emit(table,
         {{"subcommand", "contrast"},
          {"x_m", round10(s.x_m)},
          {"q", round10(s.q)},
          {"p_m", round10(s.p_m)},
          {"n_max", s.n_max}},
         s.out);
}

void setup_contrast(CLI::App& app) {
    auto state = std::make_shared<ContrastState>();
    auto* cmd = app.add_subcommand("contrast", "Contrast ratio between early and late time averages");
    cmd->add_option("--xm", state->x_m, "First-period growth rate x_m = m / W0")->required();
    cmd->add_option("--q", state->q, "Entropic index, q >= 1")->capture_default_str();
    cmd->add_option("--p-m", state->p_m, "First-period payment probability")->capture_default_str();
    cmd->add_option("--n-max", state->n_max, "Last period to tabulate")->required();
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_contrast(*state); });
}

// ---------------------------------------------------------------- thaler

struct ThalerState {
    std::string config_path;
    std::string period_length;
    OutputOptions out;
};

void run_thaler(const ThalerState& s) {
    nlohmann::json config;
    {
        std::ifstream in(s.config_path);
        if (!in)
            throw DataError("cannot open config: " + s.config_path);
        try {
            in >> config;
        } catch (const nlohmann::json::exception& e) {
            throw DataError("config is not valid JSON: " + std::string(e.what()));
        }
    }

    ThalerScenario scenario{Wealth(config.at("wealth").get<double>()),
                            QIndex(config.value("q", 2.0)),
                            Probability(config.value("p_m", 1.0)),
                            {},
                            {},
                            {}};
    for (const auto& h : config.at("horizons"))
        scenario.horizons.push_back({h.at("label").get<std::string>(), h.at("n").get<double>()});

    std::vector<double> first_period_amounts;
    bool any_observed = false;
    for (const auto& prize : config.at("prizes")) {
        const double m0 = prize.at("m0").get<double>();
        scenario.prizes.push_back(m0);
        if (prize.contains("first_period_amount")) {
            first_period_amounts.push_back(prize["first_period_amount"].get<double>());
        } else if (prize.contains("target_rate")) {
            // Reverse-derive the increment from the desired per-period rate.
            const double rate = prize["target_rate"].get<double>();
            first_period_amounts.push_back(m0 + rate * (scenario.w0.value() + m0));
        } else {
            throw DataError("each prize needs first_period_amount or target_rate");
        }
        if (prize.contains("observed")) {
            any_observed = true;
            scenario.observed.push_back(prize["observed"].get<std::vector<double>>());
        } else {
            scenario.observed.emplace_back();
        }
    }
    if (any_observed) {
        for (auto& per_prize : scenario.observed)
            if (per_prize.empty())
                per_prize.assign(scenario.horizons.size(),
                                 std::numeric_limits<double>::quiet_NaN());
    } else {
        scenario.observed.clear();
    }

    const ThalerTable rows = simulate_discounter(scenario, first_period_amounts);

    const bool annualize = !s.period_length.empty();
    const double per_year = annualize ? periods_per_year(s.period_length) : 1.0;

    std::vector<std::string> columns{"prize", "horizon_label", "n", "amount", "rate"};
    if (annualize)
        columns.push_back("rate_annual");
    if (any_observed)
        columns.push_back("observed");
    Table table{std::move(columns), {}};
    for (const auto& row : rows) {
        std::vector<Table::Cell> cells{row.prize, row.horizon_label, row.n, row.amount, row.rate};
        if (annualize)
            cells.emplace_back(row.rate * per_year);
        if (any_observed)
            cells.emplace_back(row.observed ? Table::Cell(*row.observed)
                                            : Table::Cell(std::string()));
        table.add_row(std::move(cells));
    }

    nlohmann::json meta{{"subcommand", "thaler"},
                        {"wealth", round10(scenario.w0.value())},
                        {"q", round10(scenario.q.value())},
                        {"p_m", round10(scenario.p_m.value())}};
    if (annualize)
        meta["period_length"] = s.period_length;
    if (scenario.prizes.size() >= 2) {
        const MagnitudeReport report = magnitude_effect(rows);
        meta["magnitude_effect"] = report.description;
        if (s.out.format == "csv")
            std::cerr << "magnitude effect: " << report.description << "\n";
    }
    emit(table, std::move(meta), s.out);
}

void setup_thaler(CLI::App& app) {
    auto state = std::make_shared<ThalerState>();
    auto* cmd = app.add_subcommand("thaler", "Simulate a discounter over lottery-prize experiments");
    cmd->add_option("--config", state->config_path, "JSON scenario file")->required();
    cmd->add_option("--period-length", state->period_length,
                    "Report rates per year assuming this period length "
                    "(year, quarter, month, week, day)");
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_thaler(*state); });
}

// ------------------------------------------------------------------- fit

struct FitState {
    std::string data_path;
    double pinned_q = 0.0;
    bool has_pinned_q = false;
    bool fit_pm = false;
    bool log_space = false;
    bool compare = false;
    double wealth = 0.0;
    bool has_wealth = false;
    double m0 = 0.0;
    OutputOptions out;
};

ObservationSet load_observations(const FitState& s) {
    std::ifstream in(s.data_path);
    if (!in)
        throw DataError("cannot open data file: " + s.data_path);
    const CsvFile csv = read_csv(in);

    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < csv.columns.size(); ++i)
            if (csv.columns[i] == name)
                return i;
        return std::nullopt;
    };
    const auto n_col = column("n");
    const auto value_col = column("value");
    if (!n_col || !value_col)
        throw DataError("fit data needs columns 'n' and 'value'");
    const auto kind_col = column("kind");

    std::vector<ObservationRow> rows;
    rows.reserve(csv.rows.size());
    for (const auto& cells : csv.rows) {
        ObservationRow row{parse_number(cells[*n_col]), parse_number(cells[*value_col]), false};
        if (kind_col) {
            const std::string& kind = cells[*kind_col];
            if (kind == "amount")
                row.is_amount = true;
            else if (kind != "factor")
                throw DataError("kind must be 'factor' or 'amount', got '" + kind + "'");
        }
        rows.push_back(row);
    }

    std::optional<Wealth> w0;
    if (s.has_wealth)
        w0 = Wealth(s.wealth);
    return ObservationSet(std::move(rows), w0, s.m0);
}

void run_fit(const FitState& s) {
    const ObservationSet data = load_observations(s);
    FitOptions options;
    options.fit_p_m = s.fit_pm;
    options.log_space = s.log_space;

    Table table{{"family", "q", "rho", "p_m", "sse", "converged"}, {}};
    auto add_fit = [&](const std::string& family, const FitResult& r) {
        table.add_row({family, r.q.value(), r.rho.value(), r.p_m.value(), r.sse,
                       static_cast<long long>(r.converged ? 1 : 0)});
    };

    if (s.compare) {
        for (const auto& model_fit : compare_models(data, options))
            add_fit(model_fit.family, model_fit.result);
    } else if (s.has_pinned_q) {
        add_fit("pinned", fit_pinned_q(data, QIndex(s.pinned_q), options));
    } else {
        add_fit("q-exponential", fit(data, options));
    }

    nlohmann::json meta{{"subcommand", "fit"},
                        {"data", s.data_path},
                        {"fit_p_m", s.fit_pm},
                        {"log_space", s.log_space},
                        {"loss_space", s.log_space ? "log-factor" : "factor"}};
    if (s.has_pinned_q)
        meta["pinned_q"] = round10(s.pinned_q);
    emit(table, std::move(meta), s.out);
}

void setup_fit(CLI::App& app) {
    auto state = std::make_shared<FitState>();
    auto* cmd = app.add_subcommand("fit", "Calibrate discount parameters from indifference data");
    cmd->add_option("--data", state->data_path, "CSV with columns n,value[,kind]")->required();
    auto* pin = cmd->add_option("--pin-q", state->pinned_q, "Hold q fixed at this value");
    auto* wealth = cmd->add_option("--wealth", state->wealth, "Wealth W0 (needed for amount rows)");
    cmd->add_option("--m0", state->m0, "Amount already received at t0")->capture_default_str();
    cmd->add_flag("--fit-pm", state->fit_pm, "Also fit p_m instead of pinning it at 1");
    cmd->add_flag("--log-space", state->log_space, "Least squares on log factors");
    cmd->add_flag("--compare", state->compare, "Rank exponential, hyperbolic, and free-q fits");
    add_output_options(cmd, state->out);
    cmd->callback([state, pin, wealth] {
        state->has_pinned_q = pin->count() > 0;
        state->has_wealth = wealth->count() > 0;
        run_fit(*state);
    });
}

// ------------------------------------------------------------ population

struct PopulationState {
    double exponent = 1.5;
    double w_min = 0.0;
    std::uint64_t size = 0;
    std::uint64_t seed = 1;
    double m0 = 0.0;
    double m = 0.0;
    OutputOptions out;
};

void run_population(const PopulationState& s) {
    const ParetoWealth population{s.exponent, s.w_min, static_cast<std::size_t>(s.size),
                                  effective_seed(s.seed)};
    const DispersionSummary summary = population_dispersion(population, s.m0, s.m);

    Table table{{"count", "mean", "min", "q25", "median", "q75", "max", "iqr"}, {}};
    table.add_row({static_cast<long long>(summary.size), summary.mean, summary.min, summary.q25,
                   summary.median, summary.q75, summary.max, summary.iqr()});
    emit(table,
         {{"subcommand", "population"},
          {"exponent", round10(s.exponent)},
          {"w_min", round10(s.w_min)},
          {"size", s.size},
          {"seed", population.seed},
          {"m0", round10(s.m0)},
          {"m", round10(s.m)}},
         s.out);
}

void setup_population(CLI::App& app) {
    auto state = std::make_shared<PopulationState>();
    auto* cmd = app.add_subcommand("population",
                                   "Dispersion of discount rates across Pareto-distributed wealth");
    cmd->add_option("--exponent", state->exponent, "Pareto tail index, > 1")->capture_default_str();
    cmd->add_option("--wmin", state->w_min, "Minimum wealth")->required();
    cmd->add_option("--size", state->size, "Number of draws")->required();
    cmd->add_option("--seed", state->seed, "RNG seed (TEMPODISC_SEED overrides)")
        ->capture_default_str();
    cmd->add_option("--m0", state->m0, "Amount already received at t0")->capture_default_str();
    cmd->add_option("--m", state->m, "First-period indifference amount")->required();
    add_output_options(cmd, state->out);
    cmd->callback([state] { run_population(*state); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-average analysis of intertemporal choice"};
    app.require_subcommand(1);

    setup_decide(app);
    setup_curve(app);
    setup_reversal(app);
    setup_contrast(app);
    setup_thaler(app);
    setup_fit(app);
    setup_population(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
