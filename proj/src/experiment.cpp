#include "whichpath/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "whichpath/environment.hpp"
#include "whichpath/errors.hpp"

namespace whichpath {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kOracleTol = 1e-10;
constexpr double kMatrixTol = 1e-12;
constexpr double kComplementarityTol = 1e-6;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool bruteforce_applicable(const TwoPathState& s)
{
    return s.n_qubits() <= 8 && s.grid().size() * (std::size_t{1} << s.n_qubits()) <= (std::size_t{1} << 24);
}

} // namespace

bool RunResult::all_checks_pass() const
{
    for (const auto& [name, ok] : invariant_checks)
        if (!ok) return false;
    return true;
}

RunResult compute_run(const ExperimentConfig& cfg)
{
    cfg.validate();
    const SpatialGrid grid = cfg.grid.make();
    const TwoPathState state = make_two_path_branches(cfg.geometry, cfg.recorder, grid, cfg.numerics.propagation);
    const cplx gamma = overlap_env(state.branch_a().phi(), state.branch_b().phi());

    DetectionPattern two = two_path_pattern(state);
    std::optional<VisibilityReport> report;
    try {
        report = make_visibility_report(measure_visibility(two, cfg.numerics.envelope_threshold), gamma);
    } catch (const FringeResolutionError&) {
    }
    const ReducedDensityMatrix2 rho = reduced_rho_closed_form(gamma);

    RunResult r{gamma,
                report,
                distinguishability(gamma),
                purity(rho),
                coherence_magnitude(rho),
                rho,
                std::move(two),
                single_path_pattern(state.branch_a()),
                single_path_pattern(state.branch_b()),
                {}};

    auto& checks = r.invariant_checks;
    checks["pattern_normalized"] = std::abs(r.two_path.integral() - 1.0) <= kNormTol;
    checks["pattern_nonnegative"] =
        std::all_of(r.two_path.intensity.begin(), r.two_path.intensity.end(), [](double v) { return v >= 0.0; });
    if (bruteforce_applicable(state))
        checks["closed_form_matches_bruteforce"] =
            max_abs_diff(r.two_path.intensity, joint_pattern_bruteforce(state).intensity) <= kOracleTol;
    try {
        const ReducedDensityMatrix2 traced = reduced_rho_partial_trace(state);
        double diff = 0.0;
        for (int k = 0; k < 4; ++k) diff = std::max(diff, std::abs(traced.entries()[k] - rho.entries()[k]));
        checks["partial_trace_matches_closed_form"] = diff <= kMatrixTol;
    } catch (const BasisValidityError&) {
    }
    checks["purity_matches_overlap"] = std::abs(r.purity - 0.5 * (1.0 + std::norm(gamma))) <= kMatrixTol;
    if (report)
        checks["complementarity"] =
            report->visibility * report->visibility + r.distinguishability * r.distinguishability <=
            1.0 + kComplementarityTol;
    return r;
}

void write_pattern_csv(std::ostream& out, const RunResult& r)
{
    out << "x,intensity_two_path,intensity_A,intensity_B,intensity_incoherent\n";
    const SpatialGrid& g = r.two_path.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double incoherent = 0.5 * (r.path_a.intensity[i] + r.path_b.intensity[i]);
        out << fmt17(g.x(i)) << ',' << fmt17(r.two_path.intensity[i]) << ',' << fmt17(r.path_a.intensity[i]) << ','
            << fmt17(r.path_b.intensity[i]) << ',' << fmt17(incoherent) << '\n';
    }
}

std::string summary_json(const RunResult& r)
{
    using ojson = nlohmann::ordered_json;
    const auto complex_json = [](cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; };
    ojson doc;
    doc["gamma"] = complex_json(r.gamma);
    if (r.visibility) doc["visibility"] = r.visibility->visibility;
    doc["distinguishability"] = r.distinguishability;
    doc["purity"] = r.purity;
    doc["coherence"] = r.coherence;
    if (r.visibility) doc["fringe_spacing"] = r.visibility->fringe_spacing;
    doc["rho"] = ojson::array({ojson::array({complex_json(r.rho(0, 0)), complex_json(r.rho(0, 1))}),
                               ojson::array({complex_json(r.rho(1, 0)), complex_json(r.rho(1, 1))})});
    ojson checks = ojson::object();
    for (const auto& [name, ok] : r.invariant_checks) checks[name] = ok ? "pass" : "fail";
    doc["invariant_checks"] = checks;
    return doc.dump(2) + "\n";
}

std::filesystem::path resolve_output(const std::filesystem::path& configured, const std::filesystem::path& output_dir)
{
    if (output_dir.empty()) return configured;
    return output_dir / configured.filename();
}

void write_run_outputs(const ExperimentConfig& cfg, const RunResult& r, const std::filesystem::path& output_dir)
{
    const auto open = [](const std::filesystem::path& p) {
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        if (!out) throw ConfigurationError("cannot write " + p.string());
        return out;
    };
    {
        std::ofstream out = open(resolve_output(cfg.outputs.pattern_file, output_dir));
        write_pattern_csv(out, r);
    }
    std::ofstream out = open(resolve_output(cfg.outputs.summary_file, output_dir));
    out << summary_json(r);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg)
{
    cfg.validate();
    std::vector<SweepRow> rows(cfg.values.size());
    const auto n = static_cast<std::int64_t>(cfg.values.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.parallelism)
    for (std::int64_t i = 0; i < n; ++i) {
        const double value = cfg.values[static_cast<std::size_t>(i)];
        SweepRow row{value, false, false, "", cplx{}, std::nullopt, 0.0, 0.0};
        try {
            const RunResult r = compute_run(cfg.at(value));
            row.gamma = r.gamma;
            if (r.visibility) row.visibility = r.visibility->visibility;
            row.distinguishability = r.distinguishability;
            row.purity = r.purity;
            row.computed = true;
            row.ok = r.all_checks_pass();
            row.status = row.ok ? "ok" : "invariant check failed";
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "param_value,gamma_re,gamma_im,visibility,distinguishability,purity,status\n";
    for (const SweepRow& row : rows) {
        std::string status = row.status;
        for (char& c : status)
            if (c == ',' || c == '\n' || c == '"') c = ' ';
        out << fmt17(row.param_value) << ',';
        if (row.computed)
            out << fmt17(row.gamma.real()) << ',' << fmt17(row.gamma.imag()) << ','
                << (row.visibility ? fmt17(*row.visibility) : "") << ',' << fmt17(row.distinguishability) << ','
                << fmt17(row.purity);
        else
            out << ",,,,";
        out << ',' << status << '\n';
    }
}

} // namespace whichpath
