#include "whichpath/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "whichpath/errors.hpp"

namespace whichpath {

namespace {

using json = nlohmann::json;

void require_object(const json& j, const std::string& where)
{
    if (!j.is_object()) throw ConfigurationError(where + ": expected an object");
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed)
{
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ConfigurationError(where + ": unknown key '" + item.key() + "'");
    }
}

const json& required(const json& j, const std::string& where, const char* key)
{
    if (!j.contains(key)) throw ConfigurationError(where + ": missing required key '" + key + "'");
    return j.at(key);
}

double as_number(const json& v, const std::string& where)
{
    if (!v.is_number()) throw ConfigurationError(where + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigurationError(where + ": must be finite");
    return x;
}

std::uint64_t as_count(const json& v, const std::string& where)
{
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ConfigurationError(where + ": expected a non-negative integer");
}

std::string as_string(const json& v, const std::string& where)
{
    if (!v.is_string()) throw ConfigurationError(where + ": expected a string");
    return v.get<std::string>();
}

template <typename T, typename Convert>
void optional_field(const json& j, const char* key, const std::string& where, T& out, Convert convert)
{
    if (j.contains(key)) out = convert(j.at(key), where + "." + key);
}

ExperimentConfig experiment_from_json(const json& root, const std::string& where)
{
    require_object(root, where);
    reject_unknown(root, where, {"geometry", "recorder", "grid", "numerics", "outputs"});
    ExperimentConfig cfg;

    const std::string gw = where + ".geometry";
    const json& geom = required(root, where, "geometry");
    require_object(geom, gw);
    reject_unknown(geom, gw, {"slit_separation", "packet_width", "propagation_time"});
    cfg.geometry.slit_separation = as_number(required(geom, gw, "slit_separation"), gw + ".slit_separation");
    cfg.geometry.packet_width = as_number(required(geom, gw, "packet_width"), gw + ".packet_width");
    cfg.geometry.propagation_time = as_number(required(geom, gw, "propagation_time"), gw + ".propagation_time");

    const std::string rw = where + ".recorder";
    const json& rec = required(root, where, "recorder");
    require_object(rec, rw);
    reject_unknown(rec, rw, {"n_qubits", "kick_angle", "record_on_path"});
    const auto m = as_count(required(rec, rw, "n_qubits"), rw + ".n_qubits");
    if (m > kMaxQubits) throw ConfigurationError(rw + ".n_qubits: exceeds cap of 20");
    cfg.recorder.n_qubits = static_cast<unsigned>(m);
    cfg.recorder.kick_angle = as_number(required(rec, rw, "kick_angle"), rw + ".kick_angle");
    if (rec.contains("record_on_path")) {
        const std::string p = as_string(rec.at("record_on_path"), rw + ".record_on_path");
        if (p == "A") cfg.recorder.record_on_path = Path::A;
        else if (p == "B") cfg.recorder.record_on_path = Path::B;
        else throw ConfigurationError(rw + ".record_on_path: expected \"A\" or \"B\"");
    }

    if (root.contains("grid")) {
        const std::string w = where + ".grid";
        const json& g = root.at("grid");
        require_object(g, w);
        reject_unknown(g, w, {"x_min", "x_max", "n_points"});
        optional_field(g, "x_min", w, cfg.grid.x_min, as_number);
        optional_field(g, "x_max", w, cfg.grid.x_max, as_number);
        if (g.contains("n_points")) cfg.grid.n_points = as_count(g.at("n_points"), w + ".n_points");
    }

    if (root.contains("numerics")) {
        const std::string w = where + ".numerics";
        const json& n = root.at("numerics");
        require_object(n, w);
        reject_unknown(n, w, {"propagator", "dt", "envelope_threshold"});
        if (n.contains("propagator")) {
            const std::string p = as_string(n.at("propagator"), w + ".propagator");
            if (p == "analytic") cfg.numerics.propagation.kind = PropagationMethod::Kind::analytic;
            else if (p == "split_step") cfg.numerics.propagation.kind = PropagationMethod::Kind::split_step;
            else throw ConfigurationError(w + ".propagator: expected \"analytic\" or \"split_step\"");
        }
        optional_field(n, "dt", w, cfg.numerics.propagation.dt, as_number);
        optional_field(n, "envelope_threshold", w, cfg.numerics.envelope_threshold, as_number);
    }

    if (root.contains("outputs")) {
        const std::string w = where + ".outputs";
        const json& o = root.at("outputs");
        require_object(o, w);
        reject_unknown(o, w, {"pattern_file", "summary_file"});
        if (o.contains("pattern_file")) cfg.outputs.pattern_file = as_string(o.at("pattern_file"), w + ".pattern_file");
        if (o.contains("summary_file")) cfg.outputs.summary_file = as_string(o.at("summary_file"), w + ".summary_file");
    }
    return cfg;
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

ExperimentConfig reference_experiment(unsigned n_qubits, double kick_angle)
{
    ExperimentConfig cfg;
    cfg.geometry = TwoSlitGeometry{20.0, 1.0, 800.0};
    cfg.recorder = RecorderSpec{n_qubits, kick_angle, Path::B};
    return cfg;
}

void ExperimentConfig::validate() const
{
    geometry.validate();
    recorder.validate();
    const SpatialGrid g = grid.make();
    geometry.check_fits(g);
    if (numerics.propagation.kind == PropagationMethod::Kind::split_step && !(numerics.propagation.dt > 0.0))
        throw ConfigurationError("numerics.dt must be positive");
    if (!(numerics.envelope_threshold > 0.0 && numerics.envelope_threshold < 1.0))
        throw ConfigurationError("numerics.envelope_threshold must lie in (0, 1)");
    if (outputs.pattern_file.empty() || outputs.summary_file.empty())
        throw ConfigurationError("outputs: file paths must be non-empty");
}

const char* to_string(SweepParameter p)
{
    switch (p) {
    case SweepParameter::kick_angle: return "kick_angle";
    case SweepParameter::n_qubits: return "n_qubits";
    case SweepParameter::slit_separation: return "slit_separation";
    }
    return "?";
}

ExperimentConfig SweepConfig::at(double value) const
{
    ExperimentConfig cfg = base;
    switch (parameter) {
    case SweepParameter::kick_angle: cfg.recorder.kick_angle = value; break;
    case SweepParameter::n_qubits: cfg.recorder.n_qubits = static_cast<unsigned>(value); break;
    case SweepParameter::slit_separation: cfg.geometry.slit_separation = value; break;
    }
    return cfg;
}

void SweepConfig::validate() const
{
    if (values.empty()) throw ConfigurationError("sweep: value list is empty");
    if (parallelism == 0) throw ConfigurationError("sweep: parallelism must be >= 1");
    for (double v : values) {
        if (parameter == SweepParameter::n_qubits &&
            (v < 0.0 || v > static_cast<double>(kMaxQubits) || v != std::floor(v)))
            throw ConfigurationError("sweep: n_qubits value " + std::to_string(v) + " is not an integer in [0, 20]");
        at(v).validate();
    }
}

ExperimentConfig parse_experiment_config(const std::string& text)
{
    ExperimentConfig cfg = experiment_from_json(parse_json(text), "config");
    cfg.validate();
    return cfg;
}

SweepConfig parse_sweep_config(const std::string& text)
{
    const json root = parse_json(text);
    require_object(root, "sweep config");
    reject_unknown(root, "sweep config", {"base", "sweep", "output"});
    SweepConfig cfg;
    cfg.base = experiment_from_json(required(root, "sweep config", "base"), "base");

    const json& sw = required(root, "sweep config", "sweep");
    require_object(sw, "sweep");
    reject_unknown(sw, "sweep", {"parameter", "values", "parallelism"});
    const std::string param = as_string(required(sw, "sweep", "parameter"), "sweep.parameter");
    if (param == "kick_angle") cfg.parameter = SweepParameter::kick_angle;
    else if (param == "n_qubits") cfg.parameter = SweepParameter::n_qubits;
    else if (param == "slit_separation") cfg.parameter = SweepParameter::slit_separation;
    else throw ConfigurationError("sweep.parameter: unknown parameter '" + param + "'");
    const json& values = required(sw, "sweep", "values");
    if (!values.is_array()) throw ConfigurationError("sweep.values: expected an array");
    for (const json& v : values) cfg.values.push_back(as_number(v, "sweep.values[]"));
    if (sw.contains("parallelism")) {
        const auto p = as_count(sw.at("parallelism"), "sweep.parallelism");
        if (p == 0 || p > 1024) throw ConfigurationError("sweep.parallelism: expected 1..1024");
        cfg.parallelism = static_cast<unsigned>(p);
    }

    if (root.contains("output")) {
        const json& o = root.at("output");
        require_object(o, "output");
        reject_unknown(o, "output", {"sweep_file"});
        if (o.contains("sweep_file")) cfg.sweep_file = as_string(o.at("sweep_file"), "output.sweep_file");
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path)
{
    return parse_experiment_config(read_file(path));
}

SweepConfig load_sweep_config(const std::filesystem::path& path) { return parse_sweep_config(read_file(path)); }

} // namespace whichpath
