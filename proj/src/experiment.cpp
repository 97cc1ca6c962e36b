#include "latwave/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "latwave/analysis.hpp"
#include "latwave/asymptotics.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace latwave {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_int(const std::string& text, int& out) {
    double v = 0.0;
    if (!parse_double(text, v)) return false;
    if (v != std::floor(v) || std::abs(v) > 1e9) return false;
    out = static_cast<int>(v);
    return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

const char* artifact_name(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::probe_csv: return "probe_csv";
        case ArtifactKind::snapshot_csv: return "snapshot_csv";
        case ArtifactKind::fit_json: return "fit_json";
        case ArtifactKind::figure_svg: return "figure_svg";
    }
    return "?";
}

bool parse_artifact(const std::string& text, ArtifactKind& out) {
    for (const auto kind : {ArtifactKind::probe_csv, ArtifactKind::snapshot_csv,
                            ArtifactKind::fit_json, ArtifactKind::figure_svg}) {
        if (text == artifact_name(kind)) {
            out = kind;
            return true;
        }
    }
    return false;
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '-' || c == '_' || c == '.';
    });
}

void collect_spec_issues(const ExperimentSpec& spec, std::vector<std::string>& issues) {
    if (!valid_name(spec.name)) {
        issues.push_back("experiment name must be nonempty and use only letters, "
                         "digits, '-', '_' or '.'");
    }
    for (const auto t : spec.snapshot_times) {
        if (!(t >= 0.0) || t > spec.t_end) {
            issues.push_back("snapshot time " + fmt_short(t) +
                             " must lie within [0, t_end = " + fmt_short(spec.t_end) + "]");
        }
    }
    const bool wants_fits = std::count(spec.outputs.begin(), spec.outputs.end(),
                                       ArtifactKind::fit_json) > 0;
    if (wants_fits && spec.snapshot_times.size() < 4) {
        issues.push_back("fit_json output needs at least 4 snapshot times");
    }
    try {
        spec.to_fdm_config().validate();
    } catch (const validation_error& e) {
        issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path, "cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw io_error(path, "write failed");
}

// CSV cells: 17 significant digits; NaN marks a cell intentionally left
// empty (the centered-difference columns at the series ends).
std::string csv_table(const std::vector<std::string>& echo,
                      const std::vector<std::string>& names,
                      const std::vector<const std::vector<double>*>& columns) {
    std::string out;
    for (const auto& line : echo) out += "# " + line + "\n";
    for (std::size_t c = 0; c < names.size(); ++c) {
        out += (c ? "," : "") + names[c];
    }
    out += "\n";
    const std::size_t rows = columns.empty() ? 0 : columns.front()->size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ",";
            const double v = (*columns[c])[r];
            if (!std::isnan(v)) out += fmt17(v);
        }
        out += "\n";
    }
    return out;
}

// Pads a centered-difference series to the full time grid with NaN ends.
std::vector<double> pad_centered(const std::vector<double>& inner, std::size_t rows) {
    std::vector<double> out(rows, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < inner.size() && i + 1 < rows; ++i) out[i + 1] = inner[i];
    return out;
}

ordered_json fit_to_json(const FitReport& fit) {
    return ordered_json{{"exponent", fit.exponent},   {"intercept", fit.intercept},
                        {"r_squared", fit.r_squared}, {"t_min", fit.t_min},
                        {"t_max", fit.t_max},         {"n_points", fit.n_points}};
}

std::string probe_file_name(const Probe& probe) {
    return "probe_m" + std::to_string(probe.m) + "_n" + std::to_string(probe.n) + ".csv";
}

void emit_probe_csvs(const ExperimentSpec& spec, const RunResult& result,
                     const std::string& dir, ExperimentSummary& summary) {
    for (const auto& series : result.probes) {
        const std::size_t rows = series.times.size();
        const auto v = pad_centered(series.v, rows);
        const auto w = pad_centered(series.w, rows);
        const std::string path =
            dir + "/" + probe_file_name({series.m, series.n});
        write_file(path, csv_table(spec.echo_lines(), {"t", "u", "v", "w"},
                                   {&series.times, &series.u, &v, &w}));
        summary.files.push_back(path);
    }
}

void emit_snapshot_csvs(const ExperimentSpec& spec, const RunResult& result,
                        const std::string& dir, ExperimentSummary& summary) {
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        const auto& snap = result.snapshots[i];
        std::vector<double> m(snap.u.size());
        for (std::size_t j = 0; j < m.size(); ++j) m[j] = static_cast<double>(j);
        auto echo = spec.echo_lines();
        echo.push_back("capture_time=" + fmt17(snap.t));
        const double requested = i < spec.snapshot_times.size()
                                     ? spec.snapshot_times[i]
                                     : snap.t;
        const std::string path = dir + "/snapshot_t" + fmt_short(requested) + ".csv";
        write_file(path, csv_table(echo, {"m", "u", "v", "w"},
                                   {&m, &snap.u, &snap.v, &snap.w}));
        summary.files.push_back(path);
    }
}

void emit_fit_json(const ExperimentSpec& spec, const RunResult& result,
                   const std::string& dir, ExperimentSummary& summary) {
    const double w0 = spec.params.omega0();
    std::vector<double> times, vmax, wmax;
    for (const auto& snap : result.snapshots) {
        times.push_back(snap.t);
        double pv = 0.0, pw = 0.0;
        for (const auto x : snap.v) pv = std::max(pv, std::abs(x));
        for (const auto x : snap.w) pw = std::max(pw, std::abs(x));
        vmax.push_back(pv);
        wmax.push_back(pw);
    }
    ordered_json doc;
    doc["experiment"] = spec.name;
    doc["snapshot_times"] = times;
    doc["velocity_peak"] = vmax;
    doc["acceleration_peak"] = wmax;
    doc["velocity_fit"] = fit_to_json(peak_amplitude_decay(times, vmax));
    doc["acceleration_fit"] = fit_to_json(peak_amplitude_decay(times, wmax));
    try {
        std::vector<double> widths;
        for (const auto& snap : result.snapshots) {
            std::vector<double> m(snap.v.size());
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = static_cast<double>(j);
            widths.push_back(front_width(m, snap.v, snap.t, w0).width);
        }
        doc["front_widths"] = widths;
        doc["front_width_fit"] =
            fit_to_json(peak_amplitude_decay(times, widths));
        doc["front_width_ratio"] = widths.back() / widths.front();
    } catch (const validation_error&) {
        // snapshots that do not resolve the front leave the width section out
        doc["front_widths"] = nullptr;
    }
    const std::string path = dir + "/fits.json";
    write_file(path, doc.dump(2) + "\n");
    summary.files.push_back(path);
}

void emit_generic_figures(const ExperimentSpec& spec, const RunResult& result,
                          const std::string& dir, ExperimentSummary& summary) {
    for (const auto& series : result.probes) {
        const std::string tag =
            "m" + std::to_string(series.m) + "_n" + std::to_string(series.n);
        const std::string node = "(" + std::to_string(series.m) + ", " +
                                 std::to_string(series.n) + ")";
        const std::vector<double> t_inner(series.times.begin() + 1,
                                          series.times.end() - 1);
        const struct {
            const char* stem;
            const char* label;
            const std::vector<double>* t;
            const std::vector<double>* y;
        } charts[] = {
            {"u", "displacement", &series.times, &series.u},
            {"v", "velocity", &t_inner, &series.v},
            {"w", "acceleration", &t_inner, &series.w},
        };
        for (const auto& chart : charts) {
            if (chart.y->empty()) continue;
            const std::string path = dir + "/figure_" + chart.stem + "_" + tag + ".svg";
            write_file(path,
                       detail::render_svg_chart(
                           std::string(chart.label) + " at node " + node, "t",
                           chart.stem,
                           {{"numeric", *chart.t, *chart.y, 1.2, "#1f5fa8"}},
                           spec.echo_lines()));
            summary.files.push_back(path);
        }
    }
}

std::string make_out_dir(const ExperimentSpec& spec, const std::string& out_dir) {
    const std::string dir = out_dir + "/" + spec.name;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error(dir, "cannot create output directory (" + ec.message() + ")");
    return dir;
}

void emit_outputs(const ExperimentSpec& spec, const RunResult& result,
                  const std::string& dir, ExperimentSummary& summary) {
    for (const auto kind : spec.outputs) {
        switch (kind) {
            case ArtifactKind::probe_csv:
                emit_probe_csvs(spec, result, dir, summary);
                break;
            case ArtifactKind::snapshot_csv:
                emit_snapshot_csvs(spec, result, dir, summary);
                break;
            case ArtifactKind::fit_json:
                emit_fit_json(spec, result, dir, summary);
                break;
            case ArtifactKind::figure_svg:
                emit_generic_figures(spec, result, dir, summary);
                break;
        }
    }
}

ExperimentSummary run_validated(const ExperimentSpec& spec, const std::string& out_dir) {
    const std::string dir = make_out_dir(spec, out_dir);
    const RunResult result = run(spec.to_fdm_config());
    ExperimentSummary summary;
    summary.name = spec.name;
    emit_outputs(spec, result, dir, summary);
    return summary;
}

}  // namespace

FdmConfig ExperimentSpec::to_fdm_config() const {
    FdmConfig cfg;
    cfg.params = params;
    cfg.tau = tau;
    cfg.t_end = t_end;
    cfg.probes = probes;
    cfg.snapshot_times = snapshot_times;
    cfg.halo_margin = halo_margin;
    cfg.symmetry = symmetry;
    return cfg;
}

std::vector<std::string> ExperimentSpec::echo_lines() const {
    std::vector<std::string> lines;
    lines.push_back("name=" + name);
    lines.push_back("mass=" + fmt17(params.mass));
    lines.push_back("stiffness=" + fmt17(params.stiffness));
    lines.push_back("spacing=" + fmt17(params.spacing));
    lines.push_back("load=" + fmt17(params.load_amplitude));
    lines.push_back("tau=" + fmt17(tau));
    lines.push_back("t_end=" + fmt17(t_end));
    lines.push_back("halo=" + std::to_string(halo_margin));
    lines.push_back(std::string("symmetry=") +
                    (symmetry == Symmetry::quarter ? "quarter" : "full"));
    for (const auto& probe : probes) {
        lines.push_back("probe=" + std::to_string(probe.m) + "," +
                        std::to_string(probe.n));
    }
    for (const auto t : snapshot_times) {
        lines.push_back("snapshot=" + fmt17(t));
    }
    std::string outs;
    for (const auto kind : outputs) {
        if (!outs.empty()) outs += ",";
        outs += artifact_name(kind);
    }
    lines.push_back("outputs=" + outs);
    return lines;
}

ExperimentSpec parse_config(std::istream& in, const std::string& origin) {
    ExperimentSpec spec;
    std::vector<std::string> issues;
    std::vector<std::string> seen;
    bool tau_given = false;
    bool got_name = false, got_t_end = false;
    double mass = 1.0, stiffness = 1.0, spacing = 1.0, load = 1.0;

    auto once = [&](const std::string& key) {
        if (std::count(seen.begin(), seen.end(), key) > 0) {
            issues.push_back("duplicate key '" + key + "'");
            return false;
        }
        seen.push_back(key);
        return true;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        const std::string where = origin + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            issues.push_back(where + ": expected key=value, got '" + text + "'");
            continue;
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        auto bad_value = [&]() {
            issues.push_back(where + ": cannot parse value '" + value + "' for key '" +
                             key + "'");
        };

        if (key == "name") {
            if (once(key)) spec.name = value;
            got_name = true;
        } else if (key == "mass" || key == "stiffness" || key == "spacing" ||
                   key == "load") {
            double v = 0.0;
            if (!parse_double(value, v)) {
                bad_value();
            } else if (once(key)) {
                (key == "mass" ? mass
                 : key == "stiffness" ? stiffness
                 : key == "spacing" ? spacing
                                    : load) = v;
            }
        } else if (key == "tau") {
            double v = 0.0;
            if (!parse_double(value, v)) {
                bad_value();
            } else if (once(key)) {
                spec.tau = v;
                tau_given = true;
            }
        } else if (key == "t_end") {
            double v = 0.0;
            if (!parse_double(value, v)) {
                bad_value();
            } else if (once(key)) {
                spec.t_end = v;
                got_t_end = true;
            }
        } else if (key == "halo") {
            int v = 0;
            if (!parse_int(value, v)) {
                bad_value();
            } else if (once(key)) {
                spec.halo_margin = v;
            }
        } else if (key == "symmetry") {
            if (value != "quarter" && value != "full") {
                bad_value();
            } else if (once(key)) {
                spec.symmetry = value == "quarter" ? Symmetry::quarter : Symmetry::full;
            }
        } else if (key == "probe") {
            const auto parts = split(value, ',');
            int m = 0, n = 0;
            if (parts.size() != 2 || !parse_int(parts[0], m) || !parse_int(parts[1], n)) {
                bad_value();
            } else {
                spec.probes.push_back({m, n});
            }
        } else if (key == "snapshot") {
            double v = 0.0;
            if (!parse_double(value, v)) {
                bad_value();
            } else {
                spec.snapshot_times.push_back(v);
            }
        } else if (key == "outputs") {
            if (once(key)) {
                spec.outputs.clear();
                for (const auto& part : split(value, ',')) {
                    ArtifactKind kind;
                    if (!parse_artifact(part, kind)) {
                        issues.push_back(where + ": unknown artifact kind '" + part + "'");
                    } else if (std::count(spec.outputs.begin(), spec.outputs.end(),
                                          kind) == 0) {
                        spec.outputs.push_back(kind);
                    }
                }
            }
        } else {
            issues.push_back(where + ": unknown key '" + key + "'");
        }
    }

    if (!got_name) issues.push_back("missing required key 'name'");
    if (!got_t_end) issues.push_back("missing required key 't_end'");

    bool params_ok = true;
    try {
        spec.params = LatticeParams(mass, stiffness, spacing, load);
    } catch (const std::invalid_argument& e) {
        issues.push_back(e.what());
        params_ok = false;
    }
    if (!tau_given) {
        // default step expressed in natural time units of the lattice
        spec.tau = 0.07 / spec.params.omega0();
    }
    if (got_name && got_t_end && params_ok) {
        collect_spec_issues(spec, issues);
    }
    if (!issues.empty()) throw validation_error(std::move(issues));
    return spec;
}

ExperimentSpec load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(path, "cannot open config file");
    return parse_config(in, path);
}

ExperimentSummary run_experiment(const ExperimentSpec& spec, const std::string& out_dir) {
    std::vector<std::string> issues;
    collect_spec_issues(spec, issues);
    if (!issues.empty()) throw validation_error(std::move(issues));
    return run_validated(spec, out_dir);
}

namespace {

// The oscillogram study: numeric solution at the reference node against
// the closed forms, thin numeric curve and thick analytic curve.
ExperimentSummary study_figures(const std::string& out_dir) {
    ExperimentSpec spec;
    spec.name = "figures-1-2-3";
    spec.t_end = 80.0;
    spec.probes = {{20, 0}};
    spec.outputs = {};

    const std::string dir = make_out_dir(spec, out_dir);
    const RunResult result = run(spec.to_fdm_config());
    const ProbeSeries& probe = result.probes.front();
    const int m = probe.m;

    ExperimentSummary summary;
    summary.name = spec.name;

    std::vector<double> u_asym(probe.times.size());
    for (std::size_t i = 0; i < probe.times.size(); ++i) {
        u_asym[i] = displacement_log(spec.params, m, probe.times[i]);
    }
    const std::vector<double> t_inner(probe.times.begin() + 1, probe.times.end() - 1);
    std::vector<double> v_asym(t_inner.size()), w_asym(t_inner.size());
    for (std::size_t i = 0; i < t_inner.size(); ++i) {
        v_asym[i] = velocity_airy(spec.params, m, t_inner[i]);
        w_asym[i] = acceleration_airy(spec.params, m, t_inner[i]);
    }

    const struct {
        const char* stem;
        const char* quantity;
        const std::vector<double>* t;
        const std::vector<double>* fdm;
        const std::vector<double>* asym;
    } charts[] = {
        {"displacement", "u", &probe.times, &probe.u, &u_asym},
        {"velocity", "v", &t_inner, &probe.v, &v_asym},
        {"acceleration", "w", &t_inner, &probe.w, &w_asym},
    };
    for (const auto& chart : charts) {
        const std::string csv_path = dir + "/figure_" + chart.stem + ".csv";
        write_file(csv_path, csv_table(spec.echo_lines(), {"t", "fdm", "asymptotic"},
                                       {chart.t, chart.fdm, chart.asym}));
        summary.files.push_back(csv_path);

        const std::string svg_path = dir + "/figure_" + chart.stem + ".svg";
        write_file(svg_path,
                   detail::render_svg_chart(
                       std::string(chart.stem) + " at node (20, 0)", "t", chart.quantity,
                       {{"numeric", *chart.t, *chart.fdm, 1.0, "#1f5fa8"},
                        {"asymptotic", *chart.t, *chart.asym, 2.8, "#b03a2e"}},
                       spec.echo_lines()));
        summary.files.push_back(svg_path);
    }
    return summary;
}

// Envelope decay and front widening, numeric against the Airy scaling.
ExperimentSummary study_decay(const std::string& out_dir) {
    ExperimentSpec spec;
    spec.name = "decay-scaling";
    spec.t_end = 400.0;
    spec.halo_margin = 64;
    spec.probes = {{0, 0}};
    spec.snapshot_times = {50.0, 100.0, 200.0, 400.0};
    spec.outputs = {ArtifactKind::probe_csv, ArtifactKind::snapshot_csv};

    const std::string dir = make_out_dir(spec, out_dir);
    const RunResult result = run(spec.to_fdm_config());
    ExperimentSummary summary;
    summary.name = spec.name;
    emit_outputs(spec, result, dir, summary);
    const double w0 = spec.params.omega0();

    std::vector<double> times, vmax, wmax, widths;
    for (const auto& snap : result.snapshots) {
        times.push_back(snap.t);
        double pv = 0.0, pw = 0.0;
        for (const auto x : snap.v) pv = std::max(pv, std::abs(x));
        for (const auto x : snap.w) pw = std::max(pw, std::abs(x));
        vmax.push_back(pv);
        wmax.push_back(pw);
        std::vector<double> m_axis(snap.v.size());
        for (std::size_t j = 0; j < m_axis.size(); ++j) m_axis[j] = static_cast<double>(j);
        widths.push_back(front_width(m_axis, snap.v, snap.t, w0).width);
    }

    std::vector<double> airy_v, airy_w, airy_widths;
    for (const auto t : times) {
        airy_v.push_back(velocity_airy_envelope(spec.params, t).value);
        airy_w.push_back(acceleration_airy_envelope(spec.params, t).value);
        airy_widths.push_back(front_width_airy(spec.params, t));
    }

    ordered_json doc;
    doc["experiment"] = spec.name;
    doc["snapshot_times"] = times;
    doc["fdm"] = {{"velocity_peak", vmax},
                  {"acceleration_peak", wmax},
                  {"velocity_fit", fit_to_json(peak_amplitude_decay(times, vmax))},
                  {"acceleration_fit", fit_to_json(peak_amplitude_decay(times, wmax))},
                  {"front_widths", widths},
                  {"front_width_fit", fit_to_json(peak_amplitude_decay(times, widths))},
                  {"front_width_ratio", widths.back() / widths.front()}};
    doc["airy"] = {{"velocity_peak", airy_v},
                   {"acceleration_peak", airy_w},
                   {"velocity_fit", fit_to_json(peak_amplitude_decay(times, airy_v))},
                   {"acceleration_fit", fit_to_json(peak_amplitude_decay(times, airy_w))},
                   {"front_widths", airy_widths},
                   {"front_width_fit", fit_to_json(peak_amplitude_decay(times, airy_widths))},
                   {"front_width_ratio", airy_widths.back() / airy_widths.front()}};
    const std::string path = dir + "/fits.json";
    write_file(path, doc.dump(2) + "\n");
    summary.files.push_back(path);
    return summary;
}

ExperimentSummary study_shortwave(const std::string& out_dir) {
    ExperimentSpec spec;
    spec.name = "shortwave-arrival";
    spec.t_end = 120.0;
    spec.probes = {{20, 0}, {40, 0}};
    spec.outputs = {ArtifactKind::probe_csv};

    const std::string dir = make_out_dir(spec, out_dir);
    const RunResult result = run(spec.to_fdm_config());
    ExperimentSummary summary;
    summary.name = spec.name;
    emit_outputs(spec, result, dir, summary);
    ordered_json doc;
    doc["experiment"] = spec.name;
    doc["probes"] = ordered_json::array();
    for (const auto& probe : result.probes) {
        const auto detected = shortwave_arrival(probe, spec.params);
        ordered_json entry;
        entry["m"] = probe.m;
        entry["predicted"] = shortwave_arrival_prediction(spec.params, probe.m);
        entry["detected"] = detected ? ordered_json(*detected) : ordered_json(nullptr);
        doc["probes"].push_back(entry);
    }
    // control: the long-wave closed form carries no short-wave content
    {
        const ProbeSeries& probe = result.probes.front();
        const std::vector<double> t_inner(probe.times.begin() + 1, probe.times.end() - 1);
        std::vector<double> v(t_inner.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = velocity_bessel(spec.params, probe.m, t_inner[i]);
        }
        const auto detected = shortwave_arrival(t_inner, v, probe.m, spec.params);
        doc["bessel_form_control"] = {
            {"m", probe.m},
            {"detected", detected ? ordered_json(*detected) : ordered_json(nullptr)}};
    }
    const std::string path = dir + "/summary.json";
    write_file(path, doc.dump(2) + "\n");
    summary.files.push_back(path);
    return summary;
}

}  // namespace

ExperimentSummary reproduce(const std::string& study, const std::string& out_dir) {
    if (study == "figures-1-2-3") return study_figures(out_dir);
    if (study == "decay-scaling") return study_decay(out_dir);
    if (study == "shortwave-arrival") return study_shortwave(out_dir);
    throw validation_error("unknown study '" + study +
                           "'; available: figures-1-2-3, decay-scaling, shortwave-arrival");
}

std::string resolve_out_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("LATTICEWAVE_OUTDIR"); env != nullptr && *env) {
        return env;
    }
    return "out";
}

}  // namespace latwave
