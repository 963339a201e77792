// cyq: exact cyclotomic quantum toolkit, command-line front end.
//
// Subcommands: mzi, bomb, zeno (table|scan|a5), walk, transport, embed.
// Every command is deterministic: identical invocations produce byte-identical
// output. Exit codes: 0 ok, 2 parse error, 3 contract violation, 4 resource
// limit.

#include "cyq/embedding.hpp"
#include "cyq/interferometer.hpp"
#include "cyq/random_walk.hpp"
#include "cyq/transport.hpp"
#include "cyq/zeno.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

struct OutputSpec {
    std::string format = "csv";
    std::string path;  // empty: stdout
    int precision = 12;
};

void add_output_flags(CLI::App* cmd, OutputSpec& spec) {
    cmd->add_option("--format", spec.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", spec.path, "Output file (default: stdout)");
    cmd->add_option("--precision", spec.precision, "Float digits in CSV output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

void write_output(const OutputSpec& spec, const std::string& text) {
    if (spec.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + spec.path + "'");
    out << text;
}

std::string fmt_float(double value, int precision) {
    std::ostringstream os;
    os.precision(precision);
    os << value;
    return os.str();
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Exact value rendering: "p/q" when rational, else the cyclotomic string.
std::string exact_str(const cyq::Cyclotomic& value) {
    return cyq::is_rational(value) ? cyq::rational_str(cyq::as_rational(value)) : cyq::to_string(value);
}

double float_of(const cyq::Cyclotomic& value) { return cyq::to_complex(value).real(); }

// ---------------------------------------------------------------------------
// mzi / bomb

std::string render_branches(const std::vector<cyq::Branch>& branches, const OutputSpec& spec) {
    if (spec.format == "csv") {
        std::string out = "branch,probability,prob_float,amplitude,norm2\n";
        for (const auto& b : branches) {
            out += csv_field(b.label()) + ',' + csv_field(exact_str(b.probability)) + ',' +
                   fmt_float(float_of(b.probability), spec.precision) + ',' +
                   csv_field(cyq::vector_str(b.amplitude)) + ',' +
                   csv_field(exact_str(cyq::inner(b.amplitude, b.amplitude))) + '\n';
        }
        return out;
    }
    json doc = json::array();
    for (const auto& b : branches) {
        json row;
        row["branch"] = b.label();
        row["probability"] = exact_str(b.probability);
        row["prob_float"] = float_of(b.probability);
        row["amplitude"] = cyq::vector_str(b.amplitude);
        row["norm2"] = exact_str(cyq::inner(b.amplitude, b.amplitude));
        doc.push_back(row);
    }
    return doc.dump(2) + "\n";
}

int run_mzi(const std::string& circuit_spec, const std::string& input_arm, const OutputSpec& spec) {
    const cyq::Circuit circuit = cyq::parse_circuit(circuit_spec);
    const cyq::CycVector input = input_arm == "upper" ? cyq::basis_up() : cyq::basis_down();
    write_output(spec, render_branches(cyq::enumerate_branches(circuit, input), spec));
    return 0;
}

int run_bomb(const OutputSpec& spec) {
    const auto rows = cyq::bomb_test();
    if (spec.format == "csv") {
        std::string out = "scenario,probability,prob_float,amplitude\n";
        for (const auto& r : rows) {
            out += r.label + ',' + cyq::rational_str(r.probability) + ',' +
                   fmt_float(cyq::to_double(r.probability), spec.precision) + ',' +
                   csv_field(cyq::vector_str(r.amplitude)) + '\n';
        }
        write_output(spec, out);
        return 0;
    }
    json doc = json::array();
    for (const auto& r : rows) {
        json row;
        row["scenario"] = r.label;
        row["probability"] = cyq::rational_str(r.probability);
        row["prob_float"] = cyq::to_double(r.probability);
        row["amplitude"] = cyq::vector_str(r.amplitude);
        doc.push_back(row);
    }
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// zeno

json report_json(const cyq::ZenoReport& report) {
    json row;
    row["operator"] = report.label;
    row["order"] = report.order;
    if (report.period.constant)
        row["period"] = "const";
    else
        row["period"] = report.period.period;
    if (report.tau.infinite)
        row["tau_z"] = "inf";
    else
        row["tau_z"] = report.tau.value;
    return row;
}

std::string series_csv_rows(const std::string& label, const cyq::SurvivalSeries& series, long t_max,
                            const OutputSpec& spec, bool with_label) {
    std::string out;
    for (long t = 0; t <= t_max; ++t) {
        const cyq::Cyclotomic& p = series.at(t);
        std::string num, den;
        if (cyq::is_rational(p)) {
            const cyq::Rational r = cyq::as_rational(p);
            num = numerator(r).str();
            den = denominator(r).str();
        }
        if (with_label) out += label + ',';
        out += std::to_string(t) + ',' + num + ',' + den + ',' +
               fmt_float(series.value_float(t), spec.precision) + '\n';
    }
    return out;
}

json series_json(const cyq::SurvivalSeries& series, long t_max) {
    json rows = json::array();
    for (long t = 0; t <= t_max; ++t) {
        const cyq::Cyclotomic& p = series.at(t);
        json row;
        row["t"] = t;
        row["p"] = exact_str(p);
        row["p_float"] = series.value_float(t);
        rows.push_back(row);
    }
    return rows;
}

int run_zeno_table(const OutputSpec& spec) {
    const auto rows = cyq::zeno_table_c8();
    if (spec.format == "csv") {
        std::string out = "operator,order,period,tau_z\n";
        for (const auto& r : rows) {
            out += r.label + ',' + std::to_string(r.order) + ',';
            out += r.period.constant ? "const" : std::to_string(r.period.period);
            out += ',';
            out += r.tau.infinite ? "inf" : std::to_string(r.tau.value);
            out += '\n';
        }
        write_output(spec, out);
        return 0;
    }
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(report_json(r));
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

int run_zeno_scan(unsigned n, long t_max, const OutputSpec& spec) {
    const cyq::ZenoScan scan = cyq::zeno_scan_sn(n, t_max);
    if (spec.format == "csv") {
        write_output(spec, "t,p_num,p_den,p_float\n" + series_csv_rows("", scan.series, t_max, spec, false));
        return 0;
    }
    json doc = report_json(scan.report);
    doc["series"] = series_json(scan.series, t_max);
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

int run_zeno_a5(long t_max, const std::string& psi0_text, const OutputSpec& spec) {
    cyq::CycVector psi0 = cyq::unit_vector(3, 0);
    if (!psi0_text.empty()) {
        psi0 = cyq::parse_cyc_vector(psi0_text);
        if (psi0.size() != 3) throw std::invalid_argument("zeno a5: psi0 must have three components");
    }
    const auto scans = cyq::a5_dynamics(t_max, psi0);
    if (spec.format == "csv") {
        std::string out = "operator,t,p_num,p_den,p_float\n";
        for (const auto& scan : scans) out += series_csv_rows(scan.report.label, scan.series, t_max, spec, true);
        write_output(spec, out);
        return 0;
    }
    json doc = json::array();
    for (const auto& scan : scans) {
        json row = report_json(scan.report);
        row["series"] = series_json(scan.series, t_max);
        doc.push_back(row);
    }
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// walk

std::vector<cyq::WalkObservation> parse_observations(const std::string& text) {
    std::vector<cyq::WalkObservation> obs;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("walk: observation '" + item + "' is not t:x");
        try {
            obs.push_back({std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))});
        } catch (const std::exception&) {
            throw std::invalid_argument("walk: observation '" + item + "' is not t:x");
        }
    }
    if (obs.size() < 2) throw std::invalid_argument("walk: need at least two t:x observations");
    return obs;
}

int run_walk(const std::string& v_text, const std::string& observe_text, const std::string& times_text,
             const OutputSpec& spec) {
    const cyq::WalkParams params = cyq::make_walk_params(cyq::parse_rational(v_text));
    const auto fixed = parse_observations(observe_text);
    for (std::size_t i = 1; i < fixed.size(); ++i) {
        if (!cyq::step_feasible(fixed[i].x - fixed[i - 1].x, fixed[i].t - fixed[i - 1].t))
            throw std::domain_error("walk: observation " + std::to_string(fixed[i].t) + ":" +
                                    std::to_string(fixed[i].x) + " unreachable from " +
                                    std::to_string(fixed[i - 1].t) + ":" +
                                    std::to_string(fixed[i - 1].x) + " (range or parity)");
    }
    std::vector<long long> times;
    if (!times_text.empty()) {
        std::stringstream stream(times_text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            try {
                times.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("walk: malformed time '" + item + "'");
            }
        }
    }
    const cyq::WalkPath path = cyq::most_probable_path(fixed, times, params);

    // Cumulative exact probabilities along the found path.
    std::vector<cyq::Rational> prob_cum{cyq::Rational(1)};
    for (std::size_t i = 1; i < path.points.size(); ++i)
        prob_cum.push_back(prob_cum.back() *
                           cyq::macrostate_probability(path.points[i].x - path.points[i - 1].x,
                                                       path.points[i].t - path.points[i - 1].t, params));

    if (spec.format == "csv") {
        std::string out = "t,x,entropy_cum,prob_cum\n";
        for (std::size_t i = 0; i < path.points.size(); ++i) {
            out += std::to_string(path.points[i].t) + ',' + std::to_string(path.points[i].x) + ',' +
                   fmt_float(path.entropy_cum[i], spec.precision) + ',' +
                   csv_field(cyq::rational_str(prob_cum[i])) + '\n';
        }
        write_output(spec, out);
        return 0;
    }
    json doc;
    doc["v"] = cyq::rational_str(params.v);
    json points = json::array();
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        json row;
        row["t"] = path.points[i].t;
        row["x"] = path.points[i].x;
        row["entropy_cum"] = path.entropy_cum[i];
        row["prob_cum"] = cyq::rational_str(prob_cum[i]);
        points.push_back(row);
    }
    doc["path"] = points;
    doc["probability"] = cyq::rational_str(path.probability);
    doc["entropy_total"] = path.entropy_total;
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// transport

cyq::GeneratedRep elements_from_json(const json& doc) {
    if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty())
        throw std::invalid_argument("transport: model needs a nonempty 'elements' array");
    cyq::GeneratedRep rep;
    const cyq::CycMatrix s8 = cyq::mz_splitter(8);
    bool builtin = doc["elements"].front().is_string();
    if (builtin) {
        rep.degree = 2;
        rep.conductor = 8;
        for (const auto& item : doc["elements"]) {
            if (!item.is_string()) throw std::invalid_argument("transport: mixed element kinds");
            const std::string name = item.get<std::string>();
            if (name == "I")
                rep.generators.emplace_back(name, cyq::cyc_identity(2));
            else if (name == "S")
                rep.generators.emplace_back(name, s8);
            else if (name == "M")
                rep.generators.emplace_back(name, cyq::CycMatrix(s8 * s8));
            else if (name.starts_with("S^") && name.size() > 2) {
                unsigned long power = 0;
                try {
                    power = std::stoul(name.substr(2));
                } catch (const std::exception&) {
                    throw std::invalid_argument("transport: malformed element '" + name + "'");
                }
                rep.generators.emplace_back(name, cyq::matrix_power(s8, power % 8));
            } else {
                throw std::invalid_argument("transport: unknown element '" + name + "'");
            }
        }
        return rep;
    }
    for (const auto& item : doc["elements"]) {
        if (!item.is_object() || !item.contains("label") || !item.contains("matrix"))
            throw std::invalid_argument("transport: element objects need 'label' and 'matrix'");
        const auto& rows = item["matrix"];
        const cyq::Index dim = static_cast<cyq::Index>(rows.size());
        cyq::CycMatrix m(dim, dim);
        for (cyq::Index i = 0; i < dim; ++i) {
            if (static_cast<cyq::Index>(rows[static_cast<std::size_t>(i)].size()) != dim)
                throw std::invalid_argument("transport: matrix rows must be square");
            for (cyq::Index j = 0; j < dim; ++j)
                m(i, j) = cyq::parse_cyclotomic(
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<std::string>());
        }
        if (rep.generators.empty()) rep.degree = dim;
        rep.generators.emplace_back(item["label"].get<std::string>(), std::move(m));
    }
    rep.conductor = 1;
    for (const auto& [label, m] : rep.generators) {
        if (m.rows() != rep.degree) throw std::invalid_argument("transport: element degrees differ");
        rep.conductor = static_cast<unsigned>(cyq::lcm_u64(rep.conductor, cyq::conductor_of(m)));
    }
    cyq::validate_rep(rep);
    return rep;
}

int run_transport(const std::string& model_path, const OutputSpec& spec) {
    json doc;
    try {
        if (model_path == "-") {
            doc = json::parse(std::cin);
        } else {
            std::ifstream in(model_path);
            if (!in) throw std::invalid_argument("transport: cannot open model '" + model_path + "'");
            doc = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("transport: model is not valid JSON: ") + e.what());
    }

    const cyq::GeneratedRep rep = elements_from_json(doc);
    if (!doc.contains("observations") || doc["observations"].size() < 2)
        throw std::invalid_argument("transport: model needs at least two observations");
    std::vector<long long> times;
    std::vector<cyq::CycVector> states;
    for (const auto& item : doc["observations"]) {
        times.push_back(item.at("t").get<long long>());
        const auto& entries = item.at("state");
        cyq::CycVector state(static_cast<cyq::Index>(entries.size()));
        for (std::size_t i = 0; i < entries.size(); ++i)
            state(static_cast<cyq::Index>(i)) = cyq::parse_cyclotomic(entries[i].get<std::string>());
        states.push_back(std::move(state));
    }
    const auto obs = cyq::make_observation_sequence(std::move(times), std::move(states));

    if (!doc.contains("intervals") || doc["intervals"].size() + 1 != obs.states.size())
        throw std::invalid_argument("transport: need one interval description per observation gap");
    std::vector<cyq::TransportBunch> bunches;
    for (std::size_t i = 0; i < doc["intervals"].size(); ++i) {
        const auto& item = doc["intervals"][i];
        const long delta_t = static_cast<long>(obs.times[i + 1] - obs.times[i]);
        if (item.contains("delta_t") && item["delta_t"].get<long>() != delta_t)
            throw std::invalid_argument("transport: interval delta_t does not match observation times");
        const auto& w = item.at("weights");
        const std::string type = w.at("type").get<std::string>();
        if (type == "delta") {
            bunches.push_back(cyq::delta_bunch(w.at("index").get<std::size_t>(), delta_t, rep));
        } else if (type == "uniform") {
            bunches.push_back(cyq::uniform_bunch(rep, delta_t));
        } else if (type == "sparse") {
            std::map<cyq::BigInt, cyq::Rational> weights;
            for (const auto& [key, value] : w.at("map").items())
                weights[cyq::BigInt(key)] = cyq::parse_rational(value.get<std::string>());
            bunches.push_back(cyq::make_bunch(rep, delta_t, std::move(weights)));
        } else {
            throw std::invalid_argument("transport: unknown weight type '" + type + "'");
        }
    }

    std::vector<cyq::Cyclotomic> step_probs;
    for (std::size_t i = 0; i < bunches.size(); ++i)
        step_probs.push_back(cyq::transition_probability(bunches[i], obs.states[i], obs.states[i + 1]));
    const cyq::Cyclotomic trajectory = cyq::trajectory_probability(obs, bunches);
    const cyq::LogValue entropy = cyq::trajectory_entropy(obs, bunches);
    const double entropy_value =
        entropy.minus_infinity ? -std::numeric_limits<double>::infinity() : entropy.value;

    if (spec.format == "csv") {
        std::string out = "interval,delta_t,p,p_float\n";
        for (std::size_t i = 0; i < step_probs.size(); ++i) {
            out += std::to_string(i) + ',' + std::to_string(bunches[i].delta_t) + ',' +
                   csv_field(exact_str(step_probs[i])) + ',' +
                   fmt_float(float_of(step_probs[i]), spec.precision) + '\n';
        }
        out += "trajectory,," + csv_field(exact_str(trajectory)) + ',' +
               fmt_float(float_of(trajectory), spec.precision) + '\n';
        write_output(spec, out);
        return 0;
    }
    json out;
    json intervals = json::array();
    for (std::size_t i = 0; i < step_probs.size(); ++i) {
        json row;
        row["interval"] = i;
        row["delta_t"] = bunches[i].delta_t;
        row["p"] = exact_str(step_probs[i]);
        row["p_float"] = float_of(step_probs[i]);
        intervals.push_back(row);
    }
    out["intervals"] = intervals;
    out["trajectory_p"] = exact_str(trajectory);
    out["trajectory_p_float"] = float_of(trajectory);
    out["trajectory_entropy"] = entropy_value;
    write_output(spec, out.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// embed

int run_embed(unsigned n, const std::string& bloch_text, long max_entry, const OutputSpec& spec) {
    if (bloch_text.empty()) {
        const cyq::BlockDecomposition dec = cyq::cycle_eigenbasis(n);
        if (spec.format == "csv") {
            std::string out = "coordinate,exponent,eigenvalue\n";
            for (std::size_t k = 0; k < dec.block_spectrum.size(); ++k)
                out += std::to_string(k) + ',' + std::to_string(dec.block_spectrum[k]) + ',' +
                       csv_field(cyq::to_string(cyq::root_of_unity(n, dec.block_spectrum[k]))) + '\n';
            write_output(spec, out);
            return 0;
        }
        json doc;
        doc["n"] = n;
        json rows = json::array();
        for (std::size_t k = 0; k < dec.block_spectrum.size(); ++k) {
            json row;
            row["coordinate"] = k;
            row["exponent"] = dec.block_spectrum[k];
            row["eigenvalue"] = cyq::to_string(cyq::root_of_unity(n, dec.block_spectrum[k]));
            rows.push_back(row);
        }
        doc["spectrum"] = rows;
        write_output(spec, doc.dump(2) + "\n");
        return 0;
    }

    // Bloch search: target given as re,im,re,im.
    std::vector<double> parts;
    std::stringstream stream(bloch_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            parts.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("embed: malformed bloch component '" + item + "'");
        }
    }
    if (parts.size() != 4) throw std::invalid_argument("embed: --bloch needs re,im,re,im");
    const auto hit = cyq::approximate_bloch_point({parts[0], parts[1]}, {parts[2], parts[3]}, max_entry);

    cyq::Natural8 best;
    for (int i = 0; i < 8; ++i) best(i) = hit.multiplicities[static_cast<std::size_t>(i)];
    const cyq::CycVector psi = cyq::splitter_projection(best);

    if (spec.format == "csv") {
        std::string out = "n1,n2,n3,n4,n5,n6,n7,n8,error,psi\n";
        for (long v : hit.multiplicities) out += std::to_string(v) + ',';
        out += fmt_float(hit.error, spec.precision) + ',' + csv_field(cyq::vector_str(psi)) + '\n';
        write_output(spec, out);
        return 0;
    }
    json doc;
    doc["target"] = parts;
    doc["multiplicities"] = hit.multiplicities;
    doc["error"] = hit.error;
    doc["psi"] = cyq::vector_str(psi);
    write_output(spec, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyq: exact cyclotomic quantum toolkit"};
    app.require_subcommand(1);

    OutputSpec out;
    int exit_code = 0;
    std::function<int()> action;

    auto* mzi = app.add_subcommand("mzi", "Run an optical circuit and list measurement branches");
    std::string circuit_spec;
    std::string input_arm = "upper";
    mzi->add_option("--circuit", circuit_spec, "Elements: S | M | P(arm,k/n) | BS(a,b) | D(arm)")
        ->required();
    mzi->add_option("--input", input_arm, "Input beam")->check(CLI::IsMember({"upper", "lower"}));
    add_output_flags(mzi, out);
    mzi->callback([&] { action = [&] { return run_mzi(circuit_spec, input_arm, out); }; });

    auto* bomb = app.add_subcommand("bomb", "Four-outcome interaction-free bomb test");
    add_output_flags(bomb, out);
    bomb->callback([&] { action = [&] { return run_bomb(out); }; });

    auto* zeno = app.add_subcommand("zeno", "Survival-probability analysis of finite evolutions");
    zeno->require_subcommand(1);
    auto* table = zeno->add_subcommand("table", "Order/period/tau table for the splitter powers");
    add_output_flags(table, out);
    table->callback([&] { action = [&] { return run_zeno_table(out); }; });

    auto* scan = zeno->add_subcommand("scan", "Survival series for the order-N splitter");
    unsigned scan_n = 8;
    long scan_tmax = -1;
    scan->add_option("--n", scan_n, "Cyclic group order")->required()->check(CLI::Range(3u, 10000u));
    scan->add_option("--tmax", scan_tmax, "Last sample time (default: N)");
    add_output_flags(scan, out);
    scan->callback([&] {
        action = [&] { return run_zeno_scan(scan_n, scan_tmax < 0 ? static_cast<long>(scan_n) : scan_tmax, out); };
    });

    auto* a5 = zeno->add_subcommand("a5", "Survival series for the icosahedral triplet");
    long a5_tmax = 10;
    std::string psi0_text;
    a5->add_option("--tmax", a5_tmax, "Last sample time")->check(CLI::Range(0L, 100000L))
        ->capture_default_str();
    a5->add_option("--psi0", psi0_text, "Initial state, three scalars (default e1)");
    add_output_flags(a5, out);
    a5->callback([&] { action = [&] { return run_zeno_a5(a5_tmax, psi0_text, out); }; });

    auto* walk = app.add_subcommand("walk", "Most probable lattice path through observations");
    std::string v_text = "0";
    std::string observe_text;
    std::string times_text;
    walk->add_option("--v", v_text, "Drift velocity as a rational p/q")->capture_default_str();
    walk->add_option("--observe", observe_text, "Fixed observations t:x, comma separated")->required();
    walk->add_option("--times", times_text, "Free intermediate times, comma separated");
    add_output_flags(walk, out);
    walk->callback([&] { action = [&] { return run_walk(v_text, observe_text, times_text, out); }; });

    auto* transport = app.add_subcommand("transport", "Weighted parallel-transport chain from a JSON model");
    std::string model_path;
    transport->add_option("--model", model_path, "Model file, or - for stdin")->required();
    add_output_flags(transport, out);
    transport->callback([&] { action = [&] { return run_transport(model_path, out); }; });

    auto* embed = app.add_subcommand("embed", "Cycle eigenbasis table or Bloch-point search");
    unsigned embed_n = 8;
    std::string bloch_text;
    long max_entry = 3;
    embed->add_option("--n", embed_n, "Cycle length for the decomposition table")
        ->check(CLI::Range(2u, 10000u))
        ->capture_default_str();
    embed->add_option("--bloch", bloch_text, "Target ray re,im,re,im: search multiplicity vectors");
    embed->add_option("--max-entry", max_entry, "Largest multiplicity per slot")
        ->check(CLI::Range(1L, 7L))
        ->capture_default_str();
    add_output_flags(embed, out);
    embed->callback([&] { action = [&] { return run_embed(embed_n, bloch_text, max_entry, out); }; });

    try {
        app.parse(argc, argv);
        if (action) exit_code = action();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cyq::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
