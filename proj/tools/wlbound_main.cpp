#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svg_chart.hpp"
#include "wlbound/bounds.hpp"
#include "wlbound/coloring.hpp"
#include "wlbound/dataset.hpp"
#include "wlbound/errors.hpp"
#include "wlbound/partition.hpp"
#include "wlbound/rademacher.hpp"
#include "wlbound/serialize.hpp"
#include "wlbound/synth.hpp"

namespace {

using wlb::Json;

constexpr int kSchemaVersion = 1;

// Directories hold the multi-file benchmark layout, plain files are JSONL.
wlb::GraphSample load_sample(const std::string& path) {
    const std::filesystem::path p(path);
    if (std::filesystem::is_directory(p)) return wlb::parse_tu_dataset(p);
    return wlb::parse_jsonl(p);
}

wlb::ColoringKind parse_coloring(const std::string& name) {
    const auto kind = wlb::coloring_from_string(name);
    if (!kind) throw wlb::ValidationError("unknown coloring '" + name + "'");
    return *kind;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw wlb::ParseError(output, "cannot open file for writing");
    out << text;
    if (!out) throw wlb::ParseError(output, "write failed");
}

void write_file(const std::string& text, const std::string& path) { emit(text, path); }

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

struct CommonOptions {
    std::string input;
    std::string coloring = "wl";
    std::string format = "json";
    std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_coloring = true) {
    cmd->add_option("--input", opts.input, "dataset file (JSONL) or directory")->required();
    if (with_coloring)
        cmd->add_option("--coloring", opts.coloring,
                        "trivial, order, degree, wl, or exact_iso (default wl)");
    cmd->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", opts.output, "output path, - for stdout");
}

// shared by the commands that partition one sample under one coloring
struct ColoredSample {
    wlb::GraphSample sample;
    std::vector<wlb::ColorHistogram> histograms;
    wlb::SamplePartition partition;
    std::optional<std::size_t> wl_iterations;
};

ColoredSample color_and_partition(const std::string& input, wlb::ColoringKind kind) {
    ColoredSample result{load_sample(input), {}, {}, std::nullopt};
    if (kind == wlb::ColoringKind::wl) {
        wlb::WlRefinement refinement = wlb::wl_refine(result.sample);
        result.histograms = std::move(refinement.histograms);
        result.wl_iterations = refinement.coloring.iteration_count;
    } else {
        result.histograms = wlb::color_sample(result.sample, kind);
    }
    result.partition = wlb::partition_sample(result.histograms);
    return result;
}

int cmd_color(const CommonOptions& opts) {
    const wlb::ColoringKind kind = parse_coloring(opts.coloring);
    const ColoredSample cs = color_and_partition(opts.input, kind);

    if (opts.format == "csv") {
        std::string out = "graph,color,count\n";
        for (std::size_t g = 0; g < cs.histograms.size(); ++g)
            for (const auto& [color, count] : cs.histograms[g].bins)
                out += std::to_string(g) + "," + std::to_string(color) + "," +
                       std::to_string(count) + "\n";
        emit(out, opts.output);
        return 0;
    }

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "color";
    doc["coloring"] = wlb::to_string(kind);
    doc["m"] = cs.partition.m;
    doc["p"] = cs.partition.p;
    if (cs.wl_iterations) doc["iterations"] = *cs.wl_iterations;
    Json hists = Json::array();
    for (const wlb::ColorHistogram& h : cs.histograms) hists.push_back(wlb::to_json(h));
    doc["histograms"] = std::move(hists);
    doc["partition"] = wlb::to_json(cs.partition);
    emit(doc.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_bound(const CommonOptions& opts, std::optional<double> sup_l) {
    const wlb::ColoringKind kind = parse_coloring(opts.coloring);
    const ColoredSample cs = color_and_partition(opts.input, kind);

    wlb::BoundReportOptions report_opts;
    report_opts.sup_l = sup_l;
    const wlb::BoundReport report = wlb::make_bound_report(cs.partition, report_opts);

    if (opts.format == "csv") {
        emit(wlb::to_csv(report), opts.output);
        return 0;
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "bound";
    doc["coloring"] = wlb::to_string(kind);
    doc["report"] = wlb::to_json(report);
    emit(doc.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_estimate(const CommonOptions& opts, std::uint64_t trials, std::uint64_t seed,
                 double delta) {
    const wlb::ColoringKind kind = parse_coloring(opts.coloring);
    const ColoredSample cs = color_and_partition(opts.input, kind);

    const wlb::RademacherEstimate estimate = wlb::mc_rademacher(cs.partition, trials, seed, delta);
    const wlb::RademacherEstimate exact = wlb::exact_rademacher(cs.partition);
    const bool inside = std::abs(estimate.value - exact.value) <= estimate.confidence->half_width;

    if (opts.format == "csv") {
        std::string out = "name,value\n";
        out += "estimate," + format_double(estimate.value) + "\n";
        out += "trials," + std::to_string(trials) + "\n";
        out += "delta," + format_double(delta) + "\n";
        out += "half_width," + format_double(estimate.confidence->half_width) + "\n";
        out += "exact," + format_double(exact.value) + "\n";
        out += "inside_half_width," + std::string(inside ? "1" : "0") + "\n";
        emit(out, opts.output);
        return 0;
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "estimate";
    doc["coloring"] = wlb::to_string(kind);
    doc["m"] = cs.partition.m;
    doc["p"] = cs.partition.p;
    doc["seed"] = seed;
    doc["estimate"] = wlb::to_json(estimate);
    doc["exact"] = exact.value;
    doc["inside_half_width"] = inside;
    emit(doc.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_stability(const CommonOptions& opts, const std::string& input_b) {
    const wlb::ColoringKind kind = parse_coloring(opts.coloring);
    const wlb::GraphSample sample_a = load_sample(opts.input);
    const wlb::GraphSample sample_b = load_sample(input_b);
    if (sample_a.size() != sample_b.size())
        throw wlb::SizeMismatchError("samples have sizes " + std::to_string(sample_a.size()) +
                                     " and " + std::to_string(sample_b.size()) +
                                     ", stability compares equal-size samples");
    const std::size_t m = sample_a.size();

    // color the union so class keys are comparable across the two samples
    const wlb::GraphSample joint = wlb::concatenate_samples(sample_a, sample_b);
    const std::vector<wlb::ColorHistogram> hists = wlb::color_sample(joint, kind);
    const std::vector<wlb::ColorHistogram> hists_a(hists.begin(), hists.begin() + m);
    const std::vector<wlb::ColorHistogram> hists_b(hists.begin() + m, hists.end());
    const wlb::SamplePartition part_a = wlb::partition_sample(hists_a);
    const wlb::SamplePartition part_b = wlb::partition_sample(hists_b);

    const wlb::MultiplicityDiff diff = wlb::multiplicity_diff(part_a, part_b);
    const double bound = wlb::stability_bound(diff, m);
    const double exact_a = wlb::exact_rademacher(part_a).value;
    const double exact_b = wlb::exact_rademacher(part_b).value;
    const double difference = std::abs(exact_a - exact_b);
    if (difference > bound + 1e-12)
        throw wlb::InvariantViolation("complexity difference " + format_double(difference) +
                                      " exceeds its bound " + format_double(bound));

    if (opts.format == "csv") {
        std::string out = "name,value\n";
        out += "m," + std::to_string(m) + "\n";
        out += "total_epsilon," + std::to_string(diff.total_epsilon()) + "\n";
        out += "bound," + format_double(bound) + "\n";
        out += "exact_a," + format_double(exact_a) + "\n";
        out += "exact_b," + format_double(exact_b) + "\n";
        out += "difference," + format_double(difference) + "\n";
        emit(out, opts.output);
        return 0;
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "stability";
    doc["coloring"] = wlb::to_string(kind);
    doc["m"] = m;
    doc["diff"] = wlb::to_json(diff);
    doc["bound"] = bound;
    doc["exact_a"] = exact_a;
    doc["exact_b"] = exact_b;
    doc["difference"] = difference;
    Json notes = Json::array();
    if (bound > 1.0)
        notes.push_back("bound exceeds 1, vacuous for complexities in [0, 1]");
    doc["notes"] = std::move(notes);
    emit(doc.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_hierarchy(const CommonOptions& opts, const std::string& svg_path) {
    const wlb::GraphSample sample = load_sample(opts.input);

    struct Row {
        wlb::ColoringKind kind;
        wlb::SamplePartition partition;
        double exact = 0.0;
        double upper = 0.0;
    };
    std::vector<Row> rows;
    std::vector<std::string> notes;
    const wlb::ColoringKind chain[] = {wlb::ColoringKind::trivial, wlb::ColoringKind::degree,
                                       wlb::ColoringKind::wl, wlb::ColoringKind::exact_iso};
    for (wlb::ColoringKind kind : chain) {
        try {
            Row row;
            row.kind = kind;
            row.partition = wlb::partition_sample(wlb::color_sample(sample, kind));
            row.exact = wlb::exact_rademacher(row.partition).value;
            row.upper = wlb::upper_bound_colors(row.partition.p, row.partition.m);
            rows.push_back(std::move(row));
        } catch (const wlb::InfeasibleError& e) {
            notes.push_back(std::string(wlb::to_string(kind)) + " skipped: " + e.what());
        }
    }

    bool refinement_chain = true;
    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!wlb::is_finer(rows[i].partition, rows[i - 1].partition)) refinement_chain = false;
        if (rows[i].partition.p < rows[i - 1].partition.p) monotone = false;
        if (rows[i].exact < rows[i - 1].exact - 1e-12) monotone = false;
    }

    std::string rendered;
    if (opts.format == "csv") {
        rendered = "coloring,p,exact,upper_colors\n";
        for (const Row& row : rows)
            rendered += std::string(wlb::to_string(row.kind)) + "," +
                        std::to_string(row.partition.p) + "," + format_double(row.exact) + "," +
                        format_double(row.upper) + "\n";
    } else {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "hierarchy";
        doc["m"] = sample.size();
        Json out_rows = Json::array();
        for (const Row& row : rows) {
            Json r;
            r["coloring"] = wlb::to_string(row.kind);
            r["p"] = row.partition.p;
            r["exact"] = row.exact;
            r["upper_colors"] = row.upper;
            out_rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(out_rows);
        doc["refinement_chain"] = refinement_chain;
        doc["monotone"] = monotone;
        doc["notes"] = notes;
        rendered = doc.dump(2) + "\n";
    }
    emit(rendered, opts.output);

    if (!svg_path.empty()) {
        std::vector<std::string> labels;
        wlb::svg::Series exact_series{"exact", "#1f77b4", {}};
        wlb::svg::Series upper_series{"upper_colors", "#d62728", {}};
        for (const Row& row : rows) {
            labels.push_back(std::string(wlb::to_string(row.kind)));
            exact_series.values.push_back(row.exact);
            upper_series.values.push_back(row.upper);
        }
        write_file(wlb::svg::line_chart("complexity by coloring", labels,
                                        {exact_series, upper_series}),
                   svg_path);
    }

    if (!refinement_chain || !monotone)
        throw wlb::InvariantViolation("colorings do not refine in order");
    return 0;
}

int cmd_gen_bound(const CommonOptions& opts, std::optional<double> risk,
                  const std::string& predictions_path, const wlb::LossSpec& loss, double delta) {
    const wlb::ColoringKind kind = parse_coloring(opts.coloring);
    const ColoredSample cs = color_and_partition(opts.input, kind);
    if (!cs.sample.has_labels())
        throw wlb::MissingLabelsError(
            cs.sample.labels_dropped
                ? "the dataset labels were dropped (more than two distinct values)"
                : "the dataset carries no labels");

    double empirical_risk = 0.0;
    if (risk) {
        if (!(*risk >= 0.0)) throw wlb::ValidationError("risk must be nonnegative");
        empirical_risk = *risk;
    } else {
        // constant-per-class predictions, aligned with partition class order
        std::ifstream in(predictions_path);
        if (!in) throw wlb::ParseError(predictions_path, "cannot open file");
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& e) {
            throw wlb::ParseError(predictions_path, e.what());
        }
        if (!doc.is_array())
            throw wlb::ParseError(predictions_path, "expected a JSON array of -1/+1 predictions");
        if (doc.size() != cs.partition.p)
            throw wlb::SizeMismatchError("got " + std::to_string(doc.size()) +
                                         " predictions for " + std::to_string(cs.partition.p) +
                                         " classes");
        std::vector<int> predictions;
        for (const Json& v : doc) {
            if (!v.is_number_integer() ||
                (v.get<long long>() != -1 && v.get<long long>() != 1))
                throw wlb::ParseError(predictions_path, "predictions must be -1 or 1");
            predictions.push_back(static_cast<int>(v.get<long long>()));
        }
        std::size_t mistakes = 0;
        const std::vector<int>& labels = *cs.sample.labels;
        for (std::size_t j = 0; j < cs.partition.p; ++j)
            for (std::size_t i : cs.partition.classes[j])
                if (labels[i] != predictions[j]) ++mistakes;
        empirical_risk =
            static_cast<double>(mistakes) / static_cast<double>(cs.partition.m);
    }

    const double gamma = wlb::loss_lipschitz_constant(loss);
    const double rademacher = wlb::exact_rademacher(cs.partition).value;
    wlb::GenBoundInputs inputs{empirical_risk, gamma, rademacher, delta, cs.partition.m};
    const double bound = wlb::generalization_bound(inputs);
    const double slack =
        3.0 * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(cs.partition.m)));

    if (opts.format == "csv") {
        std::string out = "name,value\n";
        out += "empirical_risk," + format_double(empirical_risk) + "\n";
        out += "gamma," + format_double(gamma) + "\n";
        out += "rademacher," + format_double(rademacher) + "\n";
        out += "delta," + format_double(delta) + "\n";
        out += "slack," + format_double(slack) + "\n";
        out += "bound," + format_double(bound) + "\n";
        emit(out, opts.output);
        return 0;
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "gen_bound";
    doc["coloring"] = wlb::to_string(kind);
    doc["m"] = cs.partition.m;
    doc["p"] = cs.partition.p;
    Json loss_doc;
    loss_doc["kind"] = wlb::to_string(loss.kind);
    loss_doc["b_phi"] = loss.b_phi;
    loss_doc["b_beta"] = loss.b_beta;
    if (loss.kind == wlb::LossSpec::Kind::rescaled_ce) {
        loss_doc["a"] = loss.a;
        loss_doc["b"] = loss.b;
        loss_doc["c"] = loss.c_bound;
    }
    doc["loss"] = std::move(loss_doc);
    doc["empirical_risk"] = empirical_risk;
    doc["gamma"] = gamma;
    doc["rademacher"] = rademacher;
    doc["delta"] = delta;
    doc["slack"] = slack;
    doc["bound"] = bound;
    Json notes = Json::array();
    if (bound > 1.0) notes.push_back("bound exceeds 1, vacuous for risks in [0, 1]");
    doc["notes"] = std::move(notes);
    emit(doc.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_synth(const std::string& family_name, const wlb::RandomSampleSpec& base,
              const std::vector<std::uint32_t>& lengths, const std::string& out_path) {
    wlb::RandomSampleSpec spec = base;
    const auto family = wlb::family_from_string(family_name);
    if (!family) throw wlb::ValidationError("unknown family '" + family_name + "'");
    spec.family = *family;
    spec.cycle_lengths.assign(lengths.begin(), lengths.end());

    const wlb::GraphSample sample = wlb::generate_sample(spec);
    wlb::write_jsonl(sample, out_path);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "synth";
    doc["family"] = wlb::to_string(spec.family);
    doc["count"] = spec.count;
    doc["seed"] = spec.seed;
    doc["written"] = out_path;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"color refinement partitions and complexity bounds for graph samples"};
    app.require_subcommand(1);

    CommonOptions color_opts;
    CLI::App* color = app.add_subcommand("color", "partition a sample by color histograms");
    add_common(color, color_opts);

    CommonOptions bound_opts;
    std::optional<double> sup_l;
    CLI::App* bound = app.add_subcommand("bound", "exact complexity and every applicable bound");
    add_common(bound, bound_opts);
    bound->add_option("--sup-l", sup_l, "norm bound for the general upper bound");

    CommonOptions estimate_opts;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    double est_delta = 0.05;
    CLI::App* estimate = app.add_subcommand("estimate", "Monte Carlo complexity estimate");
    add_common(estimate, estimate_opts);
    estimate->add_option("--trials", trials, "Monte Carlo trials (default 10000)");
    estimate->add_option("--seed", seed, "random seed (default 0)");
    estimate->add_option("--delta", est_delta, "confidence failure probability (default 0.05)");

    CommonOptions stability_opts;
    std::string input_b;
    CLI::App* stability = app.add_subcommand("stability", "complexity change between two samples");
    add_common(stability, stability_opts);
    stability->add_option("--input-b", input_b, "second dataset of the same size")->required();

    CommonOptions hierarchy_opts;
    std::string svg_path;
    CLI::App* hierarchy =
        app.add_subcommand("hierarchy", "compare colorings from trivial to exact");
    add_common(hierarchy, hierarchy_opts, false);
    hierarchy->add_option("--svg", svg_path, "also write a line chart to this path");

    CommonOptions gen_opts;
    std::optional<double> risk;
    std::string predictions_path;
    std::string loss_name = "logistic_ce";
    wlb::LossSpec loss;
    double gen_delta = 0.05;
    CLI::App* gen_bound = app.add_subcommand("gen_bound", "generalization bound for labeled data");
    add_common(gen_bound, gen_opts);
    CLI::Option* risk_opt = gen_bound->add_option("--risk", risk, "empirical risk in [0, 1]");
    CLI::Option* pred_opt = gen_bound->add_option(
        "--predictions", predictions_path, "JSON array of -1/+1 predictions, one per class");
    risk_opt->excludes(pred_opt);
    gen_bound->add_option("--loss", loss_name, "logistic_ce, rescaled_ce, or margin_tanh");
    gen_bound->add_option("--b-phi", loss.b_phi, "embedding norm bound (default 1)");
    gen_bound->add_option("--b-beta", loss.b_beta, "weight norm bound (default 1)");
    gen_bound->add_option("--a", loss.a, "rescaled response lower end (default -1)");
    gen_bound->add_option("--b", loss.b, "rescaled response upper end (default 1)");
    gen_bound->add_option("--c", loss.c_bound, "rescaled output bound (default 1)");
    gen_bound->add_option("--delta", gen_delta, "confidence failure probability (default 0.05)");

    std::string family_name;
    wlb::RandomSampleSpec synth_spec;
    std::vector<std::uint32_t> lengths;
    std::string synth_out;
    double edge_prob = 0.0;
    std::uint64_t synth_nodes = 0;
    std::uint64_t synth_degree = 0;
    CLI::App* synth = app.add_subcommand("synth", "write a synthetic JSONL dataset");
    synth->add_option("--family", family_name,
                      "erdos_renyi, d_regular, cycle, or disjoint_cycles")
        ->required();
    synth->add_option("--nodes", synth_nodes, "nodes per graph");
    synth->add_option("--edge-prob", edge_prob, "edge probability (erdos_renyi)");
    synth->add_option("--degree", synth_degree, "degree (d_regular)");
    synth->add_option("--lengths", lengths, "cycle lengths (disjoint_cycles)")->delimiter(',');
    synth->add_option("--count", synth_spec.count, "graphs to draw (default 1)");
    synth->add_option("--seed", synth_spec.seed, "random seed (default 0)");
    synth->add_option("--out", synth_out, "output JSONL path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) return cmd_color(color_opts);
        if (bound->parsed()) return cmd_bound(bound_opts, sup_l);
        if (estimate->parsed()) return cmd_estimate(estimate_opts, trials, seed, est_delta);
        if (stability->parsed()) return cmd_stability(stability_opts, input_b);
        if (hierarchy->parsed()) return cmd_hierarchy(hierarchy_opts, svg_path);
        if (gen_bound->parsed()) {
            if (!risk && predictions_path.empty())
                throw wlb::ValidationError("gen_bound needs --risk or --predictions");
            const auto kind = wlb::loss_kind_from_string(loss_name);
            if (!kind) throw wlb::ValidationError("unknown loss '" + loss_name + "'");
            loss.kind = *kind;
            return cmd_gen_bound(gen_opts, risk, predictions_path, loss, gen_delta);
        }
        if (synth->parsed()) {
            synth_spec.nodes = static_cast<wlb::NodeId>(synth_nodes);
            synth_spec.degree = static_cast<wlb::NodeId>(synth_degree);
            synth_spec.edge_probability = edge_prob;
            return cmd_synth(family_name, synth_spec, lengths, synth_out);
        }
    } catch (const wlb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wlb::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wlb::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wlb::SizeMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const wlb::InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const wlb::MissingLabelsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
