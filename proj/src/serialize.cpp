#include "wlbound/serialize.hpp"

#include <sstream>

namespace wlb {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_double(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

} // namespace

Json to_json(const ColorHistogram& histogram) {
    Json bins = Json::array();
    for (const auto& [color, count] : histogram.bins) bins.push_back(Json::array({color, count}));
    return bins;
}

Json to_json(const SamplePartition& partition) {
    Json classes = Json::array();
    for (std::size_t j = 0; j < partition.p; ++j) {
        Json cls;
        cls["key"] = to_json(partition.class_keys[j]);
        cls["members"] = partition.classes[j];
        cls["multiplicity"] = partition.multiplicities[j];
        classes.push_back(std::move(cls));
    }
    Json out;
    out["m"] = partition.m;
    out["p"] = partition.p;
    out["classes"] = std::move(classes);
    return out;
}

Json to_json(const RademacherEstimate& estimate) {
    Json out;
    out["method"] = to_string(estimate.method);
    out["value"] = estimate.value;
    if (estimate.trials) out["trials"] = *estimate.trials;
    if (estimate.confidence) {
        out["delta"] = estimate.confidence->delta;
        out["half_width"] = estimate.confidence->half_width;
    }
    return out;
}

Json to_json(const MultiplicityDiff& diff) {
    Json entries = Json::array();
    for (const MultiplicityDiff::Entry& e : diff.entries) {
        Json entry;
        entry["key"] = to_json(e.key);
        entry["mu_a"] = e.mu_a;
        entry["mu_b"] = e.mu_b;
        entry["epsilon"] = e.epsilon;
        entries.push_back(std::move(entry));
    }
    Json out;
    out["entries"] = std::move(entries);
    out["total_epsilon"] = diff.total_epsilon();
    return out;
}

Json to_json(const DudleyResult& dudley) {
    Json out;
    out["alpha"] = dudley.alpha;
    out["value"] = dudley.value;
    return out;
}

Json to_json(const BoundReport& report) {
    Json out;
    out["m"] = report.m;
    out["p"] = report.p;
    out["exact"] = report.exact;
    if (report.brute_force) out["brute_force"] = *report.brute_force;
    out["upper_colors"] = report.upper_colors;
    if (report.general_upper) out["general_upper"] = *report.general_upper;
    out["uniform_multiplicities"] = report.uniform_multiplicities;
    if (report.lower_uniform) out["lower_uniform"] = *report.lower_uniform;
    if (report.dudley) out["dudley"] = to_json(*report.dudley);
    out["notes"] = report.notes;
    return out;
}

std::string to_csv(const BoundReport& report) {
    const std::string inputs = "m=" + std::to_string(report.m) + ";p=" + std::to_string(report.p);
    std::string joined_notes;
    for (std::size_t i = 0; i < report.notes.size(); ++i) {
        if (i > 0) joined_notes += "; ";
        joined_notes += report.notes[i];
    }

    std::string out = "name,value,inputs,note\n";
    const auto row = [&](const std::string& name, double value, const std::string& extra,
                         const std::string& note) {
        out += csv_escape(name) + "," + format_double(value) + "," +
               csv_escape(extra.empty() ? inputs : inputs + ";" + extra) + "," +
               csv_escape(note) + "\n";
    };
    row("exact", report.exact, "", "");
    if (report.brute_force) row("brute_force", *report.brute_force, "", "");
    row("upper_colors", report.upper_colors, "", "");
    if (report.general_upper) row("general_upper", *report.general_upper, "", "");
    if (report.lower_uniform)
        row("lower_uniform", *report.lower_uniform, "", "uniform multiplicities");
    if (report.dudley)
        row("dudley", report.dudley->value, "alpha=" + format_double(report.dudley->alpha),
            joined_notes);
    return out;
}

} // namespace wlb
