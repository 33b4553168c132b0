#include "wlbound/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "wlbound/errors.hpp"

namespace wlb {

SamplePartition partition_sample(const std::vector<ColorHistogram>& histograms) {
    if (histograms.empty()) throw ValidationError("cannot partition an empty sample");

    std::map<ColorHistogram, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < histograms.size(); ++i) by_key[histograms[i]].push_back(i);

    SamplePartition part;
    part.m = histograms.size();
    part.p = by_key.size();
    part.classes.reserve(part.p);
    part.multiplicities.reserve(part.p);
    part.class_keys.reserve(part.p);
    for (auto& [key, members] : by_key) {
        part.multiplicities.push_back(members.size());
        part.classes.push_back(std::move(members));
        part.class_keys.push_back(key);
    }
    return part;
}

SamplePartition partition_from_multiplicities(const std::vector<std::size_t>& multiplicities) {
    if (multiplicities.empty()) throw ValidationError("multiplicity list must be non-empty");
    std::vector<ColorHistogram> histograms;
    for (std::size_t j = 0; j < multiplicities.size(); ++j) {
        if (multiplicities[j] == 0) throw ValidationError("multiplicities must be positive");
        ColorHistogram key{{{static_cast<ColorId>(j), 1}}};
        histograms.insert(histograms.end(), multiplicities[j], key);
    }
    return partition_sample(histograms);
}

bool is_finer(const SamplePartition& a, const SamplePartition& b) {
    if (a.m != b.m)
        throw SizeMismatchError("cannot compare partitions of samples with sizes " +
                                std::to_string(a.m) + " and " + std::to_string(b.m));

    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_in_b(b.m, kUnassigned);
    for (std::size_t j = 0; j < b.classes.size(); ++j)
        for (std::size_t i : b.classes[j]) {
            if (i >= b.m || class_in_b[i] != kUnassigned)
                throw ValidationError("partition classes must cover each index exactly once");
            class_in_b[i] = j;
        }

    for (const std::vector<std::size_t>& cls : a.classes) {
        if (cls.empty()) throw ValidationError("partition classes must be non-empty");
        if (cls.front() >= a.m || class_in_b[cls.front()] == kUnassigned)
            throw ValidationError("partition classes must cover each index exactly once");
        const std::size_t target = class_in_b[cls.front()];
        for (std::size_t i : cls) {
            if (i >= a.m || class_in_b[i] == kUnassigned)
                throw ValidationError("partition classes must cover each index exactly once");
            if (class_in_b[i] != target) return false;
        }
    }
    return true;
}

std::size_t MultiplicityDiff::total_epsilon() const noexcept {
    std::size_t sum = 0;
    for (const Entry& e : entries) sum += e.epsilon;
    return sum;
}

MultiplicityDiff multiplicity_diff(const SamplePartition& a, const SamplePartition& b) {
    if (a.m != b.m)
        throw SizeMismatchError("cannot compare partitions of samples with sizes " +
                                std::to_string(a.m) + " and " + std::to_string(b.m));

    // class keys are ordered within one partition but sort defensively, the
    // merge below depends on it
    std::vector<std::size_t> ia(a.p), ib(b.p);
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), 0);
    std::sort(ia.begin(), ia.end(),
              [&](std::size_t x, std::size_t y) { return a.class_keys[x] < a.class_keys[y]; });
    std::sort(ib.begin(), ib.end(),
              [&](std::size_t x, std::size_t y) { return b.class_keys[x] < b.class_keys[y]; });

    MultiplicityDiff diff;
    std::size_t i = 0, j = 0;
    while (i < ia.size() || j < ib.size()) {
        MultiplicityDiff::Entry entry;
        if (j == ib.size() ||
            (i < ia.size() && a.class_keys[ia[i]] < b.class_keys[ib[j]])) {
            entry.key = a.class_keys[ia[i]];
            entry.mu_a = a.multiplicities[ia[i]];
            ++i;
        } else if (i == ia.size() || b.class_keys[ib[j]] < a.class_keys[ia[i]]) {
            entry.key = b.class_keys[ib[j]];
            entry.mu_b = b.multiplicities[ib[j]];
            ++j;
        } else {
            entry.key = a.class_keys[ia[i]];
            entry.mu_a = a.multiplicities[ia[i]];
            entry.mu_b = b.multiplicities[ib[j]];
            ++i;
            ++j;
        }
        entry.epsilon = entry.mu_a > entry.mu_b ? entry.mu_a - entry.mu_b : entry.mu_b - entry.mu_a;
        diff.entries.push_back(std::move(entry));
    }
    return diff;
}

} // namespace wlb
