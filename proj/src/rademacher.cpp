#include "wlbound/rademacher.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <gmp.h>

#include "wlbound/errors.hpp"
#include "wlbound/rng.hpp"

namespace wlb {

namespace {

constexpr std::uint64_t kExactBinomialLimit = 1000;

// E|S_n| = n * 2^-(n-1) * C(n-1, floor((n-1)/2)). The binomial is computed
// exactly; converting it to double and scaling by a power of two loses at
// most one rounding step.
std::vector<double> build_exact_table() {
    std::vector<double> table(kExactBinomialLimit + 1, 0.0);
    mpz_t binom;
    mpz_init(binom);
    for (std::uint64_t n = 1; n <= kExactBinomialLimit; ++n) {
        mpz_bin_uiui(binom, n - 1, (n - 1) / 2);
        const double scaled = std::ldexp(mpz_get_d(binom), -static_cast<int>(n - 1));
        table[n] = static_cast<double>(n) * scaled;
    }
    mpz_clear(binom);
    return table;
}

const std::vector<double>& exact_table() {
    static const std::vector<double> table = build_exact_table();
    return table;
}

double trial_value(const SamplePartition& partition, SplitMix64 rng) {
    // sup over functions constant per class: each class contributes the
    // absolute value of its sign sum
    std::uint64_t bits = 0;
    unsigned remaining = 0;
    std::int64_t total = 0;
    for (std::size_t mu : partition.multiplicities) {
        std::int64_t class_sum = 0;
        for (std::size_t k = 0; k < mu; ++k) {
            if (remaining == 0) {
                bits = rng.next();
                remaining = 64;
            }
            class_sum += (bits & 1) ? 1 : -1;
            bits >>= 1;
            --remaining;
        }
        total += std::llabs(class_sum);
    }
    return static_cast<double>(total) / static_cast<double>(partition.m);
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

RademacherEstimate mc_impl(const SamplePartition& partition, std::uint64_t trials,
                           std::uint64_t seed, double delta, bool parallel) {
    if (trials < 1) throw ValidationError("trials must be at least 1");
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
    if (partition.m == 0) throw ValidationError("partition covers an empty sample");

    std::vector<double> values(trials);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(trials); ++t)
            values[static_cast<std::size_t>(t)] =
                trial_value(partition, SplitMix64::derive(seed, static_cast<std::uint64_t>(t)));
    } else {
        for (std::uint64_t t = 0; t < trials; ++t)
            values[t] = trial_value(partition, SplitMix64::derive(seed, t));
    }

    RademacherEstimate estimate;
    estimate.value = pairwise_sum(values) / static_cast<double>(trials);
    estimate.method = EstimateMethod::monte_carlo;
    estimate.trials = trials;
    estimate.confidence = ConfidenceInterval{
        delta, std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)))};
    return estimate;
}

} // namespace

std::string_view to_string(EstimateMethod method) {
    switch (method) {
        case EstimateMethod::exact: return "exact";
        case EstimateMethod::brute_force: return "brute_force";
        case EstimateMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

double expected_abs_rademacher_sum(std::uint64_t n) {
    if (n == 0) return 0.0;
    if (n <= kExactBinomialLimit) return exact_table()[n];

    // log-gamma evaluation of the same closed form; relative error is a few
    // ulps of the exp/lgamma chain, well under 1e-10
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>((n - 1) / 2);
    const double log_binom =
        std::lgamma(nd) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd);
    return std::exp(std::log(nd) + log_binom - (nd - 1.0) * std::numbers::ln2);
}

RademacherEstimate exact_rademacher(const SamplePartition& partition) {
    if (partition.m == 0) throw ValidationError("partition covers an empty sample");
    double sum = 0.0;
    for (std::size_t mu : partition.multiplicities) sum += expected_abs_rademacher_sum(mu);
    return RademacherEstimate{sum / static_cast<double>(partition.m), EstimateMethod::exact,
                              std::nullopt, std::nullopt};
}

RademacherEstimate brute_force_rademacher(const SamplePartition& partition) {
    const std::size_t m = partition.m;
    if (m == 0) throw ValidationError("partition covers an empty sample");
    if (m > kBruteForceLimit)
        throw InfeasibleError("enumeration of 2^m sign vectors infeasible for m = " +
                              std::to_string(m) + ", limit is " +
                              std::to_string(kBruteForceLimit));

    std::vector<std::uint32_t> class_masks(partition.p, 0);
    for (std::size_t j = 0; j < partition.classes.size(); ++j)
        for (std::size_t i : partition.classes[j]) class_masks[j] |= 1u << i;

    // per sign vector the supremum is the sum of |class sign sums|, an
    // integer; everything stays integral until the final division
    std::uint64_t numerator = 0;
    const std::uint64_t assignments = std::uint64_t{1} << m;
    for (std::uint64_t signs = 0; signs < assignments; ++signs) {
        std::uint64_t sup = 0;
        for (std::size_t j = 0; j < partition.p; ++j) {
            const int plus = std::popcount(static_cast<std::uint32_t>(signs) & class_masks[j]);
            const std::int64_t mu = static_cast<std::int64_t>(partition.multiplicities[j]);
            sup += static_cast<std::uint64_t>(std::llabs(2 * plus - mu));
        }
        numerator += sup;
    }

    const double denom = static_cast<double>(m) * std::ldexp(1.0, static_cast<int>(m));
    return RademacherEstimate{static_cast<double>(numerator) / denom,
                              EstimateMethod::brute_force, std::nullopt, std::nullopt};
}

RademacherEstimate mc_rademacher(const SamplePartition& partition, std::uint64_t trials,
                                 std::uint64_t seed, double delta) {
    return mc_impl(partition, trials, seed, delta, true);
}

RademacherEstimate mc_rademacher_serial(const SamplePartition& partition, std::uint64_t trials,
                                        std::uint64_t seed, double delta) {
    return mc_impl(partition, trials, seed, delta, false);
}

} // namespace wlb
