#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wlbound/partition.hpp"

namespace wlb {

enum class EstimateMethod { exact, brute_force, monte_carlo };

std::string_view to_string(EstimateMethod method);

struct ConfidenceInterval {
    double delta = 0.0;       // failure probability
    double half_width = 0.0;  // sqrt(log(2/delta) / (2 * trials))
};

struct RademacherEstimate {
    double value = 0.0;
    EstimateMethod method = EstimateMethod::exact;
    std::optional<std::uint64_t> trials;
    std::optional<ConfidenceInterval> confidence;
};

/// E|S_n| for S_n a sum of n independent uniform signs. Closed form
/// n * 2^-(n-1) * C(n-1, floor((n-1)/2)), computed with exact big-integer
/// binomials for n <= 1000 and a log-gamma evaluation beyond that
/// (relative error around 1e-14, documented limit 1e-10). E|S_0| = 0.
double expected_abs_rademacher_sum(std::uint64_t n);

/// Empirical Rademacher complexity of the class of [-1,1]-valued functions
/// constant on each partition class: (1/m) * sum_j E|S_{mu_j}|. The
/// supremum is attained by signing each class with the majority sign of
/// its Rademacher draws, which is what makes the closed form exact.
RademacherEstimate exact_rademacher(const SamplePartition& partition);

/// Largest m brute_force_rademacher enumerates.
inline constexpr std::size_t kBruteForceLimit = 20;

/// Averages the supremum over all 2^m sign vectors explicitly. The inner
/// accumulation is integer, so the result is exact up to one final
/// division. Throws InfeasibleError for m > kBruteForceLimit.
RademacherEstimate brute_force_rademacher(const SamplePartition& partition);

/// Monte Carlo mean of the per-draw supremum with a Hoeffding confidence
/// half-width at level delta. Trial t draws its signs from stream t of the
/// seed and the per-trial values are combined with pairwise summation, so
/// the estimate is independent of thread count. Trials run in parallel.
RademacherEstimate mc_rademacher(const SamplePartition& partition, std::uint64_t trials,
                                 std::uint64_t seed, double delta);

/// Reference implementation of mc_rademacher: same streams, same
/// summation, single thread. Results agree bit for bit.
RademacherEstimate mc_rademacher_serial(const SamplePartition& partition, std::uint64_t trials,
                                        std::uint64_t seed, double delta);

} // namespace wlb
