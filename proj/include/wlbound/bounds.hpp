#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wlbound/partition.hpp"

namespace wlb {

/// sqrt(p / m). Requires 1 <= p <= m.
double upper_bound_colors(std::size_t p, std::size_t m);

/// sup_l * sqrt(p) / m for function classes bounded by sup_l in the
/// sample-wise Euclidean norm. Requires sup_l >= 0 and p, m >= 1.
double general_upper_bound(double sup_l, std::size_t p, std::size_t m);

/// sqrt(p / (2 m)), valid for uniform class sizes. Requires p to divide m.
double lower_bound_uniform(std::size_t p, std::size_t m);

/// 4 * alpha * sqrt(p) / m, the discretization term of the entropy-integral
/// bound at cutoff alpha.
double dudley_first_term(double alpha, std::size_t p, std::size_t m);

struct DudleyResult {
    double alpha = 0.0;  // cutoff the minimum was attained at
    double value = 0.0;
};

/// Entropy-integral bound: minimizes over the cutoff grid
///   4 alpha sqrt(p) / m + (12 / m) * integral_alpha^sqrt(m) sqrt(covering_log(eps)) d eps
/// with the integral evaluated by the trapezoid rule on a log-spaced mesh.
/// covering_log(eps) is the log covering number at scale eps and must be
/// nonnegative on (0, sqrt(m)].
DudleyResult dudley_bound(std::span<const double> alpha_grid,
                          const std::function<double(double)>& covering_log, std::size_t p,
                          std::size_t m, std::size_t mesh_points = 256);

/// Volumetric covering estimate for the class of [-1,1]-valued functions
/// constant on p classes: eps -> p * log(1 + 2 sqrt(m) / eps).
std::function<double(double)> default_covering_log(std::size_t p, std::size_t m);

/// 32 log-spaced cutoffs in [1e-3 * sqrt(m), sqrt(m)].
std::vector<double> default_alpha_grid(std::size_t m);

/// Complexity perturbation bound sum_j epsilon_j / m for two samples of
/// size m whose class multiplicities differ by the given amounts.
double stability_bound(const MultiplicityDiff& diff, std::size_t m);

struct GenBoundInputs {
    double empirical_risk = 0.0;
    double gamma = 0.0;  // Lipschitz constant of the loss
    double rademacher = 0.0;
    double delta = 0.05;
    std::size_t m = 0;
};

/// empirical_risk + 2 gamma rademacher + 3 sqrt(log(2/delta) / (2m)).
double generalization_bound(const GenBoundInputs& inputs);

/// Lipschitz constant of the logistic cross-entropy loss over logits
/// bounded by z_bound: max(s, 1 - s) with s the logistic value at z_bound.
double ce_lipschitz_constant(double z_bound);

/// Lipschitz constant of the cross-entropy of a logistic response rescaled
/// into (a, b) and normalized back to (0, 1), scaled by the output bound c.
/// The normalizer inverts the affine rescaling, so the composite response
/// is the standard logistic and the interval (a, b) only has to be
/// nondegenerate: c * max(1/s, 1/(1-s)) at the logistic value s of z_bound.
double rescaled_ce_lipschitz(double a, double b, double c, double z_bound);

/// Loss selector for generalization reports. b_phi and b_beta bound the
/// feature embedding and the weight vector, so logits stay in
/// [-b_phi*b_beta, b_phi*b_beta].
struct LossSpec {
    enum class Kind { logistic_ce, rescaled_ce, margin_tanh };

    Kind kind = Kind::logistic_ce;
    double b_phi = 1.0;
    double b_beta = 1.0;
    double a = -1.0;       // rescaled_ce only
    double b = 1.0;        // rescaled_ce only
    double c_bound = 1.0;  // rescaled_ce only
};

std::string_view to_string(LossSpec::Kind kind);
std::optional<LossSpec::Kind> loss_kind_from_string(std::string_view name);

/// Lipschitz constant of the selected loss. margin_tanh losses are
/// 1-Lipschitz on [-1, 1] outputs.
double loss_lipschitz_constant(const LossSpec& spec);

/// Every bound that applies to one partition, next to the exact value.
struct BoundReport {
    std::size_t m = 0;
    std::size_t p = 0;
    double exact = 0.0;
    double upper_colors = 0.0;
    std::optional<double> brute_force;       // when m small enough to enumerate
    std::optional<double> general_upper;     // when sup_l was supplied
    std::optional<double> lower_uniform;     // when multiplicities are uniform
    bool uniform_multiplicities = false;
    std::optional<DudleyResult> dudley;
    std::vector<std::string> notes;
};

struct BoundReportOptions {
    std::optional<double> sup_l;
    bool with_dudley = true;
    bool with_brute_force = true;
    std::size_t brute_force_max_m = 16;
};

/// Assembles a BoundReport. Vacuous bounds (above 1 for a quantity in
/// [0, 1]) are reported as computed, with a note instead of clamping.
BoundReport make_bound_report(const SamplePartition& partition,
                              const BoundReportOptions& options = {});

} // namespace wlb
