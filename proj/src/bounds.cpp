#include "wlbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wlbound/errors.hpp"
#include "wlbound/rademacher.hpp"

namespace wlb {

namespace {

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void require_counts(std::size_t p, std::size_t m) {
    if (p < 1) throw ValidationError("p must be at least 1");
    if (m < 1) throw ValidationError("m must be at least 1");
}

} // namespace

double upper_bound_colors(std::size_t p, std::size_t m) {
    require_counts(p, m);
    if (p > m) throw ValidationError("p cannot exceed m");
    return std::sqrt(static_cast<double>(p) / static_cast<double>(m));
}

double general_upper_bound(double sup_l, std::size_t p, std::size_t m) {
    require_counts(p, m);
    if (!(sup_l >= 0.0)) throw ValidationError("sup_l must be nonnegative");
    return sup_l * std::sqrt(static_cast<double>(p)) / static_cast<double>(m);
}

double lower_bound_uniform(std::size_t p, std::size_t m) {
    require_counts(p, m);
    if (m % p != 0)
        throw ValidationError("uniform class sizes need p to divide m, got p = " +
                              std::to_string(p) + ", m = " + std::to_string(m));
    return std::sqrt(static_cast<double>(p) / (2.0 * static_cast<double>(m)));
}

double dudley_first_term(double alpha, std::size_t p, std::size_t m) {
    require_counts(p, m);
    return 4.0 * alpha * std::sqrt(static_cast<double>(p)) / static_cast<double>(m);
}

DudleyResult dudley_bound(std::span<const double> alpha_grid,
                          const std::function<double(double)>& covering_log, std::size_t p,
                          std::size_t m, std::size_t mesh_points) {
    require_counts(p, m);
    if (alpha_grid.empty()) throw ValidationError("alpha grid must be non-empty");
    if (mesh_points < 2) throw ValidationError("mesh needs at least 2 points");
    if (!covering_log) throw ValidationError("covering_log must be callable");

    const double root_m = std::sqrt(static_cast<double>(m));
    const auto entropy_at = [&](double eps) {
        const double value = covering_log(eps);
        if (!(value >= 0.0))
            throw ValidationError("covering_log must be nonnegative, got " +
                                  std::to_string(value) + " at eps = " + std::to_string(eps));
        return std::sqrt(value);
    };

    DudleyResult best{0.0, 0.0};
    bool have_best = false;
    for (double alpha : alpha_grid) {
        if (!(alpha > 0.0)) throw ValidationError("cutoffs must be positive");
        double value = dudley_first_term(alpha, p, m);
        if (alpha < root_m) {
            // trapezoid rule on a log-spaced mesh from alpha to sqrt(m)
            const double ratio = root_m / alpha;
            double integral = 0.0;
            double prev_eps = alpha;
            double prev_f = entropy_at(prev_eps);
            for (std::size_t i = 1; i < mesh_points; ++i) {
                const double eps =
                    alpha * std::pow(ratio, static_cast<double>(i) /
                                                static_cast<double>(mesh_points - 1));
                const double f = entropy_at(eps);
                integral += 0.5 * (eps - prev_eps) * (f + prev_f);
                prev_eps = eps;
                prev_f = f;
            }
            value += 12.0 / static_cast<double>(m) * integral;
        }
        if (!have_best || value < best.value) {
            best = {alpha, value};
            have_best = true;
        }
    }
    return best;
}

std::function<double(double)> default_covering_log(std::size_t p, std::size_t m) {
    require_counts(p, m);
    const double root_m = std::sqrt(static_cast<double>(m));
    const double pd = static_cast<double>(p);
    return [pd, root_m](double eps) { return pd * std::log1p(2.0 * root_m / eps); };
}

std::vector<double> default_alpha_grid(std::size_t m) {
    if (m < 1) throw ValidationError("m must be at least 1");
    constexpr std::size_t kPoints = 32;
    const double root_m = std::sqrt(static_cast<double>(m));
    const double lo = 1e-3 * root_m;
    std::vector<double> grid;
    grid.reserve(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i)
        grid.push_back(lo * std::pow(root_m / lo, static_cast<double>(i) /
                                                      static_cast<double>(kPoints - 1)));
    return grid;
}

double stability_bound(const MultiplicityDiff& diff, std::size_t m) {
    if (m < 1) throw ValidationError("m must be at least 1");
    return static_cast<double>(diff.total_epsilon()) / static_cast<double>(m);
}

double generalization_bound(const GenBoundInputs& inputs) {
    if (!(inputs.empirical_risk >= 0.0)) throw ValidationError("empirical risk must be nonnegative");
    if (!(inputs.gamma >= 0.0)) throw ValidationError("gamma must be nonnegative");
    if (!(inputs.rademacher >= 0.0)) throw ValidationError("complexity must be nonnegative");
    if (!(inputs.delta > 0.0 && inputs.delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
    if (inputs.m < 1) throw ValidationError("m must be at least 1");
    const double slack =
        3.0 * std::sqrt(std::log(2.0 / inputs.delta) / (2.0 * static_cast<double>(inputs.m)));
    return inputs.empirical_risk + 2.0 * inputs.gamma * inputs.rademacher + slack;
}

double ce_lipschitz_constant(double z_bound) {
    if (!(z_bound >= 0.0)) throw ValidationError("z_bound must be nonnegative");
    const double s = logistic(z_bound);
    return std::max(s, 1.0 - s);
}

double rescaled_ce_lipschitz(double a, double b, double c, double z_bound) {
    if (!(a < b)) throw ValidationError("requires a < b");
    if (!(c > 0.0)) throw ValidationError("requires a positive output bound");
    if (!(z_bound >= 0.0)) throw ValidationError("z_bound must be nonnegative");
    const double s = logistic(z_bound);
    return c * std::max(1.0 / s, 1.0 / (1.0 - s));
}

std::string_view to_string(LossSpec::Kind kind) {
    switch (kind) {
        case LossSpec::Kind::logistic_ce: return "logistic_ce";
        case LossSpec::Kind::rescaled_ce: return "rescaled_ce";
        case LossSpec::Kind::margin_tanh: return "margin_tanh";
    }
    return "unknown";
}

std::optional<LossSpec::Kind> loss_kind_from_string(std::string_view name) {
    if (name == "logistic_ce") return LossSpec::Kind::logistic_ce;
    if (name == "rescaled_ce") return LossSpec::Kind::rescaled_ce;
    if (name == "margin_tanh") return LossSpec::Kind::margin_tanh;
    return std::nullopt;
}

double loss_lipschitz_constant(const LossSpec& spec) {
    if (!(spec.b_phi >= 0.0) || !(spec.b_beta >= 0.0))
        throw ValidationError("norm bounds must be nonnegative");
    switch (spec.kind) {
        case LossSpec::Kind::logistic_ce:
            return ce_lipschitz_constant(spec.b_phi * spec.b_beta);
        case LossSpec::Kind::rescaled_ce:
            return rescaled_ce_lipschitz(spec.a, spec.b, spec.c_bound, spec.b_phi * spec.b_beta);
        case LossSpec::Kind::margin_tanh:
            return 1.0;
    }
    throw ValidationError("unknown loss kind");
}

BoundReport make_bound_report(const SamplePartition& partition, const BoundReportOptions& options) {
    BoundReport report;
    report.m = partition.m;
    report.p = partition.p;
    report.exact = exact_rademacher(partition).value;
    report.upper_colors = upper_bound_colors(partition.p, partition.m);

    if (options.with_brute_force && partition.m <= options.brute_force_max_m)
        report.brute_force = brute_force_rademacher(partition).value;

    report.uniform_multiplicities =
        std::all_of(partition.multiplicities.begin(), partition.multiplicities.end(),
                    [&](std::size_t mu) { return mu == partition.multiplicities.front(); });
    if (report.uniform_multiplicities)
        report.lower_uniform = lower_bound_uniform(partition.p, partition.m);

    if (options.sup_l) report.general_upper = general_upper_bound(*options.sup_l, partition.p, partition.m);

    if (options.with_dudley) {
        const std::vector<double> grid = default_alpha_grid(partition.m);
        report.dudley =
            dudley_bound(grid, default_covering_log(partition.p, partition.m), partition.p,
                         partition.m);
        report.notes.push_back(
            "dudley uses the volumetric covering estimate and a discretized entropy integral; "
            "it is a valid but typically loose upper bound");
        report.notes.push_back(
            "the entropy integral is applied to [-1,1]-valued outputs; the classical statement "
            "normalizes to [0,1]");
    }

    // complexities of [-1,1]-valued classes live in [0,1]; anything above 1
    // is reported as computed but flagged
    const auto flag_if_vacuous = [&](const char* name, double value) {
        if (value > 1.0)
            report.notes.push_back(std::string(name) + " exceeds 1 and is vacuous here");
    };
    if (report.general_upper) flag_if_vacuous("general_upper", *report.general_upper);
    if (report.dudley) flag_if_vacuous("dudley", report.dudley->value);

    return report;
}

} // namespace wlb
