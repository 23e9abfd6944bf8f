// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "oco/metrics.hpp"

namespace oco {

AlgorithmSpec AlgorithmSpec::basic(std::string name, Schedule schedule) {
    AlgorithmSpec spec;
    spec.name = std::move(name);
    spec.family = Family::Basic;
    spec.schedule = std::move(schedule);
    return spec;
}

AlgorithmSpec AlgorithmSpec::expert(std::string name, MetaParams meta) {
    AlgorithmSpec spec;
    spec.name = std::move(name);
    spec.family = Family::Expert;
    spec.meta = std::move(meta);
    return spec;
}

AlgorithmSpec AlgorithmSpec::zero_penalty_ogd(std::string name, Schedule schedule) {
    AlgorithmSpec spec;
    spec.name = std::move(name);
    spec.family = Family::ZeroPenaltyOgd;
    spec.schedule = std::move(schedule);
    return spec;
}

namespace {
// Table 2 writes alpha_t = 2/T^c and gamma_t = T^{c/2} with c = 0.5; in the
// gamma_t = gamma0/sqrt(alpha_t) normal form that is gamma0 = sqrt(2).
Schedule table2_schedule(std::size_t T) {
    return Schedule::fixed_horizon_convex(2.0, 0.5, T, std::sqrt(2.0));
}
}  // namespace

AlgorithmSpec AlgorithmSpec::table2_basic(std::size_t T) { return basic("alg1_table2", table2_schedule(T)); }

AlgorithmSpec AlgorithmSpec::table2_expert(std::size_t T) {
    // Table 2 row: alpha_{i,t} = 2/T^c, beta = 3/T^c, gamma_{i,t} = T^{c/2},
    // c = kappa = 0.5. The stepsizes carry no per-expert index, so all
    // N = ceil(kappa log2(1+T)) + 1 experts share one schedule.
    const double c = 0.5;
    const double kappa = 0.5;
    const std::size_t N =
        static_cast<std::size_t>(std::ceil(kappa * std::log2(1.0 + static_cast<double>(T)))) + 1;
    const double beta = 3.0 / std::pow(static_cast<double>(T), c);
    return expert("alg2_table2", MetaParams::uniform(N, beta, table2_schedule(T)));
}

AlgorithmSpec AlgorithmSpec::table3_basic() {
    // Table 3 row: alpha_t = 6/t, gamma_t = sqrt(t); in normal form that is
    // the strongly-convex schedule with mu = 1/6 and gamma0 = sqrt(6).
    return basic("alg1_table3", Schedule::strongly_convex(1.0 / 6.0, std::sqrt(6.0)));
}

AlgorithmSpec AlgorithmSpec::table2_zero_penalty(std::size_t T) {
    return zero_penalty_ogd("ogd_zero_penalty", table2_schedule(T));
}

void ExperimentConfig::validate() const {
    if (p == 0 || m == 0 || T == 0) throw std::invalid_argument("ExperimentConfig: zero dimensions");
    if (repetitions == 0) throw std::invalid_argument("ExperimentConfig: repetitions must be >= 1");
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
        if (!(checkpoints[i] < checkpoints[i + 1]))
            throw std::invalid_argument("ExperimentConfig: checkpoints must be strictly increasing");
    for (std::size_t ck : checkpoints)
        if (ck == 0 || ck > T) throw std::invalid_argument("ExperimentConfig: checkpoints must lie in [1, T]");
    for (const AlgorithmSpec& spec : algorithms) {
        if (spec.name.empty()) throw std::invalid_argument("ExperimentConfig: algorithm without a name");
        if (spec.family == AlgorithmSpec::Family::Expert) {
            if (!spec.meta) throw std::invalid_argument("ExperimentConfig: expert spec without meta params");
        } else if (!spec.schedule) {
            throw std::invalid_argument("ExperimentConfig: spec without a schedule");
        }
    }
}

namespace {

struct RepCheckpoint {
    double cum_loss = 0.0;
    double ccv = 0.0;
    double norm_of_sum = 0.0;
    double plain = 0.0;
    double regret_static = 0.0;
};

struct RepOutcome {
    // [algorithm][checkpoint]
    std::vector<std::vector<RepCheckpoint>> table;
    std::vector<double> max_self_loss;  // per algorithm
    std::vector<double> max_sandwich_violation;
    std::vector<char> gamma_warning;
};

class RoundAggregator {
  public:
    RoundAggregator(std::size_t m) : sum_clipped_(m, 0.0), sum_values_(m, 0.0) {}

    void add(double loss, const ConstraintEval& eval) {
        cum_loss_ += loss;
        const double cn = norm2(eval.clipped);
        ccv_ += cn;
        axpy(1.0, eval.clipped, sum_clipped_);
        axpy(1.0, eval.values, sum_values_);
    }

    RepCheckpoint snapshot() const {
        RepCheckpoint ck;
        ck.cum_loss = cum_loss_;
        ck.ccv = ccv_;
        ck.norm_of_sum = norm2(sum_clipped_);
        ck.plain = norm2(clipped_nonnegative(sum_values_));
        return ck;
    }

    double sandwich_violation(std::size_t m) const {
        const RepCheckpoint ck = snapshot();
        const double root_m = std::sqrt(static_cast<double>(m));
        double v = 0.0;
        v = std::max(v, ck.plain - ck.norm_of_sum);
        v = std::max(v, ck.norm_of_sum - ck.ccv);
        v = std::max(v, ck.ccv - root_m * ck.norm_of_sum);
        return v;
    }

  private:
    double cum_loss_ = 0.0;
    double ccv_ = 0.0;
    Vec sum_clipped_;
    Vec sum_values_;
};

RepOutcome run_repetition(const ExperimentConfig& config, std::uint64_t rep) {
    const ProblemInstance inst = generate_instance(config.p, config.m, config.T, config.seed, rep);
    const LossOracle losses = instance_losses(config.kind, inst);
    const ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
    const FeasibleSet set = FeasibleSet::symmetric_box(config.p, 1.0);
    const ProblemBounds bounds = conservative_bounds(config.kind, inst, 1.0);
    const Vec x1(config.p, 0.0);

    // Hindsight prefix optima are algorithm-independent.
    std::vector<double> opt_value(config.checkpoints.size());
    for (std::size_t k = 0; k < config.checkpoints.size(); ++k) {
        const Vec opt = hindsight_static_optimum(losses, config.checkpoints[k], constraints, set);
        opt_value[k] = losses.sum_values(config.checkpoints[k], opt);
    }

    RepOutcome out;
    out.table.resize(config.algorithms.size());
    out.max_self_loss.assign(config.algorithms.size(), 0.0);
    out.max_sandwich_violation.assign(config.algorithms.size(), 0.0);
    out.gamma_warning.assign(config.algorithms.size(), 0);

    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        const AlgorithmSpec& spec = config.algorithms[a];
        ClippedPrimalDual::Options options;
        options.keep_trace = false;
        options.apply_penalty = spec.family != AlgorithmSpec::Family::ZeroPenaltyOgd;

        std::optional<ClippedPrimalDual> basic;
        std::optional<ExpertPool> pool;
        if (spec.family == AlgorithmSpec::Family::Expert) {
            pool.emplace(set, constraints, *spec.meta, x1, options);
            for (const Schedule& s : spec.meta->expert_schedules)
                if (!s.respects_theory_bound(bounds.G)) out.gamma_warning[a] = 1;
        } else {
            basic.emplace(set, constraints, spec.schedule.value(), x1, options);
            if (!spec.schedule->respects_theory_bound(bounds.G)) out.gamma_warning[a] = 1;
        }

        RoundAggregator agg(config.m);
        std::vector<RepCheckpoint>& rows = out.table[a];
        rows.resize(config.checkpoints.size());
        std::size_t next_ck = 0;

        for (std::size_t t = 1; t <= config.T; ++t) {
            const Vec& x = pool ? pool->decision() : basic->decision();
            agg.add(losses.value(t, x), constraints.evaluate(x));
            if (next_ck < config.checkpoints.size() && t == config.checkpoints[next_ck]) {
                rows[next_ck] = agg.snapshot();
                rows[next_ck].regret_static = rows[next_ck].cum_loss - opt_value[next_ck];
                out.max_sandwich_violation[a] =
                    std::max(out.max_sandwich_violation[a], agg.sandwich_violation(config.m));
                ++next_ck;
            }
            if (t == config.T) break;
            const Vec grad = losses.subgradient(t, x);
            if (pool)
                pool->step(grad);
            else
                basic->step(grad);
        }
        out.max_sandwich_violation[a] = std::max(out.max_sandwich_violation[a], agg.sandwich_violation(config.m));
        if (pool) out.max_self_loss[a] = pool->max_abs_self_loss();
    }
    return out;
}

void parallel_over_reps(std::size_t reps, std::size_t threads, const std::function<void(std::size_t)>& work) {
    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, reps);
    if (threads <= 1) {
        for (std::size_t r = 0; r < reps; ++r) work(r);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= reps) return;
                try {
                    work(r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& config, std::size_t threads) {
    config.validate();

    std::vector<RepOutcome> outcomes(config.repetitions);
    try {
        parallel_over_reps(config.repetitions, threads,
                           [&](std::size_t r) { outcomes[r] = run_repetition(config, r); });
    } catch (const std::exception& e) {
        throw std::runtime_error("run_experiment(seed=" + std::to_string(config.seed) +
                                 ", kind=" + (config.kind == ExperimentKind::OnlineLP ? "online_lp" : "online_qp") +
                                 "): " + e.what());
    }

    ResultTable table;
    table.kind = config.kind;
    table.T = config.T;
    table.repetitions = config.repetitions;
    table.seed = config.seed;
    table.algorithms.resize(config.algorithms.size());

    const double n = static_cast<double>(config.repetitions);
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        AlgorithmResult& result = table.algorithms[a];
        result.name = config.algorithms[a].name;
        result.rows.resize(config.checkpoints.size());
        for (std::size_t k = 0; k < config.checkpoints.size(); ++k) {
            CheckpointRow& row = result.rows[k];
            row.T = config.checkpoints[k];
            double loss_sum = 0.0, ccv_sum = 0.0, plain_sum = 0.0, regret_sum = 0.0;
            for (std::size_t r = 0; r < config.repetitions; ++r) {
                const RepCheckpoint& ck = outcomes[r].table[a][k];
                loss_sum += ck.cum_loss;
                ccv_sum += ck.ccv;
                plain_sum += ck.plain;
                regret_sum += ck.regret_static;
            }
            row.cum_loss_mean = loss_sum / n;
            row.ccv_mean = ccv_sum / n;
            row.plain_violation_mean = plain_sum / n;
            row.regret_static_mean = regret_sum / n;
            if (config.repetitions > 1) {
                double loss_var = 0.0, ccv_var = 0.0;
                for (std::size_t r = 0; r < config.repetitions; ++r) {
                    const RepCheckpoint& ck = outcomes[r].table[a][k];
                    loss_var += (ck.cum_loss - row.cum_loss_mean) * (ck.cum_loss - row.cum_loss_mean);
                    ccv_var += (ck.ccv - row.ccv_mean) * (ck.ccv - row.ccv_mean);
                }
                row.cum_loss_sd = std::sqrt(loss_var / (n - 1.0));
                row.ccv_sd = std::sqrt(ccv_var / (n - 1.0));
            }
        }
        for (std::size_t r = 0; r < config.repetitions; ++r) {
            result.diagnostics.max_self_loss =
                std::max(result.diagnostics.max_self_loss, outcomes[r].max_self_loss[a]);
            result.diagnostics.max_sandwich_violation =
                std::max(result.diagnostics.max_sandwich_violation, outcomes[r].max_sandwich_violation[a]);
            if (outcomes[r].gamma_warning[a]) result.diagnostics.gamma0_exceeds_theory = true;
        }
    }
    return table;
}

}  // namespace oco
