// Copyright (c) 2026 ocoltc Contributors
// Licensed under Apache 2.0

#include "oco/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "oco/instance.hpp"
#include "oco/metrics.hpp"
#include "oco/prox.hpp"
#include "oco/records.hpp"
#include "oco/rng.hpp"
#include "oco/runner.hpp"

namespace oco {

namespace {

struct RandomProxInstance {
    Mat A;
    Vec b;
    Vec anchor;
    Vec grad;
    double stepsize;
    Vec penalty;
};

// 2-D box instances with up to three affine constraints. Signs and offsets
// are spread so that interior, boundary and kink-sitting optima all occur.
RandomProxInstance random_prox_instance(SplitMix64& rng) {
    RandomProxInstance inst;
    const std::size_t m = 1 + rng.next_below(3);
    inst.A = Mat(m, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < 2; ++j) inst.A(i, j) = rng.uniform(-2.0, 2.0);
    inst.b.resize(m);
    for (std::size_t i = 0; i < m; ++i) inst.b[i] = rng.uniform(-1.0, 1.0);
    inst.anchor = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    inst.grad = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    inst.stepsize = rng.uniform(0.05, 2.0);
    inst.penalty.resize(m);
    for (std::size_t i = 0; i < m; ++i) inst.penalty[i] = rng.uniform(0.0, 5.0);
    return inst;
}

// Drive the basic algorithm for `rounds` rounds, assembling metrics records
// along the way. One extra step runs after the last record so the trace also
// holds x_{T+1}.
std::vector<RoundRecord> drive(ClippedPrimalDual& algo, const LossOracle& losses, std::size_t rounds) {
    std::vector<RoundRecord> records;
    records.reserve(rounds);
    for (std::size_t t = 1; t <= rounds; ++t) {
        const Vec x = algo.decision();
        RoundRecord rec;
        rec.t = t;
        rec.decision = x;
        rec.loss = losses.value(t, x);
        rec.constraint_values = algo.constraints().values(x);
        rec.clipped_norm = norm2(clipped_nonnegative(rec.constraint_values));
        records.push_back(std::move(rec));
        algo.step(losses.subgradient(t, x));  // also produces x_{T+1} after the last round
    }
    return records;
}

}  // namespace

ProxEquivalenceResult certify_prox_oracle_equivalence(int count, std::uint64_t seed, double grid_step) {
    const auto start = std::chrono::steady_clock::now();
    const FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
    SplitMix64 rng(seed, 0, "prox_equivalence");

    ProxEquivalenceResult result;
    result.count = count;
    for (int i = 0; i < count; ++i) {
        const RandomProxInstance inst = random_prox_instance(rng);
        const ConstraintOracle oracle = ConstraintOracle::affine(inst.A, inst.b);
        ProxProblem problem{set, oracle, inst.anchor, inst.grad, inst.stepsize, inst.penalty};
        const ProxSolution sol = solve_prox(problem);
        const BruteForceResult brute = brute_force_prox(problem, grid_step);
        const double excess = sol.objective - brute.objective;
        result.max_excess = std::max(result.max_excess, excess);
        if (excess > 1e-3) ++result.failures;
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ViCertificateResult certify_prox_variational_inequality(int instances, int samples, std::uint64_t seed) {
    const FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
    SplitMix64 rng(seed, 0, "prox_vi");
    const ProxSolverParams params;

    ViCertificateResult result;
    result.instances = instances;
    result.samples_per_instance = samples;
    result.slack = 10.0 * params.tol;
    for (int i = 0; i < instances; ++i) {
        const RandomProxInstance inst = random_prox_instance(rng);
        const ConstraintOracle oracle = ConstraintOracle::affine(inst.A, inst.b);
        ProxProblem problem{set, oracle, inst.anchor, inst.grad, inst.stepsize, inst.penalty};
        const ProxSolution sol = solve_prox(problem, params);
        if (!sol.has_certificate()) {
            result.max_violation = std::numeric_limits<double>::infinity();
            continue;
        }
        // s = a d + A^T lambda; the returned point exactly minimizes
        // <s, x> + ||x - z||^2 over the set.
        Vec s = scaled(inst.stepsize, inst.grad);
        axpy(1.0, inst.A.apply_transpose(sol.multiplier), s);
        const Vec& y = sol.point;
        for (int k = 0; k < samples; ++k) {
            const Vec x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const double lhs = dot(sub(y, x), s);
            const double rhs = squared_distance(x, inst.anchor) - squared_distance(x, y) -
                               squared_distance(y, inst.anchor);
            result.max_violation = std::max(result.max_violation, lhs - rhs);
        }
    }
    return result;
}

DualInvariantsResult certify_dual_invariants(std::size_t T, std::uint64_t seed) {
    const ProblemInstance inst = generate_instance(2, 3, T, seed, 0);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
    const ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
    const FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);

    // Anytime schedule so gamma_t actually varies and the middle telescoping
    // sum is exercised.
    ClippedPrimalDual algo(set, constraints, Schedule::anytime_dynamic(2.0, 0.5, std::sqrt(2.0)), Vec(2, 0.0));
    const std::vector<RoundRecord> records = drive(algo, losses, T);
    const PrimalDualTrace& trace = algo.trace();

    DualInvariantsResult result;
    result.q_nonnegative = true;
    result.q_nondecreasing = true;
    for (std::size_t t = 0; t < trace.duals.size(); ++t) {
        for (std::size_t j = 0; j < trace.duals[t].size(); ++j) {
            if (trace.duals[t][j] < 0.0) result.q_nonnegative = false;
            if (t > 0 && trace.duals[t][j] < trace.duals[t - 1][j]) result.q_nondecreasing = false;
        }
    }
    const CertificateSides tele = dual_telescoping_sides(trace);
    result.telescoping_rel_err =
        std::abs(tele.lhs - tele.rhs) / std::max({1.0, std::abs(tele.lhs), std::abs(tele.rhs)});
    const CertificateSides bound = dual_norm_bound_sides(trace, constraints.count());
    result.norm_bound_margin = bound.rhs - bound.lhs;

    const ViolationMetrics vm = violation_metrics(records);
    const double root_m = std::sqrt(static_cast<double>(constraints.count()));
    double violation = 0.0;
    violation = std::max(violation, vm.plain - vm.ccv_norm_of_sum);
    violation = std::max(violation, vm.ccv_norm_of_sum - vm.ccv);
    violation = std::max(violation, vm.ccv - root_m * vm.ccv_norm_of_sum);
    result.sandwich_max_violation = violation;
    return result;
}

HedgeInvariantsResult certify_hedge_invariants(int runs, std::size_t T, std::uint64_t seed) {
    HedgeInvariantsResult result;
    result.runs = runs;
    result.combined_always_in_set = true;

    SplitMix64 knob(seed, 0, "hedge_params");
    for (int run = 0; run < runs; ++run) {
        const ProblemInstance inst = generate_instance(2, 3, T, seed, static_cast<std::uint64_t>(run));
        const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
        const ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
        const FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
        const ProblemBounds bounds = conservative_bounds(ExperimentKind::OnlineLP, inst, 1.0);

        const double c = 0.5;
        const double kappa = knob.uniform(0.25, 0.5);
        const double alpha0 = knob.uniform(0.5, 2.0);
        const double beta0 = knob.uniform(1.0, 3.0);
        const MetaParams meta =
            MetaParams::from_theorem3(T, kappa, c, alpha0, beta0, bounds.theoretical_gamma0());

        ExpertPool pool(set, constraints, meta, Vec(2, 0.0));
        for (std::size_t t = 1; t < T; ++t) {
            const Vec x = pool.decision();
            pool.step(losses.subgradient(t, x));
            if (!set.contains(pool.decision(), 1e-12)) result.combined_always_in_set = false;
        }

        const HedgeTrace& trace = pool.trace();
        const std::size_t N = pool.expert_count();
        const std::vector<double> w1 = initial_expert_weights(N);

        // Simplex and closed-form checks round by round.
        std::vector<double> cum_losses(N, 0.0);
        for (std::size_t step = 0; step < trace.surrogate_losses.size(); ++step) {
            const std::vector<double>& w = trace.weights[step + 1];
            double total = 0.0;
            for (double wi : w) total += wi;
            result.max_simplex_error = std::max(result.max_simplex_error, std::abs(total - 1.0));
            for (double wi : w)
                if (wi <= 0.0) result.max_simplex_error = std::max(result.max_simplex_error, 1.0);

            for (std::size_t i = 0; i < N; ++i) cum_losses[i] += trace.surrogate_losses[step][i];
            // closed form: w_i propto w_{i,1} exp(-beta * cum_loss_i), max-shifted
            double max_log = -std::numeric_limits<double>::infinity();
            std::vector<double> logw(N);
            for (std::size_t i = 0; i < N; ++i) {
                logw[i] = std::log(w1[i]) - pool.beta() * cum_losses[i];
                max_log = std::max(max_log, logw[i]);
            }
            double z = 0.0;
            for (std::size_t i = 0; i < N; ++i) z += std::exp(logw[i] - max_log);
            for (std::size_t i = 0; i < N; ++i) {
                const double closed = std::exp(logw[i] - max_log) / z;
                const double rel = std::abs(w[i] - closed) / std::max(closed, 1e-300);
                result.max_closed_form_rel_err = std::max(result.max_closed_form_rel_err, rel);
            }
        }
        result.max_self_loss = std::max(result.max_self_loss, pool.max_abs_self_loss());

        // Expert-tracking bound with F_h = G d(X) over the observed rounds.
        const double fh = bounds.G * bounds.diameter;
        const std::size_t rounds = trace.surrogate_losses.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < N; ++i)
            best = std::min(best, cum_losses[i] + std::log(1.0 / w1[i]) / pool.beta());
        double self_sum = 0.0;
        for (double v : trace.self_losses) self_sum += v;
        const double lhs = self_sum - best;
        const double rhs = 0.5 * pool.beta() * fh * fh * static_cast<double>(rounds);
        result.max_bound_violation = std::max(result.max_bound_violation, lhs - rhs);
    }
    return result;
}

Lemma1AggregateResult certify_lemma1_aggregate(std::size_t T, std::uint64_t seed) {
    const ProblemInstance inst = generate_instance(2, 3, T, seed, 0);
    const LossOracle losses = instance_losses(ExperimentKind::OnlineLP, inst);
    const ConstraintOracle constraints = ConstraintOracle::affine(inst.A, inst.b);
    const FeasibleSet set = FeasibleSet::symmetric_box(2, 1.0);
    const ProblemBounds bounds = conservative_bounds(ExperimentKind::OnlineLP, inst, 1.0);

    ClippedPrimalDual::Options options;
    ClippedPrimalDual algo(set, constraints, Schedule::fixed_horizon_convex(2.0, 0.5, T, std::sqrt(2.0)),
                           Vec(2, 0.0), options);
    drive(algo, losses, T);  // leaves T+1 decisions in the trace

    const Vec comparator_point = hindsight_static_optimum(losses, T, constraints, set);
    const std::vector<Vec> comparator(T, comparator_point);
    const CertificateSides sides =
        lemma1_certificate(algo.trace(), comparator, losses, constraints, set, bounds.G);

    Lemma1AggregateResult result;
    result.lhs = sides.lhs;
    result.rhs = sides.rhs;
    result.slack_budget = static_cast<double>(T) * 10.0 * options.prox.tol;
    return result;
}

std::vector<CheckLine> run_certification_suite(std::uint64_t seed) {
    std::vector<CheckLine> lines;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        lines.push_back({name, pass, detail});
    };
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };

    {
        const ProxEquivalenceResult r = certify_prox_oracle_equivalence(200, seed);
        add("prox_oracle_equivalence",
            r.failures == 0 && r.elapsed_seconds < 60.0,
            "max_excess=" + fmt(r.max_excess) + " failures=" + std::to_string(r.failures) + "/" +
                std::to_string(r.count) + " elapsed=" + fmt(r.elapsed_seconds) + "s");
    }
    {
        const ViCertificateResult r = certify_prox_variational_inequality(50, 100, seed);
        add("prox_variational_inequality", r.max_violation <= r.slack,
            "max_violation=" + fmt(r.max_violation) + " slack=" + fmt(r.slack));
    }
    {
        const DualInvariantsResult r = certify_dual_invariants(2000, seed);
        add("dual_state_invariants",
            r.q_nonnegative && r.q_nondecreasing && r.telescoping_rel_err <= 1e-9 &&
                r.norm_bound_margin >= -1e-9 && r.sandwich_max_violation <= 1e-9,
            "telescoping_rel_err=" + fmt(r.telescoping_rel_err) + " norm_bound_margin=" + fmt(r.norm_bound_margin) +
                " sandwich_violation=" + fmt(r.sandwich_max_violation));
    }
    {
        const HedgeInvariantsResult r = certify_hedge_invariants(50, 200, seed);
        add("hedge_invariants",
            r.max_simplex_error <= 1e-12 && r.max_closed_form_rel_err <= 1e-9 && r.max_self_loss <= 1e-12 &&
                r.max_bound_violation <= 0.0 && r.combined_always_in_set,
            "simplex_err=" + fmt(r.max_simplex_error) + " closed_form_rel_err=" + fmt(r.max_closed_form_rel_err) +
                " self_loss=" + fmt(r.max_self_loss) + " bound_violation=" + fmt(r.max_bound_violation));
    }
    {
        const Lemma1AggregateResult r = certify_lemma1_aggregate(500, seed);
        add("lemma1_aggregate", r.lhs <= r.rhs + r.slack_budget,
            "lhs=" + fmt(r.lhs) + " rhs=" + fmt(r.rhs) + " slack=" + fmt(r.slack_budget));
    }
    return lines;
}

}  // namespace oco
