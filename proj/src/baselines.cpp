// Copyright 2026 The smoq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smoq/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "smoq/angles.hpp"
#include "smoq/error.hpp"

namespace smoq {

namespace {

void record(RunTrace &trace, const CostFunction &cost, const ParameterVector &params,
            double estimate, const TraceOptions &opts) {
    trace.record(cost.steps(), params, estimate,
                 opts.record_exact ? cost.exact(params) : std::nullopt);
}

} // namespace

RunTrace spsa_run(CostFunction &cost, const ParameterVector &initial, const SpsaConfig &config,
                  std::uint64_t budget) {
    require(initial.size() == cost.num_params(), ErrorCode::DimensionMismatch,
            "initial parameters do not match the cost");
    require(budget >= 2, ErrorCode::InvalidArgument, "SPSA needs a budget of at least 2 steps");
    require(config.a >= 0.0 && config.c > 0.0 && config.A >= 0.0, ErrorCode::InvalidArgument,
            "SPSA gains must be non-negative with c > 0");
    require(config.alpha > 0.0 && config.alpha <= 1.0 && config.gamma > 0.0 &&
                config.gamma <= 1.0,
            ErrorCode::InvalidArgument, "SPSA exponents must lie in (0, 1]");

    const std::size_t n = initial.size();
    std::vector<double> theta(initial.values().begin(), initial.values().end());
    std::vector<double> delta(n);
    std::vector<double> shifted(n);
    Rng rng(config.seed);
    std::bernoulli_distribution coin(0.5);
    RunTrace trace;
    const std::uint64_t start = cost.steps();
    for (std::uint64_t k = 0; config.iterations == 0 || k < config.iterations; ++k) {
        if (cost.steps() - start + 2 > budget) {
            break;
        }
        const double kd = static_cast<double>(k);
        const double ak = config.a / std::pow(kd + 1.0 + config.A, config.alpha);
        const double ck = config.c / std::pow(kd + 1.0, config.gamma);
        for (auto &d : delta) {
            d = coin(rng) ? 1.0 : -1.0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = theta[i] + ck * delta[i];
        }
        const double plus = cost.evaluate(ParameterVector(shifted));
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = theta[i] - ck * delta[i];
        }
        const double minus = cost.evaluate(ParameterVector(shifted));
        const double diff = (plus - minus) / (2.0 * ck);
        for (std::size_t i = 0; i < n; ++i) {
            theta[i] -= ak * diff / delta[i];
        }
        record(trace, cost, ParameterVector(theta), 0.5 * (plus + minus), config.trace);
    }
    return trace;
}

RunTrace nelder_mead_run(CostFunction &cost, const ParameterVector &initial,
                         const NelderMeadConfig &config, std::uint64_t budget) {
    const std::size_t n = initial.size();
    require(n >= 1, ErrorCode::InvalidArgument, "Nelder-Mead needs at least one parameter");
    require(n == cost.num_params(), ErrorCode::DimensionMismatch,
            "initial parameters do not match the cost");
    require(config.initial_edge > 0.0 && std::isfinite(config.initial_edge),
            ErrorCode::InvalidArgument, "initial simplex edge must be positive");
    require(config.reflection > 0.0 && config.expansion > 1.0 &&
                config.expansion > config.reflection && config.contraction > 0.0 &&
                config.contraction < 1.0 && config.shrink > 0.0 && config.shrink < 1.0,
            ErrorCode::InvalidArgument, "invalid Nelder-Mead coefficients");

    const std::uint64_t start = cost.steps();
    auto eval = [&](const std::vector<double> &x) -> std::optional<double> {
        if (cost.steps() - start + 1 > budget) {
            return std::nullopt;
        }
        return cost.evaluate(ParameterVector(x));
    };

    RunTrace trace;
    std::vector<std::vector<double>> simplex(n + 1,
                                             std::vector<double>(initial.values().begin(),
                                                                 initial.values().end()));
    std::vector<double> fvals(n + 1, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> order(n + 1);
    auto best_index = [&] {
        return static_cast<std::size_t>(std::min_element(fvals.begin(), fvals.end()) -
                                        fvals.begin());
    };
    auto record_best = [&] {
        const std::size_t b = best_index();
        if (std::isfinite(fvals[b]) && (trace.empty() || cost.steps() > trace.back().step)) {
            record(trace, cost, ParameterVector(simplex[b]), fvals[b], config.trace);
        }
    };

    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) {
            simplex[i][i - 1] += config.initial_edge;
        }
        const auto f = eval(simplex[i]);
        if (!f) {
            record_best();
            return trace;
        }
        fvals[i] = *f;
    }
    record_best();

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[order[k]][i];
            }
        }
        for (auto &v : centroid) {
            v /= static_cast<double>(n);
        }
        for (std::size_t i = 0; i < n; ++i) {
            xr[i] = centroid[i] + config.reflection * (centroid[i] - simplex[worst][i]);
        }
        const auto fr = eval(xr);
        if (!fr) {
            break;
        }
        bool shrink = false;
        if (*fr < fvals[best]) {
            for (std::size_t i = 0; i < n; ++i) {
                xe[i] = centroid[i] + config.expansion * (xr[i] - centroid[i]);
            }
            const auto fe = eval(xe);
            if (fe && *fe < *fr) {
                simplex[worst] = xe;
                fvals[worst] = *fe;
            } else {
                simplex[worst] = xr;
                fvals[worst] = *fr;
            }
            if (!fe) {
                record_best();
                break;
            }
        } else if (*fr < fvals[second]) {
            simplex[worst] = xr;
            fvals[worst] = *fr;
        } else {
            const bool outside = *fr < fvals[worst];
            const auto &towards = outside ? xr : simplex[worst];
            for (std::size_t i = 0; i < n; ++i) {
                xc[i] = centroid[i] + config.contraction * (towards[i] - centroid[i]);
            }
            const auto fc = eval(xc);
            if (!fc) {
                break;
            }
            if ((outside && *fc <= *fr) || (!outside && *fc < fvals[worst])) {
                simplex[worst] = xc;
                fvals[worst] = *fc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            bool exhausted = false;
            for (std::size_t k = 1; k <= n; ++k) {
                const std::size_t v = order[k];
                for (std::size_t i = 0; i < n; ++i) {
                    simplex[v][i] =
                        simplex[best][i] + config.shrink * (simplex[v][i] - simplex[best][i]);
                }
                const auto f = eval(simplex[v]);
                if (!f) {
                    // Unevaluated vertex: keep it out of the best-vertex search.
                    fvals[v] = std::numeric_limits<double>::infinity();
                    exhausted = true;
                    break;
                }
                fvals[v] = *f;
            }
            if (exhausted) {
                record_best();
                break;
            }
        }
        record_best();
    }
    record_best();
    return trace;
}

double param_shift_gradient(CostFunction &cost, const ParameterVector &params, std::size_t j) {
    require(params.size() == cost.num_params(), ErrorCode::DimensionMismatch,
            "parameter count mismatch");
    require(j < params.size(), ErrorCode::OutOfRange,
            "parameter index " + std::to_string(j) + " out of range");
    const auto usage = cost.usage_counts();
    require(usage[j] == 1, ErrorCode::Precondition,
            "shift rule needs a parameter that drives exactly one gate; parameter " +
                std::to_string(j) + " drives " + std::to_string(usage[j]));
    ParameterVector probe = params;
    probe.set(j, params[j] + kPi / 2.0);
    const double plus = cost.evaluate(probe);
    probe.set(j, params[j] - kPi / 2.0);
    const double minus = cost.evaluate(probe);
    return 0.5 * (plus - minus);
}

RunTrace gradient_descent_run(CostFunction &cost, const ParameterVector &initial,
                              double learning_rate, std::uint64_t budget,
                              const TraceOptions &trace_opts) {
    require(initial.size() == cost.num_params(), ErrorCode::DimensionMismatch,
            "initial parameters do not match the cost");
    require(std::isfinite(learning_rate) && learning_rate >= 0.0, ErrorCode::InvalidArgument,
            "learning rate must be non-negative");
    const std::size_t n = initial.size();
    const std::uint64_t per_iteration = 2 * n;
    const std::uint64_t start = cost.steps();
    ParameterVector theta = initial;
    std::vector<double> grad(n);
    RunTrace trace;
    while (cost.steps() - start + per_iteration <= budget) {
        for (std::size_t j = 0; j < n; ++j) {
            grad[j] = param_shift_gradient(cost, theta, j);
        }
        for (std::size_t j = 0; j < n; ++j) {
            theta.set(j, theta[j] - learning_rate * grad[j]);
        }
        record(trace, cost, theta, std::numeric_limits<double>::quiet_NaN(), trace_opts);
    }
    return trace;
}

} // namespace smoq
