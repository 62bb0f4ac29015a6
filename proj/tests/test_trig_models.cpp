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

#include <gtest/gtest.h>

#include <cmath>

#include "smoq/angles.hpp"
#include "smoq/trig_models.hpp"
#include "test_util.hpp"

namespace smoq {
namespace {

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

TEST(SineFit, CosinePlusOne) {
    auto m = fit_sine_three_points(0.0, 2.0, 1.0, 1.0);
    EXPECT_NEAR(m.amplitude, 1.0, 1e-15);
    EXPECT_NEAR(m.phase, 0.0, 1e-15);
    EXPECT_NEAR(m.offset, 1.0, 1e-15);
    auto mn = sine_argmin(m, 0.0);
    EXPECT_DOUBLE_EQ(mn.theta, -kPi);
    EXPECT_NEAR(mn.value, 0.0, 1e-15);
}

TEST(SineFit, Sine) {
    auto m = fit_sine_three_points(0.0, 0.0, 1.0, -1.0);
    EXPECT_NEAR(m.amplitude, 1.0, 1e-15);
    EXPECT_NEAR(m.phase, kPi / 2, 1e-15);
    EXPECT_NEAR(m.offset, 0.0, 1e-15);
    auto mn = sine_argmin(m, 0.0);
    EXPECT_NEAR(mn.theta, -kPi / 2, 1e-15);
    EXPECT_NEAR(mn.value, -1.0, 1e-15);
}

TEST(SineFit, ForwardEvaluateRecovery) {
    Rng rng(20);
    for (int i = 0; i < 200; ++i) {
        const SineModel truth{uniform(rng, 0.1, 3.0), uniform(rng, -kPi, kPi), uniform(rng, -2, 2)};
        const double t0 = uniform(rng, -kPi, kPi);
        auto fit = fit_sine_three_points(t0, truth(t0), truth(t0 + kPi / 2), truth(t0 - kPi / 2));
        EXPECT_NEAR(fit.amplitude, truth.amplitude, 1e-12);
        EXPECT_NEAR(angle_difference(fit.phase, truth.phase), 0.0, 1e-12);
        EXPECT_NEAR(fit.offset, truth.offset, 1e-12);
        EXPECT_GE(fit.phase, -kPi);
        EXPECT_LT(fit.phase, kPi);
    }
}

TEST(SineFit, RejectsNonFinite) {
    EXPECT_SMOQ_ERROR(fit_sine_three_points(0.0, NAN, 1.0, 1.0), ErrorCode::InvalidArgument);
    EXPECT_SMOQ_ERROR(fit_sine_three_points(INFINITY, 0.0, 1.0, 1.0), ErrorCode::InvalidArgument);
}

TEST(SineArgmin, Examples) {
    auto a = sine_argmin({1.0, 0.0, 0.0}, 0.0);
    EXPECT_DOUBLE_EQ(a.theta, -kPi);
    EXPECT_DOUBLE_EQ(a.value, -1.0);
    auto flat = sine_argmin({0.0, 1.234, 5.0}, 0.3);
    EXPECT_DOUBLE_EQ(flat.theta, 0.3);
    EXPECT_DOUBLE_EQ(flat.value, 5.0);
    auto b = sine_argmin({2.0, kPi / 2, 1.0}, 0.0);
    EXPECT_NEAR(b.theta, -kPi / 2, 1e-15);
    EXPECT_DOUBLE_EQ(b.value, -1.0);
}

TrigGrid grid_from(const TrigTensorModel &truth, std::vector<double> centre) {
    TrigGrid g(std::move(centre));
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto alpha = g.alpha(i);
        g.set(alpha, truth(g.angles(alpha)));
    }
    return g;
}

std::vector<double> random_coeffs(std::size_t n, Rng &rng) {
    std::vector<double> b(n);
    for (auto &x : b) {
        x = uniform(rng, -1.0, 1.0);
    }
    return b;
}

TEST(TrigTensor, CosineOneAxis) {
    TrigGrid g({0.0});
    g.set(std::vector<int>{0}, 1.0);
    g.set(std::vector<int>{1}, -0.5);
    g.set(std::vector<int>{-1}, -0.5);
    auto m = fit_trig_tensor({0}, g);
    EXPECT_NEAR(m.coeffs()[0], 1.0, 1e-15);
    EXPECT_NEAR(m.coeffs()[1], 0.0, 1e-15);
    EXPECT_NEAR(m.coeffs()[2], 0.0, 1e-15);
}

TEST(TrigTensor, PlantedRecovery) {
    Rng rng(21);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::size_t> subset(m);
            std::vector<double> centre(m);
            for (std::size_t k = 0; k < m; ++k) {
                subset[k] = k;
                centre[k] = uniform(rng, -kPi, kPi);
            }
            std::size_t n = 1;
            for (std::size_t k = 0; k < m; ++k) {
                n *= 3;
            }
            TrigTensorModel truth(subset, random_coeffs(n, rng));
            auto g = grid_from(truth, centre);
            auto fit = fit_trig_tensor(subset, g);
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(fit.coeffs()[i], truth.coeffs()[i], 1e-10);
            }
            for (std::size_t i = 0; i < g.size(); ++i) {
                auto alpha = g.alpha(i);
                EXPECT_NEAR(fit(g.angles(alpha)), *g.get(alpha), 1e-10);
            }
        }
    }
}

TEST(TrigTensor, OneAxisAgreesWithSineFit) {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const SineModel truth{uniform(rng, 0.1, 2.0), uniform(rng, -kPi, kPi), uniform(rng, -1, 1)};
        const double t0 = uniform(rng, -kPi, kPi);
        auto sine = fit_sine_three_points(t0, truth(t0), truth(t0 + kPi / 2), truth(t0 - kPi / 2));
        TrigGrid g({t0});
        for (int a : {0, 1, -1}) {
            g.set(std::vector<int>{a}, truth(t0 + a * kTwoPi / 3));
        }
        auto tensor = fit_trig_tensor({0}, g);
        for (int probe = 0; probe < 20; ++probe) {
            const double x = uniform(rng, -kPi, kPi);
            EXPECT_NEAR(tensor(std::vector<double>{x}), sine(x), 1e-10);
        }
    }
}

TEST(TrigTensor, MissingGridPoint) {
    TrigGrid g({0.0, 0.0});
    for (std::size_t i = 1; i < g.size(); ++i) {
        g.set(g.alpha(i), 1.0);
    }
    EXPECT_FALSE(g.get(std::vector<int>{0, 0}).has_value());
    EXPECT_SMOQ_ERROR(fit_trig_tensor({0, 1}, g), ErrorCode::InvalidArgument);
    EXPECT_SMOQ_ERROR(g.set(std::vector<int>{2, 0}, 1.0), ErrorCode::InvalidArgument);
}

TEST(MinimizeTrigTensor, Cosine) {
    TrigTensorModel m({0}, {1.0, 0.0, 0.0});
    auto r = minimize_trig_tensor(m, std::vector<double>{0.2});
    EXPECT_NEAR(angle_difference(r.angles[0], -kPi), 0.0, 1e-9);
    EXPECT_NEAR(r.value, -1.0, 1e-12);
}

TEST(MinimizeTrigTensor, Separable) {
    // cos t1 * 1 + 1 * sin t2: indices (cos,1) = 0*3+2, (1,sin) = 2*3+1
    std::vector<double> b(9, 0.0);
    b[2] = 1.0;
    b[7] = 1.0;
    TrigTensorModel m({0, 1}, b);
    auto r = minimize_trig_tensor(m, std::vector<double>{0.0, 0.0});
    EXPECT_NEAR(r.value, -2.0, 1e-8);
    EXPECT_NEAR(angle_difference(r.angles[0], kPi), 0.0, 1e-8);
    EXPECT_NEAR(r.angles[1], -kPi / 2, 1e-8);
}

TEST(MinimizeTrigTensor, BruteForceGrid) {
    Rng rng(23);
    const int n = 1024;
    for (int trial = 0; trial < 5; ++trial) {
        TrigTensorModel m({0, 1}, random_coeffs(9, rng));
        auto r = minimize_trig_tensor(m, std::vector<double>{0.0, 0.0});
        EXPECT_NEAR(m(r.angles), r.value, 1e-12);
        double brute = INFINITY;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double a[2] = {-kPi + kTwoPi * i / n, -kPi + kTwoPi * j / n};
                brute = std::min(brute, m(a));
            }
        }
        EXPECT_LE(r.value, brute + 1e-6);
    }
}

TEST(MinimizeTrigTensor, FlatKeepsAngles) {
    std::vector<double> b(9, 0.0);
    b[8] = 3.0;
    TrigTensorModel m({0, 1}, b);
    auto r = minimize_trig_tensor(m, std::vector<double>{0.1, -0.2});
    EXPECT_DOUBLE_EQ(r.angles[0], 0.1);
    EXPECT_DOUBLE_EQ(r.angles[1], -0.2);
    EXPECT_DOUBLE_EQ(r.value, 3.0);
    TrigTensorModel big({0, 1, 2, 3}, std::vector<double>(81, 0.0));
    EXPECT_SMOQ_ERROR(minimize_trig_tensor(big, std::vector<double>(4, 0.0)),
                      ErrorCode::InvalidArgument);
}

FourierModel random_fourier(std::size_t order, Rng &rng) {
    FourierModel m;
    for (std::size_t s = 0; s < order; ++s) {
        m.a.push_back(uniform(rng, -1, 1));
        m.b.push_back(uniform(rng, -1, 1));
    }
    m.c = uniform(rng, -1, 1);
    return m;
}

std::vector<double> fourier_nodes(const FourierModel &m, double t0) {
    const std::size_t n = 2 * m.order() + 1;
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = m(t0 + kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }
    return v;
}

TEST(FourierFit, CosineOrderOne) {
    const double v[3] = {1.0, std::cos(kTwoPi / 3), std::cos(2 * kTwoPi / 3)};
    auto m = fit_fourier(1, 0.0, v);
    EXPECT_NEAR(m.a[0], 1.0, 1e-15);
    EXPECT_NEAR(m.b[0], 0.0, 1e-15);
    EXPECT_NEAR(m.c, 0.0, 1e-15);
}

TEST(FourierFit, PlantedRecovery) {
    Rng rng(24);
    for (std::size_t order = 1; order <= 4; ++order) {
        for (int trial = 0; trial < 20; ++trial) {
            auto truth = random_fourier(order, rng);
            const double t0 = uniform(rng, -kPi, kPi);
            auto values = fourier_nodes(truth, t0);
            auto fit = fit_fourier(order, t0, values);
            for (std::size_t s = 0; s < order; ++s) {
                EXPECT_NEAR(fit.a[s], truth.a[s], 1e-10);
                EXPECT_NEAR(fit.b[s], truth.b[s], 1e-10);
            }
            EXPECT_NEAR(fit.c, truth.c, 1e-10);
            for (std::size_t k = 0; k < values.size(); ++k) {
                const double x = t0 + kTwoPi * static_cast<double>(k) / values.size();
                EXPECT_NEAR(fit(x), values[k], 1e-10);
            }
        }
    }
}

TEST(FourierFit, ConstantAndErrors) {
    const double v[5] = {2.5, 2.5, 2.5, 2.5, 2.5};
    auto m = fit_fourier(2, 0.7, v);
    for (std::size_t s = 0; s < 2; ++s) {
        EXPECT_NEAR(m.a[s], 0.0, 1e-15);
        EXPECT_NEAR(m.b[s], 0.0, 1e-15);
    }
    EXPECT_NEAR(m.c, 2.5, 1e-15);
    EXPECT_SMOQ_ERROR(fit_fourier(2, 0.0, std::span<const double>(v, 4)),
                      ErrorCode::DimensionMismatch);
}

TEST(MinimizeFourier, Examples) {
    FourierModel cos1{{1.0}, {0.0}, 0.0};
    auto r1 = minimize_fourier(cos1);
    EXPECT_NEAR(angle_difference(r1.theta, -kPi), 0.0, 1e-9);
    EXPECT_NEAR(r1.value, -1.0, 1e-12);
    FourierModel cos2{{0.0, 1.0}, {0.0, 0.0}, 0.0};
    auto r2 = minimize_fourier(cos2);
    EXPECT_NEAR(r2.value, -1.0, 1e-12);
    EXPECT_NEAR(r2.theta, -kPi / 2, 1e-9);
}

TEST(MinimizeFourier, BruteForce) {
    Rng rng(25);
    const int n = 100000;
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_fourier(3, rng);
        auto r = minimize_fourier(m);
        double brute = INFINITY;
        for (int i = 0; i < n; ++i) {
            brute = std::min(brute, m(-kPi + kTwoPi * i / n));
        }
        EXPECT_LE(r.value, brute + 1e-6);
        EXPECT_NEAR(m(r.theta), r.value, 1e-12);
    }
}

} // namespace
} // namespace smoq
