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
#include <cstdio>
#include <fstream>

#include "smoq/circuit.hpp"
#include "smoq/observable.hpp"
#include "smoq/tasks.hpp"
#include "test_util.hpp"

namespace smoq {
namespace {

using testing::random_circuit;
using testing::random_params;
using testing::random_state;
using testing::to_eigen;

// Pauli label -> dense matrix, character k on qubit k.
Eigen::MatrixXcd label_oracle(const std::string &label) {
    const std::size_t r = label.size();
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << r);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t q = 0; q < r; ++q) {
        m = testing::kron_single(testing::pauli_matrix(label[q]), q, r) * m;
    }
    return m;
}

std::string random_label(std::size_t r, Rng &rng) {
    std::uniform_int_distribution<int> d(0, 3);
    std::string s;
    for (std::size_t q = 0; q < r; ++q) {
        s += "IXYZ"[d(rng)];
    }
    return s;
}

TEST(PauliStringTest, Masks) {
    PauliString p("XYZI");
    EXPECT_EQ(p.flip_mask(), 0b0011u);
    EXPECT_EQ(p.phase_mask(), 0b0110u);
    EXPECT_EQ(p.num_y(), 1u);
    EXPECT_TRUE(PauliString("III").is_identity());
    EXPECT_SMOQ_ERROR(PauliString("XQ"), ErrorCode::InvalidArgument);
    EXPECT_SMOQ_ERROR(PauliString(""), ErrorCode::InvalidArgument);
}

TEST(PauliStringTest, HermitianWithUnitEigenvalues) {
    Rng rng(10);
    for (int i = 0; i < 30; ++i) {
        auto label = random_label(3, rng);
        Eigen::MatrixXcd m = dense_matrix(Observable::pauli(label));
        EXPECT_LT((m - m.adjoint()).norm(), 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            EXPECT_NEAR(std::abs(es.eigenvalues()(k)), 1.0, 1e-12);
        }
    }
}

TEST(ExactExpectation, SingleQubitExamples) {
    StateVector zero(1);
    EXPECT_DOUBLE_EQ(exact_expectation(zero, Observable::pauli("Z")), 1.0);
    EXPECT_DOUBLE_EQ(exact_expectation(zero, Observable::pauli("X")), 0.0);
}

TEST(ExactExpectation, TwoQubitDenseOracle) {
    Rng rng(11);
    Observable obs(2, {{0.5, PauliString("XZ")}, {0.25, PauliString("YI")}});
    Eigen::MatrixXcd h = 0.5 * label_oracle("XZ") + 0.25 * label_oracle("YI");
    for (int i = 0; i < 20; ++i) {
        auto psi = random_state(2, rng);
        auto v = to_eigen(psi);
        const double want = (v.adjoint() * h * v)(0, 0).real();
        EXPECT_NEAR(exact_expectation(psi, obs), want, 1e-12);
    }
}

TEST(ExactExpectation, MatchesDenseMatrix) {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const std::size_t r = 1 + static_cast<std::size_t>(i % 4);
        std::vector<PauliTerm> terms;
        std::normal_distribution<double> n(0.0, 1.0);
        for (int t = 0; t < 4; ++t) {
            terms.push_back({n(rng), PauliString(random_label(r, rng))});
        }
        Observable obs(r, terms);
        auto psi = random_state(r, rng);
        auto v = to_eigen(psi);
        const std::complex<double> full = (v.adjoint() * dense_matrix(obs) * v)(0, 0);
        EXPECT_LT(std::abs(full.imag()), 1e-10);
        EXPECT_NEAR(exact_expectation(psi, obs), full.real(), 1e-12);
    }
}

TEST(ExactExpectation, DimensionMismatch) {
    EXPECT_SMOQ_ERROR(exact_expectation(StateVector(2), Observable::pauli("Z")),
                      ErrorCode::DimensionMismatch);
}

TEST(CostExact, RxOnZ) {
    ParameterizedCircuit c(1, {Gate::rx(0, 0)});
    auto spec = CostSpec::single(Observable::pauli("Z"));
    EXPECT_NEAR(cost_exact(c, ParameterVector{0.0}, spec), 1.0, 1e-15);
    EXPECT_NEAR(cost_exact(c, ParameterVector{kPi}, spec), -1.0, 1e-15);
    EXPECT_NEAR(cost_exact(c, ParameterVector{1.1}, spec), std::cos(1.1), 1e-15);
}

TEST(CostExact, LinearInTerms) {
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        auto c = random_circuit(3, 12, rng);
        auto p = random_params(c.num_params(), rng);
        auto h1 = Observable::pauli(random_label(3, rng), 0.7);
        auto h2 = Observable::pauli(random_label(3, rng), -1.3);
        auto in2 = random_state(3, rng);
        CostSpec both({{0.4, h1, StateVector(3)}, {-2.0, h2, in2}});
        const double a = cost_exact(c, p, CostSpec({{1.0, h1, StateVector(3)}}));
        const double b = cost_exact(c, p, CostSpec({{1.0, h2, in2}}));
        EXPECT_NEAR(cost_exact(c, p, both), 0.4 * a - 2.0 * b, 1e-12);
    }
}

TEST(FidelityCost, Examples) {
    ParameterizedCircuit c(1, {Gate::rx(0, 0)});
    FidelityCostSpec at_zero(c, ParameterVector{0.0});
    EXPECT_NEAR(fidelity_cost_exact(c, ParameterVector{0.0}, at_zero), -1.0, 1e-15);
    EXPECT_NEAR(fidelity_cost_exact(c, ParameterVector{kPi}, at_zero), 0.0, 1e-15);
    EXPECT_NEAR(fidelity_cost_exact(c, ParameterVector{0.6}, at_zero),
                -std::pow(std::cos(0.3), 2), 1e-15);
}

TEST(FidelityCost, RangeProperty) {
    Rng rng(14);
    auto ansatz = build_ansatz({3, 2});
    auto spec = make_task1(ansatz, rng);
    EXPECT_NEAR(fidelity_cost_exact(ansatz, spec.target_params(), spec), -1.0, 1e-12);
    for (int i = 0; i < 500; ++i) {
        const double v = fidelity_cost_exact(ansatz, random_params(ansatz.num_params(), rng), spec);
        EXPECT_GE(v, -1.0 - 1e-12);
        EXPECT_LE(v, 0.0);
    }
    EXPECT_SMOQ_ERROR(fidelity_cost_exact(ParameterizedCircuit(2), ParameterVector{}, spec),
                      ErrorCode::DimensionMismatch);
}

TEST(GroundTruth, SingleQubit) {
    auto z = ground_truth(Observable::pauli("Z"));
    EXPECT_NEAR(z.energy, -1.0, 1e-12);
    EXPECT_NEAR(std::norm(z.state[1]), 1.0, 1e-12);
    auto x = ground_truth(Observable::pauli("X"));
    EXPECT_NEAR(x.energy, -1.0, 1e-12);
    auto minus = StateVector::from_amplitudes({1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)});
    EXPECT_NEAR(fidelity(x.state, minus), 1.0, 1e-12);
}

TEST(GroundTruth, TwoQubitCharacteristicPolynomial) {
    // H = ZZ + 0.5 XI squares to 1.25 I, so det(H - l) = (l^2 - 1.25)^2.
    Observable h(2, {{1.0, PauliString("ZZ")}, {0.5, PauliString("XI")}});
    auto g = ground_truth(h);
    EXPECT_NEAR(g.energy, -std::sqrt(1.25), 1e-10);
    EXPECT_NEAR(exact_expectation(g.state, h), g.energy, 1e-10);
    EXPECT_NEAR(g.state.norm_squared(), 1.0, 1e-12);
}

TEST(GroundTruth, TooLarge) {
    EXPECT_SMOQ_ERROR(ground_truth(Observable::pauli(std::string(13, 'Z'))),
                      ErrorCode::InvalidArgument);
}

TEST(HamiltonianJson, RoundTripAndErrors) {
    auto h = observable_from_json(R"({"qubits": 2, "terms": [
        {"pauli": "XZ", "coeff": -0.4}, {"pauli": "IY", "coeff": 1.5}]})");
    ASSERT_EQ(h.terms().size(), 2u);
    EXPECT_EQ(h.terms()[0].pauli.label(), "XZ");
    EXPECT_DOUBLE_EQ(h.terms()[0].coeff, -0.4);
    auto again = observable_from_json(observable_to_json(h));
    EXPECT_EQ(again.terms()[1].pauli.label(), "IY");
    EXPECT_DOUBLE_EQ(again.terms()[1].coeff, 1.5);

    EXPECT_SMOQ_ERROR(observable_from_json(R"({"qubits": 1, "terms": [{"pauli": "Z", "coeff": "1"}]})"),
                      ErrorCode::Parse);
    EXPECT_SMOQ_ERROR(observable_from_json(R"({"qubits": 2, "terms": [{"pauli": "Z", "coeff": 1}]})"),
                      ErrorCode::Parse);
    EXPECT_SMOQ_ERROR(observable_from_json("not json"), ErrorCode::Parse);
    EXPECT_SMOQ_ERROR(load_observable("/nonexistent/h.json"), ErrorCode::Io);
}

TEST(Ising, GroundEnergyMatchesDenseOracle) {
    auto h = transverse_field_ising(4);
    EXPECT_EQ(h.terms().size(), 7u);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(16, 16);
    for (int i = 0; i < 3; ++i) {
        std::string zz(4, 'I');
        zz[static_cast<std::size_t>(i)] = zz[static_cast<std::size_t>(i + 1)] = 'Z';
        m -= label_oracle(zz);
    }
    for (int i = 0; i < 4; ++i) {
        std::string x(4, 'I');
        x[static_cast<std::size_t>(i)] = 'X';
        m -= label_oracle(x);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    EXPECT_NEAR(ground_truth(h).energy, es.eigenvalues()(0), 1e-10);
}

} // namespace
} // namespace smoq
