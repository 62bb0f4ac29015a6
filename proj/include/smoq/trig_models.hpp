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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace smoq {

/// a1 * cos(theta - a2) + a3, the restriction of the cost to one parameter
/// that drives a single rotation gate.
struct SineModel {
    double amplitude = 0.0; ///< a1 >= 0
    double phase = 0.0;     ///< a2 in [-pi, pi)
    double offset = 0.0;    ///< a3

    [[nodiscard]] double operator()(double theta) const noexcept;
};

/// Fits the sine through L(theta0) = z0 and L(theta0 +/- pi/2) = z_plus/z_minus.
SineModel fit_sine_three_points(double theta0, double z0, double z_plus, double z_minus);

struct SineMinimum {
    double theta;
    double value;
};

/// argmin a2 + pi and minimum a3 - a1. A model with amplitude below
/// `flat_tolerance` keeps `current_angle` (and reports the offset).
SineMinimum sine_argmin(const SineModel &model, double current_angle,
                        double flat_tolerance = 1e-12);

/// b . (x)_{j in M} (cos theta_j, sin theta_j, 1): the joint restriction to a
/// subset M of independent parameters. Coefficient index digits run in base 3
/// with the first subset member most significant; digit 0 = cos, 1 = sin,
/// 2 = constant.
class TrigTensorModel {
  public:
    TrigTensorModel(std::vector<std::size_t> subset, std::vector<double> coeffs);

    [[nodiscard]] std::size_t order() const noexcept { return subset_.size(); }
    [[nodiscard]] const std::vector<std::size_t> &subset() const noexcept { return subset_; }
    [[nodiscard]] const std::vector<double> &coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] double operator()(std::span<const double> angles) const;

    /// Value, gradient and (row-major) Hessian at `angles`.
    void derivatives(std::span<const double> angles, double &value, std::vector<double> &grad,
                     std::vector<double> &hess) const;

    /// Largest |b| over the non-constant basis functions.
    [[nodiscard]] double variation() const noexcept;

  private:
    std::vector<std::size_t> subset_;
    std::vector<double> coeffs_;
};

/// Cost values on the grid theta0_j + (2 pi / 3) alpha_j, alpha in {0, +1, -1}^m.
class TrigGrid {
  public:
    explicit TrigGrid(std::vector<double> centre);

    [[nodiscard]] std::size_t order() const noexcept { return centre_.size(); }
    [[nodiscard]] const std::vector<double> &centre() const noexcept { return centre_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    /// alpha entries must be 0, +1 or -1.
    void set(std::span<const int> alpha, double value);
    [[nodiscard]] std::optional<double> get(std::span<const int> alpha) const;

    /// alpha of the flat index `i` (first axis most significant).
    [[nodiscard]] std::vector<int> alpha(std::size_t i) const;

    /// The angles at grid node `alpha`.
    [[nodiscard]] std::vector<double> angles(std::span<const int> alpha) const;

    [[nodiscard]] std::size_t index(std::span<const int> alpha) const;
    [[nodiscard]] const std::vector<double> &raw() const noexcept { return values_; }

  private:
    std::vector<double> centre_;
    std::vector<double> values_; // NaN = not yet measured
};

/// Exact interpolation of the 3^m grid values by the tensor trig model.
TrigTensorModel fit_trig_tensor(std::vector<std::size_t> subset, const TrigGrid &grid);

struct TrigMinimum {
    std::vector<double> angles;
    double value;
};

/// Global minimum over the m-torus (m <= 3): 64 points per axis, then damped
/// Newton polish of the best grid basins. A model whose variation is below
/// `flat_tolerance` keeps `current_angles`.
TrigMinimum minimize_trig_tensor(const TrigTensorModel &model,
                                 std::span<const double> current_angles,
                                 double flat_tolerance = 1e-12);

/// sum_s a_s cos(s theta) + b_s sin(s theta) + c, the restriction to a
/// parameter shared by S rotation gates.
struct FourierModel {
    std::vector<double> a;
    std::vector<double> b;
    double c = 0.0;

    [[nodiscard]] std::size_t order() const noexcept { return a.size(); }
    [[nodiscard]] double operator()(double theta) const noexcept;
    [[nodiscard]] double derivative(double theta) const noexcept;
    [[nodiscard]] double second_derivative(double theta) const noexcept;
    [[nodiscard]] double variation() const noexcept;
};

/// Fits from values at theta0 + 2 pi s / (2S+1), s = 0..2S.
FourierModel fit_fourier(std::size_t order, double theta0, std::span<const double> values);

struct FourierMinimum {
    double theta;
    double value;
};

/// Global minimum over [-pi, pi): 256*S grid, Newton polish, ties to the
/// smallest canonical angle. A flat model keeps `current_angle` when given.
FourierMinimum minimize_fourier(const FourierModel &model,
                                std::optional<double> current_angle = std::nullopt,
                                double flat_tolerance = 1e-12);

} // namespace smoq
