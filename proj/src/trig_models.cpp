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

#include "smoq/trig_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "smoq/angles.hpp"
#include "smoq/error.hpp"

namespace smoq {

namespace {

std::size_t pow3(std::size_t m) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < m; ++i) {
        n *= 3;
    }
    return n;
}

// Values within this distance count as tied for the tie-break rules.
constexpr double kTieTolerance = 1e-12;

bool lexicographically_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

double SineModel::operator()(double theta) const noexcept {
    return amplitude * std::cos(theta - phase) + offset;
}

SineModel fit_sine_three_points(double theta0, double z0, double z_plus, double z_minus) {
    require(std::isfinite(theta0) && std::isfinite(z0) && std::isfinite(z_plus) &&
                std::isfinite(z_minus),
            ErrorCode::InvalidArgument, "sine fit inputs must be finite");
    const double a3 = 0.5 * (z_plus + z_minus);
    const double c4 = z0 - a3;
    const double c5 = 0.5 * (z_plus - z_minus);
    return {std::hypot(c4, c5), canonical_angle(theta0 + std::atan2(c5, c4)), a3};
}

SineMinimum sine_argmin(const SineModel &model, double current_angle, double flat_tolerance) {
    if (model.amplitude < flat_tolerance || model.amplitude == 0.0) {
        // Staying put: report the model at the kept angle so the cache
        // does not pick up the residual amplitude.
        return {canonical_angle(current_angle), model(current_angle)};
    }
    return {canonical_angle(model.phase + kPi), model.offset - model.amplitude};
}

// -- tensor model ------------------------------------------------------------

TrigTensorModel::TrigTensorModel(std::vector<std::size_t> subset, std::vector<double> coeffs)
    : subset_(std::move(subset)), coeffs_(std::move(coeffs)) {
    require(!subset_.empty(), ErrorCode::InvalidArgument, "empty parameter subset");
    require(coeffs_.size() == pow3(subset_.size()), ErrorCode::DimensionMismatch,
            "tensor model needs 3^|M| coefficients");
}

double TrigTensorModel::operator()(std::span<const double> angles) const {
    require(angles.size() == order(), ErrorCode::DimensionMismatch, "wrong number of angles");
    const std::size_t m = order();
    std::vector<double> basis(3 * m);
    for (std::size_t k = 0; k < m; ++k) {
        basis[3 * k] = std::cos(angles[k]);
        basis[3 * k + 1] = std::sin(angles[k]);
        basis[3 * k + 2] = 1.0;
    }
    double total = 0.0;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        double term = coeffs_[idx];
        std::size_t rest = idx;
        for (std::size_t k = m; k-- > 0;) {
            term *= basis[3 * k + rest % 3];
            rest /= 3;
        }
        total += term;
    }
    return total;
}

void TrigTensorModel::derivatives(std::span<const double> angles, double &value,
                                  std::vector<double> &grad, std::vector<double> &hess) const {
    const std::size_t m = order();
    require(angles.size() == m, ErrorCode::DimensionMismatch, "wrong number of angles");
    // f[d][k][digit]: d-th derivative of basis function `digit` on axis k.
    std::vector<double> f0(3 * m), f1(3 * m), f2(3 * m);
    for (std::size_t k = 0; k < m; ++k) {
        const double c = std::cos(angles[k]);
        const double s = std::sin(angles[k]);
        f0[3 * k] = c;
        f0[3 * k + 1] = s;
        f0[3 * k + 2] = 1.0;
        f1[3 * k] = -s;
        f1[3 * k + 1] = c;
        f1[3 * k + 2] = 0.0;
        f2[3 * k] = -c;
        f2[3 * k + 1] = -s;
        f2[3 * k + 2] = 0.0;
    }
    value = 0.0;
    grad.assign(m, 0.0);
    hess.assign(m * m, 0.0);
    std::vector<std::size_t> digit(m);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = m; k-- > 0;) {
            digit[k] = rest % 3;
            rest /= 3;
        }
        const double b = coeffs_[idx];
        if (b == 0.0) {
            continue;
        }
        auto product = [&](std::size_t p, std::size_t q, int dp, int dq) {
            double t = b;
            for (std::size_t k = 0; k < m; ++k) {
                int d = 0;
                if (k == p) {
                    d += dp;
                }
                if (k == q) {
                    d += dq;
                }
                const auto &table = d == 0 ? f0 : (d == 1 ? f1 : f2);
                t *= table[3 * k + digit[k]];
            }
            return t;
        };
        value += product(m, m, 0, 0);
        for (std::size_t p = 0; p < m; ++p) {
            grad[p] += product(p, m, 1, 0);
            for (std::size_t q = 0; q < m; ++q) {
                hess[p * m + q] += product(p, q, 1, 1);
            }
        }
    }
}

double TrigTensorModel::variation() const noexcept {
    double v = 0.0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        v = std::max(v, std::abs(coeffs_[i]));
    }
    return v;
}

TrigGrid::TrigGrid(std::vector<double> centre) : centre_(std::move(centre)) {
    require(!centre_.empty(), ErrorCode::InvalidArgument, "grid needs at least one axis");
    values_.assign(pow3(centre_.size()), std::numeric_limits<double>::quiet_NaN());
}

std::size_t TrigGrid::index(std::span<const int> alpha) const {
    require(alpha.size() == order(), ErrorCode::DimensionMismatch, "alpha has wrong length");
    std::size_t idx = 0;
    for (int a : alpha) {
        std::size_t digit = 0;
        switch (a) {
        case 0:
            digit = 0;
            break;
        case 1:
            digit = 1;
            break;
        case -1:
            digit = 2;
            break;
        default:
            fail(ErrorCode::InvalidArgument, "alpha entries must be 0, +1 or -1");
        }
        idx = 3 * idx + digit;
    }
    return idx;
}

void TrigGrid::set(std::span<const int> alpha, double value) { values_[index(alpha)] = value; }

std::optional<double> TrigGrid::get(std::span<const int> alpha) const {
    const double v = values_[index(alpha)];
    if (std::isnan(v)) {
        return std::nullopt;
    }
    return v;
}

std::vector<int> TrigGrid::alpha(std::size_t i) const {
    std::vector<int> out(order());
    for (std::size_t k = order(); k-- > 0;) {
        const std::size_t digit = i % 3;
        out[k] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
        i /= 3;
    }
    return out;
}

std::vector<double> TrigGrid::angles(std::span<const int> alpha) const {
    require(alpha.size() == order(), ErrorCode::DimensionMismatch, "alpha has wrong length");
    std::vector<double> out(order());
    for (std::size_t k = 0; k < order(); ++k) {
        out[k] = centre_[k] + (kTwoPi / 3.0) * alpha[k];
    }
    return out;
}

TrigTensorModel fit_trig_tensor(std::vector<std::size_t> subset, const TrigGrid &grid) {
    const std::size_t m = grid.order();
    require(subset.size() == m, ErrorCode::DimensionMismatch,
            "subset size does not match the grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::isnan(grid.raw()[i])) {
            std::string label;
            for (int a : grid.alpha(i)) {
                label += std::to_string(a) + " ";
            }
            fail(ErrorCode::InvalidArgument, "missing grid point alpha = ( " + label + ")");
        }
    }
    // Grid digits (0, +1, -1) and coefficient digits (cos, sin, 1) share the
    // same base-3 layout, so the fit is a mode product along each axis.
    std::vector<double> t = grid.raw();
    const double sqrt3 = std::sqrt(3.0);
    std::size_t stride = grid.size();
    for (std::size_t k = 0; k < m; ++k) {
        stride /= 3;
        const double c0 = std::cos(grid.centre()[k]);
        const double s0 = std::sin(grid.centre()[k]);
        const std::size_t block = 3 * stride;
        for (std::size_t base = 0; base < t.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t ip = i0 + stride;
                const std::size_t im = i0 + 2 * stride;
                const double f0 = t[i0];
                const double fp = t[ip];
                const double fm = t[im];
                const double r = (f0 + fp + fm) / 3.0;
                const double q = (fp - fm) / sqrt3;
                const double p = f0 - r;
                // p cos(theta - theta0) + q sin(theta - theta0) in absolute angles.
                t[i0] = p * c0 - q * s0;
                t[ip] = p * s0 + q * c0;
                t[im] = r;
            }
        }
    }
    return TrigTensorModel(std::move(subset), std::move(t));
}

namespace {

struct Candidate {
    std::vector<double> angles;
    double value;
};

bool better(const Candidate &a, const Candidate &b) {
    if (a.value < b.value - kTieTolerance) {
        return true;
    }
    if (b.value < a.value - kTieTolerance) {
        return false;
    }
    return lexicographically_less(a.angles, b.angles);
}

Candidate polish_tensor(const TrigTensorModel &model, Candidate start) {
    const std::size_t m = model.order();
    std::vector<double> x = start.angles;
    double fx = 0.0;
    std::vector<double> g, h;
    for (int iter = 0; iter < 50; ++iter) {
        model.derivatives(x, fx, g, h);
        double gmax = 0.0;
        for (double v : g) {
            gmax = std::max(gmax, std::abs(v));
        }
        if (gmax < 1e-10) {
            break;
        }
        Eigen::MatrixXd hm(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        Eigen::VectorXd gv(static_cast<Eigen::Index>(m));
        for (std::size_t p = 0; p < m; ++p) {
            gv(static_cast<Eigen::Index>(p)) = g[p];
            for (std::size_t q = 0; q < m; ++q) {
                hm(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = h[p * m + q];
            }
        }
        Eigen::VectorXd dir;
        Eigen::LLT<Eigen::MatrixXd> llt(hm);
        if (llt.info() == Eigen::Success) {
            dir = llt.solve(-gv);
        } else {
            dir = -gv;
        }
        double t = 1.0;
        bool moved = false;
        std::vector<double> trial(m);
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t p = 0; p < m; ++p) {
                trial[p] = x[p] + t * dir(static_cast<Eigen::Index>(p));
            }
            const double ft = model(trial);
            if (ft < fx) {
                x = trial;
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) {
            break;
        }
    }
    for (auto &v : x) {
        v = canonical_angle(v);
    }
    Candidate out{x, model(x)};
    return better(out, start) ? out : start;
}

} // namespace

TrigMinimum minimize_trig_tensor(const TrigTensorModel &model,
                                 std::span<const double> current_angles, double flat_tolerance) {
    const std::size_t m = model.order();
    require(m >= 1 && m <= 3, ErrorCode::InvalidArgument,
            "joint minimization supports 1 to 3 parameters");
    require(current_angles.size() == m, ErrorCode::DimensionMismatch, "wrong number of angles");
    if (model.variation() < flat_tolerance || model.variation() == 0.0) {
        std::vector<double> keep(current_angles.begin(), current_angles.end());
        for (auto &v : keep) {
            v = canonical_angle(v);
        }
        return {keep, model(current_angles)};
    }

    constexpr std::size_t kAxis = 64;
    std::size_t total = 1;
    for (std::size_t k = 0; k < m; ++k) {
        total *= kAxis;
    }
    std::vector<double> axis(kAxis);
    for (std::size_t i = 0; i < kAxis; ++i) {
        axis[i] = -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(kAxis);
    }
    // Contract the coefficient tensor one axis at a time over the grid.
    std::vector<double> cur = model.coeffs();
    std::size_t lead = cur.size(); // remaining coefficient axes, times grid points done
    std::size_t done = 1;
    for (std::size_t k = 0; k < m; ++k) {
        lead /= 3;
        std::vector<double> next(done * kAxis * lead, 0.0);
        for (std::size_t d = 0; d < done; ++d) {
            for (std::size_t i = 0; i < kAxis; ++i) {
                const double basis[3] = {std::cos(axis[i]), std::sin(axis[i]), 1.0};
                for (std::size_t digit = 0; digit < 3; ++digit) {
                    const double w = basis[digit];
                    const std::size_t src = (d * 3 + digit) * lead;
                    const std::size_t dst = (d * kAxis + i) * lead;
                    for (std::size_t r = 0; r < lead; ++r) {
                        next[dst + r] += w * cur[src + r];
                    }
                }
            }
        }
        cur = std::move(next);
        done *= kAxis;
    }
    // cur[flat grid index], first axis most significant.
    auto grid_angles = [&](std::size_t flat) {
        std::vector<double> a(m);
        for (std::size_t k = m; k-- > 0;) {
            a[k] = axis[flat % kAxis];
            flat /= kAxis;
        }
        return a;
    };
    std::vector<std::size_t> minima;
    for (std::size_t flat = 0; flat < total; ++flat) {
        bool local = true;
        std::size_t stride = 1;
        for (std::size_t k = m; k-- > 0 && local;) {
            const std::size_t coord = (flat / stride) % kAxis;
            const std::size_t up = flat - coord * stride + ((coord + 1) % kAxis) * stride;
            const std::size_t dn = flat - coord * stride + ((coord + kAxis - 1) % kAxis) * stride;
            if (cur[up] < cur[flat] || cur[dn] < cur[flat]) {
                local = false;
            }
            stride *= kAxis;
        }
        if (local) {
            minima.push_back(flat);
        }
    }
    if (minima.empty()) {
        minima.push_back(static_cast<std::size_t>(
            std::min_element(cur.begin(), cur.end()) - cur.begin()));
    }
    std::sort(minima.begin(), minima.end(),
              [&](std::size_t a, std::size_t b) { return cur[a] < cur[b]; });
    constexpr std::size_t kPolished = 8;
    if (minima.size() > kPolished) {
        minima.resize(kPolished);
    }
    Candidate best{grid_angles(minima.front()), cur[minima.front()]};
    for (auto flat : minima) {
        Candidate start{grid_angles(flat), cur[flat]};
        Candidate c = polish_tensor(model, start);
        if (better(c, best)) {
            best = std::move(c);
        }
    }
    return {best.angles, best.value};
}

// -- Fourier model -----------------------------------------------------------

double FourierModel::operator()(double theta) const noexcept {
    double v = c;
    for (std::size_t s = 0; s < a.size(); ++s) {
        const double k = static_cast<double>(s + 1);
        v += a[s] * std::cos(k * theta) + b[s] * std::sin(k * theta);
    }
    return v;
}

double FourierModel::derivative(double theta) const noexcept {
    double v = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        const double k = static_cast<double>(s + 1);
        v += k * (-a[s] * std::sin(k * theta) + b[s] * std::cos(k * theta));
    }
    return v;
}

double FourierModel::second_derivative(double theta) const noexcept {
    double v = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        const double k = static_cast<double>(s + 1);
        v -= k * k * (a[s] * std::cos(k * theta) + b[s] * std::sin(k * theta));
    }
    return v;
}

double FourierModel::variation() const noexcept {
    double v = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        v = std::max({v, std::abs(a[s]), std::abs(b[s])});
    }
    return v;
}

FourierModel fit_fourier(std::size_t order, double theta0, std::span<const double> values) {
    require(order >= 1, ErrorCode::InvalidArgument, "Fourier order must be >= 1");
    const std::size_t n = 2 * order + 1;
    require(values.size() == n, ErrorCode::DimensionMismatch,
            "Fourier fit of order " + std::to_string(order) + " needs " + std::to_string(n) +
                " values, got " + std::to_string(values.size()));
    for (double v : values) {
        require(std::isfinite(v), ErrorCode::InvalidArgument, "non-finite Fourier sample");
    }
    FourierModel model;
    model.a.resize(order);
    model.b.resize(order);
    const double nd = static_cast<double>(n);
    model.c = std::accumulate(values.begin(), values.end(), 0.0) / nd;
    for (std::size_t s = 1; s <= order; ++s) {
        double ca = 0.0;
        double cb = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double phi = kTwoPi * static_cast<double>(s * k % n) / nd;
            ca += values[k] * std::cos(phi);
            cb += values[k] * std::sin(phi);
        }
        ca *= 2.0 / nd;
        cb *= 2.0 / nd;
        const double shift = static_cast<double>(s) * theta0;
        model.a[s - 1] = ca * std::cos(shift) - cb * std::sin(shift);
        model.b[s - 1] = ca * std::sin(shift) + cb * std::cos(shift);
    }
    return model;
}

FourierMinimum minimize_fourier(const FourierModel &model, std::optional<double> current_angle,
                                double flat_tolerance) {
    require(model.order() >= 1 && model.b.size() == model.a.size(), ErrorCode::InvalidArgument,
            "malformed Fourier model");
    if (model.variation() < flat_tolerance || model.variation() == 0.0) {
        const double keep = canonical_angle(current_angle.value_or(-kPi));
        return {keep, model(keep)};
    }
    const std::size_t n = 256 * model.order();
    std::vector<double> grid(n);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        vals[i] = model(grid[i]);
    }
    Candidate best{{grid[0]}, vals[0]};
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = vals[(i + n - 1) % n];
        const double next = vals[(i + 1) % n];
        if (vals[i] > prev || vals[i] > next) {
            continue;
        }
        double x = grid[i];
        double fx = vals[i];
        for (int iter = 0; iter < 50; ++iter) {
            const double d1 = model.derivative(x);
            if (std::abs(d1) < 1e-12) {
                break;
            }
            const double d2 = model.second_derivative(x);
            const double step = d2 > 0.0 ? -d1 / d2 : -d1;
            double t = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 40; ++ls) {
                const double trial = x + t * step;
                const double ft = model(trial);
                if (ft < fx) {
                    x = trial;
                    fx = ft;
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
            if (!moved) {
                break;
            }
        }
        Candidate c{{canonical_angle(x)}, fx};
        if (better(c, best)) {
            best = std::move(c);
        }
    }
    return {best.angles[0], best.value};
}

} // namespace smoq
