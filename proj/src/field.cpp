#include "thinfilm/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "thinfilm/util.hpp"

namespace thinfilm {

Field diff_forward(const Field& f) {
    const int m = f.size();
    const double inv_dx = 1.0 / f.dx();
    Field out(f.grid());
    for (int i = 0; i < m; ++i) {
        out[i] = (f[(i + 1) % m] - f[i]) * inv_dx;
    }
    return out;
}

Field face_divergence(const Field& g) {
    const int m = g.size();
    const double inv_dx = 1.0 / g.dx();
    Field out(g.grid());
    for (int i = 0; i < m; ++i) {
        out[i] = (g[i] - g[(i + m - 1) % m]) * inv_dx;
    }
    return out;
}

Field second_diff(const Field& f) {
    const int m = f.size();
    const double inv_dx2 = 1.0 / (f.dx() * f.dx());
    Field out(f.grid());
    for (int i = 0; i < m; ++i) {
        const double up = f[(i + 1) % m];
        const double dn = f[(i + m - 1) % m];
        out[i] = ((up - 2.0 * f[i]) + dn) * inv_dx2;  // exact zero for constants
    }
    return out;
}

Field third_diff(const Field& f) {
    const Field lap = second_diff(f);
    const int m = f.size();
    const double inv_dx = 1.0 / f.dx();
    Field out(f.grid());
    for (int i = 0; i < m; ++i) {
        out[i] = (lap[(i + 1) % m] - lap[i]) * inv_dx;
    }
    return out;
}

double integrate(const Field& f) {
    return f.dx() * pairwise_sum(f.values());
}

Field shift_interpolate(const Field& f, double displacement) {
    const int m = f.size();
    const double sigma = displacement / f.dx();  // shift in cell units

    // Grid-aligned shifts are exact index rotations.
    const double nearest = std::round(sigma);
    if (std::abs(sigma - nearest) <= 1e-12 * std::max(1.0, std::abs(sigma))) {
        const long r = static_cast<long>(nearest);
        Field out(f.grid());
        for (int i = 0; i < m; ++i) {
            const long src = ((i - r) % m + m) % m;
            out[i] = f[static_cast<int>(src)];
        }
        return out;
    }

    // Trigonometric interpolation: DFT coefficients, then evaluation at the
    // displaced points. The Nyquist mode is represented as a pure cosine.
    const int half = m / 2;
    std::vector<std::complex<double>> coef(static_cast<std::size_t>(half) + 1);
    const double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k <= half; ++k) {
        const std::complex<double> w = std::polar(1.0, -two_pi * k / m);
        std::complex<double> rot(1.0, 0.0);
        std::complex<double> acc(0.0, 0.0);
        for (int j = 0; j < m; ++j) {
            acc += f[j] * rot;
            rot *= w;
        }
        coef[static_cast<std::size_t>(k)] = acc;
    }

    Field out(f.grid());
    for (int i = 0; i < m; ++i) {
        const double theta = two_pi * (i - sigma) / m;
        const std::complex<double> w = std::polar(1.0, theta);
        std::complex<double> rot = w;  // k = 1
        double s = coef[0].real();
        for (int k = 1; k < half; ++k) {
            s += 2.0 * (coef[static_cast<std::size_t>(k)] * rot).real();
            rot *= w;
        }
        if (2 * half == m) {
            s += coef[static_cast<std::size_t>(half)].real() * std::cos(half * theta);
        }
        out[i] = s / m;
    }
    return out;
}

double min_value(const Field& f) {
    return *std::min_element(f.values().begin(), f.values().end());
}

double max_value(const Field& f) {
    return *std::max_element(f.values().begin(), f.values().end());
}

double sup_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.values()) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace thinfilm
