#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace thinfilm {

// Uniform periodic grid on [0, L). Index arithmetic is modulo `cells`.
struct Grid {
    double length = 1.0;
    int cells = 128;

    Grid() = default;
    Grid(double L, int M) : length(L), cells(M) {
        if (!(L > 0.0)) throw std::invalid_argument("Grid: length must be positive");
        if (M < 8) throw std::invalid_argument("Grid: need at least 8 cells");
    }

    double dx() const { return length / cells; }
    double x(int i) const { return dx() * i; }
    int wrap(int i) const {
        int m = i % cells;
        return m < 0 ? m + cells : m;
    }
    friend bool operator==(const Grid& a, const Grid& b) {
        return a.length == b.length && a.cells == b.cells;
    }
};

// A real-valued grid function. Also used for face-centered quantities,
// in which case index i holds the value at face i+1/2.
class Field {
public:
    Field() = default;
    Field(Grid g, double fill = 0.0) : grid_(g), values_(static_cast<std::size_t>(g.cells), fill) {}
    Field(Grid g, std::vector<double> v) : grid_(g), values_(std::move(v)) {
        if (static_cast<int>(values_.size()) != g.cells)
            throw std::invalid_argument("Field: value count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(values_.size()); }
    double dx() const { return grid_.dx(); }

    double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double at_wrapped(int i) const { return values_[static_cast<std::size_t>(grid_.wrap(i))]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

private:
    Grid grid_;
    std::vector<double> values_;
};

// Forward difference (f_{i+1} - f_i)/dx. Viewed as a face field this is the
// gradient at face i+1/2.
Field diff_forward(const Field& f);

// Backward difference of a face field: (g_{i+1/2} - g_{i-1/2})/dx at cell i.
// Discrete divergence; its integral telescopes to zero on the torus.
Field face_divergence(const Field& g);

// Centered second difference (f_{i+1} - 2 f_i + f_{i-1})/dx^2 at cell i.
// Grouped so that constant fields map to exact floating-point zero.
Field second_diff(const Field& f);

// Face-centered third difference (f_{i+2} - 3 f_{i+1} + 3 f_i - f_{i-1})/dx^3
// at face i+1/2, computed as the face difference of second_diff.
Field third_diff(const Field& f);

// Rectangle rule dx * sum(f); exact for trigonometric polynomials on the
// uniform periodic grid.
double integrate(const Field& f);

// Evaluate f at x - s with periodic wrap using trigonometric interpolation.
// A displacement that is an exact multiple of dx reduces to index rotation.
Field shift_interpolate(const Field& f, double displacement);

double min_value(const Field& f);
double max_value(const Field& f);
double sup_norm(const Field& f);

}  // namespace thinfilm
