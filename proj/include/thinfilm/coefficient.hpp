#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thinfilm {

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoefficientKind { constant, exp_decay, power, tabulated };

// Time-dependent scalar coefficient: one of
//   constant   c
//   exp_decay  a * exp(-lambda * t),   lambda > 0
//   power      a * (1 + t)^(-p),       p >= 0
//   tabulated  linear interpolation of (t_k, y_k) samples, clamped outside
// Antiderivatives of f and f^2 are closed-form for the analytic kinds and
// quadrature-based for tabulated data.
class CoefficientFn {
public:
    static CoefficientFn constant(double c);
    static CoefficientFn exp_decay(double a, double lambda);
    static CoefficientFn power(double a, double p);
    static CoefficientFn tabulated(std::vector<double> times, std::vector<double> values);

    // Compact spec syntax: "const:c" | "exp:a,lambda" | "pow:a,p" | "file:path".
    static CoefficientFn parse(const std::string& spec);
    std::string serialize() const;

    double operator()(double t) const;
    CoefficientKind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }

    // f(t) as t -> infinity.
    double limit_at_infinity() const;

    // Last sample time for tabulated data; +infinity for analytic kinds.
    double domain_end() const;

private:
    CoefficientFn() = default;
    CoefficientKind kind_ = CoefficientKind::constant;
    double a_ = 0.0;  // value / amplitude
    double b_ = 0.0;  // lambda or p
    std::vector<double> times_, values_;
    std::string source_;  // file path for serialization of tabulated kind

    friend struct CoefficientAccess;
};

struct CoefficientIntegrals {
    double integral;         // int_{t0}^{t1} f
    double square_integral;  // int_{t0}^{t1} f^2
};

// Exact antiderivatives for analytic kinds; adaptive Simpson (abs tol 1e-12,
// at most 1e6 evaluations) for tabulated ones.
CoefficientIntegrals antiderivatives(const CoefficientFn& f, double t0, double t1);

// Improper integral over [0, infinity), classified symbolically per kind.
struct ImproperIntegral {
    enum class Kind { finite, plus_infinity, minus_infinity } kind;
    double value;  // meaningful for kind == finite

    bool finite() const { return kind == Kind::finite; }
    static ImproperIntegral of(double v) { return {Kind::finite, v}; }
    static ImproperIntegral plus_inf() { return {Kind::plus_infinity, 0.0}; }
    static ImproperIntegral minus_inf() { return {Kind::minus_infinity, 0.0}; }
};

ImproperIntegral integral_to_infinity(const CoefficientFn& f);
ImproperIntegral square_integral_to_infinity(const CoefficientFn& f);

// Generic adaptive Simpson quadrature used for tabulated coefficients.
double adaptive_simpson(const std::function<double(double)>& f, double t0, double t1,
                        double abs_tol, long max_evals);

}  // namespace thinfilm
