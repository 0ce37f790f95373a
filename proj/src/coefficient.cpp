#include "thinfilm/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace thinfilm {

CoefficientFn CoefficientFn::constant(double c) {
    CoefficientFn f;
    f.kind_ = CoefficientKind::constant;
    f.a_ = c;
    return f;
}

CoefficientFn CoefficientFn::exp_decay(double a, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("exp_decay: lambda must be positive");
    CoefficientFn f;
    f.kind_ = CoefficientKind::exp_decay;
    f.a_ = a;
    f.b_ = lambda;
    return f;
}

CoefficientFn CoefficientFn::power(double a, double p) {
    if (!(p >= 0.0)) throw std::invalid_argument("power: exponent must be nonnegative");
    CoefficientFn f;
    f.kind_ = CoefficientKind::power;
    f.a_ = a;
    f.b_ = p;
    return f;
}

CoefficientFn CoefficientFn::tabulated(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size() || times.size() < 2)
        throw std::invalid_argument("tabulated: need at least two samples");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("tabulated: sample times must be strictly increasing");
    }
    CoefficientFn f;
    f.kind_ = CoefficientKind::tabulated;
    f.times_ = std::move(times);
    f.values_ = std::move(values);
    return f;
}

namespace {

std::vector<double> parse_numbers(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("coefficient: bad number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

CoefficientFn CoefficientFn::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("coefficient: expected kind:params, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "const") {
        const auto v = parse_numbers(rest);
        if (v.size() != 1) throw std::invalid_argument("const: expects one parameter");
        return constant(v[0]);
    }
    if (kind == "exp") {
        const auto v = parse_numbers(rest);
        if (v.size() != 2) throw std::invalid_argument("exp: expects a,lambda");
        return exp_decay(v[0], v[1]);
    }
    if (kind == "pow") {
        const auto v = parse_numbers(rest);
        if (v.size() != 2) throw std::invalid_argument("pow: expects a,p");
        return power(v[0], v[1]);
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("coefficient: cannot open '" + rest + "'");
        std::vector<double> ts, ys;
        double t, y;
        while (in >> t >> y) {
            ts.push_back(t);
            ys.push_back(y);
        }
        auto f = tabulated(std::move(ts), std::move(ys));
        f.source_ = rest;
        return f;
    }
    throw std::invalid_argument("coefficient: unknown kind '" + kind + "'");
}

std::string CoefficientFn::serialize() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case CoefficientKind::constant: os << "const:" << a_; break;
        case CoefficientKind::exp_decay: os << "exp:" << a_ << "," << b_; break;
        case CoefficientKind::power: os << "pow:" << a_ << "," << b_; break;
        case CoefficientKind::tabulated: os << "file:" << source_; break;
    }
    return os.str();
}

double CoefficientFn::operator()(double t) const {
    switch (kind_) {
        case CoefficientKind::constant: return a_;
        case CoefficientKind::exp_decay: return a_ * std::exp(-b_ * t);
        case CoefficientKind::power: return a_ * std::pow(1.0 + t, -b_);
        case CoefficientKind::tabulated: {
            if (t <= times_.front()) return values_.front();
            if (t >= times_.back()) return values_.back();
            const auto it = std::upper_bound(times_.begin(), times_.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - times_.begin());
            const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
            return values_[i - 1] + w * (values_[i] - values_[i - 1]);
        }
    }
    return 0.0;
}

double CoefficientFn::limit_at_infinity() const {
    switch (kind_) {
        case CoefficientKind::constant: return a_;
        case CoefficientKind::exp_decay: return 0.0;
        case CoefficientKind::power: return b_ > 0.0 ? 0.0 : a_;
        case CoefficientKind::tabulated: return values_.back();
    }
    return 0.0;
}

double CoefficientFn::domain_end() const {
    if (kind_ == CoefficientKind::tabulated) return times_.back();
    return std::numeric_limits<double>::infinity();
}

double adaptive_simpson(const std::function<double(double)>& f, double t0, double t1,
                        double abs_tol, long max_evals) {
    if (t1 <= t0) return 0.0;
    long evals = 0;
    const auto eval = [&](double t) {
        ++evals;
        return f(t);
    };
    struct Panel {
        double a, b, fa, fm, fb, whole;
    };
    const auto simpson = [](double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    };

    std::vector<Panel> stack;
    {
        const double m = 0.5 * (t0 + t1);
        const double fa = eval(t0), fm = eval(m), fb = eval(t1);
        stack.push_back({t0, t1, fa, fm, fb, simpson(t0, t1, fa, fm, fb)});
    }
    double total = 0.0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        if (evals > max_evals)
            throw QuadratureFailure("adaptive_simpson: evaluation budget exhausted");
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
        const double flm = eval(lm), frm = eval(rm);
        const double left = simpson(p.a, m, p.fa, flm, p.fm);
        const double right = simpson(m, p.b, p.fm, frm, p.fb);
        const double err = (left + right - p.whole) / 15.0;
        const double local_tol = abs_tol * (p.b - p.a) / (t1 - t0);
        if (std::abs(err) <= local_tol || (p.b - p.a) < 1e-14 * (t1 - t0)) {
            total += left + right + err;  // Richardson correction
        } else {
            stack.push_back({p.a, m, p.fa, flm, p.fm, left});
            stack.push_back({m, p.b, p.fm, frm, p.fb, right});
        }
    }
    return total;
}

namespace {

// int a e^{-l s} ds over [t0, t1]
double exp_integral(double a, double l, double t0, double t1) {
    return a / l * (std::exp(-l * t0) - std::exp(-l * t1));
}

// int a (1+s)^{-p} ds over [t0, t1]
double power_integral(double a, double p, double t0, double t1) {
    if (p == 1.0) return a * std::log((1.0 + t1) / (1.0 + t0));
    return a / (1.0 - p) * (std::pow(1.0 + t1, 1.0 - p) - std::pow(1.0 + t0, 1.0 - p));
}

}  // namespace

CoefficientIntegrals antiderivatives(const CoefficientFn& f, double t0, double t1) {
    if (!(t0 <= t1)) throw std::invalid_argument("antiderivatives: need t0 <= t1");
    switch (f.kind()) {
        case CoefficientKind::constant: {
            const double c = f.param_a();
            return {c * (t1 - t0), c * c * (t1 - t0)};
        }
        case CoefficientKind::exp_decay: {
            const double a = f.param_a(), l = f.param_b();
            return {exp_integral(a, l, t0, t1), exp_integral(a * a, 2.0 * l, t0, t1)};
        }
        case CoefficientKind::power: {
            const double a = f.param_a(), p = f.param_b();
            return {power_integral(a, p, t0, t1), power_integral(a * a, 2.0 * p, t0, t1)};
        }
        case CoefficientKind::tabulated: {
            const double i1 = adaptive_simpson([&](double t) { return f(t); }, t0, t1, 1e-12, 1000000);
            const double i2 = adaptive_simpson([&](double t) { const double v = f(t); return v * v; },
                                               t0, t1, 1e-12, 1000000);
            return {i1, i2};
        }
    }
    return {0.0, 0.0};
}

ImproperIntegral integral_to_infinity(const CoefficientFn& f) {
    switch (f.kind()) {
        case CoefficientKind::constant: {
            const double c = f.param_a();
            if (c == 0.0) return ImproperIntegral::of(0.0);
            return c > 0.0 ? ImproperIntegral::plus_inf() : ImproperIntegral::minus_inf();
        }
        case CoefficientKind::exp_decay:
            return ImproperIntegral::of(f.param_a() / f.param_b());
        case CoefficientKind::power: {
            const double a = f.param_a(), p = f.param_b();
            if (a == 0.0) return ImproperIntegral::of(0.0);
            if (p > 1.0) return ImproperIntegral::of(a / (p - 1.0));
            return a > 0.0 ? ImproperIntegral::plus_inf() : ImproperIntegral::minus_inf();
        }
        case CoefficientKind::tabulated: {
            // Clamped extrapolation: divergent unless the table decays to zero.
            const double tail = f.limit_at_infinity();
            if (tail > 0.0) return ImproperIntegral::plus_inf();
            if (tail < 0.0) return ImproperIntegral::minus_inf();
            const auto head = antiderivatives(f, 0.0, 0.0);
            (void)head;
            return ImproperIntegral::of(0.0);  // refined by callers via finite-horizon quadrature
        }
    }
    return ImproperIntegral::of(0.0);
}

ImproperIntegral square_integral_to_infinity(const CoefficientFn& f) {
    switch (f.kind()) {
        case CoefficientKind::constant: {
            const double c = f.param_a();
            return c == 0.0 ? ImproperIntegral::of(0.0) : ImproperIntegral::plus_inf();
        }
        case CoefficientKind::exp_decay: {
            const double a = f.param_a(), l = f.param_b();
            return ImproperIntegral::of(a * a / (2.0 * l));
        }
        case CoefficientKind::power: {
            const double a = f.param_a(), p = f.param_b();
            if (a == 0.0) return ImproperIntegral::of(0.0);
            if (2.0 * p > 1.0) return ImproperIntegral::of(a * a / (2.0 * p - 1.0));
            return ImproperIntegral::plus_inf();
        }
        case CoefficientKind::tabulated: {
            const double tail = f.limit_at_infinity();
            if (tail != 0.0) return ImproperIntegral::plus_inf();
            return ImproperIntegral::of(0.0);  // refined by callers via finite-horizon quadrature
        }
    }
    return ImproperIntegral::of(0.0);
}

}  // namespace thinfilm
