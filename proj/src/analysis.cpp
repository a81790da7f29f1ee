#include "levywalk/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace levywalk {

namespace {

constexpr double kSingularEps = 1e-8;

void check_inputs(double alpha, double t) {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
        throw std::invalid_argument("alpha must lie in (0, 2]");
    }
    if (!(t >= 1.0)) {
        throw std::invalid_argument("t must be >= 1");
    }
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (b <= a) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Integral of x^m * rho(x) over [0, t] for the Levy density.
double truncated_moment_numeric(double alpha, double t, int m) {
    const double pref = alpha / (1.0 + alpha);
    // Flat piece on [0, min(1,t)).
    const double head_end = std::min(1.0, t);
    double result = adaptive_simpson([&](double x) { return pref * std::pow(x, m); }, 0.0,
                                     head_end, 1e-13);
    if (t > 1.0) {
        // Tail piece with x = e^y: x^m * x^-(alpha+1) * x dy.
        const double expo = static_cast<double>(m) - alpha;
        const double tail = adaptive_simpson([&](double y) { return pref * std::exp(expo * y); },
                                             0.0, std::log(t),
                                             1e-12 * std::max(1.0, std::pow(t, expo)));
        result += tail;
    }
    return result;
}

} // namespace

MomentPair closed_form_truncated_moments(double alpha, double t) {
    check_inputs(alpha, t);
    const double pref = alpha / (1.0 + alpha);
    const double first_tail = std::abs(alpha - 1.0) < kSingularEps
                                  ? std::log(t)
                                  : (std::pow(t, 1.0 - alpha) - 1.0) / (1.0 - alpha);
    const double second_tail = std::abs(alpha - 2.0) < kSingularEps
                                   ? std::log(t)
                                   : (std::pow(t, 2.0 - alpha) - 1.0) / (2.0 - alpha);
    return MomentPair{pref * (1.0 + first_tail), pref * (1.0 / 3.0 + second_tail), t};
}

MomentPair numeric_truncated_moments(double alpha, double t) {
    check_inputs(alpha, t);
    return MomentPair{truncated_moment_numeric(alpha, t, 1),
                      truncated_moment_numeric(alpha, t, 2), t};
}

double analytic_exponent_finite(double alpha, double t, MomentMethod method) {
    if (!(t > 1.0)) throw std::invalid_argument("t must be > 1");
    const MomentPair m = method == MomentMethod::Numeric ? numeric_truncated_moments(alpha, t)
                                                         : closed_form_truncated_moments(alpha, t);
    return 0.5 * (1.0 + std::log(m.second / m.first) / std::log(t));
}

double analytic_exponent_asymptotic(double alpha) {
    if (!(alpha >= 0.0) || !(alpha <= 2.0)) {
        throw std::invalid_argument("alpha must lie in [0, 2]");
    }
    return alpha <= 1.0 ? 1.0 : 0.5 * (3.0 - alpha);
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& series, long t_lo,
                        long t_hi) {
    if (t_lo >= t_hi) throw std::invalid_argument("fit window must satisfy t_lo < t_hi");
    double sx = 0.0, sy = 0.0;
    long n = 0;
    std::vector<std::pair<double, double>> pts;
    for (const auto& [t, sigma] : series) {
        if (t < static_cast<double>(t_lo) || t > static_cast<double>(t_hi)) continue;
        if (!(sigma > 0.0)) {
            throw std::invalid_argument("fit_power_law: nonpositive sigma in window");
        }
        pts.emplace_back(std::log(t), std::log(sigma));
        sx += pts.back().first;
        sy += pts.back().second;
        ++n;
    }
    if (n < 3) throw std::invalid_argument("fit_power_law: need >= 3 points in window");
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    const double slope = sxy / sxx;
    const double ssr = std::max(0.0, syy - slope * sxy);
    const double stderr_c = n > 2 ? std::sqrt(ssr / (n - 2) / sxx) : 0.0;
    const double r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    return FitResult{slope, stderr_c, r2, t_lo, t_hi, static_cast<int>(n)};
}

} // namespace levywalk
