#include "fbma/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace fbma {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// One GK15 pass over [lo, hi]; 15 evaluations.
Panel gk15(const RealFn& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double fv[15];
    const double f_mid = f(mid);
    fv[7] = f_mid;
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(mid - half * kXgk[j]);
        fv[14 - j] = f(mid + half * kXgk[j]);
    }

    double resk = kWgk[7] * f_mid;
    double resg = kWg[3] * f_mid;
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double sum = fv[j] + fv[14 - j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(f_mid - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

    double err = std::abs((resk - resg) * half);
    resasc *= half;
    resabs *= half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    return Panel{lo, hi, resk * half, err};
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(std::isfinite(lo) && std::isfinite(hi)) || !(hi - lo > 0.0))
        throw std::invalid_argument("Interval: need finite lo < hi");
}

QuadResult integrate(const RealFn& f, Interval iv, double abs_tol, double rel_tol) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");

    std::priority_queue<Panel> panels;
    long evals = 15;
    panels.push(gk15(f, iv.lo, iv.hi));
    double total_value = panels.top().value;
    double total_error = panels.top().error;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (evals + 30 > kEvalBudget) {
            QuadResult partial{total_value, total_error, evals};
            throw ConvergenceError("integrate: evaluation budget exhausted", partial);
        }
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Panel narrowed to machine resolution; its error is irreducible.
            QuadResult partial{total_value, total_error, evals};
            throw ConvergenceError("integrate: interval below machine resolution", partial);
        }
        Panel left = gk15(f, worst.lo, mid);
        Panel right = gk15(f, mid, worst.hi);
        evals += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    return QuadResult{total_value, total_error, evals};
}

QuadResult integrate_singular_endpoints(const EndpointAwareFn& f, Interval iv,
                                        double abs_tol, double rel_tol) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("integrate_singular_endpoints: tolerances must be positive");

    const double half = 0.5 * (iv.hi - iv.lo);
    const double mid = 0.5 * (iv.lo + iv.hi);
    const double width = iv.hi - iv.lo;
    constexpr double kPiHalf = 1.5707963267948966;
    constexpr int kMaxLevel = 12;

    long evals = 0;

    // Weighted sample of the transformed integrand at t; x(t) = tanh(pi/2 sinh t).
    auto sample = [&](double t) -> double {
        const double u = kPiHalf * std::sinh(t);
        if (std::abs(u) > 700.0) return 0.0;  // weight underflows
        const double e2u = std::exp(2.0 * u);
        const double dist_hi = width / (1.0 + e2u);        // hi - x, exact form
        const double dist_lo = width - dist_hi;            // x - lo
        if (dist_hi <= 0.0 || dist_lo <= 0.0) return 0.0;  // node collapsed onto an endpoint
        const double x = (u >= 0.0) ? iv.hi - dist_hi : iv.lo + dist_lo;
        const double sech = 2.0 / (std::exp(u) + std::exp(-u));
        const double weight = kPiHalf * std::cosh(t) * sech * sech * half;
        ++evals;
        return weight * f(x, dist_lo, dist_hi);
    };

    // Level 0: h = 1, node t = 0 plus symmetric tail.
    double h = 1.0;
    auto level_tail = [&](double h_step, double t0) -> double {
        // Sums sample(t) for t = t0, t0 + h_step, ... and the mirrored negatives,
        // until terms stop contributing.
        double acc = 0.0;
        int stale = 0;
        for (double t = t0; t < 7.0; t += h_step) {
            const double term = sample(t) + sample(-t);
            acc += term;
            if (std::abs(term) <= std::numeric_limits<double>::min() ||
                std::abs(term) <= 1e-18 * (std::abs(acc) + 1e-300)) {
                if (++stale >= 2) break;
            } else {
                stale = 0;
            }
            if (evals > kEvalBudget) {
                QuadResult partial{h * acc, std::abs(h * acc), evals};
                throw ConvergenceError(
                    "integrate_singular_endpoints: evaluation budget exhausted", partial);
            }
        }
        return acc;
    };

    double sum = sample(0.0) + level_tail(h, h);
    double value = h * sum;
    double prev_diff = std::numeric_limits<double>::infinity();
    double err = std::abs(value);

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        sum += level_tail(2.0 * h, h);  // new odd nodes only
        const double new_value = h * sum;
        const double diff = std::abs(new_value - value);
        value = new_value;

        // Tanh-sinh converges roughly quadratically level to level.
        if (diff == 0.0) {
            err = std::numeric_limits<double>::epsilon() * std::abs(value);
        } else if (std::isfinite(prev_diff) && prev_diff > diff) {
            err = std::min(diff, diff * diff / prev_diff);
        } else {
            err = diff;
        }
        err = std::max(err, std::numeric_limits<double>::epsilon() * std::abs(value));
        prev_diff = diff;

        if (level >= 2 && err <= std::max(abs_tol, rel_tol * std::abs(value)))
            return QuadResult{value, err, evals};
    }
    // Singular integrands evaluated through a plain f(x) hit a precision floor
    // near the endpoints; report what was achieved if it is at least close.
    if (err <= 1e3 * std::max(abs_tol, rel_tol * std::abs(value)))
        return QuadResult{value, err, evals};
    throw ConvergenceError("integrate_singular_endpoints: did not reach tolerance",
                           QuadResult{value, err, evals});
}

QuadResult integrate_singular_endpoints(const RealFn& f, Interval iv,
                                        double abs_tol, double rel_tol) {
    return integrate_singular_endpoints(
        [&f](double x, double, double) { return f(x); }, iv, abs_tol, rel_tol);
}

Bracket make_bracket(const RealFn& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("make_bracket: need lo < hi");
    Bracket b{lo, hi, f(lo), f(hi)};
    if (b.f_lo == 0.0 || b.f_hi == 0.0) return b;
    if (b.f_lo * b.f_hi > 0.0)
        throw std::invalid_argument("make_bracket: no sign change on [lo, hi]");
    return b;
}

double find_root(const RealFn& f, const Bracket& br, double x_tol, double f_tol) {
    double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
    if (!(a < b) || (fa * fb > 0.0 && fa != 0.0 && fb != 0.0))
        throw std::invalid_argument("find_root: invalid bracket");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;

    double c = a, fc = fa;
    double d = b - a, e = d;
    const long budget = kEvalBudget;
    for (long it = 0; it < budget; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(fb) <= f_tol || std::abs(xm) <= tol1) return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {  // inverse quadratic
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw ConvergenceError("find_root: evaluation budget exhausted",
                           QuadResult{b, std::abs(fb), budget});
}

std::vector<Bracket> scan_sign_changes(const RealFn& f, Interval iv, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("scan_sign_changes: step must be positive");

    std::vector<Bracket> out;
    const long n = std::max<long>(1, static_cast<long>(std::ceil(iv.width() / step - 1e-9)));
    double prev_t = iv.lo;
    double prev_f = f(prev_t);
    for (long i = 1; i <= n; ++i) {
        const double t = (i == n) ? iv.hi : iv.lo + static_cast<double>(i) * step;
        const double ft = f(t);
        if (prev_f == 0.0) {
            out.push_back(Bracket{prev_t, t, prev_f, ft});
        } else if (prev_f * ft < 0.0) {
            out.push_back(Bracket{prev_t, t, prev_f, ft});
        } else if (ft == 0.0 && i == n) {
            // A zero at the final node has no cell to its right.
            out.push_back(Bracket{prev_t, t, prev_f, ft});
        }
        prev_t = t;
        prev_f = ft;
    }
    return out;
}

double invert_monotone(const RealFn& g, double target, Interval iv, double tol) {
    const double g_lo = g(iv.lo);
    const double g_hi = g(iv.hi);
    const double lo_val = std::min(g_lo, g_hi);
    const double hi_val = std::max(g_lo, g_hi);
    if (!(target > lo_val && target < hi_val) && target != g_lo && target != g_hi) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "invert_monotone: target " << target << " outside attained range ["
            << lo_val << ", " << hi_val << "]";
        throw std::domain_error(msg.str());
    }
    Bracket b{iv.lo, iv.hi, g_lo - target, g_hi - target};
    return find_root([&g, target](double x) { return g(x) - target; }, b,
                     1e-15 * std::max(std::abs(iv.lo), std::abs(iv.hi)) +
                         std::numeric_limits<double>::denorm_min(),
                     tol);
}

}  // namespace fbma
