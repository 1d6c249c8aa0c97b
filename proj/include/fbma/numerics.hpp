#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace fbma {

/// A nonempty bounded parameter interval [lo, hi], lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);
    double width() const { return hi - lo; }
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // a-posteriori bound, >= 0
    long evaluations = 0;
};

/// A sign-change bracket: f_lo * f_hi < 0, or one endpoint value is exactly 0.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

/// Thrown when an iteration budget runs out; carries the partial estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadResult partial_)
        : std::runtime_error(what), partial(partial_) {}
    QuadResult partial;
};

using RealFn = std::function<double(double)>;

/// Integrand receiving, besides x, its exact distances to the interval
/// endpoints (x - lo and hi - x).  Lets singular integrands avoid the
/// cancellation in recomputing those differences from a rounded x.
using EndpointAwareFn = std::function<double(double x, double dist_lo, double dist_hi)>;

inline constexpr double kDefaultAbsTol = 1e-12;
inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr double kDefaultFTol = 1e-12;
inline constexpr double kDefaultXTol = 1e-13;
inline constexpr long kEvalBudget = 1'000'000;

/// Adaptive Gauss-Kronrod (7-15) quadrature of a continuous integrand.
/// Satisfies |value - integral| <= max(abs_tol, rel_tol*|value|) for smooth f.
QuadResult integrate(const RealFn& f, Interval iv,
                     double abs_tol = kDefaultAbsTol, double rel_tol = kDefaultRelTol);

/// Tanh-sinh quadrature; admits integrable endpoint blowup up to 1/sqrt.
QuadResult integrate_singular_endpoints(const RealFn& f, Interval iv,
                                        double abs_tol = kDefaultAbsTol,
                                        double rel_tol = kDefaultRelTol);

/// Same scheme, endpoint-aware integrand.  Use this form when the integrand
/// is singular at an endpoint and needs the distance at full precision.
QuadResult integrate_singular_endpoints(const EndpointAwareFn& f, Interval iv,
                                        double abs_tol = kDefaultAbsTol,
                                        double rel_tol = kDefaultRelTol);

/// Bracketed root refinement (Brent: inverse quadratic / secant with a
/// bisection fallback).  The result always lies in the initial bracket.
double find_root(const RealFn& f, const Bracket& b,
                 double x_tol = kDefaultXTol, double f_tol = kDefaultFTol);

/// Validates and packages a bracket, evaluating f at both ends.
Bracket make_bracket(const RealFn& f, double lo, double hi);

/// All cells of the uniform grid with step `step` on which f changes sign or
/// hits 0 at a grid node.  A zero landing exactly on an interior node is
/// reported once, attached to the cell on its right.
std::vector<Bracket> scan_sign_changes(const RealFn& f, Interval iv, double step);

/// Solves g(x) = target for strictly monotone g; |g(x) - target| <= tol.
double invert_monotone(const RealFn& g, double target, Interval iv,
                       double tol = kDefaultFTol);

}  // namespace fbma
