#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/minkowski.hpp"

namespace zkit {

/// Profile h: continuous on [0, +inf) with h(0) = 0 and h -> 1 at infinity.
struct Profile {
    std::string name;
    std::function<double(double)> fn;

    static Profile rational() {
        return {"s/(1+s)", [](double s) {
                    if (std::isinf(s)) return 1.0;
                    return s / (1.0 + s);
                }};
    }
};

/// Parameters of the cone-discontinuous scalar field: vertex p, a timelike
/// direction e and two positive exponents. The field is 1 on the punctured
/// cone of p, 0 at p, and h(|g(e,x-p)|^(2a+b) / |g(x-p,x-p)|^a) elsewhere.
struct ZFParams {
    Point p;
    Vector e;
    double alpha = 1.0;
    double beta = 1.0;
    Profile h = Profile::rational();

    ZFParams(Point p_, Vector e_, double alpha_ = 1.0, double beta_ = 1.0,
             Profile h_ = Profile::rational())
        : p(std::move(p_)), e(std::move(e_)), alpha(alpha_), beta(beta_), h(std::move(h_)) {
        if (causal_class(e) != CausalClass::Timelike)
            throw InvalidArgument("field direction e must be timelike");
        if (!(alpha > 0.0) || !(beta > 0.0))
            throw InvalidArgument("exponents must be positive");
    }
};

struct FValue {
    double value = 0.0;
    std::string case_name;  // "vertex" | "cone" | "generic"
};

/// The topological cases are decided exactly in rational arithmetic before
/// any floating-point evaluation, so rounding can never blur the cone values.
inline FValue eval_f_detail(const ZFParams& params, const Point& x) {
    if (x == params.p) return {0.0, "vertex"};
    if (on_light_cone(x, params.p)) return {1.0, "cone"};
    Vector d = x - params.p;
    Rat g1 = metric(params.e, d);
    Rat g2 = metric(d, d);  // nonzero off the cone
    double num = std::pow(std::abs(g1.to_double()), 2.0 * params.alpha + params.beta);
    double den = std::pow(std::abs(g2.to_double()), params.alpha);
    return {params.h.fn(num / den), "generic"};
}

inline double eval_f(const ZFParams& params, const Point& x) {
    return eval_f_detail(params, x).value;
}

/// Sharp constant of the linear-form bound |g(e,u)| <= c |g(u,u)|^(1/2) on a
/// one-dimensional axis with direction u.
inline double axis_bound_constant(const ZFParams& params, const Axis& axis) {
    if (!axis.passes_through(params.p))
        throw InvalidArgument("axis_bound_constant requires an axis through p");
    const Vector& u = axis.line_dir();
    Rat num = metric(params.e, u).abs();
    Rat den = metric(u, u).abs();
    return num.to_double() / std::sqrt(den.to_double());
}

struct AxisAuditSample {
    std::size_t n = 0;
    Rat t;          // exact parameter, inner_scale^n
    double f = 0.0;
    double bound = 0.0;   // h(c^(2a+b) |g(tu,tu)|^(b/2))
    double margin = 0.0;  // bound - f, must stay above -tol
};

struct AxisAuditReport {
    bool bound_ok = true;
    double tail_max = 0.0;  // field value at the final (smallest) parameter
    bool decreasing = true;
    std::vector<AxisAuditSample> samples;
};

/// Walk x -> p geometrically along the axis and compare f against the
/// per-axis bound. The squared metric values are exact rationals; the single
/// floating-point step is the final exponentiation.
inline AxisAuditReport audit_axis_continuity(const ZFParams& params, const Axis& axis,
                                             std::size_t samples, const Rat& inner_scale,
                                             double tol = 1e-12) {
    if (!axis.passes_through(params.p))
        throw InvalidArgument("audit_axis_continuity requires an axis through p");
    if (!(inner_scale.sign() > 0 && inner_scale < Rat(1)))
        throw InvalidArgument("inner_scale must lie strictly in (0, 1)");
    AxisAuditReport report;
    const Vector& u = axis.line_dir();
    double c = axis_bound_constant(params, axis);
    double cpow = std::pow(c, 2.0 * params.alpha + params.beta);
    Rat guu = metric(u, u).abs();
    Rat t(1);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= samples; ++n) {
        t *= inner_scale;
        Point x = params.p + t * u;
        double f = eval_f(params, x);
        Rat gtt = t * t * guu;  // |g(tu, tu)| exactly
        double bound = params.h.fn(cpow * std::pow(gtt.to_double(), params.beta / 2.0));
        double margin = bound - f;
        if (margin < -tol) report.bound_ok = false;
        if (f > prev) report.decreasing = false;
        prev = f;
        report.samples.push_back({n, t, f, bound, margin});
    }
    report.tail_max = report.samples.empty() ? 0.0 : report.samples.back().f;
    return report;
}

struct DiscontinuityReport {
    std::vector<std::vector<double>> values;  // per lightlike direction
    double f_at_vertex = 0.0;
    bool witness_exact = false;  // every cone sample exactly 1, vertex exactly 0
};

/// The natural-topology discontinuity witness at p: geometric approach along
/// both light rays gives the constant value 1 while f(p) = 0.
inline DiscontinuityReport audit_n_discontinuity(const ZFParams& params, std::size_t count) {
    require_k1(params.p, "audit_n_discontinuity");
    DiscontinuityReport report;
    report.f_at_vertex = eval_f(params, params.p);
    report.witness_exact = report.f_at_vertex == 0.0;
    Rat half(Int(1), Int(2));
    for (const Vector& d : {Vector{Rat(1), Rat(1)}, Vector{Rat(1), Rat(-1)}}) {
        std::vector<double> vals;
        Rat t(1);
        for (std::size_t i = 1; i <= count; ++i) {
            t *= half;
            double f = eval_f(params, params.p + t * d);
            if (f != 1.0) report.witness_exact = false;
            vals.push_back(f);
        }
        report.values.push_back(std::move(vals));
    }
    return report;
}

}  // namespace zkit
