#include "liyorke/plane.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "liyorke/errors.hpp"

namespace liyorke::plane {

namespace {

constexpr long long kMaxIterate = 10'000'000;
constexpr double kTwoPi = 6.283185307179586476925287;

double require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw RejectedInput("plane", std::string(name) + " must be finite");
    return v;
}

double reduce_angle(double turns) {
    double a = turns - std::floor(turns);
    if (a >= 1.0) a = 0.0;
    return a;
}

// keeps deep forward orbits strictly inside the open disk when the true
// log-modulus rounds to zero
double clamp_disk_log(double log_modulus) {
    if (log_modulus == 0.0) return -std::numeric_limits<double>::denorm_min();
    return log_modulus;
}

} // namespace

PlanePoint PlanePoint::origin(Space space) {
    PlanePoint p;
    p.space_ = space;
    p.origin_ = true;
    return p;
}

PlanePoint PlanePoint::from_log_modulus(Space space, double log_modulus, double angle_turns) {
    require_finite(log_modulus, "log_modulus");
    require_finite(angle_turns, "angle_turns");
    if (space == Space::Disk && !(log_modulus < 0.0))
        throw RejectedInput("plane", "disk points require log_modulus < 0 (open disk)");
    PlanePoint p;
    p.space_ = space;
    p.origin_ = false;
    p.log_modulus_ = log_modulus;
    p.angle_turns_ = reduce_angle(angle_turns);
    return p;
}

PlanePoint PlanePoint::from_modulus(Space space, double modulus, double angle_turns) {
    require_finite(modulus, "modulus");
    if (modulus == 0.0) return origin(space);
    if (modulus < 0.0) throw RejectedInput("plane", "modulus must be non-negative");
    if (space == Space::Disk && modulus >= 1.0)
        throw RejectedInput("plane", "disk points require modulus < 1 (open disk)");
    return from_log_modulus(space, std::log(modulus), angle_turns);
}

PlanePoint PlanePoint::disk_from_phi(DDouble phi_value, double angle_turns) {
    if (!phi_value.is_finite()) throw RejectedInput("plane", "phi must be finite");
    double lm = clamp_disk_log(log_modulus_from_phi(phi_value).to_double());
    return from_log_modulus(Space::Disk, lm, angle_turns);
}

double PlanePoint::log_modulus() const {
    if (origin_) throw RejectedInput("plane", "origin has no log_modulus");
    return log_modulus_;
}

double PlanePoint::angle_turns() const {
    if (origin_) throw RejectedInput("plane", "origin has no angle");
    return angle_turns_;
}

double PlanePoint::modulus() const { return origin_ ? 0.0 : std::exp(log_modulus_); }

std::pair<double, double> PlanePoint::to_xy() const {
    if (origin_) return {0.0, 0.0};
    double r = std::exp(log_modulus_);
    if (!std::isfinite(r))
        throw NumericalRange("plane", "modulus overflows double (log_modulus = " +
                                          std::to_string(log_modulus_) + ")");
    double a = kTwoPi * angle_turns_;
    return {r * std::cos(a), r * std::sin(a)};
}

void IterateRequest::validate() const {
    long long an = n < 0 ? -n : n;
    if (an > kMaxIterate)
        throw RejectedInput("plane", "|n| exceeds the configured iterate cap of 1e7");
    if (precision_digits < 15 || precision_digits > 32)
        throw RejectedInput("plane", "precision_digits must lie in [15, 32]");
    if (an > 10'000 && precision_digits < 30)
        throw RejectedInput("plane", "|n| > 1e4 requires precision_digits >= 30");
}

DDouble phi(DDouble r) {
    if (!(r.hi > 0.0) || !(r.hi < 1.0))
        throw RejectedInput("plane", "phi requires r in (0,1)");
    return dd_log(r) - dd_log(DDouble(1.0) - r);
}

double phi(double r) { return phi(DDouble(r)).to_double(); }

DDouble phi_inverse(DDouble t) {
    if (!t.is_finite()) throw RejectedInput("plane", "phi_inverse requires finite t");
    if (t.hi >= 0.0) {
        // 1/(1 + e^{-t}); e^{-t} <= 1 here
        return DDouble(1.0) / (DDouble(1.0) + dd_exp(-t));
    }
    DDouble et = dd_exp(t);
    return et / (DDouble(1.0) + et);
}

double phi_inverse(double t) { return phi_inverse(DDouble(t)).to_double(); }

DDouble phi_from_log_modulus(DDouble log_modulus) {
    // phi = ln r - ln(1 - r) = l - ln(-expm1(l))
    return log_modulus - dd_log(-dd_expm1(log_modulus));
}

DDouble log_modulus_from_phi(DDouble phi_value) {
    // ln r = -ln(1 + e^{-phi}); branch keeps the exponential argument <= 0
    if (phi_value.hi > 0.0) return -dd_log1p(dd_exp(-phi_value));
    return phi_value - dd_log1p(dd_exp(phi_value));
}

PlanePoint f_power(const PlanePoint& z, const IterateRequest& req) {
    req.validate();
    if (z.space() != Space::Disk) throw RejectedInput("plane", "f acts on the disk");
    if (z.is_origin() || req.n == 0) return z;

    DDouble phi0 = phi_from_log_modulus(DDouble(z.log_modulus()));
    double nd = static_cast<double>(req.n);
    DDouble phi_n = phi0 + nd;
    double lm = clamp_disk_log(log_modulus_from_phi(phi_n).to_double());
    DDouble angle = dd_frac01(DDouble(z.angle_turns()) + phi0 * nd);
    return PlanePoint::from_log_modulus(Space::Disk, lm, angle.to_double());
}

PlanePoint g_power(const PlanePoint& z, const IterateRequest& req) {
    req.validate();
    if (z.space() != Space::Plane) throw RejectedInput("plane", "g acts on the plane");
    if (z.is_origin() || req.n == 0) return z;

    double nd = static_cast<double>(req.n);
    DDouble l0(z.log_modulus());
    double lm = (l0 + nd).to_double();
    DDouble angle = dd_frac01(DDouble(z.angle_turns()) + l0 * nd);
    return PlanePoint::from_log_modulus(Space::Plane, lm, angle.to_double());
}

PlanePoint h_apply(const PlanePoint& z) {
    if (z.space() != Space::Disk) throw RejectedInput("plane", "h maps the disk to the plane");
    if (z.is_origin()) return PlanePoint::origin(Space::Plane);
    // |h(z)| = r/(1-r), so ln|h(z)| = phi(r); the angle is untouched
    double lm = phi_from_log_modulus(DDouble(z.log_modulus())).to_double();
    return PlanePoint::from_log_modulus(Space::Plane, lm, z.angle_turns());
}

PlanePoint h_inverse(const PlanePoint& w) {
    if (w.space() != Space::Plane) throw RejectedInput("plane", "h_inverse maps the plane to the disk");
    if (w.is_origin()) return PlanePoint::origin(Space::Disk);
    double lm = clamp_disk_log(log_modulus_from_phi(DDouble(w.log_modulus())).to_double());
    return PlanePoint::from_log_modulus(Space::Disk, lm, w.angle_turns());
}

double euclidean_distance(const PlanePoint& a, const PlanePoint& b) {
    if (a.space() != b.space())
        throw RejectedInput("plane", "distance requires points of the same space");
    if (a.is_origin() && b.is_origin()) return 0.0;
    if (a.is_origin() || b.is_origin()) {
        const PlanePoint& p = a.is_origin() ? b : a;
        double r = std::exp(p.log_modulus());
        if (!std::isfinite(r)) throw NumericalRange("plane", "distance overflows double");
        return r;
    }
    // d^2 = (r1 - r2)^2 + 4 r1 r2 sin^2(pi da); both terms are cancellation-free
    double l1 = a.log_modulus(), l2 = b.log_modulus();
    if (l1 < l2) std::swap(l1, l2);
    double rdiff = std::exp(l2) * std::expm1(l1 - l2);
    double rgeo = std::exp(0.5 * (l1 + l2));
    double da = a.angle_turns() - b.angle_turns();
    da -= std::floor(da);
    if (da > 0.5) da = 1.0 - da;
    double cross = 2.0 * rgeo * std::sin(0.5 * kTwoPi * da);
    double d = std::hypot(rdiff, cross);
    if (!std::isfinite(d)) throw NumericalRange("plane", "distance overflows double");
    return d;
}

double conjugacy_residual(int radial_cells, int angular_cells, double r_max) {
    if (radial_cells < 1 || angular_cells < 1)
        throw RejectedInput("plane", "conjugacy grid needs at least one cell per axis");
    if (!(r_max > 0.0) || r_max > 1.0 - 1e-6)
        throw RejectedInput("plane", "r_max must lie in (0, 1 - 1e-6]");

    IterateRequest one{1, 32};
    double worst = 0.0;
    for (int i = 0; i < radial_cells; ++i) {
        double r = radial_cells == 1 ? 0.0 : r_max * static_cast<double>(i) / (radial_cells - 1);
        for (int j = 0; j < angular_cells; ++j) {
            double ang = static_cast<double>(j) / angular_cells;
            PlanePoint z = PlanePoint::from_modulus(Space::Disk, r, ang);
            PlanePoint left = h_apply(f_power(z, one));
            PlanePoint right = g_power(h_apply(z), one);
            auto [lx, ly] = left.to_xy();
            auto [rx, ry] = right.to_xy();
            double res = std::hypot(lx - rx, ly - ry);
            if (res > worst) worst = res;
        }
    }
    return worst;
}

} // namespace liyorke::plane
