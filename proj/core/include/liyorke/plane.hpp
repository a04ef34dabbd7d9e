#pragma once

#include <cstdint>
#include <utility>

#include "liyorke/ddouble.hpp"

namespace liyorke::plane {

enum class Space { Disk, Plane };

// Point of the open unit disk or of the punctured plane, stored in
// log-polar form: ln|z| plus the argument in turns (argument / 2pi).
// The origin is flagged separately so the log never has to represent it.
// Disk points keep log_modulus strictly negative.
class PlanePoint {
public:
    static PlanePoint origin(Space space);
    static PlanePoint from_log_modulus(Space space, double log_modulus, double angle_turns);
    static PlanePoint from_modulus(Space space, double modulus, double angle_turns);
    // disk point with phi(r) = ln(r/(1-r)) equal to the given value
    static PlanePoint disk_from_phi(DDouble phi_value, double angle_turns);

    bool is_origin() const { return origin_; }
    Space space() const { return space_; }
    double log_modulus() const;
    double angle_turns() const;
    double modulus() const;
    // Cartesian coordinates; throws NumericalRange if the modulus overflows
    std::pair<double, double> to_xy() const;

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;

private:
    PlanePoint() = default;
    Space space_ = Space::Disk;
    bool origin_ = true;
    double log_modulus_ = 0.0;
    double angle_turns_ = 0.0;
};

struct IterateRequest {
    long long n = 1;
    int precision_digits = 32;

    // |n| is capped at 1e7; indices past 1e4 require the extended-precision
    // angle path (>= 30 digits)
    void validate() const;
};

// phi(r) = ln(r / (1-r)), increasing bijection (0,1) -> R
DDouble phi(DDouble r);
double phi(double r);
// phi^{-1}(t) = 1 / (1 + e^{-t}), evaluated without overflow for any t
DDouble phi_inverse(DDouble t);
double phi_inverse(double t);

// phi of a disk point given ln r; stable for r near 0 and near 1
DDouble phi_from_log_modulus(DDouble log_modulus);
// ln r of the disk point with the given phi value
DDouble log_modulus_from_phi(DDouble phi_value);

// n-th iterate of the disk homeomorphism
//   f(z) = e z / (e|z| - |z| + 1) * e^{2 pi i ln(|z|/(1-|z|))},  f(0) = 0.
// In log-polar form the modulus obeys r' = r / (r + (1-r) e^{-n}) and the
// angle advances by n * phi(r) turns.
PlanePoint f_power(const PlanePoint& z, const IterateRequest& req);

// n-th iterate of the plane homeomorphism
//   g(z) = e z * e^{2 pi i ln|z|},  g(0) = 0.
// ln|z| advances by n; the angle advances by n * ln|z| turns.
PlanePoint g_power(const PlanePoint& z, const IterateRequest& req);

// conjugating homeomorphism h(z) = z / (1 - |z|) and its inverse
PlanePoint h_apply(const PlanePoint& z);
PlanePoint h_inverse(const PlanePoint& w);

// Euclidean distance; both points must live in the same space
double euclidean_distance(const PlanePoint& a, const PlanePoint& b);

// max over a polar grid (radial_cells x angular_cells, r <= r_max, origin
// included) of |h(f(z)) - g(h(z))| in Cartesian coordinates
double conjugacy_residual(int radial_cells, int angular_cells, double r_max);

} // namespace liyorke::plane
