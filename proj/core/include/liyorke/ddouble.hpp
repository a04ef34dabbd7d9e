#pragma once

#include <cmath>
#include <cstdint>

namespace liyorke {

// Double-double value: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving roughly 32 significant decimal digits. This is the working
// precision for angle accumulation, continued-fraction certification and
// schedule verification; plain doubles are not enough once orbit indices
// reach 1e4 and beyond.
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h), lo(0.0) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    static DDouble from_int(std::int64_t n) {
        // 64-bit integers do not always fit a single double
        double h = static_cast<double>(n);
        double l = static_cast<double>(n - static_cast<std::int64_t>(h));
        return {h, l};
    }

    double to_double() const { return hi + lo; }
    bool is_finite() const { return std::isfinite(hi) && std::isfinite(lo); }
};

namespace detail {

inline DDouble quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

} // namespace detail

inline DDouble operator+(DDouble a, DDouble b) {
    DDouble s = detail::two_sum(a.hi, b.hi);
    DDouble t = detail::two_sum(a.lo, b.lo);
    double c = s.lo + t.hi;
    DDouble v = detail::quick_two_sum(s.hi, c);
    double w = t.lo + v.lo;
    return detail::quick_two_sum(v.hi, w);
}

inline DDouble operator+(DDouble a, double b) {
    DDouble s = detail::two_sum(a.hi, b);
    double v = a.lo + s.lo;
    return detail::quick_two_sum(s.hi, v);
}

inline DDouble operator+(double a, DDouble b) { return b + a; }

inline DDouble operator-(DDouble a) { return {-a.hi, -a.lo}; }
inline DDouble operator-(DDouble a, DDouble b) { return a + (-b); }
inline DDouble operator-(DDouble a, double b) { return a + (-b); }
inline DDouble operator-(double a, DDouble b) { return DDouble(a) + (-b); }

inline DDouble operator*(DDouble a, DDouble b) {
    DDouble p = detail::two_prod(a.hi, b.hi);
    double t = a.hi * b.lo + a.lo * b.hi + p.lo;
    return detail::quick_two_sum(p.hi, t);
}

inline DDouble operator*(DDouble a, double b) {
    DDouble p = detail::two_prod(a.hi, b);
    double t = std::fma(a.lo, b, p.lo);
    return detail::quick_two_sum(p.hi, t);
}

inline DDouble operator*(double a, DDouble b) { return b * a; }

inline DDouble operator/(DDouble a, DDouble b) {
    double q1 = a.hi / b.hi;
    DDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    DDouble q = detail::quick_two_sum(q1, q2);
    return q + q3;
}

inline DDouble operator/(DDouble a, double b) { return a / DDouble(b); }
inline DDouble operator/(double a, DDouble b) { return DDouble(a) / b; }

inline DDouble& operator+=(DDouble& a, DDouble b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, DDouble b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, DDouble b) { return a = a * b; }
inline DDouble& operator/=(DDouble& a, DDouble b) { return a = a / b; }

inline bool operator==(DDouble a, DDouble b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DDouble a, DDouble b) { return !(a == b); }
inline bool operator<(DDouble a, DDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DDouble a, DDouble b) { return b < a; }
inline bool operator<=(DDouble a, DDouble b) { return !(b < a); }
inline bool operator>=(DDouble a, DDouble b) { return !(a < b); }

inline DDouble dd_abs(DDouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DDouble dd_ldexp(DDouble a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

DDouble dd_floor(DDouble a);
// fractional part reduced into [0, 1)
DDouble dd_frac01(DDouble a);
DDouble dd_sqrt(DDouble a);
DDouble dd_exp(DDouble a);
DDouble dd_log(DDouble a);
DDouble dd_expm1(DDouble a);
DDouble dd_log1p(DDouble a);
DDouble dd_pow_int(DDouble base, std::int64_t n);

// frozen high-precision constants
DDouble dd_ln2();
DDouble dd_sqrt2();
DDouble dd_golden();
DDouble dd_e();

} // namespace liyorke
