#include "liyorke/ddouble.hpp"

#include <limits>

namespace liyorke {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

} // namespace

DDouble dd_floor(DDouble a) {
    double fh = std::floor(a.hi);
    if (fh != a.hi) {
        // hi non-integral implies ulp(hi) < 1, so lo cannot move the floor
        return {fh, 0.0};
    }
    double fl = std::floor(a.lo);
    return detail::two_sum(fh, fl);
}

DDouble dd_frac01(DDouble a) {
    DDouble f = a - dd_floor(a);
    if (f.hi >= 1.0) f = f - 1.0;
    if (f.hi < 0.0) f = f + 1.0;
    if (f.hi >= 1.0) f = {0.0, 0.0};
    if (f.hi < 0.0) f = {0.0, 0.0};
    return f;
}

DDouble dd_sqrt(DDouble a) {
    if (a.hi < 0.0) return {kNan, 0.0};
    if (a.hi == 0.0) return {0.0, 0.0};
    DDouble y(std::sqrt(a.hi));
    y = (y + a / y) * 0.5;
    y = (y + a / y) * 0.5;
    return y;
}

DDouble dd_exp(DDouble a) {
    if (a.hi > 709.8) return {kInf, 0.0};
    if (a.hi < -745.2) return {0.0, 0.0};

    // a = k ln2 + r, |r| <= ln2/2; then e^r via Taylor on r/2^6
    double kd = std::nearbyint(a.hi / 0.6931471805599453);
    int k = static_cast<int>(kd);
    DDouble r = a - dd_ln2() * kd;
    r = dd_ldexp(r, -6);

    DDouble sum(1.0);
    DDouble term(1.0);
    for (int i = 1; i <= 14; ++i) {
        term = term * r / static_cast<double>(i);
        sum += term;
    }
    for (int i = 0; i < 6; ++i) sum = sum * sum;
    return dd_ldexp(sum, k);
}

DDouble dd_log(DDouble a) {
    if (a.hi <= 0.0) return {kNan, 0.0};
    DDouble y(std::log(a.hi));
    // Newton on e^y = a; one step squares the accuracy, second washes out
    // rounding in dd_exp
    y = y + a * dd_exp(-y) - 1.0;
    y = y + a * dd_exp(-y) - 1.0;
    return y;
}

DDouble dd_expm1(DDouble a) {
    double ad = a.to_double();
    if (std::fabs(ad) > 0.34) return dd_exp(a) - 1.0;
    // sum_{n>=1} a^n / n!
    DDouble sum = a;
    DDouble term = a;
    for (int i = 2; i <= 27; ++i) {
        term = term * a / static_cast<double>(i);
        sum += term;
    }
    return sum;
}

DDouble dd_log1p(DDouble a) {
    double ad = a.to_double();
    if (ad <= -1.0) return {kNan, 0.0};
    if (std::fabs(ad) > 0.4) return dd_log(DDouble(1.0) + a);
    // log(1+a) = 2 atanh(a / (2+a))
    DDouble t = a / (DDouble(2.0) + a);
    DDouble t2 = t * t;
    DDouble sum = t;
    DDouble pw = t;
    for (int i = 1; i <= 23; ++i) {
        pw = pw * t2;
        sum += pw / static_cast<double>(2 * i + 1);
    }
    return sum + sum;
}

DDouble dd_pow_int(DDouble base, std::int64_t n) {
    if (n == 0) return DDouble(1.0);
    bool invert = n < 0;
    std::uint64_t e = invert ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    DDouble acc(1.0);
    DDouble b = base;
    while (e != 0) {
        if (e & 1u) acc = acc * b;
        e >>= 1u;
        if (e != 0) b = b * b;
    }
    return invert ? DDouble(1.0) / acc : acc;
}

DDouble dd_ln2() { return {0.6931471805599453, 2.3190468138462996e-17}; }

DDouble dd_sqrt2() {
    static const DDouble v = dd_sqrt(DDouble(2.0));
    return v;
}

DDouble dd_golden() {
    static const DDouble v = (dd_sqrt(DDouble(5.0)) + 1.0) * 0.5;
    return v;
}

DDouble dd_e() {
    static const DDouble v = dd_exp(DDouble(1.0));
    return v;
}

} // namespace liyorke
