#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <stdexcept>
#include <vector>

namespace mexp {

// Working precisions for the threshold derivation. 60 decimal digits is the
// baseline; 120 is used to confirm that the results are precision-safe.
using Real60 =
    boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;
using Real120 =
    boost::multiprecision::number<boost::multiprecision::cpp_dec_float<120>>;

// Power series sum_i c[i] t^i truncated at a fixed order c.size()-1. All
// operations preserve the truncation order of their inputs.
template <class Real>
struct PowerSeries {
    std::vector<Real> c;
    int order() const { return int(c.size()) - 1; }
};

template <class Real>
PowerSeries<Real> series_product(const PowerSeries<Real>& a,
                                 const PowerSeries<Real>& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries<Real> out;
    out.c.assign(n + 1, Real(0));
    for (int i = 0; i <= n; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

template <class Real>
PowerSeries<Real> series_divide(const PowerSeries<Real>& num,
                                const PowerSeries<Real>& den) {
    if (den.c.empty() || den.c[0] == 0)
        throw std::invalid_argument("series division needs a unit constant term");
    const int n = std::min(num.order(), den.order());
    PowerSeries<Real> q;
    q.c.assign(n + 1, Real(0));
    for (int k = 0; k <= n; ++k) {
        Real s = num.c[k];
        for (int j = 0; j < k; ++j) s -= q.c[j] * den.c[k - j];
        q.c[k] = s / den.c[0];
    }
    return q;
}

// log of a series with constant term 1, via the recurrence obtained from
// integrating l' = p'/p term by term:
//   k l_k = k p_k - sum_{j=1}^{k-1} j l_j p_{k-j}
template <class Real>
PowerSeries<Real> series_log(const PowerSeries<Real>& p) {
    if (p.c.empty() || p.c[0] != 1)
        throw std::invalid_argument("series log needs constant term 1");
    const int n = p.order();
    PowerSeries<Real> l;
    l.c.assign(n + 1, Real(0));
    for (int k = 1; k <= n; ++k) {
        Real s = Real(k) * p.c[k];
        for (int j = 1; j < k; ++j) s -= Real(j) * l.c[j] * p.c[k - j];
        l.c[k] = s / Real(k);
    }
    return l;
}

template <class Real>
PowerSeries<Real> series_exp_neg(int order) {
    PowerSeries<Real> e;
    e.c.resize(order + 1);
    e.c[0] = 1;
    for (int i = 1; i <= order; ++i) e.c[i] = -e.c[i - 1] / Real(i);
    return e;
}

/// log(e^{-t} r(t)) at the truncation order of r; r must have r(0) = 1.
template <class Real>
PowerSeries<Real> series_log1p_composed(const PowerSeries<Real>& r) {
    if (r.c.empty() || r.c[0] != 1)
        throw std::invalid_argument("approximant series must have constant term 1");
    return series_log(series_product(series_exp_neg<Real>(r.order()), r));
}

/// Remainder series of the degree-m Taylor approximant of exp, truncated at
/// order N (>= m + 150 keeps the tail negligible over the solve bracket).
template <class Real>
PowerSeries<Real> taylor_remainder_series(int m, int N) {
    if (m < 1) throw std::invalid_argument("degree must be >= 1");
    PowerSeries<Real> r;
    r.c.assign(N + 1, Real(0));
    Real inv_fact = 1;
    r.c[0] = 1;
    for (int i = 1; i <= m; ++i) {
        inv_fact /= Real(i);
        r.c[i] = inv_fact;
    }
    return series_log1p_composed(r);
}

/// Remainder series of the order-2m diagonal Pade approximant
/// p_m(t)/p_m(-t), truncated at order N.
template <class Real>
PowerSeries<Real> pade_remainder_series(int m, int N) {
    if (m < 1) throw std::invalid_argument("order must be >= 1");
    // exact coefficients (2m-j)! m! / ((2m)! (m-j)! j!) built in Real
    std::vector<Real> b(m + 1);
    b[0] = 1;
    for (int j = 0; j < m; ++j)
        b[j + 1] = b[j] * Real(m - j) / (Real(2 * m - j) * Real(j + 1));
    PowerSeries<Real> num, den;
    num.c.assign(N + 1, Real(0));
    den.c.assign(N + 1, Real(0));
    for (int j = 0; j <= m; ++j) {
        num.c[j] = b[j];
        den.c[j] = (j % 2 == 0) ? b[j] : -b[j];
    }
    return series_log1p_composed(series_divide(num, den));
}

/// Positive root of sum_i |c_i| theta^(i-1) = u. The left side is strictly
/// increasing, so bisection on [0, 20] converges; throws when the bracket
/// top does not exceed u (truncation order too small).
template <class Real>
double solve_theta(const PowerSeries<Real>& rho, double u) {
    std::vector<Real> f(rho.c.size());
    for (std::size_t i = 0; i < rho.c.size(); ++i) f[i] = abs(rho.c[i]);
    const Real target = Real(u);
    auto g = [&](const Real& t) {
        Real s = 0;
        for (int i = rho.order(); i >= 1; --i) s = s * t + f[i];
        return s - target;
    };
    Real lo = 0, hi = 20;
    if (!(g(lo) < 0) || !(g(hi) > 0))
        throw std::runtime_error("no sign change on the theta bracket");
    for (int it = 0; it < 220; ++it) {
        const Real mid = (lo + hi) / 2;
        if (g(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return double((lo + hi) / 2);
}

}  // namespace mexp
