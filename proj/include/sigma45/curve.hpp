#pragma once

#include "sigma45/poly.hpp"
#include "sigma45/series.hpp"

#include <array>

namespace sigma45 {

// The cyclic (4,5) curve s^4 = t^5 + mu4 t^4 + mu3 t^3 + mu2 t^2 + mu1 t + mu0,
// genus 6, one branch point at infinity with local coordinate xi = t^{-1/4}.
namespace curve {

inline constexpr int kGenus = 6;
inline constexpr std::array<int, 6> kUWeight = {11, 7, 6, 3, 2, 1};

// exponents (a,b): g_i(t,s) = t^a s^b
inline constexpr std::array<std::pair<int, int>, 6> kHoloNumerator = {
    std::pair{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};

// (1+g)^(num/4) by the binomial series, exact rationals
ScalarSeries quarter_power(const ScalarSeries& g, int num_quarters);

// t = xi^-4 exactly
ScalarSeries t_at_infinity(int order);
// s = xi^-5 (1 + 1/4 mu4 xi^4 + ...), principal branch (leading +1)
ScalarSeries s_at_infinity(int order);

// du_i/dxi as an xi-series (du_i = g_i/(4 s^3) dt)
ScalarSeries du_infinity(int i, int order);
// u_i(xi): term-wise primitive of du_infinity with zero constant
ScalarSeries abel_series(int i, int order);
// d^2 u_i / dxi^2
ScalarSeries second_derivative_series(int i, int order);

// s(t) on sheet N: s(0) = iota^N rho, s^4 = curve polynomial
ScalarSeries s_at_origin(int sheet, int order);

// the curve polynomial evaluated on a t-series
ScalarSeries curve_poly(const ScalarSeries& t);

// u_i -> (i u1, i u2, -u3, i u4, -u5, -i u6) applied to a u-polynomial
GradedPoly cyclic_action(const GradedPoly& p);

// second kind numerators h_1..h_6 over the (t,s) signature
std::array<GradedPoly, 6> second_kind_numerators();
std::shared_ptr<const Signature> ts_signature();

} // namespace curve
} // namespace sigma45
