#pragma once

// Independent reference values for the tests. The quad-precision recurrence
// shares no code with the library; the frozen constants were computed with
// mpmath at 50 digits.

#include <quadmath.h>

#include <array>
#include <utility>

namespace gaussquad::testing {

using quad = __float128;

/// M_j[alpha, b] by integration by parts, upward from M_0 and M_1:
///   M_j = ((j-1) M_{j-2} - b^(j-1) exp(-alpha^2 b^2)) / (2 alpha^2).
/// The subtraction cancels for small alpha b; 113-bit arithmetic keeps well
/// over 16 digits for the degrees tested here.
inline double moment_recurrence_oracle(int j, double alpha, double b) {
  const quad a = alpha;
  const quad bq = b;
  const quad a2 = a * a;
  const quad e = expq(-a2 * bq * bq);
  const quad sqrt_pi = sqrtq(acosq(static_cast<quad>(-1)));
  quad m_prev = sqrt_pi * erfq(a * bq) / (2 * a);  // M_0
  if (j == 0) return static_cast<double>(m_prev);
  quad m_cur = (1 - e) / (2 * a2);  // M_1
  if (j == 1) return static_cast<double>(m_cur);
  quad m_even = m_prev;
  quad m_odd = m_cur;
  quad bpow = bq;  // b^(k-1) for k = 2
  for (int k = 2; k <= j; ++k) {
    quad& target = (k % 2 == 0) ? m_even : m_odd;
    target = ((k - 1) * target - bpow * e) / (2 * a2);
    bpow *= bq;
  }
  return static_cast<double>(j % 2 == 0 ? m_even : m_odd);
}

// erf at 50 points: x, erf(x).
inline constexpr std::array<std::pair<double, double>, 50> kErfTable = {{
    {1e-12, 1.1283791670955125512e-12}, {1e-06, 1.1283791670951363964e-6},
    {0.01, 0.011283415555849617151},    {0.1, 0.1124629160182848984},
    {0.2, 0.22270258921047846618},      {0.3, 0.32862675945912741619},
    {0.4, 0.42839235504666847645},      {0.46875, 0.49261347321793799159},
    {0.46876, 0.49262253110684652927},  {0.5, 0.52049987781304653768},
    {0.6, 0.60385609084792590508},      {0.7, 0.67780119383741844228},
    {0.8, 0.74210096470766051259},      {0.9, 0.79690821242283213966},
    {1.0, 0.84270079294971486934},      {1.1, 0.88020506957408172966},
    {1.25, 0.92290012825645823014},     {1.5, 0.96610514647531072707},
    {1.75, 0.98667167121918244377},     {2.0, 0.99532226501895273416},
    {2.25, 0.9985372834133188483},      {2.5, 0.99959304798255504106},
    {2.75, 0.99989937807788036316},     {3.0, 0.99997790950300141456},
    {3.25, 0.99999569722053632488},     {3.5, 0.99999925690162765859},
    {3.75, 0.9999998862727434302},      {3.999, 0.99999998445525050901},
    {4.0, 0.99999998458274209972},      {4.001, 0.99999998470921782675},
    {4.25, 0.99999999814942586261},     {4.5, 0.99999999980338395585},
    {4.75, 0.99999999998151495228},     {5.0, 0.99999999999846254021},
    {5.25, 0.99999999999988689687},     {5.5, 0.99999999999999264215},
    {5.75, 0.99999999999999957679},     {5.9, 0.9999999999999999281},
    {6.0, 0.99999999999999997848},      {6.5, 0.99999999999999999996},
    {-0.05, -0.056371977797016626955},  {-0.35, -0.37938205356231029813},
    {-0.75, -0.7111556336535151316},    {-1.3, -0.93400794494065244585},
    {-2.2, -0.99813715370201811014},    {-3.3, -0.99999694229020356183},
    {-4.4, -0.99999999951082897294},    {-5.5, -0.99999999999999264215},
    {0.123456789, 0.1386015450556226958}, {2.718281828, 0.99987906895958713836},
}};

// M_5[1, 1].
inline constexpr double kMoment5Alpha1B1 = 0.08030139707139419601119057;
// w_3 for alpha = 2, beta = -1.5.
inline constexpr double kW3Alpha2BetaM15 = -0.04452459727928967087305635;
// w_0..w_6 for alpha = 3, beta = 0.4.
inline constexpr std::array<double, 7> kMomentsAlpha3Beta04 = {
    0.5875951857271006451369625,  0.2328623035536508748866406,  0.1236133252436012223891597,
    0.07314314864399008158356816, 0.04768370716883151385648175, 0.03315174516234100629346476,
    0.02433039911580265519217117};
// Integral over [0, 1] of x exp(-2500 (x - 0.5)^2).
inline constexpr double kShiftedXAlpha50 = 0.01772453850905516027298167;

}  // namespace gaussquad::testing
