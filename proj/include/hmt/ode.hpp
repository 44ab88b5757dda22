#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmt {

// Explicit Runge-Kutta 8(5,3) pair of Dormand & Prince (the dop853 scheme),
// 12-stage core with the 5th/3rd order embedded error estimate.
// State is a fixed-size array of complex components; integration runs in
// either direction and stops exactly at t1.
struct OdeStats {
  int steps = 0;
  int rejected = 0;
};

namespace dop853_detail {

inline constexpr double c2 = 0.526001519587677318785587544488e-01;
inline constexpr double c3 = 0.789002279381515978178381316732e-01;
inline constexpr double c4 = 0.118350341907227396726757197510e+00;
inline constexpr double c5 = 0.281649658092772603273242802490e+00;
inline constexpr double c6 = 0.333333333333333333333333333333e+00;
inline constexpr double c7 = 0.25e+00;
inline constexpr double c8 = 0.307692307692307692307692307692e+00;
inline constexpr double c9 = 0.651282051282051282051282051282e+00;
inline constexpr double c10 = 0.6e+00;
inline constexpr double c11 = 0.857142857142857142857142857142e+00;

inline constexpr double a21 = 5.26001519587677318785587544488e-2;
inline constexpr double a31 = 1.97250569845378994544595329183e-2;
inline constexpr double a32 = 5.91751709536136983633785987549e-2;
inline constexpr double a41 = 2.95875854768068491816892993775e-2;
inline constexpr double a43 = 8.87627564304205475450678981324e-2;
inline constexpr double a51 = 2.41365134159266685502369798665e-1;
inline constexpr double a53 = -8.84549479328286085344864962717e-1;
inline constexpr double a54 = 9.24834003261792003115737966543e-1;
inline constexpr double a61 = 3.7037037037037037037037037037e-2;
inline constexpr double a64 = 1.70828608729473871279604482173e-1;
inline constexpr double a65 = 1.25467687566822425016691814123e-1;
inline constexpr double a71 = 3.7109375e-2;
inline constexpr double a74 = 1.70252211019544039314978060272e-1;
inline constexpr double a75 = 6.02165389804559606850219397283e-2;
inline constexpr double a76 = -1.7578125e-2;
inline constexpr double a81 = 3.70920001185047927108779319836e-2;
inline constexpr double a84 = 1.70383925712239993810214054705e-1;
inline constexpr double a85 = 1.07262030446373284651809199168e-1;
inline constexpr double a86 = -1.53194377486244017527936158236e-2;
inline constexpr double a87 = 8.27378916381402288758473766002e-3;
inline constexpr double a91 = 6.24110958716075717114429577812e-1;
inline constexpr double a94 = -3.36089262944694129406857109825e0;
inline constexpr double a95 = -8.68219346841726006818189891453e-1;
inline constexpr double a96 = 2.75920996994467083049415600797e1;
inline constexpr double a97 = 2.01540675504778934086186788979e1;
inline constexpr double a98 = -4.34898841810699588477366255144e1;
inline constexpr double a101 = 4.77662536438264365890433908527e-1;
inline constexpr double a104 = -2.48811461997166764192642586468e0;
inline constexpr double a105 = -5.90290826836842996371446475743e-1;
inline constexpr double a106 = 2.12300514481811942347288949897e1;
inline constexpr double a107 = 1.52792336328824235832596922938e1;
inline constexpr double a108 = -3.32882109689848629194453265587e1;
inline constexpr double a109 = -2.03312017085086261358222928593e-2;
inline constexpr double a111 = -9.3714243008598732571704021658e-1;
inline constexpr double a114 = 5.18637242884406370830023853209e0;
inline constexpr double a115 = 1.09143734899672957818500254654e0;
inline constexpr double a116 = -8.14978701074692612513997267357e0;
inline constexpr double a117 = -1.85200656599969598641566180701e1;
inline constexpr double a118 = 2.27394870993505042818970056734e1;
inline constexpr double a119 = 2.49360555267965238987089396762e0;
inline constexpr double a1110 = -3.0467644718982195003823669022e0;
inline constexpr double a121 = 2.27331014751653820792359768449e0;
inline constexpr double a124 = -1.05344954667372501984066689879e1;
inline constexpr double a125 = -2.00087205822486249909675718444e0;
inline constexpr double a126 = -1.79589318631187989172765950534e1;
inline constexpr double a127 = 2.79488845294199600508499808837e1;
inline constexpr double a128 = -2.85899827713502369474065508674e0;
inline constexpr double a129 = -8.87285693353062954433549289258e0;
inline constexpr double a1210 = 1.23605671757943030647266201528e1;
inline constexpr double a1211 = 6.43392746015763530355970484046e-1;

inline constexpr double b1 = 5.42937341165687622380535766363e-2;
inline constexpr double b6 = 4.45031289275240888144113950566e0;
inline constexpr double b7 = 1.89151789931450038304281599044e0;
inline constexpr double b8 = -5.8012039600105847814672114227e0;
inline constexpr double b9 = 3.1116436695781989440891606237e-1;
inline constexpr double b10 = -1.52160949662516078556178806805e-1;
inline constexpr double b11 = 2.01365400804030348374776537501e-1;
inline constexpr double b12 = 4.47106157277725905176885569043e-2;

inline constexpr double bhh1 = 0.244094488188976377952755905512e+00;
inline constexpr double bhh2 = 0.733846688281611857341361741547e+00;
inline constexpr double bhh3 = 0.220588235294117647058823529412e-01;

inline constexpr double er1 = 0.1312004499419488073250102996e-01;
inline constexpr double er6 = -0.1225156446376204440720569753e+01;
inline constexpr double er7 = -0.4957589496572501915214079952e+00;
inline constexpr double er8 = 0.1664377182454986536961530415e+01;
inline constexpr double er9 = -0.3503288487499736816886487290e+00;
inline constexpr double er10 = 0.3341791187130174790297318841e+00;
inline constexpr double er11 = 0.8192320648511571246570742613e-01;
inline constexpr double er12 = -0.2235530786388629525884427845e-01;

} // namespace dop853_detail

template <std::size_t N>
using OdeState = std::array<std::complex<double>, N>;

// Integrates y' = f(t, y) from t0 to t1. f has signature
// void f(double t, const OdeState<N>& y, OdeState<N>& dydt).
template <std::size_t N, typename F>
OdeStats ode_integrate(F&& f, double t0, double t1, OdeState<N>& y,
                       double rtol = 1e-12, double atol = 1e-14,
                       int max_steps = 2000000) {
  using namespace dop853_detail;
  using C = std::complex<double>;
  using State = OdeState<N>;

  if (t0 == t1) return {};
  const double dir = t1 > t0 ? 1.0 : -1.0;

  State k1, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, yw;
  f(t0, y, k1);

  // initial step from the magnitude of y and y'
  double h;
  {
    double dn = 0.0, yn = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = atol + rtol * std::abs(y[i]);
      dn += std::norm(k1[i] / sc);
      yn += std::norm(y[i] / sc);
    }
    h = (dn > 0.0 && yn > 0.0) ? 0.01 * std::sqrt(yn / dn) : 1e-6;
    h = std::min(h, std::abs(t1 - t0));
  }

  double t = t0;
  double errold = 1e-4;
  OdeStats stats;
  bool last_rejected = false;

  while (dir * (t1 - t) > 0.0) {
    if (stats.steps + stats.rejected >= max_steps)
      throw std::runtime_error("ode_integrate: step limit exceeded at t = " + std::to_string(t));
    if (h < 1e-14 * (1.0 + std::abs(t)))
      throw std::runtime_error("ode_integrate: step size underflow at t = " + std::to_string(t));
    if (dir * (t + dir * h - t1) > 0.0) h = std::abs(t1 - t);
    const double hs = dir * h;

    auto stage = [&](double c, const State& yy, State& k) { f(t + c * hs, yy, k); };
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a21 * k1[i]);
    stage(c2, yw, k2);
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    stage(c3, yw, k3);
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a41 * k1[i] + a43 * k3[i]);
    stage(c4, yw, k4);
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a51 * k1[i] + a53 * k3[i] + a54 * k4[i]);
    stage(c5, yw, k5);
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a61 * k1[i] + a64 * k4[i] + a65 * k5[i]);
    stage(c6, yw, k6);
    for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + hs * (a71 * k1[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    stage(c7, yw, k7);
    for (std::size_t i = 0; i < N; ++i)
      yw[i] = y[i] + hs * (a81 * k1[i] + a84 * k4[i] + a85 * k5[i] + a86 * k6[i] + a87 * k7[i]);
    stage(c8, yw, k8);
    for (std::size_t i = 0; i < N; ++i)
      yw[i] = y[i] + hs * (a91 * k1[i] + a94 * k4[i] + a95 * k5[i] + a96 * k6[i] + a97 * k7[i] + a98 * k8[i]);
    stage(c9, yw, k9);
    for (std::size_t i = 0; i < N; ++i)
      yw[i] = y[i] + hs * (a101 * k1[i] + a104 * k4[i] + a105 * k5[i] + a106 * k6[i] + a107 * k7[i] +
                           a108 * k8[i] + a109 * k9[i]);
    stage(c10, yw, k10);
    for (std::size_t i = 0; i < N; ++i)
      yw[i] = y[i] + hs * (a111 * k1[i] + a114 * k4[i] + a115 * k5[i] + a116 * k6[i] + a117 * k7[i] +
                           a118 * k8[i] + a119 * k9[i] + a1110 * k10[i]);
    stage(c11, yw, k11);
    for (std::size_t i = 0; i < N; ++i)
      yw[i] = y[i] + hs * (a121 * k1[i] + a124 * k4[i] + a125 * k5[i] + a126 * k6[i] + a127 * k7[i] +
                           a128 * k8[i] + a129 * k9[i] + a1210 * k10[i] + a1211 * k11[i]);
    stage(1.0, yw, k12);

    State sum8, ynew;
    for (std::size_t i = 0; i < N; ++i) {
      sum8[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] + b10 * k10[i] +
                b11 * k11[i] + b12 * k12[i];
      ynew[i] = y[i] + hs * sum8[i];
    }

    // error scaled against the largest state component; oscillatory solutions
    // cross zero componentwise, so per-component scales would stall the step
    double ymax = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      ymax = std::max({ymax, std::abs(y[i]), std::abs(ynew[i])});
    const double sc = atol + rtol * ymax;
    double err5 = 0.0, err3 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const C e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] +
                   er10 * k10[i] + er11 * k11[i] + er12 * k12[i];
      const C e3 = sum8[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
      err5 += std::norm(e5 / sc);
      err3 += std::norm(e3 / sc);
    }
    double deno = err5 + 0.01 * err3;
    if (deno <= 0.0) deno = 1.0;
    const double err = h * err5 / std::sqrt(N * deno);

    if (err <= 1.0) {
      t += hs;
      y = ynew;
      f(t, y, k1);
      ++stats.steps;
      double scale = err > 0.0 ? 0.9 * std::pow(err, -0.125) * std::pow(errold, 0.0) : 6.0;
      scale = std::min(6.0, std::max(0.333, scale));
      if (last_rejected) scale = std::min(scale, 1.0);
      h *= scale;
      errold = std::max(err, 1e-4);
      last_rejected = false;
    } else {
      ++stats.rejected;
      h *= std::max(0.333, 0.9 * std::pow(err, -0.125));
      last_rejected = true;
    }
  }
  return stats;
}

} // namespace hmt
