#include "fide/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace fide {
namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (the QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = half * kXgk[i];
    const double s = f(c - x) + f(c + x);
    kronrod += kWgk[i] * s;
    if (i % 2 == 1) gauss += kWg[i / 2] * s;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                        double a, double b, double abs_tol,
                                        double rel_tol, int max_intervals) {
  std::priority_queue<Interval> queue;
  Interval whole = evaluate(f, a, b);
  double total = whole.value;
  double err = whole.error;
  queue.push(whole);
  int n = 1;
  while (n < max_intervals) {
    const double tol = abs_tol + rel_tol * std::fabs(total);
    if (err <= tol || queue.empty()) break;
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval exhausted
    Interval left = evaluate(f, worst.a, mid);
    Interval right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n;
  }
  const double tol = abs_tol + rel_tol * std::fabs(total);
  return {total, err, err <= tol, n};
}

}  // namespace fide
