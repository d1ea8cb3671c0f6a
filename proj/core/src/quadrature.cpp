#include "sfk/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace sfk {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK values)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double gauss = kWg[3] * fc;
  double kron = kWgk[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fsum = f(c - x) + f(c + x);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  double err = std::abs(kron - gauss);
  // QUADPACK-style sharpening of the error estimate
  err = std::min(err, std::pow(200.0 * err, 1.5));
  return {kron, err};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                     int depth, const QuadratureOptions& opt) {
  PanelResult r = gk15(f, a, b);
  if (r.error <= tol || r.error <= std::abs(r.kronrod) * opt.rel_tol) return r.kronrod;
  if (depth >= opt.max_depth) {
    std::ostringstream os;
    os << "quadrature did not converge on [" << a << ", " << b << "]: error estimate " << r.error
       << " exceeds tolerance " << tol << " at depth " << depth;
    throw QuadratureError(os.str());
  }
  const double m = 0.5 * (a + b);
  return integrate_rec(f, a, m, 0.5 * tol, depth + 1, opt) +
         integrate_rec(f, m, b, 0.5 * tol, depth + 1, opt);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, opt);
  if (!std::isfinite(a) || !std::isfinite(b))
    throw QuadratureError("quadrature requires finite endpoints");
  return integrate_rec(f, a, b, opt.abs_tol, 0, opt);
}

}  // namespace sfk
