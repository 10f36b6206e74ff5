#include "tiltbeam/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "tiltbeam/errors.hpp"

namespace tiltbeam {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be > 0");
  if (max_subdivisions < 1) throw DomainError("quadrature max_subdivisions must be >= 1");
}

namespace detail {

double bessel_j1_series(double x) {
  // sum_k (-1)^k (x/2)^(2k+1) / (k! (k+1)!)
  const long double half = static_cast<long double>(x) / 2.0L;
  const long double q = -half * half;
  long double term = half;
  long double sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + 1));
    sum += term;
    if (std::fabs(term) <= std::numeric_limits<long double>::epsilon() * std::fabs(sum) ||
        term == 0.0L)
      break;
  }
  return static_cast<double>(sum);
}

double bessel_j1_asymptotic(double x) {
  // Hankel expansion, nu = 1 (mu = 4 nu^2 = 4), truncated at the smallest term.
  const long double ax = std::fabs(static_cast<long double>(x));
  constexpr long double mu = 4.0L;
  long double p = 1.0L;
  long double q = 0.0L;
  long double term = 1.0L;
  long double last = std::numeric_limits<long double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) / (static_cast<long double>(k) * 8.0L * ax);
    const long double mag = std::fabs(term);
    if (mag >= last || mag == 0.0L) break;
    last = mag;
    // P collects even-order terms, Q odd-order terms, each with alternating sign.
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (mag < 1e-22L) break;
  }
  const long double omega = ax - 0.75L * std::numbers::pi_v<long double>;
  const long double amp = std::sqrt(2.0L / (std::numbers::pi_v<long double> * ax));
  const long double value = amp * (p * std::cos(omega) - q * std::sin(omega));
  return static_cast<double>(x < 0 ? -value : value);
}

}  // namespace detail

double bessel_j1(double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j1: argument must be finite");
  const double ax = std::fabs(x);
  const double value = ax <= detail::kBesselJ1Crossover ? detail::bessel_j1_series(ax)
                                                         : detail::bessel_j1_asymptotic(ax);
  return x < 0 ? -value : value;
}

namespace {

struct Panel {
  double a, b;
  std::complex<double> fa, fl, fm, fr, fb;  // ends, quarter points and midpoint
  std::complex<double> estimate;
  double error;
};

Panel make_panel(const ComplexIntegrand& f, double a, double b, std::complex<double> fa,
                 std::complex<double> fm, std::complex<double> fb) {
  Panel p{a, b, fa, {}, fm, {}, fb, {}, 0.0};
  const double m = 0.5 * (a + b);
  p.fl = f(0.5 * (a + m));
  p.fr = f(0.5 * (m + b));
  const double h = b - a;
  const std::complex<double> whole = h / 6.0 * (fa + 4.0 * fm + fb);
  const std::complex<double> halves = h / 12.0 * (fa + 4.0 * p.fl + 2.0 * fm + 4.0 * p.fr + fb);
  const std::complex<double> diff = halves - whole;
  p.estimate = halves + diff / 15.0;
  p.error = std::abs(diff) / 15.0;
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic order among equal errors
  }
};

}  // namespace

std::complex<double> integrate_complex(const ComplexIntegrand& f, double a, double b,
                                       const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integrate_complex: requires a <= b");
  if (a == b) return {0.0, 0.0};

  // Start from a few panels so short oscillatory integrands are not
  // accepted on a coincidentally small first error estimate.
  constexpr int kInitialPanels = 8;
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  std::vector<std::complex<double>> nodes(2 * kInitialPanels + 1);
  const double step = (b - a) / (2 * kInitialPanels);
  for (int i = 0; i <= 2 * kInitialPanels; ++i)
    nodes[i] = f(i == 2 * kInitialPanels ? b : a + i * step);
  std::complex<double> total{};
  double total_error = 0.0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double pa = a + 2 * i * step;
    const double pb = i + 1 == kInitialPanels ? b : a + 2 * (i + 1) * step;
    Panel p = make_panel(f, pa, pb, nodes[2 * i], nodes[2 * i + 1], nodes[2 * i + 2]);
    total += p.estimate;
    total_error += p.error;
    heap.push(p);
  }

  int splits = 0;
  while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    Panel worst = heap.top();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(worst.a < m && m < worst.b)) break;  // cannot resolve further in double
    if (splits >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "integrate_complex: no convergence on [" << a << ", " << b << "] after "
          << splits << " subdivisions (error bound " << total_error << ")";
      throw ConvergenceError(msg.str(), total, total_error);
    }
    heap.pop();
    Panel left = make_panel(f, worst.a, m, worst.fa, worst.fl, worst.fm);
    Panel right = make_panel(f, m, worst.b, worst.fm, worst.fr, worst.fb);
    total += left.estimate + right.estimate - worst.estimate;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }

  // Re-sum in a fixed order so the result does not carry the drift of the
  // incremental updates above.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::complex<double> sum{};
  for (const Panel& p : panels) sum += p.estimate;
  return sum;
}

}  // namespace tiltbeam
