#include "dimcert/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dimcert/rounding.hpp"

namespace dimcert {

bool IntegerPolynomial::monic() const {
  return !coefficients.empty() && std::abs(coefficients.front()) == 1;
}

bool IntegerPolynomial::palindromic() const {
  const std::size_t n = coefficients.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coefficients[i] != coefficients[n - 1 - i]) return false;
  return true;
}

void IntegerPolynomial::validate() const {
  if (degree() < 1) throw std::invalid_argument("polynomial degree must be >= 1");
  if (coefficients.front() == 0)
    throw std::invalid_argument("leading coefficient must be nonzero");
}

std::string to_string(AlgebraicKind k) {
  switch (k) {
    case AlgebraicKind::pisot: return "pisot";
    case AlgebraicKind::salem: return "salem";
    case AlgebraicKind::hyperbolic: return "hyperbolic";
    default: return "other";
  }
}

namespace {

std::complex<double> horner(const std::vector<double>& c,
                            std::complex<double> z) {
  std::complex<double> acc = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * z + c[i];
  return acc;
}

std::complex<double> horner_derivative(const std::vector<double>& c,
                                       std::complex<double> z) {
  std::complex<double> acc = 0.0, d = 0.0;
  for (double ci : c) {
    d = d * z + acc;
    acc = acc * z + ci;
  }
  return d;
}

long double horner_ld(const std::vector<std::int64_t>& c, long double x) {
  long double acc = static_cast<long double>(c.front());
  for (std::size_t i = 1; i < c.size(); ++i)
    acc = acc * x + static_cast<long double>(c[i]);
  return acc;
}

// Newton polish in extended precision; returns NaN if it does not settle.
long double newton_polish(const IntegerPolynomial& p, long double x) {
  const auto n = p.coefficients.size();
  std::vector<std::int64_t> dc(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    dc[i] = p.coefficients[i] *
            static_cast<std::int64_t>(p.degree() - static_cast<std::int64_t>(i));
  for (int it = 0; it < 100; ++it) {
    const long double fx = horner_ld(p.coefficients, x);
    const long double dfx = horner_ld(dc, x);
    if (dfx == 0.0L) return std::numeric_limits<long double>::quiet_NaN();
    const long double step = fx / dfx;
    x -= step;
    if (std::abs(step) <= 1e-17L * (1.0L + std::abs(x))) return x;
  }
  return std::numeric_limits<long double>::quiet_NaN();
}

}  // namespace

std::vector<RootEstimate> find_roots(const IntegerPolynomial& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<double> c(p.coefficients.begin(), p.coefficients.end());

  // Initial guesses on a circle inside the Cauchy bound, with an angular
  // offset that avoids landing on the real axis for even n.
  double bound = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    bound = std::max(bound, std::abs(c[i] / c[0]));
  const double r0 = 0.5 * (1.0 + bound);
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) /
                          static_cast<double>(n) +
                      0.437;
    z[k] = std::polar(r0 * (1.0 + 1e-3 * static_cast<double>(k)), th);
  }

  bool converged = false;
  for (int it = 0; it < 600 && !converged; ++it) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> pv = horner(c, z[i]);
      if (pv == 0.0) continue;
      const std::complex<double> dv = horner_derivative(c, z[i]);
      const std::complex<double> w = pv / dv;
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const std::complex<double> corr = w / (1.0 - w * s);
      z[i] -= corr;
      if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
    }
  }
  if (!converged)
    throw std::runtime_error("root iteration did not converge");

  std::vector<RootEstimate> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> prod = c[0];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= z[i] - z[j];
    const double w = std::abs(horner(c, z[i]) / prod);
    roots[i] = {z[i], static_cast<double>(n) * w + 1e-15};
  }

  // Polish the dominant real root to <= 1e-14.
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(roots[i].value.imag()) <= roots[i].radius &&
        (best == n || roots[i].value.real() > roots[best].value.real()))
      best = i;
  if (best < n) {
    const long double x = newton_polish(p, roots[best].value.real());
    if (!std::isnan(static_cast<double>(x))) {
      roots[best].value = static_cast<double>(x);
      roots[best].radius =
          std::min(roots[best].radius,
                   1e-14 * (1.0 + std::abs(static_cast<double>(x))));
    }
  }
  return roots;
}

AlgebraicClassification classify(const IntegerPolynomial& p) {
  const std::vector<RootEstimate> roots = find_roots(p);
  constexpr double circle_tol = 1e-10;

  AlgebraicClassification out;
  std::size_t n_outside = 0, n_inside = 0, n_off_circle = 0;
  bool outside_certified = true, inside_certified = true;
  bool off_circle_certified = true;
  for (const RootEstimate& r : roots) {
    const double m = std::abs(r.value);
    if (m > 1.0) {
      ++n_outside;
      if (!(m - r.radius > 1.0)) outside_certified = false;
    } else if (m < 1.0) {
      ++n_inside;
      if (!(m + r.radius < 1.0)) inside_certified = false;
    }
    if (std::abs(m - 1.0) > circle_tol) {
      ++n_off_circle;
      if (!(std::abs(m - 1.0) > r.radius)) off_circle_certified = false;
    }
    const bool real = std::abs(r.value.imag()) <= std::max(r.radius, 1e-12);
    if (real && r.value.real() > 1.0)
      out.dominant_root = std::max(out.dominant_root, r.value.real());
  }

  const auto n = roots.size();
  if (p.degree() >= 4 && p.palindromic() && n_off_circle == 2 &&
      n_outside == 1 && out.dominant_root > 1.0) {
    out.kind = AlgebraicKind::salem;
    // Palindrome + exactly two roots certifiably off the circle forces
    // the remaining roots onto it exactly.
    out.certified = off_circle_certified;
  } else if (n_outside == 1 && out.dominant_root > 1.0 &&
             n_inside == n - 1) {
    out.kind = p.monic() ? AlgebraicKind::pisot : AlgebraicKind::hyperbolic;
    out.certified = outside_certified && inside_certified;
  } else {
    out.kind = AlgebraicKind::other;
    out.certified = false;
  }
  return out;
}

namespace {

// Directed-rounding interval Horner for integer coefficients at an exact
// double argument.
std::pair<double, double> horner_interval(const std::vector<std::int64_t>& c,
                                          double x) {
  double lo = static_cast<double>(c.front());
  double hi = lo;
  for (std::size_t i = 1; i < c.size(); ++i) {
    double a, b;
    if (x >= 0.0) {
      a = mul_down(lo, x);
      b = mul_up(hi, x);
    } else {
      a = mul_down(hi, x);
      b = mul_up(lo, x);
    }
    const double ci = static_cast<double>(c[i]);
    lo = add_down(a, ci);
    hi = add_up(b, ci);
  }
  return {lo, hi};
}

int definite_sign(std::pair<double, double> v) {
  if (v.second < 0.0) return -1;
  if (v.first > 0.0) return 1;
  return 0;
}

}  // namespace

Interval reciprocal_box(const IntegerPolynomial& p, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const std::vector<RootEstimate> roots = find_roots(p);
  double beta = 0.0, beta_radius = 0.0;
  for (const RootEstimate& r : roots)
    if (std::abs(r.value.imag()) <= r.radius && r.value.real() > beta) {
      beta = r.value.real();
      beta_radius = r.radius;
    }
  if (!(beta > 1.0))
    throw std::invalid_argument("polynomial has no dominant real root > 1");
  if (!(delta > 2.0 * beta_radius / (beta * beta)))
    throw std::invalid_argument("delta below the achievable enclosure");

  const double x = 1.0 / beta;
  const Interval box{sub_down(x, delta), add_up(x, delta)};

  // Containment check: the reciprocal polynomial changes sign across the
  // box, so it has a root there; the only root within delta of x is 1/beta.
  std::vector<std::int64_t> rev(p.coefficients.rbegin(),
                                p.coefficients.rend());
  const int s_lo = definite_sign(horner_interval(rev, box.lo));
  const int s_hi = definite_sign(horner_interval(rev, box.hi));
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
    throw std::invalid_argument(
        "could not verify containment at the requested delta");
  return box;
}

std::vector<IntegerPolynomial> parse_polynomials(const std::string& text,
                                                 bool palindromic_half) {
  std::vector<IntegerPolynomial> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    IntegerPolynomial p;
    std::int64_t v;
    while (fields >> v) p.coefficients.push_back(v);
    if (p.coefficients.empty()) continue;
    if (palindromic_half) {
      const auto half = p.coefficients;
      for (auto it = half.rbegin() + 1; it != half.rend(); ++it)
        p.coefficients.push_back(*it);
    }
    p.validate();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace dimcert
