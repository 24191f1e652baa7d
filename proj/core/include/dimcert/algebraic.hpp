// Integer-polynomial root finding, Pisot/Salem/hyperbolic classification,
// and construction of parameter boxes around reciprocals of algebraic
// numbers (multinacci and Salem tables).

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dimcert/scheme.hpp"

namespace dimcert {

struct IntegerPolynomial {
  std::vector<std::int64_t> coefficients;  // leading to constant

  std::int64_t degree() const {
    return static_cast<std::int64_t>(coefficients.size()) - 1;
  }
  bool monic() const;
  bool palindromic() const;
  void validate() const;
};

struct RootEstimate {
  std::complex<double> value;
  double radius = 0.0;  // a posteriori error radius
};

enum class AlgebraicKind { pisot, salem, hyperbolic, other };

std::string to_string(AlgebraicKind k);

struct AlgebraicClassification {
  AlgebraicKind kind = AlgebraicKind::other;
  double dominant_root = 0.0;  // beta > 1 when present
  bool certified = false;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration, with
/// Weierstrass-correction error radii. The dominant real root is polished
/// by Newton steps to within 1e-14. Throws on non-convergence.
std::vector<RootEstimate> find_roots(const IntegerPolynomial& p);

/// Pisot/Salem/hyperbolic classification from the root moduli. Salem is
/// certified through the palindromic symmetry argument (palindrome with
/// exactly two roots certifiably off the circle forces the rest onto it);
/// pisot/hyperbolic are certified when every modulus clears the circle by
/// more than its error radius. Irreducibility is the caller's business.
AlgebraicClassification classify(const IntegerPolynomial& p);

/// Box [1/beta - delta, 1/beta + delta], outward-rounded, with containment
/// of the true reciprocal verified by a sign change of the reciprocal
/// polynomial across the box (directed-rounding Horner). Throws if the
/// polynomial has no dominant real root > 1 or if delta is too small to
/// verify.
Interval reciprocal_box(const IntegerPolynomial& p, double delta);

/// One polynomial per line, space-separated integer coefficients from
/// leading to constant. With palindromic_half, each line holds only the
/// leading-to-middle half and is mirrored.
std::vector<IntegerPolynomial> parse_polynomials(const std::string& text,
                                                 bool palindromic_half);

}  // namespace dimcert
