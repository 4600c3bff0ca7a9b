#pragma once

#include <complex>
#include <vector>

#include "sas/form.hpp"

namespace sas {

// Univariate polynomial over Q, coefficient of t^k at index k, no trailing
// zeros (the zero polynomial is empty).
using UniPoly = std::vector<Rational>;

UniPoly poly_trim(UniPoly p);
UniPoly poly_derivative(const UniPoly& p);
UniPoly poly_remainder(const UniPoly& a, const UniPoly& b);
UniPoly poly_gcd(UniPoly a, UniPoly b);  // monic, or empty if both are zero
UniPoly squarefree_part(const UniPoly& p);
// Complex roots of a nonzero polynomial without repeated roots
// (companion-matrix eigenvalues refined by Newton steps).
std::vector<std::complex<double>> simple_roots(const UniPoly& p);

// Resultant of F(x, y, 1) and G(x, y, 1) with respect to y (var = 1) or x
// (var = 0), as a polynomial in the other affine variable. Exact.
UniPoly affine_resultant(const Form& f, const Form& g, int var);

struct CurveIntersection {
  // Common zeros in the projective plane, one representative per complex
  // conjugate pair; finite points scaled to z = 1, points at infinity to
  // y = 1 or [1 : 0 : 0].
  std::vector<ComplexPoint3> points;
  // The curves share a component, so the intersection is not finite and
  // `points` is incomplete.
  bool shared_component = false;
};

// Distinct common points of two curves, a conjugate pair reported once.
CurveIntersection intersect_curves(const Form& f, const Form& g, double tol = 1e-9);

// |F(p)| relative to the size of F's coefficients and of p.
double relative_residual(const Form& f, const ComplexPoint3& p);
bool same_point(const ComplexPoint3& a, const ComplexPoint3& b, double tol);
// Normalized representative as described for CurveIntersection::points.
ComplexPoint3 normalize_point(const ComplexPoint3& p);
ComplexPoint3 to_complex(const Point3& p);

}  // namespace sas
