#pragma once

#include <string>
#include <vector>

#include "grouplike/nctorus.hpp"
#include "grouplike/scalar.hpp"

namespace grouplike {

// Circle p*theta1 + q*theta2 = alpha on the torus R^2 / (2pi Z)^2, with the
// offset kept symbolic. (p, q) = (0, 0) is not a circle.
struct TorusCircle {
  int p = 0;
  int q = 0;
  Angle alpha;
};

bool circle_valid(const TorusCircle& c);

// One connected component of a fibered product of two circles, pushed forward
// to the torus. The winding multiplicity is gcd(|p|, |q|) of the component's
// winding vector; the circle itself carries the primitive data.
struct ComposedComponent {
  TorusCircle circle;
  int winding_multiplicity = 1;
};

// Composes two circles over the shared middle coordinate: solves
//   p1*theta1 + q1*theta + ... , p2*theta + q2*theta2 + ...
// by enumerating branches and following the gluing monodromy. Orbit counts
// come from explicit enumeration, never from closed-form gcd shortcuts, so the
// output is an independent check of the algebraic tensor classification.
std::vector<ComposedComponent> compose_circles(const TorusCircle& c1,
                                               const TorusCircle& c2);

// Translating a circle by the bisection (m, n) |-> (m + lam-step) shifts the
// offset along the lattice: (p, q, alpha) |-> (p, q, alpha + lam*(n*p - m*q)).
TorusCircle bisection_translate(const TorusCircle& c, int m, int n);

struct AgreementReport {
  bool agree = false;
  TensorClassification classification;
  std::vector<ComposedComponent> components;
  std::vector<std::string> witnesses; // empty iff agree
};

// Runs tensor_classify and compose_circles on the same pair and compares:
// component count against multiplicity, winding vectors exactly, offsets as
// Angle identities modulo the lattice {lam, 2pi}. Inputs must be canonical
// coprime classes, as for tensor_classify.
AgreementReport oracle_compare(const ModuleClass& a, const ModuleClass& b);

// Deterministic SVG of the circles on [0, 2pi)^2. Symbolic generators are
// rendered at fixed irrational stand-ins (noted in the image); wrap-around is
// split exactly at the seam. Never reads the clock or the locale.
std::string emit_plot_svg(const std::vector<TorusCircle>& circles);

// Writes emit_plot_svg to a file; IoError if the file cannot be written.
void emit_plot(const std::vector<TorusCircle>& circles, const std::string& path);

} // namespace grouplike
