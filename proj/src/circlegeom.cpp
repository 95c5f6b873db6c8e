#include "grouplike/circlegeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "grouplike/errors.hpp"

namespace grouplike {

bool circle_valid(const TorusCircle& c) { return c.p != 0 || c.q != 0; }

namespace {

void require_circle(const TorusCircle& c, const char* which) {
  if (!circle_valid(c))
    fail("ZeroClass", std::string(which) + ": (p, q) = (0, 0) is not a circle");
}

int mod_pos(long long v, int m) {
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// Both slopes nonzero: branches of circle i over the shared coordinate are
// indexed by k_i in [0, |p_i|). Crossing the 2pi seam in the shared coordinate
// sends (k1, k2) to (k1 - q1, k2 - q2) componentwise mod (|p1|, |p2|); each
// monodromy orbit is one connected component. Orbits are enumerated.
std::vector<ComposedComponent> compose_both_vertical(const TorusCircle& c1,
                                                     const TorusCircle& c2) {
  const int ap1 = std::abs(c1.p), ap2 = std::abs(c2.p);
  std::vector<char> seen(static_cast<size_t>(ap1) * ap2, 0);
  std::vector<ComposedComponent> out;
  for (int k1 = 0; k1 < ap1; ++k1) {
    for (int k2 = 0; k2 < ap2; ++k2) {
      if (seen[static_cast<size_t>(k1) * ap2 + k2]) continue;
      int a = k1, b = k2, s = 0;
      do {
        seen[static_cast<size_t>(a) * ap2 + b] = 1;
        a = mod_pos(a - c1.q, ap1);
        b = mod_pos(b - c2.q, ap2);
        ++s;
      } while (a != k1 || b != k2);
      // Travelling the component once winds s times around the glued-out
      // coordinate and s*(q1/p1 + q2/p2) times around the other; the latter
      // is an integer exactly because the orbit closed up.
      const Rat wind = Rat(s) * (Rat(c1.q, c1.p) + Rat(c2.q, c2.p));
      if (boost::multiprecision::denominator(wind) != 1)
        fail("ZeroClass", "orbit closed but winding is not integral");
      const int w = static_cast<int>(boost::multiprecision::numerator(wind)
                                         .convert_to<long long>());
      const Angle beta =
          Rat(s) * ((c1.alpha + Angle::two_pi(Rat(k1))) / Rat(c1.p) +
                    (c2.alpha + Angle::two_pi(Rat(k2))) / Rat(c2.p));
      ComposedComponent comp;
      comp.circle = TorusCircle{s, w, beta};
      comp.winding_multiplicity = std::gcd(s, std::abs(w));
      out.push_back(comp);
    }
  }
  return out;
}

// One circle is horizontal in the shared coordinate (p = 0): it pins the free
// coordinate outright, and the vertical circle contributes |p| parametrized
// sheets over it. The result is the horizontal family, listed once per sheet.
std::vector<ComposedComponent> compose_mixed(const TorusCircle& horizontal,
                                             const TorusCircle& vertical) {
  std::vector<ComposedComponent> out;
  const int sheets = std::abs(vertical.p);
  ComposedComponent comp;
  comp.circle = TorusCircle{0, horizontal.q, horizontal.alpha};
  comp.winding_multiplicity = std::abs(horizontal.q);
  for (int i = 0; i < sheets; ++i) out.push_back(comp);
  return out;
}

// Both circles constrain only the shared coordinate. The fibered product is
// nonempty iff their root sets intersect; roots of q*theta = alpha form the
// coset alpha/q + (2pi/q)Z shifted by the lam-lattice, so it suffices to probe
// theta = (alpha1 + lam*m + 2pi*n)/q1 over m, n in [0, |q1|).
std::vector<ComposedComponent> compose_both_horizontal(const TorusCircle& c1,
                                                       const TorusCircle& c2) {
  const std::vector<Angle> lattice = {Angle::lam(Rat(1)), Angle::two_pi(Rat(1))};
  const int range = std::abs(c1.q);
  for (int m = 0; m < range; ++m) {
    for (int n = 0; n < range; ++n) {
      const Angle theta = (c1.alpha + Angle::lam(Rat(m)) + Angle::two_pi(Rat(n))) /
                          Rat(c1.q);
      if (!angle_congruent(Rat(c2.q) * theta, c2.alpha, lattice)) continue;
      const int g = std::gcd(std::abs(c1.q), std::abs(c2.q));
      ComposedComponent comp;
      comp.circle = TorusCircle{0, g, Rat(g) * theta};
      comp.winding_multiplicity = g;
      return {comp};
    }
  }
  return {};
}

} // namespace

std::vector<ComposedComponent> compose_circles(const TorusCircle& c1,
                                               const TorusCircle& c2) {
  require_circle(c1, "left circle");
  require_circle(c2, "right circle");
  if (c1.p != 0 && c2.p != 0) return compose_both_vertical(c1, c2);
  if (c1.p == 0 && c2.p == 0) return compose_both_horizontal(c1, c2);
  if (c1.p == 0) return compose_mixed(c1, c2);
  return compose_mixed(c2, c1);
}

TorusCircle bisection_translate(const TorusCircle& c, int m, int n) {
  require_circle(c, "circle");
  TorusCircle out = c;
  out.alpha = c.alpha + Angle::lam(Rat(n) * Rat(c.p) - Rat(m) * Rat(c.q));
  return out;
}

AgreementReport oracle_compare(const ModuleClass& a, const ModuleClass& b) {
  AgreementReport rep;
  rep.classification = tensor_classify(a, b);
  rep.components =
      compose_circles(TorusCircle{a.p, a.q, a.alpha}, TorusCircle{b.p, b.q, b.alpha});
  const auto& cls = rep.classification;
  if (static_cast<int>(rep.components.size()) != cls.multiplicity) {
    std::ostringstream os;
    os << "component count " << rep.components.size() << " != multiplicity "
       << cls.multiplicity;
    rep.witnesses.push_back(os.str());
  }
  const std::vector<Angle> lattice = {Angle::lam(Rat(1)), Angle::two_pi(Rat(1))};
  for (size_t i = 0; i < rep.components.size(); ++i) {
    const TorusCircle& comp = rep.components[i].circle;
    if (cls.multiplicity == 0) break; // count mismatch already recorded
    if (comp.p != cls.cls.p || comp.q != cls.cls.q) {
      std::ostringstream os;
      os << "component " << i << " winds (" << comp.p << ", " << comp.q
         << ") but the classifier says (" << cls.cls.p << ", " << cls.cls.q << ")";
      rep.witnesses.push_back(os.str());
      continue;
    }
    if (!angle_congruent(comp.alpha, cls.cls.alpha, lattice)) {
      std::ostringstream os;
      os << "component " << i << " offset " << angle_str(comp.alpha)
         << " is not congruent to " << angle_str(cls.cls.alpha)
         << " mod {lam, 2pi}";
      rep.witnesses.push_back(os.str());
    }
  }
  rep.agree = rep.witnesses.empty();
  return rep;
}

namespace {

constexpr double kTau = 6.283185307179586;

double round6(double v) { return std::round(v * 1e6) / 1e6; }

// Display stand-ins for the symbolic generators: fixed irrational multiples of
// 2pi, rounded so the output is bit-stable across platforms. Purely a
// rendering choice; no exact computation ever sees these.
const double kLamDisplay = round6(kTau * (std::sqrt(2.0) - 1.0));
const double kA1Display = round6(kTau * (std::sqrt(3.0) - 1.0));
const double kA2Display = round6(kTau * (std::sqrt(5.0) - 2.0));

double angle_display(const Angle& a) {
  return a.r0.convert_to<double>() + a.rlam.convert_to<double>() * kLamDisplay +
         a.rpi.convert_to<double>() * kTau + a.ra1.convert_to<double>() * kA1Display +
         a.ra2.convert_to<double>() * kA2Display;
}

double wrap_tau(double v) {
  double r = std::fmod(v, kTau);
  if (r < 0) r += kTau;
  return r;
}

struct PlotFrame {
  static constexpr int size = 480;
  static constexpr int margin = 48;
  double sx(double theta1) const {
    return margin + theta1 / kTau * (size - 2 * margin);
  }
  double sy(double theta2) const {
    return size - margin - theta2 / kTau * (size - 2 * margin);
  }
};

void emit_line(std::ostringstream& os, const PlotFrame& f, const char* color,
               double x1, double y1, double x2, double y2) {
  os << "  <line x1=\"" << f.sx(x1) << "\" y1=\"" << f.sy(y1) << "\" x2=\""
     << f.sx(x2) << "\" y2=\"" << f.sy(y2) << "\" stroke=\"" << color
     << "\" stroke-width=\"1.5\"/>\n";
}

// theta1 = c0 + slope*theta2 on theta2 in [0, 2pi], drawn wrapped: split at
// the exact seam crossings and shift each piece back into [0, 2pi).
void emit_wrapped_graph(std::ostringstream& os, const PlotFrame& f,
                        const char* color, double c0, double slope) {
  std::vector<double> cuts = {0.0, kTau};
  if (slope != 0.0) {
    const double lo = std::min(c0, c0 + slope * kTau);
    const double hi = std::max(c0, c0 + slope * kTau);
    for (long long z = static_cast<long long>(std::floor(lo / kTau)) - 1;
         z <= static_cast<long long>(std::ceil(hi / kTau)) + 1; ++z) {
      const double t = (kTau * static_cast<double>(z) - c0) / slope;
      if (t > 1e-9 && t < kTau - 1e-9) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
  }
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i], t1 = cuts[i + 1];
    if (t1 - t0 < 1e-9) continue;
    const double mid = c0 + slope * (t0 + t1) / 2.0;
    const double base = std::floor(mid / kTau) * kTau;
    emit_line(os, f, color, c0 + slope * t0 - base, t0, c0 + slope * t1 - base, t1);
  }
}

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                          "#d35400", "#16717a", "#7d6608", "#5d6d7e"};

} // namespace

std::string emit_plot_svg(const std::vector<TorusCircle>& circles) {
  PlotFrame f;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << PlotFrame::size
     << "\" height=\"" << PlotFrame::size << "\" viewBox=\"0 0 " << PlotFrame::size
     << " " << PlotFrame::size << "\">\n";
  os << "  <rect width=\"" << PlotFrame::size << "\" height=\"" << PlotFrame::size
     << "\" fill=\"#ffffff\"/>\n";
  os << "  <rect x=\"" << PlotFrame::margin << "\" y=\"" << PlotFrame::margin
     << "\" width=\"" << PlotFrame::size - 2 * PlotFrame::margin << "\" height=\""
     << PlotFrame::size - 2 * PlotFrame::margin
     << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (size_t i = 0; i < circles.size(); ++i) {
    const TorusCircle& c = circles[i];
    if (!circle_valid(c)) continue;
    const char* color = kPalette[i % 8];
    const double a = angle_display(c.alpha);
    if (c.p == 0) {
      // q*theta2 = alpha: |q| horizontal lines.
      for (int j = 0; j < std::abs(c.q); ++j) {
        const double y = wrap_tau((a + kTau * j) / c.q);
        emit_line(os, f, color, 0.0, y, kTau, y);
      }
    } else {
      // theta1 = (alpha - q*theta2 + 2pi*k)/p: |p| wrapped graphs over theta2.
      for (int k = 0; k < std::abs(c.p); ++k) {
        const double c0 = wrap_tau((a + kTau * k) / c.p);
        emit_wrapped_graph(os, f, color, c0, -static_cast<double>(c.q) / c.p);
      }
    }
  }
  os.precision(6);
  os << "  <text x=\"" << PlotFrame::margin << "\" y=\"" << PlotFrame::size - 16
     << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#555555\">"
     << "axes [0, 2pi)^2; display stand-ins: lam=" << kLamDisplay
     << " a1=" << kA1Display << " a2=" << kA2Display << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const std::vector<TorusCircle>& circles, const std::string& path) {
  const std::string svg = emit_plot_svg(circles);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  out << svg;
  out.flush();
  if (!out.good()) fail("IoError", "write failed for " + path);
}

} // namespace grouplike
