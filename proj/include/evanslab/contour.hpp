#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "evanslab/types.hpp"

namespace evanslab {

enum class SegmentLabel { OuterArc, InnerArc, AxisSegment };

/// Piecewise-sampled curve in the spectral plane. For closed contours the
/// vertices are traversed cyclically (last connects back to first);
/// labels[i] tags the segment starting at vertices[i].
struct Contour {
  std::vector<cplx> vertices;
  std::vector<SegmentLabel> labels;
  bool closed = true;
};

/// The right-half-plane region K: a large outer half disc of radius `outer_r`,
/// truncated by the imaginary axis and a small inner half disc of radius
/// `inner_r` excising the origin. Traversed counterclockwise (interior on the
/// left), with roughly `n` samples distributed by arc length.
inline Contour right_half_plane_contour(double inner_r, double outer_r, int n = 512) {
  using std::numbers::pi;
  if (!(0.0 < inner_r && inner_r < outer_r)) throw std::invalid_argument("contour: need 0 < inner_r < outer_r");
  if (n < 16) n = 16;

  const double len_outer = pi * outer_r;
  const double len_inner = pi * inner_r;
  const double len_axis = outer_r - inner_r;  // each of the two axis segments
  const double total = len_outer + len_inner + 2 * len_axis;
  auto count = [&](double len) { return std::max(4, int(std::lround(n * len / total))); };

  Contour k;
  auto push = [&](cplx z, SegmentLabel lab) {
    k.vertices.push_back(z);
    k.labels.push_back(lab);
  };

  // Outer arc: -i*outer_r through +outer_r to +i*outer_r.
  int n1 = count(len_outer);
  for (int i = 0; i < n1; ++i) {
    double th = -pi / 2 + pi * double(i) / double(n1);
    push(outer_r * cplx(std::cos(th), std::sin(th)), SegmentLabel::OuterArc);
  }
  // Axis segment down from +i*outer_r to +i*inner_r.
  int n2 = count(len_axis);
  for (int i = 0; i < n2; ++i) {
    double y = outer_r + (inner_r - outer_r) * double(i) / double(n2);
    push(cplx(0.0, y), SegmentLabel::AxisSegment);
  }
  // Inner arc from +i*inner_r through +inner_r to -i*inner_r.
  int n3 = count(len_inner);
  for (int i = 0; i < n3; ++i) {
    double th = pi / 2 - pi * double(i) / double(n3);
    push(inner_r * cplx(std::cos(th), std::sin(th)), SegmentLabel::InnerArc);
  }
  // Axis segment from -i*inner_r down to -i*outer_r.
  int n4 = count(len_axis);
  for (int i = 0; i < n4; ++i) {
    double y = -inner_r - (outer_r - inner_r) * double(i) / double(n4);
    push(cplx(0.0, y), SegmentLabel::AxisSegment);
  }
  return k;
}

/// Circle of radius r about a center, counterclockwise.
inline Contour circle_contour(cplx center, double r, int n = 64) {
  using std::numbers::pi;
  Contour c;
  for (int i = 0; i < n; ++i) {
    double th = 2 * pi * double(i) / double(n);
    c.vertices.push_back(center + r * cplx(std::cos(th), std::sin(th)));
    c.labels.push_back(SegmentLabel::OuterArc);
  }
  return c;
}

/// Axis-aligned rectangle traversed counterclockwise.
inline Contour rectangle_contour(cplx lo, cplx hi, int n_per_side = 64) {
  Contour c;
  auto edge = [&](cplx a, cplx b) {
    for (int i = 0; i < n_per_side; ++i)
      c.vertices.push_back(a + (b - a) * (double(i) / n_per_side)), c.labels.push_back(SegmentLabel::AxisSegment);
  };
  edge(lo, cplx(hi.real(), lo.imag()));
  edge(cplx(hi.real(), lo.imag()), hi);
  edge(hi, cplx(lo.real(), hi.imag()));
  edge(cplx(lo.real(), hi.imag()), lo);
  return c;
}

}  // namespace evanslab
