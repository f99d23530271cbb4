#pragma once

// Alcoves, the background tessellation, and coroot-lattice decorations.
// Vertices stay exact (coroot coordinates) until display_point() converts
// them to floating point for export.

#include <cstddef>
#include <vector>

#include "coxeter/root_data.hpp"
#include "coxeter/word_algebra.hpp"

namespace coxeter {

struct Alcove {
  AffineElement element;
  std::vector<RatVector> vertices;  // image of the fundamental alcove, coroot coordinates
  RatVector barycenter;
};

struct Arrow {
  RatVector from;
  RatVector to;
  Color color;
};

struct LatticeDecorations {
  std::vector<RatVector> dots;
  std::vector<Arrow> arrows;
};

struct Edge {
  RatVector a;  // a < b
  RatVector b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr const char* kRed = "#ff0000";
inline constexpr const char* kBlue = "#0000ff";

Alcove alcove_of(const AffineWeylGroup& group, const AffineElement& x);

// Point in the closed (or open) alcove of x.
bool alcove_contains(const AffineWeylGroup& group, const AffineElement& x, const RatVector& point,
                     bool closed = true);

// Alcoves of every t^lambda w with max |lambda_i| <= bound, ordered by
// (direction id, lambda).
std::vector<Alcove> tessellation(const AffineWeylGroup& group, Int bound);

// Rank 2 only; throws std::invalid_argument for rank 3.
LatticeDecorations lattice_decorations(const AffineWeylGroup& group, Int bound);

// The 1-skeleton: every alcove edge once, sorted.
std::vector<Edge> wireframe_edges(const std::vector<Alcove>& alcoves);
// Same as wireframe_edges(tessellation(group, bound)) without materializing the alcoves.
std::vector<Edge> wireframe_edges(const AffineWeylGroup& group, Int bound);

// Orthonormal display coordinates of a coroot-coordinate point.
std::vector<double> display_point(const RootDatum& datum, const RatVector& point);

// Largest pairwise vertex distance in display units.
double display_diameter(const RootDatum& datum, const Alcove& alcove);

}  // namespace coxeter
