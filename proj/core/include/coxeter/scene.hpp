#pragma once

// Render-ready scenes: which alcoves are drawn, how they are filled,
// striped, labeled and outlined, plus lattice or origin decorations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/geometry.hpp"

namespace coxeter {

enum class Outline { red, blue };

std::string_view to_string(Outline o);

struct SceneAlcove {
  Alcove alcove;
  std::optional<Color> fill;
  bool striped = false;
  bool member = false;  // in the computed set
  std::optional<std::string> label;
  std::optional<Outline> outline;
  double label_size = 0.0;  // display units
};

struct OriginDot {
  RatVector position;
  Color color;
};

struct SceneDecorations {
  std::vector<RatVector> dots;
  std::vector<Arrow> arrows;
  std::optional<OriginDot> origin_dot;
};

struct Scene {
  CoxeterType type = CoxeterType::A2;
  std::size_t dimension = 2;
  Int bound = 0;
  FamilyKind kind = FamilyKind::conjugacy_class;
  std::vector<SceneAlcove> alcoves;  // sorted by element
  SceneDecorations decorations;
  std::vector<Edge> wireframe_edges;  // rank 3 only
};

struct ColorAssignment {
  enum class Scheme { per_element, cycle_type };

  Scheme scheme = Scheme::per_element;
  std::vector<Color> by_direction;  // indexed by finite Weyl element id
};

struct SceneOptions {
  // label font size = min(label_max, label_ratio * alcove diameter)
  double label_ratio = 0.22;
  double label_max = 0.3;
};

// Permutation image (0-based) of a rank-3 finite Weyl element in Sym(4) or Sym(6).
std::vector<int> embed_in_symmetric_group(const AffineWeylGroup& group, const FiniteWeylElement& w);

// Cycle type of the embedded permutation, nonincreasing. Throws
// std::invalid_argument for rank-2 types.
Partition cycle_type(const AffineWeylGroup& group, const FiniteWeylElement& w);

ColorAssignment color_assignment(const AffineWeylGroup& group);

double label_font_size(double diameter, const SceneOptions& options = {});

Scene build_scene(const AffineWeylGroup& group, const ComputationResult& result, const AffineElement& x,
                  const std::optional<AffineElement>& y, const SceneOptions& options = {});

}  // namespace coxeter
