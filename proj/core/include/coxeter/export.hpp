#pragma once

// Deterministic serializers: the plain-text element report, 2D SVG, and the
// versioned scene-JSON document consumed by the explorer UI.
//
// Floating point appears only here. Every coordinate is rounded to six
// decimals (printf rounding, ties to even) before it is written.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/scene.hpp"

namespace coxeter {

inline constexpr int kSceneSchemaVersion = 1;

// One line per element, `s_<word>  =  t_(c1,..,cn)*s_<word>`, or `e`.
std::string report_line(const AffineWeylGroup& group, const AffineElement& z);

std::string text_report(const AffineWeylGroup& group, const ComputationResult& result);

// Throws std::invalid_argument for 3D scenes.
std::string export_svg(const Scene& scene);

// "%.6f" with negative zero normalized.
std::string format_fixed6(double v);
double round6(double v);

// Observable content of an exported scene document.
struct DocumentAlcove {
  std::string element;
  std::vector<std::vector<double>> vertices;
  std::optional<std::string> fill;
  bool striped = false;
  bool member = false;
  std::optional<std::string> label;
  std::optional<std::string> outline;
  double label_size = 0.0;

  friend bool operator==(const DocumentAlcove&, const DocumentAlcove&) = default;
};

struct DocumentArrow {
  std::vector<double> from;
  std::vector<double> to;
  std::string color;

  friend bool operator==(const DocumentArrow&, const DocumentArrow&) = default;
};

struct DocumentOrigin {
  std::vector<double> position;
  std::string color;

  friend bool operator==(const DocumentOrigin&, const DocumentOrigin&) = default;
};

using DocumentEdge = std::array<std::vector<double>, 2>;

struct SceneDocument {
  int version = kSceneSchemaVersion;
  std::string type;
  int dimension = 0;
  std::string kind;
  Int bound = 0;
  std::vector<DocumentAlcove> alcoves;
  std::vector<std::vector<double>> dots;
  std::vector<DocumentArrow> arrows;
  std::optional<DocumentOrigin> origin_dot;
  std::optional<std::vector<DocumentEdge>> wireframe_edges;  // 3D only
  std::string report;

  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

SceneDocument to_document(const Scene& scene, std::string_view report = {});

std::string export_scene_json(const Scene& scene, std::string_view report = {});

// Throws std::invalid_argument on documents that do not follow the schema layout.
SceneDocument parse_scene_json(std::string_view text);

}  // namespace coxeter
