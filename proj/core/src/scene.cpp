#include "coxeter/scene.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxeter {

namespace {

constexpr const char* kFallbackColor = "#808080";

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

}  // namespace

std::string_view to_string(Outline o) { return o == Outline::red ? "red" : "blue"; }

std::vector<int> embed_in_symmetric_group(const AffineWeylGroup& group, const FiniteWeylElement& w) {
  const auto& datum = group.datum();
  if (datum.rank != 3 || datum.symmetric_degree == 0)
    throw std::invalid_argument("symmetric-group embedding is defined for rank-3 types only");
  const auto degree = static_cast<std::size_t>(datum.symmetric_degree);
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto label : group.bfs_word(group.lookup(w.matrix).id).letters) {
    std::vector<int> gen(degree);
    std::iota(gen.begin(), gen.end(), 0);
    for (auto [a, b] : datum.embedding.at(datum.generators[label].simple_index)) {
      std::vector<int> t(degree);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[static_cast<std::size_t>(a - 1)], t[static_cast<std::size_t>(b - 1)]);
      gen = compose(gen, t);
    }
    perm = compose(perm, gen);
  }
  return perm;
}

Partition cycle_type(const AffineWeylGroup& group, const FiniteWeylElement& w) {
  auto perm = embed_in_symmetric_group(group, w);
  std::vector<bool> seen(perm.size(), false);
  Partition parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

ColorAssignment color_assignment(const AffineWeylGroup& group) {
  const auto& datum = group.datum();
  ColorAssignment c;
  c.by_direction.reserve(group.finite_order());
  if (datum.rank == 2) {
    c.scheme = ColorAssignment::Scheme::per_element;
    if (datum.palette.size() < group.finite_order()) throw std::logic_error("2D palette is too short");
    for (std::size_t id = 0; id < group.finite_order(); ++id) c.by_direction.push_back(datum.palette[id]);
  } else {
    c.scheme = ColorAssignment::Scheme::cycle_type;
    for (const auto& w : group.finite_weyl_elements()) {
      auto it = datum.cycle_colors.find(cycle_type(group, w));
      c.by_direction.push_back(it == datum.cycle_colors.end() ? kFallbackColor : it->second);
    }
  }
  return c;
}

double label_font_size(double diameter, const SceneOptions& options) {
  return std::min(options.label_max, options.label_ratio * std::max(0.0, diameter));
}

Scene build_scene(const AffineWeylGroup& group, const ComputationResult& result, const AffineElement& x,
                  const std::optional<AffineElement>& y, const SceneOptions& options) {
  if (result.type != group.type() || x.type != group.type() || (y && y->type != group.type()))
    throw std::invalid_argument("scene inputs belong to different types");
  const auto& datum = group.datum();
  const bool planar = datum.rank == 2;
  const ColorAssignment colors = color_assignment(group);
  const AffineElement e = group.identity();

  Scene scene;
  scene.type = group.type();
  scene.dimension = datum.rank;
  scene.bound = result.bound;
  scene.kind = result.family.kind;

  std::map<AffineElement, SceneAlcove> cells;
  auto cell = [&](const AffineElement& z) -> SceneAlcove& {
    auto it = cells.find(z);
    if (it == cells.end()) it = cells.emplace(z, SceneAlcove{alcove_of(group, z), {}, false, false, {}, {}, 0.0}).first;
    return it->second;
  };
  auto shade = [&](SceneAlcove& c) { c.fill = colors.by_direction[c.alcove.element.w.id]; };

  if (planar)
    for (auto& a : tessellation(group, result.bound)) cells.emplace(a.element, SceneAlcove{std::move(a), {}, false, false, {}, {}, 0.0});

  for (const auto& z : result.elements) {
    auto& c = cell(z);
    c.member = true;
    shade(c);
  }

  {
    auto& c = cell(e);
    shade(c);
    c.label = "e";
    c.striped = result.contains(e);
  }
  if (planar) {
    for (const auto& w : group.finite_weyl_elements()) {
      auto z = group.make(IntVector(datum.rank), w);
      auto& c = cell(z);
      shade(c);
      c.label = group.label(z);
      c.striped = c.member;
    }
  }

  auto mark_input = [&](const AffineElement& z, Outline o) {
    auto& c = cell(z);
    shade(c);
    c.label = group.label(z);
    c.outline = o;
  };
  mark_input(x, Outline::red);
  if (y) mark_input(*y, Outline::blue);

  const double size = label_font_size(display_diameter(datum, alcove_of(group, e)), options);
  scene.alcoves.reserve(cells.size());
  for (auto& [z, c] : cells) {
    if (c.label) c.label_size = size;
    scene.alcoves.push_back(std::move(c));
  }

  if (planar) {
    auto deco = lattice_decorations(group, result.bound);
    scene.decorations.dots = std::move(deco.dots);
    scene.decorations.arrows = std::move(deco.arrows);
  } else {
    scene.decorations.origin_dot = OriginDot{RatVector(datum.rank), kRed};
    scene.wireframe_edges = wireframe_edges(group, result.bound);
  }
  return scene;
}

}  // namespace coxeter
