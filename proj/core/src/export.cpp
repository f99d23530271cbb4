#include "coxeter/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace coxeter {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPixelsPerUnit = 48.0;
constexpr const char* kGridStroke = "#808080";

std::vector<double> rounded_point(const RootDatum& datum, const RatVector& p) {
  auto v = display_point(datum, p);
  for (auto& x : v) x = round6(x);
  return v;
}

ordered_json point_json(const std::vector<double>& p) {
  ordered_json a = ordered_json::array();
  for (double x : p) a.push_back(x);
  return a;
}

std::vector<double> point_from(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  std::vector<double> p;
  for (const auto& x : j) p.push_back(x.get<double>());
  return p;
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<std::string> optional_string(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

// Screen coordinates: y grows downward.
struct ScreenPoint {
  double x;
  double y;
};

ScreenPoint to_screen(const RootDatum& datum, const RatVector& p) {
  auto v = display_point(datum, p);
  return {v[0] * kPixelsPerUnit, -v[1] * kPixelsPerUnit};
}

std::string pattern_id(const std::string& color) { return "stripes-" + color.substr(1); }

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

double round6(double v) { return std::strtod(format_fixed6(v).c_str(), nullptr); }

std::string report_line(const AffineWeylGroup& group, const AffineElement& z) {
  if (group.is_identity(z)) return "e";
  return group.label(z) + "  =  " + group.format_semidirect(z);
}

std::string text_report(const AffineWeylGroup& group, const ComputationResult& result) {
  const auto& datum = group.datum();
  std::ostringstream os;
  os << "type " << to_string(result.type) << "\n";
  os << "kind " << to_string(result.family.kind) << "\n";
  os << "bound " << result.bound << "\n";
  for (std::size_t i = 0; i < datum.rank; ++i)
    os << "coroot alpha_" << (i + 1) << "^vee = " << to_string(datum.coroot_euclid[i]) << "\n";
  os << "elements " << result.elements.size() << "\n";
  for (const auto& z : result.elements) os << report_line(group, z) << "\n";
  return os.str();
}

std::string export_svg(const Scene& scene) {
  if (scene.dimension != 2) throw std::invalid_argument("SVG export supports 2D scenes only");
  const auto& datum = root_datum(scene.type);

  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  auto extend = [&](ScreenPoint p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  };
  for (const auto& a : scene.alcoves)
    for (const auto& v : a.alcove.vertices) extend(to_screen(datum, v));
  for (const auto& d : scene.decorations.dots) extend(to_screen(datum, d));
  const double margin = kPixelsPerUnit / 2;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;

  auto fx = [](double v) { return format_fixed6(v); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fx(min_x) << " " << fx(min_y)
     << " " << fx(max_x - min_x) << " " << fx(max_y - min_y) << "\" width=\"" << fx(max_x - min_x)
     << "\" height=\"" << fx(max_y - min_y) << "\">\n";

  std::set<std::string> striped_colors;
  for (const auto& a : scene.alcoves)
    if (a.striped) striped_colors.insert(a.fill.value_or("#ffffff"));
  os << "<defs>\n";
  for (const auto& c : striped_colors) {
    os << "<pattern id=\"" << pattern_id(c)
       << "\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\">"
       << "<rect width=\"6\" height=\"6\" fill=\"" << c << "\"/>"
       << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#000000\" stroke-width=\"2\"/></pattern>\n";
  }
  for (const char* c : {kRed, kBlue}) {
    os << "<marker id=\"arrow-" << std::string(c).substr(1)
       << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" "
          "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\""
       << c << "\"/></marker>\n";
  }
  os << "</defs>\n";

  auto points_attr = [&](const std::vector<RatVector>& verts) {
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto p = to_screen(datum, verts[i]);
      if (i) s += " ";
      s += fx(p.x) + "," + fx(p.y);
    }
    return s;
  };

  os << "<g id=\"alcoves\">\n";
  for (const auto& a : scene.alcoves) {
    std::string fill = "none";
    if (a.striped)
      fill = "url(#" + pattern_id(a.fill.value_or("#ffffff")) + ")";
    else if (a.fill)
      fill = *a.fill;
    os << "<polygon class=\"alcove" << (a.striped ? " striped" : "") << (a.member ? " member" : "")
       << "\" points=\"" << points_attr(a.alcove.vertices) << "\" fill=\"" << fill << "\" stroke=\"" << kGridStroke
       << "\" stroke-width=\"0.5\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"decorations\">\n";
  for (const auto& d : scene.decorations.dots) {
    auto p = to_screen(datum, d);
    os << "<circle class=\"lattice-dot\" cx=\"" << fx(p.x) << "\" cy=\"" << fx(p.y)
       << "\" r=\"3.000000\" fill=\"#000000\"/>\n";
  }
  for (const auto& ar : scene.decorations.arrows) {
    auto a = to_screen(datum, ar.from), b = to_screen(datum, ar.to);
    os << "<line class=\"coroot-arrow\" x1=\"" << fx(a.x) << "\" y1=\"" << fx(a.y) << "\" x2=\"" << fx(b.x)
       << "\" y2=\"" << fx(b.y) << "\" stroke=\"" << ar.color << "\" stroke-width=\"3\" marker-end=\"url(#arrow-"
       << ar.color.substr(1) << ")\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"outlines\">\n";
  for (const auto& a : scene.alcoves) {
    if (!a.outline) continue;
    os << "<path class=\"outline " << to_string(*a.outline) << "\" d=\"M " << points_attr(a.alcove.vertices)
       << " Z\" fill=\"none\" stroke=\"" << (*a.outline == Outline::red ? kRed : kBlue)
       << "\" stroke-width=\"3\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"labels\">\n";
  for (const auto& a : scene.alcoves) {
    if (!a.label) continue;
    auto c = to_screen(datum, a.alcove.barycenter);
    os << "<text class=\"label\" x=\"" << fx(c.x) << "\" y=\"" << fx(c.y) << "\" font-size=\""
       << fx(a.label_size * kPixelsPerUnit) << "\" text-anchor=\"middle\" dominant-baseline=\"central\">"
       << *a.label << "</text>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

SceneDocument to_document(const Scene& scene, std::string_view report) {
  const auto& group = AffineWeylGroup::of(scene.type);
  const auto& datum = group.datum();
  SceneDocument doc;
  doc.type = std::string(to_string(scene.type));
  doc.dimension = static_cast<int>(scene.dimension);
  doc.kind = std::string(to_string(scene.kind));
  doc.bound = scene.bound;

  // spherical words are shared by many alcoves
  std::map<std::size_t, std::string> direction_words;
  auto element_string = [&](const AffineElement& z) {
    std::string s = "t_(";
    for (std::size_t i = 0; i < z.lambda.size(); ++i) s += (i ? "," : "") + std::to_string(z.lambda[i]);
    s += ")";
    if (z.w.id == 0) return s;
    auto it = direction_words.find(z.w.id);
    if (it == direction_words.end())
      it = direction_words
               .emplace(z.w.id, group.lex_first_reduced_word(group.make(IntVector(group.rank()), z.w)).to_string())
               .first;
    return s + "*s_" + it->second;
  };

  doc.alcoves.reserve(scene.alcoves.size());
  for (const auto& a : scene.alcoves) {
    DocumentAlcove d;
    d.element = element_string(a.alcove.element);
    for (const auto& v : a.alcove.vertices) d.vertices.push_back(rounded_point(datum, v));
    d.fill = a.fill;
    d.striped = a.striped;
    d.member = a.member;
    d.label = a.label;
    if (a.outline) d.outline = std::string(to_string(*a.outline));
    d.label_size = round6(a.label_size);
    doc.alcoves.push_back(std::move(d));
  }
  for (const auto& p : scene.decorations.dots) doc.dots.push_back(rounded_point(datum, p));
  for (const auto& ar : scene.decorations.arrows)
    doc.arrows.push_back(DocumentArrow{rounded_point(datum, ar.from), rounded_point(datum, ar.to), ar.color});
  if (scene.decorations.origin_dot)
    doc.origin_dot =
        DocumentOrigin{rounded_point(datum, scene.decorations.origin_dot->position), scene.decorations.origin_dot->color};
  if (scene.dimension == 3) {
    std::vector<DocumentEdge> edges;
    edges.reserve(scene.wireframe_edges.size());
    for (const auto& e : scene.wireframe_edges)
      edges.push_back(DocumentEdge{rounded_point(datum, e.a), rounded_point(datum, e.b)});
    doc.wireframe_edges = std::move(edges);
  }
  doc.report = std::string(report);
  return doc;
}

namespace {

ordered_json document_json(const SceneDocument& doc) {
  ordered_json j;
  j["version"] = doc.version;
  j["type"] = doc.type;
  j["dimension"] = doc.dimension;
  j["kind"] = doc.kind;
  j["bound"] = doc.bound;
  ordered_json alcoves = ordered_json::array();
  for (const auto& a : doc.alcoves) {
    ordered_json aj;
    aj["element"] = a.element;
    ordered_json verts = ordered_json::array();
    for (const auto& v : a.vertices) verts.push_back(point_json(v));
    aj["vertices"] = std::move(verts);
    aj["fill"] = optional_json(a.fill);
    aj["striped"] = a.striped;
    aj["member"] = a.member;
    aj["label"] = optional_json(a.label);
    aj["label_size"] = a.label_size;
    aj["outline"] = optional_json(a.outline);
    alcoves.push_back(std::move(aj));
  }
  j["alcoves"] = std::move(alcoves);
  if (doc.wireframe_edges) {
    ordered_json edges = ordered_json::array();
    for (const auto& e : *doc.wireframe_edges) edges.push_back(ordered_json::array({point_json(e[0]), point_json(e[1])}));
    j["wireframe_edges"] = std::move(edges);
  }
  ordered_json deco;
  ordered_json dots = ordered_json::array();
  for (const auto& d : doc.dots) dots.push_back(point_json(d));
  deco["dots"] = std::move(dots);
  ordered_json arrows = ordered_json::array();
  for (const auto& a : doc.arrows)
    arrows.push_back(ordered_json{{"from", point_json(a.from)}, {"to", point_json(a.to)}, {"color", a.color}});
  deco["arrows"] = std::move(arrows);
  if (doc.origin_dot)
    deco["origin_dot"] = ordered_json{{"position", point_json(doc.origin_dot->position)}, {"color", doc.origin_dot->color}};
  else
    deco["origin_dot"] = nullptr;
  j["decorations"] = std::move(deco);
  j["report"] = doc.report;
  return j;
}

}  // namespace

std::string export_scene_json(const Scene& scene, std::string_view report) {
  return document_json(to_document(scene, report)).dump() + "\n";
}

SceneDocument parse_scene_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scene JSON is not valid JSON: ") + e.what());
  }
  try {
    SceneDocument doc;
    doc.version = j.at("version").get<int>();
    if (doc.version != kSceneSchemaVersion) throw std::invalid_argument("unsupported scene version");
    doc.type = j.at("type").get<std::string>();
    doc.dimension = j.at("dimension").get<int>();
    doc.kind = j.at("kind").get<std::string>();
    doc.bound = j.at("bound").get<Int>();
    for (const auto& aj : j.at("alcoves")) {
      DocumentAlcove a;
      a.element = aj.at("element").get<std::string>();
      for (const auto& v : aj.at("vertices")) a.vertices.push_back(point_from(v));
      a.fill = optional_string(aj.at("fill"));
      a.striped = aj.at("striped").get<bool>();
      a.member = aj.at("member").get<bool>();
      a.label = optional_string(aj.at("label"));
      a.label_size = aj.at("label_size").get<double>();
      a.outline = optional_string(aj.at("outline"));
      doc.alcoves.push_back(std::move(a));
    }
    if (j.contains("wireframe_edges")) {
      std::vector<DocumentEdge> edges;
      for (const auto& e : j.at("wireframe_edges")) edges.push_back(DocumentEdge{point_from(e.at(0)), point_from(e.at(1))});
      doc.wireframe_edges = std::move(edges);
    }
    const auto& deco = j.at("decorations");
    for (const auto& d : deco.at("dots")) doc.dots.push_back(point_from(d));
    for (const auto& a : deco.at("arrows"))
      doc.arrows.push_back(DocumentArrow{point_from(a.at("from")), point_from(a.at("to")), a.at("color").get<std::string>()});
    if (!deco.at("origin_dot").is_null())
      doc.origin_dot = DocumentOrigin{point_from(deco["origin_dot"].at("position")),
                                      deco["origin_dot"].at("color").get<std::string>()};
    doc.report = j.at("report").get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("scene JSON does not follow the schema: ") + e.what());
  }
}

}  // namespace coxeter
