#include "service.hpp"

#include <chrono>

#include "json.hpp"

namespace coxeter::service {

std::string_view example_catalog_text();  // generated from data/examples.json

namespace {

using json = nlohmann::ordered_json;

std::optional<FamilyKind> parse_mode(std::string_view mode) {
  for (auto k : {FamilyKind::conjugacy_class, FamilyKind::coconjugation, FamilyKind::centralizer})
    if (to_string(k) == mode) return k;
  return std::nullopt;
}

AffineElement parse_field(const AffineWeylGroup& group, const std::string& text, const char* field) {
  try {
    return group.parse_element(text);
  } catch (const ParseError& e) {
    throw RequestError("parse_error", std::string(to_string(e.code())) + ": " + e.what(), field, e.offset());
  }
}

}  // namespace

std::string RequestError::to_json() const {
  json err;
  err["code"] = code_;
  err["message"] = what();
  err["field"] = field_.empty() ? json(nullptr) : json(field_);
  err["offset"] = offset_ ? json(*offset_) : json(nullptr);
  return json{{"error", err}}.dump() + "\n";
}

ComputeRequest parse_compute_request(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw RequestError("bad_request", "request body must be a JSON object");
  auto text_field = [&](const char* name, bool required) -> std::optional<std::string> {
    if (!j.contains(name) || j[name].is_null()) {
      if (required) throw RequestError("bad_request", std::string("missing field '") + name + "'", name);
      return std::nullopt;
    }
    if (!j[name].is_string()) throw RequestError("bad_request", std::string("field '") + name + "' must be a string", name);
    return j[name].get<std::string>();
  };
  ComputeRequest r;
  r.type = *text_field("type", true);
  r.mode = *text_field("mode", true);
  r.x = *text_field("x", true);
  r.y = text_field("y", false);
  if (!j.contains("bound")) throw RequestError("bad_bound", "missing field 'bound'", "bound");
  if (!j["bound"].is_number_integer()) throw RequestError("bad_bound", "bound must be an integer", "bound");
  r.bound = j["bound"].get<Int>();
  return r;
}

ComputeOutcome run_compute(const ComputeRequest& request) {
  auto type = parse_coxeter_type(request.type);
  if (!type) throw RequestError("unknown_type", "unknown type '" + request.type + "'", "type");
  auto mode = parse_mode(request.mode);
  if (!mode) throw RequestError("unknown_mode", "unknown mode '" + request.mode + "'", "mode");
  if (request.bound < kMinBound || request.bound > kMaxBound)
    throw RequestError("bad_bound", "bound must be in the range 1-15", "bound");
  if (*mode == FamilyKind::coconjugation && !request.y)
    throw RequestError("missing_y", "coconjugation needs a second element y", "y");
  if (*mode != FamilyKind::coconjugation && request.y)
    throw RequestError("unexpected_y", "y is only used in coconjugation mode", "y");

  const auto& group = AffineWeylGroup::of(*type);
  AffineElement x = parse_field(group, request.x, "x");
  std::optional<AffineElement> y;
  if (request.y) y = parse_field(group, *request.y, "y");

  ComputeOutcome out;
  out.request = request;
  switch (*mode) {
    case FamilyKind::conjugacy_class:
      out.result = conjugacy_class(group, x, request.bound);
      break;
    case FamilyKind::coconjugation:
      out.result = coconjugation_set(group, x, *y, request.bound);
      out.empty_coconjugation = out.result.family.empty();
      break;
    case FamilyKind::centralizer:
      out.result = centralizer(group, x, request.bound);
      break;
  }
  out.scene = build_scene(group, out.result, x, y);
  out.report = text_report(group, out.result);
  return out;
}

std::string response_body(const ComputeOutcome& outcome) {
  const auto& group = AffineWeylGroup::of(outcome.result.type);
  json body;
  body["scene"] = json::parse(export_scene_json(outcome.scene, outcome.report));
  body["report"] = outcome.report;
  json elements = json::array();
  for (const auto& z : outcome.result.elements)
    elements.push_back(json{{"word", group.label(z)}, {"element", group.format_semidirect(z)}});
  body["elements"] = std::move(elements);
  if (outcome.empty_coconjugation) body["reason"] = kEmptyCoconjugationReason;
  return body.dump() + "\n";
}

HttpReply handle_compute(std::string_view request_body) {
  const auto start = std::chrono::steady_clock::now();
  HttpReply reply;
  try {
    auto outcome = run_compute(parse_compute_request(request_body));
    reply.status = outcome.empty_coconjugation ? 422 : 200;
    reply.body = response_body(outcome);
  } catch (const RequestError& e) {
    reply.status = 400;
    reply.body = e.to_json();
  }
  reply.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return reply;
}

std::string types_json() {
  json list = json::array();
  for (auto t : kAllTypes) {
    const auto& datum = root_datum(t);
    json gens = json::array();
    for (std::size_t g = 0; g < datum.generator_count(); ++g) gens.push_back(g);
    list.push_back(json{{"tag", to_string(t)},
                        {"rank", datum.rank},
                        {"suggested_bound", datum.rank == 2 ? kSuggestedBound2D : kSuggestedBound3D},
                        {"generator_indices", gens}});
  }
  return list.dump() + "\n";
}

std::string examples_json() {
  static const std::string text = json::parse(example_catalog_text()).dump() + "\n";
  return text;
}

}  // namespace coxeter::service
