#pragma once

// Request validation and the stateless compute pipeline shared by the HTTP
// service and the CLI.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coxeter/conjugacy.hpp"
#include "coxeter/export.hpp"
#include "coxeter/scene.hpp"

namespace coxeter::service {

inline constexpr const char* kEmptyCoconjugationReason = "translation-compatible part empty";

struct ComputeRequest {
  std::string type;
  std::string mode;
  std::string x;
  std::optional<std::string> y;
  Int bound = 0;
};

class RequestError : public std::runtime_error {
 public:
  // code is one of: bad_request, unknown_type, unknown_mode, bad_bound,
  // missing_y, unexpected_y, parse_error, unsupported_export
  RequestError(std::string code, const std::string& message, std::string field = {},
               std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)), field_(std::move(field)), offset_(offset) {}

  const std::string& code() const { return code_; }
  const std::string& field() const { return field_; }
  std::optional<std::size_t> offset() const { return offset_; }

  std::string to_json() const;

 private:
  std::string code_;
  std::string field_;
  std::optional<std::size_t> offset_;
};

struct ComputeOutcome {
  ComputeRequest request;
  ComputationResult result;
  Scene scene;
  std::string report;
  bool empty_coconjugation = false;
};

// Throws RequestError.
ComputeRequest parse_compute_request(std::string_view json_text);
ComputeOutcome run_compute(const ComputeRequest& request);

// {"scene", "report", "elements"} plus "reason" for an empty coconjugation set.
std::string response_body(const ComputeOutcome& outcome);

struct HttpReply {
  int status = 200;
  std::string body;
  double millis = 0.0;
};

HttpReply handle_compute(std::string_view request_body);

std::string types_json();
std::string examples_json();

inline constexpr Int kSuggestedBound2D = 5;
inline constexpr Int kSuggestedBound3D = 2;

}  // namespace coxeter::service
