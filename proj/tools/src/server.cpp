#include "server.hpp"

#include <cstdio>

#include "service.hpp"

namespace coxeter::service {

namespace {

constexpr const char* kJson = "application/json";

void allow_any_origin(httplib::Response& res) { res.set_header("Access-Control-Allow-Origin", "*"); }

}  // namespace

void install_routes(httplib::Server& server) {
  server.Get("/api/types", [](const httplib::Request&, httplib::Response& res) {
    allow_any_origin(res);
    res.set_content(types_json(), kJson);
  });
  server.Get("/api/examples", [](const httplib::Request&, httplib::Response& res) {
    allow_any_origin(res);
    res.set_content(examples_json(), kJson);
  });
  server.Post("/api/compute", [](const httplib::Request& req, httplib::Response& res) {
    allow_any_origin(res);
    auto reply = handle_compute(req.body);
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", reply.millis);
    res.status = reply.status;
    res.set_header("X-Compute-Millis", millis);
    res.set_content(reply.body, kJson);
  });
  server.Options("/api/compute", [](const httplib::Request&, httplib::Response& res) {
    allow_any_origin(res);
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

}  // namespace coxeter::service
