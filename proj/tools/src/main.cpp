#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "server.hpp"
#include "service.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitEmpty = 3;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    std::cerr << "coxeter: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int default_port() {
  if (const char* env = std::getenv("COXETER_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "coxeter: ignoring invalid COXETER_PORT '" << env << "'\n";
    }
  }
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace coxeter;

  CLI::App app{"Conjugacy classes, coconjugation sets and centralizers in affine Weyl groups"};
  app.require_subcommand(1);

  service::ComputeRequest request;
  std::string y;
  std::string svg_path, json_path, report_path;
  auto* compute = app.add_subcommand("compute", "Run one computation and write its artifacts");
  compute->add_option("--type", request.type, "A1xA1, A2, B2, C2, G2, A3, B3 or C3")->required();
  compute->add_option("--mode", request.mode, "conjugacy_class, coconjugation or centralizer")->required();
  compute->add_option("-x", request.x, "Element as a generator word or t_(..)*s_..")->required();
  auto* y_opt = compute->add_option("-y", y, "Second element (coconjugation only)");
  compute->add_option("--bound", request.bound, "Bounding box size, 1-15")->required();
  compute->add_option("--svg", svg_path, "Write a 2D SVG drawing");
  compute->add_option("--json", json_path, "Write the scene JSON document");
  compute->add_option("--report", report_path, "Write the text report (default: standard output)");

  std::string host = "127.0.0.1";
  int port = default_port();
  auto* serve = app.add_subcommand("serve", "Start the HTTP compute service");
  serve->add_option("--host", host, "Address to bind")->capture_default_str();
  serve->add_option("--port", port, "Port (default from COXETER_PORT, else 8080)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (serve->parsed()) {
    httplib::Server server;
    service::install_routes(server);
    std::cerr << "coxeter: listening on http://" << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
      std::cerr << "coxeter: cannot bind " << host << ":" << port << "\n";
      return kExitIo;
    }
    return kExitOk;
  }

  if (*y_opt) request.y = y;
  service::ComputeOutcome outcome;
  try {
    outcome = service::run_compute(request);
    if (!svg_path.empty() && outcome.scene.dimension != 2)
      throw service::RequestError("unsupported_export", "SVG export supports 2D types only", "svg");
  } catch (const service::RequestError& e) {
    std::cerr << "coxeter: " << e.code() << ": " << e.what();
    if (!e.field().empty()) std::cerr << " [field " << e.field() << "]";
    std::cerr << "\n";
    return kExitInvalid;
  }

  bool ok = true;
  if (report_path.empty())
    std::cout << outcome.report;
  else
    ok = write_file(report_path, outcome.report) && ok;
  if (!svg_path.empty()) ok = write_file(svg_path, export_svg(outcome.scene)) && ok;
  if (!json_path.empty()) ok = write_file(json_path, export_scene_json(outcome.scene, outcome.report)) && ok;
  if (!ok) return kExitIo;
  if (outcome.empty_coconjugation) {
    std::cerr << "coxeter: coconjugation set is empty: " << service::kEmptyCoconjugationReason << "\n";
    return kExitEmpty;
  }
  return kExitOk;
}
