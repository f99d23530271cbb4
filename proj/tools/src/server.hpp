#pragma once

#include "httplib.h"

namespace coxeter::service {

// GET /api/types, POST /api/compute, GET /api/examples
void install_routes(httplib::Server& server);

}  // namespace coxeter::service
