// Copyright 2026 The MDM Link Prediction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <thread>

#include "mdm/service/service.h"

namespace httplib {
class Server;
}

namespace mdm::service {

inline constexpr const char* kStewardHeader = "X-Steward-Id";

// HTTP+JSON transport over a Service. Errors come back as
// {"error": code, "message": text} with http_status(code).
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  // Binds host:port (port 0 picks a free port) and serves on a background
  // thread. Throws PortInUse when the port cannot be bound.
  int start(const std::string& host, int port);
  // Blocks until the server started by start() stops.
  void wait();
  // Asks the listener to return without joining; safe from a signal handler.
  void interrupt();
  void stop();
  int port() const { return port_; }

 private:
  Service& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace mdm::service
