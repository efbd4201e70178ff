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

#include "mdm/service/http_server.h"

#include "httplib.h"
#include "mdm/common/error.h"

namespace mdm::service {

namespace {

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

std::string steward(const httplib::Request& req) {
  auto id = req.get_header_value(kStewardHeader);
  return id.empty() ? "anonymous" : id;
}

std::uint64_t parse_uint(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] != '-') {
      auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, std::string("invalid ") + what + ": " + text);
}

Json parse_body(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("request body is not JSON: ") + e.what());
  }
}

template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      send_json(res, {{"error", error_code_name(e.code())}, {"message", e.what()}}, http_status(e.code()));
    } catch (const Json::exception& e) {
      send_json(res, {{"error", error_code_name(ErrorCode::kInvalidArgument)}, {"message", e.what()}}, 400);
    } catch (const std::exception& e) {
      send_json(res, {{"error", "internal"}, {"message", e.what()}}, 500);
    }
  };
}

}  // namespace

HttpServer::HttpServer(Service& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  Service& svc = service_;
  // SO_REUSEADDR only: the default also sets SO_REUSEPORT, which would let a
  // second server share the port instead of reporting PortInUse.
  s.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
  });

  s.Get("/health", guarded([&svc](const auto&, auto& res) { send_json(res, svc.health()); }));

  s.Get("/predictions", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          std::optional<Status> status;
          if (req.has_param("status") && !req.get_param_value("status").empty())
            status = parse_status(req.get_param_value("status"));
          std::size_t limit = req.has_param("limit") ? parse_uint(req.get_param_value("limit"), "limit") : 100;
          std::size_t offset = req.has_param("offset") ? parse_uint(req.get_param_value("offset"), "offset") : 0;
          send_json(res, svc.list_predictions(status, limit, offset));
        }));

  s.Get(R"(/predictions/(\d+))", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          send_json(res, svc.prediction(parse_uint(req.matches[1], "id")));
        }));

  s.Get(R"(/predictions/(\d+)/explanation)", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          send_json(res, svc.explanation(parse_uint(req.matches[1], "id")));
        }));

  s.Post(R"(/predictions/(\d+)/feedback)", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           send_json(res, svc.feedback(parse_uint(req.matches[1], "id"), body.at("decision").get<std::string>(),
                                       body.value("note", std::string{}), steward(req)));
         }));

  s.Post("/watchlist", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
           const auto body = parse_body(req);
           std::optional<std::size_t> top_k;
           if (body.contains("top_k") && !body.at("top_k").is_null()) top_k = body.at("top_k").get<std::size_t>();
           send_json(res, svc.post_watchlist(body.at("node_ids").get<std::vector<std::int64_t>>(), top_k,
                                             steward(req)));
         }));

  s.Get("/thresholds", guarded([&svc](const auto&, auto& res) { send_json(res, svc.thresholds()); }));

  s.Put("/thresholds", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          const auto body = parse_body(req);
          match::Thresholds t{body.at("autolink").get<double>(), body.at("review").get<double>()};
          send_json(res, svc.put_thresholds(t, steward(req)));
        }));

  s.Get("/graphsheet", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          const auto format =
              graphsheet::parse_format(req.has_param("format") ? req.get_param_value("format") : "json");
          res.set_content(svc.graphsheet(format),
                          format == graphsheet::Format::kJson ? "application/json" : "text/markdown");
        }));

  s.Get(R"(/nodes/(-?\d+))", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
          send_json(res, svc.node(std::stoll(req.matches[1])));
        }));
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
    if (port_ < 0) throw Error(ErrorCode::kPortInUse, "cannot bind " + host);
  } else {
    if (!server_->bind_to_port(host, port))
      throw Error(ErrorCode::kPortInUse, "cannot bind " + host + ":" + std::to_string(port));
    port_ = port;
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void HttpServer::wait() {
  if (thread_.joinable()) thread_.join();
}

void HttpServer::interrupt() {
  if (server_) server_->stop();
}

void HttpServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace mdm::service
