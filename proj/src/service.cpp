#include "senti/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "senti/error.hpp"

namespace senti {
namespace {

std::string error_body(const std::string& message) {
  return nlohmann::ordered_json{{"error", message}}.dump();
}

}  // namespace

std::string prediction_json(const Prediction& prediction) {
  nlohmann::ordered_json scores = nlohmann::ordered_json::object();
  for (const auto& d : prediction.decisions) scores[pair_name(d.pos, d.neg)] = d.value;
  nlohmann::ordered_json doc;
  doc["label"] = std::string(to_string(prediction.label));
  doc["scores"] = scores;
  return doc.dump();
}

HttpReply handle_classify(const MulticlassModel& model, std::string_view body) {
  if (body.size() > kMaxRequestBytes) {
    return {413, error_body("request body exceeds " + std::to_string(kMaxRequestBytes) + " bytes")};
  }
  const auto doc = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return {400, error_body("body must be a JSON object")};
  const auto it = doc.find("text");
  if (it == doc.end() || !it->is_string()) {
    return {400, error_body("body must contain a string field \"text\"")};
  }
  return {200, prediction_json(classify_text(model, it->get<std::string>()))};
}

struct ClassifyServer::Impl {
  std::shared_ptr<const MulticlassModel> model;
  httplib::Server server;
};

ClassifyServer::ClassifyServer(std::shared_ptr<const MulticlassModel> model)
    : impl_(std::make_unique<Impl>()) {
  impl_->model = std::move(model);
  impl_->server.set_payload_max_length(kMaxRequestBytes);
  // httplib defaults to SO_REUSEPORT, which would let a second server share
  // a busy port silently. Plain SO_REUSEADDR still fails on a live listener.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  const auto* m = impl_->model.get();
  impl_->server.Post("/classify", [m](const httplib::Request& req, httplib::Response& res) {
    auto reply = handle_classify(*m, req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  impl_->server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });
}

ClassifyServer::~ClassifyServer() { stop(); }

int ClassifyServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorKind::Io, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorKind::Io, "cannot bind " + host + ":" + std::to_string(port) +
                                   " (port in use?)");
  }
  return port;
}

void ClassifyServer::serve() { impl_->server.listen_after_bind(); }

void ClassifyServer::stop() {
  if (impl_) impl_->server.stop();
}

void ClassifyServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace senti
