#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "senti/svm.hpp"

namespace senti {

inline constexpr std::size_t kMaxRequestBytes = 64 * 1024;

struct HttpReply {
  int status = 200;
  std::string body;
};

/// Pairwise decision values keyed by "pos/neg" pair name, as a JSON object.
std::string prediction_json(const Prediction& prediction);

/// POST /classify: body {"text": "..."} -> {"label": ..., "scores": {...}}.
/// 400 for bodies that are not a JSON object with a string "text" member,
/// 413 above kMaxRequestBytes.
HttpReply handle_classify(const MulticlassModel& model, std::string_view body);

// Two routes over an immutable model: POST /classify and GET /health.
class ClassifyServer {
 public:
  explicit ClassifyServer(std::shared_ptr<const MulticlassModel> model);
  ~ClassifyServer();
  ClassifyServer(const ClassifyServer&) = delete;
  ClassifyServer& operator=(const ClassifyServer&) = delete;

  /// Binds the listening socket; port 0 picks a free port. Throws Io when
  /// the address cannot be bound (for example, the port is in use).
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called.
  void serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace senti
