#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <memory>
#include <sstream>
#include <thread>

#include "senti/error.hpp"
#include "senti/pipeline.hpp"
#include "senti/service.hpp"
#include "senti/model_io.hpp"
#include "support/fixtures.hpp"

// After Eigen: <resolv.h> defines a _res macro that collides with Eigen internals.
#include <httplib.h>
#include <json.hpp>

using namespace senti;
using nlohmann::json;

namespace {

std::shared_ptr<const MulticlassModel> shared_model() {
  static const auto model =
      std::make_shared<const MulticlassModel>(fixture::train_synthetic().model);
  return model;
}

// A server on an ephemeral port, stopped and joined on scope exit.
struct LiveServer {
  ClassifyServer server;
  int port;
  std::thread thread;

  LiveServer() : server(shared_model()), port(server.bind("127.0.0.1", 0)) {
    thread = std::thread([this] { server.serve(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
};

}  // namespace

TEST_CASE("request handler") {
  const auto& m = *shared_model();
  const auto ok = handle_classify(m, R"({"text":"great shoes"})");
  CHECK(ok.status == 200);
  const auto j = json::parse(ok.body);
  CHECK(j["label"] == "positive");
  CHECK(j["scores"].size() == 3);
  CHECK(j["scores"].contains("positive/negative"));

  for (const char* bad : {"", "not json", "[1,2]", R"({"txt":"x"})", R"({"text":3})", "{\"text\":"})
    CHECK(handle_classify(m, bad).status == 400);

  const std::string big = R"({"text":")" + std::string(kMaxRequestBytes, 'a') + R"("})";
  CHECK(handle_classify(m, big).status == 413);
}

TEST_CASE("live service routes") {
  LiveServer live;
  httplib::Client client("127.0.0.1", live.port);

  const auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  const auto r = client.Post("/classify", R"({"text":"great shoes"})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(json::parse(r->body)["label"] == "positive");

  const auto bad = client.Post("/classify", "{oops", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  const auto big = client.Post("/classify", std::string(kMaxRequestBytes + 1, ' '), "text/plain");
  REQUIRE(big);
  CHECK(big->status == 413);

  CHECK(client.Get("/missing")->status == 404);
}

TEST_CASE("CLI and HTTP agree on labels") {
  namespace fs = std::filesystem;
  const auto model_path = (fs::temp_directory_path() / "senti_service_model.txt").string();
  save_model(*shared_model(), model_path);
  PipelineConfig config;
  config.model_path = model_path;

  const std::vector<std::string> texts = {"love it, beautiful and comfortable",
                                          "hate it, returned, disappointed", "it is okay",
                                          "great shoes", "", "nothing relevant here",
                                          "stiff but pretty, ok I guess"};
  std::istringstream none;
  std::ostringstream out, err;
  REQUIRE(cmd_classify(config, texts, none, out, err) == 0);
  fs::remove(model_path);

  LiveServer live;
  httplib::Client client("127.0.0.1", live.port);
  std::istringstream lines(out.str());
  for (const auto& t : texts) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    const auto r = client.Post("/classify", json{{"text", t}}.dump(), "application/json");
    REQUIRE(r);
    CHECK(line.substr(0, line.find('\t')) == json::parse(r->body)["label"].get<std::string>());
  }
}

TEST_CASE("concurrent requests see the same model") {
  LiveServer live;
  std::vector<std::thread> workers;
  std::atomic<int> agree{0};
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&] {
      httplib::Client client("127.0.0.1", live.port);
      for (int i = 0; i < 10; ++i) {
        const auto r = client.Post("/classify", R"({"text":"hate it"})", "application/json");
        if (r && r->status == 200 && json::parse(r->body)["label"] == "negative") ++agree;
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(agree == 80);
}

TEST_CASE("a port already in use fails at startup") {
  LiveServer live;
  ClassifyServer second(shared_model());
  try {
    second.bind("127.0.0.1", live.port);
    FAIL("expected bind to fail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}
