#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "senti/eval.hpp"

using namespace senti;

namespace {

using P = Polarity;

// Published results: rows are machine labels, columns human labels.
ConfusionMatrix published_matrix() {
  ConfusionMatrix cm;
  cm.counts = {{{133, 1, 15}, {0, 102, 3}, {7, 27, 112}}};
  return cm;
}

ConfusionMatrix random_matrix(std::mt19937_64& rng, int max_count) {
  ConfusionMatrix cm;
  for (auto& row : cm.counts)
    for (auto& c : row) c = rng() % std::uint64_t(max_count + 1);
  return cm;
}

}  // namespace

TEST_CASE("published confusion matrix") {
  const auto cm = published_matrix();
  CHECK(*precision(cm, P::Positive) == doctest::Approx(133.0 / 149));
  CHECK(*recall(cm, P::Positive) == doctest::Approx(133.0 / 140));
  CHECK(*precision(cm, P::Negative) == doctest::Approx(102.0 / 105));
  CHECK(*recall(cm, P::Negative) == doctest::Approx(102.0 / 130));
  CHECK(*precision(cm, P::Neutral) == doctest::Approx(112.0 / 146));
  CHECK(*recall(cm, P::Neutral) == doctest::Approx(112.0 / 130));

  const double published[3][3] = {{0.893, 0.950, 0.921}, {0.971, 0.785, 0.868}, {0.767, 0.862, 0.812}};
  for (P p : kAllPolarities) {
    const auto& row = published[index_of(p)];
    CHECK(std::abs(*precision(cm, p) - row[0]) <= 0.0005);
    CHECK(std::abs(*recall(cm, p) - row[1]) <= 0.0005);
    CHECK(std::abs(*reported_f_measure(cm, p) - row[2]) <= 0.0005);
    CHECK(std::abs(*f_measure(cm, p) - row[2]) <= 0.0011);
  }
  CHECK(cm.human_total(P::Positive) == 140);
  CHECK(cm.human_total(P::Negative) == 130);
  CHECK(cm.human_total(P::Neutral) == 130);
  CHECK(cm.machine_total(P::Positive) == 149);
  CHECK(cm.machine_total(P::Negative) == 105);
  CHECK(cm.machine_total(P::Neutral) == 146);
  CHECK(cm.total() == 400);
  CHECK(*report(cm).accuracy == 0.8675);
}

TEST_CASE("matrix rebuilt from 400 labeled pairs") {
  std::vector<MachineHuman> pairs;
  const auto ref = published_matrix();
  for (P m : kAllPolarities)
    for (P h : kAllPolarities)
      for (std::uint64_t k = 0; k < ref.at(m, h); ++k) pairs.push_back({m, h});
  CHECK(pairs.size() == 400);
  CHECK(build_confusion(pairs) == ref);
}

TEST_CASE("small confusion examples") {
  const std::vector<MachineHuman> one = {{P::Positive, P::Positive}};
  const auto cm = build_confusion(one);
  CHECK(*precision(cm, P::Positive) == 1.0);
  CHECK(*recall(cm, P::Positive) == 1.0);
  CHECK_FALSE(precision(cm, P::Negative));
  CHECK_FALSE(recall(cm, P::Negative));
  CHECK_FALSE(f_measure(cm, P::Negative));

  const std::vector<MachineHuman> miss = {{P::Negative, P::Positive}};
  const auto cm2 = build_confusion(miss);
  CHECK(cm2.at(P::Negative, P::Positive) == 1);
  CHECK(*precision(cm2, P::Negative) == 0.0);
  CHECK(*recall(cm2, P::Positive) == 0.0);
  CHECK_FALSE(f_measure(cm2, P::Negative));  // P = 0 and R undefined
  // Both defined but zero: F is undefined rather than 0/0.
  const std::vector<MachineHuman> cross = {{P::Negative, P::Positive}, {P::Positive, P::Negative}};
  CHECK_FALSE(f_measure(build_confusion(cross), P::Positive));

  CHECK_FALSE(report(ConfusionMatrix{}).accuracy);
  CHECK_FALSE(report(ConfusionMatrix{}).macro_f_measure);
}

TEST_CASE("identity matrix scores perfectly") {
  ConfusionMatrix cm;
  for (P p : kAllPolarities) cm.at(p, p) = 7;
  const auto r = report(cm);
  for (const auto& f : r.per_class) {
    CHECK(*f.precision == 1.0);
    CHECK(*f.recall == 1.0);
    CHECK(*f.f_measure == 1.0);
  }
  CHECK(*r.accuracy == 1.0);
  CHECK(*r.macro_f_measure == 1.0);
}

TEST_CASE("half-up rounding") {
  CHECK(round3(0.8925) == 0.893);
  CHECK(round3(0.0005) == 0.001);
  CHECK(round3(0.9204) == 0.92);
  CHECK(format_ratio(0.8925) == "0.893");
  CHECK(format_ratio(1.0) == "1.000");
  CHECK(format_ratio(std::nullopt) == "undefined");
}

TEST_CASE("algebraic properties on random matrices") {
  std::mt19937_64 rng(2015);
  for (int trial = 0; trial < 500; ++trial) {
    const auto cm = random_matrix(rng, trial % 2 ? 3 : 40);
    const auto t = cm.transposed();
    CHECK(t.transposed() == cm);
    for (P p : kAllPolarities) {
      CHECK(precision(t, p) == recall(cm, p));
      CHECK(recall(t, p) == precision(cm, p));
      for (const auto& r : {precision(cm, p), recall(cm, p), f_measure(cm, p)}) {
        if (!r) continue;
        CHECK(*r >= 0.0);
        CHECK(*r <= 1.0);
      }
      // Undefined exactly when the denominator is zero, never a silent 0.
      CHECK(precision(cm, p).has_value() == (cm.machine_total(p) > 0));
      CHECK(recall(cm, p).has_value() == (cm.human_total(p) > 0));
    }
    // Micro-averaged precision over all classes equals accuracy.
    if (cm.total() > 0) {
      std::uint64_t tp = 0, predicted = 0;
      for (P p : kAllPolarities) {
        tp += cm.at(p, p);
        predicted += cm.machine_total(p);
      }
      CHECK(double(tp) / double(predicted) == *report(cm).accuracy);
    }
  }
}

TEST_CASE("matrix agrees with a brute-force recount") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MachineHuman> pairs(rng() % 51);
    for (auto& mh : pairs) mh = {kAllPolarities[rng() % 3], kAllPolarities[rng() % 3]};
    const auto cm = build_confusion(pairs);
    CHECK(cm.total() == pairs.size());
    for (P m : kAllPolarities)
      for (P h : kAllPolarities)
        CHECK(cm.at(m, h) == std::uint64_t(std::count_if(pairs.begin(), pairs.end(), [&](auto& x) {
                return x.machine == m && x.human == h;
              })));
  }
}

TEST_CASE("text rendering of the published matrix") {
  const auto text = render_text(report(published_matrix()));
  for (const char* needle : {"0.893", "0.950", "0.921", "0.971", "0.785", "0.868", "0.767", "0.862",
                             "0.812", "140", "149", "0.868"})
    CHECK(text.find(needle) != std::string::npos);
  CHECK(text.find("undefined") == std::string::npos);
  CHECK(render_text(report(ConfusionMatrix{})).find("undefined") != std::string::npos);
}

TEST_CASE("json rendering carries both F variants and nulls") {
  const auto j = nlohmann::json::parse(render_json(report(published_matrix())));
  CHECK(j["accuracy"].get<double>() == 0.8675);
  const auto& pos = j["classes"]["positive"];
  CHECK(pos["precision"].get<double>() == doctest::Approx(133.0 / 149));
  CHECK(pos["reported_f_measure"].get<double>() == doctest::Approx(0.921).epsilon(1e-3));
  CHECK(pos["f_measure"].get<double>() == doctest::Approx(0.92042).epsilon(1e-4));
  CHECK(j["matrix"][0][0] == 133);
  const auto empty = nlohmann::json::parse(render_json(report(ConfusionMatrix{})));
  CHECK(empty["accuracy"].is_null());
  CHECK(empty["classes"]["neutral"]["precision"].is_null());
}

TEST_CASE("parsing a stored matrix") {
  CHECK(parse_confusion("# rows: machine\n133 1 15\n0 102 3\n7 27 112 # last\n") == published_matrix());
  CHECK_THROWS(parse_confusion("1 2 3\n4 5 6\n"));
  CHECK_THROWS(parse_confusion("1 2 3 4 5 6 7 8 x"));
  CHECK_THROWS(parse_confusion("1 2 3 4 5 6 7 8 9 10"));
}
