#include "senti/eval.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "senti/error.hpp"

namespace senti {
namespace {

Ratio ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t t = 0;
  for (const auto& row : counts)
    for (auto c : row) t += c;
  return t;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < kNumPolarities; ++i) t += counts[i][i];
  return t;
}

std::uint64_t ConfusionMatrix::machine_total(Polarity p) const {
  std::uint64_t t = 0;
  for (auto c : counts[index_of(p)]) t += c;
  return t;
}

std::uint64_t ConfusionMatrix::human_total(Polarity p) const {
  std::uint64_t t = 0;
  for (const auto& row : counts) t += row[index_of(p)];
  return t;
}

ConfusionMatrix ConfusionMatrix::transposed() const {
  ConfusionMatrix t;
  for (std::size_t i = 0; i < kNumPolarities; ++i)
    for (std::size_t j = 0; j < kNumPolarities; ++j) t.counts[j][i] = counts[i][j];
  return t;
}

ConfusionMatrix build_confusion(std::span<const MachineHuman> pairs) {
  ConfusionMatrix cm;
  for (const auto& p : pairs) ++cm.at(p.machine, p.human);
  return cm;
}

Ratio precision(const ConfusionMatrix& cm, Polarity p) {
  return ratio(cm.at(p, p), cm.machine_total(p));
}

Ratio recall(const ConfusionMatrix& cm, Polarity p) {
  return ratio(cm.at(p, p), cm.human_total(p));
}

Ratio f_measure(const ConfusionMatrix& cm, Polarity p) {
  const Ratio pr = precision(cm, p);
  const Ratio re = recall(cm, p);
  if (!pr || !re || *pr + *re == 0.0) return std::nullopt;
  return 2.0 * *pr * *re / (*pr + *re);
}

double round3(double v) {
  // The epsilon makes decimal midpoints such as 0.8675 round up even when
  // their binary representation sits just below the midpoint.
  return std::floor(v * 1000.0 + 0.5 + 1e-9) / 1000.0;
}

Ratio reported_f_measure(const ConfusionMatrix& cm, Polarity p) {
  const Ratio pr = precision(cm, p);
  const Ratio re = recall(cm, p);
  if (!pr || !re) return std::nullopt;
  const double rp = round3(*pr), rr = round3(*re);
  if (rp + rr == 0.0) return std::nullopt;
  return 2.0 * rp * rr / (rp + rr);
}

EvalReport report(const ConfusionMatrix& cm) {
  EvalReport r;
  r.matrix = cm;
  double f_sum = 0;
  bool f_defined = true;
  for (Polarity p : kAllPolarities) {
    const auto i = index_of(p);
    r.per_class[i] = {precision(cm, p), recall(cm, p), f_measure(cm, p),
                     reported_f_measure(cm, p)};
    r.human_totals[i] = cm.human_total(p);
    r.machine_totals[i] = cm.machine_total(p);
    if (r.per_class[i].f_measure) {
      f_sum += *r.per_class[i].f_measure;
    } else {
      f_defined = false;
    }
  }
  r.accuracy = ratio(cm.trace(), cm.total());
  if (f_defined) r.macro_f_measure = f_sum / kNumPolarities;
  return r;
}

std::string format_ratio(const Ratio& r) {
  if (!r) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", round3(*r));
  return buf;
}

std::string render_text(const EvalReport& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-13s %9s %9s %9s %10s %9s %10s\n", "machine\\human", "positive",
                "negative", "neutral", "precision", "recall", "f-measure");
  out << line;
  for (Polarity p : kAllPolarities) {
    const auto i = index_of(p);
    std::snprintf(line, sizeof line, "%-13s %9llu %9llu %9llu %10s %9s %10s\n",
                  std::string(to_string(p)).c_str(),
                  static_cast<unsigned long long>(r.matrix.counts[i][0]),
                  static_cast<unsigned long long>(r.matrix.counts[i][1]),
                  static_cast<unsigned long long>(r.matrix.counts[i][2]),
                  format_ratio(r.per_class[i].precision).c_str(),
                  format_ratio(r.per_class[i].recall).c_str(),
                  format_ratio(r.per_class[i].reported_f_measure).c_str());
    out << line;
  }
  out << '\n';
  const auto totals = [&](const char* title, const auto& t) {
    out << title;
    for (Polarity p : kAllPolarities) out << "  " << to_string(p) << ": " << t[index_of(p)];
    out << '\n';
  };
  totals("human totals:  ", r.human_totals);
  totals("machine totals:", r.machine_totals);
  out << "accuracy: " << format_ratio(r.accuracy) << " (" << r.matrix.trace() << "/"
      << r.matrix.total() << ")\n";
  out << "macro f-measure: " << format_ratio(r.macro_f_measure) << '\n';
  return out.str();
}

std::string render_json(const EvalReport& r) {
  using nlohmann::ordered_json;
  const auto value = [](const Ratio& x) -> ordered_json {
    if (!x) return nullptr;
    return *x;
  };
  ordered_json doc;
  ordered_json matrix = ordered_json::array();
  for (const auto& row : r.matrix.counts) matrix.push_back(row);
  doc["orientation"] = "rows=machine,columns=human";
  doc["labels"] = {"positive", "negative", "neutral"};
  doc["matrix"] = matrix;
  ordered_json classes = ordered_json::object();
  for (Polarity p : kAllPolarities) {
    const auto i = index_of(p);
    classes[std::string(to_string(p))] = {
        {"precision", value(r.per_class[i].precision)},
        {"recall", value(r.per_class[i].recall)},
        {"f_measure", value(r.per_class[i].f_measure)},
        {"reported_f_measure", value(r.per_class[i].reported_f_measure)},
        {"human_total", r.human_totals[i]},
        {"machine_total", r.machine_totals[i]},
    };
  }
  doc["classes"] = classes;
  doc["accuracy"] = value(r.accuracy);
  doc["macro_f_measure"] = value(r.macro_f_measure);
  doc["total"] = r.matrix.total();
  return doc.dump(2) + "\n";
}

ConfusionMatrix parse_confusion(const std::string& text) {
  std::istringstream lines(text);
  std::string cleaned;
  for (std::string line; std::getline(lines, line);) {
    cleaned += line.substr(0, line.find('#')) + ' ';
  }
  std::istringstream in(cleaned);
  ConfusionMatrix cm;
  for (auto& row : cm.counts) {
    for (auto& c : row) {
      long long v;
      if (!(in >> v) || v < 0) {
        throw Error(ErrorKind::FormatError, "confusion matrix needs 9 non-negative counts");
      }
      c = static_cast<std::uint64_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::FormatError, "confusion matrix has extra entries");
  return cm;
}

}  // namespace senti
