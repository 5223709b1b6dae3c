#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "senti/polarity.hpp"

namespace senti {

// counts[machine][human], both indexed in canonical polarity order.
struct ConfusionMatrix {
  std::array<std::array<std::uint64_t, kNumPolarities>, kNumPolarities> counts{};

  std::uint64_t& at(Polarity machine, Polarity human) {
    return counts[index_of(machine)][index_of(human)];
  }
  std::uint64_t at(Polarity machine, Polarity human) const {
    return counts[index_of(machine)][index_of(human)];
  }

  std::uint64_t total() const;
  std::uint64_t trace() const;
  std::uint64_t machine_total(Polarity p) const;  // row sum
  std::uint64_t human_total(Polarity p) const;    // column sum
  ConfusionMatrix transposed() const;

  bool operator==(const ConfusionMatrix&) const = default;
};

/// A ratio whose denominator may be zero; empty means undefined.
using Ratio = std::optional<double>;

struct MachineHuman {
  Polarity machine;
  Polarity human;
};

ConfusionMatrix build_confusion(std::span<const MachineHuman> pairs);

Ratio precision(const ConfusionMatrix& cm, Polarity p);
Ratio recall(const ConfusionMatrix& cm, Polarity p);
Ratio f_measure(const ConfusionMatrix& cm, Polarity p);

/// Half-up rounding to three decimals.
double round3(double v);

/// F-measure as printed in a results table: the harmonic mean of precision
/// and recall after each has been rounded to three decimals. Differs from
/// f_measure() by at most about 0.001.
Ratio reported_f_measure(const ConfusionMatrix& cm, Polarity p);

struct ClassFigures {
  Ratio precision;
  Ratio recall;
  Ratio f_measure;
  Ratio reported_f_measure;
};

struct EvalReport {
  ConfusionMatrix matrix;
  std::array<ClassFigures, kNumPolarities> per_class{};
  std::array<std::uint64_t, kNumPolarities> human_totals{};
  std::array<std::uint64_t, kNumPolarities> machine_totals{};
  Ratio accuracy;
  Ratio macro_f_measure;  // mean of the three F values; undefined if any is
};

EvalReport report(const ConfusionMatrix& cm);

/// Half-up rounding to three decimals, "undefined" for empty ratios.
std::string format_ratio(const Ratio& r);

/// Matrix with precision/recall/F columns per machine row, followed by
/// human and machine totals and accuracy. The F column holds
/// reported_f_measure; the JSON form carries both F variants.
std::string render_text(const EvalReport& r);
std::string render_json(const EvalReport& r);

/// Reads a 3x3 matrix of counts (rows = machine label) from whitespace
/// separated text; '#' starts a comment.
ConfusionMatrix parse_confusion(const std::string& text);

}  // namespace senti
