#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "senti/lexicon.hpp"
#include "senti/smo.hpp"
#include "senti/vectorize.hpp"

namespace senti {

using SvmParams = SmoParams<double>;

/// Throws InvalidParams unless C > 0, tol > 0, max_passes >= 1 and
/// max_iters (when set) >= 1.
void validate(const SvmParams& params);

struct TrainingStats {
  std::size_t support_vectors = 0;
  std::size_t bound_support_vectors = 0;  // alpha == C
  double margin = 0;                      // 2 / |w|, infinite when w == 0
  std::int64_t iterations = 0;
  double max_kkt_violation = 0;
  bool converged = true;
};

// Hyperplane f(x) = w.x + b separating pos_label (+1) from neg_label (-1).
struct BinarySvmModel {
  Eigen::VectorXd w;
  double b = 0;
  Eigen::VectorXd alphas;  // empty for models read back from disk
  Polarity pos_label = Polarity::Positive;
  Polarity neg_label = Polarity::Negative;
  SvmParams params;
  std::size_t training_size = 0;
  TrainingStats stats;
};

double decision_value(const BinarySvmModel& model, const Eigen::VectorXd& x);

/// Trains on instances labeled pos or neg. An iteration cap hit with KKT
/// violations left is reported through stats.converged, not thrown.
BinarySvmModel train_binary(const InstanceSet& data, Polarity pos, Polarity neg,
                            const SvmParams& params);

struct MulticlassModel {
  std::vector<BinarySvmModel> pairwise;  // canonical pair order
  FeatureLexicon lexicon;
  VectorizeOptions options;
};

/// One binary model per unordered pair of `classes`, each trained on the
/// matching label-restricted subset in instance order. Pairs run concurrently.
MulticlassModel train_one_vs_one(const InstanceSet& data, std::span<const Polarity> classes,
                                 const FeatureLexicon& lex, const VectorizeOptions& options,
                                 const SvmParams& params);

/// All three polarities; throws MissingClass when one is absent.
MulticlassModel train_multiclass(const InstanceSet& data, const FeatureLexicon& lex,
                                 const VectorizeOptions& options, const SvmParams& params);

struct PairDecision {
  Polarity pos;
  Polarity neg;
  double value;
};

struct Prediction {
  Polarity label;
  std::vector<PairDecision> decisions;
};

/// Majority vote over pairwise decisions (value >= 0 votes for pos). Ties go
/// to the label with the largest sum of |value| over the pairs that voted for
/// it, then to the earliest label in canonical order.
Polarity resolve_votes(std::span<const PairDecision> decisions);

Prediction predict(const MulticlassModel& model, const Eigen::VectorXd& x);
Prediction classify_text(const MulticlassModel& model, std::string_view text);

/// Human-readable "positive/negative" pair name.
std::string pair_name(Polarity pos, Polarity neg);

}  // namespace senti
