#include "senti/svm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "senti/error.hpp"

namespace senti {

void validate(const SvmParams& p) {
  if (!(p.C > 0) || !std::isfinite(p.C)) {
    throw Error(ErrorKind::InvalidParams, "C must be positive, got " + std::to_string(p.C));
  }
  if (!(p.tol > 0) || !std::isfinite(p.tol)) {
    throw Error(ErrorKind::InvalidParams, "tol must be positive, got " + std::to_string(p.tol));
  }
  if (p.max_passes < 1) throw Error(ErrorKind::InvalidParams, "max_passes must be at least 1");
  if (p.max_iters && *p.max_iters < 1) {
    throw Error(ErrorKind::InvalidParams, "max_iters must be at least 1");
  }
}

std::string pair_name(Polarity pos, Polarity neg) {
  return std::string(to_string(pos)) + "/" + std::string(to_string(neg));
}

double decision_value(const BinarySvmModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.w.size()) {
    throw Error(ErrorKind::DimensionMismatch, "instance width " + std::to_string(x.size()) +
                                                  " does not match model width " +
                                                  std::to_string(model.w.size()));
  }
  return model.w.dot(x) + model.b;
}

BinarySvmModel train_binary(const InstanceSet& data, Polarity pos, Polarity neg,
                            const SvmParams& params) {
  validate(params);
  if (pos == neg) throw Error(ErrorKind::InvalidParams, "pos and neg labels must differ");

  const auto n = static_cast<Eigen::Index>(data.size());
  RowMatrix<double> X(n, data.width);
  Vector<double> y(n);
  std::size_t n_pos = 0, n_neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& inst = data.instances[std::size_t(i)];
    if (!inst.label) throw Error(ErrorKind::UnlabeledRecord, "training instance has no label");
    if (inst.weights.size() != data.width) {
      throw Error(ErrorKind::DimensionMismatch, "instance width differs from set width");
    }
    if (*inst.label == pos) {
      y[i] = 1;
      ++n_pos;
    } else if (*inst.label == neg) {
      y[i] = -1;
      ++n_neg;
    } else {
      throw Error(ErrorKind::InvalidParams, "instance labeled " + std::string(to_string(*inst.label)) +
                                                " in " + pair_name(pos, neg) + " training set");
    }
    X.row(i) = inst.weights.transpose();
  }
  if (n_pos == 0 || n_neg == 0) {
    throw Error(ErrorKind::SingleClassData,
                "training data for " + pair_name(pos, neg) + " contains a single class");
  }

  const auto r = solve_smo(X, y, params);

  BinarySvmModel m;
  m.w = r.w;
  m.b = r.b;
  m.alphas = r.alpha;
  m.pos_label = pos;
  m.neg_label = neg;
  m.params = params;
  m.params.max_iters = params.resolved_max_iters(n);
  m.training_size = std::size_t(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r.alpha[i] > 0) ++m.stats.support_vectors;
    if (r.alpha[i] >= params.C) ++m.stats.bound_support_vectors;
  }
  const double norm = r.w.norm();
  m.stats.margin = norm > 0 ? 2.0 / norm : std::numeric_limits<double>::infinity();
  m.stats.iterations = r.iterations;
  m.stats.max_kkt_violation = r.max_kkt_violation;
  m.stats.converged = !r.hit_iteration_cap || r.max_kkt_violation <= params.tol;
  return m;
}

MulticlassModel train_one_vs_one(const InstanceSet& data, std::span<const Polarity> classes,
                                 const FeatureLexicon& lex, const VectorizeOptions& options,
                                 const SvmParams& params) {
  validate(params);
  if (data.width != static_cast<Eigen::Index>(lex.size())) {
    throw Error(ErrorKind::DimensionMismatch, "instance width does not match lexicon size");
  }
  std::vector<Polarity> sorted(classes.begin(), classes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) throw Error(ErrorKind::InvalidParams, "need at least two classes");

  std::array<std::size_t, kNumPolarities> counts{};
  for (const auto& inst : data.instances) {
    if (!inst.label) throw Error(ErrorKind::UnlabeledRecord, "training instance has no label");
    ++counts[index_of(*inst.label)];
  }
  for (Polarity p : sorted) {
    if (counts[index_of(p)] == 0) {
      throw Error(ErrorKind::MissingClass, "missing class " + std::string(to_string(p)));
    }
  }

  std::vector<std::future<BinarySvmModel>> jobs;
  std::vector<InstanceSet> subsets;
  subsets.reserve(sorted.size() * (sorted.size() - 1) / 2);
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      InstanceSet subset;
      subset.lexicon_version = data.lexicon_version;
      subset.width = data.width;
      for (const auto& inst : data.instances) {
        if (*inst.label == sorted[a] || *inst.label == sorted[b]) subset.instances.push_back(inst);
      }
      subsets.push_back(std::move(subset));
      jobs.push_back(std::async(std::launch::async, train_binary, std::cref(subsets.back()),
                                sorted[a], sorted[b], std::cref(params)));
    }
  }

  MulticlassModel model{{}, lex, options};
  for (auto& job : jobs) model.pairwise.push_back(job.get());
  return model;
}

MulticlassModel train_multiclass(const InstanceSet& data, const FeatureLexicon& lex,
                                 const VectorizeOptions& options, const SvmParams& params) {
  return train_one_vs_one(data, kAllPolarities, lex, options, params);
}

Polarity resolve_votes(std::span<const PairDecision> decisions) {
  std::array<int, kNumPolarities> votes{};
  std::array<double, kNumPolarities> strength{};
  std::array<bool, kNumPolarities> candidate{};
  for (const auto& d : decisions) {
    candidate[index_of(d.pos)] = candidate[index_of(d.neg)] = true;
    const Polarity winner = d.value >= 0 ? d.pos : d.neg;
    ++votes[index_of(winner)];
    strength[index_of(winner)] += std::abs(d.value);
  }
  std::optional<Polarity> best;
  for (Polarity p : kAllPolarities) {
    const auto i = index_of(p);
    if (!candidate[i]) continue;
    if (!best) {
      best = p;
      continue;
    }
    const auto j = index_of(*best);
    // Strict comparisons keep the earlier canonical label on exact ties.
    if (votes[i] > votes[j] || (votes[i] == votes[j] && strength[i] > strength[j])) best = p;
  }
  if (!best) throw Error(ErrorKind::InvalidParams, "no pairwise decisions to vote on");
  return *best;
}

Prediction predict(const MulticlassModel& model, const Eigen::VectorXd& x) {
  Prediction out;
  out.decisions.reserve(model.pairwise.size());
  for (const auto& m : model.pairwise) {
    out.decisions.push_back({m.pos_label, m.neg_label, decision_value(m, x)});
  }
  out.label = resolve_votes(out.decisions);
  return out;
}

Prediction classify_text(const MulticlassModel& model, std::string_view text) {
  return predict(model, vectorize_single(text, model.lexicon, model.options).weights);
}

}  // namespace senti
