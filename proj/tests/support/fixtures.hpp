#pragma once

// Shared helpers for tests that train on the bundled synthetic reviews.

#include <algorithm>
#include <cmath>
#include <string>

#include "senti/corpus.hpp"
#include "senti/lexicon.hpp"
#include "senti/svm.hpp"
#include "senti/vectorize.hpp"

namespace fixture {

inline std::string data_path(const std::string& name) {
  return std::string(SENTI_DATA_DIR) + "/" + name;
}

struct Trained {
  senti::Corpus train;
  senti::Corpus test;
  senti::InstanceSet train_set;
  senti::MulticlassModel model;
};

inline Trained train_synthetic(const senti::SvmParams& params = {}) {
  Trained t;
  t.train = senti::load_corpus(data_path("synthetic_train.csv"), true);
  t.test = senti::load_corpus(data_path("synthetic_test.csv"), true);
  senti::LexiconParams lp;
  lp.seed_terms = senti::load_term_list(data_path("seed_terms.txt"));
  const auto lex = senti::build_lexicon(t.train, lp);
  t.train_set = senti::vectorize_corpus(t.train, lex, {}, true);
  t.model = senti::train_multiclass(t.train_set, lex, {}, params);
  return t;
}

// The pair's training subset, rebuilt the way the trainer selects it.
struct Subset {
  senti::RowMatrix<double> X;
  senti::Vector<double> y;
};

inline Subset subset_for(const senti::InstanceSet& data, const senti::BinarySvmModel& m) {
  std::vector<const senti::Instance*> rows;
  for (const auto& inst : data.instances)
    if (inst.label == m.pos_label || inst.label == m.neg_label) rows.push_back(&inst);
  Subset s;
  s.X.resize(Eigen::Index(rows.size()), Eigen::Index(data.width));
  s.y.resize(Eigen::Index(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.X.row(Eigen::Index(i)) = rows[i]->weights.transpose();
    s.y[Eigen::Index(i)] = rows[i]->label == m.pos_label ? 1.0 : -1.0;
  }
  return s;
}

// Worst-case figures of the KKT conditions for one trained pair.
struct KktFigures {
  double worst_condition = 0;  // in units of y f(x)
  double box_excess = 0;       // how far any alpha leaves [0, C]
  double equality = 0;         // |sum alpha y|
  double weight_error = 0;     // max |w - X^T (alpha * y)|
};

inline KktFigures kkt_figures(const senti::InstanceSet& data, const senti::BinarySvmModel& m) {
  const auto s = subset_for(data, m);
  const double C = m.params.C;
  const double eps = 1e-9 * C;
  KktFigures k;
  const senti::Vector<double> f = (s.X * m.w).array() + m.b;
  for (Eigen::Index i = 0; i < s.X.rows(); ++i) {
    const double a = m.alphas[i], yf = s.y[i] * f[i];
    double v = 0;
    if (a <= eps)
      v = 1.0 - yf;
    else if (a >= C - eps)
      v = yf - 1.0;
    else
      v = std::abs(yf - 1.0);
    k.worst_condition = std::max(k.worst_condition, v);
    k.box_excess = std::max({k.box_excess, -a, a - C});
  }
  k.equality = std::abs(m.alphas.dot(s.y));
  const senti::Vector<double> w = s.X.transpose() * m.alphas.cwiseProduct(s.y);
  k.weight_error = (w - m.w).cwiseAbs().maxCoeff();
  return k;
}

}  // namespace fixture
