#pragma once

// Small labeled point sets (<= 6 points, <= 3 dimensions) for checking the
// SMO solver against the dual oracle.

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace toy {

struct Dataset {
  std::string name;
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
};

inline Dataset make(std::string name, std::vector<std::vector<double>> rows, std::vector<double> labels) {
  Dataset d;
  d.name = std::move(name);
  d.X.resize(Eigen::Index(rows.size()), Eigen::Index(rows.front().size()));
  d.y.resize(Eigen::Index(labels.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) d.X(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
    d.y[Eigen::Index(i)] = labels[i];
  }
  return d;
}

inline std::vector<Dataset> all() {
  return {
      make("1d-pair", {{-1}, {1}}, {-1, 1}),
      make("1d-four", {{-3}, {-1}, {0.5}, {2}}, {-1, -1, 1, 1}),
      make("2d-separable-4", {{1, 1}, {2, 2}, {-1, -1}, {-2, -1}}, {1, 1, -1, -1}),
      make("2d-separable-6", {{2, 0}, {3, 1}, {2.5, -1}, {-1, 0}, {-2, 1}, {-1.5, -1}},
           {1, 1, 1, -1, -1, -1}),
      make("2d-one-overlap", {{1, 1}, {2, 1.5}, {-0.5, -0.2}, {-1, -1}, {-2, -1}, {0.3, 0.4}},
           {1, 1, 1, -1, -1, -1}),
      make("2d-unbalanced", {{1, 2}, {2, 1}, {2, 2}, {3, 3}, {1.5, 2.5}, {-1, -1}},
           {1, 1, 1, 1, 1, -1}),
      make("2d-collinear", {{0, 1}, {0, 2}, {0, -1}, {0, -3}}, {1, 1, -1, -1}),
      make("2d-duplicates", {{1, 0}, {1, 0}, {-1, 0.5}, {-1, 0.5}, {0.2, 1}}, {1, 1, -1, -1, 1}),
      make("2d-zero-point", {{0, 0}, {1, 0}, {0, 1}, {-1, -1}}, {-1, 1, 1, -1}),
      make("3d-separable-5", {{1, 0, 1}, {2, 1, 0}, {1, 1, 1}, {-1, 0, -1}, {0, -2, -1}},
           {1, 1, 1, -1, -1}),
      make("3d-overlap-6",
           {{1, 0, 0.5}, {0.5, 1, 0}, {-0.2, 0.1, 0.3}, {-1, -0.5, 0}, {0, -1, -0.5}, {0.4, 0.2, 0.1}},
           {1, 1, 1, -1, -1, -1}),
      make("3d-tfidf-like", {{0.69, 0, 0}, {0.35, 0.2, 0}, {0, 0.41, 0}, {0, 0, 0.69}, {0, 0.1, 0.35}, {0.05, 0, 0.2}},
           {1, 1, 1, -1, -1, -1}),
  };
}

inline const std::vector<double> kCValues = {0.5, 1.0, 10.0};

}  // namespace toy
