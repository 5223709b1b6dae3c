#pragma once

#include <iosfwd>
#include <string>

#include "senti/svm.hpp"

namespace senti {

inline constexpr int kModelFormatVersion = 1;

// Text layout:
//   senti-model 1
//   lexicon <term count>
//   <lexicon file contents>
//   scheme tfidf|binary
//   clamp_idf 0|1
//   fields title+body|body
//   pairs <k>
//   then per pair:
//     pair <pos> <neg>
//     b <value>
//     params C <v> tol <v> max_passes <n> max_iters <n>
//     training_size <n>
//     weights <nonzero count>
//     <index> <value>   (one line per nonzero weight)
//     end
// Reals are written in shortest round-trip form, so a reloaded model
// reproduces decision values bit for bit.
void write_model(const MulticlassModel& model, std::ostream& out);
MulticlassModel read_model(std::istream& in);

void save_model(const MulticlassModel& model, const std::string& path);
MulticlassModel load_model(const std::string& path);

}  // namespace senti
