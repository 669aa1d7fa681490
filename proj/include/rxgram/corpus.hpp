#pragma once

#include <string>
#include <vector>

#include "rxgram/tree.hpp"

namespace rxgram {

struct Document {
  std::string id;
  std::vector<Tree> trees;
};

// A split of the dataset. Sentences are grouped by document; doc ids are
// unique within a corpus.
struct Corpus {
  std::vector<Document> docs;

  size_t n_sentences() const;
  // Flat sentence view in document order.
  std::vector<const Tree*> all_trees() const;
};

// One tree per line; `#doc <id>` lines open a new document, `#`-prefixed
// lines are otherwise comments, blank lines are skipped. Files without doc
// markers yield a single document "0".
Corpus read_corpus(const std::string& path, const LabelSchema& schema);
void write_corpus(const std::string& path, const Corpus& corpus);

// Keeps every sentence with at least one labeled node and a deterministic
// uniform sample (without replacement) of unlabeled sentences so that
// labeled:unlabeled approaches ratio_l:ratio_u. Document grouping and
// sentence order are preserved.
Corpus undersample(const Corpus& corpus, int ratio_l, int ratio_u, uint64_t seed);

// Applies project_tree to every sentence.
Corpus project_corpus(const Corpus& corpus, const std::vector<Family>& keep,
                      const LabelSchema& schema);

}  // namespace rxgram
