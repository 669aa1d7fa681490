#include "rxgram/corpus.hpp"

#include <fstream>

#include "rxgram/error.hpp"
#include "rxgram/rng.hpp"

namespace rxgram {

size_t Corpus::n_sentences() const {
  size_t n = 0;
  for (const auto& d : docs) n += d.trees.size();
  return n;
}

std::vector<const Tree*> Corpus::all_trees() const {
  std::vector<const Tree*> out;
  for (const auto& d : docs)
    for (const auto& t : d.trees) out.push_back(&t);
  return out;
}

Corpus read_corpus(const std::string& path, const LabelSchema& schema) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file: " + path);
  Corpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.compare(first, 5, "#doc ") == 0) {
        Document doc;
        doc.id = line.substr(first + 5);
        corpus.docs.push_back(std::move(doc));
      }
      continue;
    }
    if (corpus.docs.empty()) corpus.docs.push_back({"0", {}});
    corpus.docs.back().trees.push_back(parse_tree_line(line, schema, line_no));
  }
  for (size_t i = 0; i < corpus.docs.size(); ++i)
    for (size_t j = i + 1; j < corpus.docs.size(); ++j)
      if (corpus.docs[i].id == corpus.docs[j].id)
        throw InvariantViolation(0, "duplicate doc id: " + corpus.docs[i].id);
  return corpus;
}

void write_corpus(const std::string& path, const Corpus& corpus) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write corpus file: " + path);
  for (const auto& d : corpus.docs) {
    out << "#doc " << d.id << "\n";
    for (const auto& t : d.trees) out << serialize_tree(t) << "\n";
  }
}

Corpus undersample(const Corpus& corpus, int ratio_l, int ratio_u, uint64_t seed) {
  if (ratio_l <= 0 || ratio_u <= 0) throw ConfigError("undersample ratio must be positive");
  size_t labeled = 0;
  std::vector<std::pair<size_t, size_t>> unlabeled_at;  // (doc, sentence)
  for (size_t d = 0; d < corpus.docs.size(); ++d)
    for (size_t s = 0; s < corpus.docs[d].trees.size(); ++s) {
      if (has_annotation(corpus.docs[d].trees[s]))
        ++labeled;
      else
        unlabeled_at.emplace_back(d, s);
    }
  size_t want = labeled * static_cast<size_t>(ratio_u) / static_cast<size_t>(ratio_l);
  std::vector<char> keep_unlabeled(unlabeled_at.size(), 1);
  if (want < unlabeled_at.size()) {
    std::vector<size_t> order(unlabeled_at.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);
    std::fill(keep_unlabeled.begin(), keep_unlabeled.end(), 0);
    for (size_t i = 0; i < want; ++i) keep_unlabeled[order[i]] = 1;
  }
  std::vector<std::vector<char>> keep(corpus.docs.size());
  for (size_t d = 0; d < corpus.docs.size(); ++d)
    keep[d].assign(corpus.docs[d].trees.size(), 1);
  for (size_t i = 0; i < unlabeled_at.size(); ++i)
    keep[unlabeled_at[i].first][unlabeled_at[i].second] = keep_unlabeled[i];

  Corpus out;
  for (size_t d = 0; d < corpus.docs.size(); ++d) {
    Document doc;
    doc.id = corpus.docs[d].id;
    for (size_t s = 0; s < corpus.docs[d].trees.size(); ++s)
      if (keep[d][s]) doc.trees.push_back(corpus.docs[d].trees[s]);
    if (!doc.trees.empty()) out.docs.push_back(std::move(doc));
  }
  return out;
}

Corpus project_corpus(const Corpus& corpus, const std::vector<Family>& keep,
                      const LabelSchema& schema) {
  Corpus out;
  for (const auto& d : corpus.docs) {
    Document doc;
    doc.id = d.id;
    for (const auto& t : d.trees) doc.trees.push_back(project_tree(t, keep, schema));
    out.docs.push_back(std::move(doc));
  }
  return out;
}

}  // namespace rxgram
