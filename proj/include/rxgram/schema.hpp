#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace rxgram {

// Hierarchy level of an annotation label. Outer relations may parent inner
// relations, entities, events and raw tokens; inner relations may parent
// entities, events and raw tokens; entities and events parent tokens only.
enum class Family { entity, event, relation_inner, relation_outer };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Label inventory with the family of each label. Families are declared in
// a schema file, never inferred from data. The label order is canonical:
// it fixes action indices and feature tagset order.
class LabelSchema {
 public:
  LabelSchema() = default;
  LabelSchema(std::vector<std::string> labels,
              std::unordered_map<std::string, Family> families,
              std::vector<std::string> drug_labels);

  static LabelSchema from_json_file(const std::string& path);
  static LabelSchema from_json_text(const std::string& text);
  std::string to_json_text() const;
  void save(const std::string& path) const;

  const std::vector<std::string>& labels() const { return labels_; }
  size_t size() const { return labels_.size(); }
  bool has_label(const std::string& label) const;
  int label_id(const std::string& label) const;  // -1 if unknown
  const std::string& label(int id) const { return labels_.at(id); }
  Family family(const std::string& label) const;
  Family family_of(int id) const { return family_by_id_.at(id); }
  std::vector<std::string> labels_of(Family f) const;

  // Drug-side labels for relation pairing (e.g. Drug_name, Drug_class).
  const std::vector<std::string>& drug_labels() const { return drug_labels_; }
  bool is_drug_label(const std::string& label) const;

  // True when `parent` may dominate `child` (ROOT passed as empty string).
  bool may_parent(const std::string& parent, const std::string& child) const;

  uint64_t hash() const;

 private:
  void check() const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Family> families_;
  std::vector<Family> family_by_id_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> drug_labels_;
};

// FNV-1a over a string; used for schema/rules fingerprints in checkpoints.
uint64_t fnv1a64(const std::string& text);
std::string hash_hex(uint64_t h);

}  // namespace rxgram
