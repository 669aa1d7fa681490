#include "rxgram/schema.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rxgram/error.hpp"

namespace rxgram {

using nlohmann::json;

const char* family_name(Family f) {
  switch (f) {
    case Family::entity: return "entity";
    case Family::event: return "event";
    case Family::relation_inner: return "relation_inner";
    case Family::relation_outer: return "relation_outer";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "entity") return Family::entity;
  if (name == "event") return Family::event;
  if (name == "relation_inner") return Family::relation_inner;
  if (name == "relation_outer") return Family::relation_outer;
  throw SchemaError("unknown label family: " + name);
}

LabelSchema::LabelSchema(std::vector<std::string> labels,
                         std::unordered_map<std::string, Family> families,
                         std::vector<std::string> drug_labels)
    : labels_(std::move(labels)),
      families_(std::move(families)),
      drug_labels_(std::move(drug_labels)) {
  check();
  family_by_id_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    ids_[labels_[i]] = static_cast<int>(i);
    family_by_id_.push_back(families_.at(labels_[i]));
  }
}

void LabelSchema::check() const {
  for (const auto& l : labels_) {
    if (l.empty() || l == "ROOT") throw SchemaError("bad label name: '" + l + "'");
    for (char c : l) {
      if (c == '(' || c == ')' || c == ' ' || c == '\t')
        throw SchemaError("label contains reserved character: " + l);
    }
    if (!families_.count(l)) throw SchemaError("label missing family: " + l);
  }
  if (families_.size() != labels_.size())
    throw SchemaError("family map does not match label list");
  for (const auto& d : drug_labels_) {
    auto it = families_.find(d);
    if (it == families_.end()) throw SchemaError("drug label not in schema: " + d);
    if (it->second != Family::entity)
      throw SchemaError("drug label must be an entity label: " + d);
  }
}

bool LabelSchema::has_label(const std::string& label) const { return ids_.count(label) > 0; }

int LabelSchema::label_id(const std::string& label) const {
  auto it = ids_.find(label);
  return it == ids_.end() ? -1 : it->second;
}

Family LabelSchema::family(const std::string& label) const {
  auto it = families_.find(label);
  if (it == families_.end()) throw SchemaError("label not in schema: " + label);
  return it->second;
}

std::vector<std::string> LabelSchema::labels_of(Family f) const {
  std::vector<std::string> out;
  for (const auto& l : labels_)
    if (families_.at(l) == f) out.push_back(l);
  return out;
}

bool LabelSchema::is_drug_label(const std::string& label) const {
  return std::find(drug_labels_.begin(), drug_labels_.end(), label) != drug_labels_.end();
}

bool LabelSchema::may_parent(const std::string& parent, const std::string& child) const {
  Family cf = family(child);
  if (parent.empty()) return true;  // ROOT dominates anything
  switch (family(parent)) {
    case Family::relation_outer:
      return cf == Family::relation_inner || cf == Family::entity || cf == Family::event;
    case Family::relation_inner:
      return cf == Family::entity || cf == Family::event;
    case Family::entity:
    case Family::event:
      return false;  // leaves of the labeled hierarchy: tokens only
  }
  return false;
}

LabelSchema LabelSchema::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, Family> families;
  std::vector<std::string> drugs;
  try {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    for (auto it = j.at("families").begin(); it != j.at("families").end(); ++it)
      families[it.key()] = family_from_name(it.value().get<std::string>());
    if (j.contains("drug_labels"))
      for (const auto& d : j["drug_labels"]) drugs.push_back(d.get<std::string>());
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema JSON shape: ") + e.what());
  }
  return LabelSchema(std::move(labels), std::move(families), std::move(drugs));
}

LabelSchema LabelSchema::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open schema file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string LabelSchema::to_json_text() const {
  json j;
  j["labels"] = labels_;
  json fam = json::object();
  for (const auto& l : labels_) fam[l] = family_name(families_.at(l));
  j["families"] = fam;
  j["drug_labels"] = drug_labels_;
  return j.dump(2) + "\n";
}

void LabelSchema::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write schema file: " + path);
  out << to_json_text();
}

uint64_t LabelSchema::hash() const {
  // Canonical digest: ordered labels with families and drug flags.
  std::string s;
  for (const auto& l : labels_) {
    s += l;
    s += '|';
    s += family_name(families_.at(l));
    s += is_drug_label(l) ? "|drug;" : ";";
  }
  return fnv1a64(s);
}

uint64_t fnv1a64(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace rxgram
