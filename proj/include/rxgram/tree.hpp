#pragma once

#include <string>
#include <vector>

#include "rxgram/schema.hpp"

namespace rxgram {

using Sentence = std::vector<std::string>;  // pre-tokenized, index = position

// One node of the annotation tree. A terminal holds the index of the token
// it covers; a non-terminal holds a schema label and ordered children.
struct Node {
  std::string label;  // empty for terminals
  int token = -1;     // >= 0 for terminals
  std::vector<Node> children;

  bool is_terminal() const { return token >= 0; }
  static Node terminal(int tok) {
    Node n;
    n.token = tok;
    return n;
  }
  static Node nonterminal(std::string lab, std::vector<Node> kids = {}) {
    Node n;
    n.label = std::move(lab);
    n.children = std::move(kids);
    return n;
  }
  bool operator==(const Node& o) const;
};

// Full-coverage constituency tree over a sentence. The root is an implicit
// ROOT node; labeled nesting is at most relation_outer > relation_inner >
// entity/event, enforced by validate().
struct Tree {
  Sentence tokens;
  Node root;  // label "ROOT"

  bool operator==(const Tree& o) const { return tokens == o.tokens && root == o.root; }
};

// Token-aligned span of a labeled node; end exclusive.
struct Span {
  std::string label;
  int start = 0;
  int end = 0;
  bool operator==(const Span& o) const {
    return label == o.label && start == o.start && end == o.end;
  }
  bool operator<(const Span& o) const {
    if (start != o.start) return start < o.start;
    if (end != o.end) return end < o.end;
    return label < o.label;
  }
};

using BioSequence = std::vector<std::string>;  // "O" / "B-X" / "I-X"

// --- bracketed line format -------------------------------------------------

// Parses one `(ROOT ...)` line; `line_no` only feeds error messages.
// Checks all tree invariants (coverage, arity, nesting) against the schema.
Tree parse_tree_line(const std::string& line, const LabelSchema& schema, int line_no = 1);

// Canonical single-space serialization; round-trips through parse_tree_line.
std::string serialize_tree(const Tree& tree);

std::string escape_token(const std::string& raw);
std::string unescape_token(const std::string& escaped);

// Re-checks every Tree invariant on a programmatically built tree.
void validate_tree(const Tree& tree, const LabelSchema& schema, int line_no = 0);

// --- projections -------------------------------------------------------------

// BIO tags of the unique covering ancestor of the given family, per token.
BioSequence tree_to_bio(const Tree& tree, Family family, const LabelSchema& schema);

// Maximal B-led runs; end exclusive, sorted by start.
std::vector<Span> bio_to_spans(const BioSequence& bio);

// Throws InvariantViolation when tags are not a well-formed BIO sequence.
void check_bio(const BioSequence& bio);

// Drops labeled nodes whose family is not kept, splicing children upward.
Tree project_tree(const Tree& tree, const std::vector<Family>& keep, const LabelSchema& schema);

// All labeled spans of one family, sorted by start.
std::vector<Span> family_spans(const Tree& tree, Family family, const LabelSchema& schema);

// True when the tree has at least one labeled node.
bool has_annotation(const Tree& tree);

// Builds a tree from per-family span lists (outer relations down to
// entities/events). Spans that cross a kept higher-level span boundary are
// dropped deterministically: families are placed top-down and within one
// family left-to-right, and a span is kept only if it nests cleanly.
Tree assemble_tree(const Sentence& tokens,
                   const std::vector<std::vector<Span>>& span_layers);

}  // namespace rxgram
