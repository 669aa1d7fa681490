#include "rxgram/tree.hpp"

#include <algorithm>

#include "rxgram/error.hpp"

namespace rxgram {

bool Node::operator==(const Node& o) const {
  return label == o.label && token == o.token && children == o.children;
}

std::string escape_token(const std::string& raw) {
  if (raw == "(") return "-LRB-";
  if (raw == ")") return "-RRB-";
  return raw;
}

std::string unescape_token(const std::string& escaped) {
  if (escaped == "-LRB-") return "(";
  if (escaped == "-RRB-") return ")";
  return escaped;
}

namespace {

void check_token_text(const std::string& text, int line_no) {
  if (text.empty()) throw InvariantViolation(line_no, "empty token");
  if (text == "-LRB-" || text == "-RRB-")
    throw InvariantViolation(line_no, "token text collides with bracket escape: " + text);
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw InvariantViolation(line_no, "token contains whitespace");
    if (c == '(' || c == ')')
      throw InvariantViolation(line_no, "token contains unescaped bracket");
  }
}

struct LineParser {
  const std::string& s;
  const LabelSchema& schema;
  int line_no;
  size_t pos = 0;
  Sentence tokens;

  explicit LineParser(const std::string& line, const LabelSchema& sch, int ln)
      : s(line), schema(sch), line_no(ln) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw SyntaxError(line_no, static_cast<int>(at) + 1, msg);
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  std::string read_atom() {
    size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (pos == start) fail("expected token or label", pos);
    return s.substr(start, pos - start);
  }

  // node := '(' LABEL (node | token)+ ')'
  Node read_node(bool outermost) {
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') fail("expected '('", pos);
    ++pos;
    skip_ws();
    if (pos >= s.size() || s[pos] == '(' || s[pos] == ')') fail("expected label after '('", pos);
    size_t label_at = pos;
    std::string label = read_atom();
    if (outermost) {
      if (label != "ROOT") fail("outermost label must be ROOT", label_at);
    } else {
      if (label == "ROOT")
        throw InvariantViolation(line_no, "ROOT may only appear as the outermost label");
      if (!schema.has_label(label))
        throw InvariantViolation(line_no, "unknown label: " + label);
    }
    Node node = Node::nonterminal(label);
    while (true) {
      skip_ws();
      if (pos >= s.size()) fail("unbalanced brackets: missing ')'", pos);
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      if (s[pos] == '(') {
        node.children.push_back(read_node(false));
      } else {
        std::string raw = unescape_token(read_atom());
        check_token_text(raw, line_no);
        node.children.push_back(Node::terminal(static_cast<int>(tokens.size())));
        tokens.push_back(raw);
      }
    }
    if (node.children.empty())
      throw InvariantViolation(line_no, "non-terminal with no children: " + label);
    return node;
  }
};

int count_terminals(const Node& n) {
  if (n.is_terminal()) return 1;
  int c = 0;
  for (const auto& k : n.children) c += count_terminals(k);
  return c;
}

void walk_validate(const Node& n, const std::string& parent_label, const LabelSchema& schema,
                   int line_no, int& next_token) {
  if (n.is_terminal()) {
    if (n.token != next_token)
      throw InvariantViolation(line_no, "terminals must cover token indices in order");
    ++next_token;
    return;
  }
  if (n.label != "ROOT") {
    if (!schema.has_label(n.label))
      throw InvariantViolation(line_no, "unknown label: " + n.label);
    if (!schema.may_parent(parent_label == "ROOT" ? "" : parent_label, n.label))
      throw InvariantViolation(line_no, "label " + n.label + " may not appear under " +
                                            (parent_label.empty() ? "ROOT" : parent_label));
  }
  if (n.children.empty())
    throw InvariantViolation(line_no, "non-terminal with no children: " + n.label);
  int before = next_token;
  for (const auto& k : n.children)
    walk_validate(k, n.label == "ROOT" ? "" : n.label, schema, line_no, next_token);
  if (next_token == before)
    throw InvariantViolation(line_no, "non-terminal with empty yield: " + n.label);
}

}  // namespace

void validate_tree(const Tree& tree, const LabelSchema& schema, int line_no) {
  if (tree.root.label != "ROOT") throw InvariantViolation(line_no, "root label must be ROOT");
  for (const auto& t : tree.tokens) check_token_text(t, line_no);
  int next_token = 0;
  walk_validate(tree.root, "", schema, line_no, next_token);
  if (next_token != static_cast<int>(tree.tokens.size()))
    throw InvariantViolation(line_no, "tree does not cover all tokens exactly once");
  if (tree.tokens.empty()) throw InvariantViolation(line_no, "empty sentence");
}

Tree parse_tree_line(const std::string& line, const LabelSchema& schema, int line_no) {
  LineParser p(line, schema, line_no);
  p.skip_ws();
  Tree tree;
  tree.root = p.read_node(true);
  p.skip_ws();
  if (p.pos != line.size()) p.fail("trailing content after closing ')'", p.pos);
  tree.tokens = std::move(p.tokens);
  validate_tree(tree, schema, line_no);
  return tree;
}

namespace {

void serialize_node(const Node& n, const Sentence& tokens, std::string& out) {
  if (n.is_terminal()) {
    out += escape_token(tokens.at(n.token));
    return;
  }
  out += '(';
  out += n.label;
  for (const auto& k : n.children) {
    out += ' ';
    serialize_node(k, tokens, out);
  }
  out += ')';
}

}  // namespace

std::string serialize_tree(const Tree& tree) {
  std::string out;
  serialize_node(tree.root, tree.tokens, out);
  return out;
}

namespace {

// Yield interval of a node; the in-order coverage invariant makes it contiguous.
void yield_range(const Node& n, int& lo, int& hi) {
  if (n.is_terminal()) {
    lo = std::min(lo, n.token);
    hi = std::max(hi, n.token + 1);
    return;
  }
  for (const auto& k : n.children) yield_range(k, lo, hi);
}

void collect_family_spans(const Node& n, Family family, const LabelSchema& schema,
                          std::vector<Span>& out) {
  if (n.is_terminal()) return;
  if (n.label != "ROOT" && schema.family(n.label) == family) {
    int lo = 1 << 30, hi = 0;
    yield_range(n, lo, hi);
    out.push_back({n.label, lo, hi});
  }
  for (const auto& k : n.children) collect_family_spans(k, family, schema, out);
}

}  // namespace

std::vector<Span> family_spans(const Tree& tree, Family family, const LabelSchema& schema) {
  std::vector<Span> spans;
  collect_family_spans(tree.root, family, schema, spans);
  std::sort(spans.begin(), spans.end());
  return spans;
}

BioSequence tree_to_bio(const Tree& tree, Family family, const LabelSchema& schema) {
  BioSequence bio(tree.tokens.size(), "O");
  for (const auto& sp : family_spans(tree, family, schema)) {
    bio[sp.start] = "B-" + sp.label;
    for (int i = sp.start + 1; i < sp.end; ++i) bio[i] = "I-" + sp.label;
  }
  return bio;
}

void check_bio(const BioSequence& bio) {
  std::string prev = "O";
  for (size_t i = 0; i < bio.size(); ++i) {
    const std::string& tag = bio[i];
    bool ok_shape = tag == "O" || ((tag.rfind("B-", 0) == 0 || tag.rfind("I-", 0) == 0) &&
                                   tag.size() > 2);
    if (!ok_shape) throw InvariantViolation(static_cast<int>(i), "malformed BIO tag: " + tag);
    if (tag.rfind("I-", 0) == 0) {
      std::string x = tag.substr(2);
      bool prev_same = prev == "B-" + x || prev == "I-" + x;
      if (!prev_same)
        throw InvariantViolation(static_cast<int>(i), "I-" + x + " must continue B-" + x);
    }
    prev = tag;
  }
}

std::vector<Span> bio_to_spans(const BioSequence& bio) {
  check_bio(bio);
  std::vector<Span> spans;
  for (size_t i = 0; i < bio.size(); ++i) {
    if (bio[i].rfind("B-", 0) == 0) {
      std::string label = bio[i].substr(2);
      size_t j = i + 1;
      while (j < bio.size() && bio[j] == "I-" + label) ++j;
      spans.push_back({label, static_cast<int>(i), static_cast<int>(j)});
      i = j - 1;
    }
  }
  return spans;
}

namespace {

void project_children(const Node& n, const std::vector<Family>& keep, const LabelSchema& schema,
                      std::vector<Node>& out) {
  for (const auto& k : n.children) {
    if (k.is_terminal()) {
      out.push_back(k);
      continue;
    }
    bool kept = std::find(keep.begin(), keep.end(), schema.family(k.label)) != keep.end();
    if (kept) {
      Node copy = Node::nonterminal(k.label);
      project_children(k, keep, schema, copy.children);
      out.push_back(std::move(copy));
    } else {
      project_children(k, keep, schema, out);  // splice grandchildren upward
    }
  }
}

}  // namespace

Tree project_tree(const Tree& tree, const std::vector<Family>& keep, const LabelSchema& schema) {
  Tree out;
  out.tokens = tree.tokens;
  out.root = Node::nonterminal("ROOT");
  project_children(tree.root, keep, schema, out.root.children);
  return out;
}

bool has_annotation(const Tree& tree) {
  for (const auto& k : tree.root.children)
    if (!k.is_terminal()) return true;
  return false;
}

namespace {

struct PlacedSpan {
  Span span;
  size_t layer;
};

// `spans` holds only spans strictly inside [lo, hi) of the node being built.
Node build_range(int lo, int hi, const std::vector<PlacedSpan>& spans, const std::string& label) {
  Node node = Node::nonterminal(label);
  int p = lo;
  while (p < hi) {
    // Widest span starting here; on equal width the higher layer wins so an
    // equal-boundary pair nests relation-over-entity.
    const PlacedSpan* best = nullptr;
    for (const auto& ps : spans) {
      if (ps.span.start != p) continue;
      if (!best || ps.span.end > best->span.end ||
          (ps.span.end == best->span.end && ps.layer < best->layer))
        best = &ps;
    }
    if (best) {
      std::vector<PlacedSpan> inside;
      for (const auto& ps : spans) {
        if (&ps == best) continue;
        if (ps.span.start >= best->span.start && ps.span.end <= best->span.end)
          inside.push_back(ps);
      }
      node.children.push_back(
          build_range(best->span.start, best->span.end, inside, best->span.label));
      p = best->span.end;
    } else {
      node.children.push_back(Node::terminal(p));
      ++p;
    }
  }
  return node;
}

}  // namespace

Tree assemble_tree(const Sentence& tokens,
                   const std::vector<std::vector<Span>>& span_layers) {
  // Layer order is top-down: 0 = relation_outer, 1 = relation_inner, >= 2 =
  // leaf families. A span survives only if it nests cleanly under already
  // placed spans, and only relation layers may contain other spans.
  std::vector<PlacedSpan> kept;
  int n = static_cast<int>(tokens.size());
  for (size_t layer = 0; layer < span_layers.size(); ++layer) {
    for (const auto& sp : span_layers[layer]) {
      if (sp.start < 0 || sp.end > n || sp.start >= sp.end) continue;
      bool drop = false;
      const PlacedSpan* container = nullptr;
      for (const auto& k : kept) {
        bool disjoint = sp.end <= k.span.start || k.span.end <= sp.start;
        if (disjoint) continue;
        bool inside = k.span.start <= sp.start && sp.end <= k.span.end;
        if (inside) {
          if (!container || (k.span.end - k.span.start) <
                                (container->span.end - container->span.start))
            container = &k;
          continue;
        }
        drop = true;  // partial overlap, or this span would swallow a higher layer
        break;
      }
      if (!drop && container) {
        bool relation_container = container->layer <= 1;
        if (!relation_container || container->layer >= layer) drop = true;
      }
      if (!drop) kept.push_back({sp, layer});
    }
  }
  Tree tree;
  tree.tokens = tokens;
  tree.root = build_range(0, n, kept, "ROOT");
  return tree;
}

}  // namespace rxgram
