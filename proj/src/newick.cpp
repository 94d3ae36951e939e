#include "treebalance/newick.hpp"

#include <charconv>
#include <utility>

#include "treebalance/errors.hpp"

namespace treebalance {

NewickParseError::NewickParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_char(char c) {
  switch (c) {
    case '(':
    case ')':
    case ',':
    case ':':
    case ';':
    case '[':
    case ']':
    case '\'':
    case '"':
      return false;
    default:
      return !is_space(c);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NewickDocument run() {
    skip_space();
    if (at_end()) {
      throw NewickParseError("empty input", pos_);
    }

    struct Frame {
      std::size_t open;
      std::vector<Tree> children;
    };
    std::vector<Frame> open;
    Tree current;
    bool want_subtree = true;

    while (true) {
      skip_space();
      if (want_subtree) {
        if (peek() == '(') {
          open.push_back({pos_, {}});
          ++pos_;
          continue;
        }
        std::string name = read_name();
        skip_branch_length();
        any_label_ = any_label_ || !name.empty();
        labels_.push_back(std::move(name));
        current = Tree::leaf();
        want_subtree = false;
        continue;
      }

      if (open.empty()) {
        if (at_end()) {
          throw NewickParseError("missing ';'", pos_);
        }
        if (peek() != ';') {
          throw NewickParseError(peek() == ')' ? "unbalanced parentheses: unexpected ')'"
                                               : std::string("unexpected character '") +
                                                     peek() + "', expected ';'",
                                 pos_);
        }
        ++pos_;
        skip_space();
        if (!at_end()) {
          throw NewickParseError("unexpected content after ';'", pos_);
        }
        break;
      }

      if (at_end()) {
        throw NewickParseError("unbalanced parentheses: missing ')'", pos_);
      }
      const char c = peek();
      if (c == ',') {
        open.back().children.push_back(std::move(current));
        ++pos_;
        want_subtree = true;
      } else if (c == ')') {
        Frame frame = std::move(open.back());
        open.pop_back();
        frame.children.push_back(std::move(current));
        ++pos_;
        if (frame.children.size() != 2) {
          throw NewickArityError("internal node has " + std::to_string(frame.children.size()) +
                                     " children, expected 2",
                                 frame.open);
        }
        current = Tree::join(std::move(frame.children[0]), std::move(frame.children[1]));
        skip_space();
        read_name();  // internal label, dropped
        skip_branch_length();
      } else if (c == ';') {
        throw NewickParseError("unbalanced parentheses: missing ')'", pos_);
      } else {
        throw NewickParseError(std::string("unexpected character '") + c + "'", pos_);
      }
    }

    NewickDocument doc{std::move(current), std::nullopt};
    if (any_label_) {
      doc.labels = std::move(labels_);
    }
    return doc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) {
      ++pos_;
    }
  }

  void reject_unsupported() {
    const char c = peek();
    if (c == '[') {
      throw NewickParseError("comments are not supported", pos_);
    }
    if (c == '\'' || c == '"') {
      throw NewickParseError("quoted labels are not supported", pos_);
    }
  }

  std::string read_name() {
    reject_unsupported();
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(text_[pos_])) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    reject_unsupported();
    return name;
  }

  void skip_branch_length() {
    skip_space();
    if (peek() != ':') {
      return;
    }
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(text_[pos_])) {
      ++pos_;
    }
    double length = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, length);
    if (start == pos_ || ec != std::errc() || ptr != last) {
      throw NewickParseError("malformed branch length", start);
    }
    skip_space();
    reject_unsupported();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> labels_;
  bool any_label_ = false;
};

class Writer {
 public:
  explicit Writer(const std::vector<std::string>* labels) : labels_(labels) {}

  void emit(const Tree& root, std::size_t root_first_leaf) {
    // Explicit stack: a null tree stands for a literal punctuation char.
    struct Item {
      const Tree* tree;
      std::size_t first_leaf;
      char literal;
    };
    std::vector<Item> stack{{&root, root_first_leaf, '\0'}};
    while (!stack.empty()) {
      const Item item = stack.back();
      stack.pop_back();
      if (item.tree == nullptr) {
        out_ += item.literal;
        continue;
      }
      const Tree& t = *item.tree;
      if (t.is_leaf()) {
        if (labels_ != nullptr) {
          out_ += (*labels_)[item.first_leaf];
        } else {
          out_ += 't';
          out_ += std::to_string(++synthesized_);
        }
        continue;
      }
      const Tree* a = &t.left();
      const Tree* b = &t.right();
      std::size_t a_first = item.first_leaf;
      std::size_t b_first = item.first_leaf + a->leaf_count();
      if (canonical_child_before(*b, *a)) {
        std::swap(a, b);
        std::swap(a_first, b_first);
      }
      out_ += '(';
      stack.push_back({nullptr, 0, ')'});
      stack.push_back({b, b_first, '\0'});
      stack.push_back({nullptr, 0, ','});
      stack.push_back({a, a_first, '\0'});
    }
  }

  std::string take() { return std::move(out_); }

 private:
  const std::vector<std::string>* labels_;
  std::string out_;
  std::size_t synthesized_ = 0;
};

}  // namespace

NewickDocument parse_newick(std::string_view text) { return Parser(text).run(); }

std::string write_newick(const NewickDocument& doc) {
  if (doc.shape.is_empty()) {
    throw InvalidInput("write_newick: the empty tree has no Newick form");
  }
  const std::vector<std::string>* labels = nullptr;
  if (doc.labels) {
    if (doc.labels->size() != doc.shape.leaf_count()) {
      throw InvalidInput("write_newick: expected " + std::to_string(doc.shape.leaf_count()) +
                         " labels, got " + std::to_string(doc.labels->size()));
    }
    for (const std::string& label : *doc.labels) {
      for (char c : label) {
        if (!is_name_char(c)) {
          throw InvalidInput("write_newick: label '" + label +
                             "' cannot be written unquoted");
        }
      }
    }
    labels = &*doc.labels;
  }
  Writer writer(labels);
  writer.emit(doc.shape, 0);
  return writer.take() + ";";
}

std::string write_newick(const Tree& shape) { return write_newick(NewickDocument{shape, {}}); }

}  // namespace treebalance
