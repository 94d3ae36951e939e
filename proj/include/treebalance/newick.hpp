#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treebalance/tree.hpp"

namespace treebalance {

/// A parsed or printable Newick tree.
///
/// `labels`, when present, holds one label per leaf, indexed by the leaf's
/// position in the stored left-to-right order of `shape`.
struct NewickDocument {
  Tree shape;
  std::optional<std::vector<std::string>> labels;
};

class NewickParseError : public std::runtime_error {
 public:
  NewickParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An internal node with other than two children.
class NewickArityError : public NewickParseError {
 public:
  using NewickParseError::NewickParseError;
};

/// Parses a single binary Newick statement:
///
///   tree    := subtree ';'
///   subtree := leaf | '(' subtree ',' subtree ')' label?
///   leaf    := label?
///   label   := name (':' branch-length)?
///
/// Names are unquoted. Branch lengths and internal labels are checked for
/// form and dropped. Whitespace between tokens is ignored; anything other
/// than whitespace after the ';' is an error. If no leaf carries a name the
/// document has no labels; otherwise unnamed leaves get "".
NewickDocument parse_newick(std::string_view text);

/// Serializes with children in canonical order (larger subtree first), no
/// branch lengths. Missing labels are synthesized as t1, t2, ... in output
/// order. Throws InvalidInput for an empty shape or a label count mismatch.
std::string write_newick(const NewickDocument& doc);

std::string write_newick(const Tree& shape);

}  // namespace treebalance
