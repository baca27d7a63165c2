#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hosmt {

/// Core sort: an atom, an applied sort constructor, or a binary (curried)
/// function sort. Immutable; copies share structure.
class Sort {
 public:
  enum class Kind { atom, applied, fun };

  static Sort atom(std::string name);
  static Sort applied(std::string name, std::vector<Sort> args);
  static Sort fun(Sort domain, Sort codomain);
  /// fun(d1, fun(d2, ... fun(dn, result)))
  static Sort curried(std::span<const Sort> domains, Sort result);

  static const Sort& boolean();
  static const Sort& integer();
  static const Sort& real();

  Kind kind() const;
  const std::string& name() const;        // atom / applied
  std::span<const Sort> args() const;     // applied
  const Sort& domain() const;             // fun
  const Sort& codomain() const;           // fun

  bool is_fun() const { return kind() == Kind::fun; }
  bool is_bool() const;

  /// Number of arguments this sort can absorb before becoming non-functional.
  std::size_t arity() const;

  friend bool operator==(const Sort& a, const Sort& b);
  friend bool operator<(const Sort& a, const Sort& b);

 private:
  struct Node;
  explicit Sort(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// SMT-LIB syntax; function sorts are flattened: fun(A, fun(B, C)) prints as
/// `(-> A B C)`.
std::string to_string(const Sort& s);

}  // namespace hosmt
