#pragma once

#include <map>
#include <set>
#include <string>

#include "hosmt/surface.hpp"
#include "hosmt/term.hpp"

namespace hosmt {

/// Assigns each variable id a display name that no other id in the same table
/// uses. Names clash-free with reserved words, builtins and whatever was
/// reserved explicitly (typically the signature's constants).
class NameTable {
 public:
  NameTable();

  void reserve(const std::string& name) { used_.insert(name); }
  const std::string& name_of(const Var& v);
  bool has(VarId id) const { return names_.count(id) != 0; }

 private:
  std::map<VarId, std::string> names_;
  std::set<std::string> used_;
};

SurfaceSort to_surface(const Sort& s);
SurfaceTerm to_surface(const Term& t, NameTable& names);

/// Reserves the names of all constants occurring in t.
void reserve_constants(const Term& t, NameTable& names);

/// Prints with a private NameTable.
std::string to_string(const Term& t);
std::string to_string(const Term& t, NameTable& names);

}  // namespace hosmt
