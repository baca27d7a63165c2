#pragma once

#include <span>
#include <string>

#include "hosmt/surface.hpp"

namespace hosmt {

// Canonical concrete syntax: single spaces, explicit application for lambda
// bodies, arrows printed n-ary. Output reparses to an equal AST.

std::string print_sort(const SurfaceSort& s);
std::string print_term(const SurfaceTerm& t);
std::string print_command(const Command& c);

/// One command per line.
std::string print_script(std::span<const Command> cmds);

}  // namespace hosmt
