#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hosmt/surface.hpp"

namespace hosmt {

/// One Command per top-level S-expression. Unknown commands are kept verbatim.
std::vector<Command> parse_script(std::span<const Token> tokens);
std::vector<Command> parse_script(std::string_view text);

/// The tokens must form exactly one sort.
SurfaceSort parse_sort(std::span<const Token> tokens);
SurfaceSort parse_sort(std::string_view text);

/// The tokens must form exactly one term.
SurfaceTerm parse_term(std::span<const Token> tokens);
SurfaceTerm parse_term(std::string_view text);

// Building blocks shared with the certificate reader.
SurfaceSort sort_from_sexpr(const SExpr& e);
SurfaceTerm term_from_sexpr(const SExpr& e);
Command command_from_sexpr(const SExpr& e);

}  // namespace hosmt
