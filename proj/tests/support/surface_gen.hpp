#pragma once

#include <algorithm>
#include <random>

#include "hosmt/surface.hpp"

namespace hosmt::testing {

/// Random surface syntax, not necessarily well-sorted: the parser and
/// printer do not care.
class SurfaceGenerator {
 public:
  explicit SurfaceGenerator(std::uint64_t seed) : rng_(seed) {}

  SurfaceSort sort(int depth) {
    switch (depth <= 0 ? pick(2) : pick(5)) {
      case 0:
        return SurfaceSort::identifier(pick_of({"Int", "Bool", "U", "Real"}));
      case 1:
        return SurfaceSort::identifier("Int");
      case 2:
        return SurfaceSort::parametric(pick_of({"Array", "Pair"}), {sort(depth - 1), sort(depth - 1)});
      default: {
        std::vector<SurfaceSort> doms;
        std::size_t n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) doms.push_back(sort(depth - 1));
        return SurfaceSort::arrow(std::move(doms), sort(depth - 1));
      }
    }
  }

  SurfaceTerm term(int depth) {
    if (depth <= 0) return atom();
    switch (pick(12)) {
      case 0:
      case 1:
        return atom();
      case 2:
      case 3:
      case 4: {
        std::vector<SurfaceTerm> args;
        std::size_t n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) args.push_back(term(depth - 1));
        SurfaceTerm head = pick(4) == 0 ? term(depth - 1) : identifier();
        return SurfaceTerm::apply(std::move(head), std::move(args));
      }
      case 5:
      case 6: {
        static const SurfaceTerm::Kind kinds[] = {SurfaceTerm::Kind::lambda, SurfaceTerm::Kind::forall,
                                                  SurfaceTerm::Kind::exists, SurfaceTerm::Kind::choice};
        auto kind = kinds[pick(4)];
        std::size_t n = kind == SurfaceTerm::Kind::choice ? 1 : 1 + pick(2);
        std::vector<SortedVar> vars;
        for (const auto& name : distinct_names(n)) vars.push_back({name, sort(2), {}});
        return SurfaceTerm::binder(kind, std::move(vars), term(depth - 1));
      }
      case 7: {
        std::vector<VarBinding> bs;
        std::size_t n = 1 + pick(2);
        for (const auto& name : distinct_names(n)) bs.push_back({name, term(depth - 1), {}});
        return SurfaceTerm::let(std::move(bs), term(depth - 1));
      }
      case 8:
        return SurfaceTerm::qualified(unquoted(pick_of(kVarNames)), sort(2));
      case 9: {
        SurfaceTerm t;
        t.kind = SurfaceTerm::Kind::annotated;
        t.children = {term(depth - 1)};
        SExpr value;
        value.atom = Token{TokenKind::symbol, "n" + std::to_string(pick(100)), {}};
        t.attributes.push_back({":named", value});
        if (pick(2) == 0) t.attributes.push_back({":pattern-free", std::nullopt});
        return t;
      }
      default:
        return SurfaceTerm::apply(identifier(), {term(depth - 1), term(depth - 1)});
    }
  }

 private:
  static constexpr std::initializer_list<const char*> kVarNames = {"x", "y", "z", "w1", "|a b|", "v'"};

  // Binder lists may not repeat a name.
  std::vector<std::string> distinct_names(std::size_t n) {
    std::vector<std::string> out;
    while (out.size() < n) {
      std::string name = unquoted(pick_of(kVarNames));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
  }

  static std::string unquoted(std::string n) { return n.front() == '|' ? n.substr(1, n.size() - 2) : n; }

  SurfaceTerm identifier() {
    return SurfaceTerm::identifier(unquoted(pick_of({"f", "g", "=", "and", "+", "p", "|odd name|", "x", "<="})));
  }

  SurfaceTerm atom() {
    switch (pick(7)) {
      case 0:
        return SurfaceTerm::constant(TokenKind::numeral, std::to_string(pick(50)));
      case 1:
        return SurfaceTerm::constant(TokenKind::decimal, std::to_string(pick(9)) + "." + std::to_string(pick(99)));
      case 2:
        return SurfaceTerm::constant(TokenKind::hexadecimal, "#x" + std::string(1, "0123456789ABCDEF"[pick(16)]) + "F");
      case 3:
        return SurfaceTerm::constant(TokenKind::binary, pick(2) ? "#b101" : "#b0");
      case 4:
        return SurfaceTerm::constant(TokenKind::string, pick(2) ? "\"hi\"" : "\"a \"\"q\"\" b\"");
      default: {
        return SurfaceTerm::identifier(unquoted(pick_of(kVarNames)));
      }
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::string pick_of(std::initializer_list<const char*> xs) { return *(xs.begin() + pick(xs.size())); }

  std::mt19937_64 rng_;
};

}  // namespace hosmt::testing
