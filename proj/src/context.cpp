#include "hosmt/context.hpp"

#include <mutex>

#include "hosmt/diagnostics.hpp"

namespace hosmt {

struct Context::Node {
  ContextEntry entry;
  std::shared_ptr<const Node> parent;
  std::size_t size = 1;
  mutable std::once_flag once;
  mutable Substitution subst;
};

namespace {

const Substitution& empty_subst() {
  static const Substitution s;
  return s;
}

bool same_entry(const ContextEntry& a, const ContextEntry& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FixEntry>(&a)) return fa->var == std::get<FixEntry>(b).var;
  const auto& pa = std::get<MapEntry>(a).pairs;
  const auto& pb = std::get<MapEntry>(b).pairs;
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!(pa[i].first == pb[i].first) || !alpha_eq(pa[i].second, pb[i].second)) return false;
  }
  return true;
}

}  // namespace

std::size_t Context::size() const { return node_ ? node_->size : 0; }

Context Context::fix(const Var& v) const {
  auto n = std::make_shared<Node>();
  n->entry = FixEntry{v};
  n->parent = node_;
  n->size = size() + 1;
  return Context(std::move(n));
}

Context Context::map(std::vector<Binding> pairs) const {
  if (pairs.empty()) throw InvariantError("empty substitution entry");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(pairs[i].first.sort == pairs[i].second.sort())) {
      throw InvariantError("context maps " + pairs[i].first.name + " to a term of sort " +
                           to_string(pairs[i].second.sort()) + ", expected " +
                           to_string(pairs[i].first.sort));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs[i].first == pairs[j].first) {
        throw InvariantError("context entry maps " + pairs[i].first.name + " twice");
      }
    }
  }
  auto n = std::make_shared<Node>();
  n->entry = MapEntry{std::move(pairs)};
  n->parent = node_;
  n->size = size() + 1;
  return Context(std::move(n));
}

std::vector<ContextEntry> Context::entries() const {
  std::vector<ContextEntry> out(size());
  std::size_t i = out.size();
  for (const Node* n = node_.get(); n; n = n->parent.get()) out[--i] = n->entry;
  return out;
}

const ContextEntry& Context::last() const {
  if (!node_) throw InvariantError("last entry of the empty context");
  return node_->entry;
}

Context Context::parent() const {
  if (!node_) throw InvariantError("parent of the empty context");
  return Context(node_->parent);
}

// subst(Γ, x) = subst(Γ)[x ↦ x]
// subst(Γ, x̄ ↦ t̄) = subst(Γ) ∘ {x̄ ↦ t̄}
const Substitution& Context::subst() const {
  if (!node_) return empty_subst();
  std::call_once(node_->once, [this] {
    const Substitution& outer = parent().subst();
    Substitution s = outer;
    if (const auto* f = std::get_if<FixEntry>(&node_->entry)) {
      s.erase(f->var.id);
    } else {
      for (const auto& [x, t] : std::get<MapEntry>(node_->entry).pairs) s.set(x, substitute(t, outer));
    }
    node_->subst = std::move(s);
  });
  return node_->subst;
}

bool operator==(const Context& a, const Context& b) {
  const Context::Node* x = a.node_.get();
  const Context::Node* y = b.node_.get();
  if (a.size() != b.size()) return false;
  for (; x && y; x = x->parent.get(), y = y->parent.get()) {
    if (x == y) return true;
    if (!same_entry(x->entry, y->entry)) return false;
  }
  return x == y;
}

Context context_of(const std::vector<ContextEntry>& entries) {
  Context ctx;
  for (const auto& e : entries) {
    if (const auto* f = std::get_if<FixEntry>(&e)) {
      ctx = ctx.fix(f->var);
    } else {
      ctx = ctx.map(std::get<MapEntry>(e).pairs);
    }
  }
  return ctx;
}

const Substitution& context_subst(const Context& ctx) { return ctx.subst(); }

Term apply_context(const Context& ctx, const Term& t) { return substitute(t, ctx.subst()); }

std::pair<Context, Var> extend_fix(const Context& ctx, const std::string& hint, const Sort& sort) {
  Var v = fresh_var(hint, sort);
  return {ctx.fix(v), v};
}

Context extend_map(const Context& ctx, std::vector<Binding> pairs) { return ctx.map(std::move(pairs)); }

}  // namespace hosmt
