#include <algorithm>

#include "goi/lambda.hpp"

namespace goi::lam {

using G = GoiFdvec;

GoiFdvec::Object object_of_type(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Base:
      return G::Object{make_space("B", t->dim), unit_space()};
    case Type::Kind::Unit:
      return G::unit_object();
    case Type::Kind::Tensor:
      return G::tensor_obj(object_of_type(t->left), object_of_type(t->right));
    case Type::Kind::Lolli:
      return G::tensor_obj(G::dual(object_of_type(t->left)),
                           object_of_type(t->right));
  }
  throw TypeError("malformed type");
}

namespace {

struct Entry {
  std::string name;
  TypePtr type;
  G::Object obj;
};

using Env = std::vector<Entry>;

G::Object fold_env(const Env& env) {
  G::Object out = G::unit_object();
  for (const auto& e : env) out = G::tensor_obj(out, e.obj);
  return out;
}

// A discarded variable exits through a wire that carries nothing.
G::Morphism discard(const G::Object& a) {
  return G::Morphism{a, G::unit_object(), zero_map(a.pos, a.neg)};
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Splits the environment into the left block, the right block, and
// discards for everything else:  [[env]] -> [[left]] (x) [[right]].
G::Morphism route(const Env& env, const std::vector<std::string>& left,
                  const std::vector<std::string>& right) {
  std::vector<std::size_t> order;
  order.reserve(env.size());
  for (const auto& name : left)
    for (std::size_t k = 0; k < env.size(); ++k)
      if (env[k].name == name) order.push_back(k);
  for (const auto& name : right)
    for (std::size_t k = 0; k < env.size(); ++k)
      if (env[k].name == name) order.push_back(k);
  const std::size_t kept = order.size();
  for (std::size_t k = 0; k < env.size(); ++k)
    if (!contains(left, env[k].name) && !contains(right, env[k].name))
      order.push_back(k);

  std::vector<G::Object> objs;
  objs.reserve(env.size());
  for (const auto& e : env) objs.push_back(e.obj);
  const G::Morphism shuffle = G::block_perm(objs, order);

  G::Object kept_obj = G::unit_object();
  for (std::size_t k = 0; k < kept; ++k)
    kept_obj = G::tensor_obj(kept_obj, objs[order[k]]);
  G::Morphism finish = G::identity(kept_obj);
  for (std::size_t k = kept; k < order.size(); ++k)
    finish = G::tensor(finish, discard(objs[order[k]]));
  return G::compose(shuffle, finish);
}

Env sub_env(const Env& env, const std::vector<std::string>& names) {
  Env out;
  for (const auto& name : names)
    for (const auto& e : env)
      if (e.name == name) out.push_back(e);
  return out;
}

// Free variables of t restricted to (and ordered by) the environment.
std::vector<std::string> env_free(const Env& env, const TermPtr& t) {
  const std::vector<std::string> fv = free_vars(t);
  std::vector<std::string> out;
  for (const auto& e : env)
    if (contains(fv, e.name)) out.push_back(e.name);
  return out;
}

struct Piece {
  G::Morphism m;  // [[env]] -> [[type]]
  TypePtr type;
};

Piece go(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Var: {
      const G::Morphism r = route(env, {t->var}, {});
      for (const auto& e : env)
        if (e.name == t->var) return Piece{r, e.type};
      throw TypeError("unbound variable '" + t->var + "' during compilation");
    }
    case Term::Kind::Lam: {
      const TypePtr ann = t->ann ? *t->ann : base_type(2);
      const G::Object a = object_of_type(ann);
      Env inner = env;
      inner.push_back({t->var, ann, a});
      const Piece body = go(t->a, inner);
      const G::Object gamma = fold_env(env);
      // Curry: Gamma -> Gamma (x) (A* (x) A) -> A* (x) (Gamma (x) A) -> A* (x) B
      const G::Morphism intro = G::tensor(G::identity(gamma), G::eta_rev(a));
      const G::Morphism shuffle =
          G::block_perm({gamma, G::dual(a), a}, {1, 0, 2});
      const G::Morphism apply_body = G::tensor(G::identity(G::dual(a)), body.m);
      return Piece{G::compose(G::compose(intro, shuffle), apply_body),
                   lolli_type(ann, body.type)};
    }
    case Term::Kind::App: {
      const std::vector<std::string> fun_vars = env_free(env, t->a);
      const std::vector<std::string> arg_vars = env_free(env, t->b);
      const Piece fun = go(t->a, sub_env(env, fun_vars));
      const Piece arg = go(t->b, sub_env(env, arg_vars));
      if (fun.type->kind != Type::Kind::Lolli)
        throw TypeError("application head is not a function");
      const G::Object a = object_of_type(fun.type->left);
      const G::Object b = object_of_type(fun.type->right);
      // (A* (x) B) (x) A -> A* (x) A (x) B -> B
      const G::Morphism shuffle = G::block_perm({G::dual(a), b, a}, {0, 2, 1});
      const G::Morphism eval = G::tensor(G::eps_rev(a), G::identity(b));
      const G::Morphism applied =
          G::compose(G::tensor(fun.m, arg.m), G::compose(shuffle, eval));
      return Piece{G::compose(route(env, fun_vars, arg_vars), applied),
                   fun.type->right};
    }
    case Term::Kind::Pair: {
      const std::vector<std::string> a_vars = env_free(env, t->a);
      const std::vector<std::string> b_vars = env_free(env, t->b);
      const Piece a = go(t->a, sub_env(env, a_vars));
      const Piece b = go(t->b, sub_env(env, b_vars));
      return Piece{G::compose(route(env, a_vars, b_vars), G::tensor(a.m, b.m)),
                   tensor_type(a.type, b.type)};
    }
    case Term::Kind::LetPair: {
      const std::vector<std::string> scrut_vars = env_free(env, t->a);
      const Piece scrut = go(t->a, sub_env(env, scrut_vars));
      if (scrut.type->kind != Type::Kind::Tensor)
        throw TypeError("let (_,_) scrutinee is not a tensor");
      std::vector<std::string> body_vars;
      for (const auto& name : env_free(env, t->b))
        if (name != t->var && name != t->var2) body_vars.push_back(name);
      Env inner = sub_env(env, body_vars);
      inner.push_back(
          {t->var, scrut.type->left, object_of_type(scrut.type->left)});
      inner.push_back(
          {t->var2, scrut.type->right, object_of_type(scrut.type->right)});
      const Piece body = go(t->b, inner);
      const G::Object gamma_body = fold_env(sub_env(env, body_vars));
      const G::Morphism feed = G::tensor(G::identity(gamma_body), scrut.m);
      return Piece{
          G::compose(route(env, body_vars, scrut_vars),
                     G::compose(feed, body.m)),
          body.type};
    }
    case Term::Kind::Unit:
      return Piece{route(env, {}, {}), unit_type()};
  }
  throw TypeError("malformed term");
}

// Binder names must be unique (and distinct from the context) before
// free-variable splitting is meaningful.
TermPtr alpha_unique(const TermPtr& t,
                     std::vector<std::pair<std::string, std::string>>& scope,
                     int& counter) {
  auto resolve = [&](const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    return name;  // free: keep context name
  };
  switch (t->kind) {
    case Term::Kind::Var:
      return var_term(resolve(t->var));
    case Term::Kind::Lam: {
      const std::string fresh = t->var + "#" + std::to_string(counter++);
      scope.emplace_back(t->var, fresh);
      TermPtr body = alpha_unique(t->a, scope, counter);
      scope.pop_back();
      return lam_term(fresh, t->ann, std::move(body));
    }
    case Term::Kind::App:
      return app_term(alpha_unique(t->a, scope, counter),
                      alpha_unique(t->b, scope, counter));
    case Term::Kind::Pair:
      return pair_term(alpha_unique(t->a, scope, counter),
                       alpha_unique(t->b, scope, counter));
    case Term::Kind::LetPair: {
      TermPtr scrut = alpha_unique(t->a, scope, counter);
      const std::string f1 = t->var + "#" + std::to_string(counter++);
      const std::string f2 = t->var2 + "#" + std::to_string(counter++);
      scope.emplace_back(t->var, f1);
      scope.emplace_back(t->var2, f2);
      TermPtr body = alpha_unique(t->b, scope, counter);
      scope.pop_back();
      scope.pop_back();
      return letpair_term(f1, f2, std::move(scrut), std::move(body));
    }
    case Term::Kind::Unit:
      return t;
  }
  return t;
}

}  // namespace

Compiled compile_term(const TypedTerm& t) {
  std::vector<std::pair<std::string, std::string>> scope;
  int counter = 0;
  const TermPtr uniq = alpha_unique(t.term, scope, counter);
  Env env;
  for (const auto& [name, type] : t.context)
    env.push_back({name, type, object_of_type(type)});
  const Piece piece = go(uniq, env);
  return Compiled{piece.m, piece.type};
}

namespace {

bool first_order_data(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Base:
    case Type::Kind::Unit:
      return true;
    case Type::Kind::Tensor:
      return first_order_data(t->left) && first_order_data(t->right);
    case Type::Kind::Lolli:
      return false;
  }
  return false;
}

}  // namespace

LinMap denote(const Compiled& c) {
  if (!(c.morphism.src == G::unit_object()))
    throw TypeError("denote: term must be closed");
  TypePtr t = c.type;
  while (t->kind == Type::Kind::Lolli) {
    if (!first_order_data(t->left))
      throw TypeError(
          "denote: higher-order type " + show(c.type) +
          " has no matrix extraction (arguments must be tensors of bases)");
    t = t->right;
  }
  if (!first_order_data(t))
    throw TypeError("denote: result type " + show(t) + " is not first-order");
  // With strict units the carrier is exactly the map from the tensor of
  // argument spaces (in binding order) to the result space.
  return c.morphism.under;
}

}  // namespace goi::lam
