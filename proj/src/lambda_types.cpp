#include <algorithm>

#include "goi/lambda.hpp"

namespace goi::lam {

namespace {

struct Binding {
  std::string name;
  TypePtr type;
  bool used = false;
};

class Checker {
 public:
  explicit Checker(const Context& ctx) {
    for (const auto& [name, type] : ctx) env_.push_back({name, type, false});
  }

  TypePtr infer(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: {
        // Innermost binding wins; a second use of the same binding is
        // contraction and gets rejected.
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->name != t->var) continue;
          if (it->used)
            throw TypeError("variable '" + t->var +
                            "' used more than once (contraction is not allowed)");
          it->used = true;
          return it->type;
        }
        throw TypeError("unbound variable '" + t->var + "'");
      }
      case Term::Kind::Lam: {
        const TypePtr ann = t->ann ? *t->ann : base_type(2);
        env_.push_back({t->var, ann, false});
        const TypePtr body = infer(t->a);
        env_.pop_back();
        return lolli_type(ann, body);
      }
      case Term::Kind::App: {
        const TypePtr fun = infer(t->a);
        if (fun->kind != Type::Kind::Lolli)
          throw TypeError("applied term has type " + show(fun) +
                          ", which is not a function type");
        const TypePtr arg = infer(t->b);
        if (!type_eq(fun->left, arg))
          throw TypeError("argument type " + show(arg) +
                          " does not match expected " + show(fun->left));
        return fun->right;
      }
      case Term::Kind::Pair:
        return tensor_type(infer(t->a), infer(t->b));
      case Term::Kind::LetPair: {
        const TypePtr scrut = infer(t->a);
        if (scrut->kind != Type::Kind::Tensor)
          throw TypeError("let (_,_) scrutinee has type " + show(scrut) +
                          ", which is not a tensor");
        env_.push_back({t->var, scrut->left, false});
        env_.push_back({t->var2, scrut->right, false});
        const TypePtr body = infer(t->b);
        env_.pop_back();
        env_.pop_back();
        return body;
      }
      case Term::Kind::Unit:
        return unit_type();
    }
    throw TypeError("malformed term");
  }

 private:
  std::vector<Binding> env_;
};

}  // namespace

TypedTerm typecheck(const TermPtr& term, const Context& context) {
  for (std::size_t i = 0; i < context.size(); ++i)
    for (std::size_t j = i + 1; j < context.size(); ++j)
      if (context[i].first == context[j].first)
        throw TypeError("context binds '" + context[i].first + "' twice");
  Checker checker(context);
  // Inferred before the aggregate is formed: a throw during aggregate
  // initialization leaks the already-copied members under gcc 11
  // (partially constructed return values miss their cleanups).
  TypePtr type = checker.infer(term);
  return TypedTerm{term, std::move(type), context};
}

namespace {

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Every variable name occurring in t, bound or free. A fresh binder
// must avoid inner binder names too, or renaming into their scope
// would capture.
void collect_names(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out.push_back(t->var);
      return;
    case Term::Kind::Lam:
      out.push_back(t->var);
      collect_names(t->a, out);
      return;
    case Term::Kind::App:
    case Term::Kind::Pair:
      collect_names(t->a, out);
      collect_names(t->b, out);
      return;
    case Term::Kind::LetPair:
      out.push_back(t->var);
      out.push_back(t->var2);
      collect_names(t->a, out);
      collect_names(t->b, out);
      return;
    case Term::Kind::Unit:
      return;
  }
}

std::string fresh_name(const std::string& base,
                       const std::vector<std::string>& avoid) {
  std::string name = base + "'";
  while (contains(avoid, name)) name += "'";
  return name;
}

TermPtr rename_free(const TermPtr& t, const std::string& from,
                    const std::string& to) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->var == from ? var_term(to) : t;
    case Term::Kind::Lam:
      if (t->var == from) return t;
      return lam_term(t->var, t->ann, rename_free(t->a, from, to));
    case Term::Kind::App:
      return app_term(rename_free(t->a, from, to), rename_free(t->b, from, to));
    case Term::Kind::Pair:
      return pair_term(rename_free(t->a, from, to), rename_free(t->b, from, to));
    case Term::Kind::LetPair: {
      TermPtr scrut = rename_free(t->a, from, to);
      TermPtr body = (t->var == from || t->var2 == from)
                         ? t->b
                         : rename_free(t->b, from, to);
      return letpair_term(t->var, t->var2, std::move(scrut), std::move(body));
    }
    case Term::Kind::Unit:
      return t;
  }
  return t;
}

// Capture-avoiding substitution; affinity means the value is spliced in
// at most once, so sharing the pointer is safe.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& value) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->var == x ? value : t;
    case Term::Kind::Lam: {
      if (t->var == x) return t;  // shadowed
      if (contains(free_vars(value), t->var)) {
        std::vector<std::string> avoid;
        collect_names(value, avoid);
        collect_names(t->a, avoid);
        const std::string fresh = fresh_name(t->var, avoid);
        return lam_term(fresh, t->ann,
                        subst(rename_free(t->a, t->var, fresh), x, value));
      }
      return lam_term(t->var, t->ann, subst(t->a, x, value));
    }
    case Term::Kind::App:
      return app_term(subst(t->a, x, value), subst(t->b, x, value));
    case Term::Kind::Pair:
      return pair_term(subst(t->a, x, value), subst(t->b, x, value));
    case Term::Kind::LetPair: {
      TermPtr scrut = subst(t->a, x, value);
      if (t->var == x || t->var2 == x)
        return letpair_term(t->var, t->var2, std::move(scrut), t->b);
      std::string x1 = t->var, x2 = t->var2;
      TermPtr body = t->b;
      const auto value_fv = free_vars(value);
      if (contains(value_fv, x1)) {
        std::vector<std::string> avoid;
        collect_names(value, avoid);
        collect_names(body, avoid);
        avoid.push_back(x2);
        const std::string fresh = fresh_name(x1, avoid);
        body = rename_free(body, x1, fresh);
        x1 = fresh;
      }
      if (contains(value_fv, x2)) {
        std::vector<std::string> avoid;
        collect_names(value, avoid);
        collect_names(body, avoid);
        avoid.push_back(x1);
        const std::string fresh = fresh_name(x2, avoid);
        body = rename_free(body, x2, fresh);
        x2 = fresh;
      }
      return letpair_term(x1, x2, std::move(scrut), subst(body, x, value));
    }
    case Term::Kind::Unit:
      return t;
  }
  return t;
}

}  // namespace

std::optional<TermPtr> beta_step(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Unit:
      return std::nullopt;
    case Term::Kind::Lam:
      if (auto body = beta_step(t->a)) return lam_term(t->var, t->ann, *body);
      return std::nullopt;
    case Term::Kind::App: {
      if (t->a->kind == Term::Kind::Lam)
        return subst(t->a->a, t->a->var, t->b);
      if (auto fun = beta_step(t->a)) return app_term(*fun, t->b);
      if (auto arg = beta_step(t->b)) return app_term(t->a, *arg);
      return std::nullopt;
    }
    case Term::Kind::Pair: {
      if (auto a = beta_step(t->a)) return pair_term(*a, t->b);
      if (auto b = beta_step(t->b)) return pair_term(t->a, *b);
      return std::nullopt;
    }
    case Term::Kind::LetPair: {
      if (t->a->kind == Term::Kind::Pair)
        return subst(subst(t->b, t->var, t->a->a), t->var2, t->a->b);
      if (auto scrut = beta_step(t->a))
        return letpair_term(t->var, t->var2, *scrut, t->b);
      if (auto body = beta_step(t->b))
        return letpair_term(t->var, t->var2, t->a, *body);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

TermPtr beta_reduce(const TermPtr& t) {
  TermPtr cur = t;
  while (auto next = beta_step(cur)) cur = *next;
  return cur;
}

}  // namespace goi::lam
