#pragma once
// Affine lambda calculus with linear types, compiled to interaction
// morphisms over the vector-space instance.
//
// Grammar:
//   term  := '\' var (':' type)? '.' term
//          | 'let' '(' var ',' var ')' '=' term 'in' term
//          | app
//   app   := atom atom*
//   atom  := var | '()' | '(' term ')' | '(' term ',' term ')'
//   type  := type1 ('-o' type)?          (right associative)
//   type1 := atomT ('*' atomT)*          (left associative)
//   atomT := 'B' digits | 'I' | '(' type ')'
// Unannotated binders default to B2.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goi/interaction.hpp"

namespace goi::lam {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Base, Unit, Tensor, Lolli };
  Kind kind;
  std::size_t dim = 0;  // Base only
  TypePtr left, right;  // Tensor / Lolli
};

TypePtr base_type(std::size_t dim);
TypePtr unit_type();
TypePtr tensor_type(TypePtr a, TypePtr b);
TypePtr lolli_type(TypePtr a, TypePtr b);
bool type_eq(const TypePtr& a, const TypePtr& b);
std::string show(const TypePtr& t);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Lam, App, Pair, LetPair, Unit };
  Kind kind;
  std::string var;              // Var name / Lam binder / LetPair first binder
  std::string var2;             // LetPair second binder
  std::optional<TypePtr> ann;   // Lam annotation
  TermPtr a, b;                 // children
  int line = 0, col = 0;
};

TermPtr var_term(std::string name);
TermPtr lam_term(std::string binder, std::optional<TypePtr> ann, TermPtr body);
TermPtr app_term(TermPtr fun, TermPtr arg);
TermPtr pair_term(TermPtr a, TermPtr b);
TermPtr letpair_term(std::string x, std::string y, TermPtr scrutinee, TermPtr body);
TermPtr unit_term();
std::string show(const TermPtr& t);
std::vector<std::string> free_vars(const TermPtr& t);  // in first-use order

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line, col;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

TermPtr parse(const std::string& src);

using Context = std::vector<std::pair<std::string, TypePtr>>;

struct TypedTerm {
  TermPtr term;
  TypePtr type;
  Context context;
};

// Affine type checking: weakening is allowed, contraction is rejected
// with the offending variable named. Unannotated binders check at B2.
TypedTerm typecheck(const TermPtr& term, const Context& context = {});

// One leftmost-outermost beta or let-pair step; absent at normal form.
std::optional<TermPtr> beta_step(const TermPtr& t);
// Full normalization (affine terms shrink, so this terminates).
TermPtr beta_reduce(const TermPtr& t);

struct Compiled {
  GoiFdvec::Morphism morphism;
  TypePtr type;
};

// Object translation: B_n -> (C^n, I), tensor componentwise, A -o B ->
// dual(A) (x) B. Terms translate by structural recursion; discarded
// variables exit through a zero wire.
GoiFdvec::Object object_of_type(const TypePtr& t);
Compiled compile_term(const TypedTerm& t);

// The linear map a closed first-order term (chain of lollis between
// tensors of base types) computes; rejects higher-order types.
LinMap denote(const Compiled& c);

}  // namespace goi::lam
