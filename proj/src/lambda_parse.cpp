#include <cctype>
#include <sstream>

#include "goi/lambda.hpp"

namespace goi::lam {

TypePtr base_type(std::size_t dim) {
  if (dim < 1) throw TypeError("base type dimension must be >= 1");
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Base;
  t->dim = dim;
  return t;
}

TypePtr unit_type() {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Unit;
  return t;
}

TypePtr tensor_type(TypePtr a, TypePtr b) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Tensor;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TypePtr lolli_type(TypePtr a, TypePtr b) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Lolli;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::Base: return a->dim == b->dim;
    case Type::Kind::Unit: return true;
    default: return type_eq(a->left, b->left) && type_eq(a->right, b->right);
  }
}

std::string show(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Base: return "B" + std::to_string(t->dim);
    case Type::Kind::Unit: return "I";
    case Type::Kind::Tensor: {
      auto wrap = [](const TypePtr& s) {
        const std::string inner = show(s);
        return s->kind == Type::Kind::Base || s->kind == Type::Kind::Unit
                   ? inner
                   : "(" + inner + ")";
      };
      return wrap(t->left) + " * " + wrap(t->right);
    }
    case Type::Kind::Lolli: {
      const std::string lhs = t->left->kind == Type::Kind::Lolli
                                  ? "(" + show(t->left) + ")"
                                  : show(t->left);
      return lhs + " -o " + show(t->right);
    }
  }
  return "?";
}

TermPtr var_term(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr lam_term(std::string binder, std::optional<TypePtr> ann, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lam;
  t->var = std::move(binder);
  t->ann = std::move(ann);
  t->a = std::move(body);
  return t;
}

TermPtr app_term(TermPtr fun, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

TermPtr pair_term(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Pair;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

TermPtr letpair_term(std::string x, std::string y, TermPtr scrutinee,
                     TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::LetPair;
  t->var = std::move(x);
  t->var2 = std::move(y);
  t->a = std::move(scrutinee);
  t->b = std::move(body);
  return t;
}

TermPtr unit_term() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Unit;
  return t;
}

std::string show(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return t->var;
    case Term::Kind::Lam: {
      std::string head = "\\" + t->var;
      if (t->ann) head += ":" + show(*t->ann);
      return head + ". " + show(t->a);
    }
    case Term::Kind::App: {
      auto wrap = [](const TermPtr& s) {
        const std::string inner = show(s);
        return s->kind == Term::Kind::Var || s->kind == Term::Kind::Unit ||
                       s->kind == Term::Kind::Pair
                   ? inner
                   : "(" + inner + ")";
      };
      return wrap(t->a) + " " + wrap(t->b);
    }
    case Term::Kind::Pair: return "(" + show(t->a) + ", " + show(t->b) + ")";
    case Term::Kind::LetPair:
      return "let (" + t->var + "," + t->var2 + ") = " + show(t->a) + " in " +
             show(t->b);
    case Term::Kind::Unit: return "()";
  }
  return "?";
}

namespace {

void collect_free(const TermPtr& t, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  auto is_bound = [&](const std::string& name) {
    for (const auto& b : bound)
      if (b == name) return true;
    return false;
  };
  auto already = [&](const std::string& name) {
    for (const auto& b : out)
      if (b == name) return true;
    return false;
  };
  switch (t->kind) {
    case Term::Kind::Var:
      if (!is_bound(t->var) && !already(t->var)) out.push_back(t->var);
      break;
    case Term::Kind::Lam:
      bound.push_back(t->var);
      collect_free(t->a, bound, out);
      bound.pop_back();
      break;
    case Term::Kind::App:
    case Term::Kind::Pair:
      collect_free(t->a, bound, out);
      collect_free(t->b, bound, out);
      break;
    case Term::Kind::LetPair:
      collect_free(t->a, bound, out);
      bound.push_back(t->var);
      bound.push_back(t->var2);
      collect_free(t->b, bound, out);
      bound.pop_back();
      bound.pop_back();
      break;
    case Term::Kind::Unit: break;
  }
}

}  // namespace

std::vector<std::string> free_vars(const TermPtr& t) {
  std::vector<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error(msg + " at line " + std::to_string(line_) + ", column " +
            std::to_string(col_)),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  enum class Kind {
    Lambda, Dot, Colon, LParen, RParen, Comma, Let, In, Equals,
    Ident, BaseType, UnitType, Star, Lolli, End
  };
  Kind kind;
  std::string text;
  std::size_t dim = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '\\': single(Token::Kind::Lambda); return;
      case '.': single(Token::Kind::Dot); return;
      case ':': single(Token::Kind::Colon); return;
      case '(': single(Token::Kind::LParen); return;
      case ')': single(Token::Kind::RParen); return;
      case ',': single(Token::Kind::Comma); return;
      case '=': single(Token::Kind::Equals); return;
      case '*': single(Token::Kind::Star); return;
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == 'o') {
          tok_.kind = Token::Kind::Lolli;
          pos_ += 2;
          col_ += 2;
          return;
        }
        throw ParseError("unexpected character '-'", line_, col_);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_' || src_[pos_] == '\'')) {
        word += src_[pos_++];
        ++col_;
      }
      if (word == "let") {
        tok_.kind = Token::Kind::Let;
      } else if (word == "in") {
        tok_.kind = Token::Kind::In;
      } else if (word == "I") {
        tok_.kind = Token::Kind::UnitType;
      } else if (word.size() > 1 && word[0] == 'B' &&
                 std::all_of(word.begin() + 1, word.end(), [](char d) {
                   return std::isdigit(static_cast<unsigned char>(d));
                 })) {
        tok_.kind = Token::Kind::BaseType;
        try {
          tok_.dim = std::stoul(word.substr(1));
        } catch (const std::out_of_range&) {
          throw ParseError("base type dimension out of range", tok_.line,
                           tok_.col);
        }
        if (tok_.dim < 1)
          throw ParseError("base type dimension must be >= 1", tok_.line,
                           tok_.col);
      } else {
        tok_.kind = Token::Kind::Ident;
        tok_.text = word;
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void single(Token::Kind k) {
    tok_.kind = k;
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  TermPtr run() {
    TermPtr t = term();
    expect(Token::Kind::End, "expected end of input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().col);
  }

  Token expect(Token::Kind k, const char* msg) {
    if (lex_.peek().kind != k) fail(msg);
    return lex_.take();
  }

  TermPtr term() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Lambda) {
      const Token lam = lex_.take();
      const Token binder = expect(Token::Kind::Ident, "expected binder name");
      std::optional<TypePtr> ann;
      if (lex_.peek().kind == Token::Kind::Colon) {
        lex_.take();
        ann = type();
      }
      expect(Token::Kind::Dot, "expected '.' after binder");
      TermPtr body = term();
      auto out = lam_term(binder.text, std::move(ann), std::move(body));
      const_cast<Term*>(out.get())->line = lam.line;
      const_cast<Term*>(out.get())->col = lam.col;
      return out;
    }
    if (t.kind == Token::Kind::Let) {
      lex_.take();
      expect(Token::Kind::LParen, "expected '(' after let");
      const Token x = expect(Token::Kind::Ident, "expected first binder");
      expect(Token::Kind::Comma, "expected ',' between binders");
      const Token y = expect(Token::Kind::Ident, "expected second binder");
      expect(Token::Kind::RParen, "expected ')' after binders");
      expect(Token::Kind::Equals, "expected '=' in let");
      TermPtr scrut = term();
      expect(Token::Kind::In, "expected 'in'");
      TermPtr body = term();
      return letpair_term(x.text, y.text, std::move(scrut), std::move(body));
    }
    return application();
  }

  TermPtr application() {
    TermPtr head = atom();
    for (;;) {
      const Token::Kind k = lex_.peek().kind;
      if (k == Token::Kind::Ident || k == Token::Kind::LParen)
        head = app_term(std::move(head), atom());
      else
        return head;
    }
  }

  TermPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident) return var_term(lex_.take().text);
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      if (lex_.peek().kind == Token::Kind::RParen) {
        lex_.take();
        return unit_term();
      }
      TermPtr first = term();
      if (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        TermPtr second = term();
        expect(Token::Kind::RParen, "expected ')' after pair");
        return pair_term(std::move(first), std::move(second));
      }
      expect(Token::Kind::RParen, "expected ')'");
      return first;
    }
    fail("expected a term");
  }

  TypePtr type() {
    TypePtr lhs = type_tensor();
    if (lex_.peek().kind == Token::Kind::Lolli) {
      lex_.take();
      return lolli_type(std::move(lhs), type());  // right associative
    }
    return lhs;
  }

  TypePtr type_tensor() {
    TypePtr lhs = type_atom();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      lhs = tensor_type(std::move(lhs), type_atom());
    }
    return lhs;
  }

  TypePtr type_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::BaseType) return base_type(lex_.take().dim);
    if (t.kind == Token::Kind::UnitType) {
      lex_.take();
      return unit_type();
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      TypePtr inner = type();
      expect(Token::Kind::RParen, "expected ')' in type");
      return inner;
    }
    fail("expected a type");
  }

  Lexer lex_;
};

}  // namespace

TermPtr parse(const std::string& src) { return Parser(src).run(); }

}  // namespace goi::lam
