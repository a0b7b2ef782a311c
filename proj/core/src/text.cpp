#include "ccc/text.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace ccc {

namespace {

// Precedence levels for object printing: 0 arrow, 1 product, 2 operand.
void print_obj_rec(const ObjectPtr& o, int prec, std::string& out) {
  switch (o->kind) {
    case ObjKind::Terminal:
      out += "T";
      return;
    case ObjKind::Atom:
      out += o->name;
      return;
    case ObjKind::Product: {
      bool paren = prec >= 2;
      if (paren) out += "(";
      print_obj_rec(o->left, 1, out);
      out += "*";
      print_obj_rec(o->right, 2, out);
      if (paren) out += ")";
      return;
    }
    case ObjKind::Exponential: {
      bool paren = prec >= 1;
      if (paren) out += "(";
      print_obj_rec(o->left, 1, out);
      out += "->";
      print_obj_rec(o->right, 0, out);
      if (paren) out += ")";
      return;
    }
  }
}

// Precedence for arrows: 0 composition chain, 1 operand of '.'.
void print_arr_rec(const ArrowPtr& t, int prec, std::string& out) {
  switch (t->kind) {
    case ArrKind::Const:
    case ArrKind::Indet:
      out += t->name;
      return;
    case ArrKind::Id:
      out += "id[";
      print_obj_rec(t->obj1, 0, out);
      out += "]";
      return;
    case ArrKind::Bang:
      out += "k[";
      print_obj_rec(t->obj1, 0, out);
      out += "]";
      return;
    case ArrKind::Proj:
      out += t->index == 1 ? "p1[" : "p2[";
      print_obj_rec(t->obj1, 0, out);
      out += ",";
      print_obj_rec(t->obj2, 0, out);
      out += "]";
      return;
    case ArrKind::Eval:
      out += "eps[";
      print_obj_rec(t->obj1, 0, out);
      out += ",";
      print_obj_rec(t->obj2, 0, out);
      out += "]";
      return;
    case ArrKind::Comp: {
      bool paren = prec >= 1;
      if (paren) out += "(";
      print_arr_rec(t->sub1, 0, out);
      out += " . ";
      print_arr_rec(t->sub2, 1, out);
      if (paren) out += ")";
      return;
    }
    case ArrKind::Pair:
      out += "<";
      print_arr_rec(t->sub1, 0, out);
      out += ", ";
      print_arr_rec(t->sub2, 0, out);
      out += ">";
      return;
    case ArrKind::Curry:
      out += "curry[";
      print_obj_rec(t->obj1, 0, out);
      out += ",";
      print_obj_rec(t->obj2, 0, out);
      out += "](";
      print_arr_rec(t->sub1, 0, out);
      out += ")";
      return;
  }
}

void print_lam_rec(const LambdaPtr& t, int depth, int prec, std::string& out) {
  // prec: 0 open, 1 application head, 2 application argument / atom
  switch (t->kind) {
    case LamKind::Var:
      out += "v" + std::to_string(t->level);
      return;
    case LamKind::Const:
      out += t->name;
      return;
    case LamKind::Unit:
      out += "()";
      return;
    case LamKind::Abs: {
      bool paren = prec >= 1;
      if (paren) out += "(";
      out += "\\v" + std::to_string(depth) + ":";
      print_obj_rec(t->type, 0, out);
      out += ". ";
      print_lam_rec(t->t1, depth + 1, 0, out);
      if (paren) out += ")";
      return;
    }
    case LamKind::App: {
      bool paren = prec >= 2;
      if (paren) out += "(";
      print_lam_rec(t->t1, depth, 1, out);
      out += " ";
      print_lam_rec(t->t2, depth, 2, out);
      if (paren) out += ")";
      return;
    }
    case LamKind::Pair:
      out += "(";
      print_lam_rec(t->t1, depth, 0, out);
      out += ", ";
      print_lam_rec(t->t2, depth, 0, out);
      out += ")";
      return;
    case LamKind::Fst:
      out += "fst(";
      print_lam_rec(t->t1, depth, 0, out);
      out += ")";
      return;
    case LamKind::Snd:
      out += "snd(";
      print_lam_rec(t->t1, depth, 0, out);
      out += ")";
      return;
  }
}

enum class Tok {
  Ident,
  Star,
  ObjArrow,   // ->
  Turnstile,  // |-
  Colon,
  Dot,
  Lt,
  Gt,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& src, int first_line) : src_(src), line_(first_line) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what + ", found '" + describe(cur_) + "'", cur_.line,
                       cur_.col);
    return next();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      cur_.text.clear();
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      cur_.kind = Tok::Ident;
      cur_.text = src_.substr(start, pos_ - start);
      col_ += static_cast<int>(cur_.text.size());
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
    };
    if (two('-', '>')) {
      cur_ = {Tok::ObjArrow, "->", line_, col_};
      pos_ += 2;
      col_ += 2;
      return;
    }
    if (two('|', '-')) {
      cur_ = {Tok::Turnstile, "|-", line_, col_};
      pos_ += 2;
      col_ += 2;
      return;
    }
    Tok kind;
    switch (c) {
      case '*': kind = Tok::Star; break;
      case ':': kind = Tok::Colon; break;
      case '.': kind = Tok::Dot; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    cur_ = {kind, std::string(1, c), line_, col_};
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_;
  int col_ = 1;
  Token cur_;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"T",     "id",    "k",           "p1",
                                              "p2",    "eps",   "curry",       "object",
                                              "arrow", "indeterminate"};
  return words;
}

ObjectPtr parse_obj_expr(Lexer& lx, const Signature& sig);

ObjectPtr parse_obj_atom(Lexer& lx, const Signature& sig) {
  const Token& t = lx.peek();
  if (t.kind == Tok::LParen) {
    lx.next();
    ObjectPtr o = parse_obj_expr(lx, sig);
    lx.expect(Tok::RParen, "')'");
    return o;
  }
  if (t.kind == Tok::Ident) {
    Token name = lx.next();
    if (name.text == "T") return terminal();
    if (!sig.has_atom(name.text))
      throw UnknownIdentifier("unknown object atom '" + name.text + "' at " +
                              std::to_string(name.line) + ":" + std::to_string(name.col));
    return atom(name.text);
  }
  throw ParseError("expected an object, found '" + Lexer::describe(t) + "'", t.line, t.col);
}

ObjectPtr parse_obj_prod(Lexer& lx, const Signature& sig) {
  ObjectPtr left = parse_obj_atom(lx, sig);
  while (lx.peek().kind == Tok::Star) {
    lx.next();
    left = product(left, parse_obj_atom(lx, sig));
  }
  return left;
}

ObjectPtr parse_obj_expr(Lexer& lx, const Signature& sig) {
  ObjectPtr left = parse_obj_prod(lx, sig);
  if (lx.peek().kind == Tok::ObjArrow) {
    lx.next();
    return exponential(left, parse_obj_expr(lx, sig));
  }
  return left;
}

ArrowPtr parse_term(Lexer& lx, const Signature& sig);

ObjectPtr parse_bracketed_object(Lexer& lx, const Signature& sig) {
  lx.expect(Tok::LBracket, "'['");
  ObjectPtr o = parse_obj_expr(lx, sig);
  lx.expect(Tok::RBracket, "']'");
  return o;
}

std::pair<ObjectPtr, ObjectPtr> parse_bracketed_pair(Lexer& lx, const Signature& sig) {
  lx.expect(Tok::LBracket, "'['");
  ObjectPtr a = parse_obj_expr(lx, sig);
  lx.expect(Tok::Comma, "','");
  ObjectPtr b = parse_obj_expr(lx, sig);
  lx.expect(Tok::RBracket, "']'");
  return {a, b};
}

ArrowPtr parse_primary(Lexer& lx, const Signature& sig) {
  const Token& t = lx.peek();
  if (t.kind == Tok::LParen) {
    lx.next();
    ArrowPtr inner = parse_term(lx, sig);
    lx.expect(Tok::RParen, "')'");
    return inner;
  }
  if (t.kind == Tok::Lt) {
    lx.next();
    ArrowPtr fst = parse_term(lx, sig);
    lx.expect(Tok::Comma, "','");
    ArrowPtr snd = parse_term(lx, sig);
    lx.expect(Tok::Gt, "'>'");
    return pair(fst, snd);
  }
  if (t.kind != Tok::Ident)
    throw ParseError("expected a term, found '" + Lexer::describe(t) + "'", t.line, t.col);
  Token name = lx.next();
  if (name.text == "id") return identity(parse_bracketed_object(lx, sig));
  if (name.text == "k") return bang(parse_bracketed_object(lx, sig));
  if (name.text == "p1" || name.text == "p2") {
    auto [a, b] = parse_bracketed_pair(lx, sig);
    return proj(name.text == "p1" ? 1 : 2, a, b);
  }
  if (name.text == "eps") {
    auto [a, b] = parse_bracketed_pair(lx, sig);
    return eval(a, b);
  }
  if (name.text == "curry") {
    auto [a, c] = parse_bracketed_pair(lx, sig);
    lx.expect(Tok::LParen, "'('");
    ArrowPtr body = parse_term(lx, sig);
    lx.expect(Tok::RParen, "')'");
    return curry(a, c, body);
  }
  if (sig.is_indet(name.text)) return indet(name.text);
  if (sig.arrow_consts.count(name.text) != 0) return constant(name.text);
  throw UnknownIdentifier("unknown identifier '" + name.text + "' at " +
                          std::to_string(name.line) + ":" + std::to_string(name.col));
}

ArrowPtr parse_term(Lexer& lx, const Signature& sig) {
  ArrowPtr left = parse_primary(lx, sig);
  while (lx.peek().kind == Tok::Dot) {
    lx.next();
    left = comp(left, parse_primary(lx, sig));
  }
  return left;
}

std::string declared_name(Lexer& lx) {
  Token name = lx.expect(Tok::Ident, "a name");
  if (reserved_words().count(name.text) != 0)
    throw ParseError("'" + name.text + "' is reserved", name.line, name.col);
  return name.text;
}

}  // namespace

std::string print_object(const ObjectPtr& o) {
  if (!o) throw InternalError("print_object: null object");
  std::string out;
  print_obj_rec(o, 0, out);
  return out;
}

std::string print_arrow(const ArrowPtr& t) {
  if (!t) throw InternalError("print_arrow: null arrow");
  std::string out;
  print_arr_rec(t, 0, out);
  return out;
}

std::string print_type(const ArrowType& ty) {
  return print_object(ty.source) + " |- " + print_object(ty.target);
}

std::string print_lambda(const LambdaPtr& t) {
  if (!t) throw InternalError("print_lambda: null term");
  std::string out;
  print_lam_rec(t, 0, 0, out);
  return out;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Lexer lx(line, line_no);
    if (lx.peek().kind == Tok::End) continue;
    Token head = lx.expect(Tok::Ident, "a declaration");
    if (head.text == "object") {
      std::string name = declared_name(lx);
      if (sig.object_atoms.count(name) != 0)
        throw DuplicateName("object '" + name + "' declared twice");
      sig.object_atoms.insert(name);
    } else if (head.text == "arrow") {
      std::string name = declared_name(lx);
      if (sig.arrow_consts.count(name) != 0 || sig.is_indet(name))
        throw DuplicateName("arrow '" + name + "' declared twice");
      lx.expect(Tok::Colon, "':'");
      ObjectPtr src = parse_obj_expr(lx, sig);
      lx.expect(Tok::Turnstile, "'|-'");
      ObjectPtr tgt = parse_obj_expr(lx, sig);
      sig.arrow_consts.emplace(name, ArrowType{src, tgt});
    } else if (head.text == "indeterminate") {
      std::string name = declared_name(lx);
      if (sig.indeterminate)
        throw DuplicateName("a signature admits at most one indeterminate");
      if (sig.arrow_consts.count(name) != 0)
        throw DuplicateName("indeterminate '" + name + "' clashes with an arrow constant");
      lx.expect(Tok::Colon, "':'");
      ObjectPtr src = parse_obj_expr(lx, sig);
      lx.expect(Tok::Turnstile, "'|-'");
      ObjectPtr tgt = parse_obj_expr(lx, sig);
      if (src->kind != ObjKind::Terminal)
        throw BadIndeterminateType("the indeterminate must have source T, not " +
                                   print_object(src));
      sig.indeterminate = Signature::IndetDecl{name, tgt};
    } else {
      throw ParseError("expected 'object', 'arrow' or 'indeterminate', found '" + head.text + "'",
                       head.line, head.col);
    }
    if (lx.peek().kind != Tok::End) {
      const Token& extra = lx.peek();
      throw ParseError("unexpected '" + Lexer::describe(extra) + "' after declaration",
                       extra.line, extra.col);
    }
  }
  sig.validate();
  return sig;
}

ArrowPtr parse_arrow(const std::string& text, const Signature& sig) {
  Lexer lx(text, 1);
  ArrowPtr t = parse_term(lx, sig);
  if (lx.peek().kind != Tok::End) {
    const Token& extra = lx.peek();
    throw ParseError("unexpected '" + Lexer::describe(extra) + "' after term", extra.line,
                     extra.col);
  }
  type_of(t, sig);
  return t;
}

ObjectPtr parse_object(const std::string& text, const Signature& sig) {
  Lexer lx(text, 1);
  ObjectPtr o = parse_obj_expr(lx, sig);
  if (lx.peek().kind != Tok::End) {
    const Token& extra = lx.peek();
    throw ParseError("unexpected '" + Lexer::describe(extra) + "' after object", extra.line,
                     extra.col);
  }
  return o;
}

}  // namespace ccc
