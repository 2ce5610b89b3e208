#include "rikit/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rikit {

namespace {

constexpr int kMaxDepth = 4096;

struct Token {
  enum class Kind { LParen, RParen, Atom, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') {
      advance();
      return {Token::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {Token::Kind::RParen, ")", line, col};
    }
    std::string atom;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      atom += text_[pos_];
      advance();
    }
    return {Token::Kind::Atom, atom, line, col};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::map<std::string, PrimOp, std::less<>>& prim_table() {
  static const std::map<std::string, PrimOp, std::less<>> t = {
      {"add", PrimOp::Add},       {"sub", PrimOp::Sub},   {"mul", PrimOp::Mul},
      {"le", PrimOp::Le},         {"eq-int", PrimOp::EqInt}, {"eq-sym", PrimOp::EqSym},
      {"not", PrimOp::Not},       {"code-eq", PrimOp::CodeEq}, {"spec", PrimOp::Spec},
      {"run", PrimOp::Run},       {"size", PrimOp::Size},
  };
  return t;
}

bool is_reserved(const std::string& word) {
  static const std::vector<std::string> keywords = {
      "lam", "app", "quote", "pair", "fst", "snd", "inl", "inr",
      "case", "if", "fix", "true", "false", "unit",
  };
  for (const auto& k : keywords) {
    if (k == word) return true;
  }
  return prim_table().count(word) > 0;
}

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return !std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

  Term::Ptr parse_program() {
    std::vector<std::string> scope;
    Term::Ptr t = parse_term(scope, 0);
    if (cur_.kind != Token::Kind::End) {
      throw ParseError("trailing input after program", cur_.line, cur_.col);
    }
    return t;
  }

 private:
  Token cur_;
  Lexer lexer_;

  void bump() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

  Term::Ptr parse_term(std::vector<std::string>& scope, int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    switch (cur_.kind) {
      case Token::Kind::End:
        fail("unexpected end of input");
      case Token::Kind::RParen:
        fail("unexpected ')'");
      case Token::Kind::Atom: {
        Token tok = cur_;
        bump();
        return atom_term(tok, scope);
      }
      case Token::Kind::LParen:
        break;
    }
    Token open = cur_;
    bump();
    if (cur_.kind != Token::Kind::Atom) {
      // Head is itself a compound term: an implicit application.
      return parse_application({}, scope, depth, open);
    }
    Token head = cur_;
    const std::string& w = head.text;

    if (w == "lam") return parse_lam(scope, depth);
    if (w == "quote") return parse_quote(depth);
    if (w == "case") return parse_case(scope, depth);
    if (w == "if") return parse_fixed(TermKind::If, 3, scope, depth);
    if (w == "pair") return parse_fixed(TermKind::Pair, 2, scope, depth);
    if (w == "fst") return parse_fixed(TermKind::Proj1, 1, scope, depth);
    if (w == "snd") return parse_fixed(TermKind::Proj2, 1, scope, depth);
    if (w == "inl") return parse_fixed(TermKind::Inj1, 1, scope, depth);
    if (w == "inr") return parse_fixed(TermKind::Inj2, 1, scope, depth);
    if (w == "fix") return parse_fixed(TermKind::Fix, 1, scope, depth);
    if (auto it = prim_table().find(w); it != prim_table().end()) {
      bump();
      std::vector<Term::Ptr> args;
      for (int i = 0; i < prim_arity(it->second); ++i) args.push_back(parse_term(scope, depth + 1));
      expect_rparen();
      return tprim(it->second, std::move(args));
    }
    if (w == "app") {
      bump();
      return parse_application({}, scope, depth, open);
    }
    // Implicit application with an atom head.
    bump();
    Term::Ptr fn = atom_term(head, scope);
    return parse_application(fn, scope, depth, open);
  }

  Term::Ptr atom_term(const Token& tok, std::vector<std::string>& scope) {
    const std::string& s = tok.text;
    if (s == "true") return tbool(true);
    if (s == "false") return tbool(false);
    if (s == "unit") return tunit();
    if (looks_like_int(s)) return tint(BigInt::parse(s));
    if (s.size() > 1 && s[0] == '\'') {
      std::string name = s.substr(1);
      if (!valid_name(name)) throw ParseError("bad symbol literal " + s, tok.line, tok.col);
      return tsym(Symbol::intern(name));
    }
    if (is_reserved(s)) throw ParseError("reserved word '" + s + "' used as a value", tok.line, tok.col);
    if (!valid_name(s)) throw ParseError("bad identifier '" + s + "'", tok.line, tok.col);
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i] == s) return tvar(static_cast<int>(scope.size() - 1 - i));
    }
    throw ParseError("unbound identifier '" + s + "'", tok.line, tok.col);
  }

  Term::Ptr parse_application(Term::Ptr fn, std::vector<std::string>& scope, int depth,
                              const Token& open) {
    std::vector<Term::Ptr> parts;
    if (fn) parts.push_back(std::move(fn));
    while (cur_.kind != Token::Kind::RParen) {
      if (cur_.kind == Token::Kind::End) {
        throw ParseError("unclosed '('", open.line, open.col);
      }
      parts.push_back(parse_term(scope, depth + 1));
    }
    bump();  // ')'
    if (parts.size() < 2) throw ParseError("application needs a function and an argument",
                                           open.line, open.col);
    Term::Ptr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = tapp(acc, parts[i]);
    return acc;
  }

  Term::Ptr parse_lam(std::vector<std::string>& scope, int depth) {
    bump();  // 'lam'
    if (cur_.kind != Token::Kind::Atom || !valid_name(cur_.text) || is_reserved(cur_.text)) {
      fail("expected binder name after lam");
    }
    scope.push_back(cur_.text);
    bump();
    Term::Ptr body = parse_term(scope, depth + 1);
    scope.pop_back();
    expect_rparen();
    return tlam(std::move(body));
  }

  Term::Ptr parse_quote(int depth) {
    bump();  // 'quote'
    Token at = cur_;
    std::vector<std::string> fresh;  // quoted programs are closed
    Term::Ptr inner = parse_term(fresh, depth + 1);
    expect_rparen();
    if (!term_closed(inner)) throw ParseError("quoted term must be closed", at.line, at.col);
    return tquote(std::move(inner));
  }

  Term::Ptr parse_case(std::vector<std::string>& scope, int depth) {
    bump();  // 'case'
    Term::Ptr scrut = parse_term(scope, depth + 1);
    auto branch = [&]() {
      if (cur_.kind != Token::Kind::Atom || !valid_name(cur_.text) || is_reserved(cur_.text)) {
        fail("expected branch binder in case");
      }
      scope.push_back(cur_.text);
      bump();
      Term::Ptr body = parse_term(scope, depth + 1);
      scope.pop_back();
      return body;
    };
    Term::Ptr left = branch();
    Term::Ptr right = branch();
    expect_rparen();
    return tcase(std::move(scrut), std::move(left), std::move(right));
  }

  Term::Ptr parse_fixed(TermKind kind, int arity, std::vector<std::string>& scope, int depth) {
    bump();  // keyword
    std::vector<Term::Ptr> kids;
    for (int i = 0; i < arity; ++i) kids.push_back(parse_term(scope, depth + 1));
    expect_rparen();
    switch (kind) {
      case TermKind::Pair: return tpair(kids[0], kids[1]);
      case TermKind::Proj1: return tproj1(kids[0]);
      case TermKind::Proj2: return tproj2(kids[0]);
      case TermKind::Inj1: return tinj1(kids[0]);
      case TermKind::Inj2: return tinj2(kids[0]);
      case TermKind::If: return tif(kids[0], kids[1], kids[2]);
      case TermKind::Fix: return tfix(kids[0]);
      default: fail("internal parser dispatch");
    }
  }

  void expect_rparen() {
    if (cur_.kind != Token::Kind::RParen) fail("expected ')'");
    bump();
  }
};

std::string binder_name(int depth) {
  std::string out(1, static_cast<char>('a' + depth % 26));
  if (depth >= 26) out += std::to_string(depth / 26);
  return out;
}

void print_iter(const Term::Ptr& root, std::string& out) {
  struct Visit {
    const Term* t;
    int depth;
  };
  // chunks to append or subterms to render, processed last-in first-out
  std::vector<std::variant<Visit, std::string>> work{Visit{root.get(), 0}};
  while (!work.empty()) {
    auto job = std::move(work.back());
    work.pop_back();
    if (auto* chunk = std::get_if<std::string>(&job)) {
      out += *chunk;
      continue;
    }
    auto [t, depth] = std::get<Visit>(job);
    switch (t->kind) {
      case TermKind::Var: {
        int binder = depth - 1 - t->index;
        if (binder < 0) {
          out += "#" + std::to_string(t->index);  // open term; not re-parseable
        } else {
          out += binder_name(binder);
        }
        break;
      }
      case TermKind::Lit:
        out += show_ground(t->lit);
        break;
      case TermKind::Lam:
        out += "(lam " + binder_name(depth) + " ";
        work.emplace_back(")");
        work.emplace_back(Visit{t->kids[0].get(), depth + 1});
        break;
      case TermKind::App:
        out += "(";
        work.emplace_back(")");
        work.emplace_back(Visit{t->kids[1].get(), depth});
        work.emplace_back(" ");
        work.emplace_back(Visit{t->kids[0].get(), depth});
        break;
      case TermKind::Pair:
      case TermKind::If: {
        out += t->kind == TermKind::Pair ? "(pair" : "(if";
        work.emplace_back(")");
        for (std::size_t i = t->kids.size(); i-- > 0;) {
          work.emplace_back(Visit{t->kids[i].get(), depth});
          work.emplace_back(" ");
        }
        break;
      }
      case TermKind::Proj1:
      case TermKind::Proj2:
      case TermKind::Inj1:
      case TermKind::Inj2:
      case TermKind::Fix:
        out += t->kind == TermKind::Proj1   ? "(fst "
               : t->kind == TermKind::Proj2 ? "(snd "
               : t->kind == TermKind::Inj1  ? "(inl "
               : t->kind == TermKind::Inj2  ? "(inr "
                                            : "(fix ";
        work.emplace_back(")");
        work.emplace_back(Visit{t->kids[0].get(), depth});
        break;
      case TermKind::Case:
        out += "(case ";
        work.emplace_back(")");
        work.emplace_back(Visit{t->kids[2].get(), depth + 1});
        work.emplace_back(" " + binder_name(depth) + " ");
        work.emplace_back(Visit{t->kids[1].get(), depth + 1});
        work.emplace_back(" " + binder_name(depth) + " ");
        work.emplace_back(Visit{t->kids[0].get(), depth});
        break;
      case TermKind::Prim:
        out += "(";
        out += prim_name(t->op);
        work.emplace_back(")");
        for (std::size_t i = t->kids.size(); i-- > 0;) {
          work.emplace_back(Visit{t->kids[i].get(), depth});
          work.emplace_back(" ");
        }
        break;
      case TermKind::Quote:
        out += "(quote ";
        work.emplace_back(")");
        work.emplace_back(Visit{t->kids[0].get(), 0});
        break;
    }
  }
}

}  // namespace

Term::Ptr parse(std::string_view text) { return Parser(text).parse_program(); }

std::string print_term(const Term::Ptr& t) {
  std::string out;
  print_iter(t, out);
  return out;
}

}  // namespace rikit
