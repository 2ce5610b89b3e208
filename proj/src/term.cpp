#include "rikit/term.hpp"

#include <stdexcept>
#include <utility>

namespace rikit {

Term::~Term() {
  if (kids.empty()) return;
  std::vector<Ptr> work;
  for (Ptr& k : kids) {
    if (k) work.push_back(std::move(k));
  }
  while (!work.empty()) {
    Ptr cur = std::move(work.back());
    work.pop_back();
    if (cur.use_count() == 1) {
      // sole owner: detach the grandchildren before cur unwinds
      for (Ptr& k : const_cast<Term&>(*cur).kids) {
        if (k) work.push_back(std::move(k));
      }
    }
  }
}

bool ground_eq(const Ground& a, const Ground& b) { return a == b; }

std::string show_ground(const Ground& g) {
  struct Shower {
    std::string operator()(UnitV) const { return "unit"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const BigInt& i) const { return i.str(); }
    std::string operator()(Symbol s) const { return "'" + s.str(); }
  };
  return std::visit(Shower{}, g);
}

int prim_arity(PrimOp op) {
  switch (op) {
    case PrimOp::Not:
    case PrimOp::Size:
      return 1;
    default:
      return 2;
  }
}

const char* prim_name(PrimOp op) {
  switch (op) {
    case PrimOp::Add: return "add";
    case PrimOp::Sub: return "sub";
    case PrimOp::Mul: return "mul";
    case PrimOp::Le: return "le";
    case PrimOp::EqInt: return "eq-int";
    case PrimOp::EqSym: return "eq-sym";
    case PrimOp::Not: return "not";
    case PrimOp::CodeEq: return "code-eq";
    case PrimOp::Spec: return "spec";
    case PrimOp::Run: return "run";
    case PrimOp::Size: return "size";
  }
  return "?";
}

namespace {

Term::Ptr make(TermKind kind, std::vector<Term::Ptr> kids) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->kids = std::move(kids);
  return t;
}

}  // namespace

Term::Ptr tvar(int index) {
  if (index < 0) throw std::invalid_argument("negative de Bruijn index");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->index = index;
  return t;
}

Term::Ptr tlam(Term::Ptr body) { return make(TermKind::Lam, {std::move(body)}); }
Term::Ptr tapp(Term::Ptr fn, Term::Ptr arg) {
  return make(TermKind::App, {std::move(fn), std::move(arg)});
}

Term::Ptr tlit(Ground g) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lit;
  t->lit = std::move(g);
  return t;
}

Term::Ptr tint(long long v) { return tlit(Ground(BigInt(v))); }
Term::Ptr tint(BigInt v) { return tlit(Ground(std::move(v))); }
Term::Ptr tbool(bool b) { return tlit(Ground(b)); }
Term::Ptr tunit() { return tlit(Ground(UnitV{})); }
Term::Ptr tsym(Symbol s) { return tlit(Ground(s)); }

Term::Ptr tpair(Term::Ptr a, Term::Ptr b) {
  return make(TermKind::Pair, {std::move(a), std::move(b)});
}
Term::Ptr tproj1(Term::Ptr t) { return make(TermKind::Proj1, {std::move(t)}); }
Term::Ptr tproj2(Term::Ptr t) { return make(TermKind::Proj2, {std::move(t)}); }
Term::Ptr tinj1(Term::Ptr t) { return make(TermKind::Inj1, {std::move(t)}); }
Term::Ptr tinj2(Term::Ptr t) { return make(TermKind::Inj2, {std::move(t)}); }

Term::Ptr tcase(Term::Ptr scrut, Term::Ptr left, Term::Ptr right) {
  return make(TermKind::Case, {std::move(scrut), std::move(left), std::move(right)});
}

Term::Ptr tif(Term::Ptr c, Term::Ptr t, Term::Ptr e) {
  return make(TermKind::If, {std::move(c), std::move(t), std::move(e)});
}

Term::Ptr tfix(Term::Ptr body) { return make(TermKind::Fix, {std::move(body)}); }

Term::Ptr tprim(PrimOp op, std::vector<Term::Ptr> args) {
  if (static_cast<int>(args.size()) != prim_arity(op)) {
    throw std::invalid_argument(std::string("arity mismatch for ") + prim_name(op));
  }
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Prim;
  t->op = op;
  t->kids = std::move(args);
  return t;
}

Term::Ptr tquote(Term::Ptr inner) {
  if (!term_closed(inner)) throw std::invalid_argument("quote of an open term");
  return make(TermKind::Quote, {std::move(inner)});
}

bool term_eq(const Term::Ptr& a, const Term::Ptr& b) {
  // Explicit worklist; spliced codes can nest deeply.
  std::vector<std::pair<const Term*, const Term*>> work{{a.get(), b.get()}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x == nullptr || y == nullptr) return false;
    if (x->kind != y->kind) return false;
    if (x->kind == TermKind::Var && x->index != y->index) return false;
    if (x->kind == TermKind::Lit && !ground_eq(x->lit, y->lit)) return false;
    if (x->kind == TermKind::Prim && x->op != y->op) return false;
    if (x->kids.size() != y->kids.size()) return false;
    for (std::size_t i = 0; i < x->kids.size(); ++i) {
      work.emplace_back(x->kids[i].get(), y->kids[i].get());
    }
  }
  return true;
}

std::size_t term_size(const Term::Ptr& t) {
  std::size_t n = 0;
  std::vector<const Term*> work{t.get()};
  while (!work.empty()) {
    const Term* cur = work.back();
    work.pop_back();
    if (cur == nullptr) continue;
    ++n;
    for (const auto& k : cur->kids) work.push_back(k.get());
  }
  return n;
}

bool term_closed(const Term::Ptr& t, int depth) {
  if (!t) return false;
  switch (t->kind) {
    case TermKind::Var:
      return t->index < depth;
    case TermKind::Lam:
      return term_closed(t->kids[0], depth + 1);
    case TermKind::Case:
      return term_closed(t->kids[0], depth) && term_closed(t->kids[1], depth + 1) &&
             term_closed(t->kids[2], depth + 1);
    case TermKind::Quote:
      return term_closed(t->kids[0], 0);
    default:
      for (const auto& k : t->kids) {
        if (!term_closed(k, depth)) return false;
      }
      return true;
  }
}

Term::Ptr term_shift(const Term::Ptr& t, int delta, int cutoff) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->index >= cutoff) return tvar(t->index + delta);
      return t;
    case TermKind::Lit:
    case TermKind::Quote:
      return t;
    case TermKind::Lam:
      return tlam(term_shift(t->kids[0], delta, cutoff + 1));
    case TermKind::Case:
      return tcase(term_shift(t->kids[0], delta, cutoff),
                   term_shift(t->kids[1], delta, cutoff + 1),
                   term_shift(t->kids[2], delta, cutoff + 1));
    default: {
      std::vector<Term::Ptr> kids;
      kids.reserve(t->kids.size());
      bool changed = false;
      for (const auto& k : t->kids) {
        auto nk = term_shift(k, delta, cutoff);
        changed = changed || nk != k;
        kids.push_back(std::move(nk));
      }
      if (!changed) return t;
      auto out = std::make_shared<Term>();
      out->kind = t->kind;
      out->index = t->index;
      out->lit = t->lit;
      out->op = t->op;
      out->kids = std::move(kids);
      return out;
    }
  }
}

}  // namespace rikit
