#include "audel/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace audel {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string Fluent::str() const {
  if (args.empty()) return predicate;
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i];
  }
  return out + ")";
}

void Signature::declare(const std::string& predicate, std::size_t arity) {
  arities_[predicate] = arity;
}

std::optional<std::string> Signature::check(const std::string& predicate,
                                            std::size_t arity) {
  auto it = arities_.find(predicate);
  if (it == arities_.end()) {
    if (closed_) return "unknown predicate '" + predicate + "'";
    arities_[predicate] = arity;
    return std::nullopt;
  }
  if (it->second != arity) {
    return "arity mismatch for '" + predicate + "': declared " +
           std::to_string(it->second) + ", used with " + std::to_string(arity);
  }
  return std::nullopt;
}

bool Signature::knows(const std::string& predicate) const {
  return arities_.count(predicate) > 0;
}

std::optional<std::size_t> Signature::arity_of(
    const std::string& predicate) const {
  auto it = arities_.find(predicate);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

namespace {

FormulaPtr make(Formula node) {
  return std::make_shared<const Formula>(std::move(node));
}

}  // namespace

FormulaPtr top() {
  static const FormulaPtr t = make({FormulaKind::Top, {}, {}, {}, {}, {}});
  return t;
}

FormulaPtr bottom() { return f_not(top()); }

FormulaPtr atom(Fluent f) {
  return make({FormulaKind::Atom, std::move(f), {}, {}, {}, {}});
}

FormulaPtr atom(const std::string& predicate) {
  return atom(Fluent{predicate, {}});
}

FormulaPtr f_not(FormulaPtr a) {
  return make({FormulaKind::Not, {}, {}, {}, std::move(a), {}});
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return make({FormulaKind::And, {}, {}, {}, std::move(a), std::move(b)});
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return f_not(f_and(f_not(std::move(a)), f_not(std::move(b))));
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return f_not(f_and(std::move(a), f_not(std::move(b))));
}

FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return f_and(implies(a, b), implies(b, a));
}

FormulaPtr possible(AgentName i, FormulaPtr a) {
  return make({FormulaKind::Possible, {}, std::move(i), {}, std::move(a), {}});
}

FormulaPtr belief(AgentName i, FormulaPtr a) {
  return f_not(possible(std::move(i), f_not(std::move(a))));
}

FormulaPtr dia_update(PointedFrameRef pf, FormulaPtr a) {
  return make({FormulaKind::DiamondUpdate, {}, {}, {std::move(pf)},
               std::move(a), {}});
}

FormulaPtr dia_union(std::vector<PointedFrameRef> pfs, FormulaPtr a) {
  if (pfs.empty()) throw std::invalid_argument("empty union update");
  if (pfs.size() == 1) return dia_update(std::move(pfs.front()), std::move(a));
  return make({FormulaKind::DiamondUnion, {}, {}, std::move(pfs),
               std::move(a), {}});
}

FormulaPtr box_update(PointedFrameRef pf, FormulaPtr a) {
  return f_not(dia_update(std::move(pf), f_not(std::move(a))));
}

FormulaPtr box_union(std::vector<PointedFrameRef> pfs, FormulaPtr a) {
  return f_not(dia_union(std::move(pfs), f_not(std::move(a))));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom:
      return a->atom == b->atom;
    case FormulaKind::Not:
      return equal(a->lhs, b->lhs);
    case FormulaKind::And:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FormulaKind::Possible:
      return a->agent == b->agent && equal(a->lhs, b->lhs);
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion:
      return a->pframes == b->pframes && equal(a->lhs, b->lhs);
  }
  return false;
}

ParseError::ParseError(std::string msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)),
      position(pos) {}

namespace {

// Hand-rolled tokenizer + recursive descent parser.

enum class Tok {
  True, Ident, Tilde, LParen, RParen, LBracket, RBracket,
  Lt, Gt, Amp, Pipe, Arrow, Iff, Plus, At, Comma, PLetter, BLetter, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_]))) {
      ++i_;
    }
    std::size_t start = i_;
    if (i_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_')) {
        ++j;
      }
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      if (word == "true") {
        current_ = {Tok::True, word, start};
      } else if (word == "P" && j < text_.size() && text_[j] == '[') {
        current_ = {Tok::PLetter, word, start};
      } else if (word == "B" && j < text_.size() && text_[j] == '[') {
        current_ = {Tok::BLetter, word, start};
      } else {
        current_ = {Tok::Ident, word, start};
      }
      return;
    }
    if (text_.compare(i_, 3, "<->") == 0) {
      i_ += 3;
      current_ = {Tok::Iff, "<->", start};
      return;
    }
    if (text_.compare(i_, 2, "->") == 0) {
      i_ += 2;
      current_ = {Tok::Arrow, "->", start};
      return;
    }
    ++i_;
    switch (c) {
      case '~': current_ = {Tok::Tilde, "~", start}; return;
      case '(': current_ = {Tok::LParen, "(", start}; return;
      case ')': current_ = {Tok::RParen, ")", start}; return;
      case '[': current_ = {Tok::LBracket, "[", start}; return;
      case ']': current_ = {Tok::RBracket, "]", start}; return;
      case '<': current_ = {Tok::Lt, "<", start}; return;
      case '>': current_ = {Tok::Gt, ">", start}; return;
      case '&': current_ = {Tok::Amp, "&", start}; return;
      case '|': current_ = {Tok::Pipe, "|", start}; return;
      case '+': current_ = {Tok::Plus, "+", start}; return;
      case '@': current_ = {Tok::At, "@", start}; return;
      case ',': current_ = {Tok::Comma, ",", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& text, Signature& sig) : lex_(text), sig_(sig) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) {
      throw ParseError("expected " + what, lex_.peek().pos);
    }
    return lex_.next();
  }

  std::string expect_ident(const std::string& what) {
    if (lex_.peek().kind == Tok::Ident || lex_.peek().kind == Tok::PLetter ||
        lex_.peek().kind == Tok::BLetter) {
      return lex_.next().text;
    }
    throw ParseError("expected " + what, lex_.peek().pos);
  }

  FormulaPtr parse_iff() {
    FormulaPtr a = parse_implies();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.next();
      a = iff(a, parse_implies());
    }
    return a;
  }

  FormulaPtr parse_implies() {
    FormulaPtr a = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.next();
      return implies(a, parse_implies());  // right associative
    }
    return a;
  }

  FormulaPtr parse_or() {
    FormulaPtr a = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.next();
      a = f_or(a, parse_and());
    }
    return a;
  }

  FormulaPtr parse_and() {
    FormulaPtr a = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.next();
      a = f_and(a, parse_unary());
    }
    return a;
  }

  PointedFrameRef parse_pframe() {
    std::string frame = expect_ident("frame name");
    expect(Tok::At, "'@'");
    std::string event = expect_ident("event name");
    return {frame, event};
  }

  FormulaPtr parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::True:
        lex_.next();
        return top();
      case Tok::Tilde:
        lex_.next();
        return f_not(parse_unary());
      case Tok::PLetter:
      case Tok::BLetter: {
        bool is_belief = t.kind == Tok::BLetter;
        lex_.next();
        expect(Tok::LBracket, "'['");
        std::string agent = expect_ident("agent name");
        expect(Tok::RBracket, "']'");
        FormulaPtr sub = parse_unary();
        return is_belief ? belief(agent, sub) : possible(agent, sub);
      }
      case Tok::Lt: {
        lex_.next();
        std::vector<PointedFrameRef> pfs;
        pfs.push_back(parse_pframe());
        while (lex_.peek().kind == Tok::Plus) {
          lex_.next();
          pfs.push_back(parse_pframe());
        }
        expect(Tok::Gt, "'>'");
        return dia_union(std::move(pfs), parse_unary());
      }
      case Tok::LBracket: {
        lex_.next();
        std::vector<PointedFrameRef> pfs;
        pfs.push_back(parse_pframe());
        while (lex_.peek().kind == Tok::Plus) {
          lex_.next();
          pfs.push_back(parse_pframe());
        }
        expect(Tok::RBracket, "']'");
        return box_union(std::move(pfs), parse_unary());
      }
      case Tok::LParen: {
        lex_.next();
        FormulaPtr f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        return parse_atom();
      default:
        throw ParseError("expected formula", t.pos);
    }
  }

  FormulaPtr parse_atom() {
    Token name = lex_.next();
    Fluent fl{name.text, {}};
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      fl.args.push_back(expect_ident("agent name"));
      while (lex_.peek().kind == Tok::Comma) {
        lex_.next();
        fl.args.push_back(expect_ident("agent name"));
      }
      expect(Tok::RParen, "')'");
    }
    if (auto err = sig_.check(fl.predicate, fl.args.size())) {
      throw ParseError(*err, name.pos);
    }
    return atom(std::move(fl));
  }

  Lexer lex_;
  Signature& sig_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, Signature& signature) {
  return Parser(text, signature).parse();
}

FormulaPtr parse_formula(const std::string& text) {
  Signature sig = Signature::open();
  return parse_formula(text, sig);
}

Fluent parse_fluent(const std::string& text, Signature& signature) {
  Signature scratch = Signature::open();
  FormulaPtr f = parse_formula(text, scratch);
  if (f->kind != FormulaKind::Atom) {
    throw ParseError("expected a fluent", 0);
  }
  if (auto err = signature.check(f->atom.predicate, f->atom.args.size())) {
    throw ParseError(*err, 0);
  }
  return f->atom;
}

namespace {

void print_rec(const FormulaPtr& f, std::string& out) {
  switch (f->kind) {
    case FormulaKind::Top:
      out += "true";
      return;
    case FormulaKind::Atom:
      out += f->atom.str();
      return;
    case FormulaKind::Not:
      out += "~";
      print_rec(f->lhs, out);
      return;
    case FormulaKind::And:
      out += "(";
      print_rec(f->lhs, out);
      out += " & ";
      print_rec(f->rhs, out);
      out += ")";
      return;
    case FormulaKind::Possible:
      out += "P[" + f->agent + "] ";
      print_rec(f->lhs, out);
      return;
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion: {
      out += "<";
      for (std::size_t i = 0; i < f->pframes.size(); ++i) {
        if (i) out += " + ";
        out += f->pframes[i].frame + "@" + f->pframes[i].event;
      }
      out += "> ";
      print_rec(f->lhs, out);
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

std::size_t node_count(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return 1;
    case FormulaKind::Not:
    case FormulaKind::Possible:
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion:
      return 1 + node_count(f->lhs);
    case FormulaKind::And:
      return 1 + node_count(f->lhs) + node_count(f->rhs);
  }
  return 0;
}

std::size_t modal_depth(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return 0;
    case FormulaKind::Not:
      return modal_depth(f->lhs);
    case FormulaKind::And:
      return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
    case FormulaKind::Possible:
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion:
      return 1 + modal_depth(f->lhs);
  }
  return 0;
}

bool is_el(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Not:
    case FormulaKind::Possible:
      return is_el(f->lhs);
    case FormulaKind::And:
      return is_el(f->lhs) && is_el(f->rhs);
    case FormulaKind::DiamondUpdate:
    case FormulaKind::DiamondUnion:
      return false;
  }
  return false;
}

bool is_del_minus(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Not:
    case FormulaKind::Possible:
    case FormulaKind::DiamondUpdate:
      return f->lhs ? is_del_minus(f->lhs) : true;
    case FormulaKind::And:
      return is_del_minus(f->lhs) && is_del_minus(f->rhs);
    case FormulaKind::DiamondUnion:
      return false;
  }
  return false;
}

namespace {

template <typename T, typename Visit>
std::vector<T> collect(const FormulaPtr& f, Visit visit) {
  std::set<T> seen;
  std::vector<T> out;
  auto add = [&](const T& x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  auto rec = [&](auto&& self, const FormulaPtr& g) -> void {
    visit(g, add);
    if (g->lhs) self(self, g->lhs);
    if (g->rhs) self(self, g->rhs);
  };
  rec(rec, f);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<AgentName> agents_of(const FormulaPtr& f) {
  return collect<AgentName>(f, [](const FormulaPtr& g, auto add) {
    if (g->kind == FormulaKind::Possible) add(g->agent);
    if (g->kind == FormulaKind::Atom) {
      for (const auto& a : g->atom.args) add(a);
    }
  });
}

std::vector<Fluent> fluents_of(const FormulaPtr& f) {
  return collect<Fluent>(f, [](const FormulaPtr& g, auto add) {
    if (g->kind == FormulaKind::Atom) add(g->atom);
  });
}

std::vector<std::string> frames_of(const FormulaPtr& f) {
  return collect<std::string>(f, [](const FormulaPtr& g, auto add) {
    if (g->kind == FormulaKind::DiamondUpdate ||
        g->kind == FormulaKind::DiamondUnion) {
      for (const auto& pf : g->pframes) add(pf.frame);
    }
  });
}

}  // namespace audel
