#pragma once

// Lexer and recursive-descent parser for the surface language.
//
//   def name : TERM := TERM
//   evidence name : sqfill TERM := TERM
//   evidence name : sqpfill TERM := TERM
//
// Terms: (x : A) -> B, A -> B, \x. t, (a , b), t .1, t .2, A + B, A * B,
// (x : A) * B, inl/inr/case, Path A a b, PathP (\i. A) a b, <i> t, t @ r,
// transp (\i. A) r t, hcomp A [ (i=0) -> \j. t , ... ] base, let x : A := t
// in u, derived operators (transport, transpFiller, comp, hfill, refl, J,
// transportRefl), interval expressions with /\ \/ ~ 0 1, comments with --.

#include "mcube/surface.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcube {

namespace lex {

enum class Tok : uint8_t {
  Ident, Num, LParen, RParen, LBracket, RBracket, Comma, Dot, Proj1, Proj2,
  Colon, Define, Arrow, Star, Plus, At, Lambda, LAngle, RAngle, Tilde, Meet,
  Join, Equals, Eof,
  // keywords
  KwDef, KwEvidence, KwSqfill, KwSqpfill, KwLet, KwIn, KwU, KwUnit, KwTT,
  KwEmpty, KwBool, KwTrue, KwFalse, KwCase, KwIf, KwAbsurd, KwInl, KwInr,
  KwPath, KwPathP, KwTransp, KwHcomp, KwTransport, KwTranspFiller, KwComp,
  KwHfill, KwRefl, KwJ, KwTransportRefl,
};

struct Token {
  Tok kind;
  std::string text;
  uint32_t line, col;
};

inline std::optional<Tok> keyword(std::string_view s) {
  struct KV { std::string_view k; Tok v; };
  static const KV table[] = {
      {"def", Tok::KwDef}, {"evidence", Tok::KwEvidence}, {"sqfill", Tok::KwSqfill},
      {"sqpfill", Tok::KwSqpfill}, {"let", Tok::KwLet}, {"in", Tok::KwIn},
      {"U", Tok::KwU}, {"Unit", Tok::KwUnit}, {"tt", Tok::KwTT},
      {"Empty", Tok::KwEmpty}, {"Bool", Tok::KwBool}, {"true", Tok::KwTrue},
      {"false", Tok::KwFalse}, {"case", Tok::KwCase}, {"if", Tok::KwIf},
      {"absurd", Tok::KwAbsurd}, {"inl", Tok::KwInl}, {"inr", Tok::KwInr},
      {"Path", Tok::KwPath}, {"PathP", Tok::KwPathP}, {"transp", Tok::KwTransp},
      {"hcomp", Tok::KwHcomp}, {"transport", Tok::KwTransport},
      {"transpFiller", Tok::KwTranspFiller}, {"comp", Tok::KwComp},
      {"hfill", Tok::KwHfill}, {"refl", Tok::KwRefl}, {"J", Tok::KwJ},
      {"transportRefl", Tok::KwTransportRefl},
  };
  for (const KV& kv : table)
    if (kv.k == s) return kv.v;
  return std::nullopt;
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  uint32_t line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string text, uint32_t l, uint32_t c) {
    out.push_back(Token{k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    uint32_t l = line, c = col;
    auto adv = [&](size_t n) {
      for (size_t k = 0; k < n; ++k) {
        if (src[i + k] == '\n') { ++line; col = 1; } else { ++col; }
      }
      i += n;
    };
    if (ch == '\n' || ch == ' ' || ch == '\t' || ch == '\r') { adv(1); continue; }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') adv(1);
      continue;
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') { push(Tok::Arrow, "->", l, c); adv(2); continue; }
    if (ch == ':' && i + 1 < src.size() && src[i + 1] == '=') { push(Tok::Define, ":=", l, c); adv(2); continue; }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '\\') { push(Tok::Meet, "/\\", l, c); adv(2); continue; }
    if (ch == '\\' && i + 1 < src.size() && src[i + 1] == '/') { push(Tok::Join, "\\/", l, c); adv(2); continue; }
    if (ch == '.' && i + 1 < src.size() && (src[i + 1] == '1' || src[i + 1] == '2')) {
      push(src[i + 1] == '1' ? Tok::Proj1 : Tok::Proj2, src[i + 1] == '1' ? ".1" : ".2", l, c);
      adv(2);
      continue;
    }
    switch (ch) {
      case '(': push(Tok::LParen, "(", l, c); adv(1); continue;
      case ')': push(Tok::RParen, ")", l, c); adv(1); continue;
      case '[': push(Tok::LBracket, "[", l, c); adv(1); continue;
      case ']': push(Tok::RBracket, "]", l, c); adv(1); continue;
      case ',': push(Tok::Comma, ",", l, c); adv(1); continue;
      case '.': push(Tok::Dot, ".", l, c); adv(1); continue;
      case ':': push(Tok::Colon, ":", l, c); adv(1); continue;
      case '*': push(Tok::Star, "*", l, c); adv(1); continue;
      case '+': push(Tok::Plus, "+", l, c); adv(1); continue;
      case '@': push(Tok::At, "@", l, c); adv(1); continue;
      case '\\': push(Tok::Lambda, "\\", l, c); adv(1); continue;
      case '<': push(Tok::LAngle, "<", l, c); adv(1); continue;
      case '>': push(Tok::RAngle, ">", l, c); adv(1); continue;
      case '~': push(Tok::Tilde, "~", l, c); adv(1); continue;
      case '=': push(Tok::Equals, "=", l, c); adv(1); continue;
      default: break;
    }
    if (ch == '0' || ch == '1') {
      push(Tok::Num, std::string(1, ch), l, c);
      adv(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      std::string word(src.substr(i, j - i));
      if (auto kw = keyword(word))
        push(*kw, word, l, c);
      else
        push(Tok::Ident, word, l, c);
      adv(j - i);
      continue;
    }
    fail_at(l, c, std::string("unexpected character '") + ch + "'");
  }
  out.push_back(Token{Tok::Eof, "", line, col});
  return out;
}

}  // namespace lex

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex::tokenize(src)) {}

  SModule parse_module(std::string path) {
    SModule mod;
    mod.path = std::move(path);
    while (!at(lex::Tok::Eof)) mod.decls.push_back(parse_decl());
    return mod;
  }

  // A single term followed by end of input (for -e expressions and the like).
  SExpr parse_single_term() {
    SExpr t = parse_term();
    expect(lex::Tok::Eof, "end of input");
    return t;
  }

  SIExpr parse_single_interval() {
    SIExpr e = parse_iexpr();
    expect(lex::Tok::Eof, "end of input");
    return e;
  }

 private:
  std::vector<lex::Token> toks_;
  size_t pos_ = 0;

  const lex::Token& cur() const { return toks_[pos_]; }
  const lex::Token& ahead(size_t n) const {
    return toks_[pos_ + n < toks_.size() ? pos_ + n : toks_.size() - 1];
  }
  bool at(lex::Tok k) const { return cur().kind == k; }
  lex::Token eat() { return toks_[pos_++]; }
  bool opt(lex::Tok k) {
    if (at(k)) { ++pos_; return true; }
    return false;
  }
  lex::Token expect(lex::Tok k, const std::string& what) {
    if (!at(k)) fail_at(cur().line, cur().col, "expected " + what + ", found '" + describe(cur()) + "'");
    return eat();
  }
  static std::string describe(const lex::Token& t) {
    return t.kind == lex::Tok::Eof ? "end of input" : t.text;
  }
  SrcSpan span() const { return SrcSpan{cur().line, cur().col}; }
  static SExpr spanned(SExpr e, SrcSpan sp) {
    auto n = std::make_shared<SExprNode>(*e);
    n->span = sp;
    return n;
  }

  SDecl parse_decl() {
    SrcSpan sp = span();
    if (opt(lex::Tok::KwDef)) {
      SDecl d;
      d.kind = SDecl::Kind::Def;
      d.span = sp;
      d.name = expect(lex::Tok::Ident, "definition name").text;
      expect(lex::Tok::Colon, "':'");
      d.type = parse_term();
      expect(lex::Tok::Define, "':='");
      d.body = parse_term();
      return d;
    }
    if (opt(lex::Tok::KwEvidence)) {
      SDecl d;
      d.kind = SDecl::Kind::Evidence;
      d.span = sp;
      d.name = expect(lex::Tok::Ident, "evidence name").text;
      expect(lex::Tok::Colon, "':'");
      if (opt(lex::Tok::KwSqfill))
        d.evidence = EvidenceKind::SqFill;
      else if (opt(lex::Tok::KwSqpfill))
        d.evidence = EvidenceKind::SqPFill;
      else
        fail_at(cur().line, cur().col, "expected 'sqfill' or 'sqpfill'");
      d.subject = parse_term();
      expect(lex::Tok::Define, "':='");
      d.body = parse_term();
      return d;
    }
    fail_at(cur().line, cur().col, "expected 'def' or 'evidence', found '" + describe(cur()) + "'");
  }

  // ----- terms -----

  SExpr parse_term() {
    SrcSpan sp = span();
    if (opt(lex::Tok::Lambda)) {
      std::vector<std::string> names;
      names.push_back(expect(lex::Tok::Ident, "binder name").text);
      while (at(lex::Tok::Ident)) names.push_back(eat().text);
      expect(lex::Tok::Dot, "'.'");
      SExpr body = parse_term();
      for (auto it = names.rbegin(); it != names.rend(); ++it) body = spanned(slam(*it, body), sp);
      return body;
    }
    if (at(lex::Tok::LAngle)) {
      eat();
      std::vector<std::string> names;
      names.push_back(expect(lex::Tok::Ident, "interval binder name").text);
      while (at(lex::Tok::Ident)) names.push_back(eat().text);
      expect(lex::Tok::RAngle, "'>'");
      SExpr body = parse_term();
      for (auto it = names.rbegin(); it != names.rend(); ++it) body = spanned(splam(*it, body), sp);
      return body;
    }
    if (opt(lex::Tok::KwLet)) {
      std::string name = expect(lex::Tok::Ident, "let binder name").text;
      expect(lex::Tok::Colon, "':'");
      SExpr annot = parse_term();
      expect(lex::Tok::Define, "':='");
      SExpr bound = parse_term();
      expect(lex::Tok::KwIn, "'in'");
      SExpr body = parse_term();
      return spanned(slet(name, annot, bound, body), sp);
    }
    return parse_arrow();
  }

  bool telescope_ahead() const {
    if (!at(lex::Tok::LParen)) return false;
    size_t k = 1;
    if (ahead(k).kind != lex::Tok::Ident) return false;
    while (ahead(k).kind == lex::Tok::Ident) ++k;
    return ahead(k).kind == lex::Tok::Colon;
  }

  SExpr parse_arrow() {
    SrcSpan sp = span();
    if (telescope_ahead()) {
      // one or more (x y : A) groups, then -> or *
      std::vector<std::pair<std::vector<std::string>, SExpr>> groups;
      while (telescope_ahead()) {
        eat();  // (
        std::vector<std::string> names;
        while (at(lex::Tok::Ident)) names.push_back(eat().text);
        expect(lex::Tok::Colon, "':'");
        SExpr ty = parse_term();
        expect(lex::Tok::RParen, "')'");
        groups.emplace_back(std::move(names), std::move(ty));
      }
      if (opt(lex::Tok::Arrow)) {
        SExpr cod = parse_arrow();
        for (auto g = groups.rbegin(); g != groups.rend(); ++g)
          for (auto n = g->first.rbegin(); n != g->first.rend(); ++n)
            cod = spanned(spi(*n, g->second, cod), sp);
        return cod;
      }
      if (opt(lex::Tok::Star)) {
        if (groups.size() != 1 || groups[0].first.size() != 1)
          fail_at(sp.line, sp.col, "dependent pair type takes a single binder");
        SExpr snd = parse_star();
        return spanned(ssigma(groups[0].first[0], groups[0].second, snd), sp);
      }
      fail_at(cur().line, cur().col, "expected '->' or '*' after binder group");
    }
    SExpr lhs = parse_star();
    if (opt(lex::Tok::Arrow)) return spanned(sarrow(lhs, parse_arrow()), sp);
    return lhs;
  }

  SExpr parse_star() {
    SrcSpan sp = span();
    SExpr lhs = parse_plus();
    if (opt(lex::Tok::Star)) return spanned(ssigma("", lhs, parse_star()), sp);
    return lhs;
  }

  SExpr parse_plus() {
    SrcSpan sp = span();
    SExpr lhs = parse_at();
    if (opt(lex::Tok::Plus)) return spanned(ssum(lhs, parse_plus()), sp);
    return lhs;
  }

  SExpr parse_at() {
    SExpr lhs = parse_app();
    while (at(lex::Tok::At)) {
      SrcSpan sp = span();
      eat();
      lhs = spanned(spapp(lhs, parse_iatom()), sp);
    }
    return lhs;
  }

  bool starts_atom() const {
    switch (cur().kind) {
      case lex::Tok::Ident:
      case lex::Tok::LParen:
      case lex::Tok::KwU:
      case lex::Tok::KwUnit:
      case lex::Tok::KwTT:
      case lex::Tok::KwEmpty:
      case lex::Tok::KwBool:
      case lex::Tok::KwTrue:
      case lex::Tok::KwFalse:
      case lex::Tok::KwCase:
      case lex::Tok::KwIf:
      case lex::Tok::KwAbsurd:
      case lex::Tok::KwInl:
      case lex::Tok::KwInr:
      case lex::Tok::KwPath:
      case lex::Tok::KwPathP:
      case lex::Tok::KwTransp:
      case lex::Tok::KwHcomp:
      case lex::Tok::KwTransport:
      case lex::Tok::KwTranspFiller:
      case lex::Tok::KwComp:
      case lex::Tok::KwHfill:
      case lex::Tok::KwRefl:
      case lex::Tok::KwJ:
      case lex::Tok::KwTransportRefl:
        return true;
      default:
        return false;
    }
  }

  SExpr parse_app() {
    SExpr lhs = parse_postfix();
    while (starts_atom()) {
      SrcSpan sp = span();
      lhs = spanned(sapp(lhs, parse_postfix()), sp);
    }
    return lhs;
  }

  SExpr parse_postfix() {
    SExpr e = parse_atom();
    for (;;) {
      SrcSpan sp = span();
      if (opt(lex::Tok::Proj1))
        e = spanned(sfst(e), sp);
      else if (opt(lex::Tok::Proj2))
        e = spanned(ssnd(e), sp);
      else
        break;
    }
    return e;
  }

  // A parenthesized `\i. T` interval line; returns binder name and body.
  std::pair<std::string, SExpr> parse_line() {
    expect(lex::Tok::LParen, "'(' starting an interval line");
    expect(lex::Tok::Lambda, "'\\' starting an interval line");
    std::string name = expect(lex::Tok::Ident, "interval binder").text;
    expect(lex::Tok::Dot, "'.'");
    SExpr body = parse_term();
    expect(lex::Tok::RParen, "')'");
    return {std::move(name), std::move(body)};
  }

  std::vector<SBranch> parse_system() {
    expect(lex::Tok::LBracket, "'['");
    std::vector<SBranch> sys;
    if (opt(lex::Tok::RBracket)) return sys;
    for (;;) {
      SBranch br;
      // one or more (i=0) constraints, optionally joined by /\
      for (;;) {
        expect(lex::Tok::LParen, "'(' starting a face constraint");
        std::string var = expect(lex::Tok::Ident, "interval variable").text;
        expect(lex::Tok::Equals, "'='");
        lex::Token n = expect(lex::Tok::Num, "'0' or '1'");
        expect(lex::Tok::RParen, "')'");
        br.face.push_back(SFaceAtom{var, n.text == "1"});
        if (opt(lex::Tok::Meet)) continue;
        if (at(lex::Tok::LParen)) continue;
        break;
      }
      expect(lex::Tok::Arrow, "'->'");
      SrcSpan sp = span();
      expect(lex::Tok::Lambda, "'\\' starting a side");
      br.iname = expect(lex::Tok::Ident, "side binder").text;
      expect(lex::Tok::Dot, "'.'");
      br.side = parse_term();
      (void)sp;
      sys.push_back(std::move(br));
      if (opt(lex::Tok::Comma)) continue;
      expect(lex::Tok::RBracket, "']'");
      break;
    }
    return sys;
  }

  SExpr parse_atom() {
    SrcSpan sp = span();
    switch (cur().kind) {
      case lex::Tok::Ident:
        return spanned(sv(eat().text), sp);
      case lex::Tok::KwU: eat(); return spanned(su(), sp);
      case lex::Tok::KwUnit: eat(); return spanned(sunit(), sp);
      case lex::Tok::KwTT: eat(); return spanned(stt(), sp);
      case lex::Tok::KwEmpty: eat(); return spanned(sempty(), sp);
      case lex::Tok::KwBool: eat(); return spanned(sbool(), sp);
      case lex::Tok::KwTrue: eat(); return spanned(strue(), sp);
      case lex::Tok::KwFalse: eat(); return spanned(sfalse(), sp);
      case lex::Tok::KwInl: eat(); return spanned(sinl(parse_postfix()), sp);
      case lex::Tok::KwInr: eat(); return spanned(sinr(parse_postfix()), sp);
      case lex::Tok::KwCase: {
        eat();
        SExpr s = parse_postfix(), m = parse_postfix(), l = parse_postfix(), r = parse_postfix();
        return spanned(scase(s, m, l, r), sp);
      }
      case lex::Tok::KwIf: {
        eat();
        SExpr m = parse_postfix(), s = parse_postfix(), t = parse_postfix(), e = parse_postfix();
        return spanned(sif(m, s, t, e), sp);
      }
      case lex::Tok::KwAbsurd: {
        eat();
        SExpr m = parse_postfix(), e = parse_postfix();
        return spanned(sabsurd(m, e), sp);
      }
      case lex::Tok::KwPath: {
        eat();
        SExpr a = parse_postfix(), l = parse_postfix(), r = parse_postfix();
        return spanned(spath(a, l, r), sp);
      }
      case lex::Tok::KwPathP: {
        eat();
        auto [n, body] = parse_line();
        SExpr l = parse_postfix(), r = parse_postfix();
        return spanned(spathp(n, body, l, r), sp);
      }
      case lex::Tok::KwTransp: {
        eat();
        auto [n, body] = parse_line();
        SIExpr phi = parse_iatom();
        SExpr arg = parse_postfix();
        return spanned(stransp(n, body, phi, arg), sp);
      }
      case lex::Tok::KwHcomp: {
        eat();
        SExpr ty = parse_postfix();
        auto sys = parse_system();
        SExpr base = parse_postfix();
        return spanned(shcomp(ty, std::move(sys), base), sp);
      }
      case lex::Tok::KwTransport: {
        eat();
        auto [n, body] = parse_line();
        SExpr arg = parse_postfix();
        return spanned(stransport(n, body, arg), sp);
      }
      case lex::Tok::KwTranspFiller: {
        eat();
        auto [n, body] = parse_line();
        SIExpr phi = parse_iatom();
        SExpr arg = parse_postfix();
        return spanned(stranspfiller(n, body, phi, arg), sp);
      }
      case lex::Tok::KwComp: {
        eat();
        auto [n, body] = parse_line();
        auto sys = parse_system();
        SExpr base = parse_postfix();
        return spanned(scomp(n, body, std::move(sys), base), sp);
      }
      case lex::Tok::KwHfill: {
        eat();
        SExpr ty = parse_postfix();
        auto sys = parse_system();
        SExpr base = parse_postfix();
        SIExpr dir = parse_iatom();
        return spanned(shfill(ty, std::move(sys), base, dir), sp);
      }
      case lex::Tok::KwRefl: eat(); return spanned(srefl(parse_postfix()), sp);
      case lex::Tok::KwJ: {
        eat();
        SExpr m = parse_postfix(), d = parse_postfix(), p = parse_postfix();
        return spanned(sJ(m, d, p), sp);
      }
      case lex::Tok::KwTransportRefl: {
        eat();
        SExpr a = parse_postfix(), t = parse_postfix();
        return spanned(stransportrefl(a, t), sp);
      }
      case lex::Tok::LParen: {
        eat();
        SExpr t = parse_term();
        if (opt(lex::Tok::Comma)) {
          SExpr u = parse_term();
          while (opt(lex::Tok::Comma)) u = spair(u, parse_term());  // left nesting beyond two
          expect(lex::Tok::RParen, "')'");
          return spanned(spair(t, u), sp);
        }
        expect(lex::Tok::RParen, "')'");
        return t;
      }
      default:
        fail_at(cur().line, cur().col,
                "expected a term, found '" + describe(cur()) + "'");
    }
  }

  // ----- interval expressions -----

  SIExpr parse_iexpr() {
    SIExpr lhs = parse_imeet();
    while (opt(lex::Tok::Join)) lhs = sijoin(lhs, parse_imeet());
    return lhs;
  }
  SIExpr parse_imeet() {
    SIExpr lhs = parse_iatom();
    while (opt(lex::Tok::Meet)) lhs = simeet(lhs, parse_iatom());
    return lhs;
  }
  SIExpr parse_iatom() {
    SrcSpan sp = span();
    switch (cur().kind) {
      case lex::Tok::Num: {
        lex::Token t = eat();
        return t.text == "1" ? si1() : si0();
      }
      case lex::Tok::Ident: {
        auto n = std::make_shared<SIExprNode>(SIExprNode{SITag::Var, eat().text, nullptr, nullptr, sp});
        return n;
      }
      case lex::Tok::Tilde: eat(); return sineg(parse_iatom());
      case lex::Tok::LParen: {
        eat();
        SIExpr e = parse_iexpr();
        expect(lex::Tok::RParen, "')'");
        return e;
      }
      default:
        fail_at(cur().line, cur().col,
                "expected an interval expression, found '" + describe(cur()) + "'");
    }
  }
};

}  // namespace mcube
