#include "gcx/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gcx::dsl {

namespace {

const GaussRational kOne(1);

[[noreturn]] void fail(int line, int col, const std::string& message) {
  throw Error(ErrorKind::Parse, "Syntax",
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                  message);
}

struct Token {
  enum class Kind { Number, Ident, Op, End };
  Kind kind = Kind::End;
  std::string text;
  int col = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line, int col0) : text_(text), line_(line), col0_(col0) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_end() const { return tok_.kind == Token::Kind::End; }
  int line() const { return line_; }
  int col() const { return col0_ + static_cast<int>(pos_); }

  [[noreturn]] void fail_here(const std::string& message) const {
    fail(line_, tok_.kind == Token::Kind::End ? col0_ + static_cast<int>(text_.size()) + 1
                                              : col0_ + tok_.col,
         message);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Number;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::string("+-*/^()=").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Op;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    fail(line_, col0_ + static_cast<int>(pos_), std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  int line_;
  int col0_;
  size_t pos_ = 0;
  Token tok_;
};

enum class Ctx { Form, Vec, EndoMap, Gen };

struct Value {
  enum class K { Scalar, Form, Vec, EndoMap, Gen } k = K::Scalar;
  GaussRational s;
  KForm f;
  KVector v;
  Endo e;
};

struct IdInfo {
  std::string prefix;
  int index;  // 0-based
};

IdInfo split_ident(const Lexer& lx, const std::string& id, int dim) {
  size_t digits = id.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(id[digits - 1]))) --digits;
  if (digits == id.size() || digits == 0)
    lx.fail_here("expected a basis identifier like X1 or a2, got '" + id + "'");
  int index = std::stoi(id.substr(digits));
  if (index < 1 || index > dim)
    lx.fail_here("basis index " + std::to_string(index) + " out of range 1.." +
                 std::to_string(dim));
  return {id.substr(0, digits), index - 1};
}

class ExprParser {
 public:
  ExprParser(std::string_view text, int dim, Ctx ctx, const AlgebraPtr& alg, int line, int col0)
      : lx_(text, line, col0), dim_(dim), ctx_(ctx), alg_(alg) {}

  Value parse_all() {
    Value v = expr();
    if (!lx_.at_end()) lx_.fail_here("unexpected trailing input");
    return v;
  }

  // records the first covector prefix met in a Form context
  std::optional<std::string> cov_prefix_hint;

 private:
  Value expr() {
    bool neg = false;
    if (lx_.peek().kind == Token::Kind::Op &&
        (lx_.peek().text == "-" || lx_.peek().text == "+")) {
      neg = lx_.take().text == "-";
    }
    Value acc = addend();
    if (neg) acc = negate(acc);
    while (lx_.peek().kind == Token::Kind::Op &&
           (lx_.peek().text == "+" || lx_.peek().text == "-")) {
      bool minus = lx_.take().text == "-";
      Value rhs = addend();
      if (minus) rhs = negate(rhs);
      acc = add(acc, rhs);
    }
    return acc;
  }

  Value addend() {
    Value acc = factor();
    while (lx_.peek().kind == Token::Kind::Op &&
           (lx_.peek().text == "*" || lx_.peek().text == "^")) {
      std::string op = lx_.take().text;
      Value rhs = factor();
      acc = (op == "*") ? mul(acc, rhs) : wedge_values(acc, rhs);
    }
    return acc;
  }

  Value factor() {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::Op && t.text == "(") {
      lx_.take();
      Value v = expr();
      if (!(lx_.peek().kind == Token::Kind::Op && lx_.peek().text == ")"))
        lx_.fail_here("expected ')'");
      lx_.take();
      return v;
    }
    if (t.kind == Token::Kind::Number) return scalar_factor();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "i") {
        lx_.take();
        Value v;
        v.k = Value::K::Scalar;
        v.s = GaussRational::i();
        return v;
      }
      return ident_factor();
    }
    lx_.fail_here("expected a number, identifier or '('");
  }

  Value scalar_factor() {
    mpz_class num(lx_.take().text);
    mpz_class den = 1;
    if (lx_.peek().kind == Token::Kind::Op && lx_.peek().text == "/") {
      lx_.take();
      if (lx_.peek().kind != Token::Kind::Number) lx_.fail_here("expected a denominator");
      den = mpz_class(lx_.take().text);
      if (den == 0) lx_.fail_here("zero denominator");
    }
    Value v;
    v.k = Value::K::Scalar;
    v.s = GaussRational(exactnum::rat(num, den));
    return v;
  }

  Value ident_factor() {
    Token t = lx_.take();
    IdInfo id = split_ident(lx_, t.text, dim_);
    Value v;
    switch (ctx_) {
      case Ctx::Form:
        if (!cov_prefix_hint) cov_prefix_hint = id.prefix;
        v.k = Value::K::Form;
        v.f = KForm::basis(dim_, id.index);
        return v;
      case Ctx::Vec:
      case Ctx::EndoMap:
        // in an endomorphism product the second slot is re-read as a covector
        v.k = Value::K::Vec;
        v.v = KVector::basis(dim_, id.index);
        return v;
      case Ctx::Gen: {
        if (!alg_) lx_.fail_here("generalized sections need an algebra");
        if (id.prefix == alg_->cov_prefix() && id.prefix != alg_->vec_prefix()) {
          v.k = Value::K::Form;
          v.f = KForm::basis(dim_, id.index);
        } else if (id.prefix == alg_->vec_prefix()) {
          v.k = Value::K::Vec;
          v.v = KVector::basis(dim_, id.index);
        } else {
          lx_.fail_here("unknown basis prefix '" + id.prefix + "' (expected '" +
                        alg_->vec_prefix() + "' or '" + alg_->cov_prefix() + "')");
        }
        return v;
      }
    }
    lx_.fail_here("unreachable");
  }

  Value negate(Value v) {
    switch (v.k) {
      case Value::K::Scalar: v.s = -v.s; break;
      case Value::K::Form: v.f = -v.f; break;
      case Value::K::Vec: v.v = -v.v; break;
      case Value::K::EndoMap: v.e = GaussRational(-1) * v.e; break;
      case Value::K::Gen:
        v.v = -v.v;
        v.f = -v.f;
        break;
    }
    return v;
  }

  Value scale(const GaussRational& s, Value v) {
    switch (v.k) {
      case Value::K::Scalar: v.s = s * v.s; break;
      case Value::K::Form: v.f = s * v.f; break;
      case Value::K::Vec: v.v = s * v.v; break;
      case Value::K::EndoMap: v.e = s * v.e; break;
      case Value::K::Gen:
        v.v = s * v.v;
        v.f = s * v.f;
        break;
    }
    return v;
  }

  Value mul(Value a, Value b) {
    if (a.k == Value::K::Scalar && b.k == Value::K::Scalar) {
      a.s = a.s * b.s;
      return a;
    }
    if (a.k == Value::K::Scalar) return scale(a.s, b);
    if (b.k == Value::K::Scalar) return scale(b.s, a);
    if (ctx_ == Ctx::EndoMap && a.k == Value::K::Vec && b.k == Value::K::Vec &&
        a.v.degree() == 1 && b.v.degree() == 1) {
      // X * s reads as the rank-one map X (x) s
      Value v;
      v.k = Value::K::EndoMap;
      v.e = Endo::rank_one(a.v, multilinear::form_from_coords(multilinear::coords1(b.v)));
      return v;
    }
    lx_.fail_here("'*' joins a scalar with a term, or vector*covector in a map");
  }

  Value wedge_values(Value a, Value b) {
    if (a.k == Value::K::Form && b.k == Value::K::Form) {
      a.f = multilinear::wedge(a.f, b.f);
      return a;
    }
    if (a.k == Value::K::Vec && b.k == Value::K::Vec) {
      a.v = multilinear::wedge(a.v, b.v);
      return a;
    }
    lx_.fail_here("'^' joins two forms or two multivectors");
  }

  Value add(Value a, Value b) {
    if (a.k == b.k) {
      switch (a.k) {
        case Value::K::Scalar: a.s += b.s; return a;
        case Value::K::Form:
          if (a.f.degree() != b.f.degree()) lx_.fail_here("mixed degrees in a sum");
          a.f += b.f;
          return a;
        case Value::K::Vec:
          if (a.v.degree() != b.v.degree()) lx_.fail_here("mixed degrees in a sum");
          a.v += b.v;
          return a;
        case Value::K::EndoMap: a.e = a.e + b.e; return a;
        case Value::K::Gen:
          a.v += b.v;
          a.f += b.f;
          return a;
      }
    }
    if (ctx_ == Ctx::Gen) {
      auto to_gen = [&](Value x) {
        if (x.k == Value::K::Gen) return x;
        Value g;
        g.k = Value::K::Gen;
        g.v = KVector(dim_, 1);
        g.f = KForm(dim_, 1);
        if (x.k == Value::K::Vec) {
          if (x.v.degree() != 1) lx_.fail_here("generalized sections are degree 1");
          g.v = x.v;
        } else if (x.k == Value::K::Form) {
          if (x.f.degree() != 1) lx_.fail_here("generalized sections are degree 1");
          g.f = x.f;
        } else {
          lx_.fail_here("cannot mix scalars into a generalized section");
        }
        return g;
      };
      return add(to_gen(a), to_gen(b));
    }
    lx_.fail_here("cannot add values of different kinds");
  }

  Lexer lx_;
  int dim_;
  Ctx ctx_;
  AlgebraPtr alg_;
};

Value parse_expr(std::string_view text, int dim, Ctx ctx, const AlgebraPtr& alg, int line,
                 int col0, std::optional<std::string>* cov_hint = nullptr) {
  ExprParser p(text, dim, ctx, alg, line, col0);
  Value v = p.parse_all();
  if (cov_hint && p.cov_prefix_hint && !*cov_hint) *cov_hint = p.cov_prefix_hint;
  return v;
}

}  // namespace

KForm parse_form(const std::string& text, int dim) {
  Value v = parse_expr(text, dim, Ctx::Form, nullptr, 1, 1);
  if (v.k != Value::K::Form) fail(1, 1, "expected a form expression");
  return v.f;
}

KVector parse_vector(const std::string& text, int dim) {
  Value v = parse_expr(text, dim, Ctx::Vec, nullptr, 1, 1);
  if (v.k != Value::K::Vec) fail(1, 1, "expected a multivector expression");
  return v.v;
}

Endo parse_endo(const std::string& text, int dim) {
  Value v = parse_expr(text, dim, Ctx::EndoMap, nullptr, 1, 1);
  if (v.k != Value::K::EndoMap) fail(1, 1, "expected an endomorphism expression");
  return v.e;
}

GenVector parse_gensection(const std::string& text, const AlgebraPtr& alg) {
  Value v = parse_expr(text, alg->dim(), Ctx::Gen, alg, 1, 1);
  if (v.k == Value::K::Vec && v.v.degree() == 1) return GenVector::from_vector(alg, v.v);
  if (v.k == Value::K::Form && v.f.degree() == 1) return GenVector::from_covector(alg, v.f);
  if (v.k != Value::K::Gen) fail(1, 1, "expected a generalized section");
  return GenVector(alg, v.v, v.f);
}

courant::BiVec parse_gamma(const std::string& text, const AlgebraPtr& alg) {
  // gamma := [scalar *] (gensec) ^ (gensec) joined with + / -
  Lexer lx(text, 1, 1);
  courant::BiVec out;
  bool neg = false;
  if (lx.peek().kind == Token::Kind::Op && (lx.peek().text == "+" || lx.peek().text == "-"))
    neg = lx.take().text == "-";
  for (;;) {
    GaussRational coef = neg ? GaussRational(-1) : kOne;
    // optional scalar prefix
    if (lx.peek().kind == Token::Kind::Number ||
        (lx.peek().kind == Token::Kind::Ident && lx.peek().text == "i")) {
      std::ostringstream scalar_text;
      while (!(lx.peek().kind == Token::Kind::Op && lx.peek().text == "*") && !lx.at_end())
        scalar_text << lx.take().text;
      coef = coef * GaussRational::parse(scalar_text.str());
      if (!(lx.peek().kind == Token::Kind::Op && lx.peek().text == "*"))
        lx.fail_here("expected '*' after the scalar coefficient");
      lx.take();
    }
    auto read_paren = [&]() -> GenVector {
      if (!(lx.peek().kind == Token::Kind::Op && lx.peek().text == "("))
        lx.fail_here("expected '(' around a generalized section");
      lx.take();
      std::ostringstream inner;
      int depth = 1;
      while (depth > 0) {
        if (lx.at_end()) lx.fail_here("unterminated '('");
        Token t = lx.take();
        if (t.kind == Token::Kind::Op && t.text == "(") ++depth;
        if (t.kind == Token::Kind::Op && t.text == ")") {
          --depth;
          if (depth == 0) break;
        }
        inner << t.text << " ";
      }
      return parse_gensection(inner.str(), alg);
    };
    GenVector a = read_paren();
    if (!(lx.peek().kind == Token::Kind::Op && lx.peek().text == "^"))
      lx.fail_here("expected '^' between the two sections");
    lx.take();
    GenVector b = read_paren();
    out.terms.push_back({coef, a, b});
    if (lx.at_end()) break;
    if (lx.peek().kind == Token::Kind::Op && (lx.peek().text == "+" || lx.peek().text == "-")) {
      neg = lx.take().text == "-";
      continue;
    }
    lx.fail_here("expected '+', '-' or end of input");
  }
  return out;
}

namespace {

struct AlgebraDecl {
  std::string name;
  int dim = 0;
  int line = 0;
  std::string vec_prefix = "X";
  std::optional<std::string> cov_prefix;
  std::map<std::pair<int, int>, KVector> table;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

const AlgebraPtr& Document::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end())
    throw Error(ErrorKind::Parse, "UnknownSymbol", "no algebra named '" + name + "'");
  return it->second;
}

const StructureDef& Document::structure(const std::string& name) const {
  auto it = structures.find(name);
  if (it == structures.end())
    throw Error(ErrorKind::Parse, "UnknownSymbol", "no structure named '" + name + "'");
  return it->second;
}

bool operator==(const Document& a, const Document& b) {
  if (a.algebra_order != b.algebra_order || a.structure_order != b.structure_order ||
      a.directives != b.directives)
    return false;
  for (const auto& [name, alg] : a.algebras) {
    auto it = b.algebras.find(name);
    if (it == b.algebras.end() || !(*alg == *it->second)) return false;
  }
  return a.structures == b.structures;
}

Document parse(const std::string& text) {
  Document doc;
  std::vector<AlgebraDecl> decls;
  auto decl_of = [&](const std::string& name) -> AlgebraDecl* {
    for (auto& s : decls)
      if (s.name == name) return &s;
    return nullptr;
  };

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  enum class Block { None, Algebra, Structure };
  Block block = Block::None;
  AlgebraDecl current_alg;
  StructureDef current_struct;
  AlgebraDecl* struct_alg = nullptr;

  auto expr_col = [&](const std::string& line) {
    auto eq = line.find('=');
    return static_cast<int>(eq) + 2;  // 1-based column just past '='
  };

  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    auto w = words(line);
    if (w.empty()) continue;

    if (block == Block::None) {
      if (w[0] == "algebra") {
        if (w.size() != 4 || w[2] != "dim")
          fail(line_no, 1, "expected: algebra NAME dim N");
        current_alg = AlgebraDecl{};
        current_alg.name = w[1];
        current_alg.line = line_no;
        try {
          current_alg.dim = std::stoi(w[3]);
        } catch (...) {
          fail(line_no, 1, "bad dimension '" + w[3] + "'");
        }
        if (current_alg.dim < 1) fail(line_no, 1, "dimension must be positive");
        if (decl_of(current_alg.name))
          fail(line_no, 1, "duplicate algebra name '" + current_alg.name + "'");
        block = Block::Algebra;
        continue;
      }
      if (w[0] == "structure") {
        if (w.size() != 6 || w[2] != "on" || w[4] != "kind")
          fail(line_no, 1, "expected: structure NAME on ALGEBRA kind KIND");
        current_struct = StructureDef{};
        current_struct.name = w[1];
        current_struct.algebra = w[3];
        current_struct.kind = w[5];
        struct_alg = decl_of(w[3]);
        if (!struct_alg) fail(line_no, 1, "unknown algebra '" + w[3] + "'");
        static const std::vector<std::string> kKinds = {"contact", "cosymplectic",
                                                        "almost_contact", "explicit", "complex"};
        if (std::find(kKinds.begin(), kKinds.end(), current_struct.kind) == kKinds.end())
          fail(line_no, 1, "unknown kind '" + current_struct.kind + "'");
        if (doc.structures.count(current_struct.name))
          fail(line_no, 1, "duplicate structure name '" + current_struct.name + "'");
        block = Block::Structure;
        continue;
      }
      if (w[0] == "set") {
        if (w.size() != 3) fail(line_no, 1, "expected: set KEY VALUE");
        doc.directives.push_back({w[1], w[2]});
        continue;
      }
      fail(line_no, 1, "expected 'algebra', 'structure' or 'set', got '" + w[0] + "'");
    }

    if (w[0] == "end") {
      if (block == Block::Algebra) {
        decls.push_back(current_alg);
      } else {
        doc.structure_order.push_back(current_struct.name);
        doc.structures[current_struct.name] = current_struct;
      }
      block = Block::None;
      continue;
    }

    if (block == Block::Algebra) {
      if (w[0] != "bracket" || w.size() < 5 || w[3] != "=")
        fail(line_no, 1, "expected: bracket Xi Xj = expression");
      IdInfo lhs1, lhs2;
      {
        // re-lex the two identifiers for located errors
        Lexer idlx(w[1] + " " + w[2], line_no, 1);
        lhs1 = split_ident(idlx, w[1], current_alg.dim);
        lhs2 = split_ident(idlx, w[2], current_alg.dim);
      }
      current_alg.vec_prefix = lhs1.prefix;
      auto eq = line.find('=');
      std::string rhs = line.substr(eq + 1);
      Value v = parse_expr(rhs, current_alg.dim, Ctx::Vec, nullptr, line_no, expr_col(line));
      if (v.k != Value::K::Vec || v.v.degree() != 1)
        fail(line_no, expr_col(line), "bracket value must be a vector");
      if (lhs1.index == lhs2.index)
        fail(line_no, 1, "bracket of a vector with itself is zero; omit the line");
      int i = lhs1.index, j = lhs2.index;
      KVector value = v.v;
      if (i > j) {
        std::swap(i, j);
        value = -value;
      }
      if (current_alg.table.count({i, j}))
        fail(line_no, 1, "duplicate bracket entry");
      if (!value.is_zero()) current_alg.table[{i, j}] = value;
      continue;
    }

    // structure field
    auto eq = line.find('=');
    if (w.size() < 3 || w[1] != "=" || eq == std::string::npos)
      fail(line_no, 1, "expected: FIELD = expression");
    std::string field = w[0];
    std::string rhs = line.substr(eq + 1);
    int dim = struct_alg->dim;
    int col = expr_col(line);
    if (field == "eta" || field == "theta") {
      Value v = parse_expr(rhs, dim, Ctx::Form, nullptr, line_no, col,
                           &struct_alg->cov_prefix);
      if (v.k != Value::K::Form) fail(line_no, col, "expected a form");
      if (field == "eta") {
        if (v.f.degree() != 1) fail(line_no, col, "eta must be a 1-form");
        current_struct.eta = v.f;
      } else {
        if (v.f.degree() != 2) fail(line_no, col, "theta must be a 2-form");
        current_struct.theta = v.f;
      }
    } else if (field == "F" || field == "pi") {
      Value v = parse_expr(rhs, dim, Ctx::Vec, nullptr, line_no, col);
      if (v.k != Value::K::Vec) fail(line_no, col, "expected a multivector");
      if (field == "F") {
        if (v.v.degree() != 1) fail(line_no, col, "F must be a vector");
        current_struct.f = v.v;
      } else {
        if (v.v.degree() != 2) fail(line_no, col, "pi must be a bivector");
        current_struct.pi = v.v;
      }
    } else if (field == "phi") {
      Value v = parse_expr(rhs, dim, Ctx::EndoMap, nullptr, line_no, col);
      if (v.k != Value::K::EndoMap) fail(line_no, col, "expected an endomorphism");
      current_struct.phi = v.e;
    } else {
      fail(line_no, 1, "unknown field '" + field + "'");
    }
  }
  if (block != Block::None) fail(line_no, 1, "unterminated block (missing 'end')");

  for (auto& s : decls) {
    doc.algebra_order.push_back(s.name);
    std::string cov = s.cov_prefix.value_or(s.vec_prefix == "X" ? "a" : s.vec_prefix);
    try {
      doc.algebras[s.name] = std::make_shared<liealg::LieAlgebra>(
          s.dim, s.table, liealg::LieAlgebra::Validate::Check, s.vec_prefix, cov);
    } catch (const Error& e) {
      throw Error(ErrorKind::Validation, e.name(),
                  "algebra '" + s.name + "' (line " + std::to_string(s.line) +
                      "): " + e.what());
    }
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Parse, "FileError", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

namespace {

std::string coeff_prefix(const GaussRational& c) {
  if (c == GaussRational(1)) return "";
  if (c == GaussRational(-1)) return "-";
  std::string s = c.str();
  bool needs_parens = s.find('+') != std::string::npos ||
                      s.find('-', 1) != std::string::npos;
  return (needs_parens ? "(" + s + ")" : s) + "*";
}

template <class T>
std::string alt_str(const T& a, const std::string& prefix, const char* joiner) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    std::string term;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k) term += joiner;
      term += prefix + std::to_string(idx[k] + 1);
    }
    if (idx.empty()) term = "1";
    std::string cp = coeff_prefix(c);
    if (!first) {
      if (!cp.empty() && cp[0] == '-') {
        os << " - ";
        cp = cp.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    os << cp << term;
  }
  return os.str();
}

std::string endo_str(const Endo& e, const std::string& vp, const std::string& cp) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& m = e.matrix();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      std::string cpfx = coeff_prefix(m.at(r, c));
      if (!first) {
        if (!cpfx.empty() && cpfx[0] == '-') {
          os << " - ";
          cpfx = cpfx.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      os << cpfx << vp << (r + 1) << "*" << cp << (c + 1);
    }
  return os.str();
}

}  // namespace

std::string print(const Document& doc) {
  std::ostringstream os;
  for (const auto& name : doc.algebra_order) {
    const auto& a = *doc.algebras.at(name);
    os << "algebra " << name << " dim " << a.dim() << "\n";
    for (const auto& [ij, v] : a.bracket_table()) {
      os << "  bracket " << a.vec_prefix() << (ij.first + 1) << " " << a.vec_prefix()
         << (ij.second + 1) << " = " << alt_str(v, a.vec_prefix(), "^") << "\n";
    }
    os << "end\n\n";
  }
  for (const auto& name : doc.structure_order) {
    const auto& s = doc.structures.at(name);
    const auto& a = *doc.algebras.at(s.algebra);
    os << "structure " << name << " on " << s.algebra << " kind " << s.kind << "\n";
    if (s.f) os << "  F = " << alt_str(*s.f, a.vec_prefix(), "^") << "\n";
    if (s.eta) os << "  eta = " << alt_str(*s.eta, a.cov_prefix(), "^") << "\n";
    if (s.theta) os << "  theta = " << alt_str(*s.theta, a.cov_prefix(), "^") << "\n";
    if (s.pi) os << "  pi = " << alt_str(*s.pi, a.vec_prefix(), "^") << "\n";
    if (s.phi) os << "  phi = " << endo_str(*s.phi, a.vec_prefix(), a.cov_prefix()) << "\n";
    os << "end\n\n";
  }
  for (const auto& [k, v] : doc.directives) os << "set " << k << " " << v << "\n";
  return os.str();
}

}  // namespace gcx::dsl
