#include "braided/diagram.hpp"

#include <cctype>

namespace braided {

DiagramPtr makeGen(std::string name, std::vector<std::string> args, std::size_t pos) {
  auto n = std::make_shared<DiagramNode>();
  n->kind = DiagramNode::Kind::Gen;
  n->name = std::move(name);
  n->args = std::move(args);
  n->pos = pos;
  return n;
}

DiagramPtr makeSeq(std::vector<DiagramPtr> children, std::size_t pos) {
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<DiagramNode>();
  n->kind = DiagramNode::Kind::Seq;
  n->children = std::move(children);
  n->pos = pos;
  return n;
}

DiagramPtr makePar(std::vector<DiagramPtr> children, std::size_t pos) {
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<DiagramNode>();
  n->kind = DiagramNode::Kind::Par;
  n->children = std::move(children);
  n->pos = pos;
  return n;
}

bool sameDiagram(const DiagramPtr& a, const DiagramPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->name != b->name || a->args != b->args) return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!sameDiagram(a->children[i], b->children[i])) return false;
  return true;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  static bool nameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string parseName() {
    skipSpace();
    std::size_t start = pos;
    while (pos < text.size() && nameChar(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected a name", pos);
    return text.substr(start, pos - start);
  }

  std::vector<std::string> parseArgs(char close) {
    std::vector<std::string> args;
    if (peek() == close) {
      ++pos;
      return args;
    }
    args.push_back(parseName());
    while (eat(',')) args.push_back(parseName());
    expect(close);
    return args;
  }

  DiagramPtr parseFactor() {
    skipSpace();
    std::size_t start = pos;
    if (eat('(')) {
      DiagramPtr inner = parseExpr();
      expect(')');
      return inner;
    }
    std::string name = parseName();
    std::vector<std::string> args;
    if (eat('[')) args = parseArgs(']');
    else if (eat('(')) args = parseArgs(')');
    return makeGen(std::move(name), std::move(args), start);
  }

  DiagramPtr parseTerm() {
    std::size_t start = pos;
    std::vector<DiagramPtr> factors{parseFactor()};
    while (eat('|')) factors.push_back(parseFactor());
    return makePar(std::move(factors), start);
  }

  DiagramPtr parseExpr() {
    std::size_t start = pos;
    std::vector<DiagramPtr> terms{parseTerm()};
    while (eat(';')) terms.push_back(parseTerm());
    return makeSeq(std::move(terms), start);
  }
};

void printNode(const DiagramPtr& d, std::string& out, bool parenthesizeSeq) {
  switch (d->kind) {
    case DiagramNode::Kind::Gen: {
      out += d->name;
      if (!d->args.empty()) {
        out += "[";
        for (std::size_t i = 0; i < d->args.size(); ++i) {
          if (i) out += ",";
          out += d->args[i];
        }
        out += "]";
      }
      return;
    }
    case DiagramNode::Kind::Par: {
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        if (i) out += " | ";
        const DiagramPtr& c = d->children[i];
        bool wrap = c->kind != DiagramNode::Kind::Gen;
        if (wrap) out += "(";
        printNode(c, out, false);
        if (wrap) out += ")";
      }
      return;
    }
    case DiagramNode::Kind::Seq: {
      if (parenthesizeSeq) out += "(";
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        if (i) out += "; ";
        printNode(d->children[i], out, false);
      }
      if (parenthesizeSeq) out += ")";
      return;
    }
  }
}

const GradedObject& lookupObject(const DiagramContext& ctx, const std::string& name,
                                 std::size_t pos) {
  auto it = ctx.objects.find(name);
  if (it == ctx.objects.end()) throw ParseError("unknown object '" + name + "'", pos);
  return it->second;
}

void requireArgCount(const DiagramNode& d, std::size_t n) {
  if (d.args.size() != n)
    throw ParseError("'" + d.name + "' takes " + std::to_string(n) + " argument(s)", d.pos);
}

}  // namespace

DiagramPtr parseDiagram(const std::string& text) {
  Parser p{text};
  DiagramPtr d = p.parseExpr();
  if (!p.atEnd()) throw ParseError("trailing input", p.pos);
  return d;
}

std::string printDiagram(const DiagramPtr& d) {
  std::string out;
  printNode(d, out, false);
  return out;
}

Morphism evaluateDiagram(const DiagramPtr& d, const DiagramContext& ctx) {
  switch (d->kind) {
    case DiagramNode::Kind::Gen: {
      if (d->name == "id") {
        requireArgCount(*d, 1);
        return Morphism::identity(lookupObject(ctx, d->args[0], d->pos));
      }
      if (d->name == "Psi" || d->name == "PsiInv") {
        requireArgCount(*d, 2);
        return braiding(lookupObject(ctx, d->args[0], d->pos),
                        lookupObject(ctx, d->args[1], d->pos), d->name == "PsiInv");
      }
      if (d->name == "ev") {
        requireArgCount(*d, 1);
        return evaluation(lookupObject(ctx, d->args[0], d->pos));
      }
      if (d->name == "coev") {
        requireArgCount(*d, 1);
        return coevaluation(lookupObject(ctx, d->args[0], d->pos));
      }
      if (!d->args.empty())
        throw ParseError("generator '" + d->name + "' does not take arguments", d->pos);
      auto it = ctx.generators.find(d->name);
      if (it == ctx.generators.end())
        throw ParseError("unknown generator '" + d->name + "'", d->pos);
      return it->second;
    }
    case DiagramNode::Kind::Seq: {
      Morphism acc = evaluateDiagram(d->children.front(), ctx);
      for (std::size_t i = 1; i < d->children.size(); ++i) {
        Morphism next = evaluateDiagram(d->children[i], ctx);
        if (acc.cod() != next.dom())
          throw ParseError("composition mismatch: segment expects " + next.dom().str() +
                               " but receives " + acc.cod().str(),
                           d->children[i]->pos);
        acc = acc.then(next);
      }
      return acc;
    }
    case DiagramNode::Kind::Par: {
      Morphism acc = evaluateDiagram(d->children.front(), ctx);
      for (std::size_t i = 1; i < d->children.size(); ++i)
        acc = tensorHom(acc, evaluateDiagram(d->children[i], ctx));
      return acc;
    }
  }
  throw Error("unreachable diagram kind");
}

}  // namespace braided
