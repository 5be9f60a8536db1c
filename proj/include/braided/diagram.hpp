#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braided/morphism.hpp"

namespace braided {

struct DiagramNode;
using DiagramPtr = std::shared_ptr<const DiagramNode>;

// Composition DSL: a;b means run a first, then b (top to bottom); a|b places
// strands side by side. Generators may take bracketed object arguments.
struct DiagramNode {
  enum class Kind { Gen, Seq, Par };
  Kind kind = Kind::Gen;
  std::string name;                // Gen
  std::vector<std::string> args;   // Gen
  std::vector<DiagramPtr> children;  // Seq, Par
  std::size_t pos = 0;             // source offset for error messages
};

DiagramPtr makeGen(std::string name, std::vector<std::string> args = {}, std::size_t pos = 0);
DiagramPtr makeSeq(std::vector<DiagramPtr> children, std::size_t pos = 0);
DiagramPtr makePar(std::vector<DiagramPtr> children, std::size_t pos = 0);

bool sameDiagram(const DiagramPtr& a, const DiagramPtr& b);

DiagramPtr parseDiagram(const std::string& text);
std::string printDiagram(const DiagramPtr& d);

struct DiagramContext {
  std::map<std::string, GradedObject> objects;
  std::map<std::string, Morphism> generators;
};

// Builtins: id[X], Psi[X,Y], PsiInv[X,Y], ev[X], coev[X]; everything else is
// looked up among the context's generators.
Morphism evaluateDiagram(const DiagramPtr& d, const DiagramContext& ctx);

}  // namespace braided
