#pragma once

#include <cstddef>
#include <vector>

namespace btlab {

/// Finitely presented group. A letter is +(g+1) for generator g and -(g+1)
/// for its inverse.
struct Presentation {
  std::size_t generators = 0;
  std::vector<std::vector<int>> relators;
};

/// Freely and cyclically reduces a word.
std::vector<int> cyclically_reduce(std::vector<int> word);

/// Tietze simplification: relators of length 1 delete their generator,
/// relators x^a y^b with x != y eliminate x. Repeats until stable, then
/// renumbers the surviving generators and drops empty or repeated relators.
Presentation simplify(const Presentation& p);

struct CosetEnumeration {
  /// The coset table closed before the budget ran out.
  bool complete = false;
  /// Number of live cosets (the group order) when complete.
  std::size_t index = 0;
  std::size_t cosets_defined = 0;
};

/// HLT coset enumeration over the trivial subgroup. At most `budget` cosets
/// are ever defined.
CosetEnumeration enumerate_cosets(const Presentation& p, std::size_t budget);

}  // namespace btlab
