#pragma once

#include "adjtor/foxcalc/group_ring.hpp"
#include "adjtor/foxcalc/word.hpp"

#include <vector>

namespace adjtor {

/// Deficiency-one presentation <g1..gn | r1..r(n-1)> with an abelianization
/// weight per generator.
class Presentation {
 public:
  Presentation(int generator_count, std::vector<Word> relators, std::vector<int> abelianization);

  int generator_count() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<int>& abelianization() const { return alpha_; }

 private:
  int generators_;
  std::vector<Word> relators_;
  std::vector<int> alpha_;
};

/// A relation A = B stored as the relator word A B^-1.
inline Word relator_from_relation(const Word& a, const Word& b) { return a * b.inverse(); }

/// Weighted exponent sum of w under the presentation's abelianization.
int abelianization_weight(const Word& w, const Presentation& pres);

}  // namespace adjtor
