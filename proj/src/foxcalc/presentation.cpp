#include "adjtor/foxcalc/presentation.hpp"

#include "adjtor/numeric/errors.hpp"

namespace adjtor {

Presentation::Presentation(int generator_count, std::vector<Word> relators, std::vector<int> abelianization)
    : generators_(generator_count), relators_(std::move(relators)), alpha_(std::move(abelianization)) {
  if (generators_ < 1) throw StructuralError("presentation needs at least one generator");
  if (static_cast<int>(relators_.size()) != generators_ - 1)
    throw StructuralError("presentation must have deficiency one");
  if (static_cast<int>(alpha_.size()) != generators_)
    throw StructuralError("abelianization needs one weight per generator");
  for (const auto& r : relators_) {
    if (r.is_identity()) throw StructuralError("relator reduces to the identity");
    if (r.max_generator() > generators_) throw StructuralError("relator uses an undeclared generator");
    if (abelianization_weight(r, *this) != 0)
      throw StructuralError("relator is not in the kernel of the abelianization");
  }
}

int abelianization_weight(const Word& w, const Presentation& pres) {
  int total = 0;
  for (const auto& l : w.letters()) {
    if (l.generator > pres.generator_count()) throw StructuralError("word uses an undeclared generator");
    total += l.exponent * pres.abelianization()[static_cast<std::size_t>(l.generator - 1)];
  }
  return total;
}

}  // namespace adjtor
