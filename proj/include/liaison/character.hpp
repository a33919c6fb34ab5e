// Characters and the admissibility test.  A character is a finitely
// supported integer function summing to zero; admissibility adds four
// clauses that pin the shape near the origin and define the invariants
// s0 and s1.
#ifndef LIAISON_CHARACTER_HPP
#define LIAISON_CHARACTER_HPP

#include <optional>
#include <string>

#include "liaison/intfn.hpp"

namespace liaison {

// An admissible character together with its derived s0, s1.  Only
// constructible through classify()/require_admissible(), so holding one is
// proof of admissibility.
class AdmissibleCharacter {
public:
  const IntFn& fn() const { return fn_; }
  Deg s0() const { return s0_; }
  Deg s1() const { return s1_; }
  Val at(Deg l) const { return fn_.at(l); }

  bool operator==(const AdmissibleCharacter& other) const { return fn_ == other.fn_; }
  bool operator<(const AdmissibleCharacter& other) const { return fn_ < other.fn_; }

private:
  friend struct Classification;
  AdmissibleCharacter(IntFn fn, Deg s0, Deg s1)
      : fn_(std::move(fn)), s0_(s0), s1_(s1) {}

  IntFn fn_;
  Deg s0_;
  Deg s1_;
};

struct Classification {
  enum class Kind { not_character, character, admissible };

  Kind kind = Kind::not_character;
  std::string detail;  // violated clause, empty when admissible
  std::optional<AdmissibleCharacter> chr;

  static Classification make_admissible(IntFn fn, Deg s0, Deg s1) {
    Classification c;
    c.kind = Kind::admissible;
    c.chr = AdmissibleCharacter(std::move(fn), s0, s1);
    return c;
  }
};

// Checks the sum-zero condition and then the four admissibility clauses in
// order; the result records the first violated one.
Classification classify(const IntFn& f);

// classify() that throws invalid_input instead of reporting.
AdmissibleCharacter require_admissible(const IntFn& f);

}  // namespace liaison

#endif
