#include "liaison/character.hpp"

namespace liaison {

Classification classify(const IntFn& f) {
  Classification c;
  if (f.sum() != 0) {
    c.kind = Classification::Kind::not_character;
    c.detail = "values sum to " + std::to_string(f.sum()) + ", not 0";
    return c;
  }
  c.kind = Classification::Kind::character;
  if (!f.is_zero() && f.min_support() < 0) {
    c.detail = "admissibility clause (1): nonzero value at degree " +
               std::to_string(f.min_support());
    return c;
  }
  if (f.at(0) != -1) {
    c.detail = "admissibility clause (2): value at 0 is " +
               std::to_string(f.at(0)) + ", not -1";
    return c;
  }
  // f(0) = -1 forces a nonempty support, so the scans below terminate at
  // max_support + 1 in the worst case.
  Deg hi = f.max_support();
  Deg s0 = 0;
  while (s0 <= hi && f.at(s0) == -1) ++s0;
  if (f.at(s0) < 0) {
    c.detail = "admissibility clause (3): value " + std::to_string(f.at(s0)) +
               " at s0 = " + std::to_string(s0) + " is negative";
    return c;
  }
  Deg s1 = s0;
  while (s1 <= hi && f.at(s1) == 0) ++s1;
  if (s1 > hi) {
    // -1 on [0, s0) and 0 elsewhere cannot sum to zero, so this branch is
    // unreachable for characters; keep the guard for safety.
    c.detail = "admissibility clause (4): no nonzero value at or above s0";
    return c;
  }
  if (f.at(s1) < 0) {
    c.detail = "admissibility clause (4): value " + std::to_string(f.at(s1)) +
               " at s1 = " + std::to_string(s1) + " is negative";
    return c;
  }
  return Classification::make_admissible(f, s0, s1);
}

AdmissibleCharacter require_admissible(const IntFn& f) {
  Classification c = classify(f);
  if (c.kind != Classification::Kind::admissible)
    throw invalid_input("not an admissible character: " + c.detail);
  return *c.chr;
}

}  // namespace liaison
