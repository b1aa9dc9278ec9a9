#pragma once

#include <string>

#include "ncnn/errors.hpp"

namespace ncnn {

enum class Family { A, B, C, D };
enum class Mode { NN, NC };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family family_from_letter(char ch) {
  switch (ch) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw ParseError(std::string("unknown family letter: ") + ch);
}

// A classical reflection group in its standard coordinatisation.  The rank r
// is the Coxeter rank; the ambient dimension n is r+1 for A_r and r otherwise,
// and all roots/permutations/partitions live on n coordinates.
struct GroupFamily {
  Family family;
  int rank;

  GroupFamily(Family f, int r) : family(f), rank(r) {
    if (r < 1) throw RankError("rank must be >= 1");
    if (f == Family::D && r < 2) throw RankError("D requires rank >= 2");
  }

  int ambient_dim() const { return family == Family::A ? rank + 1 : rank; }

  std::string name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
  }

  bool operator==(const GroupFamily&) const = default;
};

}  // namespace ncnn
