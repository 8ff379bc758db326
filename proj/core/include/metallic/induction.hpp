#pragma once

#include <utility>
#include <vector>

#include "metallic/coding.hpp"
#include "metallic/geometry.hpp"
#include "metallic/quadfield.hpp"

namespace metallic {

enum class Gen { e1, e2 };

// Piece of a polygon exchange: points of shape move by (dx, dy).
struct PetPiece {
  ConvexPolygon shape;
  QuadNum dx, dy;
};

// Polygon exchange transformation: pieces tile the domain (boundaries may
// overlap, interiors are disjoint) and each translated piece stays inside it.
struct PET {
  ConvexPolygon domain;
  std::vector<PetPiece> pieces;

  // image of p under the piece containing it (boundary points take the
  // first containing piece); throws std::domain_error outside the domain
  Point apply(const Point& p) const;
  QuadNum piece_area() const;  // sum over pieces, equals domain area
};

// The action of one generator of the Z^2-rotation by 1/beta on the unit
// square: two rectangular pieces, cut at 1 - 1/beta along the moving axis.
PET toral_translation(int n, Gen axis);

PET inverse(const PET& T);
// x -> factor*x + (dx, dy) applied to domain, pieces, and translations
PET rescale(const PET& T, const QuadNum& factor, const QuadNum& dx,
            const QuadNum& dy);
// same transformation almost everywhere: equal domains and, per translation
// vector, equal unions of pieces
bool equivalent(const PET& A, const PET& B);

struct InducedPET {
  PET pet;                        // first-return map on the window
  std::vector<int> return_times;  // aligned with pet.pieces
};
// Exact first-return map of T to domain-cap-window.  Orbits longer than
// 10*(n+2) steps throw std::runtime_error (they signal a wrong window).
InducedPET induce_transformation(const PET& T, const HalfPlane& window);

// Label -> dense rectangular block of labels; rules[k][row][col] with row 0
// at the bottom, matching Window cell order.
struct Substitution2d {
  std::vector<std::vector<std::vector<int>>> rules;

  static Substitution2d from_permutation(const std::vector<int>& perm);
  int size() const { return static_cast<int>(rules.size()); }
  int rows(int k) const { return static_cast<int>(rules[k].size()); }
  int cols(int k) const {
    return rules[k].empty() ? 0 : static_cast<int>(rules[k][0].size());
  }
  bool operator==(const Substitution2d&) const = default;
};

enum class WordKind { row, column };

struct InducedPartition {
  LabeledPartition partition;  // atoms on the window, one per return word
  Substitution2d words;        // label -> its return word over P's labels
};
// Induced partition of T's first return to the window: each atom is the set
// of window points sharing the sequence of P-labels along the orbit until
// return.  Words are written as 1xL rows (kind row, orbit moves rightward)
// or Lx1 columns (kind column, orbit moves upward, row 0 = bottom).
// T and P must share their domain.
InducedPartition induce_partition(const PET& T, const HalfPlane& window,
                                  const LabeledPartition& P, WordKind kind);

// x -> factor*x + (dx, dy) on every atom piece and the domain
LabeledPartition rescale(const LabeledPartition& P, const QuadNum& factor,
                         const QuadNum& dx, const QuadNum& dy);
// move every atom piece by the PET piece it lies in (domain is preserved)
LabeledPartition apply_pet(const PET& T, const LabeledPartition& P);

// substitute-then-assemble: replace every entry of inner's images by outer's
// image of that entry; throws std::invalid_argument on ragged assembly
Substitution2d compose(const Substitution2d& outer, const Substitution2d& inner);

struct IncidenceMatrix {
  // m[t][u]: occurrences of label t in the image of label u
  std::vector<std::vector<long>> m;
  int size() const { return static_cast<int>(m.size()); }
};
IncidenceMatrix incidence(const Substitution2d& s);

// characteristic polynomial, exact integer coefficients, ascending order
// (coeffs[k] multiplies x^k, leading coefficient 1)
std::vector<Int> char_poly(const IncidenceMatrix& M);

struct SpectralReport {
  int quad_multiplicity = 0;      // power of x^2-(n^2+2)x+1 divided out
  std::vector<long> stray_roots;  // integer roots other than 0 and +-1
  bool ok() const { return quad_multiplicity >= 1 && stray_roots.empty(); }
};
// Divides out x^2-(n^2+2)x+1 (the minimal polynomial of beta^2) as often as
// possible and scans the remaining factor for integer roots.
SpectralReport spectral_check(const IncidenceMatrix& M, int n);

struct SelfSimilarity {
  Substitution2d s1;           // row words of the induction along e1
  Substitution2d s2;           // column words of the induction along e2
  Substitution2d s123;         // the self-similarity s1(s2(s3(.)))
  std::vector<int> relabel;    // relabel[i]: label of atom i's image in P3
  bool p3_matches = false;     // P3 equals P up to relabeling
  bool re1_recovered = false;  // Re1 == (beta * R2e1)^-1
  bool re2_recovered = false;  // Re2 == (beta * R2e2)^-1
};
// The two-step Rauzy induction of the coding partition on the square window
// [0,1/beta]^2, rescaled by -beta back to the unit square.
SelfSimilarity self_similarity(int n);

// Blow every cell of w up to its image block; throws std::invalid_argument
// on ragged assembly and std::logic_error if a valid window maps to an
// invalid one.  The result is anchored at (0, 0).
Window apply_substitution(const Substitution2d& s, const Window& w);

// A bijection sigma with b.rules[sigma(k)] equal to sigma applied entrywise
// to a.rules[k], if one exists.  Found by seeding shape-compatible pairs and
// propagating the forced assignments through the rule entries.
std::optional<std::vector<int>> conjugating_bijection(const Substitution2d& a,
                                                      const Substitution2d& b);

// The known 36-rule self-similarity of the n = 3 tile set, kept as a
// regression reference for the induction pipeline (rows bottom to top).
Substitution2d reference_selfsim_3();

}  // namespace metallic
