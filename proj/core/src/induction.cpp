#include "metallic/induction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace metallic {

namespace {

bool poly_lex_less(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto& u = a.vertices();
  const auto& w = b.vertices();
  for (size_t i = 0; i < u.size() && i < w.size(); ++i) {
    if (u[i] == w[i]) continue;
    return lex_less(u[i], w[i]);
  }
  return u.size() < w.size();
}

bool piece_less(const PetPiece& a, const PetPiece& b) {
  if (a.dx != b.dx) return a.dx < b.dx;
  if (a.dy != b.dy) return a.dy < b.dy;
  return poly_lex_less(a.shape, b.shape);
}

// pieces sharing a translation vector, for a.e. comparison of PETs
struct TranslationGroup {
  QuadNum dx, dy;
  std::vector<const ConvexPolygon*> shapes;
};

std::vector<TranslationGroup> group_by_translation(const PET& T) {
  std::vector<TranslationGroup> groups;
  for (const auto& piece : T.pieces) {
    TranslationGroup* g = nullptr;
    for (auto& cand : groups)
      if (cand.dx == piece.dx && cand.dy == piece.dy) g = &cand;
    if (!g) {
      groups.push_back({piece.dx, piece.dy, {}});
      g = &groups.back();
    }
    g->shapes.push_back(&piece.shape);
  }
  return groups;
}

// whether a is covered (up to measure zero) by the interior-disjoint shapes
bool covered(const ConvexPolygon& a,
             const std::vector<const ConvexPolygon*>& shapes) {
  QuadNum want = a.area();
  QuadNum got = want - want;
  for (const ConvexPolygon* b : shapes) {
    ConvexPolygon c = a.intersect(*b);
    if (!c.empty()) got += c.area();
  }
  return got == want;
}

}  // namespace

Point PET::apply(const Point& p) const {
  for (const auto& piece : pieces)
    if (piece.shape.contains(p)) return {p.x + piece.dx, p.y + piece.dy};
  throw std::domain_error("PET::apply: point outside every piece");
}

QuadNum PET::piece_area() const {
  QuadNum sum = QuadNum::rational(0, domain.field());
  for (const auto& piece : pieces) sum += piece.shape.area();
  return sum;
}

PET toral_translation(int n, Gen axis) {
  QuadNum zero = QuadNum::rational(0, n), one = QuadNum::rational(1, n);
  QuadNum binv = QuadNum::beta_inv(n);
  QuadNum cut = one - binv;
  PET T;
  T.domain = ConvexPolygon::unit_square(n);
  if (axis == Gen::e1) {
    T.pieces.push_back(
        {ConvexPolygon::rectangle(zero, zero, cut, one), binv, zero});
    T.pieces.push_back(
        {ConvexPolygon::rectangle(cut, zero, one, one), binv - one, zero});
  } else {
    T.pieces.push_back(
        {ConvexPolygon::rectangle(zero, zero, one, cut), zero, binv});
    T.pieces.push_back(
        {ConvexPolygon::rectangle(zero, cut, one, one), zero, binv - one});
  }
  std::sort(T.pieces.begin(), T.pieces.end(), piece_less);
  return T;
}

PET inverse(const PET& T) {
  PET R;
  R.domain = T.domain;
  for (const auto& piece : T.pieces)
    R.pieces.push_back({piece.shape.translate(piece.dx, piece.dy), -piece.dx,
                        -piece.dy});
  std::sort(R.pieces.begin(), R.pieces.end(), piece_less);
  return R;
}

PET rescale(const PET& T, const QuadNum& factor, const QuadNum& dx,
            const QuadNum& dy) {
  PET R;
  R.domain = T.domain.scale_about_origin(factor, dx, dy);
  for (const auto& piece : T.pieces)
    R.pieces.push_back({piece.shape.scale_about_origin(factor, dx, dy),
                        factor * piece.dx, factor * piece.dy});
  std::sort(R.pieces.begin(), R.pieces.end(), piece_less);
  return R;
}

bool equivalent(const PET& A, const PET& B) {
  if (!(A.domain == B.domain)) return false;
  auto ga = group_by_translation(A), gb = group_by_translation(B);
  if (ga.size() != gb.size()) return false;
  for (const auto& a : ga) {
    const TranslationGroup* match = nullptr;
    for (const auto& b : gb)
      if (b.dx == a.dx && b.dy == a.dy) match = &b;
    if (!match) return false;
    for (const ConvexPolygon* shape : a.shapes)
      if (!covered(*shape, match->shapes)) return false;
    for (const ConvexPolygon* shape : match->shapes)
      if (!covered(*shape, a.shapes)) return false;
  }
  return true;
}

namespace {

// shared first-return tracer; words are recorded only when P is given
struct TraceResult {
  std::vector<PetPiece> pieces;
  std::vector<int> times;
  std::vector<std::vector<int>> words;
};

TraceResult trace_returns(const PET& T, const HalfPlane& window,
                          const LabeledPartition* P) {
  int n = T.domain.field();
  ConvexPolygon W = T.domain.clip(window);
  if (W.empty())
    throw std::invalid_argument("induction window has no area");
  const int cap = 10 * (n + 2);
  QuadNum zero = QuadNum::rational(0, n);

  struct Active {
    ConvexPolygon cur;  // current orbit position of the traced region
    QuadNum tx, ty;     // accumulated translation
    int steps;
    std::vector<int> word;
  };
  std::vector<Active> active;
  active.push_back({W, zero, zero, 0, {}});

  struct Done {
    PetPiece piece;
    int time;
    std::vector<int> word;
  };
  std::vector<Done> done;

  while (!active.empty()) {
    Active a = std::move(active.back());
    active.pop_back();
    if (a.steps >= cap)
      throw std::runtime_error("induction: return-time cap exceeded");

    // refine by the partition label at the current position
    std::vector<std::pair<ConvexPolygon, std::vector<int>>> parts;
    if (P) {
      for (int lbl = 0; lbl < P->size(); ++lbl)
        for (const auto& q : P->atoms[lbl]) {
          ConvexPolygon c = a.cur.intersect(q);
          if (c.empty()) continue;
          auto word = a.word;
          word.push_back(lbl);
          parts.emplace_back(std::move(c), std::move(word));
        }
    } else {
      parts.emplace_back(a.cur, a.word);
    }

    for (auto& [region, word] : parts)
      for (const auto& piece : T.pieces) {
        ConvexPolygon c = region.intersect(piece.shape);
        if (c.empty()) continue;
        ConvexPolygon img = c.translate(piece.dx, piece.dy);
        QuadNum ntx = a.tx + piece.dx, nty = a.ty + piece.dy;
        ConvexPolygon in = img.clip(window);
        if (!in.empty())
          done.push_back({{in.translate(-ntx, -nty), ntx, nty}, a.steps + 1,
                          word});
        ConvexPolygon out = img.clip(window.complement());
        if (!out.empty())
          active.push_back({std::move(out), ntx, nty, a.steps + 1, word});
      }
  }

  // deterministic order: by word, then by translation and shape
  std::vector<size_t> order(done.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    if (done[i].word != done[j].word) return done[i].word < done[j].word;
    return piece_less(done[i].piece, done[j].piece);
  });
  TraceResult r;
  for (size_t i : order) {
    r.pieces.push_back(std::move(done[i].piece));
    r.times.push_back(done[i].time);
    r.words.push_back(std::move(done[i].word));
  }
  return r;
}

}  // namespace

InducedPET induce_transformation(const PET& T, const HalfPlane& window) {
  TraceResult r = trace_returns(T, window, nullptr);
  InducedPET out;
  out.pet.domain = T.domain.clip(window);
  for (size_t i = 0; i < r.pieces.size(); ++i) {
    out.pet.pieces.push_back(std::move(r.pieces[i]));
    out.return_times.push_back(r.times[i]);
  }
  return out;
}

InducedPartition induce_partition(const PET& T, const HalfPlane& window,
                                  const LabeledPartition& P, WordKind kind) {
  if (!(T.domain == P.domain))
    throw std::invalid_argument(
        "induce_partition: transformation and partition domains differ");
  TraceResult r = trace_returns(T, window, &P);
  InducedPartition out;
  out.partition.domain = T.domain.clip(window);
  // one atom per distinct return word, in sorted word order
  for (size_t i = 0; i < r.words.size(); ++i) {
    if (i == 0 || r.words[i] != r.words[i - 1]) {
      const auto& w = r.words[i];
      std::vector<std::vector<int>> block;
      if (kind == WordKind::row) {
        block.push_back(w);
      } else {
        for (int lbl : w) block.push_back({lbl});
      }
      out.words.rules.push_back(std::move(block));
      out.partition.atoms.emplace_back();
    }
    out.partition.atoms.back().push_back(std::move(r.pieces[i].shape));
  }
  return out;
}

LabeledPartition rescale(const LabeledPartition& P, const QuadNum& factor,
                         const QuadNum& dx, const QuadNum& dy) {
  LabeledPartition out;
  out.domain = P.domain.scale_about_origin(factor, dx, dy);
  out.atoms.resize(P.atoms.size());
  for (size_t i = 0; i < P.atoms.size(); ++i)
    for (const auto& piece : P.atoms[i])
      out.atoms[i].push_back(piece.scale_about_origin(factor, dx, dy));
  return out;
}

LabeledPartition apply_pet(const PET& T, const LabeledPartition& P) {
  if (!(T.domain == P.domain))
    throw std::invalid_argument(
        "apply_pet: transformation and partition domains differ");
  LabeledPartition out;
  out.domain = P.domain;
  out.atoms.resize(P.atoms.size());
  for (size_t i = 0; i < P.atoms.size(); ++i)
    for (const auto& piece : P.atoms[i])
      for (const auto& tp : T.pieces) {
        ConvexPolygon c = piece.intersect(tp.shape);
        if (!c.empty()) out.atoms[i].push_back(c.translate(tp.dx, tp.dy));
      }
  return out;
}

Substitution2d Substitution2d::from_permutation(const std::vector<int>& perm) {
  Substitution2d s;
  for (int v : perm) s.rules.push_back({{v}});
  return s;
}

Substitution2d compose(const Substitution2d& outer,
                       const Substitution2d& inner) {
  Substitution2d out;
  for (int k = 0; k < inner.size(); ++k) {
    const auto& block = inner.rules[k];
    int R = inner.rows(k), C = inner.cols(k);
    if (R == 0 || C == 0)
      throw std::invalid_argument("compose: empty image block");
    for (const auto& row : block)
      for (int lbl : row)
        if (lbl < 0 || lbl >= outer.size())
          throw std::invalid_argument("compose: label outside outer domain");
    // row heights must agree along each row, widths along each column
    std::vector<int> heights(R), widths(C);
    for (int r = 0; r < R; ++r) {
      heights[r] = outer.rows(block[r][0]);
      for (int c = 0; c < C; ++c)
        if (outer.rows(block[r][c]) != heights[r])
          throw std::invalid_argument("compose: ragged row heights");
    }
    for (int c = 0; c < C; ++c) {
      widths[c] = outer.cols(block[0][c]);
      for (int r = 0; r < R; ++r)
        if (outer.cols(block[r][c]) != widths[c])
          throw std::invalid_argument("compose: ragged column widths");
    }
    int total_h = 0, total_w = 0;
    for (int h : heights) total_h += h;
    for (int w : widths) total_w += w;
    std::vector<std::vector<int>> big(total_h, std::vector<int>(total_w, -1));
    int yoff = 0;
    for (int r = 0; r < R; ++r) {
      int xoff = 0;
      for (int c = 0; c < C; ++c) {
        const auto& sub = outer.rules[block[r][c]];
        for (int rr = 0; rr < heights[r]; ++rr)
          for (int cc = 0; cc < widths[c]; ++cc)
            big[yoff + rr][xoff + cc] = sub[rr][cc];
        xoff += widths[c];
      }
      yoff += heights[r];
    }
    out.rules.push_back(std::move(big));
  }
  return out;
}

IncidenceMatrix incidence(const Substitution2d& s) {
  int m = s.size();
  IncidenceMatrix M;
  M.m.assign(m, std::vector<long>(m, 0));
  for (int u = 0; u < m; ++u)
    for (const auto& row : s.rules[u])
      for (int t : row) {
        if (t < 0 || t >= m)
          throw std::invalid_argument("incidence: label set is not square");
        ++M.m[t][u];
      }
  return M;
}

std::vector<Int> char_poly(const IncidenceMatrix& M) {
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I)
  int m = M.size();
  std::vector<Int> coeffs(m + 1);
  coeffs[m] = 1;
  std::vector<std::vector<Int>> A(m, std::vector<Int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = M.m[i][j];
  std::vector<std::vector<Int>> Mk = A;
  for (int k = 1; k <= m; ++k) {
    Int tr = 0;
    for (int i = 0; i < m; ++i) tr += Mk[i][i];
    Int ck = -tr / k;
    if (ck * k != -tr)
      throw std::logic_error("char_poly: trace not divisible by step");
    coeffs[m - k] = ck;
    if (k == m) break;
    // Mk <- A * (Mk + ck I)
    for (int i = 0; i < m; ++i) Mk[i][i] += ck;
    std::vector<std::vector<Int>> next(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l) {
        if (A[i][l] == 0) continue;
        const Int& a = A[i][l];
        for (int j = 0; j < m; ++j) next[i][j] += a * Mk[l][j];
      }
    Mk = std::move(next);
  }
  return coeffs;
}

SpectralReport spectral_check(const IncidenceMatrix& M, int n) {
  std::vector<Int> p = char_poly(M);
  SpectralReport report;
  // divide out x^2 - (n^2+2)x + 1 while the remainder vanishes
  Int mid = -(Int(n) * n + 2);
  while (p.size() >= 3) {
    // synthetic division by x^2 + mid*x + 1 (monic)
    std::vector<Int> q(p.size() - 2, 0);
    std::vector<Int> r = p;
    for (int i = static_cast<int>(p.size()) - 1; i >= 2; --i) {
      Int f = r[i];
      q[i - 2] = f;
      r[i] = 0;
      r[i - 1] -= f * mid;
      r[i - 2] -= f;
    }
    if (r[0] != 0 || r[1] != 0) break;
    p = std::move(q);
    ++report.quad_multiplicity;
  }
  // integer roots of the remaining factor; eigenvalues are bounded by the
  // largest column sum, so the scan range is complete
  long bound = 0;
  for (int u = 0; u < M.size(); ++u) {
    long col = 0;
    for (int t = 0; t < M.size(); ++t) col += M.m[t][u];
    bound = std::max(bound, col);
  }
  for (long root = -bound; root <= bound; ++root) {
    Int val = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      val = val * root + p[i];
    if (val == 0 && root != 0 && root != 1 && root != -1)
      report.stray_roots.push_back(root);
  }
  return report;
}

SelfSimilarity self_similarity(int n) {
  QuadNum zero = QuadNum::rational(0, n), one = QuadNum::rational(1, n);
  QuadNum binv = QuadNum::beta_inv(n), beta = QuadNum::beta(n);
  LabeledPartition P = refined_partition(n);
  PET Re1 = toral_translation(n, Gen::e1);
  PET Re2 = toral_translation(n, Gen::e2);
  HalfPlane x_le_binv{binv, zero - one, zero};  // x <= 1/beta
  HalfPlane y_le_binv{binv, zero, zero - one};  // y <= 1/beta

  InducedPartition first = induce_partition(Re1, x_le_binv, P, WordKind::row);
  InducedPET R1e1 = induce_transformation(Re1, x_le_binv);
  InducedPET R1e2 = induce_transformation(Re2, x_le_binv);

  InducedPartition second =
      induce_partition(R1e2.pet, y_le_binv, first.partition, WordKind::column);
  InducedPET R2e1 = induce_transformation(R1e1.pet, y_le_binv);
  InducedPET R2e2 = induce_transformation(R1e2.pet, y_le_binv);

  LabeledPartition scaled = rescale(second.partition, zero - beta, one, one);
  LabeledPartition P3 = apply_pet(Re2, apply_pet(Re1, scaled));

  SelfSimilarity out;
  out.s1 = std::move(first.words);
  out.s2 = std::move(second.words);
  auto bij = equal_up_to_relabeling(P, P3);
  out.p3_matches = bij.has_value();
  if (!out.p3_matches)
    throw std::runtime_error(
        "self_similarity: rescaled induction does not reproduce the partition");
  out.relabel = *bij;
  Substitution2d s3 = Substitution2d::from_permutation(out.relabel);
  out.s123 = compose(out.s1, compose(out.s2, s3));
  out.re1_recovered =
      equivalent(Re1, inverse(rescale(R2e1.pet, beta, zero, zero)));
  out.re2_recovered =
      equivalent(Re2, inverse(rescale(R2e2.pet, beta, zero, zero)));
  return out;
}

Window apply_substitution(const Substitution2d& s, const Window& w) {
  if (w.width <= 0 || w.height <= 0)
    throw std::invalid_argument("apply_substitution: empty window");
  for (const auto& row : w.cells)
    for (int idx : row)
      if (idx < 0 || idx >= s.size())
        throw std::invalid_argument("apply_substitution: cell label outside "
                                    "the substitution's domain");
  std::vector<int> heights(w.height), widths(w.width);
  for (int r = 0; r < w.height; ++r) {
    heights[r] = s.rows(w.cells[r][0]);
    for (int c = 0; c < w.width; ++c)
      if (s.rows(w.cells[r][c]) != heights[r])
        throw std::invalid_argument("apply_substitution: ragged row heights");
  }
  for (int c = 0; c < w.width; ++c) {
    widths[c] = s.cols(w.cells[0][c]);
    for (int r = 0; r < w.height; ++r)
      if (s.cols(w.cells[r][c]) != widths[c])
        throw std::invalid_argument(
            "apply_substitution: ragged column widths");
  }
  Window out;
  out.n = w.n;
  out.tiles = w.tiles;
  out.i0 = 0;
  out.j0 = 0;
  int total_h = 0, total_w = 0;
  for (int h : heights) total_h += h;
  for (int c : widths) total_w += c;
  out.width = total_w;
  out.height = total_h;
  out.cells.assign(total_h, std::vector<int>(total_w, -1));
  int yoff = 0;
  for (int r = 0; r < w.height; ++r) {
    int xoff = 0;
    for (int c = 0; c < w.width; ++c) {
      const auto& block = s.rules[w.cells[r][c]];
      for (int rr = 0; rr < heights[r]; ++rr)
        for (int cc = 0; cc < widths[c]; ++cc)
          out.cells[yoff + rr][xoff + cc] = block[rr][cc];
      xoff += widths[c];
    }
    yoff += heights[r];
  }
  if (check_valid(w).empty() && !check_valid(out).empty())
    throw std::logic_error(
        "apply_substitution: valid window mapped to an invalid one");
  return out;
}

namespace {

// Assign sigma[k] = v, then force sigma through the rule entries of every
// newly assigned label; false on any conflict.
bool assign_and_propagate(const Substitution2d& a, const Substitution2d& b,
                          std::vector<int>& sigma, std::vector<char>& used,
                          int k, int v) {
  if (used[v] || a.rows(k) != b.rows(v) || a.cols(k) != b.cols(v))
    return false;
  sigma[k] = v;
  used[v] = 1;
  std::vector<int> pending{k};
  while (!pending.empty()) {
    int cur = pending.back();
    pending.pop_back();
    const auto& src = a.rules[cur];
    const auto& dst = b.rules[sigma[cur]];
    for (size_t r = 0; r < src.size(); ++r)
      for (size_t c = 0; c < src[r].size(); ++c) {
        int t = src[r][c], u = dst[r][c];
        if (sigma[t] == u) continue;
        if (sigma[t] >= 0 || used[u]) return false;
        if (a.rows(t) != b.rows(u) || a.cols(t) != b.cols(u)) return false;
        sigma[t] = u;
        used[u] = 1;
        pending.push_back(t);
      }
  }
  return true;
}

bool search_bijection(const Substitution2d& a, const Substitution2d& b,
                      std::vector<int>& sigma, std::vector<char>& used) {
  int k = -1;
  for (int i = 0; i < a.size(); ++i)
    if (sigma[i] < 0) {
      k = i;
      break;
    }
  if (k < 0) return true;
  for (int v = 0; v < b.size(); ++v) {
    if (used[v]) continue;
    std::vector<int> sigma_try = sigma;
    std::vector<char> used_try = used;
    if (assign_and_propagate(a, b, sigma_try, used_try, k, v) &&
        search_bijection(a, b, sigma_try, used_try)) {
      sigma = std::move(sigma_try);
      used = std::move(used_try);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> conjugating_bijection(const Substitution2d& a,
                                                      const Substitution2d& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> sigma(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  if (!search_bijection(a, b, sigma, used)) return std::nullopt;
  return sigma;
}

Substitution2d reference_selfsim_3() {
  // Rows listed bottom to top.  Circulating copies of this table show a
  // fourth row "17 27 30 33" inside rule 17 (a duplicate of the row above it
  // in rule 8); that cannot be right, because label 17 sits beside the
  // height-3 labels 27, 30, 33 in the images of rules 1, 3 and 8, and
  // horizontally adjacent labels must have images of equal height.  Rule 17
  // is therefore the 3-row block below.
  Substitution2d s;
  s.rules = {
      {{3, 6, 7, 15}, {18, 27, 30, 33}, {19, 28, 31, 34}, {23, 29, 32, 35}},
      {{2, 6, 7, 15}, {17, 27, 30, 33}, {18, 28, 31, 34}, {22, 29, 32, 35}},
      {{1, 5, 6, 13}, {18, 27, 30, 33}, {19, 28, 31, 34}, {23, 29, 32, 35}},
      {{0, 5, 6, 13}, {17, 27, 30, 33}, {18, 28, 31, 34}, {22, 29, 32, 35}},
      {{0, 5, 6, 13}, {17, 27, 30, 33}, {18, 28, 31, 34}, {19, 29, 32, 35}},
      {{4, 6, 13}, {24, 30, 33}, {25, 31, 34}, {26, 32, 35}},
      {{3, 6, 13}, {21, 27, 30}, {25, 31, 34}, {26, 32, 35}},
      {{3, 6, 13}, {18, 27, 30}, {22, 28, 31}, {26, 32, 35}},
      {{0, 5, 6, 7}, {17, 27, 30, 33}, {18, 28, 31, 34}, {22, 29, 32, 35}},
      {{0, 5, 6, 7}, {17, 27, 30, 33}, {18, 28, 31, 34}, {19, 29, 32, 35}},
      {{4, 6, 7}, {24, 30, 33}, {25, 31, 34}, {26, 32, 35}},
      {{3, 6, 7}, {21, 27, 30}, {25, 31, 34}, {26, 32, 35}},
      {{2, 6, 7}, {20, 27, 30}, {24, 31, 34}, {25, 32, 35}},
      {{3, 6, 7}, {18, 27, 30}, {22, 28, 31}, {26, 32, 35}},
      {{2, 6, 7}, {17, 27, 30}, {21, 28, 31}, {25, 32, 35}},
      {{3, 6, 7}, {18, 27, 30}, {19, 28, 31}, {23, 29, 32}},
      {{2, 6, 7}, {17, 27, 30}, {18, 28, 31}, {22, 29, 32}},
      {{8, 12, 14, 16}, {18, 28, 31, 34}, {22, 29, 32, 35}},
      {{3, 11, 14, 16}, {18, 27, 31, 34}, {22, 28, 32, 35}},
      {{3, 6, 13, 16}, {18, 27, 30, 34}, {22, 28, 31, 35}},
      {{8, 12, 14, 16}, {18, 28, 31, 34}, {19, 29, 32, 35}},
      {{3, 11, 14, 16}, {18, 27, 31, 34}, {19, 28, 32, 35}},
      {{3, 6, 13, 16}, {18, 27, 30, 34}, {19, 28, 31, 35}},
      {{3, 6, 7, 15}, {18, 27, 30, 33}, {19, 28, 31, 34}},
      {{1, 10, 12, 14}, {18, 27, 31, 34}, {19, 28, 32, 35}},
      {{1, 5, 11, 14}, {18, 27, 30, 34}, {19, 28, 31, 35}},
      {{1, 5, 6, 13}, {18, 27, 30, 33}, {19, 28, 31, 34}},
      {{9, 12, 14}, {24, 31, 34}, {25, 32, 35}},
      {{4, 11, 14}, {24, 30, 34}, {25, 31, 35}},
      {{4, 6, 13}, {24, 30, 33}, {25, 31, 34}},
      {{8, 12, 14}, {21, 28, 31}, {25, 32, 35}},
      {{3, 11, 14}, {21, 27, 31}, {25, 31, 35}},
      {{3, 6, 13}, {21, 27, 30}, {25, 31, 34}},
      {{8, 12, 14}, {18, 28, 31}, {22, 29, 32}},
      {{3, 11, 14}, {18, 27, 31}, {22, 28, 32}},
      {{3, 6, 13}, {18, 27, 30}, {22, 28, 31}},
  };
  return s;
}

}  // namespace metallic
