#pragma once

#include <iosfwd>
#include <vector>

#include "chevelim/forms.hpp"

namespace chevelim {

/// One elementary (Chevalley) generator: x_{i,j}(t) with signed indices, or
/// the even-orthogonal row-interchange generator w_l.
struct GenSymbol {
  bool is_wl = false;
  int i = 0;
  int j = 0;
  Fel t;

  static GenSymbol x(int i, int j, Fel t) { return GenSymbol{false, i, j, std::move(t)}; }
  static GenSymbol wl() { return GenSymbol{true, 0, 0, Fel{}}; }

  bool operator==(const GenSymbol&) const = default;
};

/// A sequence of generator symbols; its evaluation is the left-to-right
/// matrix product. The empty word evaluates to the identity.
using Word = std::vector<GenSymbol>;

/// Matrix-unit term t * e_{r,c} with signed indices.
struct Unit {
  int r, c;
  Fel t;
};

bool symbol_valid(const GroupKind& kind, const GenSymbol& s);

/// The off-identity matrix units of a symbol's matrix (throws
/// InvalidSymbolForKind for inadmissible symbols).
std::vector<Unit> symbol_units(const GroupKind& kind, const GenSymbol& s, const FieldCtx& F);

Matrix gen_matrix(const GroupKind& kind, const GenSymbol& s, const FieldCtx& F);

GenSymbol gen_inverse(const GenSymbol& s, const FieldCtx& F);
Word word_inverse(const Word& w, const FieldCtx& F);

/// m <- gen_matrix(s) * m, in O(d * units) time.
void apply_left(const GroupKind& kind, Matrix& m, const GenSymbol& s);
/// m <- m * gen_matrix(s).
void apply_right(const GroupKind& kind, Matrix& m, const GenSymbol& s);
/// m <- eval(w) * m  /  m <- m * eval(w).
void apply_word_left(const GroupKind& kind, Matrix& m, const Word& w);
void apply_word_right(const GroupKind& kind, Matrix& m, const Word& w);

Matrix word_evaluate(const GroupKind& kind, const Word& w, const FieldCtx& F);

/// Word for the row-interchange element w_{i,-i} (built inductively from w_l
/// in the even-orthogonal case). Its evaluation equals special_w_matrix.
Word special_w(const GroupKind& kind, int i, const FieldCtx& F);
Matrix special_w_matrix(const GroupKind& kind, int i, const FieldCtx& F);

/// Sp: word evaluating to diag(1,..,1,lambda,1,..,1,lambda^-1).
/// Orthogonal kinds: pass the witness mu with lambda = mu^2; the word
/// evaluates to the diagonal with mu^2 / mu^-2 in the lambda slots.
Word torus_word(const GroupKind& kind, const Fel& lambda, const FieldCtx& F, const Fel* mu = nullptr);

/// Diagonal matrix diag(1,..,1,lambda,1,..,1,lambda^-1), with leading theta
/// slot for the odd kind.
Matrix torus_matrix(const GroupKind& kind, const Fel& lambda, const FieldCtx& F, int theta = 1);

/// Text form, one symbol per line: "x i j t" or "wl".
std::string word_to_text(const Word& w, const FieldCtx& F);
Word word_from_text(const FieldCtx& F, std::istream& in, size_t count);
Word word_from_text(const FieldCtx& F, const std::string& text);

}  // namespace chevelim
