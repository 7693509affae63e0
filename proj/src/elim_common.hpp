#pragma once

#include <functional>

#include "chevelim/elimination.hpp"

namespace chevelim::detail {

/// Elimination state shared by decompose and the parabolic coset routine:
/// the working matrix plus the words applied so far, kept so that
/// eval(row_word()) * g0 * eval(col_word()) equals the current matrix.
struct Builder {
  GroupKind kind;
  const FieldCtx& F;
  Matrix g;
  Word left_applied;   // in application order; row_word() reverses it
  Word right_applied;  // already in product order
  ElimStats* stats = nullptr;
  bool checked = false;

  Builder(const GroupKind& k, Matrix m, const DecomposeOptions& opts)
      : kind(k), F(m.field()), g(std::move(m)), stats(opts.stats), checked(opts.checked) {}

  const Fel& at(int si, int sj) const { return g.at(index_map(kind, si), index_map(kind, sj)); }

  void lmul(const GenSymbol& s) {
    if (!s.is_wl && F.is_zero(s.t)) return;  // identity, never emitted
    apply_left(kind, g, s);
    left_applied.push_back(s);
    if (stats) ++stats->symbol_ops;
  }

  void rmul(const GenSymbol& s) {
    if (!s.is_wl && F.is_zero(s.t)) return;
    apply_right(kind, g, s);
    right_applied.push_back(s);
    if (stats) ++stats->symbol_ops;
  }

  /// Multiply eval(w) onto the left as one factor.
  void lword(const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) lmul(*it);
  }

  Word row_word() const { return Word(left_applied.rbegin(), left_applied.rend()); }
  const Word& col_word() const { return right_applied; }

  [[noreturn]] void broken(const std::string& what) const {
    fail(Errc::InternalInvariantViolation, what + " (" + kind.str() + ")");
  }
};

using EntryFn = std::function<const Fel&(int, int)>;      // 1-based block coordinates
using AddFn = std::function<void(int, int, const Fel&)>;  // (dst, src, t): dst += t * src

/// Gaussian diagonalization of an l x l block using only unit row/column
/// additions; returns the rank m and leaves the block diag(d_1..d_m, 0..0).
int block_diagonalize(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& row_add,
                      const AddFn& col_add);

/// Rewrites diag(d_1..d_m, 0..) as diag(1,..,1,d,0,..) and, when m < l, fixes
/// the trailing entry to 1 through the spare zero row, so the block becomes
/// diag(1,..,1,lambda) at full rank and diag(1,..,1,0,..,0) otherwise.
void block_normalize(const FieldCtx& F, int l, int m, const EntryFn& entry, const AddFn& row_add,
                     const AddFn& col_add);

/// Column-operations-only variant for invertible blocks (used where row
/// operations would leave the recorded subgroup).
void block_diagonalize_cols(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& col_add);
void block_normalize_cols(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& col_add);

}  // namespace chevelim::detail
