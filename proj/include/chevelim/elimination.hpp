#pragma once

#include <cstdint>
#include <optional>

#include "chevelim/generators.hpp"

namespace chevelim {

struct ElimStats {
  std::uint64_t symbol_ops = 0;  // elementary row/column multiplications applied
};

struct DecomposeOptions {
  bool checked = false;  // assert the block-shape facts at each checkpoint
  ElimStats* stats = nullptr;
};

/// Certificate produced by decompose: eval(row_word) * g * eval(col_word) is
/// the diagonal matrix diag(1,..,1,lambda,1,..,1,lambda^-1), with a leading
/// theta = +-1 slot for the odd orthogonal kind. rank_deficit counts the
/// row interchanges taken when the top-left block was singular.
struct Decomposition {
  GroupKind kind;
  Word row_word;
  Word col_word;
  Fel lambda;
  std::optional<Fel> theta;
  int rank_deficit = 0;
};

/// One summand R of a (skew-)symmetric completion: t(e_ij + e_ji) for i < j,
/// t e_ii for i == j (symmetric case), or t(e_ij - e_ji) (skew case).
struct RTerm {
  int i, j;
  Fel t;
};

/// Split X = (R_1 + R_2 + ...) Y for invertible diagonal Y, with each R of the
/// elementary shapes above. Throws ShapeViolation when X Y^-1 is not
/// (skew-)symmetric as requested.
std::vector<RTerm> symmetric_completion(const Matrix& Y, const Matrix& X, bool skew);

Decomposition decompose(const GroupKind& kind, const Matrix& g, const DecomposeOptions& opts = {});

/// Rebuilds the original element from its certificate.
Matrix reconstruct(const Decomposition& dec, const FieldCtx& F);

/// Sp only: the complete generator word for g, with the diagonal replaced by
/// its torus word.
Word full_word_sp(const Decomposition& dec, const FieldCtx& F);

std::string decomposition_to_text(const Decomposition& dec, const FieldCtx& F);
Decomposition decomposition_from_text(const FieldCtx& F, std::istream& in);

}  // namespace chevelim
