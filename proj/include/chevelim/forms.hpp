#pragma once

#include <string>
#include <string_view>

#include "chevelim/matrix.hpp"

namespace chevelim {

enum class GroupFamily { Sp, OEven, OOdd };

/// Which isometry group we work in. Text syntax "sp:l", "o-even:l", "o-odd:l".
struct GroupKind {
  GroupFamily family = GroupFamily::Sp;
  int l = 2;

  int dim() const { return family == GroupFamily::OOdd ? 2 * l + 1 : 2 * l; }
  bool orthogonal() const { return family != GroupFamily::Sp; }

  static GroupKind sp(int l) { return {GroupFamily::Sp, l}; }
  static GroupKind o_even(int l) { return {GroupFamily::OEven, l}; }
  static GroupKind o_odd(int l) { return {GroupFamily::OOdd, l}; }
  static GroupKind parse(std::string_view text);
  std::string str() const;

  bool operator==(const GroupKind&) const = default;
};

/// Row/column position of the signed basis index. Basis order is
/// e_1..e_l, e_-1..e_-l for even dimension, with e_0 prepended when odd.
int index_map(const GroupKind& kind, int signed_index);

/// Throws unless l >= 2 and the field characteristic is admissible
/// (orthogonal kinds need zero or odd characteristic).
void require_admissible(const GroupKind& kind, const FieldCtx& F);

/// The fixed Gram matrix of the bilinear form for this kind.
Matrix form_matrix(const GroupKind& kind, const FieldCtx& F);

/// beta * g without materializing beta (the form is monomial up to the odd
/// kind's 2 in the corner).
Matrix form_times(const GroupKind& kind, const Matrix& g);

/// Exact membership test: transpose(g) * beta * g == beta.
bool is_member(const GroupKind& kind, const Matrix& g);

/// Q(v) = beta(v, v) / 2 for the orthogonal kinds; v is a column vector.
Fel quadratic_form(const GroupKind& kind, const Matrix& v);

}  // namespace chevelim
