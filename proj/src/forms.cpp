#include "chevelim/forms.hpp"

namespace chevelim {

GroupKind GroupKind::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::ParseError, "group kind needs 'family:l'");
  std::string fam(text.substr(0, colon));
  int l = 0;
  try {
    l = std::stoi(std::string(text.substr(colon + 1)));
  } catch (...) {
    fail(Errc::ParseError, "bad rank in group kind '" + std::string(text) + "'");
  }
  if (fam == "sp") return sp(l);
  if (fam == "o-even") return o_even(l);
  if (fam == "o-odd") return o_odd(l);
  fail(Errc::ParseError, "unknown group family '" + fam + "'");
}

std::string GroupKind::str() const {
  switch (family) {
    case GroupFamily::Sp: return "sp:" + std::to_string(l);
    case GroupFamily::OEven: return "o-even:" + std::to_string(l);
    case GroupFamily::OOdd: return "o-odd:" + std::to_string(l);
  }
  return "?";
}

int index_map(const GroupKind& kind, int signed_index) {
  const int l = kind.l;
  if (kind.family == GroupFamily::OOdd) {
    if (signed_index == 0) return 0;
    if (signed_index >= 1 && signed_index <= l) return signed_index;
    if (signed_index <= -1 && signed_index >= -l) return l - signed_index;
  } else {
    if (signed_index >= 1 && signed_index <= l) return signed_index - 1;
    if (signed_index <= -1 && signed_index >= -l) return l - signed_index - 1;
  }
  fail(Errc::IndexOutOfRange, "signed index " + std::to_string(signed_index) + " out of range");
}

void require_admissible(const GroupKind& kind, const FieldCtx& F) {
  if (kind.l < 2) fail(Errc::IndexOutOfRange, "rank l must be at least 2");
  if (kind.orthogonal() && F.characteristic() == 2)
    fail(Errc::BadCharacteristic, "orthogonal kinds need zero or odd characteristic");
}

Matrix form_matrix(const GroupKind& kind, const FieldCtx& F) {
  require_admissible(kind, F);
  const int l = kind.l;
  Matrix beta(F, kind.dim(), kind.dim());
  const Fel one = F.one();
  switch (kind.family) {
    case GroupFamily::Sp:
      for (int i = 1; i <= l; ++i) {
        beta.at(index_map(kind, i), index_map(kind, -i)) = one;
        beta.at(index_map(kind, -i), index_map(kind, i)) = F.neg(one);
      }
      break;
    case GroupFamily::OEven:
      for (int i = 1; i <= l; ++i) {
        beta.at(index_map(kind, i), index_map(kind, -i)) = one;
        beta.at(index_map(kind, -i), index_map(kind, i)) = one;
      }
      break;
    case GroupFamily::OOdd:
      beta.at(0, 0) = F.from_int(2);
      for (int i = 1; i <= l; ++i) {
        beta.at(index_map(kind, i), index_map(kind, -i)) = one;
        beta.at(index_map(kind, -i), index_map(kind, i)) = one;
      }
      break;
  }
  return beta;
}

Matrix form_times(const GroupKind& kind, const Matrix& g) {
  const FieldCtx& F = g.field();
  require_admissible(kind, F);
  const int d = kind.dim();
  if (g.rows() != d) fail(Errc::DimensionMismatch, "form application shape mismatch");
  Matrix out(F, d, g.cols());
  const int l = kind.l;
  for (int i = 1; i <= l; ++i) {
    int pi = index_map(kind, i), ni = index_map(kind, -i);
    for (int c = 0; c < g.cols(); ++c) {
      out.at(pi, c) = g.at(ni, c);
      out.at(ni, c) = kind.family == GroupFamily::Sp ? F.neg(g.at(pi, c)) : g.at(pi, c);
    }
  }
  if (kind.family == GroupFamily::OOdd) {
    const Fel two = F.from_int(2);
    for (int c = 0; c < g.cols(); ++c) out.at(0, c) = F.mul(two, g.at(0, c));
  }
  return out;
}

bool is_member(const GroupKind& kind, const Matrix& g) {
  const FieldCtx& F = g.field();
  require_admissible(kind, F);
  const int d = kind.dim();
  if (g.rows() != d || g.cols() != d) fail(Errc::DimensionMismatch, "element has wrong dimension");
  Matrix bg = form_times(kind, g);
  Matrix gtbg = g.transpose() * bg;
  return gtbg == form_matrix(kind, F);
}

Fel quadratic_form(const GroupKind& kind, const Matrix& v) {
  const FieldCtx& F = v.field();
  if (!kind.orthogonal()) fail(Errc::WrongKind, "quadratic form is for orthogonal kinds");
  require_admissible(kind, F);
  if (F.characteristic() == 2) fail(Errc::BadCharacteristic, "quadratic form needs 1/2");
  if (v.rows() != kind.dim() || v.cols() != 1) fail(Errc::DimensionMismatch, "expected a column vector");
  Matrix bv = form_times(kind, v);
  Fel s = F.zero();
  for (int r = 0; r < v.rows(); ++r) s = F.add(s, F.mul(v.at(r, 0), bv.at(r, 0)));
  return F.div(s, F.from_int(2));
}

}  // namespace chevelim
