#include "chevelim/elimination.hpp"

#include <istream>
#include <sstream>

#include "elim_common.hpp"

namespace chevelim {

namespace detail {

int block_diagonalize(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& row_add,
                      const AddFn& col_add) {
  const Fel one = F.one();
  for (int k = 1; k <= l; ++k) {
    int pr = -1, pc = -1;
    for (int c = k; c <= l && pr < 0; ++c) {
      for (int r = k; r <= l; ++r) {
        if (!F.is_zero(entry(r, c))) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr < 0) return k - 1;
    if (pr > k) row_add(k, pr, one);
    if (pc > k) col_add(k, pc, one);
    const Fel d = entry(k, k);
    const Fel dinv = F.inv(d);
    for (int r = k + 1; r <= l; ++r) {
      Fel v = entry(r, k);
      if (!F.is_zero(v)) row_add(r, k, F.neg(F.mul(v, dinv)));
    }
    for (int c = k + 1; c <= l; ++c) {
      Fel v = entry(k, c);
      if (!F.is_zero(v)) col_add(c, k, F.neg(F.mul(v, dinv)));
    }
  }
  return l;
}

void block_normalize(const FieldCtx& F, int l, int m, const EntryFn& entry, const AddFn& row_add,
                     const AddFn& col_add) {
  const Fel one = F.one();
  for (int i = 1; i < m; ++i) {
    Fel a = entry(i, i);
    if (F.eq(a, one)) continue;
    // right multiplication by the 6-term column word for diag(1/a @ i, a @ i+1)
    Fel ainv = F.inv(a);
    col_add(i + 1, i, ainv);
    col_add(i, i + 1, F.neg(a));
    col_add(i + 1, i, ainv);
    col_add(i + 1, i, F.neg(one));
    col_add(i, i + 1, one);
    col_add(i + 1, i, F.neg(one));
  }
  if (m >= 1 && m < l) {
    // push the trailing unit through the spare zero row
    Fel delta = entry(m, m);
    if (!F.eq(delta, one)) {
      row_add(m + 1, m, F.inv(delta));
      row_add(m, m + 1, F.sub(one, delta));
      row_add(m + 1, m, F.neg(one));
    }
  }
}

void block_diagonalize_cols(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& col_add) {
  const Fel one = F.one();
  for (int r = 1; r <= l; ++r) {
    if (F.is_zero(entry(r, r))) {
      int pc = -1;
      for (int c = r + 1; c <= l; ++c) {
        if (!F.is_zero(entry(r, c))) {
          pc = c;
          break;
        }
      }
      if (pc < 0) fail(Errc::InternalInvariantViolation, "singular block in column-only elimination");
      col_add(r, pc, one);
    }
    const Fel dinv = F.inv(entry(r, r));
    for (int c = r + 1; c <= l; ++c) {
      Fel v = entry(r, c);
      if (!F.is_zero(v)) col_add(c, r, F.neg(F.mul(v, dinv)));
    }
  }
  for (int j = 1; j < l; ++j) {
    for (int r = j + 1; r <= l; ++r) {
      Fel v = entry(r, j);
      if (!F.is_zero(v)) col_add(j, r, F.neg(F.mul(v, F.inv(entry(r, r)))));
    }
  }
}

void block_normalize_cols(const FieldCtx& F, int l, const EntryFn& entry, const AddFn& col_add) {
  const Fel one = F.one();
  for (int i = 1; i < l; ++i) {
    Fel a = entry(i, i);
    if (F.eq(a, one)) continue;
    Fel ainv = F.inv(a);
    col_add(i + 1, i, ainv);
    col_add(i, i + 1, F.neg(a));
    col_add(i + 1, i, ainv);
    col_add(i + 1, i, F.neg(one));
    col_add(i, i + 1, one);
    col_add(i + 1, i, F.neg(one));
  }
}

}  // namespace detail

std::vector<RTerm> symmetric_completion(const Matrix& Y, const Matrix& X, bool skew) {
  const FieldCtx& F = Y.field();
  require_same_field(Y.field(), X.field());
  const int n = Y.rows();
  if (Y.cols() != n || X.rows() != n || X.cols() != n)
    fail(Errc::DimensionMismatch, "completion blocks must be square and equal-sized");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !F.is_zero(Y.at(i, j))) fail(Errc::ShapeViolation, "Y must be diagonal");
    }
    if (F.is_zero(Y.at(i, i))) fail(Errc::ShapeViolation, "Y must be invertible");
  }
  Matrix R(F, n, n);
  for (int i = 0; i < n; ++i) {
    Fel yinv = F.inv(Y.at(i, i));
    for (int r = 0; r < n; ++r) R.at(r, i) = F.mul(X.at(r, i), yinv);
  }
  for (int i = 0; i < n; ++i) {
    if (skew && !F.is_zero(R.at(i, i)))
      fail(Errc::ShapeViolation, "X Y^-1 has a nonzero diagonal in the skew case");
    for (int j = i + 1; j < n; ++j) {
      Fel other = skew ? F.neg(R.at(j, i)) : R.at(j, i);
      if (!F.eq(R.at(i, j), other)) fail(Errc::ShapeViolation, "X Y^-1 is not (skew-)symmetric");
    }
  }
  std::vector<RTerm> terms;
  for (int i = 0; i < n; ++i) {
    if (!skew && !F.is_zero(R.at(i, i))) terms.push_back({i + 1, i + 1, R.at(i, i)});
    for (int j = i + 1; j < n; ++j) {
      if (!F.is_zero(R.at(i, j))) terms.push_back({i + 1, j + 1, R.at(i, j)});
    }
  }
  return terms;
}

namespace {

using detail::Builder;

detail::EntryFn top_entry(Builder& B) {
  return [&B](int r, int c) -> const Fel& { return B.at(r, c); };
}
detail::AddFn top_row_add(Builder& B) {
  return [&B](int dst, int src, const Fel& t) { B.lmul(GenSymbol::x(dst, src, t)); };
}
detail::AddFn top_col_add(Builder& B) {
  return [&B](int dst, int src, const Fel& t) { B.rmul(GenSymbol::x(src, dst, t)); };
}

/// Clears the top-left mm x mm corner of the lower-left block with E3-type
/// generators; the corner of A must be an invertible diagonal.
void clear_lower_left(Builder& B, int mm, bool skew) {
  const FieldCtx& F = B.F;
  Matrix Y(F, mm, mm), X(F, mm, mm);
  for (int i = 1; i <= mm; ++i) Y.at(i - 1, i - 1) = B.at(i, i);
  for (int i = 1; i <= mm; ++i)
    for (int j = 1; j <= mm; ++j) X.at(i - 1, j - 1) = F.neg(B.at(-i, j));
  std::vector<RTerm> terms;
  try {
    terms = symmetric_completion(Y, X, skew);
  } catch (const Error& e) {
    if (e.code() == Errc::ShapeViolation) B.broken("lower-left block lost its completion shape");
    throw;
  }
  for (const auto& rt : terms) B.lmul(GenSymbol::x(-rt.i, rt.j, rt.t));
}

/// Clears the upper-right block with E2-type generators; the lower-right
/// block must be an invertible diagonal.
void clear_upper_right(Builder& B, bool skew) {
  const FieldCtx& F = B.F;
  const int l = B.kind.l;
  Matrix Y(F, l, l), X(F, l, l);
  for (int i = 1; i <= l; ++i) Y.at(i - 1, i - 1) = B.at(-i, -i);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) X.at(i - 1, j - 1) = F.neg(B.at(i, -j));
  std::vector<RTerm> terms;
  try {
    terms = symmetric_completion(Y, X, skew);
  } catch (const Error& e) {
    if (e.code() == Errc::ShapeViolation) B.broken("upper-right block lost its completion shape");
    throw;
  }
  for (const auto& rt : terms) B.lmul(GenSymbol::x(rt.i, -rt.j, rt.t));
}

void check_c_rows_zero(Builder& B, int upto) {
  for (int i = 1; i <= upto; ++i)
    for (int j = 1; j <= B.kind.l; ++j)
      if (!B.F.is_zero(B.at(-i, j))) B.broken("lower-left rows expected zero");
}

void check_d_is_inverse_transpose(Builder& B) {
  const int l = B.kind.l;
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      Fel want = i == j ? B.F.inv(B.at(i, i)) : B.F.zero();
      if (!B.F.eq(B.at(-i, -j), want)) B.broken("lower-right block is not the transposed inverse");
    }
  }
}

void check_final_diagonal(Builder& B, bool odd) {
  const FieldCtx& F = B.F;
  const int d = B.kind.dim();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c && !F.is_zero(B.g.at(r, c))) B.broken("result is not diagonal");
  const int l = B.kind.l;
  for (int i = 1; i < l; ++i) {
    if (!F.eq(B.at(i, i), F.one()) || !F.eq(B.at(-i, -i), F.one()))
      B.broken("inner diagonal entries are not 1");
  }
  if (!F.eq(F.mul(B.at(l, l), B.at(-l, -l)), F.one())) B.broken("lambda slots are not inverse");
  if (odd) {
    Fel th = B.at(0, 0);
    if (!F.eq(F.mul(th, th), F.one())) B.broken("theta is not a sign");
  }
}

Decomposition finish(Builder& B, int rank_deficit, bool odd) {
  if (B.checked) check_final_diagonal(B, odd);
  Decomposition dec;
  dec.kind = B.kind;
  dec.row_word = B.row_word();
  dec.col_word = B.col_word();
  dec.lambda = B.at(B.kind.l, B.kind.l);
  if (odd) dec.theta = B.at(0, 0);
  dec.rank_deficit = rank_deficit;
  return dec;
}

Decomposition decompose_even(Builder& B) {
  const int l = B.kind.l;
  const bool skew = B.kind.orthogonal();
  auto entry = top_entry(B);
  auto radd = top_row_add(B);
  auto cadd = top_col_add(B);

  int m = detail::block_diagonalize(B.F, l, entry, radd, cadd);
  detail::block_normalize(B.F, l, m, entry, radd, cadd);
  int rank_deficit = 0;
  if (m < l) {
    rank_deficit = l - m;
    if (m > 0) clear_lower_left(B, m, skew);
    if (B.checked) check_c_rows_zero(B, m);
    for (int i = m + 1; i <= l; ++i) B.lword(special_w(B.kind, i, B.F));
    if (B.checked) check_c_rows_zero(B, l);
    int m2 = detail::block_diagonalize(B.F, l, entry, radd, cadd);
    if (m2 != l) B.broken("top-left block stayed singular after interchanges");
    detail::block_normalize(B.F, l, l, entry, radd, cadd);
  }
  clear_lower_left(B, l, skew);
  if (B.checked) {
    check_c_rows_zero(B, l);
    check_d_is_inverse_transpose(B);
  }
  clear_upper_right(B, skew);
  return finish(B, rank_deficit, false);
}

void odd_clear_x(Builder& B, int upto) {
  const FieldCtx& F = B.F;
  for (int i = 1; i <= upto; ++i) {
    Fel xi = B.at(0, i);
    if (F.is_zero(xi)) continue;
    B.lmul(GenSymbol::x(0, i, F.neg(F.div(xi, B.at(i, i)))));
  }
}

void odd_clear_e(Builder& B, int upto) {
  const FieldCtx& F = B.F;
  const Fel two = F.from_int(2);
  for (int i = 1; i <= upto; ++i) {
    Fel ei = B.at(i, 0);
    if (F.is_zero(ei)) continue;
    Fel t = F.div(ei, F.mul(two, B.at(i, i)));
    B.rmul(GenSymbol::x(i, 0, F.neg(t)));
  }
}

Decomposition decompose_odd(Builder& B) {
  const int l = B.kind.l;
  const FieldCtx& F = B.F;
  auto entry = top_entry(B);
  auto radd = top_row_add(B);
  auto cadd = top_col_add(B);

  int m = detail::block_diagonalize(F, l, entry, radd, cadd);
  detail::block_normalize(F, l, m, entry, radd, cadd);
  odd_clear_x(B, m);
  odd_clear_e(B, m);
  if (m > 0) clear_lower_left(B, m, true);
  int rank_deficit = 0;
  if (m < l) {
    rank_deficit = l - m;
    if (B.checked) check_c_rows_zero(B, m);
    for (int i = m + 1; i <= l; ++i) B.lword(special_w(B.kind, i, B.F));
    if (B.checked) check_c_rows_zero(B, l);
    int m2 = detail::block_diagonalize(F, l, entry, radd, cadd);
    if (m2 != l) B.broken("top-left block stayed singular after interchanges");
    detail::block_normalize(F, l, l, entry, radd, cadd);
    if (B.checked) {
      for (int i = 1; i <= l; ++i)
        if (!F.is_zero(B.at(0, i))) B.broken("top row expected zero after interchanges");
    }
    odd_clear_e(B, l);
  }
  if (B.checked) {
    check_c_rows_zero(B, l);
    for (int i = 1; i <= l; ++i) {
      if (!F.is_zero(B.at(0, i)) || !F.is_zero(B.at(i, 0))) B.broken("short blocks expected zero");
      if (!F.is_zero(B.at(-i, 0)) || !F.is_zero(B.at(0, -i))) B.broken("outer short blocks expected zero");
      if (!F.eq(B.at(-i, -i), F.inv(B.at(i, i)))) B.broken("lower-right is not the inverse diagonal");
    }
    Fel a = B.at(0, 0);
    if (!F.eq(F.mul(a, a), F.one())) B.broken("corner entry is not a sign");
  }
  clear_upper_right(B, true);
  return finish(B, rank_deficit, true);
}

}  // namespace

Decomposition decompose(const GroupKind& kind, const Matrix& g, const DecomposeOptions& opts) {
  const FieldCtx& F = g.field();
  require_admissible(kind, F);
  if (g.rows() != kind.dim() || g.cols() != kind.dim())
    fail(Errc::DimensionMismatch, "element has wrong dimension for " + kind.str());
  if (!is_member(kind, g)) fail(Errc::NotAMember, "input does not preserve the form");
  Builder B(kind, g, opts);
  if (kind.family == GroupFamily::OOdd) return decompose_odd(B);
  return decompose_even(B);
}

Matrix reconstruct(const Decomposition& dec, const FieldCtx& F) {
  int theta = 1;
  if (dec.theta && !F.eq(*dec.theta, F.one())) theta = -1;
  Matrix m = torus_matrix(dec.kind, dec.lambda, F, theta);
  apply_word_left(dec.kind, m, word_inverse(dec.row_word, F));
  apply_word_right(dec.kind, m, word_inverse(dec.col_word, F));
  return m;
}

Word full_word_sp(const Decomposition& dec, const FieldCtx& F) {
  if (dec.kind.family != GroupFamily::Sp) fail(Errc::WrongKind, "full words exist for sp only");
  Word w = word_inverse(dec.row_word, F);
  Word mid = torus_word(dec.kind, dec.lambda, F);
  w.insert(w.end(), mid.begin(), mid.end());
  Word tail = word_inverse(dec.col_word, F);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

std::string decomposition_to_text(const Decomposition& dec, const FieldCtx& F) {
  std::ostringstream out;
  out << "decomposition kind=" << dec.kind.str() << " lambda=" << F.str(dec.lambda);
  if (dec.theta) out << " theta=" << (F.eq(*dec.theta, F.one()) ? 1 : -1);
  out << " rankdeficit=" << dec.rank_deficit << '\n';
  out << "rowword " << dec.row_word.size() << '\n' << word_to_text(dec.row_word, F);
  out << "colword " << dec.col_word.size() << '\n' << word_to_text(dec.col_word, F);
  return out.str();
}

Decomposition decomposition_from_text(const FieldCtx& F, std::istream& in) {
  std::string tag;
  if (!(in >> tag) || tag != "decomposition") fail(Errc::ParseError, "expected decomposition header");
  Decomposition dec;
  bool have_kind = false, have_lambda = false;
  std::string kv;
  while (in >> kv && kv.rfind("rowword", 0) != 0) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) fail(Errc::ParseError, "bad header token '" + kv + "'");
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "kind") {
      dec.kind = GroupKind::parse(val);
      have_kind = true;
    } else if (key == "lambda") {
      dec.lambda = F.parse(val);
      have_lambda = true;
    } else if (key == "theta") {
      dec.theta = F.from_int(std::stoi(val));
    } else if (key == "rankdeficit") {
      dec.rank_deficit = std::stoi(val);
    } else {
      fail(Errc::ParseError, "unknown header key '" + key + "'");
    }
  }
  if (!have_kind || !have_lambda) fail(Errc::ParseError, "decomposition header is missing fields");
  size_t n = 0;
  if (!(in >> n)) fail(Errc::ParseError, "expected rowword count");
  dec.row_word = word_from_text(F, in, n);
  if (!(in >> tag) || tag != "colword" || !(in >> n)) fail(Errc::ParseError, "expected colword count");
  dec.col_word = word_from_text(F, in, n);
  return dec;
}

}  // namespace chevelim
