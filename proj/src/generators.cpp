#include "chevelim/generators.hpp"

#include <istream>
#include <sstream>

namespace chevelim {

namespace {

bool valid_x(const GroupKind& kind, int i, int j) {
  const int l = kind.l;
  auto in_range = [&](int s) { return s != 0 && -l <= s && s <= l; };
  if (i == 0 || j == 0) {
    if (kind.family != GroupFamily::OOdd) return false;
    if (i == 0 && j == 0) return false;
    int s = i == 0 ? j : i;
    return s >= 1 && s <= l;  // x_{i,0} and x_{0,i} with positive i
  }
  if (!in_range(i) || !in_range(j)) return false;
  if (i > 0 && j > 0) return i != j;
  if (i > 0 && j < 0) {
    int b = -j;
    if (kind.family == GroupFamily::Sp) return i <= b;  // i == b is the long root
    return i < b;
  }
  if (i < 0 && j > 0) {
    int a = -i;
    if (kind.family == GroupFamily::Sp) return a <= j;
    return a < j;
  }
  return false;  // both negative never appears
}

}  // namespace

bool symbol_valid(const GroupKind& kind, const GenSymbol& s) {
  if (s.is_wl) return kind.family == GroupFamily::OEven;
  return valid_x(kind, s.i, s.j);
}

std::vector<Unit> symbol_units(const GroupKind& kind, const GenSymbol& s, const FieldCtx& F) {
  if (!symbol_valid(kind, s))
    fail(Errc::InvalidSymbolForKind,
         (s.is_wl ? std::string("wl") : "x(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")") +
             " is not a generator of " + kind.str());
  const int l = kind.l;
  const Fel t = s.t;
  const Fel nt = F.neg(t);
  if (s.is_wl) {
    Fel m1 = F.neg(F.one());
    return {{l, l, m1}, {-l, -l, m1}, {l, -l, m1}, {-l, l, m1}};
  }
  const int i = s.i, j = s.j;
  if (i > 0 && j > 0) return {{i, j, t}, {-j, -i, nt}};
  if (i > 0 && j < 0) {
    int b = -j;
    if (i == b) return {{i, -i, t}};  // Sp long root
    if (kind.family == GroupFamily::Sp) return {{i, -b, t}, {b, -i, t}};
    return {{i, -b, t}, {b, -i, nt}};
  }
  if (i < 0 && j > 0) {
    int a = -i;
    if (a == j) return {{-a, a, t}};  // Sp long root
    if (kind.family == GroupFamily::Sp) return {{-a, j, t}, {-j, a, t}};
    return {{-a, j, t}, {-j, a, nt}};
  }
  // odd-kind short roots through e_0
  const Fel t2 = F.mul(t, t);
  const Fel two_t = F.add(t, t);
  if (j == 0) {
    // x_{i,0}(t) = I + t(2 e_{i,0} - e_{0,-i}) - t^2 e_{i,-i}
    return {{i, 0, two_t}, {0, -i, nt}, {i, -i, F.neg(t2)}};
  }
  // x_{0,j}(t) = I + t(-2 e_{-j,0} + e_{0,j}) - t^2 e_{-j,j}
  return {{-j, 0, F.neg(two_t)}, {0, j, t}, {-j, j, F.neg(t2)}};
}

Matrix gen_matrix(const GroupKind& kind, const GenSymbol& s, const FieldCtx& F) {
  require_admissible(kind, F);
  Matrix m = Matrix::identity(F, kind.dim());
  for (const auto& u : symbol_units(kind, s, F)) {
    int r = index_map(kind, u.r), c = index_map(kind, u.c);
    m.at(r, c) = F.add(m.at(r, c), u.t);
  }
  return m;
}

GenSymbol gen_inverse(const GenSymbol& s, const FieldCtx& F) {
  if (s.is_wl) return s;
  return GenSymbol::x(s.i, s.j, F.neg(s.t));
}

Word word_inverse(const Word& w, const FieldCtx& F) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(gen_inverse(*it, F));
  return out;
}

void apply_left(const GroupKind& kind, Matrix& m, const GenSymbol& s) {
  const FieldCtx& F = m.field();
  auto units = symbol_units(kind, s, F);
  const int d = m.cols();
  // snapshot the source rows, then add into the target rows
  std::vector<std::pair<int, std::vector<Fel>>> snap;
  for (const auto& u : units) {
    bool seen = false;
    for (const auto& [c, _] : snap) seen |= (c == u.c);
    if (seen) continue;
    std::vector<Fel> row(d);
    int rc = index_map(kind, u.c);
    for (int col = 0; col < d; ++col) row[col] = m.at(rc, col);
    snap.emplace_back(u.c, std::move(row));
  }
  for (const auto& u : units) {
    const std::vector<Fel>* src = nullptr;
    for (const auto& [c, row] : snap)
      if (c == u.c) src = &row;
    int tr = index_map(kind, u.r);
    for (int col = 0; col < d; ++col) m.at(tr, col) = F.add(m.at(tr, col), F.mul(u.t, (*src)[col]));
  }
}

void apply_right(const GroupKind& kind, Matrix& m, const GenSymbol& s) {
  const FieldCtx& F = m.field();
  auto units = symbol_units(kind, s, F);
  const int d = m.rows();
  std::vector<std::pair<int, std::vector<Fel>>> snap;
  for (const auto& u : units) {
    bool seen = false;
    for (const auto& [r, _] : snap) seen |= (r == u.r);
    if (seen) continue;
    std::vector<Fel> col(d);
    int rc = index_map(kind, u.r);
    for (int row = 0; row < d; ++row) col[row] = m.at(row, rc);
    snap.emplace_back(u.r, std::move(col));
  }
  for (const auto& u : units) {
    const std::vector<Fel>* src = nullptr;
    for (const auto& [r, col] : snap)
      if (r == u.r) src = &col;
    int tc = index_map(kind, u.c);
    for (int row = 0; row < d; ++row) m.at(row, tc) = F.add(m.at(row, tc), F.mul(u.t, (*src)[row]));
  }
}

void apply_word_left(const GroupKind& kind, Matrix& m, const Word& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply_left(kind, m, *it);
}

void apply_word_right(const GroupKind& kind, Matrix& m, const Word& w) {
  for (const auto& s : w) apply_right(kind, m, s);
}

Matrix word_evaluate(const GroupKind& kind, const Word& w, const FieldCtx& F) {
  require_admissible(kind, F);
  Matrix m = Matrix::identity(F, kind.dim());
  apply_word_right(kind, m, w);
  return m;
}

Word special_w(const GroupKind& kind, int i, const FieldCtx& F) {
  if (i < 1 || i > kind.l) fail(Errc::IndexOutOfRange, "interchange index out of range");
  const Fel one = F.one();
  const Fel m1 = F.neg(one);
  switch (kind.family) {
    case GroupFamily::Sp:
      return {GenSymbol::x(i, -i, one), GenSymbol::x(-i, i, m1), GenSymbol::x(i, -i, one)};
    case GroupFamily::OOdd:
      return {GenSymbol::x(0, i, m1), GenSymbol::x(i, 0, one), GenSymbol::x(0, i, m1)};
    case GroupFamily::OEven: {
      // w_{l,-l} = w_l; descend with w_{r,-r} = w_{r+1,-(r+1)} w_{r+1,r} w_{r+1,-r},
      // each short w built from three unipotents.
      Word w{GenSymbol::wl()};
      for (int r = kind.l - 1; r >= i; --r) {
        w.push_back(GenSymbol::x(r + 1, r, one));
        w.push_back(GenSymbol::x(r, r + 1, m1));
        w.push_back(GenSymbol::x(r + 1, r, one));
        w.push_back(GenSymbol::x(r, -(r + 1), m1));
        w.push_back(GenSymbol::x(-r, r + 1, m1));
        w.push_back(GenSymbol::x(r, -(r + 1), m1));
      }
      return w;
    }
  }
  fail(Errc::Unsupported, "bad group family");
}

Matrix special_w_matrix(const GroupKind& kind, int i, const FieldCtx& F) {
  if (i < 1 || i > kind.l) fail(Errc::IndexOutOfRange, "interchange index out of range");
  Matrix m = Matrix::identity(F, kind.dim());
  const Fel one = F.one();
  const Fel m1 = F.neg(one);
  int pi = index_map(kind, i), ni = index_map(kind, -i);
  m.at(pi, pi) = F.zero();
  m.at(ni, ni) = F.zero();
  switch (kind.family) {
    case GroupFamily::Sp:
      m.at(pi, ni) = one;
      m.at(ni, pi) = m1;
      break;
    case GroupFamily::OEven:
      m.at(pi, ni) = m1;
      m.at(ni, pi) = m1;
      break;
    case GroupFamily::OOdd:
      m.at(pi, ni) = m1;
      m.at(ni, pi) = m1;
      m.at(0, 0) = m1;
      break;
  }
  return m;
}

Word torus_word(const GroupKind& kind, const Fel& lambda, const FieldCtx& F, const Fel* mu) {
  if (F.is_zero(lambda)) fail(Errc::ZeroLambda, "torus parameter must be nonzero");
  const int l = kind.l;
  const Fel one = F.one();
  const Fel m1 = F.neg(one);
  if (kind.family == GroupFamily::Sp) {
    // h_l(lambda) = w_{l,-l}(lambda) w_{l,-l}(-1)
    auto wl = [&](const Fel& t) {
      return Word{GenSymbol::x(l, -l, t), GenSymbol::x(-l, l, F.neg(F.inv(t))), GenSymbol::x(l, -l, t)};
    };
    Word w = wl(lambda);
    Word w2 = wl(m1);
    w.insert(w.end(), w2.begin(), w2.end());
    return w;
  }
  if (mu == nullptr || F.is_zero(*mu)) fail(Errc::NotASquareWitness, "orthogonal torus words need a square root witness");
  if (!F.eq(F.mul(*mu, *mu), lambda)) fail(Errc::NotASquareWitness, "witness does not square to lambda");
  if (kind.family == GroupFamily::OOdd) {
    // w_{l,0}(t) = x_{0,l}(-t) x_{l,0}(1/t) x_{0,l}(-t); the product
    // w_{l,0}(1/mu) w_{l,0}(1) is diag(1,...,mu^2,...,mu^-2).
    auto w = [&](const Fel& t) {
      Fel nt = F.neg(t);
      return Word{GenSymbol::x(0, l, nt), GenSymbol::x(l, 0, F.inv(t)), GenSymbol::x(0, l, nt)};
    };
    Word out = w(F.inv(*mu));
    Word tail = w(one);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  // OEven: combine the two rank-one torus elements through roots
  // e_{l-1} - e_l and e_{l-1} + e_l; their quotient is diag(1,..,mu^2,..,mu^-2).
  const int a = l - 1, b = l;
  auto wA = [&](const Fel& t) {
    return Word{GenSymbol::x(a, b, t), GenSymbol::x(b, a, F.neg(F.inv(t))), GenSymbol::x(a, b, t)};
  };
  auto wD = [&](const Fel& t) {
    return Word{GenSymbol::x(a, -b, t), GenSymbol::x(-a, b, F.inv(t)), GenSymbol::x(a, -b, t)};
  };
  Word hA = wA(*mu);
  {
    Word t2 = wA(m1);
    hA.insert(hA.end(), t2.begin(), t2.end());
  }
  Word out = word_inverse(hA, F);
  Word hD = wD(*mu);
  {
    Word t2 = wD(m1);
    hD.insert(hD.end(), t2.begin(), t2.end());
  }
  out.insert(out.end(), hD.begin(), hD.end());
  return out;
}

Matrix torus_matrix(const GroupKind& kind, const Fel& lambda, const FieldCtx& F, int theta) {
  if (F.is_zero(lambda)) fail(Errc::ZeroLambda, "torus parameter must be nonzero");
  Matrix m = Matrix::identity(F, kind.dim());
  m.at(index_map(kind, kind.l), index_map(kind, kind.l)) = lambda;
  m.at(index_map(kind, -kind.l), index_map(kind, -kind.l)) = F.inv(lambda);
  if (kind.family == GroupFamily::OOdd) m.at(0, 0) = F.from_int(theta);
  return m;
}

std::string word_to_text(const Word& w, const FieldCtx& F) {
  std::ostringstream out;
  for (const auto& s : w) {
    if (s.is_wl)
      out << "wl\n";
    else
      out << "x " << s.i << ' ' << s.j << ' ' << F.str(s.t) << '\n';
  }
  return out.str();
}

Word word_from_text(const FieldCtx& F, std::istream& in, size_t count) {
  Word w;
  w.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    std::string tag;
    if (!(in >> tag)) fail(Errc::ParseError, "word ended early");
    if (tag == "wl") {
      w.push_back(GenSymbol::wl());
      continue;
    }
    if (tag != "x") fail(Errc::ParseError, "bad word line tag '" + tag + "'");
    int i = 0, j = 0;
    std::string tok;
    if (!(in >> i >> j >> tok)) fail(Errc::ParseError, "bad symbol line");
    w.push_back(GenSymbol::x(i, j, F.parse(tok)));
  }
  return w;
}

Word word_from_text(const FieldCtx& F, const std::string& text) {
  std::istringstream in(text);
  Word w;
  std::string tag;
  while (in >> tag) {
    if (tag == "wl") {
      w.push_back(GenSymbol::wl());
      continue;
    }
    if (tag != "x") fail(Errc::ParseError, "bad word line tag '" + tag + "'");
    int i = 0, j = 0;
    std::string tok;
    if (!(in >> i >> j >> tok)) fail(Errc::ParseError, "bad symbol line");
    w.push_back(GenSymbol::x(i, j, F.parse(tok)));
  }
  return w;
}

}  // namespace chevelim
