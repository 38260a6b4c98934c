// Copyright 2026 The dworkgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dworkgeom/k3.h"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>

#include "dworkgeom/cyclo_matrix.h"
#include "dworkgeom/errors.h"

namespace dworkgeom {

namespace {

constexpr int kConductor = 8;
constexpr int kLines = 48;

CyclotomicNumber xi(long k) { return CyclotomicNumber::root_of_unity(kConductor, k); }
CyclotomicNumber zero8() { return CyclotomicNumber::zero(kConductor); }
CyclotomicNumber one8() { return CyclotomicNumber::one(kConductor); }

MultiPoly fermat_quartic() {
  MultiPoly f(4, kConductor);
  for (int i = 0; i < 4; ++i) {
    MultiPoly::Exponent e(4, 0);
    e[i] = 4;
    f.add_term(e, one8());
  }
  return f;
}

bool same_line(const std::array<CycloVector, 2>& p, const std::array<CycloVector, 2>& q) {
  return cyclo_rank({p[0], p[1], q[0], q[1]}) == 2;
}

std::string line_label(int i) { return "l" + std::to_string(i); }

IntMatrix columns_to_matrix(const std::vector<std::vector<BigInt>>& cols, int rows) {
  return IntMatrix::from_columns(cols, rows);
}

const IntegralLattice& cached_lines() {
  static std::once_flag once;
  static IntegralLattice lat;
  std::call_once(once, [] {
    const auto lines = lines_on_fermat();
    IntMatrix g(kLines, kLines);
    std::vector<std::string> labels;
    for (int i = 0; i < kLines; ++i) {
      labels.push_back(line_label(i + 1));
      g(i, i) = -2;
      for (int j = i + 1; j < kLines; ++j) {
        const int meet = lines_meet(lines[i], lines[j]) ? 1 : 0;
        g(i, j) = meet;
        g(j, i) = meet;
      }
    }
    lat = IntegralLattice::make(std::move(labels), std::move(g));
  });
  return lat;
}

const std::vector<std::vector<BigInt>>& cached_line_coordinates() {
  static std::once_flag once;
  static std::vector<std::vector<BigInt>> coords;
  std::call_once(once, [] {
    const IntegralLattice& all = cached_lines();
    const auto& basis = ns_basis_lines();
    std::vector<int> idx;
    for (int b : basis) idx.push_back(b - 1);
    const IntMatrix gb = all.gram.submatrix(idx, idx);
    for (int l = 0; l < kLines; ++l) {
      std::vector<BigInt> rhs;
      for (int b : idx) rhs.push_back(all.gram(b, l));
      const auto sol = solve_rational(gb, rhs);
      if (!sol) throw ComputationError("line " + line_label(l + 1) + " is not in the span of the NS(F) basis");
      std::vector<BigInt> c;
      for (const auto& q : *sol) {
        if (q.get_den() != 1) throw ComputationError("line " + line_label(l + 1) + " has non-integral NS(F) coordinates");
        c.push_back(q.get_num());
      }
      coords.push_back(std::move(c));
    }
  });
  return coords;
}

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  // p after q
  std::vector<int> r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

std::vector<FermatLine> lines_on_fermat() {
  std::vector<FermatLine> out;
  const MultiPoly f = fermat_quartic();
  for (int family = 0; family < 3; ++family) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        FermatLine l;
        l.index = 4 * a + b + 16 * family;
        l.family = family;
        l.a = a;
        l.b = b;
        const CyclotomicNumber u = xi(2 * a + 1), w = xi(2 * b + 1), z = zero8(), o = one8();
        if (family == 0) {
          l.span = {CycloVector{u, o, z, z}, CycloVector{z, z, o, w}};
        } else if (family == 1) {
          l.span = {CycloVector{o, z, z, w}, CycloVector{z, u, o, z}};
        } else {
          l.span = {CycloVector{o, z, u, z}, CycloVector{z, o, z, w}};
        }
        if (!poly_restrict(f, {l.span[0], l.span[1]}).is_zero())
          throw ComputationError("line " + line_label(l.index) + " does not lie on the Fermat quartic");
        out.push_back(std::move(l));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FermatLine& p, const FermatLine& q) { return p.index < q.index; });
  return out;
}

bool lines_meet(const FermatLine& p, const FermatLine& q) {
  const int r = cyclo_rank({p.span[0], p.span[1], q.span[0], q.span[1]});
  if (r == 2) throw InputError("lines_meet called on equal lines");
  return r < 4;
}

IntegralLattice IntegralLattice::make(std::vector<std::string> labels, IntMatrix gram) {
  if (!gram.is_symmetric()) throw InputError("Gram matrix is not symmetric");
  if (static_cast<int>(labels.size()) != gram.rows()) throw InputError("one label per basis vector is required");
  IntegralLattice l;
  l.labels = std::move(labels);
  l.gram = std::move(gram);
  l.det = determinant(l.gram);
  const SmithForm s = smith_normal_form(l.gram);
  for (const auto& d : s.invariant_factors)
    if (d != 1) l.discriminant_group.push_back(abs(d));
  l.sig = signature(l.gram);
  return l;
}

bool IntegralLattice::is_even() const {
  for (int i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

IntegralLattice line_intersection_matrix() { return cached_lines(); }

const std::vector<int>& ns_basis_lines() {
  static const std::vector<int> basis = {1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 17, 18, 19, 21, 22, 23, 33, 34, 35, 37};
  return basis;
}

IntegralLattice ns_fermat() {
  const IntegralLattice& all = cached_lines();
  std::vector<int> idx;
  std::vector<std::string> labels;
  for (int b : ns_basis_lines()) {
    idx.push_back(b - 1);
    labels.push_back(line_label(b));
  }
  IntegralLattice ns = IntegralLattice::make(std::move(labels), all.gram.submatrix(idx, idx));
  if (ns.det != -64) throw ComputationError("NS(F) basis has determinant " + ns.det.get_str() + ", expected -64");
  return ns;
}

std::vector<BigInt> line_coordinates(int line) {
  if (line < 1 || line > kLines) throw InputError("line index out of range: " + std::to_string(line));
  return cached_line_coordinates()[line - 1];
}

MonomialMap MonomialMap::identity() { return {{0, 1, 2, 3}, {0, 0, 0, 0}}; }

MonomialMap MonomialMap::parse(const std::string& text) {
  MonomialMap m = identity();
  const auto semi = text.find(';');
  const std::string cyc = text.substr(0, semi);
  size_t i = 0;
  while (i < cyc.size()) {
    if (std::isspace(static_cast<unsigned char>(cyc[i]))) {
      ++i;
      continue;
    }
    if (cyc[i] != '(') throw InputError("bad cycle notation: " + text);
    const auto close = cyc.find(')', i);
    if (close == std::string::npos) throw InputError("unbalanced cycle: " + text);
    std::vector<int> c;
    for (size_t j = i + 1; j < close; ++j) {
      if (std::isspace(static_cast<unsigned char>(cyc[j]))) continue;
      if (cyc[j] < '1' || cyc[j] > '4') throw InputError("cycle entries must be 1..4: " + text);
      c.push_back(cyc[j] - '1');
    }
    std::vector<int> step = {0, 1, 2, 3};
    for (size_t k = 0; k < c.size(); ++k) step[c[k]] = c[(k + 1) % c.size()];
    m.perm = compose_perm(step, m.perm);
    i = close + 1;
  }
  if (semi != std::string::npos) {
    std::vector<int> e;
    std::string rest = text.substr(semi + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        e.push_back(((std::stoi(tok) % kConductor) + kConductor) % kConductor);
      } catch (const std::exception&) {
        throw InputError("bad exponent list: " + text);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (e.size() != 4) throw InputError("four exponents are required: " + text);
    m.exps = e;
  }
  return m;
}

CycloVector MonomialMap::apply(const CycloVector& v) const {
  CycloVector out(4, zero8());
  for (int i = 0; i < 4; ++i) out[perm[i]] = xi(exps[i]) * v[i].lift(kConductor);
  return out;
}

std::string MonomialMap::to_string() const {
  std::string s;
  std::vector<bool> seen(4, false);
  for (int i = 0; i < 4; ++i) {
    if (seen[i] || perm[i] == i) continue;
    s += "(";
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  if (s.empty()) s = "()";
  s += ";";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(exps[i]);
  return s;
}

std::vector<int> line_permutation(const MonomialMap& g) {
  const auto lines = lines_on_fermat();
  std::vector<int> img(kLines, -1);
  std::vector<bool> hit(kLines, false);
  for (int i = 0; i < kLines; ++i) {
    const std::array<CycloVector, 2> moved = {g.apply(lines[i].span[0]), g.apply(lines[i].span[1])};
    for (int j = 0; j < kLines; ++j) {
      if (same_line(moved, lines[j].span)) {
        img[i] = j;
        break;
      }
    }
    if (img[i] < 0) throw ComputationError(g.to_string() + " does not map " + line_label(i + 1) + " to a line");
    if (hit[img[i]]) throw ComputationError(g.to_string() + " is not injective on lines");
    hit[img[i]] = true;
  }
  return img;
}

LatticeGroupAction action_on_ns(const std::string& name, const std::vector<MonomialMap>& gens) {
  LatticeGroupAction act;
  act.name = name;
  act.generators = gens;
  const IntegralLattice ns = ns_fermat();
  const auto& basis = ns_basis_lines();
  for (const auto& g : gens) {
    const auto perm = line_permutation(g);
    std::vector<std::vector<BigInt>> cols;
    for (int b : basis) cols.push_back(line_coordinates(perm[b - 1] + 1));
    IntMatrix m = columns_to_matrix(cols, ns.rank());
    if (!(m.transpose() * ns.gram * m == ns.gram))
      throw ComputationError(g.to_string() + " does not preserve the intersection form");
    act.line_perms.push_back(perm);
    act.matrices.push_back(std::move(m));
  }
  // Order of the group generated on the 48 lines.
  std::vector<int> id(kLines);
  for (int i = 0; i < kLines; ++i) id[i] = i;
  std::set<std::vector<int>> seen = {id};
  std::vector<std::vector<int>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : act.line_perms) {
        auto q = compose_perm(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  act.group_order = seen.size();
  return act;
}

LatticeGroupAction h3_action() {
  // diag(i, -i... ) written with xi_8 exponents: i = xi_8^2.
  return action_on_ns("H3", {MonomialMap::parse(";2,6,0,0"), MonomialMap::parse(";2,0,6,0")});
}

LatticeGroupAction s4_action() {
  return action_on_ns("S4", {MonomialMap::parse("(123)"), MonomialMap::parse("(12);0,0,0,4"),
                             MonomialMap::parse(";0,0,4,4")});
}

LatticeGroupAction a4_action() {
  return action_on_ns("A4", {MonomialMap::parse("(123)"), MonomialMap::parse(";0,0,4,4"),
                             MonomialMap::parse(";0,4,0,4")});
}

Sublattice sublattice(const IntMatrix& basis, const std::string& prefix) {
  const IntegralLattice ns = ns_fermat();
  if (basis.rows() != ns.rank()) throw InputError("sublattice basis must use NS(F) coordinates");
  std::vector<std::string> labels;
  for (int j = 0; j < basis.cols(); ++j) labels.push_back(prefix + std::to_string(j + 1));
  return {basis, IntegralLattice::make(std::move(labels), basis.transpose() * ns.gram * basis)};
}

Sublattice span(const IntMatrix& vecs, const std::string& prefix) {
  const SmithForm s = smith_normal_form(vecs);
  const IntMatrix av = vecs * s.v;
  std::vector<int> rows(vecs.rows()), cols(s.rank);
  for (int i = 0; i < vecs.rows(); ++i) rows[i] = i;
  for (int j = 0; j < s.rank; ++j) cols[j] = j;
  return sublattice(av.submatrix(rows, cols), prefix);
}

Sublattice invariant_lattice(const LatticeGroupAction& action) {
  const int r = ns_fermat().rank();
  IntMatrix stacked(r * static_cast<int>(action.matrices.size()), r);
  for (size_t g = 0; g < action.matrices.size(); ++g) {
    const IntMatrix d = action.matrices[g] - IntMatrix::identity(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) stacked(static_cast<int>(g) * r + i, j) = d(i, j);
  }
  return sublattice(integer_kernel(stacked), "inv");
}

Sublattice orthogonal_complement(const IntMatrix& vecs, const std::string& prefix) {
  const IntegralLattice ns = ns_fermat();
  return sublattice(integer_kernel(vecs.transpose() * ns.gram), prefix);
}

Sublattice coinvariant_lattice(const LatticeGroupAction& action) {
  return orthogonal_complement(invariant_lattice(action).basis, "w");
}

bool contained_in(const IntMatrix& sub, const IntMatrix& super) {
  for (int j = 0; j < sub.cols(); ++j) {
    const auto sol = solve_rational(super, sub.column(j));
    if (!sol) return false;
    for (const auto& q : *sol)
      if (q.get_den() != 1) return false;
  }
  return true;
}

const std::vector<LineCombination>& omega_h3_generators() {
  static const std::vector<LineCombination> b = {
      {{-1, 2}, {1, 37}},  {{-1, 1}, {1, 35}}, {{-1, 2}, {1, 34}}, {{-1, 1}, {1, 33}}, {{-1, 2}, {1, 23}},
      {{-1, 1}, {1, 22}},  {{-1, 2}, {1, 21}}, {{-1, 1}, {1, 19}}, {{1, 18}, {-1, 2}}, {{-1, 1}, {1, 17}},
      {{-1, 1}, {1, 11}},  {{1, 10}, {-1, 2}}, {{-1, 1}, {1, 9}},  {{-1, 2}, {1, 7}},  {{-1, 1}, {1, 6}},
      {{-1, 2}, {1, 5}},   {{-1, 2}, {1, 4}},  {{-1, 1}, {1, 3}}};
  return b;
}

const std::vector<LineCombination>& omega_s4_generators() {
  static const std::vector<LineCombination> d = {
      {{1, 37}, {-1, 5}},
      {{1, 2}, {-1, 22}, {-1, 23}, {1, 35}},
      {{-1, 2}, {1, 34}},
      {{-1, 1}, {1, 33}},
      {{-1, 1}, {1, 17}},
      {{-1, 17}, {-1, 2}, {1, 22}, {1, 5}},
      {{-1, 2}, {1, 21}, {1, 23}, {-1, 4}},
      {{1, 19}, {-1, 21}, {-1, 35}, {1, 37}},
      {{1, 18}, {-1, 2}},
      {{1, 1}, {-1, 17}, {-1, 21}, {1, 5}},
      {{-1, 1}, {1, 11}},
      {{1, 10}, {-1, 4}},
      {{-1, 35}, {1, 9}},
      {{-1, 2}, {-1, 4}, {1, 5}, {1, 7}},
      {{-1, 1}, {-1, 34}, {1, 37}, {1, 6}},
      {{1, 3}, {-1, 35}},
      {{-1, 1}, {1, 37}}};
  return d;
}

std::vector<BigInt> combination_coordinates(const LineCombination& c) {
  std::vector<BigInt> v(ns_basis_lines().size(), 0);
  for (const auto& [coef, line] : c) {
    const auto lc = line_coordinates(line);
    for (size_t i = 0; i < v.size(); ++i) v[i] += coef * lc[i];
  }
  return v;
}

IntMatrix combination_matrix(const std::vector<LineCombination>& cs) {
  std::vector<std::vector<BigInt>> cols;
  for (const auto& c : cs) cols.push_back(combination_coordinates(c));
  return columns_to_matrix(cols, static_cast<int>(ns_basis_lines().size()));
}

XLambdaReport ns_xlambda() {
  XLambdaReport r;
  const int dim = static_cast<int>(ns_basis_lines().size());
  const auto h = combination_coordinates({{1, 1}, {1, 2}, {1, 3}, {1, 4}});
  std::vector<std::vector<BigInt>> b;
  for (const auto& c : omega_h3_generators()) b.push_back(combination_coordinates(c));

  std::vector<std::vector<BigInt>> hb = {h};
  hb.insert(hb.end(), b.begin(), b.end());
  const Sublattice h_omega = sublattice(columns_to_matrix(hb, dim), "hb");
  r.det_h_plus_omega = h_omega.lattice.det;

  std::vector<std::vector<BigInt>> n = {h};
  for (int i = 0; i < 17; ++i) {
    std::vector<BigInt> v = h;
    for (int k = 0; k < dim; ++k) v[k] += b[i][k];
    n.push_back(std::move(v));
  }
  std::vector<BigInt> n19(dim);
  for (int k = 0; k < dim; ++k) {
    const BigInt s = h[k] + b[16][k] + b[17][k];
    if (s % 2 != 0) throw ComputationError("n19 = (h + b17 + b18)/2 is not integral in NS(F)");
    n19[k] = s / 2;
  }
  n.push_back(std::move(n19));
  r.ns = sublattice(columns_to_matrix(n, dim), "n");
  if (r.ns.lattice.det == 0) throw ComputationError("the n_i are linearly dependent");
  if (r.det_h_plus_omega % r.ns.lattice.det != 0) throw ComputationError("determinant ratio is not integral");
  r.det_ratio = r.det_h_plus_omega / r.ns.lattice.det;

  const Sublattice comp = orthogonal_complement(h_omega.basis, "v");
  if (comp.basis.cols() != 1) throw ComputationError("complement of Z h + Omega_H3 is not of rank one");
  r.v = comp.basis.column(0);
  r.v_square = comp.lattice.gram(0, 0);
  const Sublattice vperp = orthogonal_complement(comp.basis, "p");
  r.equals_v_perp = contained_in(r.ns.basis, vperp.basis) && contained_in(vperp.basis, r.ns.basis);
  return r;
}

IntegralLattice transcendental_fermat() { return IntegralLattice::make({"t1", "t2"}, IntMatrix{{8, 0}, {0, 8}}); }

IntegralLattice transcendental_xlambda() {
  const XLambdaReport x = ns_xlambda();
  IntMatrix g(3, 3);
  g(0, 0) = 8;
  g(1, 1) = 8;
  g(2, 2) = x.v_square;
  IntegralLattice t = IntegralLattice::make({"t1", "t2", "v"}, std::move(g));
  if (abs(t.det) != abs(x.ns.lattice.det))
    throw ComputationError("T(F) + Z v has |det| " + BigInt(abs(t.det)).get_str() + " but NS(X_lambda) has " +
                           BigInt(abs(x.ns.lattice.det)).get_str());
  return t;
}

DiscriminantForm discriminant_form(const IntegralLattice& l) {
  const SmithForm s = smith_normal_form(l.gram);
  if (s.rank != l.rank()) throw InputError("discriminant form needs a nondegenerate lattice");
  DiscriminantForm f;
  const int r = l.rank();
  for (int i = 0; i < r; ++i) {
    const BigInt d = abs(s.d(i, i));
    if (d == 1) continue;
    f.orders.push_back(d);
    std::vector<BigRational> beta(r);
    for (int k = 0; k < r; ++k) {
      beta[k] = BigRational(s.v(k, i), d);
      beta[k].canonicalize();
    }
    f.generators.push_back(std::move(beta));
  }
  const size_t m = f.generators.size();
  f.form.assign(m, std::vector<BigRational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      BigRational v = 0;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) v += f.generators[i][a] * BigRational(l.gram(a, b)) * f.generators[j][b];
      const BigRational mod = i == j ? BigRational(2) : BigRational(1);
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), BigRational(v / mod).get_num_mpz_t(), BigRational(v / mod).get_den_mpz_t());
      v -= mod * BigRational(q);
      f.form[i][j] = v;
    }
  return f;
}

bool nikulin_embedding_check(int rank, int length) { return length <= 22 - rank - 2; }

HalvingResult twice_lattice_test(const IntegralLattice& t) {
  if (t.length() != t.rank())
    throw InputError("twice_lattice_test needs rank equal to the length of the discriminant group");
  HalvingResult res;
  const SmithForm s = smith_normal_form(t.gram);
  const int r = t.rank();
  for (int i = 0; i < r; ++i)
    if (abs(s.d(i, i)) % 2 != 0) return res;  // not of the form Z/2d
  // d_i beta_i = V e_i / 2
  const IntMatrix w = s.v.transpose() * t.gram * s.v;
  res.half_integral = true;
  res.even = true;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      // b = w_ij / 4 must lie in 1/2 Z; on the diagonal in Z
      if (w(i, j) % 2 != 0) res.half_integral = false;
      if (i == j && w(i, i) % 4 != 0) res.even = false;
    }
  if (!res.half_integral) res.even = false;
  res.halvable = res.half_integral && res.even;
  if (!res.halvable) return res;
  IntMatrix half(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) half(i, j) = t.gram(i, j) / 2;
  std::vector<std::string> labels;
  for (const auto& lbl : t.labels) labels.push_back(lbl + "/2");
  res.half = IntegralLattice::make(std::move(labels), std::move(half));
  return res;
}

}  // namespace dworkgeom
