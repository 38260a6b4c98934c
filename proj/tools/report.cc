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

#include "report.h"

#include <sstream>

namespace dworkgeom::report {

namespace {

const char* kComputed = "computed";

Json wrap(Json v) { return Json{{"value", std::move(v)}, {"provenance", kComputed}}; }

std::string grid_row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s + "\n";
}

Json int_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p())
        r.push_back(m(i, j).get_si());
      else
        r.push_back(m(i, j).get_str());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json num(long v) { return wrap(v); }

Json num(const BigInt& v) {
  if (v.fits_slong_p()) return wrap(v.get_si());
  return wrap(v.get_str());
}

Json num(const BigRational& v) {
  if (v.get_den() == 1) return num(BigInt(v.get_num()));
  return wrap(v.get_str());
}

Json envelope(const std::string& command, Json inputs, std::uint64_t seed, Json results) {
  Json e;
  e["schema"] = kSchema;
  e["version"] = "1.0.0";
  e["command"] = command;
  e["inputs"] = std::move(inputs);
  e["seed"] = seed;
  e["results"] = std::move(results);
  return e;
}

Json hodge_json(const HodgeDiamond& h) {
  Json j;
  j["dimension"] = num(static_cast<long>(h.m));
  Json rows = Json::array();
  for (const auto& row : h.h) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(num(x));
    rows.push_back(std::move(r));
  }
  j["h"] = std::move(rows);
  j["euler"] = num(h.euler);
  Json betti = Json::array();
  for (int k = 0; k <= 2 * h.m; ++k) betti.push_back(num(h.betti(k)));
  j["betti"] = std::move(betti);
  return j;
}

std::string hodge_md(const HodgeDiamond& h) {
  std::ostringstream os;
  os << "## Hodge numbers h^{p,q}, dimension " << h.m << "\n\n";
  std::vector<std::string> head = {"p \\ q"};
  std::vector<std::string> sep = {"---"};
  for (int q = 0; q <= h.m; ++q) {
    head.push_back(std::to_string(q));
    sep.push_back("---");
  }
  os << grid_row(head) << grid_row(sep);
  for (int p = 0; p <= h.m; ++p) {
    std::vector<std::string> r = {std::to_string(p)};
    for (int q = 0; q <= h.m; ++q) r.push_back(h.h[p][q].get_str());
    os << grid_row(r);
  }
  os << "\nEuler characteristic: " << h.euler.get_str() << "\n";
  return os.str();
}

Json singular_json(const SingularFiberReport& r) {
  Json j;
  j["n"] = num(static_cast<long>(r.n));
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json fj;
    fj["r"] = num(static_cast<long>(f.r));
    fj["nodes"] = num(f.node_count);
    if (!f.nodes.empty()) {
      // Exponents of xi_{n+1}, last coordinate 1.
      Json nl = Json::array();
      for (const auto& node : f.nodes) {
        Json e = Json::array();
        for (int k : node) e.push_back(num(static_cast<long>(k)));
        nl.push_back(std::move(e));
      }
      fj["node_list"] = std::move(nl);
    }
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

Json fixed_json(const FixedLocusReport& r) {
  Json j;
  j["element"] = r.element.to_string();
  j["order"] = num(static_cast<long>(r.element.order()));
  Json spec = Json::array();
  for (const auto& s : r.eigen.spaces) spec.push_back({{"angle", num(s.angle)}, {"dim", num(static_cast<long>(s.dim()))}});
  j["eigenspaces"] = std::move(spec);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["kind"] = to_string(c.kind);
    cj["eigenspace"] = num(static_cast<long>(c.eigenspace));
    cj["count"] = num(static_cast<long>(c.count));
    cj["genus"] = num(static_cast<long>(c.genus));
    cj["age"] = num(age(r, c));
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["signature"] = r.signature();
  j["euler"] = num(r.euler);
  return j;
}

std::string fixed_md(const FixedLocusReport& r) {
  std::ostringstream os;
  os << "## Fixed locus of " << r.element.to_string() << "\n\n";
  os << grid_row({"kind", "eigen-angle", "count", "genus", "age"}) << grid_row({"---", "---", "---", "---", "---"});
  for (const auto& c : r.components)
    os << grid_row({to_string(c.kind), r.eigen.spaces[c.eigenspace].angle.get_str(), std::to_string(c.count),
                    std::to_string(c.genus), age(r, c).get_str()});
  os << "\nSignature: " << r.signature() << ", Euler number " << r.euler << "\n";
  return os.str();
}

Json quotient_json(const OrbifoldHodge& h) {
  Json j;
  j["group_order"] = num(static_cast<long>(h.group_order));
  j["classes"] = num(static_cast<long>(h.class_count));
  j["h11"] = num(h.h11());
  j["h21"] = num(h.h21());
  j["euler"] = num(h.euler());
  Json grid = Json::array();
  for (const auto& row : h.grid) {
    Json r = Json::array();
    for (long x : row) r.push_back(num(x));
    grid.push_back(std::move(r));
  }
  j["grid"] = std::move(grid);
  j["invariant"] = {{"p11", num(h.invariant.p11)},
                    {"p12", num(h.invariant.p12)},
                    {"lefschetz_sum", num(h.invariant.lefschetz_sum)}};
  Json sectors = Json::array();
  for (const auto& s : h.sectors) {
    Json sj;
    sj["representative"] = s.representative;
    sj["class_size"] = num(static_cast<long>(s.class_size));
    sj["centralizer_order"] = num(static_cast<long>(s.centralizer_order));
    sj["kind"] = to_string(s.kind);
    Json angles = Json::array();
    for (const auto& a : s.angles) angles.push_back(num(a));
    sj["angles"] = std::move(angles);
    sj["age"] = num(s.age);
    sj["count"] = num(s.count);
    if (s.kind != ComponentKind::kIsolatedPoints) {
      sj["genus"] = num(static_cast<long>(s.genus));
      sj["quotient_genus"] = num(static_cast<long>(s.quotient_genus));
    }
    sj["delta_h11"] = num(s.delta_h11);
    sj["delta_h21"] = num(s.delta_h21);
    sectors.push_back(std::move(sj));
  }
  j["sectors"] = std::move(sectors);
  return j;
}

std::string quotient_md(const std::string& group, const OrbifoldHodge& h) {
  std::ostringstream os;
  os << "## Crepant resolution of X/G, G = " << group << ", |G| = " << h.group_order << "\n\n";
  os << grid_row({"G", "h^{1,1}", "h^{2,1}"}) << grid_row({"---", "---", "---"});
  os << grid_row({group, std::to_string(h.h11()), std::to_string(h.h21())});
  os << "\nInvariant part: p11 = " << h.invariant.p11 << ", p12 = " << h.invariant.p12 << "\n\n";
  os << grid_row({"representative", "|class|", "|C(s)|", "kind", "age", "count", "g(F/C)", "dh11", "dh21"});
  os << grid_row({"---", "---", "---", "---", "---", "---", "---", "---", "---"});
  for (const auto& s : h.sectors)
    os << grid_row({s.representative, std::to_string(s.class_size), std::to_string(s.centralizer_order),
                    to_string(s.kind), std::to_string(s.age), std::to_string(s.count),
                    s.kind == ComponentKind::kIsolatedPoints ? "-" : std::to_string(s.quotient_genus),
                    std::to_string(s.delta_h11), std::to_string(s.delta_h21)});
  return os.str();
}

Json wps_json(const WellFormedReport& wf, const TerminalityWitness& tw) {
  Json j;
  Json primes = Json::array();
  for (const auto& p : wf.primes)
    primes.push_back({{"p", num(p.p)}, {"m", num(static_cast<long>(p.m))}, {"k", num(static_cast<long>(p.k))}, {"q", num(p.q)}});
  j["primes"] = std::move(primes);
  j["well_formed"] = wf.well_formed;
  j["crepant_resolution"] = tw.has_crepant_resolution;
  if (tw.n >= 5) {
    j["witness"] = {{"k", num(3L)},
                    {"s", num(tw.s)},
                    {"t", num(tw.t)},
                    {"age_g", num(tw.age_g)},
                    {"fixed_dim", num(tw.fixed_dim)},
                    {"age_g_inverse", num(tw.age_inverse)}};
  }
  Json sectors = Json::array();
  for (const auto& s : tw.sectors) sectors.push_back({{"k", num(static_cast<long>(s.k))}, {"age", num(s.age)}});
  j["ages"] = std::move(sectors);
  return j;
}

std::string wps_md(int n, const WellFormedReport& wf, const TerminalityWitness& tw) {
  std::ostringstream os;
  os << "## W P^" << n << "(1, ..., " << n + 1 << "), one equation of degree " << n + 1 << "\n\n";
  os << grid_row({"p", "m(p)", "k(p)", "q(p)"}) << grid_row({"---", "---", "---", "---"});
  for (const auto& p : wf.primes)
    os << grid_row({std::to_string(p.p), std::to_string(p.m), std::to_string(p.k), std::to_string(p.q)});
  os << "\nWell-formed: " << (wf.well_formed ? "yes" : "no") << "\n";
  os << "Crepant resolution of the double cover: " << (tw.has_crepant_resolution ? "yes" : "no") << "\n";
  if (tw.n >= 5)
    os << "k = 3 sector: age(g) = " << tw.age_g.get_str() << ", dim Fix = " << tw.fixed_dim
       << ", age(g^-1) = " << tw.age_inverse.get_str() << "\n";
  return os.str();
}

Json lattice_json(const IntegralLattice& l) {
  Json j;
  j["labels"] = l.labels;
  j["gram"] = int_rows(l.gram);
  j["rank"] = num(static_cast<long>(l.rank()));
  j["determinant"] = num(l.det);
  Json inv = Json::array();
  for (const auto& d : l.discriminant_group) inv.push_back(num(d));
  j["invariant_factors"] = std::move(inv);
  j["signature"] = {num(static_cast<long>(l.sig.positive)), num(static_cast<long>(l.sig.negative))};
  j["even"] = l.is_even();
  // Covers the raw gram rows.
  j["provenance"] = kComputed;
  return j;
}

std::string lattice_md(const std::string& title, const IntegralLattice& l) {
  std::ostringstream os;
  os << "## " << title << "\n\n";
  os << "rank " << l.rank() << ", det " << l.det.get_str() << ", signature (" << l.sig.positive << ","
     << l.sig.negative << "), discriminant group";
  if (l.discriminant_group.empty()) os << " trivial";
  for (size_t i = 0; i < l.discriminant_group.size(); ++i)
    os << (i ? " x " : " ") << "Z/" << l.discriminant_group[i].get_str();
  os << "\n\n```\n" << l.gram.to_string() << "\n```\n";
  return os.str();
}

}  // namespace dworkgeom::report
