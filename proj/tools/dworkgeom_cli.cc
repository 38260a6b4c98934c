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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dworkgeom/errors.h"
#include "dworkgeom/named_groups.h"
#include "report.h"

using namespace dworkgeom;
using report::Json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct Options {
  std::optional<int> n;
  std::optional<int> dim;
  std::optional<int> deg;
  std::string group;
  std::string element;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::size_t cap = Subgroup::kDefaultCap;
  bool enumerate = false;
  std::string lattice;
};

void emit(const Options& o, const Json& env, const std::string& md) {
  if (o.format == "md")
    std::cout << md;
  else
    std::cout << env.dump(2) << "\n";
}

int run_hodge(const Options& o) {
  HypersurfaceClass cls;
  if (o.n) {
    if (o.dim || o.deg) throw InputError("use either --n or --dim/--deg");
    cls = {*o.n - 1, *o.n + 1};
  } else if (o.dim && o.deg) {
    cls = {*o.dim, *o.deg};
  } else {
    throw InputError("hodge needs --n or both --dim and --deg");
  }
  const HodgeDiamond h = hodge_diamond(cls);
  Json inputs = {{"dim", cls.m}, {"deg", cls.d}};
  emit(o, report::envelope("hodge", inputs, o.seed, report::hodge_json(h)), report::hodge_md(h));
  return 0;
}

int run_singular(const Options& o) {
  if (!o.n) throw InputError("singular needs --n");
  const SingularFiberReport r = singular_fibers(*o.n, o.enumerate);
  Json env = report::envelope("singular", {{"n", *o.n}, {"enumerate", o.enumerate}}, o.seed, report::singular_json(r));
  std::string md = "## Singular fibers, n = " + std::to_string(*o.n) + "\n\n";
  for (const auto& f : r.fibers)
    md += "lambda = xi^" + std::to_string(f.r) + ": " + f.node_count.get_str() + " nodes\n";
  emit(o, env, md);
  return 0;
}

int run_fixed(const Options& o) {
  const int n = o.n.value_or(4);
  if (o.element.empty()) throw InputError("fixed needs --element");
  const auto gens = parse_group_spec(n, o.element);
  if (gens.size() != 1) throw InputError("--element takes a single group element");
  const DworkPencil pencil(n);
  const FixedLocusReport r = fixed_locus(gens[0], pencil, LambdaPolicy{o.seed});
  emit(o, report::envelope("fixed", {{"n", n}, {"element", gens[0].to_string()}}, o.seed, report::fixed_json(r)),
       report::fixed_md(r));
  return 0;
}

int run_quotient(const Options& o) {
  const int n = o.n.value_or(4);
  if (o.group.empty()) throw InputError("quotient needs --group");
  const NamedGroup ng = resolve_group(n, o.group);
  for (const auto& g : ng.generators)
    if (!g.preserves_period()) throw InputError("generator " + g.to_string() + " does not preserve the period");
  const Subgroup g = Subgroup::generate(n, ng.generators, o.cap);
  const OrbifoldHodge h = chen_ruan(g, DworkPencil(n), LambdaPolicy{o.seed});
  Json gens = Json::array();
  for (const auto& x : ng.generators) gens.push_back(x.to_string());
  Json inputs = {{"n", n}, {"group", ng.name}, {"generators", gens}};
  emit(o, report::envelope("quotient", inputs, o.seed, report::quotient_json(h)), report::quotient_md(ng.name, h));
  return 0;
}

int run_wps(const Options& o) {
  if (!o.n) throw InputError("wps needs --n");
  const WellFormedReport wf = wellformed_check(WeightSystem::symmetric_quotient(*o.n));
  const TerminalityWitness tw = terminality_verdict(*o.n);
  emit(o, report::envelope("wps", {{"n", *o.n}}, o.seed, report::wps_json(wf, tw)), report::wps_md(*o.n, wf, tw));
  return 0;
}

int run_lattice(const Options& o) {
  const std::string& what = o.lattice;
  Json results;
  std::string md;
  auto put = [&](const std::string& title, const IntegralLattice& l) {
    results["lattice"] = report::lattice_json(l);
    md += report::lattice_md(title, l);
  };
  if (what == "lines") {
    const auto lines = lines_on_fermat();
    const IntegralLattice l = line_intersection_matrix();
    Json lj = Json::array();
    for (const auto& x : lines) lj.push_back({{"index", report::num(static_cast<long>(x.index))},
                  {"family", report::num(static_cast<long>(x.family))},
                  {"a", report::num(static_cast<long>(x.a))},
                  {"b", report::num(static_cast<long>(x.b))}});
    results["lines"] = std::move(lj);
    results["count"] = report::num(static_cast<long>(lines.size()));
    put("Intersection matrix of the 48 lines", l);
  } else if (what == "ns-fermat") {
    put("NS(F)", ns_fermat());
  } else if (what == "omega-H3" || what == "omega-A4" || what == "omega-S4") {
    const LatticeGroupAction act = what == "omega-H3" ? h3_action() : what == "omega-A4" ? a4_action() : s4_action();
    const Sublattice om = coinvariant_lattice(act);
    results["group_order"] = report::num(static_cast<long>(act.group_order));
    Json gens = Json::array();
    for (const auto& g : act.generators) gens.push_back(g.to_string());
    results["generators"] = std::move(gens);
    results["invariant_rank"] = report::num(static_cast<long>(invariant_lattice(act).basis.cols()));
    put("Omega_" + act.name, om.lattice);
  } else if (what == "ns-xlambda") {
    const XLambdaReport x = ns_xlambda();
    results["det_h_plus_omega"] = report::num(x.det_h_plus_omega);
    results["det_ratio"] = report::num(x.det_ratio);
    Json v = Json::array();
    for (const auto& c : x.v) v.push_back(report::num(c));
    results["v"] = std::move(v);
    results["v_square"] = report::num(x.v_square);
    results["equals_v_perp"] = x.equals_v_perp;
    put("NS(X_lambda)", x.ns.lattice);
  } else if (what == "kummer-test") {
    const IntegralLattice t = transcendental_xlambda();
    const HalvingResult r = twice_lattice_test(t);
    results["transcendental"] = report::lattice_json(t);
    results["halvable"] = r.halvable;
    results["half_integral"] = r.half_integral;
    results["even"] = r.even;
    results["nikulin"] = nikulin_embedding_check(19, 1);
    md += report::lattice_md("T(X_lambda)", t);
    md += std::string("\nhalvable: ") + (r.halvable ? "yes" : "no") + ", L even: " + (r.even ? "yes" : "no") + "\n";
    if (r.half) {
      results["half"] = report::lattice_json(*r.half);
      md += report::lattice_md("L with T = L(2)", *r.half);
    }
  } else {
    throw InputError("unknown lattice subcommand: " + what);
  }
  emit(o, report::envelope("lattice", {{"subcommand", what}}, o.seed, results), md);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dwork pencil geometry: Hodge numbers, fixed loci, orbifold quotients, WPS and K3 lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--lambda-seed", o.seed, "seed for the lambda specializations")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();

  auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a smooth hypersurface");
  hodge->add_option("--n", o.n, "Dwork pencil in P^n");
  hodge->add_option("--dim", o.dim, "dimension of the hypersurface");
  hodge->add_option("--deg", o.deg, "degree of the hypersurface");

  auto* singular = app.add_subcommand("singular", "singular fibers of the pencil");
  singular->add_option("--n", o.n, "Dwork pencil in P^n")->required();
  singular->add_flag("--enumerate", o.enumerate, "list the nodes (n <= 4)");

  auto* fixed = app.add_subcommand("fixed", "fixed locus of one element on X_lambda");
  fixed->add_option("--n", o.n, "Dwork pencil in P^n");
  fixed->add_option("--element", o.element, "element, e.g. \"(12)(34)\" or \"h(0,0,1,1,3)\"")->required();

  auto* quotient = app.add_subcommand("quotient", "orbifold Hodge numbers of X_lambda / G");
  quotient->add_option("--n", o.n, "Dwork pencil in P^n (4)");
  quotient->add_option("--group", o.group, "named group or generator list")->required();
  quotient->add_option("--cap", o.cap, "maximal group order")->capture_default_str();

  auto* wps = app.add_subcommand("wps", "well-formedness and terminality in weighted projective space");
  wps->add_option("--n", o.n, "n")->required();

  auto* lattice = app.add_subcommand("lattice", "lattices on the Fermat quartic and X_lambda");
  lattice->add_option("what", o.lattice, "which lattice")
      ->required()
      ->check(CLI::IsMember({"lines", "ns-fermat", "omega-H3", "omega-A4", "omega-S4", "ns-xlambda", "kummer-test"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (*hodge) return run_hodge(o);
    if (*singular) return run_singular(o);
    if (*fixed) return run_fixed(o);
    if (*quotient) return run_quotient(o);
    if (*wps) return run_wps(o);
    if (*lattice) return run_lattice(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
