// Copyright 2026 The Authors.
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

#include "pregeo_cli/run.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pregeo/classify.h"
#include "pregeo/closure.h"
#include "pregeo/errors.h"
#include "pregeo/group_harness.h"
#include "pregeo/matroid.h"
#include "pregeo/plane.h"
#include "pregeo_cli/formats.h"

namespace pregeo::cli {
namespace {

const char* Bool(bool b) { return b ? "true" : "false"; }

// Tracks the worst outcome seen so far.
class Tally {
 public:
  void Add(Outcome o) {
    if (o == Outcome::kFail) fail_ = true;
    if (o == Outcome::kVacuous) vacuous_ = true;
  }
  int Exit() const {
    if (fail_) return kExitFail;
    if (vacuous_) return kExitVacuous;
    return kExitPass;
  }

 private:
  bool fail_ = false;
  bool vacuous_ = false;
};

std::string Pair(const FlatPair& p) {
  return p.first.ToString() + "," + p.second.ToString();
}

// "1,4,5" or "1 4 5" -> {1,4,5}
ElementSet ParseIndexList(const std::string& text) {
  ElementSet out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    for (std::string w; words >> w;) {
      Element value = 0;
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw InputError("bad index '" + w + "'");
      }
      out.Insert(value);
    }
  }
  return out;
}

void PrintAxiom(std::ostream& out, const char* name, const AxiomVerdict& v) {
  out << "AXIOM " << name << (v.pass ? " PASS" : " FAIL");
  if (!v.pass) {
    out << " witness=A=" << (v.set ? v.set->ToString() : "{}");
    if (v.a) out << " a=" << *v.a;
    if (v.b) out << " b=" << *v.b;
  }
  if (!v.note.empty()) out << " note=" << v.note;
  out << '\n';
}

void PrintDim(std::ostream& out, const Matroid& m) {
  const std::size_t r = m.TotalRank();
  out << "DIM dim=" << r << " geometric_dim=";
  if (r == 0) {
    out << "-1\n";
  } else {
    out << r - 1 << '\n';
  }
}

// Prints axiom lines; returns the matroid when every axiom holds.
std::optional<Matroid> VerifyAndPrint(const ClosureTable& table,
                                      std::ostream& out) {
  if (table.is_explicit() && table.added_by_normalization() > 0) {
    out << "NORMALIZE added=" << table.added_by_normalization() << '\n';
  }
  const AxiomReport report = VerifyAxioms(table);
  PrintAxiom(out, "reflexivity", report.reflexivity);
  PrintAxiom(out, "transitivity", report.transitivity);
  PrintAxiom(out, "finite_character", report.finite_character);
  PrintAxiom(out, "exchange", report.exchange);
  out << "MODE "
      << (report.mode == VerificationMode::kExhaustive ? "exhaustive"
                                                       : "sampled")
      << " subsets=" << report.subsets_checked << '\n';
  if (!report.AllPass()) return std::nullopt;
  return Matroid::Derived(table);
}

int CmdVerify(const std::string& path, std::ostream& out) {
  const std::optional<Matroid> m = VerifyAndPrint(LoadMatroid(path), out);
  if (!m) return kExitFail;
  PrintDim(out, *m);
  return kExitPass;
}

void PrintFlag(std::ostream& out, const char* name, bool value,
               const std::optional<FlatPair>& witness) {
  out << "CLASSIFY " << name << '=' << Bool(value);
  if (!value && witness) out << " witness=" << Pair(*witness);
  out << '\n';
}

int CmdClassify(const std::string& path, std::ostream& out) {
  const Matroid m = Matroid::Validate(LoadMatroid(path));
  const ClassificationReport r = Classify(m);
  PrintFlag(out, "is_geometry", r.is_geometry, std::nullopt);
  PrintFlag(out, "trivial", r.trivial, r.trivial_witness);
  PrintFlag(out, "modular", r.modular, r.modular_witness);
  PrintFlag(out, "locally_modular", r.locally_modular,
            r.locally_modular_witness);
  PrintFlag(out, "projective", r.projective(), std::nullopt);
  const LocalModularityEquivalence eq = CheckLocalModularityEquivalence(m);
  out << "CLASSIFY local_modularity_equivalence=" << Bool(eq.agree);
  if (!eq.agree && eq.non_modular_point) {
    out << " witness=" << *eq.non_modular_point;
  }
  out << '\n';
  PrintDim(out, m);
  return eq.agree ? kExitPass : kExitFail;
}

int CmdGeometrize(const std::string& path, const std::string& output,
                  std::ostream& out) {
  const Matroid m = Matroid::Validate(LoadMatroid(path));
  const Geometry g = Geometrize(m);
  if (g.empty()) {
    out << "GEOMETRY empty=true points=0\n";
    if (!output.empty()) throw InputError("empty geometry cannot be written");
    return kExitPass;
  }
  const std::size_t r = g.base->TotalRank();
  out << "GEOMETRY empty=false points=" << g.num_points() << " dim=" << r
      << " geometric_dim=" << r - 1 << '\n';
  for (std::size_t i = 0; i < g.num_points(); ++i) {
    out << "POINT " << i << " rep=" << g.representatives[i]
        << " class=" << g.classes[i].ToString() << '\n';
  }
  if (!output.empty()) {
    MatroidFile file;
    file.ground = g.num_points();
    file.kind = MatroidKind::kExplicit;
    file.flats = g.base->Flats();
    std::ofstream f(output, std::ios::binary);
    if (!f) throw InputError("cannot write " + output);
    f << SerializeMatroidFile(file);
    if (!f) throw InputError("failed writing " + output);
  }
  return kExitPass;
}

int CmdPlane(const std::string& path, const std::string& mode_name,
             const std::vector<std::string>& concur, std::ostream& out) {
  const PlaneMode mode =
      mode_name == "projective" ? PlaneMode::kProjective : PlaneMode::kAffine;
  const Geometry g = Geometrize(Matroid::Validate(LoadMatroid(path)));
  std::optional<Plane> plane;
  try {
    plane = Plane::FromGeometry(g, mode);
  } catch (const NotProjectiveError& e) {
    out << "PLANE projective=false witness=" << e.first_line() << ','
        << e.second_line() << '\n';
    return kExitFail;
  }
  out << "PLANE mode=" << mode_name << " points=" << plane->points().size()
      << " lines=" << plane->lines().size()
      << " min_points_per_line=" << plane->MinPointsPerLine()
      << " quadrangle=" << Bool(plane->HasQuadrangle()) << '\n';
  if (concur.empty()) return kExitPass;
  if (concur.size() != 3) throw InputError("--concur takes three lines");
  const ConcurrencyResult c =
      Concurrency(*plane, ParseIndexList(concur[0]), ParseIndexList(concur[1]),
                  ParseIndexList(concur[2]));
  if (c.concurrent) {
    out << "CONCURRENT point=" << *c.common_point << '\n';
  } else {
    const auto& d = *c.pairwise_meets;
    out << "NOT-CONCURRENT d1=" << d[0] << " d2=" << d[1] << " d3=" << d[2]
        << '\n';
  }
  return kExitPass;
}

struct GroupCheckArgs {
  std::string group;
  std::string matroid;
  std::string prop = "all";
  std::string base;
  std::size_t kmax = kDefaultKmax;
};

void PrintProp(std::ostream& out, const std::string& name, Outcome o,
               const std::string& witness, Tally& tally) {
  tally.Add(o);
  out << "PROP " << name << ' ' << OutcomeName(o);
  if (!witness.empty()) out << " witness=" << witness;
  out << '\n';
}

int CmdGroupCheck(const GroupCheckArgs& args, std::ostream& out) {
  FiniteGroup group = LoadGroup(args.group);
  Matroid m = Matroid::Validate(LoadMatroid(args.matroid));
  const ElementSet base = ParseIndexList(args.base);
  m.ground().Require(base, "--A");
  const GroupPregeometry gp = GroupPregeometry::Create(std::move(group), m);

  Tally tally;
  const CompatibilityVerdict& compat = gp.compatibility();
  std::string compat_witness;
  if (!compat.compatible) {
    compat_witness = "f=" + compat.automorphism->ToString() +
                     " F=" + compat.flat->ToString();
  }
  PrintProp(out, "compatibility",
            compat.compatible ? Outcome::kPass : Outcome::kFail,
            compat_witness, tally);
  if (!compat.compatible) return tally.Exit();

  const std::string& p = args.prop;
  const bool all = p == "all";
  // Under --prop all, a failed homogeneity premise turns the remaining
  // failures into VACUOUS.
  bool gate = false;
  auto outcome = [&](bool pass) {
    if (pass) return Outcome::kPass;
    return gate ? Outcome::kVacuous : Outcome::kFail;
  };

  if (all || p == "homogeneity") {
    const HomogeneityResult r = CheckFiniteHomogeneity(gp, args.kmax);
    PrintProp(out, "homogeneity", r.pass ? Outcome::kPass : Outcome::kFail,
              r.witness(), tally);
    out << "NOTE homogeneity=finite kmax=" << r.kmax
        << " infinite_dimension=unchecked\n";
    gate = all && !r.pass;
  }
  if (all || p == "generic-product") {
    const GenericProductResult r = CheckGenericProduct(gp, args.kmax);
    PrintProp(out, "generic-product", outcome(r.pass), r.witness(), tally);
  }
  if (all || p == "invariant-subgroups") {
    const InvariantSubgroupResult r = CheckInvariantSubgroups(gp, args.kmax);
    PrintProp(out, "invariant-subgroups", outcome(r.pass), r.witness(), tally);
  }
  if (all || p == "invariant-elements") {
    const InvariantElementResult r = CheckInvariantElements(gp, args.kmax);
    PrintProp(out, "invariant-elements", outcome(r.pass), r.witness(), tally);
  }
  if (all || p == "nontriviality") {
    const NontrivialityResult r = CheckNontriviality(gp);
    PrintProp(out, "nontriviality", r.outcome, "", tally);
    out << "NONTRIVIAL homogeneous=" << Bool(r.homogeneous)
        << " rank=" << r.rank << " trivial=" << Bool(r.trivial) << '\n';
  }
  if (all || p == "configuration") {
    try {
      const ConfigurationScan scan = CheckConfiguration(gp, base);
      PrintProp(out, "configuration", outcome(scan.pass()),
                scan.first_failure ? scan.first_failure->ToString() : "",
                tally);
      const ConfigurationSummary& s = scan.summary;
      out << "CONFIG total=" << s.total << " concurrent=" << s.concurrent
          << " degenerate=" << s.degenerate << " failed=" << s.failed << '\n';
    } catch (const NotProjectiveError& e) {
      PrintProp(out, "configuration", outcome(false),
                "parallel=" + e.first_line() + "," + e.second_line(), tally);
    }
  }
  if (all || p == "clcom") {
    const ClcomResult r = CheckClcomCommutativity(gp, base);
    std::string witness;
    if (r.outcome != Outcome::kPass && !r.homogeneity.pass) {
      witness = r.homogeneity.witness();
    }
    PrintProp(out, "clcom", r.outcome, witness, tally);
    out << "CLCOM homogeneity=" << (r.homogeneity.pass ? "PASS" : "FAIL")
        << " hypothesis=" << Bool(r.hypothesis);
    if (r.hypothesis_pair) {
      out << " pair=" << (*r.hypothesis_pair)[0] << ','
          << (*r.hypothesis_pair)[1];
    }
    out
        << " commuting_pair=" << Bool(r.commuting_pair)
        << " conclusion=" << Bool(r.conclusion) << '\n';
  }
  return tally.Exit();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite pregeometry checks", "pregeo"};
  app.require_subcommand(1);

  std::string matroid_path;
  std::string output_path;
  std::string mode = "projective";
  std::vector<std::string> concur;
  GroupCheckArgs gc;

  CLI::App* verify = app.add_subcommand("verify", "check the closure axioms");
  verify->add_option("matroid", matroid_path)->required();
  CLI::App* classify =
      app.add_subcommand("classify", "trivial/modular/locally modular");
  classify->add_option("matroid", matroid_path)->required();
  CLI::App* geometrize =
      app.add_subcommand("geometrize", "delete loops, identify parallels");
  geometrize->add_option("matroid", matroid_path)->required();
  geometrize->add_option("-o,--output", output_path, "explicit matroid file");
  CLI::App* plane = app.add_subcommand("plane", "incidence checks in rank 3");
  plane->add_option("matroid", matroid_path)->required();
  plane->add_option("--mode", mode)
      ->check(CLI::IsMember({"projective", "affine"}));
  plane->add_option("--concur", concur, "three lines, e.g. 1,2,3")
      ->expected(3);
  CLI::App* group_check =
      app.add_subcommand("group-check", "group-with-pregeometry propositions");
  group_check->add_option("group", gc.group)->required();
  group_check->add_option("matroid", gc.matroid)->required();
  group_check->add_option("--prop", gc.prop)
      ->check(CLI::IsMember({"all", "homogeneity", "generic-product",
                             "invariant-subgroups", "invariant-elements",
                             "nontriviality", "configuration", "clcom"}));
  group_check->add_option("--A", gc.base, "base set, e.g. 1,2");
  group_check->add_option("--kmax", gc.kmax)->check(CLI::Range(0, 3));

  std::vector<const char*> argv{"pregeo"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*verify) return CmdVerify(matroid_path, out);
    if (*classify) return CmdClassify(matroid_path, out);
    if (*geometrize) return CmdGeometrize(matroid_path, output_path, out);
    if (*plane) return CmdPlane(matroid_path, mode, concur, out);
    if (*group_check) return CmdGroupCheck(gc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace pregeo::cli
