// Copyright 2026 The cliffdesc Authors
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

#include "cliffdesc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cliffdesc/adapted.hpp"
#include "cliffdesc/clifford.hpp"
#include "cliffdesc/descent.hpp"
#include "cliffdesc/dirac.hpp"
#include "cliffdesc/errors.hpp"
#include "cliffdesc/matrix_group.hpp"
#include "cliffdesc/render.hpp"
#include "cliffdesc/serialize.hpp"

namespace cliffdesc {

namespace {

void emit(std::ostream& out, const Report& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.check;
  if (!r.detail.empty()) out << ": " << r.detail;
  out << "\n";
}

bool emit_all(std::ostream& out, const std::vector<Report>& reports) {
  bool all = true;
  for (const Report& r : reports) {
    emit(out, r);
    all = all && r.pass;
  }
  return all;
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + out_path + "'");
  f << text;
}

std::string recipe_summary(const AdaptedSet& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.recipe.size(); ++k) {
    if (k) os << "; ";
    os << "g" << k << "=";
    for (std::size_t f = 0; f < s.recipe[k].size(); ++f) {
      if (f) os << " x ";
      os << factor_name(s.recipe[k][f]);
    }
  }
  return os.str();
}

RenderOptions parse_render_options(int cell_size, const std::string& palette) {
  RenderOptions opts;
  if (cell_size > 0) opts.cell_size = cell_size;
  if (!palette.empty()) {
    std::istringstream ps(palette);
    std::string color;
    std::size_t k = 0;
    while (std::getline(ps, color, ',')) {
      if (k >= opts.palette.size()) break;
      opts.palette[k++] = color;
    }
    if (k != opts.palette.size()) {
      throw UsageError("--palette needs 5 comma-separated colors for "
                       "{0, +1, -1, +i, -i}");
    }
  }
  return opts;
}

// Representation-independent exact checks valid for any even set.
std::vector<Report> even_exact_reports(const GammaSet& s) {
  std::vector<Report> reports;
  const ExactMatrix id = exact_identity(s.order());
  const ExactMatrix ch = chiral(s);

  Report r{"chiral-involution", exact_equal(ExactMatrix(ch * ch), id), ""};
  if (!r.pass) r.detail = "square of the chiral matrix is not the identity";
  reports.push_back(r);

  r = {"chiral-hermitian", exact_equal(adjoint(ch), ch), ""};
  if (!r.pass) r.detail = "chiral matrix is not Hermitian";
  reports.push_back(r);

  r = {"chiral-anticommute", true, ""};
  for (int mu = 0; mu < s.dim && r.pass; ++mu) {
    if (!anticommute(ch, s.matrices[static_cast<std::size_t>(mu)])) {
      r.pass = false;
      r.detail = "chiral matrix commutes with generator " + std::to_string(mu);
    }
  }
  reports.push_back(r);

  r = {"chiral-traceless", trace(ch).is_zero(), ""};
  if (!r.pass) r.detail = "chiral matrix has nonzero trace";
  reports.push_back(r);

  const ExactMatrix k = kappa(s);
  r = {"kappa-algebra", true, ""};
  if (!exact_equal(ExactMatrix(k * k), id)) {
    r = {"kappa-algebra", false, "kappa is not involutive"};
  } else if (!exact_equal(adjoint(k), k)) {
    r = {"kappa-algebra", false, "kappa is not Hermitian"};
  } else if (!trace(k).is_zero()) {
    r = {"kappa-algebra", false, "kappa has nonzero trace"};
  } else {
    for (int mu = 0; mu < s.dim - 1 && r.pass; ++mu) {
      if (!commute(k, s.matrices[static_cast<std::size_t>(mu)])) {
        r = {"kappa-algebra", false,
             "kappa does not commute with generator " + std::to_string(mu)};
      }
    }
    if (r.pass && !anticommute(k, s.matrices.back())) {
      r = {"kappa-algebra", false,
           "kappa does not anticommute with the last generator"};
    }
  }
  reports.push_back(r);
  return reports;
}

// Checks that hold for the recursive construction specifically: the chiral
// matrix is the exchange matrix, kappa is diag(1, -1) blocks, the commutant
// of the first d-1 generators is spanned by 1 and kappa, and the last
// generator's blocks obey the unitarity relations.
std::vector<Report> adapted_exact_reports(const AdaptedSet& a) {
  const GammaSet& s = a.base;
  std::vector<Report> reports;
  reports.push_back(verify_exchange_chiral(a));

  Report r{"kappa-form",
           exact_equal(kappa(s),
                       kron(pauli3(), exact_identity(s.order() / 2))),
           ""};
  if (!r.pass) r.detail = "kappa is not diag(1, -1) in half blocks";
  reports.push_back(r);

  const auto basis_partial = commutant_basis(s, s.dim - 1);
  r = {"commutant-partial", true, ""};
  if (basis_partial.size() != 2 ||
      !exact_equal(materialize(s, basis_partial[0]),
                   exact_identity(s.order())) ||
      !exact_equal(materialize(s, basis_partial[1]), kappa(s))) {
    r.pass = false;
    r.detail = "commutant of the first d-1 generators is not {1, kappa}, got " +
               std::to_string(basis_partial.size()) + " elements";
  }
  reports.push_back(r);

  const auto basis_full = commutant_basis(s, s.dim);
  r = {"commutant-full", basis_full.size() == 1 && basis_full[0].indices.empty(),
       ""};
  if (!r.pass) {
    r.detail = "commutant of the full set has " +
               std::to_string(basis_full.size()) + " elements, expected {1}";
  }
  reports.push_back(r);

  reports.push_back(verify_block_relations(s));
  return reports;
}

Report pseudoscalar_report(const GammaSet& s) {
  Report r{"pseudoscalar-class", true, ""};
  try {
    r.detail = pseudoscalar_class(s) > 0 ? "+1" : "-1";
  } catch (const StructureError& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

std::vector<Report> float_reports(const std::vector<Eigen::MatrixXcd>& g,
                                  double tol) {
  std::vector<Report> reports;
  const int d = static_cast<int>(g.size());
  const Eigen::Index n = g.empty() ? 0 : g[0].rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu; nu < d; ++nu) {
      Eigen::MatrixXcd anti = g[static_cast<std::size_t>(mu)] *
                                  g[static_cast<std::size_t>(nu)] +
                              g[static_cast<std::size_t>(nu)] *
                                  g[static_cast<std::size_t>(mu)];
      if (mu == nu) anti -= 2.0 * metric_diag(mu) * id;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  }
  reports.push_back({"clifford(float)", worst <= tol,
                     "max residual " + std::to_string(worst)});

  worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    const Eigen::MatrixXcd& m = g[static_cast<std::size_t>(mu)];
    worst = std::max(
        worst, (m.adjoint() - g[0] * m * g[0]).cwiseAbs().maxCoeff());
    worst = std::max(worst, (m * m.adjoint() - id).cwiseAbs().maxCoeff());
  }
  reports.push_back({"hermiticity(float)", worst <= tol,
                     "max residual " + std::to_string(worst)});

  worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    worst = std::max(worst, std::abs(g[static_cast<std::size_t>(mu)].trace()));
  }
  reports.push_back({"traceless(float)", worst <= tol,
                     "max residual " + std::to_string(worst)});
  return reports;
}

int cmd_build(int dim, int max_dim, const std::string& format,
              const std::string& out_path, int cell_size,
              const std::string& palette, std::ostream& out) {
  const AdaptedSet s = adapted(dim, max_dim);
  if (format == "json") {
    write_output(
        to_document(s.base, Encoding::kExactQuarterPhase, recipe_summary(s))
                .dump(2) +
            "\n",
        out_path, out);
  } else if (format == "text") {
    write_output(render_text(s.base), out_path, out);
  } else {
    write_output(render_svg(s.base, parse_render_options(cell_size, palette)),
                 out_path, out);
  }
  return 0;
}

int cmd_verify_dim(int dim, int max_dim, std::ostream& out) {
  const AdaptedSet a = adapted(dim, max_dim);
  const GammaSet& s = a.base;
  out << "verify " << s.label << " (d=" << s.dim << ", order=" << s.order()
      << ")\n";
  std::vector<Report> reports = {verify_clifford(s), verify_hermiticity(s),
                                 verify_traceless(s)};
  if (dim % 2 == 0) {
    for (auto& r : even_exact_reports(s)) reports.push_back(std::move(r));
    for (auto& r : adapted_exact_reports(a)) reports.push_back(std::move(r));
  } else {
    reports.push_back(pseudoscalar_report(s));
  }
  return emit_all(out, reports) ? 0 : 1;
}

int cmd_verify_file(const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file '" + path + "'");
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document: invalid JSON: ") + e.what());
  }
  const ParsedDocument parsed = from_document(doc);
  out << "verify " << (parsed.label.empty() ? path : parsed.label)
      << " (d=" << parsed.dim << ", encoding=" << encoding_name(parsed.encoding)
      << ")\n";
  std::vector<Report> reports;
  if (parsed.exact.has_value()) {
    const GammaSet& s = *parsed.exact;
    reports = {verify_clifford(s), verify_hermiticity(s),
               verify_traceless(s)};
    if (reports[0].pass) {
      if (s.dim % 2 == 0) {
        for (auto& r : even_exact_reports(s)) reports.push_back(std::move(r));
      } else {
        reports.push_back(pseudoscalar_report(s));
      }
    }
  } else {
    reports = float_reports(parsed.floating, 1e-10);
  }
  return emit_all(out, reports) ? 0 : 1;
}

int cmd_descend(int dim, int steps, int max_dim, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  const AdaptedSet a = adapted(dim, max_dim);
  if (steps < 0) steps = dim - 2;
  const auto tree = descend_chain(a.base, steps);

  std::ostringstream os;
  if (format == "json") {
    os << tree_to_json(*tree).dump(2) << "\n";
  } else {
    os << tree_to_text(*tree);
  }

  // Diamond confirmations: the two odd children of an even node lose their
  // last generator into the same even grandchild.
  bool all_pass = true;
  std::vector<const DescentNode*> stack = {tree.get()};
  while (!stack.empty()) {
    const DescentNode* node = stack.back();
    stack.pop_back();
    for (const auto& c : node->children) stack.push_back(c.get());
    if (node->set.dim % 2 != 0 || node->children.size() != 2) continue;
    if (node->children[0]->children.empty() ||
        node->children[1]->children.empty()) {
      continue;
    }
    const GammaSet& left = node->children[0]->children[0]->set;
    const GammaSet& right = node->children[1]->children[0]->set;
    bool same = left.matrices.size() == right.matrices.size();
    for (std::size_t k = 0; same && k < left.matrices.size(); ++k) {
      same = exact_equal(left.matrices[k], right.matrices[k]);
    }
    const AdaptedSet grandchild = adapted(node->set.dim - 2, max_dim);
    bool canonical = same;
    for (std::size_t k = 0; canonical && k < left.matrices.size(); ++k) {
      canonical = exact_equal(left.matrices[k], grandchild.base.matrices[k]);
    }
    Report r{"diamond d=" + std::to_string(node->set.dim), same && canonical,
             same && canonical
                 ? "both branches reduce to " + grandchild.base.label
                 : "branch reductions disagree"};
    all_pass = all_pass && r.pass;
    emit(os, r);
  }
  write_output(os.str(), out_path, out);
  return all_pass ? 0 : 1;
}

int cmd_classify(int dim, int max_dim, std::ostream& out) {
  if (dim < 3) {
    throw UsageError(
        "classify: dimension must be at least 3; the 2-dimensional set has "
        "no proper descendants to compare");
  }
  bool all_pass = true;
  GammaSet first;
  GammaSet second;
  if (dim % 2 == 1) {
    const AdaptedSet a = adapted(dim, max_dim);
    first = a.base;
    second = conjugate_odd(a).base;
  } else {
    const AdaptedSet a = adapted(dim, max_dim);
    auto [plus, minus] = split_even(a.base);
    first = std::move(plus);
    second = std::move(minus);
  }
  const int class_a = pseudoscalar_class(first);
  const int class_b = pseudoscalar_class(second);
  out << "set A: " << first.label << " pseudoscalar class "
      << (class_a > 0 ? "+1" : "-1") << "\n";
  out << "set B: " << second.label << " pseudoscalar class "
      << (class_b > 0 ? "+1" : "-1") << "\n";
  const Equivalence verdict = classify_odd_pair(first, second);
  out << "verdict: "
      << (verdict == Equivalence::kInequivalent ? "inequivalent"
                                                : "equivalent")
      << "\n";
  Report r{"opposite-classes", class_a == -class_b, ""};
  all_pass = all_pass && r.pass;
  emit(out, r);

  if (dim % 2 == 0 && dim <= 8) {
    const AdaptedSet a = adapted(dim, max_dim);
    const MatrixGroup g_full = group_closure(a.base.matrices);
    out << "group order, all generators: " << g_full.size() << "\n";
    const MatrixGroup g_sub =
        group_closure(direct_sums(first.matrices, second.matrices));
    out << "group order, first " << (dim - 1)
        << " generators: " << g_sub.size() << "\n";
    const BlockCharacters chi = block_characters(g_sub, first.matrices[0].rows());
    const ExactScalar orth = character_inner(chi.upper, chi.lower);
    Report ro{"character-orthogonality", orth == ExactScalar(0),
              "sum = " + orth.str()};
    all_pass = all_pass && ro.pass;
    emit(out, ro);
    const ExactScalar self = character_inner(chi.upper, chi.upper);
    Report rs{"character-self-pairing",
              self == ExactScalar(static_cast<std::int64_t>(g_sub.size())),
              "sum = " + self.str() + ", group order = " +
                  std::to_string(g_sub.size())};
    all_pass = all_pass && rs.pass;
    emit(out, rs);
  } else if (dim % 2 == 0) {
    out << "group closure skipped above dimension 8 (order grows as 2^(d+1))\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_spectrum(int dim, int max_dim, double mass, std::vector<double> p,
                 unsigned seed, std::ostream& out) {
  const AdaptedSet a = adapted(dim, max_dim);
  const GammaSet& s = a.base;
  if (p.empty()) {
    // Deterministic sample: spatial components from the seeded generator,
    // the last one zero (descent-ready), energy put on shell.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    p.assign(static_cast<std::size_t>(dim), 0.0);
    double spatial2 = 0.0;
    for (int mu = 1; mu < dim - 1; ++mu) {
      p[static_cast<std::size_t>(mu)] = dist(rng);
      spatial2 += p[static_cast<std::size_t>(mu)] *
                  p[static_cast<std::size_t>(mu)];
    }
    p[0] = std::sqrt(spatial2 + mass * mass);
  }
  if (static_cast<int>(p.size()) != dim) {
    throw UsageError("spectrum: --p needs exactly " + std::to_string(dim) +
                     " components");
  }
  Momentum mom{std::move(p), mass};
  out << "spectrum " << s.label << " mass=" << mass << " p=(";
  for (int mu = 0; mu < dim; ++mu) {
    if (mu) out << ",";
    out << mom.components[static_cast<std::size_t>(mu)];
  }
  out << ")\n";

  bool all_pass = true;
  const double scale = momentum_scale(mom);

  const double residual = dispersion_residual(s, mom);
  Report r{"dispersion", residual <= 1e-10 * scale,
           "residual " + std::to_string(residual)};
  all_pass = all_pass && r.pass;
  emit(out, r);

  const auto [det_lhs, det_rhs] = determinant_identity(s, mom);
  const double det_tol =
      1e-8 * std::max(det_rhs, std::pow(scale, s.order() / 2.0));
  r = {"determinant",
       std::abs(det_lhs - det_rhs) <= det_tol,
       "|det D| = " + std::to_string(det_lhs) + ", |p.p - m^2|^(N/2) = " +
           std::to_string(det_rhs)};
  all_pass = all_pass && r.pass;
  emit(out, r);

  const bool on_shell =
      std::abs(minkowski_square(mom) - mass * mass) <= 1e-8 * scale;
  const auto kernel = plane_wave_solutions(s, mom);
  const std::size_t expected =
      on_shell ? static_cast<std::size_t>(s.order()) / 2 : 0;
  r = {"kernel-dimension", kernel.size() == expected,
       std::to_string(kernel.size()) + (on_shell ? " (on-shell, expected "
                                                 : " (off-shell, expected ") +
           std::to_string(expected) + ")"};
  all_pass = all_pass && r.pass;
  emit(out, r);

  if (dim >= 4 && dim % 2 == 0 && mom.components.back() == 0.0) {
    const ReducedOperator blocks = reduced_operator(s, mom);
    const auto [plus, minus] = split_even(s);
    Momentum q = mom;
    q.components.pop_back();
    const Eigen::MatrixXcd d_plus = dirac_operator(plus, q).matrix;
    const Eigen::MatrixXcd d_minus = dirac_operator(minus, q).matrix;
    const bool plus_match = (blocks.plus.array() == d_plus.array()).all();
    const bool minus_match = (blocks.minus.array() == d_minus.array()).all();
    r = {"decoupled-blocks", plus_match && minus_match,
         "diagonal blocks equal the odd children's operators entrywise"};
    if (!r.pass) r.detail = "diagonal blocks differ from the children";
    all_pass = all_pass && r.pass;
    emit(out, r);

    const Report refl = reflection_equivalence_check(s, q);
    all_pass = all_pass && refl.pass;
    emit(out, refl);
  } else if (dim == 2 && mom.components.back() == 0.0) {
    out << "reduction target would drop below dimension 2; full operator "
           "analyzed\n";
  } else {
    out << "descent condition not met; full operator analyzed\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact gamma-matrix construction, verification, descent and "
               "momentum-space analysis"};
  app.name("cliffdesc");
  app.require_subcommand(1);

  int dim = 0;
  int max_dim = 16;
  int steps = -1;
  int cell_size = 0;
  double mass = 1.0;
  unsigned seed = 0;
  std::string build_format = "json";
  std::string descend_format = "text";
  std::string render_format = "text";
  std::string out_path;
  std::string in_path;
  std::string palette;
  std::vector<double> momentum;

  CLI::App* build = app.add_subcommand(
      "build", "Construct the canonical set and emit it");
  build->add_option("--dim", dim, "dimension (2..max-dim)")->required();
  build->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();
  build->add_option("--format", build_format, "json|text|svg")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text", "svg"}));
  build->add_option("--out", out_path, "write to file instead of stdout");
  build->add_option("--cell-size", cell_size, "svg cell size in px");
  build->add_option("--palette", palette,
                    "5 comma-separated colors for {0,+1,-1,+i,-i}");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the algebra of a built or loaded set");
  verify->add_option("--dim", dim, "verify the canonical set of this dimension");
  verify->add_option("--in", in_path, "verify a JSON document");
  verify->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();

  CLI::App* descend = app.add_subcommand(
      "descend", "Unfold the descent tree from the canonical set");
  descend->add_option("--dim", dim, "starting dimension")->required();
  descend->add_option("--steps", steps, "levels to unfold (default dim-2)");
  descend->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();
  descend->add_option("--format", descend_format, "text|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  descend->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* classify = app.add_subcommand(
      "classify", "Compare the two inequivalent odd sets of a dimension");
  classify->add_option("--dim", dim,
                       "odd: the set and its conjugate; even: the two "
                       "children of the split")
      ->required();
  classify->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Dispersion, determinant, kernel and decoupling of D(p)");
  spectrum->add_option("--dim", dim, "dimension")->required();
  spectrum->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();
  spectrum->add_option("--mass", mass, "mass (default 1)");
  spectrum->add_option("--p", momentum,
                       "comma-separated covariant momentum components")
      ->delimiter(',');
  spectrum->add_option("--seed", seed,
                       "seed for the generated momentum when --p is absent");

  CLI::App* render = app.add_subcommand(
      "render", "Draw the canonical set as a character or SVG grid");
  render->add_option("--dim", dim, "dimension")->required();
  render->add_option("--max-dim", max_dim, "dimension cap")->capture_default_str();
  render->add_option("--format", render_format, "text|svg")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "svg"}));
  render->add_option("--out", out_path, "write to file instead of stdout");
  render->add_option("--cell-size", cell_size, "svg cell size in px");
  render->add_option("--palette", palette,
                     "5 comma-separated colors for {0,+1,-1,+i,-i}");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return cmd_build(dim, max_dim, build_format, out_path, cell_size, palette,
                       out);
    }
    if (verify->parsed()) {
      if ((dim > 0) == !in_path.empty()) {
        throw UsageError("verify: pass exactly one of --dim and --in");
      }
      return dim > 0 ? cmd_verify_dim(dim, max_dim, out)
                     : cmd_verify_file(in_path, out);
    }
    if (descend->parsed()) {
      return cmd_descend(dim, steps, max_dim, descend_format, out_path, out);
    }
    if (classify->parsed()) return cmd_classify(dim, max_dim, out);
    if (spectrum->parsed()) {
      return cmd_spectrum(dim, max_dim, mass, momentum, seed, out);
    }
    if (render->parsed()) {
      const AdaptedSet s = adapted(dim, max_dim);
      const RenderOptions opts = parse_render_options(cell_size, palette);
      write_output(render_grid(s, render_format == "svg" ? RenderFormat::kSvg
                                                  : RenderFormat::kText,
                               opts),
                   out_path, out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cliffdesc
