// quantic: compute, verify, generate and plot invariant-theoretic data for
// binary forms. File formats are the shared JSON schemas of the library;
// exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 violated mathematical precondition.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "quantics/apolar.hpp"
#include "quantics/canonical.hpp"
#include "quantics/catalectant.hpp"
#include "quantics/g2.hpp"
#include "quantics/json_io.hpp"
#include "quantics/svg.hpp"

using namespace quantics;

namespace {

struct RunConfig {
  double tol = 1e-9;
  bool json_output = false;
  bool exact = false;
  std::string output;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  std::string payload = cfg.json_output ? j.dump(2) + "\n" : text;
  if (cfg.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write " + cfg.output);
    out << payload;
  }
}

std::string point_text(const PointC& p) {
  return p.is_infinity() ? std::string("inf") : format_complex(p.affine());
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "tolerance for zero tests")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", cfg.json_output, "JSON output instead of text");
  cmd->add_option("-o,--output", cfg.output, "write output to a file");
}

int run(int argc, char** argv) {
  CLI::App app{"invariants and root geometry of binary forms"};
  app.require_subcommand(1);
  RunConfig cfg;

  // ---- invariant ----------------------------------------------------------
  std::string inv_file;
  bool inv_catalectant = false;
  auto* inv = app.add_subcommand("invariant", "quadratic invariant of a form");
  inv->add_option("poly", inv_file, "polynomial JSON file")->required();
  inv->add_flag("--catalectant", inv_catalectant, "also print the catalectant (sextics)");
  inv->add_flag("--exact", cfg.exact, "exact rational arithmetic");
  add_common(inv, cfg);
  inv->callback([&] {
    const Json j = load_json(inv_file);
    if (cfg.exact) {
      const QuanticQ q = parse_quantic_exact(j);
      const GaussianRational i = quadratic_invariant(q);
      Json out{{"I", format_gaussian(i)}};
      std::string text = "I = " + format_gaussian(i) + "\n";
      if (inv_catalectant) {
        const GaussianRational jj = catalectant(q);
        out["J"] = format_gaussian(jj);
        text += "J = " + format_gaussian(jj) + "\n";
      }
      emit(cfg, out, text);
      return;
    }
    const QuanticC q = parse_quantic(j);
    const Complex i = quadratic_invariant(q);
    Json out{{"I", complex_json(i)}};
    std::string text = format_complex(i) + "\n";
    if (inv_catalectant) {
      const Complex jj = catalectant(q);
      out["J"] = complex_json(jj);
      text = "I = " + format_complex(i) + "\nJ = " + format_complex(jj) + "\n";
    }
    emit(cfg, out, text);
  });

  // ---- transvect ----------------------------------------------------------
  std::string tv_p, tv_q;
  int tv_k = 1;
  auto* tv = app.add_subcommand("transvect", "kth transvectant of two forms");
  tv->add_option("p", tv_p)->required();
  tv->add_option("q", tv_q)->required();
  tv->add_option("-k", tv_k, "transvectant order")->required();
  tv->add_flag("--exact", cfg.exact);
  add_common(tv, cfg);
  tv->callback([&] {
    if (cfg.exact) {
      auto t = transvectant(parse_quantic_exact(load_json(tv_p)),
                            parse_quantic_exact(load_json(tv_q)), tv_k);
      Json out = t ? quantic_json(*t) : Json{{"zero", true}};
      emit(cfg, out, t ? out.dump(2) + "\n" : "0\n");
      return;
    }
    auto t = transvectant(parse_quantic(load_json(tv_p)), parse_quantic(load_json(tv_q)), tv_k);
    Json out = t ? quantic_json(*t) : Json{{"zero", true}};
    emit(cfg, out, t ? out.dump(2) + "\n" : "0\n");
  });

  // ---- roots / from-roots -------------------------------------------------
  std::string roots_file;
  auto* rt = app.add_subcommand("roots", "roots of a form, with multiplicity");
  rt->add_option("poly", roots_file)->required();
  add_common(rt, cfg);
  rt->callback([&] {
    const auto roots = roots_of(parse_quantic(load_json(roots_file)));
    Json arr = Json::array();
    std::string text;
    for (const auto& e : roots.entries()) {
      arr.push_back(Json{{"point", point_json(e.point)}, {"multiplicity", e.multiplicity}});
      text += point_text(e.point) + " x" + std::to_string(e.multiplicity) + "\n";
    }
    emit(cfg, arr, text);
  });

  std::string fr_file;
  auto* fr = app.add_subcommand("from-roots", "form with the given roots");
  fr->add_option("points", fr_file)->required();
  add_common(fr, cfg);
  fr->callback([&] {
    const auto pts = parse_points(load_json(fr_file));
    const QuanticC q = from_points(pts);
    const Json out = quantic_json(q);
    emit(cfg, out, out.dump(2) + "\n");
  });

  // ---- xpoints -------------------------------------------------------------
  std::string xp_file;
  int xp_split = -1;
  auto* xp = app.add_subcommand("xpoints", "X-points of a sextic for one split");
  xp->add_option("sextic", xp_file)->required();
  xp->add_option("--split", xp_split, "root index for P6 (default: all splits)");
  add_common(xp, cfg);
  xp->callback([&] {
    const QuanticC psi = parse_quantic(load_json(xp_file));
    const auto roots = roots_of(psi);
    Json arr = Json::array();
    std::string text;
    for (int s = 0; s < static_cast<int>(roots.size()); ++s) {
      if (xp_split >= 0 && s != xp_split) continue;
      const XPointResult r = x_points(psi, s, cfg.tol);
      Json rec{{"split", r.split}, {"p6", point_json(r.p6)}};
      text += "split " + std::to_string(r.split) + "  P6 = " + point_text(r.p6) + "\n";
      if (r.quartic) {
        rec["delta"] = quantic_json(*r.quartic);
        Json xs = Json::array();
        for (const auto& e : r.xpoints.entries()) {
          xs.push_back(Json{{"point", point_json(e.point)}, {"multiplicity", e.multiplicity}});
          text += "  X = " + point_text(e.point) + " x" + std::to_string(e.multiplicity) + "\n";
        }
        rec["xpoints"] = xs;
      } else {
        rec["delta"] = nullptr;
        text += "  delta = 0\n";
      }
      arr.push_back(rec);
    }
    if (xp_split >= static_cast<int>(roots.size()))
      throw DomainError("split index out of range");
    emit(cfg, arr, text);
  });

  // ---- verify-theorem1 ----------------------------------------------------
  std::string vt_file;
  auto* vt = app.add_subcommand(
      "verify-theorem1", "tetrahedral X-point characterisation of a vanishing invariant");
  vt->add_option("sextic", vt_file, "a sextic, or an array of sextics")->required();
  add_common(vt, cfg);
  vt->callback([&] {
    const Json j = load_json(vt_file);
    std::vector<QuanticC> batch;
    if (j.is_array())
      for (const auto& e : j) batch.push_back(parse_quantic(e));
    else
      batch.push_back(parse_quantic(j));
    Json out = Json::array();
    std::string text;
    bool all_hold = true;
    for (const auto& q : batch) {
      const TetrahedronReport rep = verify_tetrahedron(q, cfg.tol);
      out.push_back(tetrahedron_report_json(rep));
      text += tetrahedron_report_text(rep);
      all_hold = all_hold && rep.verdict_holds;
    }
    emit(cfg, j.is_array() ? out : out[0], text);
    if (!all_hold) exit(1);
  });

  // ---- fifth-point ----------------------------------------------------------
  std::string fp_file;
  auto* fp = app.add_subcommand("fifth-point",
                                "points completing four given ones to a null sextic");
  fp->add_option("points", fp_file, "JSON array of four affine points")->required();
  add_common(fp, cfg);
  fp->callback([&] {
    const auto pts = parse_points(load_json(fp_file));
    if (pts.size() != 4) throw DomainError("fifth-point needs exactly four points");
    std::vector<Complex> xs;
    for (const auto& p : pts) {
      if (p.is_infinity()) throw DomainError("fifth-point needs affine points");
      xs.push_back(p.affine());
    }
    const FifthPointResult r = fifth_point(xs, cfg.tol);
    Json out{{"a", complex_json(r.quadratic.a)},
             {"b", complex_json(r.quadratic.b)},
             {"c", complex_json(r.quadratic.c)}};
    std::string text;
    switch (r.status) {
      case FifthPointStatus::AllValuesFail:
        out["status"] = "AllValuesFail";
        text = "no fifth point: I = " + format_complex(r.quadratic.c) + " for every choice\n";
        break;
      case FifthPointStatus::IdenticallyZero:
        out["status"] = "IdenticallyZero";
        text = "every fifth point gives a vanishing invariant\n";
        break;
      default: {
        out["status"] = r.status == FifthPointStatus::OneSolution ? "one" : "two";
        Json sols = Json::array();
        for (const auto& s : r.solutions) {
          sols.push_back(complex_json(s));
          text += format_complex(s) + "\n";
        }
        out["solutions"] = sols;
      }
    }
    emit(cfg, out, text);
  });

  // ---- max-separated --------------------------------------------------------
  std::string ms_file;
  auto* ms = app.add_subcommand("max-separated",
                                "test five points for maximal separation");
  ms->add_option("points", ms_file, "JSON array of five points")->required();
  add_common(ms, cfg);
  ms->callback([&] {
    const auto pts = parse_points(load_json(ms_file));
    const SeparationResult r = is_maximally_separated(pts, cfg.tol);
    Json out{{"maximally_separated", r.maximally_separated}};
    std::string text =
        r.maximally_separated ? "maximally separated\n" : "not maximally separated\n";
    if (r.maximally_separated) {
      out["apex"] = r.apex;
      text += "apex: point " + std::to_string(r.apex) + "\n";
      if (r.to_square_pyramid) {
        const auto& g = *r.to_square_pyramid;
        out["moebius"] = Json{{"a", complex_json(g.a)},
                              {"b", complex_json(g.b)},
                              {"c", complex_json(g.c)},
                              {"d", complex_json(g.d)}};
        text += "normalising map: (" + format_complex(g.a) + ") x + (" + format_complex(g.b) +
                ") / (" + format_complex(g.c) + ") x + (" + format_complex(g.d) + ")\n";
      }
    }
    emit(cfg, out, text);
  });

  // ---- sample-selfapolar ----------------------------------------------------
  int sa_count = 1;
  std::uint64_t sa_seed = 1;
  double sa_radius = 2.0;
  auto* sa = app.add_subcommand("sample-selfapolar",
                                "random members of the two-parameter null family");
  sa->add_option("--count", sa_count)->check(CLI::PositiveNumber);
  sa->add_option("--seed", sa_seed);
  sa->add_option("--radius", sa_radius, "disk radius for the (b, c) draw");
  add_common(sa, cfg);
  sa->callback([&] {
    std::mt19937_64 rng(sa_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
      const double r = sa_radius * std::sqrt(unit(rng));
      const double t = 2.0 * M_PI * unit(rng);
      return Complex(r * std::cos(t), r * std::sin(t));
    };
    Json arr = Json::array();
    for (int i = 0; i < sa_count; ++i) {
      const Complex b = draw(), c = draw();
      arr.push_back(quantic_json(self_apolar_sample(b, c)));
    }
    emit(cfg, arr, arr.dump(2) + "\n");
  });

  // ---- classify-quartic -----------------------------------------------------
  std::string cq_file;
  auto* cq = app.add_subcommand("classify-quartic", "cross-ratio class of a quartic");
  cq->add_option("quartic", cq_file)->required();
  add_common(cq, cfg);
  cq->callback([&] {
    const CrossRatioClass c = classify_quartic(parse_quantic(load_json(cq_file)), cfg.tol);
    Json out{{"class", quartic_class_name(c.tag)}};
    std::string text = quartic_class_name(c.tag);
    if (c.tag == QuarticClass::Degenerate) {
      out["partition"] = c.partition;
      text += " (";
      for (std::size_t i = 0; i < c.partition.size(); ++i)
        text += (i ? "+" : "") + std::to_string(c.partition[i]);
      text += ")";
    }
    emit(cfg, out, text + "\n");
  });

  // ---- g2-check -------------------------------------------------------------
  std::string g2_file;
  auto* g2 = app.add_subcommand("g2-check",
                                "compatibility scalar of the structure three-form");
  g2->add_option("sextic", g2_file)->required();
  add_common(g2, cfg);
  g2->callback([&] {
    const QuanticC u = parse_quantic(load_json(g2_file));
    const Complex scalar = compatibility_scalar(u);
    const Complex i = quadratic_invariant(u);
    const double n2 = bombieri_norm2(u);
    const bool scalar_zero = std::abs(scalar) <= cfg.tol * calib::kPsiRatio_d() * n2;
    const bool i_zero = std::abs(i) <= cfg.tol * n2;
    Json out{{"scalar", complex_json(scalar)},
             {"I", complex_json(i)},
             {"scalar_zero", scalar_zero},
             {"I_zero", i_zero},
             {"consistent", scalar_zero == i_zero}};
    std::string text = "scalar = " + format_complex(scalar) + "\nI = " + format_complex(i) +
                       "\n" + (scalar_zero == i_zero ? "consistent" : "INCONSISTENT") + "\n";
    emit(cfg, out, text);
    if (scalar_zero != i_zero) exit(1);
  });

  // ---- plot -------------------------------------------------------------------
  std::string plot_file, plot_pole = "inf", plot_out = "figure.svg";
  auto* pl = app.add_subcommand("plot", "two-panel SVG of a configuration and its projection");
  pl->add_option("points", plot_file)->required();
  pl->add_option("--pole", plot_pole, "projection pole (point JSON, default inf)");
  pl->add_option("-o,--output", plot_out, "SVG output path");
  pl->callback([&] {
    const auto pts = parse_points(load_json(plot_file));
    PointC pole = parse_point(Json::parse(plot_pole, nullptr, false).is_discarded()
                                  ? Json(plot_pole)
                                  : Json::parse(plot_pole));
    FigurePanel before{"configuration", {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      FigurePoint fp2;
      fp2.label = "P" + std::to_string(i + 1);
      fp2.at_infinity = pts[i].is_infinity();
      if (!fp2.at_infinity) fp2.position = pts[i].affine();
      before.points.push_back(fp2);
    }
    FigurePoint pole_pt;
    pole_pt.label = "pole";
    pole_pt.pole = true;
    pole_pt.at_infinity = pole.is_infinity();
    if (!pole_pt.at_infinity) pole_pt.position = pole.affine();
    before.points.push_back(pole_pt);

    FigurePanel after{"projected from the pole", {}};
    Complex mean(0, 0);
    int finite = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      FigurePoint fp2;
      fp2.label = "P" + std::to_string(i + 1);
      const ChartValue v = project_from(pole, pts[i]);
      fp2.at_infinity = v.infinite;
      if (!v.infinite) {
        fp2.position = v.value;
        mean += v.value;
        ++finite;
      }
      after.points.push_back(fp2);
    }
    if (finite > 0) {
      FigurePoint centroid;
      centroid.label = "centroid";
      centroid.position = mean / static_cast<double>(finite);
      centroid.highlight = true;
      after.points.push_back(centroid);
    }
    std::ofstream out(plot_out);
    if (!out) throw InputError("cannot write " + plot_out);
    out << render_figure({before, after});
    std::cout << "wrote " << plot_out << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
