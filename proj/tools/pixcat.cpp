// Command-line front end: every operation on JSON models, DOT output,
// machine-readable reports. Exit codes: 0 pass, 1 fail with witness,
// 2 input error.

#include "pixcat/dot.hpp"
#include "pixcat/json_io.hpp"
#include "pixcat/lattice.hpp"
#include "pixcat/oracle.hpp"
#include "pixcat/rep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace pixcat;

namespace {

struct CommandReport {
  std::string status = "pass";  // pass | fail | error
  Json payload = Json::object();
  std::vector<std::string> witnesses;

  int exit_code() const { return status == "pass" ? 0 : status == "fail" ? 1 : 2; }
  Json to_json() const {
    return Json{{"status", status}, {"payload", payload}, {"witnesses", witnesses}};
  }
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << body;
}

void emit(const CommandReport& rep, const std::string& out_path) {
  std::string body = rep.to_json().dump(2) + "\n";
  if (out_path.empty())
    std::cout << body;
  else
    write_file(out_path, body);
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json axiom_json(const ScreenAxiomReport& rep) {
  Json out = Json::array();
  for (const auto& ax : rep.axioms)
    out.push_back(Json{{"name", ax.name}, {"pass", ax.pass}, {"witness", ax.witness}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pixelations of path categories on finite models"};
  app.require_subcommand(1);

  std::string out_path, dot_path;
  app.add_option("--out", out_path, "write the report to this file instead of stdout")
      ->capture_default_str();

  CommandReport report;
  std::function<void()> run;

  // ---- check-screen ----
  auto* sc_check = app.add_subcommand("check-screen", "screen axioms of a finite partition");
  {
    static std::string cat_path, lattice_path, part_path;
    sc_check->add_option("--cat", cat_path, "finite thin category JSON");
    sc_check->add_option("--lattice", lattice_path, "finite lattice JSON (alternative input)");
    sc_check->add_option("--partition", part_path, "finite partition JSON")->required();
    sc_check->callback([&] {
      run = [&] {
        FiniteThinCategory cat =
            !cat_path.empty()
                ? thincat_from_json(load_json_file(cat_path))
                : lattice_from_json(load_json_file(lattice_path)).to_thin_category();
        FinitePartition part = partition_from_json(load_json_file(part_path));
        auto rep = check_screen_axioms_finite(cat, part);
        report.payload["axioms"] = axiom_json(rep);
        if (!rep.all_pass()) {
          report.status = "fail";
          for (const auto& ax : rep.axioms)
            if (!ax.pass) report.witnesses.push_back(ax.name + ": " + ax.witness);
        }
      };
    });
  }

  // ---- partition meet|join ----
  auto* part_cmd = app.add_subcommand("partition", "meet and join of partitions or screens");
  {
    static std::string op, p_path, q_path;
    part_cmd->add_option("op", op, "meet|join")->required();
    part_cmd->add_option("--p", p_path, "first partition/screen JSON")->required();
    part_cmd->add_option("--q", q_path, "second partition/screen JSON")->required();
    part_cmd->callback([&] {
      run = [&] {
        Json pj = load_json_file(p_path);
        Json qj = load_json_file(q_path);
        if (op != "meet" && op != "join") throw input_error("partition op must be meet|join");
        if (pj.contains("factors")) {
          Screen p = screen_from_json(pj);
          Screen q = screen_from_json(qj);
          if (op == "meet") {
            report.payload["screen"] = to_json(meet(p, q));
          } else {
            auto jr = screen_join(p, q);
            report.payload["is_screen"] = jr.is_screen;
            report.payload["blocks"] = jr.block_count;
            if (jr.is_screen) {
              report.payload["screen"] = to_json(jr.screen);
            } else {
              report.status = "fail";
              report.witnesses.push_back(jr.reason);
            }
          }
        } else {
          FinitePartition p = partition_from_json(pj);
          FinitePartition q = partition_from_json(qj);
          FinitePartition r = op == "meet" ? meet(p, q) : join(p, q);
          report.payload["partition"] = to_json(r);
          if (op == "join") {
            auto jc = join_complex(p, q);
            Json edges = Json::array();
            for (auto [a, b] : jc.edges) edges.push_back(Json::array({a, b}));
            report.payload["join_complex_edges"] = edges;
            report.payload["components"] = jc.component_count;
          }
        }
      };
    });
  }

  // ---- pixelate ----
  auto* pix = app.add_subcommand("pixelate", "skeleton quiver of a pixelation");
  {
    static std::string model_path, screen_path;
    static bool prune = false, windowed = false;
    pix->add_option("--model", model_path, "path model JSON")->required();
    pix->add_option("--screen", screen_path, "screen JSON")->required();
    pix->add_flag("--prune", prune, "drop arrows determined by composites");
    pix->add_flag("--windowed", windowed, "drop pixels unbounded in some factor");
    pix->add_option("--dot", dot_path, "also write the quiver as DOT");
    pix->callback([&] {
      run = [&] {
        PathModel m = model_from_json(load_json_file(model_path));
        Screen s = screen_from_json(load_json_file(screen_path));
        SkeletonQuiver q = build_skeleton(m, s, {.prune = prune, .windowed = windowed});
        report.payload["skeleton"] = to_json(q);
        Json dead = Json::array();
        for (const auto& ix : dead_pixels(m, s)) dead.push_back(fmt_pixel_index(ix));
        report.payload["dead_pixels"] = dead;
        if (!dot_path.empty()) write_file(dot_path, skeleton_dot(q));
      };
    });
  }

  // ---- init-map ----
  auto* init = app.add_subcommand("init-map", "Init functor between two skeletons");
  {
    static std::string model_path, fine_path, coarse_path;
    init->add_option("--model", model_path)->required();
    init->add_option("--fine", fine_path)->required();
    init->add_option("--coarse", coarse_path)->required();
    init->callback([&] {
      run = [&] {
        PathModel m = model_from_json(load_json_file(model_path));
        Screen fine = screen_from_json(load_json_file(fine_path));
        Screen coarse = screen_from_json(load_json_file(coarse_path));
        auto res = init_functor(m, fine, coarse);
        Json vm;
        for (std::size_t u = 0; u < res.coarse.size(); ++u)
          vm[fmt_pixel_index(res.coarse.vertices[u])] =
              fmt_pixel_index(res.fine.vertices[res.vertex_map[u]]);
        report.payload["vertex_map"] = vm;
        report.payload["functorial"] = res.ok;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });
  }

  // ---- sheaf-check ----
  auto* sheaf = app.add_subcommand("sheaf-check", "equalizer of a finite screen cover");
  {
    static std::string model_path, screens_csv, joined_path;
    sheaf->add_option("--model", model_path)->required();
    sheaf->add_option("--screens", screens_csv, "comma-separated screen JSON paths")->required();
    sheaf->add_option("--joined", joined_path)->required();
    sheaf->callback([&] {
      run = [&] {
        PathModel m = model_from_json(load_json_file(model_path));
        std::vector<Screen> screens;
        for (const auto& path : split_csv(screens_csv))
          screens.push_back(screen_from_json(load_json_file(path)));
        Screen joined = screen_from_json(load_json_file(joined_path));
        auto res = sheaf_equalizer_check(m, screens, joined);
        report.payload["equalizer"] = res.ok;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });
  }

  // ---- lattice pixelate ----
  auto* lat = app.add_subcommand("lattice", "lattice-site operations");
  auto* lat_pix = lat->add_subcommand("pixelate", "pixelate a sublattice at Y");
  {
    static std::string lattice_path, sub_csv, y_name;
    lat_pix->add_option("--lattice", lattice_path, "ambient lattice JSON")->required();
    lat_pix->add_option("--sub", sub_csv, "sublattice elements (default: all)");
    lat_pix->add_option("--y", y_name, "element of the ambient lattice")->required();
    lat_pix->callback([&] {
      run = [&] {
        FiniteLattice L = lattice_from_json(load_json_file(lattice_path));
        std::vector<std::size_t> C;
        if (sub_csv.empty())
          for (std::size_t i = 0; i < L.size(); ++i) C.push_back(i);
        else
          for (const auto& name : split_csv(sub_csv)) C.push_back(L.index_of(name));
        auto pix_res = pixelate_lattice(L, C, L.index_of(y_name));
        report.payload["axioms"] = axiom_json(pix_res.axioms);
        report.payload["isomorphic"] = pix_res.isomorphic;
        if (pix_res.isomorphic) {
          report.payload["lattice"] = to_json(pix_res.result);
          report.payload["labels"] = pix_res.canonical_labels;
        } else {
          report.status = "fail";
          report.witnesses.push_back(pix_res.witness);
        }
      };
    });
  }

  // ---- spec-zn ----
  auto* spec = app.add_subcommand("spec-zn", "Zariski spectrum of Z/n");
  {
    static unsigned long long n = 0;
    spec->add_option("n", n, "modulus")->required();
    spec->callback([&] {
      run = [&] {
        FiniteTopology t = spec_zn(n);
        report.payload["points"] = t.points;
        report.payload["opens"] = t.opens.size();
        report.payload["topology"] = to_json(t);
      };
    });
  }

  // ---- subspace-check ----
  auto* subspace = app.add_subcommand("subspace-check", "subspace topology vs pixelation");
  {
    static std::string topo_path, y_csv;
    subspace->add_option("--topology", topo_path)->required();
    subspace->add_option("--y", y_csv, "comma-separated points of the subset");
    subspace->callback([&] {
      run = [&] {
        FiniteTopology X = topology_from_json(load_json_file(topo_path));
        std::vector<bool> Y(X.points.size(), false);
        for (const auto& name : split_csv(y_csv)) {
          auto it = std::find(X.points.begin(), X.points.end(), name);
          if (it == X.points.end()) throw input_error("unknown point '" + name + "'");
          Y[(std::size_t)(it - X.points.begin())] = true;
        }
        auto res = subspace_pixelation_check(X, Y);
        report.payload["isomorphic"] = res.ok;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });
  }

  // ---- rep ----
  auto* rep_cmd = app.add_subcommand("rep", "representation operations");
  {
    static std::string op, model_path, screen_path, coarse_path, rep_path, rep2_path;
    static bool windowed = false;
    static unsigned degree = 1;
    rep_cmd->add_option("op", op, "validate|pixel-check|pushdown|lift|ext")->required();
    rep_cmd->add_option("--model", model_path)->required();
    rep_cmd->add_option("--screen", screen_path, "screen carrying the representation")->required();
    rep_cmd->add_option("--coarse", coarse_path, "coarse screen (pixel-check/pushdown/lift)");
    rep_cmd->add_option("--rep", rep_path)->required();
    rep_cmd->add_option("--rep2", rep2_path, "second representation (ext)");
    rep_cmd->add_option("-i,--degree", degree, "ext degree");
    rep_cmd->add_flag("--windowed", windowed);
    rep_cmd->callback([&] {
      run = [&] {
        PathModel m = model_from_json(load_json_file(model_path));
        Screen s = screen_from_json(load_json_file(screen_path));
        SkeletonQuiver sk = build_skeleton(m, s, {.windowed = windowed});
        QuiverRep rep = rep_from_json(load_json_file(rep_path), sk);
        if (op == "validate") {
          auto res = validate_rep(rep, sk);
          report.payload["valid"] = res.ok;
          if (!res.ok) {
            report.status = "fail";
            report.witnesses.push_back(res.witness);
          }
        } else if (op == "pixel-check") {
          if (coarse_path.empty()) throw input_error("pixel-check needs --coarse");
          Screen coarse = screen_from_json(load_json_file(coarse_path));
          auto res = is_pixelated(sk, rep, coarse);
          report.payload["pixelated"] = res.ok;
          if (!res.ok) {
            report.status = "fail";
            report.witnesses.push_back(res.witness);
          }
        } else if (op == "pushdown") {
          if (coarse_path.empty()) throw input_error("pushdown needs --coarse");
          Screen coarse = screen_from_json(load_json_file(coarse_path));
          SkeletonQuiver csk = build_skeleton(m, coarse, {.windowed = windowed});
          report.payload["rep"] = rep_to_json(pushdown(sk, rep, csk), csk);
        } else if (op == "lift") {
          if (coarse_path.empty()) throw input_error("lift needs --coarse (the fine screen)");
          Screen fine = screen_from_json(load_json_file(coarse_path));
          SkeletonQuiver fsk = build_skeleton(m, fine, {.windowed = windowed});
          report.payload["rep"] = rep_to_json(lift(sk, rep, fsk), fsk);
        } else if (op == "ext") {
          if (rep2_path.empty()) throw input_error("ext needs --rep2");
          QuiverRep rep2 = rep_from_json(load_json_file(rep2_path), sk);
          report.payload["ext_dim"] = ext_dim(rep, rep2, sk, degree);
        } else {
          throw input_error("unknown rep op '" + op + "'");
        }
      };
    });
  }

  // ---- aus ----
  auto* aus = app.add_subcommand("aus", "higher Auslander pipeline");
  {
    auto* quiver = aus->add_subcommand("quiver", "the quiver of type A");
    static int qn = 2, qm = 5;
    quiver->add_option("-n", qn)->required();
    quiver->add_option("-m", qm)->required();
    quiver->add_option("--dot", dot_path, "write the quiver as DOT");
    quiver->callback([&] {
      run = [&] {
        HigherAuslanderQuiver q = higher_auslander_quiver(qn, qm);
        report.payload["quiver"] = to_json(q);
        report.payload["vertices"] = q.vertices.size();
        report.payload["arrows"] = q.arrows.size();
        if (!dot_path.empty()) write_file(dot_path, aus_quiver_dot(q));
      };
    });

    auto* vphi = aus->add_subcommand("verify-phi", "pixelation vs quiver hom tables");
    static int vn = 2, vm = 2;
    static std::string cuts_csv;
    vphi->add_option("-n", vn)->required();
    vphi->add_option("-m", vm)->required();
    vphi->add_option("--cuts", cuts_csv, "m+n-2 rationals in (0,1)")->required();
    vphi->callback([&] {
      run = [&] {
        auto res = verify_phi_isomorphism(vn, vm, parse_rat_list(cuts_csv));
        report.payload["vertices"] = res.vertices;
        report.payload["pairs_checked"] = res.pairs_checked;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });

    auto* resolve = aus->add_subcommand("resolve", "interval module resolutions");
    static int rn = 1;
    static std::string x_csv, c_str, rcuts_csv;
    resolve->add_option("-n", rn)->required();
    resolve->add_option("--x", x_csv, "projective source coordinates")->required();
    resolve->add_option("--c", c_str, "cutoff")->required();
    resolve->add_option("--cuts", rcuts_csv, "screen cuts (default: the coordinates)");
    resolve->callback([&] {
      run = [&] {
        Point x = parse_rat_list(x_csv);
        if ((int)x.size() != rn) throw input_error("-n disagrees with the source length");
        IntervalModuleSpec spec(x, parse_rat(c_str));
        IntervalResolutions r = interval_resolutions(spec);
        Json projs = Json::array();
        for (const auto& src : r.projective_sources) projs.push_back(to_json(src));
        Json injs = Json::array();
        for (const auto& ispec : r.injectives)
          injs.push_back(Json{{"source", to_json(ispec.source)}, {"c", fmt_rat(ispec.cutoff)}});
        report.payload["projective_sources"] = projs;
        report.payload["injectives"] = injs;

        std::vector<Rat> cuts;
        if (rcuts_csv.empty()) {
          for (const auto& v : x)
            if (0 < v && v < 1) cuts.push_back(v);
          if (0 < spec.cutoff && spec.cutoff < 1) cuts.push_back(spec.cutoff);
          std::sort(cuts.begin(), cuts.end());
          cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        } else {
          cuts = parse_rat_list(rcuts_csv);
        }
        if ((int)cuts.size() >= rn - 1) {
          AusScreen as(rn, cuts);
          SkeletonQuiver sk = build_skeleton(PathModel::aus(rn), as.to_screen());
          auto check = check_interval_resolutions(spec, as, sk);
          report.payload["exact"] = check.ok;
          report.payload["projective_length"] = check.projective_length;
          report.payload["injective_length"] = check.injective_length;
          if (!check.ok) {
            report.status = "fail";
            report.witnesses.push_back(check.witness);
          }
        }
      };
    });

    auto* cluster = aus->add_subcommand("cluster-check", "Ext orthogonality of the module family");
    static int cn = 3, cm = 2;
    static std::string ccuts_csv;
    cluster->add_option("-n", cn)->required();
    cluster->add_option("-m", cm)->required();
    cluster->add_option("--cuts", ccuts_csv)->required();
    cluster->callback([&] {
      run = [&] {
        auto res = cluster_tilting_check(cn, cm, parse_rat_list(ccuts_csv));
        report.payload["family"] = res.family_size;
        report.payload["non_members"] = res.non_members;
        report.payload["ext_pairs_checked"] = res.ext_pairs_checked;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });

    auto* thmb = aus->add_subcommand("theorem-b", "the opposite-category bijection");
    static int bn = 1;
    static unsigned denom = 8;
    thmb->add_option("-n", bn)->required();
    thmb->add_option("--denominator", denom)->required();
    thmb->callback([&] {
      run = [&] {
        auto res = theoremB_check(bn, denom);
        report.payload["objects"] = res.objects;
        report.payload["pairs_checked"] = res.pairs_checked;
        if (!res.ok) {
          report.status = "fail";
          report.witnesses.push_back(res.witness);
        }
      };
    });
  }

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "brute-force localization of a finite thin category");
  {
    static std::string cat_path, sigma_path;
    oracle->add_option("--cat", cat_path)->required();
    oracle->add_option("--sigma", sigma_path, "JSON array of [src,tgt] object names")->required();
    oracle->callback([&] {
      run = [&] {
        FiniteThinCategory cat = thincat_from_json(load_json_file(cat_path));
        cat.validate_factorization_closure();
        Json sj = load_json_file(sigma_path);
        std::vector<std::pair<std::size_t, std::size_t>> sigma;
        for (const auto& pair : sj) {
          if (!pair.is_array() || pair.size() != 2) throw input_error("sigma entries are pairs");
          sigma.push_back({cat.index_of(pair[0].get<std::string>()),
                           cat.index_of(pair[1].get<std::string>())});
        }
        LocalizedCategory loc = localization_oracle(cat, sigma);
        report.payload["classes"] = loc.classes.size();
        Json dead = Json::array();
        for (std::size_t c = 0; c < loc.classes.size(); ++c)
          if (loc.dead[c]) dead.push_back(c);
        report.payload["dead_classes"] = dead;
        report.payload["category"] = to_json(loc.surviving(cat));
      };
    });
  }

  // parent options like --out may follow the subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands({})) {
      sub->fallthrough(true);
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report.status = "error";
    report.witnesses = {e.what()};
    emit(report, "");
    return 2;
  }

  try {
    run();
  } catch (const input_error& e) {
    report.status = "error";
    report.payload = Json::object();
    report.witnesses = {e.what()};
  } catch (const std::exception& e) {
    report.status = "error";
    report.payload = Json::object();
    report.witnesses = {std::string("internal: ") + e.what()};
  }
  try {
    emit(report, out_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return report.exit_code();
}
