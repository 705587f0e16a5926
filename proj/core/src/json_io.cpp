#include "pixcat/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace pixcat {

namespace {

std::string vertex_key(const PixelIndex& ix) {
  std::string out;
  for (std::size_t i = 0; i < ix.size(); ++i) out += (i ? "," : "") + std::to_string(ix[i]);
  return out;
}

PixelIndex vertex_from_key(const std::string& key) {
  PixelIndex ix;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    auto comma = key.find(',', pos);
    std::string tok = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw input_error("bad vertex key '" + key + "'");
    ix.push_back((std::size_t)std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ix;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fmt_rat(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  if (!j.is_array() || j.size() != rows)
    throw input_error("matrix row count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw input_error("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

Json to_json(const Rat& r) { return fmt_rat(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw input_error("rational must be a string 'p/q'");
  return parse_rat(j.get<std::string>());
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(fmt_rat(c));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("point must be an array of rationals");
  Point p;
  for (const auto& c : j) p.push_back(rat_from_json(c));
  return p;
}

Json to_json(const PathModel& m) {
  Json pred;
  switch (m.predicate.kind) {
    case NonzeroPredicate::Kind::Free: pred["kind"] = "free"; break;
    case NonzeroPredicate::Kind::MaxLength:
      pred["kind"] = "max_length";
      pred["d"] = fmt_rat(m.predicate.max_length);
      break;
    case NonzeroPredicate::Kind::AuslanderChain: pred["kind"] = "auslander"; break;
  }
  return Json{{"dimension", m.dimension}, {"predicate", pred}};
}

PathModel model_from_json(const Json& j) {
  if (!j.contains("dimension") || !j.contains("predicate"))
    throw input_error("model needs 'dimension' and 'predicate'");
  int n = j.at("dimension").get<int>();
  const Json& pred = j.at("predicate");
  std::string kind = pred.at("kind").get<std::string>();
  if (kind == "free") return PathModel::free(n);
  if (kind == "auslander") return PathModel::aus(n);
  if (kind == "max_length") {
    if (n != 1) throw input_error("max_length predicate is only defined in dimension 1");
    return PathModel::max_len(rat_from_json(pred.at("d")));
  }
  throw input_error("unknown predicate kind '" + kind + "'");
}

Json to_json(const Screen& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors()) {
    Json cuts = Json::array();
    for (const auto& b : f.boundaries())
      cuts.push_back(Json{{"at", fmt_rat(b.at)},
                          {"owner", b.owner == Boundary::Owner::Lower ? "lower" : "upper"}});
    factors.push_back(Json{{"boundaries", cuts}});
  }
  return Json{{"factors", factors}};
}

Screen screen_from_json(const Json& j) {
  if (!j.contains("factors")) throw input_error("screen needs 'factors'");
  std::vector<ScreenFactor> fs;
  for (const auto& f : j.at("factors")) {
    std::vector<Boundary> cuts;
    for (const auto& b : f.at("boundaries")) {
      std::string owner = b.at("owner").get<std::string>();
      if (owner != "lower" && owner != "upper") throw input_error("owner must be lower|upper");
      cuts.push_back(Boundary{rat_from_json(b.at("at")),
                              owner == "lower" ? Boundary::Owner::Lower : Boundary::Owner::Upper});
    }
    fs.push_back(ScreenFactor(std::move(cuts)));
  }
  return Screen(std::move(fs));
}

Json to_json(const FinitePartition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  return Json{{"ground", p.ground()}, {"blocks", blocks}};
}

FinitePartition partition_from_json(const Json& j) {
  if (!j.contains("ground") || !j.contains("blocks"))
    throw input_error("partition needs 'ground' and 'blocks'");
  return FinitePartition(j.at("ground").get<std::vector<std::string>>(),
                         j.at("blocks").get<std::vector<std::vector<std::string>>>());
}

Json to_json(const SkeletonQuiver& q) {
  Json verts = Json::array();
  for (const auto& ix : q.vertices) verts.push_back(vertex_key(ix));
  Json arrows = Json::array();
  for (auto [a, b] : q.arrows) arrows.push_back(Json::array({vertex_key(q.vertices[a]), vertex_key(q.vertices[b])}));
  Json pruned = Json::array();
  for (auto [a, b] : q.pruned_arrows)
    pruned.push_back(Json::array({vertex_key(q.vertices[a]), vertex_key(q.vertices[b])}));
  Json hom = Json::array();
  for (const auto& row : q.hom)
    for (int bit : row) hom.push_back(bit);
  Json samples;
  for (std::size_t v = 0; v < q.size(); ++v) samples[vertex_key(q.vertices[v])] = to_json(q.samples[v]);
  return Json{{"vertices", verts}, {"arrows", arrows},       {"pruned_arrows", pruned},
              {"hom", hom},        {"samples", samples},     {"screen", to_json(q.screen)}};
}

Json to_json(const FiniteThinCategory& c) {
  Json hom = Json::array();
  for (const auto& row : c.hom_matrix()) hom.push_back(row);
  return Json{{"objects", c.objects()}, {"hom", hom}};
}

FiniteThinCategory thincat_from_json(const Json& j) {
  if (!j.contains("objects") || !j.contains("hom"))
    throw input_error("thin category needs 'objects' and 'hom'");
  return FiniteThinCategory(j.at("objects").get<std::vector<std::string>>(),
                            j.at("hom").get<std::vector<std::vector<int>>>());
}

Json to_json(const FiniteLattice& l) {
  Json pairs = Json::array();
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) pairs.push_back(Json::array({l.elements()[a], l.elements()[b]}));
  return Json{{"elements", l.elements()}, {"leq", pairs}};
}

FiniteLattice lattice_from_json(const Json& j) {
  if (!j.contains("elements") || !j.contains("leq"))
    throw input_error("lattice needs 'elements' and 'leq'");
  auto elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<int>> leq(elements.size(), std::vector<int>(elements.size(), 0));
  auto index = [&](const std::string& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw input_error("unknown element '" + s + "' in leq");
    return (std::size_t)(it - elements.begin());
  };
  for (std::size_t i = 0; i < elements.size(); ++i) leq[i][i] = 1;
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2) throw input_error("leq entries are pairs");
    leq[index(pair[0].get<std::string>())][index(pair[1].get<std::string>())] = 1;
  }
  // transitive closure so users may specify covering pairs only
  const std::size_t n = elements.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = 1;
  return FiniteLattice(std::move(elements), std::move(leq));
}

Json to_json(const FiniteTopology& t) {
  Json opens = Json::array();
  for (const auto& o : t.opens) {
    Json members = Json::array();
    for (std::size_t p = 0; p < t.points.size(); ++p)
      if (o[p]) members.push_back(t.points[p]);
    opens.push_back(std::move(members));
  }
  return Json{{"points", t.points}, {"opens", opens}};
}

FiniteTopology topology_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("opens"))
    throw input_error("topology needs 'points' and 'opens'");
  auto points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<bool>> opens;
  for (const auto& o : j.at("opens")) {
    std::vector<bool> s(points.size(), false);
    for (const auto& name : o) {
      auto it = std::find(points.begin(), points.end(), name.get<std::string>());
      if (it == points.end()) throw input_error("open set mentions unknown point");
      s[(std::size_t)(it - points.begin())] = true;
    }
    opens.push_back(std::move(s));
  }
  return make_topology(std::move(points), std::move(opens));
}

Json rep_to_json(const QuiverRep& rep, const SkeletonQuiver& sk) {
  Json dims;
  for (std::size_t v = 0; v < sk.size(); ++v) dims[vertex_key(sk.vertices[v])] = rep.dims[v];
  Json mats;
  for (auto [a, b] : sk.arrows)
    mats[vertex_key(sk.vertices[a]) + "->" + vertex_key(sk.vertices[b])] = mat_to_json(rep.mat({a, b}));
  return Json{{"dims", dims}, {"mats", mats}};
}

QuiverRep rep_from_json(const Json& j, const SkeletonQuiver& sk) {
  if (!j.contains("dims")) throw input_error("representation needs 'dims'");
  QuiverRep rep;
  rep.dims.assign(sk.size(), 0);
  for (const auto& [key, val] : j.at("dims").items())
    rep.dims[sk.vertex_ordinal(vertex_from_key(key))] = val.get<std::size_t>();
  const Json mats = j.value("mats", Json::object());
  for (auto [a, b] : sk.arrows) {
    std::string key = vertex_key(sk.vertices[a]) + "->" + vertex_key(sk.vertices[b]);
    if (mats.contains(key))
      rep.mats[{a, b}] = mat_from_json(mats.at(key), rep.dims[b], rep.dims[a]);
    else
      rep.mats[{a, b}] = Mat(rep.dims[b], rep.dims[a]);
  }
  return rep;
}

Json morphism_to_json(const RepMorphism& f, const SkeletonQuiver& sk) {
  Json comps;
  for (std::size_t v = 0; v < sk.size(); ++v)
    comps[vertex_key(sk.vertices[v])] = mat_to_json(f.comps[v]);
  return Json{{"comps", comps}};
}

Json to_json(const HigherAuslanderQuiver& q) {
  Json verts = Json::array();
  auto key = [](const AusVertex& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
  };
  for (const auto& v : q.vertices) verts.push_back(key(v));
  Json arrows = Json::array();
  for (auto [a, b] : q.arrows) arrows.push_back(Json::array({key(q.vertices[a]), key(q.vertices[b])}));
  Json hom = Json::array();
  for (const auto& row : q.hom)
    for (int bit : row) hom.push_back(bit);
  return Json{{"n", q.n}, {"m", q.m}, {"vertices", verts}, {"arrows", arrows}, {"hom", hom}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace pixcat
