#include "piercing/io.hpp"

#include <fstream>
#include <sstream>

#include "piercing/error.hpp"

namespace piercing {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

RatVec vec_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of scalars");
  RatVec out;
  for (const Json& e : j) out.push_back(rat_from_json(e));
  return out;
}

Point3 point_from_json(const Json& j) {
  RatVec v = vec_from_json(j);
  if (v.size() != 3) parse_error("expected a point with three coordinates");
  return {v[0], v[1], v[2]};
}

GridInstance grid_from_json(const Json& doc) {
  RatVec x = vec_from_json(field(doc, "x"));
  RatVec y = vec_from_json(field(doc, "y"));
  const Json& zj = field(doc, "Z");
  if (!zj.is_array()) parse_error("Z must be an array of rows");
  RatMat z;
  for (const Json& row : zj) z.push_back(vec_from_json(row));
  return GridInstance::build(std::move(x), std::move(y), std::move(z));
}

HighDimInstance highdim_from_json(const Json& doc) {
  const Json& dj = field(doc, "d");
  if (!dj.is_number_unsigned()) parse_error("d must be a positive integer");
  const std::size_t d = dj.get<std::size_t>();
  if (d < 2 || d > 10) throw Error(ErrorCode::Dimension, "d must lie in [2, 10]");
  std::vector<Triple3> base;
  for (const Json& triple : field(doc, "x")) {
    RatVec v = vec_from_json(triple);
    if (v.size() != 3) parse_error("every base coordinate needs exactly three values");
    base.push_back({v[0], v[1], v[2]});
  }
  std::size_t nodes = 1;
  for (std::size_t k = 0; k < d; ++k) nodes *= 3;
  std::vector<RatVec> fibers(nodes);
  std::vector<bool> seen(nodes, false);
  const Json& zj = field(doc, "z");
  if (!zj.is_object()) parse_error("z must map \"t1,...,td\" keys to fiber points");
  for (const auto& [key, value] : zj.items()) {
    MultiIndex t;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.size() != 1 || part[0] < '1' || part[0] > '3') parse_error("bad multi-index key '" + key + "'");
      t.push_back(part[0] - '0');
    }
    if (t.size() != d) parse_error("multi-index key '" + key + "' does not have d entries");
    const std::size_t code = HighDimInstance::code(t);
    if (seen[code]) parse_error("duplicate multi-index key '" + key + "'");
    seen[code] = true;
    fibers[code] = vec_from_json(value);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) parse_error("z must list all 3^d grid nodes");
  return HighDimInstance::build(d, std::move(base), std::move(fibers));
}

std::vector<ConvexPiece> pieces_from_json(const Json& arr) {
  if (!arr.is_array()) parse_error("scene families must be arrays");
  std::vector<ConvexPiece> out;
  for (const Json& pj : arr) {
    ConvexPiece piece;
    for (const Json& v : field(pj, "vertices")) piece.vertices.push_back(point_from_json(v));
    const Json& plane = field(pj, "plane");
    const Json& span = field(plane, "span");
    if (!span.is_array() || span.size() != 2) parse_error("plane span needs two vectors");
    piece.plane = Plane{point_from_json(field(plane, "point")), point_from_json(span[0]), point_from_json(span[1])};
    out.push_back(std::move(piece));
  }
  return out;
}

Json pieces_to_json(const std::vector<ConvexPiece>& pieces) {
  Json arr = Json::array();
  for (const ConvexPiece& piece : pieces) {
    Json verts = Json::array();
    for (const Point3& v : piece.vertices) verts.push_back(to_json(v));
    arr.push_back({{"vertices", verts},
                   {"plane",
                    {{"point", to_json(piece.plane.point)},
                     {"span", Json::array({to_json(piece.plane.span_u), to_json(piece.plane.span_v)})}}}});
  }
  return arr;
}

Json indices(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
  if (j.is_number_float()) parse_error("floating-point JSON numbers are not exact; write the value as a string");
  parse_error("expected a rational scalar");
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& q : v) arr.push_back(to_json(q));
  return arr;
}

Json to_json(const RatMat& m) {
  Json arr = Json::array();
  for (const RatVec& row : m) arr.push_back(to_json(row));
  return arr;
}

Json to_json(const Point3& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

Json to_json(const GridInstance& inst) {
  return {{"kind", "grid"}, {"x", to_json(inst.x())}, {"y", to_json(inst.y())}, {"Z", to_json(inst.z())}};
}

Json to_json(const HighDimInstance& inst) {
  Json base = Json::array();
  for (std::size_t k = 0; k < inst.d(); ++k) {
    const Triple3& b = inst.base(k);
    base.push_back(Json::array({to_json(b[0]), to_json(b[1]), to_json(b[2])}));
  }
  Json z = Json::object();
  for (std::size_t node = 0; node < inst.num_nodes(); ++node) {
    const MultiIndex t = inst.decode(node);
    std::string key;
    for (std::size_t k = 0; k < t.size(); ++k) key += (k ? "," : "") + std::to_string(t[k]);
    z[key] = to_json(inst.fiber(node));
  }
  return {{"kind", "highdim"}, {"d", inst.d()}, {"x", base}, {"z", z}};
}

Json to_json(const GeneralScene& scene) {
  return {{"kind", "scene"}, {"A", pieces_to_json(scene.family_a)}, {"B", pieces_to_json(scene.family_b)}};
}

Json to_json(const PlaneLine& line) {
  return {{"axis", std::string(to_string(line.axis))},
          {"plane_value", to_json(line.plane_value)},
          {"slope", to_json(line.slope)},
          {"intercept", to_json(line.intercept)}};
}

Json to_json(const Line3& line) { return {{"point", to_json(line.point)}, {"direction", to_json(line.direction)}}; }

Json to_json(const ZInterval& interval) {
  if (interval.is_empty()) return nullptr;
  return Json::array({to_json(interval.lo()), to_json(interval.hi())});
}

Json to_json(const PierceReport& report) {
  return {{"axis", std::string(to_string(report.axis))},
          {"heights", to_json(report.heights)},
          {"pierced", report.pierced},
          {"all", report.all()}};
}

Json to_json(const PiercingResult& result) {
  return {{"axis", std::string(to_string(result.axis))},
          {"line", to_json(result.line)},
          {"beta", to_json(result.witness.beta)},
          {"verification", to_json(result.report)}};
}

Json to_json(const DualCertificate& cert) {
  const bool x = cert.side == Axis::X;
  return {{"side", std::string(to_string(cert.side))},
          {x ? "u1" : "v1", to_json(cert.row1)},
          {x ? "u2" : "v2", to_json(cert.row2)},
          {x ? "u3" : "v3", to_json(cert.row3)}};
}

Json to_json(const ContradictionLedger& l) {
  return {{"linear_rows_hold", l.linear_rows_hold},
          {"branch", std::string(to_string(l.branch))},
          {"violated", l.violated.label()},
          {"x_primed", to_json(l.x_primed)},
          {"y_primed", to_json(l.y_primed)},
          {"z_primed", to_json(l.z_primed)},
          {"I_plus", indices(l.i_plus)},
          {"I_minus", indices(l.i_minus)},
          {"J_plus", indices(l.j_plus)},
          {"J_minus", indices(l.j_minus)},
          {"aggregates",
           {{"u1+", to_json(l.u1_plus)}, {"u1-", to_json(l.u1_minus)}, {"x+", to_json(l.x_plus)},
            {"x-", to_json(l.x_minus)},   {"v1+", to_json(l.v1_plus)}, {"v1-", to_json(l.v1_minus)},
            {"y+", to_json(l.y_plus)},    {"y-", to_json(l.y_minus)},  {"v2+", to_json(l.v2_plus)},
            {"v2-", to_json(l.v2_minus)}, {"u3+", to_json(l.u3_plus)}, {"u3-", to_json(l.u3_minus)},
            {"u2+", to_json(l.u2_plus)},  {"u2-", to_json(l.u2_minus)}, {"v3+", to_json(l.v3_plus)},
            {"v3-", to_json(l.v3_minus)}}},
          {"parts", Json::array({to_json(l.part1), to_json(l.part2), to_json(l.part3), to_json(l.part4)})},
          {"pair_sum", to_json(l.pair_sum)}};
}

Json to_json(const FuzzReport& report) {
  const FuzzSample& s = report.sample;
  return {{"seed", s.seed},
          {"rejections", s.rejections},
          {"x", to_json(s.x)},
          {"y", to_json(s.y)},
          {"Z", to_json(s.z)},
          {"U", to_json(s.u)},
          {"V", to_json(s.v)},
          {"ledger", to_json(report.ledger)}};
}

Json to_json(const Lemma33Trace& t) {
  return {{"z_p22", to_json(t.z_p22)},
          {"z_px", to_json(t.z_px)},
          {"z_py", to_json(t.z_py)},
          {"z_r", to_json(t.z_r)},
          {"x_test", to_json(t.x_test)},
          {"y_test", to_json(t.y_test)},
          {"axis", std::string(to_string(t.axis))},
          {"z_star", to_json(t.z_star)},
          {"lambda", to_json(t.lambda)},
          {"endpoints", Json::array({to_json(t.first_endpoint), to_json(t.last_endpoint)})},
          {"line", to_json(t.line)},
          {"verification", to_json(t.report)}};
}

Json to_json(const FracResult& r) {
  return {{"axis", std::string(to_string(r.axis))},
          {"plane_index", r.plane_index},
          {"line", to_json(r.line)},
          {"count", r.count},
          {"x_good", r.x_good},
          {"y_good", r.y_good},
          {"delta", to_json(r.delta)},
          {"alpha", to_json(r.alpha)},
          {"kalai_constant", "1 - (1/2)^(1/3)"},
          {"kalai_constant_approx", r.kalai_constant}};
}

Json to_json(const SplitWitness& w) {
  return {{"index", w.index},
          {"point", to_json(w.point)},
          {"inside_subsets", w.inside_subsets},
          {"inside_coeffs", to_json(w.inside_coeffs)},
          {"outside_subsets", w.outside_subsets},
          {"outside_coeffs", to_json(w.outside_coeffs)}};
}

Json to_json(const HighDimPierce& r) {
  return {{"index", r.index},
          {"p1", to_json(r.p1)},
          {"p3", to_json(r.p3)},
          {"q", to_json(r.q)},
          {"split", to_json(r.split)},
          {"hull1", to_json(r.hull1)},
          {"hull2", to_json(r.hull2)},
          {"hull3", to_json(r.hull3)},
          {"fallback_used", r.fallback_used}};
}

Json to_json(const CounterexampleReport& r) {
  Json cells = Json::array();
  for (std::size_t k = 0; k < r.intersections.size(); ++k) {
    const auto& p = r.intersections[k];
    cells.push_back({{"A", k / 3}, {"B", k % 3}, {"common_point", p ? to_json(*p) : Json(nullptr)}});
  }
  return {{"intersections", cells},
          {"line_in_B2_plane", r.line_in_b2_plane ? to_json(*r.line_in_b2_plane) : Json(nullptr)},
          {"line_in_A2_plane", r.line_in_a2_plane ? to_json(*r.line_in_a2_plane) : Json(nullptr)},
          {"holds", r.holds()}};
}

Instance instance_from_json(const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) parse_error("kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "grid") return grid_from_json(doc);
  if (k == "highdim") return highdim_from_json(doc);
  if (k == "scene") {
    GeneralScene scene{pieces_from_json(field(doc, "A")), pieces_from_json(field(doc, "B"))};
    scene.validate();
    return scene;
  }
  parse_error("unknown instance kind '" + k + "'");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path + "': " + e.what());
  }
  return instance_from_json(doc);
}

void save_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) parse_error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace piercing
