#include "genpos/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace genpos {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

double get_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) bad_field(field, "expected a number");
  return j[field].get<double>();
}

Vec parse_vec(const json& arr, int dim, const std::string& field) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    bad_field(field, "expected an array of " + std::to_string(dim) + " numbers");
  Vec v = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (!arr[static_cast<size_t>(i)].is_number()) bad_field(field, "expected numbers");
    v[i] = arr[static_cast<size_t>(i)].get<double>();
  }
  return v;
}

Box parse_box(const json& j, int dim, const std::string& field) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    bad_field(field, "expected an object with lo and hi arrays");
  Vec lo = parse_vec(j["lo"], dim, field + ".lo");
  Vec hi = parse_vec(j["hi"], dim, field + ".hi");
  for (int i = 0; i < dim; ++i)
    if (lo[i] > hi[i]) bad_field(field, "lo exceeds hi");
  return Box::from_corners(lo, hi);
}

json box_to_json(const Box& b) {
  json lo = json::array(), hi = json::array();
  for (int i = 0; i < b.dim; ++i) {
    lo.push_back(b.c[static_cast<size_t>(i)].lo);
    hi.push_back(b.c[static_cast<size_t>(i)].hi);
  }
  return json{{"lo", lo}, {"hi", hi}};
}

const char* status_name(SeparationStatus s) {
  return s == SeparationStatus::Disjoint ? "disjoint" : "undecided";
}

const char* reason_name(UndecidedReason r) {
  switch (r) {
    case UndecidedReason::None: return "none";
    case UndecidedReason::ToleranceReached: return "tolerance";
    case UndecidedReason::DepthCapReached: return "depth-cap";
  }
  return "?";
}

}  // namespace

IFSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_field("system", "expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    bad_field("dim", "expected an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1 || dim > kMaxDim) bad_field("dim", "must be 1, 2 or 3");
  if (!j.contains("maps") || !j["maps"].is_array())
    bad_field("maps", "expected an array");
  std::vector<AffineMap> maps;
  for (size_t i = 0; i < j["maps"].size(); ++i) {
    const json& mj = j["maps"][i];
    std::string field = "maps[" + std::to_string(i) + "]";
    if (!mj.is_object() || !mj.contains("matrix") || !mj.contains("offset"))
      bad_field(field, "expected matrix and offset");
    const json& rows = mj["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
      bad_field(field + ".matrix", "expected " + std::to_string(dim) + " rows");
    Mat m;
    m.dim = dim;
    for (int r = 0; r < dim; ++r) {
      Vec row = parse_vec(rows[static_cast<size_t>(r)], dim, field + ".matrix");
      for (int c = 0; c < dim; ++c) m.at(r, c) = row[c];
    }
    Vec offset = parse_vec(mj["offset"], dim, field + ".offset");
    std::optional<double> ratio;
    if (mj.contains("ratio")) {
      if (!mj["ratio"].is_number()) bad_field(field + ".ratio", "expected a number");
      ratio = mj["ratio"].get<double>();
    }
    maps.push_back(AffineMap::contraction(m, offset, ratio));
  }
  if (!j.contains("hull")) bad_field("hull", "missing");
  return IFSystem::create(std::move(maps), parse_box(j["hull"], dim, "hull"));
}

FamilyDescriptor family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad_field("kind", "expected a string");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "exact-overlap") {
    Box domain = parse_box(j.contains("domain")
                               ? j["domain"]
                               : json{{"lo", {0.0}}, {"hi", {1.0 / 9.0}}},
                           1, "domain");
    return FamilyDescriptor::exact_overlap(get_number(j, "b"), domain);
  }
  if (kind == "one-point") {
    Box domain = parse_box(j.contains("domain")
                               ? j["domain"]
                               : json{{"lo", {0.0}}, {"hi", {1.0 / 36.0}}},
                           1, "domain");
    return FamilyDescriptor::one_point(get_number(j, "p"), get_number(j, "r"), domain);
  }
  if (kind == "translation-single" || kind == "translation-all") {
    if (!j.contains("system")) bad_field("system", "missing");
    IFSystem base = system_from_json(j["system"]);
    int pd = kind == "translation-single" ? base.dim()
                                          : base.dim() * base.map_count();
    if (pd > kMaxDim)
      bad_field("system", "translation-all parameter space exceeds 3 coordinates");
    Box domain = parse_box(j.contains("domain") ? j["domain"] : json(), pd, "domain");
    if (kind == "translation-single") {
      if (!j.contains("index") || !j["index"].is_number_integer())
        bad_field("index", "expected an integer map index");
      return FamilyDescriptor::translation_single(std::move(base),
                                                  j["index"].get<int>(), domain);
    }
    return FamilyDescriptor::translation_all(std::move(base), domain);
  }
  bad_field("kind", "unknown family kind '" + kind + "'");
}

nlohmann::json system_to_json(const IFSystem& s) {
  json maps = json::array();
  for (const AffineMap& m : s.maps) {
    json rows = json::array();
    for (int r = 0; r < s.dim(); ++r) {
      json row = json::array();
      for (int c = 0; c < s.dim(); ++c) row.push_back(m.matrix.at(r, c));
      rows.push_back(row);
    }
    json offset = json::array();
    for (int i = 0; i < s.dim(); ++i) offset.push_back(m.offset[i]);
    maps.push_back(json{{"matrix", rows}, {"offset", offset}, {"ratio", m.ratio}});
  }
  return json{{"dim", s.dim()}, {"maps", maps}, {"hull", box_to_json(s.hull)}};
}

nlohmann::json to_json(const Certificate& c) {
  json j{{"bound", c.bound},
         {"threshold", c.threshold},
         {"holds", c.holds},
         {"inputs", json(c.inputs)},
         {"conclusion", c.conclusion}};
  if (c.margin) j["margin"] = *c.margin;
  return j;
}

nlohmann::json to_json(const SeparationVerdict& v) {
  json j{{"status", status_name(v.status)}, {"depth_used", v.depth_used}};
  if (v.status == SeparationStatus::Disjoint)
    j["gap"] = v.gap;
  else {
    j["overlap_diameter"] = v.overlap_diameter;
    j["reason"] = reason_name(v.reason);
  }
  return j;
}

nlohmann::json to_json(const SscReport& r) {
  json pairs = json::array();
  for (const PairVerdict& p : r.pairs)
    pairs.push_back(json{{"first", p.first},
                         {"second", p.second},
                         {"verdict", to_json(p.verdict)}});
  return json{{"ssc_holds", r.ssc_holds}, {"min_gap", r.min_gap}, {"pairs", pairs}};
}

nlohmann::json to_json(const SweepReport& r) {
  json cover = json::array();
  for (const Box& b : r.exceptional_cover) cover.push_back(box_to_json(b));
  return json{{"domain", box_to_json(r.domain)},
              {"cells_per_axis", r.cells_per_axis},
              {"cell_count", static_cast<std::int64_t>(r.cells.size())},
              {"disjoint_fraction", r.disjoint_fraction},
              {"undecided_measure", r.undecided_measure},
              {"exceptional_cover", cover}};
}

nlohmann::json to_json(const CaseVerdict& v) {
  json undecided = json::array();
  for (const PieceCheck& c : v.undecided) {
    json e{{"m", c.m}, {"n", c.n}};
    if (c.i) e["i"] = c.i;
    if (c.j) e["j"] = c.j;
    undecided.push_back(e);
  }
  return json{{"verified", v.verified},
              {"max_mn", v.max_mn},
              {"checks", static_cast<std::int64_t>(v.checks.size())},
              {"undecided", undecided},
              {"note", v.note}};
}

nlohmann::json to_json(const WitnessSearchResult& r) {
  json list = json::array();
  for (const WspWitness& w : r.witnesses)
    list.push_back(json{{"m", w.m},
                        {"n", w.n},
                        {"map_scale", w.map_scale},
                        {"map_offset", w.map_offset},
                        {"identity_distance", w.identity_distance}});
  return json{{"witnesses", list}, {"reached_tol", r.reached_tol}};
}

nlohmann::json to_json(const DisplacementReport& r) {
  json witness_t = json::array(), witness_t2 = json::array();
  for (int i = 0; i < r.witness_t.dim; ++i) {
    witness_t.push_back(r.witness_t[i]);
    witness_t2.push_back(r.witness_t_prime[i]);
  }
  return json{{"pass", r.pass},
              {"max_ratio", r.max_ratio},
              {"samples", r.samples},
              {"depth", r.depth},
              {"seed", static_cast<std::uint64_t>(r.seed)},
              {"witness_address_prefix", r.witness_prefix.to_string()},
              {"witness_t", witness_t},
              {"witness_t_prime", witness_t2}};
}

namespace {

void dump_rec(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_rec(it.value(), out);
      }
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_rec(j[i], out);
      }
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

namespace {

void append_real(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

std::string sweep_csv(const SweepReport& r) {
  std::string out = "cell_lo,cell_hi,status,gap_or_overlap,depth\n";
  for (const SweepCell& c : r.cells) {
    for (int i = 0; i < c.cell.dim; ++i) {
      if (i) out += ';';
      append_real(out, c.cell.c[static_cast<size_t>(i)].lo);
    }
    out += ',';
    for (int i = 0; i < c.cell.dim; ++i) {
      if (i) out += ';';
      append_real(out, c.cell.c[static_cast<size_t>(i)].hi);
    }
    out += ',';
    out += status_name(c.status);
    out += ',';
    append_real(out, c.gap_or_overlap);
    out += ',';
    out += std::to_string(c.depth_used);
    out += '\n';
  }
  return out;
}

std::string case_csv(const CaseVerdict& v) {
  std::string out = "m,n,i,j,fast_path,status,gap_or_overlap,depth\n";
  for (const PieceCheck& c : v.checks) {
    out += std::to_string(c.m);
    out += ',';
    out += std::to_string(c.n);
    out += ',';
    out += std::to_string(c.i);
    out += ',';
    out += std::to_string(c.j);
    out += ',';
    out += c.fast_path ? "1" : "0";
    out += ',';
    out += status_name(c.verdict.status);
    out += ',';
    append_real(out, c.verdict.status == SeparationStatus::Disjoint
                         ? c.verdict.gap
                         : c.verdict.overlap_diameter);
    out += ',';
    out += std::to_string(c.verdict.depth_used);
    out += '\n';
  }
  return out;
}

std::string witnesses_csv(const WitnessSearchResult& r) {
  std::string out = "m,n,map_scale,map_offset,identity_distance\n";
  for (const WspWitness& w : r.witnesses) {
    out += std::to_string(w.m);
    out += ',';
    out += std::to_string(w.n);
    out += ',';
    append_real(out, w.map_scale);
    out += ',';
    append_real(out, w.map_offset);
    out += ',';
    append_real(out, w.identity_distance);
    out += '\n';
  }
  return out;
}

}  // namespace genpos
