#pragma once

// Export formats and certificates.
//
// Conventions shared by every artifact:
//   - CSV artifacts start with one header line "# {json}" carrying the
//     parameters needed to rebuild the object bit-exactly, including the
//     field moduli.
//   - Field elements appear externally as prime-field coefficient digits
//     (c_0, ..., c_{e-1}), never as internal ranks.
//   - Certificates are plain JSON with a "verdict" of "ok" or "fail" plus a
//     witness when they fail.

#include <cstdint>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evasive/affine.hpp"
#include "evasive/bounds.hpp"
#include "evasive/coloring.hpp"
#include "evasive/extension.hpp"
#include "evasive/linear_rep.hpp"
#include "evasive/maximal.hpp"
#include "evasive/partition.hpp"
#include "evasive/projective.hpp"
#include "evasive/util.hpp"

namespace evasive::io {

using json = nlohmann::ordered_json;

inline json field_spec_json(const gf::Field& F) {
  return json{{"p", F.characteristic()}, {"e", F.degree()}, {"modulus", F.modulus()}};
}

inline json tower_json(const TowerSpec& T) {
  json moduli = json::array();
  for (std::uint32_t i = 1; i <= T.height(); ++i)
    moduli.push_back(T.level(i).sup().modulus());
  return json{{"p", T.base().characteristic()},
              {"e", T.base().degree()},
              {"q", T.q()},
              {"t", T.height()},
              {"base_modulus", T.base().modulus()},
              {"level_moduli", moduli}};
}

inline std::string digest_hex(const void* data, std::size_t len) {
  std::uint64_t h = fnv1a64(data, len);
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ----- evasive class export ------------------------------------------------

inline std::string class_csv(const TowerSpec& T, const EvasiveClass& cls) {
  const gf::Field& F = T.base();
  json header = tower_json(T);
  header["kind"] = "evasive-class";
  header["u"] = cls.label;
  header["dim"] = T.flat_dim();
  header["count"] = cls.points.size();
  std::ostringstream out;
  out << "# " << header.dump() << "\n";
  const std::uint32_t n = T.flat_dim();
  std::vector<std::uint32_t> coords(n);
  for (auto r : cls.points) {
    std::uint64_t v = r;
    for (std::uint32_t j = n; j-- > 0;) {
      coords[j] = static_cast<std::uint32_t>(v % F.size());
      v /= F.size();
    }
    bool first = true;
    for (std::uint32_t j = 0; j < n; ++j) {
      for (auto digit : F.coeffs(coords[j])) {
        if (!first) out << ',';
        out << digit;
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

struct ClassFile {
  std::uint32_t p = 0, e = 0, t = 0, u = 0, dim = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> points;  // flat ranks over the base field
};

inline ClassFile read_class_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw std::invalid_argument("missing artifact header line");
  json header = json::parse(line.substr(2));
  ClassFile cf;
  cf.p = header.at("p");
  cf.e = header.at("e");
  cf.q = header.at("q");
  cf.t = header.at("t");
  cf.u = header.at("u");
  cf.dim = header.at("dim");
  auto F = gf::field_create(cf.p, cf.e);
  if (header.at("base_modulus").get<std::vector<std::uint32_t>>() != F->modulus())
    throw std::invalid_argument("header modulus does not match the canonical modulus");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::uint32_t> digits;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) digits.push_back(std::stoul(cell));
    if (digits.size() != static_cast<std::size_t>(cf.dim) * cf.e)
      throw std::invalid_argument("point row has wrong digit count");
    std::uint64_t rank = 0;
    for (std::uint32_t j = 0; j < cf.dim; ++j) {
      std::vector<std::uint32_t> c(digits.begin() + j * cf.e, digits.begin() + (j + 1) * cf.e);
      rank = rank * F->size() + F->from_coeffs(c);
    }
    cf.points.push_back(static_cast<std::uint32_t>(rank));
  }
  return cf;
}

// ----- coloring export -----------------------------------------------------

inline std::string coloring_csv(const color::Coloring& c) {
  json header{{"kind", "coloring"},
              {"space", json{{"projective", c.projective}, {"n", c.n}, {"q", c.field->size()}}},
              {"k", c.k},
              {"construction", c.construction},
              {"field", field_spec_json(*c.field)},
              {"digest", digest_hex(c.colors.data(), c.colors.size())}};
  std::ostringstream out;
  out << "# " << header.dump() << "\n";
  for (std::size_t r = 0; r < c.colors.size(); ++r)
    out << r << ',' << static_cast<unsigned>(c.colors[r]) << "\n";
  return out.str();
}

inline color::Coloring read_coloring_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw std::invalid_argument("missing artifact header line");
  json header = json::parse(line.substr(2));
  color::Coloring c;
  c.projective = header.at("space").at("projective");
  c.n = header.at("space").at("n");
  c.k = header.at("k");
  c.construction = header.value("construction", "");
  auto fj = header.at("field");
  c.field = gf::field_create(fj.at("p"), fj.at("e"));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    std::size_t rank = std::stoull(line.substr(0, comma));
    if (rank != c.colors.size()) throw std::invalid_argument("coloring rows out of order");
    c.colors.push_back(static_cast<std::uint8_t>(std::stoul(line.substr(comma + 1))));
  }
  return c;
}

// ----- graph export ----------------------------------------------------------

inline std::string graph_edge_list(const extremal::LinearRepGraph& rep) {
  json header{{"kind", "linear-representation"},
              {"n", rep.n},
              {"q", rep.q},
              {"s_size", rep.s_size},
              {"point_vertices", rep.g.n_left},
              {"line_vertices", rep.g.n_right},
              {"edges", rep.g.edge_count()}};
  std::ostringstream out;
  out << "# " << header.dump() << "\n";
  for (std::uint32_t l = 0; l < rep.g.n_left; ++l)
    for (auto r : rep.g.adj_left[l]) out << l << ' ' << r << "\n";
  return out.str();
}

inline extremal::BipartiteGraph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t max_l = 0, max_r = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream row(line);
    std::uint32_t l, r;
    row >> l >> r;
    if (row.fail()) throw std::invalid_argument("bad edge row: " + line);
    edges.emplace_back(l, r);
    max_l = std::max(max_l, l);
    max_r = std::max(max_r, r);
  }
  extremal::BipartiteGraph g;
  g.init(edges.empty() ? 0 : max_l + 1, edges.empty() ? 0 : max_r + 1);
  for (auto [l, r] : edges) g.add_edge(l, r);
  g.finalize();
  return g;
}

// ----- certificates ----------------------------------------------------------

inline json space_json(const char* kind, std::uint32_t n, std::uint64_t q) {
  return json{{"kind", kind}, {"n", n}, {"q", q}};
}

inline json evasive_certificate(const TowerSpec& T, std::uint32_t u,
                                const geom::EvasiveVerdict& v, std::uint64_t class_size) {
  json cert{{"property", "line-evasive"},
            {"space", space_json("affine", T.flat_dim(), T.q())},
            {"params", json{{"t", T.height()}, {"u", u}}},
            {"field", field_spec_json(T.base())},
            {"tower", tower_json(T)},
            {"verdict", v.ok ? "ok" : "fail"},
            {"counts", json{{"points", class_size},
                            {"lines", v.lines_swept},
                            {"max_intersection", v.max_intersection}}}};
  if (v.witness)
    cert["witness"] =
        json{{"base_rank", v.witness->base_rank}, {"direction_index", v.witness->dir_index},
             {"intersection", v.witness->count}};
  else
    cert["witness"] = nullptr;
  return cert;
}

inline json partition_certificate(const TowerSpec& T, bool ok, std::uint64_t classes,
                                  std::uint64_t class_size, std::uint64_t union_size) {
  return json{{"property", "evasive-partition"},
              {"space", space_json("affine", T.flat_dim(), T.q())},
              {"params", json{{"t", T.height()}}},
              {"field", field_spec_json(T.base())},
              {"verdict", ok ? "ok" : "fail"},
              {"counts", json{{"classes", classes},
                              {"class_size", class_size},
                              {"union_size", union_size}}}};
}

inline json maximality_certificate(const TowerSpec& T, std::uint32_t u,
                                   const gf::Extension& sub, const MaximalityReport& rep) {
  json cert{{"property", "maximal-evasive"},
            {"space", space_json("affine", T.flat_dim(), T.q())},
            {"params", json{{"t", T.height()}, {"u", u}, {"subfield_q", sub.sub().size()}}},
            {"field", field_spec_json(T.base())},
            {"subfield", field_spec_json(sub.sub())},
            {"verdict", rep.ok && rep.engines_agree ? "ok" : "fail"},
            {"engines_agree", rep.engines_agree},
            {"counts", json{{"outside_points", rep.outside_points},
                            {"covered_constructive", rep.covered_constructive}}}};
  cert["witness"] = nullptr;
  if (rep.uncovered_exhaustive) cert["witness"] = json{{"uncovered", *rep.uncovered_exhaustive}};
  return cert;
}

inline json coloring_certificate(const color::Coloring& c, bool ok,
                                 std::uint32_t max_per_line_per_color, std::uint64_t lines,
                                 const json& witness) {
  return json{{"property", "no-monochromatic-line"},
              {"space", space_json(c.projective ? "projective" : "affine", c.n, c.field->size())},
              {"params", json{{"k", c.k}, {"construction", c.construction}}},
              {"field", field_spec_json(*c.field)},
              {"verdict", ok ? "ok" : "fail"},
              {"counts",
               json{{"lines", lines}, {"max_per_line_per_color", max_per_line_per_color}}},
              {"witness", witness},
              {"digest", digest_hex(c.colors.data(), c.colors.size())}};
}

inline json bound_report_json(const BoundReport& rep) {
  json j{{"kind", rep.kind}, {"q", rep.q}, {"value", rep.value}, {"formula", rep.formula}};
  if (rep.kind == "chi-upper") j["n"] = rep.n;
  if (rep.kind == "ramsey-lower") {
    j["k"] = rep.k;
    j["certified"] = "R_q(2;k) > value";
    if (rep.has_closed_form)
      j["closed_form"] = json{{"num", rep.closed_form_num}, {"den", rep.closed_form_den}};
  }
  return j;
}

}  // namespace evasive::io
