// Copyright 2026 The quiverlc Authors
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

// The quiverlc command line, callable in-process.
//
// Exit codes: 0 success, 1 a negative mathematical verdict, 2 usage or input
// errors.

#ifndef QUIVERLC_TOOLS_CLI_APP_HPP
#define QUIVERLC_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quiverlc/json_io.hpp"
#include "quiverlc/quiverlc.hpp"

namespace quiverlc::cli {

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string file;
  std::string family_name;
  std::string center;
  std::int64_t window = 4;
  std::uint64_t budget = kDefaultBudget;
  bool json = false;
  bool strict = false;
  bool oracle = false;
};

/// The input quiver. Families with a finite vertex set are materialized.
struct Source {
  std::optional<Quiver> quiver;
  std::optional<LazyQuiver> lazy;
  Window window;

  bool finite() const { return quiver.has_value(); }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Source load(const CommonOptions& o) {
  if (o.file.empty() == o.family_name.empty()) throw UsageError("exactly one of --file and --family is required");
  if (o.window < 0) throw UsageError("--window must be nonnegative");
  Source s;
  if (!o.file.empty()) {
    s.quiver = parse_quiver(read_file(o.file), o.strict ? ParseMode::strict : ParseMode::lenient);
    s.window = Window::slices(-o.window, o.window);
    return s;
  }
  LazyQuiver f = family(o.family_name);
  if (f.domain().is_finite()) {
    s.quiver = materialize(f);
    s.window = Window::slices(-o.window, o.window);
  } else {
    s.lazy = std::move(f);
    s.window = Window::radius(o.window);
  }
  return s;
}

inline VertexId parse_vertex(const Source& s, const std::string& token) {
  VertexId v = VertexId::parse(token);
  bool known = s.finite() ? s.quiver->contains(v) : in_scope(*s.lazy, s.window, v);
  if (!known) throw UsageError("vertex '" + token + "' is not in the quiver (or outside the window)");
  return v;
}

inline bool is_zvertex_token(const std::string& token) { return token.find(':') != std::string::npos; }

inline ZVertex parse_zvertex(const Source& s, const std::string& token) {
  ZVertex v;
  try {
    v = ZVertex::parse(token);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  parse_vertex(s, v.base.to_string());
  return v;
}

/// "n:base" or a bare base vertex (slice 0).
inline ZVertex parse_center(const Source& s, const std::string& token) {
  if (token.empty()) throw UsageError("--center is required");
  if (is_zvertex_token(token)) return parse_zvertex(s, token);
  return {0, parse_vertex(s, token)};
}

inline VertexId default_base(const Source& s) {
  if (s.finite()) {
    if (s.quiver->vertices().empty()) throw UsageError("quiver has no vertices");
    return s.quiver->vertices().front();
  }
  return s.lazy->domain().contains(VertexId(0)) ? VertexId(0) : VertexId(s.window.bases->first);
}

inline Section read_section(const std::string& path) {
  if (path.empty()) throw UsageError("--section is required");
  try {
    return section_from_json(Json::parse(read_file(path)));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad section file: ") + e.what());
  }
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::vector<std::string> names(const std::vector<T>& items) {
  std::vector<std::string> out;
  for (const auto& i : items) out.push_back(i.to_string());
  return out;
}

inline void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* file = cmd->add_option("--file", o.file, "quiver file");
  auto* fam = cmd->add_option("--family", o.family_name, "built-in family")->check(CLI::IsMember(family_names()));
  file->excludes(fam);
  fam->excludes(file);
  cmd->add_option("--window", o.window, "window radius R: slices and base indices [-R, R]")->capture_default_str();
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_flag("--strict", o.strict, "strict parser: undeclared vertices are errors");
}

inline void add_center(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--center", o.center, "center n:base (or a base vertex)");
}

inline void add_budget(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--budget", o.budget, "vertex expansion cap")->capture_default_str();
  cmd->add_flag("--oracle", o.oracle, "use the slab oracle on ZQ vertices");
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Light cone and round trip distances on quivers and sections of ZQ", "quiverlc"};
  app.require_subcommand(1);
  CommonOptions o;

  std::string x_arg, y_arg, kind = "roundtrip", side = "right", mode = "plain", section_path, cone;
  std::int64_t radius = 0;
  bool sectional = false, nontrivial = false, base_only = false, first_only = false;

  auto* dist = app.add_subcommand("dist", "right light cone distance d(x, y)");
  auto* rtdist = app.add_subcommand("rtdist", "round trip distance d(x, y) + d(y, x)");
  for (auto* cmd : {dist, rtdist}) {
    add_common(cmd, o);
    add_budget(cmd, o);
    cmd->add_option("x", x_arg, "vertex or n:base")->required();
    cmd->add_option("y", y_arg, "vertex or n:base")->required();
  }

  auto* sph = app.add_subcommand("sphere", "vertices at a given distance from a center");
  add_common(sph, o);
  sph->add_option("center", x_arg, "base vertex")->required();
  sph->add_option("n", radius, "radius")->required();
  sph->add_option("--kind", kind, "roundtrip, right or left")
      ->check(CLI::IsMember({"roundtrip", "right", "left"}))
      ->capture_default_str();

  auto* cone_cmd = app.add_subcommand("lightcone", "light cone of a ZQ vertex, cut to the window");
  add_common(cone_cmd, o);
  add_center(cone_cmd, o);
  cone_cmd->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}))->capture_default_str();

  auto* cls = app.add_subcommand("classify", "check the finiteness conditions");
  add_common(cls, o);
  add_center(cls, o);

  auto* sec = app.add_subcommand("section", "construct the section centred at --center");
  add_common(sec, o);
  add_center(sec, o);
  sec->add_option("--cone", cone, "right or left: light cone section instead")
      ->check(CLI::IsMember({"right", "left"}));

  auto* ver = app.add_subcommand("verify-section", "verify a candidate section (JSON file)");
  add_common(ver, o);
  ver->add_option("--section", section_path, "section JSON")->required();
  ver->add_flag("--first", first_only, "stop at the first witness per criterion");

  auto* cnt = app.add_subcommand("count-paths", "count oriented paths between ZQ vertices");
  add_common(cnt, o);
  cnt->add_option("a", x_arg, "source n:base")->required();
  cnt->add_option("b", y_arg, "target n:base")->required();
  cnt->add_flag("--sectional", sectional, "count sectional paths only");
  cnt->add_flag("--nontrivial", nontrivial, "exclude the empty path");

  auto* dot = app.add_subcommand("emit-dot", "DOT rendering of the window slab");
  add_common(dot, o);
  add_center(dot, o);
  dot->add_option("--mode", mode, "plain, lightcones, roundtrip or section")
      ->check(CLI::IsMember({"plain", "lightcones", "roundtrip", "section"}))
      ->capture_default_str();
  dot->add_option("--section", section_path, "section JSON for --mode section");
  dot->add_flag("--base", base_only, "render the base quiver instead of ZQ");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Source s = load(o);

    if (app.got_subcommand(dist) || app.got_subcommand(rtdist)) {
      const bool rt = app.got_subcommand(rtdist);
      ExtDistance d = ExtDistance::infinite();
      if (is_zvertex_token(x_arg) || is_zvertex_token(y_arg) || o.oracle) {
        ZVertex a = is_zvertex_token(x_arg) ? parse_zvertex(s, x_arg) : ZVertex{0, parse_vertex(s, x_arg)};
        ZVertex b = is_zvertex_token(y_arg) ? parse_zvertex(s, y_arg) : ZVertex{0, parse_vertex(s, y_arg)};
        if (o.oracle) {
          auto one = [&](const ZVertex& p, const ZVertex& q) {
            return s.finite() ? lightcone_distance_zq_oracle(*s.quiver, p, q, s.window)
                              : lightcone_distance_zq_oracle(*s.lazy, p, q, s.window);
          };
          d = rt ? one(a, b) + one(b, a) : one(a, b);
        } else if (s.finite()) {
          d = rt ? roundtrip_distance(*s.quiver, a, b, o.budget) : lightcone_distance_zq(*s.quiver, a, b, o.budget);
        } else {
          d = rt ? roundtrip_distance(*s.lazy, a, b, s.window) : lightcone_distance_zq(*s.lazy, a, b, s.window);
          if (!d.is_exact())
            d = tighter(d, rt ? roundtrip_distance(*s.lazy, a, b, o.budget)
                              : lightcone_distance_zq(*s.lazy, a, b, o.budget));
        }
      } else {
        VertexId a = parse_vertex(s, x_arg);
        VertexId b = parse_vertex(s, y_arg);
        if (s.finite()) {
          d = rt ? roundtrip_distance(*s.quiver, a, b, o.budget) : lightcone_distance_q(*s.quiver, a, b, o.budget);
        } else {
          d = rt ? roundtrip_distance(*s.lazy, a, b, s.window) : lightcone_distance_q(*s.lazy, a, b, s.window);
          if (!d.is_exact())
            d = tighter(d, rt ? roundtrip_distance(*s.lazy, a, b, o.budget)
                              : lightcone_distance_q(*s.lazy, a, b, o.budget));
        }
      }
      if (o.json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        out << d.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(sph)) {
      VertexId c = parse_vertex(s, x_arg);
      SphereKind k = kind == "right" ? SphereKind::right : kind == "left" ? SphereKind::left : SphereKind::roundtrip;
      SphereReport r = s.finite() ? sphere(*s.quiver, c, radius, k) : sphere(*s.lazy, c, radius, k, s.window);
      if (o.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << join(names(r.members)) << "\n" << (r.complete ? "complete" : "truncated") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cone_cmd)) {
      ZVertex c = parse_center(s, o.center);
      LightCone lc;
      if (s.finite()) {
        lc = side == "right" ? right_lightcone_zq(*s.quiver, c, s.window) : left_lightcone_zq(*s.quiver, c, s.window);
      } else {
        lc = side == "right" ? right_lightcone_zq(*s.lazy, c, s.window) : left_lightcone_zq(*s.lazy, c, s.window);
      }
      if (o.json) {
        out << to_json(lc).dump(2) << "\n";
      } else {
        for (const auto& v : lc.members) out << v.to_string() << "\n";
        for (const auto& v : lc.unresolved) out << "unresolved " << v.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cls)) {
      VertexId base = o.center.empty() ? default_base(s) : parse_center(s, o.center).base;
      ClassificationReport r = s.finite() ? classify(*s.quiver, base) : classify(*s.lazy, base, s.window, o.window);
      if (o.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "verdict: " << to_string(r.verdict) << " (" << grade_name(r.grade) << ")\n";
        if (!r.acyclic) out << "cycle: " << join(names(r.cycle)) << "\n";
        if (!r.connected) out << "not connected\n";
        for (const auto& p : r.spheres)
          out << "S(" << base.to_string() << "," << p.radius << "): " << p.size << (p.complete ? "" : " truncated")
              << "\n";
      }
      return r.verdict == Classification::satisfied ? 0 : 1;
    }

    if (app.got_subcommand(sec)) {
      ZVertex c = parse_center(s, o.center);
      Section result;
      try {
        if (!cone.empty()) {
          ConeSide cs = cone == "right" ? ConeSide::right : ConeSide::left;
          result = s.finite() ? lightcone_section(*s.quiver, c, s.window, cs)
                              : lightcone_section(*s.lazy, c, s.window, cs);
        } else {
          result = s.finite() ? build_section(*s.quiver, c, s.window) : build_section(*s.lazy, c, s.window);
        }
      } catch (const SectionError& e) {
        err << "no section: " << e.what();
        if (!e.orbits().empty()) err << ": " << join(names(e.orbits()));
        err << "\n";
        return 1;
      }
      if (o.json) {
        out << to_json(result).dump(2) << "\n";
      } else {
        for (const auto& v : result.vertices()) out << v.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(ver)) {
      Section candidate = read_section(section_path);
      VerifyOptions vo;
      vo.report_all = !first_only;
      SectionReport r = s.finite() ? verify_section(*s.quiver, candidate, s.window, vo)
                                   : verify_section(*s.lazy, candidate, s.window, vo);
      if (o.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << (r.valid ? "valid" : "invalid") << " (" << grade_name(r.grade) << ")\n";
        if (!r.missing_orbits.empty()) out << "missing orbits: " << join(names(r.missing_orbits)) << "\n";
        if (!r.extra_orbits.empty()) out << "extra orbits: " << join(names(r.extra_orbits)) << "\n";
        for (const auto& p : r.negative_pairs)
          out << "d(" << p.from.to_string() << ", " << p.to.to_string() << ") = " << p.distance << "\n";
        for (const auto& a : r.arrow_failures)
          out << "arrow " << (a.outgoing ? a.selected.to_string() + " -> " + a.neighbor.to_string()
                                         : a.neighbor.to_string() + " -> " + a.selected.to_string())
              << " leaves the section\n";
        if (r.strong_local_finiteness)
          out << "strongly locally finite: " << (r.strong_local_finiteness->holds ? "yes" : "no") << "\n";
      }
      return r.valid ? 0 : 1;
    }

    if (app.got_subcommand(cnt)) {
      ZVertex a = parse_zvertex(s, x_arg);
      ZVertex b = parse_zvertex(s, y_arg);
      PathCount c;
      if (s.finite()) {
        c = sectional ? count_sectional_paths_zq(*s.quiver, a, b, !nontrivial)
                      : count_paths_zq(*s.quiver, a, b, !nontrivial);
      } else {
        c = sectional ? count_sectional_paths_zq(*s.lazy, a, b, s.window, !nontrivial)
                      : count_paths_zq(*s.lazy, a, b, s.window, !nontrivial);
      }
      if (o.json) {
        out << to_json(c).dump(2) << "\n";
      } else {
        out << c.to_string() << "\n";
        if (c.is_infinite()) out << "cycle: " << join(names(c.witness)) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(dot)) {
      Rendering r;
      if (base_only) {
        if (!s.finite()) throw UsageError("--base needs a finite quiver");
        r = render_quiver(*s.quiver);
      } else {
        RenderSpec spec;
        spec.window = s.window;
        if (mode == "lightcones") spec.mode = Annotation::lightcones;
        if (mode == "roundtrip") spec.mode = Annotation::roundtrip;
        if (mode == "section") {
          spec.mode = Annotation::section;
          spec.section = read_section(section_path);
        }
        if (spec.mode == Annotation::lightcones || spec.mode == Annotation::roundtrip)
          spec.center = parse_center(s, o.center);
        r = s.finite() ? render(*s.quiver, spec) : render(*s.lazy, spec);
      }
      if (o.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << emit_dot(r);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const QuiverParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WindowTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace quiverlc::cli

#endif  // QUIVERLC_TOOLS_CLI_APP_HPP
