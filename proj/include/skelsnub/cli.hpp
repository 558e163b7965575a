#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "converse.hpp"
#include "error.hpp"
#include "record.hpp"
#include "reproduce.hpp"
#include "snub.hpp"
#include "uniformity.hpp"

namespace skelsnub::cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << text;
}

inline Vector3 parse_vertex(const std::string& spec, const CatalogEntry& entry) {
  if (spec == "seed") return entry.cone.seed;
  if (spec.rfind("uniform", 0) == 0) {
    std::size_t k = 0;
    if (spec.size() > 7) {
      if (spec[7] != ':') throw Error(ErrorCode::BadInput, "expected uniform or uniform:k");
      try {
        k = std::stoul(spec.substr(8));
      } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "bad root index in '" + spec + "'");
      }
    }
    auto roots = solve_uniformity(entry);
    if (k >= roots.size())
      throw Error(ErrorCode::PreconditionViolated,
                  "uniformity root " + std::to_string(k) + " requested, " + std::to_string(roots.size()) + " found");
    return roots[k].vertex;
  }
  std::vector<double> xs;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadInput, "bad coordinate '" + part + "'");
    }
  }
  if (xs.size() != 3) throw Error(ErrorCode::BadInput, "vertex needs three coordinates");
  return {xs[0], xs[1], xs[2]};
}

inline SkeletalPolyhedron snub_from_options(const std::string& poly, const std::string& vertex, const std::string& degenerate) {
  const auto& entry = lookup(poly);
  Vector3 v = parse_vertex(vertex, entry);
  if (!degenerate.empty()) {
    if (degenerate.size() != 2 || degenerate[0] != 's' || degenerate[1] < '0' || degenerate[1] > '2')
      throw Error(ErrorCode::BadInput, "--degenerate expects s0, s1 or s2");
    v = degenerate_point(entry.generators, degenerate[1] - '0', v);
  }
  return build_snub(entry, v);
}

inline std::string fvector_string(const FVector& fv) {
  std::string s = "(" + std::to_string(fv.f0);
  auto add = [&](const std::optional<std::size_t>& x) { s += "," + (x ? std::to_string(*x) : std::string("-")); };
  for (const auto& x : fv.f1) add(x);
  for (const auto& x : fv.f2) add(x);
  return s + ")";
}

inline int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnknownPolyhedron:
    case ErrorCode::BadInput: return 2;
    default: return 1;
  }
}

inline int cmd_list(std::ostream& out) {
  out << std::left << std::setw(12) << "name" << std::setw(10) << "slug" << std::setw(7) << "p" << std::setw(7) << "q"
      << std::setw(7) << "|G+|" << std::setw(8) << "petrie" << std::setw(8) << "index2" << "s0 fixes\n";
  for (const auto& e : catalog()) {
    out << std::setw(12) << e.spec.name << std::setw(10) << e.spec.slug << std::setw(7) << e.spec.p.str() << std::setw(7)
        << e.spec.q.str() << std::setw(7) << FiniteGroup::close(e.generators).size() << std::setw(8)
        << (e.spec.petrie_length ? std::to_string(*e.spec.petrie_length) : std::string("-"))
        << std::setw(8) << (e.spec.index2 ? "yes" : "no") << to_string(classify_fixed_set(e.generators.s0).kind) << "\n";
  }
  return 0;
}

inline int cmd_analyze(const std::string& path, std::ostream& out) {
  SnubRecord r = parse_record(read_file(path));
  const auto& a = r.analysis;
  out << "name " << r.name << "\n";
  out << "valid " << (a.valid ? "yes" : "no") << "\n";
  if (!a.valid)
    for (const auto& p : validate(r.poly).problems) out << "  " << p << "\n";
  out << "fvector " << fvector_string(a.fvector) << "\n";
  out << "euler " << a.euler << "\n";
  out << "symbol " << a.symbol.value_or("-") << "\n";
  out << "orientable " << (a.orientable ? (*a.orientable ? "yes" : "no") : "-") << "\n";
  if (a.residuals) out << std::setprecision(3) << "residuals " << (*a.residuals)[0] << " " << (*a.residuals)[1] << "\n";
  return a.valid ? 0 : 1;
}

inline int cmd_uniformity(const std::string& poly, std::ostream& out) {
  const auto& entry = lookup(poly);
  auto roots = solve_uniformity(entry);
  if (roots.empty()) {
    out << entry.spec.name << ": no acceptable solutions\n";
    return 0;
  }
  out << std::setprecision(12);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto& r = roots[k];
    out << entry.spec.name << " root " << k << ": " << r.vertex.x << "," << r.vertex.y << "," << r.vertex.z << "  "
        << r.symbol << (r.ambiguous ? "  (near planar threshold)" : "") << "\n";
  }
  return 0;
}

inline int cmd_reconstruct(const std::string& path, std::ostream& out) {
  SnubRecord r = parse_record(read_file(path));
  FiniteGroup sym = detect_symmetries(r.poly);
  RotationPair rot = find_rotations(r.poly, sym);
  out << "symmetry group order " << sym.size() << "\n";
  out << "p " << rot.p << " q " << rot.q << "\n";
  out << "rotation subgroup order " << rot.rotation_group_order << " (index " << sym.size() / rot.rotation_group_order << ")\n";
  ParentReconstruction rec = reconstruct_parent(r.poly, rot);
  out << "parent " << rec.parent.vertices.size() << " vertices, " << rec.parent.edges.size() << " edges, "
      << rec.parent.faces.size() << " faces, " << (rec.parent_report.ok() ? "valid" : "invalid") << "\n";
  try {
    out << "parent symbol " << vertex_symbol(rec.parent).str() << "\n";
  } catch (const Error&) {
  }
  out << "round trip " << (rec.identical_to_input ? "identical" : (rec.isomorphic_to_input ? "isomorphic" : "differs")) << "\n";
  return rec.parent_report.ok() && rec.isomorphic_to_input ? 0 : 1;
}

inline int cmd_reproduce(int section, const std::string& expected_path, bool dump, std::ostream& out) {
  if (section != 7 && section != 8) throw Error(ErrorCode::BadInput, "--section must be 7 or 8");
  nlohmann::json expected = section == 7 ? expected_genuine() : expected_degenerate();
  if (dump) {
    out << expected.dump(2) << "\n";
    return 0;
  }
  if (!expected_path.empty()) {
    try {
      expected = nlohmann::json::parse(read_file(expected_path));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::BadInput, std::string("invalid expected file: ") + e.what());
    }
  }
  std::vector<ReproduceRow> rows;
  try {
    rows = section == 7 ? reproduce_genuine(expected) : reproduce_degenerate(expected);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed expected data: ") + e.what());
  }
  std::size_t good = 0;
  for (const auto& row : rows) {
    out << std::left << std::setw(12) << row.name << (row.ok ? "ok        " : "MISMATCH  ") << row.observed << "\n";
    if (!row.ok) out << std::setw(22) << "" << "expected " << row.expected << "\n";
    good += row.ok;
  }
  out << good << "/" << rows.size() << " rows match\n";
  return good == rows.size() ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skeletal snub polyhedra from the finite regular polyhedra"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the catalog");

  std::string poly, vertex = "seed", degenerate, obj, json_out;
  auto* snub = app.add_subcommand("snub", "Build a snub and print its JSON record");
  snub->add_option("--poly", poly, "Polyhedron name, e.g. {4,3}_3 or 4-3_3")->required();
  snub->add_option("--vertex", vertex, "x,y,z | seed | uniform[:k]");
  snub->add_option("--degenerate", degenerate, "Project the vertex onto the fixed set of s0, s1 or s2");
  snub->add_option("--obj", obj, "Also write an OBJ file");
  snub->add_option("--out", json_out, "Write the record here instead of stdout");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Validate and analyze a JSON record");
  analyze_cmd->add_option("file", input, "Record file")->required();

  std::string upoly;
  auto* uniform = app.add_subcommand("uniformity", "Solve for uniform snubs");
  uniform->add_option("--poly", upoly, "Polyhedron name")->required();

  std::string rinput;
  auto* recon = app.add_subcommand("reconstruct", "Recover the parent of a snub record");
  recon->add_option("file", rinput, "Record file")->required();

  int section = 0;
  std::string expected;
  bool dump = false;
  auto* repro = app.add_subcommand("reproduce", "Compare against reference tables");
  repro->add_option("--section", section, "7 (genuine snubs) or 8 (degenerate snubs)")->required();
  repro->add_option("--expected", expected, "Reference JSON overriding the built-in table");
  repro->add_flag("--dump-expected", dump, "Print the built-in reference table");

  std::string einput, epoly, evertex = "seed", edegenerate, eobj;
  auto* exp = app.add_subcommand("export", "Write a snub as OBJ");
  exp->add_option("file", einput, "Record file (alternative to --poly)");
  exp->add_option("--poly", epoly, "Polyhedron name");
  exp->add_option("--vertex", evertex, "x,y,z | seed | uniform[:k]");
  exp->add_option("--degenerate", edegenerate, "s0, s1 or s2");
  exp->add_option("--obj", eobj, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(out);
    if (*snub) {
      auto p = snub_from_options(poly, vertex, degenerate);
      const auto& entry = lookup(poly);
      std::string text = to_json(make_record(p, &entry.generators)).dump(2) + "\n";
      if (json_out.empty()) out << text;
      else write_file(json_out, text);
      if (!obj.empty()) {
        std::ostringstream o;
        export_obj(p, o);
        write_file(obj, o.str());
      }
      return 0;
    }
    if (*analyze_cmd) return cmd_analyze(input, out);
    if (*uniform) return cmd_uniformity(upoly, out);
    if (*recon) return cmd_reconstruct(rinput, out);
    if (*repro) return cmd_reproduce(section, expected, dump, out);
    if (*exp) {
      SkeletalPolyhedron p;
      if (!einput.empty()) p = parse_record(read_file(einput)).poly;
      else if (!epoly.empty()) p = snub_from_options(epoly, evertex, edegenerate);
      else throw Error(ErrorCode::BadInput, "export needs a record file or --poly");
      std::ostringstream o;
      export_obj(p, o);
      write_file(eobj, o.str());
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace skelsnub::cli
