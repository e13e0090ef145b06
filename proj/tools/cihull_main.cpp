// Command line front end: every library operation as a subcommand, JSON
// in and out, plus SVG/OBJ rendering and the built-in example gallery.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/feasibility.hpp"
#include "cihull/gallery.hpp"
#include "cihull/hull.hpp"
#include "cihull/instance.hpp"
#include "cihull/oracle.hpp"
#include "cihull/reduction.hpp"
#include "cihull/render.hpp"
#include "cihull/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  cihull::Tolerances tol;
  std::size_t edge_cap = cihull::kDefaultEdgeCap;
  std::uint64_t seed = 0;
  std::size_t resolution = 15;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cihull::ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cihull::Error("cannot write file: " + path);
  out << text;
}

cihull::Instance load(const std::string& path, const Options& opt) {
  return cihull::parse_instance(read_file(path), opt.tol);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json endpoint_json(double v) {
  if (v == cihull::kInf) return json("inf");
  if (v == -cihull::kInf) return json("-inf");
  return json(v);
}

json instance_json(const cihull::PointSet& pts, const cihull::IntervalFamily& fam,
                   const std::vector<std::string>& labels) {
  json j;
  j["points"] = pts;
  json ivs = json::array();
  for (std::size_t k = 0; k < fam.size(); ++k)
    ivs.push_back(json::array({endpoint_json(fam[k].lo), endpoint_json(fam[k].hi)}));
  j["intervals"] = std::move(ivs);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

int cmd_check(const std::string& file, const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  const cihull::FeasibilityReport rep = cihull::analyze_feasibility(inst);
  json j;
  j["nonempty"] = rep.nonempty;
  j["bounded"] = rep.bounded;
  j["witness"] = rep.witness ? json(*rep.witness) : json(nullptr);
  j["unbounded_direction"] =
      rep.unbounded_direction
          ? json(json::array({rep.unbounded_direction->first,
                              rep.unbounded_direction->second}))
          : json(nullptr);
  emit(j);
  return rep.nonempty && rep.bounded ? 0 : 1;
}

json hull_bounds(const cihull::Instance& inst) {
  json b;
  b["thm41"] = cihull::vertex_bound(inst.size());
  bool wide = false;
  if (inst.size() >= 2 && cihull::is_bounded(inst) &&
      cihull::is_nonempty(inst.family)) {
    wide = cihull::is_wide(cihull::bound_family(inst.family));
  }
  b["thm43_if_wide"] =
      wide ? json(cihull::wide_vertex_bound(inst.size())) : json(nullptr);
  return b;
}

int cmd_hull(const std::string& file, const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  cihull::VPolytope vp;
  try {
    vp = cihull::interval_hull(inst, opt.tol, opt.edge_cap);
  } catch (const cihull::UnboundedHull& e) {
    const auto rep = cihull::analyze_feasibility(inst);
    json j;
    j["error"] = e.what();
    j["unbounded_direction"] =
        rep.unbounded_direction
            ? json(json::array({rep.unbounded_direction->first,
                                rep.unbounded_direction->second}))
            : json(nullptr);
    emit(j);
    return 1;
  }
  json j;
  j["vertices"] = vp.vertices;
  j["dim"] = vp.dim;
  j["count"] = vp.count();
  j["bounds"] = hull_bounds(inst);
  emit(j);
  return vp.empty() ? 1 : 0;
}

int cmd_reduce(const std::string& file, const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  const cihull::IntervalFamily hat =
      cihull::reduce_family(cihull::bound_family(inst.family), opt.tol);
  const cihull::Instance reduced(inst.points, hat, inst.labels, opt.tol);
  json j = instance_json(reduced.points, reduced.family, reduced.labels);
  j["irreducible"] = cihull::is_irreducible(hat, opt.tol);
  j["wide"] = hat.size() >= 2 && cihull::is_wide(hat);
  switch (cihull::minimality_status(reduced, opt.tol)) {
    case cihull::MinimalityStatus::NotMinimal:
      j["minimality"] = "not_minimal";
      break;
    case cihull::MinimalityStatus::Minimal:
      j["minimality"] = "minimal";
      break;
    case cihull::MinimalityStatus::IrreducibleButUndecided:
      j["minimality"] = "irreducible_but_undecided";
      break;
  }
  emit(j);
  return 0;
}

int cmd_transform(const std::string& file, const std::vector<double>& homothety,
                  const std::string& affine, const std::vector<double>& offset,
                  const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  cihull::Instance out = inst;
  if (!homothety.empty()) {
    if (homothety.size() != inst.dim() + 1)
      throw cihull::InvalidInstance(
          "--homothety needs d translation coordinates plus a ratio");
    cihull::Point v(homothety.begin(), homothety.end() - 1);
    out = cihull::apply_homothety(inst, v, homothety.back(), opt.tol);
  } else {
    cihull::AffineMap map;
    std::istringstream rows(affine);
    std::string row;
    while (std::getline(rows, row, ';')) {
      std::vector<double> r;
      std::istringstream cells(row);
      std::string cell;
      while (std::getline(cells, cell, ',')) r.push_back(std::stod(cell));
      map.matrix.push_back(std::move(r));
    }
    if (map.matrix.empty())
      throw cihull::InvalidInstance("--affine needs at least one matrix row");
    map.offset = offset.empty() ? cihull::Point(map.matrix.size(), 0.0)
                                : cihull::Point(offset);
    out = cihull::apply_affine(inst, map, opt.tol);
  }
  std::cout << cihull::serialize_instance(out) << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  const cihull::Decomposition dec = cihull::decompose(inst, opt.tol);
  json j;
  j["outer"] = {{"center", dec.outer.center}, {"ratio", dec.outer.ratio}};
  json inner = json::array();
  for (const cihull::Homothety& h : dec.inner)
    inner.push_back(
        {{"center", h.center}, {"ratio", h.ratio}, {"empty", h.empty()}});
  j["inner"] = std::move(inner);
  emit(j);
  return 0;
}

int cmd_compare(const std::string& file, std::size_t samples,
                const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  cihull::VPolytope vp;
  if (cihull::is_nonempty(inst.family))
    vp = cihull::interval_hull(inst, opt.tol, opt.edge_cap);
  const cihull::CompareReport rep = cihull::compare_hulls(
      vp, inst, opt.resolution, opt.tol, samples, opt.seed);
  json j;
  j["pass"] = rep.pass;
  j["samples_checked"] = rep.samples_checked;
  j["samples_outside"] = rep.samples_outside;
  j["vertices_checked"] = rep.vertices_checked;
  j["vertices_infeasible"] = rep.vertices_infeasible;
  j["worst_sample_violation"] = rep.worst_sample_violation;
  j["worst_vertex_violation"] = rep.worst_vertex_violation;
  j["offending_samples"] = rep.offending_samples;
  j["offending_vertices"] = rep.offending_vertices;
  emit(j);
  return rep.pass ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& format,
               const std::string& out, const Options& opt) {
  const cihull::Instance inst = load(file, opt);
  const cihull::VPolytope vp =
      cihull::interval_hull(inst, opt.tol, opt.edge_cap);
  if (format == "svg") {
    write_file(out, cihull::render_svg(inst, vp));
  } else {
    write_file(out, cihull::render_obj(vp, opt.tol));
  }
  return 0;
}

void render_entry(const cihull::GalleryEntry& entry, const std::string& dir,
                  const Options& opt) {
  const cihull::VPolytope vp =
      cihull::interval_hull(entry.instance, opt.tol, opt.edge_cap);
  const std::filesystem::path base = std::filesystem::path(dir) / entry.id;
  if (entry.instance.dim() == 2) {
    write_file(base.string() + ".svg", cihull::render_svg(entry.instance, vp));
  } else if (entry.instance.dim() == 3) {
    write_file(base.string() + ".obj", cihull::render_obj(vp, opt.tol));
  }
}

int cmd_gallery(const std::string& id, const std::string& render_dir,
                const Options& opt) {
  std::vector<const cihull::GalleryEntry*> selected;
  for (const cihull::GalleryEntry& e : cihull::builtin_gallery())
    if (id == "all" || id == e.id) selected.push_back(&e);
  if (selected.empty()) {
    std::cerr << "unknown gallery id: " << id << "\n";
    return 2;
  }

  std::vector<std::future<cihull::GalleryResult>> futures;
  futures.reserve(selected.size());
  for (const cihull::GalleryEntry* e : selected)
    futures.push_back(std::async(std::launch::async, [e, &opt] {
      return cihull::run_gallery_entry(*e, opt.tol);
    }));

  bool all_pass = true;
  for (std::future<cihull::GalleryResult>& f : futures) {
    const cihull::GalleryResult res = f.get();
    if (res.pass) {
      std::cout << res.id << " PASS\n";
    } else {
      std::cout << res.id << " FAIL (" << res.detail << ")\n";
      all_pass = false;
    }
  }

  if (!render_dir.empty()) {
    std::filesystem::create_directories(render_dir);
    for (const cihull::GalleryEntry* e : selected)
      render_entry(*e, render_dir, opt);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex interval hulls of finite point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol-dedup", opt.tol.dedup, "vertex dedup tolerance");
  app.add_option("--tol-geom", opt.tol.geom, "geometric predicate tolerance");
  app.add_option("--tol-feas", opt.tol.feas, "feasibility tolerance");
  app.add_option("--edge-cap", opt.edge_cap, "enumeration size cap");
  app.add_option("--seed", opt.seed, "random sample seed");
  app.add_option("--resolution", opt.resolution, "grid steps per interval");

  std::string file, affine, out_path, format = "svg";
  std::vector<double> homothety, offset;
  std::size_t samples = 0;
  std::string gallery_id = "all", render_dir;

  CLI::App* check = app.add_subcommand("check", "feasibility and boundedness");
  check->add_option("file", file)->required();

  CLI::App* hull = app.add_subcommand("hull", "hull vertices");
  hull->add_option("file", file)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "clipped interval family");
  reduce->add_option("file", file)->required();

  CLI::App* transform =
      app.add_subcommand("transform", "instance under a homothety or affine map");
  transform->add_option("file", file)->required();
  CLI::Option* h = transform->add_option("--homothety", homothety,
                                         "translation coordinates and ratio")
                       ->delimiter(',');
  CLI::Option* a =
      transform->add_option("--affine", affine, "matrix rows 'a,b;c,d'");
  transform->add_option("--offset", offset, "affine offset")->delimiter(',');
  h->excludes(a);
  a->excludes(h);

  CLI::App* decompose =
      app.add_subcommand("decompose", "hull as nested scaled copies");
  decompose->add_option("file", file)->required();

  CLI::App* compare = app.add_subcommand("compare", "hull vs. grid oracle");
  compare->add_option("file", file)->required();
  compare->add_option("--samples", samples, "extra random feasible samples");

  CLI::App* render = app.add_subcommand("render", "svg or obj output");
  render->add_option("file", file)->required();
  render->add_option("--format", format, "svg or obj")
      ->check(CLI::IsMember({"svg", "obj"}));
  render->add_option("--out", out_path)->required();

  CLI::App* gallery = app.add_subcommand("gallery", "built-in worked examples");
  gallery->add_option("--id", gallery_id, "all or a single entry id");
  gallery->add_option("--render", render_dir, "directory for svg/obj output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (transform->parsed() && homothety.empty() && affine.empty()) {
    std::cerr << "transform needs --homothety or --affine\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, opt);
    if (hull->parsed()) return cmd_hull(file, opt);
    if (reduce->parsed()) return cmd_reduce(file, opt);
    if (transform->parsed())
      return cmd_transform(file, homothety, affine, offset, opt);
    if (decompose->parsed()) return cmd_decompose(file, opt);
    if (compare->parsed()) return cmd_compare(file, samples, opt);
    if (render->parsed()) return cmd_render(file, format, out_path, opt);
    if (gallery->parsed()) return cmd_gallery(gallery_id, render_dir, opt);
  } catch (const cihull::Error& e) {
    emit(json{{"error", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}});
    return 1;
  }
  return 0;
}
