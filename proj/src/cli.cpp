#include "symnc/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "symnc/construct.hpp"
#include "symnc/enumerate.hpp"
#include "symnc/error.hpp"
#include "symnc/export.hpp"
#include "symnc/io.hpp"
#include "symnc/plabic.hpp"
#include "symnc/verify.hpp"

#ifndef SYMNC_VERSION
#define SYMNC_VERSION "0.0.0"
#endif

namespace symnc {

namespace {

using nlohmann::json;

// Thrown for flag values that parse but make no sense (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verification failed; the report has already been printed.
struct Rejected {};

std::string generator() { return std::string("symnc ") + SYMNC_VERSION; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_kn(int k, int n) {
  if (n < 1 || n > kMaxN) throw UsageError("--n must lie in [1," + std::to_string(kMaxN) + "]");
  if (k < 0 || k > n) throw UsageError("--k must lie in [0,n]");
}

// ---- exists ---------------------------------------------------------------

json condition_json(const ConditionReport& r) {
  json j{{"k", r.k}, {"n", r.n}, {"g", r.g}, {"d", r.d}, {"k_mod_d", r.d > 0 ? r.k % r.d : 0},
         {"satisfied", r.satisfied}};
  j["residue"] = r.satisfied ? json(r.c) : json(nullptr);
  j["p"] = r.satisfied ? json(r.p) : json(nullptr);
  return j;
}

void print_condition(const ConditionReport& r, std::ostream& os) {
  os << "(k,n) = (" << r.k << "," << r.n << ")\n";
  os << "g = gcd(k,n) = " << r.g << ", d = n/g = " << r.d << "\n";
  os << "k mod d = " << (r.k % r.d);
  if (r.satisfied) os << ", residue " << r.c << ", k = " << r.d << "*" << r.p << " + (" << r.c << ")";
  os << "\n";
  os << "symmetric maximal collection exists: " << yes_no(r.satisfied) << "\n";
}

int cmd_exists(int k, int n, bool as_json, std::ostream& out) {
  check_kn(k, n);
  const auto r = condition_star(k, n);
  if (as_json) out << pretty_json(condition_json(r));
  else print_condition(r, out);
  return r.satisfied ? kExitOk : kExitDomainFailure;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  int k = 0;
  int n = 0;
  std::vector<int> order;
  std::string out;
  bool stages = false;
  bool json = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  check_kn(a.k, a.n);
  const auto cond = condition_star(a.k, a.n);
  if (!cond.satisfied) {
    if (a.json) out << pretty_json(json{{"error", "ConditionNotSatisfied"}, {"condition", condition_json(cond)}});
    else print_condition(cond, err);
    return kExitDomainFailure;
  }
  std::optional<std::vector<int>> order;
  if (!a.order.empty()) order = a.order;
  GeneralConstruction built = [&] {
    try {
      return construct_general_detailed(a.k, a.n, order);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidRange) throw UsageError("--order: " + e.detail());
      throw;
    }
  }();

  json meta{{"generator", generator()}};
  if (built.dk) {
    meta["class_order"] = built.dk->order.representatives();
    meta["auxiliary_n"] = built.dk->d * built.dk->k;
    if (a.stages) {
      json stages = json::array();
      for (const auto& plan : built.dk->stages) {
        if (plan.representative == 0) continue;
        stages.push_back({{"stage", plan.stage},
                          {"class", plan.representative},
                          {"block", sets_to_json(plan.block)},
                          {"layer_size", built.dk->layers[static_cast<std::size_t>(plan.stage - 1)].size()}});
      }
      meta["stages"] = std::move(stages);
    }
  }
  const auto file = CollectionFile::from_collection(built.collection, meta);
  const std::string text = serialize_collection(file);
  if (a.out.empty()) {
    out << text;
    return kExitOk;
  }
  write_text(a.out, text);
  if (a.json) {
    out << pretty_json(json{{"k", a.k}, {"n", a.n}, {"size", built.collection.size()}, {"path", a.out}});
  } else {
    out << "wrote " << built.collection.size() << " sets to " << a.out << "\n";
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

json report_json(const VerifyReport& r) {
  auto opt_set = [](const std::optional<IndexSet>& s) {
    return s ? json(s->elements()) : json(nullptr);
  };
  json j{{"n", r.n},
         {"k", r.k},
         {"cardinality", r.cardinality},
         {"required", r.required},
         {"sizes_ok", r.sizes_ok},
         {"bad_size_witness", opt_set(r.bad_size_witness)},
         {"pairwise_noncrossing", r.pairwise_noncrossing},
         {"cardinality_ok", r.cardinality_ok},
         {"maximal", r.maximal},
         {"contains_all_intervals", r.contains_all_intervals},
         {"missing_interval", opt_set(r.missing_interval)},
         {"symmetry_requested", r.symmetry_requested},
         {"symmetric", r.symmetric},
         {"symmetry_witness", opt_set(r.symmetry_witness)},
         {"passed", r.passed()}};
  j["crossing_witness"] = r.crossing_witness
                              ? json::array({r.crossing_witness->first.elements(),
                                             r.crossing_witness->second.elements()})
                              : json(nullptr);
  return j;
}

void print_report(const VerifyReport& r, std::ostream& os) {
  os << "(k,n) = (" << r.k << "," << r.n << "), members " << r.cardinality << ", required "
     << r.required << "\n";
  os << "member sizes ok: " << yes_no(r.sizes_ok);
  if (r.bad_size_witness) os << " (" << r.bad_size_witness->to_string() << ")";
  os << "\npairwise noncrossing: " << yes_no(r.pairwise_noncrossing);
  if (r.crossing_witness) {
    os << " (" << r.crossing_witness->first.to_string() << " crosses "
       << r.crossing_witness->second.to_string() << ")";
  }
  os << "\nmaximal: " << yes_no(r.maximal) << "\n";
  os << "contains all intervals: " << yes_no(r.contains_all_intervals);
  if (r.missing_interval) os << " (missing " << r.missing_interval->to_string() << ")";
  os << "\n";
  if (r.symmetry_requested) {
    os << "symmetric under +k: " << yes_no(r.symmetric);
    if (r.symmetry_witness) os << " (" << r.symmetry_witness->to_string() << " + k is missing)";
    os << "\n";
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const std::string& path, bool symmetric, bool as_json, std::ostream& out) {
  const auto file = load_collection(path);
  const auto report = verify_sets(file.n, file.k, file.sets, symmetric);
  if (as_json) out << pretty_json(report_json(report));
  else print_report(report, out);
  return report.passed() ? kExitOk : kExitDomainFailure;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  int k = 0;
  int n = 0;
  bool count_only = false;
  std::string out_dir;
  int threads = 1;
  int cap = kDefaultEnumerationCap;
  std::uint64_t limit = 0;
  bool json = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  check_kn(a.k, a.n);
  if (a.threads < 1) throw UsageError("--threads must be positive");
  EnumerateOptions opts;
  opts.count_only = a.count_only || a.out_dir.empty();
  opts.cap = a.cap;
  opts.threads = a.threads;
  if (a.limit > 0) opts.limit = a.limit;
  const auto result = enumerate_symmetric_maximal(a.k, a.n, opts);

  std::vector<std::string> written;
  if (!a.out_dir.empty() && !a.count_only) {
    std::filesystem::create_directories(a.out_dir);
    const int width = std::max<int>(4, static_cast<int>(std::to_string(result.collections.size()).size()));
    for (std::size_t i = 0; i < result.collections.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "k%d_n%d_%0*zu.json", a.k, a.n, width, i + 1);
      const std::string path = (std::filesystem::path(a.out_dir) / name).string();
      const json meta{{"generator", generator()}, {"enumeration_index", i + 1}};
      write_text(path, serialize_collection(CollectionFile::from_collection(result.collections[i], meta)));
      written.push_back(path);
    }
  }
  if (a.json) {
    json j{{"k", a.k},
           {"n", a.n},
           {"count", result.count},
           {"truncated", result.truncated},
           {"orbits", result.orbit_count},
           {"search_vertices", result.search_vertices}};
    if (!written.empty()) j["files"] = written;
    out << pretty_json(j);
  } else {
    out << "(k,n) = (" << a.k << "," << a.n << ")\n";
    out << "count: " << result.count << (result.truncated ? " (stopped at --limit)" : "") << "\n";
    if (!written.empty()) out << "wrote " << written.size() << " files to " << a.out_dir << "\n";
  }
  return kExitOk;
}

// ---- quiver / embed -------------------------------------------------------

struct DrawArgs {
  std::string file;
  std::string format = "dot";
  bool jacobian = false;
  std::string out;
  bool json = false;
};

Collection load_verified(const std::string& path, std::ostream& out, bool as_json) {
  const auto file = load_collection(path);
  const auto report = verify_sets(file.n, file.k, file.sets, false);
  if (!report.passed()) {
    if (as_json) out << pretty_json(json{{"error", "VerificationFailed"}, {"report", report_json(report)}});
    else print_report(report, out);
    throw Rejected{};
  }
  return file.collection();
}

// The drawing goes to --out when given, else to `out`; the summary then goes
// to whichever stream is left (stderr when the document owns stdout).
int emit(const DrawArgs& a, const std::string& document, json summary,
         const std::vector<std::string>& lines, std::ostream& out, std::ostream& err) {
  if (!a.out.empty()) write_text(a.out, document);
  if (a.json) {
    if (a.out.empty()) summary["document"] = document;
    else summary["path"] = a.out;
    out << pretty_json(summary);
    return kExitOk;
  }
  std::ostream& info = a.out.empty() ? err : out;
  if (a.out.empty()) out << document;
  for (const auto& line : lines) info << line << "\n";
  return kExitOk;
}

int cmd_quiver(const DrawArgs& a, std::ostream& out, std::ostream& err) {
  const auto format = parse_export_format(a.format);
  const Collection c = load_verified(a.file, out, a.json);
  const auto cx = build_complex(c);
  auto qp = orient(cx);
  if (a.jacobian) qp = jacobian_quiver(qp);
  const bool symmetric = is_symmetric(c);

  json summary{{"n", c.n()},
               {"k", c.k()},
               {"jacobian", a.jacobian},
               {"vertices", qp.vertices.size()},
               {"frozen", qp.frozen_count()},
               {"arrows", qp.arrows.size()},
               {"potential_terms", qp.potential.size()},
               {"rotation_invariant", symmetric && complex_shift_invariant(cx, c.k())}};
  std::vector<std::string> lines{
      "vertices: " + std::to_string(qp.vertices.size()) +
          " (frozen " + std::to_string(qp.frozen_count()) + ")",
      "arrows: " + std::to_string(qp.arrows.size()),
      "potential terms: " + std::to_string(qp.potential.size()),
      std::string("rotation-invariant: ") + (summary["rotation_invariant"].get<bool>() ? "true" : "false")};
  if (symmetric) {
    const auto nk = nakayama(qp, c.k(), c.n());
    summary["nakayama"] = {{"order", nk.order},
                           {"permutation_order", nk.permutation_order},
                           {"fixed_vertices", nk.fixed_vertices}};
    lines.push_back("nakayama order: " + std::to_string(nk.order));
    lines.push_back("nakayama permutation order: " + std::to_string(nk.permutation_order));
    lines.push_back("nakayama fixed vertices: " + std::to_string(nk.fixed_vertices));
  }
  return emit(a, export_quiver(qp, format), std::move(summary), lines, out, err);
}

int cmd_embed(const DrawArgs& a, std::ostream& out, std::ostream& err) {
  const auto format = parse_export_format(a.format);
  const Collection c = load_verified(a.file, out, a.json);
  const auto cx = build_complex(c);
  const bool invariant = is_symmetric(c) && complex_shift_invariant(cx, c.k());
  std::size_t internal = 0;
  for (const auto& e : cx.edges) internal += e.internal() ? 1 : 0;
  json summary{{"n", c.n()},
               {"k", c.k()},
               {"vertices", cx.vertices.size()},
               {"edges", cx.edges.size()},
               {"internal_edges", internal},
               {"faces", cx.faces.size()},
               {"euler_characteristic", cx.euler_characteristic()},
               {"dropped_chords", cx.dropped_chords},
               {"rotation_invariant", invariant}};
  std::vector<std::string> lines{
      "vertices: " + std::to_string(cx.vertices.size()),
      "edges: " + std::to_string(cx.edges.size()) + " (internal " + std::to_string(internal) + ")",
      "faces: " + std::to_string(cx.faces.size()),
      "euler characteristic: " + std::to_string(cx.euler_characteristic()),
      std::string("rotation-invariant: ") + (invariant ? "true" : "false")};
  return emit(a, export_complex(cx, format), std::move(summary), lines, out, err);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConditionNotSatisfied:
    case ErrorCode::CapExceeded:
    case ErrorCode::ParseError:
    case ErrorCode::DegenerateEmbedding:
      return kExitDomainFailure;
    case ErrorCode::UnsupportedFormat:
    case ErrorCode::InvalidRange:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric maximal noncrossing collections", "symnc"};
  app.set_version_flag("--version", generator());
  app.require_subcommand(1);

  bool as_json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine-readable output"); };

  int ek = 0;
  int en = 0;
  auto* exists = app.add_subcommand("exists", "Check whether a symmetric maximal collection exists");
  exists->add_option("--k", ek, "Subset size")->required();
  exists->add_option("--n", en, "Ground set size")->required();
  add_json(exists);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a symmetric maximal collection");
  construct->add_option("--k", ca.k, "Subset size")->required();
  construct->add_option("--n", ca.n, "Ground set size")->required();
  construct->add_option("--order", ca.order, "Class order, e.g. 3,4,2,1 (full) or a head order of length gcd(k,n)")
      ->delimiter(',');
  construct->add_option("--out", ca.out, "Output file (default: stdout)");
  construct->add_flag("--stages", ca.stages, "Record the stage blocks in the metadata");
  add_json(construct);

  std::string verify_file;
  bool verify_symmetric = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a collection file");
  verify_cmd->add_option("file", verify_file, "Collection file")->required();
  verify_cmd->add_flag("--symmetric", verify_symmetric, "Also require invariance under +k");
  add_json(verify_cmd);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all symmetric maximal collections");
  enumerate->add_option("--k", ea.k, "Subset size")->required();
  enumerate->add_option("--n", ea.n, "Ground set size")->required();
  enumerate->add_flag("--count-only", ea.count_only, "Only count");
  enumerate->add_option("--out", ea.out_dir, "Directory for one file per collection");
  enumerate->add_option("--threads", ea.threads, "Worker threads");
  enumerate->add_option("--cap", ea.cap, "Largest n to search")->check(CLI::Range(1, 63));
  enumerate->add_option("--limit", ea.limit, "Stop after this many collections");
  add_json(enumerate);

  DrawArgs qa;
  auto* quiver = app.add_subcommand("quiver", "Export the quiver of a collection");
  quiver->add_option("file", qa.file, "Collection file")->required();
  quiver->add_option("--format", qa.format, "dot, json, svg or tikz");
  quiver->add_flag("--jacobian", qa.jacobian, "Remove frozen vertices");
  quiver->add_option("--out", qa.out, "Output file (default: stdout)");
  add_json(quiver);

  DrawArgs ma;
  auto* embed = app.add_subcommand("embed", "Export the planar complex of a collection");
  embed->add_option("file", ma.file, "Collection file")->required();
  embed->add_option("--format", ma.format, "dot, json, svg or tikz");
  embed->add_option("--out", ma.out, "Output file (default: stdout)");
  add_json(embed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*exists) return cmd_exists(ek, en, as_json, out);
    if (*construct) {
      ca.json = as_json;
      return cmd_construct(ca, out, err);
    }
    if (*verify_cmd) return cmd_verify(verify_file, verify_symmetric, as_json, out);
    if (*enumerate) {
      ea.json = as_json;
      return cmd_enumerate(ea, out);
    }
    if (*quiver) {
      qa.json = as_json;
      return cmd_quiver(qa, out, err);
    }
    if (*embed) {
      ma.json = as_json;
      return cmd_embed(ma, out, err);
    }
  } catch (const Rejected&) {
    return kExitDomainFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace symnc
