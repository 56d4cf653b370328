#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "symnc/construct.hpp"
#include "symnc/enumerate.hpp"
#include "symnc/error.hpp"
#include "symnc/export.hpp"
#include "symnc/plabic.hpp"
#include "symnc/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace symnc;

namespace {

using SetList = std::vector<std::vector<int>>;

IndexSet to_index_set(const std::vector<int>& xs, int n) { return IndexSet::from_elements(xs, n); }

SetList to_lists(const std::vector<IndexSet>& sets) {
  SetList out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

Collection to_collection(int n, int k, const SetList& sets) {
  std::vector<IndexSet> members;
  for (const auto& s : sets) members.push_back(to_index_set(s, n));
  return Collection(n, k, members);
}

py::dict condition(int k, int n) {
  const auto r = condition_star(k, n);
  py::dict d("k"_a = r.k, "n"_a = r.n, "g"_a = r.g, "d"_a = r.d, "satisfied"_a = r.satisfied);
  if (r.satisfied) {
    d["c"] = r.c;
    d["p"] = r.p;
  }
  return d;
}

py::dict verify_sets_py(int n, int k, const SetList& sets, bool symmetric) {
  std::vector<IndexSet> members;
  for (const auto& s : sets) members.push_back(to_index_set(s, n));
  const auto r = verify_sets(n, k, members, symmetric);
  py::dict d("passed"_a = r.passed(), "sizes_ok"_a = r.sizes_ok, "noncrossing"_a = r.pairwise_noncrossing,
             "cardinality"_a = r.cardinality, "required"_a = r.required, "maximal"_a = r.maximal,
             "contains_all_intervals"_a = r.contains_all_intervals);
  if (symmetric) d["symmetric"] = r.symmetric;
  if (r.crossing_witness) {
    d["crossing_witness"] = py::make_tuple(r.crossing_witness->first.elements(), r.crossing_witness->second.elements());
  }
  return d;
}

SetList stage_block(int k, int d, const std::vector<int>& order, int stage) {
  return to_lists(build_stage(k, d, ClassOrder(order), stage).block);
}

std::vector<SetList> enumerate_py(int k, int n, int cap, int threads, std::optional<std::uint64_t> limit) {
  EnumerateOptions opt;
  opt.cap = cap;
  opt.threads = threads;
  opt.limit = limit;
  std::vector<SetList> out;
  for (const auto& c : enumerate_symmetric_maximal(k, n, opt).collections) out.push_back(to_lists(c.sets()));
  return out;
}

std::uint64_t count_py(int k, int n, int cap, int threads) {
  EnumerateOptions opt;
  opt.count_only = true;
  opt.cap = cap;
  opt.threads = threads;
  return enumerate_symmetric_maximal(k, n, opt).count;
}

py::dict complex_summary(int n, int k, const SetList& sets) {
  const auto cx = build_complex(to_collection(n, k, sets));
  std::size_t frozen = 0;
  for (bool f : cx.frozen) frozen += f ? 1 : 0;
  return py::dict("vertices"_a = cx.vertices.size(), "edges"_a = cx.edges.size(), "faces"_a = cx.faces.size(),
                  "frozen"_a = frozen, "euler"_a = cx.euler_characteristic(),
                  "rotation_invariant"_a = complex_shift_invariant(cx, k));
}

py::dict quiver_summary(int n, int k, const SetList& sets, bool jacobian) {
  auto qp = orient(build_complex(to_collection(n, k, sets)));
  if (jacobian) qp = jacobian_quiver(qp);
  py::dict d("vertices"_a = qp.vertices.size(), "arrows"_a = qp.arrows.size(),
             "potential_terms"_a = qp.potential.size(), "frozen"_a = qp.frozen_count(),
             "rotation_invariant"_a = quiver_shift_automorphism(qp, k));
  if (d["rotation_invariant"].cast<bool>()) {
    try {
      const auto nk = nakayama(qp, k, n);
      d["nakayama_order"] = nk.order;
      d["permutation_order"] = nk.permutation_order;
    } catch (const Error&) {
    }
  }
  return d;
}

std::string export_py(int n, int k, const SetList& sets, const std::string& kind, const std::string& format,
                      bool jacobian) {
  const auto fmt = parse_export_format(format);
  const auto cx = build_complex(to_collection(n, k, sets));
  if (kind == "complex") return export_complex(cx, fmt);
  if (kind != "quiver") throw Error(ErrorCode::UnsupportedFormat, "kind must be complex or quiver, got " + kind);
  const auto qp = orient(cx);
  return export_quiver(jacobian ? jacobian_quiver(qp) : qp, fmt);
}

}  // namespace

PYBIND11_MODULE(_symnc, m) {
  m.doc() = "Symmetric maximal noncrossing collections of k-subsets of [n]";
  py::register_exception<Error>(m, "SymncError", PyExc_ValueError);

  m.def("condition", &condition, "k"_a, "n"_a, "gcd, d and residue data; satisfied iff a symmetric collection exists");
  m.def(
      "crossing",
      [](const std::vector<int>& a, const std::vector<int>& b, int n) {
        return crossing(to_index_set(a, n), to_index_set(b, n), n);
      },
      "a"_a, "b"_a, "n"_a);
  m.def(
      "construct",
      [](int k, int n, std::optional<std::vector<int>> order) {
        return to_lists(construct_general(k, n, std::move(order)).sets());
      },
      "k"_a, "n"_a, "order"_a = py::none(), "Symmetric maximal collection, sets in canonical order");
  m.def("stage_block", &stage_block, "k"_a, "d"_a, "order"_a, "stage"_a);
  m.def("verify", &verify_sets_py, "n"_a, "k"_a, "sets"_a, "symmetric"_a = false);
  m.def("count", &count_py, "k"_a, "n"_a, "cap"_a = kDefaultEnumerationCap, "threads"_a = 1);
  m.def("enumerate_collections", &enumerate_py, "k"_a, "n"_a, "cap"_a = kDefaultEnumerationCap, "threads"_a = 1,
        "limit"_a = py::none());
  m.def("complex_summary", &complex_summary, "n"_a, "k"_a, "sets"_a);
  m.def("quiver_summary", &quiver_summary, "n"_a, "k"_a, "sets"_a, "jacobian"_a = false);
  m.def("export", &export_py, "n"_a, "k"_a, "sets"_a, "kind"_a = "complex", "format"_a = "dot",
        "jacobian"_a = false);
}
