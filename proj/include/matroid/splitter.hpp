#pragma once

#include <optional>
#include <vector>

#include "matroid/chains.hpp"
#include "matroid/generate.hpp"

namespace matroid {

struct SplitterVerdict {
  bool is_splitter = false;
  std::optional<BinaryMatroid> failing_extension;  // present iff not a splitter
};

// Finite splitter check: N is a splitter for the class iff no 3-connected
// single-element extension or coextension of N stays in the class.  For a
// self-dual N inside a dual-closed class the coextension side mirrors the
// extension side and can be skipped.  If N is a wheel, the class must be
// certified to exclude the next larger wheel (some excluded minor of the spec
// must embed in it); otherwise no verdict is possible.
inline SplitterVerdict is_splitter(const BinaryMatroid& n, const ClassSpec& spec,
                                   bool use_self_dual_shortcut = true) {
  if (!satisfies(n, spec))
    throw precondition_error("is_splitter: the matroid must satisfy the class spec");
  if (std::optional<int> k = is_wheel(n)) {
    bool certified = false;
    for (const BinaryMatroid& x : spec.excluded_minors)
      if (has_minor_bool(wheel(*k + 1), x)) {
        certified = true;
        break;
      }
    if (!certified)
      throw wheel_precondition_error(
          "is_splitter: cannot certify that the class excludes the wheel of rank " +
          std::to_string(*k + 1));
  }

  std::vector<ExtensionClass> ext = extensions(n, spec);
  if (!ext.empty()) return {false, ext.front().representative};

  bool skip_coextensions = use_self_dual_shortcut && spec_is_dual_closed(spec) &&
                           is_isomorphic(n, dual(n)).has_value();
  if (!skip_coextensions) {
    std::vector<ExtensionClass> coext = coextensions(n, spec);
    if (!coext.empty()) return {false, coext.front().representative};
  }
  return {true, std::nullopt};
}

// A binary matroid is regular iff it has neither an F7- nor an F7*-minor.
inline bool is_regular(const BinaryMatroid& m) {
  return !has_minor_bool(m, get("F7").matroid) && !has_minor_bool(m, get("F7*").matroid);
}

// Non-regular, but every single-element deletion or contraction is regular.
inline bool is_almost_regular(const BinaryMatroid& m) {
  if (is_regular(m)) return false;
  for (Label e : m.labels())
    if (!is_regular(deletion(m, {e})) && !is_regular(contraction(m, {e}))) return false;
  return true;
}

// Elements whose deletion and contraction are both regular.
inline std::vector<Label> regular_elements(const BinaryMatroid& m) {
  LabelSet labels = m.labels();
  std::sort(labels.begin(), labels.end());
  std::vector<Label> out;
  for (Label e : labels)
    if (is_regular(deletion(m, {e})) && is_regular(contraction(m, {e}))) out.push_back(e);
  return out;
}

}  // namespace matroid
