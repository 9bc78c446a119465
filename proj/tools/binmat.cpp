// binmat: batch workbench for binary matroids in standard form [I | D].
//
// Exit codes: 0 success, 1 negative verdict, 2 usage error, 3 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matroid/matroid.hpp"
#include "matroid/parallel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

#ifndef BINMAT_DATA_DIR
#define BINMAT_DATA_DIR "data"
#endif

// Names resolve against the catalog first, then as file paths.
matroid::BinaryMatroid resolve(const std::string& token) {
  try {
    return matroid::get(token).matroid;
  } catch (const matroid::unknown_name_error&) {
  }
  std::ifstream in(token, std::ios::binary);
  if (!in) throw matroid::unknown_name_error("not a catalog name or readable file: " + token);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matroid::parse_matroid(buf.str());
}

matroid::ClassSpec build_spec(const std::vector<std::string>& required,
                              const std::vector<std::string>& excluded) {
  matroid::ClassSpec spec;
  for (const std::string& r : required) spec.required_minors.push_back(resolve(r));
  for (const std::string& x : excluded) spec.excluded_minors.push_back(resolve(x));
  return spec;
}

std::string label_set_string(const matroid::LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

int cmd_info(const std::string& name) {
  matroid::BinaryMatroid m = resolve(name);
  std::cout << "rank: " << m.rank() << "\n";
  std::cout << "elements: " << m.size() << "\n";
  std::cout << "simple: " << (matroid::is_simple(m) ? "yes" : "no") << "\n";
  std::cout << "cosimple: " << (matroid::is_cosimple(m) ? "yes" : "no") << "\n";
  std::cout << "3-connected: " << (matroid::is_3connected(m) ? "yes" : "no") << "\n";
  std::cout << "internally-4-connected: "
            << (matroid::is_internally_4connected(m) ? "yes" : "no") << "\n";
  std::cout << "self-dual: "
            << (matroid::is_isomorphic(m, matroid::dual(m)) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_iso(const std::string& a_name, const std::string& b_name) {
  matroid::BinaryMatroid a = resolve(a_name), b = resolve(b_name);
  std::optional<matroid::IsoCertificate> cert = matroid::is_isomorphic(a, b);
  if (!cert) {
    std::cout << "not isomorphic\n";
    return kExitNegative;
  }
  std::cout << "isomorphic\n";
  for (const auto& [from, to] : cert->mapping)
    std::cout << from << " -> " << to << "\n";
  return kExitOk;
}

int cmd_minor(const std::string& big_name, const std::string& small_name) {
  matroid::BinaryMatroid big = resolve(big_name), small = resolve(small_name);
  std::optional<matroid::MinorWitness> w = matroid::has_minor(big, small);
  if (!w) {
    std::cout << "no minor\n";
    return kExitNegative;
  }
  std::cout << "minor found\n";
  std::cout << "contract: " << label_set_string(w->contracted) << "\n";
  std::cout << "delete:   " << label_set_string(w->deleted) << "\n";
  for (const auto& [from, to] : w->iso.mapping)
    std::cout << from << " -> " << to << "\n";
  return kExitOk;
}

int cmd_ext(const std::string& name, const std::vector<std::string>& required,
            const std::vector<std::string>& excluded, const std::vector<std::string>& flags,
            bool coext) {
  matroid::BinaryMatroid m = resolve(name);
  matroid::ClassSpec spec = build_spec(required, excluded);
  std::vector<matroid::ExtensionClass> classes =
      coext ? matroid::coextensions(m, spec) : matroid::extensions(m, spec);
  for (const matroid::ExtensionClass& cls : classes) {
    std::string name_col = "-";
    for (const std::string& cname : matroid::catalog_names())
      if (matroid::canonical_form(cls.representative) ==
          matroid::canonical_form(matroid::get(cname).matroid)) {
        name_col = cname;
        break;
      }
    std::string flag_col;
    for (const std::string& f : flags) {
      if (!flag_col.empty()) flag_col += ",";
      flag_col += f + "-minor=";
      flag_col += matroid::has_minor_bool(cls.representative, resolve(f)) ? "yes" : "no";
    }
    if (flag_col.empty()) flag_col = "-";
    std::cout << matroid::format_class_line(name_col, cls.columns, flag_col);
  }
  return kExitOk;
}

int cmd_splitter(const std::string& name, const std::vector<std::string>& required,
                 const std::vector<std::string>& excluded) {
  matroid::BinaryMatroid n = resolve(name);
  matroid::SplitterVerdict v = matroid::is_splitter(n, build_spec(required, excluded));
  if (v.is_splitter) {
    std::cout << "splitter\n";
    return kExitOk;
  }
  std::cout << "not a splitter\n";
  if (v.failing_extension) {
    std::cout << "failing extension (rank " << v.failing_extension->rank() << ", "
              << v.failing_extension->size() << " elements):\n"
              << matroid::serialize(*v.failing_extension);
  }
  return kExitNegative;
}

int cmd_chain(const std::string& big_name, const std::string& small_name) {
  matroid::BinaryMatroid big = resolve(big_name), small = resolve(small_name);
  matroid::ChainReport rep = matroid::strong_chain(big, small);
  std::cout << matroid::format_chain(rep);
  std::cout << (rep.valid ? "valid\n" : "INVALID\n");
  return rep.valid ? kExitOk : kExitNegative;
}

int cmd_tables(const std::string& which, const std::string& data_dir) {
  std::string text = matroid::build_table(which);
  std::cout << text;
  std::filesystem::path golden =
      std::filesystem::path(data_dir) / "golden" / matroid::golden_file_name(which);
  std::string diff;
  if (!matroid::matches_golden(text, golden, &diff)) {
    std::cerr << diff;
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_almost_regular(const std::string& name) {
  matroid::BinaryMatroid m = resolve(name);
  bool ar = matroid::is_almost_regular(m);
  std::cout << (ar ? "almost-regular\n" : "not almost-regular\n");
  std::vector<matroid::Label> regs = matroid::regular_elements(m);
  std::cout << "regular elements: " << label_set_string(regs) << "\n";
  return ar ? kExitOk : kExitNegative;
}

// Full classification sweep of the 3-connected binary matroids with an
// E5-minor and no E4-minor, with structural verification of the outcome.
int cmd_classify(int max_elements, const std::string& cache_path) {
  using namespace matroid;
  const BinaryMatroid& e5 = get("E5").matroid;
  const BinaryMatroid& m12 = get("M12").matroid;
  const BinaryMatroid& r17 = get("R17").matroid;

  ClassSpec spec;
  spec.required_minors.push_back(e5);
  spec.excluded_minors.push_back(get("E4").matroid);

  std::optional<DedupCache> cache;
  if (!cache_path.empty()) cache.emplace(cache_path);
  std::vector<BinaryMatroid> members =
      generate_class(e5, spec, max_elements, cache ? &*cache : nullptr);

  // rank-5 members must embed as restrictions of R17 (equal rank forces the
  // minor witness to be deletion-only), and dually for corank 5
  bool ok = true;
  for (const BinaryMatroid& m : members) {
    std::string status;
    if (m.rank() == 5) {
      bool emb = has_minor_bool(r17, m);
      ok = ok && emb;
      status = emb ? "restriction-of-R17" : "NOT-IN-R17";
    } else if (m.corank() == 5) {
      bool emb = has_minor_bool(r17, dual(m));
      ok = ok && emb;
      status = emb ? "dual-restriction-of-R17" : "DUAL-NOT-IN-R17";
    } else {
      bool is_m12 = canonical_form(m) == canonical_form(m12);
      ok = ok && is_m12;
      status = is_m12 ? "M12" : "UNEXPECTED";
    }
    std::string name = "-";
    for (const std::string& cname : catalog_names())
      if (canonical_form(m) == canonical_form(get(cname).matroid)) {
        name = cname;
        break;
      }
    std::cout << "rank " << m.rank() << "\tn " << m.size() << "\t" << name << "\t" << status
              << "\n";
  }
  std::cout << "members: " << members.size() << "\n";
  std::cout << (ok ? "classification verified\n" : "classification FAILED\n");
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary matroid workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: hardware parallelism)");

  std::string data_dir = BINMAT_DATA_DIR;
  app.add_option("--data", data_dir, "data directory holding golden table files");

  auto* info = app.add_subcommand("info", "rank, size, connectivity, self-duality");
  info->fallthrough();
  std::string info_name;
  info->add_option("matroid", info_name)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test with certificate");
  iso->fallthrough();
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* minor = app.add_subcommand("minor", "minor test with witness");
  minor->fallthrough();
  std::string minor_big, minor_small;
  minor->add_option("big", minor_big)->required();
  minor->add_option("small", minor_small)->required();

  std::string ext_name;
  std::vector<std::string> ext_req, ext_exc, ext_flags;
  auto* ext = app.add_subcommand("ext", "single-element extension classes");
  ext->fallthrough();
  ext->add_option("matroid", ext_name)->required();
  ext->add_option("--require", ext_req, "required minor (repeatable)");
  ext->add_option("--exclude", ext_exc, "excluded minor (repeatable)");
  ext->add_option("--flag", ext_flags, "annotate classes with a minor flag (repeatable)");

  std::string coext_name;
  std::vector<std::string> coext_req, coext_exc, coext_flags;
  auto* coext = app.add_subcommand("coext", "single-element coextension classes");
  coext->fallthrough();
  coext->add_option("matroid", coext_name)->required();
  coext->add_option("--require", coext_req, "required minor (repeatable)");
  coext->add_option("--exclude", coext_exc, "excluded minor (repeatable)");
  coext->add_option("--flag", coext_flags, "annotate classes with a minor flag (repeatable)");

  std::string spl_name;
  std::vector<std::string> spl_req, spl_exc;
  auto* spl = app.add_subcommand("splitter", "splitter verification for a minor-closed class");
  spl->fallthrough();
  spl->add_option("matroid", spl_name)->required();
  spl->add_option("--require", spl_req, "required minor (repeatable)");
  spl->add_option("--exclude", spl_exc, "excluded minor (repeatable)");

  auto* chain = app.add_subcommand("chain", "extension/coextension chain between matroids");
  chain->fallthrough();
  std::string chain_big, chain_small;
  chain->add_option("big", chain_big)->required();
  chain->add_option("small", chain_small)->required();

  auto* tables = app.add_subcommand("tables", "regenerate a classification table and diff");
  tables->fallthrough();
  std::string table_name;
  tables->add_option("table", table_name, "a1, a2 or a3")->required();

  auto* classify = app.add_subcommand("classify-e5", "classify the E5-minor/no-E4-minor class");
  classify->fallthrough();
  int classify_max = 17;
  std::string classify_cache;
  classify->add_option("--max", classify_max, "element budget (default 17)");
  classify->add_option("--cache", classify_cache, "canonical-form dedup cache file");

  auto* almost = app.add_subcommand("almost-regular", "almost-regularity with regular elements");
  almost->fallthrough();
  std::string almost_name;
  almost->add_option("matroid", almost_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (jobs > 0) matroid::set_jobs(jobs);

  try {
    if (*info) return cmd_info(info_name);
    if (*iso) return cmd_iso(iso_a, iso_b);
    if (*minor) return cmd_minor(minor_big, minor_small);
    if (*ext) return cmd_ext(ext_name, ext_req, ext_exc, ext_flags, false);
    if (*coext) return cmd_ext(coext_name, coext_req, coext_exc, coext_flags, true);
    if (*spl) return cmd_splitter(spl_name, spl_req, spl_exc);
    if (*chain) return cmd_chain(chain_big, chain_small);
    if (*tables) return cmd_tables(table_name, data_dir);
    if (*classify) return cmd_classify(classify_max, classify_cache);
    if (*almost) return cmd_almost_regular(almost_name);
  } catch (const matroid::wheel_precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitNegative;
  } catch (const matroid::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitNegative;
  } catch (const matroid::parse_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const matroid::unknown_name_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const matroid::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
