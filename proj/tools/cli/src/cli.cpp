#include "seaweed_cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seaweed/analysis.hpp"
#include "seaweed/families.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/sweep.hpp"
#include "seaweed_cli/svg.hpp"

namespace seaweed::cli {

namespace {

enum class Format { Plain, Json, Csv };

struct IntRange {
  int lo = 1;
  int hi = 1;
  bool odd_only = false;

  std::vector<int> values() const {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) {
      if (!odd_only || v % 2 != 0) out.push_back(v);
    }
    return out;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

// "A", "A..B", optionally suffixed with ":odd".
IntRange parse_range(std::string text, std::string_view what) {
  IntRange r;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    if (text.substr(colon + 1) != "odd") {
      throw UsageError("bad " + std::string(what) + " range filter in '" + text + "'");
    }
    r.odd_only = true;
    text.resize(colon);
  }
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    r.lo = parse_int(std::string_view(text).substr(0, dots), what);
    r.hi = parse_int(std::string_view(text).substr(dots + 2), what);
  } else {
    r.lo = r.hi = parse_int(text, what);
  }
  if (r.lo > r.hi) throw UsageError("empty " + std::string(what) + " range '" + text + "'");
  return r;
}

std::string csv_multiset(const IntegerMultiset& s) {
  std::string out = "value,multiplicity\n";
  for (const auto& [v, c] : s.counts()) out += std::to_string(v) + "," + std::to_string(c) + "\n";
  return out;
}

void print_multiset(std::ostream& out, const IntegerMultiset& s, Format f) {
  switch (f) {
    case Format::Plain:
      out << s.to_exponent_string() << '\n';
      break;
    case Format::Json:
      out << to_json(s).dump() << '\n';
      break;
    case Format::Csv:
      out << csv_multiset(s);
      break;
  }
}

void print_matrix(std::ostream& out, const PartialIntegerMatrix& m, Format f) {
  switch (f) {
    case Format::Plain:
      out << m.to_text();
      break;
    case Format::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 1; i <= m.n(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 1; j <= m.n(); ++j) {
          if (m.defined(i, j)) {
            row.push_back(m.at(i, j));
          } else {
            row.push_back(nullptr);
          }
        }
        rows.push_back(row);
      }
      nlohmann::ordered_json j;
      j["n"] = m.n();
      j["rows"] = rows;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
          if (j > 1) out << ',';
          if (m.defined(i, j)) out << m.at(i, j);
        }
        out << '\n';
      }
      break;
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::out | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed: " + path);
}

struct FamilyRow {
  int k;
  int r;
  std::string spec;
  bool spectrum_equal;
  std::optional<bool> extended_equal;
  bool unimodal;
  bool log_concave;
  bool ok() const { return spectrum_equal && extended_equal.value_or(true); }
};

FamilyRow check_family(FamilyId f, int k, int r) {
  const auto spec = family_spec(f, k, r);
  const FrobeniusSeaweed g(spec);
  const auto formula = family_spectrum(f, k, r);
  FamilyRow row{k, r, spec.to_string(), formula == g.spectrum(), std::nullopt,
                is_unimodal(formula), is_log_concave(formula)};
  if (family_has_extended(f)) {
    row.extended_equal = family_extended_spectrum(f, k) == g.extended_spectrum();
  }
  return row;
}

int cmd_verify_family(const std::string& name, const std::string& k_text, const std::string& r_text,
                      Format format, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(name);
  if (!family) {
    std::string known;
    for (const auto f : kAllFamilies) known += (known.empty() ? "" : ", ") + std::string(family_name(f));
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  const auto ks = family_uses_k(*family) ? parse_range(k_text, "k").values() : std::vector<int>{1};
  const auto rs = family_uses_r(*family) ? parse_range(r_text, "r").values() : std::vector<int>{1};
  for (const int k : ks) {
    for (const int r : rs) check_family_domain(*family, k, r);
  }

  std::vector<FamilyRow> rows;
  for (const int k : ks) {
    for (const int r : rs) rows.push_back(check_family(*family, k, r));
  }
  std::size_t passed = 0;
  for (const auto& row : rows) passed += row.ok() ? 1 : 0;

  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  switch (format) {
    case Format::Plain:
      for (const auto& row : rows) {
        out << "k=" << row.k << " r=" << row.r << "  " << row.spec << "  "
            << (row.ok() ? "pass" : "FAIL") << "  unimodal=" << yes_no(row.unimodal)
            << " log-concave=" << yes_no(row.log_concave) << '\n';
      }
      out << family_name(*family) << ": " << passed << '/' << rows.size() << " pass\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["family"] = std::string(family_name(*family));
      j["passed"] = passed;
      j["total"] = rows.size();
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json jr;
        jr["k"] = row.k;
        jr["r"] = row.r;
        jr["spec"] = row.spec;
        jr["spectrum_equal"] = row.spectrum_equal;
        if (row.extended_equal) jr["extended_equal"] = *row.extended_equal;
        jr["unimodal"] = row.unimodal;
        jr["log_concave"] = row.log_concave;
        j["rows"].push_back(jr);
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "k,r,spec,spectrum_equal,extended_equal,unimodal,log_concave\n";
      for (const auto& row : rows) {
        out << row.k << ',' << row.r << ",\"" << row.spec << "\"," << row.spectrum_equal << ','
            << (row.extended_equal ? std::to_string(*row.extended_equal) : "") << ','
            << row.unimodal << ',' << row.log_concave << '\n';
      }
      break;
  }
  if (passed != rows.size()) {
    err << "formula and engine disagree on " << rows.size() - passed << " row(s)\n";
    return kEngineViolation;
  }
  return kOk;
}

struct LemmaCounts {
  std::size_t specs = 0;
  std::size_t swap_fail = 0;
  std::size_t reverse_fail = 0;
  std::size_t block_cases = 0;
  std::size_t block_fail = 0;
  std::vector<std::string> failures;
};

int cmd_verify_lemmas(int n_max, int k_max, int m_max, Format format, std::ostream& out,
                      std::ostream& err) {
  LemmaCounts c;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& spec : enumerate_frobenius(n)) {
      ++c.specs;
      if (!verify_swap_lemma(spec)) {
        ++c.swap_fail;
        c.failures.push_back("swap: " + spec.to_string());
      }
      if (!verify_reverse_lemma(spec)) {
        ++c.reverse_fail;
        c.failures.push_back("reverse: " + spec.to_string());
      }
    }
  }
  for (int k1 = 1; k1 <= k_max; ++k1) {
    for (int k2 = 1; k2 <= k_max; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      for (int m = 1; m <= m_max; ++m) {
        ++c.block_cases;
        for (const auto& check : check_block_lemmas(k1, k2, m).checks) {
          if (check.applicable && !check.holds) {
            ++c.block_fail;
            c.failures.push_back("block " + check.name + ": k1=" + std::to_string(k1) +
                                 " k2=" + std::to_string(k2) + " m=" + std::to_string(m));
          }
        }
      }
    }
  }
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["frobenius_specs"] = c.specs;
      j["swap_failures"] = c.swap_fail;
      j["reverse_failures"] = c.reverse_fail;
      j["block_cases"] = c.block_cases;
      j["block_failures"] = c.block_fail;
      j["failures"] = c.failures;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "frobenius_specs,swap_failures,reverse_failures,block_cases,block_failures\n"
          << c.specs << ',' << c.swap_fail << ',' << c.reverse_fail << ',' << c.block_cases << ','
          << c.block_fail << '\n';
      break;
    case Format::Plain:
      out << "swap lemma: " << c.specs - c.swap_fail << '/' << c.specs << " pass\n"
          << "reverse lemma: " << c.specs - c.reverse_fail << '/' << c.specs << " pass\n"
          << "block lemmas: " << c.block_cases << " cases, " << c.block_fail << " failing checks\n";
      for (const auto& f : c.failures) out << "FAIL " << f << '\n';
      break;
  }
  if (!c.failures.empty()) {
    err << "proven lemma violated; this is an engine bug\n";
    return kEngineViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index, spectra and meanders of type-A seaweed algebras", "seaweed"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "plain";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  std::string spec_text;
  std::string out_path;
  bool extended = false;

  auto* index = app.add_subcommand("index", "Meander index, paths and cycles");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum in exponent notation");
  auto* extended_cmd = app.add_subcommand("extended", "Extended spectrum");
  auto* principal = app.add_subcommand("principal", "Diagonal of the principal element");
  auto* matrix = app.add_subcommand("matrix", "Spectrum matrix, '·' outside the seaweed");
  auto* render = app.add_subcommand("render", "SVG of the oriented meander");
  for (auto* sub : {index, spectrum_cmd, extended_cmd, principal, matrix, render}) {
    sub->add_option("spec", spec_text, "Seaweed, e.g. \"2|4 / 1|2|3\"")->required();
  }
  matrix->add_flag("--extended", extended, "Full n x n matrix of path weights");
  render->add_option("--out", out_path, "Output file (default: stdout)");

  std::string family_text;
  std::string k_text = "1";
  std::string r_text = "1";
  auto* verify_family = app.add_subcommand("verify-family", "Closed-form spectra against the engine");
  verify_family->add_option("family", family_text, "k1, k2, k1k, k2k, 2k1-12k, 2k11, k-2r, k-2r+1, 2s-r1, k-4r, k-4r+2")
      ->required();
  verify_family->add_option("--k", k_text, "A..B[:odd]");
  verify_family->add_option("--r", r_text, "A..B");

  int lemma_n = 10;
  int lemma_k = 8;
  int lemma_m = 4;
  auto* verify_lemmas = app.add_subcommand("verify-lemmas", "Swap, reverse and block lemmas");
  verify_lemmas->add_option("--n-max", lemma_n, "Largest n for swap/reverse")->check(CLI::Range(1, 14));
  verify_lemmas->add_option("--k-max", lemma_k, "Largest k1, k2")->check(CLI::PositiveNumber);
  verify_lemmas->add_option("--m-max", lemma_m, "Largest m")->check(CLI::PositiveNumber);

  SweepJob job;
  std::string conjecture_text = "unimodal_2_8";
  std::string resume_path;
  auto* sweep = app.add_subcommand("sweep", "Search for conjecture counterexamples");
  sweep->add_option("--conjecture", conjecture_text)
      ->check(CLI::IsMember({"unimodal_2_8", "stability_4_16", "stability_4_17", "stability_4_18", "none"}));
  sweep->add_option("--n-min", job.n_min)->check(CLI::PositiveNumber);
  sweep->add_option("--n-max", job.n_max)->check(CLI::PositiveNumber);
  sweep->add_option("--k-max", job.k_max)->check(CLI::PositiveNumber);
  sweep->add_option("--r-max", job.r_max)->check(CLI::PositiveNumber);
  sweep->add_option("--workers", job.workers)->check(CLI::PositiveNumber);
  sweep->add_option("--out", job.output_path, "NDJSON record file");
  sweep->add_option("--resume", resume_path, "Resume from and append to an NDJSON record file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kUsage;
  }

  const Format format = format_text == "json" ? Format::Json
                        : format_text == "csv" ? Format::Csv
                                               : Format::Plain;
  try {
    if (*verify_family) return cmd_verify_family(family_text, k_text, r_text, format, out, err);
    if (*verify_lemmas) return cmd_verify_lemmas(lemma_n, lemma_k, lemma_m, format, out, err);
    if (*sweep) {
      job.conjecture = *parse_conjecture(conjecture_text);
      if (!resume_path.empty()) {
        if (!job.output_path.empty() && job.output_path != resume_path) {
          throw UsageError("--out and --resume name different files");
        }
        job.output_path = resume_path;
        job.resume = true;
      }
      const auto result = run_sweep(job);
      out << result.summary.to_json().dump() << '\n';
      for (const auto& c : result.summary.engine_bugs) err << "ENGINE BUG " << c << '\n';
      for (const auto& c : result.summary.counterexamples) err << "COUNTEREXAMPLE " << c << '\n';
      return result.summary.exit_code();
    }

    const SeaweedSpec spec = parse_seaweed(spec_text);
    if (*index) {
      const auto summary = components(build_meander(spec));
      const int ind = index_sl(spec);
      switch (format) {
        case Format::Plain:
          out << "index " << ind << "\nindex_gl " << index_gl(spec) << "\npaths " << summary.paths
              << "\ncycles " << summary.cycles << "\nfrobenius " << (ind == 0 ? "yes" : "no") << '\n';
          break;
        case Format::Json: {
          nlohmann::ordered_json j;
          j["spec"] = spec.to_string();
          j["index"] = ind;
          j["index_gl"] = index_gl(spec);
          j["paths"] = summary.paths;
          j["cycles"] = summary.cycles;
          j["frobenius"] = ind == 0;
          out << j.dump() << '\n';
          break;
        }
        case Format::Csv:
          out << "spec,index,index_gl,paths,cycles,frobenius\n\"" << spec.to_string() << "\","
              << ind << ',' << index_gl(spec) << ',' << summary.paths << ',' << summary.cycles
              << ',' << (ind == 0) << '\n';
          break;
      }
      return kOk;
    }
    if (*render) {
      write_text(out_path, render_svg(spec), out);
      return kOk;
    }

    const FrobeniusSeaweed g(spec);
    if (*spectrum_cmd) {
      print_multiset(out, g.spectrum(), format);
    } else if (*extended_cmd) {
      print_multiset(out, g.extended_spectrum(), format);
    } else if (*matrix) {
      print_matrix(out, extended ? g.extended_spectrum_matrix() : g.spectrum_matrix(), format);
    } else if (*principal) {
      const auto pe = g.principal_element();
      switch (format) {
        case Format::Plain:
          for (std::size_t i = 0; i < pe.diag.size(); ++i) {
            out << (i ? " " : "") << pe.diag[i].to_string();
          }
          out << '\n';
          break;
        case Format::Json: {
          nlohmann::ordered_json j;
          j["spec"] = spec.to_string();
          j["diag"] = nlohmann::ordered_json::array();
          for (const auto& d : pe.diag) j["diag"].push_back(d.to_string());
          out << j.dump() << '\n';
          break;
        }
        case Format::Csv:
          out << "vertex,value\n";
          for (std::size_t i = 0; i < pe.diag.size(); ++i) {
            out << i + 1 << ',' << pe.diag[i].to_string() << '\n';
          }
          break;
      }
    }
    return kOk;
  } catch (const NotFrobeniusError& e) {
    err << "error: " << e.what() << '\n';
    return kNotFrobenius;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // ParseError and DomainError
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEngineViolation;
  }
}

}  // namespace seaweed::cli
