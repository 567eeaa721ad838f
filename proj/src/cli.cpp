#include "cyclebetti/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclebetti/bijection.hpp"
#include "cyclebetti/error.hpp"
#include "cyclebetti/hochster.hpp"
#include "cyclebetti/tableaux.hpp"

namespace cyclebetti::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

constexpr int kMaxVerifyN = 16;

/// Thrown for bad flags or inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> syt_annotation(int n, int i, int j) {
  if (i != j - 1 || j < 2 || j > n - 2) return std::nullopt;
  return count_syt_hook_length(hook_shape(n, j));
}

int cmd_table(int n, Format format, std::ostream& out) {
  if (n < 4 || n > kMaxHochsterN) {
    throw UsageError("table needs 4 <= n <= " + std::to_string(kMaxHochsterN) + ", got " + std::to_string(n));
  }
  const BettiTable table = betti_table(n);
  const auto rows = table.nonzero();
  switch (format) {
    case Format::Json: {
      json doc{{"n", n}, {"entries", json::array()}};
      for (const auto& e : rows) {
        const auto syt = syt_annotation(n, e.i, e.j);
        doc["entries"].push_back({{"i", e.i}, {"j", e.j}, {"value", e.value}, {"syt", syt ? json(*syt) : json(nullptr)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "i,j,value,syt\n";
      for (const auto& e : rows) {
        const auto syt = syt_annotation(n, e.i, e.j);
        out << e.i << ',' << e.j << ',' << e.value << ',' << (syt ? std::to_string(*syt) : "") << '\n';
      }
      break;
    case Format::Text:
      out << "Betti numbers of k[C_" << n << "]\n";
      out << std::setw(4) << "i" << std::setw(4) << "j" << std::setw(10) << "beta" << std::setw(10) << "syt" << '\n';
      for (const auto& e : rows) {
        const auto syt = syt_annotation(n, e.i, e.j);
        out << std::setw(4) << e.i << std::setw(4) << e.j << std::setw(10) << e.value << std::setw(10)
            << (syt ? std::to_string(*syt) : "-") << '\n';
      }
      break;
  }
  return kPass;
}

json marked_to_json(const MarkedSubset& m) {
  return json{{"n", m.n}, {"j", m.w.size()}, {"W", m.w.elements()}, {"a", m.a}};
}

int cmd_map(const std::string& text, Format format, std::ostream& out) {
  const MarkedSubset m = phi(parse_tableau(text));
  switch (format) {
    case Format::Json: out << marked_to_json(m).dump() << '\n'; break;
    case Format::Csv: out << "n,j,W,a\n" << m.n << ',' << m.w.size() << ",\"" << format_vertex_set(m.w) << "\"," << m.a << '\n'; break;
    case Format::Text: out << format_marked_subset(m) << '\n'; break;
  }
  return kPass;
}

int cmd_unmap(int n, std::optional<int> j, const std::string& set_text, int a, Format format, std::ostream& out) {
  const VertexSet w = parse_vertex_set(set_text);
  const Tableau t = psi(n, j.value_or(static_cast<int>(w.size())), w, a);
  switch (format) {
    case Format::Json: out << json{{"tableau", format_tableau(t)}, {"rows", t.rows()}}.dump() << '\n'; break;
    case Format::Csv: out << "tableau\n\"" << format_tableau(t) << "\"\n"; break;
    case Format::Text: out << format_tableau(t) << '\n'; break;
  }
  return kPass;
}

int cmd_syt(int n, int j, bool count_only, Format format, std::ostream& out) {
  if (n < 4 || j < 2 || j > n - 2) {
    throw UsageError("syt needs n >= 4 and 2 <= j <= n-2, got n=" + std::to_string(n) + " j=" + std::to_string(j));
  }
  const Shape shape = hook_shape(n, j);
  const auto tableaux = enumerate_syt(shape);
  const std::uint64_t hook = count_syt_hook_length(shape);
  switch (format) {
    case Format::Json: {
      json doc{{"n", n}, {"j", j}, {"shape", shape.parts()}, {"count_enumerated", tableaux.size()}, {"count_hook_length", hook}};
      if (!count_only) {
        doc["tableaux"] = json::array();
        for (const auto& t : tableaux) doc["tableaux"].push_back(format_tableau(t));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (count_only) {
        out << "enumerated,hook_length\n" << tableaux.size() << ',' << hook << '\n';
      } else {
        out << "index,tableau\n";
        for (std::size_t k = 0; k < tableaux.size(); ++k) out << k + 1 << ",\"" << format_tableau(tableaux[k]) << "\"\n";
      }
      break;
    case Format::Text:
      if (count_only) {
        out << tableaux.size() << ' ' << hook << '\n';
      } else {
        for (const auto& t : tableaux) out << format_tableau(t) << '\n';
      }
      break;
  }
  return tableaux.size() == hook ? kPass : kCheckFailure;
}

struct VerifyRow {
  VerificationReport report;
  std::uint64_t betti_value = 0;
  std::uint64_t hook_count = 0;
  std::size_t duality_failures = 0;

  bool passed() const {
    return report.passed() && duality_failures == 0 && betti_value == report.tableau_count &&
           hook_count == report.tableau_count && report.marked_subset_count == report.tableau_count;
  }
};

int cmd_verify(const std::string& range_text, Format format, std::ostream& out) {
  std::pair<int, int> range;
  try {
    range = parse_n_range(range_text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto [lo, hi] = range;
  if (lo < 4 || hi > kMaxVerifyN || lo > hi) {
    throw UsageError("verify needs 4 <= n <= " + std::to_string(kMaxVerifyN) + ", got " + range_text);
  }

  std::vector<VerifyRow> rows;
  for (int n = lo; n <= hi; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      VerifyRow row;
      row.report = verify_bijection(n, j);
      row.betti_value = betti(n, j - 1, j);
      row.hook_count = count_syt_hook_length(hook_shape(n, j));
      for (const Tableau& t : enumerate_syt(hook_shape(n, j))) {
        if (!duality_check(t)) {
          ++row.duality_failures;
          row.report.counterexamples.push_back("duality fails for " + format_tableau(t));
        }
      }
      rows.push_back(std::move(row));
    }
  }
  const bool all_passed = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.passed(); });

  switch (format) {
    case Format::Json: {
      json doc{{"passed", all_passed}, {"results", json::array()}};
      for (const auto& row : rows) {
        const auto& r = row.report;
        doc["results"].push_back({{"n", r.n},
                                  {"j", r.j},
                                  {"tableaux", r.tableau_count},
                                  {"marked_subsets", r.marked_subset_count},
                                  {"betti", row.betti_value},
                                  {"hook_length", row.hook_count},
                                  {"injective", r.injective},
                                  {"image_matches", r.image_matches},
                                  {"psi_phi_identity", r.psi_after_phi_identity},
                                  {"phi_psi_identity", r.phi_after_psi_identity},
                                  {"duality_failures", row.duality_failures},
                                  {"passed", row.passed()},
                                  {"counterexamples", r.counterexamples}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,j,tableaux,marked_subsets,betti,hook_length,injective,image_matches,psi_phi_identity,phi_psi_identity,"
             "duality_failures,passed\n";
      for (const auto& row : rows) {
        const auto& r = row.report;
        out << r.n << ',' << r.j << ',' << r.tableau_count << ',' << r.marked_subset_count << ',' << row.betti_value << ','
            << row.hook_count << ',' << r.injective << ',' << r.image_matches << ',' << r.psi_after_phi_identity << ','
            << r.phi_after_psi_identity << ',' << row.duality_failures << ',' << row.passed() << '\n';
      }
      break;
    case Format::Text:
      for (const auto& row : rows) {
        const auto& r = row.report;
        out << "n=" << r.n << " j=" << r.j << "  syt=" << r.tableau_count << " marked=" << r.marked_subset_count
            << " betti=" << row.betti_value << " hook=" << row.hook_count << "  " << (row.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& c : r.counterexamples) out << "    " << c << '\n';
      }
      out << (all_passed ? "all checks passed" : "CHECK FAILURES") << '\n';
      break;
  }
  return all_passed ? kPass : kCheckFailure;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::Parse, "bad n range '" + text + "'; expected N or LO..HI");
    }
    return v;
  };
  const std::string_view view = text;
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const int n = to_int(view);
    return {n, n};
  }
  return {to_int(view.substr(0, dots)), to_int(view.substr(dots + 2))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of cycle graphs and their standard Young tableaux bijection", "cyclebetti"};
  app.require_subcommand(1);

  Format format = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  int n = 0;
  std::optional<int> j;
  int j_required = 0;
  int a = 0;
  std::string text;
  std::string set_text;
  std::string range_text;
  bool count_only = false;

  auto* table = app.add_subcommand("table", "Print the nonzero graded Betti numbers of k[C_n] (n capped at 20: 2^n homology computations)");
  table->add_option("--n", n, "Cycle size, 4..20")->required();
  add_format(table);

  auto* map = app.add_subcommand("map", "Send a tableau to its marked subset W|a");
  map->add_option("tableau", text, "Rows separated by ';', entries by ','")->required();
  add_format(map);

  auto* unmap = app.add_subcommand("unmap", "Build the tableau of a marked subset");
  unmap->add_option("--n", n, "Cycle size")->required();
  unmap->add_option("--j", j, "Subset size (defaults to |W|)");
  unmap->add_option("--set", set_text, "W, e.g. 2,4,6")->required();
  unmap->add_option("--a", a, "Marked vertex")->required();
  add_format(unmap);

  auto* verify = app.add_subcommand("verify", "Exhaustively check the bijection and its duality for n in a range");
  verify->add_option("--n", range_text, "N or LO..HI, within 4..16")->required();
  add_format(verify);

  auto* syt = app.add_subcommand("syt", "List or count tableaux of shape (j,2,1^{n-j-2})");
  syt->add_option("--n", n, "Cycle size")->required();
  syt->add_option("--j", j_required, "First row length")->required();
  syt->add_flag("--count-only", count_only, "Print enumerated and hook-length counts only");
  add_format(syt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(n, format, out);
    if (map->parsed()) return cmd_map(text, format, out);
    if (unmap->parsed()) return cmd_unmap(n, j, set_text, a, format, out);
    if (verify->parsed()) return cmd_verify(range_text, format, out);
    if (syt->parsed()) return cmd_syt(n, j_required, count_only, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::InvariantViolation ? kCheckFailure : kUsage;
  }
  return kUsage;
}

}  // namespace cyclebetti::cli
