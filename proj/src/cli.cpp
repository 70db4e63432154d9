#include "flatcat/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatcat/bijections.hpp"
#include "flatcat/errors.hpp"
#include "flatcat/format.hpp"
#include "flatcat/lattice.hpp"
#include "flatcat/series.hpp"
#include "flatcat/stats.hpp"
#include "flatcat/verify.hpp"
#include "flatcat/word.hpp"

namespace flatcat {

namespace {

struct StatOptions {
  std::string stat;
  int ell = 0;
  CLI::Option* stat_opt = nullptr;
  CLI::Option* ell_opt = nullptr;

  void add(CLI::App* app, bool required) {
    stat_opt = app->add_option("--stat", stat, "Statistic: runs, wruns, druns, wdruns, ell_val, "
                                               "val, symv, ell_peak, peak, symp");
    if (required) stat_opt->required();
    ell_opt = app->add_option("--ell", ell, "Plateau length for ell_val and ell_peak");
  }

  bool given() const { return stat_opt->count() > 0; }

  StatKind kind() const {
    if (!given() && ell_opt->count() > 0) throw UsageError("--ell needs --stat");
    std::optional<int> e;
    if (ell_opt->count() > 0) e = ell;
    StatKind k = StatKind::parse(stat, e);
    if (k.indexed() && k.ell < 1) throw UsageError("--ell must be at least 1");
    return k;
  }
};

Word parse_word_arg(const std::string& text) {
  Word w = Word::parse(text);
  if (!validate_catalan(w.letters()))
    throw DomainError("'" + text + "' is not a Catalan word");
  return w;
}

Word parse_flattened_arg(const std::string& text) {
  Word w = parse_word_arg(text);
  if (!validate_flattened(w)) throw DomainError("'" + text + "' is not a flattened Catalan word");
  return w;
}

std::string kind_json_name(StatKind k) { return k.name(); }

void require_positive(int value, std::string_view flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be at least 1");
}

// Parses "i-j" (1-based, inclusive) or a single position "i".
LetterRange parse_mark(const std::string& text, std::size_t length) {
  int first = 0, last = 0;
  char dash = 0;
  std::istringstream is(text);
  bool ok = static_cast<bool>(is >> first);
  if (ok && is >> dash) ok = dash == '-' && static_cast<bool>(is >> last) && is.peek() == EOF;
  else last = first;
  if (!ok || first < 1 || last < first || static_cast<std::size_t>(last) > length)
    throw UsageError("--mark '" + text + "' is not a range i-j inside the word");
  return LetterRange{static_cast<std::size_t>(first - 1), static_cast<std::size_t>(last - 1)};
}

Triangle enumerated_triangle(StatKind kind, int max_n, int max_k) {
  Triangle t(max_n, max_k, kind);
  for (int n = 1; n <= max_n; ++n) {
    const Distribution d = distribution(n, kind);
    for (const auto& [k, count] : d.counts) {
      if (k > max_k) throw UsageError("--max-k " + std::to_string(max_k) +
                                      " truncates row n=" + std::to_string(n));
      t.cell(n, k) = count;
    }
  }
  return t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flattened Catalan words: enumeration, statistics, generating functions, "
               "bijections and verification"};
  app.name("flatcat");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.allow_windows_style_options(false);

  // count
  int count_n = 0;
  std::string count_route = "formula";
  CLI::App* count = app.add_subcommand("count", "Number of flattened Catalan words of length n");
  count->add_option("--n", count_n, "Word length")->required();
  count->add_option("--route", count_route, "formula or enumeration")
      ->check(CLI::IsMember({"formula", "enumeration"}));

  // enumerate
  int enum_n = 0, enum_cap = kDefaultExhaustiveCap;
  bool enum_weak = false, enum_compact = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Stream every word of length n, one per line");
  enumerate->add_option("--n", enum_n, "Word length")->required();
  enumerate->add_flag("--weakly-increasing", enum_weak, "Weakly increasing Catalan words instead");
  enumerate->add_flag("--compact", enum_compact, "Print letters without commas (letters <= 9)");
  enumerate->add_option("--cap", enum_cap, "Largest length allowed");

  // stats
  std::string stats_word, stats_format = "text";
  StatOptions stats_stat;
  CLI::App* stats = app.add_subcommand("stats", "Statistics of one Catalan word");
  stats->add_option("--word", stats_word, "Word, e.g. 0,1,1,2,0 or 01120")->required();
  stats_stat.add(stats, false);
  stats->add_option("--format", stats_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // triangle
  StatOptions tri_stat;
  int tri_max_n = 8, tri_max_k = -1;
  std::string tri_format = "text", tri_source = "series";
  CLI::App* triangle = app.add_subcommand("triangle", "Distribution triangle of a statistic");
  tri_stat.add(triangle, true);
  triangle->add_option("--max-n", tri_max_n, "Largest word length");
  triangle->add_option("--max-k", tri_max_k, "Largest statistic value (default: max-n)");
  triangle->add_option("--format", tri_format, "text, csv, json or markdown");
  triangle->add_option("--source", tri_source, "series or enumeration")
      ->check(CLI::IsMember({"series", "enumeration"}));

  // totals
  StatOptions tot_stat;
  int tot_max_n = 14;
  std::string tot_route = "series", tot_format = "text";
  CLI::App* totals = app.add_subcommand("totals", "Total occurrences of a statistic over each length");
  tot_stat.add(totals, true);
  totals->add_option("--max-n", tot_max_n, "Largest word length");
  totals->add_option("--route", tot_route, "series, closed-form or enumeration")
      ->check(CLI::IsMember({"series", "closed-form", "enumeration"}));
  totals->add_option("--format", tot_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // coeffs
  StatOptions co_stat;
  int co_n = 0, co_k = 0;
  CLI::App* coeffs = app.add_subcommand("coeffs", "Generating function, or one of its coefficients");
  co_stat.add(coeffs, true);
  CLI::Option* co_n_opt = coeffs->add_option("--n", co_n, "Power of x");
  CLI::Option* co_k_opt = coeffs->add_option("--k", co_k, "Power of y");
  co_k_opt->needs(co_n_opt);

  // bijection
  std::string bij_which, bij_word, bij_input;
  CLI::App* bijection = app.add_subcommand("bijection", "Apply a bijection");
  bijection->add_option("--which", bij_which, "composition, composition-inverse, ocp, dotted or phi")
      ->required()
      ->check(CLI::IsMember({"composition", "composition-inverse", "ocp", "dotted", "phi"}));
  CLI::Option* bij_word_opt = bijection->add_option("--word", bij_word, "Flattened word");
  CLI::Option* bij_input_opt =
      bijection->add_option("--input", bij_input, "Composition (1,0,1) or dotted word (01.10)");
  bij_word_opt->excludes(bij_input_opt);

  // verify
  VerifyOptions vopt;
  std::string ver_format = "text";
  CLI::App* verify = app.add_subcommand("verify", "Cross-check every computation route");
  verify->add_option("--format", ver_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--max-n", vopt.triangle_max_n, "Largest length for triangle checks");
  verify->add_option("--totals-max-n", vopt.totals_max_n, "Largest length for total checks");
  verify->add_option("--bijection-max-n", vopt.bijection_max_n, "Largest length for bijection checks");

  // render
  std::string ren_word, ren_format = "ascii";
  std::vector<std::string> ren_marks;
  StatOptions ren_stat;
  CLI::App* render = app.add_subcommand("render", "Draw the lattice path of a Catalan word");
  render->add_option("--word", ren_word, "Word")->required();
  render->add_option("--format", ren_format, "ascii or svg");
  ren_stat.add(render, false);
  render->add_option("--mark", ren_marks, "Highlight letters i-j (1-based, repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsageError;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == count) {
      require_positive(count_n, "--n");
      if (count_route == "formula") {
        out << count_flattened(count_n) << '\n';
      } else {
        BigInt c = 0;
        for ([[maybe_unused]] const Word& w : enumerate_flattened(count_n)) ++c;
        out << c << '\n';
      }
    } else if (active == enumerate) {
      require_positive(enum_n, "--n");
      auto emit = [&](const Word& w) {
        out << (enum_compact ? w.to_compact_string() : w.to_string()) << '\n';
      };
      if (enum_weak) {
        for (const Word& w : enumerate_weakly_increasing(enum_n, enum_cap)) emit(w);
      } else {
        for (const Word& w : enumerate_flattened(enum_n, enum_cap)) emit(w);
      }
    } else if (active == stats) {
      const Word w = parse_word_arg(stats_word);
      std::vector<StatKind> kinds;
      if (stats_stat.given()) kinds.push_back(stats_stat.kind());
      else if (stats_stat.ell_opt->count() > 0) throw UsageError("--ell needs --stat");
      else kinds = default_stat_kinds();
      if (stats_format == "json") {
        nlohmann::ordered_json j;
        j["word"] = w.to_string();
        j["flattened"] = validate_flattened(w);
        j["stats"] = nlohmann::ordered_json::object();
        for (StatKind k : kinds) j["stats"][kind_json_name(k)] = statistic(w, k);
        out << j.dump(2) << '\n';
      } else if (stats_stat.given()) {
        out << statistic(w, kinds.front()) << '\n';
      } else {
        for (StatKind k : kinds) out << k.name() << ' ' << statistic(w, k) << '\n';
      }
    } else if (active == triangle) {
      const StatKind kind = tri_stat.kind();
      require_positive(tri_max_n, "--max-n");
      if (kind.indexed() && kind.ell > tri_max_n)
        throw UsageError("--ell " + std::to_string(kind.ell) + " exceeds --max-n " +
                         std::to_string(tri_max_n));
      const int max_k = tri_max_k < 0 ? tri_max_n : tri_max_k;
      const OutputFormat format = parse_output_format(tri_format);
      if (format == OutputFormat::svg) throw UsageError("svg output is only available for render");
      const Triangle t = tri_source == "series" ? expand(kind, tri_max_n, max_k)
                                                : enumerated_triangle(kind, tri_max_n, max_k);
      write_triangle(out, t, format);
    } else if (active == totals) {
      const StatKind kind = tot_stat.kind();
      require_positive(tot_max_n, "--max-n");
      if (kind.indexed() && kind.ell > tot_max_n)
        throw UsageError("--ell " + std::to_string(kind.ell) + " exceeds --max-n " +
                         std::to_string(tot_max_n));
      std::vector<BigInt> values;
      if (tot_route == "series") {
        const std::vector<BigInt> seq = total_sequence(kind, tot_max_n);
        values.assign(seq.begin() + 1, seq.end());
      } else {
        for (int n = 1; n <= tot_max_n; ++n)
          values.push_back(tot_route == "closed-form" ? closed_form_total(kind, n) : total(n, kind));
      }
      if (tot_format == "json") {
        // Bare integers of any size, so the array is assembled by hand.
        out << "{\"stat\":\"" << kind.name() << "\",\"route\":\"" << tot_route
            << "\",\"n_min\":1,\"values\":[";
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
        out << "]}\n";
      } else {
        if (tot_format == "csv") out << "n,total\n";
        for (std::size_t i = 0; i < values.size(); ++i)
          out << i + 1 << (tot_format == "csv" ? "," : " ") << values[i] << '\n';
      }
    } else if (active == coeffs) {
      const StatKind kind = co_stat.kind();
      const RationalBGF f = gf(kind);
      if (co_n_opt->count() == 0) {
        out << "numerator: " << f.numerator.to_string() << '\n'
            << "denominator: " << f.denominator.to_string() << '\n';
      } else if (co_n < 0 || (co_k_opt->count() > 0 && co_k < 0)) {
        throw UsageError("--n and --k must be nonnegative");
      } else if (co_k_opt->count() > 0) {
        out << expand(f, co_n, co_k).at(co_n, co_k) << '\n';
      } else {
        const Triangle t = expand(f, co_n, co_n + 1);
        for (int k = 0; k <= co_n + 1; ++k) out << (k ? " " : "") << t.at(co_n, k);
        out << '\n';
      }
    } else if (active == bijection) {
      const bool takes_word = bij_which == "composition" || bij_which == "ocp" || bij_which == "phi";
      if (takes_word ? bij_word_opt->count() == 0 : bij_input_opt->count() == 0)
        throw UsageError("--which " + bij_which + " needs " + (takes_word ? "--word" : "--input"));
      if (bij_which == "composition") {
        out << psi_composition(parse_flattened_arg(bij_word)).to_string() << '\n';
      } else if (bij_which == "composition-inverse") {
        out << psi_composition_inverse(Composition::parse(bij_input)).to_string() << '\n';
      } else if (bij_which == "ocp") {
        out << psi_ocp(parse_flattened_arg(bij_word)).to_string() << '\n';
      } else if (bij_which == "dotted") {
        out << f_dotted(DottedBinaryWord::parse(bij_input)).to_string() << '\n';
      } else {
        out << phi(parse_flattened_arg(bij_word)).to_string() << '\n';
      }
    } else if (active == verify) {
      require_positive(vopt.triangle_max_n, "--max-n");
      require_positive(vopt.totals_max_n, "--totals-max-n");
      require_positive(vopt.bijection_max_n, "--bijection-max-n");
      const CheckReport report = full_report(vopt);
      out << (ver_format == "json" ? report.to_json() : report.to_text());
      if (!report.green()) return kExitVerificationFailure;
    } else if (active == render) {
      const Word w = parse_word_arg(ren_word);
      const RenderFormat format = parse_render_format(ren_format);
      std::vector<LetterRange> marks;
      if (ren_stat.given()) marks = occurrences(w, ren_stat.kind());
      else if (ren_stat.ell_opt->count() > 0) throw UsageError("--ell needs --stat");
      for (const std::string& m : ren_marks) marks.push_back(parse_mark(m, w.size()));
      out << render_lattice(w, format, marks);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ContractViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitOk;
}

}  // namespace flatcat
