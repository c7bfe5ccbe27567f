#include "genpos/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "genpos/json_io.hpp"

namespace genpos {

namespace {

using nlohmann::json;

std::vector<double> parse_real_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(field + ": bad number '" + item + "'");
    }
  }
  return out;
}

json load_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(field + ": cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(field + ": malformed JSON (" + e.what() + ")");
  }
  return j;
}

struct OutputSink {
  std::string path;  // empty -> stdout

  void write(const std::string& text, std::ostream& fallback) const {
    if (path.empty()) {
      fallback << text;
      if (!text.empty() && text.back() != '\n') fallback << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("out: cannot write '" + path + "'");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"rigorous certificates for parametrized iterated function systems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "write the result to a file instead of stdout");
  app.add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for randomized reports (default 0)");

  // moran
  auto* moran = app.add_subcommand("moran", "solve the Moran / dimension equation");
  std::string ratios_text, coeffs_text, bases_text;
  double target = 1.0, bracket_lo = 0.0, bracket_hi = 8.0;
  moran->add_option("--ratios", ratios_text, "comma-separated contraction ratios");
  moran->add_option("--coeffs", coeffs_text, "term coefficients (with --bases)");
  moran->add_option("--bases", bases_text, "term bases in (0,1)");
  moran->add_option("--target", target, "right-hand side (default 1)");
  moran->add_option("--lo", bracket_lo, "bracket lower end");
  moran->add_option("--hi", bracket_hi, "bracket upper end");

  // certify
  auto* certify = app.add_subcommand("certify", "margin certificate for a word pair");
  std::string family_path, j_text, k_text;
  double opt_cj = 0, opt_Ck = 0, opt_dimD = 0;
  bool has_cj = false, has_Ck = false, has_dimD = false;
  certify->add_option("--family", family_path, "family descriptor JSON")->required();
  certify->add_option("--j", j_text, "word j, e.g. 1,1")->required();
  certify->add_option("--k", k_text, "word k")->required();
  certify->add_option("--cj", opt_cj, "override c_j")->each([&](const std::string&) { has_cj = true; });
  certify->add_option("--Ck", opt_Ck, "override C_k")->each([&](const std::string&) { has_Ck = true; });
  certify->add_option("--dim-domain", opt_dimD, "override dim_H D")
      ->each([&](const std::string&) { has_dimD = true; });

  // separate
  auto* separate = app.add_subcommand("separate", "sound piece-disjointness check");
  std::string system_path;
  double tol = 1e-9;
  int max_depth = 40;
  bool ssc = false;
  separate->add_option("--system", system_path, "system descriptor JSON")->required();
  separate->add_option("--j", j_text, "word j");
  separate->add_option("--k", k_text, "word k");
  separate->add_option("--tol", tol, "resolution tolerance");
  separate->add_option("--max-depth", max_depth, "refinement depth cap");
  separate->add_flag("--ssc", ssc, "check all first-level pairs");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "classify a parameter grid");
  int cells = 100, max_mn = 4;
  std::string csv_path;
  sweep->add_option("--family", family_path, "family descriptor JSON")->required();
  sweep->add_option("--j", j_text, "word j")->required();
  sweep->add_option("--k", k_text, "word k")->required();
  sweep->add_option("--cells", cells, "grid cells per axis");
  sweep->add_option("--tol", tol, "resolution tolerance");
  sweep->add_option("--max-depth", max_depth, "refinement depth cap");
  sweep->add_option("--max-mn", max_mn, "piece-pair exponent cap (exact-overlap)");
  sweep->add_option("--csv", csv_path, "also write per-cell rows to this CSV file");

  // case
  auto* case_cmd = app.add_subcommand("case", "reproduce a case study");
  auto* case_eo = case_cmd->add_subcommand("exact-overlap", "three-map overlap system");
  double t_param = 0, b_param = 0;
  int case_max_mn = 4, case_depth = 30;
  double case_tol = 1e-9;
  case_eo->add_option("--t", t_param, "S_1 ratio (parameter)")->required();
  case_eo->add_option("--b", b_param, "S_2 ratio (fixed)")->required();
  case_eo->add_option("--max-mn", case_max_mn, "exponent range to check");
  case_eo->add_option("--depth", case_depth, "refinement depth cap");
  case_eo->add_option("--tol", case_tol, "resolution tolerance");
  auto* case_op = case_cmd->add_subcommand("one-point", "six-map one-point system");
  double p_param = 0, q_param = 0, r_param = 0;
  case_op->add_option("--p", p_param, "S_1 ratio")->required();
  case_op->add_option("--q", q_param, "S_3 ratio (parameter)")->required();
  case_op->add_option("--r", r_param, "common ratio of S_2, S_4, S_5, S_6")->required();
  case_op->add_option("--max-mn", case_max_mn, "exponent range to check");
  case_op->add_option("--depth", case_depth, "refinement depth cap");
  case_op->add_option("--tol", case_tol, "resolution tolerance");
  case_cmd->require_subcommand(1);

  // wsp-witness
  auto* wsp = app.add_subcommand("wsp-witness", "near-identity composition search");
  std::string kind;
  double wsp_tol = 1e-6;
  long max_exp = 1000;
  wsp->add_option("--kind", kind, "exact-overlap or one-point")
      ->required()
      ->check(CLI::IsMember({"exact-overlap", "one-point"}));
  wsp->add_option("--t", t_param, "exact-overlap t");
  wsp->add_option("--b", b_param, "exact-overlap b");
  wsp->add_option("--p", p_param, "one-point p");
  wsp->add_option("--q", q_param, "one-point q");
  wsp->add_option("--r", r_param, "one-point r");
  wsp->add_option("--tol", wsp_tol, "stop once the identity distance drops below this");
  wsp->add_option("--max-exp", max_exp, "exponent cap");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  OutputSink sink{out_path};
  try {
    if (moran->parsed()) {
      json result;
      if (!ratios_text.empty()) {
        RatioVector r(parse_real_list(ratios_text, "ratios"));
        if (r.size() < 2) throw std::invalid_argument("ratios: need at least 2 entries");
        double s = similarity_dimension(r);
        DimensionEquation eq = DimensionEquation::moran(r);
        result = json{{"s", s}, {"residual", std::abs(eq.evaluate(s) - 1.0)}};
      } else {
        std::vector<double> coeffs = parse_real_list(coeffs_text, "coeffs");
        std::vector<double> bases = parse_real_list(bases_text, "bases");
        if (coeffs.empty() || coeffs.size() != bases.size())
          throw std::invalid_argument("coeffs/bases: need matching nonempty lists");
        DimensionEquation eq;
        eq.target = target;
        for (size_t i = 0; i < coeffs.size(); ++i)
          eq.terms.push_back({coeffs[i], bases[i]});
        RootResult root = solve_dimension_equation(eq, bracket_lo, bracket_hi);
        result = json{{"root", root.root}, {"residual", root.residual}};
      }
      sink.write(canonical_dump(result), out);
      return 0;
    }

    if (certify->parsed()) {
      FamilyDescriptor fam = family_from_json(load_json_file(family_path, "family"));
      Certificate c = margin_certificate(
          fam, Word::parse(j_text), Word::parse(k_text),
          has_cj ? std::optional<double>(opt_cj) : std::nullopt,
          has_Ck ? std::optional<double>(opt_Ck) : std::nullopt,
          has_dimD ? std::optional<double>(opt_dimD) : std::nullopt);
      sink.write(canonical_dump(to_json(c)), out);
      if (!c.holds) {
        err << "certificate does not hold\n";
        return 1;
      }
      return 0;
    }

    if (separate->parsed()) {
      IFSystem s = system_from_json(load_json_file(system_path, "system"));
      if (ssc) {
        SscReport r = check_ssc(s, tol, max_depth);
        sink.write(canonical_dump(to_json(r)), out);
        if (!r.ssc_holds) {
          err << "separation undecided for at least one pair\n";
          return 1;
        }
        return 0;
      }
      if (j_text.empty() || k_text.empty())
        throw std::invalid_argument("j/k: words are required unless --ssc is set");
      SeparationVerdict v =
          check_pair_disjoint(s, Word::parse(j_text), Word::parse(k_text), tol, max_depth);
      sink.write(canonical_dump(to_json(v)), out);
      if (v.status != SeparationStatus::Disjoint) {
        err << "separation undecided\n";
        return 1;
      }
      return 0;
    }

    if (sweep->parsed()) {
      FamilyDescriptor fam = family_from_json(load_json_file(family_path, "family"));
      SweepReport r = exceptional_set_sweep(fam, Word::parse(j_text),
                                            Word::parse(k_text), cells, tol,
                                            max_depth, max_mn);
      if (!csv_path.empty()) OutputSink{csv_path}.write(sweep_csv(r), out);
      sink.write(format == "csv" ? sweep_csv(r) : canonical_dump(to_json(r)), out);
      return 0;
    }

    if (case_cmd->parsed()) {
      CaseVerdict v;
      if (case_eo->parsed())
        v = classify_exact_overlap({t_param, b_param}, case_max_mn, case_tol, case_depth);
      else
        v = classify_one_point({p_param, q_param, r_param}, case_max_mn, case_tol,
                               case_depth);
      sink.write(format == "csv" ? case_csv(v) : canonical_dump(to_json(v)), out);
      if (!v.verified) {
        err << "case study not verified on the checked range\n";
        return 1;
      }
      return 0;
    }

    if (wsp->parsed()) {
      WitnessSearchResult r =
          kind == "exact-overlap"
              ? wsp_witness_search_exact({t_param, b_param}, wsp_tol, max_exp)
              : wsp_witness_search_onepoint({p_param, q_param, r_param}, wsp_tol,
                                            max_exp);
      sink.write(format == "csv" ? witnesses_csv(r) : canonical_dump(to_json(r)), out);
      if (!r.reached_tol) {
        err << "exponent cap reached before the target tolerance\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace genpos
