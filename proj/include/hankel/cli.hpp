#pragma once

// Command-line front end. dispatch() parses argv and runs one subcommand;
// run_cli() adds report emission and the exit-code contract
// (0 all PASS, 1 any FAIL, 2 usage error).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankel/bound_surface.hpp"
#include "hankel/caratheodory.hpp"
#include "hankel/functionals.hpp"
#include "hankel/optimizer.hpp"
#include "hankel/report.hpp"
#include "hankel/scalar.hpp"
#include "hankel/series.hpp"
#include "hankel/stress_search.hpp"

namespace hankel {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- argument parsing helpers --------------------------------------------------------

// Integers, "a/b" fractions, and plain decimals such as "0.25" (no exponents).
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw UsageError("empty rational");
  try {
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
      Rational q(s, 10);
      if (sgn(q.get_den()) == 0) throw UsageError("zero denominator in '" + text + "'");
      q.canonicalize();
      return q;
    }
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos ||
        digits.find('-', 1) != std::string::npos)
      throw UsageError("malformed decimal '" + text + "'");
    Rational q(mpz_class(digits, 10), mpz_class("1" + std::string(scale, '0'), 10));
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational '" + text + "'");
  }
}

inline double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("malformed number '" + text + "'");
  return v;
}

inline std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("measure atom '" + item + "' is not of the form angle:weight");
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  if (out.empty()) throw UsageError("empty measure");
  return out;
}

// "angle:weight,..." with angles in radians; weights must sum to 1.
inline AtomicMeasure parse_measure(const std::string& spec) {
  AtomicMeasure m;
  for (const auto& [a, w] : split_pairs(spec)) m.atoms.push_back({parse_double(a), parse_double(w)});
  if (!m.valid(1e-9)) throw UsageError("measure weights must be nonnegative and sum to 1");
  return m;
}

// "s:w,..." with s = tan(angle/2) and w exact rationals summing to 1.
inline RationalMeasure parse_rational_measure(const std::string& spec) {
  RationalMeasure m;
  for (const auto& [s, w] : split_pairs(spec)) m.atoms.push_back({parse_rational(s), parse_rational(w)});
  if (!m.valid()) throw UsageError("exact measure weights must be nonnegative and sum to exactly 1");
  return m;
}

inline std::string fmt_value(double v) { return fmt_real(v); }
inline std::string fmt_value(const Rational& v) { return fmt_rational(v); }
inline std::string fmt_value(const Complex& z) {
  if (z.imag() == 0.0) return fmt_real(z.real());
  return fmt_real(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_real(std::abs(z.imag())) + "i";
}
inline std::string fmt_value(const ComplexRational& z) {
  if (sgn(z.im) == 0) return fmt_rational(z.re);
  return fmt_rational(z.re) + (sgn(z.im) < 0 ? "-" : "+") + fmt_rational(abs(z.im)) + "i";
}

// ---- subcommand bodies ---------------------------------------------------------------

namespace cli_detail {

template <class C>
bool same_value(const C& a, const C& b) {
  if constexpr (is_exact_v<C>) {
    return a == b;
  } else {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  }
}

template <class C>
double magnitude(const C& z) {
  if constexpr (is_exact_v<C>) {
    return std::sqrt(to_double(abs2(z)));
  } else {
    return std::abs(z);
  }
}

template <class C>
void coeff_items(std::vector<ReportItem>& items, const CaratheodorySequence<C>& s, int upto) {
  if (upto <= 7) {
    const CoeffVector<C> c = coeffs_wp(s);
    for (int n = 2; n <= upto; ++n) items.push_back(info_item("a" + std::to_string(n), "", fmt_value(c[n])));
    return;
  }
  const auto f = starlike_from_caratheodory(s.as_series(upto), cardioid_phi<C>(upto), upto);
  for (int n = 2; n <= upto; ++n) items.push_back(info_item("a" + std::to_string(n), "", fmt_value(f[n])));
}

template <class C>
void hankel_items(std::vector<ReportItem>& items, const CaratheodorySequence<C>& s) {
  const CoeffVector<C> c = coeffs_wp(s);
  const C h3 = hankel_det(c, 3, 1);
  const C h4 = hankel_det(c, 4, 1);
  const auto d = h4_decomposition(c);
  items.push_back(info_item("H3", "", fmt_value(h3)));
  items.push_back(info_item("abs_H3", "", fmt_real(magnitude(h3))));
  items.push_back(info_item("H4", "", fmt_value(h4)));
  items.push_back(info_item("Q1", "", fmt_value(d.q1)));
  items.push_back(info_item("Q2", "", fmt_value(d.q2)));
  items.push_back(info_item("Q3", "", fmt_value(d.q3)));
  items.push_back(info_item("Q3_typeset", "a6(a4-a2a3) last term", fmt_value(q3_printed(c))));
  const bool ok4 = same_value(d.h4, h4);
  items.push_back({"h4_decomposition", "a7H3-a6Q1+a5Q2-a4Q3", fmt_value(d.h4), 0.0, ok4 ? Status::Pass : Status::Fail});
  const C poly = h3_poly(s);
  items.push_back({"h3_polynomial", "3x3 determinant", fmt_value(poly), 0.0, same_value(poly, h3) ? Status::Pass : Status::Fail});
}

inline void extremal_items(std::vector<ReportItem>& items) {
  const auto f = extremal_series<Rational>(7);
  const CoeffVector<Rational> c = CoeffVector<Rational>::from_series(f);
  items.push_back(exact_item("a4", make_rational(1, 3), c[4]));
  items.push_back(exact_item("a7", make_rational(2, 9), c[7]));
  const Rational h3 = hankel_det(c, 3, 1);
  items.push_back(exact_item("abs_H3", make_rational(1, 9), abs(h3)));
  const Rational h4 = hankel_det(c, 4, 1);
  items.push_back(exact_item("H4", make_rational(-1, 81), h4));
  items.push_back(exact_item("h4_decomposition", h4, h4_decomposition(c).h4));
}

struct PhiChoice {
  MindaPhi<Rational> phi;
  std::string name;  // "cardioid", "koebe" or "custom"
};

// Lower bound for the 2-fold |H3| over real c1 in [0,2], c2 in [c1^2-2, 2].
inline std::pair<double, std::string> twofold_witness(const MindaPhi<Rational>& phi) {
  const MindaPhi<double> p{phi.b1.get_d(), phi.b2.get_d(), phi.b3.get_d()};
  double best = -1.0;
  std::string at;
  constexpr int kGrid = 400;
  for (int i = 0; i <= kGrid; ++i) {
    const double c1 = 2.0 * i / kGrid;
    for (int j = 0; j <= kGrid; ++j) {
      const double c2 = (c1 * c1 - 2.0) + (4.0 - c1 * c1) * j / kGrid;
      const auto m = maminda_coeffs(p, c1, c2, 0.0);
      const CoeffVector<double> c = CoeffVector<double>::from({m.a2, m.a3});
      const double v = std::abs(nfold_h3(c, 2));
      if (v > best) {
        best = v;
        at = "c1=" + fmt_real(c1) + ",c2=" + fmt_real(c2);
      }
    }
  }
  return {best, at};
}

inline void nfold_items(std::vector<ReportItem>& items, const PhiChoice& choice, int fold) {
  const MindaPhi<Rational>& phi = choice.phi;
  const bool named = choice.name != "custom";
  if (fold == 3) {
    const Rational b = threefold_bound(phi);
    if (named) {
      const Rational expected = choice.name == "cardioid" ? make_rational(1, 9) : make_rational(4, 9);
      items.push_back(exact_item("threefold_bound", expected, b));
    } else {
      items.push_back(info_item("threefold_bound", "B1^2/9", fmt_rational(b)));
    }
    // c1 = 2 attains it: |H3| = (B1 c1 / 6)^2.
    const auto m = maminda_coeffs(phi, Rational(2), Rational(2), Rational(2));
    const Rational attained = abs(nfold_h3(CoeffVector<Rational>::from({m.a2, m.a3}), 3));
    items.push_back(exact_item("threefold_attained", b, attained));
    return;
  }
  const Rational b = twofold_bound(phi);
  if (named) {
    const Rational expected = choice.name == "cardioid" ? make_rational(1, 24) : make_rational(1, 6);
    items.push_back(exact_item("twofold_bound", expected, b));
  } else {
    items.push_back(info_item("twofold_bound", "typeset three-case formula", fmt_rational(b)));
  }
  const auto [w, at] = twofold_witness(phi);
  items.push_back(info_item("twofold_witness", "<= " + fmt_rational(b),
                            fmt_real(w) + " at " + at + (w > b.get_d() + 1e-12 ? " (exceeds the typeset bound)" : "")));
  if (sgn(phi.b1) > 0) items.push_back(info_item("twofold_bound_starlike", "", fmt_rational(twofold_bound_starlike(phi))));
}

}  // namespace cli_detail

// ---- dispatch ---------------------------------------------------------------------------

struct CliOutcome {
  RunReport report;
  Format format = Format::Text;
  std::string out_path;
  bool help = false;
  std::string help_text;
};

inline CliOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Hankel determinant verification toolkit", "hankel"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<std::uint64_t> budget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "write the report to this file instead of stdout");
    sub->add_option("--seed", seed, "random seed (echoed in the report)");
  };
  auto add_tol_budget = [&](CLI::App* sub, const char* budget_help) {
    sub->add_option("--tol", tol, "certificate tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, budget_help)->check(CLI::PositiveNumber);
  };

  std::string which;
  auto* verify = app.add_subcommand("verify", "certify the bound surface maxima");
  verify->add_option("what", which, "conjecture | faces | edges")->required()->check(CLI::IsMember({"conjecture", "faces", "edges"}));
  add_common(verify);
  add_tol_budget(verify, "branch-and-bound box budget");

  std::string measure;
  bool exact = false;
  int upto = 7;
  auto* coeffs = app.add_subcommand("coeffs", "coefficients a_2..a_N of the starlike function built from a measure");
  coeffs->add_option("--measure", measure, "\"angle:weight,...\" (with --exact: \"tan(angle/2):weight,...\" rationals)")->required();
  coeffs->add_option("--upto", upto, "largest coefficient index")->check(CLI::Range(2, 40));
  coeffs->add_flag("--exact", exact, "exact rational arithmetic");
  add_common(coeffs);

  bool extremal = false;
  auto* hankel_cmd = app.add_subcommand("hankel", "Hankel determinants H3(1), H4(1) and the cofactors Q1..Q3");
  auto* hm = hankel_cmd->add_option("--measure", measure, "measure as for coeffs");
  auto* he = hankel_cmd->add_flag("--extremal", extremal, "use z exp((e^{z^3}-1)/3)");
  hm->excludes(he);
  hankel_cmd->add_flag("--exact", exact, "exact rational arithmetic");
  add_common(hankel_cmd);

  std::string functional = "all";
  bool threefold = false;
  int max_atoms = 6;
  auto* search = app.add_subcommand("search", "random-restart search for large functional values");
  search->add_option("--functional", functional, "H3 | a6 | a7 | Q1 | Q2 | Q3 | H4 | all");
  search->add_flag("--threefold", threefold, "restrict to measures on cube-root-of-unity orbits");
  search->add_option("--max-atoms", max_atoms, "atoms (or orbits) per measure")->check(CLI::Range(1, 12));
  add_common(search);
  add_tol_budget(search, "functional evaluations per functional");

  std::string phi_name;
  std::optional<std::string> b1s, b2s, b3s;
  int fold = 0;
  auto* nfold = app.add_subcommand("nfold", "H3(1) bounds for n-fold symmetric functions");
  auto* po = nfold->add_option("--phi", phi_name, "cardioid | koebe")->check(CLI::IsMember({"cardioid", "koebe"}));
  auto* o1 = nfold->add_option("--B1", b1s, "first generator coefficient");
  auto* o2 = nfold->add_option("--B2", b2s, "second generator coefficient");
  auto* o3 = nfold->add_option("--B3", b3s, "third generator coefficient");
  po->excludes(o1)->excludes(o2)->excludes(o3);
  nfold->add_option("--fold", fold, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  add_common(nfold);

  int order = 10;
  auto* series = app.add_subcommand("series", "Taylor coefficients via truncated series arithmetic");
  auto* sm = series->add_option("--measure", measure, "measure as for coeffs");
  auto* se = series->add_flag("--extremal", extremal, "z exp((e^{z^3}-1)/3) instead of a measure");
  sm->excludes(se);
  series->add_option("--phi", phi_name, "cardioid | koebe")->check(CLI::IsMember({"cardioid", "koebe"}));
  series->add_option("--order", order, "truncation order")->check(CLI::Range(1, 60));
  series->add_flag("--exact", exact, "exact rational arithmetic");
  add_common(series);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  CliOutcome out;
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.help = true;
    out.help_text = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunReport& r = out.report;
  r.seed = seed;
  out.format = parse_format(format);
  out.out_path = out_path;

  auto measure_params = [&] {
    r.parameters.emplace_back("measure", measure);
    r.parameters.emplace_back("exact", exact ? "true" : "false");
  };

  if (verify->parsed()) {
    VerifyOptions o;
    o.seed = seed;
    if (tol) o.tol = *tol;
    if (budget) o.budget = *budget;
    if (which == "conjecture")
      r = certify_conjecture(o);
    else if (which == "faces")
      r = verify_faces(o);
    else
      r = verify_edges(o);
  } else if (coeffs->parsed()) {
    r.command = "coeffs";
    measure_params();
    r.parameters.emplace_back("upto", std::to_string(upto));
    const int n = std::max(upto - 1, 6);
    if (exact)
      cli_detail::coeff_items(r.items, herglotz_coeffs(parse_rational_measure(measure), n), upto);
    else
      cli_detail::coeff_items(r.items, herglotz_coeffs(parse_measure(measure), n), upto);
  } else if (hankel_cmd->parsed()) {
    r.command = "hankel";
    if (extremal) {
      r.parameters.emplace_back("extremal", "true");
      cli_detail::extremal_items(r.items);
    } else {
      if (measure.empty()) throw UsageError("hankel needs --measure or --extremal");
      measure_params();
      if (exact)
        cli_detail::hankel_items(r.items, herglotz_coeffs(parse_rational_measure(measure), 6));
      else
        cli_detail::hankel_items(r.items, herglotz_coeffs(parse_measure(measure), 6));
    }
  } else if (search->parsed()) {
    r.command = "search";
    const std::uint64_t evals = budget.value_or(100000);
    r.parameters = {{"functional", functional},
                    {"budget", std::to_string(evals)},
                    {"threefold", threefold ? "true" : "false"},
                    {"max_atoms", std::to_string(max_atoms)}};
    std::vector<Functional> ids;
    if (functional == "all")
      ids.assign(kAllFunctionals.begin(), kAllFunctionals.end());
    else
      try {
        ids.push_back(parse_functional(functional));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    SearchOptions so;
    so.threefold_orbits = threefold;
    so.max_atoms = max_atoms;
    std::vector<SearchResult> results;
    for (Functional f : ids) results.push_back(maximize_functional(f, evals, seed, so));
    append_gap_items(r.items, results);
    if (threefold && ids.size() == 1 && ids[0] == Functional::H3)
      r.items.push_back(compare_item("threefold_H3_max", "1/9", 1.0 / 9.0, results[0].best, tol.value_or(1e-6)));
  } else if (nfold->parsed()) {
    r.command = "nfold";
    cli_detail::PhiChoice choice;
    if (!phi_name.empty()) {
      choice.name = phi_name;
      choice.phi = phi_name == "cardioid" ? MindaPhi<Rational>::cardioid() : MindaPhi<Rational>::koebe();
    } else {
      if (!b1s || !b2s) throw UsageError("nfold needs --phi or --B1 and --B2 (and optionally --B3)");
      choice.name = "custom";
      choice.phi = {parse_rational(*b1s), parse_rational(*b2s), b3s ? parse_rational(*b3s) : Rational(0)};
    }
    r.parameters = {{"phi", choice.name},
                    {"B1", fmt_rational(choice.phi.b1)},
                    {"B2", fmt_rational(choice.phi.b2)},
                    {"B3", fmt_rational(choice.phi.b3)},
                    {"fold", std::to_string(fold)}};
    cli_detail::nfold_items(r.items, choice, fold);
  } else if (series->parsed()) {
    r.command = "series";
    r.parameters.emplace_back("order", std::to_string(order));
    if (extremal) {
      r.parameters.emplace_back("extremal", "true");
      const auto f = extremal_series<Rational>(order);
      for (int n = 1; n <= order; ++n) r.items.push_back(info_item("a" + std::to_string(n), "", fmt_rational(f[n])));
    } else {
      if (measure.empty()) throw UsageError("series needs --measure or --extremal");
      const std::string name = phi_name.empty() ? "cardioid" : phi_name;
      measure_params();
      r.parameters.emplace_back("phi", name);
      auto emit = [&](const auto& seq) {
        using C = std::decay_t<decltype(seq.p[0])>;
        const auto phi = name == "cardioid" ? cardioid_phi<C>(order) : koebe_phi<C>(order);
        const auto f = starlike_from_caratheodory(seq.as_series(order), phi, order);
        for (int n = 1; n <= order; ++n) r.items.push_back(info_item("a" + std::to_string(n), "", fmt_value(f[n])));
      };
      if (exact)
        emit(herglotz_coeffs(parse_rational_measure(measure), order));
      else
        emit(herglotz_coeffs(parse_measure(measure), order));
    }
  }
  r.seed = seed;
  if (r.runtime_s == 0.0) r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  CliOutcome res;
  try {
    res = dispatch(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'hankel --help' for usage\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (res.help) {
    out << res.help_text;
    return 0;
  }
  try {
    if (res.out_path.empty())
      write_report(res.report, res.format, out);
    else
      emit_report(res.report, res.format, res.out_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return res.report.exit_code();
}

}  // namespace hankel
