#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "samop/completion.hpp"
#include "samop/errors.hpp"
#include "samop/invariants.hpp"
#include "samop/json_io.hpp"
#include "samop/oracle.hpp"
#include "samop/parser.hpp"
#include "samop/spectra.hpp"
#include "samop/suites.hpp"

using namespace samop;
using nlohmann::json;

namespace {

struct Output {
  bool as_json = false;
  std::string out_file;

  void emit(const std::string& text, const json& j) const {
    std::ostringstream os;
    if (as_json)
      os << j.dump(2) << "\n";
    else
      os << text;
    if (out_file.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_file);
      f << os.str();
    }
  }
};

std::string class_summary(const FredholmSignature& s, const FredholmClass& c) {
  std::ostringstream os;
  if (!c.semi_fredholm)
    os << "not semi-Fredholm";
  else if (c.invertible)
    os << "invertible";
  else if (c.browder)
    os << "Browder";
  else if (c.upper_semi_browder && c.lower_semi_browder)
    os << "upper and lower semi-Browder";
  else if (c.upper_semi_browder)
    os << "upper semi-Browder";
  else if (c.lower_semi_browder)
    os << "lower semi-Browder";
  else if (c.fredholm)
    os << "Fredholm";
  else
    os << "semi-Fredholm";
  os << "; α=" << s.alpha << ", β=" << s.beta;
  return os.str();
}

std::string classify_text(const ExprPtr& e) {
  FredholmSignature s = signature(e);
  FredholmClass c = classify_signature(s);
  std::ostringstream os;
  os << class_summary(s, c) << "\n";
  os << "  range " << (s.range_closed ? "closed" : "not closed") << ", asc=" << s.asc
     << ", des=" << s.des << ", s_mul=" << s.smul << ", b.s_mul=" << s.bsmul << "\n";
  auto flag = [&](const char* name, bool v) {
    if (v) os << "  " << name << "\n";
  };
  flag("invertible", c.invertible);
  flag("left invertible", c.left_invertible);
  flag("right invertible", c.right_invertible);
  flag("Fredholm", c.fredholm);
  flag("upper semi-Fredholm (Φ₊)", c.upper_semi_fredholm);
  flag("lower semi-Fredholm (Φ₋)", c.lower_semi_fredholm);
  flag("Browder (Φ_b)", c.browder);
  flag("upper semi-Browder (Φ_ab)", c.upper_semi_browder);
  flag("lower semi-Browder (Φ_sb)", c.lower_semi_browder);
  flag("shift-like", c.shift_like);
  flag("backward-shift-like", c.backward_shift_like);
  flag("stationary", c.stationary);
  if (c.left_invertible && c.semi_fredholm) os << "  pure shift-type\n";
  if (c.right_invertible && c.semi_fredholm) os << "  pure backward-shift-type\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"samop — exact Fredholm/Browder invariants and completion spectra\n"
               "for shift-type operator expressions"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "machine-readable JSON output");
  app.add_option("--out", out.out_file, "write output to FILE");

  std::string expr_text, a_text, b_text, kind_text = "sigma", suite = "all";
  int powers = 6, cases = 0;
  std::uint64_t seed = 42;

  CLI::App* cmd_classify = app.add_subcommand("classify", "operator class membership");
  cmd_classify->add_option("expr", expr_text, "operator expression")->required();

  CLI::App* cmd_inv = app.add_subcommand("invariants", "kernel/cokernel growth table");
  cmd_inv->add_option("expr", expr_text)->required();
  cmd_inv->add_option("--powers", powers, "largest power k to tabulate");

  CLI::App* cmd_nf = app.add_subcommand("normal-form", "Theorem-1.5 style decomposition");
  cmd_nf->add_option("expr", expr_text)->required();

  CLI::App* cmd_spec = app.add_subcommand("spectrum", "one of the nine spectra");
  cmd_spec->add_option("expr", expr_text)->required();
  cmd_spec->add_option("--kind", kind_text, "sigma|l|r|e|sf_plus|sf_minus|b|ab|sb");

  CLI::App* cmd_meet =
      app.add_subcommand("meet-spectrum", "∩_C σ_kind(M_C) by the closed formulas");
  cmd_meet->add_option("a", a_text, "the (1,1) corner A")->required();
  cmd_meet->add_option("b", b_text, "the (2,2) corner B")->required();
  cmd_meet->add_option("--kind", kind_text, "sigma|ab|sb|b");

  CLI::App* cmd_complete =
      app.add_subcommand("complete", "completion verdict and witness corner");
  cmd_complete->add_option("a", a_text)->required();
  cmd_complete->add_option("b", b_text)->required();
  cmd_complete->add_option("--kind", kind_text, "left_inv|ab|sb|b");

  CLI::App* cmd_verify = app.add_subcommand("verify", "seeded verification suites");
  cmd_verify->add_option("--suite", suite, "suite name or 'all'");
  cmd_verify->add_option("--cases", cases, "number of generated cases");
  cmd_verify->add_option("--seed", seed, "generator seed");

  CLI::App* cmd_oracle =
      app.add_subcommand("verify-truncation", "truncation oracle for one expression");
  int trunc_n = 8, trunc_k = 4;
  cmd_oracle->add_option("expr", expr_text)->required();
  cmd_oracle->add_option("-n", trunc_n, "cut length per ray/chain");
  cmd_oracle->add_option("-k", trunc_k, "largest power checked");

  CLI11_PARSE(app, argc, argv);

  if (cmd_classify->parsed()) {
    ExprPtr e = parse_expression(expr_text);
    out.emit(classify_text(e),
             json{{"command", "classify"},
                  {"signature", to_json(signature(e))},
                  {"class", to_json(classify(e))}});
    return 0;
  }
  if (cmd_inv->parsed()) {
    ExprPtr e = parse_expression(expr_text);
    auto [aseq, bseq] = kernel_growth(e);
    FredholmSignature s = signature(e);
    std::ostringstream os;
    os << "k:      ";
    for (int k = 1; k <= powers; ++k) os << k << "\t";
    os << "\nα(Tᵏ):  ";
    for (int k = 1; k <= powers; ++k) os << aseq.eval(static_cast<std::uint64_t>(k)) << "\t";
    os << "\nβ(Tᵏ):  ";
    for (int k = 1; k <= powers; ++k) os << bseq.eval(static_cast<std::uint64_t>(k)) << "\t";
    os << "\nasc=" << s.asc << " des=" << s.des << " s_mul=" << s.smul
       << " b.s_mul=" << s.bsmul << "\n";
    json seq_a = json::array(), seq_b = json::array();
    for (int k = 1; k <= powers; ++k) {
      seq_a.push_back(to_json(aseq.eval(static_cast<std::uint64_t>(k))));
      seq_b.push_back(to_json(bseq.eval(static_cast<std::uint64_t>(k))));
    }
    out.emit(os.str(), json{{"command", "invariants"},
                            {"alpha_powers", seq_a},
                            {"beta_powers", seq_b},
                            {"signature", to_json(s)}});
    return 0;
  }
  if (cmd_nf->parsed()) {
    ExprPtr e = parse_expression(expr_text);
    NormalForm3 nf = normal_form(e);
    std::ostringstream os;
    os << "T₁ (right invertible): " << nf.t1.str() << ", ind(T₁) = " << nf.ind_t1 << "\n"
       << "T₂ (left invertible):  " << nf.t2.str() << ", ind(T₂) = -" << nf.neg_ind_t2
       << "\n"
       << "T₃ (finite nilpotent): " << nf.t3.str() << ", dim H₃ = " << nf.h3_dim << "\n";
    out.emit(os.str(), json{{"command", "normal-form"}, {"normal_form", to_json(nf)}});
    return 0;
  }
  if (cmd_spec->parsed()) {
    auto kind = kind_from_token(kind_text);
    if (!kind) fail(ErrorKind::ArityDomain, "unknown spectrum kind '" + kind_text + "'");
    ExprPtr e = parse_expression(expr_text);
    Region r = spectrum(e, *kind);
    out.emit("σ_" + kind_text + " = " + r.describe() + "\n  cells: " + r.str() + "\n",
             json{{"command", "spectrum"}, {"kind", kind_text}, {"region", to_json(r)}});
    return 0;
  }
  if (cmd_meet->parsed()) {
    auto kind = meet_from_token(kind_text);
    if (!kind) fail(ErrorKind::ArityDomain, "unknown meet kind '" + kind_text + "'");
    ExprPtr a = parse_expression(a_text);
    ExprPtr b = parse_expression(b_text);
    Region r = completion_spectrum(*kind, a, b);
    out.emit("∩_C σ_" + kind_text + "(M_C) = " + r.describe() + "\n  cells: " + r.str() +
                 "\n",
             json{{"command", "meet-spectrum"},
                  {"kind", kind_text},
                  {"region", to_json(r)}});
    return 0;
  }
  if (cmd_complete->parsed()) {
    auto kind = completion_from_token(kind_text);
    if (!kind) fail(ErrorKind::ArityDomain, "unknown completion kind '" + kind_text + "'");
    ExprPtr a = parse_expression(a_text);
    ExprPtr b = parse_expression(b_text);
    CompletionVerdict v = decide_complete(*kind, a, b);
    std::ostringstream os;
    os << v.str() << "\n";
    if (v.possible) {
      os << "  witness entries:\n";
      for (const WitnessEntry& we : v.witness->entries)
        os << "    B group " << we.src_group << " -> A group " << we.dst_group << " × "
           << we.paired << " (weight " << we.weight << ")\n";
      os << "  assembled census: " << chain_census(v.assembled).str() << "\n";
    }
    out.emit(os.str(), json{{"command", "complete"},
                            {"kind", kind_text},
                            {"verdict", to_json(v)}});
    return v.possible ? 0 : 1;
  }
  if (cmd_verify->parsed()) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::ostringstream os;
    json results = json::array();
    bool ok = true;
    for (const std::string& name : names) {
      SuiteResult r = run_suite(name, cases, seed);
      ok = ok && r.passed();
      os << r.str() << "\n";
      results.push_back(json{{"name", r.name},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"seconds", r.seconds},
                             {"messages", r.messages}});
    }
    out.emit(os.str(), json{{"command", "verify"}, {"seed", seed}, {"suites", results}});
    return ok ? 0 : 1;
  }
  if (cmd_oracle->parsed()) {
    ExprPtr e = parse_expression(expr_text);
    TruncationReport rep = truncated_growth_check(e, trunc_n, trunc_k);
    out.emit(rep.str() + "\n",
             json{{"command", "verify-truncation"}, {"report", to_json(rep)}});
    return rep.match ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_usage_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
