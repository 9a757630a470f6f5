#include "samop/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "samop/completion.hpp"
#include "samop/errors.hpp"
#include "samop/generator.hpp"
#include "samop/invariants.hpp"
#include "samop/oracle.hpp"
#include "samop/spectra.hpp"

namespace samop {

std::string SuiteResult::str() const {
  std::ostringstream os;
  os << (passed() ? "pass" : "FAIL") << " " << name << ": " << cases << " cases, "
     << failures << " failures (" << seconds << " s)";
  for (const std::string& m : messages) os << "\n    " << m;
  return os.str();
}

namespace {

struct Ctx {
  SuiteResult* result;
  void fail_case(const std::string& msg) {
    ++result->failures;
    if (result->messages.size() < 5) result->messages.push_back(msg);
  }
  void require(bool ok, const std::string& msg) {
    if (!ok) fail_case(msg);
  }
};

// Exact sample points: a small rational lattice plus Pythagorean points on
// the unit circle and the real boundary points.
std::vector<GaussianRational> sample_grid() {
  std::vector<GaussianRational> pts;
  for (int pr = -3; pr <= 3; ++pr)
    for (int pi = -3; pi <= 3; ++pi)
      for (int q : {1, 2, 3}) pts.push_back(GQ::from_ratio(pr, q, pi, q));
  const std::pair<int, int> pyth[] = {{3, 4}, {5, 12}, {8, 15}, {7, 24}};
  const int hyp[] = {5, 13, 17, 25};
  for (int i = 0; i < 4; ++i) {
    auto [x, y] = pyth[i];
    int h = hyp[i];
    pts.push_back(GQ::from_ratio(x, h, y, h));
    pts.push_back(GQ::from_ratio(-x, h, y, h));
    pts.push_back(GQ::from_ratio(x, h, -y, h));
    pts.push_back(GQ::from_ratio(y, h, x, h));
  }
  pts.push_back(GQ(1));
  pts.push_back(GQ(-1));
  pts.push_back(GQ::i());
  pts.push_back(-GQ::i());
  return pts;  // 91 lattice points (deduplicated by value anyway) + 20 boundary
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

void suite_example_1_3(Ctx& c, int, std::uint64_t) {
  ExprPtr t1 = amplify(bshift());
  ExprPtr t3 = amplify(shift());
  ExprPtr t = direct_sum({t1, t3});
  FredholmSignature s = signature(t);
  c.require(s.alpha.is_inf() && s.beta.is_inf(), "Example 1.3: α = β = ∞ expected");
  c.require(!classify(t).semi_fredholm, "Example 1.3: T must not be semi-Fredholm");
  FredholmClass c1 = classify(t1);
  c.require(c1.right_invertible && c1.backward_shift_like && c1.semi_fredholm,
            "Example 1.3: T₁ must be a pure backward-shift-type operator");
  FredholmClass c3 = classify(t3);
  c.require(c3.left_invertible && c3.shift_like && c3.semi_fredholm,
            "Example 1.3: T₃ must be a pure shift-type operator");
  ++c.result->cases;
}

void suite_index_identity(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  opt.allow_translated = true;
  for (int i = 0; i < cases; ++i) {
    ExprPtr e = gen_expr(rng, opt);
    ++c.result->cases;
    FredholmSignature s = signature(e);
    auto check = [&](const ExtNat& x1, const ExtNat& x2, const ExtNat& y1,
                     const ExtNat& y2) {
      auto lhs = x1.checked_sub(x2);
      auto rhs = y1.checked_sub(y2);
      if (lhs && rhs && !(*lhs == *rhs))
        c.fail_case("ind identity violated on " + to_dsl(e) + ": " + lhs->str() +
                    " vs " + rhs->str());
    };
    check(s.bsmul, s.smul, s.alpha, s.beta);
    check(s.smul, s.bsmul, s.beta, s.alpha);
    if (classify_signature(s).semi_fredholm) {
      // at least one of the two orders must be defined for a semi-Fredholm
      bool defined = s.bsmul.checked_sub(s.smul).has_value() ||
                     s.smul.checked_sub(s.bsmul).has_value();
      c.require(defined, "semi-Fredholm with undefined index on " + to_dsl(e));
    }
  }
}

void suite_theorem_1_9(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  opt.allow_translated = true;
  for (int i = 0; i < cases; ++i) {
    ExprPtr e = gen_expr(rng, opt);
    ++c.result->cases;
    FredholmSignature s = signature(e);
    FredholmClass k = classify_signature(s);
    bool shift_like = k.semi_fredholm && s.bsmul.is_zero();
    bool bshift_like = k.semi_fredholm && s.smul.is_zero();
    bool stationary = shift_like && bshift_like;
    if (shift_like != k.upper_semi_browder)
      c.fail_case("Theorem 1.9 (1) fails on " + to_dsl(e));
    if (bshift_like != k.lower_semi_browder)
      c.fail_case("Theorem 1.9 (2) fails on " + to_dsl(e));
    if (stationary != k.browder) c.fail_case("Theorem 1.9 (3) fails on " + to_dsl(e));
  }
}

void suite_lemma_1_6(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;  // graph-expressible corners
  for (int i = 0; i < cases; ++i) {
    ExprPtr a = gen_expr(rng, opt);
    ExprPtr b = gen_expr(rng, opt);
    WitnessMap w;
    ExprPtr m;
    try {
      w = gen_witness(rng, lower_to_graph(a), lower_to_graph(b));
      m = assemble_block(a, w, b);
    } catch (const Error&) {
      continue;  // adjoint nodes occasionally make slots collide; redraw
    }
    ++c.result->cases;
    FredholmClass ca = classify(a);
    FredholmClass cb = classify(b);
    FredholmClass cm = classify(m);
    std::string tag = " on tri(" + to_dsl(a) + ", ·, " + to_dsl(b) + ")";
    // (1) with A Browder, the corner cannot change membership of B in Φ_ab
    if (ca.browder && cb.upper_semi_browder != cm.upper_semi_browder)
      c.fail_case("Lemma 1.6 (1)" + tag);
    // (2) M_C ∈ Φ_ab forces A ∈ Φ_ab
    if (cm.upper_semi_browder && !ca.upper_semi_browder)
      c.fail_case("Lemma 1.6 (2)" + tag);
    // (3) both in Φ_ab puts M_C there for any corner
    if (ca.upper_semi_browder && cb.upper_semi_browder && !cm.upper_semi_browder)
      c.fail_case("Lemma 1.6 (3)" + tag);
    // (4) with B Browder, membership of A transfers both ways
    if (cb.browder && (ca.upper_semi_browder != cm.upper_semi_browder ||
                       ca.lower_semi_browder != cm.lower_semi_browder))
      c.fail_case("Lemma 1.6 (4)" + tag);
    // (5) M_C Browder forces the corner classes
    if (cm.browder && (!ca.upper_semi_browder || !cb.lower_semi_browder))
      c.fail_case("Lemma 1.6 (5)" + tag);
    // (6) two of three Browder force the third
    int browders = int(ca.browder) + int(cb.browder) + int(cm.browder);
    if (browders == 2) c.fail_case("Lemma 1.6 (6)" + tag);
  }
}

void suite_theorem_2_7(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  for (int i = 0; i < cases; ++i) {
    ExprPtr a = gen_expr(rng, opt);
    ExprPtr b = gen_expr(rng, opt);
    ++c.result->cases;
    FredholmSignature sa = signature(a);
    FredholmSignature sb = signature(b);
    FredholmClass ca = classify_signature(sa);
    FredholmClass cb = classify_signature(sb);
    bool clause2 =
        ca.upper_semi_browder && cb.lower_semi_browder && sb.bsmul == sa.smul;
    bool clause3 = ca.upper_semi_browder && cb.lower_semi_browder &&
                   sa.alpha + sb.alpha == sa.beta + sb.beta;
    if (clause2 != clause3)
      c.fail_case("Theorem 2.7 (2)⇔(3) fails on A=" + to_dsl(a) + " B=" + to_dsl(b));
    CompletionVerdict v = decide_complete(CompletionKind::Browder, a, b);
    if (v.possible != clause2)
      c.fail_case("Theorem 2.7 verdict mismatch on A=" + to_dsl(a) + " B=" + to_dsl(b));
    if (v.possible) {
      // witness soundness through the independent census path
      if (!classify(v.assembled).browder)
        c.fail_case("Theorem 2.7 witness not Browder on A=" + to_dsl(a) +
                    " B=" + to_dsl(b));
    }
  }
}

void suite_completion_grid(Ctx& c, int, std::uint64_t) {
  std::vector<GaussianRational> grid = sample_grid();
  struct Case {
    const char* name;
    ExprPtr a, b;
  };
  const Case catalog[] = {
      {"(U, U)", shift(), shift()},
      {"(U, U*)", shift(), bshift()},
      {"(U*, U)", bshift(), shift()},
      {"(U ⊕ J₂, U*)", direct_sum({shift(), jordan(2)}), bshift()},
  };
  const MeetKind kinds[] = {MeetKind::Sigma, MeetKind::UpperBrowder,
                            MeetKind::LowerBrowder, MeetKind::Browder};
  for (const Case& k : catalog) {
    for (MeetKind mk : kinds) {
      Region r = completion_spectrum(mk, k.a, k.b);
      ++c.result->cases;
      for (const GaussianRational& z : grid) {
        bool pointwise = completion_member(mk, k.a, k.b, z);
        if (member(z, r) != pointwise) {
          c.fail_case(std::string("grid mismatch for ") + k.name + " kind " +
                      meet_token(mk) + " at " + z.str());
          break;
        }
      }
    }
  }
  // the two pinned exact identities
  Region b_uu = completion_spectrum(MeetKind::Browder, shift(), bshift());
  Region unit_circle({RegionCell::circle(GaussianRational(0), 1)});
  ++c.result->cases;
  c.require(b_uu == unit_circle, "meet-spectrum b(U, U*) must be the unit circle");
  Region s_uu = completion_spectrum(MeetKind::Sigma, shift(), shift());
  Region closed_disk({RegionCell::point(GaussianRational(0)),
                      RegionCell::annulus(GaussianRational(0), 0, 1),
                      RegionCell::circle(GaussianRational(0), 1)});
  ++c.result->cases;
  c.require(s_uu == closed_disk, "meet-spectrum sigma(U, U) must be the closed unit disk");
}

void suite_oracle(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  opt.amplify_pct = 10;
  for (int i = 0; i < cases; ++i) {
    ExprPtr e;
    for (int attempt = 0; attempt < 64; ++attempt) {
      ExprPtr cand = gen_expr(rng, opt);
      if (truncated_dim(cand, 64) <= 16000) {
        e = cand;
        break;
      }
    }
    if (!e) {
      c.fail_case("could not draw a size-bounded expression");
      continue;
    }
    ++c.result->cases;
    for (int n : {8, 16, 64}) {
      TruncationReport rep = truncated_growth_check(e, n, 8);
      if (!rep.match) {
        c.fail_case("oracle mismatch on " + to_dsl(e) + ": " + rep.str());
        break;
      }
    }
  }
}

void suite_normal_form(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  for (int i = 0; i < cases; ++i) {
    ExprPtr e = gen_semi_fredholm(rng, opt);
    ++c.result->cases;
    FredholmSignature s = signature(e);
    NormalForm3 nf;
    try {
      nf = normal_form(e);
    } catch (const Error& err) {
      c.fail_case("normal form failed on " + to_dsl(e) + ": " + err.what());
      continue;
    }
    std::string tag = " on " + to_dsl(e);
    if (!(nf.ind_t1 == s.bsmul)) c.fail_case("ind(T₁) ≠ b.s_mul" + tag);
    if (!(nf.neg_ind_t2 == s.smul)) c.fail_case("-ind(T₂) ≠ s_mul" + tag);
    if (nf.ind_t1.is_inf() && nf.neg_ind_t2.is_inf())
      c.fail_case("min{ind(T₁), −ind(T₂)} = ∞" + tag);
    if (nf.h3_dim < 0) c.fail_case("dim H₃ negative" + tag);
    ChainCensus rebuilt;
    rebuilt.add(nf.t1);
    rebuilt.add(nf.t2);
    rebuilt.add(nf.t3);
    ChainCensus original = chain_census(e);
    if (!(rebuilt == original)) c.fail_case("census reconstruction differs" + tag);
  }
}

void suite_browder_decomp(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  int done = 0;
  int draws = 0;
  while (done < cases && draws < cases * 40) {
    ++draws;
    ExprPtr e = gen_expr(rng, opt);
    FredholmSignature s = signature(e);
    FredholmClass k = classify_signature(s);
    if (k.upper_semi_browder) {
      ++done;
      ++c.result->cases;
      UpperBrowderDecomp d = decompose_upper_browder(e);
      if (!(d.beta_t2 == s.smul))
        c.fail_case("Proposition 1.7: β(T₂) ≠ s_mul on " + to_dsl(e));
      if (!d.left_inv_part.backward_rays.is_zero() ||
          !d.left_inv_part.finite_chains.empty())
        c.fail_case("Proposition 1.7: T₂ not left invertible on " + to_dsl(e));
      if (d.h1_dim < 0 || (d.h1_dim == 0) != d.nilpotent_part.finite_chains.empty())
        c.fail_case("Proposition 1.7: H₁ dimension inconsistent on " + to_dsl(e));
    }
    if (k.lower_semi_browder) {
      LowerBrowderDecomp d = decompose_lower_browder(e);
      if (!(d.alpha_t1 == s.bsmul))
        c.fail_case("Proposition 1.8: α(T₁) ≠ b.s_mul on " + to_dsl(e));
      if (!d.right_inv_part.forward_rays.is_zero())
        c.fail_case("Proposition 1.8: T₁ not right invertible on " + to_dsl(e));
    }
  }
}

void suite_completion_consistency(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  const GaussianRational zero(0);
  for (int i = 0; i < cases; ++i) {
    ExprPtr a = gen_expr(rng, opt);
    ExprPtr b = gen_expr(rng, opt);
    ++c.result->cases;
    std::string tag = " on A=" + to_dsl(a) + " B=" + to_dsl(b);
    struct Pair {
      MeetKind mk;
      CompletionKind ck;
    };
    const Pair pairs[] = {{MeetKind::UpperBrowder, CompletionKind::UpperBrowder},
                          {MeetKind::LowerBrowder, CompletionKind::LowerBrowder},
                          {MeetKind::Browder, CompletionKind::Browder}};
    for (const Pair& p : pairs) {
      bool in_meet = completion_member(p.mk, a, b, zero);
      CompletionVerdict v = decide_complete(p.ck, a, b);
      if (in_meet == v.possible)
        c.fail_case(std::string("meet/decide disagree for ") + meet_token(p.mk) + tag);
    }
    // σ case against Lemma 2.1: an invertible completion is in particular a
    // left-invertible completion
    if (!completion_member(MeetKind::Sigma, a, b, zero)) {
      CompletionVerdict v = decide_complete(CompletionKind::LeftInvertible, a, b);
      if (!v.possible)
        c.fail_case("invertible completion without left-invertible completion" + tag);
    }
    // duality: sb-completability of (A,B) is ab-completability of the adjoints
    CompletionVerdict sb = decide_complete(CompletionKind::LowerBrowder, a, b);
    CompletionVerdict ab_dual =
        decide_complete(CompletionKind::UpperBrowder, adjoint(b), adjoint(a));
    if (sb.possible != ab_dual.possible) c.fail_case("sb/ab duality fails" + tag);
  }
}

void suite_spectra_pointwise(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  std::vector<GaussianRational> grid = sample_grid();
  const SpectrumKind kinds[] = {
      SpectrumKind::Sigma,        SpectrumKind::Left,       SpectrumKind::Right,
      SpectrumKind::Essential,    SpectrumKind::SFPlus,     SpectrumKind::SFMinus,
      SpectrumKind::Browder,      SpectrumKind::UpperBrowder,
      SpectrumKind::LowerBrowder};
  for (int i = 0; i < cases; ++i) {
    ExprPtr e = gen_expr(rng, opt);
    ++c.result->cases;
    std::string tag = " on " + to_dsl(e);
    for (SpectrumKind k : kinds) {
      Region r = spectrum(e, k);
      for (const GaussianRational& z : grid) {
        bool pointwise = kind_fails(k, signature_at(e, z).sig);
        if (member(z, r) != pointwise) {
          c.fail_case(std::string("spectrum(") + kind_token(k) + ") pointwise mismatch" +
                      tag + " at " + z.str());
          break;
        }
      }
    }
    // class inclusions: σ_e ⊆ σ_b ⊆ σ
    Region se = spectrum(e, SpectrumKind::Essential);
    Region sb = spectrum(e, SpectrumKind::Browder);
    Region ss = spectrum(e, SpectrumKind::Sigma);
    if (!region_subset(se, sb)) c.fail_case("σ_e ⊄ σ_b" + tag);
    if (!region_subset(sb, ss)) c.fail_case("σ_b ⊄ σ" + tag);
    // adjoint reflection: σ_ab(T*) is the conjugate of σ_sb(T)
    Region lhs = spectrum(adjoint(e), SpectrumKind::UpperBrowder);
    Region rhs = region_conjugate(spectrum(e, SpectrumKind::LowerBrowder));
    if (!(lhs == rhs)) c.fail_case("σ_ab(T*) ≠ conj σ_sb(T)" + tag);
  }
}

void suite_meet_forms(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  std::vector<GaussianRational> grid = sample_grid();
  for (int i = 0; i < cases; ++i) {
    ExprPtr a = gen_expr(rng, opt);
    ExprPtr b = gen_expr(rng, opt);
    ++c.result->cases;
    std::string tag = " on A=" + to_dsl(a) + " B=" + to_dsl(b);
    // Theorem 2.7 (2)⇔(3) pointwise: both Corollary 2.8 forms agree
    for (const GaussianRational& z : grid) {
      bool f1 = completion_member(MeetKind::Browder, a, b, z);
      bool f2 = completion_member_dimension_form(a, b, z);
      if (f1 != f2) {
        c.fail_case("Corollary 2.8 forms disagree" + tag + " at " + z.str());
        break;
      }
    }
    // meet ⊆ σ_kind at C = 0 (the intersection cannot beat one instance)
    ExprPtr sum = direct_sum({a, b});
    struct KK {
      MeetKind mk;
      SpectrumKind sk;
    };
    const KK kk[] = {{MeetKind::Sigma, SpectrumKind::Sigma},
                     {MeetKind::UpperBrowder, SpectrumKind::UpperBrowder},
                     {MeetKind::LowerBrowder, SpectrumKind::LowerBrowder},
                     {MeetKind::Browder, SpectrumKind::Browder}};
    for (const KK& k : kk) {
      Region meet = completion_spectrum(k.mk, a, b);
      Region at_zero = spectrum(sum, k.sk);
      if (!region_subset(meet, at_zero))
        c.fail_case(std::string("meet ⊄ σ_") + kind_token(k.sk) + "(A⊕B)" + tag);
    }
  }
}

void suite_adjoint_duality(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  for (int i = 0; i < cases; ++i) {
    ExprPtr e = gen_expr(rng, opt);
    ++c.result->cases;
    FredholmSignature s = signature(e);
    FredholmSignature a = signature(adjoint(e));
    if (!(a.alpha == s.beta && a.beta == s.alpha && a.asc == s.des && a.des == s.asc &&
          a.smul == s.bsmul && a.bsmul == s.smul))
      c.fail_case("adjoint duality fails on " + to_dsl(e));
    ChainCensus ce = chain_census(e);
    ChainCensus cae = chain_census(adjoint(e));
    if (!(cae.forward_rays == ce.backward_rays && cae.backward_rays == ce.forward_rays &&
          cae.finite_chains == ce.finite_chains && cae.bi_infinite == ce.bi_infinite))
      c.fail_case("adjoint census swap fails on " + to_dsl(e));
  }
}

void suite_census_algebra(Ctx& c, int cases, std::uint64_t seed) {
  Rng rng(seed);
  GenOptions opt;
  for (int i = 0; i < cases; ++i) {
    ExprPtr a = gen_expr(rng, opt);
    ExprPtr b = gen_expr(rng, opt);
    ++c.result->cases;
    ChainCensus ca = chain_census(a);
    ChainCensus cb = chain_census(b);
    ChainCensus sum = chain_census(direct_sum({a, b}));
    ChainCensus manual = ca;
    manual.add(cb);
    if (!(sum == manual)) c.fail_case("census additivity fails on " + to_dsl(a));
    if (!(chain_census(amplify(a)) == ca.amplified()))
      c.fail_case("census amplification fails on " + to_dsl(a));
    ChainCensus tri = chain_census(tri_block(a, WitnessMap{}, b));
    if (!(tri == manual)) c.fail_case("zero-witness census fails on " + to_dsl(a));
    // growth sequences stay monotone a few steps past the prefix
    auto [as, bs] = kernel_growth(a);
    if (!as.monotone() || !bs.monotone())
      c.fail_case("growth sequence not monotone on " + to_dsl(a));
  }
}

struct SuiteDef {
  const char* name;
  int default_cases;
  void (*fn)(Ctx&, int, std::uint64_t);
};

const SuiteDef kSuites[] = {
    {"example1_3", 1, suite_example_1_3},
    {"index_identity", 500, suite_index_identity},
    {"theorem1_9", 500, suite_theorem_1_9},
    {"lemma1_6", 300, suite_lemma_1_6},
    {"theorem2_7", 500, suite_theorem_2_7},
    {"completion_grid", 1, suite_completion_grid},
    {"oracle", 200, suite_oracle},
    {"normal_form", 300, suite_normal_form},
    {"browder_decomp", 200, suite_browder_decomp},
    {"completion_consistency", 300, suite_completion_consistency},
    {"spectra_pointwise", 60, suite_spectra_pointwise},
    {"meet_forms", 40, suite_meet_forms},
    {"adjoint_duality", 300, suite_adjoint_duality},
    {"census_algebra", 300, suite_census_algebra},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteDef& s : kSuites) out.push_back(s.name);
  return out;
}

bool is_suite(const std::string& name) {
  for (const SuiteDef& s : kSuites)
    if (name == s.name) return true;
  return name == "all";
}

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed) {
  for (const SuiteDef& s : kSuites) {
    if (name != s.name) continue;
    SuiteResult r;
    r.name = s.name;
    Ctx ctx{&r};
    auto start = std::chrono::steady_clock::now();
    s.fn(ctx, cases > 0 ? cases : s.default_cases, seed);
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  fail(ErrorKind::ArityDomain, "unknown suite '" + name + "'");
}

}  // namespace samop
