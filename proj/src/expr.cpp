#include "samop/expr.hpp"

#include <algorithm>
#include <sstream>

#include "samop/errors.hpp"

namespace samop {

bool operator==(const WitnessEntry& a, const WitnessEntry& b) {
  return a.src_group == b.src_group && a.dst_group == b.dst_group &&
         a.paired == b.paired && a.policy == b.policy && a.weight == b.weight &&
         a.members == b.members;
}

bool operator==(const WitnessMap& a, const WitnessMap& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!(a.entries[i] == b.entries[i])) return false;
  return a.from_pair_rays == b.from_pair_rays;
}

ExprPtr shift(GaussianRational c, GaussianRational mu) {
  if (c.is_zero()) fail(ErrorKind::ArityDomain, "shift: c must be nonzero");
  return std::make_shared<Expr>(Expr::Node(ShiftNode{std::move(c), std::move(mu)}));
}

ExprPtr bshift(GaussianRational c, GaussianRational mu) {
  if (c.is_zero()) fail(ErrorKind::ArityDomain, "bshift: c must be nonzero");
  return std::make_shared<Expr>(Expr::Node(BackShiftNode{std::move(c), std::move(mu)}));
}

ExprPtr bilateral(GaussianRational c, GaussianRational mu) {
  if (c.is_zero()) fail(ErrorKind::ArityDomain, "bilateral: c must be nonzero");
  return std::make_shared<Expr>(Expr::Node(BilateralNode{std::move(c), std::move(mu)}));
}

ExprPtr jordan(long long n) {
  if (n < 1) fail(ErrorKind::ArityDomain, "jordan: block size must be >= 1");
  return std::make_shared<Expr>(Expr::Node(JordanNode{n}));
}

ExprPtr diag(std::vector<std::pair<GaussianRational, ExtNat>> entries) {
  if (entries.empty()) fail(ErrorKind::ArityDomain, "diag: needs at least one value");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second.is_zero())
      fail(ErrorKind::ArityDomain, "diag: multiplicity must be >= 1");
    if (i > 0 && entries[i].first == entries[i - 1].first)
      fail(ErrorKind::ArityDomain, "diag: values must be distinct");
  }
  return std::make_shared<Expr>(Expr::Node(DiagNode{std::move(entries)}));
}

ExprPtr trimatrix(DenseMat m) {
  if (m.rows() < 1 || m.rows() != m.cols())
    fail(ErrorKind::ArityDomain, "trimat: needs a square matrix of size >= 1");
  if (!is_upper_triangular(m))
    fail(ErrorKind::ArityDomain, "trimat: matrix must be upper triangular");
  return std::make_shared<Expr>(Expr::Node(TriMatrixNode{std::move(m)}));
}

ExprPtr direct_sum(std::vector<ExprPtr> parts) {
  if (parts.empty()) fail(ErrorKind::ArityDomain, "direct sum of nothing");
  if (parts.size() == 1) return parts.front();
  return std::make_shared<Expr>(Expr::Node(DirectSumNode{std::move(parts)}));
}

ExprPtr amplify(ExprPtr inner) {
  if (!inner) fail(ErrorKind::ArityDomain, "inf: missing operand");
  return std::make_shared<Expr>(Expr::Node(AmplifyNode{std::move(inner)}));
}

ExprPtr power(ExprPtr inner, long long k) {
  if (!inner) fail(ErrorKind::ArityDomain, "power: missing operand");
  if (k < 1) fail(ErrorKind::ArityDomain, "power: exponent must be >= 1");
  return std::make_shared<Expr>(Expr::Node(PowerNode{std::move(inner), k}));
}

ExprPtr adjoint_node(ExprPtr inner) {
  if (!inner) fail(ErrorKind::ArityDomain, "adj: missing operand");
  return std::make_shared<Expr>(Expr::Node(AdjointNode{std::move(inner)}));
}

ExprPtr tri_block(ExprPtr a, WitnessMap witness, ExprPtr b) {
  if (!a || !b) fail(ErrorKind::ArityDomain, "tri: missing operand");
  for (const WitnessEntry& e : witness.entries)
    if (e.weight.is_zero())
      fail(ErrorKind::InvalidWitness, "witness weights must be nonzero");
  return std::make_shared<Expr>(
      Expr::Node(TriBlockNode{std::move(a), std::move(witness), std::move(b)}));
}

ExprPtr adjoint(const ExprPtr& e) {
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n))
    return bshift(s->c.conj(), s->mu.conj());
  if (const auto* s = std::get_if<BackShiftNode>(&n))
    return shift(s->c.conj(), s->mu.conj());
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    // (c·W)* is unitarily c̄·W under the relabeling i ↦ -i.
    return bilateral(s->c.conj(), s->mu.conj());
  }
  if (const auto* j = std::get_if<JordanNode>(&n)) {
    // Unitarily equivalent to itself via basis reversal.
    return jordan(j->n);
  }
  if (const auto* d = std::get_if<DiagNode>(&n)) {
    std::vector<std::pair<GaussianRational, ExtNat>> es;
    es.reserve(d->entries.size());
    for (const auto& [v, m] : d->entries) es.emplace_back(v.conj(), m);
    return diag(std::move(es));
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix(adjoint_retriangularized(t->m));
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    std::vector<ExprPtr> parts;
    parts.reserve(ds->parts.size());
    for (const ExprPtr& p : ds->parts) parts.push_back(adjoint(p));
    return direct_sum(std::move(parts));
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) return amplify(adjoint(a->inner));
  if (const auto* p = std::get_if<PowerNode>(&n)) return power(adjoint(p->inner), p->k);
  if (const auto* a = std::get_if<AdjointNode>(&n)) return normalize_adjoints(a->inner);
  fail(ErrorKind::Unrepresentable,
       "adjoint of a tri-block leaves the upper-triangular class");
}

ExprPtr normalize_adjoints(const ExprPtr& e) {
  const Expr::Node& n = e->node();
  if (const auto* a = std::get_if<AdjointNode>(&n))
    return adjoint(normalize_adjoints(a->inner));
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    std::vector<ExprPtr> parts;
    parts.reserve(ds->parts.size());
    bool changed = false;
    for (const ExprPtr& p : ds->parts) {
      parts.push_back(normalize_adjoints(p));
      changed = changed || parts.back() != p;
    }
    return changed ? direct_sum(std::move(parts)) : e;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) {
    ExprPtr inner = normalize_adjoints(a->inner);
    return inner == a->inner ? e : amplify(inner);
  }
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    ExprPtr inner = normalize_adjoints(p->inner);
    return inner == p->inner ? e : power(inner, p->k);
  }
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    ExprPtr a = normalize_adjoints(t->a);
    ExprPtr b = normalize_adjoints(t->b);
    return (a == t->a && b == t->b) ? e : tri_block(a, t->witness, b);
  }
  return e;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  const Expr::Node& x = a->node();
  const Expr::Node& y = b->node();
  if (x.index() != y.index()) return false;
  if (const auto* s = std::get_if<ShiftNode>(&x)) {
    const auto* t = std::get_if<ShiftNode>(&y);
    return s->c == t->c && s->mu == t->mu;
  }
  if (const auto* s = std::get_if<BackShiftNode>(&x)) {
    const auto* t = std::get_if<BackShiftNode>(&y);
    return s->c == t->c && s->mu == t->mu;
  }
  if (const auto* s = std::get_if<BilateralNode>(&x)) {
    const auto* t = std::get_if<BilateralNode>(&y);
    return s->c == t->c && s->mu == t->mu;
  }
  if (const auto* s = std::get_if<JordanNode>(&x))
    return s->n == std::get_if<JordanNode>(&y)->n;
  if (const auto* s = std::get_if<DiagNode>(&x))
    return s->entries == std::get_if<DiagNode>(&y)->entries;
  if (const auto* s = std::get_if<TriMatrixNode>(&x)) {
    const auto* t = std::get_if<TriMatrixNode>(&y);
    if (s->m.rows() != t->m.rows()) return false;
    for (long r = 0; r < s->m.rows(); ++r)
      for (long c = 0; c < s->m.cols(); ++c)
        if (s->m(r, c) != t->m(r, c)) return false;
    return true;
  }
  if (const auto* s = std::get_if<DirectSumNode>(&x)) {
    const auto* t = std::get_if<DirectSumNode>(&y);
    if (s->parts.size() != t->parts.size()) return false;
    for (std::size_t i = 0; i < s->parts.size(); ++i)
      if (!structurally_equal(s->parts[i], t->parts[i])) return false;
    return true;
  }
  if (const auto* s = std::get_if<AmplifyNode>(&x))
    return structurally_equal(s->inner, std::get_if<AmplifyNode>(&y)->inner);
  if (const auto* s = std::get_if<PowerNode>(&x)) {
    const auto* t = std::get_if<PowerNode>(&y);
    return s->k == t->k && structurally_equal(s->inner, t->inner);
  }
  if (const auto* s = std::get_if<AdjointNode>(&x))
    return structurally_equal(s->inner, std::get_if<AdjointNode>(&y)->inner);
  const auto* s = std::get_if<TriBlockNode>(&x);
  const auto* t = std::get_if<TriBlockNode>(&y);
  return structurally_equal(s->a, t->a) && structurally_equal(s->b, t->b) &&
         s->witness == t->witness;
}

namespace {

std::string scalar_args(const GaussianRational& c, const GaussianRational& mu) {
  if (mu.is_zero()) {
    if (c.is_one()) return "";
    return "(" + c.str() + ")";
  }
  return "(" + c.str() + ", " + mu.str() + ")";
}

// Direct sums already print parenthesized; only nested powers need extra
// parentheses to reparse.
bool is_atom_for_power(const ExprPtr& e) { return !e->is<PowerNode>(); }

std::string witness_dsl(const WitnessMap& w) {
  if (w.from_pair_rays) return "pair-rays";
  std::string out = "{";
  for (std::size_t i = 0; i < w.source_pairs.size(); ++i) {
    if (i) out += ", ";
    const ExplicitPair& p = w.source_pairs[i];
    out += std::to_string(p.src_slot) + "->" + std::to_string(p.dst_slot);
    if (!p.weight.is_one()) out += ":" + p.weight.str();
  }
  return out + "}";
}

}  // namespace

std::string to_dsl(const ExprPtr& e) {
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) return "shift" + scalar_args(s->c, s->mu);
  if (const auto* s = std::get_if<BackShiftNode>(&n))
    return "bshift" + scalar_args(s->c, s->mu);
  if (const auto* s = std::get_if<BilateralNode>(&n))
    return "bilateral" + scalar_args(s->c, s->mu);
  if (const auto* j = std::get_if<JordanNode>(&n))
    return "jordan(" + std::to_string(j->n) + ")";
  if (const auto* d = std::get_if<DiagNode>(&n)) {
    std::string out = "diag{";
    for (std::size_t i = 0; i < d->entries.size(); ++i) {
      if (i) out += ", ";
      out += d->entries[i].first.str() + ": ";
      out += d->entries[i].second.is_inf() ? "inf" : d->entries[i].second.str();
    }
    return out + "}";
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n)) {
    std::string out = "trimat[";
    for (long r = 0; r < t->m.rows(); ++r) {
      if (r) out += "; ";
      for (long c = 0; c < t->m.cols(); ++c) {
        if (c) out += ", ";
        out += t->m(r, c).str();
      }
    }
    return out + "]";
  }
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    std::string out = "(";
    for (std::size_t i = 0; i < ds->parts.size(); ++i) {
      if (i) out += " (+) ";
      out += to_dsl(ds->parts[i]);
    }
    return out + ")";
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) return "inf(" + to_dsl(a->inner) + ")";
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    std::string base = to_dsl(p->inner);
    if (!is_atom_for_power(p->inner)) base = "(" + base + ")";
    return base + "^" + std::to_string(p->k);
  }
  if (const auto* a = std::get_if<AdjointNode>(&n)) return "adj(" + to_dsl(a->inner) + ")";
  const auto* t = std::get_if<TriBlockNode>(&n);
  return "tri(" + to_dsl(t->a) + ", " + witness_dsl(t->witness) + ", " + to_dsl(t->b) + ")";
}

}  // namespace samop
