#include "fischer/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fischer/algebra.hpp"
#include "fischer/spectral.hpp"

namespace fischer {

namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Recipe grammar

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SpaceSpec parse_all() {
    SpaceSpec spec = parse();
    if (pos_ != text_.size()) fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SpecError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const { throw SpecError(at, message); }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail_at(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  // Even GF(2) dimension within [lo, hi].
  int dimension(const char* family, int lo, int hi) {
    const std::size_t start = pos_;
    const int d = integer();
    if (d % 2 != 0) fail_at(start, std::string(family) + " needs an even dimension");
    if (d < lo || d > hi) {
      fail_at(start, std::string(family) + " dimension must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return d;
  }

  SpaceSpec parse() {
    const std::size_t start = pos_;
    if (accept("sym:")) {
      const std::size_t at = pos_;
      const int n = integer();
      if (n < 2 || n > 64) fail_at(at, "sym needs 2 <= N <= 64");
      return SpaceSpec::sym(n);
    }
    if (accept("sp:")) return SpaceSpec::sp(dimension("sp", 2, 12));
    if (accept("o+:")) return SpaceSpec::oplus(dimension("o+", 4, 12));
    if (accept("o-:")) return SpaceSpec::ominus(dimension("o-", 2, 12));
    if (accept("ext:")) {
      const std::size_t at = pos_;
      const int m = integer();
      if (m < 1 || m > 10) fail_at(at, "ext needs 1 <= M <= 10");
      expect(':');
      return SpaceSpec::ext(m, parse());
    }
    if (accept("dualaffine2")) return SpaceSpec::of(SpaceSpec::Kind::DualAffine2);
    if (accept("affine3")) return SpaceSpec::of(SpaceSpec::Kind::Affine3);
    if (accept("fano")) return SpaceSpec::of(SpaceSpec::Kind::Fano);
    if (accept("root:")) {
      const std::size_t at = pos_;
      if (pos_ >= text_.size()) fail("expected A, D or E");
      const char series = text_[pos_];
      if (series != 'A' && series != 'D' && series != 'E') fail("expected A, D or E");
      ++pos_;
      const int rank = integer();
      const bool ok = (series == 'A' && rank >= 1 && rank <= 63) || (series == 'D' && rank >= 4 && rank <= 32) ||
                      (series == 'E' && rank >= 6 && rank <= 8);
      if (!ok) fail_at(at, std::string("no root system ") + series + std::to_string(rank));
      return SpaceSpec::root(series, rank);
    }
    if (accept("file:")) {
      if (pos_ >= text_.size()) fail("expected a path");
      std::string path(text_.substr(pos_));
      pos_ = text_.size();
      return SpaceSpec::file(std::move(path));
    }
    fail_at(start, "unknown space '" + std::string(text_.substr(start)) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Formatting

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string set_text(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const Rational& r : v) s.push_back(r.str());
  return "{" + join(s, ", ") + "}";
}

std::string point_list(const FischerSpace& space, const std::vector<Point>& pts) {
  std::vector<std::string> s;
  for (Point p : pts) s.push_back(space.name(p));
  return join(s, " ");
}

// Column-aligned table; the first column is left aligned, the rest right.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()));
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::size_t pad = width[i] - r[i].size();
        if (i) line += "  ";
        line += i == 0 ? r[i] + std::string(pad, ' ') : std::string(pad, ' ') + r[i];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

json rational_json(const Rational& r) { return r.str(); }

json table_row_json(const TableRow& r) {
  json j;
  j["group"] = r.group;
  j["spec"] = r.spec;
  j["nu"] = r.nu;
  j["k"] = r.k;
  j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
  j["s"] = rational_json(r.s);
  j["g"] = r.g;
  j["c"] = r.c ? rational_json(*r.c) : json(nullptr);
  j["d"] = r.d ? json(*r.d) : json(nullptr);
  return j;
}

json spectrum_json(const SpectrumReport& s) {
  json j;
  j["complete"] = s.complete;
  j["method"] = s.method;
  json ev = json::array();
  for (const auto& [value, mult] : s.eigenvalues) ev.push_back({{"value", value.str()}, {"multiplicity", mult}});
  j["eigenvalues"] = ev;
  json residual = json::array();
  for (const Rational& c : s.residual) residual.push_back(c.str());
  j["residual"] = residual;
  return j;
}

std::vector<Point> suite_sources(const FischerSpace& space, bool exhaustive) {
  if (exhaustive || space.point_count() <= 136) return {};
  return orbit_representatives(space);
}

struct Output {
  std::ostringstream out, err;
  int status = 0;
  void fail() { status = std::max(status, 1); }
};

// ---------------------------------------------------------------------------
// Subcommands

void cmd_build(const Command& c, Output& o) {
  const FischerSpace space = build_space(parse_spec(c.target));
  if (c.json) {
    o.out << to_json_text(space) << '\n';
  } else {
    o.out << to_space_text(space);
  }
}

void cmd_verify(const Command& c, Output& o) {
  const FischerSpace space = build_space(parse_spec(c.target));
  const AxiomReport ax = verify_fischer_axiom(space);
  const std::vector<Point> sources = suite_sources(space, c.exhaustive);
  const TranspositionReport tr = verify_3transposition(space, sources);
  const bool ok = ax.is_partial_linear && ax.is_fischer && tr.passed();
  if (!ok) o.fail();
  if (c.json) {
    json j;
    j["spec"] = c.target;
    j["points"] = space.point_count();
    j["lines"] = space.lines().size();
    j["fischer"] = ax.is_fischer;
    j["partial_linear"] = ax.is_partial_linear;
    j["dual_affine_planes"] = ax.dual_affine_planes;
    j["affine_planes"] = ax.affine_planes;
    j["symplectic_type"] = ax.symplectic_type();
    j["sigma_automorphisms"] = tr.automorphisms;
    j["orders_ok"] = tr.orders_ok;
    j["max_order"] = tr.max_order;
    j["injective"] = tr.injective;
    j["sources"] = sources.empty() ? "all" : "orbit-representatives";
    j["passed"] = ok;
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "space: " << c.target << " (" << space.point_count() << " points, " << space.lines().size() << " lines)\n";
  o.out << "fischer axiom: " << pass_fail(ax.is_partial_linear && ax.is_fischer) << '\n';
  if (ax.witness) {
    const auto& [l1, l2] = *ax.witness;
    o.out << "  witness lines: " << point_list(space, {l1.begin(), l1.end()}) << " / "
          << point_list(space, {l2.begin(), l2.end()}) << '\n';
  }
  o.out << "planes: " << ax.dual_affine_planes << " dual affine, " << ax.affine_planes << " affine\n";
  o.out << "symplectic type: " << yes_no(ax.symplectic_type()) << '\n';
  o.out << "sigma maps preserve lines: " << pass_fail(tr.automorphisms) << '\n';
  if (tr.line_witness) {
    const auto& [x, l] = *tr.line_witness;
    o.out << "  witness: sigma_" << space.name(x) << " moves line " << point_list(space, {l.begin(), l.end()}) << '\n';
  }
  o.out << "orders of sigma_x sigma_y in {1,2,3}: " << pass_fail(tr.orders_ok) << " (max " << tr.max_order << ")\n";
  o.out << "checked: " << (sources.empty() ? "all points" : std::to_string(sources.size()) + " orbit representatives")
        << '\n';
  o.out << (ok ? "verified" : "not verified") << '\n';
}

void cmd_algebra(const Command& c, Output& o) {
  const FischerSpace space = build_space(parse_spec(c.target));
  const MatsuoAlgebra alg(space, c.gamma, c.delta);
  const std::vector<Point> sources = suite_sources(space, c.exhaustive);
  const std::string& check = c.check;
  const bool all = check == "all";
  if (!all && check != "suite" && check != "invariance" && check != "unity" && check != "radical" &&
      check != "fusion") {
    throw std::invalid_argument("unknown check '" + check + "'");
  }
  json j;
  j["spec"] = c.target;
  j["gamma"] = c.gamma.str();
  j["delta"] = c.delta.str();
  j["dimension"] = alg.dimension();
  j["sources"] = sources.empty() ? "all" : "orbit-representatives";
  std::ostringstream text;
  text << "algebra: " << c.target << " at gamma = " << c.gamma << ", delta = " << c.delta << ", dimension "
       << alg.dimension() << '\n';

  if (all || check == "unity") {
    const auto u = unity(alg);
    j["unity"] = u.has_value();
    if (u) {
      const Rational cc = *central_charge(alg);
      j["central_charge"] = cc.str();
      text << "unity: yes, central charge " << cc << '\n';
    } else {
      j["central_charge"] = nullptr;
      text << "unity: none\n";
    }
  }
  if (all || check == "invariance") {
    const InvarianceReport inv = check_invariance(alg, sources);
    j["invariant"] = inv.invariant;
    j["condition1"] = inv.condition1;
    j["condition2"] = inv.condition2;
    text << "invariance: " << pass_fail(inv.invariant) << '\n';
    text << "condition (1): " << pass_fail(inv.condition1) << '\n';
    text << "condition (2): " << pass_fail(inv.condition2) << '\n';
    if (inv.witness) {
      const auto& w = *inv.witness;
      text << "  witness: " << point_list(space, {w.begin(), w.end()}) << '\n';
    }
    if (!inv.invariant) o.fail();
  }
  if (all || check == "radical") {
    const GramReport gr = gram_and_radical(alg, sources);
    j["radical_dim"] = gr.radical_dim;
    j["quotient_dim"] = gr.quotient_dim;
    j["radical_is_ideal"] = gr.radical_is_ideal;
    j["gram_formula"] = gr.gram_formula_ok;
    text << "radical: dimension " << gr.radical_dim << ", quotient dimension " << gr.quotient_dim << '\n';
    text << "radical is an ideal: " << pass_fail(gr.radical_is_ideal) << '\n';
    text << "gram formula: " << pass_fail(gr.gram_formula_ok) << '\n';
    if (!gr.radical_is_ideal || !gr.gram_formula_ok) o.fail();
  }
  if (check == "fusion") {
    std::vector<Point> pts = sources;
    if (pts.empty())
      for (Point x = 0; x < space.point_count(); ++x) pts.push_back(x);
    bool ok = true;
    for (Point e : pts) {
      const FusionReport f = check_fusion(alg, e);
      if (!f.applicable) {
        text << "fusion: not applicable\n";
        ok = true;
        break;
      }
      if (!f.passed) {
        ok = false;
        text << "fusion: FAIL at " << space.name(e) << ": eigenvalues " << f.witness->left_value << " and "
             << f.witness->right_value << '\n';
        break;
      }
    }
    if (ok) text << "fusion: pass\n";
    j["fusion"] = ok;
    if (!ok) o.fail();
  }
  if (all || check == "suite") {
    const PropertySuite s = run_property_suite(alg, sources);
    const std::vector<std::pair<const char*, bool>> items{
        {"commutative", s.commutative},
        {"invariant", s.invariant},
        {"idempotent_norms", s.idempotent_norms},
        {"minimal_polynomial", s.minimal_polynomial},
        {"fusion", s.fusion},
        {"sigma_automorphism", s.sigma_automorphism},
        {"sigma_isometry", s.sigma_isometry},
        {"sigma_involution", s.sigma_involution},
        {"sigma_matches_points", s.sigma_matches_points},
        {"transposition_orders", s.transposition_orders},
    };
    json suite;
    for (const auto& [name, ok] : items) {
      suite[name] = ok;
      text << name << ": " << pass_fail(ok) << '\n';
    }
    suite["failures"] = s.failures;
    suite["checked"] = s.checked.size();
    j["suite"] = suite;
    for (const std::string& f : s.failures) text << "  " << f << '\n';
    text << "checked: " << s.checked.size() << " points\n";
    if (!s.passed()) o.fail();
  }
  j["passed"] = o.status == 0;
  text << (o.status == 0 ? "all checks pass" : "checks failed") << '\n';
  o.out << (c.json ? j.dump(2) + "\n" : text.str());
}

void cmd_spectrum(const Command& c, Output& o) {
  const FischerSpace space = build_space(parse_spec(c.target));
  const SpectrumReport s = exact_spectrum(space);
  const bool certified = s.complete && certify_spectrum(space, s) && s.trace_identities(space);
  if (s.complete && !certified) o.fail();
  const auto srg = measure_srg(space);
  if (c.json) {
    json j = spectrum_json(s);
    j["spec"] = c.target;
    j["points"] = space.point_count();
    j["certified"] = certified;
    if (srg) {
      j["srg"] = {{"nu", srg->nu}, {"k", srg->k}, {"lambda", srg->lambda}, {"mu", srg->mu},
                  {"r", srg->r.str()}, {"s", srg->s.str()}, {"g", srg->g}};
    } else {
      j["srg"] = nullptr;
    }
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "spectrum: " << c.target << " (" << space.point_count() << " points)\n";
  TextTable t({"eigenvalue", "multiplicity"});
  for (const auto& [value, mult] : s.eigenvalues) t.add({value.str(), std::to_string(mult)});
  t.print(o.out);
  if (!s.complete) {
    std::vector<std::string> coeffs;
    for (const Rational& r : s.residual) coeffs.push_back(r.str());
    o.out << "irrational part: coefficients " << join(coeffs, " ") << " (ascending)\n";
  }
  o.out << "method: " << s.method << '\n';
  if (srg) {
    o.out << "strongly regular: (" << srg->nu << ", " << srg->k << ", " << srg->lambda << ", " << srg->mu << "), r = "
          << srg->r << ", s = " << srg->s << ", g = " << srg->g << '\n';
  }
  o.out << "certified: " << (s.complete ? pass_fail(certified) : std::string("n/a")) << '\n';
}

void cmd_gate(const Command& c, Output& o) {
  const FischerSpace space = build_space(parse_spec(c.target));
  const GateVerdict v = realizability_gate(space, c.gamma, c.delta);
  if (!v.accepted) o.fail();
  const std::string verdict = v.accepted ? std::string("accepted") : "rejected: " + join(v.reasons, ", ");
  if (c.json) {
    json j;
    j["spec"] = c.target;
    j["gamma"] = v.gamma.str();
    j["delta"] = v.delta.str();
    j["bound"] = v.bound.str();
    j["least"] = v.least ? json(v.least->str()) : json(nullptr);
    j["fischer"] = v.fischer;
    j["eigenvalue_ok"] = v.eigenvalue_ok;
    j["symplectic_ok"] = v.symplectic_ok;
    j["symplectic_binding"] = v.symplectic_binding;
    j["bound_multiplicity"] = v.bound_multiplicity;
    j["accepted"] = v.accepted;
    j["reasons"] = v.reasons;
    j["notes"] = v.notes;
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "space: " << c.target << " (" << space.point_count() << " points)\n";
  o.out << "gamma = " << v.gamma << ", delta = " << v.delta << ", bound -4/delta = " << v.bound << '\n';
  o.out << "least eigenvalue: " << (v.least ? v.least->str() : std::string("irrational")) << '\n';
  o.out << "multiplicity of the bound: " << v.bound_multiplicity << '\n';
  o.out << "fischer space: " << yes_no(v.fischer) << '\n';
  o.out << "symplectic type: " << yes_no(v.symplectic_ok) << '\n';
  for (const std::string& n : v.notes) o.out << "note: " << n << '\n';
  o.out << verdict << '\n';
}

// Reports

void report_table(bool four, const Command& c, Output& o) {
  const std::vector<RowCheck> rows = four ? table4() : table3();
  std::size_t mismatches = 0, errata = 0;
  for (const RowCheck& rc : rows) {
    if (!rc.ok()) ++mismatches;
    errata += rc.errata.size();
  }
  if (mismatches) o.fail();
  if (c.json) {
    json arr = json::array();
    for (const RowCheck& rc : rows) arr.push_back(table_row_json(rc.computed));
    o.out << arr.dump(2) << '\n';
    for (const RowCheck& rc : rows)
      for (const std::string& m : rc.mismatches) o.err << rc.printed.group << ": " << m << '\n';
    return;
  }
  std::vector<std::string> header{"group", "nu", "k"};
  if (!four) header.push_back("lambda");
  for (const char* h : {"s", "g"}) header.push_back(h);
  if (four) {
    header.push_back("c");
    header.push_back("d");
  }
  header.push_back("status");
  TextTable t(header);
  for (const RowCheck& rc : rows) {
    const TableRow& r = rc.computed;
    std::vector<std::string> cells{r.group, std::to_string(r.nu), std::to_string(r.k)};
    if (!four) cells.push_back(r.lambda ? std::to_string(*r.lambda) : "-");
    cells.push_back(r.s.str());
    cells.push_back(std::to_string(r.g));
    if (four) {
      cells.push_back(r.c ? r.c->str() : "-");
      cells.push_back(r.d ? std::to_string(*r.d) : "-");
    }
    cells.push_back(!rc.ok() ? "MISMATCH" : rc.errata.empty() ? "ok" : "erratum");
    t.add(cells);
  }
  t.print(o.out);
  for (const RowCheck& rc : rows) {
    for (const std::string& m : rc.mismatches) o.out << rc.printed.group << ": " << m << '\n';
    for (const Erratum& e : rc.errata) {
      o.out << rc.printed.group << ": erratum in " << e.column << ", printed " << e.printed << ", corrected "
            << e.corrected << " (" << e.evidence << ")\n";
    }
  }
  o.out << (four ? "table4: " : "table3: ") << rows.size() << " rows, " << mismatches << " mismatches, " << errata
        << " errata\n";
}

void report_candidates(const Command& c, Output& o) {
  const CandidateList list = enumerate_candidates(c.delta);
  if (c.json) {
    json j;
    j["delta"] = list.delta.str();
    j["bound"] = list.bound.str();
    json bases = json::array();
    for (const Candidate& b : list.bases) bases.push_back({{"group", b.group}, {"s", b.s.str()}, {"max_m", b.max_m}});
    j["bases"] = bases;
    j["base_names"] = list.base_names;
    j["extension_names"] = list.extension_names;
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "delta = " << list.delta << ", bound s >= " << list.bound << '\n';
  TextTable t({"family", "s", "max m"});
  for (const Candidate& b : list.bases) t.add({b.group, b.s.str(), std::to_string(b.max_m)});
  t.print(o.out);
  o.out << "bases: " << join(list.base_names, ", ") << '\n';
  o.out << "extensions: " << join(list.extension_names, ", ") << '\n';
}

void report_chain(const Command& c, Output& o) {
  const ChainReport r = chain_check();
  if (c.json) {
    json j;
    json entries = json::array();
    for (const ChainEntry& e : r.entries) {
      entries.push_back({{"group", e.group},
                         {"c", e.c.str()},
                         {"d", e.d},
                         {"predicted", e.c == Rational(11) ? json(nullptr) : json(e.predicted.str())},
                         {"member", e.member},
                         {"degenerate", e.degenerate}});
    }
    j["entries"] = entries;
    json pairs = json::array();
    for (const auto& [cc, d] : r.member_pairs) pairs.push_back({cc.str(), d});
    j["member_pairs"] = pairs;
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "d(c) = c(-37 - 10c)/(-22 + 2c)\n";
  TextTable t({"group", "c", "d", "d(c)", "member"});
  for (const ChainEntry& e : r.entries) {
    t.add({e.group + (e.degenerate ? " (1 point)" : ""), e.c.str(), std::to_string(e.d),
           e.c == Rational(11) ? "pole" : e.predicted.str(), yes_no(e.member)});
  }
  t.print(o.out);
  std::vector<std::string> pairs;
  for (const auto& [cc, d] : r.member_pairs) pairs.push_back("(" + cc.str() + ", " + std::to_string(d) + ")");
  o.out << "members: " << join(pairs, " ") << '\n';
}

void report_affine3(const Command& c, Output& o) {
  const Affine3Witness w = affine3_witness();
  const bool established = w.eta_idempotent && w.w_is_eigenvector && !w.w_norm.is_zero() && !w.weight_allowed;
  if (!established) o.fail();
  if (c.json) {
    json j;
    j["eta_idempotent"] = w.eta_idempotent;
    j["c_eta"] = w.c_eta.str();
    j["w_is_eigenvector"] = w.w_is_eigenvector;
    j["weight"] = w.weight.str();
    j["w_norm"] = w.w_norm.str();
    json allowed = json::array();
    for (const Rational& h : w.allowed_weights) allowed.push_back(h.str());
    j["allowed_weights"] = allowed;
    j["weight_allowed"] = w.weight_allowed;
    j["reason"] = w.reason;
    o.out << j.dump(2) << '\n';
    return;
  }
  o.out << "eta = (4/5)(e00 + e01 + e02) - e00, w = e10 + e11 + e12 - e20 - e21 - e22\n";
  o.out << "eta.eta = 2 eta: " << yes_no(w.eta_idempotent) << '\n';
  o.out << "2(eta|eta) = " << w.c_eta << '\n';
  o.out << "eta.w = " << w.weight << " w: " << yes_no(w.w_is_eigenvector) << '\n';
  o.out << "(w|w) = " << w.w_norm << '\n';
  o.out << "allowed weights: " << set_text(w.allowed_weights) << '\n';
  o.out << (established ? "not realizable: " + w.reason : std::string("witness not established")) << '\n';
}

void report_roots(const Command& c, Output& o) {
  const std::vector<RootEtaRow> rows = root_eta_table();
  struct Extra {
    std::string root;
    QuotientPositivity pos;
    std::optional<RootMultiplicity> mult;
  };
  std::vector<Extra> extras;
  for (const RootEtaRow& r : rows) {
    const char series = r.root[0];
    const int rank = std::stoi(r.root.substr(1));
    Extra e{r.root, root_quotient_positivity(root_space(series, rank)), std::nullopt};
    if (series != 'A') e.mult = root_multiplicity_check(series, rank);
    if (!e.pos.positive || (e.mult && !e.mult->ok) || !r.ok()) o.fail();
    extras.push_back(std::move(e));
  }
  if (c.json) {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const RootEtaRow& r = rows[i];
      json j;
      j["root"] = r.root;
      j["base_group"] = r.base_group;
      j["group"] = r.group;
      j["c"] = r.computed_c.str();
      json ev = json::array();
      for (const Rational& v : r.computed_eigenvalues) ev.push_back(v.str());
      j["eigenvalues"] = ev;
      j["complete"] = r.complete;
      j["quotient_positive"] = extras[i].pos.positive;
      j["g_formula"] = extras[i].mult ? json(extras[i].mult->ok) : json(nullptr);
      j["mismatches"] = r.mismatches;
      arr.push_back(j);
    }
    o.out << arr.dump(2) << '\n';
    return;
  }
  TextTable t({"root", "X*", "X", "c", "eigenvalues of eta", "(8I+A*) > 0", "g formula", "status"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RootEtaRow& r = rows[i];
    const Extra& e = extras[i];
    t.add({r.root, r.base_group, r.group, r.computed_c.str(), set_text(r.computed_eigenvalues), yes_no(e.pos.positive),
           e.mult ? pass_fail(e.mult->ok) : "-", !r.ok() ? "MISMATCH" : r.errata.empty() ? "ok" : "erratum"});
  }
  t.print(o.out);
  for (const RootEtaRow& r : rows) {
    for (const std::string& m : r.mismatches) o.out << r.root << ": " << m << '\n';
    for (const Erratum& e : r.errata) {
      o.out << r.root << ": erratum in " << e.column << ", printed " << e.printed << ", corrected " << e.corrected
            << " (" << e.evidence << ")\n";
    }
  }
}

void cmd_report(const Command& c, Output& o) {
  if (c.target == "table3") return report_table(false, c, o);
  if (c.target == "table4") return report_table(true, c, o);
  if (c.target == "candidates") return report_candidates(c, o);
  if (c.target == "chain") return report_chain(c, o);
  if (c.target == "affine3") return report_affine3(c, o);
  if (c.target == "roots") return report_roots(c, o);
  throw std::invalid_argument("unknown report '" + c.target + "' (table3, table4, candidates, chain, affine3, roots)");
}

}  // namespace

// ---------------------------------------------------------------------------

SpaceSpec parse_spec(std::string_view text) { return SpecParser(text).parse_all(); }

Rational parse_exact(std::string_view text) { return Rational::parse(text); }

std::string to_json_text(const TableRow& row) { return table_row_json(row).dump(); }

TableRow table_row_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  TableRow r;
  r.group = j.at("group").get<std::string>();
  r.spec = j.at("spec").get<std::string>();
  r.nu = j.at("nu").get<std::int64_t>();
  r.k = j.at("k").get<std::int64_t>();
  if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<std::int64_t>();
  r.s = parse_exact(j.at("s").get<std::string>());
  r.g = j.at("g").get<std::int64_t>();
  if (!j.at("c").is_null()) r.c = parse_exact(j.at("c").get<std::string>());
  if (!j.at("d").is_null()) r.d = j.at("d").get<std::int64_t>();
  return r;
}

CommandResult run(const Command& command) {
  Output o;
  try {
    if (command.subcommand == "build") {
      cmd_build(command, o);
    } else if (command.subcommand == "verify") {
      cmd_verify(command, o);
    } else if (command.subcommand == "algebra") {
      cmd_algebra(command, o);
    } else if (command.subcommand == "spectrum") {
      cmd_spectrum(command, o);
    } else if (command.subcommand == "gate") {
      cmd_gate(command, o);
    } else if (command.subcommand == "report") {
      cmd_report(command, o);
    } else {
      throw std::invalid_argument("unknown subcommand '" + command.subcommand + "'");
    }
  } catch (const SpecError& e) {
    o.err << "error: space '" << command.target << "' " << e.what() << '\n';
    o.status = 2;
  } catch (const ParseError& e) {
    o.err << "error: " << e.what() << '\n';
    o.status = 2;
  } catch (const std::invalid_argument& e) {
    o.err << "error: " << e.what() << '\n';
    o.status = 2;
  } catch (const std::domain_error& e) {
    o.err << "error: " << e.what() << '\n';
    o.status = 2;
  }
  return {o.status, o.out.str(), o.err.str()};
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fischer spaces, their algebras and the realizability checks"};
  app.require_subcommand(1);
  Command command;
  std::string gamma = "1/2", delta = "1/2";

  struct Sub {
    const char* name;
    const char* help;
    const char* target;
  };
  const std::vector<Sub> subs{
      {"build", "Construct a space and print it", "space recipe"},
      {"verify", "Check the Fischer axiom and the 3-transposition property", "space recipe"},
      {"algebra", "Build the algebra and run its checks", "space recipe"},
      {"spectrum", "Exact spectrum of the collinearity graph", "space recipe"},
      {"gate", "Eigenvalue bound and affine-plane test", "space recipe"},
      {"report", "table3 | table4 | candidates | chain | affine3 | roots", "report name"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("target", command.target, s.target)->required();
    sub->add_option("--gamma", gamma, "gamma as an integer or p/q")->capture_default_str();
    sub->add_option("--delta", delta, "delta as an integer or p/q")->capture_default_str();
    sub->add_flag("--exhaustive", command.exhaustive, "check every point instead of orbit representatives");
    sub->add_flag("--json", command.json, "machine-readable output");
    sub->add_option("--check", command.check, "all | suite | invariance | unity | radical | fusion")
        ->capture_default_str();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  for (const CLI::App* sub : app.get_subcommands()) command.subcommand = sub->get_name();
  try {
    command.gamma = parse_exact(gamma);
    command.delta = parse_exact(delta);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const CommandResult r = run(command);
  out << r.out;
  err << r.err;
  return r.status;
}

}  // namespace fischer
