#include "affconn/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "affconn/errors.hpp"

namespace affconn {

namespace {

// --- reading -------------------------------------------------------------

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(0, path.empty() ? "/" : path, what);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& read_array(const json& j, const std::string& path, std::optional<std::size_t> len = {}) {
  if (!j.is_array()) fail(path, "expected an array");
  if (len && j.size() != *len) {
    fail(path, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

GaussRat read_coefficient(const json& j, const std::string& path) {
  read_array(j, path, 2);
  const std::string re = read_string(j[0], path + "/0");
  const std::string im = read_string(j[1], path + "/1");
  try {
    return GaussRat::parse(re, im);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

ExactVector read_vector(const json& j, const std::string& path, std::size_t n) {
  read_array(j, path, n);
  ExactVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = read_coefficient(j[k], path + "/" + std::to_string(k));
  return v;
}

ExactMatrix read_matrix(const json& j, const std::string& path, std::size_t rows,
                        std::size_t cols) {
  read_array(j, path, rows);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const ExactVector row = read_vector(j[r], path + "/" + std::to_string(r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

NamedAlgebra algebra_from_json(const json& doc, const std::string& base) {
  const std::string name = read_string(member(doc, base, "name"), base + "/name");
  const std::size_t n = read_count(member(doc, base, "dim"), base + "/dim");
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const json& b = read_array(doc["basis"], base + "/basis", n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(read_string(b[i], base + "/basis/" + std::to_string(i)));
  }
  const std::string bpath = base + "/brackets";
  const json& brackets = read_array(member(doc, base, "brackets"), bpath);
  std::vector<BracketEntry> entries;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string epath = bpath + "/" + std::to_string(e);
    const json& entry = brackets[e];
    const std::size_t left = read_count(member(entry, epath, "left"), epath + "/left");
    const std::size_t right = read_count(member(entry, epath, "right"), epath + "/right");
    if (left >= n) fail(epath + "/left", "index out of range for dim " + std::to_string(n));
    if (right >= n) fail(epath + "/right", "index out of range for dim " + std::to_string(n));
    entries.push_back({left, right, read_vector(member(entry, epath, "result"), epath + "/result", n)});
  }
  return {name, LieAlgebra::from_structure_constants(n, std::move(basis), entries)};
}

void require_dim(const json& doc, const LieAlgebra& g) {
  const std::size_t n = read_count(member(doc, "", "dim"), "/dim");
  if (n != g.dim()) {
    fail("/dim", "dimension " + std::to_string(n) + " does not match algebra dimension " +
                     std::to_string(g.dim()));
  }
}

Tensor3 read_gamma(const json& j, const std::string& path, std::size_t n) {
  read_array(j, path, n);
  Tensor3 gam(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ExactMatrix slice = read_matrix(j[i], path + "/" + std::to_string(i), n, n);
    for (std::size_t jj = 0; jj < n; ++jj) {
      for (std::size_t k = 0; k < n; ++k) gam(i, jj, k) = slice(jj, k);
    }
  }
  return gam;
}

AffMap affmap_from_json(const json& doc, const std::string& base, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::string ipath = base + "/images";
  const json& images = read_array(member(doc, base, "images"), ipath, n);
  std::vector<AffElement> elems;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string epath = ipath + "/" + std::to_string(i);
    elems.push_back({read_matrix(member(images[i], epath, "matrix"), epath + "/matrix", n, n),
                     read_vector(member(images[i], epath, "translation"), epath + "/translation", n)});
  }
  return AffMap(g, std::move(elems));
}

// --- writing -------------------------------------------------------------

json vector_to_json(std::span<const GaussRat> v) {
  json out = json::array();
  for (const GaussRat& z : v) out.push_back(coefficient_to_json(z));
  return out;
}

json matrix_to_json(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

json gamma_to_json(const Tensor3& gam) {
  const std::size_t n = gam.dim();
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json slice = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(coefficient_to_json(gam(i, j, k)));
      slice.push_back(std::move(row));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (auto x : e) ex.push_back(static_cast<unsigned>(x));
    terms.push_back({{"exponents", ex}, {"coefficient", coefficient_to_json(c)}});
  }
  return {{"nvars", p.nvars()}, {"terms", terms}, {"display", p.str()}};
}

MultiPoly poly_from_json(const json& j, const std::string& path) {
  const std::size_t nvars = read_count(member(j, path, "nvars"), path + "/nvars");
  if (nvars > MultiPoly::kMaxVars) fail(path + "/nvars", "too many variables");
  MultiPoly p(nvars);
  const json& terms = read_array(member(j, path, "terms"), path + "/terms");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + "/terms/" + std::to_string(t);
    const json& ex = read_array(member(terms[t], tpath, "exponents"), tpath + "/exponents", nvars);
    MultiPoly::Exponents e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      const std::size_t d = read_count(ex[v], tpath + "/exponents/" + std::to_string(v));
      if (d > MultiPoly::kMaxDegree) fail(tpath + "/exponents", "degree too large");
      e[v] = static_cast<std::uint8_t>(d);
    }
    p.add_term(e, read_coefficient(member(terms[t], tpath, "coefficient"), tpath + "/coefficient"));
  }
  return p;
}

json profile_to_json(const StructuralProfile& p) {
  return {{"abelian", p.abelian},
          {"solvable", p.solvable},
          {"nilpotent", p.nilpotent},
          {"unimodular", p.unimodular},
          {"semisimple", p.semisimple},
          {"killing_rank", p.killing_rank},
          {"derived_series_dims", p.derived_series_dims},
          {"lower_central_dims", p.lower_central_dims}};
}

std::vector<std::size_t> read_counts(const json& j, const std::string& path) {
  read_array(j, path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_count(j[i], path + "/" + std::to_string(i)));
  return out;
}

StructuralProfile profile_from_json(const json& j, const std::string& path) {
  StructuralProfile p;
  p.abelian = read_bool(member(j, path, "abelian"), path + "/abelian");
  p.solvable = read_bool(member(j, path, "solvable"), path + "/solvable");
  p.nilpotent = read_bool(member(j, path, "nilpotent"), path + "/nilpotent");
  p.unimodular = read_bool(member(j, path, "unimodular"), path + "/unimodular");
  p.semisimple = read_bool(member(j, path, "semisimple"), path + "/semisimple");
  p.killing_rank = read_count(member(j, path, "killing_rank"), path + "/killing_rank");
  p.derived_series_dims = read_counts(member(j, path, "derived_series_dims"), path + "/derived_series_dims");
  p.lower_central_dims = read_counts(member(j, path, "lower_central_dims"), path + "/lower_central_dims");
  return p;
}

Verdict verdict_from_string(const std::string& s, const std::string& path) {
  if (s == "YES") return Verdict::yes;
  if (s == "NO") return Verdict::no;
  if (s == "UNKNOWN") return Verdict::unknown;
  fail(path, "unknown verdict '" + s + "'");
}

json decision_to_json(const DecisionReport& d) {
  json out{{"verdict", to_string(d.verdict)}, {"branch", d.branch}, {"notes", d.notes}};
  if (d.certificate) {
    out["certificate"] = {{"gamma", gamma_to_json(d.certificate->connection.gamma())},
                          {"embedding", affmap_to_json(d.certificate->embedding)}};
  } else {
    out["certificate"] = nullptr;
  }
  if (d.obstruction) {
    out["obstruction"] = {{"killing_form", matrix_to_json(d.obstruction->killing)},
                          {"killing_rank", d.obstruction->killing_rank},
                          {"h1_adjoint", d.obstruction->h1_adjoint},
                          {"adjoint_det_poly", poly_to_json(d.obstruction->adjoint_det_poly)},
                          {"adjoint_has_open_orbit", has_open_orbit(d.obstruction->adjoint_det_poly)}};
  } else {
    out["obstruction"] = nullptr;
  }
  if (d.search) {
    out["search"] = {{"starts", d.search->starts},
                     {"candidates", d.search->candidates},
                     {"verified_start", d.search->verified_start ? json(*d.search->verified_start) : json(nullptr)}};
  } else {
    out["search"] = nullptr;
  }
  return out;
}

DecisionReport decision_from_json(const json& j, const std::string& path, const LieAlgebra& g) {
  DecisionReport d;
  d.verdict = verdict_from_string(read_string(member(j, path, "verdict"), path + "/verdict"), path + "/verdict");
  d.branch = read_string(member(j, path, "branch"), path + "/branch");
  const json& notes = read_array(member(j, path, "notes"), path + "/notes");
  for (std::size_t i = 0; i < notes.size(); ++i) d.notes.push_back(read_string(notes[i], path + "/notes/" + std::to_string(i)));

  const json& cert = member(j, path, "certificate");
  if (!cert.is_null()) {
    const std::string cpath = path + "/certificate";
    Tensor3 gam = read_gamma(member(cert, cpath, "gamma"), cpath + "/gamma", g.dim());
    d.certificate = Certificate{InvariantConnection(g, std::move(gam)),
                                affmap_from_json(member(cert, cpath, "embedding"), cpath + "/embedding", g)};
  }
  const json& obs = member(j, path, "obstruction");
  if (!obs.is_null()) {
    const std::string opath = path + "/obstruction";
    d.obstruction = SemisimpleEvidence{
        read_matrix(member(obs, opath, "killing_form"), opath + "/killing_form", g.dim(), g.dim()),
        read_count(member(obs, opath, "killing_rank"), opath + "/killing_rank"),
        read_count(member(obs, opath, "h1_adjoint"), opath + "/h1_adjoint"),
        poly_from_json(member(obs, opath, "adjoint_det_poly"), opath + "/adjoint_det_poly")};
  }
  const json& search = member(j, path, "search");
  if (!search.is_null()) {
    const std::string spath = path + "/search";
    SearchSummary s;
    s.starts = read_count(member(search, spath, "starts"), spath + "/starts");
    s.candidates = read_count(member(search, spath, "candidates"), spath + "/candidates");
    const json& v = member(search, spath, "verified_start");
    if (!v.is_null()) s.verified_start = read_count(v, spath + "/verified_start");
    d.search = s;
  }
  return d;
}

json analysis_to_json(const ConnectionAnalysis& a) {
  return {{"name", a.name},
          {"flat", a.flat},
          {"torsion_free", a.torsion_free},
          {"projectively_flat", a.projectively_flat ? json(*a.projectively_flat) : json(nullptr)},
          {"note", a.note}};
}

ConnectionAnalysis analysis_from_json(const json& j, const std::string& path) {
  ConnectionAnalysis a;
  a.name = read_string(member(j, path, "name"), path + "/name");
  a.flat = read_bool(member(j, path, "flat"), path + "/flat");
  a.torsion_free = read_bool(member(j, path, "torsion_free"), path + "/torsion_free");
  const json& pf = member(j, path, "projectively_flat");
  if (!pf.is_null()) a.projectively_flat = read_bool(pf, path + "/projectively_flat");
  a.note = read_string(member(j, path, "note"), path + "/note");
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " > " : "") + std::to_string(v[i]);
  return s;
}

void write_gamma_text(std::ostream& os, const InvariantConnection& conn) {
  const auto& names = conn.algebra().basis_names();
  const std::size_t n = conn.dim();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        const GaussRat& z = conn.gamma()(i, j, k);
        if (z.is_zero()) continue;
        std::string coeff = z.str();
        if (!z.is_real() && sgn(z.re()) != 0) coeff = "(" + coeff + ")";
        std::string term = coeff == "1" ? names[k] : coeff == "-1" ? "-" + names[k] : coeff + "*" + names[k];
        if (!rhs.empty() && term.front() != '-') rhs += " + ";
        else if (!rhs.empty()) { rhs += " - "; term.erase(0, 1); }
        rhs += term;
      }
      if (rhs.empty()) continue;
      any = true;
      os << "    nabla_" << names[i] << " " << names[j] << " = " << rhs << "\n";
    }
  }
  if (!any) os << "    all Christoffel symbols vanish\n";
}

}  // namespace

// --- public: files ---------------------------------------------------------

NamedAlgebra parse_algebra(std::string_view text) {
  return algebra_from_json(parse_document(text), "");
}

NamedAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

InvariantConnection parse_connection(std::string_view text, const LieAlgebra& g) {
  const json doc = parse_document(text);
  require_dim(doc, g);
  return InvariantConnection(g, read_gamma(member(doc, "", "gamma"), "/gamma", g.dim()));
}

InvariantConnection load_connection(const std::string& path, const LieAlgebra& g) {
  return parse_connection(read_file(path), g);
}

AffMap parse_affmap(std::string_view text, const LieAlgebra& g) {
  const json doc = parse_document(text);
  require_dim(doc, g);
  return affmap_from_json(doc, "", g);
}

AffMap load_affmap(const std::string& path, const LieAlgebra& g) {
  return parse_affmap(read_file(path), g);
}

json coefficient_to_json(const GaussRat& z) {
  auto [re, im] = z.to_strings();
  return json::array({re, im});
}

json algebra_to_json(const std::string& name, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ExactVector v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      brackets.push_back({{"left", i}, {"right", j}, {"result", vector_to_json(v)}});
    }
  }
  return {{"name", name}, {"dim", n}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

json connection_to_json(const InvariantConnection& conn) {
  return {{"dim", conn.dim()}, {"gamma", gamma_to_json(conn.gamma())}};
}

json affmap_to_json(const AffMap& m) {
  json images = json::array();
  for (const AffElement& e : m.images()) {
    images.push_back({{"matrix", matrix_to_json(e.linear)}, {"translation", vector_to_json(e.translation)}});
  }
  return {{"dim", m.dim()}, {"images", images}};
}

// --- public: reports -------------------------------------------------------

ConnectionAnalysis analyze_connection(std::string name, const InvariantConnection& conn) {
  ConnectionAnalysis a;
  a.name = std::move(name);
  a.flat = is_flat(conn);
  a.torsion_free = is_torsion_free(conn);
  if (!a.torsion_free) {
    a.note = "projective Weyl tensor undefined: connection has torsion";
  } else if (conn.dim() <= 2) {
    a.note = "projective Weyl tensor undefined in dimension <= 2";
  } else {
    a.projectively_flat = is_projectively_flat(conn);
  }
  return a;
}

bool operator==(const Report& a, const Report& b) {
  return a.algebra_name == b.algebra_name && a.algebra == b.algebra && a.profile == b.profile &&
         a.decision.verdict == b.decision.verdict && a.decision.branch == b.decision.branch &&
         a.decision.notes == b.decision.notes &&
         a.decision.certificate.has_value() == b.decision.certificate.has_value() &&
         (!a.decision.certificate ||
          (a.decision.certificate->connection == b.decision.certificate->connection &&
           a.decision.certificate->embedding == b.decision.certificate->embedding)) &&
         a.decision.obstruction.has_value() == b.decision.obstruction.has_value() &&
         (!a.decision.obstruction ||
          (a.decision.obstruction->killing == b.decision.obstruction->killing &&
           a.decision.obstruction->killing_rank == b.decision.obstruction->killing_rank &&
           a.decision.obstruction->h1_adjoint == b.decision.obstruction->h1_adjoint &&
           a.decision.obstruction->adjoint_det_poly == b.decision.obstruction->adjoint_det_poly)) &&
         a.decision.search.has_value() == b.decision.search.has_value() &&
         (!a.decision.search ||
          (a.decision.search->starts == b.decision.search->starts &&
           a.decision.search->candidates == b.decision.search->candidates &&
           a.decision.search->verified_start == b.decision.search->verified_start)) &&
         a.connections == b.connections;
}

Report analyze(const std::string& name, const LieAlgebra& g, const SearchConfig& budget) {
  Report r{name, g, structural_profile(g), decide_existence(g, budget), {}};
  r.connections.push_back(analyze_connection("zero", InvariantConnection::zero(g)));
  r.connections.push_back(analyze_connection("standard", standard_connection(g)));
  return r;
}

json report_to_json(const Report& r) {
  json conns = json::array();
  for (const auto& a : r.connections) conns.push_back(analysis_to_json(a));
  return {{"algebra", algebra_to_json(r.algebra_name, r.algebra)},
          {"profile", profile_to_json(r.profile)},
          {"decision", decision_to_json(r.decision)},
          {"connections", conns}};
}

Report report_from_json(const json& j) {
  NamedAlgebra na = algebra_from_json(member(j, "", "algebra"), "/algebra");
  Report r{na.name, na.algebra, profile_from_json(member(j, "", "profile"), "/profile"),
           decision_from_json(member(j, "", "decision"), "/decision", na.algebra), {}};
  const json& conns = read_array(member(j, "", "connections"), "/connections");
  for (std::size_t i = 0; i < conns.size(); ++i) {
    r.connections.push_back(analysis_from_json(conns[i], "/connections/" + std::to_string(i)));
  }
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  const auto& p = r.profile;
  os << "algebra " << r.algebra_name << " (dim " << r.algebra.dim() << ")\n";
  os << "  structure: abelian=" << yes_no(p.abelian) << " nilpotent=" << yes_no(p.nilpotent)
     << " solvable=" << yes_no(p.solvable) << " unimodular=" << yes_no(p.unimodular)
     << " semisimple=" << yes_no(p.semisimple) << "\n";
  os << "  killing rank " << p.killing_rank << "; derived series " << join_counts(p.derived_series_dims)
     << "; lower central series " << join_counts(p.lower_central_dims) << "\n";

  const DecisionReport& d = r.decision;
  os << "flat torsion-free invariant connection: " << to_string(d.verdict) << " (" << d.branch << ")\n";
  if (d.certificate) {
    os << "  certificate connection:\n";
    write_gamma_text(os, d.certificate->connection);
    os << "  etale embedding into aff(" << d.certificate->embedding.dim() << "):\n";
    const auto& names = r.algebra.basis_names();
    for (std::size_t i = 0; i < d.certificate->embedding.dim(); ++i) {
      const AffElement& e = d.certificate->embedding.images()[i];
      os << "    " << names[i] << " -> A = [";
      for (std::size_t a = 0; a < e.linear.rows(); ++a) {
        os << (a ? "; " : "");
        for (std::size_t b = 0; b < e.linear.cols(); ++b) os << (b ? " " : "") << e.linear(a, b);
      }
      os << "], v = (";
      for (std::size_t a = 0; a < e.translation.size(); ++a) os << (a ? ", " : "") << e.translation[a];
      os << ")\n";
    }
  }
  if (d.obstruction) {
    os << "  obstruction: killing rank " << d.obstruction->killing_rank << ", dim H^1(g, ad) = "
       << d.obstruction->h1_adjoint << ", adjoint determinant polynomial = "
       << d.obstruction->adjoint_det_poly.str() << "\n";
  }
  if (d.search) {
    os << "  search: " << d.search->starts << " starts, " << d.search->candidates << " numeric candidates";
    if (d.search->verified_start) os << ", verified from start " << *d.search->verified_start;
    os << "\n";
  }
  for (const auto& note : d.notes) os << "  note: " << note << "\n";

  os << "connections:\n";
  for (const auto& a : r.connections) {
    os << "  " << a.name << ": flat=" << yes_no(a.flat) << " torsion_free=" << yes_no(a.torsion_free)
       << " projectively_flat=" << (a.projectively_flat ? yes_no(*a.projectively_flat) : "n/a");
    if (!a.note.empty()) os << " (" << a.note << ")";
    os << "\n";
  }
  return os.str();
}

std::vector<ClassificationRow> classify_dim3(const SearchConfig& budget) {
  std::vector<ClassificationRow> rows;
  for (const std::string& name : builtin_names()) {
    Report r = analyze(name, builtin(name), budget);
    const Verdict v = r.decision.verdict;
    rows.push_back({name, v, std::move(r)});
  }
  return rows;
}

json classification_to_json(const std::vector<ClassificationRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"algebra", row.algebra}, {"verdict", to_string(row.verdict)}, {"report", report_to_json(row.report)}});
  }
  return {{"rows", out}};
}

std::vector<ClassificationRow> classification_from_json(const json& j) {
  const json& rows = read_array(member(j, "", "rows"), "/rows");
  std::vector<ClassificationRow> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string path = "/rows/" + std::to_string(i);
    ClassificationRow row;
    row.algebra = read_string(member(rows[i], path, "algebra"), path + "/algebra");
    row.verdict = verdict_from_string(read_string(member(rows[i], path, "verdict"), path + "/verdict"), path + "/verdict");
    row.report = report_from_json(member(rows[i], path, "report"));
    out.push_back(std::move(row));
  }
  return out;
}

std::string classification_to_text(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "algebra    solvable  semisimple  verdict  evidence\n";
  for (const auto& row : rows) {
    const auto& p = row.report.profile;
    std::string evidence;
    if (row.report.decision.certificate) {
      evidence = "certificate (" + row.report.decision.branch + "), exactly verified";
    } else if (row.report.decision.obstruction) {
      evidence = "semisimple; H^1(ad) = " + std::to_string(row.report.decision.obstruction->h1_adjoint) +
                 ", adjoint det poly = " + row.report.decision.obstruction->adjoint_det_poly.str();
    } else {
      evidence = row.report.decision.branch;
    }
    std::string line = row.algebra;
    line.resize(std::max<std::size_t>(line.size(), 11), ' ');
    std::string solv = yes_no(p.solvable);
    solv.resize(10, ' ');
    std::string ss = yes_no(p.semisimple);
    ss.resize(12, ' ');
    std::string verdict = to_string(row.verdict);
    verdict.resize(9, ' ');
    os << line << solv << ss << verdict << evidence << "\n";
  }
  return os.str();
}

json search_to_json(const std::string& name, const SearchOutcome& outcome) {
  json cands = json::array();
  for (const Candidate& c : outcome.candidates) {
    cands.push_back({{"start", c.start}, {"residual_norm", c.residual_norm}});
  }
  return {{"algebra", name},
          {"starts", outcome.starts},
          {"candidates", cands},
          {"verified_start", outcome.verified_start ? json(*outcome.verified_start) : json(nullptr)},
          {"certificate", outcome.certificate ? connection_to_json(*outcome.certificate) : json(nullptr)}};
}

std::string search_to_text(const std::string& name, const SearchOutcome& outcome) {
  std::ostringstream os;
  os << "search on " << name << ": " << outcome.starts << " starts, " << outcome.candidates.size()
     << " converged numeric candidates\n";
  if (outcome.certificate) {
    os << "exactly verified flat torsion-free connection from start " << *outcome.verified_start << ":\n";
    write_gamma_text(os, *outcome.certificate);
  } else {
    os << "no candidate verified exactly\n";
  }
  return os.str();
}

}  // namespace affconn
