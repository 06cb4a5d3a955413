#include "walg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "walg/cohomology.hpp"
#include "walg/errors.hpp"
#include "walg/walgebra.hpp"

namespace walg {

namespace {

std::string trim(std::string s) {
  auto keep = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), keep));
  s.erase(std::find_if(s.rbegin(), s.rend(), keep).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError("expected an integer or a \"p/q\" string, got " + v.dump());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Json table(std::string title, std::vector<std::string> columns) {
  Json t;
  t["title"] = std::move(title);
  t["columns"] = std::move(columns);
  t["rows"] = Json::array();
  return t;
}

Json dims_json(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> names = {
      "structure", "decomposition", "transversality", "theorem",         "poisson",
      "cohomology", "whittaker",    "center",         "ell-independence"};
  return names;
}

std::vector<CheckRequest> parse_checks(const std::string& text) {
  std::vector<CheckRequest> out;
  std::set<std::string> seen;
  const auto& reg = check_registry();
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    CheckRequest r;
    const auto colon = item.find(':');
    r.name = trim(item.substr(0, colon));
    if (colon != std::string::npos) {
      const std::string d = trim(item.substr(colon + 1));
      if (d.empty() || !std::all_of(d.begin(), d.end(), ::isdigit))
        throw ConfigError("malformed degree in check '" + item + "'");
      r.degree = std::stoi(d);
    }
    if (std::find(reg.begin(), reg.end(), r.name) == reg.end())
      throw ConfigError("unknown check '" + r.name + "'");
    if (!seen.insert(r.name).second) throw ConfigError("check '" + r.name + "' requested twice");
    out.push_back(r);
  }
  return out;
}

void validate(const JobConfig& config) {
  if (config.max_degree < 0) throw ConfigError("max_degree must be >= 0");
  if (config.threads == 0) throw ConfigError("threads must be >= 1");
  if (config.checks.empty()) throw ConfigError("no checks requested");
  std::set<std::string> seen;
  const auto& reg = check_registry();
  for (const auto& c : config.checks) {
    if (std::find(reg.begin(), reg.end(), c.name) == reg.end())
      throw ConfigError("unknown check '" + c.name + "'");
    if (!seen.insert(c.name).second) throw ConfigError("check '" + c.name + "' requested twice");
    if (c.degree && (*c.degree < 0 || *c.degree > config.max_degree))
      throw ConfigError("degree for '" + c.name + "' must lie in 0 .. max_degree");
  }
}

std::size_t threads_from_env() {
  const char* v = std::getenv("WALG_THREADS");
  if (v == nullptr || *v == '\0') return std::max(1u, std::thread::hardware_concurrency());
  const std::string s = v;
  if (!std::all_of(s.begin(), s.end(), ::isdigit) || std::stoul(s) == 0)
    throw ConfigError("WALG_THREADS must be a positive integer");
  return std::stoul(s);
}

AlgebraSource load_algebra(const std::string& spec) {
  AlgebraSource src;
  src.name = spec;
  static const std::regex builtin(R"(sl(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, builtin)) {
    const std::size_t n = std::stoul(m[1]);
    if (n < 2 || n > 8) throw ConfigError("builtin sl_n needs 2 <= n <= 8");
    src.algebra = make_sln(n);
    src.sl_rank = n;
    return src;
  }
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot open algebra file '" + spec + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError("algebra file '" + spec + "': " + ex.what());
  }
  try {
    std::vector<std::string> labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<BracketEntry> table;
    for (const auto& b : doc.at("brackets")) {
      BracketEntry e;
      e.i = b.at("i").get<std::size_t>();
      e.j = b.at("j").get<std::size_t>();
      for (const auto& term : b.at("value"))
        e.value.emplace_back(term.at(0).get<std::size_t>(), rational_from_json(term.at(1)));
      table.push_back(std::move(e));
    }
    src.algebra = make_lie_algebra(std::move(labels), table);
    auto read_vector = [&](const Json& v) {
      Vector out;
      for (const auto& x : v) out.push_back(rational_from_json(x));
      if (out.size() != src.algebra.dim())
        throw ConfigError("vector of length " + std::to_string(out.size()) + " in '" + spec +
                          "', expected " + std::to_string(src.algebra.dim()));
      return out;
    };
    if (doc.contains("nilpotent")) src.nilpotent = read_vector(doc["nilpotent"]);
    if (doc.contains("ell")) {
      std::vector<Vector> ell;
      for (const auto& v : doc["ell"]) ell.push_back(read_vector(v));
      src.ell = std::move(ell);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError("algebra file '" + spec + "': " + ex.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& ex) {
    throw ConfigError("algebra file '" + spec + "': " + ex.what());
  }
  return src;
}

Vector parse_vector(const LieAlgebra& g, const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ConfigError("empty vector");
  try {
    if (s.front() == '(') {
      if (s.back() != ')') throw ConfigError("unterminated tuple '" + s + "'");
      Vector v;
      for (const auto& item : split(s.substr(1, s.size() - 2), ',')) v.push_back(parse_rational(item));
      if (v.size() != g.dim())
        throw ConfigError("tuple '" + s + "' has " + std::to_string(v.size()) +
                          " entries, expected " + std::to_string(g.dim()));
      return v;
    }
    std::string compact;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    Vector v = zero_vector(g.dim());
    std::size_t pos = 0;
    while (pos < compact.size()) {
      Rational sign = 1;
      if (compact[pos] == '+' || compact[pos] == '-') {
        if (compact[pos] == '-') sign = -1;
        ++pos;
      }
      std::size_t end = pos;
      while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
      const std::string term = compact.substr(pos, end - pos);
      if (term.empty()) throw ConfigError("malformed vector '" + s + "'");
      const auto star = term.find('*');
      Rational coeff = 1;
      std::string label = term;
      if (star != std::string::npos) {
        coeff = parse_rational(term.substr(0, star));
        label = term.substr(star + 1);
      }
      v[g.index_of(label)] += sign * coeff;
      pos = end;
    }
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& ex) {
    throw ConfigError("vector '" + s + "': " + ex.what());
  }
}

Vector parse_nilpotent(const AlgebraSource& src, const std::string& text) {
  const std::string s = trim(text);
  const bool named = s == "regular" || s == "minimal" || (!s.empty() && s.front() == '[');
  if (!named) return parse_vector(src.algebra, s);
  if (!src.sl_rank) throw ConfigError("orbit name '" + s + "' needs a builtin sl_n");
  const std::size_t n = *src.sl_rank;
  std::vector<std::size_t> parts;
  if (s == "regular") {
    parts = {n};
  } else if (s == "minimal") {
    DenseMatrix m = zero_matrix(n, n);
    m[0][n - 1] = 1;
    return sln_coordinates(n, m);
  } else {
    if (s.back() != ']') throw ConfigError("malformed partition '" + s + "'");
    for (const auto& item : split(s.substr(1, s.size() - 2), ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || std::stoul(item) == 0)
        throw ConfigError("malformed partition '" + s + "'");
      parts.push_back(std::stoul(item));
    }
    std::size_t total = 0;
    for (auto p : parts) total += p;
    if (total != n) throw ConfigError("partition '" + s + "' does not sum to " + std::to_string(n));
  }
  DenseMatrix m = zero_matrix(n, n);
  std::size_t start = 0;
  for (auto p : parts) {
    for (std::size_t k = 0; k + 1 < p; ++k) m[start + k][start + k + 1] = 1;
    start += p;
  }
  return sln_coordinates(n, m);
}

namespace {

// Greedy over gm1 coordinates in the given scan order.
std::vector<Vector> greedy_lagrangian(const SymplecticData& symp, bool reversed) {
  const std::size_t m = symp.gm1_dim();
  const DenseMatrix& w = symp.omega;
  std::vector<Vector> chosen;  // gm1 coordinates
  auto orthogonal = [&](const Vector& v) {
    const Vector wv = walg::apply(w, v);
    for (const auto& c : chosen)
      if (dot(c, wv) != 0) return false;
    return true;
  };
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = reversed ? m - 1 - k : k;
  for (std::size_t k : order) {
    if (2 * chosen.size() == m) break;
    Vector v = unit_vector(m, k);
    if (orthogonal(v)) chosen.push_back(std::move(v));
  }
  while (2 * chosen.size() < m) {
    // span^perp = kernel of rows (c^T w).
    SparseMatrix rows(chosen.size(), m);
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      const Vector row = walg::apply(transpose(w), chosen[r]);
      for (std::size_t k = 0; k < m; ++k)
        if (row[k] != 0) rows.set(r, k, row[k]);
    }
    const Subspace perp = kernel(rows);
    const Subspace span = Subspace::span(m, chosen);
    bool added = false;
    auto basis = perp.basis();
    if (reversed) std::reverse(basis.begin(), basis.end());
    for (const auto& v : basis)
      if (!span.contains(v)) {
        chosen.push_back(v);
        added = true;
        break;
      }
    if (!added) throw InternalError("greedy Lagrangian construction stalled");
  }
  std::vector<Vector> out;
  for (const auto& c : chosen) {
    Vector amb = zero_vector(symp.gm1_basis.empty() ? 0 : symp.gm1_basis[0].size());
    for (std::size_t k = 0; k < m; ++k)
      if (c[k] != 0) axpy(amb, c[k], symp.gm1_basis[k]);
    out.push_back(std::move(amb));
  }
  return out;
}

}  // namespace

std::vector<Vector> lagrangian_auto(const SymplecticData& symp) {
  return greedy_lagrangian(symp, false);
}

std::vector<Vector> lagrangian_auto_reversed(const SymplecticData& symp) {
  return greedy_lagrangian(symp, true);
}

namespace {

struct Resolved {
  AlgebraSource src;
  Vector e;
  std::vector<Vector> ell;
};

Resolved resolve(const std::string& algebra, const std::string& nilpotent, const std::string& ell) {
  Resolved r{load_algebra(algebra), {}, {}};
  if (nilpotent.empty()) {
    if (r.src.nilpotent) r.e = *r.src.nilpotent;
    else if (r.src.sl_rank) r.e = parse_nilpotent(r.src, "regular");
    else throw ConfigError("no nilpotent given and none in the algebra file");
  } else {
    r.e = parse_nilpotent(r.src, nilpotent);
  }
  const std::string l = trim(ell);
  if (l.empty() || l == "zero") return r;
  if (l == "file") {
    if (!r.src.ell) throw ConfigError("ell 'file' but the algebra file has no ell");
    r.ell = *r.src.ell;
    return r;
  }
  if (l == "lagrangian-auto") {
    try {
      const auto t = complete_sl2_triple(r.src.algebra, r.e);
      const auto gr = ad_h_grading(r.src.algebra, t);
      const auto ch = chi(r.src.algebra, t);
      r.ell = lagrangian_auto(symplectic_data(r.src.algebra, gr, ch, {}));
    } catch (const Error& ex) {
      throw ConfigError(std::string("lagrangian-auto: ") + ex.what());
    }
    return r;
  }
  for (const auto& item : split(l, ';'))
    if (!item.empty()) r.ell.push_back(parse_vector(r.src.algebra, item));
  return r;
}

ReductionCase build_case(const Resolved& r, const std::string& tag) {
  try {
    return make_case(r.src.name + "/" + tag, r.src.algebra, r.e, r.ell);
  } catch (const Error& ex) {
    throw ConfigError(std::string("building the reduction data: ") + ex.what());
  }
}

std::vector<std::string> format_all(const LieAlgebra& g, const std::vector<Vector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(format_vector(g, v));
  return out;
}

Json case_json(const ReductionCase& c) {
  const LieAlgebra& g = c.ambient;
  Json j;
  j["algebra"] = c.name.substr(0, c.name.rfind('/'));
  j["dim"] = g.dim();
  j["e"] = format_vector(g, c.triple.e);
  j["h"] = format_vector(g, c.triple.h);
  j["f"] = format_vector(g, c.triple.f);
  Json grading = Json::array();
  for (auto it = c.grading.pieces.rbegin(); it != c.grading.pieces.rend(); ++it)
    grading.push_back({{"weight", it->first}, {"dim", it->second.dim()}});
  j["grading"] = grading;
  j["ell"] = format_all(g, c.symp.ell.basis());
  j["lagrangian"] = c.lagrangian();
  j["a_dim"] = c.pair.a.dim();
  j["n_ell_dim"] = c.pair.n_ell.dim();
  j["complement_dim"] = c.complement_dim();
  Json slice = Json::array();
  for (std::size_t k = 0; k < c.basis.slice_basis.size(); ++k)
    slice.push_back({{"vector", format_vector(g, c.basis.slice_basis[k])},
                     {"weight", c.basis.slice_weights[k]},
                     {"degree", 2 - c.basis.slice_weights[k]}});
  j["slice_basis"] = slice;
  return j;
}

Json adapted_table(const ReductionCase& c) {
  Json t = table("adapted basis", {"index", "label", "weight", "degree", "part"});
  std::set<std::size_t> n_ell(c.basis.n_ell_indices.begin(), c.basis.n_ell_indices.end());
  for (std::size_t k = 0; k < c.basis.dim(); ++k) {
    std::string part = c.basis.in_a(k) ? "a" : "complement";
    if (n_ell.count(k)) part += ", n_ell";
    t["rows"].push_back(Json::array({k, c.basis.labels[k], c.basis.weights[k],
                                     c.basis.kazhdan_degree(k), part}));
  }
  return t;
}

// Coordinates of a homogeneous slice polynomial on monomials_of_degree.
Vector slice_coordinates(const KazhdanPolynomial& p, const std::map<Exponents, std::size_t>& index) {
  Vector v = zero_vector(index.size());
  for (const auto& [e, coeff] : p.terms().terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw InternalError("slice polynomial outside its degree");
    v[it->second] = coeff;
  }
  return v;
}

// Basis elements whose nu-image is not a polynomial in lower ones.
std::vector<std::size_t> generator_indices(const ReductionCase& c, const HBasis& H) {
  std::vector<std::size_t> gens;
  const auto degrees = c.slice.slice->degrees();
  std::map<int, std::vector<KazhdanPolynomial>> nu_by_degree;
  for (const auto& el : H.elements)
    nu_by_degree[el.degree].push_back(nu_map(c, el.value, el.degree));
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    const int n = H.elements[i].degree;
    if (n == 0) continue;
    std::map<Exponents, std::size_t> index;
    for (auto& e : monomials_of_degree(degrees, n)) index.emplace(e, index.size());
    std::vector<Vector> products;
    for (int k = 1; k < n; ++k) {
      if (!nu_by_degree.count(k) || !nu_by_degree.count(n - k)) continue;
      for (const auto& a : nu_by_degree[k])
        for (const auto& b : nu_by_degree[n - k]) products.push_back(slice_coordinates(a * b, index));
    }
    for (std::size_t g : gens)
      if (H.elements[g].degree == n)
        products.push_back(slice_coordinates(nu_map(c, H.elements[g].value, n), index));
    const auto span = Subspace::span(index.size(), products);
    if (!span.contains(slice_coordinates(nu_map(c, H.elements[i].value, n), index)))
      gens.push_back(i);
  }
  return gens;
}

class Runner {
 public:
  Runner(const JobConfig& config, Resolved resolved)
      : config_(config), resolved_(std::move(resolved)) {
    const auto t0 = std::chrono::steady_clock::now();
    case_ = std::make_unique<ReductionCase>(build_case(resolved_, "ell"));
    case_seconds_ = seconds_since(t0);
  }

  const ReductionCase& main_case() const { return *case_; }
  double case_seconds() const { return case_seconds_; }

  Json execute(const std::string& name, int degree) {
    Json out;
    out["name"] = name;
    out["status"] = "pass";
    out["degree"] = degree;
    out["summary"] = Json::object();
    out["tables"] = Json::array();
    try {
      bool ok = dispatch(name, degree, out);
      out["status"] = ok ? "pass" : "fail";
    } catch (const ConfigError&) {
      throw;
    } catch (const DegreeError& ex) {
      out["status"] = "fail";
      out["error"] = ex.what();
      if (!out.contains("witness")) out["witness"] = {{"degree", ex.degree()}};
    } catch (const Error& ex) {
      out["status"] = "fail";
      out["error"] = ex.what();
      if (!out.contains("witness")) out["witness"] = {{"message", ex.what()}};
    }
    return out;
  }

 private:
  const HBasis& h_of(const ReductionCase& c, int n) {
    auto key = std::make_pair(&c, n);
    auto it = h_cache_.find(key);
    if (it == h_cache_.end()) it = h_cache_.emplace(key, h_basis(c, n, config_.threads)).first;
    return it->second;
  }

  bool dispatch(const std::string& name, int n, Json& out) {
    if (name == "structure") return structure(out);
    if (name == "decomposition") return decomposition(out);
    if (name == "transversality") return transversality_check(out);
    if (name == "theorem") return theorem(n, out);
    if (name == "poisson") return poisson(n, out);
    if (name == "cohomology") return cohomology(n, out);
    if (name == "whittaker") return whittaker(n, out);
    if (name == "center") return center(out);
    if (name == "ell-independence") return ell_independence(n, out);
    throw ConfigError("unknown check '" + name + "'");
  }

  bool structure(Json& out) {
    const ReductionCase& c = *case_;
    const LieAlgebra& g = c.ambient;
    const std::size_t d = g.dim();
    Json witness;
    bool jacobi = true, invariance = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const Vector xi = g.basis_vector(i), xj = g.basis_vector(j), xk = g.basis_vector(k);
          if (i < j && j < k && jacobi) {
            const Vector s = g.bracket(g.bracket(xi, xj), xk) + g.bracket(g.bracket(xj, xk), xi) +
                             g.bracket(g.bracket(xk, xi), xj);
            if (!is_zero(s)) {
              jacobi = false;
              witness["jacobi"] = Json::array({i, j, k});
            }
          }
          if (invariance && g.killing(g.bracket(xi, xj), xk) != g.killing(xi, g.bracket(xj, xk))) {
            invariance = false;
            witness["killing_invariance"] = Json::array({i, j, k});
          }
        }
    SparseMatrix kill(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (g.killing()[i][j] != 0) kill.set(i, j, g.killing()[i][j]);
    const bool nondegenerate = rank(kill) == d;

    bool grading = true, orthogonal = true;
    std::size_t total = 0;
    for (const auto& [wi, si] : c.grading.pieces) {
      total += si.dim();
      for (const auto& x : si.basis()) {
        if (g.bracket(c.triple.h, x) != Rational(wi) * x) {
          grading = false;
          witness["grading"] = {{"weight", wi}, {"vector", format_vector(g, x)}};
        }
        for (const auto& [wj, sj] : c.grading.pieces)
          for (const auto& y : sj.basis()) {
            if (!c.grading.piece(wi + wj).contains(g.bracket(x, y)) &&
                !is_zero(g.bracket(x, y))) {
              grading = false;
              witness["grading"] = {{"weights", Json::array({wi, wj})},
                                    {"pair", Json::array({format_vector(g, x), format_vector(g, y)})}};
            }
            if (wi + wj != 0 && g.killing(x, y) != 0) {
              orthogonal = false;
              witness["killing_orthogonality"] = {
                  {"weights", Json::array({wi, wj})},
                  {"pair", Json::array({format_vector(g, x), format_vector(g, y)})}};
            }
          }
      }
    }
    grading = grading && total == d;

    bool chi_ok = c.chi(c.triple.f) == 1;
    for (const auto& x : c.pair.a.basis())
      for (const auto& y : c.pair.n_ell.basis())
        if (c.chi(g.bracket(x, y)) != 0) {
          chi_ok = false;
          witness["chi_a_n"] = Json::array({format_vector(g, x), format_vector(g, y)});
        }
    const bool triple = is_sl2_triple(g, c.triple);

    out["summary"] = {{"jacobi", jacobi},
                      {"killing_invariance", invariance},
                      {"killing_nondegenerate", nondegenerate},
                      {"sl2_triple", triple},
                      {"grading", grading},
                      {"killing_orthogonality", orthogonal},
                      {"chi_a_n", chi_ok}};
    Json t = table("ad h grading", {"weight", "dim", "basis"});
    for (auto it = c.grading.pieces.rbegin(); it != c.grading.pieces.rend(); ++it)
      t["rows"].push_back(Json::array({it->first, it->second.dim(),
                                       format_all(g, it->second.basis())}));
    out["tables"].push_back(t);
    const bool ok = jacobi && invariance && nondegenerate && triple && grading && orthogonal && chi_ok;
    if (!ok) out["witness"] = witness;
    return ok;
  }

  bool decomposition(Json& out) {
    const ReductionCase& c = *case_;
    const auto r = decomposition_check(c.ambient, c.triple, c.grading, c.pair);
    const bool dims = r.a_perp_dim == r.n_ell_dim + r.g0_dim + r.gm1_dim;
    out["summary"] = {{"a_perp_dim", r.a_perp_dim},     {"n_e_dim", r.n_e_dim},
                      {"ker_f_dim", r.ker_f_dim},       {"intersection_dim", r.intersection_dim},
                      {"n_ell_dim", r.n_ell_dim},       {"g0_dim", r.g0_dim},
                      {"gm1_dim", r.gm1_dim},           {"dimension_count", dims}};
    if (!dims) out["witness"] = {{"a_perp_dim", r.a_perp_dim}};
    return dims && r.intersection_dim == 0;
  }

  bool transversality_check(Json& out) {
    const ReductionCase& c = *case_;
    const auto r = transversality(c.ambient, c.triple, c.basis.slice_basis, config_.seed);
    Json t = table("sample points", {"point", "intersection dim", "sum dim"});
    for (std::size_t k = 0; k < r.points.size(); ++k)
      t["rows"].push_back(Json::array({format_vector(c.ambient, r.points[k]),
                                       r.intersection_dims[k], r.sum_dims[k]}));
    out["summary"] = {{"seed", config_.seed}, {"points", r.points.size()}};
    out["tables"].push_back(t);
    if (!r.passed)
      for (std::size_t k = 0; k < r.points.size(); ++k)
        if (r.intersection_dims[k] != 0 || r.sum_dims[k] != c.ambient.dim()) {
          out["witness"] = {{"point", format_vector(c.ambient, r.points[k])}};
          break;
        }
    return r.passed;
  }

  bool theorem(int n, Json& out) {
    const ReductionCase& c = *case_;
    const HBasis& H = h_of(c, n);
    Json dims = table("dimensions", {"n", "gr H", "C[S]", "rank nu"});
    bool ok = true;
    try {
      const auto r = verify_theorem(c, H, n);
      for (int k = 0; k <= n; ++k)
        dims["rows"].push_back(Json::array({k, r.h_dims[k], r.slice_dims[k], r.nu_ranks[k]}));
      out["summary"]["gr_dims"] = dims_json(r.h_dims);
      out["summary"]["slice_dims"] = dims_json(r.slice_dims);
    } catch (const TheoremFailure&) {
      out["summary"]["gr_dims"] = dims_json(H.gr_dims);
      out["summary"]["slice_dims"] = dims_json(slice_hilbert_series(c.slice, n));
      out["tables"].push_back(dims);
      throw;
    }
    out["tables"].push_back(dims);

    const auto alg = algebra_clause(c, H);
    out["summary"]["product_pairs"] = alg.pairs.size();
    out["summary"]["multiplicative"] = alg.passed;
    for (const auto& p : alg.pairs)
      if (!p.ok) {
        out["witness"] = {{"degree", p.degree},
                          {"pair", Json::array({format_q(c, H.elements[p.i].value),
                                                format_q(c, H.elements[p.j].value)})}};
        ok = false;
        break;
      }

    const auto gens = generator_indices(c, H);
    Json gt = table("generators", {"degree", "canonical form", "nu"});
    for (std::size_t i : gens) {
      const auto& el = H.elements[i];
      gt["rows"].push_back(Json::array(
          {el.degree, format_q(c, el.value), nu_map(c, el.value, el.degree).to_string()}));
    }
    out["tables"].push_back(gt);
    Json mt = table("generator products", {"a", "b", "ab", "ab - ba"});
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t y = x; y < gens.size(); ++y) {
        const auto& a = H.elements[gens[x]];
        const auto& b = H.elements[gens[y]];
        if (a.degree + b.degree > n) continue;
        const QElement ab = h_multiply(c, H, a.value, b.value);
        QElement comm = ab;
        comm.add_scaled(h_multiply(c, H, b.value, a.value), -1);
        mt["rows"].push_back(Json::array({"g" + std::to_string(x), "g" + std::to_string(y),
                                          format_q(c, ab), format_q(c, comm)}));
      }
    out["tables"].push_back(mt);
    return ok;
  }

  bool poisson(int n, Json& out) {
    const ReductionCase& c = *case_;
    if (!c.lagrangian()) throw ConfigError("check 'poisson' needs a Lagrangian ell");
    const HBasis& H = h_of(c, n);
    const auto r = poisson_clause(c, H);
    out["summary"] = {{"pairs", r.pairs.size()},
                      {"extension_independent", r.extension_independent}};
    Json t = table("slice brackets", {"pair", "bracket"});
    for (const auto& [a, b] : r.brackets) t["rows"].push_back(Json::array({a, b}));
    out["tables"].push_back(t);
    for (const auto& p : r.pairs)
      if (!p.ok) {
        out["witness"] = {{"degree", p.degree},
                          {"pair", Json::array({format_q(c, H.elements[p.i].value),
                                                format_q(c, H.elements[p.j].value)})}};
        break;
      }
    return r.passed;
  }

  bool cohomology(int n, Json& out) {
    const ReductionCase& c = *case_;
    const HBasis& H = h_of(c, n);
    const auto co = ce_cohomology(c, 1, n);
    const auto slice = slice_hilbert_series(c.slice, n);
    Json t = table("cohomology", {"p", "H0", "H1", "C[S]", "gr H"});
    bool ok = true;
    for (int p = 0; p <= n; ++p) {
      const std::size_t h0 = co.dim(0, p), h1 = co.dim(1, p);
      t["rows"].push_back(Json::array({p, h0, h1, slice[p], H.gr_dims[p]}));
      if (ok && (h0 != slice[p] || h1 != 0 || H.gr_dims[p] != h0)) {
        ok = false;
        out["witness"] = {{"degree", p}, {"H0", h0}, {"H1", h1}};
      }
    }
    out["summary"] = {{"i_max", 1}};
    out["tables"].push_back(t);
    return ok;
  }

  bool whittaker(int n, Json& out) {
    const ReductionCase& c = *case_;
    if (!c.lagrangian()) throw ConfigError("check 'whittaker' needs a Lagrangian ell");
    const HBasis& H = h_of(c, n);
    Json t = table("Whittaker vectors", {"n", "dim Wh(F_n Q)", "dim F_n H", "equal"});
    bool ok = true;
    for (int k = 0; k <= n; ++k) {
      const auto w = whittaker_vectors(c, H, k);
      t["rows"].push_back(Json::array({k, w.whittaker.dim(), w.h.dim(), w.equal}));
      if (ok && !w.equal) {
        ok = false;
        out["witness"] = {{"degree", k}};
      }
    }
    out["tables"].push_back(t);
    return ok;
  }

  bool center(Json& out) {
    const ReductionCase& c = *case_;
    const auto r = center_injects(c);
    out["summary"] = {{"casimir_image", format_q(c, r.image)},
                      {"degree", r.degree},
                      {"nu", r.nu.to_string()},
                      {"invariant", r.invariant},
                      {"nonconstant", r.nonconstant}};
    return true;
  }

  bool ell_independence(int n, Json& out) {
    const ReductionCase& c = *case_;
    Resolved zero = resolved_;
    zero.ell.clear();
    std::vector<std::vector<Vector>> targets;
    if (c.symp.ell.dim() > 0) {
      targets.push_back(resolved_.ell);
    } else {
      targets.push_back(lagrangian_auto(c.symp));
      const auto rev = lagrangian_auto_reversed(c.symp);
      if (!(Subspace::span(c.ambient.dim(), rev) == Subspace::span(c.ambient.dim(), targets[0])))
        targets.push_back(rev);
    }
    const ReductionCase* from = &c;
    if (c.symp.ell.dim() > 0)
      from = cases_.emplace_back(std::make_unique<ReductionCase>(build_case(zero, "zero"))).get();
    const HBasis& H0 = h_of(*from, n);
    Json t = table("natural maps H_0 -> H_ell", {"ell", "n", "gr H_0", "gr H_ell", "rank F_n"});
    std::vector<ComparisonReport> reports;
    std::vector<const HBasis*> hs;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      Resolved r = resolved_;
      r.ell = targets[k];
      auto& tc = cases_.emplace_back(std::make_unique<ReductionCase>(build_case(r, "target" + std::to_string(k))));
      const HBasis& Ht = h_of(*tc, n);
      const std::string label = "<" + [&] {
        std::string s;
        for (const auto& v : tc->symp.ell.basis()) s += (s.empty() ? "" : ", ") + format_vector(c.ambient, v);
        return s;
      }() + ">";
      try {
        reports.push_back(ell_comparison(*from, H0, *tc, Ht, n));
      } catch (const ComparisonFailure& ex) {
        out["witness"] = {{"ell", label}, {"degree", ex.degree()}};
        throw;
      }
      hs.push_back(&Ht);
      const auto& rep = reports.back();
      for (int d = 0; d <= n; ++d)
        t["rows"].push_back(Json::array({label, d, rep.dims_from[d], rep.dims_to[d], rep.ranks[d]}));
      out["summary"]["targets"].push_back({{"ell", label}, {"pairs_checked", rep.pairs_checked},
                                           {"multiplicative", rep.multiplicative}});
    }
    out["tables"].push_back(t);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.multiplicative;
    if (reports.size() == 2) {
      const bool comp = composite_is_filtered_isomorphism(reports[0], reports[1], *hs[0], *hs[1], n);
      out["summary"]["composite_isomorphism"] = comp;
      ok = ok && comp;
    }
    return ok;
  }

  const JobConfig& config_;
  Resolved resolved_;
  std::unique_ptr<ReductionCase> case_;
  std::vector<std::unique_ptr<ReductionCase>> cases_;
  std::map<std::pair<const ReductionCase*, int>, HBasis> h_cache_;
  double case_seconds_ = 0;
};

Json config_json(const JobConfig& config) {
  Json j;
  j["algebra"] = config.algebra;
  j["nilpotent"] = config.nilpotent;
  j["ell"] = config.ell;
  j["max_degree"] = config.max_degree;
  Json checks = Json::array();
  for (const auto& c : config.checks) {
    Json item = {{"name", c.name}};
    if (c.degree) item["degree"] = *c.degree;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace

Json run(const JobConfig& config) {
  validate(config);
  const auto t0 = std::chrono::steady_clock::now();
  Runner runner(config, resolve(config.algebra, config.nilpotent, config.ell));
  Json report;
  report["config"] = config_json(config);
  report["case"] = case_json(runner.main_case());
  report["checks"] = Json::array();
  Json timing;
  timing["case_seconds"] = runner.case_seconds();
  timing["checks"] = Json::object();
  bool all = true;
  for (const auto& name : check_registry()) {
    auto it = std::find_if(config.checks.begin(), config.checks.end(),
                           [&](const CheckRequest& r) { return r.name == name; });
    if (it == config.checks.end()) continue;
    const auto tc = std::chrono::steady_clock::now();
    Json result = runner.execute(name, it->degree.value_or(config.max_degree));
    timing["checks"][name] = seconds_since(tc);
    all = all && result["status"] == "pass";
    report["checks"].push_back(std::move(result));
  }
  report["status"] = all ? "pass" : "fail";
  timing["total_seconds"] = seconds_since(t0);
  timing["threads"] = config.threads;
  report["timing"] = timing;
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw ConfigError("cannot write '" + config.output + "'");
    out << report.dump(2) << "\n";
  }
  return report;
}

Json describe(const std::string& algebra, const std::string& nilpotent, const std::string& ell,
              int max_degree) {
  if (max_degree < 0) throw ConfigError("max_degree must be >= 0");
  const Resolved r = resolve(algebra, nilpotent, ell);
  const ReductionCase c = build_case(r, "ell");
  const LieAlgebra& g = c.ambient;
  Json d;
  d["case"] = case_json(c);
  d["tables"] = Json::array();
  Json gr = table("ad h grading", {"weight", "dim", "basis"});
  for (auto it = c.grading.pieces.rbegin(); it != c.grading.pieces.rend(); ++it)
    gr["rows"].push_back(Json::array({it->first, it->second.dim(), format_all(g, it->second.basis())}));
  d["tables"].push_back(gr);
  Json sy = table("g(-1) and omega", {"basis vector", "omega row"});
  for (std::size_t k = 0; k < c.symp.gm1_dim(); ++k) {
    std::vector<std::string> row;
    for (const auto& x : c.symp.omega[k]) row.push_back(to_string(x));
    sy["rows"].push_back(Json::array({format_vector(g, c.symp.gm1_basis[k]), row}));
  }
  d["tables"].push_back(sy);
  Json sub = table("subalgebras", {"name", "dim", "basis"});
  sub["rows"].push_back(Json::array({"ell", c.symp.ell.dim(), format_all(g, c.symp.ell.basis())}));
  sub["rows"].push_back(Json::array({"a", c.pair.a.dim(), format_all(g, c.pair.a.basis())}));
  sub["rows"].push_back(Json::array({"n_ell", c.pair.n_ell.dim(), format_all(g, c.pair.n_ell.basis())}));
  d["tables"].push_back(sub);
  d["tables"].push_back(adapted_table(c));
  Json sl = table("slice e + Ker ad f", {"coordinate", "vector", "weight", "degree"});
  for (std::size_t k = 0; k < c.basis.slice_basis.size(); ++k)
    sl["rows"].push_back(Json::array({c.slice.slice->vars[k].name,
                                      format_vector(g, c.basis.slice_basis[k]),
                                      c.basis.slice_weights[k], 2 - c.basis.slice_weights[k]}));
  d["tables"].push_back(sl);
  Json hs = table("dim C[S]_n", {"n", "dim"});
  const auto series = slice_hilbert_series(c.slice, max_degree);
  for (int n = 0; n <= max_degree; ++n) hs["rows"].push_back(Json::array({n, series[n]}));
  d["tables"].push_back(hs);
  return d;
}

bool report_passed(const Json& report) { return report.value("status", "fail") == "pass"; }

Json strip_timing(Json report) {
  report.erase("timing");
  return report;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + cell(x);
    return s;
  }
  return v.dump();
}

void render_table(std::ostringstream& os, const Json& t) {
  os << "  " << t["title"].get<std::string>() << "\n";
  std::vector<std::size_t> width;
  for (const auto& c : t["columns"]) width.push_back(cell(c).size());
  for (const auto& row : t["rows"])
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k)
      width[k] = std::max(width[k], std::min<std::size_t>(cell(row[k]).size(), 60));
  auto line = [&](const Json& row) {
    os << "   ";
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string s = cell(row[k]);
      os << " " << s;
      if (k + 1 < row.size() && s.size() < width[k]) os << std::string(width[k] - s.size(), ' ');
      if (k + 1 < row.size()) os << " |";
    }
    os << "\n";
  };
  line(t["columns"]);
  for (const auto& row : t["rows"]) line(row);
}

}  // namespace

std::string render_report(const Json& report) {
  std::ostringstream os;
  const Json& c = report["case"];
  os << c["algebra"].get<std::string>() << ": e = " << c["e"].get<std::string>()
     << ", h = " << c["h"].get<std::string>() << ", f = " << c["f"].get<std::string>() << "\n";
  os << "ell = <" << cell(c["ell"]) << ">" << (c["lagrangian"].get<bool>() ? " (Lagrangian)" : "")
     << ", dim a = " << c["a_dim"] << ", dim n_ell = " << c["n_ell_dim"] << "\n";
  for (const auto& chk : report["checks"]) {
    os << "\n[" << chk["status"].get<std::string>() << "] " << chk["name"].get<std::string>()
       << " (degree " << chk["degree"] << ")\n";
    for (const auto& [k, v] : chk["summary"].items()) os << "  " << k << ": " << cell(v) << "\n";
    for (const auto& t : chk["tables"]) render_table(os, t);
    if (chk.contains("error")) os << "  error: " << chk["error"].get<std::string>() << "\n";
    if (chk.contains("witness")) os << "  witness: " << chk["witness"].dump() << "\n";
  }
  os << "\noverall: " << report["status"].get<std::string>() << "\n";
  return os.str();
}

std::string render_description(const Json& description) {
  std::ostringstream os;
  const Json& c = description["case"];
  os << c["algebra"].get<std::string>() << " (dim " << c["dim"] << ")\n";
  os << "e = " << c["e"].get<std::string>() << "\nh = " << c["h"].get<std::string>()
     << "\nf = " << c["f"].get<std::string>() << "\n";
  for (const auto& t : description["tables"]) {
    os << "\n";
    render_table(os, t);
  }
  return os.str();
}

}  // namespace walg
