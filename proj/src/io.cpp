#include "cohiggs/io.hpp"

#include "cohiggs/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

namespace cohiggs {

namespace {

[[noreturn]] void structural(const std::string& msg) { throw ParseError(msg, 0); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    structural(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) structural(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

GaussQ coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return GaussQ(j.get<int>());
  if (!j.is_string()) structural("coefficients must be strings or integers");
  return parse_gaussq(j.get<std::string>());
}

double double_from_json(const Json& j, const char* what) {
  if (!j.is_number()) structural(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Json unipoly_to_json(const UniPoly& p) {
  Json out = Json::array();
  for (int e = 0; e <= p.degree(); ++e) out.push_back(to_string(p.coeff(e)));
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) structural("polynomial must be an array of coefficients");
  std::vector<GaussQ> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(coeff_from_json(c));
  return UniPoly(std::move(coeffs));
}

Json bundle_to_json(const CoHiggsBundleP1& b) {
  Json out;
  out["degrees"] = b.degrees;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < b.phi.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < b.phi.cols(); ++j) row.push_back(unipoly_to_json(b.phi(i, j)));
    rows.push_back(std::move(row));
  }
  out["phi"] = std::move(rows);
  return out;
}

CoHiggsBundleP1 bundle_from_json(const Json& j) {
  const Json& degrees = member(j, "degrees");
  if (!degrees.is_array() || degrees.empty()) structural("\"degrees\" must be a nonempty array");
  CoHiggsBundleP1 b;
  for (const Json& d : degrees) {
    if (!d.is_number_integer()) structural("degrees must be integers");
    b.degrees.push_back(d.get<int>());
  }
  const int k = b.rank();
  const Json& phi = member(j, "phi");
  if (!phi.is_array() || static_cast<int>(phi.size()) != k) {
    structural("\"phi\" must have one row per summand");
  }
  b.phi = PolyMatrix(k, k);
  b.phi.setZero();
  for (int i = 0; i < k; ++i) {
    const Json& row = phi.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      structural("\"phi\" rows must have one entry per summand");
    }
    for (int c = 0; c < k; ++c) {
      b.phi(i, c) = unipoly_from_json(row.at(static_cast<std::size_t>(c)));
    }
  }
  return b;
}

Json curve_to_json(const SpectralCurve& s) {
  Json out;
  out["k"] = s.k;
  Json a = Json::array();
  for (const UniPoly& aj : s.a) a.push_back(unipoly_to_json(aj));
  out["a"] = std::move(a);
  return out;
}

SpectralCurve curve_from_json(const Json& j) {
  SpectralCurve s;
  s.k = int_member(j, "k");
  if (s.k < 1) structural("\"k\" must be positive");
  const Json& a = member(j, "a");
  if (!a.is_array() || static_cast<int>(a.size()) != s.k) {
    structural("\"a\" must list one coefficient polynomial per power");
  }
  for (const Json& aj : a) s.a.push_back(unipoly_from_json(aj));
  return s;
}

Json validation_to_json(const ValidationReport& r) {
  Json out;
  out["ok"] = r.ok();
  out["shape_ok"] = r.shape_ok;
  Json violations = Json::array();
  for (const DegreeViolation& v : r.violations) {
    Json item;
    item["row"] = static_cast<int>(v.row);
    item["col"] = static_cast<int>(v.col);
    item["degree"] = v.degree;
    item["bound"] = v.bound;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json hypercohomology_to_json(const HypercohomologyReport& r, const TheoremCheck& check) {
  Json out;
  out["h0"] = r.h0;
  out["h1"] = r.h1;
  out["h2"] = r.h2;
  out["index"] = r.index;
  out["zero_locus_dim"] = r.zero_locus_dim ? Json(*r.zero_locus_dim) : Json(nullptr);
  out["theorem"] = to_string(check.status);
  out["theorem_id"] = "vanishing_theorem";
  out["theorem_reason"] = check.reason;
  return out;
}

Json stability_to_json(const StabilityVerdict& v, const Rational& mu) {
  Json out;
  out["slope"] = to_string(mu);
  out["status"] = to_string(v.status);
  Json witnesses = Json::array();
  for (const StabilityWitness& w : v.witnesses) {
    Json item;
    item["lambda"] = unipoly_to_json(w.lambda);
    item["degree"] = w.degree;
    witnesses.push_back(std::move(item));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

namespace {

Json multipoly_to_json(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [expo, coeff] : f.terms()) {
    Json item;
    item["monomial"] = {expo[0], expo[1], expo[2], expo[3]};
    item["coeff"] = to_string(coeff);
    terms.push_back(std::move(item));
  }
  return terms;
}

MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_array()) structural("a potential component must be an array of terms");
  MultiPoly f;
  for (const Json& term : j) {
    const Json& mono = member(term, "monomial");
    if (!mono.is_array() || mono.size() != 4) {
      structural("\"monomial\" must hold four exponents");
    }
    MultiPoly::Expo expo{};
    for (std::size_t v = 0; v < 4; ++v) {
      const Json& e = mono.at(v);
      if (!e.is_number_integer() || e.get<int>() < 0) {
        structural("monomial exponents must be nonnegative integers");
      }
      expo[v] = e.get<int>();
    }
    f += MultiPoly::monomial(expo, coeff_from_json(member(term, "coeff")));
  }
  return f;
}

}  // namespace

Json theta_to_json(const DolbeaultB& theta) {
  Json out;
  out["vars"] = theta.variables();
  out["f"] = multipoly_to_json(theta.component(0));
  if (theta.variables() == 2) out["f2"] = multipoly_to_json(theta.component(1));
  return out;
}

DolbeaultB theta_from_json(const Json& j) {
  const int vars = int_member(j, "vars");
  if (vars != 1 && vars != 2) structural("\"vars\" must be 1 or 2");
  MultiPoly f = multipoly_from_json(member(j, "f"));
  if (vars == 1) return DolbeaultB::one_variable(std::move(f));
  return DolbeaultB::two_variable(std::move(f), multipoly_from_json(member(j, "f2")));
}

namespace {

Json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return out;
}

Eigen::MatrixXcd complex_matrix_from_json(const Json& j, int k, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != k * k) {
    structural(std::string("\"") + name + "\" must hold k*k [re, im] pairs");
  }
  Eigen::MatrixXcd m(k, k);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      const Json& pair = j.at(idx++);
      if (!pair.is_array() || pair.size() != 2) structural("matrix entries must be [re, im]");
      m(r, c) = std::complex<double>(double_from_json(pair.at(0), "matrix entry"),
                                     double_from_json(pair.at(1), "matrix entry"));
    }
  }
  return m;
}

}  // namespace

Json nahm_to_json(const NahmState& s) {
  Json out;
  out["k"] = static_cast<int>(s.size());
  out["t"] = s.t;
  out["T1"] = complex_matrix_to_json(s.T1);
  out["T2"] = complex_matrix_to_json(s.T2);
  out["T3"] = complex_matrix_to_json(s.T3);
  return out;
}

NahmState nahm_from_json(const Json& j) {
  const int k = int_member(j, "k");
  if (k < 1) structural("\"k\" must be positive");
  NahmState s;
  s.t = j.contains("t") ? double_from_json(j.at("t"), "\"t\"") : 0.0;
  s.T1 = complex_matrix_from_json(member(j, "T1"), k, "T1");
  s.T2 = complex_matrix_from_json(member(j, "T2"), k, "T2");
  s.T3 = complex_matrix_from_json(member(j, "T3"), k, "T3");
  return s;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

namespace {

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

CoHiggsBundleP1 from_rows(std::vector<int> degrees,
                          const std::vector<std::vector<UniPoly>>& rows) {
  CoHiggsBundleP1 b;
  b.degrees = std::move(degrees);
  const int k = b.rank();
  b.phi = PolyMatrix(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      b.phi(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return b;
}

}  // namespace

std::vector<std::filesystem::path> write_demo_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  const auto emit = [&](const char* name, const Json& j) {
    const std::filesystem::path p = dir / name;
    write_file(p, j);
    written.push_back(p);
  };

  emit("o_plus_t.json", bundle_to_json(canonical_o_plus_t()));

  // First seeds whose trivial bundles meet the zero section transversally
  // and have a smooth spectral curve; the scan is deterministic.
  for (const int k : {2, 3}) {
    for (std::uint64_t seed = 1;; ++seed) {
      const CoHiggsBundleP1 b = random_trivial_bundle(k, seed, 3);
      const SpectralCurve s = char_poly(b);
      if (!zero_section_intersection(s).transversal) continue;
      if (!is_reduced(s)) continue;
      if (smoothness_report(s).status != Smoothness::Smooth) continue;
      emit(k == 2 ? "trivial_rank2_generic.json" : "trivial_rank3_generic.json",
           bundle_to_json(b));
      break;
    }
  }

  const UniPoly z({GaussQ(0), GaussQ(1)});
  const UniPoly zero;
  const UniPoly one({GaussQ(1)});

  emit("vector_field_dm2.json", bundle_to_json(from_rows({-2}, {{z}})));
  emit("vector_field_d0.json",
       bundle_to_json(from_rows({0}, {{UniPoly({GaussQ(-1), GaussQ(0), GaussQ(1)})}})));

  const UniPoly z2p1({GaussQ(1), GaussQ(0), GaussQ(1)});
  const UniPoly z2m1({GaussQ(-1), GaussQ(0), GaussQ(1)});
  const UniPoly z2({GaussQ(0), GaussQ(0), GaussQ(1)});
  emit("stable_rank2.json", bundle_to_json(from_rows({0, 0}, {{zero, z2p1}, {z2m1, zero}})));
  emit("semistable_rank2.json", bundle_to_json(from_rows({0, 0}, {{z2, zero}, {zero, zero}})));
  emit("unstable_rank2.json", bundle_to_json(from_rows({1, -1}, {{zero, z}, {zero, one}})));

  emit("nahm_pole_k2.json", nahm_to_json(pole_solution(2.0, 0.0)));
  emit("nahm_random_k2.json", nahm_to_json(random_nahm_state(2, 7, 0.5)));
  emit("nahm_random_k3.json", nahm_to_json(random_nahm_state(3, 11, 0.5)));

  DolbeaultB theta = DolbeaultB::one_variable(
      MultiPoly::monomial({1, 0, 1, 0}, GaussQ(1)));
  emit("theta_zzbar.json", theta_to_json(theta));
  DolbeaultB theta2 = DolbeaultB::two_variable(
      MultiPoly::monomial({0, 0, 1, 0}, GaussQ(1)) + MultiPoly::monomial({0, 1, 0, 1}, GaussQ(1)),
      MultiPoly::monomial({0, 0, 0, 1}, GaussQ(1)));
  emit("theta_two_var.json", theta_to_json(theta2));

  return written;
}

}  // namespace cohiggs
