#include "mmu_cli/json_io.hpp"

namespace mmu::cli {

json to_json(const Mat& m) { return m.to_rows(); }

Mat mat_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgument("matrix row must be an array");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw InvalidArgument("matrix entries must be integers");
      r.push_back(e.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return Mat::from_rows(f, rows);
}

json to_json(const AlgElem& a) {
  json terms = json::array();
  for (const auto& [k, c] : a.terms()) terms.push_back({{"matrix", to_json(a.matrix(k))}, {"coeff", to_string(c)}});
  return {{"n", a.n()}, {"q", a.field().q()}, {"terms", terms}};
}

AlgElem alg_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const Field& f = Field::get(j.at("q").get<int>());
    AlgElem out(f, n);
    for (const auto& t : j.at("terms")) {
      const Mat m = mat_from_json(f, t.at("matrix"));
      if (m.rows() != n || m.cols() != n) throw InvalidArgument("term matrix is not " + std::to_string(n) + "x" + std::to_string(n));
      const auto& c = t.at("coeff");
      out.add_term(m, c.is_string() ? parse_rat(c.get<std::string>()) : Rat(c.get<long>()));
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed algebra element: ") + e.what());
  }
}

json to_json(const GroupoidElem& x) {
  json terms = json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"src", to_json(b.src.basis())},
                     {"dst", to_json(b.dst.basis())},
                     {"iso", to_json(b.iso)},
                     {"coeff", to_string(c)}});
  return {{"n", x.n()}, {"q", x.field().q()}, {"r", x.r()}, {"terms", terms}};
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const LemmaCheck& c) {
  json j = {{"id", c.id},
            {"statement", c.statement},
            {"instances", c.instances},
            {"failures", c.failures},
            {"passed", c.passed()}};
  if (!c.passed()) j["first_failure"] = c.first_failure;
  return j;
}

json to_json(const ClassCoeffs& coeffs) {
  json out = json::array();
  for (const auto& [key, v] : coeffs) out.push_back({{"class", key.values}, {"coeff", to_string(v)}});
  return out;
}

json to_json(const ClassLaurents& coeffs) {
  json out = json::array();
  for (const auto& [key, v] : coeffs) {
    json c = json::array();
    for (const Rat& x : v.coeffs()) c.push_back(to_string(x));
    out.push_back({{"class", key.values}, {"coeff", v.to_string()}, {"min_degree", v.min_deg()}, {"coefficients", c}});
  }
  return out;
}

json to_json(const CharTable& chi) {
  json out = json::object();
  for (const auto& [k, v] : chi) out[std::to_string(k)] = to_string(v);
  return out;
}

}  // namespace mmu::cli
