#include "harmonia/json_io.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <sstream>
#include <stdexcept>

namespace harmonia {

Json to_json(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Cx cx_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  return rational_from_string(j.get<std::string>());
}

namespace {

Json cx_vector_to_json(const std::vector<Cx>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

std::vector<Cx> cx_vector_from_json(const Json& j) {
  std::vector<Cx> out;
  for (const auto& v : j) out.push_back(cx_from_json(v));
  return out;
}

}  // namespace

Json to_json(const IndexedFun& f) {
  Json j;
  j["labels"] = f.labels;
  j["values"] = cx_vector_to_json(f.values);
  Json ws = Json::array();
  for (const auto& w : f.weights) ws.push_back(rational_to_string(w));
  j["weights"] = ws;
  return j;
}

IndexedFun indexed_fun_from_json(const Json& j) {
  IndexedFun f;
  f.labels = j.at("labels").get<std::vector<std::string>>();
  f.values = cx_vector_from_json(j.at("values"));
  if (j.contains("weights"))
    for (const auto& w : j.at("weights")) f.weights.push_back(rational_from_json(w));
  else
    f.weights.assign(f.labels.size(), Rational(1));
  f.validate();
  return f;
}

Json to_json(const TrigPoly& f) {
  Json coeffs = Json::object();
  for (int n = -f.degree(); n <= f.degree(); ++n)
    if (f.coeff(n) != Cx(0.0, 0.0)) coeffs[std::to_string(n)] = to_json(f.coeff(n));
  Json j;
  j["N"] = f.degree();
  j["coeffs"] = coeffs;
  return j;
}

TrigPoly trig_poly_from_json(const Json& j) {
  TrigPoly f(j.at("N").get<int>());
  for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it)
    f.set_coeff(std::stoi(it.key()), cx_from_json(it.value()));
  return f;
}

Json to_json(const SampledCircleFun& f) {
  Json j;
  j["samples"] = cx_vector_to_json(f.values);
  return j;
}

SampledCircleFun sampled_circle_fun_from_json(const Json& j) {
  return SampledCircleFun{cx_vector_from_json(j.at("samples"))};
}

Json to_json(const GroupFun& f) {
  Json j;
  j["moduli"] = f.group.moduli();
  j["haar"] = (f.haar == Haar::Counting) ? "counting" : "normalized";
  j["values"] = cx_vector_to_json(f.values);
  return j;
}

GroupFun group_fun_from_json(const Json& j) {
  FiniteAbelianGroup g(j.at("moduli").get<std::vector<long long>>());
  std::string haar = j.value("haar", "counting");
  if (haar != "counting" && haar != "normalized")
    throw std::invalid_argument("haar must be 'counting' or 'normalized'");
  GroupFun f{g, cx_vector_from_json(j.at("values")),
             haar == "counting" ? Haar::Counting : Haar::Normalized};
  f.validate();
  return f;
}

Json to_json(const GroupMeasure& mu) {
  Json j;
  j["moduli"] = mu.group.moduli();
  j["mass"] = cx_vector_to_json(mu.mass);
  return j;
}

GroupMeasure group_measure_from_json(const Json& j) {
  FiniteAbelianGroup g(j.at("moduli").get<std::vector<long long>>());
  GroupMeasure mu{g, cx_vector_from_json(j.at("mass"))};
  if (static_cast<long long>(mu.mass.size()) != g.order())
    throw std::invalid_argument("measure needs one mass per element");
  return mu;
}

Json to_json(const RAdicInt& x) {
  Json j;
  j["radices"] = x.tower.radices;
  j["residue"] = x.residue.str();
  return j;
}

RAdicInt radic_int_from_json(const Json& j) {
  RadixTower t = RadixTower::of(j.at("radices").get<std::vector<long long>>());
  return radic_from_int(t, Int(j.at("residue").get<std::string>()));
}

Json to_json(const PAdicNumber& x) {
  Json j;
  j["p"] = x.p;
  j["L"] = x.precision;
  if (x.zero) {
    j["zero"] = true;
  } else {
    j["v"] = x.v;
    j["unit"] = x.unit.str();
  }
  return j;
}

PAdicNumber padic_number_from_json(const Json& j) {
  PAdicNumber x;
  x.p = j.at("p").get<long long>();
  x.precision = j.value("L", 20);
  if (j.value("zero", false)) return x;
  x.zero = false;
  x.v = j.at("v").get<long long>();
  x.unit = Int(j.at("unit").get<std::string>());
  return x;
}

Json to_json(const SolenoidPoint& x) {
  Json j;
  j["radices"] = x.tower.radices;
  Json angles = Json::array();
  for (const auto& a : x.angles) angles.push_back(rational_to_string(a));
  j["angles"] = angles;
  return j;
}

SolenoidPoint solenoid_point_from_json(const Json& j) {
  SolenoidPoint x;
  x.tower = RadixTower::of(j.at("radices").get<std::vector<long long>>());
  for (const auto& a : j.at("angles")) x.angles.push_back(rational_from_json(a));
  x.validate();
  return x;
}

std::string to_csv(const FiniteMetric& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    if (i) out << ",";
    out << m.points[i];
  }
  out << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ",";
      out << m.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

FiniteMetric finite_metric_from_csv(std::istream& in) {
  FiniteMetric m;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("metric CSV: missing header");
  std::stringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) m.points.push_back(cell);
  const std::size_t n = m.points.size();
  m.table.reserve(n * n);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    while (std::getline(row, cell, ',')) m.table.push_back(std::stod(cell));
  }
  if (m.table.size() != n * n)
    throw std::invalid_argument("metric CSV: table is not labels x labels");
  m.validate();
  return m;
}

std::string poisson_kernel_csv(const std::vector<double>& rs, std::size_t grid) {
  std::ostringstream out;
  out.precision(17);
  out << "r,theta_z,theta_w,P\n";
  for (double r : rs)
    for (std::size_t i = 0; i < grid; ++i)
      for (std::size_t j = 0; j < grid; ++j) {
        Cx z = circle_point(static_cast<long long>(i), static_cast<long long>(grid));
        Cx w = circle_point(static_cast<long long>(j), static_cast<long long>(grid));
        out << r << "," << static_cast<double>(i) / grid << ","
            << static_cast<double>(j) / grid << "," << poisson_kernel(r, z, w) << "\n";
      }
  return out.str();
}

}  // namespace harmonia
