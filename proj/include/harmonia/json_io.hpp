// Wire formats: JSON bindings for the value types and CSV for metric and
// kernel tables.  Complex values travel as [re, im]; rationals as "num/den".
#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "harmonia/circle.hpp"
#include "harmonia/group.hpp"
#include "harmonia/hilbert.hpp"
#include "harmonia/padic.hpp"
#include "harmonia/solenoid.hpp"
#include "harmonia/ultra.hpp"

namespace harmonia {

using Json = nlohmann::json;

Json to_json(const Cx& z);
Cx cx_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const IndexedFun& f);
IndexedFun indexed_fun_from_json(const Json& j);

Json to_json(const TrigPoly& f);
TrigPoly trig_poly_from_json(const Json& j);

Json to_json(const SampledCircleFun& f);
SampledCircleFun sampled_circle_fun_from_json(const Json& j);

Json to_json(const GroupFun& f);
GroupFun group_fun_from_json(const Json& j);

Json to_json(const GroupMeasure& mu);
GroupMeasure group_measure_from_json(const Json& j);

Json to_json(const RAdicInt& x);
RAdicInt radic_int_from_json(const Json& j);

Json to_json(const PAdicNumber& x);
PAdicNumber padic_number_from_json(const Json& j);

Json to_json(const SolenoidPoint& x);
SolenoidPoint solenoid_point_from_json(const Json& j);

// Header row of labels, then one row per point.
std::string to_csv(const FiniteMetric& m);
FiniteMetric finite_metric_from_csv(std::istream& in);

// Rows (r, theta_z, theta_w, P) over uniform theta grids.
std::string poisson_kernel_csv(const std::vector<double>& rs, std::size_t grid);

}  // namespace harmonia
