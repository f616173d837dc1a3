#include "entropylab/report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace entropylab {

std::string format_real(Real x) {
  if (std::isnan(x)) return "nan";
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc())
    throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, res.ptr);
}

std::string format_real(const std::optional<Real>& x) {
  return x ? format_real(*x) : std::string();
}

namespace {

// JSON numbers go through the same shortest-round-trip path; nlohmann
// would otherwise print 17 significant digits.
Json number(Real x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return Json::parse(format_real(x));
}

Json number(const std::optional<Real>& x) {
  return x ? number(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const CheckReport& r) {
  Json j;
  j["check_id"] = to_string(r.id);
  j["pass"] = r.pass;
  j["max_rel_residual"] = number(r.max_rel_residual);
  j["margin_min"] = number(r.margin_min);
  if (r.agrees_with_condition)
    j["agrees_with_condition"] = *r.agrees_with_condition;
  j["tolerance"] = number(r.tolerance);
  j["params"] = Json{{"p", number(r.p)},
                     {"q", number(r.q)},
                     {"d", r.d},
                     {"n", static_cast<long>(r.n)},
                     {"dt", number(r.dt_info)}};
  Json samples = Json::array();
  for (const CheckSample& s : r.samples)
    samples.push_back(Json{{"t", number(s.t)}, {"value", number(s.value)}});
  j["samples"] = samples;
  return j;
}

Json to_json(const EpiReport& r) {
  Json j;
  j["variant"] = to_string(r.variant);
  j["pass"] = r.pass;
  j["exploratory"] = r.exploratory;
  j["params"] = Json{{"p", number(r.p)},
                     {"q", number(r.q)},
                     {"d", r.d},
                     {"alpha", number(r.alpha)},
                     {"count", r.count}};
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["margin"] = number(r.margin);
  j["rel_margin"] = number(r.rel_margin);
  return j;
}

Json to_json(const FunctionalSnapshot& s, const Orders& o) {
  Json j;
  j["t"] = number(s.t);
  j["orders"] = Json{{"p", number(o.p)}, {"q", number(o.q)}, {"d", o.d}};
  j["mass"] = number(s.mass);
  j["M_p"] = number(s.m_p);
  j["E_p"] = number(s.e_p);
  j["R_p"] = number(s.r_p);
  j["T_p"] = number(s.t_p);
  j["S_pq"] = number(s.s_pq);
  j["N_pq"] = number(s.n_pq);
  j["P_p"] = number(s.p_p);
  j["B_p"] = number(s.b_p);
  j["N"] = number(s.n_shannon);
  j["I_p"] = number(s.i_p);
  j["J_p"] = number(s.j_p);
  j["Q_pq"] = number(s.q_pq);
  return j;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,mass,E_p,R_p,S_pq,N_pq,P_p,B_p,I_p,J_p,Q_pq,tau\n";
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const FunctionalSnapshot& s = traj.snapshots[k];
    os << format_real(s.t) << ',' << format_real(traj.raw_mass[k]) << ','
       << format_real(s.e_p) << ',' << format_real(s.r_p) << ','
       << format_real(s.s_pq) << ',' << format_real(s.n_pq) << ','
       << format_real(s.p_p) << ',' << format_real(s.b_p) << ','
       << format_real(s.i_p) << ',' << format_real(s.j_p) << ','
       << format_real(s.q_pq) << ',' << format_real(traj.reparam_tau[k])
       << '\n';
  }
}

void write_state_csv(std::ostream& os, const GridDensity& u) {
  os << "x,u\n";
  const ArrayX x = u.nodes();
  for (Index i = 0; i < u.size(); ++i)
    os << format_real(x(i)) << ',' << format_real(u.values()(i)) << '\n';
}

}  // namespace entropylab
