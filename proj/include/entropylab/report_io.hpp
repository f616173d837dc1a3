#ifndef ENTROPYLAB_REPORT_IO_HPP
#define ENTROPYLAB_REPORT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "entropylab/checks.hpp"
#include "entropylab/epi.hpp"
#include "entropylab/flows.hpp"

// Deterministic artifact serialization: no timestamps, insertion-ordered
// JSON keys, shortest round-trip decimal formatting. Identical inputs
// produce byte-identical files.
namespace entropylab {

using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to exactly x ("" for absent).
std::string format_real(Real x);
std::string format_real(const std::optional<Real>& x);

Json to_json(const CheckReport& r);
Json to_json(const EpiReport& r);
Json to_json(const FunctionalSnapshot& s, const Orders& o);

// Trajectory CSV: one row per snapshot,
// t,mass,E_p,R_p,S_pq,N_pq,P_p,B_p,I_p,J_p,Q_pq,tau
// mass is the solver-grid mass before snapshot renormalization; undefined
// functionals print as empty cells.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Final state as x,u rows.
void write_state_csv(std::ostream& os, const GridDensity& u);

}  // namespace entropylab

#endif  // ENTROPYLAB_REPORT_IO_HPP
