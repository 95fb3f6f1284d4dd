#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "isomono/cubics.hpp"
#include "isomono/numerics.hpp"
#include "isomono/scalarform.hpp"

namespace isomono {

// Polynomials as term lists {"coeff": [num, den], "exps": {var: e}}; rational
// functions as {"num", "den": [{"factor", "mult"}], "display"}.
nlohmann::ordered_json to_json(const RP& p);
nlohmann::ordered_json to_json(const RF& f);
nlohmann::ordered_json to_json(cplx z);  // {"re": .., "im": ..}
nlohmann::ordered_json to_json(const CMat2& m);
nlohmann::ordered_json to_json(const MonodromyRun& run);
nlohmann::ordered_json to_json(const Trajectory& traj);
nlohmann::ordered_json to_json(const TableReport& rep);
nlohmann::ordered_json to_json(const CyclicCount& c);
nlohmann::ordered_json to_json(const FamilySpec& fam);

std::string_view ode_status_name(OdeStatus s);

// Columns t_re, t_im, q_re, q_im, p_re, p_im, H_re, H_im.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace isomono
