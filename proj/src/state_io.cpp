#include "fragile/state_io.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "fragile/errors.hpp"

namespace fragile {

nlohmann::json state_to_json(const StateVector& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (BasisIndex i = 0; i < static_cast<BasisIndex>(s.dim()); ++i) {
    const auto a = s[i];
    if (a == std::complex<double>(0.0)) continue;
    amps.push_back({{"bits", format_pattern(i, s.n_particles())}, {"re", a.real()}, {"im", a.imag()}});
  }
  return {{"n", s.n_particles()}, {"amps", std::move(amps)}};
}

LoadedState state_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amps"))
      throw MalformedState("state: expected an object with \"n\" and \"amps\"");
    const int n = doc.at("n").get<int>();
    if (n < 1 || n > kMaxStateParticles)
      throw DimensionCapExceeded("state: N must lie in [1, " +
                                 std::to_string(kMaxStateParticles) + "]");
    const auto& amps = doc.at("amps");
    if (!amps.is_array()) throw MalformedState("state: \"amps\" must be an array");

    StateVector::Vector v = StateVector::Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
    std::set<BasisIndex> seen;
    for (const auto& entry : amps) {
      const auto pattern = parse_pattern(entry.at("bits").get<std::string>());
      if (static_cast<int>(pattern.size()) != n)
        throw MalformedState("state: bit string length differs from n");
      const BasisIndex index = basis_index(pattern);
      if (!seen.insert(index).second) throw MalformedState("state: repeated basis label");
      const double re = entry.at("re").get<double>();
      const double im = entry.value("im", 0.0);
      v(static_cast<Eigen::Index>(index)) = {re, im};
    }
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw MalformedState("state: amplitudes are all zero or not finite");
    return {StateVector(n, std::move(v)), std::abs(norm - 1.0) > kProbabilityTolerance};
  } catch (const nlohmann::json::exception& e) {
    throw MalformedState(std::string("state: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const MalformedState*>(&e)) throw;
    throw MalformedState(e.what());
  }
}

void write_state(const std::filesystem::path& path, const StateVector& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << state_to_json(s).dump(2) << '\n';
}

LoadedState read_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedState("cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedState("state file " + path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

}  // namespace fragile
