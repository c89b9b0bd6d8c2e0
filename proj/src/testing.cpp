#include "glknot/testing.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace glknot {

TestReport test_statistics(const KnotSequence& ks) {
  const int M = ks.M();
  if (M < 2)
    throw dimension_error("need at least 2 knots to form a statistic, got " +
                          std::to_string(M));
  TestReport tr;
  tr.n = ks.n;
  tr.steps.reserve(static_cast<std::size_t>(M - 1));
  for (int k = 1; k < M; ++k) {
    const double rho_k = ks.knots[static_cast<std::size_t>(k - 1)].rho;
    const double rho_k1 = ks.knots[static_cast<std::size_t>(k)].rho;
    const double t = static_cast<double>(ks.n) * rho_k * (rho_k - rho_k1);
    tr.steps.push_back(TestStep{k, rho_k, rho_k1, t, std::exp(-t), std::nullopt});
  }
  return tr;
}

TestReport p_values(const TestReport& tr, std::optional<int> m) {
  TestReport out = tr;
  out.m = m;
  for (TestStep& s : out.steps) {
    s.p_conservative = std::exp(-s.t);
    s.p_exact_given_m = std::nullopt;
  }
  if (!m) return out;
  const int M = static_cast<int>(tr.steps.size()) + 1;
  if (*m < 0 || *m >= M)
    throw dimension_error("last-signal step m=" + std::to_string(*m) +
                          " must lie in [0, M) with M=" + std::to_string(M));
  for (TestStep& s : out.steps)
    if (s.k > *m) s.p_exact_given_m = std::exp(-static_cast<double>(s.k - *m) * s.t);
  return out;
}

std::optional<int> sequential_stop(const TestReport& tr, double alpha) {
  for (const TestStep& s : tr.steps)
    if (s.p_conservative > alpha) return s.k;
  return std::nullopt;
}

std::string report_to_csv(const TestReport& tr) {
  std::ostringstream os;
  os.precision(17);
  os << "k,rho_k,rho_k1,t,p_conservative,p_exact_given_m\n";
  for (const TestStep& s : tr.steps) {
    os << s.k << ',' << s.rho_k << ',' << s.rho_k1 << ',' << s.t << ','
       << s.p_conservative << ',';
    if (s.p_exact_given_m) os << *s.p_exact_given_m;
    os << '\n';
  }
  return os.str();
}

std::string report_to_json(const TestReport& tr) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TestStep& s : tr.steps) {
    nlohmann::json row = {{"k", s.k},
                          {"rho_k", s.rho_k},
                          {"rho_k1", s.rho_k1},
                          {"t", s.t},
                          {"p_conservative", s.p_conservative}};
    if (s.p_exact_given_m) row["p_exact_given_m"] = *s.p_exact_given_m;
    arr.push_back(row);
  }
  nlohmann::json out = {{"n", tr.n}, {"steps", arr}};
  if (tr.m) out["m"] = *tr.m;
  return out.dump(2);
}

}  // namespace glknot
