#pragma once

// File formats:
//   state JSON  {"N": int, "terms": [{"occ": [[plet,color,count],...], "re": "p/q", "im": "p/q"}]}
//               float variant stores "re"/"im" as JSON numbers
//   basis JSON  {"N":..., "irrep":[...], "dim":..., "states":[state...]}
//   frame CSV   i,alpha,re,im  (one row per component of z[i])
// Terms are written in FockState order so identical objects serialize identically.

#include <charconv>
#include <complex>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "sunisb/coherent.hpp"
#include "sunisb/error.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/liealg.hpp"
#include "sunisb/manifold.hpp"

namespace sunisb {

using json = nlohmann::json;

namespace detail {

inline json occupation_json(const FockState& s) {
  json occ = json::array();
  const int N = s.rank();
  for (int plet = 1; plet < N; ++plet) {
    for (int color = 1; color <= N; ++color) {
      const int n = s.occupation({plet, color});
      if (n > 0) occ.push_back({plet, color, n});
    }
  }
  return occ;
}

inline FockState occupation_from_json(int N, const json& occ) {
  FockState s(N);
  for (const auto& entry : occ) {
    if (!entry.is_array() || entry.size() != 3) throw Error(ErrorCode::Parse, "occ entries are [plet,color,count]");
    const ModeIndex m{entry[0].get<int>(), entry[1].get<int>()};
    const int count = entry[2].get<int>();
    if (count < 0) throw Error(ErrorCode::Parse, "negative occupation");
    s.set_occupation(m, s.occupation(m) + count);
  }
  return s;
}

}  // namespace detail

inline json to_json(const ExactState& v) {
  json terms = json::array();
  for (const auto& [s, amp] : v) {
    terms.push_back({{"occ", detail::occupation_json(s)}, {"re", to_string(amp.re)}, {"im", to_string(amp.im)}});
  }
  return {{"N", v.rank()}, {"terms", terms}};
}

inline json to_json(const FloatState& v) {
  json terms = json::array();
  for (const auto& [s, amp] : v) {
    terms.push_back({{"occ", detail::occupation_json(s)}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return {{"N", v.rank()}, {"terms", terms}};
}

inline ExactState exact_state_from_json(const json& j) {
  try {
    ExactState v(j.at("N").get<int>());
    for (const auto& t : j.at("terms")) {
      v.add_term(detail::occupation_from_json(v.rank(), t.at("occ")),
                 ComplexRational(parse_rational(t.at("re").get<std::string>()),
                                 parse_rational(t.at("im").get<std::string>())));
    }
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline FloatState float_state_from_json(const json& j) {
  try {
    FloatState v(j.at("N").get<int>());
    for (const auto& t : j.at("terms")) {
      v.add_term(detail::occupation_from_json(v.rank(), t.at("occ")), {t.at("re").get<double>(), t.at("im").get<double>()});
    }
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json to_json(const IrrepBasis& b) {
  json states = json::array();
  for (const auto& s : b.states) states.push_back(to_json(s));
  return {{"N", b.irrep.rank()}, {"irrep", b.irrep.rows()}, {"dim", b.states.size()}, {"states", states}};
}

inline IrrepBasis basis_from_json(const json& j) {
  try {
    IrrepBasis b{IrrepLabel(j.at("N").get<int>(), j.at("irrep").get<std::vector<int>>()), {}, {}};
    for (const auto& s : j.at("states")) b.states.push_back(exact_state_from_json(s));
    if (j.at("dim").get<std::size_t>() != b.states.size()) throw Error(ErrorCode::Parse, "dim disagrees with states");
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"max_residual", r.max_residual}, {"pass", r.pass}, {"probes", r.probes}};
}

inline json to_json(const IdentityReport& r) {
  return {{"irrep", r.irrep.rows()},
          {"dim", r.dim},
          {"samples", r.samples},
          {"c", r.c},
          {"max_offdiag", r.max_offdiag},
          {"max_diag_dev", r.max_diag_dev},
          {"stderr", r.stderr_max},
          {"max_offdiag_z", r.max_offdiag_z},
          {"max_diag_z", r.max_diag_z},
          {"pass", r.pass},
          {"seed", r.seed}};
}

/// Shortest decimal that reads back to the same double.
inline std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline void write_frame_csv(std::ostream& os, const ManifoldPoint& p) {
  os << "i,alpha,re,im\n";
  for (int i = 1; i < p.N; ++i) {
    for (int alpha = 1; alpha <= p.N; ++alpha) {
      const std::complex<double> z = p.z[static_cast<std::size_t>(i - 1)](alpha - 1);
      os << i << ',' << alpha << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
  }
}

inline ManifoldPoint read_frame_csv(std::istream& is, int N) {
  if (N < 2) throw Error(ErrorCode::InvalidRank, "N must be >= 2");
  ManifoldPoint p{N, std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(N - 1), Eigen::VectorXcd::Zero(N))};
  std::vector<int> seen(static_cast<std::size_t>(N * (N - 1)), 0);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.rfind("i,", 0) == 0) continue;
    std::stringstream ss(line);
    std::string field[4];
    for (auto& f : field) {
      if (!std::getline(ss, f, ',')) throw Error(ErrorCode::Parse, "frame row needs 4 fields: " + line);
    }
    try {
      const int i = std::stoi(field[0]);
      const int alpha = std::stoi(field[1]);
      if (i < 1 || i > N - 1 || alpha < 1 || alpha > N) throw Error(ErrorCode::Parse, "frame index out of range");
      p.z[static_cast<std::size_t>(i - 1)](alpha - 1) = {std::stod(field[2]), std::stod(field[3])};
      ++seen[static_cast<std::size_t>((i - 1) * N + alpha - 1)];
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "bad number in frame row: " + line);
    }
  }
  for (int count : seen) {
    if (count != 1) throw Error(ErrorCode::Parse, "frame CSV must list every (i, alpha) exactly once");
  }
  if (p.defect() > kOrthonormalTolerance) throw Error(ErrorCode::NonOrthonormal, "frame is not orthonormal");
  return p;
}

/// Fock CSV: one row per occupied mode of each term, amplitudes repeated per row.
///   term,plet,color,count,re,im   (the vacuum term uses plet=color=count=0)
inline void write_state_csv(std::ostream& os, const FloatState& v) {
  os << "term,plet,color,count,re,im\n";
  int index = 0;
  for (const auto& [s, amp] : v) {
    const std::string tail = "," + format_double(amp.real()) + "," + format_double(amp.imag()) + "\n";
    bool any = false;
    for (int plet = 1; plet < v.rank(); ++plet) {
      for (int color = 1; color <= v.rank(); ++color) {
        const int n = s.occupation({plet, color});
        if (n == 0) continue;
        os << index << ',' << plet << ',' << color << ',' << n << tail;
        any = true;
      }
    }
    if (!any) os << index << ",0,0,0" << tail;
    ++index;
  }
}

}  // namespace sunisb
