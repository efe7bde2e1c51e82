#pragma once

// JSON files for polynomials, tuples, factor sets, certificates and circle
// reports. Coefficients use the FieldElement text form, so exact data
// round-trips bit for bit. Keys are emitted sorted.

#include <string>

#include "pythsix/solver.hpp"
#include "pythsix/surface.hpp"

namespace pythsix {

struct FactorSet {
  QPoly A, B, C;
  RPoly D;
};

/// {"degu":m,"degv":n,"coeffs":[{"i":i,"j":j,"q":["w","x","y","z"]}]}
std::string qpoly_to_json(const QPoly& q);
QPoly qpoly_from_json(const std::string& text);
/// Real polynomials share the schema; imaginary parts must be zero.
std::string rpoly_to_json(const RPoly& r);
RPoly rpoly_from_json(const std::string& text);

/// {"tuple":[X1, ..., X6]}
std::string tuple_to_json(const PythTuple& x);
PythTuple tuple_from_json(const std::string& text);

/// {"A":..,"B":..,"C":..,"D":..}
std::string factors_to_json(const FactorSet& f);
FactorSet factors_from_json(const std::string& text);

/// {"A","B","C","D","backend","transforms":[{"kind":"shift","T":..}, {"kind":"swap"},
/// {"kind":"divide","mode":"all|qr|pq","D":..}, {"kind":"relabel"}]}
std::string certificate_to_json(const SolveCertificate& c);
SolveCertificate certificate_from_json(const std::string& text);

std::string report_to_json(const IsoCircleReport& r);

/// Throw IoError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pythsix
