#pragma once

#include <iosfwd>
#include <string>

#include "mct/circuit.hpp"
#include "mct/coloring.hpp"

namespace mct {

// "ecg v1": line 1 `ecg 1`, line 2 `<n> <k>`, then exactly n(n-1)/2 lines
// `<u> <v> <c>` with u < v in ascending (u, v) order.
EdgeColoring read_ecg(std::istream& in);
EdgeColoring read_ecg_file(const std::string& path);
void write_ecg(std::ostream& out, const EdgeColoring& c);
void write_ecg_file(const std::string& path, const EdgeColoring& c);

// "cert v1": line 1 `cert 1`, line 2 `<color> <length> <closed:0|1>`,
// line 3 the length+1 vertex ids.
Trail read_cert(std::istream& in);
Trail read_cert_file(const std::string& path);
void write_cert(std::ostream& out, const Trail& t);
void write_cert_file(const std::string& path, const Trail& t);

} // namespace mct
