#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "prym/gmodule.hpp"
#include "prym/lattice.hpp"

namespace prym {

// Structured-text schemas (see README for the grammar):
//   matrix   {"rows": r, "cols": c, "entries": [[...], ...]}
//   gmodule  {"rank": n, "sigma": [[...], ...]}
//   lattice  {"gram": [[...]], "sigma": [[...]],
//             "sublattices": {"M": [[v1], [v2], ...], ...}}
// Sublattice values list basis vectors (rows in the file, columns in
// memory). Integers outside the 64-bit window are written as decimal
// strings; both forms are accepted on input.

nlohmann::ordered_json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::ordered_json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const nlohmann::json& j);

// bare 2D array of entries (used for sigma/gram fields and sublattices)
nlohmann::ordered_json grid_to_json(const IntMat& m);
IntMat grid_from_json(const nlohmann::json& j);

nlohmann::ordered_json gmodule_to_json(const FreeGModule& m);
FreeGModule gmodule_from_json(const nlohmann::json& j);

struct LatticeFile {
    InvolutionLattice lattice;
    std::map<std::string, IntMat> sublattices; // bases as columns
};

nlohmann::ordered_json lattice_file_to_json(const LatticeFile& f);
LatticeFile lattice_file_from_json(const nlohmann::json& j);

// reads a whole stream / file ("-" means stdin)
std::string slurp(const std::string& path);
nlohmann::json parse_json_input(const std::string& path);

} // namespace prym
