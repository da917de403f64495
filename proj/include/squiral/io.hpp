#pragma once

#include "squiral/block_map.hpp"
#include "squiral/eta_table.hpp"
#include "squiral/grid_function.hpp"
#include "squiral/lattice_patch.hpp"
#include "squiral/wiener.hpp"

#include <iosfwd>
#include <string>

namespace squiral {

// Text format: `dim <d>`, `size <K1> ... <Kd>`, `block`, then prod(K_i)
// tokens `+`/`-` in lexicographic order (last axis fastest). '#' starts a
// comment. Distinct diagnostics per malformation.
BlockMap parse_substitution(std::istream& in);

// "builtin:squiral" or a path to a substitution file.
BlockMap load_map(const std::string& source);

// Every emitted file starts with '#'-comment stamp lines so a run can be
// reproduced from its output alone.
void write_patch_csv(std::ostream& out, const LatticePatch& patch, const std::string& stamp);
// d <= 2 only; rows run along the first axis descending, columns along the
// last axis ascending; +1 -> 255, -1 -> 0.
void write_patch_pgm(std::ostream& out, const LatticePatch& patch, const std::string& stamp);

void write_eta_csv(std::ostream& out, const EtaTable& table, Int box, const std::string& stamp);
void write_eta_brute_csv(std::ostream& out, const LatticePatch& patch, Int box, Int window,
                         const std::string& stamp);

void write_grid_csv(std::ostream& out, const GridFunction& grid, const std::string& stamp);
// d == 2 grids; min-max scaled to 0..255. Returns "min max" scale line for
// the sidecar file.
std::string write_grid_pgm(std::ostream& out, const GridFunction& grid, const std::string& stamp);

void write_wiener_csv(std::ostream& out, const WienerReport& report, const std::string& stamp);

std::string format_double(double v); // shortest round-trip decimal form

} // namespace squiral
