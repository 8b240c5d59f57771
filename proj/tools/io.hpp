#pragma once

#include <string>

#include "json.hpp"

#include "swapkit/hilbert.hpp"
#include "swapkit/multialgebra.hpp"
#include "swapkit/nmatrix.hpp"
#include "swapkit/swap.hpp"
#include "swapkit/verification.hpp"

namespace swapkit::io {

using json = nlohmann::ordered_json;

// How cells are printed. Blocks: "D" or "ND" for a whole block with more
// than one element, the label for a singleton, "{x,y}" otherwise. Sets: always
// "{x,y}". Elements: the label, for structures whose cells are all singletons.
enum class TableStyle { Blocks, Sets, Elements };

// Blocks for the triple-encoded logics, Elements when every cell is a
// singleton, Sets otherwise.
TableStyle table_style(const SwapStructure& b);
std::string cell_text(const SwapStructure& b, const Cell& c, TableStyle style);
std::string set_text(const MultiAlg& m, const Cell& c);

// Carrier, designated block and one grid per connective.
std::string render_tables(const SwapStructure& b);
// Grids with explicit sets, for multialgebras without a designation.
std::string render_tables(const MultiAlg& m);

// {"signature": [{"name", "arity"}], "carrier": [labels],
//  "ops": {name: {"arity": n, "table": {"i,j": [indices]}}}}
json multialgebra_json(const MultiAlg& m);
// Reads multialgebra_json back, or any object carrying its keys.
MultiAlg multialgebra_from_json(const json& j);

// {"logic", "atoms", "designated", "snapshots", "tables"} followed by the
// multialgebra keys. "tables" holds the printed cells, indexed [x] for unary
// and [x][y] for binary connectives.
json tables_json(const SwapStructure& b);

// {"holds": bool, "countermodel": {formula: label}}; the countermodel only
// when the consequence fails.
json verdict_json(const Verdict& v, const MultiAlg& m);
// Reads a verdict back; countermodel formulas are reparsed and labels looked
// up in m.
Verdict verdict_from_json(const json& j, const MultiAlg& m);

json proof_check_json(const ProofCheck& c);
std::string render_proof_check(const ProofCheck& c);

json report_json(const SuiteReport& r);
std::string render_report(const SuiteReport& r);

}  // namespace swapkit::io
